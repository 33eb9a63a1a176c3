//! Equivalence of finite quadratic forms by backtracking search.
//!
//! Two discriminant forms are equivalent when a group isomorphism matches
//! both `q` and `b`. The search places an image for each invariant-factor
//! generator in turn: candidates must have the exact generator order and
//! the same `q`-value (isomorphisms preserve both), must pair correctly
//! under `b` with the images already placed, and a complete assignment is
//! accepted only if the images generate the whole group.
//!
//! Everything is preceded by a cheap necessary test: the multiset of
//! `(element order, q-value)` over the full group must agree. Groups above
//! the order bound are refused loudly; the search is otherwise exhaustive,
//! so `false` is a proof of inequivalence.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::disc::DiscriminantForm;
use crate::Error;

/// Default cap on the discriminant group order for equivalence search.
pub const DEFAULT_EQUIV_BOUND: u64 = 10_000;

/// Integer tables for one form: values scaled by a common denominator so
/// the inner loops stay in machine arithmetic.
struct FormTable {
    orders: Vec<u64>,
    /// `q(g_i) * scale`, reduced mod `2 * scale`.
    qnum: Vec<i128>,
    /// `b(g_i, g_j) * scale`, reduced mod `scale`.
    bnum: Vec<Vec<i128>>,
    scale: i128,
}

impl FormTable {
    fn new(f: &DiscriminantForm, scale: &BigInt) -> FormTable {
        let to_scaled = |v: &num_rational::BigRational, modulus: &BigInt| -> i128 {
            let scaled = v * scale;
            debug_assert!(scaled.is_integer());
            scaled
                .to_integer()
                .mod_floor(modulus)
                .to_i128()
                .expect("scaled form value fits i128")
        };
        let two_scale = BigInt::from(2) * scale;
        FormTable {
            orders: f
                .group()
                .invariant_factors()
                .iter()
                .map(|d| d.to_u64().expect("bounded group order fits u64"))
                .collect(),
            qnum: f.q_values().iter().map(|q| to_scaled(q, &two_scale)).collect(),
            bnum: f
                .b_matrix()
                .iter()
                .map(|row| row.iter().map(|b| to_scaled(b, scale)).collect())
                .collect(),
            scale: scale.to_i128().expect("scale fits i128"),
        }
    }

    fn q_of(&self, x: &[u64]) -> i128 {
        let m = 2 * self.scale;
        let mut acc: i128 = 0;
        for (i, &a) in x.iter().enumerate() {
            let a = a as i128;
            acc = (acc + a % m * (a % m) % m * self.qnum[i]) % m;
            for (j, &c) in x.iter().enumerate().skip(i + 1) {
                let c = c as i128;
                acc = (acc + 2 * a % m * c % m * self.bnum[i][j]) % m;
            }
        }
        acc.rem_euclid(m)
    }

    fn b_of(&self, x: &[u64], y: &[u64]) -> i128 {
        let m = self.scale;
        let mut acc: i128 = 0;
        for (i, &a) in x.iter().enumerate() {
            for (j, &c) in y.iter().enumerate() {
                acc = (acc + a as i128 % m * (c as i128 % m) % m * self.bnum[i][j]) % m;
            }
        }
        acc.rem_euclid(m)
    }

    fn order_of(&self, x: &[u64]) -> u64 {
        let mut ord = 1u64;
        for (&a, &d) in x.iter().zip(&self.orders) {
            ord = ord.lcm(&(d / a.gcd(&d)));
        }
        ord
    }
}

/// All coordinate tuples over the given orders, last coordinate fastest.
fn all_elements(orders: &[u64]) -> Vec<Vec<u64>> {
    let total: u64 = orders.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0u64; orders.len()];
    loop {
        out.push(cur.clone());
        let mut i = orders.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < orders[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn add_mod(x: &[u64], y: &[u64], orders: &[u64]) -> Vec<u64> {
    x.iter()
        .zip(y)
        .zip(orders)
        .map(|((a, b), d)| (a + b) % d)
        .collect()
}

/// Subgroup generated by the images covers the whole group.
fn generates_everything(images: &[&Vec<u64>], table: &FormTable) -> bool {
    let total: u64 = table.orders.iter().product();
    let zero = vec![0u64; table.orders.len()];
    let mut span: HashSet<Vec<u64>> = HashSet::new();
    span.insert(zero);
    for h in images {
        let ord = table.order_of(h);
        let mut next = HashSet::new();
        for s in &span {
            let mut acc = s.clone();
            for _ in 0..ord {
                next.insert(acc.clone());
                acc = add_mod(&acc, h, &table.orders);
            }
        }
        span = next;
        if span.len() as u64 == total {
            return true;
        }
    }
    span.len() as u64 == total
}

struct Search<'a> {
    a: &'a FormTable,
    b: &'a FormTable,
    elements: &'a [Vec<u64>],
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.candidates.len() {
            let images: Vec<&Vec<u64>> =
                self.images.iter().map(|&i| &self.elements[i]).collect();
            return generates_everything(&images, self.b);
        }
        let unit_bs: Vec<i128> = (0..depth).map(|j| self.a.bnum[depth][j]).collect();
        for idx in self.candidates[depth].clone() {
            let cand = &self.elements[idx];
            let ok = self.images.iter().enumerate().all(|(j, &pj)| {
                self.b.b_of(cand, &self.elements[pj]) == unit_bs[j]
            });
            if !ok {
                continue;
            }
            self.images.push(idx);
            if self.run(depth + 1) {
                return true;
            }
            self.images.pop();
        }
        false
    }
}

/// Equivalence with the default group-order bound.
pub fn disc_forms_equivalent(a: &DiscriminantForm, b: &DiscriminantForm) -> Result<bool, Error> {
    disc_forms_equivalent_with_bound(a, b, DEFAULT_EQUIV_BOUND)
}

/// Equivalence with an explicit group-order bound; orders above the bound
/// are an error, never a silent `false`.
pub fn disc_forms_equivalent_with_bound(
    a: &DiscriminantForm,
    b: &DiscriminantForm,
    bound: u64,
) -> Result<bool, Error> {
    if a.group() != b.group() {
        return Ok(false);
    }
    let order = a.group().order();
    if order > BigInt::from(bound) {
        return Err(Error::BoundExceeded { order, bound });
    }
    if a.group().is_trivial() {
        return Ok(true);
    }

    // Common denominator for both forms' q and b values.
    let mut scale = BigInt::one();
    for f in [a, b] {
        for q in f.q_values() {
            scale = scale.lcm(q.denom());
        }
        for row in f.b_matrix() {
            for v in row {
                scale = scale.lcm(v.denom());
            }
        }
    }
    let ta = FormTable::new(a, &scale);
    let tb = FormTable::new(b, &scale);

    let elems_a = all_elements(&ta.orders);
    let elems_b = all_elements(&tb.orders);

    // Necessary condition: (order, q) multisets agree.
    let profile = |t: &FormTable, elems: &[Vec<u64>]| -> Vec<(u64, i128)> {
        let mut v: Vec<(u64, i128)> = elems
            .iter()
            .map(|e| (t.order_of(e), t.q_of(e)))
            .collect();
        v.sort_unstable();
        v
    };
    if profile(&ta, &elems_a) != profile(&tb, &elems_b) {
        return Ok(false);
    }

    let k = ta.orders.len();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let mut unit = vec![0u64; k];
            unit[i] = 1;
            let want_q = ta.q_of(&unit);
            let want_ord = ta.orders[i];
            (0..elems_b.len())
                .filter(|&idx| {
                    tb.order_of(&elems_b[idx]) == want_ord && tb.q_of(&elems_b[idx]) == want_q
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(false);
    }

    let mut search = Search {
        a: &ta,
        b: &tb,
        elements: &elems_b,
        candidates,
        images: Vec::with_capacity(k),
    };
    Ok(search.run(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::discriminant_form;
    use lattice_core::{direct_sum, make_catalog, CatalogId, Lattice};

    fn a(n: i64) -> Lattice {
        make_catalog(CatalogId::A, Some(n)).unwrap()
    }

    fn corpus() -> Vec<DiscriminantForm> {
        let u = make_catalog(CatalogId::U, None).unwrap();
        let lattices = vec![
            a(1),
            a(1).twist(-1).unwrap(),
            a(2),
            a(2).twist(-1).unwrap(),
            a(3),
            u.twist(2).unwrap(),
            u.twist(3).unwrap(),
            make_catalog(CatalogId::TwoD, Some(2)).unwrap(),
            make_catalog(CatalogId::D, Some(4)).unwrap(),
            direct_sum(&[a(1), a(1)]).unwrap(),
        ];
        lattices
            .iter()
            .map(|l| discriminant_form(l).unwrap())
            .collect()
    }

    #[test]
    fn trivial_forms_equivalent() {
        let e8 = discriminant_form(&make_catalog(CatalogId::E8, None).unwrap()).unwrap();
        let u = discriminant_form(&make_catalog(CatalogId::U, None).unwrap()).unwrap();
        assert_eq!(disc_forms_equivalent(&e8, &u), Ok(true));
    }

    #[test]
    fn sign_twist_distinguished() {
        let q1 = discriminant_form(&a(1)).unwrap();
        let q2 = discriminant_form(&a(1).twist(-1).unwrap()).unwrap();
        assert_eq!(disc_forms_equivalent(&q1, &q2), Ok(false));
    }

    #[test]
    fn reflexive_and_symmetric_on_corpus() {
        let forms = corpus();
        for (i, f) in forms.iter().enumerate() {
            assert_eq!(disc_forms_equivalent(f, f), Ok(true), "form {i} not reflexive");
            for g in &forms {
                assert_eq!(
                    disc_forms_equivalent(f, g),
                    disc_forms_equivalent(g, f),
                    "asymmetry at form {i}"
                );
            }
        }
    }

    #[test]
    fn a3_matches_d3() {
        let a3 = discriminant_form(&a(3)).unwrap();
        let d3 = discriminant_form(&make_catalog(CatalogId::D, Some(3)).unwrap()).unwrap();
        assert_eq!(disc_forms_equivalent(&a3, &d3), Ok(true));
    }

    #[test]
    fn different_groups_unequal() {
        let q1 = discriminant_form(&a(1)).unwrap();
        let q2 = discriminant_form(&a(3)).unwrap();
        assert_eq!(disc_forms_equivalent(&q1, &q2), Ok(false));
    }

    #[test]
    fn bound_exceeded_is_loud() {
        let q = discriminant_form(&a(4)).unwrap();
        assert!(matches!(
            disc_forms_equivalent_with_bound(&q, &q, 3),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn negation_involution() {
        for f in corpus() {
            assert_eq!(
                disc_forms_equivalent(&f.negated().negated(), &f),
                Ok(true)
            );
        }
    }
}
