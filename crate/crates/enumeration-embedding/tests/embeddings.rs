//! Structural properties of primitive embeddings: complement duality in
//! unimodular ambients, double complements, and divisibility of the degree
//! gcd across saturated sublattices.

use enumeration_embedding::{
    d_value, find_primitive_embedding, isometric_definite, orthogonal_complement,
    verify_primitive_embedding, EmbeddingMap, Error, SearchBox,
};
use lattice_core::{direct_sum, make_catalog, scramble::SplitMix64, CatalogId, IntMat, Lattice};
use normal_forms::{disc_forms_equivalent, discriminant_form, same_column_span, saturate_columns};
use num_bigint::BigInt;
use num_traits::Signed;

fn u() -> Lattice {
    make_catalog(CatalogId::U, None).unwrap()
}

fn a(n: i64) -> Lattice {
    make_catalog(CatalogId::A, Some(n)).unwrap()
}

fn even_unimodular_ambients() -> Vec<Lattice> {
    let e8 = make_catalog(CatalogId::E8, None).unwrap();
    vec![
        direct_sum(&[u(), u()]).unwrap(),
        direct_sum(&[u(), u(), u()]).unwrap(),
        e8.clone(),
        direct_sum(&[u(), e8.twist(-1).unwrap()]).unwrap(),
    ]
}

fn small_sources() -> Vec<Lattice> {
    vec![
        a(1),
        a(2),
        a(1).twist(-1).unwrap(),
        make_catalog(CatalogId::TwoD, Some(2)).unwrap(),
        u(),
        u().twist(2).unwrap(),
    ]
}

/// In an even unimodular ambient the discriminant group of the complement
/// matches that of the source and its quadratic form is the negation.
#[test]
fn complement_duality_in_unimodular_ambients() {
    let mut pairs_checked = 0usize;
    for ambient in even_unimodular_ambients() {
        assert_eq!(ambient.delta(), BigInt::from(1), "ambient must be unimodular");
        for source in small_sources() {
            if source.rank() >= ambient.rank() {
                continue;
            }
            let found = find_primitive_embedding(&source, &ambient, SearchBox::default()).unwrap();
            let e = match found {
                None => continue,
                Some(e) => e,
            };
            assert!(verify_primitive_embedding(&e));
            let (comp, _) = orthogonal_complement(&e).unwrap();
            let f_source = discriminant_form(&source).unwrap();
            let f_comp = discriminant_form(&comp).unwrap();
            assert_eq!(
                f_source.group(),
                f_comp.group(),
                "groups must agree: {:?} in {:?}",
                source.label(),
                ambient.label()
            );
            assert!(
                disc_forms_equivalent(&f_comp, &f_source.negated()).unwrap(),
                "form must negate: {:?} in {:?}",
                source.label(),
                ambient.label()
            );
            pairs_checked += 1;
        }
    }
    assert!(pairs_checked >= 8, "only {pairs_checked} pairs were exercised");
}

#[test]
fn double_complement_returns_the_saturated_span() {
    for ambient in even_unimodular_ambients() {
        for source in small_sources() {
            if source.rank() >= ambient.rank() {
                continue;
            }
            let e = match find_primitive_embedding(&source, &ambient, SearchBox::default()).unwrap()
            {
                None => continue,
                Some(e) => e,
            };
            let (comp, basis) = orthogonal_complement(&e).unwrap();
            let back = EmbeddingMap::new(comp, ambient.clone(), basis).unwrap();
            let (_, basis2) = orthogonal_complement(&back).unwrap();
            let sat = saturate_columns(e.matrix());
            assert!(same_column_span(&basis2, &sat));
        }
    }
}

/// Degrees realized by a saturated sublattice are realized by the ambient,
/// so the ambient gcd divides the sublattice gcd.
#[test]
fn degree_gcd_divides_into_saturated_sublattices() {
    let ambients = vec![
        make_catalog(CatalogId::LK3, None).unwrap(),
        direct_sum(&[u().twist(2).unwrap(), u().twist(2).unwrap()]).unwrap(),
        direct_sum(&[u().twist(3).unwrap(), a(2).twist(-1).unwrap()]).unwrap(),
        make_catalog(CatalogId::E8, None).unwrap(),
    ];
    let mut rng = SplitMix64::new(0xd1f5);
    let mut checked = 0usize;
    for l in &ambients {
        let dl = match d_value(l, SearchBox::default()) {
            Ok(d) => d,
            Err(Error::EmptyDegreeSet) => continue,
            Err(e) => panic!("unexpected: {e}"),
        };
        if !dl.is_exact() && !dl.stabilized {
            continue;
        }
        for _ in 0..12 {
            let size = 1 + rng.below(4) as usize;
            let mut idx: Vec<usize> = Vec::new();
            while idx.len() < size {
                let i = rng.below(l.rank() as u64) as usize;
                if !idx.contains(&i) {
                    idx.push(i);
                }
            }
            idx.sort_unstable();
            // Coordinate sublattices of a basis are automatically saturated.
            let gram = l.gram().submatrix(&idx, &idx);
            let m = match Lattice::new(gram) {
                Ok(m) => m,
                Err(_) => continue, // degenerate pick
            };
            let dm = match d_value(&m, SearchBox::default()) {
                Ok(d) => d,
                Err(Error::EmptyDegreeSet) => continue,
                Err(Error::BudgetExceeded { .. }) => continue,
                Err(e) => panic!("unexpected: {e}"),
            };
            if !dm.is_exact() && !dm.stabilized {
                continue;
            }
            assert!(
                (&dm.gcd % &dl.gcd) == BigInt::from(0),
                "{} does not divide {} (ambient {:?}, subset {idx:?})",
                dl.gcd,
                dm.gcd,
                l.label()
            );
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} subsets were exercised");
}

/// Any embedding the search returns must itself verify, and embedding a
/// lattice into itself must succeed for small definite lattices.
#[test]
fn found_embeddings_always_verify() {
    let targets = vec![a(3), make_catalog(CatalogId::D, Some(4)).unwrap(), a(2)];
    let sources = vec![a(1), a(2), make_catalog(CatalogId::TwoD, Some(3)).unwrap()];
    for target in &targets {
        for source in &sources {
            if source.rank() > target.rank() {
                continue;
            }
            if let Some(e) =
                find_primitive_embedding(source, target, SearchBox::default()).unwrap()
            {
                assert!(verify_primitive_embedding(&e));
            }
        }
    }
    for l in &targets {
        let e = find_primitive_embedding(l, l, SearchBox::default())
            .unwrap()
            .expect("a lattice embeds into itself");
        // A full-rank primitive embedding is an isometry.
        assert_eq!(e.matrix().determinant().abs(), BigInt::from(1));
    }
}

/// The self-complement example: U(3) inside U + U has complement U(3) again,
/// and the complement Gram is reached by an explicit basis.
#[test]
fn hyperbolic_twist_complement_example() {
    let u3 = u().twist(3).unwrap();
    let ambient = direct_sum(&[u(), u()]).unwrap();
    // Explicit primitive copy of U(3): e1 and 3 f1 + e2, verified by the
    // library rather than trusted.
    let cols = vec![
        vec![BigInt::from(1), BigInt::from(0), BigInt::from(0), BigInt::from(0)],
        vec![BigInt::from(0), BigInt::from(3), BigInt::from(1), BigInt::from(0)],
    ];
    let e = EmbeddingMap::new(u3.clone(), ambient.clone(), IntMat::from_cols(&cols)).unwrap();
    assert!(verify_primitive_embedding(&e));
    let (comp, _) = orthogonal_complement(&e).unwrap();
    assert_eq!(comp.rank(), 2);
    assert_eq!(comp.delta(), BigInt::from(9));
    assert!(enumeration_embedding::invariants_match(&comp, &u3).unwrap());
}

/// Isometric lattices produced by scrambling remain isometric, and the
/// returned transforms are exact witnesses.
#[test]
fn definite_isometry_on_scrambles() {
    use lattice_core::scramble::random_unimodular;
    let lattices = vec![a(4), make_catalog(CatalogId::D, Some(5)).unwrap()];
    for l in &lattices {
        for seed in [1u64, 2, 3] {
            let tmat = random_unimodular(l.rank(), 10, seed);
            let g = tmat.transpose().mul(l.gram()).mul(&tmat);
            let scr = Lattice::new(g).unwrap();
            let w = isometric_definite(l, &scr).unwrap().expect("scramble is isometric");
            assert_eq!(w.transpose().mul(scr.gram()).mul(&w), *l.gram());
        }
    }
}
