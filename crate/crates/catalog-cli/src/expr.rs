//! Constructor expressions for catalog lattices.
//!
//! Grammar, with ASCII whitespace allowed between tokens:
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := atom twist? repeat?
//! twist  := '(' int ')'          nonzero scale factor
//! repeat := '^' uint             direct-sum power, 1..=64
//! atom   := 'U' | 'V' | 'E6' | 'E8' | 'LK3'
//!         | 'A' uint             root lattice A_n, n >= 1
//!         | 'D' uint             root lattice D_n, n >= 2
//!         | '<' uint '>'         rank-1 lattice; <1> is the unit
//!                                lattice, otherwise the integer must
//!                                be even and positive
//! ```
//!
//! `U(3)+U+E8(-1)^2` is the direct sum of `U` scaled by 3, one copy of
//! `U`, and two copies of `E8` scaled by -1.  The total rank of an
//! expression is capped at [`MAX_EXPR_RANK`] so that a hostile input
//! cannot request an enormous matrix.

use lattice_core::{direct_sum, make_catalog, CatalogId, Lattice};

use crate::Error;

/// Largest total rank an expression may construct.
pub const MAX_EXPR_RANK: usize = 64;

/// Largest integer literal accepted anywhere in an expression.
const MAX_LITERAL: i64 = 1_000_000;

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Expr {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .s
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<(), Error> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    /// Unsigned decimal literal.
    fn parse_uint(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            self.pos += 1;
            value = value * 10 + i64::from(b - b'0');
            if value > MAX_LITERAL {
                return Err(Error::Expr {
                    pos: start,
                    msg: format!("integer literal exceeds {MAX_LITERAL}"),
                });
            }
        }
        if self.pos == start {
            Err(self.err("expected a number"))
        } else {
            Ok(value)
        }
    }

    /// Signed decimal literal (optional leading `-`).
    fn parse_int(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let v = self.parse_uint()?;
        Ok(if neg { -v } else { v })
    }
}

fn parse_atom(cur: &mut Cursor) -> Result<Lattice, Error> {
    let start = cur.pos;
    match cur.bump() {
        Some(b'U') => Ok(make_catalog(CatalogId::U, None)?),
        Some(b'V') => Ok(make_catalog(CatalogId::V, None)?),
        Some(b'E') => match cur.bump() {
            Some(b'6') => Ok(make_catalog(CatalogId::E6, None)?),
            Some(b'8') => Ok(make_catalog(CatalogId::E8, None)?),
            _ => Err(Error::Expr {
                pos: start,
                msg: "after `E` expected `6` or `8`".into(),
            }),
        },
        Some(b'L') => {
            if cur.eat(b'K') && cur.eat(b'3') {
                Ok(make_catalog(CatalogId::LK3, None)?)
            } else {
                Err(Error::Expr {
                    pos: start,
                    msg: "after `L` expected `K3`".into(),
                })
            }
        }
        Some(b'A') => {
            let n = cur.parse_uint()?;
            Ok(make_catalog(CatalogId::A, Some(n))?)
        }
        Some(b'D') => {
            let n = cur.parse_uint()?;
            Ok(make_catalog(CatalogId::D, Some(n))?)
        }
        Some(b'<') => {
            let k = cur.parse_uint()?;
            cur.expect(b'>', "`>` closing the rank-1 lattice")?;
            if k == 1 {
                Ok(make_catalog(CatalogId::One, None)?)
            } else if k >= 2 && k % 2 == 0 {
                Ok(make_catalog(CatalogId::TwoD, Some(k / 2))?)
            } else {
                Err(Error::Expr {
                    pos: start,
                    msg: format!("`<{k}>` is not available; use `<1>` or an even positive `<2d>`"),
                })
            }
        }
        Some(b) => Err(Error::Expr {
            pos: start,
            msg: format!("unexpected character `{}`", b as char),
        }),
        None => Err(Error::Expr {
            pos: start,
            msg: "expected a lattice name".into(),
        }),
    }
}

/// One term: atom, optional twist, optional repeat count.
fn parse_term(cur: &mut Cursor) -> Result<(Lattice, usize), Error> {
    let mut base = parse_atom(cur)?;
    cur.skip_ws();
    if cur.eat(b'(') {
        cur.skip_ws();
        let scale_pos = cur.pos;
        let n = cur.parse_int()?;
        cur.skip_ws();
        cur.expect(b')', "`)` closing the twist")?;
        if n == 0 {
            return Err(Error::Expr {
                pos: scale_pos,
                msg: "twist factor must be nonzero".into(),
            });
        }
        base = base.twist(n)?;
        cur.skip_ws();
    }
    let mut repeat = 1usize;
    if cur.eat(b'^') {
        cur.skip_ws();
        let count_pos = cur.pos;
        let m = cur.parse_uint()?;
        if m < 1 || m as usize > MAX_EXPR_RANK {
            return Err(Error::Expr {
                pos: count_pos,
                msg: format!("repeat count must be between 1 and {MAX_EXPR_RANK}"),
            });
        }
        repeat = m as usize;
    }
    Ok((base, repeat))
}

/// Parse a constructor expression into a lattice.
///
/// The result is labeled with the whitespace-stripped source text.
pub fn parse_expr(src: &str) -> Result<Lattice, Error> {
    let mut cur = Cursor::new(src);
    let mut parts: Vec<Lattice> = Vec::new();
    let mut total_rank = 0usize;
    loop {
        cur.skip_ws();
        let (base, repeat) = parse_term(&mut cur)?;
        total_rank += base.rank() * repeat;
        if total_rank > MAX_EXPR_RANK {
            return Err(cur.err(format!("total rank exceeds the cap of {MAX_EXPR_RANK}")));
        }
        for _ in 0..repeat {
            parts.push(base.clone());
        }
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        cur.expect(b'+', "`+` or end of expression")?;
    }
    let label: String = src.split_whitespace().collect();
    Ok(direct_sum(&parts)?.with_label(label))
}
