//! Line-oriented file formats for lattices and isometries.
//!
//! A lattice file holds one named Gram matrix:
//!
//! ```text
//! # any number of comment or blank lines, anywhere
//! lattice A2
//! rank 2
//! 2 -1
//! -1 2
//! ```
//!
//! An isometry file is identical except the header keyword is
//! `isometry` and the matrix need not be symmetric.  Everything after a
//! `#` on a line is a comment.  Tokens are separated by ASCII
//! whitespace; the canonical form emitted by [`render_lattice_file`]
//! uses single spaces and LF line ends.  All diagnostics carry 1-based
//! physical line numbers.

use std::path::Path;

use lattice_core::{IntMat, Lattice};
use num_bigint::BigInt;

use crate::{Error, LineError};

/// Largest rank a file may declare, matching the expression cap.
pub const MAX_FILE_RANK: usize = 64;

/// Names must be printable and fit on the header line.
fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name.len() <= 64
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '<' | '>' | '+'))
}

/// Iterator over meaningful lines: strips comments, skips blanks,
/// yields `(line_number, tokens)`.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            None
        } else {
            Some((idx + 1, tokens))
        }
    })
}

/// Shared structure of both file kinds: header, rank, matrix rows.
fn parse_matrix_file(
    text: &str,
    keyword: &str,
    symmetric: bool,
) -> Result<(String, IntMat), LineError> {
    let mut lines = meaningful_lines(text);

    let (hline, htokens) = lines
        .next()
        .ok_or_else(|| LineError::new(1, format!("missing `{keyword} <name>` header")))?;
    if htokens[0] != keyword {
        return Err(LineError::new(
            hline,
            format!("expected `{keyword} <name>`, found `{}`", htokens[0]),
        ));
    }
    if htokens.len() != 2 {
        return Err(LineError::new(
            hline,
            format!("`{keyword}` header takes exactly one name"),
        ));
    }
    let name = htokens[1];
    if !valid_name(name) {
        return Err(LineError::new(
            hline,
            format!("invalid name `{name}`; use ASCII letters, digits, `_-.<>+`"),
        ));
    }

    let (rline, rtokens) = lines
        .next()
        .ok_or_else(|| LineError::new(hline, "missing `rank <r>` line"))?;
    if rtokens[0] != "rank" || rtokens.len() != 2 {
        return Err(LineError::new(rline, "expected `rank <r>`"));
    }
    let rank: usize = rtokens[1]
        .parse()
        .map_err(|_| LineError::new(rline, format!("invalid rank `{}`", rtokens[1])))?;
    if rank == 0 || rank > MAX_FILE_RANK {
        return Err(LineError::new(
            rline,
            format!("rank must be between 1 and {MAX_FILE_RANK}"),
        ));
    }

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(rank);
    let mut row_lines: Vec<usize> = Vec::with_capacity(rank);
    for i in 0..rank {
        let (mline, mtokens) = lines.next().ok_or_else(|| {
            LineError::new(rline, format!("matrix ends after {i} of {rank} rows"))
        })?;
        if mtokens.len() != rank {
            return Err(LineError::new(
                mline,
                format!(
                    "row {} has {} entries, expected {rank}",
                    i + 1,
                    mtokens.len()
                ),
            ));
        }
        let mut row: Vec<BigInt> = Vec::with_capacity(rank);
        for tok in &mtokens {
            let v: BigInt = tok
                .parse()
                .map_err(|_| LineError::new(mline, format!("invalid integer `{tok}`")))?;
            row.push(v);
        }
        if symmetric {
            // Symmetry is checked as soon as both entries exist, so the
            // diagnostic lands on the row that breaks it.
            for (j, prev) in rows.iter().enumerate() {
                if prev[i] != row[j] {
                    return Err(LineError::new(
                        mline,
                        format!(
                            "entry ({},{}) = {} does not match entry ({},{}) = {}",
                            i + 1,
                            j + 1,
                            row[j],
                            j + 1,
                            i + 1,
                            prev[i]
                        ),
                    ));
                }
            }
        }
        rows.push(row);
        row_lines.push(mline);
    }

    if let Some((extra, _)) = lines.next() {
        return Err(LineError::new(extra, "unexpected content after the matrix"));
    }

    let m = IntMat::from_fn(rank, rank, |i, j| rows[i][j].clone());
    Ok((name.to_string(), m))
}

/// Parse a lattice file; the Gram matrix must be symmetric and
/// nondegenerate.
pub fn parse_lattice_file(text: &str) -> Result<(String, Lattice), LineError> {
    let (name, gram) = parse_matrix_file(text, "lattice", true)?;
    let first_row_line = meaningful_lines(text)
        .nth(2)
        .map_or(1, |(line, _)| line);
    match Lattice::new(gram) {
        Ok(l) => Ok((name.clone(), l.with_label(name))),
        Err(e) => Err(LineError::new(first_row_line, e.to_string())),
    }
}

/// Parse an isometry file; any square integer matrix is accepted here,
/// and `verify_isometry` decides later whether it preserves a given
/// lattice.
pub fn parse_isometry_file(text: &str) -> Result<(String, IntMat), LineError> {
    parse_matrix_file(text, "isometry", false)
}

/// Read and parse a lattice file from disk.
pub fn load_lattice_file(path: &Path) -> Result<(String, Lattice), Error> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: shown.clone(),
        source,
    })?;
    parse_lattice_file(&text).map_err(|e| e.in_file(&shown))
}

/// Read and parse an isometry file from disk.
pub fn load_isometry_file(path: &Path) -> Result<(String, IntMat), Error> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: shown.clone(),
        source,
    })?;
    parse_isometry_file(&text).map_err(|e| e.in_file(&shown))
}

/// Canonical text form of a lattice: LF line ends, single spaces, no
/// comments.  `parse_lattice_file` inverts this exactly.
pub fn render_lattice_file(name: &str, l: &Lattice) -> String {
    let mut out = format!("lattice {name}\nrank {}\n", l.rank());
    for i in 0..l.rank() {
        let row: Vec<String> = (0..l.rank())
            .map(|j| l.gram()[(i, j)].to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
