//! Alist text format for parity-check matrices (MacKay conventions).
//!
//! Layout: line 1 is `n m`, line 2 is `max_col_deg max_row_deg`, line 3 the
//! n column degrees, line 4 the m row degrees, then n column adjacency lines
//! and m row adjacency lines. Indices are 1-based and lines are zero-padded
//! to the maximum degree for irregular codes.

use super::SparseBinaryMatrix;
use crate::error::{Error, Result};

struct Lines<'a> {
    iter: std::str::Lines<'a>,
    lineno: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            iter: text.lines(),
            lineno: 0,
        }
    }

    /// Next non-empty line with its 1-based number.
    fn next(&mut self) -> Result<(usize, &'a str)> {
        loop {
            let line = self.iter.next().ok_or(Error::Parse {
                line: self.lineno + 1,
                message: "unexpected end of file".into(),
            })?;
            self.lineno += 1;
            if !line.trim().is_empty() {
                return Ok((self.lineno, line));
            }
        }
    }
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("expected a non-negative integer, got {:?}", tok),
            })
        })
        .collect()
}

fn parse_exactly(line: &str, lineno: usize, count: usize, what: &str) -> Result<Vec<usize>> {
    let vals = parse_ints(line, lineno)?;
    if vals.len() != count {
        return Err(Error::Parse {
            line: lineno,
            message: format!("expected {} {}, got {}", count, what, vals.len()),
        });
    }
    Ok(vals)
}

/// Reads one adjacency line: `degree` 1-based indices in `1..=limit`, padded
/// with zeros up to the maximum degree. Returns 0-based indices.
fn parse_adjacency(line: &str, lineno: usize, degree: usize, limit: usize) -> Result<Vec<usize>> {
    let vals = parse_ints(line, lineno)?;
    let mut out = Vec::with_capacity(degree);
    for (pos, &v) in vals.iter().enumerate() {
        if pos < degree {
            if v == 0 || v > limit {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("index {} out of range 1..={}", v, limit),
                });
            }
            out.push(v - 1);
        } else if v != 0 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected zero padding, got {}", v),
            });
        }
    }
    if out.len() != degree {
        return Err(Error::Parse {
            line: lineno,
            message: format!("expected {} indices, got {}", degree, out.len()),
        });
    }
    Ok(out)
}

/// Parses an alist document into a [`SparseBinaryMatrix`].
///
/// The column and row sections must describe the same edge set; any
/// disagreement is reported as a parse error with the offending line.
pub fn load_alist(text: &str) -> Result<SparseBinaryMatrix> {
    let mut lines = Lines::new(text);

    let (ln, l) = lines.next()?;
    let header = parse_exactly(l, ln, 2, "header values")?;
    let (n, m) = (header[0], header[1]);
    if n == 0 || m == 0 {
        return Err(Error::Parse {
            line: ln,
            message: "matrix dimensions must be positive".into(),
        });
    }

    let (ln, l) = lines.next()?;
    let maxdeg = parse_exactly(l, ln, 2, "maximum degrees")?;
    let (max_col, max_row) = (maxdeg[0], maxdeg[1]);

    let (ln, l) = lines.next()?;
    let col_deg = parse_exactly(l, ln, n, "column degrees")?;
    if let Some(d) = col_deg.iter().find(|&&d| d > max_col) {
        return Err(Error::Parse {
            line: ln,
            message: format!("column degree {} exceeds declared maximum {}", d, max_col),
        });
    }

    let (ln, l) = lines.next()?;
    let row_deg = parse_exactly(l, ln, m, "row degrees")?;
    if let Some(d) = row_deg.iter().find(|&&d| d > max_row) {
        return Err(Error::Parse {
            line: ln,
            message: format!("row degree {} exceeds declared maximum {}", d, max_row),
        });
    }

    let mut cols: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &deg in &col_deg {
        let (ln, l) = lines.next()?;
        let mut adj = parse_adjacency(l, ln, deg, m)?;
        adj.sort_unstable();
        cols.push(adj);
    }

    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut row_lines = Vec::with_capacity(m);
    for &deg in &row_deg {
        let (ln, l) = lines.next()?;
        let mut adj = parse_adjacency(l, ln, deg, n)?;
        adj.sort_unstable();
        row_lines.push(ln);
        rows.push(adj);
    }

    // Cross-check: the row section must be the transpose of the column section.
    let mut rows_from_cols: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (j, adj) in cols.iter().enumerate() {
        for &i in adj {
            rows_from_cols[i].push(j);
        }
    }
    for i in 0..m {
        if rows_from_cols[i] != rows[i] {
            return Err(Error::Parse {
                line: row_lines[i],
                message: format!("row {} adjacency disagrees with the column lists", i + 1),
            });
        }
    }

    SparseBinaryMatrix::from_rows(m, n, rows)
}

/// Serializes a matrix in alist form (canonical: single spaces, zero padding,
/// trailing newline).
pub fn save_alist(h: &SparseBinaryMatrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let col_w = h.col_weights();
    let row_w = h.row_weights();
    let max_col = col_w.iter().copied().max().unwrap_or(0);
    let max_row = row_w.iter().copied().max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&format!("{} {}\n", n, m));
    out.push_str(&format!("{} {}\n", max_col, max_row));
    push_list(&mut out, col_w.iter().copied());
    push_list(&mut out, row_w.iter().copied());
    // Pad with at least one zero so degree-0 lines stay visible to parsers
    // that skip blank lines.
    for j in 0..n {
        let padded = h
            .col(j)
            .iter()
            .map(|&i| i + 1)
            .chain(std::iter::repeat(0))
            .take(max_col.max(1));
        push_list(&mut out, padded);
    }
    for i in 0..m {
        let padded = h
            .row(i)
            .iter()
            .map(|&j| j + 1)
            .chain(std::iter::repeat(0))
            .take(max_row.max(1));
        push_list(&mut out, padded);
    }
    out
}

fn push_list(out: &mut String, vals: impl Iterator<Item = usize>) {
    let mut first = true;
    for v in vals {
        if !first {
            out.push(' ');
        }
        out.push_str(&v.to_string());
        first = false;
    }
    out.push('\n');
}
