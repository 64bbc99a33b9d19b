//! Text format for base matrices: header `mb nb s`, then `mb` rows of `nb`
//! shift exponents with −1 marking a null block.

use super::BaseMatrix;
use crate::error::{Error, Result};

/// Parses a base-matrix document.
pub fn load_base_matrix(text: &str) -> Result<BaseMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(idx, l)| {
            let t = l.trim();
            if t.is_empty() {
                None
            } else {
                Some((idx + 1, t))
            }
        })
        .peekable();
    let mut last_line = 0usize;

    let (hln, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line: hln,
                message: format!("bad header value {:?}", tok),
            })
        })
        .collect::<Result<_>>()?;
    if head.len() != 3 {
        return Err(Error::Parse {
            line: hln,
            message: format!("expected header \"mb nb s\", got {} values", head.len()),
        });
    }
    let (mb, nb, s) = (head[0], head[1], head[2]);
    last_line = last_line.max(hln);

    let mut entries = Vec::with_capacity(mb);
    for _ in 0..mb {
        let (ln, line) = lines.next().ok_or(Error::Parse {
            line: last_line + 1,
            message: "unexpected end of file".into(),
        })?;
        last_line = ln;
        let row: Vec<i32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>().map_err(|_| Error::Parse {
                    line: ln,
                    message: format!("bad entry {:?}", tok),
                })
            })
            .collect::<Result<_>>()?;
        if row.len() != nb {
            return Err(Error::Parse {
                line: ln,
                message: format!("expected {} entries, got {}", nb, row.len()),
            });
        }
        if let Some(&e) = row.iter().find(|&&e| e < -1 || e >= s as i32) {
            return Err(Error::Format(format!(
                "entry {} at line {} out of range [-1, {})",
                e, ln, s
            )));
        }
        entries.push(row);
    }

    BaseMatrix::new(mb, nb, s, entries)
}

/// Serializes a base matrix (canonical: single spaces, trailing newline).
pub fn save_base_matrix(b: &BaseMatrix) -> String {
    let mut out = format!("{} {} {}\n", b.base_rows(), b.base_cols(), b.lift());
    for row in b.entries() {
        let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
