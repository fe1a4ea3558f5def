//! Plain-text QMAT matrix files.
//!
//! ```text
//! QMAT 1 <rows> <cols>
//! <rows lines of B0>
//!
//! <rows lines of B1>
//!
//! ...
//! ```
//!
//! Numbers are written with 17 significant digits so a read/write cycle is
//! exact.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::matrix::QuatMatrix;

#[derive(Debug, Error)]
pub enum QmatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("block B{block} is incomplete: expected {expected} rows, found {found}")]
    MissingBlock {
        block: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn to_string(m: &QuatMatrix) -> String {
    let (r, c) = m.shape();
    let mut s = format!("QMAT 1 {r} {c}\n");
    for (k, b) in m.blocks().iter().enumerate() {
        if k > 0 {
            s.push('\n');
        }
        for i in 0..r {
            for j in 0..c {
                if j > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{:.16e}", b[(i, j)]);
            }
            s.push('\n');
        }
    }
    s
}

pub fn write<W: Write>(mut w: W, m: &QuatMatrix) -> std::io::Result<()> {
    w.write_all(to_string(m).as_bytes())
}

pub fn save(path: impl AsRef<Path>, m: &QuatMatrix) -> std::io::Result<()> {
    std::fs::write(path, to_string(m))
}

pub fn load(path: impl AsRef<Path>) -> Result<QuatMatrix, QmatError> {
    let f = std::fs::File::open(path)?;
    read(std::io::BufReader::new(f))
}

pub fn from_str(s: &str) -> Result<QuatMatrix, QmatError> {
    read(s.as_bytes())
}

pub fn read<R: BufRead>(r: R) -> Result<QuatMatrix, QmatError> {
    let mut lines = r.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (hline, header) = loop {
        match lines.next() {
            Some((n, l)) => {
                let l = l?;
                if !l.trim().is_empty() {
                    break (n, l);
                }
            }
            None => {
                return Err(QmatError::Parse {
                    line: 1,
                    msg: "empty input, expected QMAT header".into(),
                })
            }
        }
    };
    let (rows, cols) = parse_header(&header).map_err(|msg| QmatError::Parse { line: hline, msg })?;

    let mut blocks: Vec<DMatrix<f64>> = Vec::with_capacity(4);
    let mut cur = DMatrix::zeros(rows, cols);
    let mut filled = 0usize;
    for (n, l) in lines {
        let l = l?;
        let t = l.trim();
        if t.is_empty() {
            continue;
        }
        if blocks.len() == 4 {
            return Err(QmatError::Parse {
                line: n,
                msg: "unexpected data after block B3".into(),
            });
        }
        let mut count = 0;
        for (j, tok) in t.split_whitespace().enumerate() {
            if j >= cols {
                return Err(QmatError::Parse {
                    line: n,
                    msg: format!("expected {cols} values, found more"),
                });
            }
            cur[(filled, j)] = tok.parse::<f64>().map_err(|_| QmatError::Parse {
                line: n,
                msg: format!("invalid number {tok:?}"),
            })?;
            count += 1;
        }
        if count != cols {
            return Err(QmatError::Parse {
                line: n,
                msg: format!("expected {cols} values, found {count}"),
            });
        }
        filled += 1;
        if filled == rows {
            blocks.push(std::mem::replace(&mut cur, DMatrix::zeros(rows, cols)));
            filled = 0;
        }
    }
    // Zero-sized matrices have no data lines at all.
    if rows == 0 || cols == 0 {
        return Ok(QuatMatrix::zeros(rows, cols));
    }
    if blocks.len() < 4 {
        return Err(QmatError::MissingBlock {
            block: blocks.len(),
            expected: rows,
            found: filled,
        });
    }
    let [b0, b1, b2, b3]: [DMatrix<f64>; 4] = blocks.try_into().expect("four blocks");
    Ok(QuatMatrix::from_blocks([b0, b1, b2, b3]).expect("blocks share a shape"))
}

fn parse_header(l: &str) -> Result<(usize, usize), String> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    match toks.as_slice() {
        ["QMAT", "1", r, c] => {
            let r = r.parse().map_err(|_| format!("invalid row count {r:?}"))?;
            let c = c.parse().map_err(|_| format!("invalid column count {c:?}"))?;
            Ok((r, c))
        }
        ["QMAT", v, ..] if *v != "1" => Err(format!("unsupported QMAT version {v}")),
        _ => Err("expected header `QMAT 1 <rows> <cols>`".into()),
    }
}
