//! Hypergraph files.
//!
//! Text form:
//!
//! ```text
//! n=4 r=2
//! 0 1
//! 0 1
//! 2 3
//! 2 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. A JSON object with fields
//! `n`, `r` and `edges` is accepted in place of the text form.

use std::path::Path;

use super::Hypergraph;
use crate::error::{Error, Result};

pub fn read_hypergraph(path: impl AsRef<Path>) -> Result<Hypergraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_hypergraph(&text)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        });
    }

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n=<int> r=<int>`".into(),
    })?;
    let (mut n, mut r) = (None, None);
    for tok in header.split_whitespace() {
        let (key, val) = tok.split_once('=').ok_or_else(|| Error::Parse {
            line: hline,
            msg: format!("expected key=value in header, got `{tok}`"),
        })?;
        let val: usize = val.parse().map_err(|_| Error::Parse {
            line: hline,
            msg: format!("`{val}` is not a non-negative integer"),
        })?;
        match key {
            "n" => n = Some(val),
            "r" => r = Some(val),
            _ => {
                return Err(Error::Parse {
                    line: hline,
                    msg: format!("unknown header field `{key}`"),
                })
            }
        }
    }
    let (n, r) = match (n, r) {
        (Some(n), Some(r)) => (n, r),
        _ => {
            return Err(Error::Parse {
                line: hline,
                msg: "header must set both n and r".into(),
            })
        }
    };

    let mut edges = Vec::new();
    for (line, l) in lines {
        let edge = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{t}` is not a vertex index"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        edges.push(edge);
    }
    Hypergraph::new(n, r, edges)
}
