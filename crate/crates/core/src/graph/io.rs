//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v
//! ...
//! ```
//!
//! Vertices are 0-based. Repeated and reversed edges are merged; blank lines
//! and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};
use std::path::Path;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let tok = it.next().ok_or_else(|| Error::Parse {
                line,
                msg: format!("missing {what}"),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("'{tok}' is not a nonnegative integer"),
            })
        };
        let a = next("first field")?;
        let b = next("second field")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line,
                msg: "expected exactly two fields".into(),
            });
        }
        Ok((a, b))
    };

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input, expected header 'n m'".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse {
            line,
            msg: format!("header announces {m} edges but {count} were given"),
        });
    }
    Ok(g)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
