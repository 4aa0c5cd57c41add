//! Plain-text graph and matrix formats.
//!
//! Graph: a header `n m`, then `m` lines `u v` with `1 <= u < v <= n`.
//! Matrix: a header `r c`, then `r` lines of `c` characters from `{0,1}`.
//! In both, lines starting with `#` and blank lines are skipped.

use std::collections::HashSet;
use std::str::FromStr;

use super::{BinaryMatrix, Graph};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("{what} is not a non-negative integer: {tok:?}"),
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
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut lines = content_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        if n == 0 {
            return Err(Error::Parse {
                line: hline,
                msg: "graph needs n >= 1".into(),
            });
        }
        let mut g = Graph::empty(n);
        let mut seen = HashSet::new();
        let mut last_line = hline;
        for (line, l) in lines {
            last_line = line;
            let (u, v) = parse_pair(line, l)?;
            if seen.len() == m {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than the declared {m} edges"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    msg: format!("self-loop at node {u}"),
                });
            }
            if !(1 <= u && u < v && v <= n) {
                return Err(Error::Parse {
                    line,
                    msg: format!("edge `{u} {v}` must satisfy 1 <= u < v <= {n}"),
                });
            }
            if !seen.insert((u, v)) {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate edge `{u} {v}`"),
                });
            }
            g.add_edge(u - 1, v - 1);
        }
        if seen.len() != m {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("declared {m} edges, found {}", seen.len()),
            });
        }
        Ok(g)
    }
}

impl Graph {
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<BinaryMatrix> {
        let mut lines = content_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header `r c`".into(),
        })?;
        let (r, c) = parse_pair(hline, header)?;
        let mut m = BinaryMatrix::zeros(r, c);
        let mut count = 0;
        let mut last_line = hline;
        for (line, l) in lines {
            last_line = line;
            if count == r {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than the declared {r} rows"),
                });
            }
            if l.chars().count() != c {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {c} entries, found {}", l.chars().count()),
                });
            }
            for (j, ch) in l.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(count, j, true),
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("unexpected character {other:?}"),
                        })
                    }
                }
            }
            count += 1;
        }
        if count != r {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("declared {r} rows, found {count}"),
            });
        }
        Ok(m)
    }
}

impl BinaryMatrix {
    pub fn to_text(&self) -> String {
        format!("{} {}\n{}", self.n_rows(), self.n_cols(), self)
    }
}
