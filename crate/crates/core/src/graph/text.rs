//! Plain-text graph format.
//!
//! ```text
//! # optional comment lines
//! p <n> <m>
//! <u> <v>      (m lines, 0-based)
//! ```

use super::MultiGraph;
use crate::error::{Error, Result};

pub fn write(g: &MultiGraph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

pub fn parse(input: &str) -> Result<MultiGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in input.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "p" {
                    return Err(err("expected header `p <n> <m>`"));
                }
                let n = fields[1].parse().map_err(|_| err("bad vertex count"))?;
                let m = fields[2].parse().map_err(|_| err("bad edge count"))?;
                header = Some((n, m));
            }
            Some((_, m)) => {
                if fields.len() != 2 {
                    return Err(err("expected `<u> <v>`"));
                }
                if pairs.len() == m {
                    return Err(err("more edges than declared"));
                }
                let u = fields[0].parse().map_err(|_| err("bad endpoint"))?;
                let v = fields[1].parse().map_err(|_| err("bad endpoint"))?;
                pairs.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    if pairs.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("declared {m} edges, found {}", pairs.len()) });
    }
    MultiGraph::new(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_exact_bytes() {
        let g = MultiGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(write(&g), "p 3 3\n0 1\n1 2\n2 0\n");
    }

    #[test]
    fn parses_comments_and_rejects_garbage() {
        let g = parse("# c4\np 4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(matches!(parse("p 2 1\n0 0\n"), Err(Error::LoopEdge(0))));
        assert!(matches!(parse("p 2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("p 2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
