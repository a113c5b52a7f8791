//! Plain-text hypergraph files.
//!
//! ```text
//! # optional comments
//! d n
//! vertices: v_1 … v_n      (optional; defaults to 1..n)
//! a b …                    (one edge of d vertices per line)
//! ```

use std::str::FromStr;

use super::{Edge, Hypergraph, Vertex};
use crate::error::{Error, Result};

fn parse_ints<T: FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<T>().map_err(|_| Error::Parse { line, msg: format!("expected an integer, got `{tok}`") })
        })
        .collect()
}

impl Hypergraph {
    pub fn from_text(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) =
            lines.next().ok_or(Error::Parse { line: 1, msg: "missing `d n` header".into() })?;
        let header: Vec<usize> = parse_ints(hline, header)?;
        let [d, n] = header[..] else {
            return Err(Error::Parse { line: hline, msg: "header must be `d n`".into() });
        };

        let mut vertices: Vec<Vertex> = (1..=n as Vertex).collect();
        let mut edges: Vec<(usize, Edge)> = Vec::new();
        for (k, (line, content)) in lines.enumerate() {
            if let Some(rest) = content.strip_prefix("vertices:") {
                if k != 0 {
                    return Err(Error::Parse { line, msg: "`vertices:` must follow the header".into() });
                }
                vertices = parse_ints(line, rest)?;
                if vertices.len() != n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected {n} vertex labels, got {}", vertices.len()),
                    });
                }
                continue;
            }
            let edge: Edge = parse_ints(line, content)?;
            if edge.len() != d {
                return Err(Error::Parse { line, msg: format!("edge must have {d} vertices") });
            }
            edges.push((line, edge));
        }
        let first_line = edges.first().map_or(hline, |e| e.0);
        Hypergraph::new(d, vertices, edges.iter().map(|(_, e)| e)).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse { line: first_line, msg: other.to_string() },
        })
    }

    /// Serializes with sorted edges; `from_text(to_text(h)) == h`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.d(), self.n());
        if !self.is_standard_range() {
            out.push_str("vertices:");
            for v in self.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        for e in self.edges() {
            let parts: Vec<String> = e.iter().map(Vertex::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypergraph::from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_vertex_lists() {
        let h: Hypergraph = "# two edges\n2 3\nvertices: 2 5 9\n2 5  # first\n9 5\n".parse().unwrap();
        assert_eq!(h.vertices(), &[2, 5, 9]);
        assert_eq!(h.edges().cloned().collect::<Vec<_>>(), vec![vec![2, 5], vec![5, 9]]);
        assert_eq!(h.to_text(), "2 3\nvertices: 2 5 9\n2 5\n5 9\n");
    }

    #[test]
    fn sorted_files_round_trip_byte_for_byte() {
        let text = "2 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 5\n";
        assert_eq!(Hypergraph::from_text(text).unwrap().to_text(), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = Hypergraph::from_text("2 3\n1 2\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = Hypergraph::from_text("2 3\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(Hypergraph::from_text("").is_err());
        assert!(Hypergraph::from_text("2\n").is_err());
        assert!(Hypergraph::from_text("2 3\n1 7\n").is_err());
    }
}
