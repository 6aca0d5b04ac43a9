//! Graph JSON (`{"n": 4, "edges": [[1, 2], ...]}`) and plain edge lists.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Wire form of a graph: 1-based vertices, edges sorted lexicographically on output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph JSON serializes")
    }

    /// Parses either graph JSON or an edge list with one `u v` pair per line. Blank
    /// lines and lines starting with `#` are skipped; an edge list has `n` equal to
    /// its largest label.
    pub fn parse(text: &str) -> Result<Graph> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let j: GraphJson =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            return Graph::try_from(j);
        }
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex {s:?}", lineno + 1)))
            };
            match fields.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected \"u v\"",
                        lineno + 1
                    )))
                }
            }
        }
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        Graph::from_edges(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_sorted_output() {
        let g = Graph::from_edges(3, [(3, 2), (2, 1)]).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        assert_eq!(Graph::parse(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn edge_list() {
        let g = Graph::parse("# c4\n1 2\n2 3\n\n3 4\n4 1\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert!(Graph::parse("1 2 3\n").is_err());
        assert!(Graph::parse("1 x\n").is_err());
        assert!(Graph::parse(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }
}
