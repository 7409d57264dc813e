//! The graph file format shared by all CLI commands:
//!
//! ```json
//! {"n": 3, "edges": [[0, 1], [0, 2], [1, 3]]}
//! ```
//!
//! Edges are `[base, dir]` pairs in canonical form (bit `dir - 1` of `base`
//! clear), strictly sorted by `(base, dir)`. Writing then reading a graph
//! reproduces it bit-exactly, and the writer's output is byte-stable.

use crate::cube::{coord_bit, CubeGraph, Dim, Edge};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

#[derive(thiserror::Error, Debug)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("dimension {n} out of range 1..={max}")]
    Dimension { n: u32, max: u32 },
    #[error("edge {index}: direction {dir} out of range 1..={n}")]
    DirOutOfRange { index: usize, dir: u64, n: u32 },
    #[error("edge {index}: base {base} out of range for Q_{n}")]
    BaseOutOfRange { index: usize, base: u64, n: u32 },
    #[error("edge {index}: base {base} has coordinate {dir} set (not canonical)")]
    NotCanonical { index: usize, base: u64, dir: u64 },
    #[error("edge {index} is out of order or duplicated")]
    NotSorted { index: usize },
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: u32,
    edges: Vec<(u64, u64)>,
}

/// Parses and validates a graph document.
pub fn graph_from_json(text: &str) -> Result<CubeGraph, FormatError> {
    let raw: GraphFile = serde_json::from_str(text)?;
    let dim = Dim::new(raw.n).map_err(|_| FormatError::Dimension {
        n: raw.n,
        max: crate::n_max(),
    })?;
    let mut g = CubeGraph::empty(dim);
    let mut prev: Option<(u64, u64)> = None;
    for (index, &(base, dir)) in raw.edges.iter().enumerate() {
        if dir < 1 || dir > raw.n as u64 {
            return Err(FormatError::DirOutOfRange {
                index,
                dir,
                n: raw.n,
            });
        }
        if base >= (1u64 << raw.n) {
            return Err(FormatError::BaseOutOfRange {
                index,
                base,
                n: raw.n,
            });
        }
        if base & coord_bit(dir as u32) as u64 != 0 {
            return Err(FormatError::NotCanonical { index, base, dir });
        }
        if prev.is_some_and(|p| p >= (base, dir)) {
            return Err(FormatError::NotSorted { index });
        }
        prev = Some((base, dir));
        g.insert(Edge {
            base: base as u32,
            dir: dir as u32,
        });
    }
    Ok(g)
}

/// Serializes a graph in the canonical byte-stable form.
pub fn graph_to_json(g: &CubeGraph) -> String {
    let file = GraphFile {
        n: g.n(),
        edges: g
            .edges()
            .into_iter()
            .map(|e| (e.base as u64, e.dir as u64))
            .collect(),
    };
    serde_json::to_string(&file).expect("graph serialization cannot fail")
}

pub fn read_graph(path: &Path) -> Result<CubeGraph, FormatError> {
    graph_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: &Path, g: &CubeGraph) -> Result<(), FormatError> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(graph_to_json(g).as_bytes())?;
    f.write_all(b"\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::CubeGraph;

    #[test]
    fn round_trip_is_identity() {
        let dim = Dim::new(3).unwrap();
        let g = CubeGraph::from_edges(
            dim,
            [Edge::new(0, 1), Edge::new(0, 3), Edge::new(0b011, 3)],
        );
        let text = graph_to_json(&g);
        let h = graph_from_json(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(graph_to_json(&h), text);
    }

    #[test]
    fn rejects_non_canonical_edge() {
        let err = graph_from_json(r#"{"n":2,"edges":[[1,1]]}"#).unwrap_err();
        assert!(matches!(err, FormatError::NotCanonical { .. }));
    }

    #[test]
    fn rejects_unsorted_or_duplicate_edges() {
        let err = graph_from_json(r#"{"n":2,"edges":[[0,2],[0,1]]}"#).unwrap_err();
        assert!(matches!(err, FormatError::NotSorted { .. }));
        let err = graph_from_json(r#"{"n":2,"edges":[[0,1],[0,1]]}"#).unwrap_err();
        assert!(matches!(err, FormatError::NotSorted { .. }));
    }

    #[test]
    fn rejects_out_of_range_fields() {
        assert!(matches!(
            graph_from_json(r#"{"n":0,"edges":[]}"#).unwrap_err(),
            FormatError::Dimension { .. }
        ));
        assert!(matches!(
            graph_from_json(r#"{"n":2,"edges":[[4,1]]}"#).unwrap_err(),
            FormatError::BaseOutOfRange { .. }
        ));
        assert!(matches!(
            graph_from_json(r#"{"n":2,"edges":[[0,3]]}"#).unwrap_err(),
            FormatError::DirOutOfRange { .. }
        ));
    }

    #[test]
    fn output_is_byte_stable() {
        let g = CubeGraph::full(Dim::new(2).unwrap());
        assert_eq!(
            graph_to_json(&g),
            r#"{"n":2,"edges":[[0,1],[0,2],[1,2],[2,1]]}"#
        );
    }
}
