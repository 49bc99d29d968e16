use std::collections::HashSet;

use serde_json::{json, Value};

use super::subdivision::Subdivision;
use crate::error::{Error, Result};
use crate::graph::{self, EdgeGraph, NodeSet};

/// A face of the triangulation: a `(k+1)`-edge subgraph of some cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub graph: EdgeGraph,
    pub interior: bool,
    /// Nodes `i` whose hypersimplex facet `x_i = 0` contains the face.
    pub missed: NodeSet,
    /// Centers `c` whose simplex facet (the star at `c`) contains the face.
    pub star_centers: NodeSet,
}

impl Face {
    pub fn new(graph: EdgeGraph) -> Self {
        Face {
            graph,
            interior: graph::is_interior_graph(&graph),
            missed: NodeSet(NodeSet::full(graph.n()).0 & !graph.covered_nodes().0),
            star_centers: graph.star_containers(),
        }
    }

    pub fn dim(&self) -> usize {
        self.graph.len() - 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "edges": self.graph.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
            "interior": self.interior,
            "hypersimplex_facets": self.missed,
            "simplex_facets": self.star_centers,
        })
    }
}

/// All nonempty faces, grouped by dimension and canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub n: usize,
    pub by_dim: Vec<Vec<Face>>,
}

impl FaceSet {
    pub fn from_graphs(n: usize, graphs: impl IntoIterator<Item = EdgeGraph>) -> Self {
        let mut by_dim: Vec<Vec<Face>> = vec![Vec::new(); n];
        for g in graphs {
            by_dim[g.len() - 1].push(Face::new(g));
        }
        for faces in &mut by_dim {
            faces.sort_by_key(|a| a.graph);
        }
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        FaceSet { n, by_dim }
    }

    pub fn dim(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.by_dim.iter().flatten()
    }

    /// Counts `f_0, ..., f_dim` of the faces selected by `keep`.
    pub fn counts(&self, keep: impl Fn(&Face) -> bool) -> Vec<u64> {
        self.by_dim.iter().map(|fs| fs.iter().filter(|f| keep(f)).count() as u64).collect()
    }

    /// Faces covering exactly the nodes of `within` or a subset of them.
    pub fn counts_within(&self, within: NodeSet) -> Vec<u64> {
        self.counts(|f| f.graph.covered_nodes().is_subset(within))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "faces": self.by_dim.iter().map(|fs| fs.iter().map(Face::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Closure of the maximal cells under nonempty subgraphs.
pub fn all_faces(s: &Subdivision) -> Result<FaceSet> {
    if !s.generic {
        return Err(Error::NotATriangulation);
    }
    let mut seen: HashSet<u64> = HashSet::new();
    for c in &s.cells {
        let full = c.graph.bits();
        // every nonempty submask of the cell's edge set
        let mut sub = full;
        while sub != 0 {
            seen.insert(sub);
            sub = (sub - 1) & full;
        }
    }
    Ok(FaceSet::from_graphs(s.n, seen.into_iter().map(|b| EdgeGraph::from_bits(s.n, b))))
}
