//! The fractional `w`-matching program `max <mu, d>` subject to
//! `sum_i mu(i,j) = w_j`, `mu >= 0`, and the cell tests built on it.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::simplex::{self, StandardLp};
use crate::error::{Error, Result};
use crate::graph::{self, components, edge_count, edge_index, edge_pairs, EdgeGraph, NodeSet};
use crate::metric::Metric;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(w: Vec<Rational>) -> Result<Self> {
        if let Some(j) = w.iter().position(Signed::is_negative) {
            return Err(Error::PreconditionViolated(format!("weight w_{} is negative", j + 1)));
        }
        Ok(WeightVector(w))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![int(1); n])
    }

    /// `w_i = deg(i)`.
    pub fn degrees(g: &EdgeGraph) -> Self {
        WeightVector(g.degrees()[1..].iter().map(|&k| int(k as i64)).collect())
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalMatching {
    /// Indexed like the edges of an [`EdgeGraph`].
    pub mu: Vec<Rational>,
    pub value: Rational,
    pub support: EdgeGraph,
    /// Optimal dual: heights `y` with `y_i + y_j >= d(i,j)`, tight on the support.
    pub dual: Vec<Rational>,
    /// No nonbasic column has zero reduced cost.
    pub unique: bool,
    lp: StandardLp,
    solution: simplex::LpSolution,
}

impl FractionalMatching {
    /// The `n` edges of the final basis, if no artificial column remains in it.
    pub fn basis_graph(&self) -> Option<EdgeGraph> {
        let n = self.support.n();
        let pairs = edge_pairs(n);
        let mut g = EdgeGraph::empty(n);
        for &j in &self.solution.basis {
            let &(a, b) = pairs.get(j)?;
            g.insert(a, b);
        }
        Some(g)
    }

    /// Exact uniqueness of the optimum, resolving degenerate bases with an extra LP.
    pub fn is_unique_optimum(&self) -> Result<bool> {
        simplex::optimum_is_unique(&self.lp, &self.solution)
    }
}

fn matching_lp(d: &Metric, w: &WeightVector) -> StandardLp {
    let n = d.n();
    let pairs = edge_pairs(n);
    let a = (1..=n)
        .map(|v| pairs.iter().map(|&(i, j)| if i == v || j == v { int(1) } else { Rational::zero() }).collect())
        .collect();
    StandardLp { a, b: w.0.clone(), c: d.upper().to_vec() }
}

pub fn solve_w_matching(d: &Metric, w: &WeightVector) -> Result<FractionalMatching> {
    let n = d.n();
    if w.0.len() != n {
        return Err(Error::PreconditionViolated(format!("weight vector has length {}, expected {n}", w.0.len())));
    }
    let lp = matching_lp(d, w);
    let solution = simplex::solve(&lp)?;
    let mut support = EdgeGraph::empty(n);
    for (e, &(i, j)) in edge_pairs(n).iter().enumerate() {
        if solution.x[e].is_positive() {
            support.insert(i, j);
        }
    }
    Ok(FractionalMatching {
        mu: solution.x.clone(),
        value: solution.value.clone(),
        support,
        dual: solution.dual.clone(),
        unique: solution.unique,
        lp,
        solution,
    })
}

/// Solves with `w = deg(G)` and fails with `NonUniqueOptimum` if the optimum
/// is genuinely not unique.
fn unique_degree_matching(d: &Metric, g: &EdgeGraph) -> Result<FractionalMatching> {
    let fm = solve_w_matching(d, &WeightVector::degrees(g))?;
    if !fm.is_unique_optimum()? {
        return Err(Error::NonUniqueOptimum);
    }
    Ok(fm)
}

/// `G` is a cell iff it is the support of the optimal `deg(G)`-matching.
pub fn is_cell_lp(d: &Metric, g: &EdgeGraph) -> Result<bool> {
    if d.n() != g.n() {
        return Err(Error::PreconditionViolated("metric and graph sizes differ".into()));
    }
    if g.is_empty() {
        return Ok(true);
    }
    Ok(unique_degree_matching(d, g)?.support == *g)
}

/// For a connected odd-unicyclic spanning `G`: a cell iff
/// `d(v,w) <= odd_path_sum(v,w)` on every non-edge.
pub fn is_cell_oddpath(d: &Metric, g: &EdgeGraph) -> Result<bool> {
    graph::require_connected_odd_unicyclic(g)?;
    for (v, w) in g.non_edges() {
        if d.get(v, w) > graph::odd_path_sum(d, g, v, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Net signed edge multiplicities of the closed walk formed by an odd
/// `v -> w` walk in `G` and the non-edge `{v,w}`: path edges alternate
/// `-1, +1, ..., -1`, the closing edge gets `+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingCycleVector {
    pub n: usize,
    pub entries: Vec<(usize, i64)>,
}

impl AlternatingCycleVector {
    pub fn through_non_edge(g: &EdgeGraph, v: usize, w: usize) -> Result<Self> {
        let walk = graph::odd_walk(g, v, w)?;
        Ok(Self::from_walk(g.n(), &walk))
    }

    pub fn from_walk(n: usize, walk: &[usize]) -> Self {
        let mut net = vec![0i64; edge_count(n)];
        for (k, pair) in walk.windows(2).enumerate() {
            net[edge_index(n, pair[0], pair[1])] += if k % 2 == 0 { -1 } else { 1 };
        }
        net[edge_index(n, walk[0], walk[walk.len() - 1])] += 1;
        let entries = net.into_iter().enumerate().filter(|&(_, c)| c != 0).collect();
        AlternatingCycleVector { n, entries }
    }

    /// `mu + eps * c'`.
    pub fn apply(&self, mu: &[Rational], eps: &Rational) -> Vec<Rational> {
        let mut out = mu.to_vec();
        for &(e, c) in &self.entries {
            out[e] += eps * int(c);
        }
        out
    }

    pub fn is_degree_balanced(&self) -> bool {
        let mut deg = vec![0i64; self.n + 1];
        for &(e, c) in &self.entries {
            let (i, j) = edge_pairs(self.n)[e];
            deg[i] += c;
            deg[j] += c;
        }
        deg.iter().all(|&x| x == 0)
    }
}

/// `sum_i mu(i,j)` for every node `j`.
pub fn degree_sums(n: usize, mu: &[Rational]) -> Vec<Rational> {
    let mut s = vec![Rational::zero(); n];
    for (e, &(i, j)) in edge_pairs(n).iter().enumerate() {
        s[i - 1] += &mu[e];
        s[j - 1] += &mu[e];
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RootShape {
    /// Odd cycle through node 1 plus `pendants` leaves hanging off node 1.
    CyclePlusPendants { cycle: NodeSet, pendants: usize },
    /// `edges` leaves hanging off node 1.
    StarAtOne { edges: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentShape {
    Root(RootShape),
    IsolatedEdge(usize, usize),
    OddCycle(NodeSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub root: RootShape,
    pub others: Vec<ComponentShape>,
    pub support: EdgeGraph,
}

impl StructureReport {
    /// All components, with the degenerate root shapes reported by what they
    /// look like: a bare cycle as `OddCycle`, a one-edge star as `IsolatedEdge`.
    pub fn components(&self) -> Vec<ComponentShape> {
        let root = match &self.root {
            RootShape::CyclePlusPendants { cycle, pendants: 0 } => ComponentShape::OddCycle(*cycle),
            RootShape::StarAtOne { edges: 1 } => {
                let (i, j) = self.support.edges().find(|&(i, _)| i == 1).expect("node 1 has an edge");
                ComponentShape::IsolatedEdge(i, j)
            }
            r => ComponentShape::Root(r.clone()),
        };
        let mut all = vec![root];
        all.extend(self.others.iter().cloned());
        all
    }
}

/// Solves the program for `w = (b, 1, ..., 1)` and classifies the support.
pub fn b11_classify(d: &Metric, b: usize) -> Result<StructureReport> {
    let n = d.n();
    if b == 0 {
        return Err(Error::PreconditionViolated("b must be positive".into()));
    }
    let mut w = vec![int(1); n];
    w[0] = int(b as i64);
    let fm = solve_w_matching(d, &WeightVector(w))?;
    if !fm.is_unique_optimum()? {
        return Err(Error::NonUniqueOptimum);
    }
    classify_support(&fm.support, b)
}

fn classify_support(g: &EdgeGraph, b: usize) -> Result<StructureReport> {
    let violation = |msg: String| Err(Error::StructureViolation(format!("{msg} in support {g}")));
    let deg = g.degrees();
    let comps = components(g);
    if !comps.isolated.is_empty() {
        return violation(format!("nodes {} are uncovered", comps.isolated));
    }
    let mut root = None;
    let mut others = Vec::new();
    for c in &comps.components {
        let sub = EdgeGraph::from_bits(g.n(), {
            let mut bits = 0u64;
            for (e, &(i, j)) in edge_pairs(g.n()).iter().enumerate() {
                if g.contains(i, j) && c.nodes.contains(i) {
                    bits |= 1 << e;
                }
            }
            bits
        });
        if c.nodes.contains(1) {
            let off_one: Vec<(usize, usize)> = sub.edges().filter(|&(i, _)| i != 1).collect();
            if c.cycle_dim == 0 {
                if !off_one.is_empty() {
                    return violation("tree component of node 1 is not a star at node 1".into());
                }
                if sub.len() != b {
                    return violation(format!("star at node 1 has {} edges, expected {b}", sub.len()));
                }
                root = Some(RootShape::StarAtOne { edges: sub.len() });
            } else if c.odd_cycle == Some(true) {
                let leaves: Vec<usize> = sub.neighbors(1).into_iter().filter(|&x| deg[x] == 1).collect();
                let cycle = NodeSet(c.nodes.0 & !NodeSet::from_nodes(leaves.iter().copied()).0);
                let on_cycle_ok = cycle.contains(1) && cycle.iter().all(|x| x == 1 || deg[x] == 2);
                if !on_cycle_ok || deg[1] != leaves.len() + 2 {
                    return violation("component of node 1 is not an odd cycle through node 1 with pendants".into());
                }
                if leaves.len() + 1 != b {
                    return violation(format!("{} pendants at node 1, expected {}", leaves.len(), b - 1));
                }
                root = Some(RootShape::CyclePlusPendants { cycle, pendants: leaves.len() });
            } else {
                return violation("component of node 1 has an even tour".into());
            }
        } else if c.edge_count == 1 {
            let (i, j) = sub.edges().next().expect("one edge");
            others.push(ComponentShape::IsolatedEdge(i, j));
        } else if c.odd_cycle == Some(true) && c.edge_count == c.nodes.len() && c.nodes.iter().all(|x| deg[x] == 2) {
            others.push(ComponentShape::OddCycle(c.nodes));
        } else {
            return violation(format!("component {} is neither an edge nor an odd cycle", c.nodes));
        }
    }
    let root = root.expect("node 1 carries positive weight");
    Ok(StructureReport { root, others, support: *g })
}
