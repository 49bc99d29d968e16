//! Maximal cells of the regular subdivision induced by a metric, found either
//! by exhaustive candidate filtration or by ridge-pivot traversal.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::certificate::{Cell, Certificate, Scaled, ScaledMetric};
use crate::error::{Error, Result};
use crate::graph::{
    self, cmp_edge_bits, components, edge_count, edge_pairs, EdgeGraph, LoopyGraph, NodeSet, MAX_NODES,
};
use crate::lp::{solve_w_matching, WeightVector};
use crate::metric::{check_dmax_property, strict_triangle_nodes, Metric};
use crate::rational::{int, Rational};
use crate::registry::{Named, Registry};

/// Largest `n` enumerated by default.
pub const ENUMERATION_THRESHOLD: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub n: usize,
    pub cells: Vec<Cell>,
    pub generic: bool,
    /// A candidate graph whose certificate is tight on the given non-edge.
    pub degeneracy_witness: Option<(EdgeGraph, (usize, usize))>,
}

impl Subdivision {
    pub fn volume_sum(&self) -> u64 {
        self.cells.iter().map(Cell::volume).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "generic": self.generic,
            "cells": self.cells.iter().map(Cell::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Normalized volume of the second hypersimplex on `n` points.
pub fn hypersimplex_volume(n: usize) -> u64 {
    (1u64 << (n - 1)) - n as u64
}

/// Node masks of every edge, for the spanning test.
fn edge_node_masks(n: usize) -> Vec<u32> {
    edge_pairs(n).iter().map(|&(i, j)| (1 << (i - 1)) | (1 << (j - 1))).collect()
}

/// Spanning, and every component carries exactly one cycle, which is odd.
/// Assumes exactly `n` edges.
fn is_candidate(n: usize, bits: u64, masks: &[u32]) -> bool {
    let mut cover = 0u32;
    let mut b = bits;
    while b != 0 {
        cover |= masks[b.trailing_zeros() as usize];
        b &= b - 1;
    }
    if cover != (1u32 << n) - 1 {
        return false;
    }
    let pairs = edge_pairs(n);
    let mut parent = [0usize; MAX_NODES + 1];
    let mut parity = [0u8; MAX_NODES + 1];
    let mut cyclic = [false; MAX_NODES + 1];
    for (v, p) in parent.iter_mut().enumerate() {
        *p = v;
    }
    fn find(parent: &mut [usize], parity: &mut [u8], v: usize) -> (usize, u8) {
        let mut root = v;
        let mut acc = 0;
        while parent[root] != root {
            acc ^= parity[root];
            root = parent[root];
        }
        // path compression keeping parities relative to the root
        let mut cur = v;
        let mut cur_par = acc;
        while parent[cur] != cur {
            let next = parent[cur];
            let next_par = cur_par ^ parity[cur];
            parent[cur] = root;
            parity[cur] = cur_par;
            cur = next;
            cur_par = next_par;
        }
        (root, acc)
    }
    let mut b = bits;
    while b != 0 {
        let (u, v) = pairs[b.trailing_zeros() as usize];
        b &= b - 1;
        let (ru, pu) = find(&mut parent, &mut parity, u);
        let (rv, pv) = find(&mut parent, &mut parity, v);
        if ru == rv {
            if cyclic[ru] || pu != pv {
                return false;
            }
            cyclic[ru] = true;
        } else {
            if cyclic[ru] && cyclic[rv] {
                return false;
            }
            parent[ru] = rv;
            parity[ru] = pu ^ pv ^ 1;
            cyclic[rv] |= cyclic[ru];
        }
    }
    true
}

#[derive(Default)]
struct Harvest {
    cells: Vec<(u64, Vec<BigInt>)>,
    witness: Option<(u64, (usize, usize))>,
}

impl Harvest {
    fn merge(mut self, other: Harvest) -> Harvest {
        self.cells.extend(other.cells);
        self.witness = match (self.witness, other.witness) {
            (Some(a), Some(b)) => Some(if cmp_edge_bits(a.0, b.0).is_le() { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// All n-subsets of `m` edge slots whose two lowest members are `a < b`.
fn harvest_prefix(sm: &ScaledMetric, masks: &[u32], a: usize, b: usize) -> Harvest {
    let n = sm.n();
    let m = edge_count(n);
    let rest = n - 2;
    let free = m - b - 1;
    let mut out = Harvest::default();
    if rest > free {
        return out;
    }
    let prefix = (1u64 << a) | (1u64 << b);
    let mut visit = |bits: u64| {
        if !is_candidate(n, bits, masks) {
            return;
        }
        let g = EdgeGraph::from_bits(n, bits);
        match sm.classify(&g).expect("candidates are pinned") {
            Scaled::Strict(lam) => out.cells.push((bits, lam)),
            Scaled::Tight(_, f) => {
                let better = out.witness.is_none_or(|(w, _)| cmp_edge_bits(bits, w).is_lt());
                if better {
                    out.witness = Some((bits, f));
                }
            }
            Scaled::Violated(_) => {}
        }
    };
    if rest == 0 {
        visit(prefix);
        return out;
    }
    // Gosper's hack over `rest`-subsets of the slots above b.
    let mut s: u64 = (1u64 << rest) - 1;
    let limit = 1u64 << free;
    while s < limit {
        visit(prefix | (s << (b + 1)));
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

fn finish(sm: &ScaledMetric, n: usize, h: Harvest) -> Subdivision {
    let mut cells: Vec<Cell> = h
        .cells
        .into_iter()
        .map(|(bits, lam)| Cell { graph: EdgeGraph::from_bits(n, bits), lambda: sm.unscale(&lam) })
        .collect();
    cells.sort();
    let witness = h.witness.map(|(bits, f)| (EdgeGraph::from_bits(n, bits), f));
    let mut s = Subdivision { n, cells, generic: witness.is_none(), degeneracy_witness: witness };
    s.generic = s.generic && s.volume_sum() == hypersimplex_volume(n);
    s
}

/// Filters every `n`-edge subgraph of K_n down to the certified cells.
pub fn enumerate_cells(d: &Metric, threshold: usize) -> Result<Subdivision> {
    let n = d.n();
    if n > threshold {
        return Err(Error::ThresholdExceeded { n, threshold });
    }
    let sm = ScaledMetric::new(d);
    let masks = edge_node_masks(n);
    let m = edge_count(n);
    let prefixes: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let h =
        prefixes.par_iter().map(|&(a, b)| harvest_prefix(&sm, &masks, a, b)).reduce(Harvest::default, Harvest::merge);
    Ok(finish(&sm, n, h))
}

/// Heights `lambda + t * delta` keep `G - e` tight; returns `delta` oriented so
/// that `e` becomes slack for `t > 0`, or `None` if `G - e` is not an interior ridge.
fn ridge_direction(g: &EdgeGraph, a: usize, b: usize) -> Option<Vec<i64>> {
    let h = g.without(a, b);
    if !graph::is_interior_graph(&h) {
        return None;
    }
    let n = g.n();
    let comps = components(&h);
    let tree = comps.components.iter().find(|c| c.cycle_dim == 0)?;
    let mut delta = vec![0i64; n + 1];
    let root = tree.nodes.iter().next()?;
    delta[root] = 1;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in h.neighbors(u) {
            if delta[v] == 0 {
                delta[v] = -delta[u];
                queue.push_back(v);
            }
        }
    }
    if delta[a] + delta[b] < 0 {
        delta.iter_mut().for_each(|x| *x = -*x);
    }
    debug_assert!(delta[a] + delta[b] > 0);
    Some(delta)
}

/// The neighbor of `cell` across the ridge `cell - {a,b}`, if that ridge is interior.
fn pivot(
    sm: &ScaledMetric,
    g: &EdgeGraph,
    lam: &[BigInt],
    a: usize,
    b: usize,
) -> Result<Option<(EdgeGraph, Vec<BigInt>)>> {
    let Some(delta) = ridge_direction(g, a, b) else {
        return Ok(None);
    };
    let ridge = g.without(a, b);
    // Blocking non-edges: slack S shrinks at rate r; entering time S / (-r).
    let mut best: Option<(BigInt, i64, (usize, usize))> = None;
    let mut tie = None;
    for (i, j) in ridge.non_edges() {
        if (i, j) == (a, b) {
            continue;
        }
        let r = delta[i] + delta[j];
        if r >= 0 {
            continue;
        }
        let slack = &lam[i - 1] + &lam[j - 1] - sm.twice_d(i, j);
        match &best {
            None => best = Some((slack, -r, (i, j))),
            Some((s0, r0, _)) => {
                let lhs = &slack * BigInt::from(*r0);
                let rhs = s0 * BigInt::from(-r);
                match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Less => {
                        best = Some((slack, -r, (i, j)));
                        tie = None;
                    }
                    std::cmp::Ordering::Equal => tie = Some((i, j)),
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
    }
    let Some((_, _, (i, j))) = best else {
        return Err(Error::DegenerateRidge(format!("interior ridge {ridge} has no blocking edge")));
    };
    if let Some(f) = tie {
        return Err(Error::DegenerateRidge(format!(
            "ridge {ridge} of {g}: entering edges {{{i},{j}}} and {{{},{}}} tie",
            f.0, f.1
        )));
    }
    let next = ridge.with(i, j);
    match sm.classify(&next) {
        Some(Scaled::Strict(new_lam)) => Ok(Some((next, new_lam))),
        _ => Err(Error::DegenerateRidge(format!("pivot from {g} to {next} is not a strict cell"))),
    }
}

/// Breadth-first closure over ridge pivots starting from `seed`.
pub fn traverse_cells(d: &Metric, seed: &EdgeGraph) -> Result<Subdivision> {
    let n = d.n();
    let sm = ScaledMetric::new(d);
    if seed.n() != n || !graph::is_odd_unicyclic_spanning(seed) {
        return Err(Error::SeedInvalid(format!("{seed} is not an odd-unicyclic spanning graph")));
    }
    let lam = match sm.classify(seed).expect("seed is pinned") {
        Scaled::Strict(lam) => lam,
        Scaled::Tight(_, f) => return Err(Error::SeedInvalid(format!("{seed} is tight on {f:?}"))),
        Scaled::Violated(f) => return Err(Error::SeedInvalid(format!("{seed} violates {f:?}"))),
    };
    let mut seen = BTreeSet::from([*seed]);
    let mut cells = vec![(*seed, lam.clone())];
    let mut queue = VecDeque::from([(*seed, lam)]);
    while let Some((g, lam)) = queue.pop_front() {
        for (a, b) in g.edges() {
            if let Some((next, next_lam)) = pivot(&sm, &g, &lam, a, b)? {
                if seen.insert(next) {
                    cells.push((next, next_lam.clone()));
                    queue.push_back((next, next_lam));
                }
            }
        }
    }
    let h = Harvest { cells: cells.into_iter().map(|(g, l)| (g.bits(), l)).collect(), witness: None };
    Ok(finish(&sm, n, h))
}

/// The cyclic cell of the monotone metrics: for odd `n` the Hamiltonian cycle
/// `1, h+1, 2, h+2, ..., h` with `h = (n+1)/2`; for even `n` the analogous
/// `(n-1)`-cycle on all nodes but `n/2 + 1`, plus the edge `{1, n/2 + 1}`.
pub fn cycle_opt_graph(n: usize) -> EdgeGraph {
    let mut g = EdgeGraph::empty(n);
    if n % 2 == 1 {
        let h = n.div_ceil(2);
        for i in 1..h {
            g.insert(i, h + i);
            g.insert(h + i, i + 1);
        }
        g.insert(h, 1);
    } else {
        let m = n / 2;
        for i in 1..m {
            g.insert(i, m + 1 + i);
            g.insert(m + 1 + i, i + 1);
        }
        g.insert(m, 1);
        g.insert(1, m + 1);
    }
    g
}

/// Degree-vector probes tried by [`seed_cell`] when the cyclic cell does not apply.
fn probe_weights(n: usize) -> Vec<Vec<Rational>> {
    let mut probes = vec![vec![int(1); n]];
    for i in 0..n {
        let mut w = vec![int(1); n];
        w[i] = int(2);
        probes.push(w);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut w = vec![int(1); n];
            w[i] = int(2);
            w[j] = int(2);
            probes.push(w);
        }
    }
    probes
}

/// A starting cell for the traversal.
pub fn seed_cell(d: &Metric) -> Result<Cell> {
    let n = d.n();
    let sm = ScaledMetric::new(d);
    if check_dmax_property(d).pass {
        if let Ok(Certificate::Cell(c)) = sm.certificate(&cycle_opt_graph(n)) {
            return Ok(c);
        }
    }
    let probes = probe_weights(n);
    for w in &probes {
        let fm = solve_w_matching(d, &WeightVector::new(w.clone())?)?;
        if let Some(g) = fm.basis_graph() {
            if let Ok(Certificate::Cell(c)) = sm.certificate(&g) {
                return Ok(c);
            }
        }
    }
    Err(Error::SeedSearchFailed(probes.len()))
}

/// Cells of the subdivision induced on the nodes of `keep`, relabeled
/// `1..=|keep|`: the cells meeting the face `{x_i = 0 : i not in keep}` in
/// full dimension.
pub fn restrict_to_nodes(s: &Subdivision, keep: NodeSet) -> Result<Subdivision> {
    if !s.generic {
        return Err(Error::NotATriangulation);
    }
    let k = keep.len();
    if k < 3 {
        return Err(Error::SubsetTooSmall(k));
    }
    let idx: Vec<usize> = keep.iter().map(|v| v - 1).collect();
    let mut cells: Vec<Cell> = Vec::new();
    let mut seen = BTreeSet::new();
    for c in &s.cells {
        let sub = c.graph.induced_relabel(keep);
        if sub.len() == k && seen.insert(sub) {
            cells.push(Cell { graph: sub, lambda: idx.iter().map(|&i| c.lambda[i].clone()).collect() });
        }
    }
    cells.sort();
    Ok(Subdivision { n: k, cells, generic: true, degeneracy_witness: None })
}

/// Restriction to the hypersimplex facet `x_i = 0`.
pub fn restrict_to_facet(s: &Subdivision, i: usize) -> Result<Subdivision> {
    if s.n < 5 {
        return Err(Error::NotSupported(format!("facet restriction needs n >= 5, got {}", s.n)));
    }
    if i == 0 || i > s.n {
        return Err(Error::NodeOutOfRange { node: i, n: s.n });
    }
    restrict_to_nodes(s, NodeSet(NodeSet::full(s.n).0 & !(1 << (i - 1))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityVerdict {
    pub generic: bool,
    pub witness: Option<String>,
    pub volume_sum: u64,
}

/// A metric is generic when its subdivision is a strict triangulation and no
/// nonnegativity constraint `x_i = 0` is tight at a degenerate vertex. The
/// latter happens exactly at nodes `i` with a tight triangle
/// `d(j,k) = d(i,j) + d(i,k)`: the vertex `x = d(i, .)` then meets the loop
/// at `i`, the star at `i` and the edge `{j,k}`.
pub fn is_generic(d: &Metric) -> Result<GenericityVerdict> {
    let s = if d.n() <= ENUMERATION_THRESHOLD {
        enumerate_cells(d, ENUMERATION_THRESHOLD)?
    } else {
        match seed_cell(d).and_then(|c| traverse_cells(d, &c.graph)) {
            Ok(s) => s,
            Err(Error::DegenerateRidge(w)) | Err(Error::SeedInvalid(w)) => {
                return Ok(GenericityVerdict { generic: false, witness: Some(w), volume_sum: 0 })
            }
            Err(e) => return Err(e),
        }
    };
    Ok(genericity_of(d, &s))
}

/// [`is_generic`] on an already computed subdivision of `d`.
pub fn genericity_of(d: &Metric, s: &Subdivision) -> GenericityVerdict {
    let v = verdict_of(s);
    if !v.generic {
        return v;
    }
    match tight_loop(d) {
        Some(w) => GenericityVerdict { generic: false, witness: Some(w), ..v },
        None => v,
    }
}

pub fn verdict_of(s: &Subdivision) -> GenericityVerdict {
    let volume_sum = s.volume_sum();
    let witness = match (&s.degeneracy_witness, volume_sum == hypersimplex_volume(s.n)) {
        (Some((g, (v, w))), _) => Some(format!("graph {g} is tight on non-edge {{{v},{w}}}")),
        (None, false) => Some(format!("cell volumes sum to {volume_sum}, expected {}", hypersimplex_volume(s.n))),
        (None, true) => None,
    };
    GenericityVerdict { generic: s.generic, witness, volume_sum }
}

/// First node sitting on a tight triangle, as a loopy witness.
fn tight_loop(d: &Metric) -> Option<String> {
    let n = d.n();
    let strict = strict_triangle_nodes(d);
    let i = (1..=n).find(|&i| !strict.contains(i))?;
    let (j, k) = (1..=n)
        .filter(|&j| j != i)
        .flat_map(|j| (j + 1..=n).filter(move |&k| k != i).map(move |k| (j, k)))
        .find(|&(j, k)| d.get(i, j) + d.get(i, k) <= d.get(j, k))?;
    let star = LoopyGraph { base: EdgeGraph::star(n, i), loops: NodeSet::from_nodes([i]) };
    Some(format!("graph {star} is tight on non-edge {{{j},{k}}}"))
}

#[derive(Clone, Debug)]
pub struct SubdivisionOptions {
    pub threshold: usize,
}

impl Default for SubdivisionOptions {
    fn default() -> Self {
        SubdivisionOptions { threshold: ENUMERATION_THRESHOLD }
    }
}

pub trait SubdivisionStrategy: Named + Send + Sync {
    fn compute(&self, d: &Metric, opts: &SubdivisionOptions) -> Result<Subdivision>;
}

struct Enumerate;
struct Traverse;

impl Named for Enumerate {
    fn name(&self) -> &'static str {
        "enumerate"
    }
}
impl SubdivisionStrategy for Enumerate {
    fn compute(&self, d: &Metric, opts: &SubdivisionOptions) -> Result<Subdivision> {
        enumerate_cells(d, opts.threshold)
    }
}

impl Named for Traverse {
    fn name(&self) -> &'static str {
        "traverse"
    }
}
impl SubdivisionStrategy for Traverse {
    fn compute(&self, d: &Metric, _: &SubdivisionOptions) -> Result<Subdivision> {
        traverse_cells(d, &seed_cell(d)?.graph)
    }
}

pub fn strategies() -> Registry<dyn SubdivisionStrategy> {
    let mut r: Registry<dyn SubdivisionStrategy> = Registry::new("subdivision strategy");
    r.register(Box::new(Enumerate)).register(Box::new(Traverse));
    r
}

/// Enumeration up to the threshold, traversal above it.
pub fn auto_strategy(n: usize, opts: &SubdivisionOptions) -> &'static str {
    if n <= opts.threshold {
        "enumerate"
    } else {
        "traverse"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::fixtures::{four_points, four_points_ideal};
    use crate::metric::generators::{gen_dmax, gen_dmin};

    fn graphs(s: &Subdivision) -> Vec<EdgeGraph> {
        s.cells.iter().map(|c| c.graph).collect()
    }

    #[test]
    fn four_point_cells() {
        let s = enumerate_cells(&four_points(), 8).unwrap();
        assert!(s.generic);
        let expect: Vec<EdgeGraph> = [
            [(1, 2), (1, 3), (2, 3), (2, 4)],
            [(1, 2), (1, 4), (2, 4), (1, 3)],
            [(1, 3), (1, 4), (3, 4), (2, 4)],
            [(2, 3), (2, 4), (3, 4), (1, 3)],
        ]
        .iter()
        .map(|e| EdgeGraph::from_edges(4, e).unwrap())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(graphs(&s), expect);
    }

    #[test]
    fn ideal_is_not_generic() {
        // Same triangulation as the non-ideal metric, but every node is on a tight triangle.
        let s = enumerate_cells(&four_points_ideal(), 8).unwrap();
        assert!(s.generic);
        assert_eq!(graphs(&s), graphs(&enumerate_cells(&four_points(), 8).unwrap()));
        let v = is_generic(&four_points_ideal()).unwrap();
        assert!(!v.generic);
        assert_eq!(v.witness.as_deref(), Some("graph {1,1} {1,2} {1,3} {1,4} is tight on non-edge {2,4}"));
        assert!(is_generic(&four_points()).unwrap().generic);
    }

    #[test]
    fn dmax6_and_dmin6_counts() {
        let s = enumerate_cells(&gen_dmax(6).unwrap(), 8).unwrap();
        assert!(s.generic);
        assert_eq!(s.cells.len(), 26);
        assert!(s.cells.iter().all(|c| c.volume() == 1));

        let s = enumerate_cells(&gen_dmin(6).unwrap(), 8).unwrap();
        assert!(s.generic);
        assert_eq!(s.cells.len(), 25);
        let big: Vec<_> = s.cells.iter().filter(|c| c.volume() == 2).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].graph, crate::metric::generators::gamma_min(6));
    }

    #[test]
    fn threshold_guard() {
        assert_eq!(
            enumerate_cells(&gen_dmax(6).unwrap(), 5).err(),
            Some(Error::ThresholdExceeded { n: 6, threshold: 5 })
        );
    }

    #[test]
    fn cycle_opt_shapes() {
        assert_eq!(cycle_opt_graph(5), EdgeGraph::from_cycle(5, &[1, 4, 2, 5, 3, 1]).unwrap());
        assert_eq!(cycle_opt_graph(9), EdgeGraph::from_cycle(9, &[1, 6, 2, 7, 3, 8, 4, 9, 5, 1]).unwrap());
        assert_eq!(cycle_opt_graph(8), EdgeGraph::from_cycle(8, &[1, 6, 2, 7, 3, 8, 4, 1]).unwrap().with(1, 5));
    }

    #[test]
    fn traversal_matches_enumeration() {
        let d = gen_dmax(5).unwrap();
        let seed = seed_cell(&d).unwrap();
        assert_eq!(seed.graph, cycle_opt_graph(5));
        let t = traverse_cells(&d, &seed.graph).unwrap();
        assert_eq!(t.cells.len(), 11);
        assert_eq!(t, enumerate_cells(&d, 8).unwrap());

        let d = four_points();
        let e = enumerate_cells(&d, 8).unwrap();
        for c in &e.cells {
            assert_eq!(traverse_cells(&d, &c.graph).unwrap(), e);
        }
        let sq = EdgeGraph::from_cycle(4, &[1, 2, 3, 4, 1]).unwrap();
        assert!(matches!(traverse_cells(&d, &sq), Err(Error::SeedInvalid(_))));
    }

    #[test]
    fn seed_from_probes() {
        let d = gen_dmin(6).unwrap();
        let seed = seed_cell(&d).unwrap();
        assert_eq!(traverse_cells(&d, &seed.graph).unwrap(), enumerate_cells(&d, 8).unwrap());
    }

    #[test]
    fn facet_restriction_is_the_submetric_subdivision() {
        let d = gen_dmax(6).unwrap();
        let s = enumerate_cells(&d, 8).unwrap();
        let r = restrict_to_facet(&s, 6).unwrap();
        let sub = crate::metric::submetric(&d, NodeSet::full(5)).unwrap();
        assert_eq!(r, enumerate_cells(&sub, 8).unwrap());
        let small = enumerate_cells(&four_points(), 8).unwrap();
        assert!(matches!(restrict_to_facet(&small, 1), Err(Error::NotSupported(_))));
    }

    #[test]
    fn strategies_registry() {
        let r = strategies();
        assert_eq!(r.names(), vec!["enumerate", "traverse"]);
        let d = gen_dmax(5).unwrap();
        let opts = SubdivisionOptions::default();
        let a = r.get("enumerate").unwrap().compute(&d, &opts).unwrap();
        let b = r.get("traverse").unwrap().compute(&d, &opts).unwrap();
        assert_eq!(a, b);
    }
}
