//! Subgraphs of the complete graph K_n stored as edge bitsets, plus the cycle
//! analysis needed to recognize cells of the hypersimplex subdivision.
//!
//! Nodes are 1-based. Edge `{i,j}` with `i < j` has index
//! `(i-1)n - i(i+1)/2 + j - 1`, which is the lexicographic pair order
//! `(1,2),(1,3),...,(1,n),(2,3),...,(n-1,n)`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::rational::Rational;

/// Largest supported point count: C(11,2) = 55 edges fit in a `u64`.
pub const MAX_NODES: usize = 11;

pub fn edge_count(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * n + j - 1 - i * (i + 1) / 2
}

/// Endpoints of every edge of K_n in index order.
pub fn edge_pairs(n: usize) -> &'static [(usize, usize)] {
    static TABLES: OnceLock<Vec<Vec<(usize, usize)>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=MAX_NODES)
            .map(|n| {
                let mut v = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        v.push((i, j));
                    }
                }
                v
            })
            .collect()
    });
    &tables[n]
}

/// Set of 1-based nodes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<usize>")]
pub struct NodeSet(pub u32);

impl NodeSet {
    pub fn full(n: usize) -> Self {
        NodeSet((1u32 << n) - 1)
    }

    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> Self {
        NodeSet(nodes.into_iter().fold(0, |m, v| m | (1 << (v - 1))))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl From<NodeSet> for Vec<usize> {
    fn from(s: NodeSet) -> Self {
        s.iter().collect()
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Subgraph of K_n given by its edge set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EdgeGraph {
    n: u8,
    bits: u64,
}

impl EdgeGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_NODES, "point count {n} exceeds {MAX_NODES}");
        EdgeGraph { n: n as u8, bits: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let m = edge_count(n);
        EdgeGraph { n: n as u8, bits: if m == 64 { u64::MAX } else { (1u64 << m) - 1 } }
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(n <= MAX_NODES && (edge_count(n) == 64 || bits >> edge_count(n) == 0));
        EdgeGraph { n: n as u8, bits }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_NODES {
            return Err(Error::BadArity(n));
        }
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::NodeOutOfRange { node: v, n });
                }
            }
            if i == j {
                return Err(Error::PreconditionViolated(format!("loop {{{i},{i}}} in an edge graph")));
            }
            g.insert(i, j);
        }
        Ok(g)
    }

    /// Closed walk through the listed nodes, e.g. `[1,4,2,5,3,1]`.
    pub fn from_cycle(n: usize, walk: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = walk.windows(2).map(|w| (w[0], w[1])).collect();
        Self::from_edges(n, &pairs)
    }

    /// All edges at `center`.
    pub fn star(n: usize, center: usize) -> Self {
        let mut g = Self::empty(n);
        for v in (1..=n).filter(|&v| v != center) {
            g.insert(center, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits >> edge_index(self.n(), i, j) & 1 == 1
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.bits |= 1 << edge_index(self.n(), i, j);
    }

    pub fn remove(&mut self, i: usize, j: usize) {
        self.bits &= !(1 << edge_index(self.n(), i, j));
    }

    pub fn with(mut self, i: usize, j: usize) -> Self {
        self.insert(i, j);
        self
    }

    pub fn without(mut self, i: usize, j: usize) -> Self {
        self.remove(i, j);
        self
    }

    pub fn is_subgraph_of(&self, other: &EdgeGraph) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..64).filter(move |b| bits >> b & 1 == 1)
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let pairs = edge_pairs(self.n());
        self.edge_indices().map(move |e| pairs[e])
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let pairs = edge_pairs(self.n());
        let bits = self.bits;
        (0..pairs.len()).filter(move |b| bits >> b & 1 == 0).map(move |e| pairs[e])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|&(i, j)| i == v || j == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n() + 1];
        for (i, j) in self.edges() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn covered_nodes(&self) -> NodeSet {
        let mut s = NodeSet::default();
        for (i, j) in self.edges() {
            s.insert(i);
            s.insert(j);
        }
        s
    }

    pub fn is_spanning(&self) -> bool {
        self.covered_nodes() == NodeSet::full(self.n())
    }

    /// Center of the star K_{1,n-1} if the graph is one (degree sequence test).
    pub fn star_center(&self) -> Option<usize> {
        let n = self.n();
        if self.len() != n - 1 {
            return None;
        }
        let deg = self.degrees();
        (1..=n).find(|&v| deg[v] == n - 1)
    }

    /// Nodes `c` such that every edge contains `c`, i.e. the graph lies in the star at `c`.
    pub fn star_containers(&self) -> NodeSet {
        let mut s = NodeSet::default();
        if self.is_empty() {
            return s;
        }
        for c in 1..=self.n() {
            if self.edges().all(|(i, j)| i == c || j == c) {
                s.insert(c);
            }
        }
        s
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges()
            .filter_map(|(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n() + 1];
        for (i, j) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Graph on the nodes of `keep` (in increasing order) relabeled to `1..=|keep|`.
    pub fn induced_relabel(&self, keep: NodeSet) -> EdgeGraph {
        let nodes: Vec<usize> = keep.iter().collect();
        let mut pos = vec![0; self.n() + 1];
        for (k, &v) in nodes.iter().enumerate() {
            pos[v] = k + 1;
        }
        let mut g = EdgeGraph::empty(nodes.len());
        for (i, j) in self.edges() {
            if keep.contains(i) && keep.contains(j) {
                g.insert(pos[i], pos[j]);
            }
        }
        g
    }

    /// Parses `"1-2,3-4"`.
    pub fn parse_edge_list(n: usize, s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) =
                item.split_once('-').ok_or_else(|| Error::Parse(format!("edge `{item}` is not of the form i-j")))?;
            let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad node in `{item}`")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad node in `{item}`")))?;
            pairs.push((a, b));
        }
        Self::from_edges(n, &pairs)
    }
}

/// Lexicographic comparison of the sorted edge-index lists of two bitsets.
pub fn cmp_edge_bits(mut a: u64, mut b: u64) -> Ordering {
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
        if ta != tb {
            return ta.cmp(&tb);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

impl Ord for EdgeGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| cmp_edge_bits(self.bits, other.bits))
    }
}

impl PartialOrd for EdgeGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.edges().map(|(i, j)| format!("{{{i},{j}}}")).collect();
        f.write_str(&items.join(" "))
    }
}

/// Edge graph plus loops; a loop at `i` stands for the tight constraint `x_i = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LoopyGraph {
    pub base: EdgeGraph,
    pub loops: NodeSet,
}

impl LoopyGraph {
    pub fn new(base: EdgeGraph, loops: NodeSet) -> Self {
        LoopyGraph { base, loops }
    }

    pub fn len(&self) -> usize {
        self.base.len() + self.loops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for LoopyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(usize, usize)> = self.base.edges().collect();
        items.extend(self.loops.iter().map(|v| (v, v)));
        items.sort_unstable();
        let items: Vec<String> = items.iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
        f.write_str(&items.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    pub nodes: NodeSet,
    pub edge_count: usize,
    /// |E| - |V| + 1.
    pub cycle_dim: usize,
    /// Parity of the unique cycle when the component is unicyclic: `Some(true)` for odd.
    pub odd_cycle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub components: Vec<ComponentProfile>,
    pub isolated: NodeSet,
}

pub fn components(g: &EdgeGraph) -> Components {
    let n = g.n();
    let adj = g.adjacency();
    let mut color = vec![usize::MAX; n + 1];
    let mut comps = Vec::new();
    let mut isolated = NodeSet::default();
    for s in 1..=n {
        if color[s] != usize::MAX {
            continue;
        }
        if adj[s].is_empty() {
            isolated.insert(s);
            color[s] = 0;
            continue;
        }
        let mut nodes = NodeSet::default();
        let mut bipartite = true;
        let mut degree_sum = 0;
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            nodes.insert(u);
            degree_sum += adj[u].len();
            for &v in &adj[u] {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    bipartite = false;
                }
            }
        }
        let edge_count = degree_sum / 2;
        let cycle_dim = edge_count + 1 - nodes.len();
        comps.push(ComponentProfile {
            nodes,
            edge_count,
            cycle_dim,
            odd_cycle: (cycle_dim == 1).then_some(!bipartite),
        });
    }
    Components { components: comps, isolated }
}

/// True iff some component carries a non-trivial even tour: two independent
/// cycles, or a single even cycle.
pub fn has_even_tour(g: &EdgeGraph) -> bool {
    components(g).components.iter().any(|c| c.cycle_dim >= 2 || c.odd_cycle == Some(false))
}

/// Spanning and not a star: the graphs of interior faces.
pub fn is_interior_graph(g: &EdgeGraph) -> bool {
    g.is_spanning() && g.star_center().is_none()
}

/// Spanning, `n` edges, every component unicyclic with an odd cycle.
pub fn is_odd_unicyclic_spanning(g: &EdgeGraph) -> bool {
    if g.len() != g.n() || !g.is_spanning() {
        return false;
    }
    let c = components(g);
    c.isolated.is_empty() && c.components.iter().all(|c| c.odd_cycle == Some(true))
}

/// Normalized volume `2^(c-1)` of the simplex spanned by the edge vectors of an
/// odd-unicyclic spanning graph with `c` components.
pub fn cell_volume(g: &EdgeGraph) -> Result<u64> {
    if !is_odd_unicyclic_spanning(g) {
        return Err(Error::PreconditionViolated(format!(
            "cell volume needs a spanning odd-unicyclic graph with n edges, got {g}"
        )));
    }
    let c = components(g).components.len();
    Ok(1u64 << (c - 1))
}

/// Edges of the unique cycle of a unicyclic connected graph, as a closed node walk.
fn cycle_walk(g: &EdgeGraph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = g.adjacency();
    let mut removed = vec![false; n + 1];
    let mut stack: Vec<usize> = (1..=n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &u in &alive[v] {
            if !removed[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    for v in 1..=n {
        alive[v].retain(|&u| !removed[u]);
    }
    let start = (1..=n).find(|&v| !removed[v] && deg[v] > 0).expect("graph has a cycle");
    let mut walk = vec![start];
    let mut prev = 0;
    let mut cur = start;
    loop {
        let next = *alive[cur].iter().find(|&&u| u != prev).expect("cycle continues");
        if next == start {
            walk.push(start);
            return walk;
        }
        walk.push(next);
        prev = cur;
        cur = next;
    }
}

fn tree_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &v in &adj[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn check_odd_path_query(g: &EdgeGraph, v: usize, w: usize) -> Result<()> {
    let n = g.n();
    for x in [v, w] {
        if x == 0 || x > n {
            return Err(Error::NodeOutOfRange { node: x, n });
        }
    }
    if v == w {
        return Err(Error::PreconditionViolated("endpoints coincide".into()));
    }
    if g.contains(v, w) {
        return Err(Error::PreconditionViolated(format!("{{{v},{w}}} is an edge of the graph")));
    }
    require_connected_odd_unicyclic(g)
}

/// Connected, spanning, `n` edges and no even tour.
pub fn require_connected_odd_unicyclic(g: &EdgeGraph) -> Result<()> {
    let n = g.n();
    let c = components(g);
    if c.components.len() != 1 || !c.isolated.is_empty() {
        return Err(Error::PreconditionViolated("graph is not connected and spanning".into()));
    }
    if g.len() != n {
        return Err(Error::PreconditionViolated(format!("graph has {} edges, expected {n}", g.len())));
    }
    if c.components[0].odd_cycle != Some(true) {
        return Err(Error::PreconditionViolated("graph contains a non-trivial even tour".into()));
    }
    Ok(())
}

/// All the odd-length `v -> w` walks obtained by cutting one cycle edge `{x,y}`
/// (in either orientation) and, when the tree path has even length, crossing
/// the cut edge once.
pub fn odd_walks(g: &EdgeGraph, v: usize, w: usize) -> Result<Vec<Vec<usize>>> {
    check_odd_path_query(g, v, w)?;
    let cycle = cycle_walk(g);
    let mut walks = Vec::new();
    for pair in cycle.windows(2) {
        let (x, y) = (pair[0], pair[1]);
        let tree = g.without(x, y).adjacency();
        let direct = tree_path(&tree, v, w);
        if direct.len().is_multiple_of(2) {
            walks.push(direct);
            continue;
        }
        for (a, b) in [(x, y), (y, x)] {
            let mut walk = tree_path(&tree, v, a);
            walk.extend(tree_path(&tree, b, w));
            walks.push(walk);
        }
    }
    Ok(walks)
}

/// The default odd walk: BFS tree path if its length is odd, otherwise routed
/// once through the odd cycle.
pub fn odd_walk(g: &EdgeGraph, v: usize, w: usize) -> Result<Vec<usize>> {
    Ok(odd_walks(g, v, w)?.swap_remove(0))
}

/// `d(v1,v2) - d(v2,v3) + d(v3,v4) - ...` along a node walk.
pub fn alternating_sum(d: &Metric, walk: &[usize]) -> Rational {
    let mut total = Rational::default();
    for (k, pair) in walk.windows(2).enumerate() {
        let x = d.get(pair[0], pair[1]);
        if k % 2 == 0 {
            total += x;
        } else {
            total -= x;
        }
    }
    total
}

/// Alternating distance sum along an odd-length `v -> w` walk in a connected
/// odd-unicyclic graph; independent of the walk chosen.
pub fn odd_path_sum(d: &Metric, g: &EdgeGraph, v: usize, w: usize) -> Result<Rational> {
    if d.n() != g.n() {
        return Err(Error::PreconditionViolated("metric and graph sizes differ".into()));
    }
    Ok(alternating_sum(d, &odd_walk(g, v, w)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::fixtures::four_points;

    fn g(n: usize, edges: &[(usize, usize)]) -> EdgeGraph {
        EdgeGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn edge_index_matches_lexicographic_order() {
        for n in 2..=MAX_NODES {
            for (k, &(i, j)) in edge_pairs(n).iter().enumerate() {
                assert_eq!(edge_index(n, i, j), k);
                assert_eq!(edge_index(n, j, i), k);
            }
        }
    }

    #[test]
    fn two_triangles_components() {
        let t = g(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]);
        let c = components(&t);
        assert_eq!(c.components.len(), 2);
        for comp in &c.components {
            assert_eq!(comp.edge_count, 3);
            assert_eq!(comp.cycle_dim, 1);
            assert_eq!(comp.odd_cycle, Some(true));
        }
        assert!(c.isolated.is_empty());
    }

    #[test]
    fn path_and_empty_components() {
        let c = components(&g(3, &[(1, 2), (2, 3)]));
        assert_eq!(c.components.len(), 1);
        assert_eq!(c.components[0].cycle_dim, 0);
        assert_eq!(c.components[0].odd_cycle, None);

        let c = components(&EdgeGraph::empty(4));
        assert!(c.components.is_empty());
        assert_eq!(c.isolated, NodeSet::full(4));
    }

    #[test]
    fn even_tours() {
        assert!(has_even_tour(&EdgeGraph::from_cycle(4, &[1, 2, 3, 4, 1]).unwrap()));
        assert!(!has_even_tour(&g(4, &[(1, 2), (2, 3), (1, 3), (3, 4)])));
        // bowtie: two triangles through node 1
        assert!(has_even_tour(&g(5, &[(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)])));
    }

    #[test]
    fn interior_graphs() {
        assert!(is_interior_graph(&g(4, &[(1, 2), (3, 4)])));
        assert!(!is_interior_graph(&g(4, &[(1, 2), (1, 3), (1, 4)])));
        assert!(!is_interior_graph(&g(4, &[(1, 2)])));
    }

    #[test]
    fn odd_path_sum_on_four_points() {
        let d = four_points();
        let t = g(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]);
        assert_eq!(odd_path_sum(&d, &t, 1, 4).unwrap(), crate::rational::int(2));
        assert_eq!(alternating_sum(&d, &[1, 2, 3, 4]), crate::rational::int(2));
        assert_eq!(alternating_sum(&d, &[1, 3, 2, 1, 3, 4]), crate::rational::int(2));
        for walk in odd_walks(&t, 1, 4).unwrap() {
            assert_eq!(walk.len() % 2, 0, "walk {walk:?} has odd length");
            assert_eq!(alternating_sum(&d, &walk), crate::rational::int(2));
        }
    }

    #[test]
    fn odd_path_rejects_adjacent_and_even() {
        let d = four_points();
        let t = g(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]);
        assert!(matches!(odd_path_sum(&d, &t, 3, 4), Err(Error::PreconditionViolated(_))));
        let sq = EdgeGraph::from_cycle(4, &[1, 2, 3, 4, 1]).unwrap();
        assert!(matches!(odd_path_sum(&d, &sq, 1, 3), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn volumes() {
        assert_eq!(cell_volume(&g(4, &[(1, 2), (2, 3), (1, 3), (3, 4)])).unwrap(), 1);
        assert_eq!(cell_volume(&EdgeGraph::from_cycle(5, &[1, 2, 3, 4, 5, 1]).unwrap()).unwrap(), 1);
        let t = g(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]);
        assert_eq!(cell_volume(&t).unwrap(), 2);
        assert!(cell_volume(&EdgeGraph::from_cycle(4, &[1, 2, 3, 4, 1]).unwrap()).is_err());
    }

    #[test]
    fn ordering_is_lexicographic_on_edge_lists() {
        let a = g(4, &[(1, 2), (1, 3)]);
        let b = g(4, &[(1, 2), (1, 4)]);
        let c = g(4, &[(1, 2), (1, 3), (1, 4)]);
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
    }

    #[test]
    fn display_and_parse() {
        let t = EdgeGraph::parse_edge_list(4, "3-4, 1-2").unwrap();
        assert_eq!(t.to_string(), "{1,2} {3,4}");
        let l = LoopyGraph::new(t, NodeSet::from_nodes([1]));
        assert_eq!(l.to_string(), "{1,1} {1,2} {3,4}");
        assert!(EdgeGraph::parse_edge_list(4, "1-5").is_err());
    }
}
