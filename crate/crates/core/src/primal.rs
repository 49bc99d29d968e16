//! Independent ground truth computed on the polyhedron
//! `P_d = { x : x_i + x_j >= d(i,j), x_i >= 0 }` itself: vertices by basis
//! enumeration, bounded faces by intersecting tight sets, and the h-vector
//! counted by out-degrees under a linear objective.
//!
//! Nothing here uses the subdivision code, so agreement with it is evidence.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fvec::{h_from_f, split_interior_boundary};
use crate::graph::{edge_count, edge_pairs, EdgeGraph, LoopyGraph, NodeSet};
use crate::lp::simplex::{solve, StandardLp};
use crate::metric::{strict_triangle_nodes, Metric};
use crate::rational::{self, int, Rational};

/// Largest `n` accepted by the basis enumeration.
pub const ORACLE_MAX_N: usize = 7;

/// The constraint rows: edges in edge-index order, then the loops `x_i >= 0`.
struct Rows {
    n: usize,
    pairs: Vec<(usize, usize)>,
    rhs: Vec<Rational>,
}

impl Rows {
    fn new(d: &Metric) -> Self {
        let n = d.n();
        let mut pairs: Vec<(usize, usize)> = edge_pairs(n).to_vec();
        let mut rhs: Vec<Rational> = d.upper().to_vec();
        for i in 1..=n {
            pairs.push((i, i));
            rhs.push(Rational::zero());
        }
        Rows { n, pairs, rhs }
    }

    fn len(&self) -> usize {
        self.pairs.len()
    }

    fn lhs(&self, r: usize, x: &[Rational]) -> Rational {
        let (i, j) = self.pairs[r];
        if i == j {
            x[i - 1].clone()
        } else {
            &x[i - 1] + &x[j - 1]
        }
    }

    fn coefficients(&self, r: usize) -> Vec<Rational> {
        let (i, j) = self.pairs[r];
        let mut row = vec![Rational::zero(); self.n];
        row[i - 1] += int(1);
        if i != j {
            row[j - 1] += int(1);
        }
        row
    }

    fn tight_mask(&self, x: &[Rational]) -> u64 {
        (0..self.len()).filter(|&r| self.lhs(r, x) == self.rhs[r]).fold(0, |m, r| m | 1 << r)
    }

    fn loopy(&self, mask: u64) -> LoopyGraph {
        let m = edge_count(self.n);
        let base = EdgeGraph::from_bits(self.n, mask & ((1u64 << m) - 1));
        let loops = NodeSet((mask >> m) as u32);
        LoopyGraph::new(base, loops)
    }

    /// Every component of the chosen rows has as many rows as nodes and an odd
    /// closed walk (a loop counts), i.e. the square system is nonsingular.
    fn nonsingular(&self, mask: u64) -> bool {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        let mut parity = vec![0u8; n + 1];
        let mut odd = vec![false; n + 1];
        let mut rows = vec![0usize; n + 1];
        fn find(parent: &mut [usize], parity: &mut [u8], v: usize) -> (usize, u8) {
            let mut p = 0;
            let mut r = v;
            while parent[r] != r {
                p ^= parity[r];
                r = parent[r];
            }
            (r, p)
        }
        let mut b = mask;
        while b != 0 {
            let (u, v) = self.pairs[b.trailing_zeros() as usize];
            b &= b - 1;
            let (ru, pu) = find(&mut parent, &mut parity, u);
            let (rv, pv) = find(&mut parent, &mut parity, v);
            if ru == rv {
                rows[ru] += 1;
                odd[ru] |= pu == pv;
            } else {
                parent[ru] = rv;
                parity[ru] = pu ^ pv ^ 1;
                rows[rv] += rows[ru] + 1;
                odd[rv] |= odd[ru];
            }
        }
        let mut size = vec![0usize; n + 1];
        for v in 1..=n {
            size[find(&mut parent, &mut parity, v).0] += 1;
        }
        (1..=n).filter(|&v| parent[v] == v).all(|r| rows[r] == size[r] && odd[r])
    }
}

/// Exact Gauss-Jordan solve of a square system; `None` if singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let piv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &piv;
        }
        b[col] /= &piv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in c..cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimalVertex {
    #[serde(serialize_with = "rational_vec")]
    pub coords: Vec<Rational>,
    #[serde(serialize_with = "loopy_string")]
    pub tight: LoopyGraph,
    #[serde(skip)]
    mask: u64,
}

fn rational_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::format))
}

fn loopy_string<S: serde::Serializer>(g: &LoopyGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(g)
}

impl PrimalVertex {
    pub fn is_simple(&self) -> bool {
        self.tight.len() == self.coords.len()
    }
}

pub fn enumerate_vertices(d: &Metric) -> Result<Vec<PrimalVertex>> {
    let n = d.n();
    if n > ORACLE_MAX_N {
        return Err(Error::ScaleExceeded(n));
    }
    let rows = Rows::new(d);
    let m = rows.len();
    let found: BTreeSet<Vec<Rational>> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut out = BTreeSet::new();
            let rest = n - 1;
            let free = m - a - 1;
            if rest > free {
                return out;
            }
            let mut visit = |mask: u64| {
                if !rows.nonsingular(mask) {
                    return;
                }
                let idx: Vec<usize> = (0..m).filter(|r| mask >> r & 1 == 1).collect();
                let coeffs = idx.iter().map(|&r| rows.coefficients(r)).collect();
                let rhs = idx.iter().map(|&r| rows.rhs[r].clone()).collect();
                let x = solve_square(coeffs, rhs).expect("the parity test guarantees a nonsingular system");
                if (0..m).all(|r| rows.lhs(r, &x) >= rows.rhs[r]) {
                    out.insert(x);
                }
            };
            if rest == 0 {
                visit(1 << a);
                return out;
            }
            let mut s: u64 = (1u64 << rest) - 1;
            while s < 1u64 << free {
                visit(1 << a | s << (a + 1));
                let c = s & s.wrapping_neg();
                let r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
            out
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found
        .into_iter()
        .map(|x| {
            let mask = rows.tight_mask(&x);
            PrimalVertex { tight: rows.loopy(mask), coords: x, mask }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundedFace {
    #[serde(serialize_with = "loopy_string")]
    pub tight: LoopyGraph,
    /// Indices into [`BoundedFacePoset::vertices`].
    pub vertices: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundedFacePoset {
    pub n: usize,
    pub vertices: Vec<PrimalVertex>,
    /// Sorted by dimension, then by tight set.
    pub faces: Vec<BoundedFace>,
}

impl BoundedFacePoset {
    pub fn f_vector(&self) -> Vec<i64> {
        let top = self.faces.iter().map(|f| f.dim).max().unwrap_or(0);
        let mut f = vec![0i64; top + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    /// Pairs `(a, b)` of face indices where `a` is a facet of `b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let sets: Vec<HashSet<usize>> = self.faces.iter().map(|f| f.vertices.iter().copied().collect()).collect();
        let mut out = Vec::new();
        for (a, fa) in self.faces.iter().enumerate() {
            for (b, fb) in self.faces.iter().enumerate() {
                if fb.dim == fa.dim + 1 && sets[a].is_subset(&sets[b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.vertices.iter().all(PrimalVertex::is_simple)
    }
}

/// The face cut out by making the rows of `mask` tight is bounded iff
/// `sum x` has a finite maximum over it (the recession cone of `P_d` is the
/// nonnegative orthant).
fn face_is_bounded(rows: &Rows, mask: u64) -> Result<bool> {
    let n = rows.n;
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b = Vec::new();
    let slack_rows: Vec<usize> =
        (0..rows.len()).filter(|&r| mask >> r & 1 == 0 && rows.pairs[r].0 != rows.pairs[r].1).collect();
    let cols = n + slack_rows.len();
    for r in 0..rows.len() {
        let (i, j) = rows.pairs[r];
        let tight = mask >> r & 1 == 1;
        if i == j && !tight {
            continue;
        }
        let mut row = rows.coefficients(r);
        row.resize(cols, Rational::zero());
        if let Some(s) = slack_rows.iter().position(|&x| x == r) {
            row[n + s] = int(-1);
        }
        a.push(row);
        b.push(rows.rhs[r].clone());
    }
    let c: Vec<Rational> = (0..cols).map(|k| if k < n { int(1) } else { Rational::zero() }).collect();
    match solve(&StandardLp { a, b, c }) {
        Ok(_) => Ok(true),
        Err(Error::Unbounded) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn bounded_faces(d: &Metric) -> Result<BoundedFacePoset> {
    let vertices = enumerate_vertices(d)?;
    let rows = Rows::new(d);
    let n = d.n();
    // every face spanned by vertices has the intersection of their tight sets
    let mut seen: BTreeSet<u64> = vertices.iter().map(|v| v.mask).collect();
    let mut work: Vec<u64> = seen.iter().copied().collect();
    while let Some(k) = work.pop() {
        for v in &vertices {
            let next = k & v.mask;
            if seen.insert(next) {
                work.push(next);
            }
        }
    }
    let candidates: Vec<u64> = seen.into_iter().collect();
    let kept: Vec<Option<BoundedFace>> = candidates
        .par_iter()
        .map(|&mask| -> Result<Option<BoundedFace>> {
            let members: Vec<usize> =
                vertices.iter().enumerate().filter(|(_, v)| v.mask & mask == mask).map(|(i, _)| i).collect();
            let is_vertex = members.len() == 1 && vertices[members[0]].mask == mask;
            if !is_vertex && !face_is_bounded(&rows, mask)? {
                return Ok(None);
            }
            let tight_rows: Vec<Vec<Rational>> =
                (0..rows.len()).filter(|r| mask >> r & 1 == 1).map(|r| rows.coefficients(r)).collect();
            let dim = n - if tight_rows.is_empty() { 0 } else { rank(tight_rows) };
            Ok(Some(BoundedFace { tight: rows.loopy(mask), vertices: members, dim }))
        })
        .collect::<Result<_>>()?;
    let mut faces: Vec<BoundedFace> = kept.into_iter().flatten().collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then(a.tight.cmp(&b.tight)));
    Ok(BoundedFacePoset { n, vertices, faces })
}

/// A strictly positive objective; ties between vertices are broken
/// lexicographically by coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationSpec {
    pub alpha: Vec<Rational>,
}

impl OrientationSpec {
    pub fn new(alpha: Vec<Rational>) -> Result<Self> {
        if alpha.iter().any(|a| !a.is_positive()) {
            return Err(Error::PreconditionViolated("objective must be strictly positive".into()));
        }
        Ok(OrientationSpec { alpha })
    }

    pub fn ones(n: usize) -> Self {
        OrientationSpec { alpha: vec![int(1); n] }
    }

    fn key(&self, x: &[Rational]) -> (Rational, Vec<Rational>) {
        let v = self.alpha.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        (v, x.to_vec())
    }
}

/// `h_i` = number of vertices with `i` bounded edges leading to a smaller
/// objective value; length `n + 1`.
pub fn h_by_outdegree_on(poset: &BoundedFacePoset, spec: &OrientationSpec) -> Result<Vec<i64>> {
    let n = poset.n;
    if spec.alpha.len() != n {
        return Err(Error::PreconditionViolated("objective has the wrong length".into()));
    }
    if let Some(v) = poset.vertices.iter().find(|v| !v.is_simple()) {
        return Err(Error::NonSimple(format!("{} with tight set {}", fmt_point(&v.coords), v.tight)));
    }
    let keys: Vec<_> = poset.vertices.iter().map(|v| spec.key(&v.coords)).collect();
    let mut out = vec![0usize; poset.vertices.len()];
    for e in poset.faces.iter().filter(|f| f.dim == 1) {
        let [a, b] = e.vertices[..] else {
            return Err(Error::PreconditionViolated(format!(
                "bounded edge {} has {} vertices",
                e.tight,
                e.vertices.len()
            )));
        };
        match keys[a].cmp(&keys[b]) {
            std::cmp::Ordering::Greater => out[a] += 1,
            std::cmp::Ordering::Less => out[b] += 1,
            std::cmp::Ordering::Equal => return Err(Error::DegenerateObjective),
        }
    }
    let mut h = vec![0i64; n + 1];
    for o in out {
        h[o] += 1;
    }
    Ok(h)
}

pub fn h_by_outdegree(d: &Metric, spec: &OrientationSpec) -> Result<Vec<i64>> {
    h_by_outdegree_on(&bounded_faces(d)?, spec)
}

fn fmt_point(x: &[Rational]) -> String {
    format!("({})", x.iter().map(rational::format).collect::<Vec<_>>().join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub dual_ft: Vec<i64>,
    pub primal_f: Vec<i64>,
    pub dual_ht: Vec<i64>,
    pub primal_h: Vec<i64>,
    /// Bounded faces matched to interior or glued faces of the dual ball.
    pub faces_matched: usize,
}

fn first_difference(a: &[i64], b: &[i64]) -> Option<usize> {
    (0..a.len().max(b.len())).find(|&i| a.get(i).unwrap_or(&0) != b.get(i).unwrap_or(&0))
}

/// Runs both pipelines and compares face numbers, h-vectors (including the
/// reversal against the interior of the dual ball) and the faces themselves.
pub fn crosscheck(d: &Metric) -> Result<CrosscheckReport> {
    let n = d.n();
    if n > 6 {
        return Err(Error::ScaleExceeded(n));
    }
    let s = crate::dual::enumerate_cells(d, crate::dual::ENUMERATION_THRESHOLD)?;
    if !s.generic {
        return Err(Error::NotGeneric("the subdivision is not a triangulation".into()));
    }
    let faces = crate::dual::all_faces(&s)?;
    let ball = split_interior_boundary(&faces);
    let tv = crate::fvec::tightspan_from_interior(d, &ball.interior);

    let poset = bounded_faces(d)?;
    let primal_f = poset.f_vector();
    if let Some(i) = first_difference(&tv.ft, &primal_f) {
        return Err(Error::Mismatch(format!("f_{i}: dual {:?} vs primal {primal_f:?}", tv.ft)));
    }
    let primal_h = h_by_outdegree_on(&poset, &OrientationSpec::ones(n))?;
    if let Some(i) = first_difference(&tv.ht, &primal_h) {
        return Err(Error::Mismatch(format!("h_{i}: dual {:?} vs primal {primal_h:?}", tv.ht)));
    }
    let hi = h_from_f(&ball.interior);
    let glued = strict_triangle_nodes(d);
    for j in 0..=n {
        let expect = hi.get((n - j) as i64) + if j == 1 { glued.len() as i64 } else { 0 };
        if primal_h[j] != expect {
            return Err(Error::Mismatch(format!(
                "h_{j} = {} but the interior of the dual ball gives {expect}",
                primal_h[j]
            )));
        }
    }

    let mut dual: BTreeSet<LoopyGraph> =
        faces.iter().filter(|f| f.interior).map(|f| LoopyGraph::new(f.graph, NodeSet::default())).collect();
    for i in glued.iter() {
        let star = EdgeGraph::star(n, i);
        dual.insert(LoopyGraph::new(star, NodeSet::default()));
        dual.insert(LoopyGraph::new(star, NodeSet::from_nodes([i])));
    }
    let primal: BTreeSet<LoopyGraph> = poset.faces.iter().map(|f| f.tight).collect();
    if let Some(g) = primal.symmetric_difference(&dual).next() {
        let side = if primal.contains(g) { "bounded face" } else { "dual face" };
        return Err(Error::Mismatch(format!("{side} {g} has no partner")));
    }
    Ok(CrosscheckReport { dual_ft: tv.ft, primal_f, dual_ht: tv.ht, primal_h, faces_matched: primal.len() })
}
