//! f-, h- and g-vector calculus for simplicial balls and spheres, and the
//! face numbers of the tight span read off from the interior of the dual ball.

use serde::Serialize;
use serde_json::{json, Value};

use crate::dual::{all_faces, FaceSet, Subdivision};
use crate::error::{Error, Result};
use crate::graph::NodeSet;
use crate::metric::{strict_triangle_nodes, Metric};
use crate::verdict::Verdict;

/// `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1i64, |acc, i| acc * (a - i) / (i + 1))
}

/// Face numbers `f_{-1}, f_0, ..., f_dim` of a `dim`-dimensional complex.
/// Interior face sets have `f_{-1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub dim: usize,
    pub empty: i64,
    pub counts: Vec<i64>,
}

impl FVector {
    /// A complex with the empty face; `counts` is padded or must fit `dim`.
    pub fn new(dim: usize, counts: &[i64]) -> Self {
        Self::with_empty(dim, 1, counts)
    }

    pub fn with_empty(dim: usize, empty: i64, counts: &[i64]) -> Self {
        assert!(counts.len() <= dim + 1, "{} counts do not fit dimension {dim}", counts.len());
        let mut c = counts.to_vec();
        c.resize(dim + 1, 0);
        FVector { dim, empty, counts: c }
    }

    /// `f_k` for `k >= -1`, zero above the dimension.
    pub fn get(&self, k: i64) -> i64 {
        match k {
            -1 => self.empty,
            k if k >= 0 && (k as usize) <= self.dim => self.counts[k as usize],
            _ => 0,
        }
    }
}

/// `h_0, ..., h_{dim+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<i64>);

/// `g_0 = 1`, `g_k = h_k - h_{k-1}`, over the full index range of `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GVector(pub Vec<i64>);

impl HVector {
    pub fn get(&self, k: i64) -> i64 {
        if k < 0 {
            return 0;
        }
        self.0.get(k as usize).copied().unwrap_or(0)
    }
}

impl GVector {
    pub fn get(&self, k: i64) -> i64 {
        if k < 0 {
            return 0;
        }
        self.0.get(k as usize).copied().unwrap_or(0)
    }

    pub fn truncated(&self, upto: usize) -> GVector {
        GVector(self.0.iter().take(upto + 1).copied().collect())
    }
}

pub fn h_from_f(f: &FVector) -> HVector {
    let top = f.dim as i64 + 1;
    HVector((0..=top).map(|k| (0..=k).map(|i| sign(k - i) * binom(top - i, top - k) * f.get(i - 1)).sum()).collect())
}

/// Inverse of [`h_from_f`]: `f_{k-1} = sum_i C(dim+1-i, dim+1-k) h_i`.
pub fn f_from_h(h: &HVector) -> FVector {
    let top = h.0.len() as i64 - 1;
    let f: Vec<i64> = (0..=top).map(|k| (0..=k).map(|i| binom(top - i, top - k) * h.get(i)).sum()).collect();
    FVector { dim: (top - 1) as usize, empty: f[0], counts: f[1..].to_vec() }
}

pub fn g_from_h(h: &HVector) -> GVector {
    GVector((0..h.0.len() as i64).map(|k| if k == 0 { 1 } else { h.get(k) - h.get(k - 1) }).collect())
}

fn sign(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// f-vectors of a triangulated `(n-1)`-ball, its boundary sphere and its interior faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallVectors {
    pub total: FVector,
    pub boundary: FVector,
    pub interior: FVector,
}

impl BallVectors {
    /// Number of points: the ball has dimension `n - 1`.
    pub fn n(&self) -> usize {
        self.total.dim + 1
    }

    pub fn from_counts(total: &[i64], boundary: &[i64]) -> Self {
        let dim = total.len() - 1;
        let total = FVector::new(dim, total);
        let boundary = FVector::new(dim - 1, &boundary[..dim.min(boundary.len())]);
        let inner: Vec<i64> = (0..=dim as i64).map(|k| total.get(k) - boundary.get(k)).collect();
        let interior = FVector::with_empty(dim, 0, &inner);
        BallVectors { total, boundary, interior }
    }
}

pub fn split_interior_boundary(faces: &FaceSet) -> BallVectors {
    let pad = |mut v: Vec<u64>| {
        v.resize(faces.n, 0);
        v.into_iter().map(|x| x as i64).collect::<Vec<i64>>()
    };
    let total = pad(faces.counts(|_| true));
    let boundary = pad(faces.counts(|f| !f.interior));
    BallVectors::from_counts(&total, &boundary)
}

/// `h_k = h_{len-1-k}`.
pub fn check_symmetric(h: &HVector) -> Verdict {
    let m = h.0.len();
    match (0..m).find(|&k| h.0[k] != h.0[m - 1 - k]) {
        Some(k) => Verdict::fail(format!("h_{k} = {} but h_{} = {} in {:?}", h.0[k], m - 1 - k, h.0[m - 1 - k], h.0)),
        None => Verdict::pass(),
    }
}

/// Dehn-Sommerville equations for a sphere given by its f-vector.
pub fn check_dehn_sommerville(f_boundary: &FVector) -> Verdict {
    check_symmetric(&h_from_f(f_boundary))
}

/// `g_k(boundary) = h_k(B) - h_{n-k}(B)` and `h_{n-k}(B) = h_k(interior)` for
/// all `0 <= k <= n`.
pub fn check_ball_relations(b: &BallVectors) -> Verdict {
    let n = b.n() as i64;
    let hb = h_from_f(&b.total);
    let hi = h_from_f(&b.interior);
    // pad the sphere's h-vector so that g runs through index n
    let mut hd = h_from_f(&b.boundary);
    hd.0.push(0);
    let g = g_from_h(&hd);
    let mut v = Verdict::pass();
    for k in 0..=n {
        let gk = g.get(k);
        v = v.and(Verdict::check(gk == hb.get(k) - hb.get(n - k), || {
            format!("g_{k}(boundary) = {gk} but h_{k}(B) - h_{}(B) = {}", n - k, hb.get(k) - hb.get(n - k))
        }));
        v = v.and(Verdict::check(hb.get(n - k) == hi.get(k), || {
            format!("h_{}(B) = {} but h_{k}(interior) = {}", n - k, hb.get(n - k), hi.get(k))
        }));
    }
    v
}

/// The almost-small-face-free report of a triangulated `(n-1)`-ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsffReport {
    /// No interior faces of dimension below `floor((n-1)/2)`.
    pub no_small_interior: Verdict,
    /// Vanishing of `h_k(B)` for `k >= n-e-1` and `h_k(B) = g_k(boundary)` for `k <= e+1`.
    pub h_vanishing: Verdict,
    /// Interior faces of dimension `ceil(n/2) - 1`.
    pub top_interior: i64,
    /// 1 for even `n`, `n` for odd `n`.
    pub top_cap: i64,
    pub cap: Verdict,
    /// Odd `n` only: the tight-span face numbers recomputed from `g(boundary)`.
    pub from_boundary: Option<Verdict>,
    pub min_interior_dim: Option<usize>,
}

impl AsffReport {
    pub fn verdict(&self) -> Verdict {
        let v = self.no_small_interior.clone().and(self.h_vanishing.clone()).and(self.cap.clone());
        match &self.from_boundary {
            Some(w) => v.and(w.clone()),
            None => v,
        }
    }

    pub fn cap_attained(&self) -> bool {
        self.top_interior == self.top_cap
    }
}

pub fn check_asff(b: &BallVectors) -> AsffReport {
    let n = b.n() as i64;
    let small = (n - 1) / 2;
    let e = small - 1;
    let min_interior_dim = (0..=b.interior.dim).find(|&k| b.interior.counts[k] != 0);
    let no_small_interior = match (0..small).find(|&k| b.interior.get(k) != 0) {
        Some(k) => Verdict::fail(format!("{} interior faces of dimension {k}", b.interior.get(k))),
        None => Verdict::pass(),
    };
    let h = h_from_f(&b.total);
    let g = g_from_h(&h_from_f(&b.boundary));
    let mut h_vanishing = Verdict::pass();
    for k in 0..=n {
        if k >= n - e - 1 {
            h_vanishing = h_vanishing.and(Verdict::check(h.get(k) == 0, || format!("h_{k}(B) = {} != 0", h.get(k))));
        }
        if k <= e + 1 {
            h_vanishing = h_vanishing.and(Verdict::check(h.get(k) == g.get(k), || {
                format!("h_{k}(B) = {} but g_{k}(boundary) = {}", h.get(k), g.get(k))
            }));
        }
    }
    let top_interior = b.interior.get((n + 1) / 2 - 1);
    let top_cap = if n % 2 == 0 { 1 } else { n };
    let cap = Verdict::check(top_interior <= top_cap, || {
        format!("{top_interior} interior faces of dimension {}, cap {top_cap}", (n + 1) / 2 - 1)
    });
    let from_boundary = (n % 2 == 1).then(|| {
        let mut v = Verdict::pass();
        for k in 0..=(n - 1) / 2 {
            let predicted: i64 = (k..=(n - 1) / 2).map(|i| binom(i, k) * g.get(i)).sum();
            let actual = b.interior.get(n - k - 1);
            v = v.and(Verdict::check(predicted == actual, || {
                format!("f_{}(interior) = {actual} but the boundary predicts {predicted}", n - k - 1)
            }));
        }
        v
    });
    AsffReport { no_small_interior, h_vanishing, top_interior, top_cap, cap, from_boundary, min_interior_dim }
}

/// Face numbers of the tight span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightSpanVectors {
    #[serde(rename = "fT")]
    pub ft: Vec<i64>,
    #[serde(rename = "hT")]
    pub ht: Vec<i64>,
    pub glued: NodeSet,
    #[serde(rename = "ideal_fT")]
    pub ideal_ft: Vec<i64>,
    #[serde(rename = "ideal_hT")]
    pub ideal_ht: Vec<i64>,
}

impl TightSpanVectors {
    pub fn dim(&self) -> usize {
        self.ft.len() - 1
    }
}

/// `h_j = sum_{k >= j} (-1)^{k-j} C(k,j) f_k`, inverting `f_k = sum_i C(i,k) h_i`.
pub fn h_from_bounded_f(f: &[i64]) -> Vec<i64> {
    (0..f.len() as i64).map(|j| (j..f.len() as i64).map(|k| sign(k - j) * binom(k, j) * f[k as usize]).sum()).collect()
}

/// `f_k = sum_{i >= k} C(i,k) h_i`.
pub fn f_from_bounded_h(h: &[i64]) -> Vec<i64> {
    (0..h.len() as i64).map(|k| (k..h.len() as i64).map(|i| binom(i, k) * h[i as usize]).sum()).collect()
}

/// Bounded faces of dimension `k` correspond to interior faces of dimension
/// `n-1-k`; every node with only strict triangles adds one glued simplex,
/// contributing one vertex and one edge.
pub fn tightspan_from_interior(d: &Metric, interior: &FVector) -> TightSpanVectors {
    let n = d.n() as i64;
    let mut ideal_ft: Vec<i64> = (0..n).map(|k| interior.get(n - k - 1)).collect();
    while ideal_ft.len() > 1 && ideal_ft.last() == Some(&0) {
        ideal_ft.pop();
    }
    let glued = strict_triangle_nodes(d);
    let mut ft = ideal_ft.clone();
    let extra = glued.len() as i64;
    ft[0] += extra;
    if ft.len() > 1 {
        ft[1] += extra;
    } else if extra > 0 {
        ft.push(extra);
    }
    TightSpanVectors { ht: h_from_bounded_f(&ft), ideal_ht: h_from_bounded_f(&ideal_ft), ft, glued, ideal_ft }
}

pub fn tightspan_vectors(d: &Metric, s: &Subdivision) -> Result<TightSpanVectors> {
    if !s.generic {
        return Err(Error::NotGeneric("the subdivision is not a triangulation".into()));
    }
    let faces = all_faces(s)?;
    Ok(tightspan_from_interior(d, &split_interior_boundary(&faces).interior))
}

/// f-vectors of the triangulations induced on node subsets of each size
/// `0..=n-1`, provided all subsets of a size agree.
pub fn restriction_f_vectors(faces: &FaceSet) -> Result<Vec<FVector>> {
    let n = faces.n;
    let mut by_size: Vec<Option<(NodeSet, Vec<i64>)>> = vec![None; n];
    for mask in 0u32..(1 << n) - 1 {
        let s = NodeSet(mask);
        let size = s.len();
        let mut counts: Vec<i64> = faces.counts_within(s).into_iter().map(|x| x as i64).collect();
        counts.resize(size.max(1), 0);
        match &by_size[size] {
            None => by_size[size] = Some((s, counts)),
            Some((first, c)) if *c != counts => {
                return Err(Error::InapplicablePremise(format!(
                    "restrictions to {first} and {s} have f-vectors {c:?} and {counts:?}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(by_size
        .into_iter()
        .enumerate()
        .map(|(size, e)| {
            let counts = e.expect("every size occurs").1;
            FVector::new(size.saturating_sub(1), &counts[..size.max(1)])
        })
        .collect())
}

/// h-vector of the common triangulation on `size` nodes, indexed as a
/// `(size-1)`-dimensional complex even for `size <= 2`.
fn restriction_h(f: &FVector, size: usize) -> impl Fn(i64) -> i64 + '_ {
    let top = size as i64;
    move |q: i64| {
        if q < 0 {
            return 0;
        }
        (0..=q).map(|i| sign(q - i) * binom(top - i, top - q) * f.get(i - 1)).sum()
    }
}

/// The boundary f- and g-vectors of a triangulated hypersimplex are fixed by
/// the common triangulations of its hypersimplex faces.
pub fn check_inductive_step_on(faces: &FaceSet) -> Result<Verdict> {
    let n = faces.n;
    if n < 5 {
        return Err(Error::PreconditionViolated(format!("needs n >= 5, got {n}")));
    }
    let restr = restriction_f_vectors(faces)?;
    let ball = split_interior_boundary(faces);
    let fb = &ball.boundary;
    let ni = n as i64;
    // f^{(m)} lives on m+1 nodes
    let fr = |m: i64, k: i64| {
        if m + 1 < 0 {
            0
        } else {
            restr[(m + 1) as usize].get(k)
        }
    };

    let mut v = Verdict::pass();
    let top = ni + ni * fr(ni - 2, ni - 2);
    v = v.and(Verdict::check(fb.get(ni - 2) == top, || {
        format!("f_{}(boundary) = {} but n + n f^(n-2)_(n-2) = {top}", ni - 2, fb.get(ni - 2))
    }));
    for k in 0..ni - 2 {
        let sum: i64 = (1..=ni - 1 - k).map(|i| sign(i - 1) * binom(ni, i) * fr(ni - 1 - i, k)).sum();
        v = v.and(Verdict::check(fb.get(k) == sum, || {
            format!("f_{k}(boundary) = {} but the inclusion-exclusion sum is {sum}", fb.get(k))
        }));
    }

    let g = g_from_h(&h_from_f(fb));
    for k in 0..=ni / 2 {
        let mut sum = 0i64;
        for i in 1..=ni {
            let size = (ni - i) as usize;
            let h = restriction_h(&restr[size], size);
            for j in 0..=i.min(k) {
                sum += sign(i + j - 1) * binom(ni, i) * binom(i, j) * h(k - j);
            }
        }
        v = v.and(Verdict::check(g.get(k) == sum, || {
            format!("g_{k}(boundary) = {} but the restriction formula gives {sum}", g.get(k))
        }));
    }
    Ok(v)
}

pub fn check_inductive_step(d: &Metric) -> Result<Verdict> {
    let s = crate::dual::enumerate_cells(d, d.n().max(crate::dual::ENUMERATION_THRESHOLD))?;
    check_inductive_step_on(&all_faces(&s)?)
}

pub fn ball_json(b: &BallVectors) -> Value {
    let hb = h_from_f(&b.total);
    let hd = h_from_f(&b.boundary);
    json!({
        "f": b.total.counts,
        "h": hb.0,
        "g": g_from_h(&hb).0,
        "f_boundary": b.boundary.counts,
        "h_boundary": hd.0,
        "g_boundary": g_from_h(&hd).0,
        "f_interior": b.interior.counts,
        "h_interior": h_from_f(&b.interior).0,
    })
}
