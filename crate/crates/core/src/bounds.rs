//! Closed-form face-number bounds for tight spans, the binomial identities
//! behind them, and checks of computed tight spans against the bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fvec::{binom, TightSpanVectors};
use crate::metric::Metric;
use crate::verdict::Verdict;

fn check_k(n: usize, k: usize) -> Result<()> {
    if n < 2 || k > n / 2 {
        return Err(Error::OutOfRange(format!("k = {k} outside 0..={} for n = {n}", n / 2)));
    }
    Ok(())
}

/// Maximal number of `k`-faces of a tight span on `n` points:
/// `2^(n-2k-1) * n / (n-k) * C(n-k, k)`.
pub fn f_bound(n: usize, k: usize) -> Result<u64> {
    check_k(n, k)?;
    let c = binom((n - k) as i64, k as i64) as u128;
    let (mut num, mut den) = (n as u128 * c, (n - k) as u128);
    let e = n as i64 - 2 * k as i64 - 1;
    if e >= 0 {
        num <<= e;
    } else {
        den <<= -e;
    }
    assert!(num % den == 0, "F({n},{k}) = {num}/{den} is not integral");
    Ok((num / den) as u64)
}

/// `C(n, 2k)`, less `n` at `k = 1` for ideal metrics.
pub fn h_bound(n: usize, k: usize, ideal: bool) -> Result<u64> {
    check_k(n, k)?;
    let c = binom(n as i64, 2 * k as i64) as u64;
    Ok(if ideal && k == 1 { c - n as u64 } else { c })
}

/// Minimal number of top faces of a tight span of dimension `ceil(n/3)`.
pub fn lower_bound_top(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::BadArity(n));
    }
    let k = (n / 3) as u32;
    Ok(match n % 3 {
        0 => n as u64 * 3u64.pow(k - 2) + 3u64.pow(k),
        1 => 3u64.pow(k - 1),
        _ => 5 * 3u64.pow(k - 1),
    })
}

/// `sum_{i=1}^n (-1)^{i+k} C(n,i) C(i,k-1) (n-i)`.
pub fn main_a_sum(n: i64, k: i64) -> i64 {
    (1..=n).map(|i| sign(i + k) * binom(n, i) * binom(i, k - 1) * (n - i)).sum()
}

/// `sum_{i=j}^n (-1)^{i+j-1} C(n,i) C(i,j) C(n-i, 2(k-j))`.
pub fn main_b_sum(n: i64, k: i64, j: i64) -> i64 {
    (j..=n).map(|i| sign(i + j - 1) * binom(n, i) * binom(i, j) * binom(n - i, 2 * (k - j))).sum()
}

/// Exact value of [`main_a_sum`]: `n` at `k = 1`, zero elsewhere, except for
/// the extra `-n` contributed by the term `i = n - 1` when `k = n`.
pub fn main_a_value(n: i64, k: i64) -> i64 {
    let mut v = 0;
    if k == 1 {
        v += n;
    }
    if k == n {
        v -= n;
    }
    v
}

/// Exact value of [`main_b_sum`]: zero, except `-C(n,j)` when `n = 2k - j`
/// (the alternating binomial sum then has a single term).
pub fn main_b_value(n: i64, k: i64, j: i64) -> i64 {
    if n == 2 * k - j {
        -binom(n, j)
    } else {
        0
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Both binomial identities for `1 <= n <= n_max`, `0 <= j <= k <= n`.
pub fn identity_checks(n_max: usize) -> Verdict {
    let n_max = n_max as i64;
    for n in 1..=n_max {
        for k in 0..=n {
            let a = main_a_sum(n, k);
            if a != main_a_value(n, k) {
                return Verdict::fail(format!("first identity at n = {n}, k = {k}: sum {a}"));
            }
            for j in 0..=k {
                let b = main_b_sum(n, k, j);
                if b != main_b_value(n, k, j) {
                    return Verdict::fail(format!("second identity at n = {n}, k = {k}, j = {j}: sum {b}"));
                }
            }
        }
    }
    Verdict::pass()
}

/// `(n, k)` pairs and `(n, k, j)` triples.
pub type BoundaryCases = (Vec<(i64, i64)>, Vec<(i64, i64, i64)>);

/// Index triples where the sums differ from the plain right-hand sides
/// `n delta_{1k}` and `0`.
pub fn identity_boundary_cases(n_max: usize) -> BoundaryCases {
    let n_max = n_max as i64;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            if main_a_sum(n, k) != if k == 1 { n } else { 0 } {
                a.push((n, k));
            }
            for j in 0..=k {
                if main_b_sum(n, k, j) != 0 {
                    b.push((n, k, j));
                }
            }
        }
    }
    (a, b)
}

/// `F(n,k) = 2 F(n-1,k) + F(n-2,k-1)`, the h-sum form `sum_i C(i,k) C(n,2i)`
/// and `F(n,0) = 2^(n-1)`, for `4 <= n <= n_max`.
pub fn recursion_checks(n_max: usize) -> Verdict {
    let f = |n: usize, k: usize| f_bound(n, k).unwrap_or(0) as i64;
    for n in 4..=n_max {
        if f(n, 0) != 1 << (n - 1) {
            return Verdict::fail(format!("F({n},0) = {}", f(n, 0)));
        }
        for k in 0..=n / 2 {
            if k >= 1 && f(n, k) != 2 * f(n - 1, k) + f(n - 2, k - 1) {
                return Verdict::fail(format!("recursion fails at n = {n}, k = {k}"));
            }
            let hsum: i64 = (k..=n / 2).map(|i| binom(i as i64, k as i64) * binom(n as i64, 2 * i as i64)).sum();
            if f(n, k) != hsum {
                return Verdict::fail(format!("F({n},{k}) = {} but the h-sum is {hsum}", f(n, k)));
            }
        }
        let top = lower_bound_top(n).expect("n >= 4");
        if top > f(n, n.div_ceil(3)) as u64 {
            return Verdict::fail(format!("lower bound {top} exceeds F({n},{})", n.div_ceil(3)));
        }
    }
    Verdict::pass()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub dim: usize,
    pub dim_window: (usize, usize),
    pub f_bound: Vec<u64>,
    pub f_attained: Vec<bool>,
    pub h_bound: Vec<u64>,
    pub h_attained: Vec<bool>,
    /// Top-face count against the lower bound, when the dimension is `ceil(n/3)`.
    pub lower_bound_top: Option<(u64, u64)>,
}

impl BoundReport {
    pub fn all_attained(&self) -> bool {
        self.f_attained.iter().all(|&a| a) && self.h_attained.iter().all(|&a| a)
    }
}

pub fn verify_metric_against_bounds(d: &Metric, tv: &TightSpanVectors) -> Result<BoundReport> {
    let n = d.n();
    let dim = tv.dim();
    let window = (n.div_ceil(3), n / 2);
    if dim < window.0 || dim > window.1 {
        return Err(Error::BoundViolated(format!("dimension {dim} outside {}..={}", window.0, window.1)));
    }
    let mut f_b = Vec::new();
    let mut f_att = Vec::new();
    let mut h_b = Vec::new();
    let mut h_att = Vec::new();
    for k in 0..=dim {
        let fb = f_bound(n, k)?;
        let fk = tv.ft[k] as u64;
        if fk > fb {
            return Err(Error::BoundViolated(format!("f_{k} = {fk} > {fb}")));
        }
        let hb = h_bound(n, k, false)?;
        let hk = tv.ht[k];
        if hk < 0 || hk as u64 > hb {
            return Err(Error::BoundViolated(format!("h_{k} = {hk} outside 0..={hb}")));
        }
        let ib = h_bound(n, k, true)?;
        let ik = tv.ideal_ht[k];
        if ik < 0 || ik as u64 > ib {
            return Err(Error::BoundViolated(format!("ideal h_{k} = {ik} outside 0..={ib}")));
        }
        f_b.push(fb);
        f_att.push(fk == fb);
        h_b.push(hb);
        h_att.push(hk as u64 == hb);
    }
    let lower = if dim == window.0 {
        let lb = lower_bound_top(n)?;
        let top = tv.ft[dim] as u64;
        if top < lb {
            return Err(Error::BoundViolated(format!("{top} top faces, lower bound {lb}")));
        }
        Some((lb, top))
    } else {
        None
    };
    Ok(BoundReport {
        n,
        dim,
        dim_window: window,
        f_bound: f_b,
        f_attained: f_att,
        h_bound: h_b,
        h_attained: h_att,
        lower_bound_top: lower,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "F")]
    pub f: u64,
    #[serde(rename = "H")]
    pub h: u64,
    #[serde(rename = "H_ideal")]
    pub h_ideal: u64,
    /// Only in the row `k = ceil(n/3)`.
    pub lower_bound_top: Option<u64>,
}

/// Bound values for `max(n_min, 4)..=n_max`, one row per `(n, k)`.
pub fn bound_table(n_min: usize, n_max: usize) -> Vec<BoundRow> {
    let mut rows = Vec::new();
    for n in n_min.max(4)..=n_max {
        for k in 0..=n / 2 {
            rows.push(BoundRow {
                n,
                k,
                f: f_bound(n, k).expect("k in range"),
                h: h_bound(n, k, false).expect("k in range"),
                h_ideal: h_bound(n, k, true).expect("k in range"),
                lower_bound_top: (k == n.div_ceil(3)).then(|| lower_bound_top(n).expect("n >= 4")),
            });
        }
    }
    rows
}

pub fn bound_table_text(n_min: usize, n_max: usize) -> String {
    let mut out = format!("{:>3} {:>3} {:>12} {:>10} {:>10} {:>8}\n", "n", "k", "F", "H", "H_ideal", "lower");
    for r in bound_table(n_min, n_max) {
        let lower = r.lower_bound_top.map_or("-".to_string(), |v| v.to_string());
        out += &format!("{:>3} {:>3} {:>12} {:>10} {:>10} {:>8}\n", r.n, r.k, r.f, r.h, r.h_ideal, lower);
    }
    out
}
