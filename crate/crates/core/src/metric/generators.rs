//! The extremal metric families and a seeded random family, behind a
//! name-keyed registry.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Metric;
use crate::error::{Error, Result};
use crate::graph::{edge_pairs, EdgeGraph, MAX_NODES};
use crate::rational::{frac, int, Rational};
use crate::registry::{Named, Registry};

fn check_arity(n: usize) -> Result<()> {
    if (3..=MAX_NODES).contains(&n) {
        Ok(())
    } else {
        Err(Error::BadArity(n))
    }
}

fn dmax_entry(n: usize, i: usize, j: usize) -> Rational {
    int(1) + frac(1, (n * n + i * n + j) as i64)
}

/// `1 + 1/(n^2 + i n + j)` for `i < j`.
pub fn gen_dmax(n: usize) -> Result<Metric> {
    check_arity(n)?;
    let upper = edge_pairs(n).iter().map(|&(i, j)| dmax_entry(n, i, j)).collect();
    Metric::from_upper(n, upper)
}

/// 2 on the edges of `g`, the `dmax` value elsewhere.
pub fn gen_dgamma(n: usize, g: &EdgeGraph) -> Result<Metric> {
    check_arity(n)?;
    if g.n() != n {
        return Err(Error::NodeOutOfRange { node: g.n(), n });
    }
    let upper =
        edge_pairs(n).iter().map(|&(i, j)| if g.contains(i, j) { int(2) } else { dmax_entry(n, i, j) }).collect();
    Metric::from_upper(n, upper)
}

/// Disjoint triangles on `{1,2,3}, {4,5,6}, ...`; leftover nodes stay isolated.
pub fn gamma_min(n: usize) -> EdgeGraph {
    let mut g = EdgeGraph::empty(n);
    for &(i, j) in edge_pairs(n) {
        let same_group = (i - 1) / 3 == (j - 1) / 3;
        let allowed = n % 3 != 2 || (i < n && j < n);
        if same_group && allowed {
            g.insert(i, j);
        }
    }
    g
}

pub fn gen_dmin(n: usize) -> Result<Metric> {
    check_arity(n)?;
    gen_dgamma(n, &gamma_min(n))
}

/// Entries `1 + k/resolution` with `k` uniform in `[1, resolution/n]`, drawn
/// from a ChaCha stream keyed by `seed`. All entries lie in `(1, 2)`, so the
/// triangle inequality always holds.
pub fn gen_random(n: usize, seed: u64, resolution: u64) -> Result<Metric> {
    check_arity(n)?;
    let max_k = resolution / n as u64;
    if max_k == 0 {
        return Err(Error::PreconditionViolated(format!("resolution {resolution} is smaller than n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let den = BigInt::from(resolution);
    let upper = (0..crate::graph::edge_count(n))
        .map(|_| {
            let k = rng.random_range(1..=max_k);
            int(1) + Rational::new(BigInt::from(k), den.clone())
        })
        .collect();
    Metric::from_upper(n, upper)
}

/// Resolution used when none is given: `n^4`.
pub fn default_resolution(n: usize) -> u64 {
    (n as u64).pow(4)
}

#[derive(Clone, Debug, Default)]
pub struct GenParams {
    pub n: usize,
    pub graph: Option<EdgeGraph>,
    pub seed: u64,
    pub resolution: Option<u64>,
}

pub trait MetricGenerator: Named + Send + Sync {
    fn generate(&self, params: &GenParams) -> Result<Metric>;
}

struct Dmax;
struct Dmin;
struct Dgamma;
struct RandomUnit;

impl Named for Dmax {
    fn name(&self) -> &'static str {
        "dmax"
    }
}
impl MetricGenerator for Dmax {
    fn generate(&self, p: &GenParams) -> Result<Metric> {
        gen_dmax(p.n)
    }
}

impl Named for Dmin {
    fn name(&self) -> &'static str {
        "dmin"
    }
}
impl MetricGenerator for Dmin {
    fn generate(&self, p: &GenParams) -> Result<Metric> {
        gen_dmin(p.n)
    }
}

impl Named for Dgamma {
    fn name(&self) -> &'static str {
        "dgamma"
    }
}
impl MetricGenerator for Dgamma {
    fn generate(&self, p: &GenParams) -> Result<Metric> {
        let g = p.graph.as_ref().ok_or_else(|| Error::PreconditionViolated("dgamma needs a graph".into()))?;
        gen_dgamma(p.n, g)
    }
}

impl Named for RandomUnit {
    fn name(&self) -> &'static str {
        "random"
    }
}
impl MetricGenerator for RandomUnit {
    fn generate(&self, p: &GenParams) -> Result<Metric> {
        gen_random(p.n, p.seed, p.resolution.unwrap_or_else(|| default_resolution(p.n)))
    }
}

pub fn generators() -> Registry<dyn MetricGenerator> {
    let mut r: Registry<dyn MetricGenerator> = Registry::new("metric generator");
    r.register(Box::new(Dmax)).register(Box::new(Dmin)).register(Box::new(Dgamma)).register(Box::new(RandomUnit));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeSet;
    use crate::metric::{check_dmax_property, strict_triangle_nodes, submetric};

    #[test]
    fn dmax_values() {
        let d = gen_dmax(4).unwrap();
        assert_eq!(d.get(1, 2), frac(23, 22));
        assert_eq!(d.get(3, 4), frac(33, 32));
        assert_eq!(d.get(2, 3), frac(28, 27));
    }

    #[test]
    fn dmax_is_a_metric_with_the_monotonicity_property() {
        for n in 3..=8 {
            let d = gen_dmax(n).unwrap();
            assert!(d.satisfies_triangle(), "n = {n}");
            if n >= 4 {
                assert!(check_dmax_property(&d).pass, "n = {n}");
            }
            let mut seen = d.upper().to_vec();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), d.upper().len(), "entries of dmax({n}) repeat");
        }
        for n in 4..=7 {
            assert_eq!(strict_triangle_nodes(&gen_dmax(n).unwrap()), NodeSet::full(n));
        }
    }

    #[test]
    fn dmax_submetrics_keep_the_property() {
        for n in 4..=7 {
            let d = gen_dmax(n).unwrap();
            for mask in 0u32..1 << n {
                if mask.count_ones() >= 3 {
                    let s = submetric(&d, NodeSet(mask)).unwrap();
                    assert!(check_dmax_property(&s).pass, "n = {n}, subset {mask:b}");
                }
            }
        }
    }

    #[test]
    fn dgamma_values() {
        assert_eq!(gen_dgamma(5, &EdgeGraph::empty(5)).unwrap(), gen_dmax(5).unwrap());
        let tri = EdgeGraph::from_cycle(6, &[1, 2, 3, 1]).unwrap();
        let d = gen_dgamma(6, &tri).unwrap();
        assert_eq!(d.get(1, 2), int(2));
        assert_eq!(d.get(1, 4), frac(47, 46));
        let d = gen_dgamma(3, &EdgeGraph::complete(3)).unwrap();
        assert!(d.upper().iter().all(|x| *x == int(2)));
    }

    #[test]
    fn gamma_min_shapes() {
        let tri = |n, c: &[usize]| EdgeGraph::from_cycle(n, c).unwrap();
        let t6 = tri(6, &[1, 2, 3, 1]).bits() | tri(6, &[4, 5, 6, 4]).bits();
        assert_eq!(gamma_min(6).bits(), t6);
        assert_eq!(gamma_min(5), tri(5, &[1, 2, 3, 1]));
        let t7 = tri(7, &[1, 2, 3, 1]).bits() | tri(7, &[4, 5, 6, 4]).bits();
        assert_eq!(gamma_min(7).bits(), t7);
        let t8 = tri(8, &[1, 2, 3, 1]).bits() | tri(8, &[4, 5, 6, 4]).bits();
        assert_eq!(gamma_min(8).bits(), t8);
    }

    #[test]
    fn dmin_breaks_the_monotonicity_property() {
        assert!(!check_dmax_property(&gen_dmin(6).unwrap()).pass);
    }

    #[test]
    fn random_is_deterministic_and_metric() {
        let a = gen_random(6, 3, default_resolution(6)).unwrap();
        let b = gen_random(6, 3, default_resolution(6)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gen_random(6, 4, default_resolution(6)).unwrap());
        assert!(gen_random(5, 1, 10000).unwrap().satisfies_triangle());
        let one_over_n = frac(1, 6);
        assert!(a.upper().iter().all(|x| *x > int(1) && *x <= int(1) + one_over_n.clone()));
    }

    #[test]
    fn registry_dispatch() {
        let r = generators();
        assert_eq!(r.names(), vec!["dgamma", "dmax", "dmin", "random"]);
        let p = GenParams { n: 5, ..Default::default() };
        assert_eq!(r.get("dmax").unwrap().generate(&p).unwrap(), gen_dmax(5).unwrap());
        assert!(r.get("dgamma").unwrap().generate(&p).is_err());
        assert!(r.get("nope").is_err());
    }
}
