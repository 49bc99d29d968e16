//! Height certificates for candidate cells.
//!
//! For a spanning graph whose components are odd-unicyclic, the equations
//! `lambda_i + lambda_j = d(i,j)` on its edges have a unique solution. The
//! graph is a cell iff that solution is strictly above `d` on every non-edge.
//!
//! The hot path works in integers: with `L` the lcm of all denominators,
//! `D = L d` and `Lam = 2 L lambda` satisfy `Lam_i + Lam_j = 2 D_ij`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{self, edge_index, edge_pairs, EdgeGraph};
use crate::metric::Metric;
use crate::rational::{self, Rational};

/// Maximal cell: a graph with its strict height certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub graph: EdgeGraph,
    pub lambda: Vec<Rational>,
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.graph.cmp(&other.graph)
    }
}

impl Cell {
    pub fn volume(&self) -> u64 {
        graph::cell_volume(&self.graph).expect("cells are odd-unicyclic and spanning")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "edges": self.graph.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
            "lambda": self.lambda.iter().map(rational::format).collect::<Vec<_>>(),
            "volume": self.volume(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Cell(Cell),
    /// All non-edge inequalities hold, but `non_edge` is tight.
    Degenerate {
        graph: EdgeGraph,
        non_edge: (usize, usize),
        lambda: Vec<Rational>,
    },
    /// `lambda_v + lambda_w < d(v,w)` on `non_edge`.
    NotACell {
        graph: EdgeGraph,
        non_edge: (usize, usize),
    },
}

/// Metric scaled to integers, shared by all candidate checks.
#[derive(Clone, Debug)]
pub struct ScaledMetric {
    n: usize,
    scale: BigInt,
    /// `2 L d(i,j)` in edge-index order.
    twice: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Scaled {
    Strict(Vec<BigInt>),
    Tight(Vec<BigInt>, (usize, usize)),
    Violated((usize, usize)),
}

impl ScaledMetric {
    pub fn new(d: &Metric) -> Self {
        let scale = d.upper().iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let twice = d.upper().iter().map(|x| (x.numer() * (&scale / x.denom())) << 1).collect();
        ScaledMetric { n: d.n(), scale, twice }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn twice_d(&self, i: usize, j: usize) -> &BigInt {
        &self.twice[edge_index(self.n, i, j)]
    }

    pub(crate) fn unscale(&self, lam: &[BigInt]) -> Vec<Rational> {
        let den: BigInt = &self.scale << 1;
        lam.iter().map(|x| Rational::new(x.clone(), den.clone())).collect()
    }

    /// Solves the edge equations of an odd-unicyclic spanning graph. Returns
    /// `None` if a component has no odd cycle to pin it.
    pub(crate) fn heights(&self, g: &EdgeGraph) -> Option<Vec<BigInt>> {
        let n = self.n;
        let mut adj = [[0usize; graph::MAX_NODES]; graph::MAX_NODES + 1];
        let mut deg = [0usize; graph::MAX_NODES + 1];
        for (i, j) in g.edges() {
            adj[i][deg[i]] = j;
            deg[i] += 1;
            adj[j][deg[j]] = i;
            deg[j] += 1;
        }
        // Lam_x = sign[x] * T + off[x] along a BFS tree per component.
        let mut sign = [0i8; graph::MAX_NODES + 1];
        let mut off: Vec<BigInt> = vec![BigInt::zero(); n + 1];
        let mut lam: Vec<BigInt> = vec![BigInt::zero(); n];
        let mut queue = [0usize; graph::MAX_NODES];
        for root in 1..=n {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            let (mut head, mut tail) = (0, 0);
            queue[tail] = root;
            tail += 1;
            let mut t: Option<BigInt> = None;
            while head < tail {
                let u = queue[head];
                head += 1;
                for &v in &adj[u][..deg[u]] {
                    if sign[v] == 0 {
                        sign[v] = -sign[u];
                        off[v] = self.twice_d(u, v) - &off[u];
                        queue[tail] = v;
                        tail += 1;
                    } else if sign[v] == sign[u] && t.is_none() {
                        // Closing edge of the odd cycle: 2 s_u T = 2D_uv - C_u - C_v.
                        let rhs = self.twice_d(u, v) - &off[u] - &off[v];
                        let half = rhs >> 1;
                        t = Some(if sign[u] > 0 { half } else { -half });
                    }
                }
            }
            let t = t?;
            for &x in &queue[..tail] {
                lam[x - 1] = if sign[x] > 0 { &t + &off[x] } else { &off[x] - &t };
            }
        }
        Some(lam)
    }

    pub(crate) fn classify(&self, g: &EdgeGraph) -> Option<Scaled> {
        let lam = self.heights(g)?;
        let mut tight = None;
        for (e, &(i, j)) in edge_pairs(self.n).iter().enumerate() {
            if g.bits() >> e & 1 == 1 {
                continue;
            }
            let s = &lam[i - 1] + &lam[j - 1];
            match s.cmp(&self.twice[e]) {
                std::cmp::Ordering::Less => return Some(Scaled::Violated((i, j))),
                std::cmp::Ordering::Equal if tight.is_none() => tight = Some((i, j)),
                _ => {}
            }
        }
        Some(match tight {
            None => Scaled::Strict(lam),
            Some(f) => Scaled::Tight(lam, f),
        })
    }

    pub fn certificate(&self, g: &EdgeGraph) -> Result<Certificate> {
        if !graph::is_odd_unicyclic_spanning(g) {
            return Err(Error::PreconditionViolated(format!(
                "{g} is not a spanning graph with odd-unicyclic components"
            )));
        }
        let outcome = self.classify(g).expect("odd cycles pin every component");
        Ok(match outcome {
            Scaled::Strict(lam) => Certificate::Cell(Cell { graph: *g, lambda: self.unscale(&lam) }),
            Scaled::Tight(lam, non_edge) => Certificate::Degenerate { graph: *g, non_edge, lambda: self.unscale(&lam) },
            Scaled::Violated(non_edge) => Certificate::NotACell { graph: *g, non_edge },
        })
    }
}

pub fn lambda_certificate(d: &Metric, g: &EdgeGraph) -> Result<Certificate> {
    if d.n() != g.n() {
        return Err(Error::PreconditionViolated("metric and graph sizes differ".into()));
    }
    ScaledMetric::new(d).certificate(g)
}
