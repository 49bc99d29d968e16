//! Dense two-phase primal simplex over exact rationals.
//!
//! Problems are in equality standard form `max c.y` subject to `A y = b`,
//! `y >= 0`. Pivoting follows Bland's rule (lowest-index improving column,
//! ratio ties broken by lowest basic index), so the method terminates and is
//! fully deterministic.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardLp {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<Rational>,
    pub value: Rational,
    /// Optimal dual `y` with `y A >= c` and `y b = value`.
    pub dual: Vec<Rational>,
    /// Reduced costs `c_j - y A_j`; zero on basic columns, nonpositive elsewhere.
    pub reduced_costs: Vec<Rational>,
    pub basis: Vec<usize>,
    /// True iff every nonbasic column has strictly negative reduced cost.
    pub unique: bool,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Number of structural columns; artificial column of row `i` is `cols + i`.
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, q: usize) {
        let p = self.rows[r][q].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut() {
                *x /= &p;
            }
            self.rhs[r] /= &p;
        }
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][q].is_zero() {
                continue;
            }
            let f = self.rows[i][q].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[r] = q;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut r = cost[j].clone();
        for (i, row) in self.rows.iter().enumerate() {
            if !row[j].is_zero() {
                r -= &cost[self.basis[i]] * &row[j];
            }
        }
        r
    }

    /// Runs Bland pivots on `cost` over columns `0..allowed`.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Result<()> {
        loop {
            let entering =
                (0..allowed).filter(|j| !self.basis.contains(j)).find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(q) = entering else { return Ok(()) };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][q].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][q];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, q),
                None => return Err(Error::Unbounded),
            }
        }
    }
}

pub fn solve(lp: &StandardLp) -> Result<LpSolution> {
    let m = lp.b.len();
    let cols = lp.c.len();
    assert!(lp.a.len() == m && lp.a.iter().all(|r| r.len() == cols), "inconsistent LP dimensions");

    let mut sign = vec![Rational::one(); m];
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for i in 0..m {
        let flip = lp.b[i].is_negative();
        if flip {
            sign[i] = -Rational::one();
        }
        let mut row: Vec<Rational> = lp.a[i].iter().map(|x| if flip { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        rows.push(row);
        rhs.push(if flip { -&lp.b[i] } else { lp.b[i].clone() });
    }
    let mut t = Tableau { rows, rhs, basis: (cols..cols + m).collect(), cols };

    let phase1: Vec<Rational> =
        (0..cols + m).map(|j| if j < cols { Rational::zero() } else { -Rational::one() }).collect();
    t.optimize(&phase1, cols + m)?;
    if t.rhs.iter().zip(&t.basis).any(|(v, &j)| j >= cols && !v.is_zero()) {
        return Err(Error::Infeasible);
    }
    // Drive zero-level artificials out where a structural column can replace them;
    // rows where none can are redundant and keep their artificial at zero.
    for i in 0..m {
        if t.basis[i] >= cols {
            if let Some(q) = (0..cols).find(|&j| !t.rows[i][j].is_zero() && !t.basis.contains(&j)) {
                t.pivot(i, q);
            }
        }
    }

    let mut cost = lp.c.clone();
    cost.extend((0..m).map(|_| Rational::zero()));
    t.optimize(&cost, cols)?;

    let mut x = vec![Rational::zero(); cols];
    for (i, &j) in t.basis.iter().enumerate() {
        if j < cols {
            x[j] = t.rhs[i].clone();
        }
    }
    let value = x.iter().zip(&lp.c).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    // The artificial block of the tableau is B^{-1}, so y = c_B B^{-1}.
    let dual: Vec<Rational> = (0..m)
        .map(|k| {
            let mut y = Rational::zero();
            for (i, &j) in t.basis.iter().enumerate() {
                y += &cost[j] * &t.rows[i][t.cols + k];
            }
            y * &sign[k]
        })
        .collect();
    let reduced_costs: Vec<Rational> = (0..cols).map(|j| t.reduced_cost(&cost, j)).collect();
    let unique = (0..cols).all(|j| t.basis.contains(&j) || reduced_costs[j].is_negative());
    let sol = LpSolution { x, value, dual, reduced_costs, basis: t.basis, unique };
    if cfg!(debug_assertions) {
        if let Err(msg) = certify(lp, &sol) {
            panic!("simplex returned an uncertified solution: {msg}");
        }
    }
    Ok(sol)
}

/// Exact uniqueness of the primal optimum: restricts to the optimal face
/// (columns with zero reduced cost) and maximizes the total mass on the
/// nonbasic ones. The optimum is unique iff that maximum is zero.
pub fn optimum_is_unique(lp: &StandardLp, sol: &LpSolution) -> Result<bool> {
    if sol.unique {
        return Ok(true);
    }
    let cols = lp.c.len();
    let keep: Vec<usize> = (0..cols).filter(|&j| sol.reduced_costs[j].is_zero()).collect();
    let face = StandardLp {
        a: lp.a.iter().map(|row| keep.iter().map(|&j| row[j].clone()).collect()).collect(),
        b: lp.b.clone(),
        c: keep.iter().map(|j| if sol.basis.contains(j) { Rational::zero() } else { Rational::one() }).collect(),
    };
    Ok(solve(&face)?.value.is_zero())
}

/// Checks primal feasibility, dual feasibility, complementary slackness and
/// equality of the two objective values.
pub fn certify(lp: &StandardLp, sol: &LpSolution) -> std::result::Result<(), String> {
    if sol.x.iter().any(Signed::is_negative) {
        return Err("negative primal entry".into());
    }
    for (i, row) in lp.a.iter().enumerate() {
        let lhs = row.iter().zip(&sol.x).fold(Rational::zero(), |acc, (a, x)| acc + a * x);
        if lhs != lp.b[i] {
            return Err(format!("row {i} is violated"));
        }
    }
    for j in 0..lp.c.len() {
        let ya = (0..lp.b.len()).fold(Rational::zero(), |acc, i| acc + &sol.dual[i] * &lp.a[i][j]);
        let slack = ya - &lp.c[j];
        if slack.is_negative() {
            return Err(format!("dual constraint {j} is violated"));
        }
        if !slack.is_zero() && !sol.x[j].is_zero() {
            return Err(format!("complementary slackness fails at column {j}"));
        }
    }
    let yb = sol.dual.iter().zip(&lp.b).fold(Rational::zero(), |acc, (y, b)| acc + y * b);
    if yb != sol.value {
        return Err("primal and dual objectives differ".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn lp(a: &[&[i64]], b: &[i64], c: &[i64]) -> StandardLp {
        StandardLp {
            a: a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
            b: b.iter().map(|&x| int(x)).collect(),
            c: c.iter().map(|&x| int(x)).collect(),
        }
    }

    #[test]
    fn small_maximization() {
        // max 3y1 + 2y2, y1 + y2 + s1 = 4, y1 + 3y2 + s2 = 6
        let p = lp(&[&[1, 1, 1, 0], &[1, 3, 0, 1]], &[4, 6], &[3, 2, 0, 0]);
        let s = solve(&p).unwrap();
        assert_eq!(s.value, int(12));
        assert_eq!(s.x[0], int(4));
        assert_eq!(s.dual, vec![int(3), int(0)]);
        assert!(certify(&p, &s).is_ok());
    }

    #[test]
    fn fractional_optimum() {
        // max y1 + y2, 2y1 + y2 + s1 = 2, y1 + 2y2 + s2 = 2
        let p = lp(&[&[2, 1, 1, 0], &[1, 2, 0, 1]], &[2, 2], &[1, 1, 0, 0]);
        let s = solve(&p).unwrap();
        assert_eq!(s.value, frac(4, 3));
        assert_eq!(s.x[..2], [frac(2, 3), frac(2, 3)]);
        assert!(s.unique);
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(solve(&lp(&[&[1, 1]], &[-1], &[0, 0])).err(), Some(Error::Infeasible));
        assert_eq!(solve(&lp(&[&[1, -1]], &[1], &[0, 1])).err(), Some(Error::Unbounded));
    }

    #[test]
    fn redundant_rows_and_negative_rhs() {
        let p = lp(&[&[1, 1, 0], &[2, 2, 0], &[0, -1, -1]], &[2, 4, -1], &[1, 0, 1]);
        let s = solve(&p).unwrap();
        assert_eq!(s.value, int(3));
        assert!(certify(&p, &s).is_ok());
    }

    #[test]
    fn tie_is_reported_as_non_unique() {
        let p = lp(&[&[1, 1]], &[1], &[1, 1]);
        let s = solve(&p).unwrap();
        assert_eq!(s.value, int(1));
        assert!(!s.unique);
        assert!(!optimum_is_unique(&p, &s).unwrap());
    }

    #[test]
    fn degenerate_vertex_with_zero_reduced_cost_is_still_unique() {
        // y2 = y3 = 0 pins the optimum to y1 = 1 although the basis is degenerate.
        let p = lp(&[&[1, 1, 1], &[0, 0, 1], &[0, 1, 0]], &[1, 0, 0], &[1, 1, 0]);
        let s = solve(&p).unwrap();
        assert!(optimum_is_unique(&p, &s).unwrap());
    }
}
