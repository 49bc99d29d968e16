//! Finite rational metrics: validation, restriction, shifts and the predicates
//! used by the face-count machinery.

pub mod fixtures;
pub mod generators;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{edge_count, edge_index, NodeSet};
use crate::rational::{self, Rational};
use crate::verdict::Verdict;

/// Symmetric distance function with zero diagonal on nodes `1..=n`, stored as
/// its upper triangle in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    n: usize,
    upper: Vec<Rational>,
    is_nonnegative: bool,
    satisfies_triangle: bool,
}

/// `e(i,j) = lambda` for every `j != i`, zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedDistance {
    pub node: usize,
    pub lambda: Rational,
}

impl Metric {
    /// Builds a metric from its upper triangle, computing the validation flags.
    pub fn from_upper(n: usize, upper: Vec<Rational>) -> Result<Self> {
        if !(3..=crate::graph::MAX_NODES).contains(&n) {
            return Err(Error::BadArity(n));
        }
        if upper.len() != edge_count(n) {
            return Err(Error::Parse(format!(
                "expected {} upper-triangle entries for n = {n}, got {}",
                edge_count(n),
                upper.len()
            )));
        }
        let is_nonnegative = upper.iter().all(|x| !x.is_negative());
        let mut m = Metric { n, upper, is_nonnegative, satisfies_triangle: true };
        m.satisfies_triangle = m.first_triangle_violation().is_none();
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn is_nonnegative(&self) -> bool {
        self.is_nonnegative
    }

    pub fn satisfies_triangle(&self) -> bool {
        self.satisfies_triangle
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        if i == j {
            Rational::zero()
        } else {
            self.upper[edge_index(self.n, i, j)].clone()
        }
    }

    fn at(&self, i: usize, j: usize) -> &Rational {
        &self.upper[edge_index(self.n, i, j)]
    }

    fn first_triangle_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    if self.at(i, k) > &(self.at(i, j) + self.at(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Full square table including the zero diagonal.
    pub fn to_table(&self) -> Vec<Vec<Rational>> {
        (1..=self.n).map(|i| (1..=self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "upper": self.upper.iter().map(rational::format).collect::<Vec<_>>(),
        })
    }

    /// Parses `{"n": N, "upper": ["p/q", ...]}`; numeric JSON entries are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing integer field `n`".into()))?
            as usize;
        let upper = v
            .get("upper")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field `upper`".into()))?;
        let entries = upper
            .iter()
            .map(|e| match e {
                Value::String(s) => rational::parse(s),
                other => Err(Error::Parse(format!("entry {other} must be a \"p/q\" string"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_upper(n, entries)
    }
}

/// Validates a full square table: symmetric with zero diagonal. Triangle
/// inequality and nonnegativity are recorded as flags, never repaired.
pub fn validate_metric(table: &[Vec<Rational>]) -> Result<Metric> {
    let n = table.len();
    if !(3..=crate::graph::MAX_NODES).contains(&n) {
        return Err(Error::BadArity(n));
    }
    if let Some(row) = table.iter().find(|r| r.len() != n) {
        return Err(Error::Parse(format!("row of length {} in a {n}x{n} table", row.len())));
    }
    for i in 0..n {
        if !table[i][i].is_zero() {
            return Err(Error::NonzeroDiagonal(i + 1));
        }
        for j in i + 1..n {
            if table[i][j] != table[j][i] {
                return Err(Error::AsymmetricInput(i + 1, j + 1));
            }
        }
    }
    let mut upper = Vec::with_capacity(edge_count(n));
    for i in 0..n {
        for j in i + 1..n {
            upper.push(table[i][j].clone());
        }
    }
    Metric::from_upper(n, upper)
}

/// Induced metric on `nodes`, relabeled `1..=|nodes|` in increasing order.
pub fn submetric(d: &Metric, nodes: NodeSet) -> Result<Metric> {
    if nodes.len() < 3 {
        return Err(Error::SubsetTooSmall(nodes.len()));
    }
    if let Some(v) = nodes.iter().find(|&v| v > d.n()) {
        return Err(Error::NodeOutOfRange { node: v, n: d.n() });
    }
    let keep: Vec<usize> = nodes.iter().collect();
    let mut upper = Vec::new();
    for (a, &i) in keep.iter().enumerate() {
        for &j in &keep[a + 1..] {
            upper.push(d.at(i, j).clone());
        }
    }
    Metric::from_upper(keep.len(), upper)
}

/// Pointwise sum of `d` and the given isolated distance functions. The result
/// is returned as a raw table for the caller to re-validate.
pub fn shift_by_isolated(d: &Metric, shifts: &[IsolatedDistance]) -> Vec<Vec<Rational>> {
    let mut table = d.to_table();
    for s in shifts {
        let i = s.node - 1;
        for j in 0..d.n() {
            if j != i {
                table[i][j] += &s.lambda;
                table[j][i] += &s.lambda;
            }
        }
    }
    table
}

/// Nodes `i` with `d(i,j) + d(i,k) > d(j,k)` for all distinct `j, k != i`.
pub fn strict_triangle_nodes(d: &Metric) -> NodeSet {
    let n = d.n();
    let mut out = NodeSet::default();
    for i in 1..=n {
        let strict = (1..=n).all(|j| j == i || (j + 1..=n).all(|k| k == i || d.at(i, j) + d.at(i, k) > *d.at(j, k)));
        if strict {
            out.insert(i);
        }
    }
    out
}

/// Checks `d(i,j) - d(i,k) <= d(j,l) - d(k,l)` and
/// `d(i,l) - d(i,k) <= d(j,l) - d(j,k)` for all `i <= j <= k <= l`.
pub fn check_dmax_property(d: &Metric) -> Verdict {
    let n = d.n();
    for i in 1..=n {
        for j in i..=n {
            for k in j..=n {
                for l in k..=n {
                    let first = d.get(i, j) - d.get(i, k) <= d.get(j, l) - d.get(k, l);
                    let second = d.get(i, l) - d.get(i, k) <= d.get(j, l) - d.get(j, k);
                    if !(first && second) {
                        return Verdict::fail(format!("quadruple ({i},{j},{k},{l})"));
                    }
                }
            }
        }
    }
    Verdict::pass()
}

#[cfg(test)]
mod tests {
    use super::fixtures::{four_points, four_points_ideal};
    use super::*;
    use crate::rational::{frac, int};

    fn table(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn four_points_validates() {
        let d = four_points();
        assert!(d.satisfies_triangle());
        assert!(d.is_nonnegative());
        assert_eq!(d.get(2, 4), int(3));
        assert_eq!(d.get(4, 2), int(3));
        assert_eq!(d.get(3, 3), int(0));
    }

    #[test]
    fn zero_metric_is_a_metric() {
        let d = validate_metric(&table(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap();
        assert!(d.satisfies_triangle() && d.is_nonnegative());
    }

    #[test]
    fn triangle_violation_is_flagged_not_repaired() {
        let d = validate_metric(&table(&[&[0, 1, 5], &[1, 0, 1], &[5, 1, 0]])).unwrap();
        assert!(!d.satisfies_triangle());
        assert_eq!(d.get(1, 3), int(5));
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(validate_metric(&table(&[&[0, 1, 2], &[1, 0, 1], &[3, 1, 0]])), Err(Error::AsymmetricInput(1, 3)));
        assert_eq!(validate_metric(&table(&[&[0, 1, 2], &[1, 1, 1], &[2, 1, 0]])), Err(Error::NonzeroDiagonal(2)));
        assert_eq!(validate_metric(&table(&[&[0, 1], &[1, 0]])), Err(Error::BadArity(2)));
    }

    #[test]
    fn json_round_trip_and_float_rejection() {
        let d = four_points();
        let text = d.to_json().to_string();
        assert_eq!(Metric::from_json(&text).unwrap(), d);
        assert!(Metric::from_json(r#"{"n":3,"upper":[1,2,3]}"#).is_err());
        assert!(Metric::from_json(r#"{"n":3,"upper":["1","2.5","3"]}"#).is_err());
        assert!(Metric::from_json(r#"{"n":3,"upper":["1","2"]}"#).is_err());
        let d = Metric::from_json(r#"{"n":3,"upper":["1/2","2/4","1"]}"#).unwrap();
        assert_eq!(d.get(1, 3), frac(1, 2));
    }

    #[test]
    fn shift_to_ideal_and_back() {
        let d = four_points();
        let down: Vec<_> = (1..=4).map(|i| IsolatedDistance { node: i, lambda: frac(-1, 2) }).collect();
        let shifted = validate_metric(&shift_by_isolated(&d, &down)).unwrap();
        assert_eq!(shifted, four_points_ideal());

        assert_eq!(validate_metric(&shift_by_isolated(&d, &[])).unwrap(), d);

        let up: Vec<_> = down.iter().map(|s| IsolatedDistance { node: s.node, lambda: -s.lambda.clone() }).collect();
        assert_eq!(validate_metric(&shift_by_isolated(&shifted, &up)).unwrap(), d);
    }

    #[test]
    fn shift_leaves_other_pairs_alone() {
        let d = four_points();
        let t = shift_by_isolated(&d, &[IsolatedDistance { node: 1, lambda: int(7) }]);
        assert_eq!(t[1][2], d.get(2, 3));
        assert_eq!(t[2][3], d.get(3, 4));
        assert_eq!(t[0][1], d.get(1, 2) + int(7));
    }

    #[test]
    fn submetric_relabels() {
        let d = four_points();
        assert_eq!(submetric(&d, NodeSet::full(4)).unwrap(), d);
        let s = submetric(&d, NodeSet::from_nodes([1, 2, 4])).unwrap();
        assert_eq!(s.get(2, 3), int(3));
        assert_eq!(s.get(1, 3), int(2));
        assert_eq!(submetric(&d, NodeSet::from_nodes([1, 2])), Err(Error::SubsetTooSmall(2)));
    }

    #[test]
    fn strict_triangle_nodes_of_the_example() {
        assert_eq!(strict_triangle_nodes(&four_points()), NodeSet::full(4));
        assert_eq!(strict_triangle_nodes(&four_points_ideal()), NodeSet::default());
    }

    #[test]
    fn dmax_property_on_constant_metric() {
        let d = Metric::from_upper(3, vec![int(1), int(1), int(1)]).unwrap();
        assert!(check_dmax_property(&d).pass);
    }
}
