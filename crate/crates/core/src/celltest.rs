//! Interchangeable cell tests, selectable by name.

use crate::dual::{lambda_certificate, Certificate};
use crate::error::Result;
use crate::graph::EdgeGraph;
use crate::lp::{is_cell_lp, is_cell_oddpath};
use crate::metric::Metric;
use crate::registry::{Named, Registry};

pub trait CellTest: Named + Send + Sync {
    fn is_cell(&self, d: &Metric, g: &EdgeGraph) -> Result<bool>;
}

struct Lambda;
struct Lp;
struct OddPath;

impl Named for Lambda {
    fn name(&self) -> &'static str {
        "lambda"
    }
}
impl CellTest for Lambda {
    fn is_cell(&self, d: &Metric, g: &EdgeGraph) -> Result<bool> {
        Ok(matches!(lambda_certificate(d, g)?, Certificate::Cell(_)))
    }
}

impl Named for Lp {
    fn name(&self) -> &'static str {
        "lp"
    }
}
impl CellTest for Lp {
    fn is_cell(&self, d: &Metric, g: &EdgeGraph) -> Result<bool> {
        is_cell_lp(d, g)
    }
}

impl Named for OddPath {
    fn name(&self) -> &'static str {
        "oddpath"
    }
}
impl CellTest for OddPath {
    fn is_cell(&self, d: &Metric, g: &EdgeGraph) -> Result<bool> {
        is_cell_oddpath(d, g)
    }
}

pub fn cell_tests() -> Registry<dyn CellTest> {
    let mut r: Registry<dyn CellTest> = Registry::new("cell test");
    r.register(Box::new(Lambda)).register(Box::new(Lp)).register(Box::new(OddPath));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::cycle_opt_graph;
    use crate::metric::generators::gen_dmax;

    #[test]
    fn all_tests_accept_the_cyclic_cell() {
        let d = gen_dmax(5).unwrap();
        let g = cycle_opt_graph(5);
        let r = cell_tests();
        assert_eq!(r.names(), vec!["lambda", "lp", "oddpath"]);
        for t in r.iter() {
            assert!(t.is_cell(&d, &g).unwrap(), "{} rejected the cycle", t.name());
        }
    }

    #[test]
    fn all_tests_reject_a_non_cell() {
        let d = crate::metric::fixtures::four_points();
        let g = EdgeGraph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        for t in cell_tests().iter() {
            assert!(!t.is_cell(&d, &g).unwrap(), "{} accepted", t.name());
        }
    }
}
