//! Tight spans of finite rational metrics, computed exactly through the dual
//! regular subdivision of the second hypersimplex.
//!
//! The maximal cells of the subdivision are spanning graphs on `n` nodes whose
//! components are unicyclic with an odd cycle, certified by a height vector
//! `lambda`. Face counts of the tight span follow from the interior faces of
//! the subdivision; [`primal`] recomputes them directly from the polyhedron as
//! an independent check.

// Index loops mirror the matrix formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod celltest;
pub mod dual;
pub mod error;
pub mod fvec;
pub mod graph;
pub mod lp;
pub mod metric;
pub mod primal;
pub mod rational;
pub mod registry;
pub mod report;
pub mod suites;
pub mod verdict;

pub use error::{Error, Result};
pub use graph::{EdgeGraph, LoopyGraph, NodeSet};
pub use metric::Metric;
pub use rational::Rational;
pub use verdict::Verdict;
