//! The regular subdivision of the second hypersimplex induced by a metric.

pub mod certificate;
pub mod faces;
pub mod subdivision;

pub use certificate::{lambda_certificate, Cell, Certificate, ScaledMetric};
pub use faces::{all_faces, Face, FaceSet};
pub use subdivision::{
    cycle_opt_graph, enumerate_cells, genericity_of, hypersimplex_volume, is_generic, restrict_to_facet,
    restrict_to_nodes, seed_cell, strategies, traverse_cells, GenericityVerdict, Subdivision, SubdivisionOptions,
    SubdivisionStrategy, ENUMERATION_THRESHOLD,
};
