pub mod matching;
pub mod simplex;

pub use matching::{
    b11_classify, is_cell_lp, is_cell_oddpath, solve_w_matching, AlternatingCycleVector, ComponentShape,
    FractionalMatching, RootShape, StructureReport, WeightVector,
};
