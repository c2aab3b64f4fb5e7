//! Exact domination and bondage numbers of small graphs, together with the
//! surface embeddings and curvature bounds that limit the bondage number.
//!
//! ```
//! use bondlab::{bondage_number, domination_number, FamilySpec};
//!
//! let rook = FamilySpec::Rook(3).generate().unwrap();
//! assert_eq!(domination_number(&rook).gamma, 3);
//! assert_eq!(bondage_number(&rook, None).unwrap().b, 6);
//! ```
//!
//! Graphs have at most 64 vertices and are stored as adjacency bitsets.
//! Every exact solver has a brute-force oracle next to it for testing.

pub mod bondage;
pub mod bounds;
pub mod corpus;
pub mod curvature;
pub mod domination;
pub mod embedding;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod survey;

pub use bondage::{bondage_number, bondage_oracle, hr_bound, BondageResult, HrBound};
pub use bounds::{bound_suite, sachs_bounds, surface_bounds, BoundSuite};
pub use curvature::{case_bound, curvature_table, improved_constant, Case, SurfaceSpec};
pub use domination::{domination_number, gamma_oracle, DominationResult};
pub use embedding::{min_genus, GenusBudget, GenusResult, RotationSystem, SurfaceClass};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Edge, Graph};
pub use io::{parse_graph6, read_graphs, write_graph6};
pub use survey::{run_survey, SurveyOptions, SurveyReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/domination.md")]
    mod domination {}
    #[doc = include_str!("../../../book/src/bondage.md")]
    mod bondage {}
    #[doc = include_str!("../../../book/src/embeddings.md")]
    mod embeddings {}
    #[doc = include_str!("../../../book/src/curvature.md")]
    mod curvature {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/survey.md")]
    mod survey {}
}
