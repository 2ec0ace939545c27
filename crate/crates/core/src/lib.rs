//! Exact domination polynomials of simple graphs, with tools for studying
//! their unimodality and log-concavity.
//!
//! Graphs are bitmask based and limited to 64 vertices; brute-force
//! enumeration is further limited by a configurable cap (26 by default).

pub mod analysis;
pub mod cli;
pub mod domination;
pub mod error;
pub mod experiments;
pub mod fixtures;
pub mod graph;
pub mod poly;
pub mod report;

pub use domination::{brute_force_profile, DominationProfile, EnumConfig};
pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use poly::{analyze_shape, CoeffSeq, ShapeReport};
