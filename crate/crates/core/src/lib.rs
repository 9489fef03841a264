//! Exact formal Hodge diamonds of cotangent bundles of partial flag varieties,
//! computed through BGG complexes, with a census of the corresponding blocks.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod bgg;
pub mod blocks;
pub mod bwb;
pub mod cache;
pub mod chevalley;
pub mod cohomology;
pub mod error;
pub mod linalg;
pub mod pmodules;
pub mod rootsys;

pub use bgg::{candidate_dominants, BggComplex, BggEngine, UMinusElement};
pub use blocks::{rational_catalan, restricted_weight_census, total_center_dimension, BlockCensus};
pub use bwb::{bott_line_bundle, bwb_grassmannian, Partition};
pub use cache::DiamondCache;
pub use chevalley::{ChevalleyBasis, ParabolicSplit};
pub use cohomology::{hodge_diamond, sheaf_cohomology, DiamondEntry, HodgeDiamond};
pub use error::{Error, Result};
pub use pmodules::{graded_piece, GradedPieceSpec, WeightedBModule};
pub use rootsys::{CartanType, RootSystem, Weight};
