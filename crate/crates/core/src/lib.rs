//! Induced paths in strongly regular graphs.
//!
//! Generators for the classical families (Johnson, Kneser, Hamming, Latin
//! square and block-intersection graphs), strongly regular parameter
//! recognition, an exhaustive induced-subgraph oracle, and constructive
//! witness extraction for induced P4, P5 and co-P5.

pub mod catalog;
pub mod claims;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod pattern;
pub mod srg;
pub mod survey;
pub mod witness;

pub use error::{Error, Result, StsDefect};
pub use graph::{DistanceLayers, Graph, VertexSet};
pub use pattern::{find_induced, find_induced_until, is_cograph, Pattern, PatternName, SearchOutcome};
pub use srg::{complement_params, is_primitive, multipartite_decomposition, srg_params, MultipartiteShape, SrgParams};
