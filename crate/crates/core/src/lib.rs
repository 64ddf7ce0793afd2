//! Separation certificates for cutsets of graphs, links of polygonal
//! complexes and the hypergraphs traced through them.

pub mod error;
pub mod aut;
pub mod certify;
pub mod cli;
pub mod complex;
pub mod cutset;
pub mod f090a;
pub mod gluing;
pub mod graph;
pub mod search;

pub use error::{Error, ParseError, Result};
pub use graph::{Graph, Metric, Q};
