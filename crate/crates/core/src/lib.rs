//! Intervals, critical vertices and the (-1)-critical poset families.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: dense graphs, digraphs and posets on `0..n`
//! * [`decomposition`]: intervals, indecomposability, criticality
//! * [`families`]: labeled generators for every named family
//! * [`comparability`]: transitive orientations, embeddings, split graphs
//! * [`census`]: canonical forms, small-object enumeration and the
//!   exhaustive verification suites
//! * [`edgelist`]: text and DOT formats

pub mod census;
pub mod comparability;
pub mod decomposition;
pub mod edgelist;
mod error;
pub mod families;
pub mod graph;
mod set;

pub use error::{Error, Result};
pub use graph::{AnyGraph, Digraph, Graph, Poset};
pub use set::VertexSet;
