//! Isomorphism classes of small objects and the exhaustive checks run over
//! them.

pub mod canon;
pub mod enumerate;
pub mod verify;

pub use canon::{canonical_form, canonical_form_any, canonical_form_graph, is_isomorphic, CanonicalForm, Kind};
pub use enumerate::{enumerate_graphs, enumerate_posets, GraphCensus, PosetCensus};
pub use verify::{Status, VerificationReport};
