//! Structure theory and deck-based reconstruction for interval graphs.
//!
//! The library is organized around the pipeline: recognize an interval graph
//! and build interval representations (`interval`), decompose it into bulk,
//! flanks, one-sided maximum-degree classes and outsiders (`structure`),
//! analyze decks of vertex-deleted cards (`deck`), glue annotated parts back
//! together (`annotated`), and drive the full deck-to-graph reconstruction
//! (`reconstruct`). The `oracle` module provides exhaustive ground truth at
//! small vertex counts.

pub mod annotated;
pub mod canon;
pub mod deck;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod oracle;
pub mod reconstruct;
pub mod structure;
pub mod suite;

pub use canon::{are_isomorphic, canonical_form, Certificate};
pub use error::{Error, NotIntervalWitness, Result};
pub use graph::{Graph, VertexSet};
