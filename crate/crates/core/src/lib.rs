//! Laboratory for two candidate independence-number algorithms and the
//! constructions behind them: split-graph degree-sequence models and
//! nilpotency of the strictly upper-triangular adjacency part. Every
//! estimate is checked against exact oracles over exhaustive small-graph
//! corpora, and disagreements are reported as data, not hidden.

pub mod degseq;
pub mod error;
pub mod graphcore;
pub mod harness;
pub mod nilpotent;
pub mod oracle;
pub mod splitmodel;

pub use error::{Error, Result};
