//! Exact algorithms for defensive alliances in signed graphs.
//!
//! A nonempty vertex set `S` of a signed graph is a defensive alliance when
//! every member `v` satisfies `deg⁺_S(v) + 1 ≥ deg⁻_S(v)` and
//! `deg⁺_S(v) + 1 ≥ deg⁻_{V∖S}(v)`.

pub mod building;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod fpt;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, Sign, SignedGraph};
