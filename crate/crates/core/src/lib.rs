//! Flat and regular colored partitions.
//!
//! The crate enumerates grounded flat and regular partitions for an energy
//! matrix, implements the size- and color-preserving bijections between them
//! at degree one (Ω), degree two (splitting and the parity embedding) and
//! degree k (flattening), and checks generating-function identities with an
//! exact truncated q-series engine.
//!
//! ```
//! use partition_forge::{deg1::omega, energy::descent_example, partition::ColoredPartition, relation::Relation};
//!
//! let e = descent_example();
//! let flat = ColoredPartition::parse("1c 1a 0c", &e, Relation::Flat, true).unwrap();
//! assert_eq!(omega(&flat, &e).unwrap().to_text(&e), "2a 0c");
//! ```

pub mod characters;
pub mod deg1;
pub mod deg2;
pub mod degree_k;
pub mod energy;
pub mod enumerate;
pub mod error;
pub mod identities;
pub mod parallel;
pub mod part;
pub mod partition;
pub mod qseries;
pub mod relation;

pub use error::{Error, Result};
