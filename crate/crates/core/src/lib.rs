//! Graovac-Ghorbani (ABC_GG) index of simple connected graphs.
//!
//! * [`graph`]: immutable simple graphs, BFS distances, bicyclic classification
//! * [`canon`]: exact canonical certificates for isomorphism-free catalogs
//! * [`index`]: per-edge proximity splits and the index itself
//! * [`families`]: `B1`, `B2`, `B3`, `H` and elementary graphs
//! * [`closed_form`]: closed-form values and bounds
//! * [`enumerate`]: catalogs of bicyclic graphs
//! * [`verify`]: extremal scans and claim checks
//!
//! ```
//! use abcgg::{families, index};
//!
//! let g = families::b1(3, 8).unwrap();
//! let report = index::abc_gg(&g).unwrap();
//! assert_eq!(report.per_edge.len(), 11);
//! assert!((report.total - 6.4896308469).abs() < 1e-9);
//! ```

pub mod canon;
pub mod closed_form;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod index;
pub mod verify;

pub use canon::{canonical_certificate, Certificate};
pub use error::{Error, FormulaDomainError, Result};
pub use families::Family;
pub use graph::{Bicyclicity, Distance, DistanceMatrix, Graph};
pub use index::{abc_gg, EdgeSplit, IndexReport};
