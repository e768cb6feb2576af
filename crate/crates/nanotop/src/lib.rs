//! Finite nano topological spaces and their h-open refinement.
//!
//! A nano topology arises from a rough-set approximation: a finite universe,
//! an equivalence partition on it, and a target subset `X` determine the
//! lower approximation, the upper approximation, and the boundary region.
//! Those five sets (with `∅` and the universe) form a topology with at most
//! five members. On top of it this crate computes the family of h-open sets,
//! the interior/closure operators of both families, and a classification of
//! point maps between two such spaces (continuity, openness, irresoluteness,
//! and their h- and contra- variants).
//!
//! Everything here is exhaustively checkable at small sizes. The [`verify`]
//! module enumerates all spaces and maps up to a size bound, sweeps the
//! structural theorems the library relies on, and mines counterexamples for
//! implications that fail.
//!
//! ```
//! use nanotop::{NanoSpace, Partition, Universe};
//!
//! let u = Universe::new(["a", "b", "c", "d"]).unwrap();
//! let p = Partition::from_label_blocks(&u, [vec!["a"], vec!["d"], vec!["b", "c"]]).unwrap();
//! let x = u.subset(["a", "d"]).unwrap();
//! let space = NanoSpace::build(p, x);
//!
//! assert_eq!(space.open_family().len(), 3); // ∅, {a,d}, U
//! assert!(space.is_h_open(&u.subset(["a"]).unwrap()));
//! ```

mod error;
pub mod h_open;
pub mod maps;
pub mod rough;
pub mod sets;
pub mod topology;
pub mod verify;

pub use error::Error;
pub use h_open::HFamily;
pub use maps::{HContinuityConditions, InclusionCondition, MapClassification, PointMap, StrictInclusion};
pub use rough::Approximation;
pub use sets::{Partition, Subset, Universe};
pub use topology::{NanoSpace, DEFAULT_ENUMERATION_CAP};
pub use verify::{MapPredicate, SpaceDescriptor, TheoremReport, Witness};
