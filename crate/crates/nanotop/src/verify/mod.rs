//! Exhaustive small-instance verification.
//!
//! Every structural claim the library leans on is decidable at small sizes:
//! the submodules enumerate all spaces and maps up to a bound, sweep the
//! claims across them, replay a fixed catalog of regression fixtures, and
//! mine for counterexamples to implications between map classes.
//!
//! Determinism contract: enumeration order is canonical (partitions by
//! restricted-growth lexicographic order, target subsets and witnesses in
//! canonical subset order, maps by odometer index), and the parallel sweeps
//! reduce with an order-respecting merge, so identical inputs always produce
//! identical reports and the same first witness regardless of worker count.

mod enumerate;
mod fixtures;
mod mine;
mod theorems;

pub use enumerate::{bell_number, canonical_universe, enumerate_maps, enumerate_partitions, enumerate_spaces};
pub use fixtures::{
    h_continuous_not_continuous_map, h_contra_not_contra_map, h_irresolute_map,
    h_open_map_not_open_map, h_totally_continuous_map, point_open_space,
    quad_space_single_proper_open, relabeling_h_homeomorphism_map, run_regression_fixtures,
    totally_not_h_totally_map, two_proper_opens_space,
};
pub use mine::{mine_counterexample, MapPredicate};
pub use theorems::{implication_names, sweep_map_theorems, sweep_space_theorems, verify_theorems};

use std::sync::Arc;
use std::time::Duration;

use crate::error::Error;
use crate::maps::{MapClassification, PointMap};
use crate::sets::{Partition, Universe};
use crate::topology::NanoSpace;

/// A rebuildable description of one space: universe labels, partition blocks,
/// and the target subset, all as label lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDescriptor {
    pub universe: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub x: Vec<String>,
}

impl SpaceDescriptor {
    pub fn of(space: &NanoSpace) -> Self {
        SpaceDescriptor {
            universe: space.universe().labels().to_vec(),
            partition: space.partition().block_label_lists(),
            x: space.target().to_labels(),
        }
    }

    pub fn build(&self) -> Result<Arc<NanoSpace>, Error> {
        let u = Universe::new(self.universe.iter().cloned())?;
        let p = Partition::from_label_blocks(&u, self.partition.iter().map(|b| b.iter()))?;
        let x = u.subset(self.x.iter())?;
        Ok(NanoSpace::build(p, x))
    }
}

/// A replayable counterexample or failure record.
///
/// Map-level witnesses carry both spaces and the assignment; set-level
/// failures leave those `None` and put the detail into the property strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub domain: SpaceDescriptor,
    pub codomain: Option<SpaceDescriptor>,
    pub assignment: Option<Vec<(String, String)>>,
    /// property that held on the witness
    pub satisfied: String,
    /// property that failed on the witness
    pub violated: String,
}

impl Witness {
    /// Rebuilds the witness map and classifies it afresh; `None` when the
    /// witness does not describe a map.
    pub fn replay_classification(&self) -> Result<Option<MapClassification>, Error> {
        let (Some(codomain), Some(assignment)) = (&self.codomain, &self.assignment) else {
            return Ok(None);
        };
        let d = self.domain.build()?;
        let c = codomain.build()?;
        let map = PointMap::from_pairs(
            d,
            c,
            assignment.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        Ok(Some(map.classify()?))
    }

    /// Replays a mined witness: the satisfied class must hold and the
    /// violated class must fail on the rebuilt map.
    pub fn replay_confirms(&self) -> Result<bool, Error> {
        let satisfied = MapPredicate::parse(&self.satisfied)?;
        let violated = MapPredicate::parse(&self.violated)?;
        let Some(cls) = self.replay_classification()? else {
            return Ok(false);
        };
        Ok(satisfied.eval(&cls) && !violated.eval(&cls))
    }
}

/// Outcome of sweeping one claim over an instance range.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub id: String,
    pub instances: u64,
    pub failures: Vec<Witness>,
    /// wall time of the sweep batch this report came from
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
