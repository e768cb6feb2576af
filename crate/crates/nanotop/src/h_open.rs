//! The h-open refinement of a nano topology.
//!
//! A subset `B` is h-open when `B ⊆ interior(B ∪ O)` for every open set `O`
//! other than `∅` and the whole universe. A space whose topology is just
//! `{∅, U}` has no such `O`, so there every subset is h-open by vacuity.
//! h-closed means the complement is h-open.
//!
//! The full h-open family is found by scanning all `2^|U|` subsets; the scan
//! is gated by the space's enumeration cap and memoized per space with a
//! single-winner fill, so concurrent callers share one computation.

use std::sync::Arc;

use crate::error::Error;
use crate::sets::Subset;
use crate::topology::NanoSpace;

/// All h-open sets of one space, in canonical order.
///
/// Invariants (verified exhaustively in the test sweep): contains `∅` and the
/// universe, contains every open set, and is closed under pairwise union and
/// intersection.
#[derive(Debug, Clone)]
pub struct HFamily {
    members: Vec<Subset>,
    // ascending bitmask values, for O(log n) membership tests
    bits: Vec<u64>,
}

impl HFamily {
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subset> {
        self.members.iter()
    }

    pub fn contains(&self, b: &Subset) -> bool {
        self.contains_bits(b.bits())
    }

    pub(crate) fn contains_bits(&self, b: u64) -> bool {
        self.bits.binary_search(&b).is_ok()
    }

    pub(crate) fn bit_masks(&self) -> &[u64] {
        &self.bits
    }
}

impl NanoSpace {
    /// Definition check: `b ⊆ interior(b ∪ o)` for every proper non-empty
    /// open `o`. Cheap (no powerset scan), so it is not capped.
    pub fn is_h_open(&self, b: &Subset) -> bool {
        self.assert_bound(b);
        self.is_h_open_bits(b.bits())
    }

    /// The complement is h-open.
    pub fn is_h_closed(&self, b: &Subset) -> bool {
        self.assert_bound(b);
        self.is_h_closed_bits(b.bits())
    }

    /// The memoized h-open family. The first caller pays for the powerset
    /// scan; later callers (and concurrent racers) get the same value.
    pub fn h_family(&self) -> Result<&HFamily, Error> {
        self.check_cap()?;
        Ok(self.h_family.get_or_init(|| self.compute_h_family()))
    }

    /// Largest h-open set inside `b`: the union of all h-open subsets of `b`.
    pub fn h_interior(&self, b: &Subset) -> Result<Subset, Error> {
        self.assert_bound(b);
        self.check_cap()?;
        Ok(self.universe().subset_from_bits(self.h_interior_bits(b.bits())))
    }

    /// Smallest h-closed set containing `b`: the intersection of all h-closed
    /// supersets of `b`.
    pub fn h_closure(&self, b: &Subset) -> Result<Subset, Error> {
        self.assert_bound(b);
        self.check_cap()?;
        Ok(self.universe().subset_from_bits(self.h_closure_bits(b.bits())))
    }

    pub(crate) fn is_h_open_bits(&self, b: u64) -> bool {
        let full = self.full_bits();
        self.open_bits()
            .iter()
            .filter(|&&o| o != 0 && o != full)
            .all(|&o| b & !self.interior_bits(b | o) == 0)
    }

    pub(crate) fn is_h_closed_bits(&self, b: u64) -> bool {
        self.is_h_open_bits(self.full_bits() & !b)
    }

    fn compute_h_family(&self) -> HFamily {
        let n = self.universe().size();
        let bits: Vec<u64> = (0..1u128 << n)
            .map(|b| b as u64)
            .filter(|&b| self.is_h_open_bits(b))
            .collect();
        let mut members: Vec<Subset> = bits
            .iter()
            .map(|&b| self.universe().subset_from_bits(b))
            .collect();
        members.sort();
        HFamily { members, bits }
    }

    // Both operators below prefer the memoized family and otherwise walk only
    // the relevant subsets/supersets (carry-rippler), so one-off queries do
    // not force the full scan.

    pub(crate) fn h_interior_bits(&self, b: u64) -> u64 {
        if let Some(fam) = self.h_family.get() {
            return fam
                .bit_masks()
                .iter()
                .filter(|&&m| m & !b == 0)
                .fold(0, |acc, &m| acc | m);
        }
        let mut acc = 0;
        let mut s = 0u64;
        loop {
            if self.is_h_open_bits(s) {
                acc |= s;
            }
            if s == b {
                return acc;
            }
            s = s.wrapping_sub(b) & b;
        }
    }

    pub(crate) fn h_closure_bits(&self, b: u64) -> u64 {
        let full = self.full_bits();
        if let Some(fam) = self.h_family.get() {
            return fam
                .bit_masks()
                .iter()
                .map(|&m| full & !m)
                .filter(|&c| b & !c == 0)
                .fold(full, |acc, c| acc & c);
        }
        let free = full & !b;
        let mut acc = full;
        let mut t = 0u64;
        loop {
            let c = b | t;
            if self.is_h_closed_bits(c) {
                acc &= c;
            }
            if t == free {
                return acc;
            }
            t = t.wrapping_sub(free) & free;
        }
    }
}

/// Convenience wrapper mirroring [`NanoSpace::h_family`] for callers holding
/// an `Arc`.
pub fn h_open_family(space: &Arc<NanoSpace>) -> Result<&HFamily, Error> {
    space.h_family()
}
