//! Nano topological spaces built from one rough approximation.
//!
//! The open family of a [`NanoSpace`] is the deduplicated list
//! `{∅, U, lower, upper, boundary}`; it always satisfies the topology axioms
//! (checked by a debug-mode audit on every construction). Closed sets are the
//! complements of open sets. Interior and closure are computed directly from
//! those families.

use std::sync::{Arc, OnceLock};

use crate::error::Error;
use crate::h_open::HFamily;
use crate::rough;
use crate::sets::{Partition, Subset, Universe};

/// Default bound on the universe size for operations that enumerate the
/// powerset (the h-open family scan is `2^|U|` candidates).
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// A finite universe with the nano topology induced by a partition and a
/// target subset. Immutable after construction; safe to share across threads.
#[derive(Debug)]
pub struct NanoSpace {
    universe: Arc<Universe>,
    partition: Partition,
    target: Subset,
    approximation: rough::Approximation,
    opens: Vec<Subset>,
    closeds: Vec<Subset>,
    open_bits: Vec<u64>,
    closed_bits: Vec<u64>,
    cap: usize,
    pub(crate) h_family: OnceLock<HFamily>,
}

impl NanoSpace {
    /// Builds the space with the default enumeration cap.
    pub fn build(partition: Partition, target: Subset) -> Arc<Self> {
        Self::with_cap(partition, target, DEFAULT_ENUMERATION_CAP)
    }

    /// Builds the space with an explicit enumeration cap. The cap only gates
    /// powerset-enumerating operations; the topology itself has no size limit
    /// beyond the bitmask representation.
    pub fn with_cap(partition: Partition, target: Subset, cap: usize) -> Arc<Self> {
        assert!(
            partition.universe() == target.universe(),
            "target subset bound to a different universe than the partition"
        );
        let universe = partition.universe().clone();
        let approximation = rough::approximate(&partition, &target);
        let full = universe.full_bits();
        let mut open_bits = vec![
            0,
            full,
            approximation.lower.bits(),
            approximation.upper.bits(),
            approximation.boundary.bits(),
        ];
        open_bits.sort_unstable();
        open_bits.dedup();
        let mut opens: Vec<Subset> = open_bits
            .iter()
            .map(|&b| universe.subset_from_bits(b))
            .collect();
        opens.sort();
        let mut closeds: Vec<Subset> = opens.iter().map(Subset::complement).collect();
        closeds.sort();
        let closed_bits: Vec<u64> = closeds.iter().map(Subset::bits).collect();
        let open_bits: Vec<u64> = opens.iter().map(Subset::bits).collect();
        let space = NanoSpace {
            universe,
            partition,
            target,
            approximation,
            opens,
            closeds,
            open_bits,
            closed_bits,
            cap,
            h_family: OnceLock::new(),
        };
        debug_assert!(space.open_family_is_topology(), "open family failed the topology audit");
        Arc::new(space)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The target subset the approximation was taken of.
    pub fn target(&self) -> &Subset {
        &self.target
    }

    pub fn approximation(&self) -> &rough::Approximation {
        &self.approximation
    }

    /// Open sets in canonical order: `∅` first, the universe last.
    pub fn open_family(&self) -> &[Subset] {
        &self.opens
    }

    /// Complements of the open sets, in canonical order.
    pub fn closed_family(&self) -> &[Subset] {
        &self.closeds
    }

    pub fn enumeration_cap(&self) -> usize {
        self.cap
    }

    pub fn is_open(&self, b: &Subset) -> bool {
        self.assert_bound(b);
        self.is_open_bits(b.bits())
    }

    pub fn is_closed(&self, b: &Subset) -> bool {
        self.assert_bound(b);
        self.is_closed_bits(b.bits())
    }

    /// Open and closed at once.
    pub fn is_clopen(&self, b: &Subset) -> bool {
        self.assert_bound(b);
        self.is_open_bits(b.bits()) && self.is_closed_bits(b.bits())
    }

    /// Largest open set inside `b`.
    pub fn interior(&self, b: &Subset) -> Subset {
        self.assert_bound(b);
        self.universe.subset_from_bits(self.interior_bits(b.bits()))
    }

    /// Smallest closed set containing `b`.
    pub fn closure(&self, b: &Subset) -> Subset {
        self.assert_bound(b);
        self.universe.subset_from_bits(self.closure_bits(b.bits()))
    }

    /// Axiom audit: contains `∅` and `U`, closed under pairwise union and
    /// intersection. Runs in debug builds on every construction and inside
    /// the verification sweep.
    pub fn open_family_is_topology(&self) -> bool {
        let full = self.universe.full_bits();
        if !self.open_bits.contains(&0) || !self.open_bits.contains(&full) {
            return false;
        }
        self.open_bits.iter().all(|&a| {
            self.open_bits
                .iter()
                .all(|&b| self.is_open_bits(a | b) && self.is_open_bits(a & b))
        })
    }

    pub(crate) fn assert_bound(&self, b: &Subset) {
        assert!(
            b.universe() == &self.universe,
            "subset bound to a different universe than this space"
        );
    }

    pub(crate) fn full_bits(&self) -> u64 {
        self.universe.full_bits()
    }

    pub(crate) fn open_bits(&self) -> &[u64] {
        &self.open_bits
    }

    pub(crate) fn closed_bits(&self) -> &[u64] {
        &self.closed_bits
    }

    pub(crate) fn is_open_bits(&self, b: u64) -> bool {
        self.open_bits.contains(&b)
    }

    pub(crate) fn is_closed_bits(&self, b: u64) -> bool {
        self.closed_bits.contains(&b)
    }

    pub(crate) fn interior_bits(&self, b: u64) -> u64 {
        self.open_bits
            .iter()
            .filter(|&&o| o & !b == 0)
            .fold(0, |acc, &o| acc | o)
    }

    pub(crate) fn closure_bits(&self, b: u64) -> u64 {
        self.closed_bits
            .iter()
            .filter(|&&c| b & !c == 0)
            .fold(self.full_bits(), |acc, &c| acc & c)
    }

    pub(crate) fn check_cap(&self) -> Result<(), Error> {
        if self.universe.size() > self.cap {
            Err(Error::CapExceeded { size: self.universe.size(), cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// Spaces compare by their generating data: universe, partition, and target.
impl PartialEq for NanoSpace {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.partition == other.partition
            && self.target == other.target
    }
}

impl Eq for NanoSpace {}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(
        labels: &[&str],
        blocks: &[&[&str]],
        x: &[&str],
    ) -> Arc<NanoSpace> {
        let u = Universe::new(labels.iter().copied()).unwrap();
        let p = Partition::from_label_blocks(&u, blocks.iter().map(|b| b.to_vec())).unwrap();
        let x = u.subset(x.iter().copied()).unwrap();
        NanoSpace::build(p, x)
    }

    fn family_strings(family: &[Subset]) -> Vec<String> {
        family.iter().map(Subset::to_string).collect()
    }

    #[test]
    fn three_member_topology_from_exact_target() {
        let s = space(&["a", "b", "c", "d"], &[&["a"], &["d"], &["b", "c"]], &["a", "d"]);
        assert_eq!(
            family_strings(s.open_family()),
            vec!["{}", "{a, d}", "{a, b, c, d}"]
        );
        assert_eq!(
            family_strings(s.closed_family()),
            vec!["{}", "{b, c}", "{a, b, c, d}"]
        );
    }

    #[test]
    fn four_member_topology_from_rough_target() {
        let s = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"]);
        assert_eq!(
            family_strings(s.open_family()),
            vec!["{}", "{c}", "{a, b}", "{a, b, c}"]
        );
        // complements reproduce the same family here
        assert_eq!(
            family_strings(s.closed_family()),
            vec!["{}", "{c}", "{a, b}", "{a, b, c}"]
        );
    }

    #[test]
    fn indiscrete_topology_when_target_is_whole_universe() {
        let s = space(&["a", "b"], &[&["a", "b"]], &["a", "b"]);
        assert_eq!(family_strings(s.open_family()), vec!["{}", "{a, b}"]);
        let s = space(&["a", "b"], &[&["a", "b"]], &["a"]);
        // lower ∅, upper U, boundary U: still only two distinct members
        assert_eq!(family_strings(s.open_family()), vec!["{}", "{a, b}"]);
    }

    #[test]
    fn point_topology_interior_and_closure() {
        let s = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a"]);
        let u = s.universe().clone();
        assert_eq!(family_strings(s.open_family()), vec!["{}", "{a}", "{a, b, c}"]);
        assert_eq!(s.interior(&u.subset(["a", "b"]).unwrap()), u.subset(["a"]).unwrap());
        assert_eq!(s.interior(&u.full_subset()), u.full_subset());
        assert_eq!(s.interior(&u.subset(["b", "c"]).unwrap()), u.empty_subset());
        assert_eq!(s.closure(&u.subset(["b"]).unwrap()), u.subset(["b", "c"]).unwrap());
        assert_eq!(s.closure(&u.empty_subset()), u.empty_subset());
        assert_eq!(s.closure(&u.subset(["a"]).unwrap()), u.full_subset());
    }

    #[test]
    fn mixed_interior_example() {
        let s = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"]);
        let u = s.universe().clone();
        assert_eq!(s.interior(&u.subset(["a", "c"]).unwrap()), u.subset(["c"]).unwrap());
    }

    #[test]
    fn openness_tests_and_clopen() {
        let s = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["a", "c"]);
        let u = s.universe().clone();
        // τ = {∅, {a}, {b,c}, U}: every open set is also closed here
        for o in s.open_family() {
            assert!(s.is_clopen(o), "{o} should be clopen");
        }
        assert!(!s.is_open(&u.subset(["a", "b"]).unwrap()));
        assert!(!s.is_closed(&u.subset(["b"]).unwrap()));
    }

    #[test]
    fn interior_closure_duality_exhaustive() {
        let s = space(&["a", "b", "c", "d"], &[&["a", "b"], &["c"], &["d"]], &["b", "c"]);
        for b in s.universe().subsets() {
            assert_eq!(s.closure(&b), s.interior(&b.complement()).complement());
            assert!(s.interior(&b).is_subset_of(&b));
            assert!(b.is_subset_of(&s.closure(&b)));
            assert_eq!(s.interior(&s.interior(&b)), s.interior(&b));
            assert_eq!(s.closure(&s.closure(&b)), s.closure(&b));
        }
    }

    #[test]
    fn audit_accepts_every_constructed_space() {
        for labels in [&["a"][..], &["a", "b"][..], &["a", "b", "c"][..]] {
            let u = Universe::new(labels.iter().copied()).unwrap();
            let p = Partition::from_label_blocks(&u, [labels.to_vec()]).unwrap();
            for x in u.subsets() {
                let s = NanoSpace::build(p.clone(), x);
                assert!(s.open_family_is_topology());
            }
        }
    }

    #[test]
    #[should_panic(expected = "different universe")]
    fn foreign_subset_queries_panic() {
        let s = space(&["a", "b"], &[&["a", "b"]], &["a"]);
        let w = Universe::new(["x"]).unwrap();
        let _ = s.interior(&w.subset(["x"]).unwrap());
    }
}
