//! Universes, bitmask subsets, and equivalence partitions.
//!
//! A [`Universe`] is an ordered list of distinct labels. A [`Subset`] is a
//! bitmask over that order, bound to its universe by an `Arc`; set algebra
//! between subsets of different universes panics. A [`Partition`] stores its
//! blocks in canonical order (ascending smallest member).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Hard representation limit: one bit per element in a `u64`.
pub const MAX_UNIVERSE_SIZE: usize = 64;

/// A finite ordered set of distinct, non-empty element labels.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    /// Builds a universe from labels, rejecting duplicates and empty input.
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_UNIVERSE_SIZE {
            return Err(Error::UniverseTooLarge {
                size: labels.len(),
                max: MAX_UNIVERSE_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(Universe { labels }))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Mask with one bit set per element.
    pub(crate) fn full_bits(&self) -> u64 {
        if self.labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.labels.len()) - 1
        }
    }

    pub fn empty_subset(self: &Arc<Self>) -> Subset {
        Subset { universe: self.clone(), bits: 0 }
    }

    pub fn full_subset(self: &Arc<Self>) -> Subset {
        Subset { universe: self.clone(), bits: self.full_bits() }
    }

    /// Builds the subset holding exactly the given labels.
    pub fn subset<I, S>(self: &Arc<Self>, labels: I) -> Result<Subset, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownElement(label.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Subset { universe: self.clone(), bits })
    }

    pub fn subset_from_indices<I>(self: &Arc<Self>, indices: I) -> Subset
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < self.size(), "element index {i} out of range");
            bits |= 1 << i;
        }
        Subset { universe: self.clone(), bits }
    }

    pub(crate) fn subset_from_bits(self: &Arc<Self>, bits: u64) -> Subset {
        debug_assert_eq!(bits & !self.full_bits(), 0);
        Subset { universe: self.clone(), bits }
    }

    /// All subsets in ascending bitmask order (`∅` first, the universe last).
    pub fn subsets(self: &Arc<Self>) -> impl Iterator<Item = Subset> {
        let u = self.clone();
        (0..=u128::from(self.full_bits())).map(move |bits| Subset {
            universe: u.clone(),
            bits: bits as u64,
        })
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.full_subset_display())
    }
}

impl Universe {
    fn full_subset_display(&self) -> String {
        let mut out = String::from("{");
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(l);
        }
        out.push('}');
        out
    }
}

/// A subset of a [`Universe`], stored as a bitmask in element order.
#[derive(Debug, Clone)]
pub struct Subset {
    universe: Arc<Universe>,
    bits: u64,
}

impl Subset {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Raw bitmask; bit `i` is the `i`-th universe element.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_universe(&self) -> bool {
        self.bits == self.universe.full_bits()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        index < self.universe.size() && self.bits & (1 << index) != 0
    }

    pub fn contains(&self, label: &str) -> bool {
        self.universe
            .index_of(label)
            .is_some_and(|i| self.bits & (1 << i) != 0)
    }

    /// Indices of the members, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    pub fn iter_labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.indices().map(|i| self.universe.label(i))
    }

    pub fn to_labels(&self) -> Vec<String> {
        self.iter_labels().map(str::to_string).collect()
    }

    fn assert_same_universe(&self, other: &Subset) {
        assert!(
            self.universe == other.universe,
            "subset algebra across distinct universes"
        );
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.assert_same_universe(other);
        Subset { universe: self.universe.clone(), bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.assert_same_universe(other);
        Subset { universe: self.universe.clone(), bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.assert_same_universe(other);
        Subset { universe: self.universe.clone(), bits: self.bits & !other.bits }
    }

    pub fn complement(&self) -> Subset {
        Subset {
            universe: self.universe.clone(),
            bits: self.universe.full_bits() & !self.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.assert_same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.assert_same_universe(other);
        self.bits & other.bits != 0
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
            && (Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe)
    }
}

impl Eq for Subset {}

/// Canonical bitmask order: cardinality first, then the ascending
/// member-index sequence compared lexicographically.
pub(crate) fn canonical_bits_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let (mut a, mut b) = (a, b);
        while a != 0 && b != 0 {
            let (ia, ib) = (a.trailing_zeros(), b.trailing_zeros());
            match ia.cmp(&ib) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                unequal => return unequal,
            }
        }
        Ordering::Equal
    })
}

/// Canonical order: cardinality first, then the ascending member-index
/// sequence compared lexicographically. Only meaningful within one universe.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_bits_cmp(self.bits, other.bits)
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, label) in self.iter_labels().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

/// An equivalence partition: non-empty, pairwise disjoint blocks covering the
/// universe, kept in canonical order (ascending smallest member index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Arc<Universe>,
    blocks: Vec<Subset>,
    // element index -> position of its block in `blocks`
    block_index: Vec<usize>,
}

impl Partition {
    pub fn new<I>(universe: &Arc<Universe>, blocks: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut blocks: Vec<Subset> = blocks.into_iter().collect();
        let mut seen = 0u64;
        for block in &blocks {
            assert!(
                block.universe() == universe,
                "partition block bound to a different universe"
            );
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            let clash = seen & block.bits();
            if clash != 0 {
                let i = clash.trailing_zeros() as usize;
                return Err(Error::OverlappingBlocks(universe.label(i).to_string()));
            }
            seen |= block.bits();
        }
        let missing = universe.full_bits() & !seen;
        if missing != 0 {
            let i = missing.trailing_zeros() as usize;
            return Err(Error::UncoveredElement(universe.label(i).to_string()));
        }
        blocks.sort_by_key(|b| b.bits().trailing_zeros());
        let mut block_index = vec![0usize; universe.size()];
        for (pos, block) in blocks.iter().enumerate() {
            for i in block.indices() {
                block_index[i] = pos;
            }
        }
        Ok(Partition { universe: universe.clone(), blocks, block_index })
    }

    pub fn from_label_blocks<I, B, S>(universe: &Arc<Universe>, blocks: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let blocks = blocks
            .into_iter()
            .map(|b| universe.subset(b))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(universe, blocks)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// The block containing the given element.
    pub fn block_of(&self, label: &str) -> Result<&Subset, Error> {
        let i = self
            .universe
            .index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))?;
        Ok(&self.blocks[self.block_index[i]])
    }

    pub fn block_of_index(&self, index: usize) -> &Subset {
        &self.blocks[self.block_index[index]]
    }

    pub fn block_label_lists(&self) -> Vec<Vec<String>> {
        self.blocks.iter().map(Subset::to_labels).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, block) in self.blocks.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{block}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Arc<Universe> {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    #[test]
    fn universe_construction() {
        assert_eq!(abcd().size(), 4);
        assert_eq!(Universe::new(["a"]).unwrap().size(), 1);
        assert_eq!(
            Universe::new(["a", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(Universe::new(Vec::<String>::new()).unwrap_err(), Error::EmptyUniverse);
        assert_eq!(Universe::new(["a", ""]).unwrap_err(), Error::EmptyLabel);
        let too_many: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert_eq!(
            Universe::new(too_many).unwrap_err(),
            Error::UniverseTooLarge { size: 65, max: 64 }
        );
    }

    #[test]
    fn subset_algebra() {
        let u = abcd();
        let ad = u.subset(["a", "d"]).unwrap();
        assert_eq!(ad.complement(), u.subset(["b", "c"]).unwrap());
        let ac = u.subset(["a", "c"]).unwrap();
        let ab = u.subset(["a", "b"]).unwrap();
        assert_eq!(ac.union(&ab), u.subset(["a", "b", "c"]).unwrap());
        assert_eq!(ac.intersection(&ab), u.subset(["a"]).unwrap());
        assert_eq!(ac.difference(&ab), u.subset(["c"]).unwrap());
        assert!(u.subset(["a"]).unwrap().is_subset_of(&ad));
        assert!(!ad.is_subset_of(&ac));
        assert!(u.empty_subset().is_subset_of(&u.empty_subset()));
        assert_eq!(u.full_subset().cardinality(), 4);
        assert_eq!(u.subset(["z"]).unwrap_err(), Error::UnknownElement("z".into()));
    }

    #[test]
    #[should_panic(expected = "distinct universes")]
    fn cross_universe_algebra_panics() {
        let u = abcd();
        let v = Universe::new(["a", "b"]).unwrap();
        let _ = u.subset(["a"]).unwrap().union(&v.subset(["a"]).unwrap());
    }

    #[test]
    fn subset_display_uses_element_order() {
        let u = abcd();
        assert_eq!(u.subset(["d", "a"]).unwrap().to_string(), "{a, d}");
        assert_eq!(u.empty_subset().to_string(), "{}");
    }

    #[test]
    fn canonical_order_is_cardinality_then_member_lex() {
        let u = abcd();
        let mut family = vec![
            u.full_subset(),
            u.subset(["b", "c"]).unwrap(),
            u.subset(["a", "d"]).unwrap(),
            u.empty_subset(),
            u.subset(["d"]).unwrap(),
            u.subset(["a"]).unwrap(),
        ];
        family.sort();
        let shown: Vec<String> = family.iter().map(Subset::to_string).collect();
        assert_eq!(
            shown,
            vec!["{}", "{a}", "{d}", "{a, d}", "{b, c}", "{a, b, c, d}"]
        );
    }

    #[test]
    fn partition_validation_and_canonical_block_order() {
        let u = abcd();
        let p = Partition::from_label_blocks(&u, [vec!["a"], vec!["d"], vec!["b", "c"]]).unwrap();
        let shown: Vec<String> = p.blocks().iter().map(Subset::to_string).collect();
        assert_eq!(shown, vec!["{a}", "{b, c}", "{d}"]);

        assert_eq!(
            Partition::from_label_blocks(&u, [vec!["a", "b"], vec!["b", "c", "d"]]).unwrap_err(),
            Error::OverlappingBlocks("b".into())
        );
        assert_eq!(
            Partition::from_label_blocks(&u, [vec!["a", "b"], vec!["c"]]).unwrap_err(),
            Error::UncoveredElement("d".into())
        );
        assert_eq!(
            Partition::from_label_blocks(&u, [vec!["a", "b", "c", "d"], vec![]]).unwrap_err(),
            Error::EmptyBlock
        );
    }

    #[test]
    fn block_lookup() {
        let u = abcd();
        let p = Partition::from_label_blocks(&u, [vec!["a"], vec!["d"], vec!["b", "c"]]).unwrap();
        assert_eq!(p.block_of("b").unwrap(), &u.subset(["b", "c"]).unwrap());
        assert_eq!(p.block_of("a").unwrap(), &u.subset(["a"]).unwrap());
        assert_eq!(p.block_of("z").unwrap_err(), Error::UnknownElement("z".into()));
    }

    #[test]
    fn powerset_enumeration_counts() {
        let u = abcd();
        assert_eq!(u.subsets().count(), 16);
        let single = Universe::new(["only"]).unwrap();
        assert_eq!(single.subsets().count(), 2);
    }
}
