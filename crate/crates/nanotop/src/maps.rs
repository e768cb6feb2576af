//! Point maps between two nano spaces and their continuity classification.
//!
//! A [`PointMap`] is a total assignment from the domain universe to the
//! codomain universe. Classification covers the nano notions (continuous,
//! open, homeomorphism, totally continuous, contra continuous) and their
//! h-open counterparts (h-continuous, h-open, h-irresolute, h-homeomorphism,
//! h-totally continuous, h-contra continuous). Each predicate is computed
//! from its own definition; none is derived from another except the two
//! homeomorphism forms, whose definitions are the conjunctions used here.

use std::sync::Arc;

use crate::error::Error;
use crate::sets::Subset;
use crate::topology::NanoSpace;

/// A total map between the points of two nano spaces.
#[derive(Debug, Clone)]
pub struct PointMap {
    domain: Arc<NanoSpace>,
    codomain: Arc<NanoSpace>,
    // domain element index -> codomain element index
    images: Vec<usize>,
    // codomain element index -> mask of domain elements mapping there
    preimage_masks: Vec<u64>,
}

impl PointMap {
    /// Builds a map from positional images (`images[i]` is the codomain index
    /// of domain element `i`). The length must equal the domain size.
    pub fn new(
        domain: Arc<NanoSpace>,
        codomain: Arc<NanoSpace>,
        images: Vec<usize>,
    ) -> Result<Self, Error> {
        assert_eq!(
            images.len(),
            domain.universe().size(),
            "one image per domain element"
        );
        let m = codomain.universe().size();
        if let Some(&bad) = images.iter().find(|&&v| v >= m) {
            return Err(Error::ImageOutOfRange { index: bad });
        }
        let mut preimage_masks = vec![0u64; m];
        for (i, &v) in images.iter().enumerate() {
            preimage_masks[v] |= 1 << i;
        }
        Ok(PointMap { domain, codomain, images, preimage_masks })
    }

    /// Builds a map from `(from, to)` label pairs; every domain element needs
    /// exactly one image.
    pub fn from_pairs<I, S, T>(
        domain: Arc<NanoSpace>,
        codomain: Arc<NanoSpace>,
        pairs: I,
    ) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let n = domain.universe().size();
        let mut images: Vec<Option<usize>> = vec![None; n];
        for (from, to) in pairs {
            let (from, to) = (from.as_ref(), to.as_ref());
            let i = domain
                .universe()
                .index_of(from)
                .ok_or_else(|| Error::UnknownElement(from.to_string()))?;
            let v = codomain
                .universe()
                .index_of(to)
                .ok_or_else(|| Error::UnknownElement(to.to_string()))?;
            if images[i].is_some() {
                return Err(Error::DuplicateLabel(from.to_string()));
            }
            images[i] = Some(v);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::MissingImage(domain.universe().label(i).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        PointMap::new(domain, codomain, images)
    }

    /// The label-preserving map; every domain label must exist in the
    /// codomain.
    pub fn identity(domain: Arc<NanoSpace>, codomain: Arc<NanoSpace>) -> Result<Self, Error> {
        let images = domain
            .universe()
            .labels()
            .iter()
            .map(|l| {
                codomain
                    .universe()
                    .index_of(l)
                    .ok_or_else(|| Error::UnknownElement(l.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        PointMap::new(domain, codomain, images)
    }

    pub fn domain(&self) -> &Arc<NanoSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<NanoSpace> {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply_index(&self, index: usize) -> usize {
        self.images[index]
    }

    pub fn apply(&self, label: &str) -> Result<&str, Error> {
        let i = self
            .domain
            .universe()
            .index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))?;
        Ok(self.codomain.universe().label(self.images[i]))
    }

    /// `(from, to)` label pairs in domain element order.
    pub fn assignment_pairs(&self) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (
                    self.domain.universe().label(i).to_string(),
                    self.codomain.universe().label(v).to_string(),
                )
            })
            .collect()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.universe().size() == self.codomain.universe().size()
            && self.preimage_masks.iter().all(|&m| m.count_ones() == 1)
    }

    pub fn image(&self, b: &Subset) -> Subset {
        self.domain.assert_bound(b);
        self.codomain
            .universe()
            .subset_from_bits(self.image_bits(b.bits()))
    }

    pub fn preimage(&self, c: &Subset) -> Subset {
        self.codomain.assert_bound(c);
        self.domain
            .universe()
            .subset_from_bits(self.preimage_bits(c.bits()))
    }

    pub(crate) fn image_bits(&self, mut b: u64) -> u64 {
        let mut out = 0;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            out |= 1 << self.images[i];
            b &= b - 1;
        }
        out
    }

    pub(crate) fn preimage_bits(&self, mut c: u64) -> u64 {
        let mut out = 0;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            out |= self.preimage_masks[v];
            c &= c - 1;
        }
        out
    }

    /// Preimages of open sets are open.
    pub fn is_nano_continuous(&self) -> bool {
        self.codomain
            .open_bits()
            .iter()
            .all(|&o| self.domain.is_open_bits(self.preimage_bits(o)))
    }

    /// Images of open sets are open.
    pub fn is_nano_open_map(&self) -> bool {
        self.domain
            .open_bits()
            .iter()
            .all(|&o| self.codomain.is_open_bits(self.image_bits(o)))
    }

    /// Bijective, continuous, and open.
    pub fn is_nano_homeomorphism(&self) -> bool {
        self.is_bijective() && self.is_nano_continuous() && self.is_nano_open_map()
    }

    /// Preimages of open sets are clopen.
    pub fn is_nano_totally_continuous(&self) -> bool {
        self.codomain.open_bits().iter().all(|&o| {
            let p = self.preimage_bits(o);
            self.domain.is_open_bits(p) && self.domain.is_closed_bits(p)
        })
    }

    /// Preimages of open sets are closed.
    pub fn is_nano_contra_continuous(&self) -> bool {
        self.codomain
            .open_bits()
            .iter()
            .all(|&o| self.domain.is_closed_bits(self.preimage_bits(o)))
    }

    /// Preimages of open sets are h-open.
    pub fn is_h_continuous(&self) -> bool {
        self.codomain
            .open_bits()
            .iter()
            .all(|&o| self.domain.is_h_open_bits(self.preimage_bits(o)))
    }

    /// Images of open sets are h-open.
    pub fn is_h_open_map(&self) -> bool {
        self.domain
            .open_bits()
            .iter()
            .all(|&o| self.codomain.is_h_open_bits(self.image_bits(o)))
    }

    /// Preimages of h-open sets are h-open. Needs the codomain h-family, so
    /// the codomain enumeration cap applies.
    pub fn is_h_irresolute(&self) -> Result<bool, Error> {
        let fam = self.codomain.h_family()?;
        Ok(fam
            .bit_masks()
            .iter()
            .all(|&m| self.domain.is_h_open_bits(self.preimage_bits(m))))
    }

    /// Bijective, h-continuous, and an h-open map.
    pub fn is_h_homeomorphism(&self) -> bool {
        self.is_bijective() && self.is_h_continuous() && self.is_h_open_map()
    }

    /// Preimages of h-open sets are clopen. Needs the codomain h-family.
    pub fn is_h_totally_continuous(&self) -> Result<bool, Error> {
        let fam = self.codomain.h_family()?;
        Ok(fam.bit_masks().iter().all(|&m| {
            let p = self.preimage_bits(m);
            self.domain.is_open_bits(p) && self.domain.is_closed_bits(p)
        }))
    }

    /// Preimages of open sets are h-closed.
    pub fn is_h_contra_continuous(&self) -> bool {
        self.codomain
            .open_bits()
            .iter()
            .all(|&o| self.domain.is_h_closed_bits(self.preimage_bits(o)))
    }

    /// All twelve booleans, each from its own definition.
    pub fn classify(&self) -> Result<MapClassification, Error> {
        Ok(MapClassification {
            bijective: self.is_bijective(),
            nano_continuous: self.is_nano_continuous(),
            nano_open_map: self.is_nano_open_map(),
            nano_homeomorphism: self.is_nano_homeomorphism(),
            nano_totally_continuous: self.is_nano_totally_continuous(),
            nano_contra_continuous: self.is_nano_contra_continuous(),
            h_continuous: self.is_h_continuous(),
            h_open_map: self.is_h_open_map(),
            h_irresolute: self.is_h_irresolute()?,
            h_homeomorphism: self.is_h_homeomorphism(),
            h_totally_continuous: self.is_h_totally_continuous()?,
            h_contra_continuous: self.is_h_contra_continuous(),
        })
    }

    /// The five equivalent characterizations of h-continuity, each evaluated
    /// independently (they are expected to agree; the verification sweep
    /// checks that they always do).
    ///
    /// 1. preimages of open sets are h-open;
    /// 2. preimages of closed sets are h-closed;
    /// 3. for every `B ⊆ U`: `f(h-closure(B)) ⊆ closure(f(B))`;
    /// 4. for every `C ⊆ V`: `h-closure(f⁻¹(C)) ⊆ f⁻¹(closure(C))`;
    /// 5. for every `C ⊆ V`: `f⁻¹(interior(C)) ⊆ h-interior(f⁻¹(C))`.
    pub fn h_continuity_conditions(&self) -> Result<HContinuityConditions, Error> {
        self.domain.check_cap()?;
        self.codomain.check_cap()?;
        // memoize the domain family so the per-subset operators are cheap
        self.domain.h_family()?;

        let full_u = self.domain.full_bits();
        let full_v = self.codomain.full_bits();

        let open_preimages_h_open = self.is_h_continuous();
        let closed_preimages_h_closed = self
            .codomain
            .closed_bits()
            .iter()
            .all(|&k| self.domain.is_h_closed_bits(self.preimage_bits(k)));
        let image_of_h_closure_in_closure_of_image = (0..=full_u).all(|b| {
            let left = self.image_bits(self.domain.h_closure_bits(b));
            left & !self.codomain.closure_bits(self.image_bits(b)) == 0
        });
        let h_closure_of_preimage_in_preimage_of_closure = (0..=full_v).all(|c| {
            let left = self.domain.h_closure_bits(self.preimage_bits(c));
            left & !self.preimage_bits(self.codomain.closure_bits(c)) == 0
        });
        let preimage_of_interior_in_h_interior_of_preimage = (0..=full_v).all(|c| {
            let left = self.preimage_bits(self.codomain.interior_bits(c));
            left & !self.domain.h_interior_bits(self.preimage_bits(c)) == 0
        });
        Ok(HContinuityConditions {
            open_preimages_h_open,
            closed_preimages_h_closed,
            image_of_h_closure_in_closure_of_image,
            h_closure_of_preimage_in_preimage_of_closure,
            preimage_of_interior_in_h_interior_of_preimage,
        })
    }

    /// For each of the three inclusion-style characterizations, the first
    /// subset (canonical order) where the inclusion is proper, if any.
    pub fn strict_inclusion_witnesses(&self) -> Result<Vec<StrictInclusion>, Error> {
        self.domain.check_cap()?;
        self.codomain.check_cap()?;
        self.domain.h_family()?;

        let mut dom_subsets: Vec<Subset> = self.domain.universe().subsets().collect();
        dom_subsets.sort();
        let mut cod_subsets: Vec<Subset> = self.codomain.universe().subsets().collect();
        cod_subsets.sort();

        let mut out = Vec::new();
        for b in &dom_subsets {
            let left = self.image_bits(self.domain.h_closure_bits(b.bits()));
            let right = self.codomain.closure_bits(self.image_bits(b.bits()));
            if left & !right == 0 && left != right {
                out.push(StrictInclusion {
                    condition: InclusionCondition::ImageOfHClosure,
                    subject: b.clone(),
                    left: self.codomain.universe().subset_from_bits(left),
                    right: self.codomain.universe().subset_from_bits(right),
                });
                break;
            }
        }
        for c in &cod_subsets {
            let left = self.domain.h_closure_bits(self.preimage_bits(c.bits()));
            let right = self.preimage_bits(self.codomain.closure_bits(c.bits()));
            if left & !right == 0 && left != right {
                out.push(StrictInclusion {
                    condition: InclusionCondition::HClosureOfPreimage,
                    subject: c.clone(),
                    left: self.domain.universe().subset_from_bits(left),
                    right: self.domain.universe().subset_from_bits(right),
                });
                break;
            }
        }
        for c in &cod_subsets {
            let left = self.preimage_bits(self.codomain.interior_bits(c.bits()));
            let right = self.domain.h_interior_bits(self.preimage_bits(c.bits()));
            if left & !right == 0 && left != right {
                out.push(StrictInclusion {
                    condition: InclusionCondition::PreimageOfInterior,
                    subject: c.clone(),
                    left: self.domain.universe().subset_from_bits(left),
                    right: self.domain.universe().subset_from_bits(right),
                });
                break;
            }
        }
        Ok(out)
    }
}

/// Outcome of classifying one map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapClassification {
    pub bijective: bool,
    pub nano_continuous: bool,
    pub nano_open_map: bool,
    pub nano_homeomorphism: bool,
    pub nano_totally_continuous: bool,
    pub nano_contra_continuous: bool,
    pub h_continuous: bool,
    pub h_open_map: bool,
    pub h_irresolute: bool,
    pub h_homeomorphism: bool,
    pub h_totally_continuous: bool,
    pub h_contra_continuous: bool,
}

/// The five equivalent characterizations of h-continuity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HContinuityConditions {
    pub open_preimages_h_open: bool,
    pub closed_preimages_h_closed: bool,
    pub image_of_h_closure_in_closure_of_image: bool,
    pub h_closure_of_preimage_in_preimage_of_closure: bool,
    pub preimage_of_interior_in_h_interior_of_preimage: bool,
}

impl HContinuityConditions {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.open_preimages_h_open,
            self.closed_preimages_h_closed,
            self.image_of_h_closure_in_closure_of_image,
            self.h_closure_of_preimage_in_preimage_of_closure,
            self.preimage_of_interior_in_h_interior_of_preimage,
        ]
    }

    /// All five are expected to hold or fail together.
    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&v| v == a[0])
    }
}

/// Which inclusion a [`StrictInclusion`] witnesses as proper.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InclusionCondition {
    /// `f(h-closure(B)) ⊆ closure(f(B))`
    ImageOfHClosure,
    /// `h-closure(f⁻¹(C)) ⊆ f⁻¹(closure(C))`
    HClosureOfPreimage,
    /// `f⁻¹(interior(C)) ⊆ h-interior(f⁻¹(C))`
    PreimageOfInterior,
}

/// A subset where one inclusion characterization holds strictly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictInclusion {
    pub condition: InclusionCondition,
    pub subject: Subset,
    pub left: Subset,
    pub right: Subset,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{Partition, Universe};

    fn space(labels: &[&str], blocks: &[&[&str]], x: &[&str]) -> Arc<NanoSpace> {
        let u = Universe::new(labels.iter().copied()).unwrap();
        let p = Partition::from_label_blocks(&u, blocks.iter().map(|b| b.to_vec())).unwrap();
        let x = u.subset(x.iter().copied()).unwrap();
        NanoSpace::build(p, x)
    }

    // identity on {a,b,c}: τ = {∅, {a,c}, U} into τ' = {∅, {c}, {a,b}, V}
    fn refining_identity() -> PointMap {
        let dom = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a", "c"]);
        let cod = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"]);
        PointMap::identity(dom, cod).unwrap()
    }

    // a↦1, b↦2, c↦3: τ = {∅, {a}, U} into τ' = {∅, {2,3}, V}
    fn relabeling_map() -> PointMap {
        let dom = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a"]);
        let cod = space(&["1", "2", "3"], &[&["1"], &["2", "3"]], &["2", "3"]);
        PointMap::from_pairs(dom, cod, [("a", "1"), ("b", "2"), ("c", "3")]).unwrap()
    }

    #[test]
    fn image_and_preimage() {
        let f = relabeling_map();
        let u = f.domain().universe().clone();
        let v = f.codomain().universe().clone();
        assert_eq!(f.image(&u.subset(["b", "c"]).unwrap()), v.subset(["2", "3"]).unwrap());
        assert_eq!(f.preimage(&v.subset(["2", "3"]).unwrap()), u.subset(["b", "c"]).unwrap());
        assert_eq!(f.image(&u.empty_subset()), v.empty_subset());
        assert_eq!(f.preimage(&v.empty_subset()), u.empty_subset());
        assert_eq!(f.apply("a").unwrap(), "1");

        let dom = space(&["a", "b"], &[&["a", "b"]], &["a"]);
        let cod = space(&["1"], &[&["1"]], &["1"]);
        let constant = PointMap::new(dom, cod, vec![0, 0]).unwrap();
        let u = constant.domain().universe().clone();
        let v = constant.codomain().universe().clone();
        assert_eq!(constant.image(&u.subset(["a"]).unwrap()), v.full_subset());
        assert_eq!(constant.preimage(&v.full_subset()), u.full_subset());
        assert!(!constant.is_bijective());
    }

    #[test]
    fn construction_validation() {
        let dom = space(&["a", "b"], &[&["a", "b"]], &["a"]);
        let cod = space(&["1"], &[&["1"]], &["1"]);
        assert_eq!(
            PointMap::new(dom.clone(), cod.clone(), vec![0, 1]).unwrap_err(),
            Error::ImageOutOfRange { index: 1 }
        );
        assert_eq!(
            PointMap::from_pairs(dom.clone(), cod.clone(), [("a", "1")]).unwrap_err(),
            Error::MissingImage("b".into())
        );
        assert_eq!(
            PointMap::from_pairs(dom.clone(), cod.clone(), [("a", "1"), ("z", "1")]).unwrap_err(),
            Error::UnknownElement("z".into())
        );
        assert_eq!(
            PointMap::from_pairs(dom.clone(), cod.clone(), [("a", "9"), ("b", "1")]).unwrap_err(),
            Error::UnknownElement("9".into())
        );
        assert_eq!(
            PointMap::from_pairs(dom, cod, [("a", "1"), ("a", "1")]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn h_continuous_without_continuity() {
        let f = refining_identity();
        assert!(f.is_h_continuous());
        assert!(!f.is_nano_continuous()); // witness: preimage of {c}
        let c = f.codomain().universe().subset(["c"]).unwrap();
        assert!(!f.domain().is_open(&f.preimage(&c)));
    }

    #[test]
    fn relabeling_is_h_homeomorphism_but_not_nano() {
        let f = relabeling_map();
        assert!(f.is_h_continuous());
        assert!(f.is_h_open_map());
        assert!(f.is_h_homeomorphism());
        assert!(!f.is_nano_continuous());
        assert!(!f.is_nano_homeomorphism());
        assert!(!f.is_h_irresolute().unwrap()); // witness: preimage of {2} is {b}
        let two = f.codomain().universe().subset(["2"]).unwrap();
        assert!(f.codomain().is_h_open(&two));
        assert!(!f.domain().is_h_open(&f.preimage(&two)));
    }

    #[test]
    fn h_open_map_without_openness() {
        // identity: τ = {∅, {c}, {a,b}, U} into τ' = {∅, {a,c}, V}
        let dom = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"]);
        let cod = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a", "c"]);
        let f = PointMap::identity(dom, cod).unwrap();
        assert!(f.is_h_open_map());
        assert!(!f.is_nano_open_map()); // witness: image of {c}
    }

    #[test]
    fn h_irresolute_identity_on_shared_topology() {
        let dom = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "b"]);
        let cod = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "b"]);
        let f = PointMap::identity(dom, cod).unwrap();
        assert!(f.is_h_irresolute().unwrap());
        assert!(!f.is_h_totally_continuous().unwrap()); // witness: {a,c} is h-open, preimage not clopen
        let ac = f.codomain().universe().subset(["a", "c"]).unwrap();
        assert!(f.codomain().is_h_open(&ac));
        assert!(!f.domain().is_clopen(&f.preimage(&ac)));
    }

    #[test]
    fn h_totally_continuous_identity() {
        let dom = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["a", "c"]);
        let cod = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a"]);
        let f = PointMap::identity(dom, cod).unwrap();
        assert!(f.is_h_totally_continuous().unwrap());
        assert!(f.is_h_irresolute().unwrap());
        assert!(f.is_nano_totally_continuous());
    }

    #[test]
    fn totally_continuous_without_h_totally() {
        let dom = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["a", "c"]);
        let cod = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["b", "c"]);
        let f = PointMap::identity(dom, cod).unwrap();
        assert!(f.is_nano_totally_continuous());
        assert!(!f.is_h_totally_continuous().unwrap());
    }

    #[test]
    fn h_contra_continuous_without_contra() {
        // a↦1, b↦2, c↦3: τ = {∅, {b,c}, U} into τ' = {∅, {2}, V}
        let dom = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["b", "c"]);
        let cod = space(&["1", "2", "3"], &[&["1"], &["2"], &["3"]], &["2"]);
        let f = PointMap::from_pairs(dom, cod, [("a", "1"), ("b", "2"), ("c", "3")]).unwrap();
        assert!(f.is_h_contra_continuous());
        assert!(!f.is_nano_contra_continuous()); // witness: preimage of {2} is {b}, not closed
        assert!(!f.is_nano_totally_continuous());
    }

    #[test]
    fn identity_on_one_space_is_everything_nano() {
        let dom = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"]);
        let cod = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"]);
        let f = PointMap::identity(dom, cod).unwrap();
        let cls = f.classify().unwrap();
        assert!(cls.bijective);
        assert!(cls.nano_continuous);
        assert!(cls.nano_open_map);
        assert!(cls.nano_homeomorphism);
        assert!(cls.h_continuous);
        assert!(cls.h_irresolute);
        assert!(cls.h_homeomorphism);
    }

    #[test]
    fn preimage_respects_set_algebra() {
        let f = relabeling_map();
        let v = f.codomain().universe().clone();
        for c1 in v.subsets() {
            for c2 in v.subsets() {
                assert_eq!(
                    f.preimage(&c1.union(&c2)),
                    f.preimage(&c1).union(&f.preimage(&c2))
                );
                assert_eq!(
                    f.preimage(&c1.intersection(&c2)),
                    f.preimage(&c1).intersection(&f.preimage(&c2))
                );
            }
            assert_eq!(f.preimage(&c1.complement()), f.preimage(&c1).complement());
        }
    }

    #[test]
    fn characterizations_agree_on_examples() {
        for f in [refining_identity(), relabeling_map()] {
            let conds = f.h_continuity_conditions().unwrap();
            assert!(conds.agree());
            assert!(conds.open_preimages_h_open);
        }
    }

    #[test]
    fn strict_inclusions_of_the_relabeling_map() {
        let f = relabeling_map();
        let u = f.domain().universe().clone();
        let v = f.codomain().universe().clone();
        let witnesses = f.strict_inclusion_witnesses().unwrap();
        let by_condition = |c: InclusionCondition| {
            witnesses
                .iter()
                .find(|w| w.condition == c)
                .expect("witness expected")
        };

        // the earliest strict subjects in canonical order
        let w = by_condition(InclusionCondition::ImageOfHClosure);
        assert_eq!(w.subject, u.subset(["b"]).unwrap());
        assert_eq!(w.left, v.subset(["2", "3"]).unwrap());
        assert_eq!(w.right, v.full_subset());

        let w = by_condition(InclusionCondition::HClosureOfPreimage);
        assert_eq!(w.subject, v.subset(["2"]).unwrap());
        assert_eq!(w.left, u.subset(["b", "c"]).unwrap());
        assert_eq!(w.right, u.full_subset());

        let w = by_condition(InclusionCondition::PreimageOfInterior);
        assert_eq!(w.subject, v.subset(["1"]).unwrap());
        assert_eq!(w.left, u.empty_subset());
        assert_eq!(w.right, u.subset(["a"]).unwrap());
    }
}
