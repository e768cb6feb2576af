//! Hand-checked reference instances, pinned as a regression suite.
//!
//! Each builder returns a small space or map whose every interesting
//! property was worked out by hand; [`run_regression_fixtures`] re-derives
//! those properties and reports any drift. The same instances back the
//! file-based fixtures shipped with the command-line interface.

use std::sync::Arc;
use std::time::Instant;

use crate::maps::PointMap;
use crate::rough;
use crate::sets::{Partition, Subset, Universe};
use crate::topology::NanoSpace;
use crate::verify::{SpaceDescriptor, TheoremReport, Witness};

fn space(labels: &[&str], blocks: &[&[&str]], x: &[&str]) -> Arc<NanoSpace> {
    let u = Universe::new(labels.iter().copied()).expect("fixture universe");
    let p = Partition::from_label_blocks(&u, blocks.iter().map(|b| b.iter().copied()))
        .expect("fixture partition");
    let x = u.subset(x.iter().copied()).expect("fixture target");
    NanoSpace::build(p, x)
}

/// U = {a, b, c, d} partitioned as {a} | {d} | {b, c}, approximating
/// X = {a, d}. The approximations coincide, so the open family is just
/// {∅, {a, d}, U} — yet {a} is h-open without being open.
pub fn quad_space_single_proper_open() -> Arc<NanoSpace> {
    space(
        &["a", "b", "c", "d"],
        &[&["a"], &["d"], &["b", "c"]],
        &["a", "d"],
    )
}

/// U = {a, b, c} partitioned as {a, b} | {c}, approximating X = {a, c}.
/// The open family {∅, {c}, {a, b}, U} equals its own closed family, and
/// X is rough (boundary {a, b}).
pub fn two_proper_opens_space() -> Arc<NanoSpace> {
    space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "c"])
}

/// U = {a, b, c} with the singleton partition, approximating X = {a}.
/// The open family is {∅, {a}, U} and the h-open family adds exactly
/// {b, c}: the smallest space where the two families genuinely differ.
pub fn point_open_space() -> Arc<NanoSpace> {
    space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a"])
}

/// Identity on {a, b, c} from the singleton partition approximating
/// {a, c} into [`two_proper_opens_space`]. The preimage of the open set
/// {c} is not open, but every preimage is h-open: h-continuous without
/// being continuous.
pub fn h_continuous_not_continuous_map() -> PointMap {
    let d = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a", "c"]);
    let c = two_proper_opens_space();
    PointMap::identity(d, c).expect("shared labels")
}

/// Relabeling a ↦ 1, b ↦ 2, c ↦ 3 from [`point_open_space`] onto
/// {1, 2, 3} partitioned as {1} | {2, 3} approximating {2, 3}. A bijection
/// that is h-continuous and h-open — an h-homeomorphism — while failing
/// continuity, and h-irresoluteness too (the preimage of the h-open {2}
/// is {b}, which is not h-open upstairs).
pub fn relabeling_h_homeomorphism_map() -> PointMap {
    let d = point_open_space();
    let c = space(&["1", "2", "3"], &[&["1"], &["2", "3"]], &["2", "3"]);
    PointMap::from_pairs(d, c, [("a", "1"), ("b", "2"), ("c", "3")])
        .expect("total assignment")
}

/// Identity from [`two_proper_opens_space`] into the singleton partition
/// approximating {a, c}. The image of the open set {c} is merely h-open:
/// an h-open map that is not an open map.
pub fn h_open_map_not_open_map() -> PointMap {
    let d = two_proper_opens_space();
    let c = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["a", "c"]);
    PointMap::identity(d, c).expect("shared labels")
}

/// Identity on {a, b, c} partitioned as {a, b} | {c} approximating
/// {a, b}, at both ends. Every subset is h-open on both sides, so the
/// map is h-irresolute; it is not h-totally-continuous because {a, c}
/// pulls back to a set that is not clopen.
pub fn h_irresolute_map() -> PointMap {
    let s = space(&["a", "b", "c"], &[&["a", "b"], &["c"]], &["a", "b"]);
    PointMap::identity(s.clone(), s).expect("shared labels")
}

/// Identity from {a} | {b, c} approximating {a, c} — where every open set
/// is clopen — into [`point_open_space`]'s topology with target {a}.
/// Every h-open set downstairs pulls back to a clopen set: h-totally-
/// continuous (and therefore totally continuous and h-irresolute).
pub fn h_totally_continuous_map() -> PointMap {
    let d = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["a", "c"]);
    let c = point_open_space();
    PointMap::identity(d, c).expect("shared labels")
}

/// Identity from {a} | {b, c} approximating {a, c} into the same
/// partition approximating {b, c}. Preimages of open sets are clopen,
/// but the h-open {b} pulls back to a non-clopen set: totally continuous
/// without being h-totally-continuous.
pub fn totally_not_h_totally_map() -> PointMap {
    let d = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["a", "c"]);
    let c = space(&["a", "b", "c"], &[&["a"], &["b", "c"]], &["b", "c"]);
    PointMap::identity(d, c).expect("shared labels")
}

/// Relabeling a ↦ 1, b ↦ 2, c ↦ 3 from the singleton partition
/// approximating {b, c} into the singleton partition approximating {2}.
/// The preimage {b} of the open set {2} is h-closed but not closed:
/// h-contra-continuous without being contra-continuous (or totally
/// continuous).
pub fn h_contra_not_contra_map() -> PointMap {
    let d = space(&["a", "b", "c"], &[&["a"], &["b"], &["c"]], &["b", "c"]);
    let c = space(&["1", "2", "3"], &[&["1"], &["2"], &["3"]], &["2"]);
    PointMap::from_pairs(d, c, [("a", "1"), ("b", "2"), ("c", "3")])
        .expect("total assignment")
}

#[derive(Default)]
struct Audit {
    instances: u64,
    failures: Vec<Witness>,
}

impl Audit {
    fn on_space(&mut self, space: &Arc<NanoSpace>, expectation: &str, ok: bool) {
        self.instances += 1;
        if !ok {
            self.failures.push(Witness {
                domain: SpaceDescriptor::of(space),
                codomain: None,
                assignment: None,
                satisfied: "pinned fixture".to_string(),
                violated: expectation.to_string(),
            });
        }
    }

    fn on_map(&mut self, map: &PointMap, expectation: &str, ok: bool) {
        self.instances += 1;
        if !ok {
            self.failures.push(Witness {
                domain: SpaceDescriptor::of(map.domain()),
                codomain: Some(SpaceDescriptor::of(map.codomain())),
                assignment: Some(map.assignment_pairs()),
                satisfied: "pinned fixture".to_string(),
                violated: expectation.to_string(),
            });
        }
    }
}

fn names(family: &[Subset]) -> Vec<String> {
    family.iter().map(Subset::to_string).collect()
}

/// Re-derives every pinned property of every fixture and reports drift.
pub fn run_regression_fixtures() -> TheoremReport {
    let started = Instant::now();
    let mut a = Audit::default();

    {
        let s = quad_space_single_proper_open();
        let ap = s.approximation();
        a.on_space(&s, "lower approximation is {a, d}", ap.lower.to_string() == "{a, d}");
        a.on_space(&s, "upper approximation is {a, d}", ap.upper.to_string() == "{a, d}");
        a.on_space(&s, "boundary region is empty", ap.boundary.is_empty());
        a.on_space(&s, "target is exact", !rough::is_rough(s.partition(), s.target()));
        a.on_space(
            &s,
            "open family is {}, {a, d}, U",
            names(s.open_family()) == ["{}", "{a, d}", "{a, b, c, d}"],
        );
        a.on_space(
            &s,
            "closed family is {}, {b, c}, U",
            names(s.closed_family()) == ["{}", "{b, c}", "{a, b, c, d}"],
        );
        let pt = s.universe().subset(["a"]).expect("label");
        a.on_space(&s, "{a} is h-open", s.is_h_open(&pt));
        a.on_space(&s, "{a} is not open", !s.is_open(&pt));
    }

    {
        let s = two_proper_opens_space();
        let ap = s.approximation();
        a.on_space(&s, "lower approximation is {c}", ap.lower.to_string() == "{c}");
        a.on_space(&s, "upper approximation is everything", ap.upper.is_universe());
        a.on_space(&s, "boundary region is {a, b}", ap.boundary.to_string() == "{a, b}");
        a.on_space(&s, "target is rough", rough::is_rough(s.partition(), s.target()));
        let expected = ["{}", "{c}", "{a, b}", "{a, b, c}"];
        a.on_space(&s, "open family has both proper opens", names(s.open_family()) == expected);
        a.on_space(&s, "closed family equals the open family", names(s.closed_family()) == expected);
    }

    {
        let s = point_open_space();
        a.on_space(
            &s,
            "open family is {}, {a}, U",
            names(s.open_family()) == ["{}", "{a}", "{a, b, c}"],
        );
        let fam = s.h_family().expect("within cap");
        a.on_space(
            &s,
            "h-open family adds exactly {b, c}",
            names(fam.members()) == ["{}", "{a}", "{b, c}", "{a, b, c}"],
        );
    }

    {
        let m = h_continuous_not_continuous_map();
        a.on_map(&m, "h-continuous", m.is_h_continuous());
        a.on_map(&m, "not nano-continuous", !m.is_nano_continuous());
        let open_c = m.codomain().universe().subset(["c"]).expect("label");
        let pre = m.preimage(&open_c);
        a.on_map(&m, "preimage of {c} is {c}", pre.to_string() == "{c}");
        a.on_map(&m, "that preimage is not open", !m.domain().is_open(&pre));
        a.on_map(&m, "that preimage is h-open", m.domain().is_h_open(&pre));
        a.on_map(
            &m,
            "domain h-open family is the full powerset",
            m.domain().h_family().expect("within cap").len() == 8,
        );
    }

    {
        let m = relabeling_h_homeomorphism_map();
        a.on_map(&m, "bijective", m.is_bijective());
        a.on_map(&m, "h-continuous", m.is_h_continuous());
        a.on_map(&m, "h-open map", m.is_h_open_map());
        a.on_map(&m, "h-homeomorphism", m.is_h_homeomorphism());
        a.on_map(&m, "not nano-continuous", !m.is_nano_continuous());
        a.on_map(&m, "not a nano-homeomorphism", !m.is_nano_homeomorphism());
        a.on_map(&m, "not h-irresolute", !m.is_h_irresolute().expect("within cap"));
        let y2 = m.codomain().universe().subset(["2"]).expect("label");
        let pre2 = m.preimage(&y2);
        a.on_map(&m, "{2} is h-open downstairs", m.codomain().is_h_open(&y2));
        a.on_map(&m, "its preimage is {b}", pre2.to_string() == "{b}");
        a.on_map(&m, "and {b} is not h-open upstairs", !m.domain().is_h_open(&pre2));
        let conds = m.h_continuity_conditions().expect("within cap");
        a.on_map(&m, "all five characterizations hold", conds.agree() && conds.open_preimages_h_open);

        // The image of an h-closure can land strictly inside the closure
        // of the image.
        let bc = m.domain().universe().subset(["b", "c"]).expect("labels");
        let hcl = m.domain().h_closure(&bc).expect("within cap");
        a.on_map(&m, "h-closure of {b, c} is itself", hcl == bc);
        let img = m.image(&hcl);
        let cl_img = m.codomain().closure(&m.image(&bc));
        a.on_map(&m, "image of that h-closure is {2, 3}", img.to_string() == "{2, 3}");
        a.on_map(&m, "closure of the image is everything", cl_img.is_universe());
        a.on_map(&m, "image-side containment is strict", img != cl_img && img.is_subset_of(&cl_img));

        // Likewise the h-closure of a preimage inside the preimage of the
        // closure.
        let y23 = m.codomain().universe().subset(["2", "3"]).expect("labels");
        let lhs = m.domain().h_closure(&m.preimage(&y23)).expect("within cap");
        let rhs = m.preimage(&m.codomain().closure(&y23));
        a.on_map(&m, "h-closure of the preimage of {2, 3} is {b, c}", lhs.to_string() == "{b, c}");
        a.on_map(&m, "preimage of the closure of {2, 3} is everything", rhs.is_universe());
        a.on_map(&m, "preimage-side containment is strict", lhs != rhs && lhs.is_subset_of(&rhs));

        // And the preimage of an interior inside the h-interior of the
        // preimage.
        let y1 = m.codomain().universe().subset(["1"]).expect("label");
        let outer = m.preimage(&m.codomain().interior(&y1));
        let inner = m.domain().h_interior(&m.preimage(&y1)).expect("within cap");
        a.on_map(&m, "preimage of the interior of {1} is empty", outer.is_empty());
        a.on_map(&m, "h-interior of the preimage of {1} is {a}", inner.to_string() == "{a}");
    }

    {
        let m = h_open_map_not_open_map();
        a.on_map(&m, "h-open map", m.is_h_open_map());
        a.on_map(&m, "not a nano-open map", !m.is_nano_open_map());
        let c_set = m.domain().universe().subset(["c"]).expect("label");
        let img = m.image(&c_set);
        a.on_map(&m, "{c} is open upstairs", m.domain().is_open(&c_set));
        a.on_map(&m, "its image is not open downstairs", !m.codomain().is_open(&img));
        a.on_map(&m, "but that image is h-open", m.codomain().is_h_open(&img));
    }

    {
        let m = h_irresolute_map();
        a.on_map(&m, "h-irresolute", m.is_h_irresolute().expect("within cap"));
        a.on_map(&m, "h-continuous follows", m.is_h_continuous());
        a.on_map(&m, "not h-totally-continuous", !m.is_h_totally_continuous().expect("within cap"));
        let ac = m.codomain().universe().subset(["a", "c"]).expect("labels");
        a.on_map(&m, "{a, c} is h-open downstairs", m.codomain().is_h_open(&ac));
        a.on_map(&m, "its preimage is not clopen", !m.domain().is_clopen(&m.preimage(&ac)));
    }

    {
        let m = h_totally_continuous_map();
        a.on_map(&m, "h-totally-continuous", m.is_h_totally_continuous().expect("within cap"));
        a.on_map(&m, "nano-totally-continuous follows", m.is_nano_totally_continuous());
        a.on_map(&m, "h-irresolute follows", m.is_h_irresolute().expect("within cap"));
        a.on_map(
            &m,
            "every open set upstairs is clopen",
            m.domain().open_family().iter().all(|o| m.domain().is_clopen(o)),
        );
    }

    {
        let m = totally_not_h_totally_map();
        a.on_map(&m, "nano-totally-continuous", m.is_nano_totally_continuous());
        a.on_map(&m, "not h-totally-continuous", !m.is_h_totally_continuous().expect("within cap"));
        let b_set = m.codomain().universe().subset(["b"]).expect("label");
        a.on_map(&m, "{b} is h-open downstairs", m.codomain().is_h_open(&b_set));
        a.on_map(&m, "its preimage is not clopen", !m.domain().is_clopen(&m.preimage(&b_set)));
    }

    {
        let m = h_contra_not_contra_map();
        a.on_map(&m, "h-contra-continuous", m.is_h_contra_continuous());
        a.on_map(&m, "not nano-contra-continuous", !m.is_nano_contra_continuous());
        a.on_map(&m, "not nano-totally-continuous", !m.is_nano_totally_continuous());
        let y2 = m.codomain().universe().subset(["2"]).expect("label");
        let pre = m.preimage(&y2);
        a.on_map(&m, "preimage of {2} is {b}", pre.to_string() == "{b}");
        a.on_map(&m, "that preimage is h-closed", m.domain().is_h_closed(&pre));
        a.on_map(&m, "that preimage is not closed", !m.domain().is_closed(&pre));
    }

    TheoremReport {
        id: "regression_fixtures".to_string(),
        instances: a.instances,
        failures: a.failures,
        elapsed: started.elapsed(),
    }
}
