//! Exhaustive sweeps of the structural claims over enumerated instances.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::Error;
use crate::maps::PointMap;
use crate::topology::NanoSpace;
use crate::verify::enumerate::enumerate_maps;
use crate::verify::mine::MapPredicate;
use crate::verify::{enumerate_spaces, SpaceDescriptor, TheoremReport, Witness};

// Witnesses kept per failing theorem; the earliest by canonical order win.
const WITNESS_CAP: usize = 3;

#[derive(Clone, Default)]
struct Partial {
    instances: u64,
    failures: Vec<(u64, Witness)>,
}

impl Partial {
    fn fail(&mut self, key: u64, witness: Witness) {
        self.failures.push((key, witness));
        self.failures.sort_by_key(|(k, _)| *k);
        self.failures.truncate(WITNESS_CAP);
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self.failures.sort_by_key(|(k, _)| *k);
        self.failures.truncate(WITNESS_CAP);
        self
    }
}

fn reports(ids: &[&str], partials: Vec<Partial>, elapsed: Duration) -> Vec<TheoremReport> {
    ids.iter()
        .zip(partials)
        .map(|(id, p)| TheoremReport {
            id: (*id).to_string(),
            instances: p.instances,
            failures: p.failures.into_iter().map(|(_, w)| w).collect(),
            elapsed,
        })
        .collect()
}

const SPACE_THEOREM_IDS: [&str; 8] = [
    "open_family_is_topology",
    "open_sets_are_h_open",
    "h_family_closed_under_intersection_and_union",
    "open_h_open_mix_stays_h_open",
    "h_interior_h_closure_monotone",
    "h_interior_h_closure_bounds_idempotent_fixed_points",
    "h_closure_complements_h_interior",
    "h_family_equals_h_interior_fixed_points",
];

/// The eight set-level claims, swept over every space of size `1..=max_size`
/// and (where quantified) every subset or subset pair of its universe.
pub fn sweep_space_theorems(max_size: usize) -> Result<Vec<TheoremReport>, Error> {
    let started = Instant::now();
    let mut spaces: Vec<Arc<NanoSpace>> = Vec::new();
    for n in 1..=max_size {
        spaces.extend(enumerate_spaces(n)?);
    }
    for s in &spaces {
        s.h_family()?;
    }

    let partials = spaces
        .par_iter()
        .enumerate()
        .map(|(idx, s)| check_space(idx as u64, s))
        .reduce(
            || vec![Partial::default(); SPACE_THEOREM_IDS.len()],
            merge_partials,
        );
    Ok(reports(&SPACE_THEOREM_IDS, partials, started.elapsed()))
}

fn merge_partials(a: Vec<Partial>, b: Vec<Partial>) -> Vec<Partial> {
    a.into_iter()
        .zip(b)
        .map(|(x, y)| x.merge(y))
        .collect()
}

fn check_space(idx: u64, space: &Arc<NanoSpace>) -> Vec<Partial> {
    let mut parts = vec![Partial::default(); SPACE_THEOREM_IDS.len()];
    let fam = space.h_family().expect("sweep sizes stay within the cap");
    let masks = fam.bit_masks();
    let full = space.universe().full_subset().bits();
    let describe = || SpaceDescriptor::of(space);
    let set_witness = |held: &str, broken: String| Witness {
        domain: describe(),
        codomain: None,
        assignment: None,
        satisfied: held.to_string(),
        violated: broken,
    };
    let show = |bits: u64| space.universe().subset_from_bits(bits).to_string();

    // 0: the open family satisfies the topology axioms
    parts[0].instances += 1;
    if !space.open_family_is_topology() {
        parts[0].fail(idx, set_witness("space construction", "topology axioms".into()));
    }

    // 1: every open set is h-open
    parts[1].instances += 1;
    if let Some(&o) = space.open_bits().iter().find(|&&o| !fam.contains_bits(o)) {
        parts[1].fail(idx, set_witness("open set", format!("{} is not h-open", show(o))));
    }

    // 2: the h-family is closed under pairwise intersection and union
    parts[2].instances += 1;
    'outer: for &a in masks {
        for &b in masks {
            if !fam.contains_bits(a & b) || !fam.contains_bits(a | b) {
                parts[2].fail(
                    idx,
                    set_witness(
                        "h-open pair",
                        format!("{} with {} escapes the family", show(a), show(b)),
                    ),
                );
                break 'outer;
            }
        }
    }

    // 3: mixing an open set with an h-open set stays h-open
    parts[3].instances += 1;
    'outer: for &o in space.open_bits() {
        for &h in masks {
            if !fam.contains_bits(o & h) || !fam.contains_bits(o | h) {
                parts[3].fail(
                    idx,
                    set_witness(
                        "open with h-open",
                        format!("{} with {} escapes the family", show(o), show(h)),
                    ),
                );
                break 'outer;
            }
        }
    }

    // 4: h-interior and h-closure are monotone
    parts[4].instances += 1;
    'outer: for big in 0..=full {
        let int_big = space.h_interior_bits(big);
        let cl_big = space.h_closure_bits(big);
        let mut small = 0u64;
        loop {
            if space.h_interior_bits(small) & !int_big != 0
                || space.h_closure_bits(small) & !cl_big != 0
            {
                parts[4].fail(
                    idx,
                    set_witness(
                        "subset pair",
                        format!("monotonicity breaks at {} inside {}", show(small), show(big)),
                    ),
                );
                break 'outer;
            }
            if small == big {
                break;
            }
            small = small.wrapping_sub(big) & big;
        }
    }

    // 5: h-interior/h-closure are bounded by the subset, idempotent, and
    //    have exactly the h-open/h-closed sets as fixed points
    parts[5].instances += 1;
    for b in 0..=full {
        let int = space.h_interior_bits(b);
        let cl = space.h_closure_bits(b);
        let ok = int & !b == 0
            && b & !cl == 0
            && space.h_interior_bits(int) == int
            && space.h_closure_bits(cl) == cl
            && (space.is_h_open_bits(b) == (int == b))
            && (space.is_h_closed_bits(b) == (cl == b));
        if !ok {
            parts[5].fail(
                idx,
                set_witness("subset", format!("operator laws break at {}", show(b))),
            );
            break;
        }
    }

    // 6: h-closure is the complement-conjugate of h-interior
    parts[6].instances += 1;
    for b in 0..=full {
        if space.h_closure_bits(b) != full & !space.h_interior_bits(full & !b) {
            parts[6].fail(
                idx,
                set_witness("subset", format!("duality breaks at {}", show(b))),
            );
            break;
        }
    }

    // 7: the scanned family equals the fixed points of h-interior
    parts[7].instances += 1;
    for b in 0..=full {
        if fam.contains_bits(b) != (space.h_interior_bits(b) == b) {
            parts[7].fail(
                idx,
                set_witness("subset", format!("family oracle disagrees at {}", show(b))),
            );
            break;
        }
    }

    parts
}

const MAP_EQUIVALENCE_ID: &str = "h_continuity_characterizations_agree";

const IMPLICATIONS: [(&str, MapPredicate, MapPredicate); 8] = [
    (
        "continuous_implies_h_continuous",
        MapPredicate::Continuous,
        MapPredicate::HContinuous,
    ),
    (
        "open_map_implies_h_open_map",
        MapPredicate::OpenMap,
        MapPredicate::HOpenMap,
    ),
    (
        "h_irresolute_implies_h_continuous",
        MapPredicate::HIrresolute,
        MapPredicate::HContinuous,
    ),
    (
        "homeomorphism_implies_h_homeomorphism",
        MapPredicate::Homeomorphism,
        MapPredicate::HHomeomorphism,
    ),
    (
        "h_totally_continuous_implies_totally_continuous",
        MapPredicate::HTotallyContinuous,
        MapPredicate::TotallyContinuous,
    ),
    (
        "h_totally_continuous_implies_h_irresolute",
        MapPredicate::HTotallyContinuous,
        MapPredicate::HIrresolute,
    ),
    (
        "contra_continuous_implies_h_contra_continuous",
        MapPredicate::ContraContinuous,
        MapPredicate::HContraContinuous,
    ),
    (
        "totally_continuous_implies_h_contra_continuous",
        MapPredicate::TotallyContinuous,
        MapPredicate::HContraContinuous,
    ),
];

/// `antecedent => consequent` pairs swept by [`sweep_map_theorems`] and
/// accepted by the counterexample miner.
pub fn implication_names() -> Vec<(String, String)> {
    IMPLICATIONS
        .iter()
        .map(|(_, a, c)| (a.name().to_string(), c.name().to_string()))
        .collect()
}

/// The map-level claims (five-way characterization agreement plus the eight
/// implications), swept over every map between every ordered pair of spaces
/// with sizes `1..=max_size`.
pub fn sweep_map_theorems(max_size: usize) -> Result<Vec<TheoremReport>, Error> {
    let started = Instant::now();
    let mut sized: Vec<Vec<Arc<NanoSpace>>> = Vec::new();
    for n in 1..=max_size {
        let spaces: Vec<Arc<NanoSpace>> = enumerate_spaces(n)?.collect();
        for s in &spaces {
            s.h_family()?;
        }
        sized.push(spaces);
    }
    let mut pairs: Vec<(Arc<NanoSpace>, Arc<NanoSpace>)> = Vec::new();
    for doms in &sized {
        for cods in &sized {
            for d in doms {
                for c in cods {
                    pairs.push((d.clone(), c.clone()));
                }
            }
        }
    }

    let n_theorems = 1 + IMPLICATIONS.len();
    let partials = pairs
        .par_iter()
        .enumerate()
        .map(|(pair_idx, (d, c))| {
            let mut parts = vec![Partial::default(); n_theorems];
            let maps = enumerate_maps(d, c, false).expect("non-bijective enumeration");
            for (map_idx, map) in maps.enumerate() {
                debug_assert!(map_idx < 1 << 32, "map index must fit the order key");
                let key = ((pair_idx as u64) << 32) | map_idx as u64;
                let cls = map.classify().expect("sweep sizes stay within the cap");
                let conds = map
                    .h_continuity_conditions()
                    .expect("sweep sizes stay within the cap");

                parts[0].instances += 1;
                if !conds.agree() {
                    let arr = conds.as_array();
                    let held: Vec<usize> =
                        (1..=5).filter(|i| arr[i - 1]).collect();
                    let broken: Vec<usize> =
                        (1..=5).filter(|i| !arr[i - 1]).collect();
                    parts[0].fail(key, map_witness(&map, format!("characterizations {held:?}"), format!("characterizations {broken:?}")));
                }

                for (t, (_, ante, cons)) in IMPLICATIONS.iter().enumerate() {
                    parts[t + 1].instances += 1;
                    if ante.eval(&cls) && !cons.eval(&cls) {
                        parts[t + 1].fail(
                            key,
                            map_witness(&map, ante.name().to_string(), cons.name().to_string()),
                        );
                    }
                }
            }
            parts
        })
        .reduce(|| vec![Partial::default(); n_theorems], merge_partials);

    let mut ids = vec![MAP_EQUIVALENCE_ID];
    ids.extend(IMPLICATIONS.iter().map(|(id, _, _)| *id));
    Ok(reports(&ids, partials, started.elapsed()))
}

fn map_witness(map: &PointMap, satisfied: String, violated: String) -> Witness {
    Witness {
        domain: SpaceDescriptor::of(map.domain()),
        codomain: Some(SpaceDescriptor::of(map.codomain())),
        assignment: Some(map.assignment_pairs()),
        satisfied,
        violated,
    }
}

/// Runs both sweeps and concatenates their reports (set-level first).
pub fn verify_theorems(
    max_space_size: usize,
    max_map_size: usize,
) -> Result<Vec<TheoremReport>, Error> {
    let mut out = sweep_space_theorems(max_space_size)?;
    out.extend(sweep_map_theorems(max_map_size)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_sweep_is_clean_at_size_three() {
        let reports = sweep_space_theorems(3).unwrap();
        assert_eq!(reports.len(), 8);
        for r in &reports {
            assert_eq!(r.instances, 50, "{}", r.id); // 2 + 8 + 40 spaces
            assert!(r.passed(), "{} failed: {:?}", r.id, r.failures);
        }
    }

    #[test]
    fn map_sweep_is_clean_at_size_two() {
        let reports = sweep_map_theorems(2).unwrap();
        assert_eq!(reports.len(), 9);
        // pairs: (1,1): 2·2·1, (1,2): 2·8·2, (2,1): 8·2·1, (2,2): 8·8·4 maps
        let expected_maps = 4 + 32 + 16 + 256;
        for r in &reports {
            assert_eq!(r.instances, expected_maps, "{}", r.id);
            assert!(r.passed(), "{} failed: {:?}", r.id, r.failures);
        }
    }

    #[test]
    fn combined_run_is_deterministic() {
        let a = verify_theorems(2, 2).unwrap();
        let b = verify_theorems(2, 2).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.instances, y.instances);
            assert_eq!(x.failures, y.failures);
        }
    }

    #[test]
    fn implication_names_cover_both_directions_of_the_lattice() {
        let names = implication_names();
        assert_eq!(names.len(), 8);
        assert!(names.contains(&("continuous".into(), "h-continuous".into())));
        assert!(names.contains(&("totally-continuous".into(), "h-contra-continuous".into())));
    }
}
