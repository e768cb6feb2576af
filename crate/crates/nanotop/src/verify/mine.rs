//! Search for the canonically first map refuting `antecedent => consequent`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Error;
use crate::maps::MapClassification;
use crate::topology::NanoSpace;
use crate::verify::enumerate::{enumerate_maps, enumerate_spaces};
use crate::verify::{SpaceDescriptor, Witness};

/// One of the eleven map classes a classification records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapPredicate {
    Continuous,
    OpenMap,
    Homeomorphism,
    TotallyContinuous,
    ContraContinuous,
    HContinuous,
    HOpenMap,
    HIrresolute,
    HHomeomorphism,
    HTotallyContinuous,
    HContraContinuous,
}

impl MapPredicate {
    /// Every predicate, in classification order.
    pub const ALL: [MapPredicate; 11] = [
        MapPredicate::Continuous,
        MapPredicate::OpenMap,
        MapPredicate::Homeomorphism,
        MapPredicate::TotallyContinuous,
        MapPredicate::ContraContinuous,
        MapPredicate::HContinuous,
        MapPredicate::HOpenMap,
        MapPredicate::HIrresolute,
        MapPredicate::HHomeomorphism,
        MapPredicate::HTotallyContinuous,
        MapPredicate::HContraContinuous,
    ];

    /// Stable kebab-case name, also accepted by [`MapPredicate::parse`].
    pub fn name(&self) -> &'static str {
        match self {
            MapPredicate::Continuous => "continuous",
            MapPredicate::OpenMap => "open",
            MapPredicate::Homeomorphism => "homeomorphism",
            MapPredicate::TotallyContinuous => "totally-continuous",
            MapPredicate::ContraContinuous => "contra-continuous",
            MapPredicate::HContinuous => "h-continuous",
            MapPredicate::HOpenMap => "h-open",
            MapPredicate::HIrresolute => "h-irresolute",
            MapPredicate::HHomeomorphism => "h-homeomorphism",
            MapPredicate::HTotallyContinuous => "h-totally-continuous",
            MapPredicate::HContraContinuous => "h-contra-continuous",
        }
    }

    /// Inverse of [`MapPredicate::name`].
    pub fn parse(name: &str) -> Result<MapPredicate, Error> {
        MapPredicate::ALL
            .iter()
            .copied()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::UnknownMapClass(name.to_string()))
    }

    /// Reads this predicate's verdict off a classification.
    pub fn eval(&self, cls: &MapClassification) -> bool {
        match self {
            MapPredicate::Continuous => cls.nano_continuous,
            MapPredicate::OpenMap => cls.nano_open_map,
            MapPredicate::Homeomorphism => cls.nano_homeomorphism,
            MapPredicate::TotallyContinuous => cls.nano_totally_continuous,
            MapPredicate::ContraContinuous => cls.nano_contra_continuous,
            MapPredicate::HContinuous => cls.h_continuous,
            MapPredicate::HOpenMap => cls.h_open_map,
            MapPredicate::HIrresolute => cls.h_irresolute,
            MapPredicate::HHomeomorphism => cls.h_homeomorphism,
            MapPredicate::HTotallyContinuous => cls.h_totally_continuous,
            MapPredicate::HContraContinuous => cls.h_contra_continuous,
        }
    }
}

/// Finds the first map (by domain size, codomain size, then enumeration
/// order) that satisfies `antecedent` but violates `consequent`, searching
/// domains up to `max_domain` elements and codomains up to `max_codomain`.
/// Returns `None` when the implication holds everywhere in that range.
pub fn mine_counterexample(
    antecedent: MapPredicate,
    consequent: MapPredicate,
    max_domain: usize,
    max_codomain: usize,
) -> Result<Option<Witness>, Error> {
    let mut domains: Vec<Vec<Arc<NanoSpace>>> = Vec::new();
    for n in 1..=max_domain {
        let spaces: Vec<Arc<NanoSpace>> = enumerate_spaces(n)?.collect();
        for s in &spaces {
            s.h_family()?;
        }
        domains.push(spaces);
    }
    let mut codomains: Vec<Vec<Arc<NanoSpace>>> = Vec::new();
    for m in 1..=max_codomain {
        if m <= max_domain {
            codomains.push(domains[m - 1].clone());
        } else {
            let spaces: Vec<Arc<NanoSpace>> = enumerate_spaces(m)?.collect();
            for s in &spaces {
                s.h_family()?;
            }
            codomains.push(spaces);
        }
    }

    let mut pairs: Vec<(Arc<NanoSpace>, Arc<NanoSpace>)> = Vec::new();
    for doms in &domains {
        for cods in &codomains {
            for d in doms {
                for c in cods {
                    pairs.push((d.clone(), c.clone()));
                }
            }
        }
    }

    let found = pairs.par_iter().find_map_first(|(d, c)| {
        let maps = enumerate_maps(d, c, false).expect("non-bijective enumeration");
        for map in maps {
            let cls = map.classify().expect("mining sizes stay within the cap");
            if antecedent.eval(&cls) && !consequent.eval(&cls) {
                return Some(Witness {
                    domain: SpaceDescriptor::of(d),
                    codomain: Some(SpaceDescriptor::of(c)),
                    assignment: Some(map.assignment_pairs()),
                    satisfied: antecedent.name().to_string(),
                    violated: consequent.name().to_string(),
                });
            }
        }
        None
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in MapPredicate::ALL {
            assert_eq!(MapPredicate::parse(p.name()).unwrap(), p);
        }
        assert!(matches!(
            MapPredicate::parse("h-open-map"),
            Err(Error::UnknownMapClass(s)) if s == "h-open-map"
        ));
    }

    #[test]
    fn forward_implication_yields_no_counterexample() {
        let got = mine_counterexample(
            MapPredicate::Continuous,
            MapPredicate::HContinuous,
            2,
            2,
        )
        .unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn converse_counterexample_is_found_verified_and_stable() {
        let first = mine_counterexample(
            MapPredicate::HContinuous,
            MapPredicate::Continuous,
            2,
            2,
        )
        .unwrap()
        .expect("a size-2 witness exists");
        assert!(first.replay_confirms().unwrap());
        let again = mine_counterexample(
            MapPredicate::HContinuous,
            MapPredicate::Continuous,
            2,
            2,
        )
        .unwrap()
        .unwrap();
        assert_eq!(first, again);
    }

    #[test]
    fn mining_respects_the_size_budget() {
        // At size 1 every space is indiscrete, so every map is continuous
        // and no separation between the classes can appear.
        let got = mine_counterexample(
            MapPredicate::HContinuous,
            MapPredicate::Continuous,
            1,
            1,
        )
        .unwrap();
        assert!(got.is_none());
    }
}
