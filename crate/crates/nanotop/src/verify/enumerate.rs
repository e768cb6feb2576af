//! Canonical enumeration of partitions, spaces, and maps.

use std::sync::Arc;

use crate::error::Error;
use crate::maps::PointMap;
use crate::sets::{canonical_bits_cmp, Partition, Universe};
use crate::topology::{NanoSpace, DEFAULT_ENUMERATION_CAP};

/// Independent partition-count oracle via the Bell triangle; used to
/// cross-check the enumerator, which never consults it.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

/// The universe enumeration runs over: `a`, `b`, `c`, … (or `e1…en` past the
/// alphabet).
pub fn canonical_universe(n: usize) -> Result<Arc<Universe>, Error> {
    let labels: Vec<String> = if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=n).map(|i| format!("e{i}")).collect()
    };
    Universe::new(labels)
}

// Restricted-growth strings in lexicographic order: a[0] = 0 and
// a[i] ≤ max(a[..i]) + 1. Each string is one set partition; block k holds the
// positions labeled k, so blocks come out ordered by smallest member.
struct RgsIter {
    state: Option<Vec<u8>>,
}

impl RgsIter {
    fn new(n: usize) -> Self {
        RgsIter { state: Some(vec![0; n]) }
    }
}

impl Iterator for RgsIter {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let current = self.state.take()?;
        let mut next = current.clone();
        for i in (1..next.len()).rev() {
            let prefix_max = *next[..i].iter().max().unwrap();
            if next[i] <= prefix_max {
                next[i] += 1;
                next[i + 1..].fill(0);
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}

/// All partitions of the universe in canonical (restricted-growth
/// lexicographic) order; `Bell(n)` of them.
pub fn enumerate_partitions(universe: &Arc<Universe>) -> impl Iterator<Item = Partition> {
    let u = universe.clone();
    RgsIter::new(universe.size()).map(move |rgs| {
        let nblocks = usize::from(*rgs.iter().max().unwrap()) + 1;
        let mut masks = vec![0u64; nblocks];
        for (i, &k) in rgs.iter().enumerate() {
            masks[usize::from(k)] |= 1 << i;
        }
        Partition::new(&u, masks.into_iter().map(|m| u.subset_from_bits(m)))
            .expect("restricted-growth blocks always partition the universe")
    })
}

/// All `Bell(n) · 2^n` spaces over the canonical `n`-element universe:
/// partitions in canonical order, then target subsets in canonical subset
/// order within each partition.
pub fn enumerate_spaces(n: usize) -> Result<impl Iterator<Item = Arc<NanoSpace>>, Error> {
    if n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::CapExceeded { size: n, cap: DEFAULT_ENUMERATION_CAP });
    }
    let u = canonical_universe(n)?;
    let mut xs: Vec<u64> = (0..1u64 << n).collect();
    xs.sort_by(|&a, &b| canonical_bits_cmp(a, b));
    Ok(enumerate_partitions(&u).flat_map(move |p| {
        let u = p.universe().clone();
        let xs = xs.clone();
        xs.into_iter()
            .map(move |bits| NanoSpace::build(p.clone(), u.subset_from_bits(bits)))
    }))
}

// Odometer over assignments: digit i is the image of domain element i and
// digit 0 advances fastest.
struct Odometer {
    state: Option<Vec<usize>>,
    base: usize,
}

impl Odometer {
    fn new(len: usize, base: usize) -> Self {
        Odometer { state: (base > 0).then(|| vec![0; len]), base }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.take()?;
        let mut next = current.clone();
        for digit in next.iter_mut() {
            *digit += 1;
            if *digit < self.base {
                self.state = Some(next);
                break;
            }
            *digit = 0;
        }
        Some(current)
    }
}

/// All `|V|^|U|` maps from `domain` to `codomain` in odometer order, or only
/// the bijections (which requires equal sizes).
pub fn enumerate_maps(
    domain: &Arc<NanoSpace>,
    codomain: &Arc<NanoSpace>,
    bijective_only: bool,
) -> Result<impl Iterator<Item = PointMap>, Error> {
    let n = domain.universe().size();
    let m = codomain.universe().size();
    if bijective_only && n != m {
        return Err(Error::UnequalSizes { domain: n, codomain: m });
    }
    let d = domain.clone();
    let c = codomain.clone();
    Ok(Odometer::new(n, m)
        .filter(move |images| {
            if !bijective_only {
                return true;
            }
            let mut seen = 0u64;
            images.iter().all(|&v| {
                let fresh = seen & (1 << v) == 0;
                seen |= 1 << v;
                fresh
            })
        })
        .map(move |images| {
            PointMap::new(d.clone(), c.clone(), images).expect("odometer stays in range")
        }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_triangle_values() {
        let expected = [1u64, 1, 2, 5, 15, 52, 203, 877];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), want, "bell({n})");
        }
    }

    #[test]
    fn partition_counts_match_the_oracle() {
        for n in 1..=6 {
            let u = canonical_universe(n).unwrap();
            assert_eq!(enumerate_partitions(&u).count() as u64, bell_number(n));
        }
    }

    #[test]
    fn partition_stream_is_deduplicated_and_ordered() {
        let u = canonical_universe(4).unwrap();
        let seen: Vec<String> = enumerate_partitions(&u).map(|p| p.to_string()).collect();
        let mut dedup = seen.clone();
        dedup.dedup();
        assert_eq!(seen, dedup);
        assert_eq!(seen.first().map(String::as_str), Some("{{a, b, c, d}}"));
        assert_eq!(seen.last().map(String::as_str), Some("{{a}, {b}, {c}, {d}}"));
    }

    #[test]
    fn space_counts() {
        for (n, want) in [(1usize, 2u64), (2, 8), (3, 40), (4, 240)] {
            let got = enumerate_spaces(n).unwrap().count() as u64;
            assert_eq!(got, want);
            assert_eq!(got, bell_number(n) * (1 << n));
        }
    }

    #[test]
    fn space_stream_has_no_duplicates() {
        let mut seen = std::collections::HashSet::new();
        for s in enumerate_spaces(3).unwrap() {
            let key = (s.partition().to_string(), s.target().bits());
            assert!(seen.insert(key), "duplicate space in the stream");
        }
        assert_eq!(seen.len(), 40);
    }

    #[test]
    fn size_bounds() {
        assert!(matches!(enumerate_spaces(0), Err(Error::EmptyUniverse)));
        assert!(matches!(
            enumerate_spaces(17),
            Err(Error::CapExceeded { size: 17, cap: 16 })
        ));
    }

    #[test]
    fn map_counts() {
        let d3 = enumerate_spaces(3).unwrap().next().unwrap();
        let c3 = enumerate_spaces(3).unwrap().next().unwrap();
        assert_eq!(enumerate_maps(&d3, &c3, false).unwrap().count(), 27);
        assert_eq!(enumerate_maps(&d3, &c3, true).unwrap().count(), 6);
        let d2 = enumerate_spaces(2).unwrap().next().unwrap();
        assert_eq!(enumerate_maps(&d2, &c3, false).unwrap().count(), 9);
        assert!(matches!(
            enumerate_maps(&d2, &c3, true),
            Err(Error::UnequalSizes { domain: 2, codomain: 3 })
        ));
    }

    #[test]
    fn map_stream_is_total_and_ordered() {
        let d = enumerate_spaces(2).unwrap().next().unwrap();
        let c = enumerate_spaces(2).unwrap().next().unwrap();
        let images: Vec<Vec<usize>> = enumerate_maps(&d, &c, false)
            .unwrap()
            .map(|f| f.images().to_vec())
            .collect();
        assert_eq!(
            images,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]
        );
    }
}
