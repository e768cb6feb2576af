//! Rough-set approximations of a subset with respect to a partition.

use crate::sets::{Partition, Subset};

/// Lower approximation, upper approximation, and boundary region of one
/// target subset, computed in a single pass over the blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub lower: Subset,
    pub upper: Subset,
    pub boundary: Subset,
}

/// Union of the blocks entirely contained in `x`.
pub fn lower_approximation(partition: &Partition, x: &Subset) -> Subset {
    approximate(partition, x).lower
}

/// Union of the blocks meeting `x`.
pub fn upper_approximation(partition: &Partition, x: &Subset) -> Subset {
    approximate(partition, x).upper
}

/// Upper approximation minus lower approximation.
pub fn boundary_region(partition: &Partition, x: &Subset) -> Subset {
    approximate(partition, x).boundary
}

/// A set is rough exactly when its approximations differ.
pub fn is_rough(partition: &Partition, x: &Subset) -> bool {
    let a = approximate(partition, x);
    a.lower != a.upper
}

pub fn approximate(partition: &Partition, x: &Subset) -> Approximation {
    assert!(
        partition.universe() == x.universe(),
        "approximating a subset against a partition of a different universe"
    );
    let mut lower = 0u64;
    let mut upper = 0u64;
    for block in partition.blocks() {
        let b = block.bits();
        if b & !x.bits() == 0 {
            lower |= b;
        }
        if b & x.bits() != 0 {
            upper |= b;
        }
    }
    let u = x.universe();
    Approximation {
        lower: u.subset_from_bits(lower),
        upper: u.subset_from_bits(upper),
        boundary: u.subset_from_bits(upper & !lower),
    }
}
