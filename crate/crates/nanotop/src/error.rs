use thiserror::Error;

/// Errors reported by constructors and by operations that enumerate powersets.
///
/// Mixing objects bound to different universes is a contract violation and
/// panics instead of returning one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe needs at least one element")]
    EmptyUniverse,
    #[error("element labels must be non-empty")]
    EmptyLabel,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("universe of {size} elements exceeds the representable maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("partition blocks may not be empty")]
    EmptyBlock,
    #[error("partition blocks overlap on `{0}`")]
    OverlappingBlocks(String),
    #[error("partition does not cover `{0}`")]
    UncoveredElement(String),
    #[error("universe of {size} elements exceeds the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("no image assigned for `{0}`")]
    MissingImage(String),
    #[error("map images must be codomain element indices, got {index}")]
    ImageOutOfRange { index: usize },
    #[error("bijection enumeration needs equally sized universes, got {domain} and {codomain}")]
    UnequalSizes { domain: usize, codomain: usize },
    #[error("unknown map class `{0}`")]
    UnknownMapClass(String),
}
