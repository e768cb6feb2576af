//! On-disk descriptions of spaces and maps, and how they become values.
//!
//! A space file is a JSON object with exactly the fields `universe`,
//! `partition`, and `x`, each holding element labels. A map file holds a
//! `domain`, a `codomain` — either inline space objects or string paths
//! resolved relative to the referencing file — and a `map` object assigning
//! a codomain label to every domain label.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use nanotop::{NanoSpace, Partition, PointMap, Universe};

use crate::report::CliError;

/// Serialized form of one space: universe labels, partition blocks, target.
/// Extra fields are tolerated so a full space report re-parses as its own
/// description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub universe: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub x: Vec<String>,
}

/// A space given inline or by path relative to the referencing file.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Path(String),
    Inline(SpaceFile),
}

/// Serialized form of one map between two spaces.
#[derive(Debug, Clone, Deserialize)]
pub struct MapFile {
    pub domain: SpaceRef,
    pub codomain: SpaceRef,
    pub map: BTreeMap<String, String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_space(text: &str, origin: &Path) -> Result<SpaceFile, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", origin.display())))
}

/// Loads and parses a space file.
pub fn load_space_file(path: &Path) -> Result<SpaceFile, CliError> {
    parse_space(&read(path)?, path)
}

/// Loads and parses a map file.
pub fn load_map_file(path: &Path) -> Result<MapFile, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))
}

/// Resolves a space reference appearing inside the file at `referrer`.
pub fn resolve_space_ref(r: &SpaceRef, referrer: &Path) -> Result<SpaceFile, CliError> {
    match r {
        SpaceRef::Inline(f) => Ok(f.clone()),
        SpaceRef::Path(rel) => {
            let base: PathBuf = referrer.parent().map_or_else(PathBuf::new, Path::to_path_buf);
            load_space_file(&base.join(rel))
        }
    }
}

/// Validates the description and assembles the space, optionally overriding
/// the cap that gates h-family computations.
pub fn build_space(file: &SpaceFile, cap: Option<usize>) -> Result<Arc<NanoSpace>, CliError> {
    let u = Universe::new(file.universe.iter().cloned()).map_err(CliError::from)?;
    let p = Partition::from_label_blocks(&u, file.partition.iter().map(|b| b.iter()))
        .map_err(CliError::from)?;
    let x = u.subset(file.x.iter()).map_err(CliError::from)?;
    Ok(match cap {
        Some(c) => NanoSpace::with_cap(p, x, c),
        None => NanoSpace::build(p, x),
    })
}

/// Assembles the map a map file describes, resolving space references
/// against the map file's own location.
pub fn build_map(
    file: &MapFile,
    map_path: &Path,
    cap: Option<usize>,
) -> Result<PointMap, CliError> {
    let d = build_space(&resolve_space_ref(&file.domain, map_path)?, cap)?;
    let c = build_space(&resolve_space_ref(&file.codomain, map_path)?, cap)?;
    PointMap::from_pairs(d, c, file.map.iter().map(|(k, v)| (k.as_str(), v.as_str())))
        .map_err(CliError::from)
}

/// Parses a comma-separated label list; the empty string is the empty set.
pub fn parse_label_list(raw: &str) -> Vec<String> {
    if raw.trim().is_empty() {
        Vec::new()
    } else {
        raw.split(',').map(|s| s.trim().to_string()).collect()
    }
}

/// The description of a space as the tool would emit it.
pub fn space_file_of(space: &NanoSpace) -> SpaceFile {
    SpaceFile {
        universe: space.universe().labels().to_vec(),
        partition: space.partition().block_label_lists(),
        x: space.target().to_labels(),
    }
}
