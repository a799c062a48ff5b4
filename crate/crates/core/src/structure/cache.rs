//! On-disk lattice cache.
//!
//! A cache file stores the subgroup list of one group as sorted
//! element-index arrays. Files are keyed by a hash of the degree, the
//! canonical generator text and the format version, and carry a second hash
//! over their subgroup content. A file that fails either check is rejected.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::lattice::SubgroupLattice;
use super::table::TabulatedGroup;
use crate::error::{Error, Result};
use crate::group::PermGroup;

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    degree: usize,
    generators: Vec<String>,
    group_hash: String,
    content_hash: String,
    subgroups: Vec<Vec<usize>>,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Hash of the group's presentation; used both as the file key and to
/// reject caches written for another group.
pub fn group_hash(group: &PermGroup) -> String {
    let mut h = Sha256::new();
    h.update(format!("hamiltonia-lattice-v{CACHE_FORMAT_VERSION}\n"));
    h.update(format!("degree {}\n", group.degree()));
    for g in group.canonical_generators() {
        h.update(format!("gen {g}\n"));
    }
    hex(&h.finalize())
}

fn content_hash(subgroups: &[Vec<usize>]) -> String {
    let mut h = Sha256::new();
    for s in subgroups {
        let line: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        h.update(line.join(","));
        h.update("\n");
    }
    hex(&h.finalize())
}

pub fn cache_path(dir: &Path, group: &PermGroup) -> PathBuf {
    dir.join(format!("lattice-{}.json", &group_hash(group)[..32]))
}

pub fn save_lattice(path: &Path, lattice: &SubgroupLattice) -> Result<()> {
    let group = lattice.parent().group();
    let subgroups: Vec<Vec<usize>> = lattice.subgroups().iter().map(|h| h.element_indices()).collect();
    let file = CacheFile {
        format_version: CACHE_FORMAT_VERSION,
        degree: group.degree(),
        generators: group.canonical_generators(),
        group_hash: group_hash(group),
        content_hash: content_hash(&subgroups),
        subgroups,
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&file)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Loads a cached lattice for `parent`, validating the format version, both
/// hashes, and that every stored set is a subgroup.
pub fn load_lattice(path: &Path, parent: &Arc<TabulatedGroup>) -> Result<SubgroupLattice> {
    let bytes = fs::read(path)?;
    let file: CacheFile = serde_json::from_slice(&bytes)?;
    let group = parent.group();
    if file.format_version != CACHE_FORMAT_VERSION {
        return Err(Error::Cache(format!("format version {}", file.format_version)));
    }
    if file.degree != group.degree()
        || file.generators != group.canonical_generators()
        || file.group_hash != group_hash(group)
    {
        return Err(Error::Cache("group hash mismatch".into()));
    }
    if file.content_hash != content_hash(&file.subgroups) {
        return Err(Error::Cache("content hash mismatch".into()));
    }
    let n = parent.size();
    let mut seen = std::collections::HashSet::new();
    let mut subgroups = Vec::with_capacity(file.subgroups.len());
    for indices in &file.subgroups {
        let mut members = FixedBitSet::with_capacity(n);
        for &i in indices {
            if i >= n {
                return Err(Error::Cache(format!("element index {i} out of range")));
            }
            members.insert(i);
        }
        if !seen.insert(members.clone()) {
            return Err(Error::Cache("duplicate subgroup".into()));
        }
        let h = parent
            .try_subgroup(members)
            .ok_or_else(|| Error::Cache("stored set is not a subgroup".into()))?;
        subgroups.push(h);
    }
    if subgroups.iter().all(|h| !h.is_trivial()) || subgroups.iter().all(|h| !h.is_whole()) {
        return Err(Error::Cache("trivial or whole group missing".into()));
    }
    Ok(SubgroupLattice::from_subgroups(parent, subgroups))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    /// Loaded from an existing file.
    Hit,
    /// No file existed; computed and written.
    Built,
    /// A file existed but was rejected; recomputed and overwritten.
    Rebuilt(String),
    /// Computed, but the cache file could not be written.
    Unsaved(String),
}

/// Returns the lattice of `parent`, using `dir` as a cache directory.
/// A rejected cache file is replaced, never trusted.
pub fn load_or_build(dir: &Path, parent: &Arc<TabulatedGroup>) -> Result<(SubgroupLattice, CacheStatus)> {
    let path = cache_path(dir, parent.group());
    let mut status = CacheStatus::Built;
    if path.exists() {
        match load_lattice(&path, parent) {
            Ok(l) => return Ok((l, CacheStatus::Hit)),
            Err(e) => status = CacheStatus::Rebuilt(e.to_string()),
        }
    }
    let lattice = SubgroupLattice::build(parent)?;
    if let Err(e) = save_lattice(&path, &lattice) {
        status = CacheStatus::Unsaved(e.to_string());
    }
    Ok((lattice, status))
}
