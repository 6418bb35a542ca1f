//! On-disk graph catalogs for orders past the built-in enumeration cap.
//!
//! Two files back the large sweeps: `graph9.g6`, every isomorphism class of
//! order 9 (one canonical graph6 line each, sorted), and `cubic10.g6`, every
//! cubic graph of order 10. Both are generated deterministically on first
//! use into the cache directory and checked against `data/MANIFEST.json`
//! (line count and SHA-256) on every access, so a stale or truncated cache
//! is rebuilt rather than trusted.
//!
//! The cubic catalog is derived, not searched for: deleting any vertex of a
//! cubic order-10 graph leaves an order-9 graph with degree multiset
//! {2,2,2,3,3,3,3,3,3}, which is in the order-9 catalog; conversely such a
//! graph has a unique cubic extension (the new vertex must be joined to
//! exactly the three degree-2 vertices). Extending every matching catalog
//! entry and deduplicating by canonical form is therefore exhaustive.

use crate::graph::Graph;
use crate::graph6::{emit_graph6, enumerate_all, extend_level, Graph6Error, Graph6Reader};
use crate::graph6::{canonical_form, CanonicalForm};
use serde::Deserialize;
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use thiserror::Error;

pub const GRAPH9: &str = "graph9.g6";
pub const CUBIC10: &str = "cubic10.g6";

#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
pub struct ManifestEntry {
    pub lines: u64,
    pub sha256: String,
}

pub type Manifest = BTreeMap<String, ManifestEntry>;

/// The checked-in manifest, compiled into the binary.
pub fn manifest() -> &'static Manifest {
    static MANIFEST: OnceLock<Manifest> = OnceLock::new();
    MANIFEST.get_or_init(|| {
        serde_json::from_str(include_str!("../../../data/MANIFEST.json"))
            .expect("data/MANIFEST.json parses")
    })
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("no manifest entry for {0}")]
    UnknownFile(String),
    #[error("{name}: {field} mismatch: manifest says {want}, file has {got}")]
    Mismatch {
        name: String,
        field: &'static str,
        want: String,
        got: String,
    },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// Cache directory: `PDNG_DATA_DIR` if set, else `pdng-data` under the
/// nearest `target` ancestor of the running executable (so every cargo
/// invocation shares one cache), else `./target/pdng-data`.
pub fn data_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("PDNG_DATA_DIR") {
        return PathBuf::from(dir);
    }
    if let Ok(exe) = std::env::current_exe() {
        for dir in exe.ancestors() {
            if dir.file_name().is_some_and(|f| f == "target") {
                return dir.join("pdng-data");
            }
        }
    }
    PathBuf::from("target").join("pdng-data")
}

/// Line count and SHA-256 of a file, in manifest form.
pub fn describe(path: &Path) -> io::Result<ManifestEntry> {
    let mut file = File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 1 << 16];
    loop {
        let read = file.read(&mut buf)?;
        if read == 0 {
            break;
        }
        hasher.update(&buf[..read]);
    }
    let mut sha256 = String::with_capacity(64);
    for byte in hasher.finalize() {
        write!(sha256, "{byte:02x}").expect("string write");
    }
    let lines = BufReader::new(File::open(path)?).lines().count() as u64;
    Ok(ManifestEntry { lines, sha256 })
}

/// Check one cache file against its manifest entry.
pub fn verify(dir: &Path, name: &str) -> Result<(), CatalogError> {
    let want = manifest()
        .get(name)
        .ok_or_else(|| CatalogError::UnknownFile(name.to_string()))?;
    let got = describe(&dir.join(name))?;
    if got.lines != want.lines {
        return Err(CatalogError::Mismatch {
            name: name.to_string(),
            field: "line count",
            want: want.lines.to_string(),
            got: got.lines.to_string(),
        });
    }
    if got.sha256 != want.sha256 {
        return Err(CatalogError::Mismatch {
            name: name.to_string(),
            field: "sha256",
            want: want.sha256.clone(),
            got: got.sha256,
        });
    }
    Ok(())
}

/// Path to a verified catalog file in the default cache, generating it
/// first if missing or stale.
pub fn ensure(name: &str) -> Result<PathBuf, CatalogError> {
    ensure_in(&data_dir(), name)
}

/// Same, in an explicit cache directory.
pub fn ensure_in(dir: &Path, name: &str) -> Result<PathBuf, CatalogError> {
    let path = dir.join(name);
    if !path.exists() {
        generate_into(dir, name)?;
    } else if verify(dir, name).is_err() {
        // Stale or truncated cache: rebuild once, then insist.
        generate_into(dir, name)?;
    }
    verify(dir, name)?;
    Ok(path)
}

fn generate_into(dir: &Path, name: &str) -> Result<(), CatalogError> {
    fs::create_dir_all(dir)?;
    let graphs = match name {
        GRAPH9 => build_order9(),
        CUBIC10 => {
            let nine = ensure_in(dir, GRAPH9)?;
            let reader = Graph6Reader::new(BufReader::new(File::open(nine)?), true);
            build_cubic10(reader)?
        }
        _ => return Err(CatalogError::UnknownFile(name.to_string())),
    };
    // Write-then-rename so an interrupted run never leaves a plausible file.
    // The tmp name is unique per process and call: concurrent regenerations
    // (parallel tests) then cannot interleave writes, and since generation is
    // deterministic whichever rename lands last leaves identical bytes.
    use std::sync::atomic::{AtomicU64, Ordering};
    static TMP_SEQ: AtomicU64 = AtomicU64::new(0);
    let tmp = dir.join(format!(
        "{name}.{}.{}.tmp",
        std::process::id(),
        TMP_SEQ.fetch_add(1, Ordering::Relaxed)
    ));
    let mut out = BufWriter::new(File::create(&tmp)?);
    for g in &graphs {
        writeln!(out, "{}", emit_graph6(g))?;
    }
    out.flush()?;
    drop(out);
    fs::rename(&tmp, dir.join(name))?;
    Ok(())
}

/// Every isomorphism class of order 9, by one extension sweep over the
/// order-8 enumeration. Minutes of canonicalization; done once per cache.
fn build_order9() -> Vec<Graph> {
    let eights = enumerate_all(8).expect("8 is within the enumeration cap");
    extend_level(&eights)
}

const CUBIC10_PARENT_DEGREES: [usize; 9] = [2, 2, 2, 3, 3, 3, 3, 3, 3];

/// All cubic graphs of order 10, from an order-9 catalog stream. See the
/// module notes for why this is exhaustive.
fn build_cubic10<R: BufRead>(
    reader: Graph6Reader<R>,
) -> Result<Vec<Graph>, Graph6Error> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for item in reader {
        let (_, g) = item?;
        if g.order() != 9 {
            continue;
        }
        let mut degrees: Vec<usize> = (0..9).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        if degrees != CUBIC10_PARENT_DEGREES {
            continue;
        }
        let low: u64 = (0..9).filter(|&v| g.degree(v) == 2).map(|v| 1 << v).sum();
        let mut adj: Vec<u64> = (0..9)
            .map(|v| g.neighbors(v).0 | ((low >> v & 1) << 9))
            .collect();
        adj.push(low);
        let form = canonical_form(&Graph::from_adj(adj));
        if seen.insert(form.clone()) {
            out.push(form.into_graph());
        }
    }
    out.sort_by_key(emit_graph6);
    Ok(out)
}
