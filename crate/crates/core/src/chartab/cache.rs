//! On-disk cache of degree multisets, one file per group fingerprint.
//!
//! ```text
//! GINVCACHE 1
//! <fingerprint hex>
//! <group order>
//! <degree:multiplicity ...>
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

use super::degrees::{parse_pairs, DegreeMultiset};
use crate::error::CharTableError;
use crate::perm::PermGroup;

const HEADER: &str = "GINVCACHE 1";
const EXTENSION: &str = "ginv";

/// SHA-256 over the degree and the sorted generator image arrays.
pub fn fingerprint(g: &PermGroup) -> String {
    let mut h = Sha256::new();
    h.update(format!("degree {}\n", g.degree()));
    for images in g.sorted_generator_images() {
        let line: Vec<String> = images.iter().map(u32::to_string).collect();
        h.update(line.join(" "));
        h.update("\n");
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub entries: usize,
    pub bytes: u64,
}

#[derive(Clone, Debug)]
pub struct DegreeCache {
    dir: PathBuf,
}

impl DegreeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DegreeCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, fp: &str) -> PathBuf {
        self.dir.join(format!("{fp}.{EXTENSION}"))
    }

    /// Returns the stored multiset, or `None` on a miss. Unreadable,
    /// malformed or mismatched entries count as misses.
    pub fn get(&self, fp: &str) -> Option<DegreeMultiset> {
        let text = fs::read_to_string(self.path_for(fp)).ok()?;
        decode(&text, fp)
    }

    /// Writes an entry atomically (temporary file, then rename).
    pub fn put(&self, fp: &str, degrees: &DegreeMultiset) -> Result<(), CharTableError> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(
            ".{fp}.{}.{}.tmp",
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(encode(fp, degrees).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path_for(fp)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })?;
        Ok(())
    }

    pub fn stats(&self) -> Result<CacheStats, CharTableError> {
        let mut stats = CacheStats::default();
        for path in self.entry_paths()? {
            stats.entries += 1;
            stats.bytes += fs::metadata(&path)?.len();
        }
        Ok(stats)
    }

    /// Removes every entry; returns how many were deleted.
    pub fn clear(&self) -> Result<usize, CharTableError> {
        let paths = self.entry_paths()?;
        for p in &paths {
            fs::remove_file(p)?;
        }
        Ok(paths.len())
    }

    fn entry_paths(&self) -> Result<Vec<PathBuf>, CharTableError> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for entry in entries {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == EXTENSION) {
                out.push(path);
            }
        }
        out.sort();
        Ok(out)
    }
}

pub fn encode(fp: &str, degrees: &DegreeMultiset) -> String {
    format!("{HEADER}\n{fp}\n{}\n{degrees}\n", degrees.group_order())
}

pub fn decode(text: &str, fp: &str) -> Option<DegreeMultiset> {
    let mut lines = text.lines();
    if lines.next()? != HEADER || lines.next()? != fp {
        return None;
    }
    let order: u64 = lines.next()?.trim().parse().ok()?;
    let pairs = parse_pairs(lines.next()?).ok()?;
    if lines.next().is_some() {
        return None;
    }
    DegreeMultiset::from_pairs(order, &pairs).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::symmetric;

    #[test]
    fn encoding_is_bit_exact() {
        let d = DegreeMultiset::from_degrees(24, &[1, 1, 2, 3, 3]).unwrap();
        let text = encode("ab12", &d);
        assert_eq!(text, "GINVCACHE 1\nab12\n24\n1:2 2:1 3:2\n");
        assert_eq!(decode(&text, "ab12"), Some(d.clone()));
        assert_eq!(encode("ab12", &decode(&text, "ab12").unwrap()), text);
        assert_eq!(decode(&text, "ffff"), None);
        assert_eq!(decode(&text.replace("GINVCACHE 1", "GINVCACHE 2"), "ab12"), None);
        assert_eq!(decode(&text.replace("24", "25"), "ab12"), None);
    }

    #[test]
    fn fingerprint_depends_on_generators_not_their_order() {
        let g = symmetric(4).unwrap();
        let mut gens = g.generators().to_vec();
        gens.reverse();
        let h = PermGroup::new(4, gens).unwrap();
        assert_eq!(fingerprint(&g), fingerprint(&h));
        assert_ne!(fingerprint(&g), fingerprint(&symmetric(5).unwrap()));
        assert_eq!(fingerprint(&g).len(), 64);
    }
}
