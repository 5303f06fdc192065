//! On-disk ideal-lattice cache, keyed by a SHA-256 hash of the ring's
//! tables. Writers go through a temp file and an atomic rename; readers are
//! validated structurally and spot-checked against a full re-derivation
//! (every time in verify-all mode, a deterministic 1-in-8 sample otherwise).

use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use idealforge_core::elem::ElemSet;
use idealforge_core::ideal::is_ideal_set;
use idealforge_core::ring::{LatticeStore, RingTable};

#[derive(Serialize, Deserialize)]
struct CacheFile {
    order: usize,
    label: String,
    ideals: Vec<Vec<usize>>,
}

pub struct DiskLatticeCache {
    dir: PathBuf,
    verify_all: bool,
    counter: AtomicU64,
}

impl DiskLatticeCache {
    pub fn open(dir: &Path, verify_all: bool) -> std::io::Result<DiskLatticeCache> {
        fs::create_dir_all(dir)?;
        Ok(DiskLatticeCache {
            dir: dir.to_path_buf(),
            verify_all,
            counter: AtomicU64::new(0),
        })
    }

    pub fn key(ring: &RingTable) -> String {
        let digest = Sha256::digest(ring.content_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path_for(&self, ring: &RingTable) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(ring)))
    }

    fn should_verify(&self) -> bool {
        self.verify_all || self.counter.fetch_add(1, Ordering::Relaxed) % 8 == 0
    }
}

impl LatticeStore for DiskLatticeCache {
    fn load(&self, ring: &RingTable) -> Option<Vec<ElemSet>> {
        let path = self.path_for(ring);
        let text = fs::read_to_string(&path).ok()?;
        let file: CacheFile = match serde_json::from_str(&text) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("warning: unreadable cache entry {}: {e}", path.display());
                return None;
            }
        };
        if file.order != ring.order() {
            eprintln!("warning: cache entry {} has wrong order", path.display());
            return None;
        }
        let mut lattice = Vec::with_capacity(file.ideals.len());
        for members in file.ideals {
            if members.iter().any(|&m| m >= ring.order()) {
                eprintln!("warning: cache entry {} out of range", path.display());
                return None;
            }
            lattice.push(ElemSet::from_indices(ring.order(), members));
        }
        // Structural check: every cached set must actually be an ideal.
        for set in &lattice {
            if !is_ideal_set(ring, set) {
                eprintln!(
                    "warning: cache entry {} contains a non-ideal; ignoring",
                    path.display()
                );
                return None;
            }
        }
        if self.should_verify() {
            let fresh = ring.recompute_lattice();
            if fresh != lattice {
                eprintln!(
                    "warning: cache entry {} disagrees with re-derivation; ignoring",
                    path.display()
                );
                return None;
            }
        }
        Some(lattice)
    }

    fn save(&self, ring: &RingTable, lattice: &[ElemSet]) {
        let file = CacheFile {
            order: ring.order(),
            label: ring.label().to_string(),
            ideals: lattice
                .iter()
                .map(|s| s.iter().map(|e| e.index()).collect())
                .collect(),
        };
        let path = self.path_for(ring);
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            process::id(),
            path.file_name().unwrap().to_string_lossy()
        ));
        let Ok(text) = serde_json::to_string(&file) else {
            return;
        };
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use idealforge_core::make_zn;

    #[test]
    fn roundtrip_and_verification() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskLatticeCache::open(dir.path(), true).unwrap();
        let z12 = make_zn(12).unwrap();
        let lattice = z12.recompute_lattice();
        cache.save(&z12, &lattice);
        let loaded = cache.load(&z12).expect("cache hit");
        assert_eq!(loaded, lattice);
    }

    #[test]
    fn corrupted_entry_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskLatticeCache::open(dir.path(), true).unwrap();
        let z6 = make_zn(6).unwrap();
        let lattice = z6.recompute_lattice();
        cache.save(&z6, &lattice);
        // Drop one ideal from the stored file; re-derivation must notice.
        let path = dir.path().join(format!("{}.json", DiskLatticeCache::key(&z6)));
        let text = fs::read_to_string(&path).unwrap();
        let mut file: CacheFile = serde_json::from_str(&text).unwrap();
        file.ideals.pop();
        fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(cache.load(&z6).is_none());
    }

    #[test]
    fn non_ideal_entry_is_rejected_structurally() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskLatticeCache::open(dir.path(), false).unwrap();
        let z6 = make_zn(6).unwrap();
        let path = dir.path().join(format!("{}.json", DiskLatticeCache::key(&z6)));
        let file = CacheFile {
            order: 6,
            label: "Z6".into(),
            ideals: vec![vec![0], vec![0, 1], vec![0, 1, 2, 3, 4, 5]],
        };
        fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(cache.load(&z6).is_none());
    }

    #[test]
    fn keys_depend_on_tables() {
        let z6 = make_zn(6).unwrap();
        let z8 = make_zn(8).unwrap();
        assert_ne!(DiskLatticeCache::key(&z6), DiskLatticeCache::key(&z8));
        let z6b = make_zn(6).unwrap();
        assert_eq!(DiskLatticeCache::key(&z6), DiskLatticeCache::key(&z6b));
    }
}
