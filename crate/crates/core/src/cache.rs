//! On-disk lattice cache keyed by the ring's table digest. Entries are
//! plain JSON files; anything unreadable is treated as absent and
//! recomputed, so a wiped or corrupted directory only costs time.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::lattice::{enumerate_ideals, IdealLattice, LatticeData};
use crate::ring::FiniteRing;

#[derive(Debug, Clone)]
pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    /// Opens a cache rooted at `dir`, creating the directory if needed.
    pub fn open(dir: &Path) -> std::io::Result<LatticeCache> {
        fs::create_dir_all(dir)?;
        Ok(LatticeCache {
            dir: dir.to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn entry_path(&self, ring: &FiniteRing) -> PathBuf {
        self.dir.join(format!("{}.json", ring.table_digest()))
    }

    /// Returns the cached lattice for `ring`, or None on miss or on any
    /// parse failure.
    pub fn load(&self, ring: &FiniteRing) -> Option<IdealLattice> {
        let bytes = fs::read(self.entry_path(ring)).ok()?;
        let data: LatticeData = serde_json::from_slice(&bytes).ok()?;
        Some(IdealLattice::from_data(ring.clone(), data))
    }

    /// Writes the lattice under the ring's digest. The write goes through a
    /// temp file in the same directory and a rename, so readers never see a
    /// half-written entry.
    pub fn store(&self, lat: &IdealLattice) -> std::io::Result<()> {
        let path = self.entry_path(lat.ring());
        let payload = serde_json::to_vec(&lat.to_data()).expect("lattice data serializes");
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            lat.ring().table_digest()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&payload)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)
    }
}

/// Fetch-or-compute: consults the cache when one is given, stores on miss.
pub fn lattice_for(ring: &FiniteRing, cache: Option<&LatticeCache>) -> IdealLattice {
    if let Some(c) = cache {
        if let Some(lat) = c.load(ring) {
            return lat;
        }
        let lat = enumerate_ideals(ring);
        // A failed store leaves the cache cold but the result is still good.
        let _ = c.store(&lat);
        return lat;
    }
    enumerate_ideals(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    fn temp_cache_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!(
            "hollow-cache-test-{}-{}",
            std::process::id(),
            tag
        ));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn round_trip() {
        let dir = temp_cache_dir("round-trip");
        let cache = LatticeCache::open(&dir).unwrap();
        let ring = make_zmod(12).unwrap();
        assert!(cache.load(&ring).is_none());
        let computed = lattice_for(&ring, Some(&cache));
        let reloaded = cache.load(&ring).expect("stored on miss");
        assert_eq!(computed.to_data(), reloaded.to_data());
        assert_eq!(reloaded.len(), 6);
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn corrupt_entry_recomputed() {
        let dir = temp_cache_dir("corrupt");
        let cache = LatticeCache::open(&dir).unwrap();
        let ring = make_zmod(6).unwrap();
        let lat = lattice_for(&ring, Some(&cache));
        let path = dir.join(format!("{}.json", ring.table_digest()));
        fs::write(&path, b"not json").unwrap();
        assert!(cache.load(&ring).is_none());
        let again = lattice_for(&ring, Some(&cache));
        assert_eq!(lat.to_data(), again.to_data());
        // The overwrite repaired the entry.
        assert!(cache.load(&ring).is_some());
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn digest_keying_separates_rings() {
        let dir = temp_cache_dir("separate");
        let cache = LatticeCache::open(&dir).unwrap();
        let r6 = make_zmod(6).unwrap();
        let r8 = make_zmod(8).unwrap();
        lattice_for(&r6, Some(&cache));
        lattice_for(&r8, Some(&cache));
        assert_eq!(fs::read_dir(&dir).unwrap().count(), 2);
        assert_eq!(cache.load(&r6).unwrap().len(), 4);
        assert_eq!(cache.load(&r8).unwrap().len(), 4);
        let _ = fs::remove_dir_all(&dir);
    }
}
