//! On-disk cache of generated tables, one JSON file per
//! `(family, r_vec, n_max)`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::chromatic::Engine;
use crate::error::Result;

use super::{Family, TriangleTable};

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// `None` for custom recurrences, which are not cached.
    pub fn path_for(&self, family: &Family, n_max: usize) -> Option<PathBuf> {
        if matches!(family, Family::Custom(_)) {
            return None;
        }
        let r: Vec<_> = family.r_vec().iter().map(|x| x.to_string()).collect();
        let r = if r.is_empty() { "none".to_string() } else { r.join("_") };
        Some(self.dir.join(format!("{}-{}-{}.json", family.name(), r, n_max)))
    }

    /// Reads a cached table or generates and writes it. A cache file that
    /// fails to parse, or describes a different table, is regenerated.
    pub fn load_or_generate(&self, family: &Family, n_max: usize) -> Result<TriangleTable> {
        self.load_or_generate_with(family, n_max, &Engine::default())
    }

    pub fn load_or_generate_with(&self, family: &Family, n_max: usize, engine: &Engine) -> Result<TriangleTable> {
        let Some(path) = self.path_for(family, n_max) else {
            return TriangleTable::generate_with(family, n_max, engine);
        };
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(table) = TriangleTable::from_json(&text) {
                if table.family() == family && table.n_max() == n_max {
                    return Ok(table);
                }
            }
        }
        let table = TriangleTable::generate_with(family, n_max, engine)?;
        fs::create_dir_all(&self.dir)?;
        fs::write(&path, table.to_json()?)?;
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_then_reads() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let family = Family::MultiR(vec![2, 3]);
        let path = cache.path_for(&family, 7).unwrap();
        assert!(path.ends_with("multi-2_3-7.json"));
        let first = cache.load_or_generate(&family, 7).unwrap();
        assert!(path.exists());
        let second = cache.load_or_generate(&family, 7).unwrap();
        assert_eq!(first, second);
        assert_eq!(fs::read_to_string(&path).unwrap(), first.to_json().unwrap());
    }

    #[test]
    fn corrupt_file_is_replaced() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let path = cache.path_for(&Family::Classical, 4).unwrap();
        fs::write(&path, "not json").unwrap();
        let t = cache.load_or_generate(&Family::Classical, 4).unwrap();
        assert_eq!(t.get(4, 2), 7.into());
        assert_eq!(fs::read_to_string(&path).unwrap(), t.to_json().unwrap());
    }
}
