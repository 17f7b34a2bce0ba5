//! On-disk cache of `G` and `P` polynomials, one canonical JSON document
//! per spec.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::Result;
use crate::misiurewicz::MisSpec;
use crate::polyring::SpecPoly;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "MISI_CACHE_DIR";

/// Which polynomial a cache entry holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    G,
    P,
}

impl Kind {
    fn prefix(self) -> &'static str {
        match self {
            Kind::G => "G",
            Kind::P => "P",
        }
    }

    /// Variable name used when printing or serialising.
    pub fn var(self) -> &'static str {
        match self {
            Kind::G => "c",
            Kind::P => "x",
        }
    }
}

/// A directory of cached polynomials. Reads may run concurrently; writes go
/// through a single lock and land via rename, so readers never see a
/// partial file.
#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
    writer: Mutex<()>,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: dir.into(),
            writer: Mutex::new(()),
        }
    }

    /// The directory named by `MISI_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_name(kind: Kind, spec: &MisSpec) -> String {
        format!(
            "{}_d{}_m{}_n{}_z{}.json",
            kind.prefix(),
            spec.d,
            spec.m,
            spec.n,
            spec.zeta_exp
        )
    }

    pub fn path(&self, kind: Kind, spec: &MisSpec) -> PathBuf {
        self.dir.join(Self::file_name(kind, spec))
    }

    /// The cached polynomial, or `None` when absent or unreadable. A
    /// damaged file is treated as a miss and later overwritten.
    pub fn load(&self, kind: Kind, spec: &MisSpec) -> Option<SpecPoly> {
        let text = fs::read_to_string(self.path(kind, spec)).ok()?;
        let value: serde_json::Value = serde_json::from_str(&text).ok()?;
        SpecPoly::from_json(&value).ok()
    }

    pub fn store(&self, kind: Kind, spec: &MisSpec, poly: &SpecPoly) -> Result<()> {
        let _guard = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        fs::create_dir_all(&self.dir)?;
        let target = self.path(kind, spec);
        let tmp = target.with_extension("json.tmp");
        {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(poly.to_json_string(kind.var()).as_bytes())?;
            file.write_all(b"\n")?;
            file.sync_all()?;
        }
        fs::rename(&tmp, &target)?;
        Ok(())
    }

    /// Removes every cache file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let _guard = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut removed = 0;
        for entry in entries {
            let path = entry?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            let ours = (name.starts_with("G_d") || name.starts_with("P_d"))
                && (name.ends_with(".json") || name.ends_with(".json.tmp"));
            if ours {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}
