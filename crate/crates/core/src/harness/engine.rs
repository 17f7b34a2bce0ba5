use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::misiurewicz::{g_degree, g_poly, MisSpec};
use crate::multiplier::p_from_g;
use crate::orbit::OrbitCtx;
use crate::polyring::SpecPoly;

use super::cache::{DiskCache, Kind};

type Slot = Arc<Mutex<Option<Arc<SpecPoly>>>>;

/// Shared source of `G` and `P` for the sweeps.
///
/// Each polynomial is built at most once per engine: concurrent requests for
/// the same spec wait on a per-spec slot while different specs build in
/// parallel. With a disk cache attached, finished polynomials are also
/// persisted and reused by later runs.
#[derive(Debug, Default)]
pub struct Engine {
    disk: Option<DiskCache>,
    orbits: Mutex<BTreeMap<u64, Arc<OrbitCtx>>>,
    memo: Mutex<HashMap<(Kind, MisSpec), Slot>>,
}

impl Engine {
    /// An engine with only the in-memory cache.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_disk(disk: DiskCache) -> Self {
        Self {
            disk: Some(disk),
            ..Self::default()
        }
    }

    /// Uses `MISI_CACHE_DIR` when it is set.
    pub fn from_env() -> Self {
        Self {
            disk: DiskCache::from_env(),
            ..Self::default()
        }
    }

    pub fn disk(&self) -> Option<&DiskCache> {
        self.disk.as_ref()
    }

    pub fn orbit(&self, d: u64) -> Result<Arc<OrbitCtx>> {
        let mut orbits = self.orbits.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(ctx) = orbits.get(&d) {
            return Ok(ctx.clone());
        }
        let ctx = Arc::new(OrbitCtx::new(d)?);
        orbits.insert(d, ctx.clone());
        Ok(ctx)
    }

    pub fn g(&self, spec: &MisSpec) -> Result<Arc<SpecPoly>> {
        self.get(Kind::G, spec)
    }

    pub fn p(&self, spec: &MisSpec) -> Result<Arc<SpecPoly>> {
        self.get(Kind::P, spec)
    }

    fn get(&self, kind: Kind, spec: &MisSpec) -> Result<Arc<SpecPoly>> {
        spec.validate()?;
        let slot = {
            let mut memo = self.memo.lock().unwrap_or_else(|e| e.into_inner());
            memo.entry((kind, *spec)).or_default().clone()
        };
        let mut guard = slot.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(poly) = guard.as_ref() {
            return Ok(poly.clone());
        }
        let poly = Arc::new(self.load_or_build(kind, spec)?);
        *guard = Some(poly.clone());
        Ok(poly)
    }

    fn load_or_build(&self, kind: Kind, spec: &MisSpec) -> Result<SpecPoly> {
        if let Some(disk) = &self.disk {
            if let Some(poly) = disk.load(kind, spec) {
                if plausible(&poly, spec) {
                    return Ok(poly);
                }
            }
        }
        let ctx = self.orbit(spec.d)?;
        let poly = match kind {
            Kind::G => g_poly(&ctx, spec)?,
            Kind::P => {
                let g = self.g(spec)?;
                p_from_g(&ctx, spec, &g)?.poly
            }
        };
        if let Some(disk) = &self.disk {
            disk.store(kind, spec, &poly)?;
        }
        Ok(poly)
    }
}

/// Cheap sanity check on a cached polynomial before trusting it.
fn plausible(poly: &SpecPoly, spec: &MisSpec) -> bool {
    let ring_ok = match poly {
        SpecPoly::Int(_) => spec.d == 2,
        SpecPoly::Cyc(p) => p.ring().d() == spec.d,
    };
    ring_ok && poly.is_monic() && poly.degree() == Some(g_degree(spec) as usize)
}
