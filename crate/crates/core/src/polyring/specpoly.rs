//! A polynomial over the base ring of a Misiurewicz family: `Z` when
//! `d = 2`, `Z[zeta_d]` otherwise.

use serde_json::Value;

use super::cyclo::CycPoly;
use super::format::{CycPolyJson, PolyJson};
use super::poly::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum SpecPoly {
    Int(IntPoly),
    Cyc(CycPoly),
}

impl SpecPoly {
    pub fn degree(&self) -> Option<usize> {
        match self {
            SpecPoly::Int(p) => p.degree(),
            SpecPoly::Cyc(p) => p.degree(),
        }
    }

    pub fn is_monic(&self) -> bool {
        match self {
            SpecPoly::Int(p) => p.is_monic(),
            SpecPoly::Cyc(p) => p.is_monic(),
        }
    }

    pub fn as_int(&self) -> Option<&IntPoly> {
        match self {
            SpecPoly::Int(p) => Some(p),
            SpecPoly::Cyc(_) => None,
        }
    }

    pub fn as_cyc(&self) -> Option<&CycPoly> {
        match self {
            SpecPoly::Cyc(p) => Some(p),
            SpecPoly::Int(_) => None,
        }
    }

    /// The integer polynomial, or an error for `Z[zeta]` coefficients.
    pub fn into_int(self) -> Result<IntPoly> {
        match self {
            SpecPoly::Int(p) => Ok(p),
            SpecPoly::Cyc(p) => Err(Error::InvalidParameter(format!(
                "expected integer coefficients, found a polynomial over {:?}",
                p.ring()
            ))),
        }
    }

    pub fn to_human(&self, var: &str) -> String {
        match self {
            SpecPoly::Int(p) => p.to_human(var),
            SpecPoly::Cyc(p) => p.to_human(var),
        }
    }

    pub fn to_json(&self, var: &str) -> Value {
        match self {
            SpecPoly::Int(p) => serde_json::to_value(p.to_json(var)),
            SpecPoly::Cyc(p) => serde_json::to_value(p.to_json(var)),
        }
        .expect("polynomial JSON is always serialisable")
    }

    /// Canonical JSON text, keys in declaration order (`var` first).
    pub fn to_json_string(&self, var: &str) -> String {
        match self {
            SpecPoly::Int(p) => serde_json::to_string(&p.to_json(var)),
            SpecPoly::Cyc(p) => serde_json::to_string(&p.to_json(var)),
        }
        .expect("polynomial JSON is always serialisable")
    }

    /// Inverse of [`SpecPoly::to_json`]; the presence of `d` selects `Z[zeta_d]`.
    pub fn from_json(value: &Value) -> Result<Self> {
        if value.get("d").is_some() {
            let json: CycPolyJson = serde_json::from_value(value.clone())?;
            Ok(SpecPoly::Cyc(CycPoly::from_json(&json)?))
        } else {
            let json: PolyJson = serde_json::from_value(value.clone())?;
            Ok(SpecPoly::Int(IntPoly::from_json(&json)?))
        }
    }
}
