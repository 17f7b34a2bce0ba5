//! Text formats for integer polynomials.
//!
//! The human form looks like `x^3 - 4*x^2 + 16`. The canonical JSON form is
//! `{"var": "x", "coeffs": ["16", "0", "-4", "1"]}` with decimal-string
//! coefficients indexed by power.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::cyclo::{CycPoly, CycScalar, CyclotomicRing};
use super::poly::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

/// JSON form of a polynomial over `Z[zeta_d]`: each coefficient is the
/// residue modulo `Phi_d`, itself a list of decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycPolyJson {
    pub var: String,
    pub d: u64,
    pub coeffs: Vec<Vec<String>>,
}

fn decimal_strings(coeffs: &[BigInt]) -> Vec<String> {
    coeffs.iter().map(BigInt::to_string).collect()
}

fn parse_decimals(coeffs: &[String]) -> Result<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer coefficient {s:?}")))
        })
        .collect()
}

impl IntPoly {
    pub fn to_json(&self, var: &str) -> PolyJson {
        PolyJson {
            var: var.to_string(),
            coeffs: decimal_strings(self.coeffs()),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        Ok(IntPoly::new((), parse_decimals(&json.coeffs)?))
    }

    /// Parses the human form. Accepts one variable name, `*` optional
    /// between coefficient and variable, and `^` or `**` for powers.
    pub fn parse(text: &str) -> Result<Self> {
        parse_human(text).map(|(p, _)| p)
    }
}

impl CycPoly {
    pub fn to_json(&self, var: &str) -> CycPolyJson {
        CycPolyJson {
            var: var.to_string(),
            d: self.ring().d(),
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| decimal_strings(c.residue().coeffs()))
                .collect(),
        }
    }

    pub fn from_json(json: &CycPolyJson) -> Result<Self> {
        let ring = CyclotomicRing::new(json.d)?;
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| {
                Ok(CycScalar::from_residue(
                    &ring,
                    IntPoly::new((), parse_decimals(c)?),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycPoly::new(ring, coeffs))
    }
}

/// Parses a human-form polynomial, returning it with its variable name
/// (`None` for constants).
pub fn parse_human(text: &str) -> Result<(IntPoly, Option<String>)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let compact = compact.replace("**", "^");
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut var: Option<String> = None;
    let mut coeffs: Vec<BigInt> = Vec::new();

    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > start {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    for term in terms {
        let (negative, body) = match term.as_bytes()[0] {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        let split = body.find(|c: char| c.is_ascii_alphabetic());
        let (coef_text, mono) = match split {
            Some(i) => (&body[..i], Some(&body[i..])),
            None => (body, None),
        };
        let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
        let mut coef = if coef_text.is_empty() {
            if mono.is_none() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            BigInt::from(1)
        } else {
            coef_text
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {coef_text:?}")))?
        };
        if negative {
            coef = -coef;
        }
        let power = match mono {
            None => 0,
            Some(m) => {
                let (name, exp) = match m.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?,
                    ),
                    None => (m, 1),
                };
                if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::Parse(format!("bad variable {name:?}")));
                }
                match &var {
                    Some(v) if v != name => {
                        return Err(Error::Parse(format!(
                            "more than one variable: {v:?} and {name:?}"
                        )))
                    }
                    _ => var = Some(name.to_string()),
                }
                exp
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::from(0));
        }
        coeffs[power] += coef;
    }
    Ok((IntPoly::new((), coeffs), var))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_roundtrip() {
        let f = IntPoly::from_i64s(&[16, 0, -4, 1]);
        let text = f.to_human("x");
        assert_eq!(text, "x^3 - 4*x^2 + 16");
        assert_eq!(IntPoly::parse(&text).unwrap(), f);
    }

    #[test]
    fn lenient_parsing() {
        assert_eq!(IntPoly::parse("x - 4").unwrap(), IntPoly::from_i64s(&[-4, 1]));
        assert_eq!(IntPoly::parse("-c**2+3c").unwrap(), IntPoly::from_i64s(&[0, 3, -1]));
        assert_eq!(IntPoly::parse("7").unwrap(), IntPoly::from_i64s(&[7]));
        assert_eq!(IntPoly::parse("x + x").unwrap(), IntPoly::from_i64s(&[0, 2]));
        assert!(IntPoly::parse("x + y").is_err());
        assert!(IntPoly::parse("x +").is_err());
        assert!(IntPoly::parse("").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = IntPoly::from_i64s(&[16, 0, -4, 1]);
        let json = f.to_json("x");
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"var":"x","coeffs":["16","0","-4","1"]}"#
        );
        assert_eq!(IntPoly::from_json(&json).unwrap(), f);
    }
}
