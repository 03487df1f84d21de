use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AnyField, FiniteField, Rationals};
use crate::error::{Error, Result};

/// Serializable description of a field.
///
/// JSON: `{"type":"Q"}`, `{"type":"GF","p":5}` or
/// `{"type":"GF","p":2,"deg":2,"min_poly":[1,1,1]}` (constant-first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
    Extension { p: u64, deg: u32, min_poly: Vec<u64> },
}

impl FieldSpec {
    pub fn build(&self) -> Result<AnyField> {
        Ok(match self {
            FieldSpec::Rationals => AnyField::Rationals(Rationals),
            FieldSpec::Prime { p } => AnyField::Finite(FiniteField::prime(*p)?),
            FieldSpec::Extension { p, deg, min_poly } => {
                if min_poly.len() != *deg as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "min_poly has {} coefficients, expected {}",
                        min_poly.len(),
                        deg + 1
                    )));
                }
                AnyField::Finite(FiniteField::with_min_poly(*p, min_poly.clone())?)
            }
        })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
            FieldSpec::Extension { p, deg, .. } => write!(f, "GF({p}^{deg})"),
        }
    }
}

/// Short command-line names: `q`, `gf5`, `gf4` (= GF(2^2) with the bundled
/// polynomial), `gf3^2`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" || lower == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = lower
            .strip_prefix("gf")
            .ok_or_else(|| Error::Parse(format!("unknown field '{s}'")))?;
        let rest = rest.trim_start_matches('(').trim_end_matches(')');
        let (p, k) = match rest.split_once('^') {
            Some((p, k)) => (
                p.parse::<u64>().map_err(|_| Error::Parse(format!("bad prime in '{s}'")))?,
                k.parse::<u32>().map_err(|_| Error::Parse(format!("bad degree in '{s}'")))?,
            ),
            None => {
                let q: u64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad field order in '{s}'")))?;
                prime_power(q).ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?
            }
        };
        let field = FiniteField::extension(p, k)?;
        Ok(crate::field::Field::spec(&field))
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    #[serde(rename = "type")]
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    deg: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    min_poly: Option<Vec<u64>>,
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = match self {
            FieldSpec::Rationals => RawSpec {
                kind: "Q".into(),
                p: None,
                deg: None,
                min_poly: None,
            },
            FieldSpec::Prime { p } => RawSpec {
                kind: "GF".into(),
                p: Some(*p),
                deg: None,
                min_poly: None,
            },
            FieldSpec::Extension { p, deg, min_poly } => RawSpec {
                kind: "GF".into(),
                p: Some(*p),
                deg: Some(*deg),
                min_poly: Some(min_poly.clone()),
            },
        };
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawSpec::deserialize(d)?;
        match raw.kind.as_str() {
            "Q" => Ok(FieldSpec::Rationals),
            "GF" => {
                let p = raw.p.ok_or_else(|| D::Error::missing_field("p"))?;
                match (raw.deg, raw.min_poly) {
                    (None | Some(1), None) => Ok(FieldSpec::Prime { p }),
                    (Some(deg), Some(min_poly)) => Ok(FieldSpec::Extension { p, deg, min_poly }),
                    (Some(deg), None) => {
                        let field = FiniteField::extension(p, deg).map_err(D::Error::custom)?;
                        Ok(crate::field::Field::spec(&field))
                    }
                    (None, Some(min_poly)) => Ok(FieldSpec::Extension {
                        p,
                        deg: min_poly.len().saturating_sub(1) as u32,
                        min_poly,
                    }),
                }
            }
            other => Err(D::Error::custom(format!("unknown field type '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let q: FieldSpec = serde_json::from_str(r#"{"type":"Q"}"#).unwrap();
        assert_eq!(q, FieldSpec::Rationals);
        let gf5: FieldSpec = serde_json::from_str(r#"{"type":"GF","p":5}"#).unwrap();
        assert_eq!(gf5, FieldSpec::Prime { p: 5 });
        let gf4: FieldSpec =
            serde_json::from_str(r#"{"type":"GF","p":2,"deg":2,"min_poly":[1,1,1]}"#).unwrap();
        assert_eq!(serde_json::to_string(&gf4).unwrap(), r#"{"type":"GF","p":2,"deg":2,"min_poly":[1,1,1]}"#);
        assert_eq!(serde_json::to_string(&gf5).unwrap(), r#"{"type":"GF","p":5}"#);
    }

    #[test]
    fn short_names() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 2 });
        assert_eq!(
            "gf9".parse::<FieldSpec>().unwrap(),
            FieldSpec::Extension { p: 3, deg: 2, min_poly: vec![2, 2, 1] }
        );
        assert_eq!("gf3^2".parse::<FieldSpec>().unwrap(), "gf9".parse().unwrap());
        assert!("gf6".parse::<FieldSpec>().is_err());
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    }
}
