use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{AnyAlgebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::field::{AnyField, Field, FieldSpec};

#[derive(Debug, Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, Value>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraJson {
    field: FieldSpec,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

fn build<F: Field>(field: F, raw: AlgebraJson) -> Result<LieAlgebra<F>> {
    let n = raw.dim;
    let mut entries = Vec::with_capacity(raw.brackets.len());
    for b in raw.brackets {
        let mut v = vec![field.zero(); n];
        for (key, val) in b.coeffs {
            let k: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("coefficient key '{key}' is not a basis index")))?;
            if k >= n {
                return Err(Error::IndexOutOfRange(k, n));
            }
            v[k] = field.decode(&val)?;
        }
        entries.push((b.i, b.j, v));
    }
    let alg = LieAlgebra::new(field, n, entries)?;
    match raw.names {
        Some(names) => alg.with_names(names),
        None => Ok(alg),
    }
}

impl<F: Field> LieAlgebra<F> {
    pub fn to_json(&self) -> Value {
        let f = self.field();
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.structure_constant(i, j);
                let coeffs: BTreeMap<String, Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !f.is_zero(a))
                    .map(|(k, a)| (k.to_string(), f.encode(a)))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketJson { i, j, coeffs });
                }
            }
        }
        let raw = AlgebraJson {
            field: f.spec(),
            dim: n,
            names: Some(self.names().to_vec()),
            brackets,
        };
        serde_json::to_value(raw).expect("algebra JSON is always serializable")
    }
}

impl AnyAlgebra {
    /// Parse failures are `Error::Parse`; structural failures (Jacobi,
    /// alternating, bad indices) keep their own variants.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let field = raw.field.build()?;
        Ok(match field {
            AnyField::Rationals(q) => AnyAlgebra::Rational(build(q, raw)?),
            AnyField::Finite(g) => AnyAlgebra::Finite(build(g, raw)?),
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyAlgebra::Rational(l) => l.to_json(),
            AnyAlgebra::Finite(l) => l.to_json(),
        }
    }
}
