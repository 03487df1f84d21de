use std::fmt;
use std::sync::Arc;

use rand::RngCore;
use serde_json::Value;

use super::poly;
use super::{Field, FieldSpec};
use crate::error::{Error, Result};

/// Largest extension field for which log/exp tables are built.
const MAX_EXTENSION_ORDER: u64 = 1 << 20;

/// GF(p) or GF(p^k).
///
/// An element is a `u32` code. For prime fields it is the residue; for
/// extension fields it packs the coefficient vector `c_0 + c_1 t + ...` as
/// `sum c_i p^i`. Multiplication in extensions goes through discrete
/// log/exp tables built once at construction.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

struct Inner {
    p: u64,
    k: u32,
    q: u64,
    min_poly: Vec<u64>,
    // Only populated when k > 1.
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.k == other.inner.k
                && self.inner.min_poly == other.inner.min_poly)
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.k)
        }
    }
}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        if !poly::is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Self {
            inner: Arc::new(Inner {
                p,
                k: 1,
                q: p,
                min_poly: vec![0, 1],
                log: Vec::new(),
                exp: Vec::new(),
            }),
        })
    }

    /// GF(p^k) with the bundled default minimal polynomial.
    pub fn extension(p: u64, k: u32) -> Result<Self> {
        if k == 1 {
            return Self::prime(p);
        }
        if !poly::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Self::with_min_poly(p, poly::default_min_poly(p, k))
    }

    /// GF(p)[t]/(min_poly); `min_poly` is constant-first and must be monic
    /// and irreducible.
    pub fn with_min_poly(p: u64, min_poly: Vec<u64>) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if min_poly.len() < 2 {
            return Err(Error::InvalidField("minimal polynomial has degree < 1".into()));
        }
        if min_poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("coefficients must lie in [0, p)".into()));
        }
        if *min_poly.last().unwrap() != 1 {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let k = (min_poly.len() - 1) as u32;
        if k == 1 {
            return Self::prime(p);
        }
        let q = (p as u128).pow(k);
        if q > MAX_EXTENSION_ORDER as u128 {
            return Err(Error::InvalidField(format!("GF({p}^{k}) is too large")));
        }
        let q = q as u64;
        if !poly::is_irreducible(&min_poly, p) {
            return Err(Error::InvalidField(format!(
                "{min_poly:?} is not irreducible over GF({p})"
            )));
        }

        let to_poly = |code: u64| -> Vec<u64> {
            let mut c = code;
            (0..k)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect()
        };
        let to_code = |v: &[u64]| -> u64 { v.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let mulmod = |a: u64, b: u64| -> u64 {
            to_code(&poly::rem(&poly::mul(&to_poly(a), &to_poly(b), p), &min_poly, p))
        };

        let factors = poly::prime_factors(q - 1);
        let powmod = |a: u64, mut e: u64| -> u64 {
            let mut acc = 1u64;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, base);
                }
                base = mulmod(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (2..q)
            .find(|&g| factors.iter().all(|&r| powmod(g, (q - 1) / r) != 1))
            .ok_or_else(|| Error::InvalidField("no primitive element found".into()))?;

        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc as u32;
            log[acc as usize] = i as u32;
            acc = mulmod(acc, generator);
        }

        Ok(Self {
            inner: Arc::new(Inner {
                p,
                k,
                q,
                min_poly,
                log,
                exp,
            }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn min_poly(&self) -> &[u64] {
        &self.inner.min_poly
    }

    /// Coefficient vector (constant-first) of an element.
    pub fn coefficients(&self, a: u32) -> Vec<u64> {
        let p = self.inner.p;
        let mut c = a as u64;
        (0..self.inner.k)
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> Result<u32> {
        let p = self.inner.p;
        if coeffs.len() > self.inner.k as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::Parse(format!(
                "{coeffs:?} is not an element of {self:?}"
            )));
        }
        Ok(coeffs.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32)
    }

    /// The adjoined root `t` of the minimal polynomial.
    pub fn generator_t(&self) -> u32 {
        if self.inner.k == 1 {
            // Degenerate: the "extension" is the prime field itself.
            0
        } else {
            self.inner.p as u32
        }
    }
}

impl Field for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return ((*a as u64 + *b as u64) % p) as u32;
        }
        let (mut x, mut y) = (*a as u64, *b as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.inner.k {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return ((p - *a as u64) % p) as u32;
        }
        let mut x = *a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.inner.k {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        out as u32
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        if self.inner.k == 1 {
            return ((*a as u64 * *b as u64) % self.inner.p) as u32;
        }
        let n = self.inner.q - 1;
        let l = (self.inner.log[*a as usize] as u64 + self.inner.log[*b as usize] as u64) % n;
        self.inner.exp[l as usize]
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        if self.inner.k == 1 {
            return Some(poly::mod_inv(*a as u64, self.inner.p) as u32);
        }
        let n = self.inner.q - 1;
        let l = self.inner.log[*a as usize] as u64;
        Some(self.inner.exp[((n - l) % n) as usize])
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn from_i64(&self, n: i64) -> u32 {
        let p = self.inner.p as i64;
        n.rem_euclid(p) as u32
    }

    fn characteristic(&self) -> u64 {
        self.inner.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.inner.q)
    }

    /// Lexicographic on the constant-first coefficient vector.
    fn elements(&self) -> Option<Vec<u32>> {
        let (p, k, q) = (self.inner.p, self.inner.k, self.inner.q);
        if k == 1 {
            return Some((0..q as u32).collect());
        }
        Some(
            (0..q)
                .map(|idx| {
                    // idx read most-significant-first gives c_0, c_1, ...
                    let mut digits = vec![0u64; k as usize];
                    let mut c = idx;
                    for d in digits.iter_mut().rev() {
                        *d = c % p;
                        c /= p;
                    }
                    digits.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
                })
                .collect(),
        )
    }

    fn pth_root(&self, a: &u32) -> Option<u32> {
        // Frobenius has order k, so its inverse is x -> x^(p^(k-1)).
        let e = self.inner.p.pow(self.inner.k - 1);
        Some(self.pow(a, e))
    }

    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        (rng.next_u64() % self.inner.q) as u32
    }

    fn spec(&self) -> FieldSpec {
        if self.inner.k == 1 {
            FieldSpec::Prime { p: self.inner.p }
        } else {
            FieldSpec::Extension {
                p: self.inner.p,
                deg: self.inner.k,
                min_poly: self.inner.min_poly.clone(),
            }
        }
    }

    fn encode(&self, a: &u32) -> Value {
        if self.inner.k == 1 {
            Value::from(*a)
        } else {
            Value::from(self.coefficients(*a))
        }
    }

    fn decode(&self, v: &Value) -> Result<u32> {
        let p = self.inner.p as i64;
        match v {
            Value::Number(n) => {
                let n = n
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("{n} is not an integer")))?;
                Ok(self.from_i64(n.rem_euclid(p)))
            }
            Value::String(s) => {
                let n: i64 = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("'{s}' is not an integer residue")))?;
                Ok(self.from_i64(n))
            }
            Value::Array(items) => {
                let coeffs = items
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .map(|c| c.rem_euclid(p) as u64)
                            .ok_or_else(|| Error::Parse(format!("{x} is not an integer")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                self.from_coefficients(&coeffs)
            }
            other => Err(Error::Parse(format!("cannot read {other} as a field element"))),
        }
    }

    fn display(&self, a: &u32) -> String {
        if self.inner.k == 1 {
            a.to_string()
        } else {
            format!("{:?}", self.coefficients(*a))
        }
    }
}
