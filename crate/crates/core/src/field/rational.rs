use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::RngCore;
use serde_json::Value;

use super::{Field, FieldSpec};
use crate::error::{Error, Result};

/// The field of rational numbers with arbitrary-precision numerators and
/// denominators. `BigRational` keeps every value reduced with a positive
/// denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub(crate) fn format_rational(a: &BigRational) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn pth_root(&self, _a: &BigRational) -> Option<BigRational> {
        None
    }

    /// Integers in `[-3, 3]`, which keeps random combinations small.
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64((rng.next_u64() % 7) as i64 - 3)
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn encode(&self, a: &BigRational) -> Value {
        Value::String(format_rational(a))
    }

    fn decode(&self, v: &Value) -> Result<BigRational> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(self.from_i64(i)),
                None => Err(Error::Parse(format!("{n} is not an exact rational; use \"num/den\""))),
            },
            other => Err(Error::Parse(format!("cannot read {other} as a rational"))),
        }
    }

    fn display(&self, a: &BigRational) -> String {
        format_rational(a)
    }

    /// Rational root test on the integer-scaled polynomial. Gives up when
    /// the extreme coefficients are too large to enumerate divisors.
    fn roots(&self, poly: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut roots = Vec::new();
        let start = poly.iter().position(|c| !c.is_zero())?;
        if start > 0 {
            roots.push(BigRational::zero());
        }
        let poly = &poly[start..];
        if poly.len() <= 1 {
            return Some(roots);
        }
        let lcm = poly.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let ints: Vec<BigInt> = poly.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = small_divisors(&ints[0])?;
        let an = small_divisors(ints.last().unwrap())?;
        let mut seen = std::collections::BTreeSet::new();
        for p in &a0 {
            for q in &an {
                for sign in [1i64, -1] {
                    let x = BigRational::new(BigInt::from(sign * p), BigInt::from(*q));
                    if seen.insert(x.clone()) && super::eval_poly(self, poly, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    use num_traits::{Signed, ToPrimitive};
    let n = n.abs().to_i64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}
