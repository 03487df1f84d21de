use std::fmt;

use num_rational::BigRational;
use serde_json::Value;

use super::{AnyField, Field, FieldSpec};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Payload {
    Rational(BigRational),
    Finite(u32),
}

/// A field element bundled with its field, for checked mixed-field
/// arithmetic at API boundaries. Inner loops use [`Field`] directly.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: AnyField,
    payload: Payload,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.payload == other.payload
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.field, &self.payload) {
            (AnyField::Rationals(q), Payload::Rational(a)) => write!(f, "{}", q.display(a)),
            (AnyField::Finite(g), Payload::Finite(a)) => write!(f, "{}", g.display(a)),
            _ => unreachable!("payload always matches its field"),
        }
    }
}

macro_rules! dispatch {
    ($field:expr, $payload:expr, |$f:ident, $a:ident| $body:expr) => {
        match ($field, $payload) {
            (AnyField::Rationals($f), Payload::Rational($a)) => Payload::Rational($body),
            (AnyField::Finite($f), Payload::Finite($a)) => Payload::Finite($body),
            _ => unreachable!("payload always matches its field"),
        }
    };
}

impl Scalar {
    pub fn zero(field: &AnyField) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: &AnyField) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: &AnyField, n: i64) -> Self {
        let payload = match field {
            AnyField::Rationals(q) => Payload::Rational(q.from_i64(n)),
            AnyField::Finite(g) => Payload::Finite(g.from_i64(n)),
        };
        Self {
            field: field.clone(),
            payload,
        }
    }

    pub fn rational(field: &AnyField, value: BigRational) -> Result<Self> {
        match field {
            AnyField::Rationals(_) => Ok(Self {
                field: field.clone(),
                payload: Payload::Rational(value),
            }),
            AnyField::Finite(_) => Err(Error::MixedFields),
        }
    }

    /// A finite-field element from its code (residue for prime fields,
    /// packed coefficients for extensions).
    pub fn finite(field: &AnyField, code: u32) -> Result<Self> {
        match field {
            AnyField::Finite(g) if (code as u64) < g.order().unwrap_or(0) => Ok(Self {
                field: field.clone(),
                payload: Payload::Finite(code),
            }),
            AnyField::Finite(_) => Err(Error::Parse(format!("{code} is not an element code"))),
            AnyField::Rationals(_) => Err(Error::MixedFields),
        }
    }

    pub fn decode(field: &AnyField, v: &Value) -> Result<Self> {
        let payload = match field {
            AnyField::Rationals(q) => Payload::Rational(q.decode(v)?),
            AnyField::Finite(g) => Payload::Finite(g.decode(v)?),
        };
        Ok(Self {
            field: field.clone(),
            payload,
        })
    }

    pub fn encode(&self) -> Value {
        match (&self.field, &self.payload) {
            (AnyField::Rationals(q), Payload::Rational(a)) => q.encode(a),
            (AnyField::Finite(g), Payload::Finite(a)) => g.encode(a),
            _ => unreachable!(),
        }
    }

    pub fn field(&self) -> &AnyField {
        &self.field
    }

    pub fn spec(&self) -> FieldSpec {
        self.field.spec()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.payload {
            Payload::Rational(a) => Some(a),
            Payload::Finite(_) => None,
        }
    }

    pub fn as_code(&self) -> Option<u32> {
        match &self.payload {
            Payload::Finite(a) => Some(*a),
            Payload::Rational(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Rational(a) => num_traits::Zero::is_zero(a),
            Payload::Finite(a) => *a == 0,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn with(&self, payload: Payload) -> Self {
        Self {
            field: self.field.clone(),
            payload,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = match (&self.field, &self.payload, &other.payload) {
            (AnyField::Rationals(q), Payload::Rational(a), Payload::Rational(b)) => {
                Payload::Rational(q.add(a, b))
            }
            (AnyField::Finite(g), Payload::Finite(a), Payload::Finite(b)) => {
                Payload::Finite(g.add(a, b))
            }
            _ => return Err(Error::MixedFields),
        };
        Ok(self.with(p))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = match (&self.field, &self.payload, &other.payload) {
            (AnyField::Rationals(q), Payload::Rational(a), Payload::Rational(b)) => {
                Payload::Rational(q.mul(a, b))
            }
            (AnyField::Finite(g), Payload::Finite(a), Payload::Finite(b)) => {
                Payload::Finite(g.mul(a, b))
            }
            _ => return Err(Error::MixedFields),
        };
        Ok(self.with(p))
    }

    pub fn neg(&self) -> Self {
        self.with(dispatch!(&self.field, &self.payload, |f, a| f.neg(a)))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(dispatch!(&self.field, &self.payload, |f, a| f
            .inv(a)
            .expect("nonzero"))))
    }

    /// `self^e`; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(self.with(dispatch!(&base.field, &base.payload, |f, a| f.pow(a, e))))
    }

    /// The unique `b` with `b^p = self`.
    pub fn pth_root(&self) -> Result<Self> {
        match (&self.field, &self.payload) {
            (AnyField::Finite(g), Payload::Finite(a)) => {
                Ok(self.with(Payload::Finite(g.pth_root(a).expect("finite field"))))
            }
            _ => Err(Error::NotPositiveCharacteristic),
        }
    }
}

/// Every element of a finite field, zero first, lexicographic on the
/// coefficient vector.
pub fn enumerate_field(spec: &FieldSpec) -> Result<Vec<Scalar>> {
    let field = spec.build()?;
    match &field {
        AnyField::Rationals(_) => Err(Error::InfiniteField),
        AnyField::Finite(g) => Ok(g
            .elements()
            .expect("finite")
            .into_iter()
            .map(|a| Scalar {
                field: field.clone(),
                payload: Payload::Finite(a),
            })
            .collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> AnyField {
        FieldSpec::Prime { p }.build().unwrap()
    }

    #[test]
    fn checked_ops() {
        let f5 = gf(5);
        let two = Scalar::from_i64(&f5, 2);
        let four = Scalar::from_i64(&f5, 4);
        assert_eq!(two.add(&four).unwrap(), Scalar::one(&f5));
        let f7 = gf(7);
        assert_eq!(Scalar::from_i64(&f7, 3).inv().unwrap(), Scalar::from_i64(&f7, 5));
        assert_eq!(two.add(&Scalar::one(&f7)), Err(Error::MixedFields));
        assert_eq!(Scalar::zero(&f7).inv(), Err(Error::DivisionByZero));
        let q = FieldSpec::Rationals.build().unwrap();
        let half = Scalar::decode(&q, &Value::from("1/2")).unwrap();
        let third = Scalar::decode(&q, &Value::from("1/3")).unwrap();
        assert_eq!(half.add(&third).unwrap().to_string(), "5/6");
        assert_eq!(half.pow(-2).unwrap().to_string(), "4");
    }

    #[test]
    fn pth_roots() {
        let f3 = gf(3);
        assert_eq!(Scalar::from_i64(&f3, 2).pth_root().unwrap(), Scalar::from_i64(&f3, 2));
        assert_eq!(Scalar::zero(&f3).pth_root().unwrap(), Scalar::zero(&f3));
        let gf4 = FieldSpec::Extension { p: 2, deg: 2, min_poly: vec![1, 1, 1] }.build().unwrap();
        let t = Scalar::decode(&gf4, &serde_json::json!([0, 1])).unwrap();
        assert_eq!(t.pth_root().unwrap().encode(), serde_json::json!([1, 1]));
        let q = FieldSpec::Rationals.build().unwrap();
        assert_eq!(Scalar::one(&q).pth_root(), Err(Error::NotPositiveCharacteristic));
    }

    #[test]
    fn enumeration() {
        let codes = |s: FieldSpec| -> Vec<Value> {
            enumerate_field(&s).unwrap().iter().map(Scalar::encode).collect()
        };
        assert_eq!(codes(FieldSpec::Prime { p: 2 }), vec![Value::from(0), Value::from(1)]);
        assert_eq!(codes(FieldSpec::Prime { p: 3 }).len(), 3);
        let gf4 = codes("gf4".parse().unwrap());
        assert_eq!(gf4.len(), 4);
        assert_eq!(gf4[0], serde_json::json!([0, 0]));
        assert_eq!(enumerate_field(&FieldSpec::Rationals).unwrap_err(), Error::InfiniteField);
    }

    fn specs() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Prime { p: 2 }),
            Just(FieldSpec::Prime { p: 7 }),
            Just("gf4".parse().unwrap()),
            Just("gf9".parse().unwrap()),
            Just("gf27".parse().unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(spec in specs(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
            let field = spec.build().unwrap();
            let q = field_order(&field);
            let s = |x: u32| Scalar::finite(&field, x % q).unwrap();
            let (a, b, c) = (s(a), s(b), s(c));
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.add(&a.neg()).unwrap().is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), Scalar::one(&field));
            }
            let p = spec.characteristic() as i64;
            prop_assert_eq!(
                a.add(&b).unwrap().pow(p).unwrap(),
                a.pow(p).unwrap().add(&b.pow(p).unwrap()).unwrap()
            );
            prop_assert_eq!(a.pow(p).unwrap().pth_root().unwrap(), a);
        }

        #[test]
        fn rationals_stay_reduced(n1 in -50i64..50, d1 in 1i64..50, n2 in -50i64..50, d2 in 1i64..50) {
            let q = FieldSpec::Rationals.build().unwrap();
            let x = Scalar::decode(&q, &Value::from(format!("{n1}/{d1}"))).unwrap();
            let y = Scalar::decode(&q, &Value::from(format!("{n2}/{d2}"))).unwrap();
            for z in [x.add(&y).unwrap(), x.mul(&y).unwrap()] {
                let r = z.as_rational().unwrap();
                prop_assert!(r.denom() > &num_bigint::BigInt::from(0));
                prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), num_bigint::BigInt::from(1));
            }
        }
    }

    fn field_order(f: &AnyField) -> u32 {
        match f {
            AnyField::Finite(g) => g.order().unwrap() as u32,
            AnyField::Rationals(_) => unreachable!(),
        }
    }
}
