use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers. `BigRational` keeps itself reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter storing a rational as its string form.
pub mod serde_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RawRational::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }

    /// Accepts `"3/2"` as well as bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RawRational {
        Text(String),
        Int(i64),
    }

    impl RawRational {
        pub(crate) fn into_rational(self) -> crate::Result<Rational> {
            match self {
                RawRational::Text(s) => super::parse(&s),
                RawRational::Int(n) => Ok(super::int(n)),
            }
        }
    }
}

/// Same as [`serde_str`] for optional fields.
pub mod serde_opt_str {
    use super::serde_str::RawRational;
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&super::format(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let raw = Option::<RawRational>::deserialize(d)?;
        raw.map(|r| r.into_rational())
            .transpose()
            .map_err(serde::de::Error::custom)
    }
}
