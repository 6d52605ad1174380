use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational, serialized as `"p/q"` (or `"p"` when integral).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub BigRational);

impl Q {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Q {
        Q(BigRational::new(num.into(), den.into()))
    }

    pub fn int(v: i64) -> Q {
        Q(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Q {
        Q(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigInt> for Q {
    fn from(v: BigInt) -> Q {
        Q(BigRational::from_integer(v))
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Q {
        Q::int(v)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Q {
    type Err = String;
    fn from_str(s: &str) -> Result<Q, String> {
        BigRational::from_str(s.trim()).map(Q).map_err(|e| format!("bad rational {s:?}: {e}"))
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Distinct eigenvalues with multiplicities.
pub type Spectrum = BTreeMap<Q, u64>;

pub fn format_spectrum(s: &Spectrum) -> String {
    let parts: Vec<String> = s.iter().rev().map(|(v, m)| format!("{v}^{m}")).collect();
    format!("{{{}}}", parts.join(", "))
}
