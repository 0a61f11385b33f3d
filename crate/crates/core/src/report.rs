//! JSON plumbing: exact numbers as strings, canonical key order, and the
//! pass/fail vocabulary shared by every certificate.

use std::fmt;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{IntMatrix, IntPoly};
use crate::cylinders::Direction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Outcome::Pass
    }

    /// Worst of two outcomes, with fail dominating inconclusive.
    pub fn and(self, other: Outcome) -> Outcome {
        match (self, other) {
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            (Outcome::Inconclusive, _) | (_, Outcome::Inconclusive) => Outcome::Inconclusive,
            _ => Outcome::Pass,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

/// One checked fact: what was tested, the prime or value that decided
/// it, and how it came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub test: String,
    pub witness: String,
    pub outcome: Outcome,
}

impl Evidence {
    pub fn new(test: impl Into<String>, witness: impl ToString, outcome: Outcome) -> Self {
        Evidence { test: test.into(), witness: witness.to_string(), outcome }
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        IntPoly::from_strings(&v).ok_or_else(|| D::Error::custom("bad integer coefficient"))
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let mut row = Vec::with_capacity(r.len());
            for x in r {
                row.push(x.parse::<BigInt>().map_err(D::Error::custom)?);
            }
            out.push(row);
        }
        if out.is_empty() || out.iter().any(|r| r.len() != out[0].len()) {
            return Err(D::Error::custom("ragged or empty matrix"));
        }
        Ok(IntMatrix::from_rows(out))
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// BigRational as "num/den" (or just "num" for integers).
pub mod rational {
    use num_rational::BigRational;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

pub mod rational_vec {
    use num_rational::BigRational;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        x.iter().map(|r| r.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| super::parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

/// BigInt as a decimal string.
pub mod bigint {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub mod bigint_vec {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        x.iter().map(|r| r.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| s.parse().map_err(D::Error::custom)).collect()
    }
}

pub fn parse_rational(s: &str) -> Option<num_rational::BigRational> {
    use num_rational::BigRational;
    use num_traits::Zero;
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

/// Compact JSON with object keys sorted.
pub fn to_canonical_json<T: Serialize>(t: &T) -> serde_json::Result<String> {
    let v = serde_json::to_value(t)?;
    serde_json::to_string(&v)
}

/// Same ordering, indented for people.
pub fn to_pretty_json<T: Serialize>(t: &T) -> serde_json::Result<String> {
    let v = serde_json::to_value(t)?;
    serde_json::to_string_pretty(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Sample {
        z: IntPoly,
        #[serde(with = "rational")]
        a: BigRational,
        m: IntMatrix,
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let s = Sample {
            z: IntPoly::from_i64(&[1, -2, 3]),
            a: BigRational::new((-6).into(), 4.into()),
            m: IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, -4]]),
        };
        let j = to_canonical_json(&s).unwrap();
        assert_eq!(j, r#"{"a":"-3/2","m":[["1","2"],["3","-4"]],"z":["1","-2","3"]}"#);
        let back: Sample = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert_eq!(to_canonical_json(&back).unwrap(), j);
    }

    #[test]
    fn outcome_lattice() {
        use Outcome::*;
        assert_eq!(Pass.and(Inconclusive), Inconclusive);
        assert_eq!(Inconclusive.and(Fail), Fail);
        assert_eq!(Pass.and(Pass), Pass);
    }
}
