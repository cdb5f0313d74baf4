//! Coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible characteristic (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// The coefficient field of every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        let f = FieldSpec::Prime { p };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => {
                if p >= MAX_CHARACTERISTIC || !is_prime(p) {
                    Err(Error::Parse(format!(
                        "field characteristic {p} is not a prime below 2^31"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime { p } => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses a decimal integer or a `p/q` fraction.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num =
            BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad coefficient `{text}`")))?;
        let den =
            BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad coefficient `{text}`")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        match *self {
            FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime { p } => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u64().unwrap();
                let d = den.mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of `{text}` vanishes in F_{p}"
                    )));
                }
                Ok(Scalar::Modular {
                    value: n * inv_mod(d, p) % p,
                    modulus: p,
                })
            }
        }
    }

    /// Enumerates all field elements when the field is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime { p } => Some(
                (0..p)
                    .map(|value| Scalar::Modular { value, modulus: p })
                    .collect(),
            ),
        }
    }

    /// A pseudo-random element; rationals are drawn as small integers.
    pub fn random<R: Rng>(&self, rng: &mut R, spread: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => self.from_i64(rng.gen_range(-spread..=spread)),
            FieldSpec::Prime { p } => Scalar::Modular {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational`, `q`, `p:5` or `prime:5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "rational" || s == "q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("p:")
            .or_else(|| s.strip_prefix("prime:"))
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic `{digits}`")))?;
        FieldSpec::prime(p)
    }
}

/// An element of a [`FieldSpec`] in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: (a + modulus - b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// `self += a * b`, the inner loop of elimination.
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                *value = (*value + x * y % *modulus) % *modulus;
            }
            (Scalar::Rational(v), Scalar::Rational(x), Scalar::Rational(y)) => {
                *v += x * y;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer numerator/denominator pair for rationals (`None` for `F_p`).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_canonical_form() {
        let q = FieldSpec::Rational;
        assert_eq!(q.parse_scalar("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse_scalar("-2/-4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("3/-6").unwrap().to_string(), "-1/2");
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse_scalar("1/2").unwrap().to_string(), "3");
        assert!(f5.parse_scalar("1/5").is_err());
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2147483647).is_ok());
        assert!(FieldSpec::prime(2147483659).is_err());
        assert_eq!(
            "p:7".parse::<FieldSpec>().unwrap(),
            FieldSpec::Prime { p: 7 }
        );
        assert_eq!(
            "rational".parse::<FieldSpec>().unwrap(),
            FieldSpec::Rational
        );
        assert!("gf:4".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn modular_inverse_round_trip() {
        let f = FieldSpec::prime(2147483647).unwrap();
        let a = f.from_i64(123456789);
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert!(f.zero().inv().is_none());
    }
}
