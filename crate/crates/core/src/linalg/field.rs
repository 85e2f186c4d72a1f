//! Exact scalars: prime fields GF(p) and the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Largest prime accepted for GF(p); keeps products of residues inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The base field, identified by its characteristic. `0` means the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub fn new(characteristic: u64) -> Result<Self, LinalgError> {
        if characteristic == 0 || (characteristic <= MAX_PRIME && is_prime(characteristic)) {
            Ok(Self { characteristic })
        } else {
            Err(LinalgError::BadCharacteristic(characteristic))
        }
    }

    pub fn rationals() -> Self {
        Self { characteristic: 0 }
    }

    /// GF(p). Panics if `p` is not an admissible prime; use [`FieldSpec::new`] for fallible input.
    pub fn gf(p: u64) -> Self {
        Self::new(p).expect("characteristic must be a prime below 2^31")
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        if den == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Parses the serialized form: integers for GF(p) (any integer, reduced mod p),
    /// `"a/b"` or `"a"` strings or integers for the rationals.
    pub fn parse_value(&self, v: &serde_json::Value) -> Result<Scalar, LinalgError> {
        match v {
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| LinalgError::BadEntry(n.to_string()))?;
                Ok(self.from_i64(i))
            }
            serde_json::Value::String(s) => self.parse_str(s),
            other => Err(LinalgError::BadEntry(other.to_string())),
        }
    }

    pub fn parse_str(&self, s: &str) -> Result<Scalar, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::BadEntry(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<BigInt>().map_err(|_| bad())?,
                b.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        match self.characteristic {
            0 => Ok(Scalar::Rat(BigRational::new(num, den))),
            p => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().expect("residue fits in u64")
                };
                let n = Scalar::Mod { value: reduce(&num), p };
                let d = Scalar::Mod { value: reduce(&den), p };
                n.div(&d)
            }
        }
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = LinalgError;
    fn try_from(c: u64) -> Result<Self, Self::Error> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
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

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// An exact field element. Residues carry their modulus so arithmetic needs no context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u64, p: u64 },
    Rat(BigRational),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod { p, .. } => FieldSpec { characteristic: *p },
            Scalar::Rat(_) => FieldSpec::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: mod_pow(*value, p - 2, *p),
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        Ok(self * &other.inv()?)
    }

    /// Serialized form: integer in `[0, p)` or a lowest-terms `"a/b"` string (`"a"` when b = 1).
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Mod { value, .. } => serde_json::Value::from(*value),
            Scalar::Rat(_) => serde_json::Value::String(self.to_string()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: (a + b) % p,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: (a + p - b) % p,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: a * b % p,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
