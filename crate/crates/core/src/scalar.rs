//! Exact scalars over ℚ or a prime field 𝔽_p with p odd.
//!
//! Every value carries its field. Arithmetic between values of different
//! fields is a logic error: the operator impls panic, and the public entry
//! points of the crate check fields up front and return
//! [`Error::FieldMismatch`](crate::Error::FieldMismatch) instead.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Rat;

use crate::error::Error;

/// The ground field of an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    /// 𝔽_p for an odd prime p.
    Prime(u64),
}

impl Field {
    /// Builds 𝔽_p, rejecting characteristic 2 and composite moduli.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not a prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rat::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rat::from_int(n)),
            Field::Prime(p) => Scalar::Prime {
                value: reduce_i128(n as i128, p),
                modulus: p,
            },
        }
    }

    /// `num/den` in this field; `None` when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.int(den).inverse()?;
        Some(&self.int(num) * &d)
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// The `index`-th element in the enumeration order `0, 1, …, p−1`.
    pub fn element(self, index: u64) -> Scalar {
        match self {
            Field::Rational => self.int(index as i64),
            Field::Prime(p) => Scalar::Prime {
                value: index % p,
                modulus: p,
            },
        }
    }

    /// Parses a scalar written the way documents write it: a string `"a"` or
    /// `"a/b"` over ℚ, an integer over 𝔽_p. Non-canonical spellings are
    /// accepted and normalized; [`Field::parse_canonical`] is the strict form.
    pub fn parse(self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        match self {
            Field::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (parse_bigint(n)?, parse_bigint(d)?),
                    None => (parse_bigint(text)?, BigInt::one()),
                };
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Rational(Rat::from_big(BigRational::new(num, den))))
            }
            Field::Prime(p) => {
                let n = parse_bigint(text)?;
                let r = n.mod_floor(&BigInt::from(p));
                Ok(Scalar::Prime {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                })
            }
        }
    }

    /// Parses and insists the spelling is already canonical.
    pub fn parse_canonical(self, text: &str) -> Result<Scalar, Error> {
        let value = self.parse(text)?;
        if value.to_string() != text {
            let reason = match self {
                Field::Rational if text.contains('/') => "rational not in lowest terms",
                Field::Rational => "non-canonical rational",
                Field::Prime(_) => "residue outside [0, p)",
            };
            return Err(Error::Parse(format!("{reason}: {text:?}")));
        }
        Ok(value)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `F5`, `Fp:5` or `Fp5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("Fp"))
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown field {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("unknown field {s:?}")))?;
        Field::prime(p)
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rat),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Multiplies by `(−1)^e`.
    pub fn signed(self, odd: bool) -> Scalar {
        if odd {
            -&self
        } else {
            self
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[track_caller]
fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "cross-field arithmetic between F{a} and F{b}");
    a
}

#[track_caller]
fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!(
        "cross-field arithmetic between {} and {}",
        a.field(),
        b.field()
    )
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a = a.add(b),
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a = a.sub(b),
            _ => *self = &*self - rhs,
        }
    }
}

fn parse_bigint(text: &str) -> Result<BigInt, Error> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
}

fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
