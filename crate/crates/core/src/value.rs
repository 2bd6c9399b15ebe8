//! Exact extended rationals, the min-plus semiring operations and exponent vectors.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// An element of `Q ∪ {+∞}`.
///
/// The derived order puts every finite value below `Infinity`, so `min`
/// is the semiring sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtValue {
    Finite(Rational),
    Infinity,
}

impl ExtValue {
    pub fn zero() -> Self {
        ExtValue::Finite(Rational::zero())
    }

    pub fn int(v: i64) -> Self {
        ExtValue::Finite(Rational::from_integer(BigInt::from(v)))
    }

    /// `num/den`, reduced. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        ExtValue::Finite(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtValue::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtValue::Finite(r) => Some(r),
            ExtValue::Infinity => None,
        }
    }

    /// Tropical sum: `min(a, b)`.
    pub fn oplus(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product: `a + b`, with `∞` absorbing.
    pub fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Infinity,
        }
    }

    /// Adds a finite rational.
    pub fn shift(&self, by: &Rational) -> Self {
        match self {
            ExtValue::Finite(a) => ExtValue::Finite(a + by),
            ExtValue::Infinity => ExtValue::Infinity,
        }
    }

    /// `k · a` with the convention `0 · ∞ = 0`.
    pub fn scale(k: u64, a: &Self) -> Self {
        if k == 0 {
            return ExtValue::zero();
        }
        match a {
            ExtValue::Finite(r) => ExtValue::Finite(r * Rational::from_integer(BigInt::from(k))),
            ExtValue::Infinity => ExtValue::Infinity,
        }
    }
}

impl From<Rational> for ExtValue {
    fn from(r: Rational) -> Self {
        ExtValue::Finite(r)
    }
}

/// Both semiring operations at once: `(a ⊕ b, a ⊙ b)`.
pub fn semiring_ops(a: &ExtValue, b: &ExtValue) -> (ExtValue, ExtValue) {
    (a.oplus(b), a.otimes(b))
}

/// Tropical sum of a sequence; `∞` for an empty one.
pub fn tropical_sum<'a, I: IntoIterator<Item = &'a ExtValue>>(items: I) -> ExtValue {
    items.into_iter().fold(ExtValue::Infinity, |acc, v| if *v < acc { v.clone() } else { acc })
}

/// Least common multiple of the denominators of the finite values (1 if none).
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a ExtValue>>(items: I) -> BigInt {
    let mut l = BigInt::one();
    for v in items {
        if let ExtValue::Finite(r) = v {
            l = l.lcm(r.denom());
        }
    }
    l
}

/// Multiplies by `scale` and returns the result as an `i64` when it is an
/// integer in range.
pub fn scaled_i64(r: &Rational, scale: &BigInt) -> Option<i64> {
    let s = r * Rational::from_integer(scale.clone());
    if !s.is_integer() {
        return None;
    }
    s.to_integer().to_i64()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseValueError;

impl fmt::Display for ParseValueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer, a reduced fraction p/q, or inf")
    }
}

impl core::error::Error for ParseValueError {}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

impl FromStr for ExtValue {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExtValue::Infinity);
        }
        match s.split_once('/') {
            None => parse_int(s).map(|n| ExtValue::Finite(Rational::from_integer(n))).ok_or(ParseValueError),
            Some((p, q)) => {
                let p = parse_int(p).ok_or(ParseValueError)?;
                if q.starts_with('-') {
                    return Err(ParseValueError);
                }
                let q = parse_int(q).ok_or(ParseValueError)?;
                if q <= BigInt::one() || !p.gcd(&q).is_one() {
                    return Err(ParseValueError);
                }
                Ok(ExtValue::Finite(Rational::new_raw(p, q)))
            }
        }
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtValue::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExtValue::Infinity => f.write_str("inf"),
        }
    }
}

/// Absolute value of a rational, used by bounds such as the joint variation.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// A monomial exponent `I = (i_1, …, i_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(alloc::vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[i] = 1;
        e
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other` when every coordinate stays nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Exponent)
    }

    /// Coordinates with a nonzero entry.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i)
    }

    /// `⟨a, I⟩` with `0 · ∞ = 0`.
    pub fn pair(&self, a: &[ExtValue]) -> ExtValue {
        let mut acc = Rational::zero();
        for (&c, v) in self.0.iter().zip(a) {
            if c == 0 {
                continue;
            }
            match v {
                ExtValue::Finite(r) => acc += r * Rational::from_integer(BigInt::from(c)),
                ExtValue::Infinity => return ExtValue::Infinity,
            }
        }
        ExtValue::Finite(acc)
    }

    /// `⟨s, I⟩` for a finite rational vector.
    pub fn dot(&self, s: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (&c, v) in self.0.iter().zip(s) {
            if c != 0 {
                acc += v * Rational::from_integer(BigInt::from(c));
            }
        }
        acc
    }

    /// Graded order: by degree, then lexicographically.
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str(")")
    }
}

/// Converts a small integer into a rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
