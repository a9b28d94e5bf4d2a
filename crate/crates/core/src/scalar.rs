//! The semi-field of nonnegative rationals.
//!
//! [`NonnegScalar`] is an exact, always-reduced fraction `p/q` with `p >= 0`
//! and `q > 0`. There is no subtraction: the only way to compare two scalars
//! "by difference" is [`NonnegScalar::ordered_diff`], which returns the gap
//! `c >= 0` with `max(a, b) = min(a, b) + c` together with the order.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact nonnegative rational number.
#[derive(Clone, Eq, PartialOrd, Ord, Default)]
pub struct NonnegScalar(BigRational);

// Both sides are reduced, so equal values have equal parts.
impl PartialEq for NonnegScalar {
    fn eq(&self, other: &Self) -> bool {
        self.0.numer() == other.0.numer() && self.0.denom() == other.0.denom()
    }
}

impl std::hash::Hash for NonnegScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.numer().hash(state);
        self.0.denom().hash(state);
    }
}

/// Which side of an [`OrderedDiff`] is the larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffOrder {
    Equal,
    FirstGreater,
    SecondGreater,
}

/// The gap between two scalars together with their order.
///
/// `max = min + gap` holds exactly, and `gap` is zero iff `order` is
/// [`DiffOrder::Equal`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedDiff {
    pub gap: NonnegScalar,
    pub order: DiffOrder,
}

impl NonnegScalar {
    pub fn zero() -> Self {
        NonnegScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        NonnegScalar(BigRational::one())
    }

    pub fn from_integer(n: u64) -> Self {
        NonnegScalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, reduced. Fails only for a zero denominator.
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        Self::from_biguints(BigUint::from(numer), BigUint::from(denom))
    }

    pub fn from_biguints(numer: BigUint, denom: BigUint) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ParseScalar {
                literal: format!("{numer}/0"),
                reason: "zero denominator",
            });
        }
        Ok(NonnegScalar(BigRational::new(
            BigInt::from_biguint(Sign::Plus, numer),
            BigInt::from_biguint(Sign::Plus, denom),
        )))
    }

    /// Wraps a rational known to be nonnegative; `None` for negative input.
    pub(crate) fn from_rational(r: BigRational) -> Option<Self> {
        if r.is_negative() {
            None
        } else {
            Some(NonnegScalar(r))
        }
    }

    pub(crate) fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> BigUint {
        self.0.numer().magnitude().clone()
    }

    pub fn denom(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(NonnegScalar(self.0.recip()))
        }
    }

    /// Division by a positive scalar.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        Ok(self * &divisor.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        NonnegScalar(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// The exact `index`-th root when both numerator and denominator are
    /// perfect powers.
    pub fn exact_root(&self, index: u32) -> Option<Self> {
        assert!(index > 0, "root index must be positive");
        let n = self.numer();
        let d = self.denom();
        let rn = n.nth_root(index);
        let rd = d.nth_root(index);
        if num_traits::pow(rn.clone(), index as usize) == n
            && num_traits::pow(rd.clone(), index as usize) == d
        {
            Self::from_biguints(rn, rd).ok()
        } else {
            None
        }
    }

    /// The monus primitive: the gap between `self` and `other` and which
    /// one is larger.
    pub fn ordered_diff(&self, other: &Self) -> OrderedDiff {
        match self.cmp(other) {
            Ordering::Equal => OrderedDiff {
                gap: Self::zero(),
                order: DiffOrder::Equal,
            },
            Ordering::Greater => OrderedDiff {
                gap: NonnegScalar(&self.0 - &other.0),
                order: DiffOrder::FirstGreater,
            },
            Ordering::Less => OrderedDiff {
                gap: NonnegScalar(&other.0 - &self.0),
                order: DiffOrder::SecondGreater,
            },
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Canonical `numerator/denominator` form used by every serializer.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl OrderedDiff {
    pub fn is_equal(&self) -> bool {
        self.order == DiffOrder::Equal
    }
}

impl fmt::Display for NonnegScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() && !f.alternate() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for NonnegScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_digits(literal: &str, part: &str) -> Result<BigUint> {
    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
        let reason = if part.starts_with('-') || literal.starts_with('-') {
            "negative values are not scalars"
        } else {
            "expected INT, INT/INT or DECIMAL"
        };
        return Err(Error::ParseScalar {
            literal: literal.to_string(),
            reason,
        });
    }
    Ok(part.parse::<BigUint>().expect("validated digits"))
}

impl FromStr for NonnegScalar {
    type Err = Error;

    /// Accepts `INT`, `INT/INT` or `DECIMAL` (e.g. `0.75`). Decimals are
    /// converted digit by digit, with no binary float in between.
    fn from_str(s: &str) -> Result<Self> {
        let lit = s.trim();
        let body = lit.strip_prefix('+').unwrap_or(lit);
        if let Some((n, d)) = body.split_once('/') {
            let n = parse_digits(lit, n.trim())?;
            let d = parse_digits(lit, d.trim())?;
            return Self::from_biguints(n, d).map_err(|_| Error::ParseScalar {
                literal: lit.to_string(),
                reason: "zero denominator",
            });
        }
        if let Some((int, frac)) = body.split_once('.') {
            let int_part = if int.is_empty() {
                BigUint::zero()
            } else {
                parse_digits(lit, int)?
            };
            let frac_part = parse_digits(lit, frac)?;
            let scale = num_traits::pow(BigUint::from(10u32), frac.len());
            return Self::from_biguints(int_part * &scale + frac_part, scale);
        }
        let n = parse_digits(lit, body)?;
        Self::from_biguints(n, BigUint::one())
    }
}

impl From<u64> for NonnegScalar {
    fn from(n: u64) -> Self {
        Self::from_integer(n)
    }
}

impl TryFrom<&str> for NonnegScalar {
    type Error = Error;
    fn try_from(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl Serialize for NonnegScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for NonnegScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Literal {
            Text(String),
            Number(serde_json::Number),
        }
        let text = match Literal::deserialize(deserializer)? {
            Literal::Text(s) => s,
            Literal::Number(n) => n.to_string(),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

fn word_parts(r: &BigRational) -> Option<(u128, u128)> {
    Some((u128::from(r.numer().to_u64()?), u128::from(r.denom().to_u64()?)))
}

fn from_reduced(numer: u128, denom: u128) -> BigRational {
    BigRational::new_raw(BigInt::from(numer), BigInt::from(denom))
}

// Word-sized operands are combined in `u128`: products of two words fit, the sum is checked.
fn add_rational(x: &BigRational, y: &BigRational) -> BigRational {
    match (word_parts(x), word_parts(y)) {
        (Some((a, b)), Some((c, d))) => {
            let g = b.gcd(&d);
            let Some(numer) = (a * (d / g)).checked_add(c * (b / g)) else {
                return x + y;
            };
            let denom = (b / g) * d;
            let h = numer.gcd(&denom);
            if numer == 0 {
                BigRational::zero()
            } else {
                from_reduced(numer / h, denom / h)
            }
        }
        _ => x + y,
    }
}

fn mul_rational(x: &BigRational, y: &BigRational) -> BigRational {
    match (word_parts(x), word_parts(y)) {
        (Some((a, b)), Some((c, d))) => {
            if a == 0 || c == 0 {
                return BigRational::zero();
            }
            let (g1, g2) = (a.gcd(&d), c.gcd(&b));
            from_reduced((a / g1) * (c / g2), (b / g2) * (d / g1))
        }
        _ => x * y,
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&NonnegScalar> for &NonnegScalar {
            type Output = NonnegScalar;
            fn $method(self, rhs: &NonnegScalar) -> NonnegScalar {
                NonnegScalar($f(&self.0, &rhs.0))
            }
        }
        impl $trait<NonnegScalar> for NonnegScalar {
            type Output = NonnegScalar;
            fn $method(self, rhs: NonnegScalar) -> NonnegScalar {
                NonnegScalar($f(&self.0, &rhs.0))
            }
        }
        impl $trait<&NonnegScalar> for NonnegScalar {
            type Output = NonnegScalar;
            fn $method(self, rhs: &NonnegScalar) -> NonnegScalar {
                NonnegScalar($f(&self.0, &rhs.0))
            }
        }
        impl $trait<NonnegScalar> for &NonnegScalar {
            type Output = NonnegScalar;
            fn $method(self, rhs: NonnegScalar) -> NonnegScalar {
                NonnegScalar($f(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add, add_rational);
forward_binop!(Mul, mul, mul_rational);

impl AddAssign<&NonnegScalar> for NonnegScalar {
    fn add_assign(&mut self, rhs: &NonnegScalar) {
        self.0 = add_rational(&self.0, &rhs.0);
    }
}

impl MulAssign<&NonnegScalar> for NonnegScalar {
    fn mul_assign(&mut self, rhs: &NonnegScalar) {
        self.0 = mul_rational(&self.0, &rhs.0);
    }
}

impl Sum for NonnegScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a NonnegScalar> for NonnegScalar {
    fn sum<I: Iterator<Item = &'a NonnegScalar>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl Product for NonnegScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl Zero for NonnegScalar {
    fn zero() -> Self {
        NonnegScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for NonnegScalar {
    fn one() -> Self {
        NonnegScalar::one()
    }
}

/// Shorthand for literals in tests and examples; panics on bad input.
///
/// ```
/// use semikit::scalar::q;
/// assert_eq!(q("1/2") + q("1/3"), q("5/6"));
/// ```
pub fn q(literal: &str) -> NonnegScalar {
    literal
        .parse()
        .unwrap_or_else(|e| panic!("bad scalar literal {literal:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_examples() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("7/3") + NonnegScalar::zero(), q("7/3"));
        assert_eq!(q("2") + q("3"), q("5"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(q("2/3") * q("3/4"), q("1/2"));
        assert_eq!(q("5/7") * NonnegScalar::one(), q("5/7"));
        assert!((q("5/7") * NonnegScalar::zero()).is_zero());
    }

    #[test]
    fn inverse() {
        assert_eq!(q("3/4").inv().unwrap(), q("4/3"));
        assert_eq!(q("1").inv().unwrap(), q("1"));
        assert_eq!(q("0").inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn ordered_diff_examples() {
        let d = q("5/2").ordered_diff(&q("1"));
        assert_eq!(d.gap, q("3/2"));
        assert_eq!(d.order, DiffOrder::FirstGreater);

        let d = q("4/9").ordered_diff(&q("4/9"));
        assert!(d.gap.is_zero());
        assert_eq!(d.order, DiffOrder::Equal);

        let d = q("1").ordered_diff(&q("4"));
        assert_eq!(d.gap, q("3"));
        assert_eq!(d.order, DiffOrder::SecondGreater);
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(q("0.75"), q("3/4"));
        assert_eq!(q(".5"), q("1/2"));
        assert_eq!(q("0.1") + q("0.2"), q("3/10"));
        assert_eq!(q("12/8"), q("3/2"));
    }

    #[test]
    fn rejects_bad_literals() {
        for bad in ["-1", "1/0", "", "abc", "1e3", "1/-2", "1.2.3"] {
            assert!(bad.parse::<NonnegScalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn serializes_as_fraction() {
        let json = serde_json::to_string(&q("5")).unwrap();
        assert_eq!(json, "\"5/1\"");
        let back: Vec<NonnegScalar> = serde_json::from_str(r#"["3/6", 2, 0.25]"#).unwrap();
        assert_eq!(back, vec![q("1/2"), q("2"), q("1/4")]);
    }

    #[test]
    fn exact_roots() {
        assert_eq!(q("25/4").exact_root(2), Some(q("5/2")));
        assert_eq!(q("5").exact_root(2), None);
        assert_eq!(q("27").exact_root(3), Some(q("3")));
    }
}
