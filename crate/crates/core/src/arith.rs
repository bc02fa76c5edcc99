//! Exact rationals, the extended slope line, and sorted triples.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. A zero denominator is rejected;
    /// use [`ExtRational::Infinity`] for the degenerate slope.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// Shorthand for small literals. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("zero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Greatest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Least integer not below `self`.
    pub fn ceil(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        self - &Rational::from_integer(self.floor())
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// `1 - self`.
    pub fn complement(&self) -> Rational {
        &Rational::one() - self
    }

    /// True when `0 < self < 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.is_positive() && self.0 < BigRational::one()
    }

    /// Decimal rendering with `digits` places, rounded toward zero. Display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.is_negative();
        let num = self.numer().abs();
        let den = self.denom();
        let (int, mut rem) = num.div_rem(den);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int.to_string());
        if digits > 0 {
            out.push('.');
            let ten = BigInt::from(10);
            for _ in 0..digits {
                rem *= &ten;
                let (d, r) = rem.div_rem(den);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        out
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_parts(s: &str) -> Option<(BigInt, BigInt)> {
    match s.split_once('/') {
        Some((n, d)) => {
            if d.starts_with('-') {
                return None;
            }
            Some((parse_int(n)?, parse_int(d)?))
        }
        None => Some((parse_int(s)?, BigInt::one())),
    }
}

/// Accepts `-?\d+/\d+` or `-?\d+`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (n, d) = parse_parts(s.trim()).ok_or_else(|| Error::ParseRational(s.into()))?;
        Rational::new(n, d)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on division by zero, like integer division.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// A slope on the extended line: a finite rational or the single point at
/// infinity (the degenerate fiber slope).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    /// `num/den`, mapping any zero denominator with a nonzero numerator to
    /// [`ExtRational::Infinity`].
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(ExtRational::Infinity);
        }
        Rational::new(num, den).map(ExtRational::Finite)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => r.fmt(f),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

/// Accepts the rational grammar plus `inf` and `n/0` for `n != 0`.
impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t == "inf" {
            return Ok(ExtRational::Infinity);
        }
        let (n, d) = parse_parts(t).ok_or_else(|| Error::ParseRational(s.into()))?;
        ExtRational::new(n, d)
    }
}

/// Three rationals kept in nondecreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SortedTriple([Rational; 3]);

impl SortedTriple {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        let mut s = [a, b, c];
        s.sort();
        SortedTriple(s)
    }

    pub fn s1(&self) -> &Rational {
        &self.0[0]
    }

    pub fn s2(&self) -> &Rational {
        &self.0[1]
    }

    pub fn s3(&self) -> &Rational {
        &self.0[2]
    }

    pub fn as_array(&self) -> &[Rational; 3] {
        &self.0
    }

    /// The triple `(1 - s1, 1 - s2, 1 - s3)`, re-sorted.
    pub fn complement(&self) -> SortedTriple {
        let [a, b, c] = &self.0;
        SortedTriple::new(a.complement(), b.complement(), c.complement())
    }

    /// Strict inequality in every slot.
    pub fn lt(&self, other: &SortedTriple) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x < y)
    }

    /// Weak inequality in every slot.
    pub fn le(&self, other: &SortedTriple) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }
}

pub fn sorted_triple(a: Rational, b: Rational, c: Rational) -> SortedTriple {
    SortedTriple::new(a, b, c)
}

pub fn triple_lt(x: &SortedTriple, y: &SortedTriple) -> bool {
    x.lt(y)
}

impl fmt::Display for SortedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Finds the fraction with the least denominator in the interval
/// `(lower, upper)`, or `(lower, upper]` when `upper_inclusive` is set.
///
/// Requires `0 <= lower < upper`. Returns `(num, den)` in lowest terms, or
/// `None` when the interval is empty. The descent batches runs of
/// same-direction Stern-Brocot moves, so the number of iterations is
/// bounded by the continued-fraction length of the endpoints.
pub fn simplest_in_interval(lower: &Rational, upper: &Rational, upper_inclusive: bool) -> Option<(BigInt, BigInt)> {
    debug_assert!(!lower.is_negative());
    match lower.cmp(upper) {
        Ordering::Less => {}
        _ => return None,
    }
    let (ln, ld) = (lower.numer(), lower.denom());
    let (un, ud) = (upper.numer(), upper.denom());

    let below = |p: &BigInt, q: &BigInt| p * ld <= ln * q;
    let above = |p: &BigInt, q: &BigInt| {
        let lhs = p * ud;
        let rhs = un * q;
        if upper_inclusive {
            lhs > rhs
        } else {
            lhs >= rhs
        }
    };

    let (mut lp, mut lq) = (BigInt::zero(), BigInt::one());
    let (mut rp, mut rq) = (BigInt::one(), BigInt::zero());
    loop {
        let mp = &lp + &rp;
        let mq = &lq + &rq;
        if below(&mp, &mq) {
            // largest t with (lp + t*rp)/(lq + t*rq) <= lower
            let num = ln * &lq - ld * &lp;
            let den = ld * &rp - ln * &rq;
            let t = num.div_floor(&den);
            lp += &t * &rp;
            lq += &t * &rq;
        } else if above(&mp, &mq) {
            // largest t with (t*lp + rp)/(t*lq + rq) still above the interval
            let c = un * &lq - ud * &lp;
            let x = ud * &rp - un * &rq;
            let t = if upper_inclusive { (x - BigInt::one()).div_floor(&c) } else { x.div_floor(&c) };
            rp += &t * &lp;
            rq += &t * &lq;
        } else {
            return Some((mp, mq));
        }
    }
}
