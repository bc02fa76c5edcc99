//! Normalized Seifert invariants, first homology, and coarse classification.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{ExtRational, Rational};
use crate::Error;

/// Base orbifold of the fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    S2,
    /// Projective-plane base. Carries no slope data.
    RP2,
}

/// A Seifert fibered space `S2(b; r1, ..., rk)` in normal form: every
/// finite slope lies in `(0, 1)`, slopes are sorted, and degenerate
/// fibers (slope `1/0`) are counted separately.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertForm {
    base: Base,
    b: BigInt,
    slopes: Vec<Rational>,
    degenerate: usize,
}

impl SeifertForm {
    /// The projective-plane marker.
    pub fn rp2() -> Self {
        SeifertForm { base: Base::RP2, b: BigInt::zero(), slopes: Vec::new(), degenerate: 0 }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    pub fn degenerate_count(&self) -> usize {
        self.degenerate
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate > 0
    }

    /// The raw slope list with each degenerate fiber rendered as infinity.
    pub fn ext_slopes(&self) -> Vec<ExtRational> {
        let mut out: Vec<ExtRational> = self.slopes.iter().cloned().map(ExtRational::Finite).collect();
        out.extend(core::iter::repeat_n(ExtRational::Infinity, self.degenerate));
        out
    }

    /// Product of the fiber indices of the finite slopes.
    pub fn index_product(&self) -> BigInt {
        self.slopes.iter().map(|r| r.denom().clone()).product()
    }
}

impl fmt::Display for SeifertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base == Base::RP2 {
            return f.write_str("SFS[RP2]");
        }
        write!(f, "SFS[S2; {}", self.b)?;
        for (i, s) in self.ext_slopes().iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}{s}")?;
        }
        f.write_str("]")
    }
}

/// Folds integer parts into `b`, drops zero slopes, counts infinite slopes
/// as degenerate fibers, and sorts what remains.
pub fn normalize(b: impl Into<BigInt>, raw: &[ExtRational]) -> SeifertForm {
    let mut b = b.into();
    let mut slopes = Vec::with_capacity(raw.len());
    let mut degenerate = 0;
    for s in raw {
        match s {
            ExtRational::Infinity => degenerate += 1,
            ExtRational::Finite(r) => {
                b += r.floor();
                let frac = r.fract();
                if !frac.is_zero() {
                    slopes.push(frac);
                }
            }
        }
    }
    slopes.sort();
    SeifertForm { base: Base::S2, b, slopes, degenerate }
}

/// Convenience wrapper over [`normalize`] for finite slopes.
pub fn normalize_finite(b: impl Into<BigInt>, raw: &[Rational]) -> SeifertForm {
    let ext: Vec<ExtRational> = raw.iter().cloned().map(ExtRational::Finite).collect();
    normalize(b, &ext)
}

/// `b + sum of slopes`. Undefined with degenerate fibers or an RP2 base.
pub fn euler_number(f: &SeifertForm) -> Result<Rational, Error> {
    if f.base != Base::S2 || f.degenerate > 0 {
        return Err(Error::DegenerateEuler);
    }
    Ok(f.slopes.iter().fold(Rational::from_integer(f.b.clone()), |acc, r| acc + r))
}

/// Order of the first homology group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum H1Order {
    Finite(BigUint),
    /// First Betti number is positive.
    Infinite,
}

impl H1Order {
    fn from_signed(n: BigInt) -> Self {
        if n.is_zero() {
            H1Order::Infinite
        } else {
            H1Order::Finite(n.magnitude().clone())
        }
    }

    /// True when this order matches `|slope|`, with order infinity
    /// corresponding to slope 0.
    pub fn matches_slope(&self, slope: &BigInt) -> bool {
        match self {
            H1Order::Infinite => slope.is_zero(),
            H1Order::Finite(n) => n == slope.magnitude(),
        }
    }
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => n.fmt(f),
            H1Order::Infinite => f.write_str("inf"),
        }
    }
}

/// `|a1 ... ak (b + sum bi/ai)|`, or infinite when it vanishes.
pub fn h1_order(f: &SeifertForm) -> Result<H1Order, Error> {
    if f.base != Base::S2 || f.degenerate > 0 {
        return Err(Error::DegenerateH1);
    }
    let e = euler_number(f)?;
    let det = e * Rational::from_integer(f.index_product());
    debug_assert!(det.is_integer());
    Ok(H1Order::from_signed(det.numer().clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    S3,
    S2xS1,
    LensSpace,
    ConnectedSumOfLensSpaces,
    SmallSFS,
    RP2Base,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::S3 => "S3",
            Tag::S2xS1 => "S2xS1",
            Tag::LensSpace => "LensSpace",
            Tag::ConnectedSumOfLensSpaces => "ConnectedSumOfLensSpaces",
            Tag::SmallSFS => "SmallSFS",
            Tag::RP2Base => "RP2Base",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub tag: Tag,
    /// `None` only for the RP2 marker, which carries no homology data here.
    pub h1: Option<H1Order>,
    /// Orders of the lens-space summands when `tag` is a connected sum.
    pub summand_orders: Vec<BigUint>,
}

impl Classification {
    fn simple(tag: Tag, h1: H1Order) -> Self {
        Classification { tag, h1: Some(h1), summand_orders: Vec::new() }
    }
}

/// Coarse homeomorphism type of a normal form.
pub fn classify(f: &SeifertForm) -> Result<Classification, Error> {
    if f.base == Base::RP2 {
        return Ok(Classification { tag: Tag::RP2Base, h1: None, summand_orders: Vec::new() });
    }
    let k = f.slopes.len();
    if k > 3 {
        return Err(Error::UnsupportedFiberCount(k));
    }
    match f.degenerate {
        0 => {
            let h1 = h1_order(f)?;
            if k == 3 {
                return Ok(Classification::simple(Tag::SmallSFS, h1));
            }
            let tag = match &h1 {
                H1Order::Infinite => Tag::S2xS1,
                H1Order::Finite(n) if n.is_one() => Tag::S3,
                H1Order::Finite(_) => Tag::LensSpace,
            };
            Ok(Classification::simple(tag, h1))
        }
        1 => {
            // The degenerate fiber splits the space along a sphere into one
            // lens space per remaining exceptional fiber.
            let orders: Vec<BigUint> = f.slopes.iter().map(|r| r.denom().magnitude().clone()).collect();
            let total: BigUint = orders.iter().product();
            let h1 = H1Order::Finite(total);
            Ok(match k {
                0 => Classification::simple(Tag::S3, h1),
                1 => Classification::simple(Tag::LensSpace, h1),
                _ => Classification { tag: Tag::ConnectedSumOfLensSpaces, h1: Some(h1), summand_orders: orders },
            })
        }
        _ if k == 0 => Ok(Classification::simple(Tag::S2xS1, H1Order::Infinite)),
        _ => Err(Error::InvalidDegenerate),
    }
}

/// Orientation reversal: `S2(b; r_i)` maps to the normal form of
/// `S2(-b; -r_i)`. The RP2 marker is returned unchanged.
pub fn mirror(f: &SeifertForm) -> SeifertForm {
    if f.base == Base::RP2 {
        return f.clone();
    }
    let neg: Vec<Rational> = f.slopes.iter().map(|r| -r).collect();
    let mut out = normalize_finite(-f.b.clone(), &neg);
    out.degenerate = f.degenerate;
    out
}
