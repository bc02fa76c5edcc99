//! Twist families of Seifert surgeries.
//!
//! Twisting `n` times along a seiferter changes the seiferter's Seifert
//! invariant to `f(n) = (n*beta + beta3) / (n*alpha + alpha3)` and the
//! surgery slope to `m + n*l^2`. The surgered space is
//! `S2(b; r1, r2, f(n))`, and as `|n|` grows `f(n)` tends to `beta/alpha`.

use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{ExtRational, Rational};
use crate::lspace::{decide, third_slot_threshold, LSpaceSet, LSpaceVerdict};
use crate::seifert::{classify, normalize, H1Order, SeifertForm, Tag};
use crate::Error;

/// How far a tail certificate walks toward the pole to tighten its start.
const INWARD_WALK_CAP: u32 = 100_000;

/// Seifert data of a knot with a seiferter, plus the twisting matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeiferterData {
    b: BigInt,
    r1: Rational,
    r2: Rational,
    alpha: BigInt,
    beta: BigInt,
    alpha3: BigInt,
    beta3: BigInt,
    m: BigInt,
    l: BigInt,
    realizable: bool,
}

/// The four entries `(alpha, beta, alpha3, beta3)` of the twisting matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistMatrix {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub alpha3: BigInt,
    pub beta3: BigInt,
}

impl TwistMatrix {
    pub fn new(alpha: i64, beta: i64, alpha3: i64, beta3: i64) -> Self {
        TwistMatrix { alpha: alpha.into(), beta: beta.into(), alpha3: alpha3.into(), beta3: beta3.into() }
    }

    pub fn det(&self) -> BigInt {
        &self.alpha * &self.beta3 - &self.beta * &self.alpha3
    }
}

impl SeiferterData {
    /// Validates `det = 1`, the sign of `alpha3` (or the degenerate
    /// encoding `(alpha3, beta3) = (0, 1)`), the slope range, and `l >= 0`.
    pub fn new(
        b: impl Into<BigInt>,
        r1: Rational,
        r2: Rational,
        matrix: TwistMatrix,
        m: impl Into<BigInt>,
        l: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        for r in [&r1, &r2] {
            if !r.in_unit_interval() {
                return Err(Error::SlopeOutOfRange(format!("{r}")));
            }
        }
        let det = matrix.det();
        if !det.is_one() {
            return Err(Error::Determinant(format!("{det}")));
        }
        let degenerate = matrix.alpha3.is_zero() && matrix.beta3.is_one();
        if !matrix.alpha3.is_positive() && !degenerate {
            return Err(Error::InvalidParameter(format!(
                "alpha3 = {} must be positive unless (alpha3, beta3) = (0, 1)",
                matrix.alpha3
            )));
        }
        let l = l.into();
        if l.is_negative() {
            return Err(Error::InvalidParameter(format!("linking number {l} is negative")));
        }
        let TwistMatrix { alpha, beta, alpha3, beta3 } = matrix;
        Ok(SeiferterData { b: b.into(), r1, r2, alpha, beta, alpha3, beta3, m: m.into(), l, realizable: false })
    }

    /// Marks the data as coming from an actual knot in the 3-sphere, which
    /// enables the homology consistency check.
    pub fn realizable(mut self) -> Self {
        self.realizable = true;
        self
    }

    pub fn is_realizable(&self) -> bool {
        self.realizable
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn r1(&self) -> &Rational {
        &self.r1
    }

    pub fn r2(&self) -> &Rational {
        &self.r2
    }

    pub fn matrix(&self) -> TwistMatrix {
        TwistMatrix {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            alpha3: self.alpha3.clone(),
            beta3: self.beta3.clone(),
        }
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn l(&self) -> &BigInt {
        &self.l
    }

    /// Reindexes the family so that new index `n` is old index `n + s`.
    pub fn shifted(&self, s: i64) -> SeiferterData {
        let s = BigInt::from(s);
        let mut out = self.clone();
        out.alpha3 = &s * &self.alpha + &self.alpha3;
        out.beta3 = &s * &self.beta + &self.beta3;
        out.m = &self.m + &s * &self.l * &self.l;
        if out.alpha3.is_negative() {
            out.alpha = -out.alpha;
            out.beta = -out.beta;
            out.alpha3 = -out.alpha3;
            out.beta3 = -out.beta3;
        }
        out
    }

    /// Index of the pole, `-alpha3/alpha`, when `alpha != 0`.
    pub fn pole(&self) -> Option<Rational> {
        if self.alpha.is_zero() {
            None
        } else {
            Some(Rational::new(-self.alpha3.clone(), self.alpha.clone()).expect("alpha != 0"))
        }
    }
}

/// Seifert invariant of the twisted seiferter; infinite at the pole.
pub fn fiber_slope(d: &SeiferterData, n: impl Into<BigInt>) -> ExtRational {
    let n = n.into();
    let num = &n * &d.beta + &d.beta3;
    let den = &n * &d.alpha + &d.alpha3;
    ExtRational::new(num, den).expect("unimodular matrix has no zero column")
}

pub fn surgered_space(d: &SeiferterData, n: impl Into<BigInt>) -> SeifertForm {
    let slope = fiber_slope(d, n);
    normalize(d.b.clone(), &[d.r1.clone().into(), d.r2.clone().into(), slope])
}

/// `m + n*l^2`.
pub fn surgery_slope(d: &SeiferterData, n: impl Into<BigInt>) -> BigInt {
    &d.m + n.into() * &d.l * &d.l
}

/// The limit slope `beta/alpha` on the extended line.
pub fn limit_slope(d: &SeiferterData) -> ExtRational {
    ExtRational::new(d.beta.clone(), d.alpha.clone()).expect("unimodular matrix has no zero column")
}

/// `S2(b; r1, r2, beta/alpha)`, the common limit of the family.
pub fn limit_space(d: &SeiferterData) -> SeifertForm {
    normalize(d.b.clone(), &[d.r1.clone().into(), d.r2.clone().into(), limit_slope(d)])
}

fn order_of(f: &SeifertForm) -> Option<H1Order> {
    classify(f).ok().and_then(|c| c.h1)
}

/// Checks `|H1(K_n(m_n))| = |m_n|`. Synthetic data that is not marked
/// realizable always fails.
pub fn h1_consistency(d: &SeiferterData, n: impl Into<BigInt>) -> bool {
    if !d.realizable {
        return false;
    }
    let n = n.into();
    match order_of(&surgered_space(d, n.clone())) {
        Some(h) => h.matches_slope(&surgery_slope(d, n)),
        None => false,
    }
}

/// Verdict for one member of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointRecord {
    pub n: BigInt,
    pub slope: BigInt,
    pub form: SeifertForm,
    pub tag: Tag,
    pub verdict: LSpaceVerdict,
}

pub fn point_record(d: &SeiferterData, n: impl Into<BigInt>) -> Result<PointRecord, Error> {
    let n = n.into();
    let form = surgered_space(d, n.clone());
    let tag = classify(&form)?.tag;
    let verdict = decide(&form)?;
    Ok(PointRecord { slope: surgery_slope(d, n.clone()), n, form, tag, verdict })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `n -> +infinity`.
    Positive,
    /// `n -> -infinity`.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailStatus {
    Certified {
        is_lspace: bool,
    },
    /// Kept for report compatibility; the exact thresholds below always
    /// certify, including when the limit slope sits on a boundary.
    DecidedPointwiseOnly,
}

/// Where the tail's third slope lives: `S2(b; r1, r2, x)` with `x`
/// approaching `approach` from the side given by the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailBlock {
    pub b: BigInt,
    pub approach: Rational,
    pub lspace_set: LSpaceSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailCertificate {
    pub side: Side,
    pub status: TailStatus,
    /// The verdict holds for all `n >= from` (positive side) or all
    /// `n <= from` (negative side). `None` means every `n` on that side,
    /// including all integers when the family has no pole.
    pub from: Option<BigInt>,
    pub limit_slope: ExtRational,
    pub block: Option<TailBlock>,
}

impl TailCertificate {
    pub fn verdict(&self) -> Option<bool> {
        match self.status {
            TailStatus::Certified { is_lspace } => Some(is_lspace),
            TailStatus::DecidedPointwiseOnly => None,
        }
    }

    /// True when `n` lies in the certified range.
    pub fn covers(&self, n: &BigInt) -> bool {
        match (&self.from, self.side) {
            (None, _) => true,
            (Some(f), Side::Positive) => n >= f,
            (Some(f), Side::Negative) => n <= f,
        }
    }
}

/// Shape of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `alpha = 0`: every member is a lens space and the limit is a
    /// connected sum. At most one member, `exceptional`, is `S2 x S1`.
    LensLine { exceptional: Option<BigInt> },
    /// `alpha != 0`: `f(n)` tends to `beta/alpha` on both sides of `pole`.
    Twisting { pole: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub data: SeiferterData,
    pub window: (i64, i64),
    pub points: Vec<PointRecord>,
    pub tail_pos: TailCertificate,
    pub tail_neg: TailCertificate,
    pub limit: SeifertForm,
    pub limit_verdict: LSpaceVerdict,
    /// Window members classified as `S2 x S1` or a connected sum.
    pub exceptional_n: Vec<i64>,
    pub regime: Regime,
}

impl FamilyReport {
    /// Certified verdict for `n`, when a tail covers it.
    pub fn tail_verdict(&self, n: &BigInt) -> Option<bool> {
        [&self.tail_pos, &self.tail_neg].into_iter().find(|t| t.covers(n)).and_then(TailCertificate::verdict)
    }
}

/// Pointwise verdicts on `window` together with exact certificates for
/// both tails.
pub fn classify_family(d: &SeiferterData, window: RangeInclusive<i64>) -> Result<FamilyReport, Error> {
    let points = window.clone().map(|n| point_record(d, n)).collect::<Result<Vec<_>, _>>()?;
    family_report_from_points(d, window, points)
}

/// Assembles a report from precomputed window records, which must be
/// [`point_record`] for each `n` in `window`, in order. Lets callers
/// evaluate the window in parallel.
pub fn family_report_from_points(
    d: &SeiferterData,
    window: RangeInclusive<i64>,
    points: Vec<PointRecord>,
) -> Result<FamilyReport, Error> {
    let (lo, hi) = (*window.start(), *window.end());
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty window {lo}..{hi}")));
    }
    debug_assert_eq!(points.len() as i128, i128::from(hi) - i128::from(lo) + 1);
    let exceptional_n = points
        .iter()
        .filter(|p| matches!(p.tag, Tag::S2xS1 | Tag::ConnectedSumOfLensSpaces))
        .map(|p| i64::try_from(&p.n).expect("window index"))
        .collect();
    let limit = limit_space(d);
    let limit_verdict = decide(&limit)?;
    let (tail_pos, tail_neg, regime) = match d.pole() {
        None => lens_line_tails(d),
        Some(pole) => {
            let pos = twisting_tail(d, &pole, Side::Positive)?;
            let neg = twisting_tail(d, &pole, Side::Negative)?;
            (pos, neg, Regime::Twisting { pole })
        }
    };
    Ok(FamilyReport {
        data: d.clone(),
        window: (lo, hi),
        points,
        tail_pos,
        tail_neg,
        limit,
        limit_verdict,
        exceptional_n,
        regime,
    })
}

/// With `alpha = 0` the matrix forces `beta = -1`, `alpha3 = 1`, so
/// `f(n) = beta3 - n` and every member is the lens space
/// `S2(b + beta3 - n; r1, r2)`. It fails to be an L-space only when its
/// Euler number `b + beta3 - n + r1 + r2` vanishes.
fn lens_line_tails(d: &SeiferterData) -> (TailCertificate, TailCertificate, Regime) {
    let n_star = Rational::from_integer(&d.b + &d.beta3) + &d.r1 + &d.r2;
    let exceptional = n_star.is_integer().then(|| n_star.numer().clone());
    let tail = |side: Side| TailCertificate {
        side,
        status: TailStatus::Certified { is_lspace: true },
        from: exceptional.as_ref().map(|n| match side {
            Side::Positive => n + 1,
            Side::Negative => n - 1,
        }),
        limit_slope: ExtRational::Infinity,
        block: None,
    };
    (tail(Side::Positive), tail(Side::Negative), Regime::LensLine { exceptional })
}

/// The tail on one side of the pole.
///
/// On the positive side `f(n)` decreases to `L = beta/alpha`; on the
/// negative side it increases to `L`. Writing the third slope as `p + x'`
/// with `p` an integer and `x'` in `(0, 1)`, the members near `L` all live
/// in `S2(b + p; r1, r2, x')` with `x'` tending to `x = L - p`. The exact
/// third-slot L-space set for that `b + p` then fixes the tail's verdict
/// and the band `x'` must stay inside, which converts to an index bound
/// through `f(n) - L = 1/(alpha^2 n + alpha alpha3)`.
fn twisting_tail(d: &SeiferterData, pole: &Rational, side: Side) -> Result<TailCertificate, Error> {
    let big_l = Rational::new(d.beta.clone(), d.alpha.clone()).expect("alpha != 0");
    let floor = big_l.floor();
    let (p, x) = match (side, big_l.is_integer()) {
        (Side::Positive, true) => (floor, Rational::zero()),
        (Side::Negative, true) => (floor - 1, Rational::one()),
        (_, false) => (floor.clone(), big_l.fract()),
    };
    let block_b = &d.b + &p;
    let set = third_slot_threshold(block_b.clone(), &d.r1, &d.r2)?.lspace_set;

    // (verdict, edge of the band on the far side of x)
    let (is_lspace, y) = match side {
        Side::Positive => match &set {
            LSpaceSet::All => (true, Rational::one()),
            LSpaceSet::Empty => (false, Rational::one()),
            LSpaceSet::UpClosed { t, .. } if x >= *t => (true, Rational::one()),
            LSpaceSet::UpClosed { t, .. } => (false, t.clone()),
            LSpaceSet::DownClosed { t, .. } if x < *t => (true, t.clone()),
            LSpaceSet::DownClosed { .. } => (false, Rational::one()),
        },
        Side::Negative => match &set {
            LSpaceSet::All => (true, Rational::zero()),
            LSpaceSet::Empty => (false, Rational::zero()),
            LSpaceSet::UpClosed { t, .. } if x > *t => (true, t.clone()),
            LSpaceSet::UpClosed { .. } => (false, Rational::zero()),
            LSpaceSet::DownClosed { t, .. } if x <= *t => (true, Rational::zero()),
            LSpaceSet::DownClosed { t, .. } => (false, t.clone()),
        },
    };

    let a2 = Rational::from_integer(&d.alpha * &d.alpha);
    let aa3 = Rational::from_integer(&d.alpha * &d.alpha3);
    let edge = Rational::from_integer(p) + &y;
    let start = match side {
        Side::Positive => {
            let gap = &edge - &big_l;
            let inv = gap.recip().expect("band has positive width");
            ((inv - &aa3) / a2).floor() + 1
        }
        Side::Negative => {
            let gap = &big_l - &edge;
            let inv = gap.recip().expect("band has positive width");
            ((-inv - &aa3) / a2).ceil() - 1
        }
    };
    let from = walk_inward(d, pole, side, start, is_lspace)?;
    Ok(TailCertificate {
        side,
        status: TailStatus::Certified { is_lspace },
        from: Some(from),
        limit_slope: ExtRational::Finite(big_l),
        block: Some(TailBlock { b: block_b, approach: x, lspace_set: set }),
    })
}

/// Moves the certified start toward the pole while pointwise verdicts
/// continue to match.
fn walk_inward(
    d: &SeiferterData,
    pole: &Rational,
    side: Side,
    mut from: BigInt,
    is_lspace: bool,
) -> Result<BigInt, Error> {
    let step: BigInt = match side {
        Side::Positive => BigInt::from(-1),
        Side::Negative => BigInt::one(),
    };
    for _ in 0..INWARD_WALK_CAP {
        let next = &from + &step;
        let next_q = Rational::from_integer(next.clone());
        let beyond_pole = match side {
            Side::Positive => &next_q > pole,
            Side::Negative => &next_q < pole,
        };
        if !beyond_pole || decide(&surgered_space(d, next.clone()))?.is_lspace != is_lspace {
            break;
        }
        from = next;
    }
    Ok(from)
}

/// Index `n` with `f(n) = L + 1/(alpha^2 n + alpha alpha3)` for checking
/// monotone convergence. `None` when `alpha = 0`.
pub fn distance_to_limit(d: &SeiferterData, n: impl Into<BigInt>) -> Option<Rational> {
    if d.alpha.is_zero() {
        return None;
    }
    let den = &d.alpha * &d.alpha * n.into() + &d.alpha * &d.alpha3;
    Rational::new(BigInt::one(), den).ok()
}
