//! L-space decision for Seifert fibered spaces over the sphere.
//!
//! A small Seifert space `S2(b; r1, r2, r3)` is an L-space unless `b` is
//! `-1` or `-2` and a horizontal foliation witness exists: coprime
//! `0 < a <= k/2` with the sorted slopes (or their complements when
//! `b = -2`) strictly below `(1/k, a/k, (k-a)/k)` in every slot.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{simplest_in_interval, Rational, SortedTriple};
use crate::seifert::{classify, euler_number, normalize_finite, SeifertForm, Tag};
use crate::Error;

/// Coprime pair `0 < a <= k/2` certifying a horizontal foliation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FoliationWitness {
    k: BigInt,
    a: BigInt,
}

impl FoliationWitness {
    /// Checks coprimality and `0 < a <= k/2`.
    pub fn new(k: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<Self, Error> {
        let (k, a) = (k.into(), a.into());
        let two_a = &a * 2;
        if !a.is_positive() || two_a > k || !a.gcd(&k).is_one() {
            return Err(Error::InvalidParameter(alloc::format!("witness (k={k}, a={a})")));
        }
        Ok(FoliationWitness { k, a })
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// The bounding triple `(1/k, a/k, (k-a)/k)`.
    pub fn bound(&self) -> SortedTriple {
        let k = &self.k;
        let q = |n: BigInt| Rational::new(n, k.clone()).expect("k >= 2");
        SortedTriple::new(q(BigInt::one()), q(self.a.clone()), q(k - &self.a))
    }

    /// True when `t` lies strictly below [`Self::bound`] in every slot.
    pub fn certifies(&self, t: &SortedTriple) -> bool {
        t.lt(&self.bound())
    }
}

impl fmt::Display for FoliationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, a={})", self.k, self.a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `b >= 0` or `b <= -3`.
    BLarge,
    /// At most two exceptional fibers and not `S2 x S1`.
    LensNotS2xS1,
    /// A degenerate fiber splits the space into lens-space summands.
    ConnectedSumOfLSpaces,
    Rp2Base,
    InfiniteH1,
    /// No witness exists; the search covered every `k <= kmax`.
    NoWitnessExhaustive(BigInt),
    /// Witness against the sorted slopes (`b = -1`).
    Witness(FoliationWitness),
    /// Witness against the complemented slopes (`b = -2`).
    DualWitness(FoliationWitness),
}

impl Reason {
    pub fn name(&self) -> &'static str {
        match self {
            Reason::BLarge => "BLarge",
            Reason::LensNotS2xS1 => "LensNotS2xS1",
            Reason::ConnectedSumOfLSpaces => "ConnectedSumOfLSpaces",
            Reason::Rp2Base => "RP2Base",
            Reason::InfiniteH1 => "InfiniteH1",
            Reason::NoWitnessExhaustive(_) => "NoWitnessExhaustive",
            Reason::Witness(_) => "Witness",
            Reason::DualWitness(_) => "DualWitness",
        }
    }

    pub fn witness(&self) -> Option<&FoliationWitness> {
        match self {
            Reason::Witness(w) | Reason::DualWitness(w) => Some(w),
            _ => None,
        }
    }
}

/// Decision plus certificate.
///
/// A space with vanishing Euler number is never an L-space. When such a
/// space also admits a witness, the witness is reported as the reason and
/// `rational_homology_sphere` is false, so both facts stay visible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LSpaceVerdict {
    pub is_lspace: bool,
    pub reason: Reason,
    pub rational_homology_sphere: bool,
    /// Largest `k` the witness criterion can involve, when a search ran.
    pub search_bound: Option<BigInt>,
}

impl LSpaceVerdict {
    fn plain(is_lspace: bool, reason: Reason) -> Self {
        LSpaceVerdict {
            is_lspace,
            rational_homology_sphere: !matches!(reason, Reason::InfiniteH1),
            reason,
            search_bound: None,
        }
    }
}

/// Largest `k` with `k * s1 < 1`.
pub fn search_bound(t: &SortedTriple) -> BigInt {
    let inv = t.s1().recip().expect("slopes are positive");
    inv.ceil() - BigInt::one()
}

/// Lexicographically smallest witness `(k, a)` for a triple with entries
/// in `(0, 1)`, or `None` when there is none.
///
/// The admissible `a/k` form the interval `(s2, min(1 - s3, 1/2)]` (open at
/// `1 - s3` when that is the binding end), and `k` must satisfy
/// `k * s1 < 1`. Since the first constraint only gets easier and the
/// second only harder as `k` grows, the least-denominator fraction in the
/// interval decides everything; it is unique for its denominator.
pub fn witness_search(t: &SortedTriple) -> Option<FoliationWitness> {
    let half = Rational::frac(1, 2);
    let (upper, inclusive) = if *t.s3() >= half { (t.s3().complement(), false) } else { (half, true) };
    let (a, k) = simplest_in_interval(t.s2(), &upper, inclusive)?;
    if Rational::from_integer(k.clone()) * t.s1() < Rational::one() {
        Some(FoliationWitness { k, a })
    } else {
        None
    }
}

/// Decides whether `f` is an L-space.
pub fn decide(f: &SeifertForm) -> Result<LSpaceVerdict, Error> {
    let class = classify(f)?;
    Ok(match class.tag {
        Tag::RP2Base => LSpaceVerdict::plain(true, Reason::Rp2Base),
        Tag::ConnectedSumOfLensSpaces => LSpaceVerdict::plain(true, Reason::ConnectedSumOfLSpaces),
        Tag::S2xS1 => LSpaceVerdict::plain(false, Reason::InfiniteH1),
        Tag::S3 | Tag::LensSpace => LSpaceVerdict::plain(true, Reason::LensNotS2xS1),
        Tag::SmallSFS => decide_small(f)?,
    })
}

fn small_triple(f: &SeifertForm) -> SortedTriple {
    let s = f.slopes();
    SortedTriple::new(s[0].clone(), s[1].clone(), s[2].clone())
}

fn decide_small(f: &SeifertForm) -> Result<LSpaceVerdict, Error> {
    let b = f.b();
    let rhs = !euler_number(f)?.is_zero();
    let dual = if *b == BigInt::from(-1) {
        false
    } else if *b == BigInt::from(-2) {
        true
    } else {
        let mut v = LSpaceVerdict::plain(rhs, if rhs { Reason::BLarge } else { Reason::InfiniteH1 });
        v.rational_homology_sphere = rhs;
        return Ok(v);
    };
    let mut t = small_triple(f);
    if dual {
        t = t.complement();
    }
    let bound = search_bound(&t);
    let (is_lspace, reason) = match witness_search(&t) {
        Some(w) if dual => (false, Reason::DualWitness(w)),
        Some(w) => (false, Reason::Witness(w)),
        None if rhs => (true, Reason::NoWitnessExhaustive(bound.clone())),
        None => (false, Reason::InfiniteH1),
    };
    Ok(LSpaceVerdict { is_lspace, reason, rational_homology_sphere: rhs, search_bound: Some(bound) })
}

/// Closed-form L-space shortcuts for three-fiber forms. Never returns
/// `Some(false)`; `None` means no shortcut applies.
pub fn sufficient_conditions(f: &SeifertForm) -> Option<bool> {
    let class = classify(f).ok()?;
    if class.tag != Tag::SmallSFS {
        return None;
    }
    let t = small_triple(f);
    let b = f.b();
    if *b == BigInt::from(-1) {
        (t.s2() + t.s3() >= Rational::one()).then_some(true)
    } else if *b == BigInt::from(-2) {
        (t.s1() + t.s2() <= Rational::one()).then_some(true)
    } else if euler_number(f).ok()?.is_zero() {
        None
    } else {
        Some(true)
    }
}

/// The set of third slopes `r` in `(0, 1)` making `S2(b; r1, r2, r)` an
/// L-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LSpaceSet {
    Empty,
    All,
    /// `{r >= t}`, or `{r > t}` when `attained` is false.
    UpClosed {
        t: Rational,
        attained: bool,
    },
    /// `{r <= t}`, or `{r < t}` when `attained` is false.
    DownClosed {
        t: Rational,
        attained: bool,
    },
}

impl LSpaceSet {
    pub fn contains(&self, r: &Rational) -> bool {
        match self {
            LSpaceSet::Empty => false,
            LSpaceSet::All => true,
            LSpaceSet::UpClosed { t, attained } => r > t || (*attained && r == t),
            LSpaceSet::DownClosed { t, attained } => r < t || (*attained && r == t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThirdSlotThreshold {
    pub b: BigInt,
    pub r1: Rational,
    pub r2: Rational,
    pub lspace_set: LSpaceSet,
}

/// Smallest `a` in `[lo, hi]` coprime to `k`.
fn first_coprime(k: &BigInt, lo: BigInt, hi: &BigInt) -> Option<BigInt> {
    let mut a = lo;
    while &a <= hi {
        if a.gcd(k).is_one() {
            return Some(a);
        }
        a += 1;
    }
    None
}

/// Largest `a` in `[lo, hi]` coprime to `k`.
fn last_coprime(k: &BigInt, lo: &BigInt, hi: BigInt) -> Option<BigInt> {
    let mut a = hi;
    while &a >= lo {
        if a.gcd(k).is_one() {
            return Some(a);
        }
        a -= 1;
    }
    None
}

/// Supremum of the third slopes `r` for which `(q1, q2, r)` admits a
/// witness, with `q1 <= q2`. The non-L-space set is exactly `(0, sup)`.
fn witness_supremum(q1: &Rational, q2: &Rational) -> Option<Rational> {
    let one = BigInt::one();
    let mut best: Option<Rational> = None;
    let mut offer = |u: Rational| {
        if best.as_ref().is_none_or(|b| &u > b) {
            best = Some(u);
        }
    };

    // r in the smallest slot: need a/k in (q1, 1 - q2) and a/k <= 1/2.
    let half = Rational::frac(1, 2);
    let (upper, inclusive) = if q2 >= &half { (q2.complement(), false) } else { (half, true) };
    if let Some((_, k)) = simplest_in_interval(q1, &upper, inclusive) {
        offer(Rational::new(one.clone(), k).expect("k >= 1"));
    }

    // q1 in the smallest slot: finitely many k with k * q1 < 1.
    let kmax = q1.recip().expect("positive").ceil() - &one;
    let mut k = BigInt::from(2);
    while k <= kmax {
        let half_k = &k / 2;
        // smallest a with a/k > q2
        let lo = (q2 * &Rational::from_integer(k.clone())).floor() + &one;
        if let Some(a) = first_coprime(&k, lo.max(one.clone()), &half_k) {
            // r takes the largest slot, (k - a)/k.
            offer(Rational::new(&k - a, k.clone()).expect("k >= 2"));
        } else {
            // r takes the middle slot; q2 must sit below (k - a)/k.
            let hi = (q2.complement() * Rational::from_integer(k.clone())).ceil() - &one;
            if let Some(a) = last_coprime(&k, &one, hi.min(half_k)) {
                offer(Rational::new(a, k.clone()).expect("k >= 2"));
            }
        }
        k += 1;
    }
    best
}

/// Exact L-space set of the third slope for `S2(b; r1, r2, r)`.
pub fn third_slot_threshold(b: impl Into<BigInt>, r1: &Rational, r2: &Rational) -> Result<ThirdSlotThreshold, Error> {
    let b = b.into();
    for r in [r1, r2] {
        if !r.in_unit_interval() {
            return Err(Error::SlopeOutOfRange(alloc::format!("{r}")));
        }
    }
    let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    let lspace_set = if b == BigInt::from(-1) {
        match witness_supremum(lo, hi) {
            Some(t) => LSpaceSet::UpClosed { attained: is_lspace_at(&b, r1, r2, &t), t },
            None => LSpaceSet::All,
        }
    } else if b == BigInt::from(-2) {
        match witness_supremum(&hi.complement(), &lo.complement()) {
            Some(u) => {
                let t = u.complement();
                LSpaceSet::DownClosed { attained: is_lspace_at(&b, r1, r2, &t), t }
            }
            None => LSpaceSet::All,
        }
    } else {
        LSpaceSet::All
    };
    Ok(ThirdSlotThreshold { b, r1: r1.clone(), r2: r2.clone(), lspace_set })
}

fn is_lspace_at(b: &BigInt, r1: &Rational, r2: &Rational, r: &Rational) -> bool {
    let f = normalize_finite(b.clone(), &[r1.clone(), r2.clone(), r.clone()]);
    decide(&f).map(|v| v.is_lspace).unwrap_or(false)
}
