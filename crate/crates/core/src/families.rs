//! Catalog of explicit twist families and the arithmetic guarantee checks
//! attached to them.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::Rational;
use crate::lspace::decide;
use crate::seifert::{mirror, normalize_finite, SeifertForm};
use crate::twist::{classify_family, FamilyReport, SeiferterData, TwistMatrix};
use crate::Error;

/// Which twist indices are claimed to give L-space surgeries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Guarantee {
    AllN,
    NGe(i64),
    NLe(i64),
    AllNExcept(Vec<i64>),
}

impl Guarantee {
    /// The claimed verdict at `n`, or `None` when the claim says nothing.
    pub fn expects(&self, n: i64) -> Option<bool> {
        match self {
            Guarantee::AllN => Some(true),
            Guarantee::NGe(k) => (n >= *k).then_some(true),
            Guarantee::NLe(k) => (n <= *k).then_some(true),
            Guarantee::AllNExcept(list) => Some(!list.contains(&n)),
        }
    }

    /// Reindexes a claim through the orientation reversal `n -> -n`.
    pub fn mirrored(&self) -> Guarantee {
        match self {
            Guarantee::AllN => Guarantee::AllN,
            Guarantee::NGe(k) => Guarantee::NLe(-k),
            Guarantee::NLe(k) => Guarantee::NGe(-k),
            Guarantee::AllNExcept(list) => Guarantee::AllNExcept(list.iter().map(|n| -n).collect()),
        }
    }

    /// Reindexes a claim so new index `n` is old index `n + s`.
    pub fn shifted(&self, s: i64) -> Guarantee {
        match self {
            Guarantee::AllN => Guarantee::AllN,
            Guarantee::NGe(k) => Guarantee::NGe(k - s),
            Guarantee::NLe(k) => Guarantee::NLe(k - s),
            Guarantee::AllNExcept(list) => Guarantee::AllNExcept(list.iter().map(|n| n - s).collect()),
        }
    }
}

impl core::fmt::Display for Guarantee {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Guarantee::AllN => f.write_str("all n"),
            Guarantee::NGe(k) => write!(f, "n >= {k}"),
            Guarantee::NLe(k) => write!(f, "n <= {k}"),
            Guarantee::AllNExcept(list) => write!(f, "all n except {list:?}"),
        }
    }
}

/// Source of the manifolds in a family.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Generator {
    Seiferter(SeiferterData),
    /// Every member is Seifert fibered over the projective plane.
    ProjectiveBase {
        slope: BigInt,
        indices: (BigInt, BigInt),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: Vec<(String, i64)>,
    /// One entry per admissible Seifert model; the claim covers all of them.
    pub generators: Vec<Generator>,
    pub claimed: Guarantee,
    pub notes: Vec<String>,
}

impl FamilySpec {
    fn new(name: &str, params: &[(&str, i64)], generators: Vec<Generator>, claimed: Guarantee) -> Self {
        FamilySpec {
            name: name.to_owned(),
            params: params.iter().map(|(k, v)| ((*k).to_owned(), *v)).collect(),
            generators,
            claimed,
            notes: Vec::new(),
        }
    }

    pub fn seiferters(&self) -> impl Iterator<Item = &SeiferterData> {
        self.generators.iter().filter_map(|g| match g {
            Generator::Seiferter(d) => Some(d),
            Generator::ProjectiveBase { .. } => None,
        })
    }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// Twisting a `(p, q)` torus knot along a seiferter with linking number
/// `l` gives L-space surgeries for every `n` when `l^2 >= 2pq`, and for
/// `n >= -1` otherwise.
pub fn torus_guarantee(p: i64, q: i64, l: i64) -> Result<Guarantee, Error> {
    require(p >= 2 && q >= 2, || format!("torus indices ({p}, {q}) must be at least 2"))?;
    let (p, q, l) = (BigInt::from(p), BigInt::from(q), BigInt::from(l));
    Ok(if &l * &l >= BigInt::from(2) * p * q { Guarantee::AllN } else { Guarantee::NGe(-1) })
}

/// Base data `S2(B; b1/p, b2/q)` of a torus-knot surgery whose seiferter
/// has linking number `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusCandidate {
    pub b: i64,
    pub r1: Rational,
    pub r2: Rational,
}

/// Every `(B, b1/p, b2/q)` with `0 < b1 < p`, `0 < b2 < q` and
/// `B + b1/p + b2/q = l^2/(pq)`. These are exactly the forms for which
/// `S2(B; r1, r2, 1/n)` has `|H1| = |pq + n l^2|` for all `n`.
pub fn torus_pq_candidates(p: i64, q: i64, l: i64) -> Result<Vec<TorusCandidate>, Error> {
    require(p >= 2 && q >= 2, || format!("torus indices ({p}, {q}) must be at least 2"))?;
    require(p.gcd(&q) == 1, || format!("torus indices ({p}, {q}) must be coprime"))?;
    require(l >= 1, || format!("linking number {l} must be positive"))?;
    let target = Rational::new(BigInt::from(l) * l, p * q)?;
    let mut out = Vec::new();
    for b1 in 1..p {
        for b2 in 1..q {
            let rest = &target - &(r(b1, p) + r(b2, q));
            if rest.is_integer() {
                let b = i64::try_from(rest.numer()).map_err(|_| Error::InvalidParameter("B overflows".into()))?;
                out.push(TorusCandidate { b, r1: r(b1, p), r2: r(b2, q) });
            }
        }
    }
    Ok(out)
}

/// Seiferter data `S2(B; r1, r2, 1/n)` with slope `pq + n l^2`.
fn torus_data(c: &TorusCandidate, p: i64, q: i64, l: i64) -> Result<SeiferterData, Error> {
    SeiferterData::new(c.b, c.r1.clone(), c.r2.clone(), TwistMatrix::new(1, 0, 0, 1), p * q, l)
        .map(SeiferterData::realizable)
}

/// The orientation-reversed family: base `mirror(S2(B; r1, r2))`, twist
/// index negated, slope `-pq + n l^2`.
fn mirrored_torus_data(c: &TorusCandidate, p: i64, q: i64, l: i64) -> Result<SeiferterData, Error> {
    let base: SeifertForm = mirror(&normalize_finite(c.b, &[c.r1.clone(), c.r2.clone()]));
    let s = base.slopes();
    SeiferterData::new(base.b().clone(), s[0].clone(), s[1].clone(), TwistMatrix::new(1, 0, 0, 1), -p * q, l)
        .map(SeiferterData::realizable)
}

fn torus_generators(p: i64, q: i64, l: i64, mirrored: bool, shift: i64) -> Result<Vec<Generator>, Error> {
    let cands = torus_pq_candidates(p, q, l)?;
    require(!cands.is_empty(), || format!("no Seifert model for ({p}, {q}) with linking number {l}"))?;
    cands
        .iter()
        .map(|c| {
            let d = if mirrored { mirrored_torus_data(c, p, q, l)? } else { torus_data(c, p, q, l)? };
            Ok(Generator::Seiferter(if shift == 0 { d } else { d.shifted(shift) }))
        })
        .collect()
}

/// Torus knot `T(p, q)` twisted along a seiferter with linking number `l`.
pub fn torus_family(p: i64, q: i64, l: i64) -> Result<FamilySpec, Error> {
    let generators = torus_generators(p, q, l, false, 0)?;
    let claimed = torus_guarantee(p, q, l)?;
    Ok(FamilySpec::new("torus", &[("p", p), ("q", q), ("l", l)], generators, claimed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistedTorusKind {
    /// `K(p, q; p + q, n)`.
    PplusQ { p: i64, q: i64 },
    /// `K(p, q; p - q, n)`.
    PminusQ { p: i64, q: i64 },
    /// `K(3p + 1, 2p + 1; 4p + 1, n)`.
    F3p1 { p: i64 },
    /// `K(3p + 2, 2p + 1; 4p + 3, n)`.
    F3p2 { p: i64 },
    /// `K(2p + 3, 2p + 1; 2p + 2, n)`.
    F2p3 { p: i64 },
}

/// Twisted torus knots: the torus knot `T(p', q')` twisted along an
/// unknot encircling `l` strands.
pub fn twisted_torus_family(kind: TwistedTorusKind) -> Result<FamilySpec, Error> {
    let (name, params, pp, qq, l, claimed): (&str, Vec<(&str, i64)>, i64, i64, i64, Guarantee) = match kind {
        TwistedTorusKind::PplusQ { p, q } => {
            require(p >= 2 && q >= 2, || format!("p, q = {p}, {q} must be at least 2"))?;
            ("twisted-torus-sum", vec![("p", p), ("q", q)], p, q, p + q, Guarantee::AllN)
        }
        TwistedTorusKind::PminusQ { p, q } => {
            require(q >= 2 && p - q >= 2, || format!("need p > q >= 2 and p - q >= 2, got {p}, {q}"))?;
            ("twisted-torus-difference", vec![("p", p), ("q", q)], p, q, p - q, Guarantee::NGe(-1))
        }
        TwistedTorusKind::F3p1 { p } => {
            require(p > 0, || format!("p = {p} must be positive"))?;
            ("twisted-torus-3p1", vec![("p", p)], 3 * p + 1, 2 * p + 1, 4 * p + 1, Guarantee::AllN)
        }
        TwistedTorusKind::F3p2 { p } => {
            require(p > 0, || format!("p = {p} must be positive"))?;
            ("twisted-torus-3p2", vec![("p", p)], 3 * p + 2, 2 * p + 1, 4 * p + 3, Guarantee::AllN)
        }
        TwistedTorusKind::F2p3 { p } => {
            require(p > 0, || format!("p = {p} must be positive"))?;
            ("twisted-torus-2p3", vec![("p", p)], 2 * p + 3, 2 * p + 1, 2 * p + 2, Guarantee::NGe(-1))
        }
    };
    let generators = torus_generators(pp, qq, l, false, 0)?;
    let mut spec = FamilySpec::new(name, &params, generators, claimed);
    spec.notes.push(format!("base torus knot T({pp}, {qq}), linking number {l}"));
    Ok(spec)
}

/// The unknot `O` with `m`-surgery and seiferter `c_{m,p}`. The surgered
/// spaces are `S2(-n/(mn+1), (1-p)/2p, (p-2m-1)/(2p-4m))` with slope
/// `m + n (p - m)^2`.
pub fn unknot_seiferter_family(m: i64, p: i64) -> Result<FamilySpec, Error> {
    require(m <= 0, || format!("m = {m} must be nonpositive"))?;
    require(p >= 3 && p % 2 != 0, || format!("p = {p} must be odd and at least 3"))?;
    let d = unknot_data(m, p)?;
    let claimed = if m == 0 { Guarantee::AllNExcept(vec![0]) } else { Guarantee::AllN };
    let mut spec = FamilySpec::new("unknot", &[("m", m), ("p", p)], vec![Generator::Seiferter(d)], claimed);
    if p == 2 * m + 1 || p == 2 * m - 1 {
        spec.notes.push("p = 2m +- 1: the link is not hyperbolic".into());
    }
    Ok(spec)
}

/// Seiferter data for `c_{m,p}` without the range checks of
/// [`unknot_seiferter_family`]; used to inspect limits for other `m`.
pub fn unknot_data(m: i64, p: i64) -> Result<SeiferterData, Error> {
    require(p != 0 && p != 2 * m, || format!("degenerate parameters m = {m}, p = {p}"))?;
    SeiferterData::new(
        -1,
        r(p + 1, 2 * p),
        r(p - 2 * m - 1, 2 * p - 4 * m),
        TwistMatrix::new(m, -1, 1, 0),
        m,
        (p - m).abs(),
    )
    .map(SeiferterData::realizable)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tunnel2 {
    /// `S2((11n+4)/(14n+5), -2/7, 1/2)` with slope `196n + 71`.
    A,
    /// `S2(-(3n+2)/(10n+7), 4/5, 1/2)` with slope `100n + 71`.
    B,
}

pub fn tunnel2_family(which: Tunnel2) -> FamilySpec {
    let (name, d) = match which {
        Tunnel2::A => ("tunnel2-a", SeiferterData::new(-1, r(1, 2), r(5, 7), TwistMatrix::new(14, 11, 5, 4), 71, 14)),
        Tunnel2::B => ("tunnel2-b", SeiferterData::new(0, r(1, 2), r(4, 5), TwistMatrix::new(10, -3, 7, -2), 71, 10)),
    };
    let d = d.expect("fixed data is valid").realizable();
    FamilySpec::new(name, &[], vec![Generator::Seiferter(d)], Guarantee::AllN)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sporadic {
    A,
    B,
    C,
    D,
}

impl Sporadic {
    /// `(p', q', l, mirrored, Berge index)` for parameter `p`.
    fn shape(self, p: i64) -> (i64, i64, i64, bool, i64) {
        match self {
            Sporadic::A => (6 * p + 1, p, 4 * p + 1, false, 1),
            Sporadic::B => (3 * p + 1, 2 * p + 1, 4 * p + 1, false, 1),
            Sporadic::C => (3 * p + 2, 2 * p + 1, 4 * p + 3, true, -1),
            Sporadic::D => (6 * p + 5, p + 1, 4 * p + 3, true, -1),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Sporadic::A => "sporadic-a",
            Sporadic::B => "sporadic-b",
            Sporadic::C => "sporadic-c",
            Sporadic::D => "sporadic-d",
        }
    }

    /// Twist index at which the family passes through the sporadic Berge knot.
    pub fn berge_index(self) -> i64 {
        self.shape(1).4
    }
}

/// Families through the sporadic Berge knots. Types c and d are
/// orientation-reversed torus or cable families.
pub fn berge_sporadic(kind: Sporadic, p: i64) -> Result<FamilySpec, Error> {
    let min = if kind == Sporadic::A { 2 } else { 1 };
    require(p >= min, || format!("p = {p} must be at least {min}"))?;
    let (pp, qq, l, mirrored, berge) = kind.shape(p);
    let generators = torus_generators(pp, qq, l, mirrored, 0)?;
    let base = torus_guarantee(pp, qq, l)?;
    let claimed = if mirrored { base.mirrored() } else { base };
    let mut spec = FamilySpec::new(kind.name(), &[("p", p)], generators, claimed);
    spec.notes.push(format!("base ({pp}, {qq}), linking number {l}, Berge knot at n = {berge}"));
    Ok(spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BergeType {
    VII,
    VIII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BergeOutcome {
    Family(FamilySpec),
    /// The parameters give a torus knot, so there is no twist family.
    TorusKnotDegenerate,
}

/// Berge knots of type VII and VIII: `K(a+b, -a; |b|, eps)` with
/// `eps = -1` for VII and `+1` for VIII, indexed so that `n = 0` is the
/// Berge knot.
pub fn berge_vii_viii(a: i64, b: i64, ty: BergeType) -> Result<BergeOutcome, Error> {
    require(a.gcd(&b) == 1, || format!("gcd({a}, {b}) must be 1"))?;
    if a.abs() <= 1 || b.abs() <= 1 || (a + b).abs() <= 1 {
        return Ok(BergeOutcome::TorusKnotDegenerate);
    }
    let eps = match ty {
        BergeType::VII => -1,
        BergeType::VIII => 1,
    };
    let (pp, qq, l) = ((a + b).abs(), a.abs(), b.abs());
    let mirrored = a * (a + b) > 0;
    let generators = torus_generators(pp, qq, l, mirrored, eps)?;
    let claimed = if mirrored { Guarantee::NLe(1 - eps) } else { Guarantee::AllN };
    let name = match ty {
        BergeType::VII => "berge-vii",
        BergeType::VIII => "berge-viii",
    };
    let mut spec = FamilySpec::new(name, &[("a", a), ("b", b)], generators, claimed);
    spec.notes.push(format!("torus base ({pp}, {qq}), linking number {l}, mirrored = {mirrored}"));
    Ok(BergeOutcome::Family(spec))
}

/// Twisted satellites: with `m >= w^2 (2g - 1)` every slope
/// `m/w^2 + n`, `n >= 0`, is at least `2g - 1`.
pub fn satellite_guarantee(w: i64, m: i64, g: i64) -> Result<bool, Error> {
    require(w >= 2, || format!("winding number {w} must be at least 2"))?;
    require(g >= 1, || format!("genus {g} must be positive"))?;
    let w2 = BigInt::from(w) * w;
    let bound = BigInt::from(2 * g - 1);
    if BigInt::from(m) < &w2 * &bound {
        return Err(Error::PreconditionFailed(format!("m = {m} is below w^2 (2g - 1) = {}", &w2 * &bound)));
    }
    // Slopes increase with n, so n = 0 is the binding case.
    let slope0 = Rational::new(m, w2)?;
    Ok(slope0 >= Rational::from_integer(bound))
}

/// Whether the surgeries with twist indices `n` and `n2` could occur on
/// the same hyperbolic knot: `|(n - n2) l^2| <= 8`.
pub fn distinctness_bound(l: i64, n: i64, n2: i64) -> bool {
    let d = (BigInt::from(n) - n2) * l * l;
    d.magnitude() <= &8u32.into()
}

/// Seifert surgeries over the projective plane: slope `12l^2 - 4l`,
/// exceptional indices `|l|` and `|-3l + 1|`.
pub fn em_rp2_family(l: i64) -> Result<FamilySpec, Error> {
    require(l != 0, || "l must be nonzero".into())?;
    let lb = BigInt::from(l);
    let slope = BigInt::from(12) * &lb * &lb - BigInt::from(4) * &lb;
    let indices = (BigInt::from(l.abs()), BigInt::from((1 - 3 * l).abs()));
    Ok(FamilySpec::new("em-rp2", &[("l", l)], vec![Generator::ProjectiveBase { slope, indices }], Guarantee::AllN))
}

/// A named catalog entry and its default parameters.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub defaults: &'static [(&'static str, i64)],
    pub summary: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "unknot", defaults: &[("m", 0), ("p", 3)], summary: "unknot with seiferter c_{m,p}" },
    CatalogEntry { name: "tunnel2-a", defaults: &[], summary: "tunnel number two family, slope 196n + 71" },
    CatalogEntry { name: "tunnel2-b", defaults: &[], summary: "tunnel number two family, slope 100n + 71" },
    CatalogEntry {
        name: "torus",
        defaults: &[("p", 3), ("q", 2), ("l", 5)],
        summary: "torus knot twisted along a seiferter",
    },
    CatalogEntry { name: "twisted-torus-sum", defaults: &[("p", 5), ("q", 2)], summary: "K(p, q; p + q, n)" },
    CatalogEntry { name: "twisted-torus-difference", defaults: &[("p", 5), ("q", 2)], summary: "K(p, q; p - q, n)" },
    CatalogEntry { name: "twisted-torus-3p1", defaults: &[("p", 1)], summary: "K(3p + 1, 2p + 1; 4p + 1, n)" },
    CatalogEntry { name: "twisted-torus-3p2", defaults: &[("p", 1)], summary: "K(3p + 2, 2p + 1; 4p + 3, n)" },
    CatalogEntry { name: "twisted-torus-2p3", defaults: &[("p", 1)], summary: "K(2p + 3, 2p + 1; 2p + 2, n)" },
    CatalogEntry { name: "sporadic-a", defaults: &[("p", 2)], summary: "through the sporadic Berge knot of type a" },
    CatalogEntry { name: "sporadic-b", defaults: &[("p", 1)], summary: "through the sporadic Berge knot of type b" },
    CatalogEntry { name: "sporadic-c", defaults: &[("p", 1)], summary: "through the sporadic Berge knot of type c" },
    CatalogEntry { name: "sporadic-d", defaults: &[("p", 1)], summary: "through the sporadic Berge knot of type d" },
    CatalogEntry { name: "berge-vii", defaults: &[("a", 2), ("b", 3)], summary: "Berge knots of type VII" },
    CatalogEntry { name: "berge-viii", defaults: &[("a", -2), ("b", 5)], summary: "Berge knots of type VIII" },
    CatalogEntry { name: "em-rp2", defaults: &[("l", 1)], summary: "Seifert surgeries over the projective plane" },
];

/// Builds a catalog family, overriding defaults with `overrides`.
pub fn family_by_name(name: &str, overrides: &[(&str, i64)]) -> Result<FamilySpec, Error> {
    let entry = CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownFamily(name.into()))?;
    for (k, _) in overrides {
        require(entry.defaults.iter().any(|(d, _)| d == k), || format!("family {name} has no parameter {k}"))?;
    }
    let get = |key: &str| {
        overrides
            .iter()
            .rev()
            .find(|(k, _)| *k == key)
            .or_else(|| entry.defaults.iter().find(|(k, _)| *k == key))
            .map(|(_, v)| *v)
            .expect("parameter has a default")
    };
    let berge = |ty| match berge_vii_viii(get("a"), get("b"), ty)? {
        BergeOutcome::Family(f) => Ok(f),
        BergeOutcome::TorusKnotDegenerate => Err(Error::InvalidParameter("parameters give a torus knot".into())),
    };
    match name {
        "unknot" => unknot_seiferter_family(get("m"), get("p")),
        "tunnel2-a" => Ok(tunnel2_family(Tunnel2::A)),
        "tunnel2-b" => Ok(tunnel2_family(Tunnel2::B)),
        "torus" => torus_family(get("p"), get("q"), get("l")),
        "twisted-torus-sum" => twisted_torus_family(TwistedTorusKind::PplusQ { p: get("p"), q: get("q") }),
        "twisted-torus-difference" => twisted_torus_family(TwistedTorusKind::PminusQ { p: get("p"), q: get("q") }),
        "twisted-torus-3p1" => twisted_torus_family(TwistedTorusKind::F3p1 { p: get("p") }),
        "twisted-torus-3p2" => twisted_torus_family(TwistedTorusKind::F3p2 { p: get("p") }),
        "twisted-torus-2p3" => twisted_torus_family(TwistedTorusKind::F2p3 { p: get("p") }),
        "sporadic-a" => berge_sporadic(Sporadic::A, get("p")),
        "sporadic-b" => berge_sporadic(Sporadic::B, get("p")),
        "sporadic-c" => berge_sporadic(Sporadic::C, get("p")),
        "sporadic-d" => berge_sporadic(Sporadic::D, get("p")),
        "berge-vii" => berge(BergeType::VII),
        "berge-viii" => berge(BergeType::VIII),
        "em-rp2" => em_rp2_family(get("l")),
        _ => Err(Error::UnknownFamily(name.into())),
    }
}

/// Every catalog family at its default parameters.
pub fn catalog() -> Vec<FamilySpec> {
    CATALOG.iter().map(|e| family_by_name(e.name, &[]).expect("defaults are valid")).collect()
}

/// Outcome of checking a family's claim on a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Confirmation {
    /// Indices where the claim and the computed verdict disagree.
    pub violations: Vec<i64>,
    pub reports: Vec<FamilyReport>,
}

impl Confirmation {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Indices in a report's window where the computed verdict contradicts
/// the claim.
pub fn violations(claimed: &Guarantee, report: &FamilyReport) -> Vec<i64> {
    report
        .points
        .iter()
        .filter_map(|p| {
            let n = i64::try_from(&p.n).expect("window index");
            claimed.expects(n).is_some_and(|want| want != p.verdict.is_lspace).then_some(n)
        })
        .collect()
}

/// Runs every generator over `window` and compares with the claim.
pub fn confirm(spec: &FamilySpec, window: RangeInclusive<i64>) -> Result<Confirmation, Error> {
    let mut found = Vec::new();
    let mut reports = Vec::new();
    for g in &spec.generators {
        match g {
            Generator::Seiferter(d) => {
                let rep = classify_family(d, window.clone())?;
                found.extend(violations(&spec.claimed, &rep));
                reports.push(rep);
            }
            Generator::ProjectiveBase { .. } => {
                let lspace = decide(&SeifertForm::rp2())?.is_lspace;
                found.extend(window.clone().filter(|&n| spec.claimed.expects(n).is_some_and(|want| want != lspace)));
            }
        }
    }
    found.sort_unstable();
    found.dedup();
    Ok(Confirmation { violations: found, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::h1_order;
    use crate::twist::{surgered_space, surgery_slope};

    #[test]
    fn torus_guarantee_examples() {
        assert_eq!(torus_guarantee(3, 2, 5).unwrap(), Guarantee::AllN);
        assert_eq!(torus_guarantee(13, 2, 9).unwrap(), Guarantee::AllN);
        assert_eq!(torus_guarantee(5, 3, 2).unwrap(), Guarantee::NGe(-1));
        assert!(torus_guarantee(1, 3, 2).is_err());
    }

    #[test]
    fn torus_candidates_examples() {
        let c = torus_pq_candidates(3, 2, 5).unwrap();
        assert_eq!(c, vec![TorusCandidate { b: 3, r1: r(2, 3), r2: r(1, 2) }]);
        let c = torus_pq_candidates(3, 2, 1).unwrap();
        assert_eq!(c, vec![TorusCandidate { b: -1, r1: r(2, 3), r2: r(1, 2) }]);
        assert!(torus_pq_candidates(3, 2, 3).unwrap().is_empty());
        assert!(torus_pq_candidates(4, 2, 3).is_err());
    }

    #[test]
    fn twisted_torus_examples() {
        let f = twisted_torus_family(TwistedTorusKind::PplusQ { p: 5, q: 2 }).unwrap();
        assert_eq!(f.claimed, Guarantee::AllN);
        assert_eq!(f.seiferters().next().unwrap().l(), &BigInt::from(7));
        let f = twisted_torus_family(TwistedTorusKind::F3p1 { p: 1 }).unwrap();
        assert_eq!(f.seiferters().next().unwrap().l(), &BigInt::from(5));
        assert_eq!(f.claimed, torus_guarantee(4, 3, 5).unwrap());
        let f = twisted_torus_family(TwistedTorusKind::PminusQ { p: 5, q: 2 }).unwrap();
        assert_eq!(f.claimed, Guarantee::NGe(-1));
        assert_eq!(f.claimed, torus_guarantee(5, 2, 3).unwrap());
        assert!(twisted_torus_family(TwistedTorusKind::F3p1 { p: 0 }).is_err());
    }

    #[test]
    fn unknot_examples() {
        let f = unknot_seiferter_family(0, 3).unwrap();
        let d = f.seiferters().next().unwrap();
        assert_eq!(surgered_space(d, 1), normalize_finite(-2, &[r(2, 3), r(1, 3)]));
        assert_eq!(surgery_slope(d, 1), BigInt::from(9));
        assert!(!decide(&surgered_space(d, 0)).unwrap().is_lspace);
        let f = unknot_seiferter_family(-1, 3).unwrap();
        let d = f.seiferters().next().unwrap();
        assert_eq!(surgered_space(d, 1).degenerate_count(), 1);
        assert!(decide(&surgered_space(d, 1)).unwrap().is_lspace);
        assert!(unknot_seiferter_family(1, 3).is_err());
        assert!(unknot_seiferter_family(0, 4).is_err());
    }

    #[test]
    fn tunnel2_examples() {
        let a = tunnel2_family(Tunnel2::A);
        let d = a.seiferters().next().unwrap();
        assert_eq!(surgered_space(d, 0), normalize_finite(-1, &[r(4, 5), r(5, 7), r(1, 2)]));
        assert_eq!(surgery_slope(d, 0), BigInt::from(71));
        assert_eq!(surgery_slope(d, -1), BigInt::from(-125));
        assert!(decide(&surgered_space(d, -1)).unwrap().is_lspace);
        let b = tunnel2_family(Tunnel2::B);
        let d = b.seiferters().next().unwrap();
        assert_eq!(surgered_space(d, 0), normalize_finite(-1, &[r(5, 7), r(4, 5), r(1, 2)]));
        assert_eq!(surgery_slope(d, 0), BigInt::from(71));
    }

    #[test]
    fn sporadic_examples() {
        let f = berge_sporadic(Sporadic::A, 2).unwrap();
        let d = f.seiferters().next().unwrap();
        assert_eq!(f.claimed, Guarantee::AllN);
        assert_eq!(d.l(), &BigInt::from(9));
        assert_eq!(surgery_slope(d, 1), BigInt::from(107));
        let f = berge_sporadic(Sporadic::D, 1).unwrap();
        assert_eq!(f.claimed, Guarantee::AllN);
        assert_eq!(f.seiferters().next().unwrap().l(), &BigInt::from(7));
        let f = berge_sporadic(Sporadic::B, 1).unwrap();
        assert_eq!(surgery_slope(f.seiferters().next().unwrap(), 1), BigInt::from(37));
        assert!(berge_sporadic(Sporadic::A, 1).is_err());
    }

    #[test]
    fn mirrored_families_keep_homology() {
        for kind in [Sporadic::C, Sporadic::D] {
            let f = berge_sporadic(kind, 2).unwrap();
            let d = f.seiferters().next().unwrap();
            for n in -20..=20 {
                if n == 0 {
                    continue;
                }
                let h = h1_order(&surgered_space(d, n)).unwrap();
                assert!(h.matches_slope(&surgery_slope(d, n)), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn berge_examples() {
        let BergeOutcome::Family(f) = berge_vii_viii(2, 3, BergeType::VII).unwrap() else { panic!() };
        assert_eq!(f.claimed, Guarantee::NLe(2));
        let BergeOutcome::Family(f) = berge_vii_viii(-2, 5, BergeType::VIII).unwrap() else { panic!() };
        assert_eq!(f.claimed, Guarantee::AllN);
        assert_eq!(berge_vii_viii(1, 2, BergeType::VII).unwrap(), BergeOutcome::TorusKnotDegenerate);
        assert!(berge_vii_viii(2, 4, BergeType::VII).is_err());
    }

    #[test]
    fn satellite_examples() {
        assert_eq!(satellite_guarantee(2, 4, 1), Ok(true));
        assert!(matches!(satellite_guarantee(3, 8, 1), Err(Error::PreconditionFailed(_))));
        assert_eq!(satellite_guarantee(2, 12, 2), Ok(true));
    }

    #[test]
    fn distinctness_examples() {
        assert!(distinctness_bound(5, 3, 3));
        assert!(!distinctness_bound(5, 3, 4));
        assert!(distinctness_bound(2, 0, 2));
    }

    #[test]
    fn em_rp2_examples() {
        for (l, slope, i1, i2) in [(1, 8, 1, 2), (2, 40, 2, 5), (-1, 16, 1, 4)] {
            let f = em_rp2_family(l).unwrap();
            let Generator::ProjectiveBase { slope: s, indices } = &f.generators[0] else { panic!() };
            assert_eq!(s, &BigInt::from(slope));
            assert_eq!(indices, &(BigInt::from(i1), BigInt::from(i2)));
        }
        assert!(em_rp2_family(0).is_err());
    }

    #[test]
    fn catalog_builds_and_confirms() {
        for spec in catalog() {
            let c = confirm(&spec, -50..=50).unwrap();
            assert!(c.holds(), "{}: violations at {:?}", spec.name, c.violations);
        }
    }

    #[test]
    fn guarantee_reindexing() {
        assert_eq!(Guarantee::NGe(-1).mirrored(), Guarantee::NLe(1));
        assert_eq!(Guarantee::NGe(-1).shifted(2), Guarantee::NGe(-3));
        assert_eq!(Guarantee::AllNExcept(vec![0]).expects(0), Some(false));
        assert_eq!(Guarantee::NLe(2).expects(3), None);
    }
}
