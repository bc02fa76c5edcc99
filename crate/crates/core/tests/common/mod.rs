//! Independent oracles shared by the integration tests. Everything here
//! works on plain machine integers so it shares no code with the library.

#![allow(dead_code)]

use lspace_core::{normalize_finite, Rational, SeifertForm};
use rand::Rng;

/// A fraction `num/den` with `den > 0`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Frac {
        assert!(den != 0);
        let g = gcd(num, den).max(1) * den.signum();
        Frac { num: num / g, den: den / g }
    }

    pub fn complement(self) -> Frac {
        Frac::new(self.den - self.num, self.den)
    }

    pub fn to_rational(self) -> Rational {
        Rational::frac(self.num, self.den)
    }

    /// `self < p/q` for `q > 0`.
    pub fn lt_ratio(self, p: i64, q: i64) -> bool {
        (self.num as i128) * (q as i128) < (p as i128) * (self.den as i128)
    }
}

/// Uniform fraction strictly inside `(0, 1)` with denominator at most `max_den`.
pub fn random_unit_frac(rng: &mut impl Rng, max_den: i64) -> Frac {
    let den = rng.gen_range(2..=max_den);
    Frac::new(rng.gen_range(1..den), den)
}

pub fn random_triple(rng: &mut impl Rng, max_den: i64) -> [Frac; 3] {
    [random_unit_frac(rng, max_den), random_unit_frac(rng, max_den), random_unit_frac(rng, max_den)]
}

pub fn form(b: i64, slopes: &[Frac]) -> SeifertForm {
    let rs: Vec<Rational> = slopes.iter().map(|f| f.to_rational()).collect();
    normalize_finite(b, &rs)
}

fn sorted(mut t: [Frac; 3]) -> [Frac; 3] {
    t.sort_by(|x, y| ((x.num as i128) * (y.den as i128)).cmp(&((y.num as i128) * (x.den as i128))));
    t
}

/// Pairs `(k, a)` with `1 <= a < k <= kmax` and `gcd(a, k) = 1`, each with
/// the sorted bound triple `(1/k, a/k, (k-a)/k)` as numerators over `k`.
pub struct WitnessTable {
    rows: Vec<(i64, i64, [i64; 3])>,
}

impl WitnessTable {
    pub fn new(kmax: i64) -> WitnessTable {
        let mut rows = Vec::new();
        for k in 2..=kmax {
            for a in 1..k {
                if gcd(a, k) == 1 {
                    let mut bound = [1, a, k - a];
                    bound.sort_unstable();
                    rows.push((k, a, bound));
                }
            }
        }
        WitnessTable { rows }
    }

    /// First `(k, a)` whose bound strictly dominates the sorted triple.
    pub fn find(&self, t: [Frac; 3]) -> Option<(i64, i64)> {
        let s = sorted(t);
        self.rows.iter().find(|(k, _, bound)| (0..3).all(|i| s[i].lt_ratio(bound[i], *k))).map(|&(k, a, _)| (k, a))
    }

    /// L-space verdict for `S2(b; t)` with every slope in `(0, 1)`.
    pub fn is_lspace(&self, b: i64, t: [Frac; 3]) -> bool {
        let sum =
            t.iter().fold(Frac::new(0, 1), |acc, f| Frac::new(acc.num * f.den + f.num * acc.den, acc.den * f.den));
        if sum.num == -b * sum.den {
            return false;
        }
        match b {
            -1 => self.find(t).is_none(),
            -2 => self.find(t.map(Frac::complement)).is_none(),
            _ => true,
        }
    }
}

/// `|det|` of the presentation matrix of `H1(S2(b; p1/q1, ..., pr/qr))`:
/// rows `q_i c_i + p_i h` and `c_1 + ... + c_r - b h`. `None` when the
/// determinant vanishes, i.e. the group is infinite.
pub fn h1_by_presentation(b: i64, slopes: &[Frac]) -> Option<u128> {
    let n = slopes.len() + 1;
    let mut m = vec![vec![0i128; n]; n];
    for (i, f) in slopes.iter().enumerate() {
        m[i][i] = f.den as i128;
        m[i][n - 1] = f.num as i128;
        m[n - 1][i] = 1;
    }
    m[n - 1][n - 1] = -(b as i128);
    let det = bareiss(m);
    (det != 0).then(|| det.unsigned_abs())
}

fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
