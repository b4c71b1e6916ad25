//! Coefficient identities: a series expression built from the generating
//! function terms, paired with a closed form for its `[z^n]` coefficient.
//!
//! Symbolic entries compare full polynomials in `x`, `y`, `alpha`; the
//! specialized ones compare integers at `x = y = alpha = 1`, or the
//! `alpha`-derivative at `x = y = alpha = 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::formulas::{binom, sign, term};
use crate::genfun::{Builder, Point};
use crate::polyseries::{Exponents, MultiPoly, ZSeries};

/// Where the left-hand side is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Symbolic,
    /// `d/d alpha` at `x = y = alpha = 1`.
    AlphaDerivative,
    /// `x = y = alpha = 1`.
    AllOne,
}

/// Which `(f, t)` pairs an entry is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Range {
    /// `f = 0`, `t` free.
    Straight,
    /// `t = 0`, `f >= 1` free.
    FOnly,
    /// `f >= 1`, `t` free.
    Any,
    /// `t < f`.
    Below,
    /// `t >= f >= 1`.
    Above,
}

pub(crate) type Lhs = fn(&Builder, usize, usize) -> Result<ZSeries>;

#[derive(Debug, Clone, PartialEq)]
pub enum Rhs {
    Poly(BTreeMap<Exponents, BigRational>),
    Int(BigInt),
}

pub struct Lemma {
    /// Registry name, e.g. `"lemma13"`.
    pub id: &'static str,
    pub mode: Mode,
    pub range: Range,
    pub(crate) lhs: Lhs,
    pub(crate) rhs: fn(i64, i64, i64) -> Rhs,
}

impl Lemma {
    pub fn params(&self, t_max: usize, f_max: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for f in 0..=f_max {
            for t in 0..=t_max {
                let keep = match self.range {
                    Range::Straight => f == 0,
                    Range::FOnly => f >= 1 && t == 0,
                    Range::Any => f >= 1,
                    Range::Below => f >= 1 && t < f,
                    Range::Above => f >= 1 && t >= f,
                };
                if keep {
                    out.push((f, t));
                }
            }
        }
        out
    }

    pub fn rhs(&self, n: usize, f: usize, t: usize) -> Rhs {
        (self.rhs)(n as i64, f as i64, t as i64)
    }
}

/// Series builders for the three evaluation modes, at one order.
pub struct Builders {
    pub symbolic: Builder,
    pub xy_one: Builder,
    pub all_one: Builder,
}

impl Builders {
    pub fn new(order: usize) -> Self {
        Builders {
            symbolic: Builder::at(order, &Point::symbolic()),
            xy_one: Builder::at(order, &Point::xy_one()),
            all_one: Builder::at(order, &Point::all_one()),
        }
    }

    pub fn order(&self) -> usize {
        self.symbolic.order()
    }

    /// Left-hand series of `lemma` at `(f, t)`, evaluated in its mode.
    pub fn lhs(&self, lemma: &Lemma, f: usize, t: usize) -> Result<ZSeries> {
        let one = BigInt::one();
        match lemma.mode {
            Mode::Symbolic => (lemma.lhs)(&self.symbolic, f, t),
            Mode::AllOne => (lemma.lhs)(&self.all_one, f, t),
            Mode::AlphaDerivative => Ok((lemma.lhs)(&self.xy_one, f, t)?.d_alpha().substitute(None, None, Some(&one))),
        }
    }
}

/// The `[z^n]` coefficient of a series in the form the right-hand side uses.
pub fn lhs_coefficient(series: &ZSeries, mode: Mode, n: usize) -> Result<Rhs> {
    let p = series.coeff(n)?;
    Ok(match mode {
        Mode::Symbolic => Rhs::Poly(p.terms().map(|(e, c)| (*e, BigRational::from_integer(c.clone()))).collect()),
        _ => Rhs::Int(p.coeff((0, 0, 0))),
    })
}

impl Rhs {
    /// Integral polynomial view, when every coefficient is an integer.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        match self {
            Rhs::Poly(map) => map
                .iter()
                .map(|(e, c)| c.is_integer().then(|| (*e, c.to_integer())))
                .collect::<Option<MultiPoly>>(),
            Rhs::Int(v) => Some(MultiPoly::constant(v.clone())),
        }
    }
}

impl std::fmt::Display for Rhs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self, self.as_poly()) {
            (Rhs::Int(v), _) => write!(f, "{v}"),
            (_, Some(p)) => write!(f, "{p}"),
            (Rhs::Poly(map), None) => {
                let parts: Vec<String> =
                    map.iter().rev().map(|((a, b, c), v)| format!("({v})*x^{a}*y^{b}*alpha^{c}")).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

// ---- right-hand sides ----

fn ok(ms: &[i64]) -> bool {
    ms.iter().all(|&m| m >= 0)
}

/// Sum of `g(c, d, e) x^c y^d alpha^e` over `c + d + 2e + shift = n`.
fn poly_from(n: i64, shift: i64, g: impl Fn(i64, i64, i64) -> BigRational) -> Rhs {
    let mut out = BTreeMap::new();
    for e in 0..=(n + 8) {
        for c in 0..=(n + 8) {
            let d = n - shift - c - 2 * e;
            if d < 0 {
                continue;
            }
            let v = g(c, d, e);
            if !v.is_zero() {
                out.insert((c as u32, d as u32, e as u32), v);
            }
        }
    }
    Rhs::Poly(out)
}

fn b_sum(n: i64, c: i64, d: i64, e: i64, f: i64, offset: i64) -> BigRational {
    let mut s = BigRational::zero();
    for b in (n - c - e + f + 1)..=(n - e + f + 1) {
        s += term(&[n - 1], &[d, b - 1 - d, e - f - 1, n - b - e + f + 1], sign(n - b - c - e + f + offset) * (n - b), || b);
    }
    s
}

fn single(exps: (i64, i64, i64), v: BigInt) -> Rhs {
    let mut out = BTreeMap::new();
    if !v.is_zero() {
        out.insert((exps.0 as u32, exps.1 as u32, exps.2 as u32), BigRational::from_integer(v));
    }
    Rhs::Poly(out)
}

fn int(v: BigInt) -> Rhs {
    Rhs::Int(v)
}

/// `sum_{k=lo}^{n+1} g(k)`
fn k_sum(lo: i64, n: i64, g: impl Fn(i64) -> BigInt) -> BigInt {
    (lo..=n + 1).map(g).sum()
}

fn r12(n: i64, _f: i64, t: i64) -> Rhs {
    single((n - t, 0, 0), binom(n - 1, t - 1))
}

fn r13(n: i64, _f: i64, t: i64) -> Rhs {
    poly_from(n, t, |c, d, e| term(&[n - 1], &[c, d, e - 1, n - c - d - e - 1], 1, || n - c - e) - b_sum(n, c, d, e, 0, 1))
}

fn r14(n: i64, _f: i64, t: i64) -> Rhs {
    poly_from(n, t, |c, d, e| term(&[n - 1], &[n - c - d - e - 1, c, d, e - 1], t, || (d + e) * (n - c - e)))
}

fn r15(n: i64, _f: i64, t: i64) -> Rhs {
    int(binom(2 * n - 3, n - t - 2) - binom(2 * n - 3, n - t - 3))
}

fn r16(n: i64, _f: i64, t: i64) -> Rhs {
    int(binom(2 * n - 3, n - t - 1) - binom(2 * n - 3, n - t - 2) - binom(n - 2, t - 1))
}

fn r17(n: i64, _f: i64, t: i64) -> Rhs {
    let a = 2 * n - 5;
    int(binom(a, n - t - 2) + binom(a, n - t - 3) + (n - 3) * binom(a, n - t - 4) - (n + 1) * binom(a, n - t - 5))
}

fn r18(n: i64, _f: i64, t: i64) -> Rhs {
    let a = 2 * n - 5;
    int(binom(a, n - t - 1) + (n - 3) * binom(a, n - t - 3) - n * binom(a, n - t - 4) - binom(n - 3, n - t - 1))
}

fn r19(n: i64, f: i64, _t: i64) -> Rhs {
    single((0, n - f, f), binom(n - 1, f - 1))
}

fn r20(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        let mut r = term(&[n - 1], &[c, d, e - f - 1, e + t - 1], f + t, || (c + e - f) * (n - d - e + f));
        if ok(&[c, d, e - f - 1, n - d - 1, e - f + t - 1]) {
            r -= term(&[n - 1, n - d - f - 1], &[c, d, n - d - 1, e - f - 1, e - f + t - 1], t, || {
                (c + e - f) * (n - d - e)
            });
        }
        r
    })
}

fn r20_printed(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        term(&[n - 1], &[n - c - d - e + f - 1, c, d, e - f - 1], f, || (c + e - f) * (n - d - e + f))
    })
}

fn r21(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        let mut r = term(&[n - 1], &[c, d, e - f + t - 1, e - 1], 1, || c + e - f + t);
        if ok(&[c, d, n - d - 1, e - f + t - 1]) {
            r -= term(&[n - 1, n - d - f + t - 1], &[c, d, n - d - 1, e - f + t - 1, e - f + t - 1], 1, || {
                c + e - f + t
            });
        }
        r -= term(&[n - 1], &[c, d, e - f - 1, e + t - 1], 1, || c + e - f);
        if ok(&[c, d, n - d - 1, e - f - 1, e - f + 2 * t - 1]) {
            r += term(&[n - 1, n - d - f + t - 1], &[c, d, n - d - 1, e - f - 1, e - f + 2 * t - 1], 1, || c + e - f);
        }
        r
    })
}

fn r22(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        let mut r = BigRational::zero();
        if ok(&[c, d, n - d - 1, e - f + t - 1]) {
            r += term(&[n - 1, n - d - f + t - 1], &[c, d, n - d - 1, e - f + t - 1, e - f + t - 1], 1, || n - d - e);
        }
        if ok(&[c, d, n - d - 1, e - f - 1, e - f + t - 1]) {
            r -= term(&[n - 1, n - d - f - 1], &[c, d, n - d - 1, e - f - 1, e - f + t - 1], 1, || n - d - e);
        }
        r
    })
}

fn r23(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        let mut r = BigRational::zero();
        if ok(&[c, d, n - d - 1, e - f + t - 1, e - f - 1]) {
            r += term(&[n - 1, n - d - f - 1], &[c, d, n - d - 1, e - f + t - 1, e - f - 1], 1, || c + e - f);
        }
        if ok(&[c, d, n - d - 1, e - f + 2 * t - 1, e - f - 1]) {
            r -= term(&[n - 1, n - d - f + t - 1], &[c, d, n - d - 1, e - f + 2 * t - 1, e - f - 1], 1, || c + e - f);
        }
        r
    })
}

fn r24(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        term(&[n - 1], &[c, d, e - f - 1, n - c - d - e + f - 1], 1, || n - c - e + f) - b_sum(n, c, d, e, f, 1)
    })
}

fn r25(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        term(&[n - 1], &[c, d, e - f + t - 1, e - 1], 1, || n - c - e + f - t)
            - term(&[n - 1], &[c, d, e - f - 1, e + t - 1], 1, || n - c - e + f)
    })
}

fn r26(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        term(&[n - 1], &[c, d, e - 1, e - f + t - 1], 1, || n - d - e)
            - term(&[n - 1], &[c, d, e - f - 1, e + t - 1], 1, || n - d - e + f)
    })
}

fn r27(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| term(&[n - 1], &[n - c - d - e - 1, c, d, e - 1], t - f, || (d + e) * (n - c - e)))
}

fn r28(n: i64, f: i64, t: i64) -> Rhs {
    poly_from(n, t - f, |c, d, e| {
        term(&[n - 1], &[c, d, e - 1, e - f + t - 1], 1, || d + e - f + t)
            - term(&[n - 1], &[c, d, e - f - 1, e + t - 1], 1, || d + e + t)
    })
}

fn r29(n: i64, f: i64, t: i64) -> Rhs {
    int(k_sum(f + 1, n, |k| {
        let a = 2 * n - 3 + k - f;
        sign(k - f + 1) * binom(k - 1, f - 1) * (binom(a, n - k - t - 1) - binom(a, n - k - t - 2))
    }))
}

fn r30_with(n: i64, f: i64, t: i64, last: i64) -> Rhs {
    int(k_sum(f - t + 1, n, |k| {
        let a = 2 * n + k - f + t - 3;
        sign(k - f + t + 1) * binom(k - 1, f - t - 1) * (binom(a, n - k - 1) - binom(a, n - k - last - 1))
    }))
}

fn r30(n: i64, f: i64, t: i64) -> Rhs {
    r30_with(n, f, t, 2 * t)
}

fn r30_printed(n: i64, f: i64, t: i64) -> Rhs {
    r30_with(n, f, t, t)
}

fn r31(n: i64, f: i64, t: i64) -> Rhs {
    let g = f - t;
    let first = k_sum(g, n, |k| sign(k - g) * binom(k - 1, g - 1) * binom(2 * n + k - g - 3, n - k - 2));
    let second = k_sum(f, n, |k| sign(k - f) * binom(k - 1, f - 1) * binom(2 * n + k - f - 3, n - k - t - 2));
    int(first - second)
}

fn r32(n: i64, f: i64, t: i64) -> Rhs {
    let g = f - t;
    let first = k_sum(f, n, |k| sign(k - f) * binom(k - 1, f - 1) * binom(2 * n + k - f - 3, n - k - t - 1));
    let second = k_sum(g, n, |k| sign(k - g) * binom(k - 1, g - 1) * binom(2 * n + k - g - 3, n - k - 2 * t - 1));
    int(first - second)
}

fn r33(n: i64, f: i64, t: i64) -> Rhs {
    int(binom(2 * n - 3, n - f - t - 2) - binom(2 * n - 3, n - f - t - 3))
}

fn r34(n: i64, f: i64, t: i64) -> Rhs {
    int(binom(2 * n - 3, n - f + t - 2) - binom(2 * n - 3, n - f - t - 2))
}

fn r35(n: i64, f: i64, t: i64) -> Rhs {
    int(binom(2 * n - 3, n + f - t - 2) - binom(2 * n - 3, n - f - t - 2))
}

fn r36(n: i64, f: i64, t: i64) -> Rhs {
    int(k_sum(t - f + 1, n, |k| {
        let a = 2 * n + k + f - t - 3;
        sign(k - t - f - 1) * binom(k - 1, t - f - 1) * (binom(a, n - k - 1) - binom(a, n - k - 2))
    }))
}

// ---- left-hand sides ----

fn l_straight1(b: &Builder, _f: usize, t: usize) -> Result<ZSeries> {
    Ok(b.straight_term1(t))
}

fn l_straight2(b: &Builder, _f: usize, t: usize) -> Result<ZSeries> {
    b.straight_term2(t)
}

fn l_straight3(b: &Builder, _f: usize, t: usize) -> Result<ZSeries> {
    b.straight_term3(t)
}

fn l_azy_pow(b: &Builder, f: usize, _t: usize) -> Result<ZSeries> {
    Ok(b.az_over_1_minus_yz().pow(f as u32))
}

fn l_neg_t5(b: &Builder, f: usize, t: usize) -> Result<ZSeries> {
    Ok(-&b.skew_t5(f, t)?)
}

macro_rules! lemma {
    ($id:literal, $mode:ident, $range:ident, $lhs:expr, $rhs:expr) => {
        Lemma { id: $id, mode: Mode::$mode, range: Range::$range, lhs: $lhs, rhs: $rhs }
    };
}

/// The twenty-five registry entries, `lemma12` to `lemma36`.
pub fn registry() -> Vec<Lemma> {
    vec![
        lemma!("lemma12", Symbolic, Straight, l_straight1, r12),
        lemma!("lemma13", Symbolic, Straight, l_straight2, r13),
        lemma!("lemma14", Symbolic, Straight, l_straight3, r14),
        lemma!("lemma15", AllOne, Straight, l_straight2, r15),
        lemma!("lemma16", AllOne, Straight, l_straight3, r16),
        lemma!("lemma17", AlphaDerivative, Straight, l_straight2, r17),
        lemma!("lemma18", AlphaDerivative, Straight, l_straight3, r18),
        lemma!("lemma19", Symbolic, FOnly, l_azy_pow, r19),
        lemma!("lemma20", Symbolic, Any, Builder::skew_t2, r20),
        lemma!("lemma21", Symbolic, Below, Builder::skew_t3, r21),
        lemma!("lemma22", Symbolic, Below, Builder::skew_t4, r22),
        lemma!("lemma23", Symbolic, Below, l_neg_t5, r23),
        lemma!("lemma24", Symbolic, Any, Builder::skew_t6, r24),
        lemma!("lemma25", Symbolic, Below, Builder::skew_t7, r25),
        lemma!("lemma26", Symbolic, Above, Builder::skew_above_t2, r26),
        lemma!("lemma27", Symbolic, Above, Builder::skew_above_t4, r27),
        lemma!("lemma28", Symbolic, Above, Builder::skew_above_t5, r28),
        lemma!("lemma29", AllOne, Any, Builder::skew_t2, r29),
        lemma!("lemma30", AllOne, Below, Builder::skew_t3, r30),
        lemma!("lemma31", AllOne, Below, Builder::skew_t4, r31),
        lemma!("lemma32", AllOne, Below, l_neg_t5, r32),
        lemma!("lemma33", AllOne, Any, Builder::skew_t6, r33),
        lemma!("lemma34", AllOne, Below, Builder::skew_t7, r34),
        lemma!("lemma35", AllOne, Above, Builder::skew_above_t2, r35),
        lemma!("lemma36", AllOne, Above, Builder::skew_above_t4, r36),
    ]
}

/// Printed right-hand sides that disagree with their series for `t >= 1`.
pub fn printed_variants() -> Vec<Lemma> {
    vec![
        lemma!("lemma20-printed", Symbolic, Any, Builder::skew_t2, r20_printed),
        lemma!("lemma30-printed", AllOne, Below, Builder::skew_t3, r30_printed),
    ]
}

pub fn lookup(id: &str) -> Option<Lemma> {
    let key = id.trim_start_matches("lemma");
    registry()
        .into_iter()
        .chain(printed_variants())
        .find(|l| l.id == id || l.id.trim_start_matches("lemma") == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let reg = registry();
        assert_eq!(reg.len(), 25);
        for (i, l) in reg.iter().enumerate() {
            assert_eq!(l.id, format!("lemma{}", 12 + i));
        }
        assert!(lookup("13").is_some());
        assert!(lookup("lemma30-printed").is_some());
        assert!(lookup("lemma99").is_none());
    }

    #[test]
    fn a_few_entries_hold() {
        let builders = Builders::new(7);
        for id in ["lemma13", "lemma15", "lemma22", "lemma33"] {
            let lemma = lookup(id).unwrap();
            for (f, t) in lemma.params(2, 2) {
                let s = builders.lhs(&lemma, f, t).unwrap();
                for n in 1..=7 {
                    assert_eq!(lhs_coefficient(&s, lemma.mode, n).unwrap(), lemma.rhs(n, f, t), "{id} n={n} f={f} t={t}");
                }
            }
        }
    }

    #[test]
    fn printed_lemma20_fails_for_positive_t() {
        let lemma = lookup("lemma20-printed").unwrap();
        let s = Builders::new(5).lhs(&lemma, 1, 1).unwrap();
        assert_ne!(lhs_coefficient(&s, lemma.mode, 5).unwrap(), lemma.rhs(5, 1, 1));
    }
}
