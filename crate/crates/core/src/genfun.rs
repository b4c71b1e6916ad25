//! Generating functions of admissible paths, i.e. of tableaux, by weight
//! `x^c y^d alpha^e z^n`.
//!
//! [`Builder`] holds `M` and `zM` for one truncation order and exposes the
//! displayed sub-terms individually, so a failing division names the term.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyseries::{solve_m, MultiPoly, ZSeries};

/// Values substituted for `x`, `y`, `alpha`; `None` keeps the variable.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Point {
    pub x: Option<BigInt>,
    pub y: Option<BigInt>,
    pub alpha: Option<BigInt>,
}

impl Point {
    pub fn symbolic() -> Self {
        Self::default()
    }

    /// `x = y = 1`, `alpha` kept.
    pub fn xy_one() -> Self {
        Point { x: Some(BigInt::one()), y: Some(BigInt::one()), alpha: None }
    }

    pub fn all_one() -> Self {
        Point { x: Some(BigInt::one()), y: Some(BigInt::one()), alpha: Some(BigInt::one()) }
    }
}

pub struct Builder {
    order: usize,
    x: MultiPoly,
    y: MultiPoly,
    alpha: MultiPoly,
    m: ZSeries,
    zm: ZSeries,
}

impl Builder {
    pub fn new(order: usize) -> Self {
        Self::at(order, &Point::symbolic())
    }

    pub fn at(order: usize, point: &Point) -> Self {
        let var = |v: &Option<BigInt>, sym: MultiPoly| v.as_ref().map_or(sym, |k| MultiPoly::constant(k.clone()));
        let m = solve_m(order).substitute(point.x.as_ref(), point.y.as_ref(), point.alpha.as_ref());
        Builder {
            order,
            x: var(&point.x, MultiPoly::x()),
            y: var(&point.y, MultiPoly::y()),
            alpha: var(&point.alpha, MultiPoly::alpha()),
            zm: m.shift(1),
            m,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn m(&self) -> &ZSeries {
        &self.m
    }

    pub fn zm(&self) -> &ZSeries {
        &self.zm
    }

    fn one(&self) -> ZSeries {
        ZSeries::one(self.order)
    }

    fn konst(&self, p: &MultiPoly) -> ZSeries {
        ZSeries::constant(p.clone(), self.order)
    }

    pub fn alpha_pow(&self, k: usize) -> MultiPoly {
        (0..k).fold(MultiPoly::one(), |acc, _| &acc * &self.alpha)
    }

    /// Every displayed denominator is a unit symbolically; at a point where its
    /// constant term vanishes (`x = 0` or `y = 0`) the quotient would lose
    /// orders, so that is reported instead.
    fn div(&self, num: &ZSeries, den: &ZSeries, name: &str) -> Result<ZSeries> {
        if den.coeffs()[0].is_zero() {
            return Err(Error::NonExactDivision { index: 0, context: Some(name.to_string()) });
        }
        num.exact_divide(den).map_err(|e| e.in_term(name))
    }

    fn zm_pow(&self, k: usize) -> ZSeries {
        self.zm.pow(k as u32)
    }

    /// `z / (1 - x z)`
    pub fn z_over_1_minus_xz(&self) -> ZSeries {
        let den = &self.one() - &ZSeries::monomial(self.x.clone(), 1, self.order);
        den.inverse_unit().expect("unit").shift(1)
    }

    /// `z / (1 - y z)`
    pub fn z_over_1_minus_yz(&self) -> ZSeries {
        let den = &self.one() - &ZSeries::monomial(self.y.clone(), 1, self.order);
        den.inverse_unit().expect("unit").shift(1)
    }

    /// `alpha z / (1 - y z)`
    pub fn az_over_1_minus_yz(&self) -> ZSeries {
        self.z_over_1_minus_yz().scale(&self.alpha)
    }

    /// `1 + x zM`
    pub fn one_plus_xzm(&self) -> ZSeries {
        &self.one() + &self.zm.scale(&self.x)
    }

    /// `1 + y zM`
    pub fn one_plus_yzm(&self) -> ZSeries {
        &self.one() + &self.zm.scale(&self.y)
    }

    /// `x + alpha zM`
    pub fn x_plus_azm(&self) -> ZSeries {
        &self.konst(&self.x) + &self.zm.scale(&self.alpha)
    }

    /// `y + alpha zM`
    pub fn y_plus_azm(&self) -> ZSeries {
        &self.konst(&self.y) + &self.zm.scale(&self.alpha)
    }

    /// `alpha z^2 M^2`
    pub fn az2m2(&self) -> ZSeries {
        (&self.zm * &self.zm).scale(&self.alpha)
    }

    /// `1 - alpha z^2 M^2`
    pub fn one_minus_az2m2(&self) -> ZSeries {
        &self.one() - &self.az2m2()
    }

    /// `(1 - q^k) / (1 - q)`, expanded as `1 + q + ... + q^(k-1)`.
    pub fn geometric(&self, q: &ZSeries, k: usize) -> ZSeries {
        let mut acc = ZSeries::zero(self.order);
        let mut p = self.one();
        for _ in 0..k {
            acc = &acc + &p;
            p = &p * q;
        }
        acc
    }

    /// `(z/(1-xz))^t`
    pub fn straight_term1(&self, t: usize) -> ZSeries {
        self.z_over_1_minus_xz().pow(t as u32)
    }

    /// `alpha (zM)^(t+2) / ((1 + y zM)(1 + x zM))`
    pub fn straight_term2(&self, t: usize) -> Result<ZSeries> {
        let num = self.zm_pow(t + 2).scale(&self.alpha);
        self.div(&num, &(&self.one_plus_yzm() * &self.one_plus_xzm()), "straight term 2")
    }

    /// `alpha zM ((zM)^t - (z/(1-xz))^t) / ((y + alpha zM)(1 + y zM))`
    pub fn straight_term3(&self, t: usize) -> Result<ZSeries> {
        let diff = &self.zm_pow(t) - &self.straight_term1(t);
        let num = (&self.zm * &diff).scale(&self.alpha);
        self.div(&num, &(&self.y_plus_azm() * &self.one_plus_yzm()), "straight term 3")
    }

    pub fn straight_terms(&self, t: usize) -> Result<[ZSeries; 3]> {
        Ok([self.straight_term1(t), self.straight_term2(t)?, self.straight_term3(t)?])
    }

    pub fn gf_straight(&self, t: usize) -> Result<ZSeries> {
        let [a, b, c] = self.straight_terms(t)?;
        Ok(&(&a + &b) + &c)
    }

    fn gap(f: usize, t: usize) -> Result<usize> {
        f.checked_sub(t)
            .filter(|&g| g > 0)
            .ok_or_else(|| Error::Domain(format!("expected t < f, got t = {t}, f = {f}")))
    }

    fn excess(f: usize, t: usize) -> Result<usize> {
        t.checked_sub(f).ok_or_else(|| Error::Domain(format!("expected t >= f, got t = {t}, f = {f}")))
    }

    /// `t < f`, first term: `(alpha z / (1 - y z))^(f-t)`
    pub fn skew_t1(&self, f: usize, t: usize) -> Result<ZSeries> {
        Ok(self.az_over_1_minus_yz().pow(Self::gap(f, t)? as u32))
    }

    /// `alpha^(f+1) (zM)^(t+1) ((zM)^f - (z/(1-yz))^f) / ((1 + x zM)(x + alpha zM))`; any `t`.
    pub fn skew_t2(&self, f: usize, t: usize) -> Result<ZSeries> {
        let zy = self.z_over_1_minus_yz();
        let num = (&self.zm_pow(t + 1) * &(&self.zm_pow(f) - &zy.pow(f as u32))).scale(&self.alpha_pow(f + 1));
        self.div(&num, &(&self.one_plus_xzm() * &self.x_plus_azm()), "skew T2")
    }

    /// `alpha^(g+1) zM ((zM)^g - (z/(1-yz))^g) / (x + alpha zM) * (1 - (alpha z^2 M^2)^t) / (1 - alpha z^2 M^2)`, `g = f - t`
    pub fn skew_t3(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::gap(f, t)?;
        let zy = self.z_over_1_minus_yz();
        let num = (&self.zm * &(&self.zm_pow(g) - &zy.pow(g as u32))).scale(&self.alpha_pow(g + 1));
        Ok(&self.div(&num, &self.x_plus_azm(), "skew T3")? * &self.geometric(&self.az2m2(), t))
    }

    /// `(alpha z/(1-yz))^(f-t) (1 - (alpha z^2 M/(1-yz))^t) alpha (zM)^2 / ((1 + x zM)(1 - alpha z^2 M^2))`
    pub fn skew_t4(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::gap(f, t)?;
        let q = (&self.z_over_1_minus_yz() * &self.zm).scale(&self.alpha);
        let num = &(&self.az_over_1_minus_yz().pow(g as u32) * &(&self.one() - &q.pow(t as u32))) * &self.az2m2();
        self.div(&num, &(&self.one_plus_xzm() * &self.one_minus_az2m2()), "skew T4")
    }

    /// `alpha^(f+1) (z/(1-yz))^(f-t) ((zM)^t - (z/(1-yz))^t) (zM)^(t+1) / ((x + alpha zM)(1 - alpha z^2 M^2))`;
    /// enters the generating function with a minus sign.
    pub fn skew_t5(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::gap(f, t)?;
        let zy = self.z_over_1_minus_yz();
        let num = (&(&zy.pow(g as u32) * &(&self.zm_pow(t) - &zy.pow(t as u32))) * &self.zm_pow(t + 1))
            .scale(&self.alpha_pow(f + 1));
        self.div(&num, &(&self.x_plus_azm() * &self.one_minus_az2m2()), "skew T5")
    }

    /// `alpha^(f+1) (zM)^(f+t+2) / ((1 + y zM)(1 + x zM))`; any `t`.
    pub fn skew_t6(&self, f: usize, t: usize) -> Result<ZSeries> {
        let num = self.zm_pow(f + t + 2).scale(&self.alpha_pow(f + 1));
        self.div(&num, &(&self.one_plus_yzm() * &self.one_plus_xzm()), "skew T6")
    }

    /// `alpha^(g+1) (zM)^(g+2) / (1 + y zM) * (1 - (alpha z^2 M^2)^t) / (1 - alpha z^2 M^2)`, `g = f - t`
    pub fn skew_t7(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::gap(f, t)?;
        let num = self.zm_pow(g + 2).scale(&self.alpha_pow(g + 1));
        Ok(&self.div(&num, &self.one_plus_yzm(), "skew T7")? * &self.geometric(&self.az2m2(), t))
    }

    /// The seven terms for `t < f`; the generating function is
    /// `T1 + T2 + T3 + T4 - T5 + T6 + T7`.
    pub fn skew_terms_below(&self, f: usize, t: usize) -> Result<[ZSeries; 7]> {
        Ok([
            self.skew_t1(f, t)?,
            self.skew_t2(f, t)?,
            self.skew_t3(f, t)?,
            self.skew_t4(f, t)?,
            self.skew_t5(f, t)?,
            self.skew_t6(f, t)?,
            self.skew_t7(f, t)?,
        ])
    }

    /// `t >= f`, first term: `(z/(1-xz))^(t-f)`
    pub fn skew_above_t1(&self, f: usize, t: usize) -> Result<ZSeries> {
        Ok(self.z_over_1_minus_xz().pow(Self::excess(f, t)? as u32))
    }

    /// `(alpha (zM)^(t-f+2) - alpha^(f+1) (zM)^(f+t+2)) / ((1 + x zM)(1 - alpha z^2 M^2))`
    pub fn skew_above_t2(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::excess(f, t)?;
        let num = &self.zm_pow(g + 2).scale(&self.alpha) - &self.zm_pow(f + t + 2).scale(&self.alpha_pow(f + 1));
        self.div(&num, &(&self.one_plus_xzm() * &self.one_minus_az2m2()), "skew term 2")
    }

    /// `alpha zM ((zM)^(t-f) - (z/(1-xz))^(t-f)) / ((y + alpha zM)(1 + y zM))`
    pub fn skew_above_t4(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::excess(f, t)?;
        let num = (&self.zm * &(&self.zm_pow(g) - &self.z_over_1_minus_xz().pow(g as u32))).scale(&self.alpha);
        self.div(&num, &(&self.y_plus_azm() * &self.one_plus_yzm()), "skew term 4")
    }

    /// `alpha (zM)^(t-f+2) / (1 + y zM) * (1 - (alpha z^2 M^2)^f) / (1 - alpha z^2 M^2)`
    pub fn skew_above_t5(&self, f: usize, t: usize) -> Result<ZSeries> {
        let g = Self::excess(f, t)?;
        let num = self.zm_pow(g + 2).scale(&self.alpha);
        Ok(&self.div(&num, &self.one_plus_yzm(), "skew term 5")? * &self.geometric(&self.az2m2(), f))
    }

    /// The five terms for `t >= f`, all added; the third is [`skew_t6`](Self::skew_t6).
    pub fn skew_terms_above(&self, f: usize, t: usize) -> Result<[ZSeries; 5]> {
        Ok([
            self.skew_above_t1(f, t)?,
            self.skew_above_t2(f, t)?,
            self.skew_t6(f, t)?,
            self.skew_above_t4(f, t)?,
            self.skew_above_t5(f, t)?,
        ])
    }

    pub fn gf_skew(&self, f: usize, t: usize) -> Result<ZSeries> {
        if f == 0 {
            return self.gf_straight(t);
        }
        if t < f {
            let [t1, t2, t3, t4, t5, t6, t7] = self.skew_terms_below(f, t)?;
            let sum = &(&(&t1 + &t2) + &t3) + &t4;
            Ok(&(&(&sum - &t5) + &t6) + &t7)
        } else {
            let terms = self.skew_terms_above(f, t)?;
            Ok(terms.iter().skip(1).fold(terms[0].clone(), |acc, s| &acc + s))
        }
    }
}

/// Weight generating function of admissible paths from height 0 to height `t`.
pub fn gf_straight(t: usize, order: usize) -> Result<ZSeries> {
    Builder::new(order).gf_straight(t)
}

/// Weight generating function of admissible paths from height `f` to height `t`.
pub fn gf_skew(f: usize, t: usize, order: usize) -> Result<ZSeries> {
    if f == 0 {
        return Err(Error::Domain("skew family needs f >= 1".into()));
    }
    Builder::new(order).gf_skew(f, t)
}

/// `[z^n x^c y^d alpha^e] s`.
pub fn refined_coefficient(s: &ZSeries, n: usize, c: usize, d: usize, e: usize) -> Result<BigInt> {
    Ok(s.coeff(n)?.coeff((c as u32, d as u32, e as u32)))
}

/// Expected number of down steps (second-row length) for each `n <= order`,
/// from `d/d alpha` of the `x = y = 1` generating function at `alpha = 1`.
/// `None` where there is nothing to average (including `n = 0`).
pub fn expected_downsteps_series(t: usize, order: usize) -> Result<Vec<Option<BigRational>>> {
    let s = Builder::at(order, &Point::xy_one()).gf_straight(t)?;
    let one = BigInt::one();
    let total = s.substitute(None, None, Some(&one));
    let weighted = s.d_alpha().substitute(None, None, Some(&one));
    Ok((0..=order)
        .map(|n| {
            let den = total.coeffs()[n].coeff((0, 0, 0));
            if n == 0 || den.is_zero() {
                None
            } else {
                Some(BigRational::new(weighted.coeffs()[n].coeff((0, 0, 0)), den))
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_low_order() {
        let s1 = gf_straight(1, 3).unwrap();
        assert_eq!(s1.coeff(1).unwrap(), &MultiPoly::one());
        let s0 = gf_straight(0, 3).unwrap();
        assert_eq!(s0.coeff(0).unwrap(), &MultiPoly::one());
        assert!(s0.coeff(1).unwrap().is_zero());
        assert_eq!(s0.coeff(2).unwrap(), &MultiPoly::alpha());
        assert_eq!(refined_coefficient(&s0, 2, 0, 0, 1).unwrap(), BigInt::from(1));
        assert_eq!(refined_coefficient(&s0, 2, 1, 0, 0).unwrap(), BigInt::zero());
        assert!(matches!(refined_coefficient(&s0, 4, 0, 0, 0), Err(Error::BeyondOrder { .. })));
    }

    #[test]
    fn skew_low_order() {
        let s = gf_skew(1, 1, 3).unwrap();
        assert_eq!(s.coeff(3).unwrap().sum_of_coefficients(), BigInt::from(6));
        assert_eq!(s.coeff(2).unwrap().sum_of_coefficients(), BigInt::from(2));
        assert_eq!(refined_coefficient(&s, 3, 1, 0, 1).unwrap(), BigInt::from(3));

        let s = gf_skew(2, 0, 3).unwrap();
        assert!(s.coeff(1).unwrap().is_zero());
        assert_eq!(s.coeff(2).unwrap(), &MultiPoly::alpha_pow(2));
    }

    #[test]
    fn expectations() {
        let ex = expected_downsteps_series(0, 4).unwrap();
        assert_eq!(ex[0], None);
        assert_eq!(ex[1], None);
        assert_eq!(ex[2], Some(BigRational::one()));
        assert_eq!(ex[4], Some(BigRational::new(7.into(), 5.into())));
        let ex = expected_downsteps_series(5, 5).unwrap();
        assert_eq!(ex[5], Some(BigRational::zero()));
    }
}
