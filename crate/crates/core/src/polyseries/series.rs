use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Power series in `z` truncated after `z^order`, with polynomial coefficients.
///
/// Binary operations on series of different orders truncate to the smaller one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZSeries {
    coeffs: Vec<MultiPoly>,
}

impl ZSeries {
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the z^0 coefficient");
        ZSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        ZSeries { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn constant(p: MultiPoly, order: usize) -> Self {
        Self::monomial(p, 0, order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    /// `p * z^k`, truncated.
    pub fn monomial(p: MultiPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = p;
        }
        s
    }

    pub fn z(order: usize) -> Self {
        Self::monomial(MultiPoly::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&MultiPoly> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder { n, order: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        ZSeries { coeffs: self.coeffs[..=keep].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Lowest `k` with a nonzero `z^k` coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|p| !p.is_zero())
    }

    /// Multiply every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &MultiPoly) -> Self {
        ZSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in k..=order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `1 / self` for a series with constant term `1`.
    pub fn inverse_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(format!("unit inverse needs constant term 1, got {}", self.coeffs[0])));
        }
        self.exact_divide_into(&Self::one(self.order()))
    }

    fn exact_divide_into(&self, numerator: &ZSeries) -> Result<Self> {
        numerator.exact_divide(self)
    }

    /// `self / divisor` with every coefficient obtained by exact polynomial
    /// division by the lowest nonzero coefficient of `divisor`.
    ///
    /// If that coefficient sits at `z^v` with `v > 0`, the quotient is only
    /// determined up to `z^(order - v)` and is returned at that order.
    pub fn exact_divide(&self, divisor: &ZSeries) -> Result<Self> {
        let order = self.order().min(divisor.order());
        let v = divisor
            .coeffs[..=order]
            .iter()
            .position(|p| !p.is_zero())
            .ok_or(Error::NonExactDivision { index: 0, context: None })?;
        if let Some(bad) = self.coeffs[..v].iter().position(|p| !p.is_zero()) {
            return Err(Error::NonExactDivision { index: bad, context: None });
        }
        let lead = &divisor.coeffs[v];
        let out_order = order - v;
        let mut q: Vec<MultiPoly> = Vec::with_capacity(out_order + 1);
        for k in 0..=out_order {
            let mut acc = self.coeffs[k + v].clone();
            for (j, qj) in q.iter().enumerate() {
                let b = &divisor.coeffs[k + v - j];
                if !qj.is_zero() && !b.is_zero() {
                    acc.sub_assign_ref(&(qj * b));
                }
            }
            let qk = acc.exact_div(lead).ok_or(Error::NonExactDivision { index: k, context: None })?;
            q.push(qk);
        }
        Ok(ZSeries { coeffs: q })
    }

    /// Formal derivative in `alpha`, coefficient-wise.
    pub fn d_alpha(&self) -> Self {
        ZSeries { coeffs: self.coeffs.iter().map(MultiPoly::d_alpha).collect() }
    }

    /// Formal derivative in `z`; the result has order one less (order 0 stays 0).
    pub fn d_z(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=order).map(|k| self.coeffs[k].scale(&BigInt::from(k))).collect();
        ZSeries { coeffs }
    }

    /// Substitute integers for some of `x`, `y`, `alpha`.
    pub fn substitute(&self, x: Option<&BigInt>, y: Option<&BigInt>, alpha: Option<&BigInt>) -> Self {
        ZSeries { coeffs: self.coeffs.iter().map(|p| p.substitute(x, y, alpha)).collect() }
    }

    /// Exact rational values of the coefficients at the given point.
    pub fn specialize(&self, x: &BigRational, y: &BigRational, alpha: &BigRational) -> Vec<BigRational> {
        self.coeffs.iter().map(|p| p.eval(x, y, alpha)).collect()
    }

    /// One `n: poly` line per coefficient.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {p}")?;
        }
        Ok(())
    }
}

/// One `n: value` line per coefficient of a specialized series.
pub fn dump_rational(values: &[BigRational]) -> String {
    values.iter().enumerate().map(|(n, v)| format!("{n}: {v}\n")).collect()
}

impl Add for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        let order = self.order().min(rhs.order());
        ZSeries { coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: &ZSeries) -> ZSeries {
        let order = self.order().min(rhs.order());
        ZSeries { coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        let order = self.order().min(rhs.order());
        let mut out = ZSeries::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_product(a, b);
                }
            }
        }
        out
    }
}

impl Neg for &ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        ZSeries { coeffs: self.coeffs.iter().map(|p| -p).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ZSeries {
            type Output = ZSeries;
            fn $m(self, rhs: ZSeries) -> ZSeries { (&self).$m(&rhs) }
        }
        impl $tr<&ZSeries> for ZSeries {
            type Output = ZSeries;
            fn $m(self, rhs: &ZSeries) -> ZSeries { (&self).$m(rhs) }
        }
        impl $tr<ZSeries> for &ZSeries {
            type Output = ZSeries;
            fn $m(self, rhs: ZSeries) -> ZSeries { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// `M = 1 + (x+y) z M + alpha z^2 M^2`, by fixed-point iteration from `M = 1`.
///
/// Iteration `k` fixes the coefficient of `z^k`, so it runs at order `k`.
pub fn solve_m(order: usize) -> ZSeries {
    let xy = &MultiPoly::x() + &MultiPoly::y();
    let mut m = ZSeries::one(0);
    for k in 1..=order {
        let mk = {
            let mut c = m.coeffs.clone();
            c.resize(k + 1, MultiPoly::zero());
            ZSeries { coeffs: c }
        };
        let lin = mk.shift(1).scale(&xy);
        let quad = (&mk * &mk).shift(2).scale(&MultiPoly::alpha());
        m = &(&ZSeries::one(k) + &lin) + &quad;
    }
    m
}

/// `M0 = 1 / (1 - y z - alpha z^2 M)`.
pub fn solve_m0(m: &ZSeries) -> ZSeries {
    let order = m.order();
    let denom = &(&ZSeries::one(order) - &ZSeries::monomial(MultiPoly::y(), 1, order))
        - &m.shift(2).scale(&MultiPoly::alpha());
    denom.inverse_unit().expect("constant term is 1")
}

/// `1 + (x+y) z + alpha z^2`.
fn kernel(order: usize) -> ZSeries {
    let xy = &MultiPoly::x() + &MultiPoly::y();
    let mut s = ZSeries::one(order);
    s = &s + &ZSeries::monomial(xy, 1, order);
    &s + &ZSeries::monomial(MultiPoly::alpha(), 2, order)
}

/// First index at which `F = zM` fails to invert `f(z) = z / (1 + (x+y) z + alpha z^2)`,
/// or at which `f'(z) (1 + (x+y) z + alpha z^2)^2 = 1 - alpha z^2` fails.
pub fn reversion_mismatch(m: &ZSeries) -> Option<usize> {
    let order = m.order();
    let big_f = m.shift(1);
    let denom = &(&ZSeries::one(order) + &big_f.scale(&(&MultiPoly::x() + &MultiPoly::y())))
        + &(&big_f * &big_f).scale(&MultiPoly::alpha());
    let lhs = match big_f.exact_divide(&denom) {
        Ok(s) => s,
        Err(Error::NonExactDivision { index, .. }) => return Some(index),
        Err(_) => return Some(0),
    };
    if let Some(k) = first_difference(&lhs, &ZSeries::z(order)) {
        return Some(k);
    }

    if order == 0 {
        return None;
    }
    let q = kernel(order);
    let small_f = ZSeries::z(order).exact_divide(&q).ok()?;
    let lhs = &small_f.d_z() * &(&q * &q).truncate(order.saturating_sub(1));
    let rhs = &ZSeries::one(order) - &ZSeries::monomial(MultiPoly::alpha(), 2, order);
    first_difference(&lhs, &rhs)
}

pub fn check_reversion(order: usize) -> bool {
    reversion_mismatch(&solve_m(order)).is_none()
}

/// First index where two series differ, compared up to the smaller order.
pub fn first_difference(a: &ZSeries, b: &ZSeries) -> Option<usize> {
    let order = a.order().min(b.order());
    (0..=order).find(|&k| a.coeffs[k] != b.coeffs[k])
}

/// `[z^n]` of a rational sequence, or zero past its end.
pub fn rational_coeff(values: &[BigRational], n: usize) -> BigRational {
    values.get(n).cloned().unwrap_or_else(BigRational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn xy() -> MultiPoly {
        &MultiPoly::x() + &MultiPoly::y()
    }

    #[test]
    fn geometric_series() {
        let n = 9;
        let one_minus_z = &ZSeries::one(n) - &ZSeries::z(n);
        let geo = ZSeries::from_coeffs(vec![MultiPoly::one(); n + 1]);
        assert_eq!(&one_minus_z * &geo, ZSeries::one(n));
        assert_eq!(one_minus_z.inverse_unit().unwrap(), geo);
    }

    #[test]
    fn exact_divide_examples() {
        let n = 4;
        let x = MultiPoly::x();
        let num = &ZSeries::monomial(x.clone(), 1, n) + &ZSeries::monomial(&x * &MultiPoly::y(), 2, n);
        let q = num.exact_divide(&ZSeries::constant(x.clone(), n)).unwrap();
        assert_eq!(q, &ZSeries::z(n) + &ZSeries::monomial(MultiPoly::y(), 2, n));

        let err = ZSeries::one(n).exact_divide(&ZSeries::constant(x, n)).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { index: 0, .. }));
    }

    #[test]
    fn divide_by_positive_valuation() {
        let n = 5;
        let z2 = ZSeries::monomial(MultiPoly::one(), 2, n);
        let q = (&z2 * &kernel(n)).exact_divide(&z2).unwrap();
        assert_eq!(q.order(), n - 2);
        assert_eq!(q, kernel(n - 2));
        assert!(ZSeries::z(n).exact_divide(&z2).is_err());
    }

    #[test]
    fn m_low_coefficients() {
        let m = solve_m(4);
        assert_eq!(m.coeff(0).unwrap(), &MultiPoly::one());
        assert_eq!(m.coeff(1).unwrap(), &xy());
        assert_eq!(m.coeff(2).unwrap(), &(&(&xy() * &xy()) + &MultiPoly::alpha()));
        assert!(m.coeff(5).is_err());
    }

    #[test]
    fn m_residual_vanishes() {
        let n = 10;
        let m = solve_m(n);
        let rhs = &(&ZSeries::one(n) + &m.shift(1).scale(&xy())) + &(&m * &m).shift(2).scale(&MultiPoly::alpha());
        assert!((&m - &rhs).is_zero());
    }

    #[test]
    fn m0_low_coefficients() {
        let m0 = solve_m0(&solve_m(4));
        assert_eq!(m0.coeff(0).unwrap(), &MultiPoly::one());
        assert_eq!(m0.coeff(1).unwrap(), &MultiPoly::y());
        assert_eq!(m0.coeff(2).unwrap(), &(&(&MultiPoly::y() * &MultiPoly::y()) + &MultiPoly::alpha()));
    }

    #[test]
    fn reversion() {
        assert!(check_reversion(0));
        assert!(check_reversion(10));
        let mut m = solve_m(8);
        m.coeffs[5] = &m.coeffs[5] + &MultiPoly::one();
        assert_eq!(reversion_mismatch(&m), Some(6));
    }

    #[test]
    fn derivatives_and_specialization() {
        let n = 3;
        let az2 = ZSeries::monomial(MultiPoly::alpha(), 2, n);
        assert_eq!(az2.d_alpha(), ZSeries::monomial(MultiPoly::one(), 2, n));
        let a2z = ZSeries::monomial(MultiPoly::alpha_pow(2), 1, n);
        let one = BigInt::one();
        assert_eq!(a2z.d_alpha().substitute(None, None, Some(&one)), ZSeries::monomial(MultiPoly::constant(2), 1, n));

        let r1 = BigRational::one();
        let vals = solve_m(2).specialize(&r1, &r1, &r1);
        assert_eq!(vals[2], BigRational::from_integer(5.into()));
    }

    #[test]
    fn dump_format() {
        let s = &ZSeries::one(2) + &ZSeries::monomial(MultiPoly::alpha(), 2, 2);
        assert_eq!(s.dump(), "0: 1\n1: 0\n2: alpha\n");
    }
}
