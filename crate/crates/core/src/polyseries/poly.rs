use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponents of `x`, `y`, `alpha`.
pub type Exponents = (u32, u32, u32);

/// Sparse polynomial in `x`, `y`, `alpha` with big-integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, (0, 0, 0))
    }

    pub fn monomial(c: impl Into<BigInt>, exps: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, (1, 0, 0))
    }

    pub fn y() -> Self {
        Self::monomial(1, (0, 1, 0))
    }

    pub fn alpha() -> Self {
        Self::monomial(1, (0, 0, 1))
    }

    pub fn alpha_pow(k: u32) -> Self {
        Self::monomial(1, (0, 0, k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^a y^b alpha^c`; zero when absent.
    pub fn coeff(&self, exps: Exponents) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Leading term in lexicographic order on `(a, b, c)`.
    pub fn leading(&self) -> Option<(Exponents, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            self.add_term(*e, -c);
        }
    }

    /// `self += a * b`, without materialising the product.
    pub fn add_product(&mut self, a: &MultiPoly, b: &MultiPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term((ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2), ca * cb);
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (leading-term division in lexicographic order).
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lead_e, lead_c) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((e, c)) = rem.leading() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 || e.2 < lead_e.2 {
                return None;
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1, e.2 - lead_e.2);
            let term = MultiPoly::monomial(q, qe);
            rem.sub_assign_ref(&(&term * divisor));
            quot.add_assign_ref(&term);
        }
        Some(quot)
    }

    /// Formal partial derivative in `alpha`.
    pub fn d_alpha(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(a, b, c), k) in &self.terms {
            if c > 0 {
                out.add_term((a, b, c - 1), k * BigInt::from(c));
            }
        }
        out
    }

    /// Substitute integers for any subset of the variables, keeping the rest.
    pub fn substitute(&self, x: Option<&BigInt>, y: Option<&BigInt>, alpha: Option<&BigInt>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(a, b, c), k) in &self.terms {
            let mut coef = k.clone();
            let mut exps = (a, b, c);
            if let Some(v) = x {
                coef *= v.pow(a);
                exps.0 = 0;
            }
            if let Some(v) = y {
                coef *= v.pow(b);
                exps.1 = 0;
            }
            if let Some(v) = alpha {
                coef *= v.pow(c);
                exps.2 = 0;
            }
            out.add_term(exps, coef);
        }
        out
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational, alpha: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b, c), k) in &self.terms {
            acc += BigRational::from_integer(k.clone())
                * num_traits::pow(x.clone(), a as usize)
                * num_traits::pow(y.clone(), b as usize)
                * num_traits::pow(alpha.clone(), c as usize);
        }
        acc
    }

    /// Value at `x = y = alpha = 1`.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl FromIterator<(Exponents, BigInt)> for MultiPoly {
    fn from_iter<I: IntoIterator<Item = (Exponents, BigInt)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }
}

fn monomial_text(exps: Exponents) -> String {
    let mut parts = Vec::new();
    for (name, k) in [("x", exps.0), ("y", exps.1), ("alpha", exps.2)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

/// Terms in descending lexicographic order of `(a, b, c)`, e.g.
/// `x^2*y - 3*alpha + 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&exps, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_text(exps);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, Exponents)]) -> MultiPoly {
        terms.iter().map(|&(c, e)| (e, BigInt::from(c))).collect()
    }

    #[test]
    fn display_canonical() {
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p(&[(3, (0, 0, 1)), (1, (2, 1, 0))]).to_string(), "x^2*y + 3*alpha");
        assert_eq!(p(&[(-1, (1, 0, 0)), (-2, (0, 0, 0))]).to_string(), "-x - 2");
        assert_eq!(p(&[(1, (0, 0, 0))]).to_string(), "1");
        assert_eq!(p(&[(2, (1, 1, 2))]).to_string(), "2*x*y*alpha^2");
    }

    #[test]
    fn zero_terms_vanish() {
        let a = p(&[(1, (1, 0, 0)), (1, (0, 1, 0))]);
        let b = p(&[(1, (1, 0, 0))]);
        assert_eq!(&(&a - &b) - &MultiPoly::y(), MultiPoly::zero());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let xy = &MultiPoly::x() + &MultiPoly::y();
        let sq = &xy * &xy;
        assert_eq!(sq.exact_div(&xy), Some(xy.clone()));
        assert_eq!(MultiPoly::one().exact_div(&MultiPoly::x()), None);
        assert_eq!(MultiPoly::constant(3).exact_div(&MultiPoly::constant(2)), None);
        assert_eq!(MultiPoly::zero().exact_div(&MultiPoly::x()), Some(MultiPoly::zero()));
        assert_eq!(MultiPoly::x().exact_div(&MultiPoly::zero()), None);
    }

    #[test]
    fn derivative_and_substitution() {
        let a2z = p(&[(1, (0, 0, 2))]);
        assert_eq!(a2z.d_alpha(), p(&[(2, (0, 0, 1))]));
        let poly = p(&[(1, (2, 1, 0)), (3, (0, 0, 1))]);
        let one = BigInt::from(1);
        assert_eq!(poly.substitute(Some(&one), Some(&one), None), p(&[(1, (0, 0, 0)), (3, (0, 0, 1))]));
        assert_eq!(poly.sum_of_coefficients(), BigInt::from(4));
        let half = BigRational::new(1.into(), 2.into());
        let r1 = BigRational::one();
        assert_eq!(poly.eval(&half, &r1, &r1), BigRational::new(13.into(), 4.into()));
    }
}
