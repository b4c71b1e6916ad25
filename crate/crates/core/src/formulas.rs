//! Closed-form counts.
//!
//! Conventions, applied term by term:
//! * a term with `m!` in its denominator for some `m < 0` is `0`, and this is
//!   decided before any other factor of the term is formed;
//! * `binom(a, b) = 0` unless `0 <= b <= a`;
//! * `chi(S)` is `1` if `S` holds and `0` otherwise.
//!
//! Where a printed formula and the enumerations disagree, the function named
//! `*_printed` keeps the printed form and the unsuffixed function is the one
//! that matches the enumerations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(m: u64) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

pub fn chi(cond: bool) -> BigInt {
    if cond {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

pub(crate) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `scalar * prod(num_facts!) / (den * prod(den_facts!))`, or `0` if any
/// `den_facts` entry is negative. `den` is only formed after that test.
pub(crate) fn term(num_facts: &[i64], den_facts: &[i64], scalar: i64, den: impl FnOnce() -> i64) -> BigRational {
    if den_facts.iter().any(|&m| m < 0) {
        return BigRational::zero();
    }
    let fact = |m: i64| {
        assert!(m >= 0, "negative factorial {m} in a numerator");
        factorial(m as u64)
    };
    let num: BigInt = num_facts.iter().map(|&m| fact(m)).product::<BigInt>() * scalar;
    let den_v = den();
    assert!(den_v != 0, "zero scalar denominator in a nonvanishing term");
    let den: BigInt = den_facts.iter().map(|&m| fact(m)).product::<BigInt>() * den_v;
    BigRational::new(num, den)
}

fn q(k: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(k.into())
}

fn integral(r: BigRational, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Domain(format!("{what} evaluates to the non-integer {r}")))
    }
}

fn positive(n: usize) -> Result<i64> {
    if n == 0 {
        Err(Error::NonPositiveN)
    } else {
        Ok(n as i64)
    }
}

/// Tableaux of shape `(e+t, e)` with `c + e + t` entries in the first row and
/// `d + e` in the second; `c + d + 2e + t = n`.
pub fn count_thm1(n: usize, t: usize, c: usize, d: usize, e: usize) -> Result<BigInt> {
    let n = positive(n)?;
    let [t, c, d, e] = [t, c, d, e].map(|v| v as i64);
    if c + d + 2 * e + t != n {
        return Err(Error::ParameterSum(format!("c + d + 2e + t = {} but n = {n}", c + d + 2 * e + t)));
    }
    let mut r = q(chi(e == 0) * binom(n - 1, t - 1));
    r += term(&[n - 1], &[c, d, e - 1, e + t - 1], 1, || d + e);
    for b in (n - c - e + 1)..=(n - e + 1) {
        r += term(&[n - 1], &[d, b - 1 - d, e - 1, n - b - e + 1], sign(n - b - c - e) * (n - b), || b);
    }
    integral(r, "count_thm1")
}

/// Tableaux of shape `(e+t, e)` with `n` entries.
pub fn count_cor2(n: usize, t: usize, e: usize) -> Result<BigInt> {
    let n = positive(n)?;
    let (t, e) = (t as i64, e as i64);
    let mut r = q(chi(e == 0) * binom(n - 1, t - 1));
    for d in 0..=(n - 2 * e - t) {
        let base = term(&[n - 1], &[n - d - 2 * e - t, d, e - 1, e + t - 1], 1, || 1);
        if base.is_zero() {
            continue;
        }
        let bracket = BigRational::new(BigInt::one(), (d + e).into())
            - BigRational::new((n - d - e - t - 1).into(), ((d + e + t + 1) * (d + e + t)).into());
        r += base * bracket;
    }
    integral(r, "count_cor2")
}

/// Tableaux of shape `(e+t, e)` for some `e`, with `m` entries in the first
/// row and `n` in total. Undefined at `n = 1`.
pub fn count_cor3(n: usize, t: usize, m: usize) -> Result<BigInt> {
    let n = positive(n)?;
    if n == 1 {
        return Err(Error::Domain("the row-refined count has a factor 1/(n-1) and is undefined at n = 1".into()));
    }
    if m == 0 || m as i64 > n {
        return Err(Error::Domain(format!("m must satisfy 1 <= m <= n, got m = {m}")));
    }
    let (t, m) = (t as i64, m as i64);
    let mut r = q(chi(m == n) * binom(n - 1, t - 1));
    if m < n {
        r += BigRational::new(t.into(), (n - 1).into()) * q(binom(n, m) * binom(n - 1, m - t - 1));
    }
    r += BigRational::new(BigInt::one(), (n - 1).into()) * q(binom(n - 1, m) * binom(n - 1, m - t - 1));
    integral(r, "count_cor3")
}

/// Tableaux of shape `(e+t, e)` for some `e`, with `n` entries.
pub fn count_cor4(n: usize, t: usize) -> Result<BigInt> {
    let n = positive(n)?;
    let t = t as i64;
    Ok(binom(2 * n - 2, n - t - 1) - binom(2 * n - 2, n - t - 2) + binom(n - 2, t - 2))
}

/// Expected second-row length over tableaux of shape `(e+t, e)` with `n`
/// entries; `None` when the count is zero.
pub fn expected_thm5(n: usize, t: usize) -> Result<Option<BigRational>> {
    if n < 2 {
        return Err(Error::Domain(format!("the expectation formula needs n >= 2, got n = {n}")));
    }
    let den = count_cor4(n, t)?;
    let (n, t) = (n as i64, t as i64);
    let num = binom(2 * n - 4, n - t - 1) + (n - 2) * binom(2 * n - 4, n - t - 3)
        - (n + 1) * binom(2 * n - 4, n - t - 4)
        - binom(n - 3, t - 2);
    Ok((!den.is_zero()).then(|| BigRational::new(num, den)))
}

fn skew_params(n: usize, f: usize, t: usize, c: usize, d: usize, e: usize) -> Result<[i64; 6]> {
    let n = positive(n)?;
    if f == 0 {
        return Err(Error::Domain("skew counts need f >= 1".into()));
    }
    let [f, t, c, d, e] = [f, t, c, d, e].map(|v| v as i64);
    if c + d + 2 * e - f + t != n {
        return Err(Error::ParameterSum(format!("c + d + 2e - f + t = {} but n = {n}", c + d + 2 * e - f + t)));
    }
    Ok([n, f, t, c, d, e])
}

/// The part shared by both skew cases: two single terms and the `b`-sum.
fn skew_common([n, f, t, c, d, e]: [i64; 6]) -> BigRational {
    let mut r = term(&[n], &[c, d, e - 1, e - f + t - 1], 1, || (c + e - f + t) * (d + e));
    r -= term(&[n - 1], &[c, d, e - f - 1, e + t - 1], 1, || c + e + t);
    r += skew_b_sum(n, f, c, d, e);
    r
}

fn skew_b_sum(n: i64, f: i64, c: i64, d: i64, e: i64) -> BigRational {
    let mut r = BigRational::zero();
    for b in (n - c - e + f + 1)..=(n - e + f + 1) {
        r += term(&[n - 1], &[d, b - 1 - d, e - f - 1, n - b - e + f + 1], sign(n - b - c - e + f) * (n - b), || b);
    }
    r
}

/// Tableaux of shape `(e+t, e)/(f, 0)` with `c + e - f + t` entries in the
/// first row and `d + e` in the second; `c + d + 2e - f + t = n`, `f >= 1`.
pub fn count_thm6(n: usize, f: usize, t: usize, c: usize, d: usize, e: usize) -> Result<BigInt> {
    let p = skew_params(n, f, t, c, d, e)?;
    let [n, f, t, c, d, e] = p;
    let lead = if t < f {
        chi(c == 0 && e == f - t) * binom(n - 1, f - t - 1)
    } else {
        chi(d == 0 && e == 0) * binom(n - 1, t - f - 1)
    };
    integral(q(lead) + skew_common(p), "count_thm6")
}

/// The printed form of [`count_thm6`]. For `1 <= t < f` it disagrees with the
/// enumerations (e.g. `n=2, f=2, t=1, c=0, d=1, e=1` gives 0, true count 1).
pub fn count_thm6_printed(n: usize, f: usize, t: usize, c: usize, d: usize, e: usize) -> Result<BigInt> {
    let p = skew_params(n, f, t, c, d, e)?;
    let [n, f, t, c, d, e] = p;
    if t >= f {
        return count_thm6(n as usize, f as usize, t as usize, c as usize, d as usize, e as usize);
    }
    let mut r = q(chi(t == 0 && e == f) * binom(n - 1, f - 1));
    r -= term(&[n - 1], &[c, d, e - f - 1, e + t - 1], c + e - f + t, || (c + e - f) * (c + e + t));
    r += term(&[n], &[c, d, e - 1, e - f + t - 1], 1, || (c + e - f + t) * (d + e));
    if [c, d, n - d - 1, e - f - 1, e - f + t - 1].iter().all(|&m| m >= 0) {
        r += term(&[n - 1, n - d - f - 1], &[c, d, n - d - 1, e - f - 1, e - f + t - 1], t, || {
            (n - d - e) * (c + e - f)
        });
    }
    r += skew_b_sum(n, f, c, d, e);
    integral(r, "count_thm6_printed")
}

fn thm7_params(n: usize, f: usize) -> Result<(i64, i64)> {
    let n = positive(n)?;
    if f == 0 {
        return Err(Error::Domain("skew counts need f >= 1".into()));
    }
    Ok((n, f as i64))
}

fn thm7_above(n: i64, f: i64, t: i64) -> BigInt {
    let mut r = binom(n - 1, t - f - 1) + 2 * binom(2 * n - 3, n + f - t - 2) - binom(2 * n - 2, n - f - t - 2);
    for k in (t - f + 1)..=n {
        let a = 2 * n + k + f - t - 3;
        r += sign(k - t - f - 1) * binom(k - 1, t - f - 1) * (binom(a, n - k - 1) - binom(a, n - k - 2));
    }
    r
}

/// Tableaux of shape `(e+t, e)/(f, 0)` for some `e`, with `n` entries.
pub fn count_thm7(n: usize, f: usize, t: usize) -> Result<BigInt> {
    let (n, f) = thm7_params(n, f)?;
    let t = t as i64;
    if t >= f {
        return Ok(thm7_above(n, f, t));
    }
    let g = f - t;
    let mut r = binom(n - 1, g - 1) + binom(2 * n - 2, n - g - 1) - binom(2 * n - 2, n - f - t - 2);
    for k in g..=n {
        let a = 2 * n + k - g - 3;
        r += sign(k - g) * binom(k - 1, g - 1) * (binom(a, n - k - 2) - binom(a, n - k - 1));
    }
    Ok(r)
}

/// The printed form of [`count_thm7`]; for `1 <= t < f` it disagrees with
/// the enumerations (e.g. `n=3, f=2, t=1` gives 3, true count 4).
pub fn count_thm7_printed(n: usize, f: usize, t: usize) -> Result<BigInt> {
    let (n, f) = thm7_params(n, f)?;
    let t = t as i64;
    if t >= f {
        return Ok(thm7_above(n, f, t));
    }
    let mut r = chi(t == 0) * binom(n - 1, f - 1) + binom(2 * n - 2, n - f + t - 1) - binom(2 * n - 3, n - f - 1)
        - binom(2 * n - 2, n - f - t - 2)
        + binom(2 * n - 3, n - f - t - 1);
    for k in (f - t)..=n {
        let a = 2 * n + k - f + t - 3;
        r += sign(k - f + t)
            * binom(k - 1, f - t - 1)
            * (-binom(a, n - k - 1) + binom(a, n - k - 2) + binom(a, n - k - t - 1) - binom(a, n - k - 2 * t - 1));
    }
    Ok(r)
}

/// The `t = f` case of [`count_thm7`] in closed form.
pub fn remark_1_10(n: usize, t: usize) -> Result<BigInt> {
    let n = positive(n)?;
    if t == 0 {
        return Err(Error::Domain("needs t = f >= 1".into()));
    }
    let t = t as i64;
    Ok(2 * binom(2 * n - 3, n - 2) - binom(2 * n - 2, n - 2 * t - 2))
}

/// `binom(a, b)` as a polynomial in `a` (`a (a-1) ... (a-b+1) / b!`), so
/// `binom(-1, b) = (-1)^b`; zero for `b < 0`.
pub fn binom_poly(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// `sum_{l=0}^{k} (-1)^(k-l) binom(m, l)`, which equals `binom_poly(m-1, k)`.
pub fn alternating_binomial_sum(k: usize, m: usize) -> BigInt {
    let (k, m) = (k as i64, m as i64);
    (0..=k).map(|l| sign(k - l) * binom(m, l)).sum()
}

/// Catalan numbers by the segment recurrence `C(e) = sum C(i) C(e-1-i)`.
pub fn catalan_recurrence(upto: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for e in 1..=upto {
        let next = (0..e).map(|i| &c[i] * &c[e - 1 - i]).sum();
        c.push(next);
    }
    c
}

/// `p/q` in lowest terms, `q = 1` included.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn conventions() {
        assert_eq!(binom(5, 2), z(10));
        assert_eq!(binom(5, 6), z(0));
        assert_eq!(binom(-1, 0), z(0));
        assert_eq!(binom(3, -1), z(0));
        assert_eq!(chi(true), z(1));
        // the 1/(d+e) factor is never formed when (e-1)! kills the term
        assert_eq!(term(&[3], &[-1], 1, || 0), BigRational::zero());
    }

    #[test]
    fn thm1_examples() {
        assert_eq!(count_thm1(4, 0, 0, 0, 2).unwrap(), z(2));
        assert_eq!(count_thm1(4, 0, 1, 1, 1).unwrap(), z(1));
        assert_eq!(count_thm1(3, 3, 0, 0, 0).unwrap(), z(1));
        assert!(matches!(count_thm1(4, 0, 0, 0, 1), Err(Error::ParameterSum(_))));
        assert!(matches!(count_thm1(0, 0, 0, 0, 0), Err(Error::NonPositiveN)));
    }

    #[test]
    fn cor_examples() {
        assert_eq!(count_cor2(2, 0, 1).unwrap(), z(1));
        assert_eq!(count_cor2(4, 0, 1).unwrap(), z(3));
        assert_eq!(count_cor2(4, 0, 2).unwrap(), z(2));
        assert_eq!(count_cor3(3, 1, 3).unwrap(), z(1));
        assert_eq!(count_cor3(3, 1, 2).unwrap(), z(2));
        assert!(matches!(count_cor3(1, 1, 1), Err(Error::Domain(_))));
        assert_eq!(count_cor4(3, 1).unwrap(), z(3));
        assert_eq!(count_cor4(4, 0).unwrap(), z(5));
        assert_eq!(count_cor4(2, 1).unwrap(), z(1));
        // n = 1 edge: the formula gives 0 for t = 1, while {1} is one tableau
        assert_eq!(count_cor4(1, 1).unwrap(), z(0));
    }

    #[test]
    fn expectation_examples() {
        assert_eq!(expected_thm5(4, 0).unwrap(), Some(BigRational::new(z(7), z(5))));
        assert_eq!(expected_thm5(3, 1).unwrap(), Some(BigRational::new(z(2), z(3))));
        assert_eq!(expected_thm5(5, 5).unwrap(), Some(BigRational::zero()));
        assert_eq!(ratio_string(&expected_thm5(5, 5).unwrap().unwrap()), "0/1");
        assert_eq!(expected_thm5(3, 4).unwrap(), None);
    }

    #[test]
    fn skew_examples() {
        assert_eq!(count_thm6(3, 1, 1, 1, 0, 1).unwrap(), z(3));
        assert_eq!(count_thm6(2, 1, 1, 0, 0, 1).unwrap(), z(2));
        assert_eq!(count_thm6(2, 2, 1, 0, 1, 1).unwrap(), z(1));
        assert_eq!(count_thm6_printed(2, 2, 1, 0, 1, 1).unwrap(), z(0));
        assert_eq!(count_thm7(3, 1, 1).unwrap(), z(6));
        assert_eq!(count_thm7(2, 1, 1).unwrap(), z(2));
        assert_eq!(count_thm7(3, 2, 1).unwrap(), z(4));
        assert_eq!(count_thm7_printed(3, 2, 1).unwrap(), z(3));
        assert_eq!(remark_1_10(3, 1).unwrap(), z(6));
        assert_eq!(remark_1_10(2, 1).unwrap(), z(2));
        assert_eq!(remark_1_10(2, 3).unwrap(), z(2));
    }

    #[test]
    fn printed_and_corrected_agree_at_t_zero() {
        for n in 1..=9 {
            for f in 1..=3 {
                assert_eq!(count_thm7(n, f, 0).unwrap(), count_thm7_printed(n, f, 0).unwrap());
                for (c, d, e) in crate::verify::feasible_weights(n, f, 0) {
                    {
                        assert_eq!(
                            count_thm6(n, f, 0, c, d, e).unwrap(),
                            count_thm6_printed(n, f, 0, c, d, e).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn helper_identity() {
        for m in 0..=12 {
            for k in 0..=m {
                let lhs = alternating_binomial_sum(k, m);
                assert_eq!(lhs, binom_poly(m as i64 - 1, k as i64));
                if m >= 1 {
                    assert_eq!(lhs, binom(m as i64 - 1, k as i64));
                }
            }
        }
        // m = 0 needs binom(-1, 0) = 1, which the closed-form convention sets to 0
        assert_eq!(alternating_binomial_sum(0, 0), z(1));
        assert_eq!(binom(-1, 0), z(0));
    }

    #[test]
    fn catalan() {
        let rec = catalan_recurrence(8);
        for e in 1..=8 {
            assert_eq!(count_thm1(2 * e, 0, 0, 0, e).unwrap(), rec[e]);
        }
        assert_eq!(rec[8], z(1430));
    }
}
