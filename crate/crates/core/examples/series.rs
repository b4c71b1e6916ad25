//! Truncated power series with polynomial coefficients in x, y, alpha:
//! solve for M, check it, and specialise.

use num_bigint::BigInt;
use num_rational::BigRational;
use svtab::polyseries::{check_reversion, dump_rational, solve_m, solve_m0};
use svtab::{MultiPoly, ZSeries};

fn main() -> svtab::Result<()> {
    let order = 5;
    let m = solve_m(order);
    println!("M to z^{order}:\n{m}");
    println!("M0 to z^{order}:\n{}", solve_m0(&m));

    // M = 1 + (x+y) z M + alpha z^2 M^2
    let one = ZSeries::one(order);
    let rhs = &(&one + &m.shift(1).scale(&(&MultiPoly::x() + &MultiPoly::y()))) + &(&m * &m).shift(2).scale(&MultiPoly::alpha());
    println!("defining equation holds: {}", m == rhs);
    println!("zM inverts z/(1 + (x+y)z + alpha z^2): {}", check_reversion(12));

    let ones = m.substitute(Some(&BigInt::from(1)), Some(&BigInt::from(1)), Some(&BigInt::from(1)));
    println!("x=y=alpha=1:\n{ones}");
    let half = BigRational::new(1.into(), 2.into());
    let one_q = BigRational::from_integer(1.into());
    println!("x=1/2, y=alpha=1:\n{}", dump_rational(&m.specialize(&half, &one_q, &one_q)));

    let q = &one - &ZSeries::z(order).scale(&MultiPoly::x());
    println!("1/(1 - xz):\n{}", q.inverse_unit()?);
    Ok(())
}
