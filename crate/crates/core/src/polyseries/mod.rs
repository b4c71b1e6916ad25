//! Truncated power series in `z` over sparse integer polynomials in `x`, `y`, `alpha`.

mod poly;
mod series;

pub use poly::{Exponents, MultiPoly};
pub use series::{
    check_reversion, dump_rational, first_difference, rational_coeff, reversion_mismatch, solve_m, solve_m0, ZSeries,
};
