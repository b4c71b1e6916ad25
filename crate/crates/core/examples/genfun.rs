//! Generating functions of tableaux by weight, built from their displayed
//! sub-terms, and coefficient extraction.

use svtab::genfun::{expected_downsteps_series, gf_skew, gf_straight, refined_coefficient, Builder, Point};
use svtab::motzkin::count_paths;

fn main() -> svtab::Result<()> {
    let order = 6;
    let straight = gf_straight(1, order)?;
    println!("straight shapes, t = 1:\n{straight}");
    println!("[z^5 alpha^2] = {}", refined_coefficient(&straight, 5, 0, 0, 2)?);

    let skew = gf_skew(2, 1, order)?;
    for n in 1..=order {
        let total = skew.coeff(n)?.sum_of_coefficients();
        println!("f=2, t=1, n={n}: series {total}, paths {}", count_paths(n, 2, 1, None));
    }

    let b = Builder::at(order, &Point::all_one());
    let [t1, t2, t3] = b.straight_terms(0)?;
    println!("straight t=0 terms at x=y=alpha=1:\n{t1}--\n{t2}--\n{t3}");

    let means = expected_downsteps_series(0, 8)?;
    for (n, m) in means.iter().enumerate().skip(2) {
        println!("mean second-row length, n={n}: {}", m.as_ref().map_or("-".into(), |r| r.to_string()));
    }
    Ok(())
}
