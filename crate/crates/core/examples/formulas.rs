//! Closed-form counts and the expectation, compared with brute force.

use svtab::formulas::{count_cor2, count_cor3, count_cor4, count_thm1, count_thm6, count_thm7, expected_thm5, ratio_string, remark_1_10};
use svtab::motzkin::count_paths;

fn main() -> svtab::Result<()> {
    println!("refined, straight: thm1(n=6, t=0, c=1, d=1, e=2) = {}", count_thm1(6, 0, 1, 1, 2)?);
    println!("paths with that weight: {}", count_paths(6, 0, 0, Some((1, 1, 2))));
    println!("by second row: cor2(n=6, t=0, e=2) = {}", count_cor2(6, 0, 2)?);
    println!("by first row: cor3(n=6, t=0, m=3) = {}", count_cor3(6, 0, 3)?);

    println!("\n n  cor4(t=0)  cor4(t=1)  thm7(f=2,t=1)  paths");
    for n in 1..=9 {
        println!(
            "{n:2}  {:9}  {:9}  {:13}  {}",
            count_cor4(n, 0)?,
            count_cor4(n, 1)?,
            count_thm7(n, 2, 1)?,
            count_paths(n, 2, 1, None)
        );
    }
    println!("\nskew refined: thm6(n=5, f=2, t=1, c=2, d=0, e=2) = {}", count_thm6(5, 2, 1, 2, 0, 2)?);
    println!("t = f shortcut: remark(n=6, t=2) = {}, thm7 = {}", remark_1_10(6, 2)?, count_thm7(6, 2, 2)?);

    for n in 2..=8 {
        let e = expected_thm5(n, 0)?.map_or("undefined".into(), |r| ratio_string(&r));
        println!("expected second row, n={n}, t=0: {e}");
    }
    // the row-refined count is undefined at n = 1
    println!("cor3(1, 0, 1): {}", count_cor3(1, 0, 1).unwrap_err());
    Ok(())
}
