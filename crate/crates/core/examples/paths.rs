//! Admissible two-coloured Motzkin paths: enumeration, weights and the text
//! format `START:STEPS` (U up, D down, u umber, d denim).

use svtab::motzkin::{count_paths, enumerate_motzkin, enumerate_paths};
use svtab::ColouredPath;

fn main() -> svtab::Result<()> {
    let (n, f, t) = (3, 1, 1);
    println!("admissible paths of length {n} from height {f} to {t}:");
    for p in enumerate_paths(n, f, t, None) {
        println!("  {p}  weight {:?}", p.weight());
    }
    println!("total {}", count_paths(n, f, t, None));
    println!("with (c,d,e) = (1,0,1): {}", count_paths(n, f, t, Some((1, 0, 1))));

    let p: ColouredPath = "0:UuDd".parse()?;
    println!("{p}: admissible {}, ends at {}", p.is_admissible(), p.end_height());
    let q: ColouredPath = "0:uUD".parse()?;
    println!("{q}: admissible {} (umber before the first up step)", q.is_admissible());

    let counts: Vec<usize> = (0..=6).map(|n| enumerate_motzkin(n, true).count()).collect();
    println!("unconstrained two-coloured Motzkin paths by length: {counts:?}");
    Ok(())
}
