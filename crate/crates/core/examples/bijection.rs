//! Tableau to path and back.

use svtab::bijection::{path_to_tableau, tableau_to_path};
use svtab::motzkin::enumerate_paths;
use svtab::{ColouredPath, SetValuedTableau, TwoRowShape};

fn main() -> svtab::Result<()> {
    // shape (4,3)/(2,0) with 9 entries
    let shape = TwoRowShape::new(3, 1, 2)?;
    let tab = SetValuedTableau::new(shape, vec![vec![3, 4], vec![8], vec![1], vec![2, 5, 6, 7], vec![9]])?;
    let path = tableau_to_path(&tab)?;
    println!("{:?} -> {path}", tab.content());
    assert_eq!(path_to_tableau(&path)?, tab);

    let p: ColouredPath = "1:DUu".parse()?;
    let back = path_to_tableau(&p)?;
    println!("{p} -> shape {} {:?}", back.shape(), back.content());

    let mut checked = 0;
    for n in 1..=7 {
        for f in 0..=2 {
            for t in 0..=f + n {
                for p in enumerate_paths(n, f, t, None) {
                    assert_eq!(tableau_to_path(&path_to_tableau(&p)?)?, p);
                    checked += 1;
                }
            }
        }
    }
    println!("{checked} paths round-trip");

    let bad = SetValuedTableau::new(TwoRowShape::straight(1, 0), vec![vec![2], vec![1]])?;
    println!("invalid tableau: {:?}", tableau_to_path(&bad).unwrap_err());
    Ok(())
}
