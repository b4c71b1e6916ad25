//! Enumerate the set-valued tableaux of one skew shape and check them
//! against the literal "every filling, then filter" enumeration.

use svtab::shapes::{count_tableaux, enumerate_tableaux, enumerate_tableaux_exhaustive, TwoRowShape, ValidityRule};
use svtab::SetValuedTableau;

fn show(tab: &SetValuedTableau) -> String {
    let shape = tab.shape();
    let fmt = |cells: &[Vec<usize>]| {
        cells.iter().map(|s| format!("{s:?}")).collect::<Vec<_>>().join(" ")
    };
    let (row1, row2) = tab.content().split_at(shape.row1_len());
    format!("{}{}  /  {}", "    ".repeat(shape.f()), fmt(row1), fmt(row2))
}

fn main() -> svtab::Result<()> {
    let shape = TwoRowShape::new(2, 1, 1)?;
    let n = 5;
    println!("shape {shape}, n = {n}");
    for tab in enumerate_tableaux(shape, n, None)? {
        println!("  {}   weight (c,d,e) = {:?}", show(&tab), tab.weight());
    }
    let pruned = count_tableaux(shape, n, None)?;
    let literal = enumerate_tableaux_exhaustive(shape, n, ValidityRule::Quantified)?.count();
    println!("{pruned} tableaux (pruned search), {literal} (exhaustive)");

    // row filter: 3 entries in the first row, 2 in the second
    println!("with rows (3, 2): {}", count_tableaux(shape, n, Some((3, 2)))?);

    let tab = enumerate_tableaux(shape, n, None)?.next().expect("nonempty");
    println!("as JSON: {}", serde_json::to_string(&tab).expect("serialize"));
    Ok(())
}
