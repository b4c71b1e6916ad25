//! Run the cross-verification harness on a small grid and print the summary.
//!
//! `cargo run --example verify -- 8 report.json` runs up to n = 8 and writes
//! the JSON report.

use std::fs::File;
use std::io::BufWriter;

use svtab::verify::{check_lemma, run_all, write_report, Grid};

fn main() -> std::io::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_n = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let (reports, summary) = run_all(&Grid::up_to(max_n));
    print!("{}", summary.table());
    for line in &summary.exclusions {
        println!("  excluded {line}");
    }
    if let Some(path) = args.next() {
        write_report(&reports, &mut BufWriter::new(File::create(&path)?))?;
        println!("report written to {path}");
    }

    for r in check_lemma("lemma13", 4, 4).unwrap_or_default() {
        println!("{} ({}) {:?}: {}", r.check, r.params, r.status, r.formula.map(|v| v.to_string()).unwrap_or_default());
    }
    Ok(())
}
