use std::time::{Duration, Instant};

use num_bigint::BigInt;
use svtab::verify::{self, lemmas, run_all, write_report, Grid, Status, Val};

fn json(grid: &Grid) -> Vec<u8> {
    let (reports, _) = run_all(grid);
    let mut buf = Vec::new();
    write_report(&reports, &mut buf).unwrap();
    buf
}

#[test]
fn parallel_and_sequential_reports_are_identical() {
    let grid = Grid::up_to(6);
    let parallel = json(&grid);
    assert_eq!(parallel, json(&grid.clone().sequential()));
    assert_eq!(parallel, json(&grid));
}

#[test]
fn default_grid_has_only_documented_disagreements() {
    let (reports, summary) = run_all(&Grid::default());
    assert!(summary.passed(), "{:?}", summary.failures);
    assert_eq!(summary.total, reports.len());
    let undocumented: Vec<_> = reports.iter().filter(|r| r.is_failure()).collect();
    assert!(undocumented.is_empty(), "{undocumented:?}");
    // every non-agreement is listed with its reason
    let listed = reports.iter().filter(|r| r.status != Status::Agree).count();
    assert_eq!(listed, summary.exclusions.len());
}

#[test]
fn small_run_is_fast_and_empty_grid_is_empty() {
    let start = Instant::now();
    let (_, summary) = run_all(&Grid::up_to(4));
    assert!(start.elapsed() < Duration::from_secs(10));
    assert!(summary.passed());
    let (reports, summary) = run_all(&Grid::up_to(0));
    assert!(reports.is_empty());
    assert_eq!(summary.total, 0);
    assert!(summary.per_check.is_empty() && summary.exclusions.is_empty());
}

#[test]
fn theorem_examples() {
    let grid = Grid::up_to(4);
    let thm7 = verify::check_theorem("thm7", &grid);
    let r = thm7
        .iter()
        .find(|r| r.params.get("n") == Some(3) && r.params.get("f") == Some(1) && r.params.get("t") == Some(1))
        .unwrap();
    assert_eq!(r.status, Status::Agree);
    assert_eq!(r.formula, Some(Val::Int(BigInt::from(6))));
    assert_eq!(
        serde_json::to_string(r).unwrap(),
        r#"{"check":"thm7","params":{"n":3,"f":1,"t":1},"tableau":6,"path":6,"series":6,"formula":6,"status":"agree"}"#
    );

    let cor4 = verify::check_theorem("cor4", &grid);
    let edge = cor4.iter().find(|r| r.params.get("n") == Some(1) && r.params.get("t") == Some(1)).unwrap();
    assert_eq!(edge.status, Status::Disagree);
    assert_eq!(edge.formula, Some(Val::Int(BigInt::from(0))));
    assert_eq!(edge.path, Some(Val::Int(BigInt::from(1))));
    assert!(edge.is_documented() && !edge.is_failure());

    let thm1 = verify::check_theorem("thm1", &Grid::up_to(8));
    assert!(thm1.iter().all(|r| r.status == Status::Agree));
}

#[test]
fn lemma_examples() {
    let l13 = verify::check_lemma("lemma13", 6, 6).unwrap();
    assert!(!l13.is_empty() && l13.iter().all(|r| r.status == Status::Agree));
    assert!(matches!(l13[0].formula, Some(Val::Poly(_))));

    let l15 = verify::check_lemma("15", 5, 5).unwrap();
    for r in &l15 {
        let t = r.params.get("t").unwrap();
        let want = svtab::formulas::binom(7, 3 - t) - svtab::formulas::binom(7, 2 - t);
        assert_eq!(r.formula, Some(Val::Int(want)));
        assert_eq!(r.status, Status::Agree);
    }
    assert!(verify::check_lemma("lemma24", 7, 7).unwrap().iter().all(|r| r.status == Status::Agree));
    assert!(verify::check_lemma("lemma99", 3, 3).is_none());
    assert_eq!(lemmas::registry().len(), 25);
}
