//! Cross-verification: brute-force tableaux, brute-force paths, series
//! coefficients and closed forms, compared tuple by tuple.
//!
//! Every comparison produces a [`CheckReport`]. Reports are sorted
//! canonically, so parallel and sequential runs are byte-identical.

pub mod lemmas;

use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::Error;
use crate::formulas;
use crate::genfun::{expected_downsteps_series, Builder};
use crate::motzkin::{enumerate_motzkin, enumerate_paths};
use crate::polyseries::{first_difference, reversion_mismatch, solve_m, solve_m0, MultiPoly, ZSeries};
use crate::shapes::{enumerate_tableaux, TwoRowShape};

use lemmas::{lhs_coefficient, Builders, Lemma};

/// One computed value in a report.
#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    Int(BigInt),
    Ratio(BigRational),
    Poly(MultiPoly),
    Text(String),
    Undefined,
}

impl Val {
    fn int(v: impl Into<BigInt>) -> Self {
        Val::Int(v.into())
    }

    fn ratio(v: Option<BigRational>) -> Self {
        v.map_or(Val::Undefined, Val::Ratio)
    }
}

impl std::fmt::Display for Val {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Val::Int(v) => write!(f, "{v}"),
            Val::Ratio(r) => write!(f, "{}", formulas::ratio_string(r)),
            Val::Poly(p) => write!(f, "{p}"),
            Val::Text(s) => write!(f, "{s}"),
            Val::Undefined => write!(f, "undefined"),
        }
    }
}

impl Serialize for Val {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Val::Int(v) => match v.to_i64() {
                Some(k) => s.serialize_i64(k),
                None => s.serialize_str(&v.to_string()),
            },
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Disagree,
    /// The closed form is undefined at these parameters.
    FormulaDomainExcluded,
    /// A series builder raised a division error.
    BuilderError,
}

/// Ordered parameter list, serialized as a JSON object in this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params(pub Vec<(&'static str, i64)>);

impl Params {
    pub fn get(&self, key: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Params,
    pub tableau: Option<Val>,
    pub path: Option<Val>,
    pub series: Option<Val>,
    pub formula: Option<Val>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn new(check: &str, params: Params) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            tableau: None,
            path: None,
            series: None,
            formula: None,
            status: Status::Agree,
            note: None,
        }
    }

    /// Set the status from the values present; a formula error becomes an
    /// exclusion (domain) or a disagreement (anything else).
    fn settle(mut self, formula: Result<Val, Error>) -> Self {
        match formula {
            Ok(v) => self.formula = Some(v),
            Err(Error::Domain(msg)) => {
                self.status = Status::FormulaDomainExcluded;
                self.note = Some(msg);
                return self;
            }
            Err(e) => {
                self.formula = Some(Val::Text(e.to_string()));
            }
        }
        self.compare()
    }

    /// Agree iff all present values are equal.
    fn compare(mut self) -> Self {
        let vals: Vec<&Val> = [&self.tableau, &self.path, &self.series, &self.formula].into_iter().flatten().collect();
        let agree = vals.windows(2).all(|w| w[0] == w[1]);
        self.status = if agree { Status::Agree } else { Status::Disagree };
        if !agree {
            self.note = documented_edge(&self.check, &self.params).map(str::to_string);
        }
        self
    }

    fn builder_error(mut self, err: Error) -> Self {
        self.status = Status::BuilderError;
        self.note = Some(err.to_string());
        self
    }

    /// A disagreement listed in [`documented_edge`].
    pub fn is_documented(&self) -> bool {
        self.status == Status::Disagree && documented_edge(&self.check, &self.params).is_some()
    }

    /// Fails the run: an undocumented disagreement or a builder error.
    pub fn is_failure(&self) -> bool {
        match self.status {
            Status::Disagree => !self.is_documented(),
            Status::BuilderError => true,
            _ => false,
        }
    }
}

/// Known disagreements between a closed form and the enumerations, with the
/// reason. Anything else that disagrees is a failure.
pub fn documented_edge(check: &str, p: &Params) -> Option<&'static str> {
    let n = p.get("n").unwrap_or(0);
    let t = p.get("t").unwrap_or(0);
    let f = p.get("f").unwrap_or(0);
    match check {
        "cor4" if n == 1 && t <= 1 => Some("n = 1: binomials with negative upper index read as 0"),
        "thm5" if n == 2 && t <= 1 => Some("n = 2: binom(n-3, t-2) with negative upper index read as 0"),
        "lemma17" if n == 2 && t == 0 => Some("n = 2: binom(-1, 0) read as 0"),
        "thm6-printed" | "thm7-printed" if 1 <= t && t < f => Some("printed form is wrong for 1 <= t < f"),
        "lemma20-printed" | "lemma30-printed" if t >= 1 => Some("printed form drops the t-dependence"),
        _ => None,
    }
}

/// Theorem-level check identifiers.
pub const THEOREM_CHECKS: [&str; 7] = ["thm1", "cor2", "cor3", "cor4", "thm5", "thm6", "thm7"];

/// Parameter bounds for a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    /// Largest `n` for the brute-force enumerations.
    pub oracle_max_n: usize,
    /// Largest `n` for series-versus-formula comparisons and the lemma registry.
    pub series_max_n: usize,
    /// Truncation order for the series-engine self-checks (0 skips them).
    pub engine_order: usize,
    pub t_max: usize,
    pub f_max: usize,
    pub parallel: bool,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { oracle_max_n: 8, series_max_n: 12, engine_order: 20, t_max: 3, f_max: 3, parallel: true }
    }
}

impl Grid {
    /// Every bound set to `max_n`.
    pub fn up_to(max_n: usize) -> Self {
        Grid { oracle_max_n: max_n, series_max_n: max_n, engine_order: max_n, ..Self::default() }
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    fn max_n(&self) -> usize {
        self.oracle_max_n.max(self.series_max_n)
    }
}

/// Refined tuples `(c, d, e)` for which a tableau shape can carry the entry
/// counts: `f <= e + t`, no surplus in an empty row.
pub fn feasible_weights(n: usize, f: usize, t: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for e in 0..=(n + f) {
        if e + t < f {
            continue;
        }
        for c in 0..=n {
            let Some(d) = (n + f).checked_sub(t + c + 2 * e) else { continue };
            if (e + t == f && c > 0) || (e == 0 && d > 0) {
                continue;
            }
            out.push((c, d, e));
        }
    }
    out
}

/// Brute-force histograms for one `(n, f, t)`.
struct Oracles {
    /// `(c, d, e)` -> tableau count
    tableaux: HashMap<(usize, usize, usize), u64>,
    /// `(c, d, e)` -> admissible path count
    paths: HashMap<(usize, usize, usize), u64>,
}

impl Oracles {
    fn compute(n: usize, f: usize, t: usize) -> Self {
        let mut tableaux = HashMap::new();
        for e in 0..=(n + f) {
            let Ok(shape) = TwoRowShape::new(e, t, f) else { continue };
            if shape.cell_count() > n || shape.cell_count() == 0 {
                continue;
            }
            for tab in enumerate_tableaux(shape, n, None).expect("n >= 1") {
                *tableaux.entry(tab.weight()).or_insert(0) += 1;
            }
        }
        let mut paths = HashMap::new();
        for p in enumerate_paths(n, f, t, None) {
            *paths.entry(p.weight()).or_insert(0) += 1;
        }
        Oracles { tableaux, paths }
    }

    fn sum_where(map: &HashMap<(usize, usize, usize), u64>, keep: impl Fn(usize, usize, usize) -> bool) -> u64 {
        map.iter().filter(|(&(c, d, e), _)| keep(c, d, e)).map(|(_, v)| v).sum()
    }

    fn mean_e(map: &HashMap<(usize, usize, usize), u64>) -> Option<BigRational> {
        let total: u64 = map.values().sum();
        let weighted: u64 = map.iter().map(|(&(_, _, e), v)| e as u64 * v).sum();
        (total > 0).then(|| BigRational::new(weighted.into(), total.into()))
    }
}

fn poly_sum_where(p: &MultiPoly, keep: impl Fn(u32, u32, u32) -> bool) -> BigInt {
    p.terms().filter(|(&(a, b, c), _)| keep(a, b, c)).map(|(_, v)| v.clone()).sum()
}

fn ints(v: usize) -> i64 {
    v as i64
}

/// Which checks a block should emit.
#[derive(Clone)]
struct Wanted(Option<Vec<String>>);

impl Wanted {
    fn has(&self, id: &str) -> bool {
        self.0.as_ref().is_none_or(|ids| ids.iter().any(|s| s == id))
    }
}

/// All theorem-level reports for one `(f, t)` over `1 <= n <= grid.max_n()`.
fn theorem_block(grid: &Grid, builder: &Builder, f: usize, t: usize, wanted: &Wanted) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let order = builder.order();
    let series = if f == 0 { builder.gf_straight(t) } else { builder.gf_skew(f, t) };
    let expect = if f == 0 && wanted.has("thm5") { expected_downsteps_series(t, order).ok() } else { None };

    for n in 1..=grid.max_n() {
        let oracle = (n <= grid.oracle_max_n).then(|| Oracles::compute(n, f, t));
        let coeff = match &series {
            Ok(s) if n <= grid.series_max_n && n <= order => Some(Ok(s.coeff(n).expect("n <= order").clone())),
            Ok(_) => None,
            Err(e) => Some(Err(e.clone())),
        };
        let tab = |keep: &dyn Fn(usize, usize, usize) -> bool| {
            oracle.as_ref().map(|o| Val::int(Oracles::sum_where(&o.tableaux, keep)))
        };
        let pth = |keep: &dyn Fn(usize, usize, usize) -> bool| {
            oracle.as_ref().map(|o| Val::int(Oracles::sum_where(&o.paths, keep)))
        };
        let ser = |keep: &dyn Fn(u32, u32, u32) -> bool| -> Option<Result<Val, Error>> {
            coeff.as_ref().map(|c| c.as_ref().map(|p| Val::int(poly_sum_where(p, keep))).map_err(Clone::clone))
        };
        if oracle.is_none() && coeff.is_none() {
            continue;
        }
        let mut emit = |mut r: CheckReport, s: Option<Result<Val, Error>>, formula: Result<Val, Error>| match s {
            Some(Err(e)) => out.push(r.builder_error(e)),
            other => {
                r.series = other.map(Result::unwrap);
                out.push(r.settle(formula));
            }
        };

        // refined counts
        let refined_id = if f == 0 { "thm1" } else { "thm6" };
        if wanted.has(refined_id) || (f > 0 && t < f && wanted.has("thm6-printed")) {
            for (c, d, e) in feasible_weights(n, f, t) {
                let params = if f == 0 {
                    Params(vec![("n", ints(n)), ("t", ints(t)), ("c", ints(c)), ("d", ints(d)), ("e", ints(e))])
                } else {
                    Params(vec![
                        ("n", ints(n)),
                        ("f", ints(f)),
                        ("t", ints(t)),
                        ("c", ints(c)),
                        ("d", ints(d)),
                        ("e", ints(e)),
                    ])
                };
                let is = move |cc: usize, dd: usize, ee: usize| (cc, dd, ee) == (c, d, e);
                let is_poly = move |a: u32, b: u32, k: u32| (a as usize, b as usize, k as usize) == (c, d, e);
                let mk = |id: &str| {
                    let mut r = CheckReport::new(id, params.clone());
                    r.tableau = tab(&is);
                    r.path = pth(&is);
                    r
                };
                if wanted.has(refined_id) {
                    let formula = if f == 0 {
                        formulas::count_thm1(n, t, c, d, e)
                    } else {
                        formulas::count_thm6(n, f, t, c, d, e)
                    };
                    emit(mk(refined_id), ser(&is_poly), formula.map(Val::Int));
                }
                if f > 0 && t < f && wanted.has("thm6-printed") {
                    let formula = formulas::count_thm6_printed(n, f, t, c, d, e).map(Val::Int);
                    emit(mk("thm6-printed"), ser(&is_poly), formula);
                }
            }
        }

        let all = |_: usize, _: usize, _: usize| true;
        let all_poly = |_: u32, _: u32, _: u32| true;
        if f == 0 {
            let tt = t;
            if wanted.has("cor2") {
                for e in 0..=n.saturating_sub(t) / 2 {
                    let mut r = CheckReport::new("cor2", Params(vec![("n", ints(n)), ("t", ints(t)), ("e", ints(e))]));
                    r.tableau = tab(&|_, _, ee| ee == e);
                    r.path = pth(&|_, _, ee| ee == e);
                    emit(r, ser(&|_, _, k| k as usize == e), formulas::count_cor2(n, t, e).map(Val::Int));
                }
            }
            if wanted.has("cor3") {
                for m in 1..=n {
                    let mut r = CheckReport::new("cor3", Params(vec![("n", ints(n)), ("t", ints(t)), ("m", ints(m))]));
                    r.tableau = tab(&|c, _, e| c + e + tt == m);
                    r.path = pth(&|c, _, e| c + e + tt == m);
                    let s = ser(&|a, _, k| (a + k) as usize + tt == m);
                    emit(r, s, formulas::count_cor3(n, t, m).map(Val::Int));
                }
            }
            if wanted.has("cor4") {
                let mut r = CheckReport::new("cor4", Params(vec![("n", ints(n)), ("t", ints(t))]));
                r.tableau = tab(&all);
                r.path = pth(&all);
                emit(r, ser(&all_poly), formulas::count_cor4(n, t).map(Val::Int));
            }
            if wanted.has("thm5") && n >= 2 {
                let mut r = CheckReport::new("thm5", Params(vec![("n", ints(n)), ("t", ints(t))]));
                r.tableau = oracle.as_ref().map(|o| Val::ratio(Oracles::mean_e(&o.tableaux)));
                r.path = oracle.as_ref().map(|o| Val::ratio(Oracles::mean_e(&o.paths)));
                let s = match (&series, &expect) {
                    (Err(e), _) => Some(Err(e.clone())),
                    (Ok(_), Some(ex)) if n <= grid.series_max_n && n < ex.len() => Some(Ok(Val::ratio(ex[n].clone()))),
                    _ => None,
                };
                emit(r, s, formulas::expected_thm5(n, t).map(Val::ratio));
            }
        } else {
            let params = Params(vec![("n", ints(n)), ("f", ints(f)), ("t", ints(t))]);
            for (id, formula) in [
                ("thm7", formulas::count_thm7(n, f, t)),
                ("thm7-printed", formulas::count_thm7_printed(n, f, t)),
            ] {
                if !wanted.has(id) || (id == "thm7-printed" && t >= f) {
                    continue;
                }
                let mut r = CheckReport::new(id, params.clone());
                r.tableau = tab(&all);
                r.path = pth(&all);
                emit(r, ser(&all_poly), formula.map(Val::Int));
            }
            if f == t && wanted.has("remark") {
                // the t = f closed form against the general one and the enumerations
                let mut r = CheckReport::new("remark", params.clone());
                r.tableau = tab(&all);
                r.path = pth(&all);
                let general = formulas::count_thm7(n, f, t).map(Val::Int).ok();
                emit(r, general.map(Ok), formulas::remark_1_10(n, t).map(Val::Int));
            }
        }
    }
    out
}

fn lemma_block(grid: &Grid, builders: &Builders, lemma: &Lemma, f: usize, t: usize) -> Vec<CheckReport> {
    let params = |n: usize| Params(vec![("n", ints(n)), ("f", ints(f)), ("t", ints(t))]);
    let series = builders.lhs(lemma, f, t);
    let mut out = Vec::new();
    for n in 1..=grid.series_max_n.min(builders.order()) {
        let r = CheckReport::new(lemma.id, params(n));
        match &series {
            Err(e) => out.push(r.builder_error(e.clone())),
            Ok(s) => {
                let lhs = lhs_coefficient(s, lemma.mode, n).expect("n <= order");
                let rhs = lemma.rhs(n, f, t);
                let as_val = |side: &lemmas::Rhs| match side {
                    lemmas::Rhs::Int(v) => Val::Int(v.clone()),
                    other => other.as_poly().map_or_else(|| Val::Text(other.to_string()), Val::Poly),
                };
                let mut r = r;
                r.series = Some(as_val(&lhs));
                out.push(r.settle(Ok(as_val(&rhs))));
            }
        }
    }
    out
}

fn weight_poly(weights: impl Iterator<Item = (usize, usize, usize)>) -> MultiPoly {
    weights.map(|(c, d, e)| ((c as u32, d as u32, e as u32), BigInt::one())).collect()
}

/// Self-checks of the series engine at `grid.engine_order`, plus `[z^n] M`
/// and `[z^n] M0` against the unconstrained path weight sums.
fn engine_block(grid: &Grid) -> Vec<CheckReport> {
    let order = grid.engine_order;
    let mut out = Vec::new();
    if order == 0 {
        return out;
    }
    let m = solve_m(order);
    let params = Params(vec![("order", ints(order))]);
    let x = MultiPoly::x();
    let y = MultiPoly::y();
    let a = MultiPoly::alpha();
    let one = ZSeries::one(order);
    let zm = m.shift(1);

    let status_of = |check: &str, mismatch: Option<usize>| {
        let mut r = CheckReport::new(check, params.clone());
        r.series = Some(Val::Text(match mismatch {
            None => "zero residual".into(),
            Some(k) => format!("first mismatch at z^{k}"),
        }));
        r.status = if mismatch.is_none() { Status::Agree } else { Status::Disagree };
        r
    };

    let rhs = &(&one + &zm.scale(&(&x + &y))) + &(&m * &m).shift(2).scale(&a);
    out.push(status_of("m-equation", first_difference(&m, &rhs)));

    let az2m = m.shift(2).scale(&a);
    let lhs_x = &m * &(&(&one - &ZSeries::z(order).scale(&x)) - &az2m);
    out.push(status_of("m-identity-x", first_difference(&lhs_x, &(&one + &zm.scale(&y)))));
    let lhs_y = &m * &(&(&one - &ZSeries::z(order).scale(&y)) - &az2m);
    out.push(status_of("m-identity-y", first_difference(&lhs_y, &(&one + &zm.scale(&x)))));
    let lhs3 = &one - &(&(&one - &ZSeries::z(order).scale(&x)) * &m);
    let rhs3 = -&(&zm * &(&ZSeries::constant(y.clone(), order) + &zm.scale(&a)));
    out.push(status_of("m-identity-diff", first_difference(&lhs3, &rhs3)));

    out.push(status_of("reversion", reversion_mismatch(&m)));

    let m0 = solve_m0(&m);
    for n in 0..=grid.oracle_max_n.min(order) {
        for (check, series, umber) in [("m-paths", &m, true), ("m0-paths", &m0, false)] {
            let mut r = CheckReport::new(check, Params(vec![("n", ints(n))]));
            r.path = Some(Val::Poly(weight_poly(enumerate_motzkin(n, umber).map(|p| p.weight()))));
            r.series = Some(Val::Poly(series.coeff(n).expect("n <= order").clone()));
            out.push(r.compare());
        }
    }
    out
}

fn helper_identity_block(max_m: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        for k in 0..=m {
            let mut r = CheckReport::new("alt-binomial", Params(vec![("K", ints(k)), ("M", ints(m))]));
            r.series = Some(Val::Int(formulas::alternating_binomial_sum(k, m)));
            out.push(r.settle(Ok(Val::Int(formulas::binom_poly(m as i64 - 1, k as i64)))));
        }
    }
    out
}

enum Task<'a> {
    Theorem { f: usize, t: usize },
    Lemma { lemma: &'a Lemma, f: usize, t: usize },
    Engine,
    Identity,
}

fn check_rank(check: &str) -> usize {
    const ORDER: [&str; 11] =
        ["thm1", "cor2", "cor3", "cor4", "thm5", "thm6", "thm6-printed", "thm7", "thm7-printed", "remark", "alt-binomial"];
    ORDER.iter().position(|c| *c == check).unwrap_or(ORDER.len())
}

fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        (check_rank(&a.check), &a.check, &a.params).cmp(&(check_rank(&b.check), &b.check, &b.params))
    });
}

fn run_tasks(grid: &Grid, wanted: &Wanted, include_lemmas: bool, include_misc: bool) -> Vec<CheckReport> {
    let max_n = grid.max_n();
    if max_n == 0 {
        return Vec::new();
    }
    let builder = Builder::new(grid.series_max_n);
    let builders = include_lemmas.then(|| Builders::new(grid.series_max_n));
    let registry: Vec<Lemma> = lemmas::registry().into_iter().chain(lemmas::printed_variants()).collect();

    let mut tasks = Vec::new();
    for f in 0..=grid.f_max {
        for t in 0..=grid.t_max {
            tasks.push(Task::Theorem { f, t });
        }
    }
    if include_lemmas {
        for lemma in registry.iter().filter(|l| wanted.has(l.id)) {
            for (f, t) in lemma.params(grid.t_max, grid.f_max) {
                tasks.push(Task::Lemma { lemma, f, t });
            }
        }
    }
    if include_misc {
        tasks.push(Task::Engine);
        tasks.push(Task::Identity);
    }

    let run = |task: &Task| -> Vec<CheckReport> {
        match *task {
            Task::Theorem { f, t } => theorem_block(grid, &builder, f, t, wanted),
            Task::Lemma { lemma, f, t } => lemma_block(grid, builders.as_ref().expect("built"), lemma, f, t),
            Task::Engine => engine_block(grid),
            Task::Identity => helper_identity_block(12),
        }
    };
    let mut reports: Vec<CheckReport> = if grid.parallel {
        tasks.par_iter().flat_map_iter(&run).collect()
    } else {
        tasks.iter().flat_map(run).collect()
    };
    sort_reports(&mut reports);
    reports
}

/// Reports for one theorem-level check (`thm1`, `cor2`, ..., `thm7`, or one
/// of `thm6-printed`, `thm7-printed`, `remark`) over the grid.
pub fn check_theorem(id: &str, grid: &Grid) -> Vec<CheckReport> {
    run_tasks(grid, &Wanted(Some(vec![id.to_string()])), false, false)
}

/// Reports for one registry entry (`"lemma13"` or `"13"`) at `n`, for every
/// `(f, t)` pair it is stated for, using series truncated at `order`.
pub fn check_lemma(id: &str, n: usize, order: usize) -> Option<Vec<CheckReport>> {
    let lemma = lemmas::lookup(id)?;
    let builders = Builders::new(order.max(n));
    let grid = Grid { series_max_n: n, ..Grid::default() };
    let mut out: Vec<CheckReport> = lemma
        .params(grid.t_max, grid.f_max)
        .into_iter()
        .flat_map(|(f, t)| lemma_block(&grid, &builders, &lemma, f, t))
        .filter(|r| r.params.get("n") == Some(n as i64))
        .collect();
    sort_reports(&mut out);
    Some(out)
}

/// Reports for every registry entry over `1 <= n <= grid.series_max_n`.
pub fn check_lemmas(grid: &Grid) -> Vec<CheckReport> {
    let ids: Vec<String> = lemmas::registry().iter().map(|l| l.id.to_string()).collect();
    let wanted = Wanted(Some(ids));
    let mut reports = run_tasks(&Grid { f_max: grid.f_max, ..grid.clone() }, &wanted, true, false);
    reports.retain(|r| r.check.starts_with("lemma"));
    reports
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub agree: usize,
    pub disagree_documented: usize,
    pub disagree_undocumented: usize,
    pub excluded: usize,
    pub builder_errors: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub totals: Counts,
    pub per_check: BTreeMap<String, Counts>,
    /// `check(params): reason` for every documented disagreement and exclusion.
    pub exclusions: Vec<String>,
    /// `check(params)` for every failure.
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Summary {
    pub fn from_reports(reports: &[CheckReport], elapsed: Duration) -> Self {
        let mut s = Summary { total: reports.len(), elapsed, ..Default::default() };
        for r in reports {
            let slot = s.per_check.entry(r.check.clone()).or_default();
            let label = format!("{}({})", r.check, r.params);
            for counts in [&mut *slot, &mut s.totals] {
                match r.status {
                    Status::Agree => counts.agree += 1,
                    Status::Disagree if r.is_documented() => counts.disagree_documented += 1,
                    Status::Disagree => counts.disagree_undocumented += 1,
                    Status::FormulaDomainExcluded => counts.excluded += 1,
                    Status::BuilderError => counts.builder_errors += 1,
                }
            }
            if r.is_failure() {
                s.failures.push(label);
            } else if r.status != Status::Agree {
                s.exclusions.push(format!("{label}: {}", r.note.as_deref().unwrap_or("")));
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Human-readable table, one row per check.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<18} {:>7} {:>10} {:>12} {:>8} {:>8}\n",
            "check", "agree", "documented", "undocumented", "excluded", "builder"
        );
        for (check, c) in &self.per_check {
            out += &format!(
                "{:<18} {:>7} {:>10} {:>12} {:>8} {:>8}\n",
                check, c.agree, c.disagree_documented, c.disagree_undocumented, c.excluded, c.builder_errors
            );
        }
        out += &format!("total {} reports, {} failures\n", self.total, self.failures.len());
        out
    }
}

/// Run every check on the grid; returns the sorted reports and a summary.
pub fn run_all(grid: &Grid) -> (Vec<CheckReport>, Summary) {
    let start = Instant::now();
    let reports = run_tasks(grid, &Wanted(None), true, true);
    let summary = Summary::from_reports(&reports, start.elapsed());
    (reports, summary)
}

/// Run every check and write the reports as a JSON array to `sink`.
pub fn run_all_to(grid: &Grid, sink: &mut dyn Write) -> std::io::Result<Summary> {
    let (reports, summary) = run_all(grid);
    write_report(&reports, sink)?;
    Ok(summary)
}

pub fn write_report(reports: &[CheckReport], sink: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *sink, reports)?;
    writeln!(sink)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasibility_rule() {
        // row 2 empty: no denim surplus
        assert!(!feasible_weights(2, 0, 1).contains(&(0, 1, 0)));
        assert!(feasible_weights(2, 0, 1).contains(&(1, 0, 0)));
        // row 1 empty (e + t = f): no umber surplus
        assert!(!feasible_weights(3, 2, 1).contains(&(1, 1, 1)));
        assert!(feasible_weights(3, 2, 1).contains(&(0, 2, 1)));
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let grid = Grid { oracle_max_n: 4, series_max_n: 5, engine_order: 6, ..Grid::default() };
        let (a, sa) = run_all(&grid);
        let (b, _) = run_all(&grid.clone().sequential());
        assert_eq!(a, b);
        assert!(sa.passed(), "{:?}", sa.failures);
        assert!(sa.exclusions.iter().any(|e| e.starts_with("cor4(n=1,t=1)")));
        assert!(sa.exclusions.iter().any(|e| e.starts_with("cor3(n=1,")));
    }

    #[test]
    fn empty_grid() {
        let (reports, summary) = run_all(&Grid::up_to(0));
        assert!(reports.is_empty());
        assert_eq!(summary.total, 0);
        assert!(summary.passed());
    }

    #[test]
    fn report_json_layout() {
        let reports = check_theorem("thm7", &Grid { oracle_max_n: 3, series_max_n: 3, f_max: 1, t_max: 1, ..Grid::default() });
        let r = reports.iter().find(|r| r.params.0 == vec![("n", 3), ("f", 1), ("t", 1)]).unwrap();
        let json = serde_json::to_string(r).unwrap();
        assert_eq!(
            json,
            r#"{"check":"thm7","params":{"n":3,"f":1,"t":1},"tableau":6,"path":6,"series":6,"formula":6,"status":"agree"}"#
        );
    }

    #[test]
    fn single_lemma() {
        let reports = check_lemma("13", 6, 6).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.status == Status::Agree));
    }
}
