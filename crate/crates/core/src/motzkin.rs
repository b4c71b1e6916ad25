//! Two-coloured Motzkin paths with arbitrary start and end heights.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColouredStep {
    Up,
    Down,
    HorUmber,
    HorDenim,
}

impl ColouredStep {
    pub const ALL: [ColouredStep; 4] = [Self::Up, Self::Down, Self::HorUmber, Self::HorDenim];

    pub fn letter(self) -> char {
        match self {
            Self::Up => 'U',
            Self::Down => 'D',
            Self::HorUmber => 'u',
            Self::HorDenim => 'd',
        }
    }

    pub fn from_letter(ch: char) -> Option<Self> {
        match ch {
            'U' => Some(Self::Up),
            'D' => Some(Self::Down),
            'u' => Some(Self::HorUmber),
            'd' => Some(Self::HorDenim),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColouredPath {
    start_height: usize,
    steps: Vec<ColouredStep>,
}

/// Running state of a path prefix; shared by the checker and the enumerators.
#[derive(Debug, Clone, Copy, Default)]
struct Prefix {
    height: usize,
    seen_up: bool,
    seen_down: bool,
}

impl Prefix {
    fn start(height: usize) -> Self {
        Prefix { height, ..Default::default() }
    }

    /// Apply `step` under the colour `rules`; `None` if the step is forbidden.
    fn step(self, step: ColouredStep, rules: Rules) -> Option<Prefix> {
        let h = self.height;
        let mut next = self;
        match step {
            ColouredStep::Up => {
                next.height = h + 1;
                next.seen_up = true;
            }
            ColouredStep::Down => {
                next.height = h.checked_sub(1)?;
                next.seen_down = true;
            }
            ColouredStep::HorUmber => match rules {
                Rules::Admissible if !self.seen_up || h == 0 => return None,
                Rules::Unconstrained { umber_on_axis: false } if h == 0 => return None,
                _ => {}
            },
            ColouredStep::HorDenim => {
                if rules == Rules::Admissible && !self.seen_down {
                    return None;
                }
            }
        }
        Some(next)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rules {
    Admissible,
    Unconstrained { umber_on_axis: bool },
}

impl ColouredPath {
    pub fn new(start_height: usize, steps: Vec<ColouredStep>) -> Self {
        ColouredPath { start_height, steps }
    }

    pub fn start_height(&self) -> usize {
        self.start_height
    }

    pub fn steps(&self) -> &[ColouredStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `start + #Up - #Down`; may be negative for paths that dip below the axis.
    pub fn end_height(&self) -> i64 {
        self.steps.iter().fold(self.start_height as i64, |h, s| match s {
            ColouredStep::Up => h + 1,
            ColouredStep::Down => h - 1,
            _ => h,
        })
    }

    pub fn count(&self, step: ColouredStep) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// `(c, d, e)` = (#umber, #denim, #down): exponents of `x^c y^d alpha^e`.
    pub fn weight(&self) -> (usize, usize, usize) {
        (self.count(ColouredStep::HorUmber), self.count(ColouredStep::HorDenim), self.count(ColouredStep::Down))
    }

    pub fn is_admissible(&self) -> bool {
        self.walk(Rules::Admissible)
    }

    /// Never below the axis; no colour constraints (optionally no umber on the axis).
    pub fn is_motzkin(&self, umber_on_axis: bool) -> bool {
        self.walk(Rules::Unconstrained { umber_on_axis })
    }

    fn walk(&self, rules: Rules) -> bool {
        let mut state = Prefix::start(self.start_height);
        for &s in &self.steps {
            match state.step(s, rules) {
                Some(next) => state = next,
                None => return false,
            }
        }
        true
    }
}

impl fmt::Display for ColouredPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start_height)?;
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for ColouredPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected HEIGHT:STEPS, got {s:?}")))?;
        let start = head
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad start height {head:?}")))?;
        let steps = body
            .trim()
            .chars()
            .map(|ch| ColouredStep::from_letter(ch).ok_or_else(|| Error::Parse(format!("bad step letter {ch:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(ColouredPath::new(start, steps))
    }
}

/// Depth-first generator over `{U, D, u, d}^n`, pruned by a prefix-closed
/// step rule. Emits in lexicographic order of step tags.
pub struct Paths {
    n: usize,
    start: usize,
    end: usize,
    rules: Rules,
    filter: Option<(usize, usize, usize)>,
    steps: Vec<ColouredStep>,
    states: Vec<Prefix>,
    next: Vec<usize>,
    counts: (usize, usize, usize),
    done: bool,
}

impl Paths {
    fn new(n: usize, start: usize, end: usize, rules: Rules, filter: Option<(usize, usize, usize)>) -> Self {
        Paths {
            n,
            start,
            end,
            rules,
            filter,
            steps: Vec::with_capacity(n),
            states: vec![Prefix::start(start)],
            next: vec![0; n + 1],
            counts: (0, 0, 0),
            done: false,
        }
    }

    fn bump(&mut self, step: ColouredStep, up: bool) {
        let slot = match step {
            ColouredStep::HorUmber => &mut self.counts.0,
            ColouredStep::HorDenim => &mut self.counts.1,
            ColouredStep::Down => &mut self.counts.2,
            ColouredStep::Up => return,
        };
        if up {
            *slot += 1;
        } else {
            *slot -= 1;
        }
    }

    fn within_filter(&self) -> bool {
        match self.filter {
            Some((c, d, e)) => self.counts.0 <= c && self.counts.1 <= d && self.counts.2 <= e,
            None => true,
        }
    }

    fn pop(&mut self) {
        if let Some(s) = self.steps.pop() {
            self.states.pop();
            self.bump(s, false);
        }
    }
}

impl Iterator for Paths {
    type Item = ColouredPath;

    fn next(&mut self) -> Option<ColouredPath> {
        while !self.done {
            let depth = self.steps.len();
            if depth == self.n {
                let hit = self.states[depth].height == self.end
                    && self.filter.is_none_or(|f| f == self.counts);
                let path = hit.then(|| ColouredPath::new(self.start, self.steps.clone()));
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                if path.is_some() {
                    return path;
                }
                continue;
            }
            let remaining = self.n - depth - 1;
            let state = self.states[depth];
            let mut advanced = false;
            while self.next[depth] < 4 {
                let step = ColouredStep::ALL[self.next[depth]];
                self.next[depth] += 1;
                let Some(after) = state.step(step, self.rules) else { continue };
                if after.height.abs_diff(self.end) > remaining {
                    continue;
                }
                self.steps.push(step);
                self.states.push(after);
                self.bump(step, true);
                if !self.within_filter() {
                    self.pop();
                    continue;
                }
                self.next[depth + 1] = 0;
                advanced = true;
                break;
            }
            if !advanced {
                if depth == 0 {
                    self.done = true;
                } else {
                    self.next[depth] = 4;
                    self.pop();
                }
            }
        }
        None
    }
}

/// Admissible paths of length `n` from height `f` to height `t`, optionally
/// restricted to weight `(c, d, e)`.
pub fn enumerate_paths(n: usize, f: usize, t: usize, cde_filter: Option<(usize, usize, usize)>) -> Paths {
    Paths::new(n, f, t, Rules::Admissible, cde_filter)
}

pub fn count_paths(n: usize, f: usize, t: usize, cde_filter: Option<(usize, usize, usize)>) -> u64 {
    enumerate_paths(n, f, t, cde_filter).count() as u64
}

/// Two-coloured Motzkin paths from the axis back to the axis with no colour
/// constraints; with `umber_on_axis = false`, umber steps at height 0 are
/// excluded.
pub fn enumerate_motzkin(n: usize, umber_on_axis: bool) -> Paths {
    Paths::new(n, 0, 0, Rules::Unconstrained { umber_on_axis }, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ColouredStep::*;

    fn path(s: &str) -> ColouredPath {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(ColouredPath::new(0, vec![Up, Down]).is_admissible());
        assert!(!ColouredPath::new(0, vec![HorDenim, Up, Down]).is_admissible());
        assert!(!ColouredPath::new(1, vec![Down, HorUmber, Up]).is_admissible());
        assert!(ColouredPath::new(1, vec![Down, Up, HorUmber]).is_admissible());
        assert!(!path("0:D").is_admissible());
        assert!(path("3:").is_admissible());
    }

    #[test]
    fn weights() {
        assert_eq!(path("0:UD").weight(), (0, 0, 1));
        assert_eq!(path("2:DDUudddUD").weight(), (1, 3, 3));
        assert_eq!(path("1:u").weight(), (1, 0, 0));
        assert!(!path("1:u").is_admissible());
    }

    #[test]
    fn text_round_trip() {
        let p = ColouredPath::new(2, vec![Down, Down, Up, HorUmber, HorDenim, HorDenim, HorDenim, Up, Down]);
        assert_eq!(p.to_string(), "2:DDUudddUD");
        assert_eq!(path("2:DDUudddUD"), p);
        assert!("2DDU".parse::<ColouredPath>().is_err());
        assert!("2:DDx".parse::<ColouredPath>().is_err());
        assert!("-1:U".parse::<ColouredPath>().is_err());
    }

    #[test]
    fn counts() {
        let all: Vec<_> = enumerate_paths(2, 0, 0, None).collect();
        assert_eq!(all, vec![path("0:UD")]);
        assert_eq!(count_paths(3, 1, 1, None), 6);
        assert_eq!(count_paths(1, 0, 1, None), 1);
        assert_eq!(count_paths(0, 2, 2, None), 1);
        assert_eq!(count_paths(0, 2, 1, None), 0);
        assert_eq!(count_paths(3, 1, 1, Some((1, 0, 1))), 3);
    }

    fn literal(n: usize, f: usize, t: usize) -> Vec<ColouredPath> {
        let mut out = Vec::new();
        for code in 0..4usize.pow(n as u32) {
            let mut steps = Vec::with_capacity(n);
            let mut rest = code;
            for _ in 0..n {
                steps.push(ALL_REV[rest % 4]);
                rest /= 4;
            }
            steps.reverse();
            let p = ColouredPath::new(f, steps);
            if p.is_admissible() && p.end_height() == t as i64 {
                out.push(p);
            }
        }
        out
    }

    const ALL_REV: [ColouredStep; 4] = ColouredStep::ALL;

    #[test]
    fn pruned_matches_literal_filter() {
        for n in 0..=6 {
            for f in 0..=2 {
                for t in 0..=2 {
                    assert_eq!(enumerate_paths(n, f, t, None).collect::<Vec<_>>(), literal(n, f, t));
                }
            }
        }
    }

    #[test]
    fn motzkin_counts() {
        // weights at x = y = alpha = 1: 1, 2, 5, 14, 42 (Catalan shifted)
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_motzkin(n, true).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42]);
        let counts0: Vec<usize> = (0..=3).map(|n| enumerate_motzkin(n, false).count()).collect();
        assert_eq!(counts0, vec![1, 1, 2, 5]);
    }
}
