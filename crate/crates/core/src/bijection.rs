//! Tableaux of shape `(e+t, e)/(f, 0)` with `n` entries correspond to
//! admissible paths of length `n` from height `f` to height `t`.
//!
//! Reading entries `1, ..., n` in order, a cell minimum in row 1 (row 2) is an
//! up (down) step, and any other entry of row 1 (row 2) is an umber (denim)
//! horizontal step.

use crate::error::{Error, Result};
use crate::motzkin::{ColouredPath, ColouredStep};
use crate::shapes::{SetValuedTableau, TwoRowShape};

pub fn tableau_to_path(tab: &SetValuedTableau) -> Result<ColouredPath> {
    if !tab.is_valid() {
        return Err(Error::InvalidTableau);
    }
    let steps = tab
        .entry_roles()
        .into_iter()
        .map(|(row, is_min)| match (row, is_min) {
            (1, true) => ColouredStep::Up,
            (1, false) => ColouredStep::HorUmber,
            (_, true) => ColouredStep::Down,
            (_, false) => ColouredStep::HorDenim,
        })
        .collect();
    Ok(ColouredPath::new(tab.shape().f(), steps))
}

pub fn path_to_tableau(path: &ColouredPath) -> Result<SetValuedTableau> {
    if path.is_empty() {
        return Err(Error::EmptyPath);
    }
    if !path.is_admissible() {
        return Err(Error::InadmissiblePath);
    }
    let f = path.start_height();
    let e = path.count(ColouredStep::Down);
    let end = path.end_height();
    let t = usize::try_from(end).map_err(|_| Error::InadmissiblePath)?;
    let shape = TwoRowShape::new(e, t, f)?;

    let mut row1: Vec<Vec<usize>> = Vec::with_capacity(shape.row1_len());
    let mut row2: Vec<Vec<usize>> = Vec::with_capacity(shape.row2_len());
    for (i, step) in path.steps().iter().enumerate() {
        let entry = i + 1;
        match step {
            ColouredStep::Up => row1.push(vec![entry]),
            ColouredStep::Down => row2.push(vec![entry]),
            ColouredStep::HorUmber => row1.last_mut().ok_or(Error::InadmissiblePath)?.push(entry),
            ColouredStep::HorDenim => row2.last_mut().ok_or(Error::InadmissiblePath)?.push(entry),
        }
    }
    row1.extend(row2);
    let tab = SetValuedTableau::new(shape, row1)?;
    debug_assert!(tab.is_valid());
    Ok(tab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motzkin::enumerate_paths;
    use crate::shapes::enumerate_tableaux;

    fn tableau(e: usize, t: usize, f: usize, content: Vec<Vec<usize>>) -> SetValuedTableau {
        SetValuedTableau::new(TwoRowShape::new(e, t, f).unwrap(), content).unwrap()
    }

    fn figure() -> SetValuedTableau {
        tableau(3, 1, 2, vec![vec![3, 4], vec![8], vec![1], vec![2, 5, 6, 7], vec![9]])
    }

    #[test]
    fn worked_example() {
        let p = tableau_to_path(&figure()).unwrap();
        assert_eq!(p.to_string(), "2:DDUudddUD");
        assert_eq!(path_to_tableau(&p).unwrap(), figure());
    }

    #[test]
    fn small_cases() {
        let p = tableau_to_path(&tableau(1, 0, 0, vec![vec![1], vec![2]])).unwrap();
        assert_eq!(p.to_string(), "0:UD");
        let p = tableau_to_path(&tableau(1, 0, 0, vec![vec![1, 2], vec![3, 4]])).unwrap();
        assert_eq!(p.to_string(), "0:UuDd");
        assert!(p.is_admissible());

        let back = path_to_tableau(&"1:DUu".parse().unwrap()).unwrap();
        assert_eq!(back, tableau(1, 1, 1, vec![vec![2, 3], vec![1]]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let bad = tableau(1, 0, 0, vec![vec![2], vec![1, 3]]);
        assert_eq!(tableau_to_path(&bad), Err(Error::InvalidTableau));
        assert_eq!(path_to_tableau(&"0:dUD".parse().unwrap()), Err(Error::InadmissiblePath));
        assert_eq!(path_to_tableau(&"0:".parse().unwrap()), Err(Error::EmptyPath));
    }

    #[test]
    fn round_trips_small() {
        for f in 0..=2 {
            for t in 0..=2 {
                for n in 1..=6 {
                    for p in enumerate_paths(n, f, t, None) {
                        let tab = path_to_tableau(&p).unwrap();
                        assert_eq!(tableau_to_path(&tab).unwrap(), p);
                    }
                }
            }
        }
        let shape = TwoRowShape::new(2, 1, 1).unwrap();
        for tab in enumerate_tableaux(shape, 7, None).unwrap() {
            let p = tableau_to_path(&tab).unwrap();
            assert!(p.is_admissible());
            assert_eq!(p.end_height(), 1);
            assert_eq!(path_to_tableau(&p).unwrap(), tab);
        }
    }
}
