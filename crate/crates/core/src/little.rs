//! The Little map.

use crate::bump::{little_bump, BumpTrace};
use crate::error::{Error, Result};
use crate::grassmannian::{grassmannian_data, grassmannian_tab, GrassmannianData};
use crate::perm::{Permutation, Word};
use crate::tableau::Tableau;
use crate::wiring::WiringDiagram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LittleMap {
    pub tableau: Tableau,
    pub traces: Vec<BumpTrace>,
    /// The Grassmannian word the bumps end on.
    pub grassmannian_word: Word,
    /// `None` when the word is empty.
    pub grassmannian: Option<GrassmannianData>,
}

/// The lexicographically last inversion `(i, j)`: largest `i`, then largest
/// `j`.
pub fn last_inversion(perm: &Permutation) -> Option<(usize, usize)> {
    let v = perm.as_slice();
    let n = v.len();
    (0..n).rev().find_map(|i| {
        (i + 1..n)
            .rev()
            .find(|&j| v[i] > v[j])
            .map(|j| (i + 1, j + 1))
    })
}

/// The crossing at which the Little map bumps next, or `None` when the
/// word is already Grassmannian (or empty).
pub fn canonical_start(word: &Word) -> Result<Option<usize>> {
    word.ensure_reduced()?;
    let diagram = WiringDiagram::new(word);
    let perm = diagram.final_state();
    if perm.is_identity() || perm.is_grassmannian() {
        return Ok(None);
    }
    let (i, j) = last_inversion(&perm).expect("non-identity has an inversion");
    diagram.crossing_of_values(perm.at(j), perm.at(i)).map(Some)
}

pub fn iteration_cap(word: &Word) -> usize {
    4 * word.len().max(1) * word.degree()
}

/// `LS(w)`, with every bump it performed.
pub fn ls(word: &Word) -> Result<LittleMap> {
    word.ensure_reduced()?;
    let cap = iteration_cap(word);
    let mut current = word.clone();
    let mut traces = Vec::new();
    while let Some(start) = canonical_start(&current)? {
        if traces.len() == cap {
            return Err(Error::IterationCap(cap));
        }
        let trace = little_bump(&current, start)?;
        current = trace.result.clone();
        traces.push(trace);
    }
    let grassmannian = if current.is_empty() {
        None
    } else {
        Some(grassmannian_data(&current.permutation())?)
    };
    Ok(LittleMap {
        tableau: grassmannian_tab(&current)?,
        traces,
        grassmannian_word: current,
        grassmannian,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn last_inversion_picks_lex_max() {
        assert_eq!(last_inversion(&"3 5 2 4 1".parse().unwrap()), Some((4, 5)));
        assert_eq!(last_inversion(&"2 1 3".parse().unwrap()), Some((1, 2)));
        assert_eq!(last_inversion(&Permutation::identity(3)), None);
    }

    #[test]
    fn figure_little_map() {
        let r = ls(&word(&[4, 2, 1, 2, 3, 2, 4])).unwrap();
        assert_eq!(r.tableau, tab(&[&[1, 3, 7], &[2, 6], &[4], &[5]]));
        assert_eq!(r.traces.len(), 2);
        assert!(r.traces.iter().all(|t| t.start == 7));
        let g = r.grassmannian.unwrap();
        assert_eq!(g.row_labels, vec![7, 5, 3, 2]);
        assert_eq!(g.col_labels, vec![1, 4, 6]);
        assert_eq!(r.grassmannian_word.degree(), 7);
    }

    #[test]
    fn small_cases() {
        assert_eq!(ls(&Word::empty()).unwrap().tableau, Tableau::empty());
        let r = ls(&word(&[1, 2, 1])).unwrap();
        assert_eq!(r.tableau, tab(&[&[1, 2], &[3]]));
        assert_eq!(r.grassmannian_word, word(&[1, 3, 2]));
        assert_eq!(ls(&word(&[2, 2])).unwrap_err(), Error::NotReduced);
    }
}
