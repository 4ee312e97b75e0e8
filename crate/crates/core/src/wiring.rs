//! Wiring diagrams: wires labelled by their starting row, one crossing per
//! letter.

use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringDiagram {
    word: Word,
    /// `states[t]` is the one-line notation after the first `t` letters.
    states: Vec<Vec<u32>>,
    /// Value pair `(low, high)` swapped at each crossing.
    crossing_pairs: Vec<(u32, u32)>,
}

impl WiringDiagram {
    pub fn new(word: &Word) -> Self {
        let n = word.degree();
        let mut state: Vec<u32> = (1..=n as u32).collect();
        let mut states = Vec::with_capacity(word.len() + 1);
        let mut crossing_pairs = Vec::with_capacity(word.len());
        states.push(state.clone());
        for &l in word.letters() {
            let i = l as usize - 1;
            let (u, v) = (state[i], state[i + 1]);
            crossing_pairs.push((u.min(v), u.max(v)));
            state.swap(i, i + 1);
            states.push(state.clone());
        }
        WiringDiagram {
            word: word.clone(),
            states,
            crossing_pairs,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.states[0].len()
    }

    pub fn states(&self) -> &[Vec<u32>] {
        &self.states
    }

    /// `σ^t` as a permutation.
    pub fn state(&self, t: usize) -> Permutation {
        Permutation::new(self.states[t].clone()).expect("states are permutations")
    }

    pub fn final_state(&self) -> Permutation {
        self.state(self.states.len() - 1)
    }

    /// Value pairs, indexed from 0 for crossing 1.
    pub fn crossing_pairs(&self) -> &[(u32, u32)] {
        &self.crossing_pairs
    }

    /// Row (1-based) holding `value` after `t` crossings.
    pub fn row_of(&self, value: u32, t: usize) -> usize {
        self.states[t]
            .iter()
            .position(|&v| v == value)
            .expect("every value sits on some row")
            + 1
    }

    /// Rows visited by wire `value` at times `0..=m`.
    pub fn trajectory(&self, value: u32) -> Vec<usize> {
        (0..self.states.len())
            .map(|t| self.row_of(value, t))
            .collect()
    }

    /// 1-based indices of the crossings that involve `value`.
    pub fn crossings_of(&self, value: u32) -> Vec<usize> {
        self.crossing_pairs
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u == value || v == value)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True iff no pair of wires crosses twice.
    pub fn crossings_distinct(&self) -> bool {
        let mut pairs = self.crossing_pairs.clone();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    /// The index of the crossing between `u` and `v`. In a reduced word it
    /// is unique; otherwise the first one is returned.
    pub fn crossing_of_values(&self, u: u32, v: u32) -> Result<usize> {
        let key = (u.min(v), u.max(v));
        self.crossing_pairs
            .iter()
            .position(|&p| p == key)
            .map(|i| i + 1)
            .ok_or(Error::NoCrossing(u, v))
    }
}

pub fn wiring_diagram(word: &Word) -> WiringDiagram {
    WiringDiagram::new(word)
}

/// Index of the unique crossing between wires `u` and `v` of a reduced word.
pub fn crossing_of_values(word: &Word, u: u32, v: u32) -> Result<usize> {
    word.ensure_reduced()?;
    WiringDiagram::new(word).crossing_of_values(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_word() {
        let d = wiring_diagram(&Word::empty());
        assert_eq!(d.states().len(), 1);
        assert!(d.crossing_pairs().is_empty());
    }

    #[test]
    fn crossings_of_121() {
        let d = wiring_diagram(&word(&[1, 2, 1]));
        assert_eq!(d.crossing_pairs(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(d.trajectory(1), vec![1, 2, 3, 3]);
    }

    #[test]
    fn figure_final_state() {
        let d = wiring_diagram(&word(&[4, 2, 1, 2, 3, 2, 4]));
        assert_eq!(d.final_state().to_string(), "3 5 2 4 1");
        assert!(d.crossings_distinct());
        // second column of the figure: 1 2 3 5 4
        assert_eq!(d.states()[1], vec![1, 2, 3, 5, 4]);
        assert_eq!(d.states()[4], vec![3, 2, 1, 5, 4]);
    }

    #[test]
    fn value_lookup() {
        let w = word(&[1, 2, 1]);
        assert_eq!(crossing_of_values(&w, 1, 2).unwrap(), 1);
        assert_eq!(crossing_of_values(&w, 3, 2).unwrap(), 3);
        assert_eq!(
            crossing_of_values(&word(&[1]), 1, 3),
            Err(Error::NoCrossing(1, 3))
        );
        assert_eq!(
            crossing_of_values(&word(&[1, 1]), 1, 2),
            Err(Error::NotReduced)
        );
    }

    #[test]
    fn non_reduced_words_repeat_a_pair() {
        assert!(!wiring_diagram(&word(&[1, 1])).crossings_distinct());
        assert!(!wiring_diagram(&word(&[2, 1, 2, 1])).crossings_distinct());
    }
}
