//! Permutations in one-line notation and words in the adjacent transpositions.
//!
//! Everything here is 1-based: a permutation of degree `n` maps `{1..n}` onto
//! itself, and the letter `i` names the transposition `s_i = (i i+1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Equality compares the degree as well as the mapping, so `1 2` and `1 2 3`
/// are different values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    pub fn new(map: Vec<u32>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let n = map.len();
        let mut seen = vec![false; n + 1];
        for &v in &map {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation(format!("value {v} repeats")));
            }
            seen[idx] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation {
            map: (1..=n as u32).collect(),
        }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn reverse(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation {
            map: (1..=n as u32).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    /// `σ_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.map[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { map: inv }
    }

    /// All pairs `(i, j)` with `i < j` and `σ_i > σ_j`, in ascending
    /// lexicographic order.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.map.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Number of inversions, `l(σ)`.
    pub fn length(&self) -> usize {
        let n = self.map.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.map[i] > self.map[j]).count())
            .sum()
    }

    /// Positions `i` with `σ_i > σ_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.map
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Exactly one descent. The identity is not Grassmannian.
    pub fn is_grassmannian(&self) -> bool {
        self.descent_set().len() == 1
    }

    /// Grassmannian with no initial and no terminal fixed point.
    pub fn is_minimal_grassmannian(&self) -> bool {
        let n = self.map.len();
        self.is_grassmannian() && self.map[0] != 1 && self.map[n - 1] as usize != n
    }

    /// Every permutation of degree `n` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        assert!(n >= 1, "degree must be at least 1");
        let mut next = Some((1..=n as u32).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            next = next_lex(&current);
            Some(Permutation { map: current })
        })
    }

    /// Reduced words of this permutation, one at a time, in ascending
    /// lexicographic order.
    pub fn reduced_words(&self) -> ReducedWords {
        ReducedWords::new(self)
    }
}

fn next_lex(v: &[u32]) -> Option<Vec<u32>> {
    let mut v = v.to_vec();
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.map)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let map = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("`{tok}` is not a value")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(map)
    }
}

/// A finite sequence of positive letters; letter `i` names `s_i`.
///
/// A word carries no ambient degree: its permutation lives in `S_{max+1}`
/// (or `S_1` when empty).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&l| l == 0) {
            return Err(Error::InvalidLetter {
                position: pos + 1,
                value: 0,
            });
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    pub fn max_letter(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.max_letter() as usize + 1
    }

    /// `s_{w_1} s_{w_2} ... s_{w_m}`, applied left to right as position swaps
    /// starting from the identity.
    pub fn permutation(&self) -> Permutation {
        let mut map: Vec<u32> = (1..=self.degree() as u32).collect();
        for &l in &self.letters {
            map.swap(l as usize - 1, l as usize);
        }
        Permutation { map }
    }

    /// True iff `m = l(σ)`. Equivalently every swap creates an inversion.
    pub fn is_reduced(&self) -> bool {
        let mut map: Vec<u32> = (1..=self.degree() as u32).collect();
        for &l in &self.letters {
            let i = l as usize - 1;
            if map[i] > map[i + 1] {
                return false;
            }
            map.swap(i, i + 1);
        }
        true
    }

    pub fn ensure_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced)
        }
    }

    /// Positions `i` with `w_i > w_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Every letter moved by `delta`. Fails if a letter would drop below 1.
    pub fn shifted(&self, delta: i64) -> Result<Word> {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let v = l as i64 + delta;
                if v < 1 {
                    Err(Error::InvalidLetter {
                        position: i + 1,
                        value: v,
                    })
                } else {
                    Ok(v as u32)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated positive letters. Tokens that are not integers
    /// are reported as a domain error naming the token.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| match tok.parse::<i64>() {
                Ok(v) if v >= 1 && v <= u32::MAX as i64 => Ok(v as u32),
                Ok(v) => Err(Error::InvalidLetter {
                    position: i + 1,
                    value: v,
                }),
                Err(_) => Err(Error::Domain(format!("`{tok}` is not a letter"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.letters)
    }
}

fn write_spaced(f: &mut fmt::Formatter<'_>, vals: &[u32]) -> fmt::Result {
    for (i, v) in vals.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Streaming enumeration of `Red(σ)` in lexicographic order.
///
/// Backtracks over the left descents of the running permutation: the first
/// letter of a reduced word of `σ` is an `i` with value `i+1` left of value
/// `i`, and stripping it swaps those two values.
pub struct ReducedWords {
    // pos[v] = 0-based position of value v+1 in the running permutation
    pos: Vec<usize>,
    prefix: Vec<u32>,
    // next candidate letter per depth; always prefix.len() + 1 entries
    next: Vec<u32>,
    target_len: usize,
    done: bool,
}

impl ReducedWords {
    fn new(perm: &Permutation) -> Self {
        let inv = perm.inverse();
        ReducedWords {
            pos: inv.as_slice().iter().map(|&p| p as usize - 1).collect(),
            prefix: Vec::new(),
            next: vec![1],
            target_len: perm.length(),
            done: false,
        }
    }

    fn push(&mut self, letter: u32) {
        let i = letter as usize - 1;
        self.pos.swap(i, i + 1);
        self.prefix.push(letter);
        self.next.push(1);
    }

    fn pop(&mut self) -> bool {
        self.next.pop();
        match self.prefix.pop() {
            Some(letter) => {
                let i = letter as usize - 1;
                self.pos.swap(i, i + 1);
                true
            }
            None => false,
        }
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.target_len {
                let out = Word::from_vec_unchecked(self.prefix.clone());
                if !self.pop() {
                    self.done = true;
                }
                return Some(out);
            }
            let n = self.pos.len();
            let start = self.next[depth] as usize;
            let found = (start..n).find(|&i| self.pos[i - 1] > self.pos[i]);
            match found {
                Some(i) => {
                    self.next[depth] = i as u32 + 1;
                    self.push(i as u32);
                }
                None => {
                    if !self.pop() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_of_word() {
        assert_eq!(Word::empty().permutation(), Permutation::identity(1));
        assert_eq!(word(&[1, 2, 1]).permutation(), perm("3 2 1"));
        assert_eq!(
            word(&[4, 2, 1, 2, 3, 2, 4]).permutation(),
            perm("3 5 2 4 1")
        );
    }

    #[test]
    fn non_reduced_words_still_multiply() {
        assert_eq!(word(&[1, 1]).permutation(), Permutation::identity(2));
        assert_eq!(word(&[2, 1, 1]).permutation(), perm("1 3 2"));
    }

    #[test]
    fn inversion_lists() {
        assert!(Permutation::identity(4).inversions().is_empty());
        assert_eq!(perm("3 2 1").inversions(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(perm("3 5 2 4 1").inversions().len(), 7);
    }

    #[test]
    fn descents_and_grassmannian() {
        assert!(Permutation::identity(5).descent_set().is_empty());
        assert_eq!(perm("2 4 1 3").descent_set(), vec![2]);
        assert_eq!(perm("3 2 1").descent_set(), vec![1, 2]);
        assert!(perm("2 4 1 3").is_grassmannian());
        assert!(!Permutation::identity(3).is_grassmannian());
        assert!(!perm("3 2 1").is_grassmannian());
        assert!(perm("2 4 1 3").is_minimal_grassmannian());
        assert!(!perm("1 3 2").is_minimal_grassmannian());
        assert!(!perm("2 1 3").is_minimal_grassmannian());
    }

    #[test]
    fn reducedness() {
        assert!(!word(&[1, 1]).is_reduced());
        assert!(word(&[1, 2, 1]).is_reduced());
        assert!(word(&[4, 2, 1, 2, 3, 2, 4]).is_reduced());
        assert!(Word::empty().is_reduced());
        assert!(!word(&[1, 2, 1, 2]).is_reduced());
    }

    #[test]
    fn enumeration() {
        let id: Vec<_> = Permutation::identity(4).reduced_words().collect();
        assert_eq!(id, vec![Word::empty()]);
        let rev3: Vec<_> = perm("3 2 1").reduced_words().collect();
        assert_eq!(rev3, vec![word(&[1, 2, 1]), word(&[2, 1, 2])]);
        assert_eq!(Permutation::reverse(4).reduced_words().count(), 16);
    }

    #[test]
    fn enumeration_is_sorted_and_correct() {
        for p in Permutation::all(4) {
            let words: Vec<_> = p.reduced_words().collect();
            assert!(words.windows(2).all(|w| w[0] < w[1]));
            for w in &words {
                assert!(w.is_reduced());
                assert_eq!(w.permutation().as_slice()[..], p.as_slice()[..w.degree()]);
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(perm("2 3 1").inverse(), perm("3 1 2"));
        assert_eq!(perm("3 5 2 4 1").inverse(), perm("5 3 1 4 2"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Word::new(vec![1, 0, 2]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!("1 x".parse::<Permutation>().is_err());
    }

    #[test]
    fn all_permutations_are_lex_sorted() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(1).count(), 1);
    }
}
