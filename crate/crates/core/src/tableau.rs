//! Young diagrams and tableaux.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::Word;

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidTableau("shape parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(
                "shape parts must be weakly decreasing".into(),
            ));
        }
        Ok(Shape { parts })
    }

    /// `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("staircase needs n >= 2, got {n}")));
        }
        Ok(Shape {
            parts: (1..n).rev().collect(),
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of each column, left to right.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect()
    }

    /// Number of standard Young tableaux of this shape, by the hook-length
    /// formula in exact arithmetic.
    pub fn hook_length_count(&self) -> BigUint {
        let cols = self.conjugate();
        let mut hooks = BigUint::from(1u32);
        for (r, &len) in self.parts.iter().enumerate() {
            for (c, &col_len) in cols.iter().enumerate().take(len) {
                let hook = (len - c - 1) + (col_len - r - 1) + 1;
                hooks *= BigUint::from(hook);
            }
        }
        factorial(self.size()) / hooks
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Left-justified rows of positive integers whose lengths form a partition.
/// The empty tableau has no rows.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("rows must be non-empty".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(col.checked_sub(1)?)
            .copied()
    }

    pub fn shape(&self) -> Shape {
        Shape {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    /// Column `c` (0-based) read top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows
            .iter()
            .take_while(|r| r.len() > c)
            .map(|r| r[c])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.column(c)).collect()
    }

    /// Rows and columns strictly increase. Repeats elsewhere are allowed.
    pub fn is_increasing(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    /// Increasing, with entries exactly `1..=N` each used once.
    pub fn is_standard(&self) -> bool {
        self.is_labelling() && self.is_increasing()
    }

    /// Entries are exactly `1..=N`, each used once, in any arrangement.
    fn is_labelling(&self) -> bool {
        let n = self.cell_count();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Exchanges the entries labelled `N - i` and `N - j`, where `N` is the
    /// number of cells. The result is not checked for standardness.
    pub fn swap_labels(&self, i: usize, j: usize) -> Result<Tableau> {
        let n = self.cell_count();
        let label = |k: usize| -> Result<u32> {
            match n.checked_sub(k) {
                Some(l) if l >= 1 => Ok(l as u32),
                _ => Err(Error::InvalidLabel(format!(
                    "N - {k} is not a label of a tableau with {n} cells"
                ))),
            }
        };
        let (a, b) = (label(i)?, label(j)?);
        if !self.is_labelling() {
            return Err(Error::InvalidLabel(
                "entries must be exactly 1..=N, each once".into(),
            ));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| match v {
                        v if v == a => b,
                        v if v == b => a,
                        v => v,
                    })
                    .collect()
            })
            .collect();
        Ok(Tableau { rows })
    }

    /// Columns read top to bottom, rightmost column first.
    pub fn column_reading_word(&self) -> Word {
        let letters = self.columns().into_iter().rev().flatten().collect();
        Word::from_vec_unchecked(letters)
    }

    /// Positions of every entry value, `value -> (row, col)` 1-based.
    pub fn positions(&self) -> BTreeMap<u32, (usize, usize)> {
        let mut out = BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                out.insert(v, (r + 1, c + 1));
            }
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Tableau {
    type Err = Error;

    /// One row per line, entries separated by whitespace. Blank lines are
    /// ignored.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<u32>()
                            .map_err(|_| Error::InvalidTableau(format!("`{t}` is not an entry")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn q7() -> Tableau {
        tab(&[&[1, 3, 7], &[2, 6], &[4], &[5]])
    }

    fn p7() -> Tableau {
        tab(&[&[1, 2, 4], &[2, 3], &[3], &[4]])
    }

    #[test]
    fn shapes() {
        assert_eq!(tab(&[&[1]]).shape().parts(), &[1]);
        assert_eq!(q7().shape().parts(), &[3, 2, 1, 1]);
        assert_eq!(p7().shape().parts(), &[3, 2, 1, 1]);
        assert!(Tableau::empty().shape().parts().is_empty());
    }

    #[test]
    fn standard_and_increasing() {
        assert!(q7().is_standard());
        assert!(!p7().is_standard());
        assert!(tab(&[&[1]]).is_standard());
        assert!(p7().is_increasing());
        assert!(!tab(&[&[1, 1]]).is_increasing());
        assert!(!tab(&[&[2], &[2]]).is_increasing());
        assert!(Tableau::empty().is_standard());
    }

    #[test]
    fn hook_lengths() {
        let count = |p: &[usize]| Shape::new(p.to_vec()).unwrap().hook_length_count();
        assert_eq!(count(&[1]), BigUint::from(1u32));
        assert_eq!(count(&[2, 1]), BigUint::from(2u32));
        assert_eq!(count(&[3, 2, 1]), BigUint::from(16u32));
        assert_eq!(count(&[]), BigUint::from(1u32));
    }

    #[test]
    fn staircases() {
        assert_eq!(Shape::staircase(2).unwrap().parts(), &[1]);
        assert_eq!(Shape::staircase(4).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(Shape::staircase(5).unwrap().parts(), &[4, 3, 2, 1]);
        assert!(Shape::staircase(1).is_err());
    }

    #[test]
    fn label_swaps() {
        assert_eq!(
            tab(&[&[1, 2], &[3]]).swap_labels(0, 1).unwrap(),
            tab(&[&[1, 3], &[2]])
        );
        assert!(tab(&[&[1]]).swap_labels(0, 1).is_err());
        assert!(tab(&[&[1]]).swap_labels(1, 0).is_err());
        assert_eq!(
            q7().swap_labels(1, 2).unwrap(),
            tab(&[&[1, 3, 7], &[2, 5], &[4], &[6]])
        );
        let t = q7();
        assert_eq!(t.swap_labels(2, 4).unwrap().swap_labels(2, 4).unwrap(), t);
    }

    #[test]
    fn column_words() {
        assert_eq!(tab(&[&[1]]).column_reading_word().letters(), &[1]);
        assert_eq!(p7().column_reading_word().letters(), &[4, 2, 3, 1, 2, 3, 4]);
        assert_eq!(
            tab(&[&[1, 2], &[2]]).column_reading_word().letters(),
            &[2, 1, 2]
        );
        assert!(Tableau::empty().column_reading_word().is_empty());
    }

    #[test]
    fn rejects_malformed_tableaux() {
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![]]).is_err());
        assert!(Tableau::new(vec![vec![0]]).is_err());
        assert!(Shape::new(vec![1, 2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let t = q7();
        assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    }
}
