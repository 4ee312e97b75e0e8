//! Edelman-Greene insertion.
//!
//! Letters are inserted from the right end of the word to the left. Each
//! insertion adds exactly one box; the recording tableau stores the step
//! number at which that box appeared.

use crate::error::Result;
use crate::perm::Word;
use crate::tableau::Tableau;

/// What happened in one row during an insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowAction {
    /// The letter was appended; insertion stops here.
    Append,
    /// The letter replaced the entry at this cell, which moves down.
    Replace,
    /// `x` met `x, x+1`: the row is untouched and `x+1` moves down.
    Special,
}

/// One row visited by an insertion, with its 1-based cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCell {
    pub row: usize,
    pub col: usize,
    pub action: RowAction,
}

/// The record of inserting one letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionStep {
    pub letter: u32,
    pub path: Vec<PathCell>,
}

impl InsertionStep {
    /// The box added by this insertion.
    pub fn new_box(&self) -> (usize, usize) {
        let last = self
            .path
            .last()
            .expect("an insertion always ends somewhere");
        (last.row, last.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionResult {
    pub p: Tableau,
    pub q: Tableau,
    pub steps: Vec<InsertionStep>,
}

/// Inserts one letter into `p` in place and reports the rows it touched.
pub fn insert_letter_in_place(p: &mut Tableau, letter: u32) -> InsertionStep {
    let rows = p.rows_mut();
    let mut path = Vec::new();
    let mut x = letter;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            path.push(PathCell {
                row: r + 1,
                col: 1,
                action: RowAction::Append,
            });
            break;
        }
        let row = &mut rows[r];
        let last = *row.last().expect("rows are never empty");
        if x >= last {
            row.push(x);
            path.push(PathCell {
                row: r + 1,
                col: row.len(),
                action: RowAction::Append,
            });
            break;
        }
        let j = row
            .iter()
            .position(|&v| x < v)
            .expect("x is below the last entry");
        if j > 0 && row[j] == x + 1 && row[j - 1] == x {
            path.push(PathCell {
                row: r + 1,
                col: j + 1,
                action: RowAction::Special,
            });
            x += 1;
        } else {
            path.push(PathCell {
                row: r + 1,
                col: j + 1,
                action: RowAction::Replace,
            });
            x = std::mem::replace(&mut row[j], x);
        }
        r += 1;
    }
    InsertionStep { letter, path }
}

/// Inserts `letter` into a copy of `p`; returns the new tableau and the
/// 1-based cell of the added box.
pub fn eg_insert_letter(p: &Tableau, letter: u32) -> (Tableau, (usize, usize)) {
    let mut out = p.clone();
    let step = insert_letter_in_place(&mut out, letter);
    (out, step.new_box())
}

/// Incremental insertion state, for callers that want every `(P_j, Q_j)`.
#[derive(Debug, Clone, Default)]
pub struct Insertion {
    p: Tableau,
    q: Vec<Vec<u32>>,
    steps: Vec<InsertionStep>,
}

impl Insertion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, letter: u32) -> &InsertionStep {
        let step = insert_letter_in_place(&mut self.p, letter);
        let (row, _) = step.new_box();
        let time = self.steps.len() as u32 + 1;
        if row > self.q.len() {
            self.q.push(Vec::new());
        }
        self.q[row - 1].push(time);
        self.steps.push(step);
        self.steps.last().expect("just pushed")
    }

    pub fn p(&self) -> &Tableau {
        &self.p
    }

    pub fn q(&self) -> Tableau {
        Tableau::from_rows_unchecked(self.q.clone())
    }

    pub fn finish(self) -> InsertionResult {
        InsertionResult {
            p: self.p,
            q: Tableau::from_rows_unchecked(self.q),
            steps: self.steps,
        }
    }
}

/// `EG(w) = (P(w), Q(w))`. Accepts any word; `P` is increasing when the
/// word is reduced.
pub fn eg(word: &Word) -> InsertionResult {
    let mut ins = Insertion::new();
    for &l in word.letters().iter().rev() {
        ins.push(l);
    }
    ins.finish()
}

/// Every intermediate pair `(P_j, Q_j)`, `j = 1..=m`.
pub fn eg_history(word: &Word) -> Vec<(Tableau, Tableau)> {
    let mut ins = Insertion::new();
    word.letters()
        .iter()
        .rev()
        .map(|&l| {
            ins.push(l);
            (ins.p().clone(), ins.q())
        })
        .collect()
}

/// The column reading word of `P(w)`.
pub fn tau(word: &Word) -> Result<Word> {
    word.ensure_reduced()?;
    Ok(eg(word).p.column_reading_word())
}
