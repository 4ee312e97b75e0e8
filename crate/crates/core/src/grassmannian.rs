//! Grassmannian permutations, the tableau of a Grassmannian word, and
//! normalization to the minimal Grassmannian permutation of a shape.

use crate::bump::{little_bump, BumpTrace};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::tableau::Tableau;
use crate::wiring::WiringDiagram;

/// `σ = a_1 ... a_k b_1 ... b_{n-k}` split at its only descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannianData {
    pub k: usize,
    /// Row labels top to bottom: `a_k, ..., a_1`.
    pub row_labels: Vec<u32>,
    /// Column labels left to right: `b_1, ..., b_{n-k}`.
    pub col_labels: Vec<u32>,
}

pub fn grassmannian_data(perm: &Permutation) -> Result<GrassmannianData> {
    let descents = perm.descent_set();
    if descents.len() != 1 {
        return Err(Error::NotGrassmannian);
    }
    let k = descents[0];
    let vals = perm.as_slice();
    Ok(GrassmannianData {
        k,
        row_labels: vals[..k].iter().rev().copied().collect(),
        col_labels: vals[k..].to_vec(),
    })
}

/// Reduced, and either empty or of a Grassmannian permutation.
pub fn is_grassmannian_word(word: &Word) -> bool {
    word.is_reduced() && (word.is_empty() || word.permutation().is_grassmannian())
}

fn ensure_grassmannian_word(word: &Word) -> Result<()> {
    word.ensure_reduced()?;
    if !word.is_empty() && !word.permutation().is_grassmannian() {
        return Err(Error::NotGrassmannian);
    }
    Ok(())
}

/// `Tab(w)`: crossing `l` between `a_i` and `b_j` writes `m + 1 - l` in the
/// row of `a_i` and the column of `b_j`.
pub fn grassmannian_tab(word: &Word) -> Result<Tableau> {
    ensure_grassmannian_word(word)?;
    if word.is_empty() {
        return Ok(Tableau::empty());
    }
    let diagram = WiringDiagram::new(word);
    let data = grassmannian_data(&diagram.final_state())?;
    let m = word.len();
    let mut grid = vec![vec![None; data.col_labels.len()]; data.row_labels.len()];
    for (l, &(low, high)) in diagram.crossing_pairs().iter().enumerate() {
        let row = data.row_labels.iter().position(|&a| a == high);
        let col = data.col_labels.iter().position(|&b| b == low);
        match (row, col) {
            (Some(r), Some(c)) => grid[r][c] = Some((m - l) as u32),
            _ => {
                return Err(Error::Internal(format!(
                    "crossing {} does not pair an a with a b",
                    l + 1
                )))
            }
        }
    }
    let mut rows = Vec::new();
    for cells in grid {
        let filled = cells.iter().take_while(|c| c.is_some()).count();
        if cells[filled..].iter().any(Option::is_some) {
            return Err(Error::Internal("Tab row is not left-justified".into()));
        }
        if filled > 0 {
            rows.push(cells[..filled].iter().map(|c| c.expect("filled")).collect());
        }
    }
    let tab = Tableau::new(rows)?;
    if !tab.is_standard() {
        return Err(Error::Internal(format!("Tab({word}) is not standard")));
    }
    Ok(tab)
}

/// Bumps a Grassmannian word until its permutation has no initial fixed
/// point; the tableau is unchanged.
///
/// Each round starts a bump at the last crossing of every `b_j` in turn,
/// beginning with `b_1`; together they lower every letter by one. Words
/// carry their degree as `max letter + 1`, so there is never a terminal
/// fixed point to remove.
pub fn minimal_grassmannian_normalize(word: &Word) -> Result<(Word, Vec<BumpTrace>)> {
    ensure_grassmannian_word(word)?;
    let mut current = word.clone();
    let mut traces = Vec::new();
    while !current.is_empty() && current.letters().iter().all(|&l| l > 1) {
        let (next, round) = lowering_round(&current)?;
        current = next;
        traces.extend(round);
    }
    Ok((current, traces))
}

/// One pass of bumps at the last crossing of each `b_j`.
pub fn lowering_round(word: &Word) -> Result<(Word, Vec<BumpTrace>)> {
    ensure_grassmannian_word(word)?;
    let diagram = WiringDiagram::new(word);
    let data = grassmannian_data(&diagram.final_state())?;
    let starts: Vec<usize> = data
        .col_labels
        .iter()
        .filter_map(|&b| diagram.crossings_of(b).last().copied())
        .collect();
    let mut current = word.clone();
    let mut traces = Vec::with_capacity(starts.len());
    for start in starts {
        let trace = little_bump(&current, start)?;
        current = trace.result.clone();
        traces.push(trace);
    }
    if word.letters().iter().all(|&l| l > 1) {
        let expected = word.shifted(-1)?;
        if current != expected {
            return Err(Error::Internal(format!(
                "lowering {word} gave {current}, expected {expected}"
            )));
        }
    }
    Ok((current, traces))
}
