//! Little bumps and their inverses, with full step traces.
//!
//! A bump at index `i` decrements `w_i`. If that makes two crossings swap
//! the same pair of wires, the other crossing of that pair is decremented
//! next, and so on until the word is reduced again. Decrementing a letter
//! equal to 1 instead raises every other letter by one (a fresh wire on
//! top) and always ends the bump.

use crate::error::{Error, Result};
use crate::perm::Word;
use crate::wiring::WiringDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BumpStep {
    /// 1-based index of the letter that moved.
    pub index: usize,
    pub from: u32,
    /// Equal to `from` for a shift step.
    pub to: u32,
    /// The letter was 1: it stays, every other letter goes up by one.
    pub shift: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BumpTrace {
    pub start: usize,
    pub steps: Vec<BumpStep>,
    pub result: Word,
}

impl BumpTrace {
    /// Index of the last letter the bump touched.
    pub fn terminal_index(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.index)
    }

    pub fn shifted(&self) -> bool {
        self.steps.last().is_some_and(|s| s.shift)
    }

    /// The word after the first `count` steps, starting from `original`.
    /// Intermediate words are usually not reduced.
    pub fn replay(&self, original: &Word, count: usize) -> Word {
        let mut letters = original.letters().to_vec();
        for step in self.steps.iter().take(count) {
            apply_step(&mut letters, step);
        }
        Word::new(letters).expect("steps keep letters positive")
    }
}

fn apply_step(letters: &mut [u32], step: &BumpStep) {
    if step.shift {
        for (k, l) in letters.iter_mut().enumerate() {
            if k + 1 != step.index {
                *l += 1;
            }
        }
    } else {
        letters[step.index - 1] = step.to;
    }
}

fn check_start(word: &Word, start: usize) -> Result<()> {
    if start == 0 || start > word.len() {
        return Err(Error::PositionOutOfRange {
            position: start,
            len: word.len(),
        });
    }
    if !deletion_is_reduced(word, start) {
        return Err(Error::InvalidStart(start));
    }
    Ok(())
}

/// True iff the word with letter `index` removed is reduced, which is what
/// a bump needs of its starting crossing.
pub fn deletion_is_reduced(word: &Word, index: usize) -> bool {
    let mut letters = word.letters().to_vec();
    letters.remove(index - 1);
    Word::from_vec_unchecked(letters).is_reduced()
}

/// Starting indices at which a bump of this reduced word is defined.
pub fn valid_starts(word: &Word) -> Vec<usize> {
    (1..=word.len())
        .filter(|&i| deletion_is_reduced(word, i))
        .collect()
}

/// The other index whose crossing swaps the same wires as crossing `index`,
/// if any.
fn duplicate_of(letters: &[u32], index: usize) -> Option<usize> {
    let word = Word::from_vec_unchecked(letters.to_vec());
    let diagram = WiringDiagram::new(&word);
    let pairs = diagram.crossing_pairs();
    let target = pairs[index - 1];
    pairs
        .iter()
        .enumerate()
        .find(|&(k, &p)| k + 1 != index && p == target)
        .map(|(k, _)| k + 1)
}

#[derive(Clone, Copy)]
enum Dir {
    Down,
    Up,
}

fn run(word: &Word, start: usize, dir: Dir) -> Result<BumpTrace> {
    word.ensure_reduced()?;
    check_start(word, start)?;
    let mut letters = word.letters().to_vec();
    let mut steps = Vec::new();
    let mut visited = vec![false; letters.len()];
    let mut current = start;
    loop {
        if visited[current - 1] {
            return Err(Error::Internal(format!(
                "bump from {start} revisited index {current}"
            )));
        }
        visited[current - 1] = true;
        let from = letters[current - 1];
        let step = match dir {
            Dir::Down if from == 1 => BumpStep {
                index: current,
                from,
                to: from,
                shift: true,
            },
            Dir::Down => BumpStep {
                index: current,
                from,
                to: from - 1,
                shift: false,
            },
            Dir::Up => BumpStep {
                index: current,
                from,
                to: from + 1,
                shift: false,
            },
        };
        apply_step(&mut letters, &step);
        steps.push(step);
        if step.shift {
            break;
        }
        match duplicate_of(&letters, current) {
            Some(next) => current = next,
            None => break,
        }
    }
    let result = Word::new(letters).expect("bumps keep letters positive");
    if !result.is_reduced() {
        return Err(Error::Internal(format!(
            "bump from {start} ended on a non-reduced word {result}"
        )));
    }
    Ok(BumpTrace {
        start,
        steps,
        result,
    })
}

/// `w↑_start`.
pub fn little_bump(word: &Word, start: usize) -> Result<BumpTrace> {
    run(word, start, Dir::Down)
}

/// The bump started at the crossing of wires `u` and `v`.
pub fn little_bump_at_values(word: &Word, u: u32, v: u32) -> Result<BumpTrace> {
    let start = crate::wiring::crossing_of_values(word, u, v)?;
    little_bump(word, start)
}

/// The increment-direction bump: raise `w_start`, then repair duplicates by
/// raising the other crossing of the repeated pair.
pub fn inverse_bump(word: &Word, start: usize) -> Result<BumpTrace> {
    run(word, start, Dir::Up)
}

/// Recovers the word a bump started from.
///
/// Runs [`inverse_bump`] from the trace's terminal index. When the bump
/// ended with a shift the inverse lands on the original word with every
/// letter one higher, so that offset is removed.
pub fn undo_bump(trace: &BumpTrace) -> Result<Word> {
    let back = inverse_bump(&trace.result, trace.terminal_index())?;
    if trace.shifted() {
        back.result.shifted(-1)
    } else {
        Ok(back.result)
    }
}
