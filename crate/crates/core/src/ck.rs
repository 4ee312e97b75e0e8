//! Coxeter-Knuth moves on three consecutive letters.
//!
//! With `a < b < c`:
//!
//! | kind  | forward            | backward           |
//! |-------|--------------------|--------------------|
//! | One   | `a c b -> c a b`   | `c a b -> a c b`   |
//! | Two   | `b a c -> b c a`   | `b c a -> b a c`   |
//! | Three | `x x+1 x -> x+1 x x+1` | `x+1 x x+1 -> x x+1 x` |

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CkKind {
    One,
    Two,
    Three,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// A move at 1-based `pos`, the leftmost of the three letters it rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CkMove {
    pub pos: usize,
    pub kind: CkKind,
    pub direction: Direction,
}

impl CkMove {
    pub fn inverse(self) -> CkMove {
        CkMove {
            direction: match self.direction {
                Direction::Forward => Direction::Backward,
                Direction::Backward => Direction::Forward,
            },
            ..self
        }
    }
}

impl CkKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CkKind::One => "type1",
            CkKind::Two => "type2",
            CkKind::Three => "type3",
        }
    }
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

impl fmt::Display for CkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for CkMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}@{}", self.kind, self.direction, self.pos)
    }
}

impl FromStr for CkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "type1" | "1" | "one" => Ok(CkKind::One),
            "type2" | "2" | "two" => Ok(CkKind::Two),
            "type3" | "3" | "three" => Ok(CkKind::Three),
            _ => Err(Error::Domain(format!("unknown move kind `{s}`"))),
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" | "fwd" => Ok(Direction::Forward),
            "backward" | "bwd" | "back" => Ok(Direction::Backward),
            _ => Err(Error::Domain(format!("unknown direction `{s}`"))),
        }
    }
}

fn classify(x: u32, y: u32, z: u32) -> Option<(CkKind, Direction)> {
    use CkKind::*;
    use Direction::*;
    if y == x + 1 && z == x {
        Some((Three, Forward))
    } else if x == y + 1 && z == x {
        Some((Three, Backward))
    } else if x < z && z < y {
        Some((One, Forward))
    } else if y < z && z < x {
        Some((One, Backward))
    } else if y < x && x < z {
        Some((Two, Forward))
    } else if z < x && x < y {
        Some((Two, Backward))
    } else {
        None
    }
}

fn check_window(word: &Word, pos: usize) -> Result<()> {
    if pos == 0 || pos + 2 > word.len() {
        return Err(Error::PositionOutOfRange {
            position: pos,
            len: word.len(),
        });
    }
    Ok(())
}

/// Moves applicable to the letters at `pos..=pos+2`. At most one pattern
/// can match a given triple.
pub fn ck_moves_at(word: &Word, pos: usize) -> Result<Vec<CkMove>> {
    check_window(word, pos)?;
    let (x, y, z) = (word.at(pos), word.at(pos + 1), word.at(pos + 2));
    Ok(classify(x, y, z)
        .map(|(kind, direction)| CkMove {
            pos,
            kind,
            direction,
        })
        .into_iter()
        .collect())
}

/// Every applicable move, ordered by position.
pub fn all_ck_moves(word: &Word) -> Vec<CkMove> {
    if word.len() < 3 {
        return Vec::new();
    }
    (1..=word.len() - 2)
        .flat_map(|pos| ck_moves_at(word, pos).expect("window is in range"))
        .collect()
}

pub fn apply_ck(word: &Word, mv: CkMove) -> Result<Word> {
    check_window(word, mv.pos)?;
    let (x, y, z) = (word.at(mv.pos), word.at(mv.pos + 1), word.at(mv.pos + 2));
    if classify(x, y, z) != Some((mv.kind, mv.direction)) {
        return Err(Error::InapplicableMove);
    }
    let mut letters = word.letters().to_vec();
    let i = mv.pos - 1;
    match mv.kind {
        CkKind::One => letters.swap(i, i + 1),
        CkKind::Two => letters.swap(i + 1, i + 2),
        CkKind::Three => {
            let (lo, hi) = (x.min(y), x.max(y));
            let flipped = if x == lo { [hi, lo, hi] } else { [lo, hi, lo] };
            letters[i..i + 3].copy_from_slice(&flipped);
        }
    }
    Ok(Word::new(letters).expect("moves keep letters positive"))
}

/// The Coxeter-Knuth class of a reduced word, by breadth-first closure.
pub fn ck_class(word: &Word) -> Result<BTreeSet<Word>> {
    word.ensure_reduced()?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(w) = queue.pop_front() {
        for mv in all_ck_moves(&w) {
            let next = apply_ck(&w, mv)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}
