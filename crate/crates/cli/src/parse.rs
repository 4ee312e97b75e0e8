//! Text input for words, permutations and highlight lists.

use std::collections::BTreeSet;
use std::fmt;

use redword_core::{Permutation, Word};

/// A malformed input. `column` is the 1-based character column of the
/// offending token, when one is to blame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub column: Option<usize>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.column {
            Some(c) => write!(f, "column {c}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &text[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &text[b..]));
    }
    out
}

fn positive(column: usize, tok: &str) -> Result<u32, ParseError> {
    let err = |message: String| ParseError {
        message,
        column: Some(column),
    };
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("`{tok}` is not a positive integer")));
    }
    match tok.parse::<u32>() {
        Ok(0) => Err(err("letters must be positive, found 0".into())),
        Ok(v) => Ok(v),
        Err(_) => Err(err(format!("`{tok}` is too large"))),
    }
}

/// `"4 2 1 2 3 2 4"` to a word. The empty string is the empty word.
pub fn parse_word_text(text: &str) -> Result<Word, ParseError> {
    let letters = tokens(text)
        .into_iter()
        .map(|(c, t)| positive(c, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::new(letters).expect("letters checked positive"))
}

/// One-line notation, e.g. `"3 5 2 4 1"`.
pub fn parse_perm_text(text: &str) -> Result<Permutation, ParseError> {
    let values = tokens(text)
        .into_iter()
        .map(|(c, t)| positive(c, t))
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::new(values).map_err(|e| ParseError {
        message: e.to_string(),
        column: None,
    })
}

/// `"1,3"` to `{1, 3}`. Blank input is the empty set.
pub fn parse_highlight(text: &str) -> Result<BTreeSet<usize>, ParseError> {
    let mut out = BTreeSet::new();
    let mut column = 1;
    for part in text.split(',') {
        let trimmed = part.trim();
        if !trimmed.is_empty() {
            let lead = part.len() - part.trim_start().len();
            out.insert(positive(column + lead, trimmed)? as usize);
        }
        column += part.chars().count() + 1;
    }
    Ok(out)
}
