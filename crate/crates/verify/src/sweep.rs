//! Parallel iteration over every reduced word of every permutation.
//!
//! Work is split by permutation. Each worker builds its own [`Tally`] and the
//! tallies are merged in permutation order, so reports do not depend on
//! scheduling.

use rayon::prelude::*;
use redword_core::{Permutation, Word};
use serde_json::{json, Value};

use crate::report::Tally;

/// All of `S_n` in lexicographic order. Words of smaller permutations show
/// up here too, as the reduced words of permutations fixing a tail.
pub(crate) fn perms(n: usize) -> Vec<Permutation> {
    Permutation::all(n).collect()
}

pub(crate) fn for_each_perm<F>(n: usize, f: F) -> Tally
where
    F: Fn(&Permutation, &mut Tally) + Sync,
{
    perms(n)
        .par_iter()
        .map(|p| {
            let mut t = Tally::default();
            f(p, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

pub(crate) fn for_each_word<F>(n: usize, f: F) -> Tally
where
    F: Fn(&Word, &mut Tally) + Sync,
{
    for_each_perm(n, |p, t| {
        for w in p.reduced_words() {
            f(&w, t);
        }
    })
}

/// Maps every reduced word of `S_n` in parallel, preserving order.
pub(crate) fn map_words<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Word) -> T + Sync,
{
    perms(n)
        .par_iter()
        .map(|p| p.reduced_words().map(|w| f(&w)).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub(crate) fn word_json(w: &Word) -> Value {
    json!(w.letters())
}

pub(crate) fn envelope(n: usize) -> String {
    format!("S<={n}")
}
