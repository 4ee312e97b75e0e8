//! Checks on the Little map: Grassmannian words, communication classes,
//! descents, the RS embedding and random bump sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use redword_core::{
    eg, grassmannian_tab, halve_odd_entries, is_grassmannian_word, little_bump, ls,
    minimal_grassmannian_normalize, rs, rs_embedding_word, valid_starts, Result, Tableau, Word,
};
use serde_json::json;

use crate::report::{Counterexample, Tally, VerificationReport};
use crate::sweep::{envelope, for_each_perm, map_words, word_json};

/// `Tab(w) = Q(w)` for reduced words of Grassmannian permutations, and the
/// Little map leaves such words alone.
pub fn verify_grassmannian_tab(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let tally = for_each_perm(n_max, |p, t| {
        if !p.is_grassmannian() {
            return;
        }
        for w in p.reduced_words() {
            let q = eg(&w).q;
            let tab = grassmannian_tab(&w);
            let map = ls(&w);
            let ok = tab.as_ref() == Ok(&q)
                && map
                    .as_ref()
                    .is_ok_and(|m| m.traces.is_empty() && m.tableau == q);
            t.check(ok, || {
                Counterexample::new(
                    "grassmannian_tab",
                    word_json(&w),
                    q.rows(),
                    tab.as_ref()
                        .map(|x| x.rows().to_vec())
                        .map_err(|e| e.to_string()),
                )
            });
        }
    });
    tally.into_report(
        "grassmannian_tab",
        format!("Grassmannian σ in S<={n_max}"),
        started,
        false,
    )
}

/// The Little map followed by normalization: a minimal Grassmannian word
/// reached from `w` by bumps alone.
pub fn canonical_word(w: &Word) -> Result<Word> {
    let map = ls(w)?;
    minimal_grassmannian_normalize(&map.grassmannian_word).map(|(v, _)| v)
}

/// Words with equal `Q` reach one common canonical word, and words with
/// different `Q` never do.
pub fn verify_lam(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let rows = map_words(n_max, |w| (w.clone(), eg(w).q, canonical_word(w)));
    let mut tally = Tally::default();
    let mut by_q: BTreeMap<Tableau, BTreeSet<Word>> = BTreeMap::new();
    let mut by_canonical: BTreeMap<Word, BTreeSet<Tableau>> = BTreeMap::new();
    for (w, q, canonical) in rows {
        match canonical {
            Ok(c) => {
                let minimal = c.is_empty() || c.permutation().is_minimal_grassmannian();
                tally.check(minimal, || {
                    Counterexample::new(
                        "canonical_word",
                        word_json(&w),
                        "minimal Grassmannian",
                        c.letters(),
                    )
                });
                by_q.entry(q.clone()).or_default().insert(c.clone());
                by_canonical.entry(c).or_default().insert(q);
            }
            Err(e) => {
                tally.case();
                tally.fail(Counterexample::new(
                    "canonical_word",
                    word_json(&w),
                    "a word",
                    e.to_string(),
                ));
            }
        }
    }
    for (q, words) in &by_q {
        tally.check(words.len() == 1, || {
            let all: Vec<_> = words.iter().map(|w| w.letters().to_vec()).collect();
            Counterexample::new(
                "canonical_word",
                json!({ "q": q.rows() }),
                "one canonical word",
                all,
            )
        });
    }
    for (c, qs) in &by_canonical {
        tally.check(qs.len() == 1, || {
            let all: Vec<_> = qs.iter().map(|q| q.rows().to_vec()).collect();
            Counterexample::new("canonical_word", word_json(c), "one recording tableau", all)
        });
    }
    tally.into_report("lam", envelope(n_max), started, false)
}

/// Words with the same `Q` have the same descent set.
pub fn verify_descent_corollary(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let rows = map_words(n_max, |w| (eg(w).q, w.descent_set(), w.clone()));
    let mut tally = Tally::default();
    let mut first: BTreeMap<Tableau, (Vec<usize>, Word)> = BTreeMap::new();
    for (q, descents, w) in rows {
        match first.get(&q) {
            Some((d, v)) => tally.check(d == &descents, || {
                Counterexample::new(
                    "descent_set",
                    json!({ "letters": w.letters(), "same_q_as": v.letters() }),
                    d,
                    &descents,
                )
            }),
            None => {
                tally.case();
                first.insert(q, (descents, w));
            }
        }
    }
    tally.into_report("descent_corollary", envelope(n_max), started, false)
}

/// `LS(w(σ)) = Q'(σ)` and `LS(w(σ^-1)) = P'(σ)` against Schensted
/// insertion, plus `P(w(σ))` halved equals `P'(σ)`.
pub fn verify_rs_embedding(n: usize) -> VerificationReport {
    let started = Instant::now();
    let tally = for_each_perm(n, |sigma, t| {
        let (p_rs, q_rs) = rs(sigma);
        let w = rs_embedding_word(sigma);
        let w_inv = rs_embedding_word(&sigma.inverse());
        let lq = ls(&w).map(|m| m.tableau);
        let lp = ls(&w_inv).map(|m| m.tableau);
        let halved = halve_odd_entries(&eg(&w).p);
        let input = json!({ "perm": sigma.as_slice() });
        t.check(lq.as_ref() == Ok(&q_rs), || {
            Counterexample::new(
                "ls",
                json!({ "perm": sigma.as_slice(), "word": w.letters() }),
                q_rs.rows(),
                format!("{lq:?}"),
            )
        });
        t.check(lp.as_ref() == Ok(&p_rs), || {
            Counterexample::new(
                "ls",
                json!({ "perm": sigma.as_slice(), "word": w_inv.letters() }),
                p_rs.rows(),
                format!("{lp:?}"),
            )
        });
        t.check(halved.as_ref() == Ok(&p_rs), || {
            Counterexample::new(
                "halve_odd_entries",
                input.clone(),
                p_rs.rows(),
                format!("{halved:?}"),
            )
        });
    });
    tally.into_report("rs_embedding", format!("all σ in S_{n}"), started, false)
}

/// Upper bound on bumps in one random walk.
pub const WALK_LIMIT: usize = 256;

/// A seeded walk of uniformly chosen valid bumps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub starts: Vec<usize>,
    /// The Grassmannian word reached, if any.
    pub end: Option<Word>,
}

/// Bumps `w` at uniformly random valid starts until the word is
/// Grassmannian or `limit` bumps have been made.
pub fn random_walk(w: &Word, rng: &mut impl Rng, limit: usize) -> Result<Walk> {
    let mut current = w.clone();
    let mut starts = Vec::new();
    loop {
        if is_grassmannian_word(&current) {
            return Ok(Walk {
                starts,
                end: Some(current),
            });
        }
        if starts.len() == limit {
            return Ok(Walk { starts, end: None });
        }
        let choices = valid_starts(&current);
        let start = choices[rng.gen_range(0..choices.len())];
        current = little_bump(&current, start)?.result;
        starts.push(start);
    }
}

/// The generator for walk `trial` under `seed`.
pub fn walk_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `Tab(v) = LS(w)` whenever random bumps take `w` to a Grassmannian `v`.
/// Each trial draws `w` uniformly from the reduced words of `S_n`; walks
/// that hit [`WALK_LIMIT`] count as inconclusive.
pub fn verify_any_sequence_corollary(n: usize, trials: u64, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let words = map_words(n, Word::clone);
    let tally = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut t = Tally::default();
            let mut rng = walk_rng(seed, trial);
            let w = &words[rng.gen_range(0..words.len())];
            let input = json!({ "letters": w.letters(), "seed": seed, "trial": trial });
            let expected = ls(w).expect("reduced").tableau;
            match random_walk(w, &mut rng, WALK_LIMIT) {
                Ok(Walk { end: Some(v), starts }) => {
                    let tab = grassmannian_tab(&v);
                    t.check(tab.as_ref() == Ok(&expected), || {
                        Counterexample::new(
                            "random_walk",
                            input.clone(),
                            expected.rows(),
                            json!({ "starts": starts, "end": v.letters(), "tab": format!("{tab:?}") }),
                        )
                    });
                }
                Ok(Walk { end: None, .. }) => t.inconclusive += 1,
                Err(e) => {
                    t.case();
                    t.fail(Counterexample::new("random_walk", input, "a walk", e.to_string()));
                }
            }
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    tally.into_report(
        "any_sequence",
        format!("{trials} walks over S_{n}, seed {seed}, <= {WALK_LIMIT} bumps"),
        started,
        true,
    )
}
