//! Counting reduced words of the longest element, and the worked examples.

use std::time::Instant;

use num_bigint::BigUint;
use redword_core::{eg_history, ls, Permutation, Shape, Tableau, Word};
use serde_json::json;

use crate::report::{Counterexample, Tally, VerificationReport};

/// `C(n,2)! / prod_{j=2}^{n-1} (2j-1)^(n-j)`, the number of reduced words
/// of the reverse permutation of `S_n`.
pub fn stanley_formula(n: usize) -> BigUint {
    let m = n * n.saturating_sub(1) / 2;
    let numerator = (1..=m).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k));
    let denominator = (2..n).fold(BigUint::from(1u32), |acc, j| {
        acc * BigUint::from(2 * j - 1).pow((n - j) as u32)
    });
    numerator / denominator
}

/// Enumerated `|Red(reverse(n))|` against the product formula and the
/// hook-length count of the staircase, for `2 <= n <= n_max`.
pub fn verify_stanley(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    for n in 2..=n_max {
        let target = Permutation::reverse(n);
        let mut count = 0u64;
        let mut prev: Option<Word> = None;
        let mut well_formed = true;
        for w in target.reduced_words() {
            count += 1;
            well_formed &= w.is_reduced() && w.permutation() == target;
            well_formed &= prev.as_ref().is_none_or(|p| p < &w);
            prev = Some(w);
        }
        let enumerated = BigUint::from(count);
        let formula = stanley_formula(n);
        let hooks = Shape::staircase(n).expect("n >= 2").hook_length_count();
        tally.check(
            well_formed && enumerated == formula && formula == hooks,
            || {
                Counterexample::new(
                    "enumerate_reduced_words",
                    json!({ "n": n }),
                    json!({ "formula": formula.to_string(), "hook_length": hooks.to_string() }),
                    json!({ "enumerated": count, "sorted_and_valid": well_formed }),
                )
            },
        );
    }
    tally.into_report(
        "stanley",
        format!("reverse(n), 2<=n<={n_max}"),
        started,
        false,
    )
}

/// The insertion word from the worked example, `4 2 1 2 3 2 4`.
pub fn figure_word() -> Word {
    Word::new(vec![4, 2, 1, 2, 3, 2, 4]).expect("positive letters")
}

fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("valid literal")
}

/// Every intermediate `(P_j, Q_j)` of inserting the example word.
pub fn figure_insertion_states() -> Vec<(Tableau, Tableau)> {
    vec![
        (tab(&[&[4]]), tab(&[&[1]])),
        (tab(&[&[2], &[4]]), tab(&[&[1], &[2]])),
        (tab(&[&[2, 3], &[4]]), tab(&[&[1, 3], &[2]])),
        (tab(&[&[2, 3], &[3], &[4]]), tab(&[&[1, 3], &[2], &[4]])),
        (
            tab(&[&[1, 3], &[2], &[3], &[4]]),
            tab(&[&[1, 3], &[2], &[4], &[5]]),
        ),
        (
            tab(&[&[1, 2], &[2, 3], &[3], &[4]]),
            tab(&[&[1, 3], &[2, 6], &[4], &[5]]),
        ),
        (
            tab(&[&[1, 2, 4], &[2, 3], &[3], &[4]]),
            tab(&[&[1, 3, 7], &[2, 6], &[4], &[5]]),
        ),
    ]
}

pub fn verify_figure_insertion() -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    let got = eg_history(&figure_word());
    let expected = figure_insertion_states();
    tally.check(got.len() == expected.len(), || {
        Counterexample::new(
            "eg_history",
            json!([4, 2, 1, 2, 3, 2, 4]),
            expected.len(),
            got.len(),
        )
    });
    for (j, (g, e)) in got.iter().zip(&expected).enumerate() {
        tally.check(g == e, || {
            Counterexample::new(
                "eg_history",
                json!({ "letters": [4, 2, 1, 2, 3, 2, 4], "step": j + 1 }),
                json!({ "p": e.0.rows(), "q": e.1.rows() }),
                json!({ "p": g.0.rows(), "q": g.1.rows() }),
            )
        });
    }
    tally.into_report("figure_insertion", "w=4212324".into(), started, false)
}

pub fn verify_figure_little() -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    let input = json!([4, 2, 1, 2, 3, 2, 4]);
    match ls(&figure_word()) {
        Ok(map) => {
            let q = tab(&[&[1, 3, 7], &[2, 6], &[4], &[5]]);
            tally.check(map.tableau == q, || {
                Counterexample::new("ls", input.clone(), q.rows(), map.tableau.rows())
            });
            let labels = map
                .grassmannian
                .as_ref()
                .map(|g| (g.row_labels.clone(), g.col_labels.clone()));
            let want = (vec![7, 5, 3, 2], vec![1, 4, 6]);
            tally.check(labels.as_ref() == Some(&want), || {
                Counterexample::new("ls", input.clone(), &want, &labels)
            });
            let starts: Vec<usize> = map.traces.iter().map(|t| t.start).collect();
            tally.check(starts == [7, 7], || {
                Counterexample::new("ls", input.clone(), [7, 7], &starts)
            });
        }
        Err(e) => tally.fail(Counterexample::new("ls", input, "a tableau", e.to_string())),
    }
    tally.into_report("figure_little", "w=4212324".into(), started, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        let values: Vec<_> = (2..=6).map(|n| stanley_formula(n).to_string()).collect();
        assert_eq!(values, ["1", "2", "16", "768", "292864"]);
    }

    #[test]
    fn small_sweep_passes() {
        assert!(verify_stanley(4).passed());
    }

    #[test]
    fn figures_pass() {
        assert!(verify_figure_insertion().passed());
        assert!(verify_figure_little().passed());
    }
}
