//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! with its wall time and budget (visible with `--nocapture`), and fails if
//! any sweep fails or the budget is exceeded.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use redword_core::{eg, eg_history, ls, Permutation, Shape, Tableau, Word};
use redword_verify::*;

fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Runs `body`, which returns its reports plus any extra failed
/// assertions, and prints the verdict line.
fn criterion(
    name: &str,
    budget: Duration,
    body: impl FnOnce() -> (Vec<VerificationReport>, Vec<String>),
) {
    let started = Instant::now();
    let (reports, mut problems) = body();
    let elapsed = started.elapsed();
    for r in &reports {
        if !r.passed() {
            problems.push(r.summary());
            for f in &r.failures {
                problems.push(format!("  {}", serde_json::to_string(f).unwrap()));
            }
        }
    }
    if elapsed > budget {
        problems.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    let cases: u64 = reports.iter().map(|r| r.cases).sum();
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "{verdict} {name}: cases={cases} time={:.3}ms budget={}ms",
        elapsed.as_secs_f64() * 1e3,
        budget.as_millis()
    );
    assert!(problems.is_empty(), "{name}:\n{}", problems.join("\n"));
}

fn ms(n: u64) -> Duration {
    Duration::from_millis(n)
}

fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

#[test]
fn worked_example_insertion_states() {
    let w = figure_word();
    // warm the allocator so the timed run measures insertion only
    let _ = eg_history(&w);
    criterion("worked example insertion, all seven states", ms(1), || {
        let history = eg_history(&w);
        let result = eg(&w);
        let mut problems = Vec::new();
        if history != figure_insertion_states() {
            problems.push(format!("history {history:?}"));
        }
        if result.p != tab(&[&[1, 2, 4], &[2, 3], &[3], &[4]]) {
            problems.push(format!("P {:?}", result.p));
        }
        if result.q != tab(&[&[1, 3, 7], &[2, 6], &[4], &[5]]) {
            problems.push(format!("Q {:?}", result.q));
        }
        (vec![verify_figure_insertion()], problems)
    });
}

#[test]
fn worked_example_little_map() {
    let w = figure_word();
    criterion(
        "worked example Little map and Grassmannian labels",
        ms(10),
        || {
            let map = ls(&w).unwrap();
            let mut problems = Vec::new();
            if map.tableau != tab(&[&[1, 3, 7], &[2, 6], &[4], &[5]]) {
                problems.push(format!("LS {:?}", map.tableau));
            }
            let g = map.grassmannian.clone().unwrap();
            if g.row_labels != [7, 5, 3, 2] || g.col_labels != [1, 4, 6] {
                problems.push(format!("labels {:?} / {:?}", g.row_labels, g.col_labels));
            }
            (vec![verify_figure_little()], problems)
        },
    );
}

#[test]
fn longest_element_count() {
    criterion(
        "reduced words of the longest element, n = 3, 4, 5",
        secs(5),
        || {
            let mut problems = Vec::new();
            for (n, want) in [(3usize, 2u64), (4, 16), (5, 768)] {
                let enumerated = Permutation::reverse(n).reduced_words().count() as u64;
                let formula = stanley_formula(n);
                let hooks = Shape::staircase(n).unwrap().hook_length_count();
                let want = BigUint::from(want);
                if BigUint::from(enumerated) != want || formula != want || hooks != want {
                    problems.push(format!("n={n}: {enumerated} / {formula} / {hooks}"));
                }
            }
            (vec![verify_stanley(5)], problems)
        },
    );
}

#[test]
fn same_map_sweep() {
    criterion(
        "Q(w) = LS(w) for all reduced words, n <= 5",
        secs(60),
        || {
            let mut problems = Vec::new();
            let empty = Word::empty();
            if ls(&empty).unwrap().tableau != eg(&empty).q {
                problems.push("empty word".into());
            }
            (vec![verify_same_map(5)], problems)
        },
    );
}

#[test]
fn bump_preserves_q_sweep() {
    criterion(
        "Q(w↑) = Q(w) for all words and starts, n <= 5",
        secs(120),
        || (vec![verify_q_bump_invariance(5)], Vec::new()),
    );
}

#[test]
fn move_bump_commute_sweep() {
    criterion(
        "(wα)↑ = (w↑)α over S_4 plus four transitional cases",
        secs(60),
        || {
            let mut problems = Vec::new();
            for c in transitional_cases() {
                let got = commute_square(&c.word, c.mv, c.wires);
                if got != Square::Commutes(c.expected.clone()) {
                    problems.push(format!("{c:?} gave {got:?}"));
                }
            }
            (vec![verify_ck_bump_commute(4)], problems)
        },
    );
}

#[test]
fn move_action_on_q_calibrated() {
    criterion(
        "label calibration on S_4, move action on Q over S_5",
        secs(60),
        || {
            let mut problems = Vec::new();
            let cal = calibrate(4);
            if cal.winner() != Some(CALIBRATED_CONVENTION) {
                problems.push(format!("calibration {cal:?}"));
            }
            (vec![verify_ck_q_action(5)], problems)
        },
    );
}

#[test]
fn q_fibers_collapse_sweep() {
    criterion(
        "each Q-fiber normalizes to one word, n <= 5",
        secs(120),
        || (vec![verify_lam(5)], Vec::new()),
    );
}

#[test]
fn rs_embedding_sweep() {
    criterion(
        "LS of the odd-letter embedding against RS, S_5",
        secs(30),
        || (vec![verify_rs_embedding(5)], Vec::new()),
    );
}

#[test]
fn descent_sweeps() {
    criterion(
        "bumps keep descents, equal Q gives equal descents, n <= 5",
        secs(60),
        || {
            (
                vec![verify_bump_descents(5), verify_descent_corollary(5)],
                Vec::new(),
            )
        },
    );
}

#[test]
fn inverse_bump_round_trip() {
    criterion("inverse bump undoes every bump, S_4", secs(60), || {
        (vec![verify_round_trip(4)], Vec::new())
    });
}

#[test]
fn column_word_properties() {
    criterion(
        "column words: P(τ(T)) = T, consecutive Q columns, bump invariance",
        secs(60),
        || {
            (
                vec![
                    verify_column_word_tableaux(),
                    verify_column_word_invariance(5),
                ],
                Vec::new(),
            )
        },
    );
}
