//! Checks on single Little bumps.

use std::time::Instant;

use redword_core::{
    all_ck_moves, apply_ck, deletion_is_reduced, eg, inverse_bump, little_bump, undo_bump,
    valid_starts, wiring_diagram, CkKind, CkMove, Direction, Word,
};
use serde_json::json;

use crate::report::{Counterexample, Tally, VerificationReport};
use crate::sweep::{envelope, for_each_word, word_json};

fn bump_error(t: &mut Tally, w: &Word, start: usize, e: impl ToString) {
    t.case();
    t.fail(Counterexample::new(
        "little_bump",
        json!({ "letters": w.letters(), "start": start }),
        "a reduced result",
        e.to_string(),
    ));
}

/// `Q(w↑) = Q(w)` for every reduced word and every valid start.
pub fn verify_q_bump_invariance(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let tally = for_each_word(n_max, |w, t| {
        let q = eg(w).q;
        for start in valid_starts(w) {
            match little_bump(w, start) {
                Ok(trace) => {
                    let got = eg(&trace.result).q;
                    t.check(got == q, || {
                        Counterexample::new(
                            "little_bump",
                            json!({ "letters": w.letters(), "start": start }),
                            q.rows(),
                            got.rows(),
                        )
                    });
                }
                Err(e) => bump_error(t, w, start, e),
            }
        }
    });
    tally.into_report("q_bump_invariance", envelope(n_max), started, false)
}

/// A bump keeps the length and the positions of descents.
pub fn verify_bump_descents(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let tally = for_each_word(n_max, |w, t| {
        let descents = w.descent_set();
        for start in valid_starts(w) {
            match little_bump(w, start) {
                Ok(trace) => {
                    let got = trace.result.descent_set();
                    let ok = trace.result.len() == w.len() && got == descents;
                    t.check(ok, || {
                        Counterexample::new(
                            "little_bump",
                            json!({ "letters": w.letters(), "start": start }),
                            &descents,
                            json!({ "result": trace.result.letters(), "descents": got }),
                        )
                    });
                }
                Err(e) => bump_error(t, w, start, e),
            }
        }
    });
    tally.into_report("bump_descents", envelope(n_max), started, false)
}

/// `undo_bump` recovers the word for every valid start. The raw increment
/// bump from the terminal index gives the word back, one higher everywhere
/// when the bump ended in a shift.
pub fn verify_round_trip(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let tally =
        for_each_word(n_max, |w, t| {
            for start in valid_starts(w) {
                let trace = match little_bump(w, start) {
                    Ok(trace) => trace,
                    Err(e) => {
                        bump_error(t, w, start, e);
                        continue;
                    }
                };
                let undone = undo_bump(&trace);
                t.check(undone.as_ref() == Ok(w), || {
                    Counterexample::new(
                        "undo_bump",
                        json!({ "letters": w.letters(), "start": start }),
                        w.letters(),
                        undone
                            .as_ref()
                            .map(|u| u.letters().to_vec())
                            .map_err(|e| e.to_string()),
                    )
                });
                let raw = inverse_bump(&trace.result, trace.terminal_index()).map(|b| b.result);
                let want = if trace.shifted() {
                    w.shifted(1).expect("raising letters is always valid")
                } else {
                    w.clone()
                };
                t.check(raw.as_ref() == Ok(&want), || {
                Counterexample::new(
                    "inverse_bump",
                    json!({ "letters": trace.result.letters(), "start": trace.terminal_index() }),
                    want.letters(),
                    raw.as_ref().map(|u| u.letters().to_vec()).map_err(|e| e.to_string()),
                )
            });
            }
        });
    tally.into_report("round_trip", envelope(n_max), started, false)
}

/// One commuting square: `w`, a move, the wires of the bumped crossing and
/// the word both routes must reach.
#[derive(Debug, Clone)]
pub struct CommuteCase {
    pub word: Word,
    pub mv: CkMove,
    pub wires: (u32, u32),
    pub expected: Word,
}

/// The transitional bumps drawn for each move type: in all four the move
/// changes type across the bump.
pub fn transitional_cases() -> Vec<CommuteCase> {
    let case = |w: &[u32], kind, direction, wires, expected: &[u32]| CommuteCase {
        word: Word::new(w.to_vec()).expect("positive"),
        mv: CkMove {
            pos: 1,
            kind,
            direction,
        },
        wires,
        expected: Word::new(expected.to_vec()).expect("positive"),
    };
    vec![
        case(
            &[3, 1, 2],
            CkKind::One,
            Direction::Backward,
            (3, 4),
            &[1, 2, 1],
        ),
        case(
            &[2, 1, 3],
            CkKind::Two,
            Direction::Forward,
            (2, 4),
            &[1, 2, 1],
        ),
        case(
            &[2, 3, 2],
            CkKind::Three,
            Direction::Forward,
            (2, 3),
            &[3, 1, 2],
        ),
        case(
            &[2, 3, 2],
            CkKind::Three,
            Direction::Forward,
            (3, 4),
            &[2, 1, 3],
        ),
    ]
}

/// Outcome of both routes around one square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Square {
    /// Both bumps defined and some move at the window joins them; holds the
    /// common word.
    Commutes(Word),
    /// Both bumps defined and no move at the window joins them.
    Differs {
        bump_then_move: Vec<Word>,
        move_then_bump: Word,
    },
    /// The wires' crossing is a valid start on one side only.
    StartMismatch { on_word: bool, on_moved: bool },
    /// Neither side can start a bump there.
    Undefined,
}

/// `(wα)↑` against every `(w↑)β` with `β` a move at α's window.
pub fn commute_square(w: &Word, mv: CkMove, wires: (u32, u32)) -> Square {
    let moved = apply_ck(w, mv).expect("move applies");
    let at = |x: &Word| {
        wiring_diagram(x)
            .crossing_of_values(wires.0, wires.1)
            .expect("both words have the same inversions")
    };
    let (s, sm) = (at(w), at(&moved));
    let (on_word, on_moved) = (deletion_is_reduced(w, s), deletion_is_reduced(&moved, sm));
    match (on_word, on_moved) {
        (false, false) => return Square::Undefined,
        (true, true) => {}
        _ => return Square::StartMismatch { on_word, on_moved },
    }
    let bumped = little_bump(w, s).expect("valid start").result;
    let target = little_bump(&moved, sm).expect("valid start").result;
    let candidates: Vec<Word> = all_ck_moves(&bumped)
        .into_iter()
        .filter(|b| b.pos == mv.pos)
        .map(|b| apply_ck(&bumped, b).expect("listed moves apply"))
        .collect();
    if candidates.contains(&target) {
        Square::Commutes(target)
    } else {
        Square::Differs {
            bump_then_move: candidates,
            move_then_bump: target,
        }
    }
}

fn square_json(w: &Word, mv: CkMove, wires: (u32, u32)) -> serde_json::Value {
    json!({ "letters": w.letters(), "move": mv.to_string(), "wires": [wires.0, wires.1] })
}

/// `(wα)↑ = (w↑)α'` for every word, move and crossing, plus the drawn
/// transitional cases.
pub fn verify_ck_bump_commute(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut tally = for_each_word(n_max, |w, t| {
        let pairs = wiring_diagram(w).crossing_pairs().to_vec();
        for mv in all_ck_moves(w) {
            for &wires in &pairs {
                match commute_square(w, mv, wires) {
                    Square::Commutes(_) => t.case(),
                    Square::Undefined => {}
                    other => {
                        t.case();
                        t.fail(Counterexample::new(
                            "commute_square",
                            square_json(w, mv, wires),
                            "commuting square",
                            format!("{other:?}"),
                        ));
                    }
                }
            }
        }
    });
    for c in transitional_cases() {
        let got = commute_square(&c.word, c.mv, c.wires);
        tally.check(got == Square::Commutes(c.expected.clone()), || {
            Counterexample::new(
                "commute_square",
                square_json(&c.word, c.mv, c.wires),
                word_json(&c.expected),
                format!("{got:?}"),
            )
        });
    }
    tally.into_report(
        "ck_bump_commute",
        format!("{} + 4 transitional cases", envelope(n_max)),
        started,
        false,
    )
}
