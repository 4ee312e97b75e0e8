//! Exhaustive checks of Edelman-Greene insertion against Little bumps.
//!
//! Every `verify_*` function sweeps a finite domain and returns a
//! [`VerificationReport`]. A report passes iff it has no failures. Sweeps
//! run in parallel over permutations and merge in a fixed order, so the JSON
//! of a rerun differs only in `elapsed_ms`.

pub mod checks;
mod report;
mod sweep;

pub use checks::bumps::{
    commute_square, transitional_cases, verify_bump_descents, verify_ck_bump_commute,
    verify_q_bump_invariance, verify_round_trip, CommuteCase, Square,
};
pub use checks::enumeration::{
    figure_insertion_states, figure_word, stanley_formula, verify_figure_insertion,
    verify_figure_little, verify_stanley,
};
pub use checks::insertion::{
    calibrate, increasing_tableaux, verify_calibration, verify_ck_classes, verify_ck_q_action,
    verify_ck_q_action_with, verify_column_word_invariance, verify_column_word_tableaux,
    verify_eg_invariants, verify_same_map, Calibration, LabelConvention, CALIBRATED_CONVENTION,
};
pub use checks::little::{
    canonical_word, random_walk, verify_any_sequence_corollary, verify_descent_corollary,
    verify_grassmannian_tab, verify_lam, verify_rs_embedding, walk_rng, Walk, WALK_LIMIT,
};
pub use report::{Counterexample, VerificationReport, MAX_RECORDED};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Profile {
    /// Largest `n` swept; clamped to `2..=6`.
    pub n_max: usize,
    /// Adds the `S_6` embedding and same-map sweeps.
    pub extended: bool,
    pub seed: u64,
}

impl Default for Profile {
    fn default() -> Self {
        Profile {
            n_max: 5,
            extended: false,
            seed: 0x5EED,
        }
    }
}

/// Walks per randomized run.
pub const DEFAULT_TRIALS: u64 = 1000;

/// Every check under `profile`, sorted by check name then envelope.
///
/// The move/bump commuting sweep stops at `S_5` and the random walks at
/// `S_4`. Label calibration always runs on `S_4`. The move action on `Q`
/// sweeps at least `S_3`, since smaller words admit no moves and an empty
/// sweep does not pass.
pub fn run_all(profile: Profile) -> Vec<VerificationReport> {
    let n = profile.n_max.clamp(2, 6);
    let mut reports = vec![
        verify_figure_insertion(),
        verify_figure_little(),
        verify_stanley(n),
        verify_same_map(n),
        verify_eg_invariants(n),
        verify_ck_classes(n),
        verify_ck_q_action(n.max(3)),
        verify_ck_bump_commute(n.min(5)),
        verify_q_bump_invariance(n),
        verify_bump_descents(n),
        verify_round_trip(n),
        verify_column_word_tableaux(),
        verify_column_word_invariance(n),
        verify_grassmannian_tab(n),
        verify_lam(n),
        verify_descent_corollary(n),
        verify_rs_embedding(n),
        verify_any_sequence_corollary(n.min(4), DEFAULT_TRIALS, profile.seed),
    ];
    if n >= 4 {
        reports.push(verify_calibration());
    }
    if profile.extended && n < 6 {
        reports.push(verify_rs_embedding(6));
        reports.push(verify_same_map(6));
    }
    reports.sort_by(|a, b| (&a.check, &a.envelope).cmp(&(&b.check, &b.envelope)));
    reports
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}
