use redword_core::{apply_ck, eg, CkMove, Word};
use redword_verify::*;
use serde_json::Value;

#[test]
fn tiny_profile_passes() {
    let reports = run_all(Profile {
        n_max: 2,
        extended: false,
        seed: 1,
    });
    assert!(all_passed(&reports), "{:#?}", reports);
    assert!(reports.iter().all(|r| r.cases > 0));
}

#[test]
fn profile_four_passes_and_is_sorted() {
    let reports = run_all(Profile {
        n_max: 4,
        ..Profile::default()
    });
    assert!(all_passed(&reports));
    let keys: Vec<_> = reports
        .iter()
        .map(|r| (r.check.clone(), r.envelope.clone()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(keys.iter().any(|(c, _)| c == "calibration"));
}

#[test]
fn reruns_are_identical_apart_from_timing() {
    let a = verify_any_sequence_corollary(4, 200, 99);
    let b = verify_any_sequence_corollary(4, 200, 99);
    assert_eq!(a.canonical_json(), b.canonical_json());
    assert_eq!(
        verify_lam(4).canonical_json(),
        verify_lam(4).canonical_json()
    );
    let c = verify_any_sequence_corollary(4, 200, 100);
    assert_eq!(c.cases + c.inconclusive.unwrap(), 200);
}

#[test]
fn report_json_shape() {
    let r = verify_same_map(3);
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["check"], "same_map");
    assert_eq!(v["envelope"], "S<=3");
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert_eq!(v["failures"], Value::Array(vec![]));
    assert!(v["elapsed_ms"].is_u64());
    assert!(v.get("inconclusive").is_none());
    let back: VerificationReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn wrong_convention_counterexamples_replay() {
    let r = verify_ck_q_action_with(4, LabelConvention::Literal);
    assert!(!r.passed());
    assert!(r.failures.len() <= MAX_RECORDED);
    assert!(r.failure_count >= r.failures.len() as u64);
    for f in &r.failures {
        let letters: Vec<u32> = serde_json::from_value(f.input["letters"].clone()).unwrap();
        let w = Word::new(letters).unwrap();
        let mv: CkMove = redword_core::all_ck_moves(&w)
            .into_iter()
            .find(|m| m.to_string() == f.input["move"])
            .unwrap();
        let got = eg(&apply_ck(&w, mv).unwrap()).q;
        assert_eq!(serde_json::to_value(got.rows()).unwrap(), f.got);
        let swaps = LabelConvention::Literal.candidate_swaps(mv);
        let q = eg(&w).q;
        assert!(swaps
            .iter()
            .all(|&(i, j)| q.swap_labels(i, j).ok().as_ref() != Some(&got)));
    }
}

#[test]
fn literal_fails_on_the_smallest_move() {
    // 1 2 1 -> 2 1 2 exchanges the labels of positions 1 and 2, i.e. 3 and 2
    let w = Word::new(vec![1, 2, 1]).unwrap();
    let mv = redword_core::all_ck_moves(&w)[0];
    assert_eq!(LabelConvention::Shifted.candidate_swaps(mv), [(0, 1)]);
    let q = eg(&w).q;
    let got = eg(&apply_ck(&w, mv).unwrap()).q;
    assert_eq!(q.swap_labels(0, 1).unwrap(), got);
    assert_ne!(q.swap_labels(1, 2).unwrap(), got);
}

#[test]
fn calibration_selects_exactly_one() {
    let cal = calibrate(4);
    assert!(!cal.literal_passes);
    assert!(cal.shifted_passes);
    assert_eq!(cal.winner(), Some(CALIBRATED_CONVENTION));
}
