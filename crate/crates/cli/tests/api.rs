use redword_cli::api::{handle_request, ROUTES};
use serde_json::{json, Value};

fn ok(route: &str, body: Value) -> Value {
    let r = handle_request(route, &body);
    assert_eq!(r.status, 200, "{route} {body}: {}", r.body);
    r.body
}

fn error(route: &str, body: Value) -> (u16, String) {
    let r = handle_request(route, &body);
    assert_ne!(r.status, 200, "{route} {body} should fail");
    let err = &r.body["error"];
    assert!(err["message"].is_string());
    assert!(err.get("at").is_some());
    (r.status, err["code"].as_str().unwrap().to_string())
}

#[test]
fn eg_on_the_worked_example() {
    let body = ok("/api/eg", json!({ "letters": [4, 2, 1, 2, 3, 2, 4] }));
    assert_eq!(body["p"], json!([[1, 2, 4], [2, 3], [3], [4]]));
    assert_eq!(body["q"], json!([[1, 3, 7], [2, 6], [4], [5]]));
    let steps = body["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 7);
    assert_eq!(steps[0]["letter"], 4);
    assert_eq!(steps[0]["p"], json!([[4]]));
    assert_eq!(steps[3]["p"], json!([[2, 3], [3], [4]]));
    assert_eq!(steps[6]["p"], body["p"]);
    assert_eq!(steps[6]["box"], json!([1, 3]));
    assert_eq!(body["input"], json!({ "letters": [4, 2, 1, 2, 3, 2, 4] }));
}

#[test]
fn eg_on_the_empty_word() {
    let body = ok("/api/eg", json!({ "letters": [] }));
    assert_eq!(body["p"], json!([]));
    assert_eq!(body["q"], json!([]));
    assert_eq!(body["steps"], json!([]));
}

#[test]
fn bump_shifts_once() {
    let body = ok("/api/bump", json!({ "letters": [1, 2, 1], "start": 1 }));
    let trace = &body["trace"];
    assert_eq!(trace["steps"], json!([{ "index": 1, "shift": true }]));
    assert_eq!(trace["result"]["letters"], json!([1, 3, 2]));
}

#[test]
fn bump_by_wires_matches_bump_by_index() {
    let w = json!([4, 2, 1, 2, 3, 2, 4]);
    let by_index = ok("/api/bump", json!({ "letters": w, "start": 7 }));
    let by_pair = ok("/api/bump", json!({ "letters": w, "value_pair": [1, 4] }));
    assert_eq!(by_index["trace"], by_pair["trace"]);
    assert_eq!(
        error(
            "/api/bump",
            json!({ "letters": w, "start": 7, "value_pair": [1, 4] })
        ),
        (400, "bad_request".into())
    );
}

#[test]
fn inverse_bump_reverses_a_shifting_bump() {
    // [1,2,1] bumps to [1,3,2] by a shift, so going back lands one higher
    let back = ok(
        "/api/inverse_bump",
        json!({ "letters": [1, 3, 2], "start": 1 }),
    );
    assert_eq!(
        back["trace"]["steps"],
        json!([{ "index": 1, "from": 1, "to": 2 }])
    );
    assert_eq!(back["trace"]["result"]["letters"], json!([2, 3, 2]));
}

#[test]
fn little_returns_tableau_and_traces() {
    let body = ok("/api/little", json!({ "letters": [4, 2, 1, 2, 3, 2, 4] }));
    assert_eq!(body["tableau"], json!([[1, 3, 7], [2, 6], [4], [5]]));
    assert_eq!(body["traces"].as_array().unwrap().len(), 2);
    assert_eq!(body["grassmannian"]["row_labels"], json!([7, 5, 3, 2]));
    assert_eq!(body["grassmannian"]["col_labels"], json!([1, 4, 6]));
    assert_eq!(body["canonical_start"], 7);
}

#[test]
fn ck_moves_and_apply_agree() {
    let body = ok("/api/ck/moves", json!({ "letters": [2, 3, 2] }));
    let moves = body["moves"].as_array().unwrap();
    assert_eq!(moves.len(), 1);
    let mv = &moves[0];
    assert_eq!(mv["result"], json!([3, 2, 3]));
    let applied = ok(
        "/api/ck/apply",
        json!({ "letters": [2, 3, 2], "pos": mv["pos"], "kind": mv["kind"], "direction": mv["direction"] }),
    );
    assert_eq!(applied["result"], mv["result"]);
    assert_eq!(
        error(
            "/api/ck/apply",
            json!({ "letters": [2, 3, 2], "pos": 1, "kind": "type1", "direction": "forward" })
        ),
        (422, "inapplicable_move".into())
    );
}

#[test]
fn tab_and_normalize() {
    let g = json!([6, 4, 1, 2, 5, 3, 4]);
    let body = ok("/api/tab", json!({ "letters": g }));
    assert_eq!(body["tableau"], json!([[1, 3, 7], [2, 6], [4], [5]]));
    let body = ok("/api/normalize", json!({ "letters": g }));
    let result = body["result"].clone();
    assert_eq!(
        ok("/api/tab", json!({ "letters": result }))["tableau"],
        json!([[1, 3, 7], [2, 6], [4], [5]])
    );
    assert_eq!(
        error("/api/tab", json!({ "letters": [1, 3] })),
        (422, "not_grassmannian".into())
    );
}

#[test]
fn enumerate_counts_and_truncates() {
    let body = ok("/api/enumerate", json!({ "perm": [4, 3, 2, 1] }));
    assert_eq!(body["words"].as_array().unwrap().len(), 16);
    assert_eq!(body["length"], 6);
    assert_eq!(body["truncated"], false);
    let body = ok(
        "/api/enumerate",
        json!({ "perm": [4, 3, 2, 1], "limit": 5 }),
    );
    assert_eq!(body["words"].as_array().unwrap().len(), 5);
    assert_eq!(body["truncated"], true);
    assert_eq!(
        error("/api/enumerate", json!({ "perm": [1, 1] })),
        (400, "invalid_permutation".into())
    );
}

#[test]
fn render_routes() {
    let body = ok(
        "/api/render/svg",
        json!({ "letters": [4, 2, 1, 2, 3, 2, 4], "highlight": [3] }),
    );
    let svg = body["svg"].as_str().unwrap();
    assert_eq!(svg.matches("<circle id=\"crossing-").count(), 7);
    assert_eq!(svg.matches("class=\"wire\"").count(), 5);
    assert!(svg.contains("id=\"crossing-3\" class=\"crossing highlight\""));
    let again = ok(
        "/api/render/svg",
        json!({ "letters": [4, 2, 1, 2, 3, 2, 4], "highlight": [3] }),
    );
    assert_eq!(body, again);
    let text = ok("/api/render/ascii", json!({ "letters": [1] }));
    assert_eq!(text["text"], "1 -\\ /- 2\n    X\n2 -/ \\- 1\n");
}

#[test]
fn parse_reports_columns() {
    let (status, code) = error("/api/parse", json!({ "text": "1 0 2" }));
    assert_eq!((status, code.as_str()), (400, "parse_error"));
    let r = handle_request("/api/parse", &json!({ "text": "1 0 2" }));
    assert_eq!(r.body["error"]["at"], 3);
    let body = ok("/api/parse", json!({ "text": "1 2 1" }));
    assert_eq!(body["letters"], json!([1, 2, 1]));
    assert_eq!(body["reduced"], true);
}

#[test]
fn parse_round_trips_rendered_text() {
    use redword_core::{eg, Permutation, Word};
    let w = Word::new(vec![4, 2, 1, 2, 3, 2, 4]).unwrap();
    let body = ok(
        "/api/parse",
        json!({ "text": w.to_string(), "kind": "word" }),
    );
    assert_eq!(body["letters"], json!(w.letters()));
    let p = Permutation::new(vec![3, 5, 2, 4, 1]).unwrap();
    let body = ok(
        "/api/parse",
        json!({ "text": p.to_string(), "kind": "perm" }),
    );
    assert_eq!(body["perm"], json!(p.as_slice()));
    let t = eg(&w).p;
    let body = ok(
        "/api/parse",
        json!({ "text": t.to_string(), "kind": "tableau" }),
    );
    assert_eq!(body["rows"], json!(t.rows()));
}

#[test]
fn reduced_routes_reject_non_reduced_words() {
    for route in ["/api/little", "/api/ck/moves", "/api/tab", "/api/normalize"] {
        assert_eq!(
            error(route, json!({ "letters": [1, 1] })),
            (422, "not_reduced".into()),
            "{route}"
        );
    }
    assert_eq!(
        error("/api/bump", json!({ "letters": [1, 1], "start": 1 })),
        (422, "not_reduced".into())
    );
    // insertion itself is defined for any word
    ok("/api/eg", json!({ "letters": [1, 1] }));
}

#[test]
fn schema_violations_are_400() {
    for body in [
        json!([1, 2]),
        json!({}),
        json!({ "letters": "1 2" }),
        json!({ "letters": [0] }),
        json!({ "letters": [-1] }),
        json!({ "letters": [1.5] }),
    ] {
        let (status, _) = error("/api/eg", body.clone());
        assert_eq!(status, 400, "{body}");
    }
    assert_eq!(error("/api/nope", json!({})), (404, "not_found".into()));
}

#[test]
fn every_route_survives_junk() {
    let junk = [
        json!(null),
        json!({}),
        json!({ "letters": [] }),
        json!({ "letters": [3, 3, 3], "start": 99, "pos": 0, "kind": "x", "direction": "y" }),
        json!({ "letters": [1, 2, 1], "start": 0, "value_pair": [9, 9] }),
        json!({ "perm": [], "text": "", "limit": 0 }),
    ];
    for route in ROUTES {
        for body in &junk {
            let r = handle_request(route, body);
            assert!(
                r.status == 200 || r.body["error"]["code"].is_string(),
                "{route} {body}"
            );
            assert!(r.status < 500, "{route} {body}: {}", r.body);
        }
    }
}

#[test]
fn replay_is_identical() {
    let requests = [
        ("/api/eg", json!({ "letters": [4, 2, 1, 2, 3, 2, 4] })),
        ("/api/little", json!({ "letters": [4, 2, 1, 2, 3, 2, 4] })),
        ("/api/bump", json!({ "letters": [3, 1, 2], "start": 2 })),
        ("/api/ck/moves", json!({ "letters": [3, 1, 2] })),
        ("/api/enumerate", json!({ "perm": [3, 2, 1] })),
    ];
    let first: Vec<Value> = requests
        .iter()
        .map(|(r, b)| handle_request(r, b).body)
        .collect();
    for _ in 0..3 {
        for (i, (r, b)) in requests.iter().enumerate().rev() {
            assert_eq!(handle_request(r, b).body, first[i]);
        }
    }
}
