//! JSON shapes shared by the service and `--json` output.

use redword_core::{
    BumpTrace, CkMove, GrassmannianData, InsertionResult, LittleMap, RowAction, Tableau, Word,
};
use serde_json::{json, Value};

pub fn word(w: &Word) -> Value {
    json!(w.letters())
}

/// Rows top to bottom; the empty tableau is `[]`.
pub fn tableau(t: &Tableau) -> Value {
    json!(t.rows())
}

pub fn trace(t: &BumpTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            if s.shift {
                json!({ "index": s.index, "shift": true })
            } else {
                json!({ "index": s.index, "from": s.from, "to": s.to })
            }
        })
        .collect();
    json!({
        "start": t.start,
        "steps": steps,
        "result": { "letters": t.result.letters() },
    })
}

fn action(a: RowAction) -> &'static str {
    match a {
        RowAction::Append => "append",
        RowAction::Replace => "replace",
        RowAction::Special => "special",
    }
}

/// `p`, `q`, and one entry per inserted letter in insertion order (right
/// to left through the word), with the rows it passed through.
pub fn insertion(r: &InsertionResult, history: &[(Tableau, Tableau)]) -> Value {
    let steps: Vec<Value> = r
        .steps
        .iter()
        .zip(history)
        .map(|(s, (p, q))| {
            let path: Vec<Value> = s
                .path
                .iter()
                .map(|c| json!({ "row": c.row, "col": c.col, "action": action(c.action) }))
                .collect();
            let (row, col) = s.new_box();
            json!({
                "letter": s.letter,
                "path": path,
                "box": [row, col],
                "p": tableau(p),
                "q": tableau(q),
            })
        })
        .collect();
    json!({ "p": tableau(&r.p), "q": tableau(&r.q), "steps": steps })
}

pub fn grassmannian(g: &GrassmannianData) -> Value {
    json!({ "k": g.k, "row_labels": g.row_labels, "col_labels": g.col_labels })
}

pub fn little(map: &LittleMap) -> Value {
    json!({
        "tableau": tableau(&map.tableau),
        "traces": map.traces.iter().map(trace).collect::<Vec<_>>(),
        "grassmannian_word": word(&map.grassmannian_word),
        "grassmannian": map.grassmannian.as_ref().map(grassmannian),
    })
}

pub fn ck_move(mv: CkMove) -> Value {
    json!({
        "pos": mv.pos,
        "kind": mv.kind.as_str(),
        "direction": mv.direction.as_str(),
    })
}
