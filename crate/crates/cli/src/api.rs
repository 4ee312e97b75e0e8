//! Stateless JSON endpoints. Every route is a pure function of its body.

use redword_core::{
    all_ck_moves, apply_ck, canonical_start, eg, eg_history, grassmannian_data, grassmannian_tab,
    inverse_bump, little_bump, little_bump_at_values, ls, minimal_grassmannian_normalize, CkKind,
    CkMove, Direction, Error, Permutation, Tableau, Word,
};
use serde_json::{json, Map, Value};

use crate::encode;
use crate::parse::{parse_perm_text, parse_word_text};
use crate::render::{render_wiring_ascii, render_wiring_svg, RenderSpec};

/// Routes served under `POST`.
pub const ROUTES: &[&str] = &[
    "/api/parse",
    "/api/eg",
    "/api/little",
    "/api/bump",
    "/api/inverse_bump",
    "/api/ck/moves",
    "/api/ck/apply",
    "/api/tab",
    "/api/normalize",
    "/api/enumerate",
    "/api/render/svg",
    "/api/render/ascii",
];

/// Largest `limit` accepted by `/api/enumerate`.
pub const MAX_ENUMERATE: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ApiResponse {
    pub status: u16,
    pub body: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub status: u16,
    pub code: &'static str,
    pub message: String,
    pub at: Value,
}

impl ApiError {
    fn new(status: u16, code: &'static str, message: impl Into<String>, at: Value) -> Self {
        ApiError {
            status,
            code,
            message: message.into(),
            at,
        }
    }

    fn bad_request(message: impl Into<String>, at: Value) -> Self {
        ApiError::new(400, "bad_request", message, at)
    }

    pub fn into_response(self) -> ApiResponse {
        ApiResponse {
            status: self.status,
            body: json!({ "error": { "code": self.code, "message": self.message, "at": self.at } }),
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::InvalidLetter { position, .. } => {
                ApiError::new(400, "invalid_letter", message, json!(position))
            }
            Error::InvalidPermutation(_) => {
                ApiError::new(400, "invalid_permutation", message, Value::Null)
            }
            Error::InvalidTableau(_) => ApiError::new(400, "invalid_tableau", message, Value::Null),
            Error::NotReduced => ApiError::new(422, "not_reduced", message, Value::Null),
            Error::NotGrassmannian => ApiError::new(422, "not_grassmannian", message, Value::Null),
            Error::PositionOutOfRange { position, .. } => {
                ApiError::new(422, "out_of_range", message, json!(position))
            }
            Error::InvalidStart(i) => ApiError::new(422, "invalid_start", message, json!(i)),
            Error::NoCrossing(u, v) => ApiError::new(422, "no_crossing", message, json!([u, v])),
            Error::InapplicableMove => {
                ApiError::new(422, "inapplicable_move", message, Value::Null)
            }
            Error::InvalidLabel(_) | Error::Domain(_) => {
                ApiError::new(422, "domain_error", message, Value::Null)
            }
            Error::IterationCap(_) => ApiError::new(500, "iteration_cap", message, Value::Null),
            Error::Internal(_) => ApiError::new(500, "internal", message, Value::Null),
        }
    }
}

type Handler = fn(&Map<String, Value>) -> Result<Value, ApiError>;

fn handler(route: &str) -> Option<Handler> {
    Some(match route {
        "/api/parse" => parse,
        "/api/eg" => eg_route,
        "/api/little" => little,
        "/api/bump" => bump,
        "/api/inverse_bump" => inverse,
        "/api/ck/moves" => ck_moves,
        "/api/ck/apply" => ck_apply,
        "/api/tab" => tab,
        "/api/normalize" => normalize,
        "/api/enumerate" => enumerate,
        "/api/render/svg" => render_svg,
        "/api/render/ascii" => render_ascii,
        _ => return None,
    })
}

/// Dispatches one request. Never panics on any body.
pub fn handle_request(route: &str, body: &Value) -> ApiResponse {
    let Some(h) = handler(route) else {
        return ApiError::new(404, "not_found", format!("no route {route}"), json!(route))
            .into_response();
    };
    let Some(fields) = body.as_object() else {
        return ApiError::bad_request("body must be a JSON object", Value::Null).into_response();
    };
    match h(fields) {
        Ok(body) => ApiResponse { status: 200, body },
        Err(e) => e.into_response(),
    }
}

fn field<'a>(body: &'a Map<String, Value>, name: &str) -> Result<&'a Value, ApiError> {
    body.get(name)
        .ok_or_else(|| ApiError::bad_request(format!("missing field `{name}`"), json!(name)))
}

fn uint(body: &Map<String, Value>, name: &str) -> Result<u64, ApiError> {
    field(body, name)?.as_u64().ok_or_else(|| {
        ApiError::bad_request(
            format!("`{name}` must be a non-negative integer"),
            json!(name),
        )
    })
}

fn opt_uint(body: &Map<String, Value>, name: &str) -> Result<Option<u64>, ApiError> {
    match body.get(name) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => uint(body, name).map(Some),
    }
}

fn string<'a>(body: &'a Map<String, Value>, name: &str) -> Result<&'a str, ApiError> {
    field(body, name)?
        .as_str()
        .ok_or_else(|| ApiError::bad_request(format!("`{name}` must be a string"), json!(name)))
}

/// A list of positive integers under `name`; `at` is the 1-based position
/// of the first bad entry.
fn positive_list(body: &Map<String, Value>, name: &str) -> Result<Vec<u32>, ApiError> {
    let items = field(body, name)?
        .as_array()
        .ok_or_else(|| ApiError::bad_request(format!("`{name}` must be an array"), json!(name)))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| match v.as_u64() {
            Some(x) if x >= 1 && x <= u32::MAX as u64 => Ok(x as u32),
            _ => Err(ApiError::new(
                400,
                "invalid_letter",
                format!("entry {} of `{name}` is not a positive integer: {v}", i + 1),
                json!(i + 1),
            )),
        })
        .collect()
}

fn letters(body: &Map<String, Value>) -> Result<Word, ApiError> {
    Ok(Word::new(positive_list(body, "letters")?)?)
}

fn reduced(body: &Map<String, Value>) -> Result<Word, ApiError> {
    let w = letters(body)?;
    w.ensure_reduced()?;
    Ok(w)
}

fn echo(w: &Word) -> Value {
    json!({ "letters": w.letters() })
}

fn parse(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let text = string(body, "text")?;
    let kind = match body.get("kind") {
        None => "word",
        Some(_) => string(body, "kind")?,
    };
    let parse_error =
        |e: crate::parse::ParseError| ApiError::new(400, "parse_error", e.message, json!(e.column));
    match kind {
        "word" => {
            let w = parse_word_text(text).map_err(parse_error)?;
            Ok(json!({
                "input": { "text": text, "kind": kind },
                "letters": w.letters(),
                "reduced": w.is_reduced(),
            }))
        }
        "perm" => {
            let p = parse_perm_text(text).map_err(parse_error)?;
            Ok(json!({ "input": { "text": text, "kind": kind }, "perm": p.as_slice() }))
        }
        "tableau" => {
            let t: Tableau = text.parse().map_err(|e: Error| {
                ApiError::new(400, "parse_error", e.to_string(), Value::Null)
            })?;
            Ok(json!({ "input": { "text": text, "kind": kind }, "rows": t.rows() }))
        }
        other => Err(ApiError::bad_request(
            format!("unknown kind `{other}`, expected word, perm or tableau"),
            json!("kind"),
        )),
    }
}

/// Insertion accepts words that are not reduced.
fn eg_route(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = letters(body)?;
    let mut out = encode::insertion(&eg(&w), &eg_history(&w));
    out["input"] = echo(&w);
    out["reduced"] = json!(w.is_reduced());
    Ok(out)
}

fn little(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let map = ls(&w)?;
    let mut out = encode::little(&map);
    out["input"] = echo(&w);
    out["canonical_start"] = json!(canonical_start(&w)?);
    Ok(out)
}

fn bump(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let trace = match (body.get("start"), body.get("value_pair")) {
        (Some(_), None) => little_bump(&w, uint(body, "start")? as usize)?,
        (None, Some(_)) => {
            let pair = positive_list(body, "value_pair")?;
            let [u, v] = pair[..] else {
                return Err(ApiError::bad_request(
                    "`value_pair` needs two values",
                    json!("value_pair"),
                ));
            };
            little_bump_at_values(&w, u, v)?
        }
        _ => {
            return Err(ApiError::bad_request(
                "give exactly one of `start` and `value_pair`",
                Value::Null,
            ))
        }
    };
    Ok(json!({ "input": echo(&w), "trace": encode::trace(&trace) }))
}

fn inverse(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let trace = inverse_bump(&w, uint(body, "start")? as usize)?;
    Ok(json!({ "input": echo(&w), "trace": encode::trace(&trace) }))
}

fn ck_moves(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let moves: Vec<Value> = all_ck_moves(&w)
        .into_iter()
        .map(|mv| {
            let mut v = encode::ck_move(mv);
            v["result"] = encode::word(&apply_ck(&w, mv).expect("listed moves apply"));
            v
        })
        .collect();
    Ok(json!({ "input": echo(&w), "moves": moves }))
}

fn ck_apply(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let kind: CkKind = string(body, "kind")?
        .parse()
        .map_err(|e: Error| ApiError::bad_request(e.to_string(), json!("kind")))?;
    let direction: Direction = string(body, "direction")?
        .parse()
        .map_err(|e: Error| ApiError::bad_request(e.to_string(), json!("direction")))?;
    let mv = CkMove {
        pos: uint(body, "pos")? as usize,
        kind,
        direction,
    };
    let result = apply_ck(&w, mv)?;
    let mut input = echo(&w);
    input["move"] = encode::ck_move(mv);
    Ok(json!({ "input": input, "result": encode::word(&result) }))
}

fn tab(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let t = grassmannian_tab(&w)?;
    let labels = if w.is_empty() {
        Value::Null
    } else {
        encode::grassmannian(&grassmannian_data(&w.permutation())?)
    };
    Ok(json!({ "input": echo(&w), "tableau": encode::tableau(&t), "grassmannian": labels }))
}

fn normalize(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = reduced(body)?;
    let (result, traces) = minimal_grassmannian_normalize(&w)?;
    Ok(json!({
        "input": echo(&w),
        "result": encode::word(&result),
        "traces": traces.iter().map(encode::trace).collect::<Vec<_>>(),
    }))
}

fn enumerate(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let perm = Permutation::new(positive_list(body, "perm")?)?;
    let limit = opt_uint(body, "limit")?.unwrap_or(1000) as usize;
    if limit > MAX_ENUMERATE {
        return Err(ApiError::bad_request(
            format!("`limit` is at most {MAX_ENUMERATE}"),
            json!("limit"),
        ));
    }
    let mut iter = perm.reduced_words();
    let words: Vec<Value> = iter
        .by_ref()
        .take(limit)
        .map(|w| encode::word(&w))
        .collect();
    let truncated = iter.next().is_some();
    Ok(json!({
        "input": { "perm": perm.as_slice(), "limit": limit },
        "length": perm.length(),
        "words": words,
        "truncated": truncated,
    }))
}

fn render_spec(body: &Map<String, Value>) -> Result<RenderSpec, ApiError> {
    let highlight = match body.get("highlight") {
        None | Some(Value::Null) => Default::default(),
        Some(_) => positive_list(body, "highlight")?
            .into_iter()
            .map(|h| h as usize)
            .collect(),
    };
    Ok(RenderSpec {
        highlight,
        degree: opt_uint(body, "degree")?.map(|d| d as usize),
    })
}

fn render_svg(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = letters(body)?;
    let spec = render_spec(body)?;
    let svg = render_wiring_svg(&w, &spec)?;
    Ok(json!({ "input": echo(&w), "svg": svg }))
}

fn render_ascii(body: &Map<String, Value>) -> Result<Value, ApiError> {
    let w = letters(body)?;
    let spec = render_spec(body)?;
    let text = render_wiring_ascii(&w, &spec)?;
    Ok(json!({ "input": echo(&w), "text": text }))
}
