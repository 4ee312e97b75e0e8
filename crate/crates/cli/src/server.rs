//! HTTP front for [`handle_request`]: `POST /api/...` with a JSON body.

use std::net::SocketAddr;

use axum::body::Bytes;
use axum::extract::Path;
use axum::http::StatusCode;
use axum::response::IntoResponse;
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::{json, Value};

use crate::api::handle_request;

pub fn router() -> Router {
    Router::new()
        .route("/api/*route", post(api))
        .route("/health", get(|| async { "ok" }))
}

async fn api(Path(route): Path<String>, body: Bytes) -> impl IntoResponse {
    let parsed: Value = if body.iter().all(u8::is_ascii_whitespace) {
        json!({})
    } else {
        match serde_json::from_slice(&body) {
            Ok(v) => v,
            Err(e) => {
                let err = json!({ "error": {
                    "code": "bad_json",
                    "message": e.to_string(),
                    "at": { "line": e.line(), "column": e.column() },
                }});
                return (StatusCode::BAD_REQUEST, Json(err));
            }
        }
    };
    let response = handle_request(&format!("/api/{route}"), &parsed);
    let status = StatusCode::from_u16(response.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
    (status, Json(response.body))
}

pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
