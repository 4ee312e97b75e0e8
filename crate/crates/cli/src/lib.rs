//! Command line and JSON service over `redword-core`.
//!
//! [`api::handle_request`] is the whole service: a pure function from a
//! route and JSON body to a status and JSON reply. [`server`] wraps it in
//! HTTP and the `redword` binary exposes the same operations as verbs.

pub mod api;
pub mod encode;
pub mod parse;
pub mod render;
pub mod server;

pub use api::{handle_request, ApiResponse};
pub use parse::{parse_highlight, parse_perm_text, parse_word_text, ParseError};
pub use render::{render_wiring_ascii, render_wiring_svg, Format, RenderSpec};
