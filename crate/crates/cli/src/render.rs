//! Wiring diagrams as text and SVG.
//!
//! Row 1 is on top. Wires are labelled on the left by their starting value
//! and on the right by the value that ends on that row. Crossing `t` sits
//! in column `t` between rows `w_t` and `w_t + 1`.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::str::FromStr;

use redword_core::{Error, Result, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ascii" | "text" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            _ => Err(format!("unknown format `{s}`, expected ascii or svg")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RenderSpec {
    /// 1-based crossing indices drawn in the highlight style.
    pub highlight: BTreeSet<usize>,
    /// Number of wires; defaults to the word's degree.
    pub degree: Option<usize>,
}

/// Rows holding each wire after every prefix, padded to `n` wires.
fn layout(word: &Word, spec: &RenderSpec) -> Result<(usize, Vec<Vec<u32>>)> {
    if let Some(&bad) = spec.highlight.iter().find(|&&h| h == 0 || h > word.len()) {
        return Err(Error::PositionOutOfRange {
            position: bad,
            len: word.len(),
        });
    }
    let n = spec.degree.unwrap_or(word.degree());
    if n < word.degree() {
        return Err(Error::Domain(format!(
            "{n} wires cannot hold a word of degree {}",
            word.degree()
        )));
    }
    let mut state: Vec<u32> = (1..=n as u32).collect();
    let mut states = vec![state.clone()];
    for &l in word.letters() {
        state.swap(l as usize - 1, l as usize);
        states.push(state.clone());
    }
    Ok((n, states))
}

pub fn render(word: &Word, spec: &RenderSpec, format: Format) -> Result<String> {
    match format {
        Format::Ascii => render_wiring_ascii(word, spec),
        Format::Svg => render_wiring_svg(word, spec),
    }
}

/// Each crossing is four characters wide:
///
/// ```text
/// 1 -\ /- 2
///     X
/// 2 -/ \- 1
/// ```
///
/// Highlighted crossings use `#` in place of `X`.
pub fn render_wiring_ascii(word: &Word, spec: &RenderSpec) -> Result<String> {
    let (n, states) = layout(word, spec)?;
    let width = n.to_string().len();
    let last = states.last().expect("at least the initial state");
    let mut out = String::new();
    for r in 0..n {
        let mut line = format!("{:>width$} ", states[0][r]);
        let mut gap = " ".repeat(width + 1);
        for (t, &l) in word.letters().iter().enumerate() {
            let top = l as usize - 1;
            let cell = if r == top {
                "-\\ /"
            } else if r == top + 1 {
                "-/ \\"
            } else {
                "----"
            };
            line.push_str(cell);
            if r == top {
                let glyph = if spec.highlight.contains(&(t + 1)) {
                    '#'
                } else {
                    'X'
                };
                write!(gap, "  {glyph} ").expect("writing to a string");
            } else {
                gap.push_str("    ");
            }
        }
        write!(line, "- {}", last[r]).expect("writing to a string");
        out.push_str(&line);
        out.push('\n');
        if r + 1 < n {
            out.push_str(gap.trim_end());
            out.push('\n');
        }
    }
    Ok(out)
}

const SVG_STYLE: &str = ".wire{fill:none;stroke:#333;stroke-width:0.06}\
.crossing{fill:transparent;stroke:none;cursor:pointer}\
.crossing.highlight{stroke:#c33;stroke-width:0.05;stroke-dasharray:0.08 0.06}\
.label{font:0.4px sans-serif;dominant-baseline:middle}";

/// Wires one unit apart, one `<path class="wire">` per wire and one
/// `<circle id="crossing-t">` per crossing for hit-testing.
pub fn render_wiring_svg(word: &Word, spec: &RenderSpec) -> Result<String> {
    let (n, states) = layout(word, spec)?;
    let m = word.len();
    let row = |t: usize, v: u32| -> usize {
        states[t]
            .iter()
            .position(|&x| x == v)
            .expect("every wire has a row")
    };
    let mut s = String::new();
    write!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" class=\"wiring\" viewBox=\"-1.5 -0.5 {} {}\" width=\"{}\" height=\"{}\">",
        m + 3,
        n,
        (m + 3) * 40,
        n * 40
    )
    .expect("writing to a string");
    write!(s, "<style>{SVG_STYLE}</style>").expect("writing to a string");
    s.push_str("<g class=\"wires\">");
    for v in 1..=n as u32 {
        write!(
            s,
            "<path id=\"wire-{v}\" class=\"wire\" d=\"M -0.5 {}",
            row(0, v)
        )
        .expect("writing to a string");
        for t in 0..=m {
            write!(s, " L {t} {}", row(t, v)).expect("writing to a string");
        }
        write!(s, " L {} {}\"/>", m as f64 + 0.5, row(m, v)).expect("writing to a string");
    }
    s.push_str("</g><g class=\"crossings\">");
    for (t, &l) in word.letters().iter().enumerate() {
        let class = if spec.highlight.contains(&(t + 1)) {
            "crossing highlight"
        } else {
            "crossing"
        };
        write!(
            s,
            "<circle id=\"crossing-{}\" class=\"{class}\" data-letter=\"{l}\" cx=\"{}\" cy=\"{}\" r=\"0.3\"/>",
            t + 1,
            t as f64 + 0.5,
            l as f64 - 0.5
        )
        .expect("writing to a string");
    }
    s.push_str("</g><g class=\"labels\">");
    for (r, (first, last)) in states[0].iter().zip(&states[m]).enumerate() {
        write!(
            s,
            "<text class=\"label\" x=\"-1.2\" y=\"{r}\">{first}</text><text class=\"label\" x=\"{}\" y=\"{r}\">{last}</text>",
            m as f64 + 0.7,
        )
        .expect("writing to a string");
    }
    s.push_str("</g></svg>\n");
    Ok(s)
}
