use std::net::{IpAddr, SocketAddr};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use redword_cli::api::handle_request;
use redword_cli::parse::{parse_highlight, parse_perm_text, parse_word_text};
use redword_cli::render::{render, Format, RenderSpec};
use redword_cli::server;
use redword_core::{
    all_ck_moves, apply_ck, eg, eg_history, grassmannian_data, grassmannian_tab, inverse_bump,
    little_bump, little_bump_at_values, ls, minimal_grassmannian_normalize, BumpTrace, CkMove,
    Tableau, Word,
};
use redword_verify::{all_passed, run_all, Profile};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "redword",
    version,
    about = "Reduced words of permutations: Edelman-Greene insertion, Little bumps, Coxeter-Knuth moves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the reduced words of a permutation in lexicographic order
    Enum {
        /// One-line notation, e.g. 3 5 2 4 1
        #[arg(required = true)]
        perm: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
        /// Print only how many there are
        #[arg(long)]
        count: bool,
    },
    /// Edelman-Greene insertion tableaux P and Q
    Eg {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        /// Show the tableaux after every inserted letter
        #[arg(long)]
        steps: bool,
        #[arg(long)]
        json: bool,
    },
    /// The Little map, with every bump it makes
    Little {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// One Little bump (or inverse bump) with its trace
    Bump {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        /// 1-based crossing index to start at
        #[arg(long, conflicts_with = "values", required_unless_present = "values")]
        start: Option<usize>,
        /// Start at the crossing of these two wires, e.g. 1,4
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<u32>>,
        /// Increment instead of decrement
        #[arg(long, requires = "start")]
        inverse: bool,
        #[arg(long)]
        json: bool,
    },
    /// List Coxeter-Knuth moves, or apply one given as pos:kind:direction
    Ck {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        /// e.g. 1:type3:forward
        #[arg(long)]
        apply: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The tableau of a Grassmannian word
    Tab {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Bump a Grassmannian word down to its minimal Grassmannian form
    Normalize {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run every exhaustive check; exits nonzero on any failure
    Verify {
        #[arg(long = "n", default_value_t = 5)]
        n: usize,
        /// Add the S_6 sweeps
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = Profile::default().seed)]
        seed: u64,
        /// Print the reports as a JSON array
        #[arg(long)]
        json: bool,
    },
    /// Draw the wiring diagram
    Render {
        #[arg(allow_negative_numbers = true)]
        word: Vec<String>,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// Crossings to highlight, e.g. 1,3
        #[arg(long)]
        highlight: Option<String>,
        /// Number of wires, when more than the word needs
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Serve the JSON API
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
    },
}

type Outcome = Result<ExitCode, String>;

fn word_arg(parts: &[String]) -> Result<Word, String> {
    parse_word_text(&parts.join(" ")).map_err(|e| e.to_string())
}

fn compact(t: &Tableau) -> String {
    serde_json::to_string(t.rows()).expect("rows serialize")
}

fn print_tableau(name: &str, t: &Tableau) {
    println!("{name}:");
    if t.is_empty() {
        println!("  (empty)");
    }
    for line in t.to_string().lines() {
        println!("  {line}");
    }
}

fn describe_trace(t: &BumpTrace) -> String {
    let steps: Vec<String> = t
        .steps
        .iter()
        .map(|s| {
            if s.shift {
                format!("{}: shift", s.index)
            } else {
                format!("{}: {}->{}", s.index, s.from, s.to)
            }
        })
        .collect();
    format!("start {} [{}] => {}", t.start, steps.join(", "), t.result)
}

/// Prints an API reply and maps errors to a failing exit.
fn print_api(route: &str, body: Value) -> Outcome {
    let r = handle_request(route, &body);
    println!("{}", serde_json::to_string_pretty(&r.body).expect("json"));
    Ok(if r.status == 200 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn parse_move(spec: &str) -> Result<CkMove, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [pos, kind, direction] = parts[..] else {
        return Err(format!("expected pos:kind:direction, got `{spec}`"));
    };
    Ok(CkMove {
        pos: pos
            .parse()
            .map_err(|_| format!("`{pos}` is not a position"))?,
        kind: kind.parse().map_err(err)?,
        direction: direction.parse().map_err(err)?,
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Enum { perm, limit, count } => {
            let p = parse_perm_text(&perm.join(" ")).map_err(err)?;
            let words = p.reduced_words().take(limit.unwrap_or(usize::MAX));
            if count {
                println!("{}", words.count());
            } else {
                for w in words {
                    println!("{w}");
                }
            }
        }
        Command::Eg { word, steps, json } => {
            let w = word_arg(&word)?;
            if json {
                return print_api("/api/eg", json!({ "letters": w.letters() }));
            }
            if steps {
                let letters: Vec<_> = w.letters().iter().rev().collect();
                for (i, (p, q)) in eg_history(&w).iter().enumerate() {
                    println!(
                        "{:>3} insert {}: P={} Q={}",
                        i + 1,
                        letters[i],
                        compact(p),
                        compact(q)
                    );
                }
            }
            let r = eg(&w);
            print_tableau("P", &r.p);
            print_tableau("Q", &r.q);
        }
        Command::Little { word, json } => {
            let w = word_arg(&word)?;
            if json {
                return print_api("/api/little", json!({ "letters": w.letters() }));
            }
            let map = ls(&w).map_err(err)?;
            for (i, t) in map.traces.iter().enumerate() {
                println!("bump {}: {}", i + 1, describe_trace(t));
            }
            println!("grassmannian word: {}", map.grassmannian_word);
            if let Some(g) = &map.grassmannian {
                println!("rows {:?} columns {:?}", g.row_labels, g.col_labels);
            }
            print_tableau("LS", &map.tableau);
        }
        Command::Bump {
            word,
            start,
            values,
            inverse,
            json,
        } => {
            let w = word_arg(&word)?;
            if values.as_ref().is_some_and(|v| v.len() != 2) {
                return Err("--values takes exactly two wires, e.g. 1,4".into());
            }
            if json {
                let (route, body) = match (&values, inverse) {
                    (Some(v), _) => (
                        "/api/bump",
                        json!({ "letters": w.letters(), "value_pair": v }),
                    ),
                    (None, true) => (
                        "/api/inverse_bump",
                        json!({ "letters": w.letters(), "start": start }),
                    ),
                    (None, false) => (
                        "/api/bump",
                        json!({ "letters": w.letters(), "start": start }),
                    ),
                };
                return print_api(route, body);
            }
            let trace = match (values, start) {
                (Some(v), _) => little_bump_at_values(&w, v[0], v[1]),
                (None, Some(s)) if inverse => inverse_bump(&w, s),
                (None, Some(s)) => little_bump(&w, s),
                (None, None) => unreachable!("clap requires start or values"),
            }
            .map_err(err)?;
            println!("{}", describe_trace(&trace));
        }
        Command::Ck { word, apply, json } => {
            let w = word_arg(&word)?;
            match apply {
                Some(spec) => {
                    let mv = parse_move(&spec)?;
                    if json {
                        return print_api(
                            "/api/ck/apply",
                            json!({
                                "letters": w.letters(),
                                "pos": mv.pos,
                                "kind": mv.kind.as_str(),
                                "direction": mv.direction.as_str(),
                            }),
                        );
                    }
                    w.ensure_reduced().map_err(err)?;
                    println!("{}", apply_ck(&w, mv).map_err(err)?);
                }
                None => {
                    if json {
                        return print_api("/api/ck/moves", json!({ "letters": w.letters() }));
                    }
                    w.ensure_reduced().map_err(err)?;
                    for mv in all_ck_moves(&w) {
                        println!("{mv} -> {}", apply_ck(&w, mv).map_err(err)?);
                    }
                }
            }
        }
        Command::Tab { word, json } => {
            let w = word_arg(&word)?;
            if json {
                return print_api("/api/tab", json!({ "letters": w.letters() }));
            }
            let t = grassmannian_tab(&w).map_err(err)?;
            if !w.is_empty() {
                let g = grassmannian_data(&w.permutation()).map_err(err)?;
                println!("rows {:?} columns {:?}", g.row_labels, g.col_labels);
            }
            print_tableau("Tab", &t);
        }
        Command::Normalize { word, json } => {
            let w = word_arg(&word)?;
            if json {
                return print_api("/api/normalize", json!({ "letters": w.letters() }));
            }
            let (v, traces) = minimal_grassmannian_normalize(&w).map_err(err)?;
            println!("{v}");
            eprintln!("{} bumps", traces.len());
        }
        Command::Verify {
            n,
            extended,
            seed,
            json,
        } => {
            if !(2..=6).contains(&n) {
                return Err(format!("--n must be between 2 and 6, got {n}"));
            }
            let reports = run_all(Profile {
                n_max: n,
                extended,
                seed,
            });
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("json"));
            } else {
                for r in &reports {
                    println!("{}", r.summary());
                    for f in &r.failures {
                        println!("    {}", serde_json::to_string(f).expect("json"));
                    }
                }
            }
            if !all_passed(&reports) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Render {
            word,
            format,
            highlight,
            degree,
        } => {
            let w = word_arg(&word)?;
            let highlight = parse_highlight(highlight.as_deref().unwrap_or("")).map_err(err)?;
            let out = render(&w, &RenderSpec { highlight, degree }, format).map_err(err)?;
            print!("{out}");
        }
        Command::Serve { port, host } => {
            let runtime = tokio::runtime::Runtime::new().map_err(err)?;
            runtime
                .block_on(server::serve(SocketAddr::new(host, port)))
                .map_err(err)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
