//! Argument parsing and verb dispatch.
//!
//! Exit codes: 0 success, 1 validation mismatch, 2 input error. Input errors
//! produce a single diagnostic line on stderr.

use crate::grid::{default_mutation, Grid};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use qtangle::alexander::{fox_alexander, fundamental_group_word, geometric_alexander, verify_specialization};
use qtangle::closure::{color_stable_homfly, colored_homfly};
use qtangle::geom::{build_diagram, cross_validate};
use qtangle::qsymbols::{ExponentVector, LaurentPoly4, QLaurent};
use qtangle::tangle::{parse_fraction, BoundaryConfig, ContinuedFraction, TangleDesc};
use qtangle::twist::{generator_count, poincare_polynomial};
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Environment variable holding the default output format (`text` or `json`).
pub const FORMAT_ENV: &str = "QTANGLE_FORMAT";

#[derive(Parser, Debug)]
#[command(name = "qtangle", version, about = "Graded invariants of colored positive rational tangles")]
struct Cli {
    /// Output format; defaults to $QTANGLE_FORMAT, then text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct TangleArgs {
    /// Fraction P/Q with P > Q >= 1 coprime; uses the Euclidean expansion.
    #[arg(long, conflicts_with = "cf", required_unless_present = "cf")]
    frac: Option<String>,
    /// Continued fraction a1,...,ar with positive parts (either expansion).
    #[arg(long)]
    cf: Option<String>,
    /// Start configuration (UP, OP, ...).
    #[arg(long, default_value = "UP")]
    start: String,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Weight-stratified Poincaré polynomial of the tangle's complex.
    Poincare {
        #[command(flatten)]
        tangle: TangleArgs,
        /// Color j >= 1.
        #[arg(long, default_value_t = 1)]
        j: u32,
    },
    /// Colored sl_N HOMFLY polynomial of the closure at t = -1.
    Homfly {
        #[command(flatten)]
        tangle: TangleArgs,
        /// Colors i,j with j <= i <= N.
        #[arg(long)]
        colors: String,
        /// Rank N.
        #[arg(long)]
        rank: u32,
        /// Divide by the unknot value {N, i}.
        #[arg(long)]
        reduced: bool,
    },
    /// Color-stable HOMFLY polynomial in a, q, s (two-component closures).
    Stable {
        #[command(flatten)]
        tangle: TangleArgs,
        #[arg(long, default_value_t = 1)]
        j: u32,
    },
    /// Multivariable Alexander polynomial of a two-component closure.
    Alexander {
        #[command(flatten)]
        tangle: TangleArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        /// Also compare with the color-stable polynomial at a = 1, s = u/v, q = v.
        #[arg(long)]
        check_specialization: bool,
    },
    /// Cross-validates geometric gradings against the twist recursion.
    Validate {
        #[command(flatten)]
        tangle: TangleArgs,
        #[arg(long, default_value_t = 1)]
        j: u32,
        /// Include the diagram in the report.
        #[arg(long)]
        dump_diagram: bool,
    },
    /// Runs the acceptance grid and prints a pass/fail matrix.
    Selftest {
        /// Corrupt one twist rule; at least one criterion must then fail.
        #[arg(long)]
        mutate: bool,
        /// Evaluate criteria on K threads.
        #[arg(long, value_name = "K", default_value_t = 1)]
        parallel: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Fox,
    Geometric,
    Both,
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        let line = msg.to_string().lines().next().unwrap_or_default().to_string();
        Outcome { code: 2, stdout: String::new(), stderr: format!("{line}\n") }
    }
}

/// A rendered report and whether its checks passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

type Res = Result<Report, String>;

/// Parses `argv` (including the program name) and runs the verb.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: e.render().to_string(), stderr: String::new() }
                }
                _ => Outcome::input_error(e.render()),
            }
        }
    };
    let format = match cli.format {
        Some(f) => f,
        None => match std::env::var(FORMAT_ENV) {
            Ok(v) => match Format::from_str(&v, true) {
                Ok(f) => f,
                Err(_) => return Outcome::input_error(format!("error: {FORMAT_ENV}=`{v}` must be text or json")),
            },
            Err(_) => Format::Text,
        },
    };
    let report = match dispatch(cli.verb) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(format!("error: {e}")),
    };
    let mut body = match format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("JSON values serialize"),
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    let code = if report.ok { 0 } else { 1 };
    match cli.out {
        Some(path) => match std::fs::write(&path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome::input_error(format!("error: cannot write {}: {e}", path.display())),
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

fn dispatch(verb: Verb) -> Res {
    match verb {
        Verb::Poincare { tangle, j } => poincare(&tangle, j),
        Verb::Homfly { tangle, colors, rank, reduced } => homfly(&tangle, &colors, rank, reduced),
        Verb::Stable { tangle, j } => stable(&tangle, j),
        Verb::Alexander { tangle, method, check_specialization } => alexander(&tangle, method, check_specialization),
        Verb::Validate { tangle, j, dump_diagram } => validate(&tangle, j, dump_diagram),
        Verb::Selftest { mutate, parallel } => Ok(selftest(mutate, parallel)),
    }
}

fn resolve(args: &TangleArgs) -> Result<(TangleDesc, BoundaryConfig), String> {
    let start: BoundaryConfig = args.start.parse().map_err(|e: qtangle::Error| e.to_string())?;
    let t = match (&args.frac, &args.cf) {
        (Some(f), _) => {
            let (p, q) = parse_fraction(f).map_err(|e| e.to_string())?;
            if p.gcd(&q) != 1 {
                return Err(format!("invalid fraction: {p}/{q} is not in lowest terms (p and q must be coprime)"));
            }
            TangleDesc::from_fraction(p, q).map_err(|e| e.to_string())?
        }
        (None, Some(cf)) => TangleDesc::from_cf(cf.parse::<ContinuedFraction>().map_err(|e| e.to_string())?),
        (None, None) => return Err("one of --frac or --cf is required".into()),
    };
    Ok((t, start))
}

fn require_color(j: u32) -> Result<(), String> {
    if j < 1 {
        return Err(format!("invalid argument: j = {j}, the color j must be at least 1"));
    }
    Ok(())
}

fn tangle_json(t: &TangleDesc, start: BoundaryConfig) -> Value {
    json!({
        "p": t.p,
        "q": t.q,
        "cf": t.cf.as_ref().map(|c| c.to_string()),
        "start": start.name(),
    })
}

fn monomial_text(m: ExponentVector) -> String {
    LaurentPoly4::monomial(m, 1).to_string()
}

fn q_json(p: &QLaurent) -> Value {
    json!({ "text": p.to_string(), "terms": p.to_json() })
}

fn poincare(args: &TangleArgs, j: u32) -> Res {
    require_color(j)?;
    let (t, start) = resolve(args)?;
    let (st, shift) = poincare_polynomial(&t, j, start);
    let counts: Vec<String> = generator_count(&st).iter().map(|c| c.to_string()).collect();
    let mut text = format!("tangle {t}\nstart {start}, j = {j}\nshift {}\n{st}", monomial_text(shift));
    let _ = writeln!(text, "generators {}", counts.join(" "));
    let json = json!({ "tangle": tangle_json(&t, start), "state": st.to_json(shift), "generators": counts });
    Ok(Report { text, json, ok: true })
}

fn parse_colors(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("invalid argument: colors `{s}`: expected i,j");
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse::<u32>().map_err(|_| bad())?;
    let j = j.trim().parse::<u32>().map_err(|_| bad())?;
    Ok((i, j))
}

fn homfly(args: &TangleArgs, colors: &str, n: u32, reduced: bool) -> Res {
    let (i, j) = parse_colors(colors)?;
    require_color(j)?;
    let (t, start) = resolve(args)?;
    let v = colored_homfly(&t, i, j, n, start, reduced).map_err(|e| e.to_string())?;
    let raw = v.raw();
    let text = format!(
        "tangle {t}\nstart {start}, colors ({i},{j}), N = {n}, {}\nvalue {}\nshift q^{}\nsign {}\nraw {raw}\n",
        if reduced { "reduced" } else { "unreduced" },
        v.poly,
        v.shift,
        v.sign
    );
    let json = json!({
        "tangle": tangle_json(&t, start),
        "colors": [i, j],
        "rank": n,
        "reduced": reduced,
        "value": q_json(&v.poly),
        "shift": v.shift,
        "sign": v.sign,
        "raw": q_json(&raw),
    });
    Ok(Report { text, json, ok: true })
}

fn stable(args: &TangleArgs, j: u32) -> Res {
    require_color(j)?;
    let (t, start) = resolve(args)?;
    let (p, shift, sign) = color_stable_homfly(&t, j, start).map_err(|e| e.to_string())?;
    let text = format!("tangle {t}\nstart {start}, j = {j}\nvalue {p}\nshift {}\nsign {sign}\n", monomial_text(shift));
    let json = json!({
        "tangle": tangle_json(&t, start),
        "j": j,
        "value": { "text": p.to_string(), "terms": p.to_json() },
        "shift": shift,
        "sign": sign,
    });
    Ok(Report { text, json, ok: true })
}

fn alexander(args: &TangleArgs, method: Method, check: bool) -> Res {
    let (t, start) = resolve(args)?;
    let d = build_diagram(&t, start);
    let word = fundamental_group_word(&d).map_err(|e| e.to_string())?;
    let mut text = format!("tangle {t}\nstart {start}\nrelator {word}\n");
    let mut json = json!({ "tangle": tangle_json(&t, start), "relator": word.to_string() });
    let mut ok = true;
    let fox = match method {
        Method::Fox | Method::Both => Some(fox_alexander(&word).map_err(|e| e.to_string())?),
        Method::Geometric => None,
    };
    let geo = match method {
        Method::Geometric | Method::Both => Some(geometric_alexander(&d).map_err(|e| e.to_string())?),
        Method::Fox => None,
    };
    if let Some(f) = &fox {
        let _ = writeln!(text, "fox {f}");
        json["fox"] = json!({ "text": f.to_string(), "terms": f.to_json() });
    }
    if let Some(g) = &geo {
        let _ = writeln!(text, "geometric {g}");
        json["geometric"] = json!({ "text": g.to_string(), "terms": g.to_json() });
    }
    if let (Some(f), Some(g)) = (&fox, &geo) {
        let agree = f.equal_up_to_monomial(g, true);
        ok &= agree;
        let _ = writeln!(text, "routes agree {agree}");
        json["routes_agree"] = json!(agree);
    }
    if check {
        let r = verify_specialization(&t, start).map_err(|e| e.to_string())?;
        ok &= r.pass;
        let _ = writeln!(
            text,
            "specialization lhs {}\nspecialization rhs {}\nspecialization pass {}",
            r.lhs, r.rhs, r.pass
        );
        json["specialization"] = serde_json::to_value(&r).expect("report serializes");
    }
    Ok(Report { text, json, ok })
}

fn validate(args: &TangleArgs, j: u32, dump: bool) -> Res {
    require_color(j)?;
    let (t, start) = resolve(args)?;
    let cv = cross_validate(&t, j as usize, start);
    let mut text = format!("tangle {t}\nstart {start}, j = {j}\n");
    for w in &cv.per_weight {
        let _ = writeln!(
            text,
            "weight {}: {} generators (expected {}), {}",
            w.weight,
            w.count,
            w.expected_count,
            if w.matches { "match" } else { "MISMATCH" }
        );
    }
    if let Some(m) = cv.global_monomial {
        let _ = writeln!(text, "global monomial {}", monomial_text(m));
    }
    let _ = writeln!(text, "{}", if cv.pass { "pass" } else { "FAIL" });
    let mut json = serde_json::to_value(&cv).expect("report serializes");
    if dump {
        let d = build_diagram(&t, start);
        json["diagram"] = d.to_json();
        let _ = writeln!(text, "diagram {}", d.to_json());
    }
    Ok(Report { text, json, ok: cv.pass })
}

fn selftest(mutate: bool, parallel: usize) -> Report {
    let grid = if mutate { Grid::mutated(default_mutation()) } else { Grid::new() };
    let results = grid.run_all(parallel);
    let passed = results.iter().filter(|r| r.pass).count();
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{}", r.line());
    }
    let _ = writeln!(text, "{passed}/{} criteria pass", results.len());
    let json = json!({ "mutated": mutate, "passed": passed, "criteria": results });
    Report { text, json, ok: passed == results.len() }
}
