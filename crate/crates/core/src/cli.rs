//! Command-line front end. [`execute`] maps an argument vector to an exit
//! code and the text to print; the binary only does the printing.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::blocks::{block_members, classify};
use crate::characters::{Tilting, VermaSum, DEFAULT_SEARCH_DEPTH};
use crate::error::Error;
use crate::osp::{osp_atypical_roots, osp_linked, table_osp32, Osp32, OspWeight};
use crate::rational::{int, parse_rat, rat, Rat};
use crate::system::{RootSystem, G3};
use crate::tables::{csv_header, csv_row, family_table, latex_line, locate, tilting_character, Frame, TableValue};
use crate::translation::{Derivation, Deriver};
use crate::verify::{acceptance_frames, sweep_g3, sweep_osp, Check, FrameRange};
use crate::weights::Weight;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EXTERNAL: i32 = 3;

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "G3TILT_FORMAT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum System {
    G3,
    Osp32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "g3tilt", version, about = "Blocks and tilting characters of category O for G(3) and osp(3|2)")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[arg(long, global = true, value_enum, default_value_t = System::G3)]
    pub system: System,
    /// Length of the reflection chains searched for Verma-flag certificates.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_DEPTH)]
    pub depth: usize,
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Block descriptor of each weight.
    Classify {
        #[arg(required = true)]
        weights: Vec<String>,
    },
    /// Members of the block of a weight, moved `k` steps along the atypical root.
    Block {
        weight: String,
        #[arg(long = "k-range", visible_alias = "k", allow_hyphen_values = true, default_value = "-3..3")]
        k_range: String,
    },
    /// Closed-form tilting characters.
    Tilting {
        #[arg(required = true)]
        weights: Vec<String>,
    },
    /// Tilting characters derived by translation functors.
    Derive {
        #[arg(required = true)]
        weights: Vec<String>,
    },
    /// Compare tables, derivations and certificates over a sweep.
    Verify {
        /// One of v-lambda, v-mu, v-nu, s3, wg2; all families when absent.
        #[arg(long)]
        family: Option<String>,
        /// A value or an inclusive range `a..b` of the family parameter.
        #[arg(long, allow_hyphen_values = true)]
        ell: Option<String>,
        #[arg(long = "k-range", visible_alias = "k", allow_hyphen_values = true)]
        k_range: Option<String>,
        /// Largest `|a|` swept for osp(3|2).
        #[arg(long, default_value_t = 10)]
        jmax: i64,
    },
    /// Full family tables over a parameter range.
    Export {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
        #[arg(long = "k-range", visible_alias = "k", allow_hyphen_values = true, default_value = "-3..3")]
        k_range: String,
    },
}

/// Outcome of a command that ran.
struct Run {
    code: i32,
    text: String,
}

impl Run {
    fn ok(text: String) -> Self {
        Run { code: EXIT_OK, text }
    }
}

/// Runs the command line `argv` (program name first).
pub fn execute<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    // A weight such as `-1|0` is never a flag; a leading space keeps clap
    // from reading it as one, and the weight parsers trim it.
    let argv = argv.into_iter().map(|a| {
        let a: std::ffi::OsString = a.into();
        match a.to_str() {
            Some(s) if s.starts_with('-') && s.contains('|') => format!(" {s}").into(),
            _ => a,
        }
    });
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let run = match run(&cli) {
        Ok(r) => r,
        Err(e) => return (EXIT_PARSE, format!("error: {e}\n")),
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &run.text) {
            Ok(()) => (run.code, String::new()),
            Err(e) => (EXIT_PARSE, format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => (run.code, run.text),
    }
}

fn run(cli: &Cli) -> crate::Result<Run> {
    match &cli.verb {
        Verb::Classify { weights } => match cli.system {
            System::G3 => classify_g3(cli, &parse_all(weights)?),
            System::Osp32 => classify_osp(cli, &parse_all(weights)?),
        },
        Verb::Block { weight, k_range } => {
            let ks = parse_int_range(k_range)?;
            match cli.system {
                System::G3 => {
                    let l: Weight = weight.parse()?;
                    Ok(Run::ok(render_list(cli.format, &block_members(&l, ks)?)))
                }
                System::Osp32 => {
                    let l: OspWeight = weight.parse()?;
                    Ok(Run::ok(render_list(cli.format, &osp_block(&l, ks))))
                }
            }
        }
        Verb::Tilting { weights } => match cli.system {
            System::G3 => tilting_g3(cli, &parse_all(weights)?),
            System::Osp32 => {
                let ts: Vec<_> = parse_all::<OspWeight>(weights)?
                    .into_iter()
                    .map(|l| Tilting { highest_weight: l, character: table_osp32(&l) })
                    .collect();
                Ok(Run::ok(render_tiltings(cli.format, &ts)))
            }
        },
        Verb::Derive { weights } => match cli.system {
            System::G3 => derive_all::<G3>(cli, &parse_all(weights)?),
            System::Osp32 => derive_all::<Osp32>(cli, &parse_all(weights)?),
        },
        Verb::Verify { family, ell, k_range, jmax } => verify(cli, family.as_deref(), ell.as_deref(), k_range.as_deref(), *jmax),
        Verb::Export { family, ell, k_range } => export(cli, family, ell, k_range),
    }
}

fn parse_all<W: std::str::FromStr<Err = Error>>(ws: &[String]) -> crate::Result<Vec<W>> {
    ws.iter().map(|w| w.parse()).collect()
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_int_range(s: &str) -> crate::Result<std::ops::RangeInclusive<i64>> {
    let (lo, hi) = parse_rat_range(s)?;
    match (crate::rational::to_i64(lo), crate::rational::to_i64(hi)) {
        (Some(a), Some(b)) => Ok(a..=b),
        _ => Err(Error::Parse { what: "integer range", input: s.to_string() }),
    }
}

fn parse_rat_range(s: &str) -> crate::Result<(Rat, Rat)> {
    match s.split_once("..") {
        Some((a, b)) => Ok((parse_rat(a)?, parse_rat(b.strip_prefix('=').unwrap_or(b))?)),
        None => {
            let v = parse_rat(s)?;
            Ok((v, v))
        }
    }
}

/// Valid parameters of a family in `[lo, hi]`; quarter steps for the
/// mu-family, integers otherwise.
fn ell_values(family: &str, lo: Rat, hi: Rat) -> crate::Result<Vec<Frame>> {
    let step = if Frame::from_family(family, rat(1, 4)).is_ok() { rat(1, 4) } else { int(1) };
    // Probe the family name once so that an unknown name is a parse error.
    if let Err(e @ Error::Parse { .. }) = Frame::from_family(family, int(0)) {
        return Err(e);
    }
    let mut out = Vec::new();
    let mut v = (lo / step).ceil() * step;
    while v <= hi {
        if let Ok(f) = Frame::from_family(family, v) {
            out.push(f);
        }
        v += step;
    }
    Ok(out)
}

fn classify_g3(cli: &Cli, ls: &[Weight]) -> crate::Result<Run> {
    let ids: Vec<_> = ls.iter().map(classify).collect();
    let text = match cli.format {
        Format::Json => json_lines(&ids),
        Format::Csv => {
            let mut s = String::from("weight,family,case,ell,canonical_rep,equivalence_label\n");
            for (l, id) in ls.iter().zip(&ids) {
                let _ = writeln!(
                    s,
                    "\"{l}\",{},{},{},\"{}\",{}",
                    id.family.tag(),
                    id.family.case().unwrap_or_default(),
                    id.family.ell().map(|r| r.to_string()).unwrap_or_default(),
                    id.canonical_rep,
                    id.equivalence_label
                );
            }
            s
        }
        Format::Text | Format::Latex => ls.iter().zip(&ids).map(|(l, id)| format!("{l}: {id}\n")).collect(),
    };
    Ok(Run::ok(text))
}

#[derive(Serialize)]
struct OspClass {
    weight: OspWeight,
    typical: bool,
    atypical_roots: Vec<OspWeight>,
    case: Option<&'static str>,
}

/// Cases of the osp(3|2) table: `a` outside `Z/2`, in `Z`, in `1/2 + Z`.
fn osp_case(l: &OspWeight) -> Option<&'static str> {
    if osp_atypical_roots(l).is_empty() {
        None
    } else if l.a().is_integer() {
        Some("2")
    } else if (l.a() * int(2)).is_integer() {
        Some("3")
    } else {
        Some("1")
    }
}

fn classify_osp(cli: &Cli, ls: &[OspWeight]) -> crate::Result<Run> {
    let cs: Vec<_> = ls
        .iter()
        .map(|l| OspClass {
            weight: *l,
            typical: osp_atypical_roots(l).is_empty(),
            atypical_roots: osp_atypical_roots(l),
            case: osp_case(l),
        })
        .collect();
    let text = match cli.format {
        Format::Json => json_lines(&cs),
        Format::Csv => {
            let mut s = String::from("weight,typical,case\n");
            for c in &cs {
                let _ = writeln!(s, "\"{}\",{},{}", c.weight, c.typical, c.case.unwrap_or(""));
            }
            s
        }
        Format::Text | Format::Latex => cs
            .iter()
            .map(|c| match c.case {
                None => format!("{}: typical\n", c.weight),
                Some(k) => format!("{}: atypical, case ({k})\n", c.weight),
            })
            .collect(),
    };
    Ok(Run::ok(text))
}

/// Weights `w(l + k alpha)` linked to `l`, for atypical roots `alpha` and
/// sign changes `w`.
fn osp_block(l: &OspWeight, ks: std::ops::RangeInclusive<i64>) -> Vec<OspWeight> {
    let mut out = vec![*l];
    for a in osp_atypical_roots(l) {
        for k in ks.clone() {
            let m = *l + a * int(k);
            for sa in [1, -1] {
                for sb in [1, -1] {
                    let w = OspWeight::new(m.a() * int(sa), m.b() * int(sb));
                    if osp_linked(l, &w) && !out.contains(&w) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out.sort();
    out.reverse();
    out
}

fn render_list<W: std::fmt::Display + Serialize>(format: Format, ws: &[W]) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(ws).expect("weights serialize")),
        Format::Csv => std::iter::once("weight".to_string()).chain(ws.iter().map(|w| format!("\"{w}\""))).map(|s| s + "\n").collect(),
        Format::Text | Format::Latex => ws.iter().map(|w| format!("{w}\n")).collect(),
    }
}

fn json_lines<T: Serialize>(items: &[T]) -> String {
    items.iter().map(|i| serde_json::to_string(i).expect("serializable") + "\n").collect()
}

fn render_tiltings<W: Ord + Copy + std::fmt::Display>(format: Format, ts: &[Tilting<W>]) -> String {
    match format {
        Format::Json => json_lines(ts),
        Format::Csv => {
            let mut s = String::from("weight,terms\n");
            for t in ts {
                let terms: Vec<_> = t.character.iter().map(|(w, c)| format!("{c}*{w}")).collect();
                let _ = writeln!(s, "\"{}\",\"{}\"", t.highest_weight, terms.join(" "));
            }
            s
        }
        Format::Text | Format::Latex => ts.iter().map(|t| format!("T{} = {}\n", t.highest_weight, t.character)).collect(),
    }
}

fn tilting_g3(cli: &Cli, ls: &[Weight]) -> crate::Result<Run> {
    let mut code = EXIT_OK;
    let mut text = String::new();
    if cli.format == Format::Csv {
        text.push_str("weight,terms\n");
    }
    for l in ls {
        let v = tilting_character(l);
        let line = match (&v, cli.format) {
            (TableValue::Label { label }, Format::Json) => {
                json!({ "highest_weight": l, "label": label }).to_string()
            }
            (TableValue::Label { label }, _) => format!("T{l}: {label}"),
            (TableValue::Character { terms, .. }, Format::Latex) => match locate(l) {
                Some(loc) if loc.transport.is_identity() => latex_line(&loc.entry, terms),
                _ => format!("T{l} = {terms}"),
            },
            (TableValue::Character { terms, .. }, f) => {
                let t = Tilting { highest_weight: *l, character: terms.clone() };
                render_tiltings(f, std::slice::from_ref(&t)).trim_end().lines().last().unwrap_or_default().to_string()
            }
        };
        if matches!(v, TableValue::Label { .. }) {
            code = EXIT_EXTERNAL;
        }
        text.push_str(&line);
        text.push('\n');
    }
    Ok(Run { code, text })
}

#[derive(Serialize)]
struct Derived<W: Ord + Copy + std::fmt::Display + Serialize> {
    highest_weight: W,
    terms: VermaSum<W>,
    path: String,
    start: Option<W>,
}

fn derive_all<S: RootSystem>(cli: &Cli, ls: &[S::Weight]) -> crate::Result<Run>
where
    S::Weight: Serialize,
{
    let mut deriver = Deriver::<S>::new();
    deriver.search_depth = cli.depth;
    let mut out = Vec::new();
    for l in ls {
        let Derivation { character, path, start } = deriver.derive(l)?;
        out.push(Derived { highest_weight: *l, terms: character, path: path.to_string(), start });
    }
    let text = match cli.format {
        Format::Json => json_lines(&out),
        Format::Csv => {
            let mut s = String::from("weight,path,terms\n");
            for d in &out {
                let terms: Vec<_> = d.terms.iter().map(|(w, c)| format!("{c}*{w}")).collect();
                let _ = writeln!(s, "\"{}\",{},\"{}\"", d.highest_weight, d.path, terms.join(" "));
            }
            s
        }
        Format::Text | Format::Latex => out
            .iter()
            .map(|d| {
                let from = d.start.map(|s| format!(" from T{s}")).unwrap_or_default();
                format!("T{} = {}  [{}{from}]\n", d.highest_weight, d.terms, d.path)
            })
            .collect(),
    };
    Ok(Run::ok(text))
}

fn verify(cli: &Cli, family: Option<&str>, ell: Option<&str>, ks: Option<&str>, jmax: i64) -> crate::Result<Run> {
    if cli.system == System::Osp32 {
        let checks = sweep_osp(jmax);
        return Ok(report(cli.format, &checks, |_| "osp32".to_string()));
    }
    let defaults = acceptance_frames();
    let frames: Vec<FrameRange> = match family {
        None => defaults,
        Some(fam) => {
            let (lo, hi) = match ell {
                Some(e) => parse_rat_range(e)?,
                None => (int(-6), int(6)),
            };
            let user_ks = ks.map(parse_int_range).transpose()?;
            ell_values(fam, lo, hi)?
                .into_iter()
                .map(|f| {
                    let ks = user_ks.clone().unwrap_or_else(|| {
                        defaults.iter().find(|d| d.frame == f).map_or(-4..=4, |d| d.ks.clone())
                    });
                    FrameRange::new(f, ks)
                })
                .collect()
        }
    };
    let checks = sweep_g3(&frames);
    Ok(report(cli.format, &checks, |c| {
        locate(&c.weight).map_or_else(|| "-".to_string(), |l| l.entry.frame.family_name().to_string())
    }))
}

fn report<W>(format: Format, checks: &[Check<W>], family: impl Fn(&Check<W>) -> String) -> Run
where
    W: Ord + Copy + std::fmt::Display + Serialize,
{
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let status = |c: &Check<W>| if c.passed() { "PASS" } else { "FAIL" };
    let text = match format {
        Format::Json => {
            let rows: Vec<_> = checks
                .iter()
                .map(|c| {
                    json!({
                        "family": family(c),
                        "name": c.name,
                        "weight": c.weight,
                        "status": status(c),
                        "agrees": c.agrees(),
                        "certified": c.certified,
                        "path": c.path,
                        "table": c.table,
                        "derived": c.derived,
                        "error": c.error,
                    })
                })
                .collect();
            format!("{}\n", json!({ "entries": rows, "checked": checks.len(), "failed": failed }))
        }
        Format::Csv => {
            let mut s = String::from("status,family,name,weight,agrees,certified,path\n");
            for c in checks {
                let _ = writeln!(
                    s,
                    "{},{},{},\"{}\",{},{},{}",
                    status(c),
                    family(c),
                    c.name,
                    c.weight,
                    c.agrees(),
                    c.certified,
                    c.path.as_deref().unwrap_or("")
                );
            }
            s
        }
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for c in checks {
                let detail = match (&c.table, &c.derived, &c.error) {
                    (_, _, Some(e)) => e.clone(),
                    (Some(t), Some(d), None) if t != d => format!("table - derived = {}", t - d),
                    _ if !c.certified => "certificate outside the table".to_string(),
                    _ => c.path.clone().unwrap_or_default(),
                };
                let _ = writeln!(s, "{} {:<6} {} {}  {}", status(c), family(c), c.name, c.weight, detail);
            }
            let _ = writeln!(s, "{} checked, {} failed", checks.len(), failed);
            s
        }
    };
    Run { code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED }, text }
}

fn export(cli: &Cli, family: &str, ell: &str, ks: &str) -> crate::Result<Run> {
    let (lo, hi) = parse_rat_range(ell)?;
    let ks = parse_int_range(ks)?;
    let mut text = String::new();
    if cli.format == Format::Csv {
        text.push_str(csv_header());
        text.push('\n');
    }
    let mut rows = Vec::new();
    for f in ell_values(family, lo, hi)? {
        for e in f.entries(ks.clone()) {
            let ch = family_table(&e);
            match cli.format {
                Format::Csv => match &ch {
                    Ok(ch) => text.push_str(&(csv_row(&e, ch) + "\n")),
                    Err(err) => text.push_str(&format!("# {}: {err}\n", e.name())),
                },
                Format::Latex => match &ch {
                    Ok(ch) => text.push_str(&(latex_line(&e, ch) + " \\\\\n")),
                    Err(err) => text.push_str(&format!("% {}: {err}\n", e.name())),
                },
                Format::Text => match &ch {
                    Ok(ch) => text.push_str(&format!("T_{} = {ch}\n", e.name())),
                    Err(err) => text.push_str(&format!("T_{}: {err}\n", e.name())),
                },
                Format::Json => rows.push(json!({
                    "entry": e,
                    "terms": ch.as_ref().ok(),
                    "error": ch.as_ref().err().map(|e| e.to_string()),
                })),
            }
        }
    }
    if cli.format == Format::Json {
        text = format!("{}\n", serde_json::Value::Array(rows));
    }
    Ok(Run::ok(text))
}
