use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use infgon_core::config::{
    approximation_report, overarc_antichain, strong_overarc, ApproxEntry, FactorStatus, OverarcTarget,
};
use infgon_core::graded::{build_hom_tower, build_inverse_hom_tower, prufer_prufer_tower, truncated_colim, truncated_lim};
use infgon_core::{
    arc_to_object, arcs_cross, classify, ext_dim, ext_via_crossing, hom_dim, object_to_arc, shift_object, suites, Arc,
    ArcConfiguration, CrossResult, FiniteArc, IndObject, Window,
};

use crate::render::render_svg;

pub const SCHEMA: &str = "infgon/v1";

#[derive(Debug, Parser)]
#[command(name = "infgon", version, about = "Arc and quiver calculus for the infinity-gon with Prüfer objects")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between an object (`Σ^s X_d`, `E_n`) and its arc.
    Coord {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
    },
    /// Dimension of Hom(from, to).
    Hom(PairArgs),
    /// Dimension of Ext^1(from, to), with the crossing reading when defined.
    Ext(PairArgs),
    /// Whether two arcs cross.
    Cross {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Classify a configuration file.
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Run agreement suites (all of them unless `--suite` is given).
    Check {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
        suite: Vec<u8>,
    },
    /// Overarcs, antichains and approximations for a configuration.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Draw a configuration as SVG.
    Render {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Written to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Colour arcs that take part in a crossing.
        #[arg(long)]
        highlight: bool,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    /// Also compute the value from a truncated tower of this length.
    #[arg(long)]
    pub truncation: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum WitnessKind {
    /// Shortest configuration arc strictly over an arc or a point.
    Overarc {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "point", required_unless_present = "point")]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<i64>,
    },
    /// Nested strong overarcs forming a Hom antichain.
    Antichain {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Almost-right approximation of an object by a cluster tilting configuration.
    Approximation {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(infgon_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io { .. } => 1,
        }
    }
}

impl From<infgon_core::Error> for CliError {
    fn from(e: infgon_core::Error) -> Self {
        match e {
            infgon_core::Error::Parse(msg) => CliError::Usage(msg),
            other => CliError::Domain(other),
        }
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

type Outcome = Result<u8, CliError>;

/// Arc syntax when the text has a comma, object syntax otherwise.
fn parse_endpoint(flag: &str, text: &str) -> Result<IndObject, CliError> {
    let parsed = if text.contains(',') {
        text.parse::<Arc>().and_then(arc_to_object)
    } else {
        text.parse::<IndObject>()
    };
    parsed.map_err(|e| match e {
        infgon_core::Error::Parse(msg) => CliError::Usage(format!("--{flag}: {msg}")),
        other => CliError::Domain(other),
    })
}

fn parse_arc(flag: &str, text: &str) -> Result<Arc, CliError> {
    text.parse::<Arc>().map_err(|e| match e {
        infgon_core::Error::Parse(msg) => CliError::Usage(format!("--{flag}: {msg}")),
        other => CliError::Domain(other),
    })
}

fn parse_finite(flag: &str, text: &str) -> Result<FiniteArc, CliError> {
    match parse_arc(flag, text)? {
        Arc::Finite(x) => Ok(x),
        Arc::Infinite(_) => Err(CliError::Usage(format!("--{flag}: expected a finite arc, got {text:?}"))),
    }
}

fn parse_window(text: Option<&str>, default: Window) -> Result<Window, CliError> {
    match text {
        None => Ok(default),
        Some(t) => t
            .parse::<Window>()
            .map_err(|e| CliError::Usage(format!("--window: {e}"))),
    }
}

fn load_config(path: &Path) -> Result<ArcConfiguration, CliError> {
    let text = fs::read_to_string(path).map_err(io_error(path))?;
    Ok(ArcConfiguration::from_json(&text)?)
}

fn describe(x: IndObject) -> Value {
    json!({ "object": x.to_string(), "arc": object_to_arc(x).to_string() })
}

fn emit(out: &mut dyn Write, json_mode: bool, doc: Value, text: String) -> Result<(), CliError> {
    let stdout = Path::new("<stdout>");
    if json_mode {
        let mut doc = doc;
        doc.as_object_mut()
            .expect("documents are objects")
            .insert("schema".into(), Value::from(SCHEMA));
        let body = serde_json::to_string_pretty(&doc).expect("serializable");
        writeln!(out, "{body}").map_err(io_error(stdout))
    } else {
        out.write_all(text.as_bytes()).map_err(io_error(stdout))
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    let j = cli.json;
    match cli.command {
        Command::Coord { from } => coord(out, j, &from),
        Command::Hom(p) => hom(out, j, &p),
        Command::Ext(p) => ext(out, j, &p),
        Command::Cross { a, b } => cross(out, j, &a, &b),
        Command::Classify { config, window } => classify_cmd(out, j, &config, window.as_deref()),
        Command::Check { suite } => check(out, j, &suite),
        Command::Witness { kind } => witness(out, j, kind),
        Command::Render {
            config,
            window,
            out: path,
            highlight,
        } => render(out, j, &config, window.as_deref(), path.as_deref(), highlight),
    }
}

fn coord(out: &mut dyn Write, j: bool, from: &str) -> Outcome {
    let x = parse_endpoint("from", from)?;
    let arc = object_to_arc(x);
    let text = if from.contains(',') {
        format!("{arc} -> {x}\n")
    } else {
        format!("{x} -> {arc}\n")
    };
    emit(out, j, json!({ "command": "coord", "object": x.to_string(), "arc": arc.to_string() }), text)?;
    Ok(0)
}

/// The tower computation of the same Hom space, when one side is Prüfer.
fn tower_value(from: IndObject, to: IndObject, n: usize) -> Result<Option<Value>, CliError> {
    let digits = |d: &[u8]| d.iter().map(|x| char::from(b'0' + x)).collect::<String>();
    let (value, dims, stable_from) = match (from, to) {
        (IndObject::Finite(y), IndObject::Prufer(e)) => {
            let t = build_hom_tower(y, e.slot(), n);
            let lim = truncated_colim(&t)?;
            (lim.value, Some(digits(t.dims())), lim.stable_from)
        }
        (IndObject::Prufer(e), IndObject::Finite(y)) => {
            let t = build_inverse_hom_tower(y, e.slot(), n);
            let lim = truncated_lim(&t)?;
            (lim.value, Some(digits(t.dims())), lim.stable_from)
        }
        (IndObject::Prufer(a), IndObject::Prufer(b)) => {
            let lim = prufer_prufer_tower(a.slot(), b.slot(), n)?;
            (lim.value, None, lim.stable_from)
        }
        (IndObject::Finite(_), IndObject::Finite(_)) => return Ok(None),
    };
    Ok(Some(json!({ "truncation": n, "value": value, "stable_from": stable_from, "dims": dims })))
}

fn hom(out: &mut dyn Write, j: bool, p: &PairArgs) -> Outcome {
    let from = parse_endpoint("from", &p.from)?;
    let to = parse_endpoint("to", &p.to)?;
    let d = hom_dim(from, to);
    let mut text = format!(
        "Hom({from}, {to}) = {}\narcs: {} -> {}\nclause: {}\n",
        d.value,
        object_to_arc(from),
        object_to_arc(to),
        d.clause
    );
    let tower = match p.truncation {
        Some(n) => tower_value(from, to, n)?,
        None => None,
    };
    let mut status = 0;
    if let Some(t) = &tower {
        let v = t["value"].as_u64().unwrap_or(2);
        text.push_str(&format!(
            "tower: N={} value={v} stable_from={} {}\n",
            t["truncation"],
            t["stable_from"],
            if v == u64::from(d.value) { "agrees" } else { "DISAGREES" }
        ));
        if v != u64::from(d.value) {
            status = 1;
        }
    }
    let doc = json!({
        "command": "hom",
        "from": describe(from),
        "to": describe(to),
        "dim": d.value,
        "clause": d.clause.to_string(),
        "tower": tower,
    });
    emit(out, j, doc, text)?;
    Ok(status)
}

fn ext(out: &mut dyn Write, j: bool, p: &PairArgs) -> Outcome {
    let from = parse_endpoint("from", &p.from)?;
    let to = parse_endpoint("to", &p.to)?;
    let d = ext_dim(from, to);
    let (x, y) = (object_to_arc(from), object_to_arc(to));
    let crossing = match ext_via_crossing(x, y) {
        Ok(c) => Some(c.value),
        Err(infgon_core::Error::TwoInfiniteArcs(..)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut text = format!(
        "Ext^1({from}, {to}) = Hom({from}, {}) = {}\nclause: {}\n",
        shift_object(to, 1),
        d.value,
        d.clause
    );
    match crossing {
        Some(c) => text.push_str(&format!("crossing: {} ({x} vs {y})\n", if c == 1 { "yes" } else { "no" })),
        None => text.push_str("crossing: undefined for two infinite arcs\n"),
    }
    let doc = json!({
        "command": "ext",
        "from": describe(from),
        "to": describe(to),
        "dim": d.value,
        "clause": d.clause.to_string(),
        "crossing": crossing,
    });
    emit(out, j, doc, text)?;
    Ok(0)
}

fn cross(out: &mut dyn Write, j: bool, a: &str, b: &str) -> Outcome {
    let (x, y) = (parse_arc("a", a)?, parse_arc("b", b)?);
    let r: CrossResult = arcs_cross(x, y);
    let doc = json!({ "command": "cross", "a": x.to_string(), "b": y.to_string(), "result": r.to_string() });
    emit(out, j, doc, format!("{r}\n"))?;
    Ok(0)
}

fn classify_cmd(out: &mut dyn Write, j: bool, path: &Path, window: Option<&str>) -> Outcome {
    let c = load_config(path)?;
    let w = parse_window(window, c.natural_window())?;
    let result = classify(&c, w);
    let doc = json!({
        "command": "classify",
        "window": w.to_string(),
        "verdict": result.verdict.to_string(),
        "reason": result.reason,
    });
    emit(out, j, doc, result.to_text())?;
    Ok(0)
}

fn check(out: &mut dyn Write, j: bool, ids: &[u8]) -> Outcome {
    let ids: Vec<u8> = if ids.is_empty() { suites::SUITE_IDS.to_vec() } else { ids.to_vec() };
    let reports: Vec<suites::SuiteReport> = ids.iter().filter_map(|&id| suites::run(id)).collect();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut text: String = reports.iter().map(|r| r.summary_line() + "\n").collect();
    if failed == 0 {
        text.push_str(&format!("all {} suites passed\n", reports.len()));
    } else {
        text.push_str(&format!("{failed} of {} suites failed\n", reports.len()));
    }
    let doc = json!({ "command": "check", "passed": failed == 0, "suites": reports });
    emit(out, j, doc, text)?;
    Ok(u8::from(failed > 0))
}

fn witness(out: &mut dyn Write, j: bool, kind: WitnessKind) -> Outcome {
    match kind {
        WitnessKind::Overarc { config, a, point } => {
            let c = load_config(&config)?;
            let target = match (a, point) {
                (Some(a), _) => OverarcTarget::Arc(parse_finite("a", &a)?),
                (None, Some(h)) => OverarcTarget::Point(h),
                (None, None) => return Err(CliError::Usage("give --a ARC or --point H".into())),
            };
            let found = strong_overarc(&c, target)?;
            let doc = json!({ "command": "witness overarc", "target": target.to_string(), "overarc": found });
            emit(out, j, doc, format!("OVERARC {found} over {target}\n"))?;
        }
        WitnessKind::Antichain { config, a, count } => {
            let c = load_config(&config)?;
            let seed = parse_finite("a", &a)?;
            let chain = overarc_antichain(&c, seed, count)?;
            let prufer = IndObject::prufer(-seed.a() - 2)?;
            let mut text = format!("ANTICHAIN seed {seed}, {} arcs, each mapping to {prufer}\n", chain.len());
            for x in &chain {
                text.push_str(&format!("{x}\t{}\n", x.to_object()));
            }
            let doc = json!({
                "command": "witness antichain",
                "seed": seed,
                "prufer": prufer.to_string(),
                "chain": chain,
            });
            emit(out, j, doc, text)?;
        }
        WitnessKind::Approximation { config, to, window } => {
            let c = load_config(&config)?;
            let d = parse_endpoint("to", &to)?;
            let default = match object_to_arc(d) {
                Arc::Finite(x) => c.natural_window().including(x.a()).including(x.b()),
                Arc::Infinite(m) => c.natural_window().including(m),
            };
            let w = parse_window(window.as_deref(), default)?;
            let report = approximation_report(&c, d, w)?;
            let mut text = format!(
                "APPROXIMATION of {} by {}\nfountain {} ({})\nwindow {}\n",
                report.object, report.kind, report.fountain, report.prufer, report.window
            );
            for e in &report.entries {
                text.push_str(&format!("{}\t{}\n", e.arc, status_text(e)));
            }
            text.push_str(&format!("exceptions {}\n", report.exceptions().count()));
            let doc = json!({ "command": "witness approximation", "report": report });
            emit(out, j, doc, text)?;
        }
    }
    Ok(0)
}

fn status_text(e: &ApproxEntry) -> String {
    match e.status {
        FactorStatus::Factors(rule) => format!("factors {rule:?}"),
        FactorStatus::Indeterminate => "indeterminate".into(),
        FactorStatus::Exception => "exception".into(),
    }
}

fn render(
    out: &mut dyn Write,
    j: bool,
    config: &Path,
    window: Option<&str>,
    path: Option<&Path>,
    highlight: bool,
) -> Outcome {
    let c = load_config(config)?;
    let w = parse_window(window, c.natural_window())?;
    let svg = render_svg(&c, w, highlight);
    match path {
        Some(p) => {
            fs::write(p, &svg).map_err(io_error(p))?;
            let arcs = c.materialize(w);
            let finite = arcs.iter().filter(|a| matches!(a, Arc::Finite(_))).count();
            let doc = json!({
                "command": "render",
                "out": p.display().to_string(),
                "window": w.to_string(),
                "finite_arcs": finite,
                "infinite_arcs": arcs.len() - finite,
            });
            let text = format!("wrote {}: {} finite arcs, {} infinite\n", p.display(), finite, arcs.len() - finite);
            emit(out, j, doc, text)?;
        }
        None => out
            .write_all(svg.as_bytes())
            .map_err(io_error(Path::new("<stdout>")))?,
    }
    Ok(0)
}
