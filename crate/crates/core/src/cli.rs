//! Command-line front end. Argument structs, dispatch, and a
//! [`CommandResult`] that renders either as text or as JSON.

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bott::{self, BottQuery};
use crate::chow::{self, ChernData};
use crate::classify::{self, ClassificationEntry};
use crate::curves::{self, CurveData};
use crate::error::Error;
use crate::hrr;
use crate::qcoh::{self, CohomologyTable, StandardBundle};
use crate::verify::{self, Section};
use crate::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "qgg",
    version,
    about = "Globally generated bundles on the smooth quadric threefold"
)]
pub struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chern-class operations.
    #[command(subcommand)]
    Chern(ChernCommand),
    /// Euler characteristic.
    Chi(ChiArgs),
    /// Cohomology table of a catalogue bundle.
    Coh(CohArgs),
    /// `h^q(Ω^p_{P^n}(t))`.
    Bott(BottArgs),
    /// `c3` and `α` for the curve of a section.
    Curve(CurveArgs),
    /// Classification tables.
    Classify(ClassifyArgs),
    /// Classes of degree `d`, genus `g` curves on a quartic del Pezzo surface.
    Delpezzo(DelPezzoArgs),
    /// Expected number of trisecant lines.
    Trisecant(DegreeGenus),
    /// Run every published identity and report pass / fail / flagged.
    VerifyPaper(VerifyArgs),
}

/// `(r, c1, c2, c3)` written `r,c1,c2,c3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quad(pub ChernData);

impl FromStr for Quad {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_ints(s, 4)?;
        let rank = u32::try_from(v[0]).map_err(|_| format!("rank must be non-negative: {s}"))?;
        Ok(Quad(ChernData::new(rank, v[1], v[2], v[3])))
    }
}

/// `(c1, c2, c3)` written `c1,c2,c3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classes(pub [i64; 3]);

impl FromStr for Classes {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_ints(s, 3)?;
        Ok(Classes([v[0], v[1], v[2]]))
    }
}

fn parse_ints(s: &str, n: usize) -> Result<Vec<i64>, String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma-separated integers, got {s:?}"));
    }
    Ok(v)
}

#[derive(Clone, Debug, Args)]
pub struct BundleArgs {
    #[arg(short, long)]
    pub rank: u32,
    /// `c1,c2,c3`
    #[arg(short, long, allow_hyphen_values = true)]
    pub classes: Classes,
}

impl BundleArgs {
    pub fn data(&self) -> ChernData {
        let [c1, c2, c3] = self.classes.0;
        ChernData::new(self.rank, c1, c2, c3)
    }
}

#[derive(Debug, Subcommand)]
pub enum ChernCommand {
    Twist {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(short, long, allow_hyphen_values = true)]
        k: i64,
    },
    Dual {
        #[command(flatten)]
        bundle: BundleArgs,
    },
    Tensor {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Second factor as `r,c1,c2,c3`.
        #[arg(long, allow_hyphen_values = true)]
        with: Quad,
    },
    /// Third term of `0 → S → E → Q → 0` from the other two.
    Whitney {
        #[arg(long, allow_hyphen_values = true)]
        sub: Quad,
        /// Middle term is `O^n`.
        #[arg(long, conflicts_with_all = ["total", "quotient"])]
        ambient_rank: Option<u32>,
        /// Middle term; prints the quotient.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "quotient")]
        total: Option<Quad>,
        /// Quotient; prints the middle term.
        #[arg(long, allow_hyphen_values = true)]
        quotient: Option<Quad>,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ChiMethod {
    #[default]
    Formula,
    Hrr,
    Both,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub bundle: BundleArgs,
    #[arg(long, value_enum, default_value_t)]
    pub method: ChiMethod,
}

#[derive(Debug, Args)]
pub struct CohArgs {
    /// line, spinor, A, Adual, phi, phidual, GP, EP or pair:<name>
    pub bundle: String,
    /// Twist; for pairs, defaults to the catalogued twist.
    #[arg(allow_hyphen_values = true)]
    pub t: Option<i64>,
}

#[derive(Debug, Args)]
pub struct BottArgs {
    pub n: i64,
    pub p: i64,
    #[arg(allow_hyphen_values = true)]
    pub t: i64,
    pub q: i64,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// A component `d,g`; repeat for disconnected curves.
    #[arg(long = "component", required = true, value_parser = parse_component)]
    pub components: Vec<(u32, u32)>,
    #[arg(long, default_value_t = 2)]
    pub c1: i64,
}

fn parse_component(s: &str) -> Result<(u32, u32), String> {
    let v = parse_ints(s, 2)?;
    let d = u32::try_from(v[0]).map_err(|_| format!("degree must be non-negative: {s}"))?;
    let g = u32::try_from(v[1]).map_err(|_| format!("genus must be non-negative: {s}"))?;
    Ok((d, g))
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..=2))]
    pub c1: Option<i64>,
    #[arg(long)]
    pub rank3_only: bool,
    #[arg(long)]
    pub indecomposable: bool,
}

#[derive(Debug, Args)]
pub struct DegreeGenus {
    #[arg(allow_hyphen_values = true)]
    pub d: i64,
    #[arg(allow_hyphen_values = true)]
    pub g: i64,
}

#[derive(Debug, Args)]
pub struct DelPezzoArgs {
    #[command(flatten)]
    pub curve: DegreeGenus,
    /// Keep only classes that can carry a smooth connected curve.
    #[arg(long)]
    pub curve_filter: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// chern, chi, bott, coh, curves or classify
    #[arg(long)]
    pub section: Option<Section>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandStatus {
    Ok,
    Error,
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Citation {
    #[serde(rename = "ref")]
    pub reference: String,
    pub quote: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub status: CommandStatus,
    pub inputs: Value,
    pub result: Value,
    pub citations: Vec<Citation>,
    /// Human-readable rendering.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl CommandResult {
    fn ok(command: &str, inputs: Value, result: Value, text: Vec<String>) -> Self {
        Self {
            command: command.to_string(),
            status: CommandStatus::Ok,
            inputs,
            result,
            citations: Vec::new(),
            text,
        }
    }

    fn error(command: &str, inputs: Value, message: String) -> Self {
        Self {
            command: command.to_string(),
            status: CommandStatus::Error,
            inputs,
            result: json!({ "error": message }),
            citations: Vec::new(),
            text: vec![format!("error: {message}")],
        }
    }

    fn flag(mut self, reference: &str, quote: &str) -> Self {
        self.status = CommandStatus::Flagged;
        self.citations.push(Citation {
            reference: reference.to_string(),
            quote: quote.to_string(),
            status: "flagged".to_string(),
        });
        self.text.push(format!("flagged: {reference}: {quote}"));
        self
    }

    /// `0` on success or flagged, `1` on error.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            CommandStatus::Error => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for CommandResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text.join("\n"))
    }
}

/// `{"num", "den"}`, so rationals never pass through floats.
pub fn rational_json(q: Rational) -> Value {
    json!({ "num": *q.numer(), "den": *q.denom() })
}

fn chern_json(c: &ChernData) -> Value {
    let ch = hrr::chern_character(c);
    json!({
        "rank": c.rank,
        "c1": c.c1,
        "c2": c.c2,
        "c3": c.c3,
        "total_chern": c.total_chern().to_string(),
        "chern_character": ([ch.ch0, ch.ch1, ch.ch2, ch.ch3].map(rational_json)),
    })
}

fn chern_lines(c: &ChernData) -> Vec<String> {
    vec![format!("{c}"), format!("c = {}", c.total_chern())]
}

fn table_json(t: &CohomologyTable) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn table_lines(name: &str, t: &CohomologyTable) -> Vec<String> {
    let mut out: Vec<String> = (0..4)
        .map(|i| format!("h{i}({name}) = {}", t.get(i)))
        .collect();
    out.push(format!("provenance: {}", t.provenance));
    out
}

pub fn run(cli: &Cli) -> CommandResult {
    match &cli.command {
        Command::Chern(c) => cmd_chern(c),
        Command::Chi(a) => cmd_chi(a),
        Command::Coh(a) => cmd_coh(a),
        Command::Bott(a) => cmd_bott(a),
        Command::Curve(a) => cmd_curve(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Delpezzo(a) => cmd_delpezzo(a),
        Command::Trisecant(a) => cmd_trisecant(a),
        Command::VerifyPaper(a) => cmd_verify_paper(a),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Result<(CommandResult, bool), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok((run(&cli), cli.json))
}

pub fn cmd_chern(c: &ChernCommand) -> CommandResult {
    match c {
        ChernCommand::Twist { bundle, k } => {
            let e = bundle.data();
            let inputs = json!({ "bundle": chern_json(&e), "k": k });
            let out = chow::twist(&e, *k);
            let printed = chow::twist_printed_formula(&e, *k);
            let mut result = chern_json(&out);
            result["printed_formula_c3"] = json!(printed.c3);
            let r = CommandResult::ok("chern twist", inputs, result, chern_lines(&out));
            if printed != out {
                r.flag(
                    "twist of c3",
                    &format!(
                        "printed twist formula gives c3 = {}; the k² term needs a factor c1",
                        printed.c3
                    ),
                )
            } else {
                r
            }
        }
        ChernCommand::Dual { bundle } => {
            let e = bundle.data();
            let out = chow::dual(&e);
            CommandResult::ok(
                "chern dual",
                json!({ "bundle": chern_json(&e) }),
                chern_json(&out),
                chern_lines(&out),
            )
        }
        ChernCommand::Tensor { bundle, with } => {
            let (a, b) = (bundle.data(), with.0);
            let inputs = json!({ "left": chern_json(&a), "right": chern_json(&b) });
            match chow::tensor(&a, &b) {
                Ok(out) => {
                    CommandResult::ok("chern tensor", inputs, chern_json(&out), chern_lines(&out))
                }
                Err(e) => CommandResult::error("chern tensor", inputs, e.to_string()),
            }
        }
        ChernCommand::Whitney {
            sub,
            ambient_rank,
            total,
            quotient,
        } => {
            let s = sub.0;
            let mut inputs = json!({ "sub": chern_json(&s) });
            let out = match (ambient_rank, total, quotient) {
                (Some(n), None, None) => {
                    inputs["total"] = chern_json(&ChernData::trivial(*n));
                    chow::whitney_third(&s, &ChernData::trivial(*n))
                }
                (None, Some(t), None) => {
                    inputs["total"] = chern_json(&t.0);
                    chow::whitney_third(&s, &t.0)
                }
                (None, None, Some(q)) => {
                    inputs["quotient"] = chern_json(&q.0);
                    Ok(chow::whitney_total(&s, &q.0))
                }
                _ => Err(Error::IndexOutOfRange(
                    "give one of --ambient-rank, --total, --quotient".to_string(),
                )),
            };
            match out {
                Ok(out) => {
                    CommandResult::ok("chern whitney", inputs, chern_json(&out), chern_lines(&out))
                }
                Err(e) => CommandResult::error("chern whitney", inputs, e.to_string()),
            }
        }
    }
}

pub fn cmd_chi(a: &ChiArgs) -> CommandResult {
    let e = a.bundle.data();
    let method = format!("{:?}", a.method).to_lowercase();
    let inputs = json!({ "bundle": chern_json(&e), "method": method });
    let formula = hrr::chi_formula(&e);
    let via_hrr = hrr::chi_hrr(&e);
    match a.method {
        ChiMethod::Formula => CommandResult::ok(
            "chi",
            inputs,
            json!({ "chi": rational_json(formula) }),
            vec![format!("χ = {formula}")],
        ),
        ChiMethod::Hrr => CommandResult::ok(
            "chi",
            inputs,
            json!({ "chi": rational_json(via_hrr) }),
            vec![format!("χ = {via_hrr}")],
        ),
        ChiMethod::Both if formula == via_hrr => CommandResult::ok(
            "chi",
            inputs,
            json!({ "formula": rational_json(formula), "hrr": rational_json(via_hrr), "agree": true }),
            vec![
                format!("χ (formula) = {formula}"),
                format!("χ (hrr) = {via_hrr}"),
            ],
        ),
        ChiMethod::Both => CommandResult::error(
            "chi",
            inputs,
            format!("formula gives {formula}, hrr gives {via_hrr}"),
        ),
    }
}

/// Catalogue bundle by CLI name.
pub fn bundle_by_name(name: &str) -> Option<StandardBundle> {
    use StandardBundle::*;
    Some(match name {
        "line" => Line(0),
        "spinor" => Spinor,
        "A" => StandardBundle::a(),
        "Adual" => StandardBundle::a().dual(),
        "phi" => Phi,
        "phidual" => Phi.dual(),
        "GP" => GP,
        "EP" => EP,
        _ => return None,
    })
}

fn catalogue_listing() -> String {
    let pairs: Vec<String> = qcoh::pair_catalogue()
        .iter()
        .map(|e| {
            format!(
                "pair:{} ({} ⊗ {} at twist {})",
                e.name, e.left, e.right, e.twist
            )
        })
        .collect();
    format!(
        "bundles: line, spinor, A, Adual, phi, phidual, GP, EP; pairs: {}",
        pairs.join(", ")
    )
}

pub fn cmd_coh(a: &CohArgs) -> CommandResult {
    let inputs = json!({ "bundle": a.bundle, "t": a.t });
    if let Some(name) = a.bundle.strip_prefix("pair:") {
        let Some(entry) = qcoh::pair_by_name(name) else {
            return CommandResult::error(
                "coh",
                inputs,
                format!("unknown pair {name:?}; {}", catalogue_listing()),
            );
        };
        let t = a.t.unwrap_or(entry.twist);
        return match qcoh::coh_pair(&entry.left, &entry.right, t) {
            Ok(table) => {
                let label = format!("{} ⊗ {}({t})", entry.left, entry.right);
                CommandResult::ok(
                    "coh",
                    inputs,
                    table_json(&table),
                    table_lines(&label, &table),
                )
            }
            Err(e) => CommandResult::error("coh", inputs, format!("{e}; {}", catalogue_listing())),
        };
    }
    let Some(bundle) = bundle_by_name(&a.bundle) else {
        return CommandResult::error(
            "coh",
            inputs,
            format!("unknown bundle {:?}; {}", a.bundle, catalogue_listing()),
        );
    };
    let t = a.t.unwrap_or(0);
    match qcoh::coh(&bundle, t) {
        Ok(table) => {
            let label = format!("{}", bundle.clone().twist(t).normalize());
            let r = CommandResult::ok(
                "coh",
                inputs,
                table_json(&table),
                table_lines(&label, &table),
            );
            match (&bundle, t) {
                (StandardBundle::Phi, 0) => r.flag(
                    "Φ sections",
                    "published h⁰(Φ) = 4; the Euler sequence gives 5",
                ),
                (StandardBundle::Phi, 1) => r.flag(
                    "Φ(1) sections",
                    "published h⁰(Φ(1)) = 19; the Euler sequence gives 24",
                ),
                _ => r,
            }
        }
        Err(e) => CommandResult::error("coh", inputs, format!("{e}; {}", catalogue_listing())),
    }
}

pub fn cmd_bott(a: &BottArgs) -> CommandResult {
    let inputs = json!({ "n": a.n, "p": a.p, "t": a.t, "q": a.q });
    match bott::bott(&BottQuery::new(a.n, a.p, a.t, a.q)) {
        Ok(h) => CommandResult::ok(
            "bott",
            inputs,
            json!({ "h": h }),
            vec![format!("h^{}(Ω^{}_P{}({})) = {h}", a.q, a.p, a.n, a.t)],
        ),
        Err(e) => CommandResult::error("bott", inputs, e.to_string()),
    }
}

pub fn cmd_curve(a: &CurveArgs) -> CommandResult {
    let inputs = json!({ "components": a.components, "c1": a.c1 });
    let curve = match CurveData::new(a.components.clone()) {
        Ok(c) => c,
        Err(e) => return CommandResult::error("curve", inputs, e.to_string()),
    };
    let c3 = curves::c3_from_curve(&curve, a.c1);
    let alpha = curves::alpha(&curve, a.c1);
    let mut text = vec![
        format!(
            "curve {curve}: degree {}, arithmetic genus {}",
            curve.degree(),
            curve.arithmetic_genus()
        ),
        format!("c3 = {}", c3.c3),
        match alpha.value {
            Some(v) => format!("α = {v} in [{}, {}]", alpha.lower, alpha.upper),
            None => format!("α in [{}, {}]", alpha.lower, alpha.upper),
        },
    ];
    if c3.c1_out_of_range {
        text.push("warning: c1 outside {1, 2}".to_string());
    }
    CommandResult::ok(
        "curve",
        inputs,
        json!({
            "degree": curve.degree(),
            "arithmetic_genus": curve.arithmetic_genus(),
            "c3": c3,
            "alpha": alpha,
        }),
        text,
    )
}

fn entries_result(entries: &[ClassificationEntry]) -> (Value, Vec<String>) {
    let value = serde_json::to_value(entries).expect("serializable");
    let text = entries.iter().map(|e| e.to_string()).collect();
    (json!({ "entries": value }), text)
}

pub fn cmd_classify(a: &ClassifyArgs) -> CommandResult {
    let inputs = json!({
        "c1": a.c1,
        "rank3_only": a.rank3_only,
        "indecomposable": a.indecomposable,
    });
    let c1s: Vec<i64> = match a.c1 {
        Some(c) => vec![c],
        None => vec![0, 1, 2],
    };
    let mut entries = Vec::new();
    for c1 in &c1s {
        let table = match (*c1, a.rank3_only) {
            (0, _) => Ok(classify::trivial_table()),
            (c, true) => classify::rank3_table(c),
            (c, false) => classify::higher_rank_table(c),
        };
        match table {
            Ok(t) => entries.extend(t),
            Err(e) => return CommandResult::error("classify", inputs, e.to_string()),
        }
    }
    if a.indecomposable {
        entries.retain(|e| e.indecomposable);
    }
    let (result, text) = entries_result(&entries);
    let r = CommandResult::ok("classify", inputs, result, text);
    let report = classify::higher_rank_check();
    let shown: Vec<_> = report
        .flagged_rank3
        .iter()
        .filter(|t| c1s.contains(&t.0))
        .collect();
    if shown.is_empty() {
        r
    } else {
        let names: Vec<String> = shown
            .iter()
            .map(|t| format!("({},{},{};{})", t.0, t.1, t.2, t.3))
            .collect();
        r.flag(
            "rank-3 entries of the higher-rank list",
            &format!("the published higher-rank list omits {}", names.join(", ")),
        )
    }
}

pub fn cmd_delpezzo(a: &DelPezzoArgs) -> CommandResult {
    let (d, g) = (a.curve.d, a.curve.g);
    let inputs = json!({ "d": d, "g": g, "curve_filter": a.curve_filter });
    let classes = if a.curve_filter {
        curves::delpezzo_classes_filtered(d, g)
    } else {
        curves::delpezzo_classes(d, g)
    };
    let text = if classes.is_empty() {
        vec!["no normalized classes".to_string()]
    } else {
        classes.iter().map(|c| c.to_string()).collect()
    };
    let result = json!({ "classes": classes });
    let r = CommandResult::ok("delpezzo", inputs, result, text);
    if (d, g) == (6, 2) {
        r.flag(
            "del Pezzo second solution",
            "(5;2,2,2,2,1) is published as a solution but has a < b1 + b2 + b3",
        )
    } else {
        r
    }
}

pub fn cmd_trisecant(a: &DegreeGenus) -> CommandResult {
    let count = curves::trisecant_count(a.d, a.g);
    let line = match count {
        curves::TrisecantCount::Finite(n) => format!("t({},{}) = {n}", a.d, a.g),
        curves::TrisecantCount::Infinite => {
            format!("t({},{}) < 0: infinitely many trisecants", a.d, a.g)
        }
    };
    CommandResult::ok(
        "trisecant",
        json!({ "d": a.d, "g": a.g }),
        json!({ "value": curves::trisecant(a.d, a.g), "count": count }),
        vec![line],
    )
}

pub fn cmd_verify_paper(a: &VerifyArgs) -> CommandResult {
    let report = verify::run(a.section);
    let inputs = json!({ "section": a.section.map(|s| s.name()) });
    let citations = report
        .checks
        .iter()
        .map(|c| Citation {
            reference: format!("{}: {}", c.section, c.reference),
            quote: c.quote.clone(),
            status: c.status.to_string(),
        })
        .collect();
    let mut text: Vec<String> = report.checks.iter().map(|c| c.to_string()).collect();
    text.push(report.summary());
    let status = if !report.is_success() {
        CommandStatus::Error
    } else if report.count(verify::Status::Flagged) > 0 {
        CommandStatus::Flagged
    } else {
        CommandStatus::Ok
    };
    CommandResult {
        command: "verify-paper".to_string(),
        status,
        inputs,
        result: serde_json::to_value(&report).expect("serializable"),
        citations,
        text,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        let mut v = vec!["qgg"];
        v.extend_from_slice(args);
        run_from(v).expect("parses").0
    }

    #[test]
    fn chern_examples() {
        let r = run_args(&["chern", "twist", "-r", "3", "-c", "1,2,2", "-k", "1"]);
        assert_eq!(
            (
                r.result["c1"].clone(),
                r.result["c2"].clone(),
                r.result["c3"].clone()
            ),
            (json!(4), json!(12), json!(8))
        );
        let r = run_args(&["chern", "dual", "-r", "2", "-c", "1,1,0"]);
        assert_eq!(r.result["c1"], json!(-1));
        let r = run_args(&[
            "chern",
            "whitney",
            "--sub",
            "1,-1,0,0",
            "--ambient-rank",
            "5",
        ]);
        assert_eq!(r.text[0], "(4, 1, 2, 2)");
    }

    #[test]
    fn twist_flags_printed_c3() {
        let r = run_args(&["chern", "twist", "-r", "3", "-c", "2,0,0", "-k", "1"]);
        assert_eq!(r.status, CommandStatus::Flagged);
        assert_eq!(r.result["c3"], json!(6));
        assert_eq!(r.result["printed_formula_c3"], json!(4));
    }

    #[test]
    fn negative_arguments() {
        let r = run_args(&["coh", "spinor", "-1"]);
        assert_eq!(r.result["h0"], json!(0));
        let r = run_args(&["chi", "-r", "2", "-c", "-1,3,0", "--method", "both"]);
        assert_eq!(r.result["formula"], json!({"num": -2, "den": 1}));
    }

    #[test]
    fn rationals_are_pairs() {
        let r = run_args(&["chi", "-r", "1", "-c", "1,0,0", "--method", "hrr"]);
        assert_eq!(r.status, CommandStatus::Ok);
        let r = run_args(&["chi", "-r", "1", "-c", "0,0,1"]);
        assert_eq!(r.result["chi"], json!({"num": 3, "den": 2}));
    }

    #[test]
    fn unknown_pair_lists_catalogue() {
        let r = run_args(&["coh", "pair:nope"]);
        assert_eq!(r.exit_code(), 1);
        assert!(r.result["error"]
            .as_str()
            .unwrap()
            .contains("pair:phidual-phi"));
    }

    #[test]
    fn bad_usage_is_a_clap_error() {
        assert!(run_from(["qgg", "chi", "-r", "2", "-c", "1,x,0"]).is_err());
        assert!(run_from(["qgg", "classify", "--c1", "3"]).is_err());
    }
}
