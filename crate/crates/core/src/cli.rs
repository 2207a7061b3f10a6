//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches, and returns the process exit code:
//! 0 on success, 1 when a verification fails, 2 on a usage or input error.
//! Output is deterministic: JSON objects have sorted keys and every listing
//! follows a fixed enumeration order.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::charformulas::{
    bigint_to_json, decompose_weyl_basis, lemma51_terms, pieri_gm, product_onerow, qwhittaker_char,
    truncated_char_lemma63, GradedCharacter, TensorVariant, WeylTerm,
};
use crate::error::{Error, Result};
use crate::filtration::{run_suite, weyl_module_dim, Status, Suite, SuiteConfig, VerificationReport};
use crate::gtpop::{basis_word, enumerate_pops, pop_grade};
use crate::qalg::QPoly;
use crate::weights::{partition_to_weight, Partition, Rank, Weight};

#[derive(Debug, Parser)]
#[command(name = "weylfusion", version, about = "Graded characters of local Weyl modules for sl(n+1)[t]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format (default: json, except plain for `dim` and `verify`)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HighestWeight {
    /// The Lie algebra is sl(n+1)
    #[arg(long)]
    rank: usize,
    /// Fundamental-weight coefficients, e.g. 2,0,1
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "partition")]
    weight: Option<Vec<i64>>,
    /// Partition with at most n+1 parts, e.g. 3,1
    #[arg(long, value_delimiter = ',', conflicts_with = "weight")]
    partition: Option<Vec<u32>>,
}

impl HighestWeight {
    fn resolve(&self) -> Result<Weight> {
        let rank = Rank::new(self.rank)?;
        let w = match (&self.weight, &self.partition) {
            (Some(c), _) => Weight::new(rank, c.clone())?,
            (None, Some(p)) => partition_to_weight(&Partition::new(p.clone())?, rank)?,
            (None, None) => return Err(Error::Parse("one of --weight or --partition is required".into())),
        };
        if !w.is_dominant() {
            return Err(Error::Domain(format!("weight {w} is not dominant")));
        }
        Ok(w)
    }
}

#[derive(Debug, Args)]
struct TensorArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    k: u32,
    /// omega1_omegan, omega1_omega1 or omegan_omegan
    #[arg(long)]
    variant: TensorVariant,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graded character of W_loc(λ), or of the truncated module W_{|λ|-j}(λ) with --j (n = 2)
    Char {
        #[command(flatten)]
        hw: HighestWeight,
        #[arg(long)]
        j: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Dimension of W_loc(λ)
    Dim {
        #[command(flatten)]
        hw: HighestWeight,
        #[command(flatten)]
        output: Output,
    },
    /// Partition overlaid patterns of W_loc(λ) with grades and basis words
    Pops {
        #[command(flatten)]
        hw: HighestWeight,
        #[command(flatten)]
        output: Output,
    },
    /// Expansion of P_(m) · P_μ at t = 0
    Pieri {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        m: u32,
        /// μ as comma-separated parts; omit for the empty partition
        #[arg(long, value_delimiter = ',')]
        partition: Vec<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Character of W_loc(mω_a) ⊗ W_loc(kω_b) and its closed-form Weyl expansion
    Tensor {
        #[command(flatten)]
        args: TensorArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Expand a character in the basis of local Weyl characters
    Decompose {
        /// Character JSON as written by `char` or `tensor` ("-" for stdin)
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Run verification suites
    Verify {
        /// Suite name or "all"; repeatable
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        /// List suites with their default bounds
        #[arg(long)]
        list: bool,
        /// Override the main size bound of each suite
        #[arg(long)]
        max_mk: Option<u32>,
        /// Restrict to one rank
        #[arg(long)]
        rank: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

/// Result of a successful dispatch: the text to emit and whether any
/// verification failed.
struct Rendered {
    text: String,
    failed: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, failed: false }
    }
}

/// Run the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let msg = e.render().to_string();
            let line = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    let (output, result) = dispatch(&cli.command);
    let rendered = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &output.out {
        Some(path) => std::fs::write(path, &rendered.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(rendered.text.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    i32::from(rendered.failed)
}

fn dispatch(cmd: &Command) -> (&Output, Result<Rendered>) {
    match cmd {
        Command::Char { hw, j, output } => (output, cmd_char(hw, *j, fmt(output, Format::Json))),
        Command::Dim { hw, output } => (output, cmd_dim(hw, fmt(output, Format::Plain))),
        Command::Pops { hw, output } => (output, cmd_pops(hw, fmt(output, Format::Json))),
        Command::Pieri { rank, m, partition, output } => {
            (output, cmd_pieri(*rank, *m, partition, fmt(output, Format::Json)))
        }
        Command::Tensor { args, output } => (output, cmd_tensor(args, fmt(output, Format::Json))),
        Command::Decompose { input, output } => (output, cmd_decompose(input, fmt(output, Format::Json))),
        Command::Verify { suite, list, max_mk, rank, output } => {
            let f = fmt(output, Format::Plain);
            if *list {
                (output, Ok(Rendered::ok(list_suites(f))))
            } else {
                (output, cmd_verify(suite, *max_mk, *rank, f))
            }
        }
    }
}

fn fmt(o: &Output, default: Format) -> Format {
    o.format.unwrap_or(default)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(format!("csv output: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
}

fn poly_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

fn exponent_string(e: &[u32]) -> String {
    e.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn character_rows(c: &GradedCharacter) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (e, p) in c.terms() {
        for (d, x) in p.coeffs().iter().enumerate() {
            if *x != BigInt::from(0) {
                rows.push(vec![exponent_string(e), d.to_string(), x.to_string()]);
            }
        }
    }
    rows
}

/// Character JSON with a few summary fields merged in.
fn character_json(c: &GradedCharacter, extra: Value) -> Value {
    let mut v = c.to_json();
    v["dimension"] = bigint_to_json(&c.dimension());
    v["graded_dimension"] = poly_json(&c.graded_dimension());
    if let Value::Object(m) = extra {
        for (k, x) in m {
            v[k] = x;
        }
    }
    v
}

fn render_character(c: &GradedCharacter, extra: Value, header: &str, f: Format) -> Result<String> {
    Ok(match f {
        Format::Json => json_text(&character_json(c, extra)),
        Format::Csv => csv_text(&["exponent", "degree", "coefficient"], character_rows(c))?,
        Format::Plain => format!(
            "{header}\ndimension {}\ngraded dimension {}\n{c}",
            c.dimension(),
            c.graded_dimension()
        ),
    })
}

fn cmd_char(hw: &HighestWeight, j: Option<u32>, f: Format) -> Result<Rendered> {
    let w = hw.resolve()?;
    let (c, header) = match j {
        None => (qwhittaker_char(&w)?, format!("ch W_loc({w})")),
        Some(j) => (truncated_char_lemma63(&w, j)?, format!("ch W_{}({w})", w.height() - i64::from(j))),
    };
    let mut extra = json!({ "weight": w.coeffs() });
    if let Some(j) = j {
        extra["j"] = json!(j);
    }
    Ok(Rendered::ok(render_character(&c, extra, &header, f)?))
}

fn cmd_dim(hw: &HighestWeight, f: Format) -> Result<Rendered> {
    let w = hw.resolve()?;
    let d = weyl_module_dim(&w);
    Ok(Rendered::ok(match f {
        Format::Plain => format!("{d}\n"),
        Format::Json => json_text(&json!({ "rank": w.rank().n(), "weight": w.coeffs(), "dimension": bigint_to_json(&d) })),
        Format::Csv => csv_text(&["weight", "dimension"], [vec![w.to_string(), d.to_string()]])?,
    }))
}

fn cmd_pops(hw: &HighestWeight, f: Format) -> Result<Rendered> {
    let w = hw.resolve()?;
    let pops: Vec<_> = enumerate_pops(&w)?.collect();
    let rows_of = |p: &crate::gtpop::Pop| format!("{:?}", p.pattern().rows()).replace(' ', "");
    Ok(Rendered::ok(match f {
        Format::Json => json_text(&serde_json::to_value(&pops).expect("POPs serialize")),
        Format::Csv => csv_text(
            &["rows", "overlays", "weight", "grade", "word"],
            pops.iter().map(|p| {
                vec![
                    rows_of(p),
                    format!("{:?}", p.overlays()).replace(' ', ""),
                    exponent_string(&p.weight()),
                    pop_grade(p).to_string(),
                    basis_word(p).to_string(),
                ]
            }),
        )?,
        Format::Plain => {
            let mut s = format!("{} POPs of W_loc({w})\n", pops.len());
            for p in &pops {
                s += &format!("grade {} rows {} word {}\n", pop_grade(p), rows_of(p), basis_word(p));
            }
            s
        }
    }))
}

fn cmd_pieri(rank: usize, m: u32, mu: &[u32], f: Format) -> Result<Rendered> {
    let rank = Rank::new(rank)?;
    let mu = Partition::new(mu.to_vec())?;
    let phis = pieri_gm(&mu, m, rank)?;
    let coeffs = product_onerow(m, &mu, rank)?;
    let entries: Vec<_> = phis.iter().zip(&coeffs).map(|((lam, phi), (_, c))| (lam, phi, c)).collect();
    Ok(Rendered::ok(match f {
        Format::Json => json_text(&json!({
            "rank": rank.n(),
            "m": m,
            "mu": mu.parts(),
            "terms": entries.iter().map(|(lam, phi, c)| json!({
                "lambda": lam.parts(),
                "phi": phi.to_string(),
                "coeff": poly_json(c),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_text(
            &["lambda", "phi", "coeff"],
            entries.iter().map(|(lam, phi, c)| vec![lam.to_string(), phi.to_string(), c.to_string()]),
        )?,
        Format::Plain => {
            let mut s = format!("P_({m}) · P_{mu} in sl({})\n", rank.n() + 1);
            for (lam, phi, c) in &entries {
                s += &format!("{lam}  phi = {phi}  coeff = {c}\n");
            }
            s
        }
    }))
}

fn terms_json(terms: &[WeylTerm]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|t| json!({ "weight": t.weight.coeffs(), "label": t.weight.to_string(), "coeff": poly_json(&t.coeff) }))
            .collect(),
    )
}

fn terms_plain(terms: &[WeylTerm]) -> String {
    terms.iter().map(|t| format!("({}) W_loc({})\n", t.coeff, t.weight)).collect()
}

fn cmd_tensor(a: &TensorArgs, f: Format) -> Result<Rendered> {
    let rank = Rank::new(a.rank)?;
    let (x, y) = a.variant.factors(i64::from(a.m), i64::from(a.k), rank)?;
    let c = qwhittaker_char(&x)?.multiply(&qwhittaker_char(&y)?)?;
    let closed = if rank.n() >= 2 { Some(lemma51_terms(a.variant, a.m, a.k, rank)?) } else { None };
    let header = format!("ch W_loc({x}) · ch W_loc({y})");
    let text = match f {
        Format::Plain => {
            let mut s = render_character(&c, Value::Null, &header, f)?;
            if let Some(t) = &closed {
                s += "closed form:\n";
                s += &terms_plain(t);
            }
            s
        }
        _ => {
            let mut extra = json!({ "factors": [x.coeffs(), y.coeffs()], "variant": a.variant.to_string() });
            if let Some(t) = &closed {
                extra["closed_form"] = terms_json(t);
            }
            render_character(&c, extra, &header, f)?
        }
    };
    Ok(Rendered::ok(text))
}

fn cmd_decompose(input: &PathBuf, f: Format) -> Result<Rendered> {
    let raw = if input.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(input)
    }
    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", input.display())))?;
    let v: Value = serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("{}: {e}", input.display())))?;
    let c = GradedCharacter::from_json(&v)?;
    let terms = decompose_weyl_basis(&c)?;
    Ok(Rendered::ok(match f {
        Format::Json => json_text(&json!({ "rank": c.rank().n(), "terms": terms_json(&terms) })),
        Format::Csv => csv_text(
            &["weight", "coeff"],
            terms.iter().map(|t| vec![t.weight.to_string(), t.coeff.to_string()]),
        )?,
        Format::Plain => terms_plain(&terms),
    }))
}

fn list_suites(f: Format) -> String {
    match f {
        Format::Json => json_text(&Value::Array(
            Suite::ALL
                .iter()
                .map(|s| json!({ "name": s.name(), "bounds": s.default_bounds(), "description": s.description() }))
                .collect(),
        )),
        Format::Csv => csv_text(
            &["name", "bounds", "description"],
            Suite::ALL.iter().map(|s| vec![s.name().into(), s.default_bounds().into(), s.description().into()]),
        )
        .expect("static strings"),
        Format::Plain => Suite::ALL
            .iter()
            .map(|s| format!("{:<16}{:<44}{}\n", s.name(), s.default_bounds(), s.description()))
            .collect(),
    }
}

fn cmd_verify(names: &[String], max_mk: Option<u32>, rank: Option<usize>, f: Format) -> Result<Rendered> {
    let mut suites = Vec::new();
    for n in names {
        if n == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(n.parse::<Suite>()?);
        }
    }
    let config = SuiteConfig { max_mk, rank: rank.map(Rank::new).transpose()? };
    let mut results: Vec<(Suite, Vec<VerificationReport>)> = Vec::new();
    for s in suites {
        results.push((s, run_suite(s, config)?));
    }
    let count = |rs: &[VerificationReport], st: Status| rs.iter().filter(|r| r.status == st).count();
    let failed = results.iter().any(|(_, rs)| count(rs, Status::Fail) > 0);
    let text = match f {
        Format::Json => json_text(&Value::Array(
            results
                .iter()
                .map(|(s, rs)| {
                    json!({
                        "suite": s.name(),
                        "passed": count(rs, Status::Pass),
                        "failed": count(rs, Status::Fail),
                        "skipped": count(rs, Status::Skipped),
                        "reports": rs.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )),
        Format::Csv => csv_text(
            &["suite", "identity", "params", "status", "reason"],
            results.iter().flat_map(|(s, rs)| {
                rs.iter().map(move |r| {
                    vec![
                        s.name().to_string(),
                        r.identity.clone(),
                        r.params_string(),
                        r.status.to_string(),
                        r.reason.clone().unwrap_or_default(),
                    ]
                })
            }),
        )?,
        Format::Plain => {
            let mut s = String::new();
            let (mut p, mut fl, mut sk) = (0, 0, 0);
            for (suite, rs) in &results {
                for r in rs.iter().filter(|r| r.failed()) {
                    s += &format!("{r}\n");
                }
                let (a, b, c) = (count(rs, Status::Pass), count(rs, Status::Fail), count(rs, Status::Skipped));
                s += &format!("{:<16}{a} passed, {b} failed, {c} skipped\n", suite.name());
                (p, fl, sk) = (p + a, fl + b, sk + c);
            }
            s += &format!("{:<16}{p} passed, {fl} failed, {sk} skipped\n", "total");
            s
        }
    };
    Ok(Rendered { text, failed })
}
