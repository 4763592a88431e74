//! Command-line driver for the `xlaq` library.
//!
//! The binary exposes the full pipeline — field construction, XL code
//! building, verification sweeps, asymmetric-quantum-code derivation,
//! table generation, and bound certification — behind six subcommands:
//!
//! * `field-info` — print the GF(q²)/GF(q) presentation and the canonical
//!   evaluation points, with the trace/norm separation check included.
//! * `xl build` — build C_q(t, m, ℓ) or one of the named subcode families
//!   and print its generator matrix and parameters.
//! * `verify` — run exhaustive verification sweeps (dual distances,
//!   independence witnesses, nesting structure) over one or more fields.
//! * `table` — generate the full derived-code table for one or more
//!   fields, optionally comparing against a golden CSV snapshot.
//! * `aqc` — derive a single asymmetric quantum code from a named inner
//!   family inside C_q(t, m, ℓ), with witnesses and certification.
//! * `bound` — evaluate the dimension bounds for given (n, d_z, d_x).
//!
//! # Exit codes
//!
//! * `0` — success: no verification failure, no golden mismatch, and no
//!   bound violation occurred in the run.
//! * `1` — a verification case failed, a golden comparison mismatched, or
//!   a derived dimension exceeded its certified cap.
//! * `2` — usage or configuration error (unsupported q, malformed flag,
//!   parameters outside their admissible range, unreadable input file).
//!
//! Every error message names the failing precondition; no stack traces
//! are printed.
//!
//! # Determinism
//!
//! Identical invocations produce byte-identical CSV output regardless of
//! `--workers`: parallel table generation preserves row order.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use xlaq::codes::EnumBudget;
use xlaq::css::{self, AqcRecord, BoundStatus, BqTable, InnerFamily, TableOptions};
use xlaq::gf;
use xlaq::golden;
use xlaq::verify::{CaseStatus, Sweep, VerifyCase, VerifyReport};
use xlaq::xl::{self, XlSpec};

/// The supported field orders, ascending.
const ALL_Q: [u8; 6] = [3, 4, 5, 7, 8, 9];

#[derive(Parser)]
#[command(
    name = "xlaq",
    version,
    about = "XL evaluation codes over small fields and the asymmetric quantum codes they generate",
    max_term_width = 100
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalArgs {
    /// Field order(s): one of 3|4|5|7|8|9, a comma list, or `all`
    #[arg(long, global = true, default_value = "all", value_name = "Q")]
    q: String,

    /// Budget for the distance engines (enumeration and work-unit limit)
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,

    /// Worker threads for table generation (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Best-known-codes table file with `q n d k_lower k_upper` lines
    #[arg(long, global = true, value_name = "FILE")]
    bq_table: Option<PathBuf>,

    /// Output format for machine-readable results
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write primary output to this file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Golden CSV snapshot to compare a generated table against
    #[arg(long, global = true, value_name = "FILE")]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Pretty-printed JSON
    Json,
    /// Comma-separated values with a header row
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the field presentation and canonical evaluation points
    FieldInfo,

    /// Code-construction utilities
    Xl {
        #[command(subcommand)]
        cmd: XlCmd,
    },

    /// Run verification sweeps; exits 1 when any case fails
    Verify {
        /// Which sweep: lemma2|prop1|prop3|prop4|prop5|appendixA|appendixB|nesting|all
        #[arg(default_value = "all", value_name = "SELECTOR")]
        selector: String,
    },

    /// Generate the full derived-code table for each selected field
    Table {
        /// Also emit the F1/F2 extension rows
        #[arg(long)]
        include_f12: bool,

        /// Restrict inner families (comma list of rep|D|E|V32|F|F1|F2)
        #[arg(long, value_delimiter = ',', value_name = "FAMILY")]
        family: Vec<String>,

        /// Golden comparison: require exact distances, not just consistent bounds
        #[arg(long)]
        strict: bool,
    },

    /// Derive one asymmetric quantum code from an inner family
    Aqc {
        /// Number of subfield evaluation points, 0 ≤ t ≤ q
        #[arg(long)]
        t: u8,

        /// Basis column count of the outer code, 2 ≤ m ≤ q − 1
        #[arg(long)]
        m: usize,

        /// Partial-column height of the outer code, 0 ≤ ℓ ≤ m − 1
        #[arg(long)]
        ell: usize,

        /// Inner family: rep|D|E|V32|F|F1|F2
        #[arg(long, value_name = "FAMILY")]
        inner: String,
    },

    /// Evaluate the dimension bounds for given length and distances
    Bound {
        /// Block length
        #[arg(long)]
        n: usize,

        /// Z-distance
        #[arg(long)]
        dz: usize,

        /// X-distance
        #[arg(long)]
        dx: usize,

        /// Dimension to grade against the certified cap
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand)]
enum XlCmd {
    /// Build C_q(t, m, ℓ) or a named subcode family
    Build {
        /// Number of subfield evaluation points, 0 ≤ t ≤ q
        #[arg(long)]
        t: u8,

        /// Basis column count, 1 ≤ m ≤ q − 1
        #[arg(long, required_unless_present = "family", conflicts_with = "family")]
        m: Option<usize>,

        /// Partial-column height, 0 ≤ ℓ ≤ m − 1
        #[arg(long, required_unless_present = "family", conflicts_with = "family")]
        ell: Option<usize>,

        /// Named family instead of (m, ℓ): rep|D|E|V32|F|F1|F2
        #[arg(long, value_name = "FAMILY")]
        family: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Dispatch. `Ok(0)`/`Ok(1)` are the success/verification-failure exits;
/// any `Err` is a configuration error and exits 2.
fn run(cli: Cli) -> Result<u8> {
    if let Some(workers) = cli.global.workers {
        if workers == 0 {
            bail!("--workers must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("--workers could not be applied")?;
    }
    let budget = budget_of(&cli.global)?;
    let bq = load_bq(&cli.global)?;

    match cli.cmd {
        Cmd::FieldInfo => cmd_field_info(&cli.global),
        Cmd::Xl { cmd: XlCmd::Build { t, m, ell, family } } => {
            cmd_xl_build(&cli.global, t, m, ell, family.as_deref())
        }
        Cmd::Verify { selector } => cmd_verify(&cli.global, &selector, &budget),
        Cmd::Table { include_f12, family, strict } => {
            cmd_table(&cli.global, include_f12, &family, strict, budget, bq.as_ref())
        }
        Cmd::Aqc { t, m, ell, inner } => {
            cmd_aqc(&cli.global, t, m, ell, &inner, &budget, bq.as_ref())
        }
        Cmd::Bound { n, dz, dx, k } => cmd_bound(&cli.global, n, dz, dx, k, bq.as_ref()),
    }
}

// ---------------------------------------------------------------------------
// Flag helpers
// ---------------------------------------------------------------------------

/// Parse `--q` into a list of distinct supported orders.
fn parse_q_list(s: &str) -> Result<Vec<u8>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(ALL_Q.to_vec());
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let q: u8 = part
            .parse()
            .with_context(|| format!("--q expects an integer or `all`; got `{part}`"))?;
        if !ALL_Q.contains(&q) {
            bail!("unsupported field order q = {q}; supported orders are 3, 4, 5, 7, 8, 9");
        }
        if !out.contains(&q) {
            out.push(q);
        }
    }
    if out.is_empty() {
        bail!("--q expects at least one field order");
    }
    Ok(out)
}

/// `--q` for commands that operate on exactly one field.
fn single_q(g: &GlobalArgs) -> Result<u8> {
    if g.q.eq_ignore_ascii_case("all") || g.q.contains(',') {
        bail!("this command needs exactly one field order; pass --q 3|4|5|7|8|9");
    }
    Ok(parse_q_list(&g.q)?[0])
}

/// Map `--budget` onto the engine budget.
fn budget_of(g: &GlobalArgs) -> Result<EnumBudget> {
    match g.budget {
        None => Ok(EnumBudget::default()),
        Some(0) => bail!("--budget must be at least 1"),
        Some(b) => Ok(EnumBudget {
            enum_limit: b,
            work_limit: b,
            ..EnumBudget::default()
        }),
    }
}

/// Load `--bq-table` when given, surfacing its parse warnings on stderr.
fn load_bq(g: &GlobalArgs) -> Result<Option<BqTable>> {
    let Some(path) = &g.bq_table else {
        return Ok(None);
    };
    let table = BqTable::from_path(path)
        .with_context(|| format!("cannot load bounds table {}", path.display()))?;
    for w in &table.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(Some(table))
}

/// Parse a family token, naming the admissible labels on failure.
fn parse_family(token: &str) -> Result<InnerFamily> {
    InnerFamily::from_str(token)
        .with_context(|| format!("unknown inner family `{token}`; expected rep|D|E|V32|F|F1|F2"))
}

/// Write the primary output, to `--out` or stdout, always newline-terminated.
fn emit(g: &GlobalArgs, mut text: String) -> Result<()> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &g.out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Quote a CSV field when it needs quoting.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn status_str(s: CaseStatus) -> &'static str {
    match s {
        CaseStatus::Pass => "PASS",
        CaseStatus::Finding => "FINDING",
        CaseStatus::Fail => "FAIL",
    }
}

/// `d` or `≥d` depending on exactness.
fn distance_str(value: usize, exact: bool) -> String {
    if exact {
        value.to_string()
    } else {
        format!(">={value}")
    }
}

/// The `[[n, k, {d_z, d_x}]]_q` display form of a record.
fn record_display(r: &AqcRecord) -> String {
    format!(
        "[[{}, {}, {{{}, {}}}]]_{}",
        r.n,
        r.k,
        distance_str(r.d_z, r.exact_z),
        distance_str(r.d_x, r.exact_x),
        r.q
    )
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_field_info(g: &GlobalArgs) -> Result<u8> {
    if g.format == Format::Csv {
        bail!("field-info has no CSV form; use --format json");
    }
    let q = single_q(g)?;
    let ctx = gf::ctx(q)?;
    let pts = ctx.points();
    let lemma = gf::verify_trace_norm_lemma(ctx);
    let report = json!({
        "q": ctx.q,
        "p": ctx.p,
        "q2": ctx.q2,
        "defining_poly": ctx.defining_poly,
        "defining_poly_display": poly_display(&ctx.defining_poly),
        "subfield_points": pts
            .alphas
            .iter()
            .map(|&a| json!({ "element": a.to_string(), "symbol": ctx.symbol(a) }))
            .collect::<Vec<_>>(),
        "pair_representatives": pts
            .betas
            .iter()
            .map(|&b| json!({
                "element": b.to_string(),
                "trace": ctx.symbol(ctx.trace(b)),
                "norm": ctx.symbol(ctx.norm(b)),
            }))
            .collect::<Vec<_>>(),
        "r": pts.r,
        "n_max": pts.alphas.len() + pts.r,
        "separation_check": lemma,
    });
    emit(g, serde_json::to_string_pretty(&report)?)?;
    Ok(0)
}

/// Render an ascending coefficient vector as a polynomial in x.
fn poly_display(coeffs: &[u8]) -> String {
    let mut parts = Vec::new();
    for (pow, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        parts.push(match (pow, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (p, 1) => format!("x^{p}"),
            (p, c) => format!("{c}x^{p}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn cmd_xl_build(
    g: &GlobalArgs,
    t: u8,
    m: Option<usize>,
    ell: Option<usize>,
    family: Option<&str>,
) -> Result<u8> {
    if g.format == Format::Csv {
        bail!("xl build has no CSV form; use --format json");
    }
    let q = single_q(g)?;
    let report = match family {
        Some(token) => {
            let family = parse_family(token)?;
            let code = family.build(q, t)?;
            json!({
                "q": q,
                "t": t,
                "family": family.label(),
                "n": code.n,
                "k": code.k,
                "generator": generator_rows(&code),
            })
        }
        None => {
            // clap guarantees both are present without --family.
            let (m, ell) = (m.expect("required by clap"), ell.expect("required by clap"));
            let spec = XlSpec { q, t, m, ell }.validated()?;
            let params = spec.params()?;
            let code = xl::build_xl(&spec)?;
            json!({
                "q": q,
                "t": t,
                "m": m,
                "ell": ell,
                "n": params.n,
                "k": params.k,
                "delta": params.delta,
                "g": params.g,
                "generator": generator_rows(&code),
            })
        }
    };
    emit(g, serde_json::to_string_pretty(&report)?)?;
    Ok(0)
}

fn generator_rows(code: &xlaq::LinearCode) -> Vec<Vec<u8>> {
    (0..code.k).map(|r| code.gen.row(r).to_vec()).collect()
}

fn cmd_verify(g: &GlobalArgs, selector: &str, budget: &EnumBudget) -> Result<u8> {
    let qs = parse_q_list(&g.q)?;
    let sweeps = sweeps_for(selector)?;

    let mut names = Vec::new();
    let mut reports = Vec::new();
    for &sweep in &sweeps {
        names.push(sweep.name());
        reports.push(xlaq::verify::run_sweep(sweep, &qs, budget)?);
    }

    let combined = VerifyReport {
        cases: reports.iter().flat_map(|r| r.cases.clone()).collect(),
    };
    let (pass, finding, fail) = combined.counts();

    let text = match g.format {
        Format::Json => {
            let sweeps_json: Vec<_> = names
                .iter()
                .zip(&reports)
                .map(|(name, rep)| json!({ "sweep": name, "cases": rep.cases }))
                .collect();
            serde_json::to_string_pretty(&json!({
                "sweeps": sweeps_json,
                "summary": { "pass": pass, "finding": finding, "fail": fail },
            }))?
        }
        Format::Csv => {
            let mut out = String::from("sweep,case,status,detail\n");
            for (name, rep) in names.iter().zip(&reports) {
                for case in &rep.cases {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        name,
                        csv_field(&case.name),
                        status_str(case.status),
                        csv_field(&case.detail)
                    );
                }
            }
            out
        }
    };
    emit(g, text)?;

    for case in findings_and_failures(&combined.cases) {
        eprintln!("{}: {} — {}", status_str(case.status), case.name, case.detail);
    }
    eprintln!("verify: {pass} pass, {finding} finding(s), {fail} failure(s)");
    Ok(u8::from(fail > 0))
}

fn findings_and_failures(cases: &[VerifyCase]) -> impl Iterator<Item = &VerifyCase> {
    cases.iter().filter(|c| c.status != CaseStatus::Pass)
}

/// Map a verify selector token onto the sweeps it runs.
fn sweeps_for(selector: &str) -> Result<Vec<Sweep>> {
    Ok(match selector {
        "lemma2" => vec![Sweep::Separation],
        "prop1" => vec![Sweep::RepetitionDual],
        "prop3" => vec![Sweep::DDual],
        "prop4" => vec![Sweep::EDual],
        "prop5" => vec![Sweep::FDual],
        "appendixA" => vec![Sweep::ETriples],
        "appendixB" => vec![Sweep::FQuadruples],
        "nesting" => vec![Sweep::Nesting],
        "all" => Sweep::ALL.to_vec(),
        other => bail!(
            "unknown verify selector `{other}`; expected \
             lemma2|prop1|prop3|prop4|prop5|appendixA|appendixB|nesting|all"
        ),
    })
}

fn cmd_table(
    g: &GlobalArgs,
    include_f12: bool,
    family_tokens: &[String],
    strict: bool,
    budget: EnumBudget,
    bq: Option<&BqTable>,
) -> Result<u8> {
    let qs = parse_q_list(&g.q)?;
    let families = if family_tokens.is_empty() {
        None
    } else {
        Some(family_tokens.iter().map(|t| parse_family(t)).collect::<Result<Vec<_>>>()?)
    };
    let opts = TableOptions { budget, include_f12, families };

    let mut records = Vec::new();
    for &q in &qs {
        records.extend(css::generate_table(q, &opts, bq)?);
    }

    let text = match g.format {
        Format::Csv => golden::records_to_csv(&records),
        Format::Json => serde_json::to_string_pretty(&records)?,
    };
    emit(g, text)?;

    let mut exit = 0u8;
    if let Some(path) = &g.golden {
        let rows = golden::read_golden(path)
            .with_context(|| format!("cannot load golden snapshot {}", path.display()))?;
        let mismatches = golden::compare(&records, &rows, strict);
        if mismatches.is_empty() {
            eprintln!("golden comparison passed: {} reference row(s) matched", rows.len());
        } else {
            for mm in &mismatches {
                eprintln!("mismatch: {mm}");
            }
            eprintln!(
                "golden comparison failed: {} mismatch(es) against {}",
                mismatches.len(),
                path.display()
            );
            exit = 1;
        }
    }
    let violations = records
        .iter()
        .filter(|r| r.bound_status == BoundStatus::Violation)
        .count();
    if violations > 0 {
        eprintln!("{violations} record(s) violate a dimension bound");
        exit = 1;
    }
    Ok(exit)
}

fn cmd_aqc(
    g: &GlobalArgs,
    t: u8,
    m: usize,
    ell: usize,
    inner: &str,
    budget: &EnumBudget,
    bq: Option<&BqTable>,
) -> Result<u8> {
    let q = single_q(g)?;
    let family = parse_family(inner)?;
    let spec = XlSpec { q, t, m, ell };
    let (record, aqc) = css::derive_record(&spec, family, budget, bq)?;

    let theorem = match family.theorem() {
        None => serde_json::Value::Null,
        Some(th) => match css::theorem_k(th, &spec) {
            Ok(k) => json!({
                "certifies": th.label(),
                "k": k,
                "matches_derivation": k == record.k,
            }),
            Err(e) => json!({
                "certifies": th.label(),
                "outside_hypotheses": e.to_string(),
            }),
        },
    };

    let text = match g.format {
        Format::Csv => golden::records_to_csv(std::slice::from_ref(&record)),
        Format::Json => serde_json::to_string_pretty(&json!({
            "display": record_display(&record),
            "record": record,
            "designed_distance": record.delta,
            "distances": {
                "d1": aqc.d1,
                "d2": aqc.d2,
                "dz": aqc.dz,
                "dx": aqc.dx,
            },
            "purity": aqc.pure,
            "theorem": theorem,
            "bound_status": record.bound_status.label(),
        }))?,
    };
    emit(g, text)?;
    Ok(u8::from(record.bound_status == BoundStatus::Violation))
}

fn cmd_bound(
    g: &GlobalArgs,
    n: usize,
    dz: usize,
    dx: usize,
    k: Option<usize>,
    bq: Option<&BqTable>,
) -> Result<u8> {
    if g.format == Format::Csv {
        bail!("bound has no CSV form; use --format json");
    }
    let q = single_q(g)?;
    if n == 0 {
        bail!("bound needs a block length n >= 1");
    }
    for (name, d) in [("--dz", dz), ("--dx", dx)] {
        if d == 0 || d > n {
            bail!("bound needs 1 <= {name} <= n (got {d} with n = {n})");
        }
    }

    let mz = css::max_dim(q, n, dz, bq);
    let mx = css::max_dim(q, n, dx, bq);
    let cap = mz as i64 + mx as i64 - n as i64;
    let status = k.map(|k| css::certify_exact(q, n, k, dz, dx, bq));

    let report = json!({
        "q": q,
        "n": n,
        "d_z": dz,
        "d_x": dx,
        "singleton_k": css::singleton_bound_k(n, dx, dz),
        "griesmer": {
            "d_z_side_k": css::griesmer_upper_k(q, n, dz),
            "d_x_side_k": css::griesmer_upper_k(q, n, dx),
        },
        "max_dim": { "d_z_side": mz, "d_x_side": mx },
        "k_cap": cap,
        "k": k,
        "status": status.map(|s| s.label()),
    });
    emit(g, serde_json::to_string_pretty(&report)?)?;
    Ok(u8::from(status == Some(BoundStatus::Violation)))
}
