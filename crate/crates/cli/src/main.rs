//! `numdup` command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when two routes
//! that must agree do not (a bug signal).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use numdup::classify::is_ci_semigroup;
use numdup::construct::{ag_family, ideal_from_overring, FamilyEntry};
use numdup::duplication::auto_translate;
use numdup::oracle::{self, direct_type, verify_duplication, AgreementReport, SweepParams};
use numdup::parse::format_int_list;
use numdup::{
    duplicate, enumerate_normalized_ideals, DuplicationReport, DuplicationSpec, Error,
    NumericalSemigroup, RelativeIdeal, TranslatePolicy,
};

#[derive(Parser)]
#[command(
    name = "numdup",
    version,
    about = "Numerical duplications and their almost Gorenstein classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Args)]
struct SgpArg {
    /// Semigroup generators, e.g. 4,5,11
    #[arg(long, value_name = "GENS", allow_hyphen_values = true)]
    sgp: String,
}

#[derive(Args)]
struct DupArgs {
    #[command(flatten)]
    sgp: SgpArg,
    /// Ideal generators over the semigroup, e.g. 5,8
    #[arg(long, value_name = "GENS", allow_hyphen_values = true)]
    ideal: String,
    /// Odd element of the semigroup (default: smallest odd element)
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    #[arg(long, default_value = "auto", value_parser = parse_policy)]
    translate: TranslatePolicy,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a numerical semigroup
    Info {
        #[command(flatten)]
        sgp: SgpArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the duplication 2S ∪ (2E + b)
    Dup(DupArgs),
    /// Classify the duplication by the theorem routes
    Classify {
        #[command(flatten)]
        dup: DupArgs,
        /// Also recompute everything on the duplication and compare
        #[arg(long)]
        cross_check: bool,
    },
    /// Classify the duplication of every normalized ideal of a semigroup
    Enumerate {
        #[command(flatten)]
        sgp: SgpArg,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Almost Gorenstein duplications from overrings between S and (M - M)
    Construct {
        #[command(flatten)]
        sgp: SgpArg,
        /// One overring, e.g. 4,5,7
        #[arg(
            long,
            value_name = "GENS",
            conflicts_with = "all",
            required_unless_present = "all"
        )]
        overring: Option<String>,
        /// Every overring
        #[arg(long)]
        all: bool,
        /// Shift applied to the dual of the overring (default: least integral shift)
        #[arg(long, requires = "overring", allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sweep the genus tree and compare theorem routes with direct computation
    Verify {
        #[arg(long)]
        genus_max: usize,
        #[arg(long, default_value_t = 2)]
        b_count: usize,
        /// Cap on ideals per semigroup
        #[arg(long)]
        ideal_limit: Option<usize>,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_policy(s: &str) -> Result<TranslatePolicy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a subcommand, mapped onto the exit-code contract.
enum Failure {
    Input(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalMismatch(msg) => Failure::Mismatch(msg),
            other => Failure::Input(other),
        }
    }
}

type CmdResult = Result<(), Failure>;

// Write errors (a closed pipe, typically) are not worth a panic.
macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn emit_json<T: Serialize>(value: &T) -> CmdResult {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Input(Error::Parse(e.to_string())))?;
    outln!("{text}");
    Ok(())
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn build_spec(args: &DupArgs) -> Result<DuplicationSpec, Error> {
    let s = NumericalSemigroup::parse(&args.sgp.sgp)?;
    let e = RelativeIdeal::parse(&s, &args.ideal)?;
    DuplicationSpec::new(&e, args.b, args.translate)
}

#[derive(Serialize)]
struct InfoJson {
    semigroup: NumericalSemigroup,
    gaps: Vec<i64>,
    frobenius: i64,
    genus: usize,
    multiplicity: i64,
    apery: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    cm_type: usize,
    symmetric: bool,
    almost_symmetric: bool,
    complete_intersection: bool,
}

fn cmd_info(sgp: &SgpArg, format: Format) -> CmdResult {
    let s = NumericalSemigroup::parse(&sgp.sgp)?;
    let mut apery = s.apery(s.multiplicity())?;
    apery.sort_unstable();
    let info = InfoJson {
        gaps: s.gaps().to_vec(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        multiplicity: s.multiplicity(),
        apery,
        pseudo_frobenius: s.pseudo_frobenius(),
        cm_type: s.cm_type(),
        symmetric: s.is_symmetric(),
        almost_symmetric: s.is_almost_symmetric(),
        complete_intersection: is_ci_semigroup(&s),
        semigroup: s,
    };
    match format {
        Format::Json => emit_json(&info),
        Format::Table => {
            outln!("semigroup\t{}", info.semigroup);
            outln!("gaps\t{}", format_int_list(&info.gaps));
            outln!("frobenius\t{}", info.frobenius);
            outln!("genus\t{}", info.genus);
            outln!("multiplicity\t{}", info.multiplicity);
            outln!("apery\t{}", format_int_list(&info.apery));
            outln!(
                "pseudo_frobenius\t{}",
                format_int_list(&info.pseudo_frobenius)
            );
            outln!("type\t{}", info.cm_type);
            outln!("symmetric\t{}", yes_no(info.symmetric));
            outln!("almost_symmetric\t{}", yes_no(info.almost_symmetric));
            outln!(
                "complete_intersection\t{}",
                yes_no(info.complete_intersection)
            );
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct DupJson {
    semigroup: NumericalSemigroup,
    ideal: RelativeIdeal,
    b: i64,
    translate: TranslatePolicy,
    shift: i64,
    duplication: NumericalSemigroup,
    frobenius: i64,
    genus: usize,
}

fn cmd_dup(args: &DupArgs) -> CmdResult {
    let spec = build_spec(args)?;
    let t = duplicate(&spec)?;
    let out = DupJson {
        semigroup: spec.base().clone(),
        ideal: spec.ideal().clone(),
        b: spec.b(),
        translate: spec.translate_policy(),
        shift: spec.shift(),
        frobenius: t.frobenius(),
        genus: t.genus(),
        duplication: t,
    };
    match args.format {
        Format::Json => emit_json(&out),
        Format::Table => {
            outln!("semigroup\t{}", out.semigroup);
            outln!("ideal\t{}", out.ideal);
            outln!("b\t{}", out.b);
            outln!("translate\t{} (shift {})", out.translate, out.shift);
            outln!("duplication\t{}", out.duplication);
            outln!("frobenius\t{}", out.frobenius);
            outln!("genus\t{}", out.genus);
            Ok(())
        }
    }
}

fn print_report_table(r: &DuplicationReport) {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |t| t.to_string());
    outln!("semigroup\t{}", r.semigroup);
    outln!("ideal\t{}", r.ideal);
    outln!("b\t{}", r.b);
    outln!("translate\t{} (shift {})", r.translate, r.shift);
    outln!("duplication\t{}", r.duplication);
    outln!("frobenius\t{}", r.frobenius);
    outln!("genus\t{}", r.genus);
    outln!("type\t{}", r.cm_type);
    outln!("gorenstein\t{}", yes_no(r.gorenstein));
    outln!("almost_gorenstein\t{}", yes_no(r.almost_gorenstein));
    outln!("complete_intersection\t{}", yes_no(r.complete_intersection));
    outln!(
        "type_routes\tformula={} ag={} direct={}",
        r.type_routes.formula,
        opt(r.type_routes.ag),
        r.type_routes.direct
    );
    outln!("z\t{}", r.z);
    outln!(
        "ring_witness\t{}",
        r.ring_witness
            .as_ref()
            .map_or("-".to_string(), |w| w.to_string())
    );
    outln!("bounds_ok\t{}", yes_no(r.bounds_ok));
}

#[derive(Serialize)]
struct ClassifyJson<'a> {
    #[serde(flatten)]
    report: &'a DuplicationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_check: Option<&'a AgreementReport>,
}

fn cmd_classify(args: &DupArgs, cross_check: bool) -> CmdResult {
    let spec = build_spec(args)?;
    let report = DuplicationReport::build(&spec)?;
    let agreement = if cross_check {
        Some(verify_duplication(&spec)?)
    } else {
        None
    };
    match args.format {
        Format::Json => emit_json(&ClassifyJson {
            report: &report,
            cross_check: agreement.as_ref(),
        })?,
        Format::Table => {
            print_report_table(&report);
            if let Some(a) = &agreement {
                outln!(
                    "cross_check\t{}",
                    if a.agrees() { "agree" } else { "MISMATCH" }
                );
            }
        }
    }
    match agreement {
        Some(a) if !a.agrees() => Err(Failure::Mismatch(
            serde_json::to_string(&a).unwrap_or_else(|_| "cross-check failed".into()),
        )),
        _ => Ok(()),
    }
}

fn cmd_enumerate(sgp: &SgpArg, b: Option<i64>, format: Format) -> CmdResult {
    let s = NumericalSemigroup::parse(&sgp.sgp)?;
    let mut rows = Vec::new();
    for normalized in enumerate_normalized_ideals(&s) {
        let e = auto_translate(&s, &normalized);
        let spec = DuplicationSpec::new(&e, b, TranslatePolicy::None)?;
        rows.push((normalized, DuplicationReport::build(&spec)?));
    }
    rows.sort_by_key(|(_, r)| r.cm_type);
    match format {
        Format::Json => emit_json(&rows.iter().map(|(_, r)| r).collect::<Vec<_>>()),
        Format::Table => {
            outln!("normalized\tideal\tb\ttype\tgorenstein\talmost_gorenstein\tcomplete_intersection\tduplication");
            for (n, r) in &rows {
                outln!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    n,
                    r.ideal,
                    r.b,
                    r.cm_type,
                    yes_no(r.gorenstein),
                    yes_no(r.almost_gorenstein),
                    yes_no(r.complete_intersection),
                    r.duplication
                );
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ConstructRow {
    overring: NumericalSemigroup,
    ideal: RelativeIdeal,
    expected_type: usize,
    verified_type: usize,
    almost_gorenstein: bool,
}

fn verify_entry(entry: FamilyEntry) -> Result<ConstructRow, Error> {
    let spec = DuplicationSpec::new(&entry.ideal, None, TranslatePolicy::None)?;
    let t = duplicate(&spec)?;
    Ok(ConstructRow {
        verified_type: direct_type(&t),
        almost_gorenstein: oracle::direct_almost_symmetric(&t),
        overring: entry.overring,
        ideal: entry.ideal,
        expected_type: entry.expected_type,
    })
}

fn cmd_construct(
    sgp: &SgpArg,
    overring: Option<&str>,
    r: Option<i64>,
    format: Format,
) -> CmdResult {
    let s = NumericalSemigroup::parse(&sgp.sgp)?;
    let entries = match overring {
        Some(text) => {
            let a = NumericalSemigroup::parse(text)?;
            let ideal = ideal_from_overring(&s, &a, r)?;
            let expected_type = 2 * (s.genus() - a.genus()) + 1;
            vec![FamilyEntry {
                overring: a,
                ideal,
                expected_type,
            }]
        }
        None => ag_family(&s),
    };
    let rows = entries
        .into_iter()
        .map(verify_entry)
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json => emit_json(&rows)?,
        Format::Table => {
            outln!("overring\tideal\texpected_type\tverified_type\talmost_gorenstein");
            for row in &rows {
                outln!(
                    "{}\t{}\t{}\t{}\t{}",
                    row.overring,
                    row.ideal,
                    row.expected_type,
                    row.verified_type,
                    yes_no(row.almost_gorenstein)
                );
            }
        }
    }
    if let Some(bad) = rows
        .iter()
        .find(|row| row.expected_type != row.verified_type || !row.almost_gorenstein)
    {
        return Err(Failure::Mismatch(format!(
            "overring {} predicted type {} but the duplication has type {}",
            bad.overring, bad.expected_type, bad.verified_type
        )));
    }
    Ok(())
}

fn cmd_verify(params: SweepParams, jobs: Option<usize>, format: Format) -> CmdResult {
    let summary = oracle::sweep(params, jobs)?;
    match format {
        Format::Json => emit_json(&summary)?,
        Format::Table => {
            outln!("genus_max\t{}", summary.genus_max);
            outln!("b_count\t{}", summary.b_count);
            outln!(
                "ideal_limit\t{}",
                summary.ideal_limit.map_or("-".into(), |v| v.to_string())
            );
            outln!("semigroups\t{}", summary.semigroups);
            outln!("ideals\t{}", summary.ideals);
            outln!("duplications\t{}", summary.duplications);
            outln!("checks\t{}", summary.checks);
            outln!("mismatches\t{}", summary.mismatches.len());
            let hist: Vec<String> = summary
                .type_histogram
                .iter()
                .map(|(t, n)| format!("{t}:{n}"))
                .collect();
            outln!("type_histogram\t{}", hist.join(" "));
            outln!("runtime_ms\t{}", summary.runtime_ms);
        }
    }
    if summary.mismatches.is_empty() {
        Ok(())
    } else {
        for m in &summary.mismatches {
            eprintln!("mismatch: {}", serde_json::to_string(m).unwrap_or_default());
        }
        Err(Failure::Mismatch(format!(
            "{} mismatching duplications",
            summary.mismatches.len()
        )))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Info { sgp, format } => cmd_info(&sgp, format),
        Command::Dup(args) => cmd_dup(&args),
        Command::Classify { dup, cross_check } => cmd_classify(&dup, cross_check),
        Command::Enumerate { sgp, b, format } => cmd_enumerate(&sgp, b, format),
        Command::Construct {
            sgp,
            overring,
            all: _,
            r,
            format,
        } => cmd_construct(&sgp, overring.as_deref(), r, format),
        Command::Verify {
            genus_max,
            b_count,
            ideal_limit,
            jobs,
            format,
        } => cmd_verify(
            SweepParams {
                genus_max,
                b_count,
                ideal_limit,
            },
            jobs,
            format,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(cli);
    let _ = std::io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            let debug = format!("{e:?}");
            let kind = debug.split(['(', ' ', '{']).next().unwrap_or("Error");
            eprintln!("error[{kind}]: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}
