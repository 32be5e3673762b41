//! Command-line driver for the `arrowgt` library.
//!
//! Two subcommands:
//!
//! - `arrowgt enumerate` streams, for every weakly increasing bottom row
//!   with entries in `0..=m`, the generating-function specialization
//!   selected by `--spec`/`--xs`, then cross-checks the grand total
//!   against the transfer-chain evaluation.
//! - `arrowgt verify <check>` replays one verification suite and emits
//!   one report row per checked identity instance.
//!
//! Reports carry a `{header, rows, summary}` shape in JSON, mirror the
//! rows in CSV, and align them in plain text. Exit codes: 0 when every
//! row passes, 1 when any row fails, 2 on usage errors. A report is
//! deterministic for a fixed `--seed`; sampled points that hit a pole of
//! the identity under test are skipped, logged to stderr, and redrawn.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::json;

use arrowgt::exactnum::{binom, parse_rational, pow_i, rat, Rational};
use arrowgt::hypersum::{
    aux_inner_t_sum, aux_sum_check, chu_vandermonde, cr_vanishing_check, g4, hyp_transform_check,
    rec3_check, rec4_check, rec_ii_simp_check, rec_ij_simp_check, sum1_check, triple_rhs,
    triple_sum, w0_rhs, TransformCase,
};
use arrowgt::lu::{
    a_matrix, b_matrix, theorem1_formula, theorem3_formula, verify_lu_w0, verify_lu_w1,
};
use arrowgt::patterns::{gf_bottom_row, signed_total, GfValue, WeightSpec};
use arrowgt::report::Report;
use arrowgt::sample::Sampler;
use arrowgt::signless::{count_prop1, count_prop2};
use arrowgt::symfunc::{gf_asym_form, gf_bialternant, gf_odd_form, operator_gf};
use arrowgt::Result as LibResult;

/// Exact enumeration and verification of arrowed Gelfand-Tsetlin patterns.
#[derive(Parser)]
#[command(name = "arrowgt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream generating-function values for every weakly increasing
    /// bottom row with entries in 0..=m, plus a cross-checked total.
    Enumerate(EnumerateArgs),
    /// Re-run one verification suite and report a row per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of entries in the bottom row.
    #[arg(long)]
    n: usize,
    /// Largest value allowed in the bottom row.
    #[arg(long)]
    m: i64,
    /// Decoration weights t,u,v,w as comma-separated rationals.
    #[arg(long, default_value = "1,1,1,1")]
    spec: String,
    /// Row variables X_1,...,X_n as comma-separated rationals (default: all 1).
    #[arg(long)]
    xs: Option<String>,
    /// Seed recorded in the report header (enumeration is deterministic).
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Override the size guard (n <= 5, m <= 8) after printing a cost estimate.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum)]
    check: Check,
    /// Largest n in grid sweeps (suite-specific default).
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest m (or largest bottom-row entry) in grid sweeps.
    #[arg(long)]
    m_max: Option<i64>,
    /// Comma-separated rational l values for the LU sweeps
    /// (default: 0,1,2,3,4 plus five seeded random rationals).
    #[arg(long)]
    l: Option<String>,
    /// Number of sampled parameter points per identity family.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Seed for the single report-wide generator.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Override built-in size guards after printing a cost estimate.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Theorem1,
    Theorem3,
    Sequence,
    LuW1,
    LuW0,
    GfChain,
    Operator,
    Props,
    Triple,
    W0sum,
    Sum1,
    Rec3,
    Recsimp,
    Aux,
    Chu,
    Transforms,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => run_verify(args),
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------

/// Converts a library error into a top-level CLI error.
fn lib<T>(r: LibResult<T>) -> CliResult<T> {
    r.map_err(|e| e.to_string())
}

/// Extracts the rational from a numeric generating-function value.
fn numeric(v: GfValue) -> CliResult<Rational> {
    v.into_rational()
        .ok_or_else(|| "numeric weight spec produced a symbolic value".into())
}

fn parse_rational_list(s: &str, what: &str) -> CliResult<Vec<Rational>> {
    s.split(',')
        .map(|tok| parse_rational(tok.trim()).map_err(|e| format!("bad {what} entry {tok:?}: {e}")))
        .collect()
}

/// Enforces a size guard: pass `--force` to run anyway (the estimated
/// cost is printed either way).
fn guard(force: bool, within: bool, estimate: impl Display) -> CliResult<()> {
    if within {
        return Ok(());
    }
    if force {
        eprintln!("guard overridden: {estimate}");
        return Ok(());
    }
    Err(format!(
        "request exceeds the built-in size guard ({estimate}); pass --force to run anyway"
    ))
}

/// Records a comparison whose computed side may have failed.
fn check_value(
    report: &mut Report,
    tag: &str,
    params: serde_json::Value,
    expected: &Rational,
    got: LibResult<Rational>,
) {
    match got {
        Ok(v) => {
            report.check(tag, params, expected, &v);
        }
        Err(e) => report.check_str(
            tag,
            params,
            expected.to_string(),
            format!("error: {e}"),
            false,
        ),
    }
}

/// Records a two-sided identity check (`Ok(true)` means both sides agree).
fn check_identity(report: &mut Report, tag: &str, params: serde_json::Value, got: LibResult<bool>) {
    match got {
        Ok(ok) => report.check_str(
            tag,
            params,
            "both sides equal",
            if ok { "equal" } else { "unequal" },
            ok,
        ),
        Err(e) => report.check_str(
            tag,
            params,
            "both sides equal",
            format!("error: {e}"),
            false,
        ),
    }
}

fn to_csv(report: &Report) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["tag", "params", "expected", "got", "pass"])
        .map_err(|e| e.to_string())?;
    for row in &report.rows {
        w.write_record([
            row.tag.as_str(),
            &row.params.to_string(),
            &row.expected,
            &row.got,
            if row.pass { "true" } else { "false" },
        ])
        .map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn emit(report: &Report, out: &OutputArgs) -> CliResult<()> {
    let mut body = match out.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => to_csv(report)?,
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &out.output {
        Some(path) => std::fs::write(path, body.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------

fn run_enumerate(args: EnumerateArgs) -> CliResult<bool> {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    if args.m < 0 {
        return Err("--m must be nonnegative".into());
    }
    if args.m + 1 < args.n as i64 {
        return Err(format!(
            "no strictly increasing bottom row of length {} fits in 0..={}",
            args.n, args.m
        ));
    }
    let n_bottoms = binom(args.m + 1, args.n as i64);
    guard(
        args.force,
        args.n <= 5 && args.m <= 8,
        format!(
            "n = {}, m = {} enumerates {} bottom row{} (guard: n <= 5, m <= 8)",
            args.n,
            args.m,
            n_bottoms,
            if n_bottoms == rat(1) { "" } else { "s" }
        ),
    )?;

    let spec_vals = parse_rational_list(&args.spec, "--spec")?;
    let [t, u, v, w]: [Rational; 4] = spec_vals
        .try_into()
        .map_err(|v: Vec<_>| format!("--spec needs exactly 4 values t,u,v,w (got {})", v.len()))?;
    let xs = match &args.xs {
        Some(s) => {
            let xs = parse_rational_list(s, "--xs")?;
            if xs.len() != args.n {
                return Err(format!(
                    "--xs needs exactly n = {} values (got {})",
                    args.n,
                    xs.len()
                ));
            }
            xs
        }
        None => vec![rat(1); args.n],
    };
    // At the two product-formula specializations the total has an
    // independent closed form worth checking against.
    let ones = [&t, &u, &v].into_iter().all(|r| *r == rat(1)) && xs.iter().all(|x| *x == rat(1));
    let closed_total = if ones && w == rat(-1) {
        theorem1_formula(args.n, &rat(args.m)).ok()
    } else if ones && w == rat(0) {
        Some(theorem3_formula(args.n, &rat(args.m)))
    } else {
        None
    };
    let spec = lib(WeightSpec::numeric(t, u, v, w, xs))?;

    let mut report = Report::new(
        format!("enumerate --n {} --m {}", args.n, args.m),
        args.seed,
    );
    let mut total = rat(0);
    for bottom in (0..=args.m).combinations(args.n) {
        let value = numeric(lib(gf_bottom_row(&bottom, &spec))?)?;
        total += &value;
        report.check_str(
            "row",
            json!({ "bottom": bottom }),
            "-",
            value.to_string(),
            true,
        );
    }
    let params = json!({ "n": args.n, "m": args.m });
    match closed_total {
        Some(expected) => {
            report.check("total", params, &expected, &total);
        }
        None => report.check_str("total", params, "-", total.to_string(), true),
    }
    emit(&report, &args.out)?;
    Ok(report.all_pass())
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

fn run_verify(args: VerifyArgs) -> CliResult<bool> {
    let name = args
        .check
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let mut report = Report::new(format!("verify {name}"), args.seed);
    let mut sampler = Sampler::new(args.seed);
    let samples = args.samples as usize;

    match args.check {
        Check::Theorem1 => sweep_product_formula(&mut report, &args, true)?,
        Check::Theorem3 => sweep_product_formula(&mut report, &args, false)?,
        Check::Sequence => sweep_sequence(&mut report, &args)?,
        Check::LuW1 => sweep_lu(&mut report, &mut sampler, &args, true)?,
        Check::LuW0 => sweep_lu(&mut report, &mut sampler, &args, false)?,
        Check::GfChain => sweep_gf_chain(&mut report, &mut sampler, &args)?,
        Check::Operator => sweep_operator(&mut report, &mut sampler, &args)?,
        Check::Props => sweep_props(&mut report, &args)?,
        Check::Triple => sweep_triple(&mut report, &mut sampler, samples),
        Check::W0sum => sweep_w0sum(&mut report, &mut sampler, samples)?,
        Check::Sum1 => sweep_sum1(&mut report, &mut sampler, samples),
        Check::Rec3 => sweep_rec3(&mut report, &mut sampler, samples),
        Check::Recsimp => sweep_recsimp(&mut report, &mut sampler, samples)?,
        Check::Aux => sweep_aux(&mut report, &mut sampler, samples),
        Check::Chu => sweep_chu(&mut report, &mut sampler, samples)?,
        Check::Transforms => sweep_transforms(&mut report, &mut sampler, samples)?,
    }

    for note in sampler.skipped() {
        eprintln!("skipped: {note}");
    }
    emit(&report, &args.out)?;
    Ok(report.all_pass())
}

/// Product formula (`w = -1` when `signed` else `w = 0`) against the
/// transfer-chain total over all bottom rows, plus, at odd `m`, the
/// matching scaled determinant.
fn sweep_product_formula(report: &mut Report, args: &VerifyArgs, signed: bool) -> CliResult<()> {
    let n_max = args.n_max.unwrap_or(4);
    let m_max = args.m_max.unwrap_or(6);
    let rows: i64 = (1..=n_max as i64).map(|n| (m_max - n + 2).max(0)).sum();
    guard(
        args.force,
        n_max <= 6 && m_max <= 10,
        format!("{rows} grid points, each a full transfer-chain sweep (guard: n <= 6, m <= 10)"),
    )?;
    let (tag, det_tag, w) = if signed {
        ("thm:1", "eq:det-a", rat(-1))
    } else {
        ("thm:3", "eq:det-b", rat(0))
    };
    for n in 1..=n_max {
        for m in (n as i64 - 1)..=m_max {
            let expected = if signed {
                match theorem1_formula(n, &rat(m)) {
                    Ok(v) => v,
                    Err(e) => {
                        report.check_str(
                            tag,
                            json!({ "n": n, "m": m }),
                            "finite value",
                            format!("error: {e}"),
                            false,
                        );
                        continue;
                    }
                }
            } else {
                theorem3_formula(n, &rat(m))
            };
            let brute = lib(signed_total(n, m, &WeightSpec::ones(n, w.clone())))
                .and_then(numeric)
                .map_err(|e| format!("chain total at n = {n}, m = {m}: {e}"))?;
            report.check(tag, json!({ "n": n, "m": m }), &expected, &brute);

            if m >= 1 && m % 2 == 1 {
                let l = rat((m - 1) / 2);
                let det = if signed {
                    a_matrix(n, &l)
                        .det_exact()
                        .map(|d| d * pow_i(&rat(2), 2 * n as i64).expect("positive base"))
                } else {
                    b_matrix(n, &l)
                        .det_exact()
                        .map(|d| d * pow_i(&rat(6), n as i64).expect("positive base"))
                };
                check_value(
                    report,
                    det_tag,
                    json!({ "n": n, "l": (m - 1) / 2 }),
                    &expected,
                    det,
                );
            }
        }
    }
    Ok(())
}

/// The `m = n - 1` specialization of the signed product formula against
/// its reference values (and, past the table, the transfer chain).
fn sweep_sequence(report: &mut Report, args: &VerifyArgs) -> CliResult<()> {
    const REFERENCE: [i64; 5] = [1, 4, 60, 3328, 678912];
    let n_max = args.n_max.unwrap_or(5);
    guard(
        args.force,
        n_max <= 7,
        format!("n up to {n_max}; past n = 5 each term is a transfer-chain sweep (guard: n <= 7)"),
    )?;
    for n in 1..=n_max {
        let got = theorem1_formula(n, &rat(n as i64 - 1));
        let (expected, source) = if n <= REFERENCE.len() {
            let two_n = pow_i(&rat(2), n as i64).expect("positive base");
            (two_n * rat(REFERENCE[n - 1]), "reference table")
        } else {
            let chain = lib(signed_total(n, n as i64 - 1, &WeightSpec::ones(n, rat(-1))))
                .and_then(numeric)?;
            (chain, "transfer chain")
        };
        check_value(
            report,
            "eq:difran",
            json!({ "n": n, "reference": source }),
            &expected,
            got,
        );
    }
    Ok(())
}

/// Unit-lower-triangularity of one explicit matrix product per `(n, l)`.
fn sweep_lu(
    report: &mut Report,
    sampler: &mut Sampler,
    args: &VerifyArgs,
    w1: bool,
) -> CliResult<()> {
    let n_max = args.n_max.unwrap_or(8);
    guard(
        args.force,
        n_max <= 10,
        format!("{n_max}x{n_max} exact matrix products (guard: n <= 10)"),
    )?;
    let ls: Vec<Rational> = match &args.l {
        Some(s) => parse_rational_list(s, "--l")?,
        None => {
            let mut ls: Vec<Rational> = (0..=4).map(rat).collect();
            ls.extend((0..5).map(|_| sampler.rational(5)));
            ls
        }
    };
    let tag = if w1 { "lem:w1-lu" } else { "lem:w0-lu" };
    for n in 1..=n_max {
        for l in &ls {
            let rep = if w1 {
                verify_lu_w1(n, l)
            } else {
                verify_lu_w0(n, l)
            };
            for skip in &rep.skipped {
                sampler.log_skip(format!(
                    "{tag} n = {n}, l = {l}, cell ({}, {}): {}",
                    skip.i, skip.j, skip.reason
                ));
            }
            report.check_str(
                tag,
                json!({ "n": n, "l": l.to_string() }),
                "unit lower triangular product",
                rep.summary_line(),
                rep.pass,
            );
        }
    }
    Ok(())
}

/// The antisymmetrized, bialternant, and odd-m determinant forms of the
/// generating function against the transfer-chain total, at random
/// generic points.
fn sweep_gf_chain(report: &mut Report, sampler: &mut Sampler, args: &VerifyArgs) -> CliResult<()> {
    let n_max = args.n_max.unwrap_or(3);
    let m_max = args.m_max.unwrap_or(4);
    guard(
        args.force,
        n_max <= 4 && m_max <= 6,
        format!("antisymmetrization over S_{n_max} at m up to {m_max} (guard: n <= 4, m <= 6)"),
    )?;
    for _ in 0..args.samples {
        let n = sampler.int(1, n_max as i64) as usize;
        let m = sampler.int(n as i64 - 1, m_max.max(n as i64 - 1));
        let (xs, w, oracle, asym) = lib(sampler.with_retries("gf-chain", 60, |s| {
            let xs = s.generic_xs(n);
            let w = s.rational(4);
            let spec = WeightSpec::numeric(rat(1), rat(1), rat(1), w.clone(), xs.xs().to_vec())?;
            let oracle = signed_total(n, m, &spec)?
                .into_rational()
                .expect("numeric spec");
            let asym = gf_asym_form(n, m, &xs, &w)?;
            Ok((xs, w, oracle, asym))
        }))?;
        let point = json!({
            "n": n,
            "m": m,
            "xs": xs.xs().iter().map(Rational::to_string).collect::<Vec<_>>(),
            "w": w.to_string(),
        });
        report.check("eq:asym", point.clone(), &oracle, &asym);
        check_value(
            report,
            "eq:bialt",
            point.clone(),
            &oracle,
            gf_bialternant(n, m, &xs, &w),
        );
        if m % 2 == 1 {
            check_value(
                report,
                "eq:odd",
                point,
                &oracle,
                gf_odd_form(n, (m - 1) / 2, &xs, &w),
            );
        }
    }
    Ok(())
}

/// The shift-operator form of the generating function against the
/// direct per-bottom-row evaluation, at random numeric weights.
fn sweep_operator(report: &mut Report, sampler: &mut Sampler, args: &VerifyArgs) -> CliResult<()> {
    let n_max = args.n_max.unwrap_or(3).min(4);
    let entry_max = args.m_max.unwrap_or(3);
    guard(
        args.force,
        entry_max <= 6,
        format!("operator expansion with entries up to {entry_max} (guard: entries <= 6)"),
    )?;
    for round in 0..args.samples {
        let n = sampler.int(1, n_max as i64) as usize;
        let mut ks: Vec<i64> = (0..n).map(|_| sampler.int(0, entry_max)).collect();
        ks.sort_unstable();
        let at_ones = round % 2 == 0;
        let (weights, xs_desc, want, got) = lib(sampler.with_retries("operator", 60, |s| {
            let [t, u, v, w] = s.weight_values();
            let xs = if at_ones {
                vec![rat(1); n]
            } else {
                s.generic_xs(n).xs().to_vec()
            };
            let xs_desc: Vec<String> = xs.iter().map(Rational::to_string).collect();
            let weights: Vec<String> = [&t, &u, &v, &w].iter().map(|r| r.to_string()).collect();
            let spec = WeightSpec::numeric(t, u, v, w, xs)?;
            let got = operator_gf(&ks, &spec)?;
            let want = gf_bottom_row(&ks, &spec)?
                .into_rational()
                .expect("numeric spec");
            Ok((weights, xs_desc, want, got))
        }))?;
        report.check(
            "eq:poly",
            json!({ "ks": ks, "tuvw": weights, "xs": xs_desc }),
            &want,
            &got,
        );
    }
    Ok(())
}

/// Both signless counting formulas against the matching signed totals,
/// over every weakly increasing bottom row in range.
fn sweep_props(report: &mut Report, args: &VerifyArgs) -> CliResult<()> {
    let n_max = args.n_max.unwrap_or(4);
    let entry_max = args.m_max.unwrap_or(4);
    guard(
        args.force,
        n_max <= 4 && entry_max <= 5,
        format!(
            "{} bottom rows, each a full pattern enumeration (guard: n <= 4, entries <= 5)",
            (1..=n_max as i64)
                .map(|n| binom(entry_max + n, n))
                .fold(rat(0), |a, b| a + b)
        ),
    )?;
    for n in 1..=n_max {
        for bottom in (0..=entry_max).combinations_with_replacement(n) {
            let want1 =
                lib(gf_bottom_row(&bottom, &WeightSpec::ones(n, rat(-1)))).and_then(numeric)?;
            check_value(
                report,
                "prop:1",
                json!({ "bottom": bottom }),
                &want1,
                count_prop1(&bottom),
            );
            let want2 =
                lib(gf_bottom_row(&bottom, &WeightSpec::ones(n, rat(0)))).and_then(numeric)?;
            check_value(
                report,
                "prop:2",
                json!({ "bottom": bottom }),
                &want2,
                count_prop2(&bottom),
            );
        }
    }
    Ok(())
}

/// The triple sum against its two-case closed form on `1 <= i <= j <= 5`.
fn sweep_triple(report: &mut Report, sampler: &mut Sampler, samples: usize) {
    for _ in 0..samples {
        let n = sampler.rational(7);
        let r = sampler.rational(7);
        for i in 1..=5 {
            for j in i..=5 {
                let params = json!({
                    "n": n.to_string(), "r": r.to_string(), "i": i, "j": j,
                });
                match triple_rhs(&r, i, j) {
                    Ok(expected) => {
                        check_value(
                            report,
                            "eq:triple",
                            params,
                            &expected,
                            triple_sum(&n, &r, i, j),
                        );
                    }
                    Err(e) => report.check_str(
                        "eq:triple",
                        params,
                        "closed form",
                        format!("error: {e}"),
                        false,
                    ),
                }
            }
        }
    }
}

/// The `w = 0` triple sum against its closed form, its base value, and
/// the n-independence of its diagonal.
fn sweep_w0sum(report: &mut Report, sampler: &mut Sampler, samples: usize) -> CliResult<()> {
    for _ in 0..samples {
        for i in 1..=5 {
            for j in i..=5 {
                let (n, got) = lib(sampler.with_retries("w0sum", 60, |s| {
                    let n = s.rational(7);
                    let v = g4(&n, i, j)?;
                    Ok((n, v))
                }))?;
                let expected = lib(w0_rhs(i, j))?;
                report.check(
                    "eq:w0",
                    json!({ "n": n.to_string(), "i": i, "j": j }),
                    &expected,
                    &got,
                );
            }
        }
    }
    // Base value: the (1, 1) sum collapses to a single summand.
    let n = sampler.rational(7);
    check_value(
        report,
        "eq:w0-base",
        json!({ "n": n.to_string(), "i": 1, "j": 1 }),
        &(rat(-1) / rat(2)),
        g4(&n, 1, 1),
    );
    // Diagonal values do not depend on n.
    for i in 1..=4 {
        let expected = lib(w0_rhs(i, i))?;
        let mut values = Vec::new();
        for _ in 0..5 {
            let (n, v) = lib(sampler.with_retries("w0-indep", 60, |s| {
                let n = s.rational(7);
                let v = g4(&n, i, i)?;
                Ok((n, v))
            }))?;
            values.push((n, v));
        }
        let all_match = values.iter().all(|(_, v)| *v == expected);
        let got = if all_match {
            format!("{} at {} sampled n", expected, values.len())
        } else {
            values
                .iter()
                .map(|(n, v)| format!("n = {n}: {v}"))
                .collect::<Vec<_>>()
                .join("; ")
        };
        report.check_str(
            "eq:w0-indep",
            json!({ "i": i }),
            expected.to_string(),
            &got,
            all_match,
        );
    }
    Ok(())
}

/// Vanishing of the first double sum on `0 <= t < i` (plus the empty
/// support at `i = 0`).
fn sweep_sum1(report: &mut Report, sampler: &mut Sampler, samples: usize) {
    let zero = rat(0);
    for _ in 0..samples {
        let n = sampler.rational(7);
        let r = sampler.rational(7);
        for i in 0..=4i64 {
            for t in 0..=(i - 1).max(0) {
                if i > 0 && t >= i {
                    continue;
                }
                check_value(
                    report,
                    "eq:sum1",
                    json!({ "n": n.to_string(), "r": r.to_string(), "i": i, "t": t }),
                    &zero,
                    sum1_check(&n, &r, i, t),
                );
            }
        }
    }
}

/// The three-term summand recursion at sampled in-range points, plus an
/// informational record of its behavior on the `t = j` boundary.
fn sweep_rec3(report: &mut Report, sampler: &mut Sampler, samples: usize) {
    for _ in 0..samples {
        let n = sampler.rational(7);
        let r = sampler.rational(7);
        let i = sampler.int(1, 3);
        let j = sampler.int(i, 4);
        let k = sampler.int(1, j);
        let s = sampler.int(0, 2);
        let mut t = sampler.int(0, 3);
        while t == j {
            t = sampler.int(0, 3);
        }
        let base = json!({
            "n": n.to_string(), "r": r.to_string(),
            "i": i, "j": j, "k": k, "s": s,
        });
        let mut params = base.clone();
        params["t"] = json!(t);
        check_identity(report, "eq:rec3", params, rec3_check(&n, &r, i, j, k, s, t));

        // The recursion is only claimed away from t = j; record (without
        // judging) what happens exactly there.
        let mut boundary = base;
        boundary["t"] = json!(j);
        boundary["outside_validity"] = json!(true);
        let observed = match rec3_check(&n, &r, i, j, k, s, j) {
            Ok(true) => "holds".to_string(),
            Ok(false) => "fails (as allowed)".to_string(),
            Err(e) => format!("error: {e}"),
        };
        report.check_str("eq:rec3", boundary, "n/a (t = j)", &observed, true);
    }
}

/// The four summand/sum recursions certifying the determinant
/// evaluations, each at `samples` sampled rational points.
fn sweep_recsimp(report: &mut Report, sampler: &mut Sampler, samples: usize) -> CliResult<()> {
    let zero = rat(0);
    for _ in 0..samples {
        let n = sampler.rational(7);
        let i = sampler.int(1, 3);
        let t = sampler.int(0, 2);
        check_identity(
            report,
            "eq:rec4",
            json!({ "n": n.to_string(), "i": i, "t": t }),
            rec4_check(&n, i, t),
        );
    }
    for _ in 0..samples {
        let i = sampler.int(1, 3);
        let (n, ok) = lib(sampler.with_retries("rec-ii-simp", 60, |s| {
            let n = s.rational(7);
            let ok = rec_ii_simp_check(&n, i)?;
            Ok((n, ok))
        }))?;
        check_identity(
            report,
            "eq:rec-ii-simp",
            json!({ "n": n.to_string(), "i": i }),
            Ok(ok),
        );
    }
    for _ in 0..samples {
        let i = sampler.int(1, 3);
        let j = sampler.int(i + 1, 4);
        let (n, ok) = lib(sampler.with_retries("rec-ij-simp", 60, |s| {
            let n = s.rational(7);
            let ok = rec_ij_simp_check(&n, i, j)?;
            Ok((n, ok))
        }))?;
        check_identity(
            report,
            "eq:rec-ij-simp",
            json!({ "n": n.to_string(), "i": i, "j": j }),
            Ok(ok),
        );
    }
    for _ in 0..samples {
        let i = sampler.int(1, 3);
        let j = sampler.int((i + 1).max(2), 5);
        let (n, residual) = lib(sampler.with_retries("cr-vanishing", 60, |s| {
            let n = s.rational(7);
            let v = cr_vanishing_check(&n, i, j)?;
            Ok((n, v))
        }))?;
        check_value(
            report,
            "eq:cr-vanishing",
            json!({ "n": n.to_string(), "i": i, "j": j }),
            &zero,
            Ok(residual),
        );
    }
    Ok(())
}

/// Vanishing of the auxiliary boundary sum and of its inner t-sum.
fn sweep_aux(report: &mut Report, sampler: &mut Sampler, samples: usize) {
    let zero = rat(0);
    for _ in 0..samples {
        let n = sampler.rational(7);
        let r = sampler.rational(7);
        let i = sampler.int(0, 5);
        let j = sampler.int(2, 5);
        check_value(
            report,
            "eq:aux",
            json!({ "n": n.to_string(), "r": r.to_string(), "i": i, "j": j }),
            &zero,
            aux_sum_check(&n, &r, i, j),
        );
        let j_inner = sampler.int(2, 6);
        check_value(
            report,
            "eq:aux",
            json!({ "r": r.to_string(), "j": j_inner, "inner": true }),
            &zero,
            aux_inner_t_sum(&r, j_inner),
        );
    }
}

/// The terminating Chu-Vandermonde evaluation at sampled parameters.
fn sweep_chu(report: &mut Report, sampler: &mut Sampler, samples: usize) -> CliResult<()> {
    for _ in 0..samples {
        let nn = sampler.int(0, 6);
        let (a, c, lhs, rhs) = lib(sampler.with_retries("chu", 60, |s| {
            let a = s.rational(5);
            let c = s.rational(5);
            let (lhs, rhs) = chu_vandermonde(&a, &c, nn)?;
            Ok((a, c, lhs, rhs))
        }))?;
        report.check(
            "eq:S2101",
            json!({ "a": a.to_string(), "c": c.to_string(), "n": nn }),
            &rhs,
            &lhs,
        );
    }
    Ok(())
}

/// The two terminating transformation formulas at sampled parameters.
fn sweep_transforms(report: &mut Report, sampler: &mut Sampler, samples: usize) -> CliResult<()> {
    for _ in 0..samples {
        let nn = sampler.int(0, 5);
        let (case, lhs, rhs) = lib(sampler.with_retries("transform-2f1", 60, |s| {
            let case = TransformCase::TwoF1 {
                a: s.rational(5),
                c: s.rational(5),
                nn,
                z: s.rational_where(5, |z| *z == rat(1)),
            };
            let (lhs, rhs) = hyp_transform_check(&case)?;
            Ok((case, lhs, rhs))
        }))?;
        report.check(
            "eq:1.8.10",
            json!({ "case": format!("{case:?}") }),
            &rhs,
            &lhs,
        );
    }
    for _ in 0..samples {
        let nn = sampler.int(0, 4);
        let (case, lhs, rhs) = lib(sampler.with_retries("transform-4f3", 60, |s| {
            let case = TransformCase::FourF3 {
                a: s.rational(4),
                b: s.rational(4),
                c: s.rational(4),
                e: s.rational(4),
                f: s.rational(4),
                nn,
            };
            let (lhs, rhs) = hyp_transform_check(&case)?;
            Ok((case, lhs, rhs))
        }))?;
        report.check(
            "eq:4.3.5.1",
            json!({ "case": format!("{case:?}") }),
            &rhs,
            &lhs,
        );
    }
    Ok(())
}
