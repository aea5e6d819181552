use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use immsnp::characters::CharacterTable;
use immsnp::combinatorics::{Partition, SkewShape};
use immsnp::matrices::{giambelli_matrix, immanant, jt_matrix, PolynomialMatrix};
use immsnp::networks::{
    enumerate_path_families, giambelli_network, greene_network, skeleton_groups, SkeletonVerdict,
};
use immsnp::newton::snp_check;
use immsnp::scan::{
    rado_check, scan_conjecture1, scan_e_poly, scan_giambelli_theorem, scan_jt_theorem, ScanConfig,
    ScanFamily, ScanReport,
};
use immsnp::stembridge::{e_theta_border_formula, e_theta_definition};
use immsnp::symmetric::schur_expand;

/// Exact immanants of Jacobi-Trudi and Giambelli matrices and saturated Newton
/// polytope (SNP) checks.
///
/// Exit status: 0 when everything checked holds, 2 when a counterexample or
/// failed identity is found, 1 on errors or incomplete scans.
#[derive(Parser)]
#[command(name = "immsnp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Immanant Imm_ν of H(λ, μ) or G_λ, with its Schur expansion when faithful.
    Imm(MatrixArgs),
    /// SNP report for Imm_ν of H(λ, μ) or G_λ (exit 2 when not SNP).
    Snp(MatrixArgs),
    /// Character table of S_n by Murnaghan-Nakayama, or one value χ^ν(ρ).
    Char(CharArgs),
    /// Path families of Greene's Jacobi-Trudi network or the Giambelli network,
    /// with skeleton grouping (exit 2 when a skeleton fails to factor).
    Paths(PathsArgs),
    /// E^θ_{λ/μ}(y) by the immanant definition and, for border strips, by the
    /// power-sum formula (exit 2 when they differ).
    EPoly(EPolyArgs),
    /// Scan every immanant of every Jacobi-Trudi matrix in range for SNP.
    ScanConjecture1(ScanArgs),
    /// Scan Giambelli immanants for SNP and leading coefficient ∏ ν_i!.
    ScanGiambelli(ScanArgs),
    /// Scan the proven Jacobi-Trudi cases: full support of the permanent, and
    /// SNP of Imm_{(n-1,1)} on border strips.
    ScanJtTheorem(ScanArgs),
    /// Scan Stanley-Stembridge E^θ on border strips: both formulas agree and
    /// every nonzero E^θ is SNP.
    ScanEPoly(ScanArgs),
    /// Compare permutahedron containment P_μ ⊆ P_λ with dominance μ ⊴ λ.
    RadoCheck(RadoArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFamily {
    Jt,
    Giambelli,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let trimmed = s
        .trim()
        .trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
    let parts = trimmed
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect()).map_err(|e| e.to_string())
}

#[derive(Args)]
struct MatrixArgs {
    /// Matrix family.
    #[arg(long, value_enum, default_value = "jt")]
    family: MatrixFamily,
    /// Outer partition λ, e.g. 3,2,1.
    #[arg(long, value_parser = parse_partition)]
    outer: Partition,
    /// Inner partition μ (Jacobi-Trudi only).
    #[arg(long, value_parser = parse_partition, default_value = "")]
    inner: Partition,
    /// Character ν; a partition of the matrix order.
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    /// Number of variables ℓ.
    #[arg(long, env = "IMMSNP_VARS")]
    vars: usize,
    /// Write JSON here instead of stdout.
    #[arg(long, env = "IMMSNP_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CharArgs {
    /// Degree n of the symmetric group.
    #[arg(long)]
    n: usize,
    /// Irreducible character ν (with --rho, prints one value).
    #[arg(long, value_parser = parse_partition, requires = "rho")]
    nu: Option<Partition>,
    /// Cycle type ρ.
    #[arg(long, value_parser = parse_partition, requires = "nu")]
    rho: Option<Partition>,
    #[arg(long, env = "IMMSNP_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PathsArgs {
    #[arg(long, value_enum, default_value = "jt")]
    family: MatrixFamily,
    #[arg(long, value_parser = parse_partition)]
    outer: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    inner: Partition,
    #[arg(long, env = "IMMSNP_VARS")]
    vars: usize,
    /// Refuse to build more families than this.
    #[arg(long, default_value_t = 100_000)]
    max_families: usize,
    /// Emit every family as {"pi", "weight", "skeleton"} instead of a summary.
    #[arg(long)]
    dump: bool,
    #[arg(long, env = "IMMSNP_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EPolyArgs {
    #[arg(long, value_parser = parse_partition)]
    outer: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    inner: Partition,
    /// θ, a partition of |λ/μ|.
    #[arg(long, value_parser = parse_partition)]
    theta: Partition,
    /// Number of y variables.
    #[arg(long, default_value_t = 2)]
    yvars: usize,
    #[arg(long, env = "IMMSNP_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Largest |λ| (border-strip scans: largest |λ/μ|).
    #[arg(long, env = "IMMSNP_MAX_SIZE")]
    max_size: usize,
    /// Largest number of rows.
    #[arg(long, env = "IMMSNP_MAX_ROWS", default_value_t = 3)]
    max_rows: usize,
    /// Variable counts, e.g. 2,3.
    #[arg(
        long,
        env = "IMMSNP_VARS",
        value_delimiter = ',',
        default_value = "2,3"
    )]
    vars: Vec<usize>,
    /// Restrict to these characters (repeatable).
    #[arg(long, value_parser = parse_partition)]
    nu: Vec<Partition>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, env = "IMMSNP_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Stop after this many cases and mark the report incomplete.
    #[arg(long, env = "IMMSNP_MAX_CASES")]
    max_cases: Option<usize>,
    /// Record wall time (reports are otherwise byte-identical across runs).
    #[arg(long)]
    timing: bool,
    #[arg(long, env = "IMMSNP_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RadoArgs {
    /// Check all μ, λ ⊢ d for d up to this bound.
    #[arg(long, env = "IMMSNP_MAX_SIZE", default_value_t = 6)]
    max_size: usize,
    #[arg(long, env = "IMMSNP_OUT")]
    out: Option<PathBuf>,
}

enum Status {
    Verified,
    Counterexample,
    Incomplete,
}

impl Status {
    fn from_flag(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Counterexample
        }
    }
}

fn emit(value: &impl serde::Serialize, out: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
    }
    Ok(())
}

fn build_matrix(
    family: MatrixFamily,
    outer: &Partition,
    inner: &Partition,
    vars: usize,
) -> Result<(Value, PolynomialMatrix)> {
    Ok(match family {
        MatrixFamily::Jt => {
            let shape = SkewShape::new(outer.clone(), inner.clone())?;
            (
                json!({"family": "jt", "shape": shape}),
                jt_matrix(&shape, vars),
            )
        }
        MatrixFamily::Giambelli => {
            if !inner.is_empty() {
                bail!("Giambelli matrices take a straight shape; drop --inner");
            }
            (
                json!({"family": "giambelli", "lambda": outer}),
                giambelli_matrix(outer, vars)?,
            )
        }
    })
}

fn schur_json(f: &immsnp::poly::SparsePolynomial) -> Value {
    match schur_expand(f) {
        Ok(coeffs) => Value::Array(
            coeffs
                .iter()
                .rev()
                .map(|(l, a)| json!([l, a.to_string()]))
                .collect(),
        ),
        Err(e) => json!({"unavailable": e.to_string()}),
    }
}

fn run_imm(a: &MatrixArgs, snp_only: bool) -> Result<Status> {
    let (mut head, m) = build_matrix(a.family, &a.outer, &a.inner, a.vars)?;
    let imm = immanant(&m, &a.nu)?;
    head["nu"] = json!(a.nu);
    head["nvars"] = json!(a.vars);
    if snp_only {
        if imm.is_zero() {
            head["zero"] = json!(true);
            emit(&head, a.out.as_ref())?;
            return Ok(Status::Verified);
        }
        let report = snp_check(&imm)?;
        let ok = report.is_snp;
        head["report"] = serde_json::to_value(report)?;
        emit(&head, a.out.as_ref())?;
        return Ok(Status::from_flag(ok));
    }
    head["schur"] = schur_json(&imm);
    head["polynomial"] = serde_json::to_value(&imm)?;
    emit(&head, a.out.as_ref())?;
    Ok(Status::Verified)
}

fn run_char(a: &CharArgs) -> Result<Status> {
    let table = CharacterTable::shared(a.n);
    match (&a.nu, &a.rho) {
        (Some(nu), Some(rho)) => {
            let v = table.value(nu, rho)?;
            emit(
                &json!({"n": a.n, "nu": nu, "rho": rho, "value": v}),
                a.out.as_ref(),
            )?;
        }
        _ => emit(
            &json!({"n": a.n, "entries": table.entries()}),
            a.out.as_ref(),
        )?,
    }
    Ok(Status::Verified)
}

fn run_paths(a: &PathsArgs) -> Result<Status> {
    let net = match a.family {
        MatrixFamily::Jt => {
            greene_network(&SkewShape::new(a.outer.clone(), a.inner.clone())?, a.vars)
        }
        MatrixFamily::Giambelli => giambelli_network(&a.outer, a.vars)?,
    };
    let families = enumerate_path_families(&net, a.max_families)?;
    let groups = skeleton_groups(&families);
    let ok = groups
        .iter()
        .all(|g| matches!(g.verdict, SkeletonVerdict::Verified(_)));
    if a.dump {
        emit(&families, a.out.as_ref())?;
    } else {
        let failing: Vec<_> = groups
            .iter()
            .filter(|g| !matches!(g.verdict, SkeletonVerdict::Verified(_)))
            .collect();
        emit(
            &json!({
                "network": net,
                "families": families.len(),
                "skeleton_groups": groups.len(),
                "unverified": failing,
            }),
            a.out.as_ref(),
        )?;
    }
    Ok(Status::from_flag(ok))
}

fn run_e_poly(a: &EPolyArgs) -> Result<Status> {
    let shape = SkewShape::new(a.outer.clone(), a.inner.clone())?;
    let def = e_theta_definition(&shape, &a.theta, a.yvars, shape.size())?;
    let mut out = json!({
        "shape": shape,
        "theta": a.theta,
        "yvars": a.yvars,
        "definition": def,
    });
    let mut ok = true;
    if shape.is_border_strip() {
        let formula = e_theta_border_formula(&shape, &a.theta, a.yvars)?;
        ok = formula == def;
        out["border_formula"] = serde_json::to_value(&formula)?;
        out["equal"] = json!(ok);
    }
    if !def.is_zero() {
        let report = snp_check(&def)?;
        ok &= report.is_snp;
        out["snp"] = serde_json::to_value(report)?;
    }
    emit(&out, a.out.as_ref())?;
    Ok(Status::from_flag(ok))
}

fn run_scan(
    a: &ScanArgs,
    family: ScanFamily,
    scan: fn(&ScanConfig) -> immsnp::Result<ScanReport>,
) -> Result<Status> {
    let mut config = ScanConfig::new(family, a.max_size, a.max_rows, a.vars.clone());
    config.nu_filter = (!a.nu.is_empty()).then(|| a.nu.clone());
    config.parallelism = a.jobs;
    config.max_cases = a.max_cases;
    config.output_path = a.out.as_ref().map(|p| p.display().to_string());
    let started = Instant::now();
    let mut report = scan(&config)?;
    if a.timing {
        report = report.with_wall_time(started.elapsed().as_millis());
    }
    emit(&report, a.out.as_ref())?;
    eprintln!(
        "{}: {} cases, {} verified, {} vacuous, {} counterexamples{}",
        report.scan,
        report.totals.cases,
        report.totals.verified,
        report.totals.vacuous_zero,
        report.totals.counterexamples,
        if report.complete { "" } else { " (incomplete)" }
    );
    Ok(if report.has_counterexamples() {
        Status::Counterexample
    } else if !report.complete {
        Status::Incomplete
    } else {
        Status::Verified
    })
}

fn run(cli: Cli) -> Result<Status> {
    match &cli.command {
        Command::Imm(a) => run_imm(a, false),
        Command::Snp(a) => run_imm(a, true),
        Command::Char(a) => run_char(a),
        Command::Paths(a) => run_paths(a),
        Command::EPoly(a) => run_e_poly(a),
        Command::ScanConjecture1(a) => run_scan(a, ScanFamily::Jt, scan_conjecture1),
        Command::ScanGiambelli(a) => run_scan(a, ScanFamily::Giambelli, scan_giambelli_theorem),
        Command::ScanJtTheorem(a) => run_scan(a, ScanFamily::Jt, scan_jt_theorem),
        Command::ScanEPoly(a) => run_scan(a, ScanFamily::EPoly, scan_e_poly),
        Command::RadoCheck(a) => {
            let report = rado_check(a.max_size)?;
            emit(&report, a.out.as_ref())?;
            Ok(Status::from_flag(report.mismatches.is_empty()))
        }
    }
}

fn main() -> ExitCode {
    // Usage errors exit 1; status 2 is reserved for counterexamples.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Status::Verified) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(2),
        Ok(Status::Incomplete) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
