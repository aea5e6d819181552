//! Exhaustive scans over shapes, characters and variable counts with JSON reports.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    border_strips, dominance_leq, enumerate_partitions, enumerate_skew_shapes, partitions_of,
    Partition, SkewShape,
};
use crate::error::{Error, Result};
use crate::matrices::{giambelli_matrix, jt_matrix};
use crate::networks::leading_coefficients;
use crate::newton::{rado_containment, snp_check, SnpReport};
use crate::poly::{ExponentVector, SparsePolynomial};
use crate::stembridge::{e_theta_all, e_theta_border_formula};
use crate::symmetric::exponents_of_degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanFamily {
    Jt,
    Giambelli,
    EPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub family: ScanFamily,
    pub max_size: usize,
    pub max_rows: usize,
    pub vars_list: Vec<usize>,
    #[serde(default)]
    pub nu_filter: Option<Vec<Partition>>,
    /// Worker threads; 0 uses the rayon default.
    #[serde(default)]
    pub parallelism: usize,
    #[serde(default)]
    pub output_path: Option<String>,
    /// Stop after this many cases and flag the report incomplete.
    #[serde(default)]
    pub max_cases: Option<usize>,
}

impl ScanConfig {
    pub fn new(
        family: ScanFamily,
        max_size: usize,
        max_rows: usize,
        vars_list: Vec<usize>,
    ) -> Self {
        ScanConfig {
            family,
            max_size,
            max_rows,
            vars_list,
            nu_filter: None,
            parallelism: 0,
            output_path: None,
            max_cases: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_size == 0 || self.max_rows == 0 {
            return Err(Error::InvalidConfig("bounds must be positive".into()));
        }
        if self.vars_list.is_empty() || self.vars_list.contains(&0) {
            return Err(Error::InvalidConfig(
                "vars list must be nonempty and positive".into(),
            ));
        }
        Ok(())
    }

    fn wants(&self, nu: &Partition) -> bool {
        self.nu_filter.as_ref().is_none_or(|f| f.contains(nu))
    }
}

/// Leading term record for Giambelli cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingRecord {
    pub exponent: ExponentVector,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub coefficient: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub expected: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseCheck {
    /// snp_check on the polynomial.
    Snp,
    /// The support is every exponent of the total degree.
    FullSupport,
    /// Definition and border formula agree, and the value is SNP when nonzero.
    EPolynomial,
}

/// One (shape, ν, ℓ) case. For e-poly scans `nu` holds θ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanCase {
    pub shape: SkewShape,
    pub nu: Partition,
    pub nvars: usize,
    pub check: CaseCheck,
    /// The polynomial vanishes in this many variables; SNP holds vacuously.
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snp: Option<SnpReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full_support: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading: Option<LeadingRecord>,
    pub ok: bool,
}

impl ScanCase {
    fn new(shape: SkewShape, nu: Partition, nvars: usize, check: CaseCheck) -> Self {
        ScanCase {
            shape,
            nu,
            nvars,
            check,
            zero: false,
            snp: None,
            full_support: None,
            methods_agree: None,
            leading: None,
            ok: true,
        }
    }

    fn with_snp(mut self, f: &SparsePolynomial) -> Result<Self> {
        if f.is_zero() {
            self.zero = true;
            return Ok(self);
        }
        let r = snp_check(f)?;
        self.ok &= r.is_snp;
        self.snp = Some(r);
        Ok(self)
    }

    /// SNP with a unique dominance-maximal exponent, where M-convexity must follow.
    fn m_convex_applies(&self) -> bool {
        self.snp
            .as_ref()
            .is_some_and(|r| r.is_snp && r.dominance_max.len() == 1)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanTotals {
    pub cases: usize,
    pub verified: usize,
    pub vacuous_zero: usize,
    pub counterexamples: usize,
    pub m_convex_checked: usize,
    pub m_convex_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub tool: String,
    pub version: String,
    pub scan: String,
    pub config: ScanConfig,
    pub complete: bool,
    pub totals: ScanTotals,
    pub cases: Vec<ScanCase>,
    pub counterexamples: Vec<ScanCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl ScanReport {
    fn assemble(scan: &str, config: &ScanConfig, mut cases: Vec<ScanCase>) -> Self {
        let mut complete = true;
        if let Some(limit) = config.max_cases {
            if cases.len() > limit {
                cases.truncate(limit);
                complete = false;
            }
        }
        let counterexamples: Vec<ScanCase> = cases.iter().filter(|c| !c.ok).cloned().collect();
        let m_convex: Vec<&ScanCase> = cases.iter().filter(|c| c.m_convex_applies()).collect();
        let totals = ScanTotals {
            cases: cases.len(),
            verified: cases.iter().filter(|c| c.ok && !c.zero).count(),
            vacuous_zero: cases.iter().filter(|c| c.zero).count(),
            counterexamples: counterexamples.len(),
            m_convex_checked: m_convex.len(),
            m_convex_failures: m_convex
                .iter()
                .filter(|c| !c.snp.as_ref().is_some_and(|r| r.is_m_convex))
                .count(),
        };
        ScanReport {
            tool: "immsnp".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            scan: scan.into(),
            config: config.clone(),
            complete,
            totals,
            cases,
            counterexamples,
            wall_time_ms: None,
        }
    }

    /// Adds elapsed time; reports stay byte-identical across runs without it.
    pub fn with_wall_time(mut self, ms: u128) -> Self {
        self.wall_time_ms = Some(ms);
        self
    }

    pub fn has_counterexamples(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn run_in_pool<T: Send>(parallelism: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if parallelism == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    Ok(pool.install(job))
}

/// Flattens per-task case lists in task order.
fn collect_cases<T: Sync>(
    tasks: &[T],
    run: impl Fn(&T) -> Result<Vec<ScanCase>> + Sync + Send,
) -> Result<Vec<ScanCase>> {
    let per_task: Vec<Result<Vec<ScanCase>>> = tasks.par_iter().map(run).collect();
    let mut out = Vec::new();
    for r in per_task {
        out.extend(r?);
    }
    Ok(out)
}

/// Every immanant of every JT matrix in range is SNP.
pub fn scan_conjecture1(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let tasks: Vec<(SkewShape, usize)> = enumerate_skew_shapes(config.max_size, config.max_rows)
        .into_iter()
        .flat_map(|s| config.vars_list.iter().map(move |&l| (s.clone(), l)))
        .collect();
    let cases = run_in_pool(config.parallelism, || {
        collect_cases(&tasks, |(shape, nvars)| {
            let h = jt_matrix(shape, *nvars);
            h.all_immanants()
                .into_iter()
                .rev()
                .filter(|(nu, _)| config.wants(nu))
                .map(|(nu, imm)| {
                    ScanCase::new(shape.clone(), nu, *nvars, CaseCheck::Snp).with_snp(&imm)
                })
                .collect()
        })
    })??;
    Ok(ScanReport::assemble("conjecture1", config, cases))
}

/// Every immanant of every Giambelli matrix in range is SNP, and its leading
/// coefficient is ∏ ν_i!.
pub fn scan_giambelli_theorem(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let lambdas: Vec<Partition> = (1..=config.max_size)
        .flat_map(|d| enumerate_partitions(d, config.max_rows))
        .collect();
    let cases = run_in_pool(config.parallelism, || {
        collect_cases(&lambdas, |lambda| {
            let leading = leading_coefficients(lambda, lambda.size())?;
            let shape = SkewShape::straight(lambda.clone());
            let mut out = Vec::new();
            for &nvars in &config.vars_list {
                let g = giambelli_matrix(lambda, nvars)?;
                for (nu, imm) in g.all_immanants().into_iter().rev() {
                    if !config.wants(&nu) {
                        continue;
                    }
                    let mut case = ScanCase::new(shape.clone(), nu.clone(), nvars, CaseCheck::Snp)
                        .with_snp(&imm)?;
                    let (exponent, coefficient) = leading[&nu].clone();
                    let expected = BigInt::from(nu.factorial_product());
                    case.ok &= coefficient == expected;
                    case.leading = Some(LeadingRecord {
                        exponent,
                        coefficient,
                        expected,
                    });
                    out.push(case);
                }
            }
            Ok(out)
        })
    })??;
    Ok(ScanReport::assemble("giambelli", config, cases))
}

/// The two proven JT cases: the permanent has full support for every shape in
/// range, and Imm_{(n−1,1)} is SNP for border strips with n ≥ 2 rows.
pub fn scan_jt_theorem(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let shapes = enumerate_skew_shapes(config.max_size, config.max_rows);
    let strips: Vec<SkewShape> = (1..=config.max_size)
        .flat_map(border_strips)
        .filter(|s| (2..=config.max_rows).contains(&s.rows()))
        .collect();
    let cases = run_in_pool(config.parallelism, || -> Result<Vec<ScanCase>> {
        let mut tasks: Vec<(SkewShape, usize, bool)> = Vec::new();
        for s in &shapes {
            for &l in &config.vars_list {
                tasks.push((s.clone(), l, true));
            }
        }
        for s in &strips {
            for &l in &config.vars_list {
                tasks.push((s.clone(), l, false));
            }
        }
        collect_cases(&tasks, |(shape, nvars, permanent)| {
            let h = jt_matrix(shape, *nvars);
            let n = shape.rows();
            if *permanent {
                let per = h.permanent();
                let d = shape.size();
                let supp: BTreeSet<&ExponentVector> = per.exponents().collect();
                let all = exponents_of_degree(d, *nvars);
                let full = supp.len() == all.len() && all.iter().all(|e| supp.contains(e));
                let mut case = ScanCase::new(
                    shape.clone(),
                    Partition::row(n),
                    *nvars,
                    CaseCheck::FullSupport,
                );
                case.full_support = Some(full);
                case.ok = full;
                Ok(vec![case])
            } else {
                let nu = Partition::standard(n);
                let imm = crate::matrices::immanant(&h, &nu)?;
                Ok(vec![ScanCase::new(
                    shape.clone(),
                    nu,
                    *nvars,
                    CaseCheck::Snp,
                )
                .with_snp(&imm)?])
            }
        })
    })??;
    Ok(ScanReport::assemble("jt-theorem", config, cases))
}

/// Definition vs border formula for E^θ on border strips, and SNP of every
/// nonzero E^θ.
pub fn scan_e_poly(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let tasks: Vec<(SkewShape, usize)> = (1..=config.max_size)
        .flat_map(border_strips)
        .filter(|s| s.rows() <= config.max_rows)
        .flat_map(|s| config.vars_list.iter().map(move |&l| (s.clone(), l)))
        .collect();
    let cases = run_in_pool(config.parallelism, || {
        collect_cases(&tasks, |(shape, nvars)| {
            let by_def = e_theta_all(shape, *nvars, shape.size())?;
            let mut out = Vec::new();
            for theta in partitions_of(shape.size()) {
                if !config.wants(&theta) {
                    continue;
                }
                let def = by_def
                    .get(&theta)
                    .cloned()
                    .unwrap_or_else(|| SparsePolynomial::zero(*nvars));
                let formula = e_theta_border_formula(shape, &theta, *nvars)?;
                let mut case = ScanCase::new(shape.clone(), theta, *nvars, CaseCheck::EPolynomial)
                    .with_snp(&def)?;
                case.methods_agree = Some(def == formula);
                case.ok &= def == formula;
                out.push(case);
            }
            Ok(out)
        })
    })??;
    Ok(ScanReport::assemble("e-poly", config, cases))
}

/// Runs the scan selected by `config.family` for conjecture-style scans.
pub fn run_scan(config: &ScanConfig) -> Result<ScanReport> {
    match config.family {
        ScanFamily::Jt => scan_conjecture1(config),
        ScanFamily::Giambelli => scan_giambelli_theorem(config),
        ScanFamily::EPoly => scan_e_poly(config),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadoReport {
    pub max_size: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<(Partition, Partition)>,
}

/// Lattice-point containment of permutahedra against dominance for all
/// μ, λ ⊢ d ≤ `max_size`, at ℓ = d.
pub fn rado_check(max_size: usize) -> Result<RadoReport> {
    let pairs: Vec<(Partition, Partition)> = (1..=max_size)
        .flat_map(|d| {
            let ps = partitions_of(d);
            ps.iter()
                .flat_map(|m| ps.iter().map(move |l| (m.clone(), l.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let verdicts: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|(mu, lambda)| {
            Ok(rado_containment(mu, lambda, mu.size())? == dominance_leq(mu, lambda)?)
        })
        .collect();
    let mut mismatches = Vec::new();
    for (pair, v) in pairs.iter().zip(verdicts) {
        if !v? {
            mismatches.push(pair.clone());
        }
    }
    Ok(RadoReport {
        max_size,
        pairs_checked: pairs.len(),
        mismatches,
    })
}
