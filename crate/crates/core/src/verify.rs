//! Named sweeps of identity checks, with bound presets.
//!
//! Each suite expands to a list of independent checks that run through
//! [`crate::par::map`]; reports come back in job order regardless of
//! scheduling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cyclic::{
    chi_cyc, chi_cyc_oracle, chi_power, induce_frobenius, induce_oracle, super_klyachko_char,
};
use crate::error::{Error, Result};
use crate::exactalg::divisors;
use crate::par;
use crate::partition::{partitions_of, Partition};
use crate::report::{first_map_discrepancy, params, CheckReport, Status};
use crate::specialization::{
    classical_hook_check, degree_two_checks, hook_formula_check, kw_check, kw_power_sum_check,
    omega_agreement_check, pi_root_check, qps_check, qt_hook_consistency_check, s_ps_check,
    super_cauchy_check, sym1_check, sym2_check, sym3_check, DEFAULT_Q_CAP,
};
use crate::superlie::{
    brute_force_lie_dim, petrogradsky_series_total, specialize_at_ones, super_bi_brandt_char,
    super_brandt_char, super_witt_dim, thrall_sum_check,
};
use crate::symfunc::{frobenius_characteristic, schur_expand};
use crate::tableau::SmallSet;

/// Seed for the random polynomials of the `reu` suite.
pub const OMEGA_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BrandtDiagonal,
    Petrogradsky,
    WittOracle,
    Thrall,
    Klyachko,
    SuperKlyachko,
    Hook,
    Qps,
    Sps,
    Cauchy,
    Reu,
    Kw,
    Symmetry,
    DegreeTwo,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 14] = [
        Suite::BrandtDiagonal,
        Suite::Petrogradsky,
        Suite::WittOracle,
        Suite::Thrall,
        Suite::Klyachko,
        Suite::SuperKlyachko,
        Suite::Hook,
        Suite::Qps,
        Suite::Sps,
        Suite::Cauchy,
        Suite::Reu,
        Suite::Kw,
        Suite::Symmetry,
        Suite::DegreeTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BrandtDiagonal => "brandt-diagonal",
            Suite::Petrogradsky => "petrogradsky",
            Suite::WittOracle => "witt-oracle",
            Suite::Thrall => "thrall",
            Suite::Klyachko => "klyachko",
            Suite::SuperKlyachko => "super-klyachko",
            Suite::Hook => "hook",
            Suite::Qps => "qps",
            Suite::Sps => "sps",
            Suite::Cauchy => "cauchy",
            Suite::Reu => "reu",
            Suite::Kw => "kw",
            Suite::Symmetry => "symmetry",
            Suite::DegreeTwo => "degree-two",
            Suite::All => "all",
        }
    }

    /// What the size bound measures for this suite.
    pub fn size_meaning(self) -> &'static str {
        match self {
            Suite::BrandtDiagonal | Suite::Petrogradsky | Suite::Thrall | Suite::SuperKlyachko
            | Suite::Kw | Suite::WittOracle => "n + m",
            Suite::Klyachko | Suite::Hook | Suite::Qps | Suite::Sps | Suite::Cauchy
            | Suite::Reu | Suite::Symmetry => "n",
            Suite::DegreeTwo => "d",
            Suite::All => "profile preset",
        }
    }

    /// Size bound under a profile.
    pub fn default_size(self, profile: Profile) -> u32 {
        let (quick, full) = match self {
            Suite::BrandtDiagonal => (6, 8),
            Suite::Petrogradsky => (5, 8),
            Suite::WittOracle => (5, 6),
            Suite::Thrall => (4, 5),
            Suite::Klyachko => (6, 8),
            Suite::SuperKlyachko => (6, 8),
            Suite::Hook => (6, 8),
            Suite::Qps => (4, 5),
            Suite::Sps => (4, 6),
            Suite::Cauchy => (3, 5),
            Suite::Reu => (6, 8),
            Suite::Kw => (6, 8),
            Suite::Symmetry => (6, 8),
            Suite::DegreeTwo => (3, 4),
            Suite::All => (0, 0),
        };
        match profile {
            Profile::Quick => quick,
            Profile::Full => full,
        }
    }

    /// Largest accepted size bound.
    pub fn max_size(self) -> u32 {
        match self {
            Suite::BrandtDiagonal => 12,
            Suite::Petrogradsky => 10,
            Suite::WittOracle => 6,
            Suite::Thrall => 6,
            Suite::Klyachko => 9,
            Suite::SuperKlyachko => 10,
            Suite::Hook => 10,
            Suite::Qps => 7,
            Suite::Sps => 7,
            Suite::Cauchy => 6,
            Suite::Reu => 12,
            Suite::Kw => 9,
            Suite::Symmetry => 9,
            Suite::DegreeTwo => 6,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    #[default]
    Full,
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::Parse(format!("unknown profile {s:?}"))),
        }
    }
}

/// Resolved bounds for one suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteBounds {
    pub size: u32,
    pub q_cap: u32,
}

impl SuiteBounds {
    /// Profile defaults, overridden where given; sizes above the suite cap
    /// are rejected.
    pub fn resolve(suite: Suite, profile: Profile, size: Option<u32>, q_cap: Option<u32>) -> Result<Self> {
        let size = size.unwrap_or_else(|| suite.default_size(profile));
        if size > suite.max_size() {
            return Err(Error::Resource(format!(
                "suite {suite} accepts {} <= {}, got {size}",
                suite.size_meaning(),
                suite.max_size()
            )));
        }
        let q_cap = q_cap.unwrap_or(DEFAULT_Q_CAP);
        if q_cap > 40 {
            return Err(Error::Resource(format!("q_cap is limited to 40, got {q_cap}")));
        }
        Ok(Self { size, q_cap })
    }
}

/// Reports of one suite run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteRun {
    pub suite: Suite,
    pub bounds: SuiteBounds,
    pub reports: Vec<CheckReport>,
}

impl SuiteRun {
    /// `error` if any check errored, else `fail` if any failed, else `pass`.
    pub fn status(&self) -> Status {
        overall_status(&self.reports)
    }
}

pub fn overall_status(reports: &[CheckReport]) -> Status {
    if reports.iter().any(|r| r.status == Status::Error) {
        Status::Error
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

type Job = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>;

fn job(f: impl Fn() -> CheckReport + Send + Sync + 'static) -> Job {
    Box::new(move || vec![f()])
}

/// `(n, m)` with `1 <= n + m <= max_total`.
fn bidegrees(max_total: u32) -> Vec<(u32, u32)> {
    (1..=max_total)
        .flat_map(|total| (0..=total).map(move |m| (total - m, m)))
        .collect()
}

fn shapes(max_n: u32) -> Vec<Partition> {
    (1..=max_n).flat_map(partitions_of).collect()
}

fn brandt_jobs(size: u32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for (n, m) in bidegrees(size) {
        jobs.push(job(move || {
            CheckReport::guard("brandt-diagonal", params([("n", n), ("m", m)]), |ps| {
                let lhs = super_bi_brandt_char(n, m)?.diagonal();
                let rhs = super_brandt_char(n, m)?;
                Ok(CheckReport::compare("brandt-diagonal", ps, &lhs, &rhs, || {
                    first_map_discrepancy(lhs.terms(), rhs.terms()).unwrap_or_default()
                }))
            })
        }));
        jobs.push(job(move || {
            CheckReport::guard("brandt-positivity", params([("n", n), ("m", m)]), |ps| {
                let s = schur_expand(&super_brandt_char(n, m)?);
                if s.is_nonneg_integral() {
                    return Ok(CheckReport::pass("brandt-positivity", ps));
                }
                let bad = s
                    .coeffs()
                    .iter()
                    .find(|(_, c)| !c.is_nonneg_integral())
                    .map(|(l, c)| format!("coefficient of s_{l} is {c}"))
                    .unwrap_or_default();
                Ok(CheckReport::fail("brandt-positivity", ps, s.to_symfunc().to_string(),
                    "nonnegative integer coefficients".into(), bad))
            })
        }));
    }
    jobs
}

fn petrogradsky_reports(size: u32) -> Vec<CheckReport> {
    let series = petrogradsky_series_total(size);
    let pairs = bidegrees(size);
    par::map(&pairs, |&(n, m)| {
        CheckReport::guard("petrogradsky", params([("n", n), ("m", m)]), |ps| {
            let lhs = series.get(&(n, m)).cloned().unwrap_or_default();
            let rhs = super_bi_brandt_char(n, m)?;
            Ok(CheckReport::compare("petrogradsky", ps, &lhs, &rhs, || {
                first_map_discrepancy(lhs.terms(), rhs.terms()).unwrap_or_default()
            }))
        })
    })
}

/// Bracket ranks are only feasible in low degree; this bound is fixed.
const WITT_BRACKET_MAX_TOTAL: u32 = 4;
const WITT_MAX_VARS: u32 = 3;

fn witt_jobs(size: u32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for (n, m) in bidegrees(size) {
        for vars in 0..=WITT_MAX_VARS {
            jobs.push(job(move || {
                let ps = params([("n", n), ("m", m), ("N", vars)]);
                CheckReport::guard("witt-character", ps, |ps| {
                    let lhs = specialize_at_ones(&super_brandt_char(n, m)?, vars as usize)?;
                    let rhs = super_witt_dim(n, m, vars as u64)?;
                    Ok(CheckReport::compare("witt-character", ps, &lhs, &rhs, || "value".into()))
                })
            }));
        }
    }
    for (n, m) in bidegrees(size.min(WITT_BRACKET_MAX_TOTAL)) {
        for vars in 1..=2u32 {
            jobs.push(job(move || {
                let ps = params([("n", n), ("m", m), ("N", vars), ("M", vars)]);
                CheckReport::guard("witt-bracket", ps, |ps| {
                    let lhs = BigInt::from(brute_force_lie_dim(n, m, vars, vars)?);
                    let rhs = super_witt_dim(n, m, vars as u64)?;
                    Ok(CheckReport::compare("witt-bracket", ps, &lhs, &rhs, || "rank".into()))
                })
            }));
        }
    }
    jobs
}

/// Subset enumeration for the rotation character runs to this total degree.
const CYC_ORACLE_TOTAL: u32 = 10;
/// Literal induction over `S_r` runs to this order.
const INDUCE_ORACLE_ORDER: u32 = 6;

fn klyachko_jobs(size: u32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=size {
        jobs.push(job(move || {
            CheckReport::guard("klyachko", params([("n", n)]), |ps| {
                let lhs = induce_frobenius(&chi_power(n, 1)?)?;
                let rhs = super_brandt_char(n, 0)?;
                Ok(CheckReport::compare("klyachko", ps, &lhs, &rhs, || {
                    first_map_discrepancy(lhs.terms(), rhs.terms()).unwrap_or_default()
                }))
            })
        }));
    }
    for r in 1..=size.min(INDUCE_ORACLE_ORDER) {
        for k in 0..r {
            jobs.push(job(move || {
                CheckReport::guard("induction-oracle", params([("r", r), ("k", k)]), |ps| {
                    let chi = chi_power(r, k as i64)?;
                    let lhs = frobenius_characteristic(&induce_oracle(&chi)?);
                    let rhs = induce_frobenius(&chi)?;
                    Ok(CheckReport::compare("induction-oracle", ps, &lhs, &rhs, || {
                        first_map_discrepancy(lhs.terms(), rhs.terms()).unwrap_or_default()
                    }))
                })
            }));
        }
    }
    for (n, m) in bidegrees(CYC_ORACLE_TOTAL.max(size)) {
        if n + m > crate::cyclic::CYC_ORACLE_MAX {
            continue;
        }
        jobs.push(job(move || {
            CheckReport::guard("cyc-character", params([("n", n), ("m", m)]), |ps| {
                let lhs = chi_cyc(n, m)?;
                let rhs = chi_cyc_oracle(n, m)?;
                Ok(CheckReport::compare("cyc-character", ps, &lhs, &rhs, || {
                    lhs.values()
                        .iter()
                        .zip(rhs.values())
                        .position(|(a, b)| a != b)
                        .map(|i| format!("power k = {}", i + 1))
                        .unwrap_or_default()
                }))
            })
        }));
    }
    jobs
}

fn super_klyachko_jobs(size: u32) -> Vec<Job> {
    bidegrees(size)
        .into_iter()
        .map(|(n, m)| {
            job(move || {
                CheckReport::guard("super-klyachko", params([("n", n), ("m", m)]), |ps| {
                    let lhs = super_klyachko_char(n, m)?;
                    let rhs = super_brandt_char(n, m)?;
                    Ok(CheckReport::compare("super-klyachko", ps, &lhs, &rhs, || {
                        first_map_discrepancy(lhs.terms(), rhs.terms()).unwrap_or_default()
                    }))
                })
            })
        })
        .collect()
}

fn hook_jobs(size: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for lambda in shapes(size) {
        let l2 = lambda.clone();
        jobs.push(job(move || hook_formula_check(&lambda)));
        jobs.push(job(move || classical_hook_check(&l2)));
    }
    jobs
}

/// `qt-hook` consistency runs only to this size with `qps`.
const QT_HOOK_MAX_N: u32 = 5;

fn qps_jobs(size: u32, q_cap: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=size {
        for bits in 0..(1u64 << (n - 1)) {
            let d = SmallSet::from_bits(bits << 1);
            jobs.push(job(move || qps_check(n, d, q_cap)));
        }
    }
    for lambda in shapes(size.min(QT_HOOK_MAX_N)) {
        jobs.push(job(move || qt_hook_consistency_check(&lambda, q_cap)));
    }
    jobs
}

fn sps_jobs(size: u32, q_cap: u32) -> Vec<Job> {
    shapes(size)
        .into_iter()
        .map(|lambda| job(move || s_ps_check(&lambda, q_cap)))
        .collect()
}

/// Variables per alphabet in the Cauchy sweep.
const CAUCHY_VARS: usize = 2;

fn cauchy_jobs(size: u32) -> Vec<Job> {
    (1..=size)
        .map(|n| job(move || super_cauchy_check(n, CAUCHY_VARS, CAUCHY_VARS)))
        .collect()
}

const OMEGA_TRIALS: u32 = 100;
const OMEGA_MAX_R: u32 = 12;

fn reu_jobs(size: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for lambda in shapes(size) {
        for d in divisors(lambda.size() as u64) {
            let lambda = lambda.clone();
            jobs.push(job(move || pi_root_check(&lambda, d as u32)));
        }
    }
    jobs.push(job(|| omega_agreement_check(OMEGA_TRIALS, OMEGA_MAX_R, OMEGA_SEED)));
    jobs
}

fn kw_jobs(size: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = bidegrees(size)
        .into_iter()
        .map(|(n, m)| job(move || kw_check(n, m)))
        .collect();
    for total in 1..=size {
        jobs.push(job(move || kw_power_sum_check(total)));
    }
    jobs
}

/// The two-sign symmetry sweeps stop one degree below `size`.
fn symmetry_jobs(size: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let classical_max = size.saturating_sub(1);
    for lambda in shapes(classical_max) {
        jobs.push(job(move || sym1_check(&lambda)));
    }
    for lambda in shapes(classical_max) {
        for m in 0..=lambda.size() {
            let lambda = lambda.clone();
            jobs.push(job(move || sym2_check(&lambda, m)));
        }
    }
    for lambda in shapes(size) {
        let total = lambda.size();
        for m in (1..total).step_by(2) {
            let n = total - m;
            if n % 2 == 1 {
                let lambda = lambda.clone();
                jobs.push(job(move || sym3_check(&lambda, n, m)));
            }
        }
    }
    jobs
}

fn degree_two_jobs(size: u32) -> Vec<Job> {
    (1..=size)
        .map(|d| Box::new(move || degree_two_checks(d)) as Job)
        .collect()
}

fn run_jobs(jobs: Vec<Job>) -> Vec<CheckReport> {
    par::map(&jobs, |j| j()).into_iter().flatten().collect()
}

/// Runs one concrete suite.
pub fn run_suite(suite: Suite, bounds: SuiteBounds) -> Result<SuiteRun> {
    let SuiteBounds { size, q_cap } = bounds;
    let reports = match suite {
        Suite::BrandtDiagonal => run_jobs(brandt_jobs(size)),
        Suite::Petrogradsky => petrogradsky_reports(size),
        Suite::WittOracle => run_jobs(witt_jobs(size)),
        Suite::Thrall => par::map(&bidegrees(size), |&(n, m)| thrall_sum_check(n, m)),
        Suite::Klyachko => run_jobs(klyachko_jobs(size)),
        Suite::SuperKlyachko => run_jobs(super_klyachko_jobs(size)),
        Suite::Hook => run_jobs(hook_jobs(size)),
        Suite::Qps => run_jobs(qps_jobs(size, q_cap)),
        Suite::Sps => run_jobs(sps_jobs(size, q_cap)),
        Suite::Cauchy => run_jobs(cauchy_jobs(size)),
        Suite::Reu => run_jobs(reu_jobs(size)),
        Suite::Kw => run_jobs(kw_jobs(size)),
        Suite::Symmetry => run_jobs(symmetry_jobs(size)),
        Suite::DegreeTwo => run_jobs(degree_two_jobs(size)),
        Suite::All => {
            return Err(Error::Domain("`all` is a list of suites; use run_profile".into()))
        }
    };
    Ok(SuiteRun { suite, bounds, reports })
}

/// Runs `suite` (or every suite for `all`) under a profile, with optional
/// overrides. A size override is rejected for `all`.
pub fn run(suite: Suite, profile: Profile, size: Option<u32>, q_cap: Option<u32>) -> Result<Vec<SuiteRun>> {
    if suite != Suite::All {
        return Ok(vec![run_suite(suite, SuiteBounds::resolve(suite, profile, size, q_cap)?)?]);
    }
    if size.is_some() {
        return Err(Error::Domain("size bounds apply to a single suite, not `all`".into()));
    }
    Suite::CONCRETE
        .iter()
        .map(|&s| run_suite(s, SuiteBounds::resolve(s, profile, None, q_cap)?))
        .collect()
}
