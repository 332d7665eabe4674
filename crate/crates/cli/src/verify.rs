//! Identity suites behind `lmc verify`.

use std::fmt;
use std::str::FromStr;

use lmc_core::fpring::Prime;
use lmc_core::manifolds::{dual_total_class, ClassFamily, ManifoldKind};
use lmc_core::symfun::{
    dual_cauchy_check, euler_crosscheck, partitions_in_box, schur_monomial_oracle,
    schur_nk_expanded,
};
use rayon::prelude::*;

use crate::{CliError, CliResult};

/// Desk-scale caps on the size flags.
pub const MAX_A: usize = 5;
pub const MAX_B: usize = 4;
pub const MAX_M: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    DualCauchy,
    NkSchur,
    EulerCrosscheck,
}

impl FromStr for Identity {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "dual-cauchy" => Ok(Identity::DualCauchy),
            "nk-schur" => Ok(Identity::NkSchur),
            "euler-crosscheck" => Ok(Identity::EulerCrosscheck),
            other => Err(CliError::Usage(format!(
                "unknown identity {other:?}; expected dual-cauchy, nk-schur or euler-crosscheck"
            ))),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::DualCauchy => "dual-cauchy",
            Identity::NkSchur => "nk-schur",
            Identity::EulerCrosscheck => "euler-crosscheck",
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyRequest {
    pub identity: Identity,
    pub max_a: usize,
    pub max_b: usize,
    pub primes: Vec<u64>,
    pub max_m: u32,
    pub ks: Vec<u64>,
}

impl VerifyRequest {
    pub fn new(identity: Identity) -> Self {
        VerifyRequest {
            identity,
            max_a: 4,
            max_b: 3,
            primes: vec![2, 3, 5],
            max_m: 8,
            ks: vec![3, 5],
        }
    }
}

/// One line of the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.label)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

fn validate(req: &VerifyRequest) -> CliResult<Vec<Prime>> {
    if req.max_a == 0 || req.max_a > MAX_A || req.max_b == 0 || req.max_b > MAX_B {
        return Err(CliError::Usage(format!(
            "box bounds must satisfy 1 <= A <= {MAX_A} and 1 <= B <= {MAX_B}"
        )));
    }
    if req.max_m == 0 || req.max_m > MAX_M {
        return Err(CliError::Usage(format!("--m must lie in 1..={MAX_M}")));
    }
    let primes = req
        .primes
        .iter()
        .map(|&p| Prime::new(p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(primes)
}

/// Runs the suite; results are in a fixed order regardless of scheduling.
pub fn run_verify(req: &VerifyRequest) -> CliResult<Vec<CaseResult>> {
    let primes = validate(req)?;
    match req.identity {
        Identity::DualCauchy => {
            let cases: Vec<(usize, usize, Prime)> = primes
                .iter()
                .flat_map(|&p| {
                    (1..=req.max_a).flat_map(move |a| (1..=req.max_b).map(move |b| (a, b, p)))
                })
                .collect();
            cases
                .par_iter()
                .map(|&(a, b, p)| {
                    Ok(CaseResult {
                        label: format!("dual-cauchy A={a} B={b} p={p}"),
                        passed: dual_cauchy_check(a, b, p)?,
                        detail: None,
                    })
                })
                .collect()
        }
        Identity::NkSchur => {
            let shapes = partitions_in_box(req.max_a, req.max_b as u32);
            let cases: Vec<(Prime, usize)> = primes
                .iter()
                .flat_map(|&p| (0..shapes.len()).map(move |i| (p, i)))
                .collect();
            Ok(cases
                .par_iter()
                .map(|&(p, i)| {
                    let lambda = &shapes[i];
                    let nvars = req.max_a;
                    let passed = schur_nk_expanded(lambda, nvars, p)
                        == schur_monomial_oracle(lambda, nvars, p);
                    CaseResult {
                        label: format!("nk-schur {lambda} n={nvars} p={p}"),
                        passed,
                        detail: None,
                    }
                })
                .collect())
        }
        Identity::EulerCrosscheck => {
            let cases: Vec<(u32, u64)> = req
                .ks
                .iter()
                .flat_map(|&k| (1..=req.max_m).map(move |m| (m, k)))
                .collect();
            cases
                .par_iter()
                .map(|&(m, k)| crosscheck_case(m, k))
                .collect()
        }
    }
}

/// All admissible `(n, m')` for `cp:m` at prime `k`: `1 ≤ n ≤ m + 1` and
/// `max(1, r) ≤ m' ≤ m` with `r` the top nonzero dual Chern index.
fn crosscheck_case(m: u32, k: u64) -> CliResult<CaseResult> {
    if k == 2 || Prime::new(k).is_err() {
        return Err(CliError::Core(lmc_core::Error::InvalidK(format!(
            "k must be an odd prime, got {k}"
        ))));
    }
    let source =
        ManifoldKind::ComplexProjective(m).instantiate(ClassFamily::Chern, Prime::new(k)?)?;
    let r = dual_total_class(&source.total_class)?
        .top_nonzero_index()
        .unwrap_or(0);
    let mut total = 0;
    let mut first_failure = None;
    let mut failed = 0;
    for n in 1..=m + 1 {
        for m_prime in r.max(1)..=m {
            let check = euler_crosscheck(&source, n, k, m_prime)?;
            total += 1;
            if !check.holds() {
                failed += 1;
                first_failure.get_or_insert_with(|| {
                    format!("first at n={n} m'={m_prime}, difference {}", check.defect())
                });
            }
        }
    }
    let detail = if failed == 0 {
        format!("{total} instances")
    } else {
        format!(
            "{failed} of {total} instances differ; {}",
            first_failure.unwrap_or_default()
        )
    };
    Ok(CaseResult {
        label: format!("euler-crosscheck cp:{m} k={k}"),
        passed: failed == 0,
        detail: Some(detail),
    })
}
