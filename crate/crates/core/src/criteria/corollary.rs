//! Parameter families of projective-space sources for which the criteria are
//! known to hold, with their hypothesis arithmetic.

use std::fmt;
use std::str::FromStr;

use super::{check_local_multiplicity, CriterionReport};
use crate::error::{Error, Result};
use crate::fpring::{is_prime, Prime};
use crate::manifolds::{ClassFamily, ManifoldKind};

/// A family of `(source, target, k)` instances parametrized by `(a, ℓ, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corollary {
    /// `RP^(2^ℓ−2−a) → R^(2^ℓ−2)`, `k` a power of 2, `k(a+1) ≤ 2^ℓ−1`.
    RpEuclidean,
    /// `RP^(2^ℓ−2−a) → S^(2^ℓ−2)` under the same hypotheses.
    RpSphere,
    /// `CP^(2^ℓ−a) → R^(2^(ℓ+1)−3)` with Stiefel-Whitney classes,
    /// `k(a−1) ≤ 2^ℓ−1`.
    CpEuclideanSw,
    /// `CP^(k^ℓ−a) → C^(k^ℓ−2)` with Chern classes mod an odd prime `k`,
    /// `2 ≤ a ≤ (k^ℓ+1)/2` and `k(a−1) ≤ k^ℓ−1`.
    CpEuclideanChern,
}

impl Corollary {
    pub const ALL: [Corollary; 4] = [
        Corollary::RpEuclidean,
        Corollary::RpSphere,
        Corollary::CpEuclideanSw,
        Corollary::CpEuclideanChern,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Corollary::RpEuclidean => "1.5",
            Corollary::RpSphere => "1.6",
            Corollary::CpEuclideanSw => "1.7",
            Corollary::CpEuclideanChern => "1.8",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Corollary::RpEuclidean => "rp-euclidean",
            Corollary::RpSphere => "rp-sphere",
            Corollary::CpEuclideanSw => "cp-euclidean-sw",
            Corollary::CpEuclideanChern => "cp-euclidean-chern",
        }
    }

    pub fn family(self) -> ClassFamily {
        match self {
            Corollary::CpEuclideanChern => ClassFamily::Chern,
            _ => ClassFamily::StiefelWhitney,
        }
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Corollary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Corollary::ALL
            .into_iter()
            .find(|c| c.id() == s || c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown corollary {s:?}")))
    }
}

/// One `(a, ℓ, k)` point of a corollary family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorollaryInstance {
    pub corollary: Corollary,
    pub a: u64,
    pub ell: u32,
    pub k: u64,
}

fn violation(msg: String) -> Error {
    Error::HypothesisViolation(msg)
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| violation(format!("{base}^{exp} overflows")))
}

fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b)
        .ok_or_else(|| violation(format!("{a}*{b} overflows")))
}

fn to_u32(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| violation(format!("dimension {v} is too large")))
}

impl CorollaryInstance {
    pub fn new(corollary: Corollary, a: u64, ell: u32, k: u64) -> Self {
        CorollaryInstance {
            corollary,
            a,
            ell,
            k,
        }
    }

    /// Checks the hypotheses and returns the `(source, target)` pair.
    /// A violation names the failed inequality.
    pub fn manifolds(&self) -> Result<(ManifoldKind, ManifoldKind)> {
        let CorollaryInstance {
            corollary,
            a,
            ell,
            k,
        } = *self;
        if a < 1 {
            return Err(violation(format!("a >= 1 fails: a = {a}")));
        }
        if ell < 1 {
            return Err(violation(format!("l >= 1 fails: l = {ell}")));
        }
        match corollary {
            Corollary::RpEuclidean | Corollary::RpSphere => {
                require_power_of_two(k)?;
                let top = checked_pow(2, ell)? - 1;
                let lhs = checked_mul(k, a + 1)?;
                if lhs > top {
                    return Err(violation(format!("k(a+1) <= 2^l - 1 fails: {lhs} > {top}")));
                }
                let n = top - 1;
                let m = n.checked_sub(a).filter(|&m| m >= 1).ok_or_else(|| {
                    violation(format!("2^l - 2 - a >= 1 fails for a = {a}, l = {ell}"))
                })?;
                let target = match corollary {
                    Corollary::RpEuclidean => ManifoldKind::Euclidean(to_u32(n)?),
                    _ => ManifoldKind::Sphere(to_u32(n)?),
                };
                Ok((ManifoldKind::RealProjective(to_u32(m)?), target))
            }
            Corollary::CpEuclideanSw => {
                require_power_of_two(k)?;
                let pow = checked_pow(2, ell)?;
                let lhs = checked_mul(k, a - 1)?;
                if lhs > pow - 1 {
                    return Err(violation(format!(
                        "k(a-1) <= 2^l - 1 fails: {lhs} > {}",
                        pow - 1
                    )));
                }
                let m = pow.checked_sub(a).filter(|&m| m >= 1).ok_or_else(|| {
                    violation(format!("2^l - a >= 1 fails for a = {a}, l = {ell}"))
                })?;
                let n = checked_mul(2, pow)? - 3;
                Ok((
                    ManifoldKind::ComplexProjective(to_u32(m)?),
                    ManifoldKind::Euclidean(to_u32(n)?),
                ))
            }
            Corollary::CpEuclideanChern => {
                if k == 2 || !is_prime(k) {
                    return Err(Error::InvalidK(format!("k must be an odd prime, got {k}")));
                }
                let pow = checked_pow(k, ell)?;
                let upper = pow.div_ceil(2);
                if a < 2 || a > upper {
                    return Err(violation(format!(
                        "2 <= a <= (k^l + 1)/2 fails: a = {a}, (k^l + 1)/2 = {upper}"
                    )));
                }
                let lhs = checked_mul(k, a - 1)?;
                if lhs > pow - 1 {
                    return Err(violation(format!(
                        "k(a-1) <= k^l - 1 fails: {lhs} > {}",
                        pow - 1
                    )));
                }
                let m = pow - a;
                let n = pow - 2;
                Ok((
                    ManifoldKind::ComplexProjective(to_u32(m)?),
                    ManifoldKind::Euclidean(to_u32(checked_mul(2, n)?)?),
                ))
            }
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.manifolds().is_ok()
    }

    /// Runs the determinant search on the instance without asserting the
    /// outcome.
    pub fn evaluate(&self) -> Result<CriterionReport> {
        let (source, target) = self.manifolds()?;
        let family = self.corollary.family();
        let p = match family {
            ClassFamily::StiefelWhitney => Prime::TWO,
            ClassFamily::Chern => Prime::new(self.k)?,
        };
        let source = source.instantiate(family, p)?;
        let target = target.instantiate(family, p)?;
        check_local_multiplicity(&source, &target, self.k, family, None)
    }
}

fn require_power_of_two(k: u64) -> Result<()> {
    if k < 2 || !k.is_power_of_two() {
        return Err(Error::InvalidK(format!("k must be a power of 2, got {k}")));
    }
    Ok(())
}

/// Evaluates an instance and insists the criterion holds, as the corollary
/// guarantees under its hypotheses.
pub fn corollary_validate(
    corollary: Corollary,
    a: u64,
    ell: u32,
    k: u64,
) -> Result<CriterionReport> {
    let instance = CorollaryInstance::new(corollary, a, ell, k);
    let report = instance.evaluate()?;
    if !report.holds() {
        return Err(Error::Internal(format!(
            "{} with a = {a}, l = {ell}, k = {k} did not hold",
            corollary.name()
        )));
    }
    Ok(report)
}
