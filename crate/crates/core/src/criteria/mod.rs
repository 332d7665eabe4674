//! Determinant classes `u_s` / `v_s` and the local multiplicity criteria
//! built on them.

mod corollary;
mod determinant;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use corollary::{corollary_validate, Corollary, CorollaryInstance};
pub use determinant::{determinant, ring_determinant, MAX_DIMENSION};

use crate::error::{Error, Result};
use crate::fpring::{is_prime, GradedPoly};
use crate::manifolds::{dual_total_class, ClassFamily, ManifoldSpec, TotalClass};

/// Checks that `k` has the form the class family requires: a power of two
/// for Stiefel-Whitney classes, an odd prime for Chern classes mod `k`.
pub fn validate_k(k: u64, family: ClassFamily) -> Result<()> {
    match family {
        ClassFamily::StiefelWhitney if k < 2 || !k.is_power_of_two() => {
            Err(Error::InvalidK(format!("k must be a power of 2, got {k}")))
        }
        ClassFamily::Chern if k == 2 || !is_prime(k) => {
            Err(Error::InvalidK(format!("k must be an odd prime, got {k}")))
        }
        _ if k - 1 > MAX_DIMENSION as u64 => Err(Error::InvalidK(format!(
            "k = {k} needs a {}x{} determinant; at most {MAX_DIMENSION} is supported",
            k - 1,
            k - 1
        ))),
        _ => Ok(()),
    }
}

/// Total class of `f*τN ⊕ (−τM)` together with the dimensions entering the
/// determinant index. Dimensions are real for Stiefel-Whitney classes and
/// complex for Chern classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableDifferenceClass {
    total: TotalClass,
    source_dim: u32,
    target_dim: u32,
    k: u64,
}

impl StableDifferenceClass {
    pub fn new(total: TotalClass, source_dim: u32, target_dim: u32, k: u64) -> Result<Self> {
        validate_k(k, total.family())?;
        Ok(StableDifferenceClass {
            total,
            source_dim,
            target_dim,
            k,
        })
    }

    /// `pullback · c(M)^{-1}`, with the pullback defaulting to 1.
    pub fn from_source(
        source: &ManifoldSpec,
        target_dim: u32,
        k: u64,
        pullback: Option<&TotalClass>,
    ) -> Result<Self> {
        let dual = dual_total_class(&source.total_class)?;
        let total = match pullback {
            Some(p) => p.product(&dual)?,
            None => dual,
        };
        let source_dim = source_dimension(source)?;
        Self::new(total, source_dim, target_dim, k)
    }

    pub fn total(&self) -> &TotalClass {
        &self.total
    }

    pub fn family(&self) -> ClassFamily {
        self.total.family()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn source_dim(&self) -> u32 {
        self.source_dim
    }

    pub fn target_dim(&self) -> u32 {
        self.target_dim
    }

    /// The leading index `dim N − dim M + 1 + s`.
    pub fn leading_index(&self, s: u64) -> i64 {
        self.target_dim as i64 - self.source_dim as i64 + 1 + s as i64
    }

    /// The `(k−1)×(k−1)` matrix `(c_{d−i+j})`.
    pub fn matrix(&self, s: u64) -> Vec<Vec<GradedPoly>> {
        let d = self.leading_index(s);
        let size = (self.k - 1) as i64;
        (1..=size)
            .map(|i| {
                (1..=size)
                    .map(|j| self.total.component(d - i + j))
                    .collect()
            })
            .collect()
    }

    /// Generator exponent a nonzero determinant must sit in, when `d ≥ 1`.
    fn expected_exponent(&self, d: i64) -> Option<u64> {
        let degree = d as u64 * (self.k - 1) * self.family().index_degree() as u64;
        let gd = self.total.spec().generator_degree() as u64;
        (degree.is_multiple_of(gd)).then_some(degree / gd)
    }

    /// Whether `u_s` lies in a nonzero cohomology group of the source.
    pub fn degree_in_range(&self, s: u64) -> bool {
        let d = self.leading_index(s);
        d <= 0
            || d as u64 * (self.k - 1) * self.family().index_degree() as u64
                <= self.total.spec().top_degree()
    }

    /// The determinant class at `s`, checked for homogeneity.
    pub fn determinant_class(&self, s: u64) -> Result<GradedPoly> {
        let value = ring_determinant(&self.matrix(s))?;
        let d = self.leading_index(s);
        if d >= 1 && !value.is_zero() {
            let homogeneous = self
                .expected_exponent(d)
                .and_then(|e| u32::try_from(e).ok())
                .is_some_and(|e| value.is_homogeneous_of(e));
            if !homogeneous {
                return Err(Error::Internal(format!(
                    "determinant {value} at s = {s} is not homogeneous of degree {}",
                    d as u64 * (self.k - 1) * self.family().index_degree() as u64
                )));
            }
        }
        Ok(value)
    }
}

fn source_dimension(source: &ManifoldSpec) -> Result<u32> {
    match source.family() {
        ClassFamily::StiefelWhitney => Ok(source.real_dimension),
        ClassFamily::Chern => source
            .complex_dimension
            .ok_or_else(|| Error::Spec(format!("{} has no complex dimension", source.label()))),
    }
}

/// Dimension of `target` in the units of `family`: real for Stiefel-Whitney,
/// complex for Chern.
pub fn target_dimension(target: &ManifoldSpec, family: ClassFamily) -> Result<u32> {
    match family {
        ClassFamily::StiefelWhitney => Ok(target.real_dimension),
        ClassFamily::Chern => target
            .complex_dimension
            .ok_or_else(|| Error::Spec(format!("{} has no complex dimension", target.label()))),
    }
}

/// `u_s` for a Stiefel-Whitney difference class.
pub fn u_s(cls: &StableDifferenceClass, s: u64) -> Result<GradedPoly> {
    if cls.family() != ClassFamily::StiefelWhitney {
        return Err(Error::Spec("u_s needs Stiefel-Whitney classes".into()));
    }
    cls.determinant_class(s)
}

/// `v_s` for a Chern difference class mod `k`.
pub fn v_s(cls: &StableDifferenceClass, s: u64) -> Result<GradedPoly> {
    if cls.family() != ClassFamily::Chern {
        return Err(Error::Spec("v_s needs Chern classes".into()));
    }
    cls.determinant_class(s)
}

/// Outcome of a criterion. The criteria are sufficient conditions only, so
/// there is deliberately no verdict asserting absence of multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    CriterionHolds,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CriterionHolds => "criterion_holds",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Which criterion produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionPath {
    /// Search over `s` with Stiefel-Whitney determinants.
    SwDeterminant,
    /// Search over `s` with Chern determinants mod `k`.
    ChernDeterminant,
    /// Top dual Stiefel-Whitney class raised to `k − 1`.
    SwFastPath,
    /// Top dual Chern class mod `k` raised to `k − 1`.
    ChernFastPath,
}

impl CriterionPath {
    pub fn as_str(self) -> &'static str {
        match self {
            CriterionPath::SwDeterminant => "sw_determinant",
            CriterionPath::ChernDeterminant => "chern_determinant",
            CriterionPath::SwFastPath => "sw_fast_path",
            CriterionPath::ChernFastPath => "chern_fast_path",
        }
    }

    fn determinant(family: ClassFamily) -> Self {
        match family {
            ClassFamily::StiefelWhitney => CriterionPath::SwDeterminant,
            ClassFamily::Chern => CriterionPath::ChernDeterminant,
        }
    }

    fn fast(family: ClassFamily) -> Self {
        match family {
            ClassFamily::StiefelWhitney => CriterionPath::SwFastPath,
            ClassFamily::Chern => CriterionPath::ChernFastPath,
        }
    }
}

impl fmt::Display for CriterionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub witness_s: Option<u64>,
    pub witness_class: Option<GradedPoly>,
    pub path: CriterionPath,
    /// Inclusive bounds of the `s` values examined.
    pub searched_range: (u64, u64),
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::CriterionHolds
    }

    pub fn document(&self) -> ReportDocument {
        ReportDocument {
            verdict: self.verdict.as_str().to_string(),
            s: self.witness_s,
            class: self.witness_class.as_ref().map(GradedPoly::render),
            path: self.path.as_str().to_string(),
            searched_s_max: self.searched_range.1,
            notes: self.notes.clone(),
        }
    }

    /// Compact JSON with keys in schema order.
    pub fn to_json(&self) -> String {
        self.document().to_json()
    }
}

/// Serialized form of a [`CriterionReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub verdict: String,
    pub s: Option<u64>,
    pub class: Option<String>,
    pub path: String,
    pub searched_s_max: u64,
    pub notes: Vec<String>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Resolves the pullback `f*τN` total class: explicit if given, otherwise 1
/// for targets whose tangent class is trivial (or custom targets, with a
/// note), and an error for projective targets.
fn resolve_pullback(
    source: &ManifoldSpec,
    target: &ManifoldSpec,
    pullback: Option<&TotalClass>,
    notes: &mut Vec<String>,
) -> Result<Option<TotalClass>> {
    use crate::manifolds::ManifoldKind;
    match pullback {
        Some(p) => {
            if p.spec() != source.ring() || p.family() != source.family() {
                return Err(Error::IncompatibleRings(format!(
                    "pullback class lives in {} ({}), source cohomology is {} ({})",
                    p.spec(),
                    p.family(),
                    source.ring(),
                    source.family()
                )));
            }
            notes.push(format!("pullback class supplied: {p}"));
            Ok(Some(p.clone()))
        }
        None if target.kind.has_trivial_tangent_class() => Ok(None),
        None if target.kind == ManifoldKind::Custom => {
            notes.push("no pullback class supplied; w(f*τN) taken as 1".into());
            Ok(None)
        }
        None => Err(Error::Spec(format!(
            "target {} has nontrivial tangent classes; supply the pullback class",
            target.label()
        ))),
    }
}

/// Searches `s = 0, 1, ...` for a nonvanishing determinant class.
///
/// The search stops once `u_s` would sit above the top degree of the source
/// cohomology, where it vanishes for degree reasons; `s = 0` is always
/// evaluated.
pub fn check_local_multiplicity(
    source: &ManifoldSpec,
    target: &ManifoldSpec,
    k: u64,
    family: ClassFamily,
    pullback: Option<&TotalClass>,
) -> Result<CriterionReport> {
    validate_k(k, family)?;
    if !source.kind.is_compact() {
        return Err(Error::Spec(format!(
            "source {} is not compact",
            source.label()
        )));
    }
    if source.family() != family {
        return Err(Error::Spec(format!(
            "source carries {} classes, {} requested",
            source.family(),
            family
        )));
    }
    let target_dim = target_dimension(target, family)?;
    let mut notes = Vec::new();
    let pullback = resolve_pullback(source, target, pullback, &mut notes)?;
    let cls = StableDifferenceClass::from_source(source, target_dim, k, pullback.as_ref())?;
    search(&cls, notes)
}

/// The search itself, for callers that already hold a difference class.
pub fn search(cls: &StableDifferenceClass, mut notes: Vec<String>) -> Result<CriterionReport> {
    let path = CriterionPath::determinant(cls.family());
    let mut s = 0u64;
    let mut negative_seen = false;
    loop {
        let d = cls.leading_index(s);
        if d < 0 && !negative_seen {
            notes.push(
                "determinant vanishes while the leading index is negative (its last row is zero)"
                    .into(),
            );
            negative_seen = true;
        }
        let value = cls.determinant_class(s)?;
        if !value.is_zero() {
            if d == 0 {
                notes.push(format!(
                    "leading index 0 at s = {s}: unitriangular determinant, holds for dimensional reasons"
                ));
            }
            return Ok(CriterionReport {
                verdict: Verdict::CriterionHolds,
                witness_s: Some(s),
                witness_class: Some(value),
                path,
                searched_range: (0, s),
                notes,
            });
        }
        if !cls.degree_in_range(s + 1) {
            notes.push(format!(
                "every s > {s} puts the determinant above the top degree {}",
                cls.total().spec().top_degree()
            ));
            return Ok(CriterionReport {
                verdict: Verdict::Inconclusive,
                witness_s: None,
                witness_class: None,
                path,
                searched_range: (0, s),
                notes,
            });
        }
        s += 1;
    }
}

/// Fast path via the top nonzero dual class: holds iff
/// `s := max{ℓ : c̄_ℓ ≠ 0} ≥ n − m + 1` and `c̄_s^{k−1} ≠ 0`, the target
/// being treated as parallelizable of dimension `target_dim`.
///
/// When it holds, the determinant at the matching index is lower triangular
/// with diagonal `c̄_s`; that equality is recomputed and enforced.
pub fn fast_path(source: &ManifoldSpec, target_dim: u32, k: u64) -> Result<CriterionReport> {
    let family = source.family();
    validate_k(k, family)?;
    if !source.kind.is_compact() {
        return Err(Error::Spec(format!(
            "source {} is not compact",
            source.label()
        )));
    }
    let cls = StableDifferenceClass::from_source(source, target_dim, k, None)?;
    let dual = cls.total();
    let top = dual.top_nonzero_index().unwrap_or(0) as u64;
    let threshold = target_dim as i64 - cls.source_dim() as i64 + 1;
    let power = dual.component(top as i64).pow(k - 1);
    let path = CriterionPath::fast(family);
    let mut notes = vec![format!("top nonzero dual class index {top}")];
    if (top as i64) < threshold || power.is_zero() {
        if (top as i64) < threshold {
            notes.push(format!("index {top} is below n - m + 1 = {threshold}"));
        } else {
            notes.push(format!(
                "top dual class raised to k - 1 = {} vanishes",
                k - 1
            ));
        }
        return Ok(CriterionReport {
            verdict: Verdict::Inconclusive,
            witness_s: None,
            witness_class: None,
            path,
            searched_range: (top, top),
            notes,
        });
    }
    let general_s = (top as i64 - threshold) as u64;
    let general = cls.determinant_class(general_s)?;
    if general != power {
        return Err(Error::Internal(format!(
            "fast path class {power} differs from the determinant {general} at s = {general_s}"
        )));
    }
    notes.push(format!("agrees with the determinant at s = {general_s}"));
    Ok(CriterionReport {
        verdict: Verdict::CriterionHolds,
        witness_s: Some(top),
        witness_class: Some(power),
        path,
        searched_range: (top, top),
        notes,
    })
}

/// [`fast_path`] restricted to Stiefel-Whitney sources.
pub fn sw_fast_path(source: &ManifoldSpec, target_dim: u32, k: u64) -> Result<CriterionReport> {
    if source.family() != ClassFamily::StiefelWhitney {
        return Err(Error::Spec("expected Stiefel-Whitney classes".into()));
    }
    fast_path(source, target_dim, k)
}

/// [`fast_path`] restricted to Chern sources; `target_dim` is complex.
pub fn chern_fast_path(source: &ManifoldSpec, target_dim: u32, k: u64) -> Result<CriterionReport> {
    if source.family() != ClassFamily::Chern {
        return Err(Error::Spec("expected Chern classes".into()));
    }
    fast_path(source, target_dim, k)
}

/// The index at which the determinant search reproduces a fast-path witness.
pub fn general_index_of_fast_witness(
    report: &CriterionReport,
    source_dim: u32,
    target_dim: u32,
) -> Option<u64> {
    let s = report.witness_s? as i64;
    let shifted = s - (target_dim as i64 - source_dim as i64 + 1);
    u64::try_from(shifted).ok()
}
