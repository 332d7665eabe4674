//! Built-in manifolds, their total characteristic classes, and ingestion of
//! user-supplied manifold descriptions.
//!
//! A [`TotalClass`] stores the total class as a single element of the
//! cohomology ring together with its family. The `i`-th class is the part of
//! cohomological degree `i` (Stiefel-Whitney) or `2i` (Chern), so
//! `w_i(CP^m)` vanishes for odd `i` without any special casing.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fpring::{binom_mod_p, GradedPoly, Prime, RingSpec};

/// Which characteristic classes a total class collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassFamily {
    /// Stiefel-Whitney classes, coefficients in F_2.
    StiefelWhitney,
    /// Chern classes reduced modulo an odd prime.
    Chern,
}

impl ClassFamily {
    /// Cohomological degree of the class with index 1.
    pub fn index_degree(self) -> u32 {
        match self {
            ClassFamily::StiefelWhitney => 1,
            ClassFamily::Chern => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassFamily::StiefelWhitney => "sw",
            ClassFamily::Chern => "chern",
        }
    }
}

impl FromStr for ClassFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sw" | "stiefel-whitney" | "stiefel_whitney" => Ok(ClassFamily::StiefelWhitney),
            "chern" => Ok(ClassFamily::Chern),
            other => Err(Error::Parse(format!("unknown class family {other:?}"))),
        }
    }
}

impl fmt::Display for ClassFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Total class `1 + c_1 + c_2 + ...` in a truncated cohomology ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalClass {
    total: GradedPoly,
    family: ClassFamily,
}

impl TotalClass {
    pub fn new(total: GradedPoly, family: ClassFamily) -> Result<Self> {
        let spec = *total.spec();
        if family == ClassFamily::StiefelWhitney && spec.prime() != Prime::TWO {
            return Err(Error::Spec(format!(
                "Stiefel-Whitney classes live in F_2 coefficients, not F_{}",
                spec.prime()
            )));
        }
        if total.coeff(0).value() != 1 {
            return Err(Error::NonInvertible(format!(
                "class_0 of a total class must be 1, got {}",
                total.coeff(0)
            )));
        }
        let unit = family.index_degree() as u64;
        let gd = spec.generator_degree() as u64;
        if let Some((e, _)) = total
            .terms()
            .find(|(e, _)| !(*e as u64 * gd).is_multiple_of(unit))
        {
            return Err(Error::Spec(format!(
                "term of degree {} is not a {} class degree",
                e as u64 * gd,
                family
            )));
        }
        Ok(TotalClass { total, family })
    }

    pub fn one(spec: RingSpec, family: ClassFamily) -> Result<Self> {
        Self::new(GradedPoly::one(spec), family)
    }

    /// Assembles a total class from its components `class_0, class_1, ...`,
    /// where `class_i` must be homogeneous of degree `i` in class units.
    pub fn from_components(
        spec: RingSpec,
        family: ClassFamily,
        components: &[GradedPoly],
    ) -> Result<Self> {
        let unit = family.index_degree() as u64;
        let gd = spec.generator_degree() as u64;
        let mut total = GradedPoly::zero(spec);
        for (i, c) in components.iter().enumerate() {
            if c.spec() != &spec {
                return Err(Error::IncompatibleRings(format!(
                    "class_{i} is in another ring"
                )));
            }
            if let Some((e, _)) = c.terms().find(|(e, _)| *e as u64 * gd != i as u64 * unit) {
                return Err(Error::Spec(format!(
                    "class_{i} has a term g^{e} of the wrong degree"
                )));
            }
            total = total.try_add(c)?;
        }
        Self::new(total, family)
    }

    pub fn total(&self) -> &GradedPoly {
        &self.total
    }

    pub fn spec(&self) -> &RingSpec {
        self.total.spec()
    }

    pub fn family(&self) -> ClassFamily {
        self.family
    }

    /// The `i`-th class; zero for negative `i` and beyond the truncation.
    pub fn component(&self, i: i64) -> GradedPoly {
        if i < 0 {
            return GradedPoly::zero(*self.spec());
        }
        self.total
            .degree_part(i as u64 * self.family.index_degree() as u64)
    }

    /// Largest index that could carry a nonzero class in this ring.
    pub fn max_index(&self) -> u32 {
        (self.spec().top_degree() / self.family.index_degree() as u64) as u32
    }

    /// `class_0, ..., class_D` with `D` the largest admissible index.
    pub fn components(&self) -> Vec<GradedPoly> {
        (0..=self.max_index() as i64)
            .map(|i| self.component(i))
            .collect()
    }

    /// Largest positive index with a nonzero class, if any.
    pub fn top_nonzero_index(&self) -> Option<u32> {
        let gd = self.spec().generator_degree() as u64;
        let unit = self.family.index_degree() as u64;
        self.total
            .max_exponent()
            .filter(|&e| e > 0)
            .map(|e| (e as u64 * gd / unit) as u32)
    }

    pub fn is_trivial(&self) -> bool {
        self.total.is_one()
    }

    /// Whitney product of two total classes over the same ring.
    pub fn product(&self, other: &TotalClass) -> Result<TotalClass> {
        if self.family != other.family {
            return Err(Error::IncompatibleRings(format!(
                "cannot multiply a {} class by a {} class",
                self.family, other.family
            )));
        }
        Self::new(self.total.try_mul(&other.total)?, self.family)
    }
}

impl fmt::Display for TotalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.total.fmt(f)
    }
}

/// Total class of the stable inverse bundle: the multiplicative inverse of
/// `w` in the truncated ring.
pub fn dual_total_class(w: &TotalClass) -> Result<TotalClass> {
    if w.total.coeff(0).value() != 1 {
        return Err(Error::NonInvertible("class_0 must be 1".into()));
    }
    TotalClass::new(w.total.inverse()?, w.family)
}

fn binomial_power(spec: RingSpec, exponent: u64) -> GradedPoly {
    let p = spec.prime();
    let dense: Vec<u64> = (0..=spec.truncation() as u64)
        .map(|i| binom_mod_p(exponent, i, p).value())
        .collect();
    GradedPoly::from_dense(spec, &dense)
}

/// `w(RP^m) = (1+t)^(m+1)` in `F_2[t]/t^(m+1)`.
pub fn total_sw_rp(m: u32) -> Result<TotalClass> {
    if m == 0 {
        return Err(Error::Spec("real projective space needs m >= 1".into()));
    }
    let spec = RingSpec::with_prime(Prime::TWO, 1, m)?;
    TotalClass::new(
        binomial_power(spec, m as u64 + 1),
        ClassFamily::StiefelWhitney,
    )
}

/// `w(CP^m) = (1+x)^(m+1)` in `F_2[x]/x^(m+1)` with `deg x = 2`.
pub fn total_sw_cp(m: u32) -> Result<TotalClass> {
    if m == 0 {
        return Err(Error::Spec("complex projective space needs m >= 1".into()));
    }
    let spec = RingSpec::with_prime(Prime::TWO, 2, m)?;
    TotalClass::new(
        binomial_power(spec, m as u64 + 1),
        ClassFamily::StiefelWhitney,
    )
}

/// `c(CP^m) = (1+x)^(m+1)` in `F_p[x]/x^(m+1)` for an odd prime `p`.
pub fn total_chern_cp(m: u32, p: u64) -> Result<TotalClass> {
    let prime = Prime::new(p)?;
    if p == 2 {
        return Err(Error::InvalidModulus(p));
    }
    if m == 0 {
        return Err(Error::Spec("complex projective space needs m >= 1".into()));
    }
    let spec = RingSpec::with_prime(prime, 2, m)?;
    TotalClass::new(binomial_power(spec, m as u64 + 1), ClassFamily::Chern)
}

/// The manifolds the registry knows by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ManifoldKind {
    RealProjective(u32),
    ComplexProjective(u32),
    Sphere(u32),
    Euclidean(u32),
    Parallelizable(u32),
    Custom,
}

impl ManifoldKind {
    pub fn real_dimension(self) -> Option<u32> {
        match self {
            ManifoldKind::RealProjective(m) => Some(m),
            ManifoldKind::ComplexProjective(m) => Some(2 * m),
            ManifoldKind::Sphere(n)
            | ManifoldKind::Euclidean(n)
            | ManifoldKind::Parallelizable(n) => Some(n),
            ManifoldKind::Custom => None,
        }
    }

    /// `R^(2n)` and a parallelizable `2n`-manifold are read as complex
    /// `n`-dimensional; spheres and real projective spaces have no complex
    /// dimension.
    pub fn complex_dimension(self) -> Option<u32> {
        match self {
            ManifoldKind::ComplexProjective(m) => Some(m),
            ManifoldKind::Euclidean(n) | ManifoldKind::Parallelizable(n) if n % 2 == 0 => {
                Some(n / 2)
            }
            _ => None,
        }
    }

    pub fn is_compact(self) -> bool {
        !matches!(self, ManifoldKind::Euclidean(_))
    }

    /// Whether the tangent bundle has trivial total class, so any pullback
    /// of it to a source manifold has total class 1.
    pub fn has_trivial_tangent_class(self) -> bool {
        matches!(
            self,
            ManifoldKind::Sphere(_) | ManifoldKind::Euclidean(_) | ManifoldKind::Parallelizable(_)
        )
    }

    /// Instantiates the built-in with classes of `family` over `F_p`.
    pub fn instantiate(self, family: ClassFamily, p: Prime) -> Result<ManifoldSpec> {
        let check_prime = || -> Result<()> {
            match family {
                ClassFamily::StiefelWhitney if p != Prime::TWO => Err(Error::Spec(
                    "Stiefel-Whitney classes need F_2 coefficients".into(),
                )),
                ClassFamily::Chern if p == Prime::TWO => Err(Error::InvalidModulus(p.get())),
                _ => Ok(()),
            }
        };
        check_prime()?;
        let total_class = match self {
            ManifoldKind::RealProjective(m) => match family {
                ClassFamily::StiefelWhitney => total_sw_rp(m)?,
                ClassFamily::Chern => {
                    return Err(Error::Spec(format!("rp:{m} carries no complex structure")))
                }
            },
            ManifoldKind::ComplexProjective(m) => match family {
                ClassFamily::StiefelWhitney => total_sw_cp(m)?,
                ClassFamily::Chern => total_chern_cp(m, p.get())?,
            },
            ManifoldKind::Sphere(n) => {
                if n == 0 {
                    return Err(Error::Spec("sphere dimension must be positive".into()));
                }
                TotalClass::one(RingSpec::with_prime(p, n, 1)?, family)?
            }
            ManifoldKind::Euclidean(n) | ManifoldKind::Parallelizable(n) => {
                if n == 0 {
                    return Err(Error::Spec("dimension must be positive".into()));
                }
                TotalClass::one(RingSpec::with_prime(p, 1, 0)?, family)?
            }
            ManifoldKind::Custom => {
                return Err(Error::Spec(
                    "custom manifolds need a full specification".into(),
                ))
            }
        };
        Ok(ManifoldSpec {
            kind: self,
            real_dimension: self.real_dimension().expect("built-ins have a dimension"),
            complex_dimension: self.complex_dimension(),
            total_class,
        })
    }
}

impl fmt::Display for ManifoldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldKind::RealProjective(m) => write!(f, "rp:{m}"),
            ManifoldKind::ComplexProjective(m) => write!(f, "cp:{m}"),
            ManifoldKind::Sphere(n) => write!(f, "sphere:{n}"),
            ManifoldKind::Euclidean(n) => write!(f, "euclidean:{n}"),
            ManifoldKind::Parallelizable(n) => write!(f, "parallelizable:{n}"),
            ManifoldKind::Custom => write!(f, "custom"),
        }
    }
}

impl FromStr for ManifoldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, dim) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected <kind>:<dim>, got {s:?}")))?;
        let dim: u32 = dim
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension in {s:?}")))?;
        if dim == 0 {
            return Err(Error::Spec(format!("dimension must be positive in {s:?}")));
        }
        match name.trim() {
            "rp" => Ok(ManifoldKind::RealProjective(dim)),
            "cp" => Ok(ManifoldKind::ComplexProjective(dim)),
            "sphere" => Ok(ManifoldKind::Sphere(dim)),
            "euclidean" => Ok(ManifoldKind::Euclidean(dim)),
            "parallelizable" => Ok(ManifoldKind::Parallelizable(dim)),
            other => Err(Error::Parse(format!("unknown manifold kind {other:?}"))),
        }
    }
}

/// A manifold with its cohomology model and total tangent class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldSpec {
    pub kind: ManifoldKind,
    pub real_dimension: u32,
    pub complex_dimension: Option<u32>,
    pub total_class: TotalClass,
}

impl ManifoldSpec {
    pub fn ring(&self) -> &RingSpec {
        self.total_class.spec()
    }

    pub fn family(&self) -> ClassFamily {
        self.total_class.family()
    }

    pub fn label(&self) -> String {
        self.kind.to_string()
    }
}

/// A parsed manifold reference. Built-ins are instantiated lazily because
/// the coefficient field depends on the criterion being run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldRef {
    Builtin(ManifoldKind),
    Custom(ManifoldSpec),
}

impl ManifoldRef {
    pub fn kind(&self) -> ManifoldKind {
        match self {
            ManifoldRef::Builtin(k) => *k,
            ManifoldRef::Custom(_) => ManifoldKind::Custom,
        }
    }

    pub fn resolve(&self, family: ClassFamily, p: Prime) -> Result<ManifoldSpec> {
        match self {
            ManifoldRef::Builtin(kind) => kind.instantiate(family, p),
            ManifoldRef::Custom(spec) => {
                if spec.family() != family || spec.ring().prime() != p {
                    return Err(Error::Spec(format!(
                        "custom manifold has {} classes over F_{}, but {} classes over F_{} were requested",
                        spec.family(),
                        spec.ring().prime(),
                        family,
                        p
                    )));
                }
                Ok(spec.clone())
            }
        }
    }

    pub fn label(&self) -> String {
        self.kind().to_string()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CustomDocument {
    kind: String,
    p: u64,
    generator_degree: u32,
    truncation_exponent: u32,
    real_dimension: u32,
    #[serde(default)]
    complex_dimension: Option<u32>,
    total_class: Vec<(u32, ClassEntry)>,
}

#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum ClassEntry {
    Terms(Vec<(u32, u64)>),
    Text(String),
}

impl ClassEntry {
    fn to_poly(&self, spec: RingSpec) -> Result<GradedPoly> {
        match self {
            ClassEntry::Terms(terms) => GradedPoly::from_terms(spec, terms.iter().copied()),
            ClassEntry::Text(text) => GradedPoly::parse(spec, text),
        }
    }
}

/// Assembles a total class from `[class index, polynomial]` entries where
/// class `i` must be homogeneous of generator exponent `i`.
pub(crate) fn total_from_entries(
    spec: RingSpec,
    family: ClassFamily,
    entries: &[(u32, ClassEntry)],
) -> Result<TotalClass> {
    let mut seen = std::collections::BTreeSet::new();
    let mut total = GradedPoly::zero(spec);
    for (index, entry) in entries {
        if !seen.insert(*index) {
            return Err(Error::Spec(format!("class {index} listed twice")));
        }
        if *index > spec.truncation() {
            return Err(Error::ExponentOutOfRange {
                exponent: *index,
                bound: spec.truncation(),
            });
        }
        let poly = entry.to_poly(spec)?;
        if !poly.is_homogeneous_of(*index) {
            return Err(Error::Spec(format!(
                "class {index} must be a multiple of g^{index}, got {poly}"
            )));
        }
        total = total.try_add(&poly)?;
    }
    if total.coeff(0).value() != 1 {
        return Err(Error::NonInvertible(format!(
            "class_0 must be 1, got {}",
            total.coeff(0)
        )));
    }
    TotalClass::new(total, family)
}

/// Parses the total class of a pullback bundle supplied as JSON: either a
/// rendered polynomial string, a list of `[class index, polynomial]`
/// entries, or an object with a `total_class` field holding that list.
pub fn parse_total_class(
    document: &str,
    spec: RingSpec,
    family: ClassFamily,
) -> Result<TotalClass> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Doc {
        Text(String),
        Entries(Vec<(u32, ClassEntry)>),
        Object { total_class: Vec<(u32, ClassEntry)> },
    }
    let doc: Doc = serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
    match doc {
        Doc::Text(text) => TotalClass::new(GradedPoly::parse(spec, &text)?, family),
        Doc::Entries(entries)
        | Doc::Object {
            total_class: entries,
        } => total_from_entries(spec, family, &entries),
    }
}

/// Parses a built-in shorthand such as `rp:13`, or a JSON custom manifold
/// specification.
///
/// Custom specifications over `F_2` carry Stiefel-Whitney classes; over an
/// odd prime they carry Chern classes reduced mod that prime.
pub fn parse_manifold_spec(document: &str) -> Result<ManifoldRef> {
    let trimmed = document.trim();
    if !trimmed.starts_with('{') {
        return trimmed.parse().map(ManifoldRef::Builtin);
    }
    let doc: CustomDocument =
        serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.kind != "custom" {
        return Err(Error::Spec(format!(
            "JSON specifications must have kind \"custom\", got {:?}",
            doc.kind
        )));
    }
    let spec = RingSpec::new(doc.p, doc.generator_degree, doc.truncation_exponent)?;
    if spec.top_degree() > doc.real_dimension as u64 {
        return Err(Error::Spec(format!(
            "ring has classes up to degree {} but the manifold has dimension {}",
            spec.top_degree(),
            doc.real_dimension
        )));
    }
    if let Some(c) = doc.complex_dimension {
        if 2 * c != doc.real_dimension {
            return Err(Error::Spec(format!(
                "complex dimension {c} does not match real dimension {}",
                doc.real_dimension
            )));
        }
    }
    let family = if doc.p == 2 {
        ClassFamily::StiefelWhitney
    } else {
        ClassFamily::Chern
    };
    let total_class = total_from_entries(spec, family, &doc.total_class)?;
    Ok(ManifoldRef::Custom(ManifoldSpec {
        kind: ManifoldKind::Custom,
        real_dimension: doc.real_dimension,
        complex_dimension: doc.complex_dimension,
        total_class,
    }))
}
