use std::collections::BTreeMap;
use std::fmt;

use super::ring::RingElement;
use super::scalar::{FpScalar, Prime};
use crate::error::{Error, Result};

/// The truncated polynomial ring `F_p[g] / (g^(T+1))` with `deg g` fixed.
///
/// This is the cohomology model for monogenic manifolds: `F_2[t]/t^(m+1)`
/// with `deg t = 1` for real projective space and `F_p[x]/x^(m+1)` with
/// `deg x = 2` for complex projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    p: Prime,
    generator_degree: u32,
    truncation: u32,
}

impl RingSpec {
    pub fn new(p: u64, generator_degree: u32, truncation: u32) -> Result<Self> {
        Self::with_prime(Prime::new(p)?, generator_degree, truncation)
    }

    pub fn with_prime(p: Prime, generator_degree: u32, truncation: u32) -> Result<Self> {
        if generator_degree == 0 {
            return Err(Error::Spec("generator degree must be positive".into()));
        }
        Ok(RingSpec {
            p,
            generator_degree,
            truncation,
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn generator_degree(&self) -> u32 {
        self.generator_degree
    }

    /// Largest surviving exponent `T`; `g^(T+1) = 0`.
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Cohomological degree of the top surviving monomial.
    pub fn top_degree(&self) -> u64 {
        self.generator_degree as u64 * self.truncation as u64
    }

    /// Display name of the generator: `t` in degree 1, `x` in degree 2.
    pub fn variable(&self) -> &'static str {
        match self.generator_degree {
            1 => "t",
            2 => "x",
            _ => "g",
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}]/({}^{}), deg {} = {}",
            self.p,
            self.variable(),
            self.variable(),
            self.truncation + 1,
            self.variable(),
            self.generator_degree
        )
    }
}

/// Element of a truncated graded polynomial ring, stored sparsely.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    spec: RingSpec,
    coeffs: BTreeMap<u32, u64>,
}

impl GradedPoly {
    pub fn zero(spec: RingSpec) -> Self {
        GradedPoly {
            spec,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(spec: RingSpec) -> Self {
        Self::constant(spec, 1)
    }

    pub fn constant(spec: RingSpec, c: u64) -> Self {
        Self::monomial(spec, 0, c).expect("exponent 0 always survives")
    }

    /// `c * g^e`. Fails when `e` exceeds the truncation.
    pub fn monomial(spec: RingSpec, exponent: u32, c: u64) -> Result<Self> {
        if exponent > spec.truncation {
            return Err(Error::ExponentOutOfRange {
                exponent,
                bound: spec.truncation,
            });
        }
        let mut poly = GradedPoly::zero(spec);
        poly.add_term(exponent, c);
        Ok(poly)
    }

    /// `c * g^e`, or zero when `e` lies beyond the truncation.
    pub fn monomial_truncated(spec: RingSpec, exponent: u32, c: u64) -> Self {
        let mut poly = GradedPoly::zero(spec);
        if exponent <= spec.truncation {
            poly.add_term(exponent, c);
        }
        poly
    }

    /// Builds an element from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(spec: RingSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u64)>,
    {
        let mut poly = GradedPoly::zero(spec);
        for (e, c) in terms {
            if e > spec.truncation {
                return Err(Error::ExponentOutOfRange {
                    exponent: e,
                    bound: spec.truncation,
                });
            }
            poly.add_term(e, c);
        }
        Ok(poly)
    }

    /// Dense coefficients, index = exponent. Entries past `T` are dropped.
    pub fn from_dense(spec: RingSpec, dense: &[u64]) -> Self {
        let mut poly = GradedPoly::zero(spec);
        for (e, &c) in dense.iter().enumerate().take(spec.truncation as usize + 1) {
            poly.add_term(e as u32, c);
        }
        poly
    }

    fn add_term(&mut self, e: u32, c: u64) {
        let p = self.spec.p;
        let c = p.reduce(c);
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot = p.add(*slot, c);
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn coeff(&self, exponent: u32) -> FpScalar {
        FpScalar::new(
            self.coeffs.get(&exponent).copied().unwrap_or(0),
            self.spec.p,
        )
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    pub fn max_exponent(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Whether every term sits in generator exponent `e`.
    pub fn is_homogeneous_of(&self, exponent: u32) -> bool {
        self.coeffs.keys().all(|&e| e == exponent)
    }

    /// The part of cohomological degree `degree`.
    pub fn degree_part(&self, degree: u64) -> GradedPoly {
        let gd = self.spec.generator_degree as u64;
        let mut out = GradedPoly::zero(self.spec);
        if degree.is_multiple_of(gd) {
            if let Ok(e) = u32::try_from(degree / gd) {
                if let Some(&c) = self.coeffs.get(&e) {
                    out.coeffs.insert(e, c);
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<u64> {
        let mut dense = vec![0; self.spec.truncation as usize + 1];
        for (&e, &c) in &self.coeffs {
            dense[e as usize] = c;
        }
        dense
    }

    fn ensure_same_ring(&self, other: &GradedPoly) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::IncompatibleRings(format!(
                "{} versus {}",
                self.spec, other.spec
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.ensure_same_ring(other)?;
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.try_add(&other.negated())
    }

    pub fn scale(&self, c: u64) -> GradedPoly {
        let p = self.spec.p;
        let c = p.reduce(c);
        let mut out = GradedPoly::zero(self.spec);
        if c != 0 {
            for (&e, &v) in &self.coeffs {
                out.coeffs.insert(e, p.mul(v, c));
            }
        }
        out
    }

    /// Truncated product; exponents beyond `T` are discarded.
    pub fn try_mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.ensure_same_ring(other)?;
        let p = self.spec.p;
        let bound = self.spec.truncation;
        let mut acc: BTreeMap<u32, u64> = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in other.coeffs.range(..=bound.saturating_sub(e1)) {
                if e1 + e2 > bound {
                    break;
                }
                let slot = acc.entry(e1 + e2).or_insert(0);
                *slot = p.add(*slot, p.mul(c1, c2));
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(GradedPoly {
            spec: self.spec,
            coeffs: acc,
        })
    }

    /// Inverse as a truncated formal power series. Requires a unit constant
    /// term.
    pub fn inverse(&self) -> Result<GradedPoly> {
        let p = self.spec.p;
        let a0 = self.coeffs.get(&0).copied().unwrap_or(0);
        if a0 == 0 {
            return Err(Error::NonInvertible(format!(
                "constant term of {self} is zero"
            )));
        }
        let inv0 = p.inv(a0)?;
        let n = self.spec.truncation as usize + 1;
        let mut b = vec![0u64; n];
        b[0] = inv0;
        for k in 1..n {
            let mut s = 0;
            for (&e, &c) in self.coeffs.range(1..=k as u32) {
                s = p.add(s, p.mul(c, b[k - e as usize]));
            }
            b[k] = p.neg(p.mul(inv0, s));
        }
        Ok(GradedPoly::from_dense(self.spec, &b))
    }

    /// `self^n` by repeated squaring, truncating at every step.
    pub fn pow(&self, mut n: u64) -> GradedPoly {
        let mut acc = GradedPoly::one(self.spec);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
                if base.is_zero() {
                    return GradedPoly::zero(self.spec);
                }
            }
        }
        acc
    }

    /// Renders as `c*t^e` terms joined by ` + ` in increasing exponent order.
    /// A unit coefficient is omitted and `g^1` is written `g`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Parses the rendered form back, e.g. `"1 + t^2"` or `"2*x^3 + x"`.
    pub fn parse(spec: RingSpec, text: &str) -> Result<GradedPoly> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = GradedPoly::zero(spec);
        for raw in text.split('+') {
            let (e, c) = parse_term(raw.trim())?;
            if e > spec.truncation {
                return Err(Error::ExponentOutOfRange {
                    exponent: e,
                    bound: spec.truncation,
                });
            }
            poly.add_term(e, c % spec.p.get());
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<(u32, u64)> {
    let bad = || Error::Parse(format!("malformed term {term:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    let var_pos = term.find(|ch: char| ch.is_ascii_alphabetic());
    let (coef_part, var_part) = match var_pos {
        Some(i) => (
            term[..i].trim().trim_end_matches('*').trim(),
            Some(&term[i..]),
        ),
        None => (term, None),
    };
    let coef = if coef_part.is_empty() {
        1
    } else {
        coef_part.parse::<u64>().map_err(|_| bad())?
    };
    let exponent = match var_part {
        None => 0,
        Some(v) => {
            let mut chars = v.chars();
            let name = chars.next().ok_or_else(bad)?;
            if !matches!(name, 't' | 'x' | 'g') {
                return Err(bad());
            }
            let rest = chars.as_str().trim();
            if rest.is_empty() {
                1
            } else {
                let digits = rest.strip_prefix('^').ok_or_else(bad)?.trim();
                digits.parse::<u32>().map_err(|_| bad())?
            }
        }
    };
    Ok((exponent, coef))
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let var = self.spec.variable();
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "{var}")?,
                (1, c) => write!(f, "{c}*{var}")?,
                (e, 1) => write!(f, "{var}^{e}")?,
                (e, c) => write!(f, "{c}*{var}^{e}")?,
            }
        }
        Ok(())
    }
}

impl RingElement for GradedPoly {
    fn zero_like(&self) -> Self {
        GradedPoly::zero(self.spec)
    }

    fn one_like(&self) -> Self {
        GradedPoly::one(self.spec)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("operands share a ring")
    }

    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).expect("operands share a ring")
    }

    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("operands share a ring")
    }

    fn negated(&self) -> Self {
        let p = self.spec.p;
        GradedPoly {
            spec: self.spec,
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, p.neg(c))).collect(),
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

/// Truncated product of two elements of the same ring.
pub fn poly_mul(a: &GradedPoly, b: &GradedPoly) -> Result<GradedPoly> {
    a.try_mul(b)
}

pub fn poly_inv(a: &GradedPoly) -> Result<GradedPoly> {
    a.inverse()
}

pub fn poly_pow(a: &GradedPoly, n: u64) -> GradedPoly {
    a.pow(n)
}
