use std::collections::BTreeMap;
use std::fmt;

use super::graded::{GradedPoly, RingSpec};
use super::ring::RingElement;
use crate::error::{Error, Result};

/// Element of the tensor product `R ⊗ S` of two truncated graded rings over
/// the same prime field. Models the Künneth decomposition of the cohomology
/// of a product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigradedPoly {
    left: RingSpec,
    right: RingSpec,
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl BigradedPoly {
    pub fn zero(left: RingSpec, right: RingSpec) -> Result<Self> {
        if left.prime() != right.prime() {
            return Err(Error::IncompatibleRings(format!(
                "tensor factors over F_{} and F_{}",
                left.prime(),
                right.prime()
            )));
        }
        Ok(BigradedPoly {
            left,
            right,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(left: RingSpec, right: RingSpec) -> Result<Self> {
        let mut out = Self::zero(left, right)?;
        out.add_term((0, 0), 1);
        Ok(out)
    }

    /// `a ⊗ b`.
    pub fn tensor(a: &GradedPoly, b: &GradedPoly) -> Result<Self> {
        let mut out = Self::zero(*a.spec(), *b.spec())?;
        let p = a.spec().prime();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                out.add_term((ea, eb), p.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Embeds `a` as `a ⊗ 1`.
    pub fn from_left(a: &GradedPoly, right: RingSpec) -> Result<Self> {
        Self::tensor(a, &GradedPoly::one(right))
    }

    /// Inverse of [`BigradedPoly::from_left`] when the right factor is the
    /// ground field (`T = 0`).
    pub fn to_left(&self) -> Result<GradedPoly> {
        if self.right.truncation() != 0 {
            return Err(Error::IncompatibleRings(
                "right tensor factor is not the ground field".into(),
            ));
        }
        GradedPoly::from_terms(self.left, self.coeffs.iter().map(|(&(e, _), &c)| (e, c)))
    }

    fn add_term(&mut self, key: (u32, u32), c: u64) {
        let p = self.left.prime();
        let c = p.reduce(c);
        if c == 0 || key.0 > self.left.truncation() || key.1 > self.right.truncation() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert(0);
        *slot = p.add(*slot, c);
        if *slot == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn left_spec(&self) -> &RingSpec {
        &self.left
    }

    pub fn right_spec(&self) -> &RingSpec {
        &self.right
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The left-hand coefficient of `1 ⊗ g^e`, i.e. the Künneth component
    /// with right exponent `e`.
    pub fn right_component(&self, exponent: u32) -> GradedPoly {
        GradedPoly::from_terms(
            self.left,
            self.coeffs
                .iter()
                .filter(|(&(_, r), _)| r == exponent)
                .map(|(&(l, _), &c)| (l, c)),
        )
        .expect("stored exponents respect the left truncation")
    }

    fn same_rings(&self, other: &Self) -> bool {
        self.left == other.left && self.right == other.right
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_rings(other) {
            return Err(Error::IncompatibleRings("bigraded operands differ".into()));
        }
        let mut out = self.clone();
        for (&k, &c) in &other.coeffs {
            out.add_term(k, c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_rings(other) {
            return Err(Error::IncompatibleRings("bigraded operands differ".into()));
        }
        let p = self.left.prime();
        let mut out = Self::zero(self.left, self.right)?;
        for (&(l1, r1), &c1) in &self.coeffs {
            for (&(l2, r2), &c2) in &other.coeffs {
                out.add_term((l1 + l2, r1 + r2), p.mul(c1, c2));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BigradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let lv = self.left.variable();
        let rv = match (self.left.variable(), self.right.variable()) {
            (l, r) if l == r => "y",
            (_, r) => r,
        };
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(l, r), &c)| format!("{c}*{lv}^{l}⊗{rv}^{r}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl RingElement for BigradedPoly {
    fn zero_like(&self) -> Self {
        BigradedPoly {
            left: self.left,
            right: self.right,
            coeffs: BTreeMap::new(),
        }
    }

    fn one_like(&self) -> Self {
        let mut out = self.zero_like();
        out.add_term((0, 0), 1);
        out
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("operands share a ring")
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("operands share a ring")
    }

    fn negated(&self) -> Self {
        let p = self.left.prime();
        BigradedPoly {
            left: self.left,
            right: self.right,
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, p.neg(c))).collect(),
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.same_rings(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_multiplies_componentwise() {
        let r = RingSpec::new(3, 2, 4).unwrap();
        let s = RingSpec::new(3, 4, 2).unwrap();
        let a = GradedPoly::parse(r, "1 + 2*x").unwrap();
        let b = GradedPoly::parse(s, "g").unwrap();
        let ab = BigradedPoly::tensor(&a, &b).unwrap();
        let sq = ab.try_mul(&ab).unwrap();
        let expected = BigradedPoly::tensor(&a.times(&a), &b.times(&b)).unwrap();
        assert_eq!(sq, expected);
        assert!(sq.try_mul(&ab).unwrap().is_zero());
        assert_eq!(expected.right_component(2), a.times(&a));
    }

    #[test]
    fn mixed_primes_rejected() {
        let r = RingSpec::new(3, 2, 4).unwrap();
        let s = RingSpec::new(5, 2, 4).unwrap();
        assert!(BigradedPoly::zero(r, s).is_err());
    }
}
