use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fpring::{Prime, RingElement};

/// Sparse polynomial over F_p in a fixed number of variables, keyed by
/// exponent vectors. No zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    p: Prime,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl MultiPoly {
    pub fn zero(p: Prime, nvars: usize) -> Self {
        MultiPoly {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: Prime, nvars: usize, c: u64) -> Self {
        let mut out = Self::zero(p, nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn one(p: Prime, nvars: usize) -> Self {
        Self::constant(p, nvars, 1)
    }

    pub fn var(p: Prime, nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable {index} out of {nvars}");
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(p, e, 1)
    }

    pub fn monomial(p: Prime, exponents: Vec<u32>, c: u64) -> Self {
        let mut out = Self::zero(p, exponents.len());
        out.add_term(exponents, c);
        out
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponents: &[u32]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: u64) {
        let c = self.p.reduce(c);
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(slot) => {
                *slot = self.p.add(*slot, c);
                if *slot == 0 {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.nvars != other.nvars {
            return Err(Error::IncompatibleRings(format!(
                "F_{}[{} vars] versus F_{}[{} vars]",
                self.p, self.nvars, other.p, other.nvars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(self.p, self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.p.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = self.p.reduce(c);
        let mut out = Self::zero(self.p, self.nvars);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), self.p.mul(v, c));
        }
        out
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one(self.p, self.nvars);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars, "permutation arity");
        let mut out = Self::zero(self.p, self.nvars);
        for (e, &c) in &self.terms {
            let mut moved = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                moved[perm[i]] = x;
            }
            out.add_term(moved, c);
        }
        out
    }

    /// Whether all terms have the same weighted degree `Σ w_i e_i`; the zero
    /// polynomial counts as homogeneous of every degree.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|e| {
            e.iter()
                .zip(weights)
                .map(|(&x, &w)| x as u64 * w as u64)
                .sum::<u64>()
        });
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, weights: &[u32], degree: u64) -> bool {
        self.is_zero() || self.weighted_degree(weights) == Some(degree)
    }

    /// Substitutes `values[i]` for variable `i` in a commutative ring.
    pub fn evaluate<R: RingElement>(&self, values: &[R], one: &R) -> R {
        assert_eq!(values.len(), self.nvars, "evaluation arity");
        let mut powers: Vec<Vec<R>> = values
            .iter()
            .map(|v| vec![one.clone(), v.clone()])
            .collect();
        let mut acc = one.zero_like();
        for (e, &c) in &self.terms {
            let mut term = one.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= x as usize {
                    let next = cache.last().expect("seeded").times(&cache[1]);
                    cache.push(next);
                }
                term = term.times(&cache[x as usize]);
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.plus(&scalar_multiple(&term, c));
        }
        acc
    }
}

/// `c · x` by doubling, using only ring addition.
pub(crate) fn scalar_multiple<R: RingElement>(x: &R, mut c: u64) -> R {
    let mut acc = x.zero_like();
    let mut base = x.clone();
    while c > 0 {
        if c & 1 == 1 {
            acc = acc.plus(&base);
        }
        c >>= 1;
        if c > 0 {
            base = base.plus(&base);
        }
    }
    acc
}

impl RingElement for MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.p, self.nvars)
    }

    fn one_like(&self) -> Self {
        Self::one(self.p, self.nvars)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        self.scale(self.p.get() - 1)
    }

    fn compatible(&self, other: &Self) -> bool {
        self.p == other.p && self.nvars == other.nvars
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("z{i}")
                        } else {
                            format!("z{i}^{x}")
                        }
                    })
                    .collect();
                match (vars.is_empty(), *c) {
                    (true, c) => c.to_string(),
                    (false, 1) => vars.join("*"),
                    (false, c) => format!("{c}*{}", vars.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Polynomial in two alphabets `a_1..a_A` and `b_1..b_B` (variables
/// `0..A` and `A..A+B` of the underlying [`MultiPoly`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymPoly {
    a: usize,
    b: usize,
    poly: MultiPoly,
}

impl SymPoly {
    pub fn zero(p: Prime, a: usize, b: usize) -> Self {
        SymPoly {
            a,
            b,
            poly: MultiPoly::zero(p, a + b),
        }
    }

    pub fn one(p: Prime, a: usize, b: usize) -> Self {
        SymPoly {
            a,
            b,
            poly: MultiPoly::one(p, a + b),
        }
    }

    pub fn from_poly(a: usize, b: usize, poly: MultiPoly) -> Result<Self> {
        if poly.nvars() != a + b {
            return Err(Error::IncompatibleRings(format!(
                "{} variables cannot split as {a} + {b}",
                poly.nvars()
            )));
        }
        Ok(SymPoly { a, b, poly })
    }

    /// `a_i`, 0-based.
    pub fn a_var(p: Prime, a: usize, b: usize, i: usize) -> Self {
        assert!(i < a);
        SymPoly {
            a,
            b,
            poly: MultiPoly::var(p, a + b, i),
        }
    }

    /// `b_j`, 0-based.
    pub fn b_var(p: Prime, a: usize, b: usize, j: usize) -> Self {
        assert!(j < b);
        SymPoly {
            a,
            b,
            poly: MultiPoly::var(p, a + b, a + j),
        }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    /// Applies a permutation of the `a` alphabet and one of the `b` alphabet.
    pub fn permuted(&self, perm_a: &[usize], perm_b: &[usize]) -> Self {
        let perm: Vec<usize> = perm_a
            .iter()
            .copied()
            .chain(perm_b.iter().map(|&j| self.a + j))
            .collect();
        SymPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.permute_vars(&perm),
        }
    }

    pub fn is_invariant_under(&self, perm_a: &[usize], perm_b: &[usize]) -> bool {
        &self.permuted(perm_a, perm_b) == self
    }
}

impl RingElement for SymPoly {
    fn zero_like(&self) -> Self {
        SymPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.zero_like(),
        }
    }

    fn one_like(&self) -> Self {
        SymPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.one_like(),
        }
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "alphabet split differs");
        SymPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.plus(&other.poly),
        }
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "alphabet split differs");
        SymPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.times(&other.poly),
        }
    }

    fn negated(&self) -> Self {
        SymPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.negated(),
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.poly.compatible(&other.poly)
    }
}

/// Polynomial in abstract elementary symmetric generators
/// `σ_1..σ_A, σ'_1..σ'_B`.
///
/// `σ_0 = 1` and `σ_i = 0` for `i` outside `[0, A]` (likewise for `σ'`),
/// applied when generators are requested by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorPoly {
    a: usize,
    b: usize,
    poly: MultiPoly,
}

impl GeneratorPoly {
    pub fn zero(p: Prime, a: usize, b: usize) -> Self {
        GeneratorPoly {
            a,
            b,
            poly: MultiPoly::zero(p, a + b),
        }
    }

    pub fn one(p: Prime, a: usize, b: usize) -> Self {
        GeneratorPoly {
            a,
            b,
            poly: MultiPoly::one(p, a + b),
        }
    }

    /// `σ_i` with the index conventions applied.
    pub fn sigma(p: Prime, a: usize, b: usize, i: i64) -> Self {
        match i {
            0 => Self::one(p, a, b),
            i if i < 0 || i as usize > a => Self::zero(p, a, b),
            i => GeneratorPoly {
                a,
                b,
                poly: MultiPoly::var(p, a + b, i as usize - 1),
            },
        }
    }

    /// `σ'_j` with the index conventions applied.
    pub fn sigma_prime(p: Prime, a: usize, b: usize, j: i64) -> Self {
        match j {
            0 => Self::one(p, a, b),
            j if j < 0 || j as usize > b => Self::zero(p, a, b),
            j => GeneratorPoly {
                a,
                b,
                poly: MultiPoly::var(p, a + b, a + j as usize - 1),
            },
        }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Degree weights: `σ_i` and `σ'_j` have degrees `i` and `j`.
    pub fn weights(&self) -> Vec<u32> {
        (1..=self.a as u32).chain(1..=self.b as u32).collect()
    }

    /// Whether the polynomial is homogeneous of `degree` in the grading
    /// `deg σ_i = i`, `deg σ'_j = j`.
    pub fn is_homogeneous(&self, degree: u64) -> bool {
        self.poly.is_homogeneous(&self.weights(), degree)
    }

    /// Substitutes values for the generators: `sigma[i]` for `σ_{i+1}` and
    /// `sigma_prime[j]` for `σ'_{j+1}`.
    pub fn evaluate<R: RingElement>(&self, sigma: &[R], sigma_prime: &[R], one: &R) -> R {
        let values: Vec<R> = sigma.iter().chain(sigma_prime).cloned().collect();
        self.poly.evaluate(&values, one)
    }

    /// Groups terms by their `σ'` exponent vector, returning for each one
    /// the coefficient as a polynomial in the `σ` generators alone.
    pub fn split_by_prime_monomial(&self) -> BTreeMap<Vec<u32>, GeneratorPoly> {
        let mut out: BTreeMap<Vec<u32>, GeneratorPoly> = BTreeMap::new();
        let p = self.poly.prime();
        for (e, c) in self.poly.terms() {
            let (left, right) = e.split_at(self.a);
            let mut lhs = left.to_vec();
            lhs.extend(std::iter::repeat_n(0, self.b));
            let entry = out
                .entry(right.to_vec())
                .or_insert_with(|| GeneratorPoly::zero(p, self.a, self.b));
            entry.poly.add_term(lhs, c);
        }
        out
    }
}

impl RingElement for GeneratorPoly {
    fn zero_like(&self) -> Self {
        GeneratorPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.zero_like(),
        }
    }

    fn one_like(&self) -> Self {
        GeneratorPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.one_like(),
        }
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "generator sets differ");
        GeneratorPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.plus(&other.poly),
        }
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "generator sets differ");
        GeneratorPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.times(&other.poly),
        }
    }

    fn negated(&self) -> Self {
        GeneratorPoly {
            a: self.a,
            b: self.b,
            poly: self.poly.negated(),
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.poly.compatible(&other.poly)
    }
}

impl fmt::Display for GeneratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .poly
            .terms()
            .map(|(e, c)| {
                let gens: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| {
                        let name = if i < self.a {
                            format!("s{}", i + 1)
                        } else {
                            format!("s'{}", i - self.a + 1)
                        };
                        if x == 1 {
                            name
                        } else {
                            format!("{name}^{x}")
                        }
                    })
                    .collect();
                match (gens.is_empty(), c) {
                    (true, c) => c.to_string(),
                    (false, 1) => gens.join("*"),
                    (false, c) => format!("{c}*{}", gens.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Elementary symmetric polynomial `e_i(z_0, ..., z_{n-1})`, with
/// `e_0 = 1` and `e_i = 0` for `i > n`.
pub fn elementary(i: usize, nvars: usize, p: Prime) -> MultiPoly {
    elementary_in(i, &(0..nvars).collect::<Vec<_>>(), nvars, p)
}

/// `e_i` of the listed variables inside an ambient ring of `nvars`.
pub fn elementary_in(i: usize, vars: &[usize], nvars: usize, p: Prime) -> MultiPoly {
    let mut out = MultiPoly::zero(p, nvars);
    if i > vars.len() {
        return out;
    }
    // walk i-subsets of vars in lexicographic order
    let mut idx: Vec<usize> = (0..i).collect();
    loop {
        let mut e = vec![0; nvars];
        for &k in &idx {
            e[vars[k]] = 1;
        }
        out.add_term(e, 1);
        let mut pos = i;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < vars.len() - i + pos {
                idx[pos] += 1;
                for q in pos + 1..i {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
        }
    }
}
