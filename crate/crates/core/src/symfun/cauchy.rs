use crate::criteria::ring_determinant;
use crate::error::{Error, Result};
use crate::fpring::{BigradedPoly, GradedPoly, Prime, RingElement, RingSpec};
use crate::manifolds::{dual_total_class, ClassFamily, ManifoldSpec, TotalClass};

use super::partition::{partitions_in_box, Partition};
use super::poly::{elementary_in, GeneratorPoly, MultiPoly, SymPoly};
use super::schur::{nk_determinant, schur_of_class};

/// `∏_{i ≤ A} ∏_{j ≤ B} (a_i + b_j)` expanded into monomials.
pub fn dual_cauchy_product(a: usize, b: usize, p: Prime) -> SymPoly {
    let mut acc = SymPoly::one(p, a, b);
    for i in 0..a {
        for j in 0..b {
            let factor = SymPoly::a_var(p, a, b, i).plus(&SymPoly::b_var(p, a, b, j));
            acc = acc.times(&factor);
        }
    }
    acc
}

fn box_terms(a: usize, b: usize) -> Result<Vec<(Partition, Partition)>> {
    partitions_in_box(a, b as u32)
        .into_iter()
        .map(|lambda| {
            let dual = lambda.box_complement(a, b as u32)?.conjugate();
            Ok((lambda, dual))
        })
        .collect()
}

/// `Σ_λ s_λ(a) · s_{λ̂'}(b)` over partitions in the `A × B` box, with each
/// Schur factor computed by the dual Jacobi-Trudi determinant on the
/// elementary symmetric polynomials of its alphabet.
pub fn dual_cauchy_expansion(a: usize, b: usize, p: Prime) -> Result<SymPoly> {
    let n = a + b;
    let a_vars: Vec<usize> = (0..a).collect();
    let b_vars: Vec<usize> = (a..n).collect();
    let wrap = |poly: MultiPoly| SymPoly::from_poly(a, b, poly).expect("arity matches");
    let e_a: Vec<SymPoly> = (0..=a)
        .map(|i| wrap(elementary_in(i, &a_vars, n, p)))
        .collect();
    let e_b: Vec<SymPoly> = (0..=b)
        .map(|j| wrap(elementary_in(j, &b_vars, n, p)))
        .collect();
    let one = SymPoly::one(p, a, b);
    let pick = |table: &[SymPoly], i: i64| {
        if i < 0 || i as usize >= table.len() {
            one.zero_like()
        } else {
            table[i as usize].clone()
        }
    };
    let mut acc = SymPoly::zero(p, a, b);
    for (lambda, dual) in box_terms(a, b)? {
        let left = nk_determinant(&lambda, |i| pick(&e_a, i), &one)?;
        let right = nk_determinant(&dual, |j| pick(&e_b, j), &one)?;
        acc = acc.plus(&left.times(&right));
    }
    Ok(acc)
}

/// Whether both sides of the dual Cauchy identity agree monomial by
/// monomial.
pub fn dual_cauchy_check(a: usize, b: usize, p: Prime) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(
            "both alphabets need at least one variable".into(),
        ));
    }
    Ok(dual_cauchy_product(a, b, p) == dual_cauchy_expansion(a, b, p)?)
}

/// The dual Cauchy sum written in the generators `σ_1..σ_A, σ'_1..σ'_B`.
pub fn dual_cauchy_generators(a: usize, b: usize, p: Prime) -> Result<GeneratorPoly> {
    let one = GeneratorPoly::one(p, a, b);
    let mut acc = GeneratorPoly::zero(p, a, b);
    for (lambda, dual) in box_terms(a, b)? {
        let left = nk_determinant(&lambda, |i| GeneratorPoly::sigma(p, a, b, i), &one)?;
        let right = nk_determinant(&dual, |j| GeneratorPoly::sigma_prime(p, a, b, j), &one)?;
        acc = acc.plus(&left.times(&right));
    }
    Ok(acc)
}

/// Coefficient of the pure power `(σ'_B)^t` in [`dual_cauchy_generators`],
/// as a polynomial in the `σ` generators.
pub fn top_power_coefficient(a: usize, b: usize, p: Prime, t: u32) -> Result<GeneratorPoly> {
    if b == 0 {
        return Err(Error::Domain("the b alphabet is empty".into()));
    }
    let mut key = vec![0; b];
    key[b - 1] = t;
    Ok(dual_cauchy_generators(a, b, p)?
        .split_by_prime_monomial()
        .remove(&key)
        .unwrap_or_else(|| GeneratorPoly::zero(p, a, b)))
}

/// Schur function of the rectangle `(B^(A−t))` in the `σ` generators: the
/// `B × B` determinant `det(σ_{A−t−i+j})`.
pub fn rectangular_schur(a: usize, b: usize, t: usize, p: Prime) -> Result<GeneratorPoly> {
    let rows = a
        .checked_sub(t)
        .ok_or_else(|| Error::Domain(format!("t = {t} exceeds A = {a}")))?;
    let one = GeneratorPoly::one(p, a, b);
    nk_determinant(
        &Partition::rectangle(rows, b as u32),
        |i| GeneratorPoly::sigma(p, a, b, i),
        &one,
    )
}

/// Top class of `η ⊗ ξ` for bundles of ranks `A` and `B`: the degree-`AB`
/// part of `∏(1 + a_i + b_j)`, evaluated through the dual Cauchy expansion
/// with `σ_i ↦ c_i(η)` and `σ'_j ↦ c_j(ξ)`.
pub fn tensor_top_class(
    eta: &TotalClass,
    xi: &TotalClass,
    a: usize,
    b: usize,
) -> Result<BigradedPoly> {
    if eta.spec().prime() != xi.spec().prime() {
        return Err(Error::IncompatibleRings(format!(
            "classes over F_{} and F_{}",
            eta.spec().prime(),
            xi.spec().prime()
        )));
    }
    if eta.family() != xi.family() {
        return Err(Error::IncompatibleRings("mixed class families".into()));
    }
    let mut acc = BigradedPoly::zero(*eta.spec(), *xi.spec())?;
    for (lambda, dual) in box_terms(a, b)? {
        let left = schur_of_class(&lambda, eta, a)?;
        if left.is_zero() {
            continue;
        }
        let right = schur_of_class(&dual, xi, b)?;
        if right.is_zero() {
            continue;
        }
        acc = acc.try_add(&BigradedPoly::tensor(&left, &right)?)?;
    }
    Ok(acc)
}

/// Both evaluations of the top Chern class of `η ⊗ ξ` in
/// `H*(M; F_k) ⊗ F_k[y]/(y^(m+m'))` with `y = c_{k−1}(ξ)` of degree `2(k−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCrosscheck {
    /// Through the dual Cauchy expansion with `c(ξ) = 1 + y`.
    pub left: BigradedPoly,
    /// `Σ_t det(c_{m'+n−t−i+j}) ⊗ y^t`.
    pub right: BigradedPoly,
}

impl EulerCrosscheck {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }

    /// `left − right`.
    pub fn defect(&self) -> BigradedPoly {
        self.left.plus(&self.right.negated())
    }
}

/// Computes both sides of the Euler class decomposition for a Chern source
/// `M` of complex dimension `m`, a parallelizable target of complex
/// dimension `n`, an odd prime `k`, and stand-in rank `m'` for `−τM`.
pub fn euler_crosscheck(
    source: &ManifoldSpec,
    n: u32,
    k: u64,
    m_prime: u32,
) -> Result<EulerCrosscheck> {
    if source.family() != ClassFamily::Chern {
        return Err(Error::Spec(
            "the Euler class cross-check needs Chern classes".into(),
        ));
    }
    crate::criteria::validate_k(k, ClassFamily::Chern)?;
    let p = source.ring().prime();
    if p.get() != k {
        return Err(Error::IncompatibleRings(format!(
            "source is over F_{p}, k = {k}"
        )));
    }
    let m = source
        .complex_dimension
        .ok_or_else(|| Error::Spec(format!("{} has no complex dimension", source.label())))?;
    let eta = dual_total_class(&source.total_class)?;
    let top = eta.top_nonzero_index().unwrap_or(0);
    if m_prime < top {
        return Err(Error::Domain(format!(
            "m' = {m_prime} is below the top nonzero dual class index {top}"
        )));
    }
    let a = (m_prime + n) as usize;
    let b = (k - 1) as usize;
    let conf = RingSpec::with_prime(p, 2 * b as u32, m + m_prime - 1)?;
    let y = GradedPoly::monomial_truncated(conf, 1, 1);
    let xi = TotalClass::new(GradedPoly::one(conf).plus(&y), ClassFamily::Chern)?;

    let left = tensor_top_class(&eta, &xi, a, b)?;

    let class = |i: i64| {
        if i < 0 || i as usize > a {
            GradedPoly::zero(*eta.spec())
        } else {
            eta.component(i)
        }
    };
    let mut right = BigradedPoly::zero(*eta.spec(), conf)?;
    for t in 0..=a {
        let d = (a - t) as i64;
        let rows: Vec<Vec<GradedPoly>> = (1..=b as i64)
            .map(|i| (1..=b as i64).map(|j| class(d - i + j)).collect())
            .collect();
        let v = ring_determinant(&rows)?;
        if v.is_zero() {
            continue;
        }
        let power = GradedPoly::monomial_truncated(conf, t as u32, 1);
        right = right.try_add(&BigradedPoly::tensor(&v, &power)?)?;
    }
    Ok(EulerCrosscheck { left, right })
}

/// Whether the two evaluations in [`euler_crosscheck`] agree exactly.
pub fn chern_euler_crosscheck(source: &ManifoldSpec, n: u32, k: u64, m_prime: u32) -> Result<bool> {
    Ok(euler_crosscheck(source, n, k, m_prime)?.holds())
}
