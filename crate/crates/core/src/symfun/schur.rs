use crate::criteria::determinant;
use crate::error::Result;
use crate::fpring::{GradedPoly, Prime, RingElement};
use crate::manifolds::TotalClass;

use super::partition::Partition;
use super::poly::{elementary, GeneratorPoly, MultiPoly, SymPoly};

/// `s_λ = det(σ_{λ'_i − i + j})` of size `λ_1`, for any supply of
/// elementary symmetric values `sigma(i)`. The empty partition gives `one`.
pub fn nk_determinant<R, F>(lambda: &Partition, sigma: F, one: &R) -> Result<R>
where
    R: RingElement,
    F: Fn(i64) -> R,
{
    let conj = lambda.conjugate();
    let t = conj.len();
    if t == 0 {
        return Ok(one.clone());
    }
    let rows: Vec<Vec<R>> = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| sigma(conj.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&rows)
}

/// Schur function as a polynomial in abstract generators `σ_1..σ_A`.
pub fn schur_via_nk(lambda: &Partition, num_e_generators: usize, p: Prime) -> GeneratorPoly {
    let one = GeneratorPoly::one(p, num_e_generators, 0);
    nk_determinant(
        lambda,
        |i| GeneratorPoly::sigma(p, num_e_generators, 0, i),
        &one,
    )
    .expect("square matrix over one ring")
}

/// [`schur_via_nk`] with `σ_i` replaced by `e_i(z_1..z_n)`.
pub fn schur_nk_expanded(lambda: &Partition, num_vars: usize, p: Prime) -> SymPoly {
    let nk = schur_via_nk(lambda, num_vars, p);
    let values: Vec<MultiPoly> = (1..=num_vars).map(|i| elementary(i, num_vars, p)).collect();
    let poly = nk.evaluate(&values, &[], &MultiPoly::one(p, num_vars));
    SymPoly::from_poly(num_vars, 0, poly).expect("arity matches")
}

/// Schur function evaluated on a total class: `σ_i` is the `i`-th class for
/// `0 ≤ i ≤ rank` and zero otherwise.
pub fn schur_of_class(lambda: &Partition, class: &TotalClass, rank: usize) -> Result<GradedPoly> {
    let one = GradedPoly::one(*class.spec());
    nk_determinant(
        lambda,
        |i| {
            if i < 0 || i as usize > rank {
                one.zero_like()
            } else {
                class.component(i)
            }
        },
        &one,
    )
}

/// Schur polynomial `s_λ(z_1..z_n)` as a sum over semistandard tableaux of
/// shape `λ` with entries in `1..=n`. Zero when `λ` has more than `n` rows.
pub fn schur_monomial_oracle(lambda: &Partition, num_vars: usize, p: Prime) -> SymPoly {
    let shape = lambda.parts();
    let mut filling: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = MultiPoly::zero(p, num_vars);
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();

    fn place(
        idx: usize,
        cells: &[(usize, usize)],
        filling: &mut Vec<Vec<u32>>,
        n: u32,
        p: Prime,
        out: &mut MultiPoly,
    ) {
        if idx == cells.len() {
            let mut content = vec![0u32; n as usize];
            for row in filling.iter() {
                for &v in row {
                    content[v as usize - 1] += 1;
                }
            }
            *out = out.plus(&MultiPoly::monomial(p, content, 1));
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { filling[r][c - 1] } else { 1 };
        let above = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            filling[r][c] = v;
            place(idx + 1, cells, filling, n, p, out);
        }
        filling[r][c] = 0;
    }

    if lambda.len() <= num_vars {
        place(0, &cells, &mut filling, num_vars as u32, p, &mut out);
    }
    SymPoly::from_poly(num_vars, 0, out).expect("arity matches")
}
