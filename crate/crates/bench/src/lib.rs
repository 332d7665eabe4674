//! Fixtures shared by the kernel benchmarks.

use lmc_core::criteria::StableDifferenceClass;
use lmc_core::fpring::{GradedPoly, Prime, RingSpec};
use lmc_core::manifolds::{ClassFamily, ManifoldKind, ManifoldSpec};

/// Dense Toeplitz-like matrix over `F_p[t]/(t^(T+1))` whose entries are
/// deterministic and mostly nonzero, the worst case for cofactor expansion.
pub fn dense_matrix(n: usize, p: u64, truncation: u32) -> Vec<Vec<GradedPoly>> {
    let spec = RingSpec::new(p, 1, truncation).expect("valid ring");
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let dense: Vec<u64> = (0..=truncation as u64)
                        .map(|e| (i as u64 * 7 + j as u64 * 3 + e * 5 + 1) % p)
                        .collect();
                    GradedPoly::from_dense(spec, &dense)
                })
                .collect()
        })
        .collect()
}

/// `1 + t + 2t^2 + ...`, a unit in a large truncated ring.
pub fn unit(p: u64, truncation: u32) -> GradedPoly {
    let spec = RingSpec::new(p, 1, truncation).expect("valid ring");
    let dense: Vec<u64> = (0..=truncation as u64).map(|e| (e * e + 1) % p).collect();
    GradedPoly::from_dense(spec, &dense)
}

pub fn complex_projective(m: u32, k: u64) -> ManifoldSpec {
    ManifoldKind::ComplexProjective(m)
        .instantiate(ClassFamily::Chern, Prime::new(k).expect("prime"))
        .expect("built-in")
}

/// Difference class of `RP^m` into euclidean space of dimension `n`.
pub fn rp_difference_class(m: u32, n: u32, k: u64) -> StableDifferenceClass {
    let source = ManifoldKind::RealProjective(m)
        .instantiate(ClassFamily::StiefelWhitney, Prime::TWO)
        .expect("built-in");
    StableDifferenceClass::from_source(&source, n, k, None).expect("valid class")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(dense_matrix(3, 5, 4).len(), 3);
        assert!(unit(7, 50).inverse().is_ok());
        assert_eq!(complex_projective(4, 3).real_dimension, 8);
        assert_eq!(rp_difference_class(13, 14, 4).k(), 4);
    }
}
