//! Cross-checks of the fast kernels against slow, independent oracles.

use itertools::Itertools;
use lmc_core::criteria::determinant;
use lmc_core::fpring::{binom_mod_p, GradedPoly, Prime, RingElement, RingSpec};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn binomial_by_factorials(n: u64, r: u64) -> BigUint {
    factorial(n) / (factorial(r) * factorial(n - r))
}

fn permutation_sign(perm: &[usize]) -> bool {
    // true for even permutations
    let mut even = true;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                even = !even;
            }
        }
    }
    even
}

fn leibniz<R: RingElement>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut acc = m[0][0].zero_like();
    for perm in (0..n).permutations(n) {
        let term = perm
            .iter()
            .enumerate()
            .fold(m[0][0].one_like(), |t, (i, &j)| t.times(&m[i][j]));
        acc = if permutation_sign(&perm) {
            acc.plus(&term)
        } else {
            acc.minus(&term)
        };
    }
    acc
}

#[test]
fn lucas_matches_factorials() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10ca5);
    let primes = [2u64, 3, 5, 7, 11, 13, 101, 1009];
    for _ in 0..300 {
        let n = rng.gen_range(0..=2000u64);
        let r = rng.gen_range(0..=n);
        let p = primes[rng.gen_range(0..primes.len())];
        let expected = (binomial_by_factorials(n, r) % p).to_u64().unwrap();
        assert_eq!(
            binom_mod_p(n, r, Prime::new(p).unwrap()).value(),
            expected,
            "C({n},{r}) mod {p}"
        );
    }
    assert_eq!(binom_mod_p(3, 5, Prime::new(7).unwrap()).value(), 0);
}

#[test]
fn cofactor_matches_leibniz() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let spec = RingSpec::new(p, rng.gen_range(1..=2), rng.gen_range(0..=6)).unwrap();
        let n = rng.gen_range(1..=6);
        let sparsity = rng.gen_range(0.0..0.8);
        let m: Vec<Vec<GradedPoly>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(sparsity) {
                            GradedPoly::zero(spec)
                        } else {
                            let dense: Vec<u64> = (0..=spec.truncation())
                                .map(|_| rng.gen_range(0..p))
                                .collect();
                            GradedPoly::from_dense(spec, &dense)
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(determinant(&m).unwrap(), leibniz(&m));
    }
}

#[test]
fn determinant_of_triangular_is_diagonal_product() {
    let spec = RingSpec::new(5, 1, 10).unwrap();
    let n = 40;
    let m: Vec<Vec<GradedPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => GradedPoly::parse(spec, "1 + t").unwrap(),
                    std::cmp::Ordering::Equal => GradedPoly::constant(spec, 2),
                    std::cmp::Ordering::Greater => GradedPoly::zero(spec),
                })
                .collect()
        })
        .collect();
    // 2^40 mod 5 = (2^4)^10 = 1
    assert!(determinant(&m).unwrap().is_one());
}
