//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so every line is
//! printed regardless of output capture.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use lmc_core::criteria::{
    determinant, general_index_of_fast_witness, CriterionReport, StableDifferenceClass,
};
use lmc_core::fpring::{binom_mod_p, GradedPoly, Prime, RingElement, RingSpec};
use lmc_core::manifolds::{dual_total_class, ClassFamily, ManifoldKind};
use lmc_core::symfun::{
    dual_cauchy_check, euler_crosscheck, partitions_in_box, schur_monomial_oracle,
    schur_nk_expanded,
};
use lmc_tool::check::{run_check, CheckRequest};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

/// One checked instance of a corollary grid.
struct Instance {
    source: ManifoldKind,
    target: ManifoldKind,
    k: u64,
    family: ClassFamily,
}

impl Instance {
    fn request(&self, fast_path: bool) -> CheckRequest {
        CheckRequest {
            source: self.source.to_string(),
            target: self.target.to_string(),
            k: self.k,
            family: self.family,
            pullback: None,
            fast_path,
        }
    }

    fn check(&self) -> CriterionReport {
        run_check(&self.request(false))
            .unwrap_or_else(|e| panic!("{} -> {}: {e}", self.source, self.target))
    }

    fn label(&self) -> String {
        format!("{} -> {} k={}", self.source, self.target, self.k)
    }
}

// Admissible sets are restated here from the corollary inequalities rather
// than taken from the library.

fn rp_grid(sphere: bool) -> Vec<Instance> {
    let mut out = Vec::new();
    for ell in 2..=5u32 {
        for k in [2u64, 4, 8, 16] {
            let top = (1u64 << ell) - 1;
            for a in 1..top {
                if k * (a + 1) > top || top - 1 - a < 1 {
                    continue;
                }
                let n = (top - 1) as u32;
                out.push(Instance {
                    source: ManifoldKind::RealProjective(n - a as u32),
                    target: if sphere {
                        ManifoldKind::Sphere(n)
                    } else {
                        ManifoldKind::Euclidean(n)
                    },
                    k,
                    family: ClassFamily::StiefelWhitney,
                });
            }
        }
    }
    out
}

fn cp_sw_grid() -> Vec<Instance> {
    let mut out = Vec::new();
    for ell in 1..=4u32 {
        for k in [2u64, 4, 8] {
            let pow = 1u64 << ell;
            for a in 1..pow {
                if k * (a - 1) > pow - 1 {
                    continue;
                }
                out.push(Instance {
                    source: ManifoldKind::ComplexProjective((pow - a) as u32),
                    target: ManifoldKind::Euclidean((2 * pow - 3) as u32),
                    k,
                    family: ClassFamily::StiefelWhitney,
                });
            }
        }
    }
    out
}

fn cp_chern_grid() -> Vec<Instance> {
    let mut out = Vec::new();
    for k in [3u64, 5] {
        for ell in 1.. {
            let pow = k.pow(ell);
            if pow > 125 {
                break;
            }
            for a in 2..=pow.div_ceil(2) {
                if k * (a - 1) > pow - 1 {
                    continue;
                }
                out.push(Instance {
                    source: ManifoldKind::ComplexProjective((pow - a) as u32),
                    target: ManifoldKind::Euclidean((2 * (pow - 2)) as u32),
                    k,
                    family: ClassFamily::Chern,
                });
            }
        }
    }
    out
}

fn all_hold(instances: &[Instance]) -> Outcome {
    if instances.is_empty() {
        return Outcome::new(false, "no admissible instances");
    }
    let failed: Vec<String> = instances
        .iter()
        .filter(|i| !i.check().holds())
        .map(Instance::label)
        .collect();
    match failed.first() {
        None => Outcome::new(
            true,
            format!("{} admissible instances hold", instances.len()),
        ),
        Some(first) => Outcome::new(
            false,
            format!(
                "{} of {} inconclusive, first {first}",
                failed.len(),
                instances.len()
            ),
        ),
    }
}

fn within(limit: Duration, start: Instant, outcome: Outcome) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Outcome::new(
            false,
            format!(
                "{} but took {elapsed:.2?} (limit {limit:?})",
                outcome.detail
            ),
        );
    }
    outcome
}

fn lmc() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lmc"));
    cmd.env_remove("LMC_THREADS");
    cmd
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    within(Duration::from_secs(5), start, all_hold(&rp_grid(false)))
}

fn criterion_2() -> Outcome {
    let euclid = rp_grid(false);
    let sphere = rp_grid(true);
    let base = all_hold(&sphere);
    if !base.passed {
        return base;
    }
    let mismatched = euclid
        .iter()
        .zip(&sphere)
        .filter(|(e, s)| {
            let (re, rs) = (e.check(), s.check());
            re.verdict != rs.verdict
                || re.witness_class != rs.witness_class
                || re.witness_s != rs.witness_s
        })
        .count();
    Outcome::new(
        mismatched == 0,
        format!(
            "{}; {mismatched} verdicts differ from the euclidean targets",
            base.detail
        ),
    )
}

fn criterion_3() -> Outcome {
    let instances = [(4, 6), (8, 14)].map(|(m, n)| Instance {
        source: ManifoldKind::RealProjective(m),
        target: ManifoldKind::Euclidean(n),
        k: 2,
        family: ClassFamily::StiefelWhitney,
    });
    all_hold(&instances)
}

fn criterion_4() -> Outcome {
    all_hold(&cp_sw_grid())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    within(Duration::from_secs(10), start, all_hold(&cp_chern_grid()))
}

fn criterion_6() -> Outcome {
    let mut instances = rp_grid(false);
    instances.extend(rp_grid(true));
    instances.extend(cp_sw_grid());
    instances.extend(cp_chern_grid());
    instances.extend([(4, 6), (8, 14)].map(|(m, n)| Instance {
        source: ManifoldKind::RealProjective(m),
        target: ManifoldKind::Euclidean(n),
        k: 2,
        family: ClassFamily::StiefelWhitney,
    }));
    let mut applicable = 0;
    for inst in &instances {
        let fast = match run_check(&inst.request(true)) {
            Ok(r) => r,
            Err(e) => return Outcome::new(false, format!("{}: {e}", inst.label())),
        };
        if !fast.holds() {
            continue;
        }
        applicable += 1;
        let p = match inst.family {
            ClassFamily::StiefelWhitney => Prime::TWO,
            ClassFamily::Chern => Prime::new(inst.k).unwrap(),
        };
        let source = inst.source.instantiate(inst.family, p).unwrap();
        let target = inst.target.instantiate(inst.family, p).unwrap();
        let (m, n) = match inst.family {
            ClassFamily::StiefelWhitney => (source.real_dimension, target.real_dimension),
            ClassFamily::Chern => (
                source.complex_dimension.unwrap(),
                target.complex_dimension.unwrap(),
            ),
        };
        let s = general_index_of_fast_witness(&fast, m, n).unwrap();
        let cls = StableDifferenceClass::from_source(&source, n, inst.k, None).unwrap();
        let general = cls.determinant_class(s).unwrap();
        if Some(&general) != fast.witness_class.as_ref() {
            return Outcome::new(
                false,
                format!(
                    "{}: fast {:?} vs determinant {general}",
                    inst.label(),
                    fast.witness_class
                ),
            );
        }
    }
    Outcome::new(
        applicable > 0,
        format!(
            "{applicable} of {} instances take the fast path, all bit-identical",
            instances.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut runs = 0;
    for m in [1u32, 3, 7] {
        for n in m + 1..=m + 12 {
            for k in [2u64, 4, 8, 16] {
                let out = lmc()
                    .args([
                        "check",
                        "--source",
                        &format!("rp:{m}"),
                        "--target",
                        &format!("euclidean:{n}"),
                    ])
                    .args(["--k", &k.to_string(), "--path", "sw"])
                    .output()
                    .unwrap();
                let text = String::from_utf8_lossy(&out.stdout);
                runs += 1;
                if out.status.code() != Some(2) || !text.contains(r#""verdict":"inconclusive""#) {
                    return Outcome::new(
                        false,
                        format!(
                            "rp:{m} -> euclidean:{n} k={k} gave {:?}: {text}",
                            out.status.code()
                        ),
                    );
                }
            }
        }
    }
    Outcome::new(true, format!("{runs} runs inconclusive with exit 2"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        let p = Prime::new(p).unwrap();
        for a in 1..=4 {
            for b in 1..=3 {
                cases += 1;
                if !dual_cauchy_check(a, b, p).unwrap() {
                    return Outcome::new(false, format!("A={a} B={b} p={p} differs"));
                }
            }
        }
    }
    within(
        Duration::from_secs(30),
        start,
        Outcome::new(true, format!("{cases} expansions agree")),
    )
}

fn criterion_9() -> Outcome {
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        let p = Prime::new(p).unwrap();
        for lambda in partitions_in_box(4, 3) {
            for nvars in 1..=4 {
                cases += 1;
                if schur_nk_expanded(&lambda, nvars, p) != schur_monomial_oracle(&lambda, nvars, p)
                {
                    return Outcome::new(false, format!("{lambda} in {nvars} variables mod {p}"));
                }
            }
        }
    }
    Outcome::new(
        true,
        format!("{cases} Schur functions agree with tableau sums"),
    )
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let (mut total, mut agree) = (0, 0);
    let mut first = None;
    for k in [3u64, 5] {
        for m in 1..=8u32 {
            let source = ManifoldKind::ComplexProjective(m)
                .instantiate(ClassFamily::Chern, Prime::new(k).unwrap())
                .unwrap();
            let r = dual_total_class(&source.total_class)
                .unwrap()
                .top_nonzero_index()
                .unwrap_or(0);
            for n in 1..=m + 1 {
                for m_prime in r.max(1)..=m {
                    let check = euler_crosscheck(&source, n, k, m_prime).unwrap();
                    total += 1;
                    if check.holds() {
                        agree += 1;
                    } else {
                        first.get_or_insert_with(|| {
                            format!(
                                "first cp:{m} k={k} n={n} m'={m_prime}, difference {}",
                                check.defect()
                            )
                        });
                    }
                }
            }
        }
    }
    let detail = match first {
        None => format!("{total} instances agree"),
        Some(f) => format!("{agree} of {total} instances agree; {f}"),
    };
    within(
        Duration::from_secs(60),
        start,
        Outcome::new(agree == total, detail),
    )
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn leibniz(m: &[Vec<GradedPoly>]) -> GradedPoly {
    let n = m.len();
    let mut acc = m[0][0].zero_like();
    for perm in (0..n).permutations(n) {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let term = (0..n).fold(m[0][0].one_like(), |t, i| t.times(&m[i][perm[i]]));
        acc = if inversions % 2 == 0 {
            acc.plus(&term)
        } else {
            acc.minus(&term)
        };
    }
    acc
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 101, 997];
    for _ in 0..1000 {
        let n = rng.gen_range(0..=2000u64);
        let r = rng.gen_range(0..=n);
        let p = primes[rng.gen_range(0..primes.len())];
        let exact = factorial(n) / (factorial(r) * factorial(n - r));
        let expected = (exact % p).to_u64().unwrap();
        let got = binom_mod_p(n, r, Prime::new(p).unwrap()).value();
        if got != expected {
            return Outcome::new(false, format!("C({n},{r}) mod {p}: {got} vs {expected}"));
        }
    }
    for case in 0..500 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let spec = RingSpec::new(p, rng.gen_range(1..=2), rng.gen_range(0..=8)).unwrap();
        let n = rng.gen_range(1..=6);
        let matrix: Vec<Vec<GradedPoly>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let dense: Vec<u64> = (0..=spec.truncation())
                            .map(|_| rng.gen_range(0..p))
                            .collect();
                        GradedPoly::from_dense(spec, &dense)
                    })
                    .collect()
            })
            .collect();
        if determinant(&matrix).unwrap() != leibniz(&matrix) {
            return Outcome::new(
                false,
                format!("determinant case {case} over {spec} differs"),
            );
        }
    }
    Outcome::new(
        true,
        "1000 binomials and 500 determinants agree with their oracles",
    )
}

fn atlas_bytes(
    dir: &Path,
    corollary: &str,
    ell: &str,
    k: &str,
    threads: &str,
) -> Result<Vec<u8>, String> {
    let file = dir.join(format!("{corollary}-{threads}.json"));
    let status = lmc()
        .args([
            "atlas",
            "--corollary",
            corollary,
            "--ell",
            ell,
            "--k",
            k,
            "--threads",
            threads,
            "--output",
        ])
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    if !status.status.success() {
        return Err(format!(
            "atlas {corollary} exited {:?}",
            status.status.code()
        ));
    }
    std::fs::read(&file).map_err(|e| e.to_string())
}

fn criterion_12() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let runs = [
        ("1.5", "2..5", "2,4,8,16"),
        ("1.6", "2..5", "2,4,8,16"),
        ("1.7", "1..4", "2,4,8"),
        ("1.8", "1..4", "3,5"),
    ];
    for (corollary, ell, k) in runs {
        let one = atlas_bytes(dir.path(), corollary, ell, k, "1");
        let eight = atlas_bytes(dir.path(), corollary, ell, k, "8");
        match (one, eight) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => {
                return Outcome::new(
                    false,
                    format!("atlas {corollary} differs between 1 and 8 threads"),
                )
            }
            (Err(e), _) | (_, Err(e)) => return Outcome::new(false, e),
        }
    }
    Outcome::new(true, "four atlases byte-identical at 1 and 8 threads")
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("real projective into euclidean grid", criterion_1),
        ("real projective into sphere grid", criterion_2),
        ("projective plane non-immersions at k = 2", criterion_3),
        ("complex projective grid, Stiefel-Whitney path", criterion_4),
        ("complex projective grid, Chern path", criterion_5),
        ("fast path agrees with the determinant", criterion_6),
        ("parallelizable sources are inconclusive", criterion_7),
        ("dual Cauchy identity", criterion_8),
        ("determinantal Schur functions vs tableaux", criterion_9),
        ("Chern Euler class cross-check", criterion_10),
        ("arithmetic oracles", criterion_11),
        ("atlas determinism", criterion_12),
    ];
    let mut stdout = std::io::stdout().lock();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Outcome::new(false, msg)
        });
        if !outcome.passed {
            failed += 1;
        }
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(
            stdout,
            "criterion {:>2} {status} {name}: {} [{:.2?}]",
            i + 1,
            outcome.detail,
            start.elapsed()
        );
    }
    let _ = writeln!(
        stdout,
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    drop(stdout);
    if failed > 0 {
        std::process::exit(1);
    }
}
