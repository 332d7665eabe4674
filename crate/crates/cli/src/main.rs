use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lmc_core::criteria::Corollary;
use lmc_core::manifolds::ClassFamily;
use lmc_tool::atlas::{build_atlas, AtlasRequest};
use lmc_tool::check::{run_check, CheckRequest};
use lmc_tool::ranges::parse_values;
use lmc_tool::verify::{run_verify, Identity, VerifyRequest};
use lmc_tool::{exit_code, thread_budget, CliError, CliResult};

/// Determinant criteria for local k-multiplicity of maps between manifolds.
#[derive(Debug, Parser)]
#[command(name = "lmc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one criterion; exits 0 if it holds, 2 if inconclusive, 1 on error.
    Check {
        /// Source manifold: rp:M, cp:M, sphere:N, parallelizable:N, or a JSON spec file.
        #[arg(long)]
        source: String,
        /// Target manifold, same forms as the source plus euclidean:N.
        #[arg(long)]
        target: String,
        #[arg(long)]
        k: u64,
        /// Class family: sw (k a power of 2) or chern (k an odd prime).
        #[arg(long, value_parser = parse_family)]
        path: ClassFamily,
        /// JSON file with the total class of the pulled-back target tangent bundle.
        #[arg(long)]
        pullback: Option<PathBuf>,
        /// Use the top-dual-class shortcut; the target must be parallelizable.
        #[arg(long)]
        fast_path: bool,
    },
    /// Sweep a corollary's parameter grid and write an atlas.
    Atlas {
        /// rp-euclidean, rp-sphere, cp-euclidean-sw, cp-euclidean-chern (or 1.5 to 1.8).
        #[arg(long, value_parser = parse_corollary)]
        corollary: Corollary,
        /// Values of l, e.g. 2..4 or 2,3,5.
        #[arg(long)]
        ell: String,
        /// Values of k.
        #[arg(long)]
        k: String,
        /// Values of a; defaults to every a up to where admissibility ends.
        #[arg(long)]
        a: Option<String>,
        /// Write the atlas JSON here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Include per-entry wall times (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Check a symmetric-function identity over a range of sizes.
    Verify {
        /// dual-cauchy, nk-schur or euler-crosscheck.
        identity: String,
        #[arg(long, default_value_t = 4)]
        max_a: usize,
        #[arg(long, default_value_t = 3)]
        max_b: usize,
        /// Primes for dual-cauchy and nk-schur.
        #[arg(long, default_value = "2,3,5")]
        p: String,
        /// Largest m for euler-crosscheck.
        #[arg(long, default_value_t = 8)]
        m: u32,
        /// Odd primes k for euler-crosscheck.
        #[arg(long, default_value = "3,5")]
        k: String,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn parse_family(s: &str) -> Result<ClassFamily, String> {
    s.parse().map_err(|e: lmc_core::Error| e.to_string())
}

fn parse_corollary(s: &str) -> Result<Corollary, String> {
    s.parse().map_err(|e: lmc_core::Error| e.to_string())
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Check {
            source,
            target,
            k,
            path,
            pullback,
            fast_path,
        } => {
            let report = run_check(&CheckRequest {
                source,
                target,
                k,
                family: path,
                pullback,
                fast_path,
            })?;
            println!("{}", report.to_json());
            Ok(exit_code(&report) as u8)
        }
        Command::Atlas {
            corollary,
            ell,
            k,
            a,
            output,
            threads,
            timings,
        } => {
            let req = AtlasRequest {
                corollary,
                ells: parse_values(&ell)?,
                ks: parse_values(&k)?,
                a_values: a.as_deref().map(parse_values).transpose()?,
                timings,
                threads: thread_budget(threads),
            };
            let atlas = build_atlas(&req)?;
            if atlas.entries.is_empty() {
                eprintln!("warning: no admissible parameters in the requested ranges");
            }
            let json = atlas.to_json();
            match &output {
                Some(path) => {
                    std::fs::write(path, &json).map_err(|source| CliError::Write {
                        path: path.clone(),
                        source,
                    })?;
                    print!("{}", atlas.summary_table());
                }
                None => {
                    print!("{json}");
                    eprint!("{}", atlas.summary_table());
                }
            }
            let failures = atlas.failures().count();
            if failures > 0 {
                eprintln!("error: {failures} admissible entries did not hold");
                return Ok(1);
            }
            Ok(0)
        }
        Command::Verify {
            identity,
            max_a,
            max_b,
            p,
            m,
            k,
            threads,
        } => {
            let identity: Identity = identity.parse()?;
            let req = VerifyRequest {
                identity,
                max_a,
                max_b,
                primes: parse_values(&p)?,
                max_m: m,
                ks: parse_values(&k)?,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(thread_budget(threads))
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let results = pool.install(|| run_verify(&req))?;
            let mut out = std::io::stdout().lock();
            for r in &results {
                let _ = writeln!(out, "{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let _ = writeln!(
                out,
                "{identity}: {} passed, {failed} failed",
                results.len() - failed
            );
            Ok(u8::from(failed > 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
