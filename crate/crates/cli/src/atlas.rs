//! Sweeps of corollary parameter grids.

use std::fmt::Write as _;
use std::time::Instant;

use lmc_core::criteria::{Corollary, CorollaryInstance, ReportDocument};
use rayon::prelude::*;
use serde::Serialize;

use crate::{CliError, CliResult};

/// Default `a` values are capped so a careless `--ell` cannot explode.
const DEFAULT_A_LIMIT: u64 = 4096;

#[derive(Debug, Clone)]
pub struct AtlasRequest {
    pub corollary: Corollary,
    pub ells: Vec<u32>,
    pub ks: Vec<u64>,
    /// Explicit `a` values; by default every `a` up to one past the largest
    /// value the corollary's inequalities allow.
    pub a_values: Option<Vec<u64>>,
    pub timings: bool,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasEntry {
    pub a: u64,
    pub ell: u32,
    pub k: u64,
    pub source: String,
    pub target: String,
    pub report: ReportDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inadmissible {
    pub a: u64,
    pub ell: u32,
    pub k: u64,
    pub violation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Atlas {
    pub corollary: String,
    pub name: String,
    pub entries: Vec<AtlasEntry>,
    pub inadmissible: Vec<Inadmissible>,
}

impl Atlas {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("atlas serializes");
        text.push('\n');
        text
    }

    /// Entries whose verdict is not `criterion_holds`.
    pub fn failures(&self) -> impl Iterator<Item = &AtlasEntry> {
        self.entries
            .iter()
            .filter(|e| e.report.verdict != "criterion_holds")
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>5} {:>3} {:>4}  {:<26} {:<16} {:>3}  class",
            "a", "l", "k", "source -> target", "verdict", "s"
        );
        for e in &self.entries {
            let pair = format!("{} -> {}", e.source, e.target);
            let s = e
                .report
                .s
                .map_or_else(|| "-".to_string(), |s| s.to_string());
            let _ = writeln!(
                out,
                "{:>5} {:>3} {:>4}  {:<26} {:<16} {:>3}  {}",
                e.a,
                e.ell,
                e.k,
                pair,
                e.report.verdict,
                s,
                e.report.class.as_deref().unwrap_or("-")
            );
        }
        let _ = writeln!(
            out,
            "{} admissible, {} hold, {} inadmissible",
            self.entries.len(),
            self.entries.len() - self.failures().count(),
            self.inadmissible.len()
        );
        out
    }
}

/// One past the largest `a` the corollary's `k`-inequality allows, so the
/// sweep also shows where admissibility stops.
pub fn default_a_bound(corollary: Corollary, ell: u32, k: u64) -> u64 {
    let base = match corollary {
        Corollary::CpEuclideanChern => k,
        _ => 2,
    };
    let Some(pow) = base.checked_pow(ell) else {
        return 1;
    };
    let k = k.max(1);
    let bound = match corollary {
        // k(a+1) <= 2^l - 1
        Corollary::RpEuclidean | Corollary::RpSphere => ((pow - 1) / k).saturating_sub(1),
        // k(a-1) <= 2^l - 1, k(a-1) <= k^l - 1
        Corollary::CpEuclideanSw | Corollary::CpEuclideanChern => (pow - 1) / k + 1,
    };
    (bound + 1).clamp(1, DEFAULT_A_LIMIT)
}

fn triples(req: &AtlasRequest) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for &ell in &req.ells {
        for &k in &req.ks {
            match &req.a_values {
                Some(values) => out.extend(values.iter().map(|&a| (a, ell, k))),
                None => {
                    out.extend((1..=default_a_bound(req.corollary, ell, k)).map(|a| (a, ell, k)))
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

enum Outcome {
    Entry(AtlasEntry),
    Rejected(Inadmissible),
}

fn evaluate(
    corollary: Corollary,
    (a, ell, k): (u64, u32, u64),
    timings: bool,
) -> CliResult<Outcome> {
    let instance = CorollaryInstance::new(corollary, a, ell, k);
    let (source, target) = match instance.manifolds() {
        Ok(pair) => pair,
        Err(e) => {
            return Ok(Outcome::Rejected(Inadmissible {
                a,
                ell,
                k,
                violation: e.to_string(),
            }))
        }
    };
    let start = Instant::now();
    let report = instance.evaluate()?;
    let wall_time_ms = timings.then(|| start.elapsed().as_millis() as u64);
    Ok(Outcome::Entry(AtlasEntry {
        a,
        ell,
        k,
        source: source.to_string(),
        target: target.to_string(),
        report: report.document(),
        wall_time_ms,
    }))
}

/// Evaluates every triple in parallel and assembles the atlas in key order.
pub fn build_atlas(req: &AtlasRequest) -> CliResult<Atlas> {
    let keys = triples(req);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(req.threads.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    let outcomes: Vec<CliResult<Outcome>> = pool.install(|| {
        keys.par_iter()
            .map(|&key| evaluate(req.corollary, key, req.timings))
            .collect()
    });
    let mut entries = Vec::new();
    let mut inadmissible = Vec::new();
    for outcome in outcomes {
        match outcome? {
            Outcome::Entry(e) => entries.push(e),
            Outcome::Rejected(r) => inadmissible.push(r),
        }
    }
    entries.sort_by_key(|e| (e.a, e.ell, e.k));
    inadmissible.sort_by_key(|r| (r.a, r.ell, r.k));
    Ok(Atlas {
        corollary: req.corollary.id().to_string(),
        name: req.corollary.name().to_string(),
        entries,
        inadmissible,
    })
}
