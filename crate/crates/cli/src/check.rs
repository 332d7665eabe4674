//! A single criterion check between two manifolds.

use std::path::{Path, PathBuf};

use lmc_core::criteria::{
    check_local_multiplicity, fast_path, target_dimension, validate_k, CriterionReport,
};
use lmc_core::fpring::Prime;
use lmc_core::manifolds::{parse_manifold_spec, parse_total_class, ClassFamily, ManifoldRef};

use crate::{read_file, CliError, CliResult};

#[derive(Debug, Clone)]
pub struct CheckRequest {
    /// Shorthand such as `rp:13`, or a path to a JSON specification.
    pub source: String,
    pub target: String,
    pub k: u64,
    pub family: ClassFamily,
    pub pullback: Option<PathBuf>,
    pub fast_path: bool,
}

/// Resolves a manifold argument: shorthand first, then a spec file.
pub fn load_manifold(arg: &str) -> CliResult<ManifoldRef> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return Ok(parse_manifold_spec(trimmed)?);
    }
    let path = Path::new(trimmed);
    if path.is_file() {
        return Ok(parse_manifold_spec(&read_file(path)?)?);
    }
    Ok(parse_manifold_spec(trimmed)?)
}

fn coefficient_field(family: ClassFamily, k: u64) -> CliResult<Prime> {
    validate_k(k, family)?;
    Ok(match family {
        ClassFamily::StiefelWhitney => Prime::TWO,
        ClassFamily::Chern => Prime::new(k)?,
    })
}

pub fn run_check(req: &CheckRequest) -> CliResult<CriterionReport> {
    let p = coefficient_field(req.family, req.k)?;
    let source = load_manifold(&req.source)?.resolve(req.family, p)?;
    let target = load_manifold(&req.target)?.resolve(req.family, p)?;
    if req.fast_path {
        if req.pullback.is_some() {
            return Err(CliError::Usage(
                "--fast-path treats the target as parallelizable and takes no pullback".into(),
            ));
        }
        if !target.kind.has_trivial_tangent_class() {
            return Err(CliError::Usage(format!(
                "--fast-path needs a target with trivial tangent classes, got {}",
                target.label()
            )));
        }
        let n = target_dimension(&target, req.family)?;
        return Ok(fast_path(&source, n, req.k)?);
    }
    let pullback = match &req.pullback {
        Some(path) => Some(parse_total_class(
            &read_file(path)?,
            *source.ring(),
            req.family,
        )?),
        None => None,
    };
    Ok(check_local_multiplicity(
        &source,
        &target,
        req.k,
        req.family,
        pullback.as_ref(),
    )?)
}
