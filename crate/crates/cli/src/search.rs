//! Parallel driver for the counterexample search.
//!
//! The sequence space is partitioned by `d_1`; each worker scans its slice in
//! lexicographic order and the slices are concatenated in `d_1` order, which
//! reproduces the sequential result exactly.

use std::env;

use purecone_core::obstruction::{
    evaluate_sequence, CanonicalSequences, SearchFinding, SearchParams,
};
use rayon::prelude::*;

use crate::error::CliError;

pub const THREADS_VAR: &str = "PURECONE_THREADS";

/// Thread count from `PURECONE_THREADS`, or `None` for rayon's default.
pub fn threads_from_env() -> Result<Option<usize>, CliError> {
    match env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Input(format!("{THREADS_VAR} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub scanned: u64,
    pub findings: Vec<SearchFinding>,
}

fn scan_slice(params: &SearchParams, d1: i64) -> Result<(u64, Vec<SearchFinding>), CliError> {
    let mut scanned = 0;
    let mut found = Vec::new();
    for d in CanonicalSequences::with_first_step(params.n, params.d_max, d1) {
        scanned += 1;
        if let Some(f) = evaluate_sequence(&d, &params.targets, params.options)? {
            found.push(f);
        }
    }
    Ok((scanned, found))
}

pub fn run_search(params: &SearchParams, threads: Option<usize>) -> Result<SearchOutcome, CliError> {
    params.validate()?;
    let first_steps: Vec<i64> = (1..=params.d_max - (params.n as i64 - 1)).collect();
    let work = || -> Result<Vec<(u64, Vec<SearchFinding>)>, CliError> {
        first_steps.par_iter().map(|&d1| scan_slice(params, d1)).collect()
    };
    let slices = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Input(format!("cannot start {n} threads: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mut outcome = SearchOutcome { scanned: 0, findings: Vec::new() };
    for (scanned, found) in slices {
        outcome.scanned += scanned;
        outcome.findings.extend(found);
    }
    Ok(outcome)
}
