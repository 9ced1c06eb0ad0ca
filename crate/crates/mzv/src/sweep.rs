//! Parallel verification sweeps and the parallel explorer.

use anyhow::Result;
use mzv_core::lab::cases::{cases, Bounds, Case, Outcome, Suite};
use mzv_core::lab::explorer::{explore_with, ExplorerReport, Triple};
use mzv_core::Expander;
use rayon::prelude::*;
use rayon::ThreadPool;

pub fn pool(jobs: usize) -> Result<ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?)
}

/// Every case of `suite` with its outcomes, in enumeration order. Each
/// worker owns its own expander.
pub fn run_cases(pool: &ThreadPool, list: Vec<Case>, bounds: &Bounds) -> Vec<(Case, Vec<Outcome>)> {
    pool.install(|| {
        list.into_par_iter()
            .map_init(Expander::new, |ex, c| {
                let out = c.run(bounds, ex);
                (c, out)
            })
            .collect()
    })
}

pub fn run_suite(pool: &ThreadPool, suite: Suite, bounds: &Bounds) -> Result<Vec<(Case, Vec<Outcome>)>> {
    let list = cases(suite, bounds, &mut Expander::new())?;
    Ok(run_cases(pool, list, bounds))
}

pub fn explore(pool: &ThreadPool, k: u32, budget: usize) -> Result<ExplorerReport> {
    let chunk = 16 * pool.current_num_threads();
    let report = explore_with(k, budget, chunk, |ts| {
        pool.install(|| ts.par_iter().map(Triple::generate).collect())
    })?;
    Ok(report)
}
