//! Parallel census driver: one odd Frobenius value per task, a shared work
//! queue, and a deterministic merge. Results are identical at any
//! parallelism degree, including 1.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use cyclosemi_core::enumeration::{
    census_slice, census_table, merge_slices, CensusReport, ConjectureSet, FrobeniusSlice,
};
use cyclosemi_core::Result;

/// Worker count from `CYCLOSEMI_JOBS`, falling back to the machine's
/// available parallelism.
pub fn default_jobs() -> usize {
    std::env::var("CYCLOSEMI_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs the census over all odd Frobenius values up to `frobenius_max`,
/// skipping the `precomputed` slices (from a checkpoint) and invoking
/// `on_slice` as each fresh slice completes. Larger values are scheduled
/// first, since they dominate the runtime.
pub fn run_census(
    frobenius_max: u64,
    jobs: usize,
    conjectures: ConjectureSet,
    precomputed: Vec<FrobeniusSlice>,
    mut on_slice: impl FnMut(&FrobeniusSlice),
) -> Result<CensusReport> {
    let jobs = jobs.max(1);
    let table = census_table(frobenius_max)?;
    let done: BTreeSet<u64> = precomputed.iter().map(|s| s.frobenius).collect();
    let mut pending: Vec<u64> =
        (1..=frobenius_max).step_by(2).filter(|f| !done.contains(f)).collect();
    pending.reverse();

    let mut slices = precomputed;
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<Result<FrobeniusSlice>>();
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(pending.len().max(1)) {
            let tx = tx.clone();
            let pending = &pending;
            let table = &table;
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&f) = pending.get(i) else { break };
                if tx.send(census_slice(f, table, &conjectures)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut first_error = None;
        for result in rx {
            match result {
                Ok(slice) => {
                    on_slice(&slice);
                    slices.push(slice);
                }
                Err(e) => first_error = first_error.or(Some(e)),
            }
        }
        match first_error {
            Some(e) => Err(e),
            None => Ok(merge_slices(frobenius_max, slices, &conjectures)),
        }
    })
}
