//! Minimal work distribution over scoped threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Environment variable overriding the worker thread count.
pub const WORKERS_ENV: &str = "INFLUENCE_GAMES_WORKERS";

/// Worker count from [`WORKERS_ENV`], falling back to the machine's
/// available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Runs `job(k)` for every `k < jobs` on up to `workers` threads and returns
/// the results in job order.
pub(crate) fn map_jobs<T, F>(jobs: usize, workers: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = workers.clamp(1, jobs.max(1));
    if workers == 1 {
        return (0..jobs).map(job).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<T>>> = (0..jobs).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= jobs {
                    break;
                }
                let out = job(k);
                *slots[k].lock().unwrap() = Some(out);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("job result"))
        .collect()
}

/// Applies `job(k, chunk)` to each mutable chunk on up to `workers` threads.
pub(crate) fn for_each_chunk<T, F>(chunks: Vec<&mut [T]>, workers: usize, job: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    let workers = workers.clamp(1, chunks.len().max(1));
    if workers == 1 {
        for (k, c) in chunks.into_iter().enumerate() {
            job(k, c);
        }
        return;
    }
    let queue = Mutex::new(chunks.into_iter().enumerate().collect::<Vec<_>>());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let item = queue.lock().unwrap().pop();
                match item {
                    Some((k, c)) => job(k, c),
                    None => break,
                }
            });
        }
    });
}
