//! A tiny work-stealing map for batch runs: applies a function to every
//! item on up to `jobs` threads and returns results in input order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Runs `f(index, item)` over all items on up to `jobs` threads. Results
/// come back ordered by input index regardless of completion order.
pub fn run_indexed<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(i, &items[i]);
                slots.lock().expect("batch results poisoned")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("batch results poisoned")
        .into_iter()
        .map(|slot| slot.expect("worker skipped an item"))
        .collect()
}
