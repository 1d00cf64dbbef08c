//! Threaded candidate search for recognition.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use dtgraph_core::recognition::{CandidateOutcome, CandidateSearch};

pub const THREADS_VAR: &str = "DTGRAPHS_THREADS";

/// Available parallelism, capped by `DTGRAPHS_THREADS` when it holds a positive integer.
pub fn worker_count() -> usize {
    let available = thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var(THREADS_VAR).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(cap) if cap > 0 => available.min(cap),
        _ => available,
    }
}

/// Workers claim candidates in ascending order. Once some `p` succeeds no
/// larger candidate is started, and the result is cut after the lowest
/// success, so the output matches a sequential run.
#[derive(Debug, Clone, Copy)]
pub struct Threaded {
    threads: usize,
}

impl Threaded {
    pub fn new(threads: usize) -> Self {
        Threaded { threads: threads.max(1) }
    }

    pub fn from_env() -> Self {
        Threaded::new(worker_count())
    }

    pub fn threads(&self) -> usize {
        self.threads
    }
}

impl CandidateSearch for Threaded {
    fn run(&self, count: usize, eval: &(dyn Fn(usize) -> CandidateOutcome + Sync)) -> Vec<CandidateOutcome> {
        let next = AtomicUsize::new(0);
        let best = AtomicUsize::new(usize::MAX);
        let slots: Vec<Mutex<Option<CandidateOutcome>>> = (0..count).map(|_| Mutex::new(None)).collect();
        thread::scope(|s| {
            for _ in 0..self.threads.min(count) {
                s.spawn(|| loop {
                    let p = next.fetch_add(1, Ordering::SeqCst);
                    if p >= count || p > best.load(Ordering::SeqCst) {
                        break;
                    }
                    let outcome = eval(p);
                    if outcome.is_ok() {
                        best.fetch_min(p, Ordering::SeqCst);
                    }
                    *slots[p].lock().unwrap() = Some(outcome);
                });
            }
        });
        // every candidate up to the lowest success was claimed before it, hence evaluated
        let keep = best.into_inner().saturating_add(1).min(count);
        slots
            .into_iter()
            .take(keep)
            .map(|slot| slot.into_inner().unwrap().expect("claimed candidates are evaluated"))
            .collect()
    }
}
