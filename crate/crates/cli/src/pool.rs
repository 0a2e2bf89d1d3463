//! Order-preserving parallel map: workers process jobs independently, the
//! sink receives results in input order regardless of scheduling.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::mpsc;
use std::sync::Mutex;

/// Apply `work` to every job and feed results to `sink` in input order.
/// `sink` returns false to stop early (fail-fast); remaining in-flight jobs
/// are discarded.
pub fn ordered_map<T, R, I, W, S>(jobs: I, workers: usize, work: W, mut sink: S)
where
    T: Send,
    R: Send,
    I: Iterator<Item = T> + Send,
    W: Fn(T) -> R + Sync,
    S: FnMut(R) -> bool,
{
    let workers = workers.max(1);
    if workers == 1 {
        for job in jobs {
            if !sink(work(job)) {
                return;
            }
        }
        return;
    }

    let feed = Mutex::new(jobs.enumerate());
    let stop = AtomicBool::new(false);
    let (tx, rx) = mpsc::sync_channel::<(usize, R)>(workers * 4);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let feed = &feed;
            let stop = &stop;
            let work = &work;
            scope.spawn(move || loop {
                if stop.load(Ordering::Relaxed) {
                    return;
                }
                let job = feed.lock().unwrap().next();
                let Some((seq, item)) = job else { return };
                if tx.send((seq, work(item))).is_err() {
                    return;
                }
            });
        }
        drop(tx);

        let mut buffer: BTreeMap<usize, R> = BTreeMap::new();
        let mut next = 0usize;
        for (seq, result) in rx {
            buffer.insert(seq, result);
            while let Some(result) = buffer.remove(&next) {
                next += 1;
                if !sink(result) {
                    stop.store(true, Ordering::Relaxed);
                    return;
                }
            }
        }
        debug_assert!(buffer.is_empty(), "sequence numbers are contiguous");
    });
}
