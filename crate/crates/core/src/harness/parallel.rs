use rayon::prelude::*;

use crate::rng::RngStream;

/// Replicates per work unit. Units are folded sequentially and merged in
/// index order, so results do not depend on the number of threads.
const CHUNK: u64 = 256;

/// Folds `samples` replicates into an accumulator. Replicate `i` draws
/// from `RngStream::new(seed, i)`.
pub fn replicate_fold<A, I, F, M>(
    seed: u64,
    samples: u64,
    threads: usize,
    init: I,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &mut RngStream) + Sync + Send,
    M: Fn(&mut A, A) + Sync + Send,
{
    replicate_fold_indexed(
        seed,
        samples,
        threads,
        init,
        |acc, _, rng| fold(acc, rng),
        merge,
    )
}

/// [`replicate_fold`] with the replicate index passed to `fold`.
pub fn replicate_fold_indexed<A, I, F, M>(
    seed: u64,
    samples: u64,
    threads: usize,
    init: I,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, u64, &mut RngStream) + Sync + Send,
    M: Fn(&mut A, A) + Sync + Send,
{
    let chunks = samples.div_ceil(CHUNK);
    let run = || {
        let parts: Vec<A> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = init();
                for i in c * CHUNK..((c + 1) * CHUNK).min(samples) {
                    let mut rng = RngStream::new(seed, i);
                    fold(&mut acc, i, &mut rng);
                }
                acc
            })
            .collect();
        let mut total = init();
        for p in parts {
            merge(&mut total, p);
        }
        total
    };
    with_threads(threads, run)
}

/// One value per replicate, in replicate order.
pub fn replicate_map<T, F>(seed: u64, samples: u64, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut RngStream) -> T + Sync + Send,
{
    with_threads(threads, || {
        (0..samples)
            .into_par_iter()
            .map(|i| f(&mut RngStream::new(seed, i)))
            .collect()
    })
}

/// Runs `f` on a pool of `threads` workers; `0` means one per core.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use rand::RngCore;

    use super::*;

    #[test]
    fn thread_count_does_not_matter() {
        let run = |threads| {
            replicate_fold(
                42,
                1000,
                threads,
                Vec::new,
                |v: &mut Vec<u64>, rng| v.push(rng.next_u64()),
                |a, b| a.extend(b),
            )
        };
        let one = run(1);
        assert_eq!(one.len(), 1000);
        assert_eq!(one, run(3));
        assert_eq!(one[7], RngStream::new(42, 7).next_u64());
        let mapped = replicate_map(42, 1000, 2, |rng| rng.next_u64());
        assert_eq!(one, mapped);
    }
}
