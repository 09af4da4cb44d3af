//! Deterministic data-parallel helpers.
//!
//! With the `parallel` feature, [`Mode::Parallel`] runs on the rayon pool;
//! without it every mode runs sequentially. Joins keep input order, so
//! results never depend on scheduling.

/// Execution mode for searches and sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// The first `Some` result in input order.
pub fn find_map_first<T, R, F>(mode: Mode, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Mode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().find_map_first(f);
    }
    let _ = mode;
    items.iter().find_map(f)
}

/// Maps every item, preserving input order.
pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Mode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Runs `f` on a pool of `jobs` threads when `jobs > 0`, else on the global pool.
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        return pool.install(f);
    }
    let _ = jobs;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_hit_is_schedule_independent() {
        let items: Vec<u32> = (0..1000).collect();
        for mode in [Mode::Sequential, Mode::Parallel] {
            let r = find_map_first(mode, &items, |&x| (x % 97 == 96).then_some(x));
            assert_eq!(r, Some(96));
            assert_eq!(map(mode, &items[..3], |&x| x * 2), vec![0, 2, 4]);
        }
    }
}
