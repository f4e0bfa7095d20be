//! Row scheduling.  Results always come back in index order, so the caller's
//! fold is the same whichever schedule produced them.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub enum Schedule {
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}


pub fn map_range<T, F>(lo: usize, hi: usize, schedule: Schedule, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match schedule {
        Schedule::Sequential => (lo..hi).map(f).collect(),
        #[cfg(feature = "parallel")]
        Schedule::Parallel => {
            use rayon::prelude::*;
            (lo..hi).into_par_iter().map(f).collect()
        }
    }
}
