//! Execution mode for the data-parallel kernels.
//!
//! With the `parallel` feature (on by default) the kernels run on the
//! rayon pool; without it, or with [`ExecMode::Sequential`], they run on
//! the calling thread. Both paths produce identical results.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

/// Maps `f` over `0..len`, keeping index order.
pub fn map_range<T, F>(mode: ExecMode, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..len).map(f).collect()
}

/// Maps `f` over a slice, keeping order.
pub fn map_slice<S, T, F>(mode: ExecMode, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Sorts and deduplicates.
pub fn sort_dedup<T: Ord + Send>(mode: ExecMode, v: &mut Vec<T>) {
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        v.par_sort_unstable();
        v.dedup();
        return;
    }
    let _ = mode;
    v.sort_unstable();
    v.dedup();
}

/// First index in `0..len` (in index order) where `f` returns `Some`.
pub fn find_first<T, F>(mode: ExecMode, len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().find_map_first(f);
    }
    let _ = mode;
    (0..len).find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            assert_eq!(map_range(mode, 5, |i| i * i), vec![0, 1, 4, 9, 16]);
            let mut v = vec![3, 1, 3, 2];
            sort_dedup(mode, &mut v);
            assert_eq!(v, vec![1, 2, 3]);
            assert_eq!(find_first(mode, 100, |i| (i % 7 == 6).then_some(i)), Some(6));
        }
    }
}
