//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on
//! the rayon global pool; without it, every execution mode is sequential.
//! Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this mode will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Maps `f` over `lo..=hi`, preserving order.
pub fn map_range<R, F>(exec: Execution, lo: u64, hi: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (lo..=hi).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (lo..=hi).map(f).collect()
}

/// Values in `lo..=hi` satisfying `pred`, ascending.
pub fn filter_range<F>(exec: Execution, lo: u64, hi: u64, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (lo..=hi).into_par_iter().filter(|&n| pred(n)).collect();
    }
    let _ = exec;
    (lo..=hi).filter(|&n| pred(n)).collect()
}

/// First `n` in `lo..=hi` for which `f(n)` is `Some`, or `None`.
pub fn find_first<R, F>(exec: Execution, lo: u64, hi: u64, f: F) -> Option<(u64, R)>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (lo..=hi)
            .into_par_iter()
            .filter_map(|n| f(n).map(|r| (n, r)))
            .min_by_key(|(n, _)| *n);
    }
    let _ = exec;
    (lo..=hi).find_map(|n| f(n).map(|r| (n, r)))
}

/// Minimum of `f` over `lo..=hi` together with every argument attaining it,
/// ascending. `None` for an empty range.
pub fn argmin_range<F>(exec: Execution, lo: u64, hi: u64, f: F) -> Option<(i64, Vec<u64>)>
where
    F: Fn(u64) -> i64 + Sync + Send,
{
    if lo > hi {
        return None;
    }
    let values = map_range(exec, lo, hi, &f);
    let min = *values.iter().min()?;
    let args = values
        .iter()
        .zip(lo..=hi)
        .filter(|(v, _)| **v == min)
        .map(|(_, n)| n)
        .collect();
    Some((min, args))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(map_range(exec, 3, 7, |n| n * n), [9, 16, 25, 36, 49]);
            assert_eq!(map(exec, &[1, 2, 3], |x| x + 1), [2, 3, 4]);
            assert_eq!(filter_range(exec, 0, 20, |n| n % 7 == 0), [0, 7, 14]);
            assert_eq!(
                find_first(exec, 0, 1000, |n| (n > 500 && n % 3 == 0).then_some(n / 3)),
                Some((501, 167))
            );
            assert_eq!(
                argmin_range(exec, 0, 10, |n| (n as i64 - 5).abs() % 3),
                Some((0, vec![2, 5, 8]))
            );
            assert_eq!(argmin_range(exec, 5, 4, |n| n as i64), None);
        }
    }
}
