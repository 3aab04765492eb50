//! Exhaustive enumeration over finite tuple spaces.
//!
//! Tuples are indexed in lexicographic order (first coordinate most
//! significant), so "first match" always means the lexicographically smallest
//! witness, whether the search runs on rayon or sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest arity any checker enumerates.
pub const MAX_ARITY: usize = 8;

/// All `arity`-tuples over `{0, .., base-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSpace {
    base: usize,
    arity: usize,
}

impl TupleSpace {
    pub fn new(base: usize, arity: usize) -> Self {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        TupleSpace { base, arity }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of tuples, or `None` on overflow.
    pub fn checked_len(&self) -> Option<u64> {
        (self.base as u64).checked_pow(self.arity as u32)
    }

    pub fn len(&self) -> u64 {
        self.checked_len().unwrap_or(u64::MAX)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the tuple with lexicographic rank `index` into `out[..arity]`.
    pub fn decode(&self, mut index: u64, out: &mut [usize]) {
        let b = self.base as u64;
        for slot in out[..self.arity].iter_mut().rev() {
            *slot = (index % b) as usize;
            index /= b;
        }
    }

    pub fn encode(&self, tuple: &[usize]) -> u64 {
        tuple
            .iter()
            .fold(0u64, |acc, &t| acc * self.base as u64 + t as u64)
    }
}

/// Sequential search for the first index in `0..count` where `f` yields `Some`.
pub fn first_match_seq<T, F>(count: u64, f: F) -> Option<T>
where
    F: Fn(u64) -> Option<T>,
{
    (0..count).find_map(f)
}

/// Parallel search; returns the same (smallest-index) match as the sequential one.
#[cfg(feature = "parallel")]
pub fn first_match_par<T, F>(count: u64, f: F) -> Option<T>
where
    F: Fn(u64) -> Option<T> + Sync + Send,
    T: Send,
{
    (0..count).into_par_iter().find_map_first(f)
}

pub fn first_match<T, F>(count: u64, f: F) -> Option<T>
where
    F: Fn(u64) -> Option<T> + Sync + Send,
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        first_match_par(count, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_match_seq(count, f)
    }
}

/// First tuple of `space` (in lexicographic order) on which `f` yields `Some`.
pub fn first_tuple_match<T, F>(space: TupleSpace, f: F) -> Option<T>
where
    F: Fn(&[usize]) -> Option<T> + Sync + Send,
    T: Send,
{
    first_match(space.len(), |i| {
        let mut buf = [0usize; MAX_ARITY];
        space.decode(i, &mut buf);
        f(&buf[..space.arity])
    })
}

pub fn first_tuple_match_seq<T, F>(space: TupleSpace, f: F) -> Option<T>
where
    F: Fn(&[usize]) -> Option<T>,
{
    first_match_seq(space.len(), |i| {
        let mut buf = [0usize; MAX_ARITY];
        space.decode(i, &mut buf);
        f(&buf[..space.arity])
    })
}

#[cfg(feature = "parallel")]
pub fn first_tuple_match_par<T, F>(space: TupleSpace, f: F) -> Option<T>
where
    F: Fn(&[usize]) -> Option<T> + Sync + Send,
    T: Send,
{
    first_match_par(space.len(), |i| {
        let mut buf = [0usize; MAX_ARITY];
        space.decode(i, &mut buf);
        f(&buf[..space.arity])
    })
}

/// Number of indices in `0..count` satisfying `pred`.
pub fn count_matching<F>(count: u64, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().filter(|&i| pred(i)).count() as u64
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).filter(|&i| pred(i)).count() as u64
    }
}

/// Maps `f` over a slice, in parallel when enabled, preserving order.
pub fn map_collect<A, B, F>(items: &[A], f: F) -> Vec<B>
where
    A: Sync,
    B: Send,
    F: Fn(&A) -> B + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_is_lexicographic() {
        let s = TupleSpace::new(3, 2);
        let mut out = [0; 2];
        let all: Vec<[usize; 2]> = (0..s.len())
            .map(|i| {
                s.decode(i, &mut out);
                out
            })
            .collect();
        assert_eq!(all[0], [0, 0]);
        assert_eq!(all[1], [0, 1]);
        assert_eq!(all[3], [1, 0]);
        assert_eq!(all[8], [2, 2]);
        for (i, t) in all.iter().enumerate() {
            assert_eq!(s.encode(t), i as u64);
        }
    }

    #[test]
    fn first_match_is_smallest() {
        let hit = first_match(10_000, |i| (i % 97 == 13 && i > 500).then_some(i));
        assert_eq!(hit, Some(595));
        assert_eq!(first_match_seq(10_000, |i| (i % 97 == 13 && i > 500).then_some(i)), Some(595));
        assert_eq!(first_match(0, Some), None);
    }

    #[test]
    fn counts() {
        assert_eq!(count_matching(100, |i| i % 10 == 0), 10);
        assert_eq!(TupleSpace::new(21, 7).checked_len(), Some(1_801_088_541));
        assert_eq!(TupleSpace::new(1 << 20, 8).checked_len(), None);
    }
}
