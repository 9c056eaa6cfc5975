//! Exhaustive generators, closed-form counting, histograms, step-set
//! restriction, and uniform sampling.
//!
//! All generators are lazy, deterministic, and emit in lexicographic order.
//! Counting uses arbitrary-width integers throughout; the binomial products
//! overflow 64 bits long before the spaces become enumerable.

mod counting;
mod histogram;
mod sampling;
mod stepset;

pub use counting::{
    binomial, catalan, count_closed_form, path_space_size, pointed_space_size, CountKind,
};
pub use histogram::{histogram, step_set_histogram, Distribution, Statistic};
pub use sampling::{random_path, uniform_sample, uniform_sample_with, PointedStatistic};
pub use stepset::{enumerate_step_set_paths, StepSet, StepSetPaths};

use num_bigint::BigUint;
use thiserror::Error;

use crate::path::{LatticePath, Step};
use crate::pointed::PointedLatticePath;

/// Default ceiling on the number of items an exhaustive run may touch.
/// Beyond it the engine refuses up front instead of thrashing.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("invalid range: {reason}")]
    InvalidRange { reason: String },
    #[error("exact count {total} is not divisible by {divisor}")]
    NonDivisible { total: BigUint, divisor: u64 },
    #[error("space of {size} items exceeds the enumeration cap of {cap}")]
    CapExceeded { size: BigUint, cap: u64 },
}

impl EnumerationError {
    fn invalid(reason: impl Into<String>) -> Self {
        EnumerationError::InvalidRange {
            reason: reason.into(),
        }
    }
}

fn require_order_and_length(n: usize, m: i64) -> Result<(), EnumerationError> {
    if n < 1 {
        return Err(EnumerationError::invalid(format!(
            "n = {n} must be at least 1"
        )));
    }
    if m < n as i64 + 1 {
        return Err(EnumerationError::invalid(format!(
            "m = {m} must be at least n + 1 = {}",
            n + 1
        )));
    }
    Ok(())
}

/// Lexicographic stream of all integer sequences of a fixed length with
/// entries in `[lo, hi]` and a fixed sum. Both the composition and the
/// height-change generators are instances of this engine.
#[derive(Clone, Debug)]
struct BoundedSumSequences {
    len: usize,
    lo: i64,
    hi: i64,
    total: i64,
    current: Vec<i64>,
    fresh: bool,
    done: bool,
}

impl BoundedSumSequences {
    fn new(len: usize, lo: i64, hi: i64, total: i64) -> Self {
        let feasible = len >= 1
            && lo <= hi
            && (len as i128) * (lo as i128) <= total as i128
            && (total as i128) <= (len as i128) * (hi as i128);
        BoundedSumSequences {
            len,
            lo,
            hi,
            total,
            current: vec![0; len],
            fresh: true,
            done: !feasible,
        }
    }

    /// Fills positions `from..` with the smallest feasible values.
    fn min_fill(&mut self, from: usize) {
        let mut rem = self.total - self.current[..from].iter().sum::<i64>();
        for q in from..self.len {
            let slots_after = (self.len - 1 - q) as i128;
            let v = (self.lo as i128).max(rem as i128 - slots_after * self.hi as i128) as i64;
            self.current[q] = v;
            rem -= v;
        }
        debug_assert_eq!(rem, 0);
    }

    fn advance(&mut self) -> bool {
        if self.len == 0 {
            return false;
        }
        for p in (0..self.len - 1).rev() {
            let prefix: i64 = self.current[..p].iter().sum();
            let slots_after = (self.len - 1 - p) as i128;
            let upper = (self.hi as i128)
                .min(self.total as i128 - prefix as i128 - slots_after * self.lo as i128);
            let candidate = self.current[p] + 1;
            if (candidate as i128) <= upper {
                self.current[p] = candidate;
                self.min_fill(p + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for BoundedSumSequences {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            self.min_fill(0);
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current.clone())
    }
}

/// All sequences of `parts` positive integers summing to `total`, in
/// lexicographic order. Exactly `C(total - 1, parts - 1)` of them exist.
pub fn compositions(total: i64, parts: usize) -> Result<Compositions, EnumerationError> {
    if parts < 1 {
        return Err(EnumerationError::invalid("parts must be at least 1"));
    }
    if total < parts as i64 {
        return Err(EnumerationError::invalid(format!(
            "total = {total} must be at least parts = {parts}"
        )));
    }
    Ok(Compositions {
        inner: BoundedSumSequences::new(parts, 1, total, total),
    })
}

#[derive(Clone, Debug)]
pub struct Compositions {
    inner: BoundedSumSequences,
}

impl Iterator for Compositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        self.inner.next()
    }
}

/// All length-`n+1` integer sequences with entries in `[1 - n, 1]` summing
/// to 1, in lexicographic order. Exactly `C(2n, n)` of them exist.
pub fn y_sequences(n: usize) -> Result<YSequences, EnumerationError> {
    if n < 1 {
        return Err(EnumerationError::invalid(format!(
            "n = {n} must be at least 1"
        )));
    }
    Ok(YSequences {
        inner: BoundedSumSequences::new(n + 1, 1 - n as i64, 1, 1),
    })
}

#[derive(Clone, Debug)]
pub struct YSequences {
    inner: BoundedSumSequences,
}

impl Iterator for YSequences {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        self.inner.next()
    }
}

/// Every (n,m)-lattice path exactly once: lexicographic by horizontal
/// composition, then by height-change sequence. The stream has
/// `C(2n, n) * C(m - 1, n)` entries.
pub fn enumerate_paths(n: usize, m: i64) -> Result<PathStream, EnumerationError> {
    require_order_and_length(n, m)?;
    let template = y_sequences(n)?;
    Ok(PathStream {
        compositions: compositions(m, n + 1)?,
        template,
        current: None,
    })
}

#[derive(Clone, Debug)]
pub struct PathStream {
    compositions: Compositions,
    template: YSequences,
    current: Option<(Vec<i64>, YSequences)>,
}

impl Iterator for PathStream {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        loop {
            if let Some((xs, ys)) = &mut self.current {
                if let Some(y) = ys.next() {
                    let steps = xs
                        .iter()
                        .zip(y.iter())
                        .map(|(&x, &y)| Step::new(x, y))
                        .collect();
                    return Some(LatticePath::from_validated(steps));
                }
                self.current = None;
            }
            let xs = self.compositions.next()?;
            self.current = Some((xs, self.template.clone()));
        }
    }
}

/// Every pointed (n,m)-lattice path exactly once: each plain path paired
/// with every legal root offset. The stream has `C(2n, n) * C(m, n+1)`
/// entries.
pub fn enumerate_pointed(n: usize, m: i64) -> Result<PointedStream, EnumerationError> {
    Ok(PointedStream {
        paths: enumerate_paths(n, m)?,
        current: None,
    })
}

#[derive(Clone, Debug)]
pub struct PointedStream {
    paths: PathStream,
    current: Option<(LatticePath, i64)>,
}

impl Iterator for PointedStream {
    type Item = PointedLatticePath;

    fn next(&mut self) -> Option<PointedLatticePath> {
        loop {
            if let Some((path, next_offset)) = &mut self.current {
                if *next_offset < path.last_step().x {
                    let offset = *next_offset;
                    *next_offset += 1;
                    return Some(
                        PointedLatticePath::new(path.clone(), offset)
                            .expect("offset below the final step length"),
                    );
                }
                self.current = None;
            }
            let path = self.paths.next()?;
            self.current = Some((path, 0));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_enumerate_lexicographically() {
        let all: Vec<Vec<i64>> = compositions(3, 2).unwrap().collect();
        assert_eq!(all, vec![vec![1, 2], vec![2, 1]]);

        let all: Vec<Vec<i64>> = compositions(5, 3).unwrap().collect();
        assert_eq!(
            all,
            vec![
                vec![1, 1, 3],
                vec![1, 2, 2],
                vec![1, 3, 1],
                vec![2, 1, 2],
                vec![2, 2, 1],
                vec![3, 1, 1],
            ]
        );

        // C(total - 1, parts - 1) entries.
        assert_eq!(compositions(5, 4).unwrap().count(), 4);
        assert_eq!(compositions(9, 4).unwrap().count(), 56);
        assert_eq!(compositions(7, 1).unwrap().count(), 1);
    }

    #[test]
    fn compositions_reject_bad_ranges() {
        assert!(compositions(3, 0).is_err());
        assert!(compositions(2, 3).is_err());
    }

    #[test]
    fn y_sequences_match_hand_enumeration() {
        let n1: Vec<Vec<i64>> = y_sequences(1).unwrap().collect();
        assert_eq!(n1, vec![vec![0, 1], vec![1, 0]]);

        let n2: Vec<Vec<i64>> = y_sequences(2).unwrap().collect();
        assert_eq!(
            n2,
            vec![
                vec![-1, 1, 1],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![1, -1, 1],
                vec![1, 0, 0],
                vec![1, 1, -1],
            ]
        );

        // C(2n, n) entries.
        assert_eq!(y_sequences(3).unwrap().count(), 20);
        assert_eq!(y_sequences(5).unwrap().count(), 252);
        assert!(y_sequences(0).is_err());
    }

    #[test]
    fn nonnegative_prefix_sequences_number_catalan() {
        // Sequences whose prefix sums stay positive; two of them for n = 2.
        let free: Vec<Vec<i64>> = y_sequences(2)
            .unwrap()
            .filter(|y| {
                let mut acc = 0;
                y.iter().all(|&v| {
                    acc += v;
                    acc > 0
                })
            })
            .collect();
        assert_eq!(free, vec![vec![1, 0, 0], vec![1, 1, -1]]);
    }

    #[test]
    fn path_streams_have_closed_form_lengths() {
        assert_eq!(enumerate_paths(2, 3).unwrap().count(), 6);
        assert_eq!(enumerate_paths(1, 2).unwrap().count(), 2);
        assert_eq!(enumerate_paths(3, 5).unwrap().count(), 80);
        assert!(enumerate_paths(2, 2).is_err());
        assert!(enumerate_paths(0, 3).is_err());
    }

    #[test]
    fn pointed_streams_have_closed_form_lengths() {
        assert_eq!(enumerate_pointed(2, 3).unwrap().count(), 6);
        assert_eq!(enumerate_pointed(3, 5).unwrap().count(), 100);

        // The stream length is the sum of final horizontal lengths.
        let by_offsets: i64 = enumerate_paths(2, 4)
            .unwrap()
            .map(|p| p.last_step().x)
            .sum();
        assert_eq!(enumerate_pointed(2, 4).unwrap().count() as i64, by_offsets);
    }

    #[test]
    fn streams_yield_distinct_valid_items() {
        let mut seen = std::collections::BTreeSet::new();
        for p in enumerate_paths(3, 5).unwrap() {
            assert_eq!(p.n(), 3);
            assert_eq!(p.m(), 5);
            assert!(seen.insert(p));
        }
        assert_eq!(seen.len(), 80);
    }

    #[test]
    fn stream_order_is_composition_major() {
        let paths: Vec<LatticePath> = enumerate_paths(1, 3).unwrap().collect();
        let expected: Vec<LatticePath> = [
            vec![(1, 0), (2, 1)],
            vec![(1, 1), (2, 0)],
            vec![(2, 0), (1, 1)],
            vec![(2, 1), (1, 0)],
        ]
        .into_iter()
        .map(|steps| LatticePath::new(steps).unwrap())
        .collect();
        assert_eq!(paths, expected);
    }
}
