//! Exact statistic histograms over full or step-set-restricted spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::counting::{path_space_size, pointed_space_size};
use super::stepset::{enumerate_step_set_paths, StepSet};
use super::{enumerate_paths, enumerate_pointed, EnumerationError};
use crate::pointed::PointedLatticePath;

/// The four path statistics a histogram can tally. The plain statistics
/// range over lattice paths, the pointed ones over pointed lattice paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Npl,
    Rml,
    Pnpl,
    Prml,
}

impl Statistic {
    pub const ALL: [Statistic; 4] = [
        Statistic::Npl,
        Statistic::Rml,
        Statistic::Pnpl,
        Statistic::Prml,
    ];

    pub fn is_pointed(self) -> bool {
        matches!(self, Statistic::Pnpl | Statistic::Prml)
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Npl => "NPL",
            Statistic::Rml => "RML",
            Statistic::Pnpl => "PNPL",
            Statistic::Prml => "PRML",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statistic::ALL
            .into_iter()
            .find(|stat| stat.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown statistic '{s}'"))
    }
}

/// An exact histogram: statistic value -> count, plus the grand total.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Distribution {
    counts: BTreeMap<i64, BigUint>,
    total: BigUint,
}

impl Distribution {
    pub fn record(&mut self, value: i64) {
        *self.counts.entry(value).or_insert_with(BigUint::zero) += BigUint::one();
        self.total += BigUint::one();
    }

    pub fn counts(&self) -> &BTreeMap<i64, BigUint> {
        &self.counts
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// The count at `value`, zero when absent.
    pub fn count(&self, value: i64) -> BigUint {
        self.counts
            .get(&value)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// True when every value in `0..num_values` carries the same count and
    /// no other value occurs. An empty distribution is flat.
    pub fn is_flat(&self, num_values: i64) -> bool {
        if self.counts.keys().any(|&v| v < 0 || v >= num_values) {
            return false;
        }
        let reference = self.count(0);
        (0..num_values).all(|v| self.count(v) == reference)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, (value, count)) in self.counts.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{value}: {count}")?;
        }
        write!(f, "}}")
    }
}

/// Exact counts of `statistic` over the full (n,m) space: plain paths for
/// `NPL`/`RML`, pointed paths for `PNPL`/`PRML`. Refuses up front when the
/// space exceeds `cap` items.
pub fn histogram(
    n: usize,
    m: i64,
    statistic: Statistic,
    cap: u64,
) -> Result<Distribution, EnumerationError> {
    let size = if statistic.is_pointed() {
        pointed_space_size(n, m)?
    } else {
        path_space_size(n, m)?
    };
    if size > BigUint::from(cap) {
        return Err(EnumerationError::CapExceeded { size, cap });
    }
    let mut distribution = Distribution::default();
    match statistic {
        Statistic::Npl => {
            for p in enumerate_paths(n, m)? {
                distribution.record(p.npl());
            }
        }
        Statistic::Rml => {
            for p in enumerate_paths(n, m)? {
                distribution.record(p.rml());
            }
        }
        Statistic::Pnpl => {
            for q in enumerate_pointed(n, m)? {
                distribution.record(q.pnpl());
            }
        }
        Statistic::Prml => {
            for q in enumerate_pointed(n, m)? {
                distribution.record(q.prml());
            }
        }
    }
    Ok(distribution)
}

/// Exact counts of `statistic` over the (n,m) paths restricted to steps in
/// `set`. The restricted space has no cheap size formula, so the run aborts
/// once more than `cap` items have been produced.
pub fn step_set_histogram(
    set: &StepSet,
    n: usize,
    m: i64,
    statistic: Statistic,
    cap: u64,
) -> Result<Distribution, EnumerationError> {
    let mut distribution = Distribution::default();
    let mut produced: u64 = 0;
    let bump = |produced: &mut u64| -> Result<(), EnumerationError> {
        *produced += 1;
        if *produced > cap {
            Err(EnumerationError::CapExceeded {
                size: BigUint::from(*produced),
                cap,
            })
        } else {
            Ok(())
        }
    };
    for path in enumerate_step_set_paths(set, n, m)? {
        if statistic.is_pointed() {
            for offset in 0..path.last_step().x {
                bump(&mut produced)?;
                let pointed = PointedLatticePath::new(path.clone(), offset)
                    .expect("offset below the final step length");
                distribution.record(match statistic {
                    Statistic::Pnpl => pointed.pnpl(),
                    Statistic::Prml => pointed.prml(),
                    _ => unreachable!(),
                });
            }
        } else {
            bump(&mut produced)?;
            distribution.record(match statistic {
                Statistic::Npl => path.npl(),
                Statistic::Rml => path.rml(),
                _ => unreachable!(),
            });
        }
    }
    Ok(distribution)
}
