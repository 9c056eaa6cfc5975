//! Uniform random generation of paths and of pointed paths with a
//! prescribed statistic value.
//!
//! Sampling a statistic value `r` works through the class bijections: draw
//! a uniform path, then take the class member of rank `r + 1`. Every
//! equivalence class contains exactly `n + 1` plain paths and exactly one
//! pointed path per statistic value, so a uniform base path induces a
//! uniform pointed path with the requested value.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{require_order_and_length, EnumerationError};
use crate::path::{LatticePath, Step};
use crate::pointed::{gamma, theta, PointedLatticePath};

/// The pointed statistic a sample is conditioned on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointedStatistic {
    Pnpl,
    Prml,
}

impl PointedStatistic {
    pub fn name(self) -> &'static str {
        match self {
            PointedStatistic::Pnpl => "PNPL",
            PointedStatistic::Prml => "PRML",
        }
    }
}

impl fmt::Display for PointedStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PointedStatistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("pnpl") {
            Ok(PointedStatistic::Pnpl)
        } else if s.eq_ignore_ascii_case("prml") {
            Ok(PointedStatistic::Prml)
        } else {
            Err(format!("unknown pointed statistic '{s}'"))
        }
    }
}

/// Floyd's sampling: `k` distinct values from `1..=upper`, uniformly over
/// k-subsets, returned in ascending order.
fn sample_distinct<R: Rng + ?Sized>(rng: &mut R, upper: i64, k: usize) -> Vec<i64> {
    debug_assert!(upper >= k as i64);
    let mut chosen = BTreeSet::new();
    for j in (upper - k as i64 + 1)..=upper {
        let t = rng.random_range(1..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    chosen.into_iter().collect()
}

/// A uniform random (n,m)-lattice path: a uniform composition of `m` into
/// `n + 1` positive parts zipped with a uniform admissible height-change
/// sequence.
pub fn random_path<R: Rng + ?Sized>(
    n: usize,
    m: i64,
    rng: &mut R,
) -> Result<LatticePath, EnumerationError> {
    require_order_and_length(n, m)?;

    // Bars at n of the m - 1 interior positions cut [0, m] into the parts.
    let bars = sample_distinct(rng, m - 1, n);
    let mut xs = Vec::with_capacity(n + 1);
    let mut previous = 0;
    for &bar in &bars {
        xs.push(bar - previous);
        previous = bar;
    }
    xs.push(m - previous);

    // Bars among 2n slots encode z_i = 1 - y_i >= 0 with sum n.
    let slots = sample_distinct(rng, 2 * n as i64, n);
    let mut ys = Vec::with_capacity(n + 1);
    let mut previous = 0;
    for &slot in &slots {
        ys.push(1 - (slot - previous - 1));
        previous = slot;
    }
    ys.push(1 - (2 * n as i64 - previous));

    let steps = xs
        .into_iter()
        .zip(ys)
        .map(|(x, y)| Step::new(x, y))
        .collect();
    Ok(LatticePath::from_validated(steps))
}

/// A uniform pointed (n,m)-lattice path with the given statistic value,
/// driven by a caller-supplied generator.
pub fn uniform_sample_with<R: Rng + ?Sized>(
    n: usize,
    m: i64,
    statistic: PointedStatistic,
    target: i64,
    rng: &mut R,
) -> Result<PointedLatticePath, EnumerationError> {
    require_order_and_length(n, m)?;
    if target < 0 || target > m - 1 {
        return Err(EnumerationError::invalid(format!(
            "target {target} outside [0, {}]",
            m - 1
        )));
    }
    let base = random_path(n, m, rng)?;
    let picked = match statistic {
        PointedStatistic::Pnpl => theta(&base, target + 1),
        PointedStatistic::Prml => gamma(&base, target + 1),
    };
    Ok(picked.expect("target + 1 lies within [1, m]"))
}

/// Seeded variant of [`uniform_sample_with`]: deterministic for a fixed
/// seed.
pub fn uniform_sample(
    n: usize,
    m: i64,
    statistic: PointedStatistic,
    target: i64,
    seed: u64,
) -> Result<PointedLatticePath, EnumerationError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    uniform_sample_with(n, m, statistic, target, &mut rng)
}
