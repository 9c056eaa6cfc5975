//! Level-shifting bijections on lattice paths.
//!
//! `phi` raises the non-positive length by one and `psi` raises the
//! rightmost minimum length by one; both come with inverses and with
//! zero-level variants that move a path out of the level-0 class whose last
//! step has horizontal length one. Every map checks its precondition
//! eagerly and returns a fresh path; inputs are never mutated.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::path::LatticePath;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("non-positive length {npl} outside the required range [{lo}, {hi}]")]
    PreconditionNpl { npl: i64, lo: i64, hi: i64 },
    #[error("rightmost minimum length {rml} outside the required range [{lo}, {hi}]")]
    PreconditionRml { rml: i64, lo: i64, hi: i64 },
    #[error(
        "zero-level map requires statistic 0 and final horizontal length 1 \
         (got statistic {statistic}, final length {x_last})"
    )]
    PreconditionZeroTilde { statistic: i64, x_last: i64 },
}

/// 1-based position `k` with `pi_P(k) = n + 1`.
fn position_of_last(order: &[usize]) -> usize {
    let last = order.len();
    order
        .iter()
        .position(|&v| v == last)
        .expect("path_order is a permutation of [n+1]")
        + 1
}

/// Moves one unit of horizontal length from the final step onto step `i`.
fn shift_unit_to(p: &LatticePath, i: usize) -> LatticePath {
    debug_assert!(i < p.len(), "unit shifts never target the final step");
    debug_assert!(p.last_step().x >= 2);
    let mut steps = p.steps().to_vec();
    steps[i - 1].x += 1;
    steps.last_mut().expect("nonempty").x -= 1;
    LatticePath::from_validated(steps)
}

/// Moves one unit of horizontal length from step `i` onto the final step.
fn shift_unit_from(p: &LatticePath, i: usize) -> LatticePath {
    debug_assert!(i < p.len());
    debug_assert!(p.step(i).expect("index in range").x >= 2);
    let mut steps = p.steps().to_vec();
    steps[i - 1].x -= 1;
    steps.last_mut().expect("nonempty").x += 1;
    LatticePath::from_validated(steps)
}

/// Raises the non-positive length by one. Defined for `1 <= NPL(P) <= m - 2`.
///
/// With `k` the position of `n + 1` in `pi_P`: if `k <= n` and the last step
/// has length 1, rotate at `pi_P(k+1)`; if `k <= n` and the last step is
/// longer, grow step `pi_P(k-1)` at the expense of the last step; if
/// `k = n + 1` the last step is necessarily longer and step `pi_P(n)` grows.
pub fn phi(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let (m, npl) = (p.m(), p.npl());
    if npl < 1 || npl > m - 2 {
        return Err(BijectionError::PreconditionNpl {
            npl,
            lo: 1,
            hi: m - 2,
        });
    }
    let order = p.path_order();
    let k = position_of_last(&order);
    debug_assert!(k >= 2, "npl >= 1 forces n + 1 off the bottom of the order");
    if k <= p.n() {
        if p.last_step().x == 1 {
            Ok(p.rotate(order[k])) // pi_P(k+1)
        } else {
            Ok(shift_unit_to(p, order[k - 2])) // pi_P(k-1)
        }
    } else {
        // k = n + 1: here NP(P) = [n], so NPL = m - x_{n+1} <= m - 2 gives
        // x_{n+1} >= 2.
        Ok(shift_unit_to(p, order[p.n() - 1])) // pi_P(n)
    }
}

/// Inverse of [`phi`]. Defined for `2 <= NPL(P) <= m - 1`.
pub fn phi_inv(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let (m, npl) = (p.m(), p.npl());
    if npl < 2 || npl > m - 1 {
        return Err(BijectionError::PreconditionNpl {
            npl,
            lo: 2,
            hi: m - 1,
        });
    }
    let order = p.path_order();
    let k = position_of_last(&order);
    let i = order[k - 2]; // pi_P(k-1)
    if p.step(i).expect("order yields valid indices").x == 1 {
        Ok(p.rotate(i))
    } else {
        Ok(shift_unit_from(p, i))
    }
}

/// Zero-level variant of [`phi`]: maps a path with `NPL(P) = 0` and
/// `x_{n+1} = 1` to one with `NPL = 1` by rotating at `pi_P(2)`.
pub fn phi_zero(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let npl = p.npl();
    let x_last = p.last_step().x;
    if npl != 0 || x_last != 1 {
        return Err(BijectionError::PreconditionZeroTilde {
            statistic: npl,
            x_last,
        });
    }
    let order = p.path_order();
    // NPL = 0 means every prefix height is at least a_{n+1} = 1, and the tie
    // rule puts the largest index first.
    debug_assert_eq!(order[0], p.len());
    Ok(p.rotate(order[1]))
}

/// Inverse of [`phi_zero`]. Defined for `NPL(P) = 1`; the rotation index
/// `pi_P(1)` then names a step of horizontal length 1.
pub fn phi_zero_inv(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let npl = p.npl();
    if npl != 1 {
        return Err(BijectionError::PreconditionNpl { npl, lo: 1, hi: 1 });
    }
    let order = p.path_order();
    let i = order[0];
    debug_assert_eq!(p.step(i).expect("index in range").x, 1);
    Ok(p.rotate(i))
}

/// Raises the rightmost minimum length by one. Defined for
/// `1 <= RML(P) <= m - 2`: move the last step to the front when it has
/// length 1, otherwise grow the first step at the expense of the last.
pub fn psi(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let (m, rml) = (p.m(), p.rml());
    if rml < 1 || rml > m - 2 {
        return Err(BijectionError::PreconditionRml {
            rml,
            lo: 1,
            hi: m - 2,
        });
    }
    if p.last_step().x == 1 {
        Ok(p.rotate(p.n()))
    } else {
        Ok(shift_unit_to(p, 1))
    }
}

/// Inverse of [`psi`]. Defined for `2 <= RML(P) <= m - 1`.
pub fn psi_inv(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let (m, rml) = (p.m(), p.rml());
    if rml < 2 || rml > m - 1 {
        return Err(BijectionError::PreconditionRml {
            rml,
            lo: 2,
            hi: m - 1,
        });
    }
    if p.first_step().x == 1 {
        Ok(p.rotate(1))
    } else {
        Ok(shift_unit_from(p, 1))
    }
}

/// Zero-level variant of [`psi`]: maps a path with `RML(P) = 0` and
/// `x_{n+1} = 1` to one with `RML = 1` by moving the last step to the front.
pub fn psi_zero(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let rml = p.rml();
    let x_last = p.last_step().x;
    if rml != 0 || x_last != 1 {
        return Err(BijectionError::PreconditionZeroTilde {
            statistic: rml,
            x_last,
        });
    }
    Ok(p.rotate(p.n()))
}

/// Inverse of [`psi_zero`]. Defined for `RML(P) = 1`; the first step then
/// has horizontal length 1 and non-positive height change.
pub fn psi_zero_inv(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let rml = p.rml();
    if rml != 1 {
        return Err(BijectionError::PreconditionRml { rml, lo: 1, hi: 1 });
    }
    debug_assert_eq!(p.first_step().x, 1);
    debug_assert!(p.first_step().y <= 0);
    Ok(p.rotate(1))
}

/// A named level-shifting map, for driving traces and command-line calls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LevelMap {
    Phi,
    PhiInv,
    PhiZero,
    PhiZeroInv,
    Psi,
    PsiInv,
    PsiZero,
    PsiZeroInv,
}

impl LevelMap {
    pub const ALL: [LevelMap; 8] = [
        LevelMap::Phi,
        LevelMap::PhiInv,
        LevelMap::PhiZero,
        LevelMap::PhiZeroInv,
        LevelMap::Psi,
        LevelMap::PsiInv,
        LevelMap::PsiZero,
        LevelMap::PsiZeroInv,
    ];

    pub fn apply(self, p: &LatticePath) -> Result<LatticePath, BijectionError> {
        match self {
            LevelMap::Phi => phi(p),
            LevelMap::PhiInv => phi_inv(p),
            LevelMap::PhiZero => phi_zero(p),
            LevelMap::PhiZeroInv => phi_zero_inv(p),
            LevelMap::Psi => psi(p),
            LevelMap::PsiInv => psi_inv(p),
            LevelMap::PsiZero => psi_zero(p),
            LevelMap::PsiZeroInv => psi_zero_inv(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LevelMap::Phi => "phi",
            LevelMap::PhiInv => "phi_inv",
            LevelMap::PhiZero => "phi_zero",
            LevelMap::PhiZeroInv => "phi_zero_inv",
            LevelMap::Psi => "psi",
            LevelMap::PsiInv => "psi_inv",
            LevelMap::PsiZero => "psi_zero",
            LevelMap::PsiZeroInv => "psi_zero_inv",
        }
    }
}

impl fmt::Display for LevelMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LevelMap {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LevelMap::ALL
            .into_iter()
            .find(|map| map.name() == s)
            .ok_or_else(|| format!("unknown map '{s}'"))
    }
}

/// Applies `map` repeatedly starting from `start` until its precondition
/// fails, collecting the whole chain including the starting path. Every map
/// moves its statistic strictly, so the chain has at most `m` entries.
pub fn orbit(map: LevelMap, start: &LatticePath) -> Vec<LatticePath> {
    let mut chain = vec![start.clone()];
    while let Ok(next) = map.apply(chain.last().expect("chain is nonempty")) {
        chain.push(next);
    }
    chain
}
