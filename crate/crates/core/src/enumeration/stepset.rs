//! Step-set restriction: admissible step alphabets and a direct bounded
//! search over them.

use std::collections::BTreeSet;

use super::{require_order_and_length, EnumerationError};
use crate::path::{LatticePath, Step};

/// A finite alphabet of admissible steps.
///
/// The grammar form builds `S = S_A ∪ S_B ∪ {(1,1)}` from down lengths `A`
/// (steps `(2i-1, -1)`) and flat lengths `B` (steps `(2i, 0)`). Arbitrary
/// explicit alphabets with `x >= 1` and `y <= 1` are also accepted; the
/// lower height bound `y >= 1 - n` is enforced per enumeration, where `n`
/// is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    steps: BTreeSet<Step>,
}

impl StepSet {
    /// The grammar form. Both length sets must consist of positive integers.
    pub fn from_down_flat(
        down_lengths: &[i64],
        flat_lengths: &[i64],
    ) -> Result<Self, EnumerationError> {
        let mut steps = BTreeSet::new();
        steps.insert(Step::new(1, 1));
        for &i in down_lengths {
            if i < 1 {
                return Err(EnumerationError::invalid(format!(
                    "down length {i} must be a positive integer"
                )));
            }
            steps.insert(Step::new(2 * i - 1, -1));
        }
        for &i in flat_lengths {
            if i < 1 {
                return Err(EnumerationError::invalid(format!(
                    "flat length {i} must be a positive integer"
                )));
            }
            steps.insert(Step::new(2 * i, 0));
        }
        Ok(StepSet { steps })
    }

    /// An explicit alphabet; every step needs `x >= 1` and `y <= 1`.
    pub fn explicit<I>(steps: I) -> Result<Self, EnumerationError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut set = BTreeSet::new();
        for (x, y) in steps {
            if x < 1 || y > 1 {
                return Err(EnumerationError::invalid(format!(
                    "step ({x},{y}) needs x >= 1 and y <= 1"
                )));
            }
            set.insert(Step::new(x, y));
        }
        if set.is_empty() {
            return Err(EnumerationError::invalid("a step set must not be empty"));
        }
        Ok(StepSet { steps: set })
    }

    /// Up and down unit steps `{(1,1), (1,-1)}`.
    pub fn dyck() -> Self {
        Self::from_down_flat(&[1], &[]).expect("fixed lengths are positive")
    }

    /// Up, down, and long flat steps `{(1,1), (1,-1), (2,0)}`.
    pub fn schroeder() -> Self {
        Self::from_down_flat(&[1], &[1]).expect("fixed lengths are positive")
    }

    /// Up, down, and short flat steps `{(1,1), (1,-1), (1,0)}`. The short
    /// flat falls outside the grammar form, so this is an explicit alphabet.
    pub fn motzkin() -> Self {
        Self::explicit([(1, 1), (1, -1), (1, 0)]).expect("fixed steps are admissible")
    }

    pub fn contains(&self, step: Step) -> bool {
        self.steps.contains(&step)
    }

    /// The admissible steps in ascending order.
    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.steps.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// All (n,m)-lattice paths whose every step lies in `set`, in lexicographic
/// order by step sequence. Runs a depth-first search over step choices,
/// pruning prefixes whose remaining budget cannot reach `(m, 1)`.
pub fn enumerate_step_set_paths(
    set: &StepSet,
    n: usize,
    m: i64,
) -> Result<StepSetPaths, EnumerationError> {
    require_order_and_length(n, m)?;
    let lower = 1 - n as i64;
    let allowed: Vec<Step> = set.steps().filter(|s| s.y >= lower && s.x <= m).collect();
    let bounds = Bounds::over(&allowed);
    Ok(StepSetPaths {
        allowed,
        bounds,
        len: n + 1,
        m,
        choices: Vec::with_capacity(n + 1),
        sum_x: 0,
        sum_y: 0,
        state: SearchState::Fresh,
    })
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
}

impl Bounds {
    fn over(steps: &[Step]) -> Self {
        Bounds {
            min_x: steps.iter().map(|s| s.x).min().unwrap_or(0),
            max_x: steps.iter().map(|s| s.x).max().unwrap_or(0),
            min_y: steps.iter().map(|s| s.y).min().unwrap_or(0),
            max_y: steps.iter().map(|s| s.y).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SearchState {
    Fresh,
    Mid,
    Done,
}

#[derive(Clone, Debug)]
pub struct StepSetPaths {
    allowed: Vec<Step>,
    bounds: Bounds,
    len: usize,
    m: i64,
    choices: Vec<usize>,
    sum_x: i64,
    sum_y: i64,
    state: SearchState,
}

impl StepSetPaths {
    /// Whether choosing `allowed[candidate]` at the current depth can still
    /// be completed to a path ending at `(m, 1)`.
    fn feasible(&self, candidate: usize) -> bool {
        let step = self.allowed[candidate];
        let remaining = (self.len - self.choices.len() - 1) as i64;
        let bx = self.sum_x + step.x;
        let ay = self.sum_y + step.y;
        if remaining == 0 {
            return bx == self.m && ay == 1;
        }
        bx + remaining * self.bounds.min_x <= self.m
            && self.m <= bx + remaining * self.bounds.max_x
            && ay + remaining * self.bounds.min_y <= 1
            && 1 <= ay + remaining * self.bounds.max_y
    }

    fn push(&mut self, candidate: usize) {
        let step = self.allowed[candidate];
        self.sum_x += step.x;
        self.sum_y += step.y;
        self.choices.push(candidate);
    }

    fn pop(&mut self) -> Option<usize> {
        let candidate = self.choices.pop()?;
        let step = self.allowed[candidate];
        self.sum_x -= step.x;
        self.sum_y -= step.y;
        Some(candidate)
    }

    /// Advances the search to the next complete path in lexicographic
    /// order, trying candidates `>= min_candidate` at the current depth.
    fn search(&mut self, mut min_candidate: usize) -> bool {
        loop {
            let next = (min_candidate..self.allowed.len()).find(|&c| self.feasible(c));
            match next {
                Some(candidate) => {
                    self.push(candidate);
                    min_candidate = 0;
                    if self.choices.len() == self.len {
                        return true;
                    }
                }
                None => match self.pop() {
                    Some(previous) => min_candidate = previous + 1,
                    None => return false,
                },
            }
        }
    }

    fn build(&self) -> LatticePath {
        debug_assert_eq!(self.sum_x, self.m);
        debug_assert_eq!(self.sum_y, 1);
        let steps = self.choices.iter().map(|&c| self.allowed[c]).collect();
        LatticePath::from_validated(steps)
    }
}

impl Iterator for StepSetPaths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let found = match self.state {
            SearchState::Done => return None,
            SearchState::Fresh => {
                self.state = SearchState::Mid;
                !self.allowed.is_empty() && self.search(0)
            }
            SearchState::Mid => {
                let last = self.pop().expect("a complete path was emitted");
                self.search(last + 1)
            }
        };
        if found {
            Some(self.build())
        } else {
            self.state = SearchState::Done;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_paths;

    fn collect(set: &StepSet, n: usize, m: i64) -> Vec<LatticePath> {
        enumerate_step_set_paths(set, n, m).unwrap().collect()
    }

    #[test]
    fn grammar_form_builds_the_expected_alphabet() {
        let s = StepSet::from_down_flat(&[1, 2], &[1]).unwrap();
        let steps: Vec<Step> = s.steps().collect();
        assert_eq!(
            steps,
            vec![
                Step::new(1, -1),
                Step::new(1, 1),
                Step::new(2, 0),
                Step::new(3, -1)
            ]
        );
        // The short flat (1,0) is not expressible in the grammar.
        assert!(!StepSet::schroeder().contains(Step::new(1, 0)));
        assert!(StepSet::motzkin().contains(Step::new(1, 0)));
        assert!(StepSet::from_down_flat(&[0], &[]).is_err());
        assert!(StepSet::explicit([(0, 1)]).is_err());
    }

    #[test]
    fn dyck_paths_at_small_order() {
        let paths = collect(&StepSet::dyck(), 2, 3);
        let expected: Vec<LatticePath> = [
            [(1, -1), (1, 1), (1, 1)],
            [(1, 1), (1, -1), (1, 1)],
            [(1, 1), (1, 1), (1, -1)],
        ]
        .iter()
        .map(|steps| LatticePath::new(steps.iter().copied()).unwrap())
        .collect();
        assert_eq!(paths, expected);
    }

    #[test]
    fn restriction_agrees_with_filtering_the_full_space() {
        let sets = [StepSet::dyck(), StepSet::schroeder(), StepSet::motzkin()];
        for set in &sets {
            for n in 1..=4usize {
                for m in (n as i64 + 1)..=(n as i64 + 3) {
                    let direct: Vec<LatticePath> = collect(set, n, m);
                    let filtered: Vec<LatticePath> = enumerate_paths(n, m)
                        .unwrap()
                        .filter(|p| p.steps().iter().all(|&s| set.contains(s)))
                        .collect();
                    let mut sorted = filtered.clone();
                    sorted.sort();
                    assert_eq!(direct, sorted, "set={set:?} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn parity_empty_spaces_yield_nothing() {
        // One long flat forces an odd up/down split: no such path.
        assert_eq!(collect(&StepSet::schroeder(), 2, 4).len(), 0);
        // Motzkin steps all advance by one: only m = n + 1 is populated.
        assert_eq!(collect(&StepSet::motzkin(), 2, 4).len(), 0);
        assert_eq!(collect(&StepSet::motzkin(), 2, 3).len(), 6);
    }

    #[test]
    fn schroeder_counts_at_small_sizes() {
        // One flat step among two unit moves.
        assert_eq!(collect(&StepSet::schroeder(), 1, 3).len(), 2);
        // Four steps, one flat, two ups, one down.
        assert_eq!(collect(&StepSet::schroeder(), 3, 5).len(), 12);
    }
}
