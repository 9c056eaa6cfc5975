//! Path statistics: the non-positive set and length, the rightmost minimum,
//! and the linear orders derived from prefix heights.

use crate::path::{LatticePath, PathPoint};

impl LatticePath {
    /// Prefix heights `a_i = y_1 + ... + y_i` for `i in 1..=n+1`.
    pub(crate) fn heights(&self) -> Vec<i64> {
        let mut acc = 0;
        self.steps()
            .iter()
            .map(|s| {
                acc += s.y;
                acc
            })
            .collect()
    }

    /// The points `(b_0, a_0), ..., (b_{n+1}, a_{n+1})` traced by the path,
    /// starting at the origin and ending at `(m, 1)`.
    pub fn prefix_points(&self) -> Vec<PathPoint> {
        let mut points = Vec::with_capacity(self.len() + 1);
        let (mut b, mut a) = (0, 0);
        points.push(PathPoint::new(0, 0));
        for step in self.steps() {
            b += step.x;
            a += step.y;
            points.push(PathPoint::new(b, a));
        }
        points
    }

    /// `NP(P)`: the 1-based step indices whose prefix height is non-positive,
    /// in increasing order. Never contains `n + 1`, since `a_{n+1} = 1`.
    pub fn non_positive_set(&self) -> Vec<usize> {
        self.heights()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a <= 0)
            .map(|(idx, _)| idx + 1)
            .collect()
    }

    /// `NPL(P)`: the total horizontal length of the steps indexed by `NP(P)`.
    /// Always within `[0, m - x_{n+1}]`, hence at most `m - 1`.
    pub fn npl(&self) -> i64 {
        let mut acc = 0;
        let mut total = 0;
        for step in self.steps() {
            acc += step.y;
            if acc <= 0 {
                total += step.x;
            }
        }
        total
    }

    /// The rightmost point of minimal height among
    /// `(b_0, a_0), ..., (b_{n+1}, a_{n+1})`; the origin participates.
    pub fn rightmost_minimum(&self) -> PathPoint {
        let mut best = PathPoint::new(0, 0);
        let (mut b, mut a) = (0, 0);
        for step in self.steps() {
            b += step.x;
            a += step.y;
            if a <= best.a {
                best = PathPoint::new(b, a);
            }
        }
        best
    }

    /// `RML(P)`: the horizontal coordinate of the rightmost minimum point.
    pub fn rml(&self) -> i64 {
        self.rightmost_minimum().b
    }

    /// The permutation `pi_P` listing `[n+1]` in increasing order under
    /// `<_P`: `i <_P j` iff `a_i < a_j`, or `a_i = a_j` and `i > j`
    /// (ties broken by the larger index first). Values are 1-based.
    pub fn path_order(&self) -> Vec<usize> {
        let heights = self.heights();
        let mut order: Vec<usize> = (1..=self.len()).collect();
        order.sort_by(|&i, &j| heights[i - 1].cmp(&heights[j - 1]).then(j.cmp(&i)));
        order
    }

    /// The permutation `sigma_P = (i, i-1, ..., 1, n+1, n, ..., i+1)` where
    /// `i = pi_P(1)`.
    pub fn sigma(&self) -> Vec<usize> {
        let first = self.path_order()[0];
        let mut order: Vec<usize> = (1..=first).rev().collect();
        order.extend((first + 1..=self.len()).rev());
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(steps: &[(i64, i64)]) -> LatticePath {
        LatticePath::new(steps.iter().copied()).expect("valid path")
    }

    fn example_8_11() -> LatticePath {
        path(&[
            (1, 1),
            (1, -2),
            (2, 1),
            (1, 1),
            (1, -1),
            (1, -1),
            (1, 1),
            (1, 1),
            (2, 0),
        ])
    }

    #[test]
    fn prefix_points_trace_the_path() {
        let p = example_8_11();
        let points = p.prefix_points();
        assert_eq!(points.len(), p.n() + 2);
        assert_eq!(points[0], PathPoint::new(0, 0));
        assert_eq!(*points.last().unwrap(), PathPoint::new(11, 1));

        let q = path(&[(1, 1), (1, -2), (1, 1), (2, 1)]);
        let expected: Vec<PathPoint> = [(0, 0), (1, 1), (2, -1), (3, 0), (5, 1)]
            .iter()
            .map(|&(b, a)| PathPoint::new(b, a))
            .collect();
        assert_eq!(q.prefix_points(), expected);

        let r = path(&[(1, 1), (1, 0)]);
        assert_eq!(
            r.prefix_points(),
            vec![
                PathPoint::new(0, 0),
                PathPoint::new(1, 1),
                PathPoint::new(2, 1)
            ]
        );
    }

    #[test]
    fn non_positive_set_and_length() {
        let p = example_8_11();
        assert_eq!(p.non_positive_set(), vec![2, 3, 5, 6, 7]);
        assert_eq!(p.npl(), 6);

        // All prefix heights positive.
        let q = path(&[(1, 1), (1, 1), (2, 1), (1, -2)]);
        assert_eq!(q.non_positive_set(), Vec::<usize>::new());
        assert_eq!(q.npl(), 0);

        // Heights (1, -1, 0, 1): steps 2 and 3 are non-positive.
        let r = path(&[(1, 1), (1, -2), (1, 1), (2, 1)]);
        assert_eq!(r.non_positive_set(), vec![2, 3]);
        assert_eq!(r.npl(), 2);
    }

    #[test]
    fn rightmost_minimum_breaks_ties_to_the_right() {
        let p = example_8_11();
        assert_eq!(p.rightmost_minimum(), PathPoint::new(7, -1));
        assert_eq!(p.rml(), 7);

        let q = path(&[(1, 1), (1, 1), (2, 1), (1, -2)]);
        assert_eq!(q.rightmost_minimum(), PathPoint::new(0, 0));
        assert_eq!(q.rml(), 0);

        // Minimum height 0 is attained at b = 0 and b = 4; rightmost wins.
        let r = path(&[(2, 1), (1, 1), (1, -2), (1, 1)]);
        assert_eq!(r.rightmost_minimum(), PathPoint::new(4, 0));
    }

    #[test]
    fn rml_along_the_shift_chain() {
        let chain = [
            path(&[(1, -2), (2, 1), (1, 1), (1, 1)]),
            path(&[(1, 1), (1, -2), (2, 1), (1, 1)]),
            path(&[(1, 1), (1, 1), (1, -2), (2, 1)]),
            path(&[(2, 1), (1, 1), (1, -2), (1, 1)]),
        ];
        for (idx, p) in chain.iter().enumerate() {
            assert_eq!(p.rml(), idx as i64 + 1);
        }
    }

    #[test]
    fn path_order_matches_worked_examples() {
        assert_eq!(example_8_11().path_order(), vec![6, 2, 7, 5, 3, 9, 8, 4, 1]);
        assert_eq!(
            path(&[(1, 1), (1, -2), (1, 1), (2, 1)]).path_order(),
            vec![2, 3, 4, 1]
        );
        // Heights (1, 1): the tie is broken by the larger index.
        assert_eq!(path(&[(1, 1), (1, 0)]).path_order(), vec![2, 1]);
    }

    #[test]
    fn sigma_wraps_around_the_first_element() {
        assert_eq!(
            path(&[(1, 1), (1, -2), (1, 1), (2, 1)]).sigma(),
            vec![2, 1, 4, 3]
        );

        // pi(1) = n + 1 gives the full descent.
        let q = path(&[(1, 1), (1, 1), (2, 1), (1, -2)]);
        assert_eq!(q.path_order()[0], 4);
        assert_eq!(q.sigma(), vec![4, 3, 2, 1]);

        // pi(1) = 1 wraps immediately.
        let r = path(&[(1, -2), (1, 1), (1, 1), (2, 1)]);
        assert_eq!(r.path_order()[0], 1);
        assert_eq!(r.sigma(), vec![1, 4, 3, 2]);
    }
}
