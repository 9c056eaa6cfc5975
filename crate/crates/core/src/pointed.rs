//! Pointed lattice paths, their statistics, and the class bijections.
//!
//! A pointed path `[P; j]` distinguishes the root `(m - j, 0)` inside the
//! horizontal span of the last step. Rotating a path through all of its
//! cyclic permutations and all legal offsets produces a class of exactly `m`
//! pointed paths; `theta` and `gamma` enumerate that class so that the
//! pointed statistics sweep `0..m` exactly once each.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::path::{LatticePath, PathError, PathPoint, Step};

/// A lattice path together with a root offset `j`, `0 <= j <= x_{n+1} - 1`.
/// The root is the point `(m - j, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(try_from = "RawPointed")]
pub struct PointedLatticePath {
    path: LatticePath,
    root_offset: i64,
}

#[derive(Deserialize)]
struct RawPointed {
    steps: Vec<Step>,
    root_offset: i64,
}

impl TryFrom<RawPointed> for PointedLatticePath {
    type Error = PathError;

    fn try_from(raw: RawPointed) -> Result<Self, PathError> {
        PointedLatticePath::new(LatticePath::from_steps(raw.steps)?, raw.root_offset)
    }
}

impl Serialize for PointedLatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("PointedLatticePath", 2)?;
        state.serialize_field("steps", self.path.steps())?;
        state.serialize_field("root_offset", &self.root_offset)?;
        state.end()
    }
}

impl PointedLatticePath {
    pub fn new(path: LatticePath, root_offset: i64) -> Result<Self, PathError> {
        let limit = path.last_step().x - 1;
        if root_offset < 0 || root_offset > limit {
            return Err(PathError::RootOffsetViolation {
                offset: root_offset,
                limit,
            });
        }
        Ok(PointedLatticePath { path, root_offset })
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn root_offset(&self) -> i64 {
        self.root_offset
    }

    /// The root point `(m - j, 0)`.
    pub fn root(&self) -> PathPoint {
        PathPoint::new(self.path.m() - self.root_offset, 0)
    }

    /// Pointed non-positive length: `NPL(P) + j`, within `[0, m - 1]`.
    pub fn pnpl(&self) -> i64 {
        self.path.npl() + self.root_offset
    }

    /// Pointed rightmost minimum length: `RML(P) + j`, within `[0, m - 1]`.
    pub fn prml(&self) -> i64 {
        self.path.rml() + self.root_offset
    }
}

impl fmt::Display for PointedLatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.path, self.root_offset)
    }
}

/// One member of a pointed class: the rotation index `i`, the offset `j`,
/// and the realized pointed path `[P_i; j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    rotation_index: usize,
    offset: i64,
    realized: PointedLatticePath,
}

impl ClassMember {
    fn new(base: &LatticePath, rotation_index: usize, offset: i64) -> Self {
        let rotated = base.rotate(rotation_index);
        let realized = PointedLatticePath::new(rotated, offset)
            .expect("offset below the rotated final step length");
        ClassMember {
            rotation_index,
            offset,
            realized,
        }
    }

    /// The rotation index `i`, 1-based.
    pub fn rotation_index(&self) -> usize {
        self.rotation_index
    }

    /// The root offset `j`, `0 <= j <= x_i - 1`.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn realized(&self) -> &PointedLatticePath {
        &self.realized
    }

    pub fn into_realized(self) -> PointedLatticePath {
        self.realized
    }
}

/// The pointed class of `P`: all `[P_i; j]` with `i in [n+1]` and
/// `0 <= j <= x_i - 1`, ordered by `i` then `j`. Contains exactly `m`
/// members, all distinct, since `sum y_i = 1` rules out periodic paths.
pub fn pointed_class(p: &LatticePath) -> Vec<ClassMember> {
    let mut members = Vec::with_capacity(usize::try_from(p.m()).unwrap_or(0));
    for (idx, step) in p.steps().iter().enumerate() {
        for j in 0..step.x {
            members.push(ClassMember::new(p, idx + 1, j));
        }
    }
    members
}

/// The class of `P` ordered so that the pointed non-positive length of the
/// `r`-th member is exactly `r - 1`: rotation indices follow `pi_P`, offsets
/// ascend within each rotation.
pub fn theta_sequence(p: &LatticePath) -> Vec<ClassMember> {
    sequence_for_order(p, &p.path_order())
}

/// The `r`-th member of the class of `P` in `theta` order, `1 <= r <= m`.
/// Walks the cumulative offsets directly instead of materializing the class.
pub fn theta(p: &LatticePath, r: i64) -> Result<PointedLatticePath, PathError> {
    select_for_order(p, &p.path_order(), r)
}

/// The class of `P` ordered so that the pointed rightmost minimum length of
/// the `r`-th member is exactly `r - 1`: rotation indices follow `sigma_P`.
pub fn gamma_sequence(p: &LatticePath) -> Vec<ClassMember> {
    sequence_for_order(p, &p.sigma())
}

/// The `r`-th member of the class of `P` in `gamma` order, `1 <= r <= m`.
pub fn gamma(p: &LatticePath, r: i64) -> Result<PointedLatticePath, PathError> {
    select_for_order(p, &p.sigma(), r)
}

fn sequence_for_order(p: &LatticePath, order: &[usize]) -> Vec<ClassMember> {
    let mut members = Vec::with_capacity(usize::try_from(p.m()).unwrap_or(0));
    for &i in order {
        let x = p.step(i).expect("order yields valid indices").x;
        for j in 0..x {
            members.push(ClassMember::new(p, i, j));
        }
    }
    members
}

fn select_for_order(
    p: &LatticePath,
    order: &[usize],
    r: i64,
) -> Result<PointedLatticePath, PathError> {
    let m = p.m();
    if r < 1 || r > m {
        return Err(PathError::IndexOutOfRange { index: r, limit: m });
    }
    let mut covered = 0;
    for &i in order {
        let x = p.step(i).expect("order yields valid indices").x;
        if r <= covered + x {
            return Ok(ClassMember::new(p, i, r - 1 - covered).into_realized());
        }
        covered += x;
    }
    unreachable!("offsets over the whole order cover [1, m]")
}

/// The lexicographically smallest cyclic permutation of `p`, comparing step
/// sequences as tuples. All rotations of a path share this value, so it
/// serves as the class representative.
pub fn canonical_rotation(p: &LatticePath) -> LatticePath {
    (1..=p.len())
        .map(|i| p.rotate(i))
        .min()
        .expect("a valid path has at least one rotation")
}

/// The canonical representative of the class of `q`.
pub fn canonical_base(q: &PointedLatticePath) -> LatticePath {
    canonical_rotation(q.path())
}

/// Recovers the canonical base path of `q` together with the unique rank
/// `r` such that `theta(base, r)` realizes `q`; `r - 1 = pnpl(q)`.
pub fn theta_index(q: &PointedLatticePath) -> (LatticePath, i64) {
    index_for(q, theta_sequence)
}

/// Recovers the canonical base path of `q` together with the unique rank
/// `r` such that `gamma(base, r)` realizes `q`; `r - 1 = prml(q)`.
pub fn gamma_index(q: &PointedLatticePath) -> (LatticePath, i64) {
    index_for(q, gamma_sequence)
}

fn index_for(
    q: &PointedLatticePath,
    sequence: fn(&LatticePath) -> Vec<ClassMember>,
) -> (LatticePath, i64) {
    let base = canonical_rotation(q.path());
    let rank = sequence(&base)
        .iter()
        .position(|member| member.realized() == q)
        .expect("every pointed path appears in the class of its base");
    (base, rank as i64 + 1)
}

/// The equivalence class of `q`: every pointed path whose underlying path is
/// a cyclic permutation of `q`'s, with all legal offsets. As a set this
/// equals the pointed class of any member's path; it always has `m`
/// elements and is returned in the class order of the canonical base.
pub fn equivalence_class(q: &PointedLatticePath) -> Vec<PointedLatticePath> {
    pointed_class(&canonical_rotation(q.path()))
        .into_iter()
        .map(ClassMember::into_realized)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(steps: &[(i64, i64)]) -> LatticePath {
        LatticePath::new(steps.iter().copied()).expect("valid path")
    }

    /// The base path of the worked pointed example.
    fn example_path() -> LatticePath {
        path(&[(1, 1), (1, -2), (1, 1), (2, 1)])
    }

    fn labels(members: &[ClassMember]) -> Vec<(usize, i64)> {
        members
            .iter()
            .map(|m| (m.rotation_index(), m.offset()))
            .collect()
    }

    #[test]
    fn pointed_statistics_add_the_offset() {
        let dotted = PointedLatticePath::new(example_path(), 1).unwrap();
        assert_eq!(dotted.pnpl(), 3);
        assert_eq!(dotted.prml(), 3);
        assert_eq!(dotted.root(), PathPoint::new(4, 0));

        let plain = PointedLatticePath::new(path(&[(1, 1), (1, 1), (2, 1), (1, -2)]), 0).unwrap();
        assert_eq!(plain.pnpl(), 0);
        assert_eq!(plain.prml(), 0);
    }

    #[test]
    fn root_offset_is_bounded_by_the_last_step() {
        assert!(PointedLatticePath::new(example_path(), 0).is_ok());
        assert!(PointedLatticePath::new(example_path(), 1).is_ok());
        assert_eq!(
            PointedLatticePath::new(example_path(), 2),
            Err(PathError::RootOffsetViolation {
                offset: 2,
                limit: 1
            })
        );
        assert_eq!(
            PointedLatticePath::new(example_path(), -1),
            Err(PathError::RootOffsetViolation {
                offset: -1,
                limit: 1
            })
        );
    }

    #[test]
    fn pointed_class_has_m_members() {
        let class = pointed_class(&example_path());
        assert_eq!(labels(&class), vec![(1, 0), (2, 0), (3, 0), (4, 0), (4, 1)]);

        // All horizontal lengths 1: offsets collapse to 0.
        let tiny = path(&[(1, 1), (1, 0)]);
        assert_eq!(labels(&pointed_class(&tiny)), vec![(1, 0), (2, 0)]);
    }

    #[test]
    fn theta_sequence_matches_the_worked_matrix() {
        let p = example_path();
        let seq = theta_sequence(&p);
        assert_eq!(labels(&seq), vec![(2, 0), (3, 0), (4, 0), (4, 1), (1, 0)]);
        for (idx, member) in seq.iter().enumerate() {
            assert_eq!(member.realized().pnpl(), idx as i64);
            assert_eq!(theta(&p, idx as i64 + 1).unwrap(), *member.realized());
        }
        assert!(matches!(
            theta(&p, 0),
            Err(PathError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            theta(&p, 6),
            Err(PathError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn gamma_sequence_matches_the_worked_matrix() {
        let p = example_path();
        let seq = gamma_sequence(&p);
        assert_eq!(labels(&seq), vec![(2, 0), (1, 0), (4, 0), (4, 1), (3, 0)]);
        for (idx, member) in seq.iter().enumerate() {
            assert_eq!(member.realized().prml(), idx as i64);
            assert_eq!(gamma(&p, idx as i64 + 1).unwrap(), *member.realized());
        }
    }

    #[test]
    fn canonical_rotation_picks_the_lexicographic_minimum() {
        let p = path(&[(2, 1), (1, 1), (1, -2), (1, 1)]);
        let canon = canonical_rotation(&p);
        assert_eq!(canon, path(&[(1, -2), (1, 1), (2, 1), (1, 1)]));
        // Idempotent, and shared by every rotation.
        assert_eq!(canonical_rotation(&canon), canon);
        for i in 1..=p.len() {
            assert_eq!(canonical_rotation(&p.rotate(i)), canon);
        }
    }

    #[test]
    fn index_functions_round_trip() {
        let p = example_path();
        for r in 1..=p.m() {
            let q = theta(&p, r).unwrap();
            let (base, rank) = theta_index(&q);
            assert_eq!(theta(&base, rank).unwrap(), q);
            assert_eq!(rank - 1, q.pnpl());

            let g = gamma(&p, r).unwrap();
            let (base, rank) = gamma_index(&g);
            assert_eq!(gamma(&base, rank).unwrap(), g);
            assert_eq!(rank - 1, g.prml());
        }
    }

    #[test]
    fn equivalence_class_is_rotation_invariant() {
        let q = PointedLatticePath::new(example_path(), 1).unwrap();
        let class = equivalence_class(&q);
        assert_eq!(class.len(), 5);
        assert!(class.contains(&q));
        for member in &class {
            assert_eq!(equivalence_class(member), class);
        }
    }

    #[test]
    fn pointed_serde_includes_the_offset() {
        let q = PointedLatticePath::new(example_path(), 1).unwrap();
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(
            json,
            r#"{"steps":[[1,1],[1,-2],[1,1],[2,1]],"root_offset":1}"#
        );
        let back: PointedLatticePath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        let bad: Result<PointedLatticePath, _> =
            serde_json::from_str(r#"{"steps":[[1,1],[1,-2],[1,1],[2,1]],"root_offset":2}"#);
        assert!(bad.is_err());
    }
}
