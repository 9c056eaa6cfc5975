//! Step and path types, validation, parsing, and cyclic permutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One step of a lattice path: `x` cells of horizontal advance and a height
/// change of `y`. Within a valid path of order n+1, `x >= 1` and
/// `1 - n <= y <= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub x: i64,
    pub y: i64,
}

impl Step {
    pub const fn new(x: i64, y: i64) -> Self {
        Step { x, y }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

// Steps serialize as two-element arrays `[x, y]`.
impl Serialize for Step {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Step {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (x, y) = <(i64, i64)>::deserialize(deserializer)?;
        Ok(Step { x, y })
    }
}

/// A point `(b, a)` on the integer grid: `b` is the horizontal coordinate,
/// `a` the height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathPoint {
    pub b: i64,
    pub a: i64,
}

impl PathPoint {
    pub const fn new(b: i64, a: i64) -> Self {
        PathPoint { b, a }
    }
}

impl fmt::Display for PathPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.a)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("a path must contain at least one step")]
    EmptyPath,
    #[error("a single-step path has order parameter 0; at least two steps are required")]
    EmptyOrderViolation,
    #[error("step {index}: horizontal length {value} must be a positive integer")]
    SumXViolation { index: usize, value: i64 },
    #[error("step {index}: height change {value} lies outside [{lower}, 1]")]
    BoundYViolation {
        index: usize,
        value: i64,
        lower: i64,
    },
    #[error("height changes sum to {sum}, expected 1")]
    SumYViolation { sum: i128 },
    #[error("coordinates exceed the machine integer range")]
    Overflow,
    #[error("index {index} outside [1, {limit}]")]
    IndexOutOfRange { index: i64, limit: i64 },
    #[error("root offset {offset} outside [0, {limit}]")]
    RootOffsetViolation { offset: i64, limit: i64 },
}

/// An (n,m)-lattice path: a sequence of n+1 steps `(x_i, y_i)` with
/// `x_i >= 1`, `sum x_i = m`, `1 - n <= y_i <= 1` and `sum y_i = 1`.
/// Viewed geometrically it runs from the origin to `(m, 1)`.
///
/// The order parameter `n` and total length `m` are derived from the step
/// sequence; all public indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct LatticePath {
    steps: Vec<Step>,
}

#[derive(Deserialize)]
struct RawPath {
    steps: Vec<Step>,
}

impl TryFrom<RawPath> for LatticePath {
    type Error = PathError;

    fn try_from(raw: RawPath) -> Result<Self, PathError> {
        LatticePath::from_steps(raw.steps)
    }
}

impl LatticePath {
    /// Validates a raw step sequence. `n` and `m` are inferred; the
    /// constraint `m >= n + 1` follows from positivity of the `x_i`, and
    /// `x_i <= m - 1` is implied by positivity and the sum once `n >= 1`.
    pub fn new<I>(steps: I) -> Result<Self, PathError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_steps(steps.into_iter().map(|(x, y)| Step::new(x, y)).collect())
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, PathError> {
        match steps.len() {
            0 => return Err(PathError::EmptyPath),
            1 => return Err(PathError::EmptyOrderViolation),
            _ => {}
        }
        let n = steps.len() - 1;
        let lower = 1 - n as i64;
        let mut sum_x: i128 = 0;
        let mut sum_y: i128 = 0;
        for (idx, step) in steps.iter().enumerate() {
            let index = idx + 1;
            if step.x < 1 {
                return Err(PathError::SumXViolation {
                    index,
                    value: step.x,
                });
            }
            if step.y < lower || step.y > 1 {
                return Err(PathError::BoundYViolation {
                    index,
                    value: step.y,
                    lower,
                });
            }
            sum_x += step.x as i128;
            sum_y += step.y as i128;
            if sum_x > i64::MAX as i128 || sum_y.unsigned_abs() > i64::MAX as u128 {
                return Err(PathError::Overflow);
            }
        }
        if sum_y != 1 {
            return Err(PathError::SumYViolation { sum: sum_y });
        }
        Ok(LatticePath { steps })
    }

    /// Builds a path whose invariants are already known to hold.
    pub(crate) fn from_validated(steps: Vec<Step>) -> Self {
        debug_assert!(Self::from_steps(steps.clone()).is_ok());
        LatticePath { steps }
    }

    /// The order parameter `n`; the path has `n + 1` steps.
    pub fn n(&self) -> usize {
        self.steps.len() - 1
    }

    /// The total length `m = sum x_i`.
    pub fn m(&self) -> i64 {
        self.steps.iter().map(|s| s.x).sum()
    }

    /// Number of steps, `n + 1`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid path always has at least two steps
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The `i`-th step, 1-based.
    pub fn step(&self, i: usize) -> Option<Step> {
        (1..=self.steps.len())
            .contains(&i)
            .then(|| self.steps[i - 1])
    }

    pub fn first_step(&self) -> Step {
        self.steps[0]
    }

    pub fn last_step(&self) -> Step {
        *self.steps.last().expect("a valid path is nonempty")
    }

    /// The `i`-th cyclic permutation
    /// `(x_{i+1}, y_{i+1}) ... (x_{n+1}, y_{n+1}) (x_1, y_1) ... (x_i, y_i)`,
    /// for `1 <= i <= n + 1`. Rotation preserves validity since all sums and
    /// bounds are invariant.
    pub fn cyclic_permutation(&self, i: usize) -> Result<Self, PathError> {
        if i < 1 || i > self.steps.len() {
            return Err(PathError::IndexOutOfRange {
                index: i as i64,
                limit: self.steps.len() as i64,
            });
        }
        Ok(self.rotate(i))
    }

    pub(crate) fn rotate(&self, i: usize) -> Self {
        debug_assert!((1..=self.steps.len()).contains(&i));
        let mut steps = Vec::with_capacity(self.steps.len());
        steps.extend_from_slice(&self.steps[i..]);
        steps.extend_from_slice(&self.steps[..i]);
        LatticePath { steps }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PathParseError {
    #[error("syntax error at byte {offset}: expected {expected}")]
    Syntax {
        offset: usize,
        expected: &'static str,
    },
    #[error(transparent)]
    Invalid(#[from] PathError),
}

/// Parses the text shorthand `"(1,1)(1,-2)(2,1)"`: one or more
/// `"(" integer "," integer ")"` groups with optional whitespace between
/// tokens. The parsed sequence is then validated as a lattice path.
impl FromStr for LatticePath {
    type Err = PathParseError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let bytes = input.as_bytes();
        let mut pos = 0;
        let mut pairs = Vec::new();
        loop {
            skip_ws(bytes, &mut pos);
            if pos >= bytes.len() {
                break;
            }
            expect(bytes, &mut pos, b'(', "'('")?;
            skip_ws(bytes, &mut pos);
            let x = parse_int(bytes, &mut pos)?;
            skip_ws(bytes, &mut pos);
            expect(bytes, &mut pos, b',', "','")?;
            skip_ws(bytes, &mut pos);
            let y = parse_int(bytes, &mut pos)?;
            skip_ws(bytes, &mut pos);
            expect(bytes, &mut pos, b')', "')'")?;
            pairs.push((x, y));
        }
        if pairs.is_empty() {
            return Err(PathParseError::Syntax {
                offset: 0,
                expected: "at least one \"(x,y)\" step",
            });
        }
        LatticePath::new(pairs).map_err(Into::into)
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn expect(
    bytes: &[u8],
    pos: &mut usize,
    byte: u8,
    expected: &'static str,
) -> Result<(), PathParseError> {
    if *pos < bytes.len() && bytes[*pos] == byte {
        *pos += 1;
        Ok(())
    } else {
        Err(PathParseError::Syntax {
            offset: *pos,
            expected,
        })
    }
}

fn parse_int(bytes: &[u8], pos: &mut usize) -> Result<i64, PathParseError> {
    let start = *pos;
    let negative = if *pos < bytes.len() && bytes[*pos] == b'-' {
        *pos += 1;
        true
    } else {
        false
    };
    let mut value: i64 = 0;
    let mut digits = 0;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        let digit = (bytes[*pos] - b'0') as i64;
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(digit))
            .ok_or(PathParseError::Syntax {
                offset: start,
                expected: "integer within machine range",
            })?;
        digits += 1;
        *pos += 1;
    }
    if digits == 0 {
        return Err(PathParseError::Syntax {
            offset: *pos,
            expected: "an integer",
        });
    }
    Ok(if negative { -value } else { value })
}
