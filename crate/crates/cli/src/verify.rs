//! The exhaustive verification suite behind the `verify` subcommand.
//!
//! Every check runs over one `(n, m)` cell, compares an expected description
//! against an observed one, and passes exactly when the two strings match.
//! Check ordering is fixed, so the report is deterministic for fixed flags.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use chung_feller::bijections::{
    phi, phi_inv, phi_zero, phi_zero_inv, psi, psi_inv, psi_zero, psi_zero_inv,
};
use chung_feller::enumeration::{
    count_closed_form, enumerate_paths, enumerate_pointed, histogram, path_space_size,
    pointed_space_size, step_set_histogram, CountKind, EnumerationError, Statistic, StepSet,
};
use chung_feller::pointed::{
    canonical_rotation, gamma, gamma_index, pointed_class, theta, theta_index,
};
use chung_feller::{BigUint, LatticePath, PointedLatticePath};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Npl,
    Rml,
    Pointed,
    StepSets,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Npl => "npl",
            Suite::Rml => "rml",
            Suite::Pointed => "pointed",
            Suite::StepSets => "stepsets",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "npl" => Ok(Suite::Npl),
            "rml" => Ok(Suite::Rml),
            "pointed" => Ok(Suite::Pointed),
            "stepsets" => Ok(Suite::StepSets),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub params: serde_json::Value,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl CheckOutcome {
    fn new(name: &str, params: serde_json::Value, expected: String, observed: String) -> Self {
        let pass = expected == observed;
        CheckOutcome {
            name: name.to_string(),
            params,
            expected,
            observed,
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
    pub summary: Summary,
}

/// Runs the selected suite over every `(n, m)` cell. Refuses before any
/// work when some cell's space exceeds `cap`, so a cap failure produces no
/// partial report.
pub fn run_suite(
    cells: &[(usize, i64)],
    suite: Suite,
    cap: u64,
) -> Result<VerificationReport, EnumerationError> {
    // Plain-path suites never touch the pointed space; bound accordingly.
    let needs_pointed = suite.includes(Suite::Pointed) || suite.includes(Suite::StepSets);
    for &(n, m) in cells {
        let size = if needs_pointed {
            pointed_space_size(n, m)?
        } else {
            path_space_size(n, m)?
        };
        if size > BigUint::from(cap) {
            return Err(EnumerationError::CapExceeded { size, cap });
        }
    }

    let mut checks = Vec::new();
    for &(n, m) in cells {
        let cell = Cell::load(n, m, cap)?;
        if suite.includes(Suite::Npl) {
            cell.npl_checks(&mut checks)?;
        }
        if suite.includes(Suite::Rml) {
            cell.rml_checks(&mut checks)?;
        }
        if suite.includes(Suite::Pointed) {
            cell.pointed_checks(&mut checks)?;
        }
        if suite.includes(Suite::StepSets) {
            cell.step_set_checks(&mut checks, cap)?;
        }
    }

    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    let total = checks.len();
    Ok(VerificationReport {
        checks,
        summary: Summary {
            passed,
            failed,
            total,
        },
    })
}

fn render_counts(counts: &BTreeMap<i64, BigUint>) -> String {
    let entries: Vec<String> = counts
        .iter()
        .map(|(value, count)| format!("{value}: {count}"))
        .collect();
    format!("{{{}}}", entries.join(", "))
}

/// Expected/observed pair for a universally quantified predicate: the first
/// counterexample, if any, lands in the observed string.
fn predicate(description: &str, counterexample: Option<String>) -> (String, String) {
    match counterexample {
        None => (description.to_string(), description.to_string()),
        Some(witness) => (description.to_string(), format!("violated: {witness}")),
    }
}

struct Cell {
    n: usize,
    m: i64,
    paths: Vec<LatticePath>,
    cap: u64,
}

impl Cell {
    fn load(n: usize, m: i64, cap: u64) -> Result<Self, EnumerationError> {
        let paths: Vec<LatticePath> = enumerate_paths(n, m)?.collect();
        Ok(Cell { n, m, paths, cap })
    }

    fn params(&self) -> serde_json::Value {
        json!({"n": self.n, "m": self.m})
    }

    fn classes_by<F: Fn(&LatticePath) -> i64>(
        &self,
        stat: F,
    ) -> BTreeMap<i64, BTreeSet<LatticePath>> {
        let mut classes: BTreeMap<i64, BTreeSet<LatticePath>> = BTreeMap::new();
        for p in &self.paths {
            classes.entry(stat(p)).or_default().insert(p.clone());
        }
        classes
    }

    /// The tilde set: statistic 0 and a final step of horizontal length 1.
    fn tilde_set(&self) -> BTreeSet<LatticePath> {
        self.paths
            .iter()
            .filter(|p| p.npl() == 0 && p.last_step().x == 1)
            .cloned()
            .collect()
    }

    fn expected_plain_counts(&self) -> Result<BTreeMap<i64, BigUint>, EnumerationError> {
        let mut expected = BTreeMap::new();
        expected.insert(0, count_closed_form(CountKind::NplZero, self.n, self.m)?);
        let per_level = count_closed_form(CountKind::NplZeroTilde, self.n, self.m)?;
        for r in 1..self.m {
            expected.insert(r, per_level.clone());
        }
        Ok(expected)
    }

    fn histogram_check(
        &self,
        name: &str,
        statistic: Statistic,
        expected: BTreeMap<i64, BigUint>,
    ) -> Result<CheckOutcome, EnumerationError> {
        let observed = histogram(self.n, self.m, statistic, self.cap)?;
        Ok(CheckOutcome::new(
            name,
            self.params(),
            render_counts(&expected),
            render_counts(observed.counts()),
        ))
    }

    /// Verifies that `map` restricted to `from` is a bijection onto `to`
    /// whose inverse is `inverse`. Returns the first defect found.
    fn level_bijection<F, G>(
        from: &BTreeSet<LatticePath>,
        to: &BTreeSet<LatticePath>,
        map: F,
        inverse: G,
        label: &str,
    ) -> Option<String>
    where
        F: Fn(&LatticePath) -> Result<LatticePath, chung_feller::bijections::BijectionError>,
        G: Fn(&LatticePath) -> Result<LatticePath, chung_feller::bijections::BijectionError>,
    {
        let mut image = BTreeSet::new();
        for p in from {
            let q = match map(p) {
                Ok(q) => q,
                Err(err) => return Some(format!("{label}: {p} rejected: {err}")),
            };
            match inverse(&q) {
                Ok(back) if back == *p => {}
                Ok(back) => return Some(format!("{label}: round trip sent {p} to {back}")),
                Err(err) => return Some(format!("{label}: inverse rejected {q}: {err}")),
            }
            image.insert(q);
        }
        if image.len() != from.len() {
            return Some(format!("{label}: map is not injective"));
        }
        if &image != to {
            return Some(format!(
                "{label}: image has {} members, target has {}",
                image.len(),
                to.len()
            ));
        }
        None
    }

    fn npl_checks(&self, out: &mut Vec<CheckOutcome>) -> Result<(), EnumerationError> {
        out.push(self.histogram_check(
            "npl_histogram",
            Statistic::Npl,
            self.expected_plain_counts()?,
        )?);

        let classes = self.classes_by(|p| p.npl());
        let empty = BTreeSet::new();
        let mut defect = None;
        for r in 1..=self.m - 2 {
            let from = classes.get(&r).unwrap_or(&empty);
            let to = classes.get(&(r + 1)).unwrap_or(&empty);
            defect = Self::level_bijection(from, to, phi, phi_inv, &format!("level {r}"));
            if defect.is_some() {
                break;
            }
        }
        let (expected, observed) = predicate(
            "bijective on every level 1 <= r <= m-2 with exact inverse",
            defect,
        );
        out.push(CheckOutcome::new(
            "phi_level_bijections",
            self.params(),
            expected,
            observed,
        ));

        let defect = Self::level_bijection(
            &self.tilde_set(),
            classes.get(&1).unwrap_or(&empty),
            phi_zero,
            phi_zero_inv,
            "zero level",
        );
        let (expected, observed) = predicate(
            "bijective from the tilde set onto level 1 with exact inverse",
            defect,
        );
        out.push(CheckOutcome::new(
            "phi_zero_bijection",
            self.params(),
            expected,
            observed,
        ));

        let defect = self
            .paths
            .iter()
            .find(|p| (p.npl() == 0) != (p.rml() == 0))
            .map(|p| format!("{p}: npl {} vs rml {}", p.npl(), p.rml()));
        let (expected, observed) = predicate("npl vanishes exactly when rml vanishes", defect);
        out.push(CheckOutcome::new(
            "npl_zero_iff_rml_zero",
            self.params(),
            expected,
            observed,
        ));
        Ok(())
    }

    fn rml_checks(&self, out: &mut Vec<CheckOutcome>) -> Result<(), EnumerationError> {
        out.push(self.histogram_check(
            "rml_histogram",
            Statistic::Rml,
            self.expected_plain_counts()?,
        )?);

        let classes = self.classes_by(|p| p.rml());
        let empty = BTreeSet::new();
        let mut defect = None;
        for r in 1..=self.m - 2 {
            let from = classes.get(&r).unwrap_or(&empty);
            let to = classes.get(&(r + 1)).unwrap_or(&empty);
            defect = Self::level_bijection(from, to, psi, psi_inv, &format!("level {r}"));
            if defect.is_some() {
                break;
            }
        }
        let (expected, observed) = predicate(
            "bijective on every level 1 <= r <= m-2 with exact inverse",
            defect,
        );
        out.push(CheckOutcome::new(
            "psi_level_bijections",
            self.params(),
            expected,
            observed,
        ));

        let defect = Self::level_bijection(
            &self.tilde_set(),
            classes.get(&1).unwrap_or(&empty),
            psi_zero,
            psi_zero_inv,
            "zero level",
        );
        let (expected, observed) = predicate(
            "bijective from the tilde set onto level 1 with exact inverse",
            defect,
        );
        out.push(CheckOutcome::new(
            "psi_zero_bijection",
            self.params(),
            expected,
            observed,
        ));
        Ok(())
    }

    fn pointed_checks(&self, out: &mut Vec<CheckOutcome>) -> Result<(), EnumerationError> {
        let defect = self
            .paths
            .iter()
            .find(|p| pointed_class(p).len() as i64 != self.m)
            .map(|p| format!("{p}: class size {}", pointed_class(p).len()));
        let (expected, observed) = predicate("every pointed class has exactly m members", defect);
        out.push(CheckOutcome::new(
            "pointed_class_size",
            self.params(),
            expected,
            observed,
        ));

        let mut defect = None;
        'theta: for p in &self.paths {
            for r in 1..=self.m {
                let value = theta(p, r).expect("r within [1, m]").pnpl();
                if value != r - 1 {
                    defect = Some(format!("{p}: theta({r}) has pnpl {value}"));
                    break 'theta;
                }
            }
        }
        let (expected, observed) = predicate("pnpl(theta(P, r)) = r - 1 for every P and r", defect);
        out.push(CheckOutcome::new(
            "theta_statistics",
            self.params(),
            expected,
            observed,
        ));

        let mut defect = None;
        'gamma: for p in &self.paths {
            for r in 1..=self.m {
                let value = gamma(p, r).expect("r within [1, m]").prml();
                if value != r - 1 {
                    defect = Some(format!("{p}: gamma({r}) has prml {value}"));
                    break 'gamma;
                }
            }
        }
        let (expected, observed) = predicate("prml(gamma(P, r)) = r - 1 for every P and r", defect);
        out.push(CheckOutcome::new(
            "gamma_statistics",
            self.params(),
            expected,
            observed,
        ));

        let per_value = count_closed_form(CountKind::PointedPerR, self.n, self.m)?;
        let expected_counts: BTreeMap<i64, BigUint> =
            (0..self.m).map(|r| (r, per_value.clone())).collect();
        out.push(self.histogram_check(
            "pnpl_histogram_flat",
            Statistic::Pnpl,
            expected_counts.clone(),
        )?);
        out.push(self.histogram_check("prml_histogram_flat", Statistic::Prml, expected_counts)?);

        // Equivalence classes partition the pointed space into cells of
        // size m, one representative base path each.
        let mut class_sizes: BTreeMap<LatticePath, u64> = BTreeMap::new();
        for q in enumerate_pointed(self.n, self.m)? {
            *class_sizes.entry(canonical_rotation(q.path())).or_default() += 1;
        }
        let class_count = pointed_space_size(self.n, self.m)? / BigUint::from(self.m as u64);
        let expected = format!("{} classes, every class of size {}", class_count, self.m);
        let observed = match class_sizes.iter().find(|(_, &size)| size as i64 != self.m) {
            Some((base, size)) => format!("class of {base} has size {size}"),
            None => format!(
                "{} classes, every class of size {}",
                class_sizes.len(),
                self.m
            ),
        };
        out.push(CheckOutcome::new(
            "equivalence_partition",
            self.params(),
            expected,
            observed,
        ));

        let mut defect = None;
        for q in enumerate_pointed(self.n, self.m)? {
            let (base, rank) = theta_index(&q);
            if theta(&base, rank).expect("rank within [1, m]") != q || rank - 1 != q.pnpl() {
                defect = Some(format!("theta_index failed on {q}"));
                break;
            }
            let (base, rank) = gamma_index(&q);
            if gamma(&base, rank).expect("rank within [1, m]") != q || rank - 1 != q.prml() {
                defect = Some(format!("gamma_index failed on {q}"));
                break;
            }
        }
        let (expected, observed) = predicate(
            "index lookups invert theta and gamma at rank pnpl + 1 / prml + 1",
            defect,
        );
        out.push(CheckOutcome::new(
            "index_round_trips",
            self.params(),
            expected,
            observed,
        ));

        if self.m == self.n as i64 + 1 {
            let mut defect = None;
            for p in &self.paths {
                let mut values: Vec<i64> = (1..=p.len())
                    .map(|i| {
                        let rotated = p.cyclic_permutation(i).expect("index in range");
                        PointedLatticePath::new(rotated, 0)
                            .expect("unit final step")
                            .pnpl()
                    })
                    .collect();
                values.sort_unstable();
                if values != (0..self.m).collect::<Vec<_>>() {
                    defect = Some(format!("{p}: shift statistics {values:?}"));
                    break;
                }
            }
            let (expected, observed) = predicate(
                "cyclic shifts realize every statistic value exactly once",
                defect,
            );
            out.push(CheckOutcome::new(
                "unit_length_orbit",
                self.params(),
                expected,
                observed,
            ));
        }

        let zero = count_closed_form(CountKind::NplZero, self.n, self.m)?;
        let tilde = count_closed_form(CountKind::NplZeroTilde, self.n, self.m)?;
        let split = zero + tilde * BigUint::from((self.m - 1) as u64);
        let total = path_space_size(self.n, self.m)?;
        out.push(CheckOutcome::new(
            "count_conservation",
            self.params(),
            total.to_string(),
            split.to_string(),
        ));
        Ok(())
    }

    fn step_set_checks(
        &self,
        out: &mut Vec<CheckOutcome>,
        cap: u64,
    ) -> Result<(), EnumerationError> {
        let presets: [(&str, StepSet); 3] = [
            ("dyck", StepSet::dyck()),
            ("schroeder", StepSet::schroeder()),
            ("motzkin", StepSet::motzkin()),
        ];
        for (name, set) in presets {
            for statistic in [Statistic::Pnpl, Statistic::Prml] {
                let d = step_set_histogram(&set, self.n, self.m, statistic, cap)?;
                let defect = if d.is_flat(self.m) {
                    None
                } else {
                    Some(format!("counts {}", render_counts(d.counts())))
                };
                let (expected, observed) =
                    predicate("counts constant over every statistic value", defect);
                out.push(CheckOutcome::new(
                    &format!("stepset_{name}_{}_flat", statistic.name().to_lowercase()),
                    json!({"n": self.n, "m": self.m, "set": name}),
                    expected,
                    observed,
                ));
            }
        }
        Ok(())
    }
}
