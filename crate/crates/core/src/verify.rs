//! Randomized and exhaustive verification of the theory.
//!
//! Every check is exact. The report is a deterministic function of the
//! configuration, so equal seeds give byte-identical output.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::durfee::{analyze, black_dots_in_rectangle, black_dots_in_rectangle_by_cells, Property};
use crate::error::Result;
use crate::ferrers::splitting_counts;
use crate::flags::max_distance;
use crate::paths::{enumerate_paths, path_from_flag_pair, realize_path};
use crate::random::{random_code, Strategy};
use crate::Limits;

/// One row of the distance path / splitting correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRow {
    pub distance: usize,
    pub paths: usize,
    pub codistance: usize,
    pub splittings: usize,
}

impl BijectionRow {
    pub fn matches(&self) -> bool {
        self.paths == self.splittings
    }
}

/// Paths with distance `d` against splittings of `D^n - d`, for every `d`.
pub fn bijection_table(n: usize, limits: &Limits) -> Result<Vec<BijectionRow>> {
    let top = max_distance(n);
    let mut paths = vec![0usize; top + 1];
    for p in enumerate_paths(n, None, limits)? {
        paths[p.distance()] += 1;
    }
    let splittings = splitting_counts(n, limits)?;
    Ok((0..=top)
        .map(|d| BijectionRow {
            distance: d,
            paths: paths[d],
            codistance: top - d,
            splittings: splittings[top - d],
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub q_values: Vec<u32>,
    /// Random codes per `(n, q)`.
    pub trials: usize,
    pub seed: u64,
    /// Codes have between 2 and this many flags before deduplication.
    pub max_code_size: usize,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_min: 2,
            n_max: 7,
            q_values: vec![2, 3],
            trials: 1000,
            seed: 0,
            max_code_size: 6,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(detail());
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub codes: usize,
    pub properties: BTreeMap<String, Tally>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.values().all(|t| t.violations == 0)
    }

    pub fn total_violations(&self) -> usize {
        self.properties.values().map(|t| t.violations).sum()
    }

    fn tally(&mut self, name: &str) -> &mut Tally {
        self.properties.entry(name.to_string()).or_default()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}, {} random codes", self.seed, self.codes)?;
        let width = self.properties.keys().map(String::len).max().unwrap_or(0);
        for (name, t) in &self.properties {
            let status = if t.violations == 0 { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{name:<width$}  {status:<4}  checked {:>8}  violations {}",
                t.checked, t.violations
            )?;
            if let Some(d) = &t.first_violation {
                writeln!(f, "  first violation: {d}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all properties hold"
            } else {
                "violations found"
            }
        )
    }
}

/// Per-property tallies from random codes only.
pub fn check_random_codes(
    n: usize,
    q: u32,
    trials: usize,
    seed: u64,
    max_code_size: usize,
) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        seed,
        ..Default::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ u64::from(q) << 48);
    for t in 0..trials {
        let strategy = Strategy::ALL[t % Strategy::ALL.len()];
        let size = rng.gen_range(2..=max_code_size.max(2));
        let code = random_code(q, n, size, strategy, &mut rng)?;
        report.codes += 1;

        let allowed = report.tally("allowed pattern of pair paths");
        for (a, b) in code.pairs() {
            let ok = path_from_flag_pair(a, b).is_ok();
            allowed.record(ok, || {
                format!("n={n} q={q}: a pair violates the trident rule")
            });
        }

        let analysis = analyze(&code)?;
        for p in Property::ALL {
            let applied = analysis.checks.get(&p).copied().unwrap_or(0);
            let failed: Vec<_> = analysis
                .failures
                .iter()
                .filter(|f| f.property == p)
                .collect();
            let tally = report.tally(p.name());
            tally.checked += applied;
            tally.violations += failed.len();
            if let (None, Some(f)) = (&tally.first_violation, failed.first()) {
                tally.first_violation = Some(format!("n={n} q={q} trial={t}: {}", f.detail));
            }
        }

        let d = analysis.min_distance;
        let dbar = analysis.codistance.unwrap_or(0);
        report
            .tally("distance plus codistance")
            .record(d + dbar == max_distance(n), || {
                format!("n={n} q={q}: {d} + {dbar}")
            });
    }
    Ok(report)
}

fn merge(into: &mut VerifyReport, from: VerifyReport) {
    into.codes += from.codes;
    for (name, t) in from.properties {
        let e = into.properties.entry(name).or_default();
        e.checked += t.checked;
        e.violations += t.violations;
        if e.first_violation.is_none() {
            e.first_violation = t.first_violation;
        }
    }
}

/// Exhaustive combinatorial checks for one `n`.
fn check_combinatorics(
    report: &mut VerifyReport,
    n: usize,
    q_values: &[u32],
    limits: &Limits,
) -> Result<()> {
    let paths = enumerate_paths(n, None, limits)?;
    for p in &paths {
        let pl = p.plateaus();
        report
            .tally("plateau parity")
            .record(pl.total % 2 == n % 2, || format!("{p:?}"));
        report
            .tally("pick area")
            .record(p.pick_area() == p.distance(), || format!("{p:?}"));
        report
            .tally("path reversal")
            .record(p.reversed().distance() == p.distance(), || format!("{p:?}"));
    }
    if n <= limits.max_flag_n {
        for &q in q_values {
            for p in &paths {
                let ok = realize_path(p, q)
                    .and_then(|(f, g)| path_from_flag_pair(&f, &g))
                    .is_ok_and(|r| r == *p);
                report
                    .tally("realization round trip")
                    .record(ok, || format!("q={q} {:?}", p.deltas()));
            }
        }
    }
    for row in bijection_table(n, limits)? {
        report
            .tally("path/splitting bijection")
            .record(row.matches(), || {
                format!(
                    "n={n}: {} paths at d={} but {} splittings at codistance {}",
                    row.paths, row.distance, row.splittings, row.codistance
                )
            });
    }
    for a in 0..n {
        for b in 0..=n - a {
            let formula = black_dots_in_rectangle(a, b, n)?;
            let cells = black_dots_in_rectangle_by_cells(a, b, n);
            report
                .tally("rectangle black dots")
                .record(formula == cells, || {
                    format!("n={n} {a}x{b}: {formula} vs {cells}")
                });
        }
    }
    Ok(())
}

/// Runs every suite: exhaustive combinatorics for each `n`, then random codes per `(n, q)`.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        seed: config.seed,
        ..Default::default()
    };
    for n in config.n_min.max(2)..=config.n_max {
        check_combinatorics(&mut report, n, &config.q_values, &config.limits)?;
        for &q in &config.q_values {
            let part = check_random_codes(n, q, config.trials, config.seed, config.max_code_size)?;
            merge(&mut report, part);
        }
    }
    Ok(report)
}
