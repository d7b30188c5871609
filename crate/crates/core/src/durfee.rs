//! Durfee k-rectangles and the link between a full flag code and its projected codes.
//!
//! A Durfee k-rectangle of `λ` with `r` rows has `r + k` columns and is the
//! largest such rectangle anchored at the corner of `FF(n)`. A staircase passes
//! through the black point `(i, i - r)` of the distance support exactly when the
//! `(n - 2i)`-rectangle of its subdiagram has `r` rows; for dimensions above
//! `n/2` the same holds for tall rectangles, i.e. for the conjugate partition.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ferrers::{
    cell_color, partition_of_staircase, staircase_class, CellColor, EmbeddedPartition,
};
use crate::flags::{codistance, max_distance, min_distance, projected_code, FlagCode};
use crate::paths::{paths_of_code, DistancePath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DurfeeRectangle {
    pub k: usize,
    pub rows: usize,
}

impl DurfeeRectangle {
    pub fn cols(&self) -> usize {
        if self.rows == 0 {
            0
        } else {
            self.rows + self.k
        }
    }
}

fn check_offset(n: usize, k: usize) -> Result<()> {
    let max = n.saturating_sub(2);
    if k > max {
        return Err(Error::OffsetOutOfRange { k, max });
    }
    Ok(())
}

/// `r = max{t : λ_t ≥ t + k}`, 0 when no row qualifies.
pub fn durfee_rectangle(p: &EmbeddedPartition, k: usize) -> Result<DurfeeRectangle> {
    check_offset(p.n(), k)?;
    let rows = p
        .parts()
        .iter()
        .enumerate()
        .take_while(|&(t, &len)| len >= t + 1 + k)
        .count();
    Ok(DurfeeRectangle { k, rows })
}

/// Largest corner rectangle with `c` columns and `c + k` rows, reported by its column count.
pub fn tall_durfee_rectangle(p: &EmbeddedPartition, k: usize) -> Result<DurfeeRectangle> {
    durfee_rectangle(&p.conjugate(), k)
}

/// Black cells in a corner-anchored `a x b` rectangle of `FF(n)`:
/// `⌈ab/2⌉` for even `n`, `⌊ab/2⌋` for odd `n`.
pub fn black_dots_in_rectangle(a: usize, b: usize, n: usize) -> Result<usize> {
    let fits = a == 0 || b == 0 || (a < n && b <= n - a);
    if !fits {
        return Err(Error::RectangleOutsideFrame {
            rows: a,
            cols: b,
            n,
        });
    }
    let ab = a * b;
    Ok(if n.is_multiple_of(2) {
        ab.div_ceil(2)
    } else {
        ab / 2
    })
}

/// Same count, by coloring every cell.
pub fn black_dots_in_rectangle_by_cells(a: usize, b: usize, n: usize) -> usize {
    (1..=a)
        .flat_map(|i| (1..=b).map(move |j| (i, j)))
        .filter(|&(i, j)| cell_color(n, i, j) == Ok(CellColor::Black))
        .count()
}

/// `F(C)`: all subdiagrams whose silhouette has a skeleton in `Γ(C)`.
pub fn ferrers_set_of_paths<'a>(
    paths: impl IntoIterator<Item = &'a DistancePath>,
) -> BTreeSet<EmbeddedPartition> {
    paths
        .into_iter()
        .flat_map(|p| {
            staircase_class(p)
                .into_iter()
                .map(|s| partition_of_staircase(&s))
        })
        .collect()
}

/// `D_k(C)` for every offset, as sorted (descending) distinct row counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DurfeeSets {
    pub n: usize,
    /// No pair of distinct flags exists, so `F(C)` is empty.
    pub no_pairs: bool,
    /// Wide rectangles: `k -> {r_1 > r_2 > …}`.
    pub wide: BTreeMap<usize, Vec<usize>>,
    /// Tall rectangles (more rows than columns): `k -> {c_1 > c_2 > …}`.
    pub tall: BTreeMap<usize, Vec<usize>>,
}

impl DurfeeSets {
    /// The row counts relevant to dimension `i` (`1 ≤ i ≤ n-1`), together with
    /// the reflected dimension `min(i, n-i)` they refer to.
    pub fn for_dimension(&self, i: usize) -> Result<(usize, &[usize])> {
        let n = self.n;
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: n - 1,
            });
        }
        let (low, map) = if 2 * i <= n {
            (i, &self.wide)
        } else {
            (n - i, &self.tall)
        };
        let values = map.get(&(n - 2 * low)).map_or(&[][..], Vec::as_slice);
        Ok((low, values))
    }
}

fn sorted_desc(set: BTreeSet<usize>) -> Vec<usize> {
    set.into_iter().rev().collect()
}

/// Durfee sets of the subdiagrams generated by the given distance paths.
pub fn durfee_sets_of_paths(n: usize, paths: &BTreeSet<DistancePath>) -> DurfeeSets {
    let ferrers = ferrers_set_of_paths(paths);
    let mut wide = BTreeMap::new();
    let mut tall = BTreeMap::new();
    if !ferrers.is_empty() {
        for k in 0..=n.saturating_sub(2) {
            let w: BTreeSet<usize> = ferrers
                .iter()
                .map(|p| durfee_rectangle(p, k).expect("offset in range").rows)
                .collect();
            let t: BTreeSet<usize> = ferrers
                .iter()
                .map(|p| tall_durfee_rectangle(p, k).expect("offset in range").rows)
                .collect();
            wide.insert(k, sorted_desc(w));
            tall.insert(k, sorted_desc(t));
        }
    }
    DurfeeSets {
        n,
        no_pairs: paths.is_empty(),
        wide,
        tall,
    }
}

/// `D_k(C)` for a full flag code, through staircase classes of `Γ(C)`.
pub fn durfee_sets_of_code(c: &FlagCode) -> Result<DurfeeSets> {
    let paths = paths_of_code(c)?;
    Ok(durfee_sets_of_paths(c.n(), &paths))
}

/// Hypothesis of the separability result: `d̄ < ⌈i(n-i)/2⌉`.
pub fn check_separability(codistance: usize, n: usize, i: usize) -> Result<bool> {
    if i == 0 || 2 * i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n / 2,
        });
    }
    Ok(codistance < (i * (n - i)).div_ceil(2))
}

/// Hypothesis of the codistance bound: `d̄ < ⌈r(r + n - 2i)/2⌉`.
pub fn bound_from_codistance(codistance: usize, n: usize, i: usize, r: usize) -> Result<bool> {
    if i == 0 || 2 * i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n / 2,
        });
    }
    if r > i {
        return Err(Error::IndexOutOfRange {
            index: r,
            min: 0,
            max: i,
        });
    }
    Ok(codistance < (r * (r + n - 2 * i)).div_ceil(2))
}

/// What is known about `C_i` when deriving flag distance bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProjectionCase {
    /// `|C_i| = |C|` with the given `d_I(C_i)`.
    Injective { distance: usize },
    /// `|C_i| < |C|`.
    Collapsed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBounds {
    pub lower: usize,
    pub upper: usize,
}

impl DistanceBounds {
    pub fn contains(&self, d: usize) -> bool {
        self.lower <= d && d <= self.upper
    }
}

/// Interval for `d_f(C)` from the parameters of one projected code, `1 ≤ i ≤ ⌊n/2⌋`.
pub fn flag_distance_bounds(n: usize, i: usize, case: ProjectionCase) -> Result<DistanceBounds> {
    if i == 0 || 2 * i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n / 2,
        });
    }
    let top = max_distance(n);
    Ok(match case {
        ProjectionCase::Injective { distance } => {
            if distance > i {
                return Err(Error::IndexOutOfRange {
                    index: distance,
                    min: 0,
                    max: i,
                });
            }
            DistanceBounds {
                lower: distance * distance,
                upper: top - ((i - distance) * (n - i - distance)).div_ceil(2),
            }
        }
        ProjectionCase::Collapsed => DistanceBounds {
            lower: 0,
            upper: top - (i * (n - i)).div_ceil(2),
        },
    })
}

/// Parameters of `C_i` read off the Durfee rectangles, next to the direct values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleReading {
    pub dimension: usize,
    /// `min(i, n-i)`, the dimension the rectangles are read at.
    pub reflected: usize,
    pub row_counts: Vec<usize>,
    pub cardinality_equal: bool,
    pub singleton: bool,
    pub distance: usize,
    pub direct_size: usize,
    pub direct_distance: usize,
}

/// Derives `|C_i| = |C|`? and `d_I(C_i)` purely from `D_{n-2i}(C)` (tall
/// rectangles above `n/2`) and cross-checks against the projected code itself.
pub fn rectangle_to_projected(c: &FlagCode, i: usize) -> Result<RectangleReading> {
    let sets = durfee_sets_of_code(c)?;
    rectangle_reading(c, &sets, i)
}

pub(crate) fn rectangle_reading(
    c: &FlagCode,
    sets: &DurfeeSets,
    i: usize,
) -> Result<RectangleReading> {
    if c.len() < 2 {
        return Err(Error::SingletonCode);
    }
    let (low, rows) = sets.for_dimension(i)?;
    let r1 = *rows.first().ok_or_else(|| {
        Error::violation("Durfee sets", format!("D_{}(C) is empty", c.n() - 2 * low))
    })?;
    let (cardinality_equal, singleton, distance) = if r1 < low {
        (true, false, low - r1)
    } else if rows.len() == 1 {
        (false, true, 0)
    } else {
        (false, false, low - rows[1])
    };
    let direct = projected_code(c, i)?;
    let reading = RectangleReading {
        dimension: i,
        reflected: low,
        row_counts: rows.to_vec(),
        cardinality_equal,
        singleton,
        distance,
        direct_size: direct.len(),
        direct_distance: direct.min_distance,
    };
    let size_ok = if cardinality_equal {
        direct.len() == c.len()
    } else if singleton {
        direct.len() == 1
    } else {
        direct.len() > 1 && direct.len() < c.len()
    };
    if !size_ok || direct.min_distance != distance {
        return Err(Error::violation(
            "Durfee rectangles vs projected code",
            format!(
                "i={i}: rectangles {rows:?} give (equal={cardinality_equal}, singleton={singleton}, d={distance}) \
                 but |C|={}, |C_i|={}, d_I(C_i)={}",
                c.len(),
                direct.len(),
                direct.min_distance
            ),
        ));
    }
    Ok(reading)
}

/// The three equivalent descriptions of an optimum distance code, each evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimumVerdict {
    pub optimum: bool,
    pub by_codistance: bool,
    pub by_paths: bool,
    pub by_ferrers: bool,
}

pub fn is_optimum_distance(c: &FlagCode) -> Result<OptimumVerdict> {
    if !c.is_full() {
        return Err(Error::NotFullFlag);
    }
    if c.len() < 2 {
        return Err(Error::SingletonCode);
    }
    let n = c.n();
    let by_codistance = codistance(c)? == 0;
    let paths = paths_of_code(c)?;
    let by_paths = paths.len() == 1 && paths.contains(&DistancePath::maximal(n));
    let mut expected = BTreeSet::from([EmbeddedPartition::null(n)]);
    if n % 2 == 1 {
        expected.insert(EmbeddedPartition::new(n, vec![1])?);
    }
    let by_ferrers = ferrers_set_of_paths(&paths) == expected;
    if by_codistance != by_paths || by_paths != by_ferrers {
        return Err(Error::violation(
            "optimum distance characterization",
            format!("codistance={by_codistance} paths={by_paths} ferrers={by_ferrers}"),
        ));
    }
    Ok(OptimumVerdict {
        optimum: by_codistance,
        by_codistance,
        by_paths,
        by_ferrers,
    })
}

/// Direct parameters of one projected code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedSummary {
    pub index: usize,
    pub dimension: usize,
    pub size: usize,
    pub min_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparabilityCheck {
    pub dimension: usize,
    pub hypothesis: bool,
    /// `|C| = |C_j|` for every `i ≤ j ≤ n - i`.
    pub sizes_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsCheck {
    pub dimension: usize,
    pub case: ProjectionCase,
    pub bounds: DistanceBounds,
    pub holds: bool,
}

/// Theorem-level checks performed by [`analyze`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// `r ∈ D_{n-2i}(C)` iff some pair has `d_I(F_i, F'_i) = i - r`.
    RectangleLaw,
    /// `|C_i| = |C|?` and `d_I(C_i)` read from rectangles match the projected code.
    RectangleToProjected,
    Separability,
    CodistanceBound,
    DistanceBounds,
    OptimumEquivalence,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::RectangleLaw,
        Property::RectangleToProjected,
        Property::Separability,
        Property::CodistanceBound,
        Property::DistanceBounds,
        Property::OptimumEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RectangleLaw => "rectangle law",
            Property::RectangleToProjected => "rectangles to projected codes",
            Property::Separability => "separability",
            Property::CodistanceBound => "codistance bound",
            Property::DistanceBounds => "distance bounds",
            Property::OptimumEquivalence => "optimum equivalence",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub property: Property,
    pub detail: String,
}

/// Everything computed about a flag code, direct values next to derived ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeAnalysis {
    pub q: u32,
    pub n: usize,
    pub type_vector: Vec<usize>,
    pub full: bool,
    pub size: usize,
    pub min_distance: usize,
    pub max_distance: Option<usize>,
    pub codistance: Option<usize>,
    pub projected: Vec<ProjectedSummary>,
    pub paths: Vec<Vec<usize>>,
    pub durfee: Option<DurfeeSets>,
    pub rectangle_readings: Vec<RectangleReading>,
    pub separability: Vec<SeparabilityCheck>,
    pub bounds: Vec<BoundsCheck>,
    pub optimum: Option<OptimumVerdict>,
    /// How many times each property was applied (hypothesis met).
    pub checks: BTreeMap<Property, usize>,
    pub failures: Vec<Failure>,
}

impl CodeAnalysis {
    pub fn consistent(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, property: Property) {
        *self.checks.entry(property).or_default() += 1;
    }

    fn fail(&mut self, property: Property, detail: String) {
        self.failures.push(Failure { property, detail });
    }
}

/// Parameters available for any type vector: size, distance, projected codes.
pub fn basic_analysis(c: &FlagCode) -> Result<CodeAnalysis> {
    let projected = (1..=c.type_vector().len())
        .map(|i| {
            projected_code(c, i).map(|p| ProjectedSummary {
                index: i,
                dimension: p.dimension,
                size: p.len(),
                min_distance: p.min_distance,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CodeAnalysis {
        q: c.q(),
        n: c.n(),
        type_vector: c.type_vector().dims().to_vec(),
        full: c.is_full(),
        size: c.len(),
        min_distance: min_distance(c),
        max_distance: None,
        codistance: None,
        projected,
        paths: Vec::new(),
        durfee: None,
        rectangle_readings: Vec::new(),
        separability: Vec::new(),
        bounds: Vec::new(),
        optimum: None,
        checks: BTreeMap::new(),
        failures: Vec::new(),
    })
}

/// Full analysis of a full flag code. Theorem-derived values that disagree
/// with direct computation are collected in `failures`.
pub fn analyze(c: &FlagCode) -> Result<CodeAnalysis> {
    if !c.is_full() {
        return Err(Error::NotFullFlag);
    }
    let mut report = basic_analysis(c)?;
    let n = c.n();
    let dbar = codistance(c)?;
    report.max_distance = Some(max_distance(n));
    report.codistance = Some(dbar);
    let paths = paths_of_code(c)?;
    report.paths = paths.iter().map(|p| p.deltas().to_vec()).collect();
    let sets = durfee_sets_of_paths(n, &paths);
    let size = c.len();

    for i in 1..n {
        let (low, rows) = sets.for_dimension(i)?;
        let from_rects: BTreeSet<usize> = rows.iter().map(|r| low - r).collect();
        let from_paths: BTreeSet<usize> = paths.iter().map(|p| p.deltas()[i]).collect();
        report.record(Property::RectangleLaw);
        if from_rects != from_paths {
            report.fail(
                Property::RectangleLaw,
                format!(
                    "i={i}: distances from rectangles {from_rects:?}, from pairs {from_paths:?}"
                ),
            );
        }
    }

    if size >= 2 {
        for i in 1..n {
            report.record(Property::RectangleToProjected);
            match rectangle_reading(c, &sets, i) {
                Ok(r) => report.rectangle_readings.push(r),
                Err(Error::TheoremViolation { detail, .. }) => {
                    report.fail(Property::RectangleToProjected, detail)
                }
                Err(e) => return Err(e),
            }
        }
        report.record(Property::OptimumEquivalence);
        match is_optimum_distance(c) {
            Ok(v) => report.optimum = Some(v),
            Err(Error::TheoremViolation { detail, .. }) => {
                report.fail(Property::OptimumEquivalence, detail)
            }
            Err(e) => return Err(e),
        }
    }

    for i in 1..=n / 2 {
        let hypothesis = check_separability(dbar, n, i)?;
        let sizes_equal = (i..=n - i).all(|j| report.projected[j - 1].size == size);
        if hypothesis {
            report.record(Property::Separability);
            if !sizes_equal {
                report.fail(
                    Property::Separability,
                    format!("i={i}: codistance {dbar} but some |C_j| differs from |C|={size}"),
                );
            }
        }
        report.separability.push(SeparabilityCheck {
            dimension: i,
            hypothesis,
            sizes_equal,
        });

        for r in 0..=i {
            if bound_from_codistance(dbar, n, i, r)? {
                report.record(Property::CodistanceBound);
                let p = &report.projected[i - 1];
                if p.size != size || p.min_distance + r <= i {
                    let detail = format!(
                        "i={i}, r={r}: codistance {dbar} yet |C_i|={}, d_I(C_i)={}",
                        p.size, p.min_distance
                    );
                    report.fail(Property::CodistanceBound, detail);
                }
            }
        }

        if size >= 2 {
            let p = &report.projected[i - 1];
            let case = if p.size == size {
                ProjectionCase::Injective {
                    distance: p.min_distance,
                }
            } else {
                ProjectionCase::Collapsed
            };
            let bounds = flag_distance_bounds(n, i, case)?;
            let holds = bounds.contains(report.min_distance);
            report.record(Property::DistanceBounds);
            if !holds {
                let detail = format!(
                    "i={i}: d_f={} outside [{}, {}]",
                    report.min_distance, bounds.lower, bounds.upper
                );
                report.fail(Property::DistanceBounds, detail);
            }
            report.bounds.push(BoundsCheck {
                dimension: i,
                case,
                bounds,
                holds,
            });
        }
    }

    report.durfee = Some(sets);
    Ok(report)
}
