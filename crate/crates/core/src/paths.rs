//! Distance support `S(n)` and distance paths between full flags.
//!
//! A distance path is stored as its delta vector `(δ_0, …, δ_n)` where
//! `δ_i = d_I(F_i, F'_i)` and the extended subspaces give `δ_0 = δ_n = 0`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::{coordinate_flag, distance_vector, max_distance, Flag, FlagCode};
use crate::Limits;

/// `R(i, n) = {0, …, min(i, n-i)}`, the injection distances attainable in `G_q(i, n)`.
pub fn range_r(i: usize, n: usize) -> Result<RangeInclusive<usize>> {
    if i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 0,
            max: n,
        });
    }
    Ok(0..=i.min(n - i))
}

/// The lattice points `(i, δ)` with `δ ∈ R(i, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceSupport {
    n: usize,
}

impl DistanceSupport {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn column(&self, i: usize) -> Result<RangeInclusive<usize>> {
        range_r(i, self.n)
    }

    /// Height of column `i`, i.e. `min(i, n-i)`.
    pub fn height(&self, i: usize) -> usize {
        i.min(self.n - i)
    }

    /// Points with positive height ("circle dots"); there are `D^n` of them.
    pub fn circle_points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.n).flat_map(move |i| (1..=self.height(i)).map(move |d| (i, d)))
    }

    /// Points at height zero ("crossed dots").
    pub fn crossed_points(&self) -> impl Iterator<Item = (usize, usize)> {
        (0..=self.n).map(|i| (i, 0))
    }
}

/// Which distance-path rule a delta vector breaks first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathViolation {
    Length {
        expected: usize,
        found: usize,
    },
    Endpoint {
        index: usize,
    },
    OutOfSupport {
        index: usize,
        delta: usize,
        max: usize,
    },
    Jump {
        index: usize,
    },
}

impl PathViolation {
    pub fn index(&self) -> usize {
        match *self {
            PathViolation::Length { found, .. } => found,
            PathViolation::Endpoint { index }
            | PathViolation::OutOfSupport { index, .. }
            | PathViolation::Jump { index } => index,
        }
    }
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathViolation::Length { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            PathViolation::Endpoint { index } => write!(f, "δ_{index} must be 0"),
            PathViolation::OutOfSupport { index, delta, max } => {
                write!(f, "δ_{index}={delta} exceeds min(i, n-i)={max}")
            }
            PathViolation::Jump { index } => {
                write!(f, "|δ_{} - δ_{index}| > 1", index + 1)
            }
        }
    }
}

/// Checks support bounds, endpoints and the trident rule `|δ_{i+1} - δ_i| ≤ 1`.
pub fn check_path(deltas: &[usize], n: usize) -> std::result::Result<(), PathViolation> {
    if deltas.len() != n + 1 {
        return Err(PathViolation::Length {
            expected: n + 1,
            found: deltas.len(),
        });
    }
    for (i, &d) in deltas.iter().enumerate() {
        let max = i.min(n - i);
        if d > max {
            if i == 0 || i == n {
                return Err(PathViolation::Endpoint { index: i });
            }
            return Err(PathViolation::OutOfSupport {
                index: i,
                delta: d,
                max,
            });
        }
        if i < n && deltas[i + 1].abs_diff(d) > 1 {
            // Out-of-support values take precedence over jumps at the same column.
            if deltas[i + 1] > (i + 1).min(n - i - 1) {
                continue;
            }
            return Err(PathViolation::Jump { index: i });
        }
    }
    Ok(())
}

pub fn validate_path(deltas: &[usize], n: usize) -> bool {
    check_path(deltas, n).is_ok()
}

/// A valid distance path in `S(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DistancePath {
    n: usize,
    deltas: Vec<usize>,
}

/// Plateau counts of a path: all of them, and those at positive height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plateaus {
    pub total: usize,
    pub positive: usize,
}

impl DistancePath {
    pub fn new(n: usize, deltas: Vec<usize>) -> Result<Self> {
        check_path(&deltas, n).map_err(|v| Error::InvalidPath {
            index: v.index(),
            reason: v.to_string(),
        })?;
        Ok(Self { n, deltas })
    }

    /// The path of two equal flags.
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            deltas: vec![0; n + 1],
        }
    }

    /// The unique path of distance `D^n`: `δ_i = min(i, n-i)`.
    pub fn maximal(n: usize) -> Self {
        Self {
            n,
            deltas: (0..=n).map(|i| i.min(n - i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn deltas(&self) -> &[usize] {
        &self.deltas
    }

    /// `d_Γ = Σ δ_i`.
    pub fn distance(&self) -> usize {
        self.deltas.iter().sum()
    }

    /// `D^n - d_Γ`, the number of circle dots strictly above the path.
    pub fn codistance(&self) -> usize {
        max_distance(self.n) - self.distance()
    }

    pub fn plateaus(&self) -> Plateaus {
        let mut p = Plateaus {
            total: 0,
            positive: 0,
        };
        for w in self.deltas.windows(2) {
            if w[0] == w[1] {
                p.total += 1;
                if w[0] > 0 {
                    p.positive += 1;
                }
            }
        }
        p
    }

    /// Mirror image `δ'_i = δ_{n-i}`.
    pub fn reversed(&self) -> Self {
        let mut deltas = self.deltas.clone();
        deltas.reverse();
        Self { n: self.n, deltas }
    }

    /// Maximal runs `[a, b]` with `δ_a = δ_b = 0` and `δ_i > 0` strictly between.
    /// Runs with no interior vertex have zero area and are skipped.
    pub fn polygons(&self) -> Vec<(usize, usize)> {
        let zeros: Vec<usize> = (0..=self.n).filter(|&i| self.deltas[i] == 0).collect();
        zeros
            .windows(2)
            .filter(|w| w[1] > w[0] + 1)
            .map(|w| (w[0], w[1]))
            .collect()
    }

    /// Sum of the areas of the polygons bounded by the path and the horizontal
    /// axis, each computed with the shoelace formula.
    pub fn pick_area(&self) -> usize {
        let mut total = 0;
        for (a, b) in self.polygons() {
            let vertices: Vec<(i64, i64)> =
                (a..=b).map(|i| (i as i64, self.deltas[i] as i64)).collect();
            let twice = shoelace_twice_area(&vertices).unsigned_abs() as usize;
            debug_assert!(
                twice.is_multiple_of(2),
                "lattice trapezoid sums are integral here"
            );
            total += twice / 2;
        }
        total
    }
}

impl fmt::Display for DistancePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.deltas.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Twice the signed area of a closed polygon (last vertex joins the first).
pub fn shoelace_twice_area(vertices: &[(i64, i64)]) -> i64 {
    let k = vertices.len();
    (0..k)
        .map(|i| {
            let (x0, y0) = vertices[i];
            let (x1, y1) = vertices[(i + 1) % k];
            x0 * y1 - x1 * y0
        })
        .sum()
}

pub fn path_distance(p: &DistancePath) -> usize {
    p.distance()
}

pub fn path_codistance(p: &DistancePath) -> usize {
    p.codistance()
}

pub fn plateau_count(p: &DistancePath) -> Plateaus {
    p.plateaus()
}

pub fn pick_area(p: &DistancePath) -> usize {
    p.pick_area()
}

/// The distance path `Γ(F, F')` of two full flags.
pub fn path_from_flag_pair(f: &Flag, g: &Flag) -> Result<DistancePath> {
    if !f.is_full() || !g.is_full() {
        return Err(Error::NotFullFlag);
    }
    let inner = distance_vector(f, g)?;
    let mut deltas = Vec::with_capacity(inner.len() + 2);
    deltas.push(0);
    deltas.extend(inner);
    deltas.push(0);
    let n = f.n();
    // A failure here would contradict the trident theorem; surface it loudly.
    DistancePath::new(n, deltas).map_err(|e| Error::violation("trident rule", e.to_string()))
}

/// All distance paths of `S(n)` in lexicographic delta order, optionally only
/// those of distance `distance`.
pub fn enumerate_paths(
    n: usize,
    distance: Option<usize>,
    limits: &Limits,
) -> Result<Vec<DistancePath>> {
    if n > limits.max_combinatorial_n {
        return Err(Error::EnumerationLimitExceeded {
            n,
            limit: limits.max_combinatorial_n,
        });
    }
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            index: n,
            min: 2,
            max: limits.max_combinatorial_n,
        });
    }
    let mut out = Vec::new();
    let mut deltas = vec![0usize; n + 1];
    extend_paths(n, 1, 0, distance, &mut deltas, &mut out);
    Ok(out)
}

fn extend_paths(
    n: usize,
    i: usize,
    partial: usize,
    target: Option<usize>,
    deltas: &mut Vec<usize>,
    out: &mut Vec<DistancePath>,
) {
    if i == n {
        if deltas[n - 1] <= 1 && target.is_none_or(|t| t == partial) {
            deltas[n] = 0;
            out.push(DistancePath {
                n,
                deltas: deltas.clone(),
            });
        }
        return;
    }
    let prev = deltas[i - 1];
    let lo = prev.saturating_sub(1);
    // The path must be able to come back down to 0 at column n.
    let hi = (prev + 1).min(i).min(n - i);
    for d in lo..=hi {
        if let Some(t) = target {
            // Remaining columns contribute at least 0 and at most the max-path tail.
            let upper: usize = (i + 1..n).map(|j| (d + (j - i)).min(n - j)).sum();
            if partial + d > t || partial + d + upper < t {
                continue;
            }
        }
        deltas[i] = d;
        extend_paths(n, i + 1, partial + d, target, deltas, out);
    }
}

/// Permutation `w` (1-based) with `#{j ≤ i : w(j) ≤ i} = i - δ_i` for all `i`,
/// first in lexicographic order.
pub fn realizing_permutation(p: &DistancePath) -> Option<Vec<usize>> {
    let n = p.n;
    let mut w = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    if search_permutation(p, &mut w, &mut used, 0) {
        Some(w)
    } else {
        None
    }
}

fn search_permutation(
    p: &DistancePath,
    w: &mut Vec<usize>,
    used: &mut [bool],
    common: usize,
) -> bool {
    let n = p.n;
    let i = w.len() + 1;
    if i > n {
        return true;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        // Moving from prefix i-1 to prefix i adds w(i) if w(i) ≤ i, plus any
        // earlier j with w(j) = i.
        let earlier_hits_i = w.contains(&i) as usize;
        let next = common + (v <= i) as usize + earlier_hits_i;
        if next != i - p.deltas[i] {
            continue;
        }
        used[v] = true;
        w.push(v);
        if search_permutation(p, w, used, next) {
            return true;
        }
        w.pop();
        used[v] = false;
    }
    false
}

/// Two full coordinate flags over `F_q` whose distance path is `p`.
pub fn realize_path(p: &DistancePath, q: u32) -> Result<(Flag, Flag)> {
    let n = p.n;
    let w = realizing_permutation(p).ok_or_else(|| Error::RealizationNotFound {
        deltas: p.deltas.clone(),
    })?;
    let standard: Vec<usize> = (1..=n).collect();
    let f = coordinate_flag(q, &standard)?;
    let g = coordinate_flag(q, &w)?;
    if path_from_flag_pair(&f, &g)? != *p {
        return Err(Error::RealizationNotFound {
            deltas: p.deltas.clone(),
        });
    }
    Ok((f, g))
}

/// `Γ(C)`: the distinct distance paths over unordered pairs of distinct flags.
pub fn paths_of_code(c: &FlagCode) -> Result<BTreeSet<DistancePath>> {
    if !c.is_full() {
        return Err(Error::NotFullFlag);
    }
    c.pairs().map(|(f, g)| path_from_flag_pair(f, g)).collect()
}
