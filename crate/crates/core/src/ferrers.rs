//! The Ferrers diagram frame `FF(n)` and its link to distance paths.
//!
//! Coordinates: row `i ∈ [1, n-1]` from the top, position `j ∈ [1, n-i]`
//! counted from the right-hand corner. A cell is black iff `n + i + j` is even.
//!
//! The primary frame (frame plus crossed points) is addressed by `(u, v)` with
//! `u = i - 1` and `v = j - 1`, `u + v ≤ n`; points with `u + v ≥ n - 1` are
//! the crossed ones. A black point `(u, v)` sits at `(i, δ) = ((n + u - v)/2,
//! (n - u - v)/2)` of the distance support. A staircase runs from `(0, n)` to
//! `(n, 0)` moving right (`v - 1`) or down (`u + 1`).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::max_distance;
use crate::paths::DistancePath;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellColor {
    Black,
    Red,
}

/// Color of cell `(i, j)` of `FF(n)`: black iff `n + i + j` is even.
pub fn cell_color(n: usize, i: usize, j: usize) -> Result<CellColor> {
    if i == 0 || j == 0 || i >= n || j > n - i {
        return Err(Error::CellOutsideFrame { n, row: i, pos: j });
    }
    Ok(if (n + i + j).is_multiple_of(2) {
        CellColor::Black
    } else {
        CellColor::Red
    })
}

/// The staircase diagram `(n-1, n-2, …, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FerrersFrame {
    n: usize,
}

impl FerrersFrame {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (1..self.n).map(|i| self.n - i).collect()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, CellColor)> + '_ {
        let n = self.n;
        (1..n).flat_map(move |i| {
            (1..=n - i).map(move |j| (i, j, cell_color(n, i, j).expect("cell inside frame")))
        })
    }

    pub fn total_cells(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn black_cells(&self) -> usize {
        self.cells().filter(|c| c.2 == CellColor::Black).count()
    }

    pub fn red_cells(&self) -> usize {
        self.cells().filter(|c| c.2 == CellColor::Red).count()
    }
}

fn check_parts(parts: &[usize]) -> Result<()> {
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(parts.to_vec()));
    }
    Ok(())
}

/// Does the partition fit in `FF(n)`, i.e. `m ≤ n-1` and `λ_i ≤ n-i`?
pub fn is_embedded(parts: &[usize], n: usize) -> Result<bool> {
    check_parts(parts)?;
    Ok(parts.len() < n && parts.iter().enumerate().all(|(k, &p)| p + k < n))
}

/// A partition whose diagram fits in `FF(n)`. The null partition has no parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EmbeddedPartition {
    n: usize,
    parts: Vec<usize>,
}

impl EmbeddedPartition {
    pub fn new(n: usize, parts: Vec<usize>) -> Result<Self> {
        if !is_embedded(&parts, n)? {
            return Err(Error::NotEmbedded { parts, n });
        }
        Ok(Self { n, parts })
    }

    pub fn null(n: usize) -> Self {
        Self {
            n,
            parts: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_null(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` with `λ_i = 0` past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Conjugate partition; `FF(n)` is self-conjugate so the result stays embedded.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Self { n: self.n, parts }
    }

    /// The black cells `(i, j)` of the subdiagram (its underlying black diagram).
    pub fn black_cells(&self) -> BTreeSet<(usize, usize)> {
        let mut cells = BTreeSet::new();
        for (k, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                if cell_color(self.n, k + 1, j) == Ok(CellColor::Black) {
                    cells.insert((k + 1, j));
                }
            }
        }
        cells
    }
}

impl fmt::Display for EmbeddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    Right,
    Down,
}

/// A staircase path on the primary frame, stored as its row profile
/// `(λ_1, …, λ_{n-1})`: the number of circle dots to its right in each row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StaircasePath {
    n: usize,
    profile: Vec<usize>,
}

impl StaircasePath {
    pub fn new(n: usize, profile: Vec<usize>) -> Result<Self> {
        let monotone = profile.windows(2).all(|w| w[0] >= w[1]);
        let bounded = profile.iter().enumerate().all(|(k, &p)| p + k < n);
        if n < 2 || profile.len() != n - 1 || !monotone || !bounded {
            return Err(Error::InvalidStaircase { profile, n });
        }
        Ok(Self { n, profile })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// Move sequence from `(0, n)` to `(n, 0)`: `2n` moves.
    pub fn moves(&self) -> Vec<Move> {
        let n = self.n;
        let mut moves = Vec::with_capacity(2 * n);
        let mut v = n;
        for u in 0..n {
            let exit = if u + 1 < n { self.profile[u] } else { 0 };
            moves.extend(std::iter::repeat_n(Move::Right, v - exit));
            moves.push(Move::Down);
            v = exit;
        }
        moves
    }

    /// Frame points `(u, v)` visited by the path, endpoints included.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = vec![(0, self.n)];
        let (mut u, mut v) = (0, self.n);
        for m in self.moves() {
            match m {
                Move::Right => v -= 1,
                Move::Down => u += 1,
            }
            pts.push((u, v));
        }
        pts
    }

    pub fn move_string(&self) -> String {
        self.moves()
            .iter()
            .map(|m| match m {
                Move::Right => 'R',
                Move::Down => 'D',
            })
            .collect()
    }

    fn from_moves(n: usize, moves: &[Move]) -> Self {
        let mut profile = vec![0; n - 1];
        let (mut u, mut v) = (0usize, n);
        for m in moves {
            match m {
                Move::Right => v -= 1,
                Move::Down => {
                    if u + 1 < n {
                        profile[u] = v;
                    }
                    u += 1;
                }
            }
            debug_assert!(u + v <= n);
        }
        debug_assert_eq!((u, v), (n, 0));
        Self { n, profile }
    }
}

/// Is the frame point `(u, v)` black (same parity as the crossed black corner)?
pub fn frame_point_is_black(n: usize, u: usize, v: usize) -> bool {
    (u + v) % 2 == n % 2
}

/// Support coordinates `(i, δ)` of a black frame point.
pub fn frame_point_to_support(n: usize, u: usize, v: usize) -> (usize, usize) {
    debug_assert!(frame_point_is_black(n, u, v));
    ((n + u - v) / 2, (n - u - v) / 2)
}

pub fn staircase_of_partition(p: &EmbeddedPartition) -> StaircasePath {
    let mut profile = p.parts.clone();
    profile.resize(p.n - 1, 0);
    StaircasePath { n: p.n, profile }
}

pub fn partition_of_staircase(s: &StaircasePath) -> EmbeddedPartition {
    let parts = s.profile.iter().copied().take_while(|&x| x > 0).collect();
    EmbeddedPartition { n: s.n, parts }
}

/// Per-row black-cell counts of a subdiagram (zeros kept where they occur).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnderlyingDistribution {
    n: usize,
    counts: Vec<usize>,
}

impl UnderlyingDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Trailing zeros stripped; two subdiagrams share a black diagram iff
    /// their normalized distributions agree.
    pub fn normalized(&self) -> Self {
        let len = self
            .counts
            .iter()
            .rposition(|&c| c > 0)
            .map_or(0, |k| k + 1);
        Self {
            n: self.n,
            counts: self.counts[..len].to_vec(),
        }
    }
}

impl fmt::Display for UnderlyingDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of black cells among the rightmost `len` cells of row `i`.
fn black_in_row(n: usize, i: usize, len: usize) -> usize {
    if (n + i) % 2 == 1 {
        len.div_ceil(2)
    } else {
        len / 2
    }
}

pub fn underlying_distribution(p: &EmbeddedPartition) -> UnderlyingDistribution {
    let counts = p
        .parts
        .iter()
        .enumerate()
        .map(|(k, &len)| black_in_row(p.n, k + 1, len))
        .collect();
    UnderlyingDistribution { n: p.n, counts }
}

/// `u_λ`, the number of black cells in the subdiagram.
pub fn splitting_value(p: &EmbeddedPartition) -> usize {
    underlying_distribution(p).total()
}

/// The distance path through the black points of a staircase.
pub fn skeleton_of_staircase(s: &StaircasePath) -> DistancePath {
    let n = s.n;
    let deltas = s
        .points()
        .into_iter()
        .step_by(2)
        .map(|(u, v)| frame_point_to_support(n, u, v).1)
        .collect();
    DistancePath::new(n, deltas).expect("skeletons of staircases are distance paths")
}

/// `Σ(Γ)`: all staircases whose skeleton is `p`, sorted by profile.
///
/// Rising edges become two right moves and falling edges two down moves. A
/// plateau at height 0 lies on the crossed boundary and only admits
/// right-then-down; a positive plateau admits either order.
pub fn staircase_class(p: &DistancePath) -> Vec<StaircasePath> {
    let n = p.n();
    let deltas = p.deltas();
    let free: Vec<usize> = (0..n)
        .filter(|&i| deltas[i] == deltas[i + 1] && deltas[i] > 0)
        .collect();
    let mut class = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut moves = Vec::with_capacity(2 * n);
        for i in 0..n {
            let pair = match deltas[i + 1].cmp(&deltas[i]) {
                std::cmp::Ordering::Greater => [Move::Right, Move::Right],
                std::cmp::Ordering::Less => [Move::Down, Move::Down],
                std::cmp::Ordering::Equal => {
                    let k = free.iter().position(|&x| x == i);
                    match k {
                        Some(k) if mask >> k & 1 == 1 => [Move::Down, Move::Right],
                        _ => [Move::Right, Move::Down],
                    }
                }
            };
            moves.extend(pair);
        }
        class.push(StaircasePath::from_moves(n, &moves));
    }
    class.sort();
    class
}

/// Black circle points on a staircase or to its left; equals the skeleton's distance.
pub fn left_black_count(s: &StaircasePath) -> usize {
    let n = s.n;
    let mut count = 0;
    for (k, &exit) in s.profile.iter().enumerate() {
        // Circle cells of row k+1 at positions j > λ_{k+1} are on or left of the path.
        count += (exit + 1..=n - k - 1)
            .filter(|&j| cell_color(n, k + 1, j) == Ok(CellColor::Black))
            .count();
    }
    count
}

/// Distance equivalence via the arithmetic criterion on the parts.
pub fn distance_equivalent_by_criterion(
    a: &EmbeddedPartition,
    b: &EmbeddedPartition,
) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::FrameMismatch(a.n, b.n));
    }
    let n = a.n;
    let (short, long) = if a.parts.len() <= b.parts.len() {
        (a, b)
    } else {
        (b, a)
    };
    let m = short.parts.len();
    let m2 = long.parts.len();
    let lengths_ok = m == m2 || ((m + n) % 2 == 1 && m2 == m + 1 && long.parts[m] == 1);
    if !lengths_ok {
        return Ok(false);
    }
    Ok((1..=m).all(|i| {
        let (x, y) = (short.part(i), long.part(i));
        if (n + i) % 2 == 1 {
            x.div_ceil(2) == y.div_ceil(2)
        } else {
            x / 2 == y / 2
        }
    }))
}

/// Distance equivalence by comparing the black cell sets directly.
pub fn distance_equivalent_by_cells(a: &EmbeddedPartition, b: &EmbeddedPartition) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::FrameMismatch(a.n, b.n));
    }
    Ok(a.black_cells() == b.black_cells())
}

/// Same underlying black diagram. Both routes are evaluated; disagreement is an error.
pub fn distance_equivalent(a: &EmbeddedPartition, b: &EmbeddedPartition) -> Result<bool> {
    let by_criterion = distance_equivalent_by_criterion(a, b)?;
    let by_cells = distance_equivalent_by_cells(a, b)?;
    if by_criterion != by_cells {
        return Err(Error::violation(
            "distance-equivalence criterion",
            format!("{a} vs {b}: criterion says {by_criterion}, black cells say {by_cells}"),
        ));
    }
    Ok(by_criterion)
}

/// All embedded partitions of `FF(n)` (null first), lexicographic in the parts,
/// optionally only those with splitting value `splitting`.
pub fn enumerate_embedded_partitions(
    n: usize,
    splitting: Option<usize>,
    limits: &Limits,
) -> Result<Vec<EmbeddedPartition>> {
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
    let mut parts = Vec::new();
    grow_partitions(n, 0, splitting, &mut parts, &mut out);
    Ok(out)
}

fn grow_partitions(
    n: usize,
    black: usize,
    target: Option<usize>,
    parts: &mut Vec<usize>,
    out: &mut Vec<EmbeddedPartition>,
) {
    if target.is_none_or(|t| t == black) {
        out.push(EmbeddedPartition {
            n,
            parts: parts.clone(),
        });
    }
    let row = parts.len() + 1;
    if row >= n {
        return;
    }
    let cap = parts.last().copied().unwrap_or(n - 1).min(n - row);
    for len in 1..=cap {
        let b = black + black_in_row(n, row, len);
        if target.is_some_and(|t| b > t) {
            // Black counts only grow with the row length.
            break;
        }
        parts.push(len);
        grow_partitions(n, b, target, parts, out);
        parts.pop();
    }
}

/// The distinct (normalized) underlying distributions with splitting value `u`.
pub fn splittings_of_codistance(
    n: usize,
    u: usize,
    limits: &Limits,
) -> Result<BTreeSet<UnderlyingDistribution>> {
    Ok(enumerate_embedded_partitions(n, Some(u), limits)?
        .iter()
        .map(|p| underlying_distribution(p).normalized())
        .collect())
}

/// Number of splittings for every codistance value `0..=D^n`, from one sweep.
pub fn splitting_counts(n: usize, limits: &Limits) -> Result<Vec<usize>> {
    let mut sets = vec![BTreeSet::new(); max_distance(n) + 1];
    for p in enumerate_embedded_partitions(n, None, limits)? {
        let dist = underlying_distribution(&p).normalized();
        sets[dist.total()].insert(dist);
    }
    Ok(sets.into_iter().map(|s| s.len()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(n: usize, parts: &[usize]) -> EmbeddedPartition {
        EmbeddedPartition::new(n, parts.to_vec()).unwrap()
    }

    fn path(deltas: &[usize]) -> DistancePath {
        DistancePath::new(deltas.len() - 1, deltas.to_vec()).unwrap()
    }

    #[test]
    fn colors() {
        assert_eq!(cell_color(8, 1, 1), Ok(CellColor::Black));
        assert_eq!(cell_color(7, 1, 1), Ok(CellColor::Red));
        assert!(matches!(
            cell_color(7, 1, 7),
            Err(Error::CellOutsideFrame { .. })
        ));
        assert!(matches!(
            cell_color(7, 7, 1),
            Err(Error::CellOutsideFrame { .. })
        ));
        assert!(matches!(
            cell_color(7, 0, 1),
            Err(Error::CellOutsideFrame { .. })
        ));
        let ff7 = FerrersFrame::new(7);
        assert_eq!((ff7.black_cells(), ff7.red_cells()), (12, 9));
        assert_eq!(ff7.total_cells(), 21);
        assert_eq!(FerrersFrame::new(4).row_lengths(), vec![3, 2, 1]);
    }

    #[test]
    fn embedding() {
        assert!(is_embedded(&[6, 3, 2], 7).unwrap());
        assert!(!is_embedded(&[7], 7).unwrap());
        assert!(is_embedded(&[5, 5, 1, 1, 1, 1], 8).unwrap());
        assert!(is_embedded(&[5, 5, 1, 1, 1, 1, 1], 8).unwrap());
        assert!(!is_embedded(&[5, 5, 1, 1, 1, 1, 1, 1], 8).unwrap());
        assert!(!is_embedded(&[3, 3, 3], 5).unwrap());
        assert!(is_embedded(&[], 2).unwrap());
        assert_eq!(
            is_embedded(&[1, 2], 5),
            Err(Error::NotAPartition(vec![1, 2]))
        );
        assert!(matches!(
            EmbeddedPartition::new(4, vec![4]),
            Err(Error::NotEmbedded { .. })
        ));
    }

    #[test]
    fn staircase_round_trip() {
        let null = EmbeddedPartition::null(6);
        let s = staircase_of_partition(&null);
        assert_eq!(s.profile(), &[0, 0, 0, 0, 0]);
        assert_eq!(partition_of_staircase(&s), null);
        let p = ep(5, &[3, 1]);
        let s = staircase_of_partition(&p);
        assert_eq!(s.profile(), &[3, 1, 0, 0]);
        assert_eq!(partition_of_staircase(&s), p);
        assert!(StaircasePath::new(5, vec![1, 3, 0, 0]).is_err());
        assert!(StaircasePath::new(5, vec![5, 0, 0, 0]).is_err());
        assert!(StaircasePath::new(5, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn staircase_dots() {
        let limits = Limits::default();
        for n in 2..=7 {
            for p in enumerate_embedded_partitions(n, None, &limits).unwrap() {
                let s = staircase_of_partition(&p);
                let pts = s.points();
                assert_eq!(pts.len(), 2 * n + 1);
                let black = pts
                    .iter()
                    .filter(|&&(u, v)| frame_point_is_black(n, u, v))
                    .count();
                assert_eq!((black, pts.len() - black), (n + 1, n));
                assert!(pts.iter().all(|&(u, v)| u + v <= n));
            }
        }
    }

    #[test]
    fn distributions() {
        assert_eq!(
            underlying_distribution(&ep(7, &[6, 3, 2])).counts(),
            &[3, 2, 1]
        );
        assert_eq!(
            underlying_distribution(&ep(8, &[5, 5, 1, 1, 1, 1])).counts(),
            &[3, 2, 1, 0, 1, 0]
        );
        assert_eq!(
            underlying_distribution(&ep(8, &[6, 5, 2, 1, 1])).counts(),
            &[3, 2, 1, 0, 1]
        );
        // Same parts read in FF(7): rows 2 and 4 round up there.
        assert_eq!(
            underlying_distribution(&ep(7, &[6, 5, 2, 1, 1])).counts(),
            &[3, 3, 1, 1, 0]
        );
        assert!(underlying_distribution(&EmbeddedPartition::null(5))
            .counts()
            .is_empty());
        assert_eq!(splitting_value(&ep(7, &[6, 3, 2])), 6);
        assert_eq!(splitting_value(&EmbeddedPartition::null(7)), 0);
        assert_eq!(splitting_value(&ep(8, &[5, 5, 1, 1, 1, 1])), 7);
    }

    #[test]
    fn distribution_matches_cell_colors() {
        let limits = Limits::default();
        for n in 2..=8 {
            for p in enumerate_embedded_partitions(n, None, &limits).unwrap() {
                let dist = underlying_distribution(&p);
                for (k, &c) in dist.counts().iter().enumerate() {
                    let brute = p.black_cells().iter().filter(|&&(i, _)| i == k + 1).count();
                    assert_eq!(c, brute, "n={n} {p} row {}", k + 1);
                }
            }
        }
    }

    #[test]
    fn skeletons() {
        for n in 2..=10 {
            let s = staircase_of_partition(&EmbeddedPartition::null(n));
            assert_eq!(skeleton_of_staircase(&s), DistancePath::maximal(n));
        }
        let fig = path(&[0, 0, 0, 1, 2, 2, 1, 1, 0]);
        let class = staircase_class(&fig);
        assert_eq!(class.len(), 4);
        for s in &class {
            assert_eq!(skeleton_of_staircase(s), fig);
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(staircase_class(&path(&[0, 1, 2, 1, 0])).len(), 1);
        assert_eq!(staircase_class(&DistancePath::maximal(7)).len(), 2);
        assert_eq!(staircase_class(&DistancePath::zero(7)).len(), 1);
        let odd_max: Vec<EmbeddedPartition> = staircase_class(&DistancePath::maximal(7))
            .iter()
            .map(partition_of_staircase)
            .collect();
        assert_eq!(odd_max, vec![EmbeddedPartition::null(7), ep(7, &[1])]);
    }

    #[test]
    fn class_by_exhaustive_sweep() {
        let limits = Limits::default();
        for n in 2..=7 {
            let all: Vec<StaircasePath> = enumerate_embedded_partitions(n, None, &limits)
                .unwrap()
                .iter()
                .map(staircase_of_partition)
                .collect();
            for p in enumerate_paths_for_test(n) {
                let mut sweep: Vec<StaircasePath> = all
                    .iter()
                    .filter(|s| skeleton_of_staircase(s) == p)
                    .cloned()
                    .collect();
                sweep.sort();
                assert_eq!(staircase_class(&p), sweep, "n={n} path {p}");
            }
        }
    }

    fn enumerate_paths_for_test(n: usize) -> Vec<DistancePath> {
        crate::paths::enumerate_paths(n, None, &Limits::default()).unwrap()
    }

    #[test]
    fn equivalence_examples() {
        let a = ep(8, &[5, 5, 1, 1, 1, 1]);
        let b = ep(8, &[6, 5, 2, 1, 1]);
        assert!(distance_equivalent(&a, &b).unwrap());
        assert!(distance_equivalent(&b, &a).unwrap());
        assert!(distance_equivalent(&a, &a).unwrap());
        assert!(!distance_equivalent(&ep(7, &[6, 3, 2]), &ep(7, &[6, 3, 1])).unwrap());
        assert!(distance_equivalent(&EmbeddedPartition::null(7), &ep(7, &[1])).unwrap());
        assert!(!distance_equivalent(&EmbeddedPartition::null(8), &ep(8, &[1])).unwrap());
        assert!(matches!(
            distance_equivalent(&ep(7, &[1]), &ep(8, &[1])),
            Err(Error::FrameMismatch(7, 8))
        ));
    }

    #[test]
    fn enumerations() {
        let limits = Limits::default();
        let fives: Vec<EmbeddedPartition> = enumerate_embedded_partitions(6, None, &limits)
            .unwrap()
            .into_iter()
            .filter(|p| p.size() == 5)
            .collect();
        assert_eq!(fives.len(), 7);
        let two = enumerate_embedded_partitions(2, None, &limits).unwrap();
        assert_eq!(two, vec![EmbeddedPartition::null(2), ep(2, &[1])]);
        assert_eq!(
            enumerate_embedded_partitions(4, None, &limits)
                .unwrap()
                .len(),
            14
        );
        let all = enumerate_embedded_partitions(7, None, &limits).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for u in 0..=12 {
            let expected: Vec<EmbeddedPartition> = all
                .iter()
                .filter(|p| splitting_value(p) == u)
                .cloned()
                .collect();
            assert_eq!(
                enumerate_embedded_partitions(7, Some(u), &limits).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn splittings() {
        let limits = Limits::default();
        for n in 2..=8 {
            let zero = splittings_of_codistance(n, 0, &limits).unwrap();
            assert_eq!(zero.len(), 1);
            assert!(zero.iter().next().unwrap().counts().is_empty());
            let counts = splitting_counts(n, &limits).unwrap();
            for (u, &c) in counts.iter().enumerate() {
                assert_eq!(splittings_of_codistance(n, u, &limits).unwrap().len(), c);
            }
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(ep(6, &[4, 2, 1]).conjugate(), ep(6, &[3, 2, 1, 1]));
        assert_eq!(
            EmbeddedPartition::null(5).conjugate(),
            EmbeddedPartition::null(5)
        );
        let limits = Limits::default();
        for p in enumerate_embedded_partitions(7, None, &limits).unwrap() {
            let c = p.conjugate();
            assert!(is_embedded(c.parts(), 7).unwrap());
            assert_eq!(c.conjugate(), p);
            // Transposing the diagram mirrors its skeleton.
            assert_eq!(
                skeleton_of_staircase(&staircase_of_partition(&c)),
                skeleton_of_staircase(&staircase_of_partition(&p)).reversed()
            );
        }
    }
}
