//! Flags, flag codes, flag distance and projected codes.
//!
//! A flag is encoded by one stacked generator matrix: its i-th subspace is the
//! row span of the first `t_i` rows. Flags compare by their canonical subspace
//! tuples, never by generator matrices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::{injection_distance, MatGFq, PrimeField, Subspace};

/// Dimensions `t_1 < … < t_r` of the subspaces in a flag on `F_q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeVector {
    n: usize,
    dims: Vec<usize>,
}

impl TypeVector {
    pub fn new(n: usize, dims: Vec<usize>) -> Result<Self> {
        let increasing = dims.windows(2).all(|w| w[0] < w[1]);
        let bounded = dims.first().is_some_and(|&d| d >= 1) && dims.last().is_some_and(|&d| d < n);
        if !increasing || !bounded {
            return Err(Error::InvalidTypeVector { dims, n });
        }
        Ok(Self { n, dims })
    }

    /// The full type `(1, 2, …, n-1)`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, (1..n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dims.len() + 1 == self.n
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return write!(f, "full");
        }
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "({})", dims.join(","))
    }
}

/// A flag of a given type, with its subspaces cached in canonical form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Flag {
    ty: TypeVector,
    generator: MatGFq,
    subspaces: Vec<Subspace>,
}

impl PartialEq for Flag {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty && self.subspaces == other.subspaces
    }
}

impl Eq for Flag {}

impl PartialOrd for Flag {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Flag {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.ty, &self.subspaces).cmp(&(&other.ty, &other.subspaces))
    }
}

impl std::hash::Hash for Flag {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ty.hash(state);
        self.subspaces.hash(state);
    }
}

impl Flag {
    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.ty
    }

    pub fn is_full(&self) -> bool {
        self.ty.is_full()
    }

    pub fn generator(&self) -> &MatGFq {
        &self.generator
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.field() == other.field() && self.ty == other.ty
    }
}

/// Builds a flag whose i-th subspace is spanned by the first `t_i` rows of `m`.
///
/// For the full type an `n x n` generator must be invertible; an `(n-1) x n`
/// generator is also accepted.
pub fn flag_from_matrix(q: u32, ty: &TypeVector, m: &MatGFq) -> Result<Flag> {
    let field = PrimeField::new(q)?;
    let n = ty.n();
    if m.field() != field {
        return Err(Error::TypeMismatch);
    }
    if m.cols() != n {
        return Err(Error::ColumnCountMismatch {
            expected: n,
            found: m.cols(),
        });
    }
    let top = *ty.dims().last().expect("type vectors are non-empty");
    if m.rows() < top {
        return Err(Error::RowCountMismatch {
            expected: top,
            found: m.rows(),
        });
    }
    let mut subspaces = Vec::with_capacity(ty.len());
    for (index, &t) in ty.dims().iter().enumerate() {
        let s = Subspace::from_rows(n, &m.top_rows(t))?;
        if s.dim() != t {
            return Err(Error::RankDeficient {
                index: index + 1,
                rows: t,
            });
        }
        subspaces.push(s);
    }
    if ty.is_full() && m.rows() >= n && m.top_rows(n).rank() != n {
        return Err(Error::RankDeficient { index: n, rows: n });
    }
    for w in subspaces.windows(2) {
        if !w[1].contains(&w[0])? || w[0].dim() >= w[1].dim() {
            return Err(Error::violation(
                "flag nesting",
                "subspaces are not properly nested",
            ));
        }
    }
    Ok(Flag {
        ty: ty.clone(),
        generator: m.clone(),
        subspaces,
    })
}

/// The full flag spanned by prefixes of the coordinate vectors `e_{order[0]}, e_{order[1]}, …`
/// (1-based indices forming a permutation of `1..=n`).
pub fn coordinate_flag(q: u32, order: &[usize]) -> Result<Flag> {
    let field = PrimeField::new(q)?;
    let n = order.len();
    let mut m = MatGFq::zeros(field, n, n);
    for (r, &c) in order.iter().enumerate() {
        if c == 0 || c > n {
            return Err(Error::IndexOutOfRange {
                index: c,
                min: 1,
                max: n,
            });
        }
        m.set(r, c - 1, 1);
    }
    flag_from_matrix(q, &TypeVector::full(n)?, &m)
}

/// `p_i(F) = F_i`, with `i` counted from 1 over the type vector.
pub fn projection(f: &Flag, i: usize) -> Result<&Subspace> {
    f.subspaces
        .get(i.wrapping_sub(1))
        .ok_or(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: f.subspaces.len(),
        })
}

/// Sum of the injection distances between corresponding subspaces.
pub fn flag_distance(f: &Flag, g: &Flag) -> Result<usize> {
    Ok(distance_vector(f, g)?.iter().sum())
}

/// Per-subspace injection distances `d_I(F_i, G_i)`.
pub fn distance_vector(f: &Flag, g: &Flag) -> Result<Vec<usize>> {
    if !f.same_shape(g) {
        return Err(Error::TypeMismatch);
    }
    f.subspaces
        .iter()
        .zip(&g.subspaces)
        .map(|(a, b)| injection_distance(a, b))
        .collect()
}

/// `D^n = ⌊n²/4⌋`, the largest distance between two full flags on `F_q^n`.
pub fn max_distance(n: usize) -> usize {
    n * n / 4
}

/// A deduplicated, non-empty set of flags sharing field and type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCode {
    field: PrimeField,
    ty: TypeVector,
    flags: Vec<Flag>,
}

impl FlagCode {
    pub fn new(flags: Vec<Flag>) -> Result<Self> {
        let first = flags.first().ok_or(Error::EmptyCode)?;
        let field = first.field();
        let ty = first.ty.clone();
        if flags.iter().any(|f| f.field() != field || f.ty != ty) {
            return Err(Error::TypeMismatch);
        }
        let mut seen = BTreeSet::new();
        let flags = flags
            .into_iter()
            .filter(|f| seen.insert(f.subspaces.clone()))
            .collect();
        Ok(Self { field, ty, flags })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.ty
    }

    pub fn is_full(&self) -> bool {
        self.ty.is_full()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Unordered pairs of distinct flags.
    pub fn pairs(&self) -> impl Iterator<Item = (&Flag, &Flag)> {
        self.flags
            .iter()
            .enumerate()
            .flat_map(move |(a, f)| self.flags[a + 1..].iter().map(move |g| (f, g)))
    }
}

/// Minimum pairwise flag distance; 0 for a single flag.
pub fn min_distance(c: &FlagCode) -> usize {
    c.pairs()
        .map(|(f, g)| flag_distance(f, g).expect("code flags share shape"))
        .min()
        .unwrap_or(0)
}

/// `D^n - d_f(C)` for full flag codes.
pub fn codistance(c: &FlagCode) -> Result<usize> {
    if !c.is_full() {
        return Err(Error::NotFullFlag);
    }
    Ok(max_distance(c.n()) - min_distance(c))
}

/// The projected code `C_i` with its injection minimum distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedCode {
    pub dimension: usize,
    pub subspaces: BTreeSet<Subspace>,
    pub min_distance: usize,
}

impl ProjectedCode {
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }
}

/// `C_i = { p_i(F) | F ∈ C }`, `i` counted over the type vector.
pub fn projected_code(c: &FlagCode, i: usize) -> Result<ProjectedCode> {
    let mut subspaces = BTreeSet::new();
    for f in &c.flags {
        subspaces.insert(projection(f, i)?.clone());
    }
    let list: Vec<&Subspace> = subspaces.iter().collect();
    let mut min = None;
    for (a, u) in list.iter().enumerate() {
        for v in &list[a + 1..] {
            let d = injection_distance(u, v)?;
            min = Some(min.map_or(d, |m: usize| m.min(d)));
        }
    }
    Ok(ProjectedCode {
        dimension: c.ty.dims()[i - 1],
        subspaces,
        min_distance: min.unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(q: u32, n: usize, unit_rows: &[usize]) -> MatGFq {
        let field = PrimeField::new(q).unwrap();
        let mut m = MatGFq::zeros(field, unit_rows.len(), n);
        for (r, &c) in unit_rows.iter().enumerate() {
            m.set(r, c - 1, 1);
        }
        m
    }

    fn example_code(q: u32) -> (FlagCode, [Flag; 3]) {
        let ty = TypeVector::new(6, vec![1, 3, 5]).unwrap();
        let f1 = flag_from_matrix(q, &ty, &rows(q, 6, &[1, 2, 3, 4, 5])).unwrap();
        let f2 = flag_from_matrix(q, &ty, &rows(q, 6, &[4, 5, 6, 1, 2])).unwrap();
        let f3 = flag_from_matrix(q, &ty, &rows(q, 6, &[5, 4, 6, 2, 3])).unwrap();
        let code = FlagCode::new(vec![f1.clone(), f2.clone(), f3.clone()]).unwrap();
        (code, [f1, f2, f3])
    }

    #[test]
    fn type_vectors() {
        assert!(TypeVector::new(6, vec![1, 3, 5]).is_ok());
        assert!(TypeVector::new(6, vec![0, 3]).is_err());
        assert!(TypeVector::new(6, vec![3, 3]).is_err());
        assert!(TypeVector::new(6, vec![2, 6]).is_err());
        assert!(TypeVector::new(6, vec![]).is_err());
        let full = TypeVector::full(4).unwrap();
        assert_eq!(full.dims(), &[1, 2, 3]);
        assert!(full.is_full());
        assert!(!TypeVector::new(4, vec![1, 3]).unwrap().is_full());
    }

    #[test]
    fn standard_flag() {
        let f = coordinate_flag(2, &[1, 2, 3, 4]).unwrap();
        for i in 1..=3 {
            let idx: Vec<usize> = (1..=i).collect();
            let expected = Subspace::coordinate(f.field(), 4, &idx).unwrap();
            assert_eq!(projection(&f, i).unwrap(), &expected);
        }
        assert!(matches!(
            projection(&f, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            projection(&f, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn rank_deficient_generator() {
        let ty = TypeVector::full(3).unwrap();
        let err = flag_from_matrix(2, &ty, &rows(2, 3, &[1, 1, 2])).unwrap_err();
        assert_eq!(err, Error::RankDeficient { index: 2, rows: 2 });
        let err = flag_from_matrix(2, &ty, &rows(2, 3, &[1, 2, 2])).unwrap_err();
        assert_eq!(err, Error::RankDeficient { index: 3, rows: 3 });
        // n-1 rows are enough for a full flag.
        assert!(flag_from_matrix(2, &ty, &rows(2, 3, &[1, 2])).is_ok());
    }

    #[test]
    fn type_135_flags() {
        let (_, [_, f2, f3]) = example_code(2);
        let field = f2.field();
        assert_eq!(
            projection(&f2, 1).unwrap(),
            &Subspace::coordinate(field, 6, &[4]).unwrap()
        );
        assert_eq!(
            projection(&f2, 3).unwrap(),
            &Subspace::coordinate(field, 6, &[1, 2, 4, 5, 6]).unwrap()
        );
        assert_eq!(
            projection(&f3, 3).unwrap(),
            &Subspace::coordinate(field, 6, &[2, 3, 4, 5, 6]).unwrap()
        );
        assert_eq!(distance_vector(&f2, &f3).unwrap(), vec![1, 0, 1]);
        assert_eq!(flag_distance(&f2, &f3).unwrap(), 2);
    }

    #[test]
    fn type_135_code() {
        for q in [2, 3, 5] {
            let (code, _) = example_code(q);
            assert_eq!(min_distance(&code), 2);
            let sizes: Vec<usize> = (1..=3)
                .map(|i| projected_code(&code, i).unwrap().len())
                .collect();
            let dists: Vec<usize> = (1..=3)
                .map(|i| projected_code(&code, i).unwrap().min_distance)
                .collect();
            assert_eq!(sizes, vec![3, 2, 3]);
            assert_eq!(dists, vec![1, 3, 1]);
            assert_eq!(codistance(&code), Err(Error::NotFullFlag));
        }
    }

    #[test]
    fn max_distances() {
        assert_eq!(max_distance(2), 1);
        assert_eq!(max_distance(7), 12);
        assert_eq!(max_distance(8), 16);
    }

    #[test]
    fn standard_vs_reversed() {
        let std4 = coordinate_flag(2, &[1, 2, 3, 4]).unwrap();
        let rev4 = coordinate_flag(2, &[4, 3, 2, 1]).unwrap();
        assert_eq!(distance_vector(&std4, &rev4).unwrap(), vec![1, 2, 1]);
        assert_eq!(flag_distance(&std4, &rev4).unwrap(), 4);
        assert_eq!(flag_distance(&std4, &std4).unwrap(), 0);
        let code = FlagCode::new(vec![std4.clone(), rev4]).unwrap();
        assert_eq!(min_distance(&code), 4);
        assert_eq!(codistance(&code).unwrap(), 0);

        let single = FlagCode::new(vec![std4]).unwrap();
        assert_eq!(min_distance(&single), 0);
        assert_eq!(projected_code(&single, 2).unwrap().len(), 1);
        assert_eq!(projected_code(&single, 2).unwrap().min_distance, 0);
        let single7 =
            FlagCode::new(vec![coordinate_flag(3, &[1, 2, 3, 4, 5, 6, 7]).unwrap()]).unwrap();
        assert_eq!(codistance(&single7).unwrap(), 12);
    }

    #[test]
    fn code_deduplicates_by_subspaces() {
        let field = PrimeField::new(3).unwrap();
        let a = coordinate_flag(3, &[1, 2, 3]).unwrap();
        // Same flag from a different generator: row 2 := row 2 + row 1.
        let m =
            MatGFq::from_rows(field, 3, &[vec![1, 0, 0], vec![1, 1, 0], vec![2, 2, 1]]).unwrap();
        let b = flag_from_matrix(3, &TypeVector::full(3).unwrap(), &m).unwrap();
        assert_eq!(a, b);
        let code = FlagCode::new(vec![a, b]).unwrap();
        assert_eq!(code.len(), 1);
        assert_eq!(min_distance(&code), 0);
    }

    #[test]
    fn code_shape_errors() {
        assert_eq!(FlagCode::new(vec![]), Err(Error::EmptyCode));
        let a = coordinate_flag(2, &[1, 2, 3]).unwrap();
        let b = coordinate_flag(3, &[1, 2, 3]).unwrap();
        let c = coordinate_flag(2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(
            FlagCode::new(vec![a.clone(), b.clone()]),
            Err(Error::TypeMismatch)
        );
        assert_eq!(flag_distance(&a, &c), Err(Error::TypeMismatch));
        assert_eq!(flag_distance(&a, &b), Err(Error::TypeMismatch));
    }
}
