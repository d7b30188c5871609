//! Exact linear algebra over prime fields.
//!
//! Subspaces are kept in reduced row-echelon form with zero rows stripped,
//! so two subspaces are equal exactly when their stored bases are equal.
//! Intersection dimensions come from the rank identity
//! `dim(U ∩ V) = dim U + dim V - dim(U + V)`; no intersection basis is built.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime field `F_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if is_prime(q) {
            Ok(Self { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn order(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.q as u64 - b as u64) % self.q as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    /// Multiplicative inverse via Fermat's little theorem. `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.q));
        let mut base = a as u64 % self.q as u64;
        let mut exp = self.q as u64 - 2;
        let modulus = self.q as u64;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % modulus;
            }
            base = base * base % modulus;
            exp >>= 1;
        }
        acc as u32
    }

    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(self.q as i64) as u32
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatGFq {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl MatGFq {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows whose entries are already reduced modulo `q`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ColumnCountMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= field.order() {
                    return Err(Error::EntryNotReduced {
                        row: r,
                        col: c,
                        value,
                        q: field.order(),
                    });
                }
                entries.push(value);
            }
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Builds a matrix from arbitrary integers, reducing each modulo `q`.
    pub fn from_integer_rows(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let reduced: Vec<Vec<u32>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.reduce(v)).collect())
            .collect();
        Self::from_rows(field, cols, &reduced)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        debug_assert!(value < self.field.order());
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// The first `count` rows as a new matrix.
    pub fn top_rows(&self, count: usize) -> Self {
        let count = count.min(self.rows);
        Self {
            field: self.field,
            rows: count,
            cols: self.cols,
            entries: self.entries[..count * self.cols].to_vec(),
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ColumnCountMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::RowCountMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }
}

impl fmt::Display for MatGFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form and rank. Zero rows end up at the bottom.
pub fn rref(m: &MatGFq) -> (MatGFq, usize) {
    let f = m.field;
    let mut a = m.clone();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let Some(found) = (pivot_row..a.rows).find(|&r| a.get(r, col) != 0) else {
            continue;
        };
        a.swap_rows(pivot_row, found);
        let inv = f.inv(a.get(pivot_row, col));
        for c in col..a.cols {
            let v = f.mul(a.get(pivot_row, c), inv);
            a.set(pivot_row, c, v);
        }
        for r in 0..a.rows {
            if r == pivot_row {
                continue;
            }
            let factor = a.get(r, col);
            if factor == 0 {
                continue;
            }
            for c in col..a.cols {
                let v = f.sub(a.get(r, c), f.mul(factor, a.get(pivot_row, c)));
                a.set(r, c, v);
            }
        }
        pivot_row += 1;
    }
    (a, pivot_row)
}

/// A subspace of `F_q^n`, stored by its canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    ambient_n: usize,
    basis: MatGFq,
}

impl Subspace {
    /// Row space of `rows` inside `F_q^n`.
    pub fn from_rows(n: usize, rows: &MatGFq) -> Result<Self> {
        if rows.cols() != n {
            return Err(Error::ColumnCountMismatch {
                expected: n,
                found: rows.cols(),
            });
        }
        let (reduced, rank) = rref(rows);
        Ok(Self {
            ambient_n: n,
            basis: reduced.top_rows(rank),
        })
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            ambient_n: n,
            basis: MatGFq::zeros(field, 0, n),
        }
    }

    pub fn whole(field: PrimeField, n: usize) -> Self {
        Self {
            ambient_n: n,
            basis: MatGFq::identity(field, n),
        }
    }

    /// Span of the standard basis vectors `e_i` for the given 1-based indices.
    pub fn coordinate(field: PrimeField, n: usize, indices: &[usize]) -> Result<Self> {
        let mut m = MatGFq::zeros(field, indices.len(), n);
        for (r, &i) in indices.iter().enumerate() {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    min: 1,
                    max: n,
                });
            }
            m.set(r, i - 1, 1);
        }
        Self::from_rows(n, &m)
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_n
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatGFq {
        &self.basis
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() || self.ambient_n != other.ambient_n {
            return Err(Error::AmbientMismatch {
                q1: self.field().order(),
                n1: self.ambient_n,
                q2: other.field().order(),
                n2: other.ambient_n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        Ok(dim_sum(self, other)? == self.dim())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.basis.rows())
            .map(|r| {
                let row: Vec<String> = self.basis.row(r).iter().map(u32::to_string).collect();
                format!("({})", row.join(","))
            })
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

/// Row space of `rows` as a subspace of `F_q^n`.
pub fn subspace_from_rows(q: u32, n: usize, rows: &MatGFq) -> Result<Subspace> {
    let field = PrimeField::new(q)?;
    if rows.field() != field {
        return Err(Error::AmbientMismatch {
            q1: q,
            n1: n,
            q2: rows.field().order(),
            n2: rows.cols(),
        });
    }
    Subspace::from_rows(n, rows)
}

/// `dim(U + V)`.
pub fn dim_sum(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.check_ambient(v)?;
    Ok(u.basis.stack(&v.basis)?.rank())
}

/// `dim(U ∩ V)` through the modular law.
pub fn dim_intersection(u: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(u.dim() + v.dim() - dim_sum(u, v)?)
}

/// `max(dim U, dim V) - dim(U ∩ V)`.
pub fn injection_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(u.dim().max(v.dim()) - dim_intersection(u, v)?)
}

/// `dim(U + V) - dim(U ∩ V)`.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    let sum = dim_sum(u, v)?;
    let inter = u.dim() + v.dim() - sum;
    Ok(sum - inter)
}
