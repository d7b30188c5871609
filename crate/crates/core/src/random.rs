//! Random full flags and flag codes.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::flags::{flag_from_matrix, Flag, FlagCode, TypeVector};
use crate::gfq::{MatGFq, PrimeField};
use crate::paths::{realize_path, DistancePath};

/// Uniform random invertible `n x n` matrix, by rejection.
pub fn random_invertible<R: Rng + ?Sized>(field: PrimeField, n: usize, rng: &mut R) -> MatGFq {
    loop {
        let mut m = MatGFq::zeros(field, n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, rng.gen_range(0..field.order()));
            }
        }
        if m.rank() == n {
            return m;
        }
    }
}

/// Random unit lower-triangular matrix; left-multiplying a generator by it keeps the flag.
fn random_unipotent<R: Rng + ?Sized>(field: PrimeField, n: usize, rng: &mut R) -> MatGFq {
    let mut m = MatGFq::identity(field, n);
    for r in 1..n {
        for c in 0..r {
            m.set(r, c, rng.gen_range(0..field.order()));
        }
    }
    m
}

pub fn random_full_flag<R: Rng + ?Sized>(q: u32, n: usize, rng: &mut R) -> Result<Flag> {
    let field = PrimeField::new(q)?;
    flag_from_matrix(q, &TypeVector::full(n)?, &random_invertible(field, n, rng))
}

/// Uniform random distance path: each step picks among the admissible next heights.
pub fn random_path<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DistancePath {
    let mut deltas = vec![0usize; n + 1];
    for i in 0..n.saturating_sub(1) {
        let cap = (i + 1).min(n - i - 1);
        let d = deltas[i];
        let options: Vec<usize> = [d.wrapping_sub(1), d, d + 1]
            .into_iter()
            .filter(|&x| x <= cap)
            .collect();
        deltas[i + 1] = *options
            .choose(rng)
            .expect("a step down is always admissible");
    }
    DistancePath::new(n, deltas).expect("generated paths are admissible")
}

/// How the flags of a random code are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Independent uniform full flags: typically large distance.
    Uniform,
    /// Perturbations of one base flag by a few adjacent row swaps: small distance.
    Clustered,
    /// A realized random path, moved by a random change of basis, plus clustered flags.
    Seeded,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Uniform, Strategy::Clustered, Strategy::Seeded];
}

fn perturbed<R: Rng + ?Sized>(q: u32, base: &MatGFq, rng: &mut R) -> Result<Flag> {
    let field = base.field();
    let n = base.rows();
    let mut rows = base.to_rows();
    let swaps = rng.gen_range(0..=n);
    for _ in 0..swaps {
        if n >= 2 {
            let i = rng.gen_range(0..n - 1);
            rows.swap(i, i + 1);
        }
    }
    let m = random_unipotent(field, n, rng).mul(&MatGFq::from_rows(field, n, &rows)?)?;
    flag_from_matrix(q, &TypeVector::full(n)?, &m)
}

/// A full flag code of `q`, `n` with between 1 and `size` distinct flags
/// (duplicates drawn by chance collapse).
pub fn random_code<R: Rng + ?Sized>(
    q: u32,
    n: usize,
    size: usize,
    strategy: Strategy,
    rng: &mut R,
) -> Result<FlagCode> {
    let field = PrimeField::new(q)?;
    let size = size.max(1);
    let mut flags = Vec::with_capacity(size);
    match strategy {
        Strategy::Uniform => {
            for _ in 0..size {
                flags.push(random_full_flag(q, n, rng)?);
            }
        }
        Strategy::Clustered => {
            let base = random_invertible(field, n, rng);
            for _ in 0..size {
                flags.push(perturbed(q, &base, rng)?);
            }
        }
        Strategy::Seeded => {
            let (f, g) = realize_path(&random_path(n, rng), q)?;
            let change = random_invertible(field, n, rng);
            let ty = TypeVector::full(n)?;
            let fm = f.generator().mul(&change)?;
            let gm = g.generator().mul(&change)?;
            flags.push(flag_from_matrix(q, &ty, &fm)?);
            flags.push(flag_from_matrix(q, &ty, &gm)?);
            for _ in 2..size {
                let base = if rng.gen_bool(0.5) { &fm } else { &gm };
                flags.push(perturbed(q, base, rng)?);
            }
        }
    }
    FlagCode::new(flags)
}
