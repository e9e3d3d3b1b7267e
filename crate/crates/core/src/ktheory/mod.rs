//! Integer matrices, Smith normal form and the K-groups computed from them.
//!
//! Convention for a graph with vertex matrix `B`:
//! `K0 = coker(I - Bᵀ)` and `K1 = ker(I - Bᵀ)` (a free group).

mod snf;

pub use snf::{smith_normal_form, SmithForm};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::crossprod;
use crate::reps::{CharacterTable, Representation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KError {
    #[error("expected {expected} entries for a {rows}x{cols} matrix, found {found}")]
    Shape { rows: usize, cols: usize, expected: usize, found: usize },
    #[error("ragged matrix: row {row} has {len} entries, expected {cols}")]
    Ragged { row: usize, len: usize, cols: usize },
    #[error("incidence matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("incidence matrix has negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: BigInt },
    #[error("invalid invariant factors: {0}")]
    InvalidInvariants(String),
    #[error("bundle rank must be at least 1, got {0}")]
    InvalidRank(i64),
}

/// A dense integer matrix; zero rows or columns are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, KError> {
        if entries.len() != rows * cols {
            return Err(KError::Shape { rows, cols, expected: rows * cols, found: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, KError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(KError::Ragged { row, len: r.len(), cols });
            }
            entries.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Simultaneous row and column permutation: entry `(i, j)` moves to
    /// `(perm[i], perm[j])`.
    pub fn permute_square(&self, perm: &[usize]) -> IntMatrix {
        assert!(self.is_square() && perm.len() == self.rows);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free (Bareiss) determinant. Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Powers `B, B², …, Bᵏ` of a square matrix.
    pub fn powers(&self, k: usize) -> Vec<IntMatrix> {
        assert!(self.is_square());
        let mut out: Vec<IntMatrix> = Vec::with_capacity(k);
        for _ in 0..k {
            let next = out.last().map_or_else(|| self.clone(), |p| p.mul(self));
            out.push(next);
        }
        out
    }
}

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with
/// `2 ≤ d₁ | d₂ | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupInvariants {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self, KError> {
        let two = BigInt::from(2);
        if let Some(d) = torsion.iter().find(|d| **d < two) {
            return Err(KError::InvalidInvariants(alloc::format!("torsion entry {d} is below 2")));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(KError::InvalidInvariants(alloc::format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(AbelianGroupInvariants { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants { free_rank: rank, torsion: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d)
    }
}

impl fmt::Display for AbelianGroupInvariants {
    /// `0`, `Z`, `Z^2`, `Z/2`, `Z ⊕ Z/2 ⊕ Z/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| alloc::format!("Z/{d}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGroups {
    pub k0: AbelianGroupInvariants,
    pub k1: AbelianGroupInvariants,
}

impl fmt::Display for KGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0 = {}, K1 = {}", self.k0, self.k1)
    }
}

/// Cokernel of `m: ℤ^cols → ℤ^rows`.
pub fn cokernel_invariants(m: &IntMatrix) -> AbelianGroupInvariants {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag.into_iter().filter(|d| *d > BigInt::one()).collect();
    AbelianGroupInvariants::new(m.rows() - rank, torsion).expect("Smith diagonal is a divisibility chain")
}

/// Rank of the kernel of `m: ℤ^cols → ℤ^rows`.
pub fn kernel_rank(m: &IntMatrix) -> usize {
    m.cols() - smith_normal_form(m).rank()
}

fn k_groups_of(m: &IntMatrix) -> KGroups {
    KGroups { k0: cokernel_invariants(m), k1: AbelianGroupInvariants::free(kernel_rank(m)) }
}

/// K-theory of the graph algebra with vertex matrix `b`.
pub fn graph_k_theory(b: &IntMatrix) -> Result<KGroups, KError> {
    if !b.is_square() {
        return Err(KError::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            if b.get(i, j).is_negative() {
                return Err(KError::NegativeEntry { row: i, col: j, value: b.get(i, j).clone() });
            }
        }
    }
    let m = IntMatrix::identity(b.rows()).sub(&b.transpose());
    Ok(k_groups_of(&m))
}

/// A vector bundle over an even sphere with K-class `n + mλ`, `λ² = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphereBundleClass {
    pub n: i64,
    pub m: i64,
}

impl SphereBundleClass {
    pub fn new(n: i64, m: i64) -> Result<Self, KError> {
        if n < 1 {
            return Err(KError::InvalidRank(n));
        }
        Ok(SphereBundleClass { n, m })
    }

    /// `id - [E]` on `K⁰(S^{2k}) = ℤ ⊕ ℤλ`, where
    /// `[E](x + yλ) = nx + (ny + mx)λ`.
    pub fn id_minus_class(&self) -> IntMatrix {
        let (n, m) = (BigInt::from(self.n), BigInt::from(self.m));
        IntMatrix::new(2, 2, vec![BigInt::one() - &n, BigInt::zero(), -m, BigInt::one() - n]).expect("2x2")
    }
}

/// K0 is the cokernel of `id - [E]` on ℤ²; K1 is free of rank equal to its
/// kernel rank (zero whenever `n ≥ 2`).
pub fn sphere_bundle_k0(c: &SphereBundleClass) -> KGroups {
    k_groups_of(&c.id_minus_class())
}

/// Graph K-theory of the fusion matrix of `r` against `t`.
pub fn k_theory_from_fusion(r: &Representation, t: &CharacterTable) -> Result<KGroups, crate::Error> {
    let b = crossprod::fusion_matrix(r, t)?;
    Ok(graph_k_theory(&b)?)
}

#[cfg(test)]
mod tests;
