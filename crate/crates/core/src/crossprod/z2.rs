//! The 2×2 matrix picture of `H ⋊ ℤ₂` over `ℂ ⋊ ℤ₂`.
//!
//! `ξ` with `ξ(e) = x`, `ξ(g) = y` corresponds to `[[x, y], [σy, σx]]`, and
//! `f` with `f(e) = a`, `f(g) = b` to `[[a, b], [b, a]]`. The three
//! operations become matrix products, with the inner product `M*·M'`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{CorrespondenceElement, CrossError, GroupAlgebraElement};
use crate::exactnum::{CycMatrix, Cyclotomic, FieldExt};
use crate::groups::FiniteGroup;
use crate::reps::Representation;

/// A 2×2 matrix with entries in `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMatrix {
    pub entries: [[Vec<Cyclotomic>; 2]; 2],
}

fn lin(a: &Cyclotomic, x: &[Cyclotomic], b: &Cyclotomic, y: &[Cyclotomic]) -> Vec<Cyclotomic> {
    x.iter().zip(y).map(|(u, v)| &(a * u) + &(b * v)).collect()
}

fn dot(x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
    x.iter().zip(y).fold(x[0].field().zero(), |acc, (u, v)| &acc + &(&u.conj() * v))
}

impl HMatrix {
    /// `M · S` for a 2×2 scalar matrix `S`.
    pub fn right_mul(&self, s: &CycMatrix) -> HMatrix {
        let e = &self.entries;
        let entry = |i: usize, j: usize| lin(s.get(0, j), &e[i][0], s.get(1, j), &e[i][1]);
        HMatrix { entries: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
    }

    /// `S · M` for a 2×2 scalar matrix `S`.
    pub fn left_mul(&self, s: &CycMatrix) -> HMatrix {
        let e = &self.entries;
        let entry = |i: usize, j: usize| lin(s.get(i, 0), &e[0][j], s.get(i, 1), &e[1][j]);
        HMatrix { entries: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
    }

    /// `M* · M'` with `(M*M')_ij = Σ_k ⟨M_ki, M'_kj⟩`.
    pub fn inner(&self, other: &HMatrix) -> CycMatrix {
        let (a, b) = (&self.entries, &other.entries);
        let entry = |i: usize, j: usize| &dot(&a[0][i], &b[0][j]) + &dot(&a[1][i], &b[1][j]);
        CycMatrix::from_rows(alloc::vec![alloc::vec![entry(0, 0), entry(0, 1)], alloc::vec![entry(1, 0), entry(1, 1)]])
    }
}

/// `ℤ₂` acting on `H` through an order-two unitary `σ`.
#[derive(Clone, Debug)]
pub struct Z2Picture {
    rep: Arc<Representation>,
    sigma: CycMatrix,
}

impl Z2Picture {
    pub fn new(group: &Arc<FiniteGroup>, sigma: CycMatrix) -> Result<Self, CrossError> {
        if group.order() != 2 {
            return Err(CrossError::NotOrderTwo(group.order()));
        }
        if sigma.rows() != sigma.cols() {
            return Err(CrossError::SigmaShape { rows: sigma.rows(), cols: sigma.cols() });
        }
        if !sigma.mul(&sigma).is_identity() {
            return Err(CrossError::SigmaNotInvolution);
        }
        if !sigma.conj_transpose().mul(&sigma).is_identity() {
            return Err(CrossError::SigmaNotUnitary);
        }
        let field = sigma.get(0, 0).field().clone();
        let id = CycMatrix::identity(&field, sigma.rows());
        let rep = Representation::from_matrices(group, &field, alloc::vec![id, sigma.clone()])?;
        Ok(Z2Picture { rep: Arc::new(rep), sigma })
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn sigma(&self) -> &CycMatrix {
        &self.sigma
    }

    /// `[[x, y], [σy, σx]]`.
    pub fn matrix_form(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> HMatrix {
        let sx = self.sigma.mul_vec(x);
        let sy = self.sigma.mul_vec(y);
        HMatrix { entries: [[x.to_vec(), y.to_vec()], [sy, sx]] }
    }

    /// `[[a, b], [b, a]]`; the action on the scalars is trivial.
    pub fn scalar_form(a: &Cyclotomic, b: &Cyclotomic) -> CycMatrix {
        CycMatrix::from_rows(alloc::vec![alloc::vec![a.clone(), b.clone()], alloc::vec![b.clone(), a.clone()]])
    }

    pub fn element_form(&self, xi: &CorrespondenceElement) -> HMatrix {
        self.matrix_form(xi.value(0), xi.value(1))
    }

    pub fn algebra_form(f: &GroupAlgebraElement) -> CycMatrix {
        Self::scalar_form(f.value(0), f.value(1))
    }
}
