//! The crossed-product correspondence `H ⋊ G` of a finite group acting
//! unitarily on `H = ℚ(ζ_N)ⁿ`, with the scalars as base algebra and
//! counting measure on `G`.
//!
//! * `(a ∗ b)(t) = Σ_s a(s) b(s⁻¹t)`, `a*(t) = conj(a(t⁻¹))`
//! * `(h·ξ)(t) = Σ_s h(s) ρ_s ξ(s⁻¹t)`
//! * `(ξ·f)(t) = Σ_s ξ(s) f(s⁻¹t)`
//! * `⟨ξ, η⟩(t) = Σ_s ⟨ξ(s), η(st)⟩`, conjugate-linear in `ξ`

mod z2;

pub use z2::{HMatrix, Z2Picture};

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{rank_of_rows, CycField, Cyclotomic, FieldExt, NumError, Rational};
use crate::groups::FiniteGroup;
use crate::ktheory::IntMatrix;
use crate::reps::{
    char_inner, character_of, same_group, tensor_char, validate_char_table, CharacterTable, RepError, Representation,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CrossError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("objects are defined over different groups")]
    GroupMismatch,
    #[error("objects are defined over different representations")]
    RepMismatch,
    #[error("expected {expected} values (one per element), found {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("vector at element {element} has length {found}, expected {expected}")]
    VectorLength { element: usize, expected: usize, found: usize },
    #[error("fusion entry ({i}, {k}) is {value}, not a nonnegative integer")]
    FusionNotInteger { i: usize, k: usize, value: Rational },
    #[error("rank identity fails in column {k}: sum of d_i B_ik is {found}, expected {expected}")]
    FusionRankIdentity { k: usize, expected: usize, found: usize },
    #[error("matrix picture needs a group of order 2, got order {0}")]
    NotOrderTwo(usize),
    #[error("sigma is {rows}x{cols}, expected square")]
    SigmaShape { rows: usize, cols: usize },
    #[error("sigma squared is not the identity")]
    SigmaNotInvolution,
    #[error("sigma is not unitary")]
    SigmaNotUnitary,
}

/// A function `G → ℚ(ζ_N)`, an element of the group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self, CrossError> {
        if values.len() != group.order() {
            return Err(CrossError::ValueCount { expected: group.order(), found: values.len() });
        }
        Ok(GroupAlgebraElement { group: group.clone(), values })
    }

    pub fn zero(group: &Arc<FiniteGroup>, field: &Arc<CycField>) -> Self {
        GroupAlgebraElement { group: group.clone(), values: vec![field.zero(); group.order()] }
    }

    /// The point mass at `g`.
    pub fn delta(group: &Arc<FiniteGroup>, field: &Arc<CycField>, g: usize) -> Self {
        let mut a = Self::zero(group, field);
        a.values[g] = field.one();
        a
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &Cyclotomic {
        &self.values[g]
    }

    fn check_group(&self, other: &Arc<FiniteGroup>) -> Result<(), CrossError> {
        if same_group(&self.group, other) {
            Ok(())
        } else {
            Err(CrossError::GroupMismatch)
        }
    }

    pub fn convolve(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement, CrossError> {
        self.check_group(&other.group)?;
        let g = &self.group;
        let mut out = self.values.iter().map(|v| v.field().zero()).collect::<Vec<_>>();
        for (s, a) in self.values.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (u, b) in other.values.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                // u = s⁻¹t
                out[g.mul(s, u)] += &(a * b);
            }
        }
        Ok(GroupAlgebraElement { group: g.clone(), values: out })
    }

    pub fn involute(&self) -> GroupAlgebraElement {
        let values = (0..self.group.order()).map(|t| self.values[self.group.inv(t)].conj()).collect();
        GroupAlgebraElement { group: self.group.clone(), values }
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement, CrossError> {
        self.check_group(&other.group)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(GroupAlgebraElement { group: self.group.clone(), values })
    }

    pub fn scale(&self, c: &Cyclotomic) -> GroupAlgebraElement {
        GroupAlgebraElement { group: self.group.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    fn lift_to(&self, field: &Arc<CycField>) -> Result<GroupAlgebraElement, CrossError> {
        let values = self.values.iter().map(|v| v.lift_to(field)).collect::<Result<_, _>>()?;
        Ok(GroupAlgebraElement { group: self.group.clone(), values })
    }
}

/// A function `G → H`, one vector of length `dim ρ` per element.
#[derive(Clone, Debug)]
pub struct CorrespondenceElement {
    rep: Arc<Representation>,
    values: Vec<Vec<Cyclotomic>>,
}

impl PartialEq for CorrespondenceElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(self.rep.group(), other.rep.group()) && self.values == other.values
    }
}

impl CorrespondenceElement {
    pub fn new(rep: &Arc<Representation>, values: Vec<Vec<Cyclotomic>>) -> Result<Self, CrossError> {
        let order = rep.group().order();
        if values.len() != order {
            return Err(CrossError::ValueCount { expected: order, found: values.len() });
        }
        if let Some((element, v)) = values.iter().enumerate().find(|(_, v)| v.len() != rep.dim()) {
            return Err(CrossError::VectorLength { element, expected: rep.dim(), found: v.len() });
        }
        Ok(CorrespondenceElement { rep: rep.clone(), values })
    }

    pub fn zero(rep: &Arc<Representation>) -> Self {
        let z = rep.field().zero();
        CorrespondenceElement { rep: rep.clone(), values: vec![vec![z; rep.dim()]; rep.group().order()] }
    }

    /// `ξ_x^j`: the basis vector `e_j` placed at element `x`.
    pub fn basis(rep: &Arc<Representation>, x: usize, j: usize) -> Self {
        let mut xi = Self::zero(rep);
        xi.values[x][j] = rep.field().one();
        xi
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &[Cyclotomic] {
        &self.values[g]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Cyclotomic::is_zero)
    }

    /// Concatenation of all values, element by element.
    pub fn flatten(&self) -> Vec<Cyclotomic> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn add(&self, other: &CorrespondenceElement) -> Result<CorrespondenceElement, CrossError> {
        self.check_rep(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(CorrespondenceElement { rep: self.rep.clone(), values })
    }

    pub fn scale(&self, c: &Cyclotomic) -> CorrespondenceElement {
        let values = self.values.iter().map(|v| v.iter().map(|x| x * c).collect()).collect();
        CorrespondenceElement { rep: self.rep.clone(), values }
    }

    fn check_rep(&self, other: &CorrespondenceElement) -> Result<(), CrossError> {
        if !same_group(self.rep.group(), other.rep.group()) {
            return Err(CrossError::GroupMismatch);
        }
        if !(Arc::ptr_eq(&self.rep, &other.rep) || self.rep.matrices() == other.rep.matrices()) {
            return Err(CrossError::RepMismatch);
        }
        Ok(())
    }

    fn zero_values(&self) -> Vec<Vec<Cyclotomic>> {
        let z = self.rep.field().zero();
        vec![vec![z; self.rep.dim()]; self.values.len()]
    }
}

fn add_into(acc: &mut [Cyclotomic], v: &[Cyclotomic], c: &Cyclotomic) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

/// `(h·ξ)(t) = Σ_s h(s) ρ_s ξ(s⁻¹t)`.
pub fn left_act(h: &GroupAlgebraElement, xi: &CorrespondenceElement) -> Result<CorrespondenceElement, CrossError> {
    h.check_group(xi.rep.group())?;
    let g = &h.group;
    let mut out = xi.zero_values();
    for (s, c) in h.values.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let rho = xi.rep.matrix(s);
        for (u, v) in xi.values.iter().enumerate() {
            if v.iter().all(Cyclotomic::is_zero) {
                continue;
            }
            add_into(&mut out[g.mul(s, u)], &rho.mul_vec(v), c);
        }
    }
    Ok(CorrespondenceElement { rep: xi.rep.clone(), values: out })
}

/// `(ξ·f)(t) = Σ_s ξ(s) f(s⁻¹t)`.
pub fn right_act(xi: &CorrespondenceElement, f: &GroupAlgebraElement) -> Result<CorrespondenceElement, CrossError> {
    f.check_group(xi.rep.group())?;
    let g = &f.group;
    let mut out = xi.zero_values();
    for (s, v) in xi.values.iter().enumerate() {
        if v.iter().all(Cyclotomic::is_zero) {
            continue;
        }
        for (u, c) in f.values.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            add_into(&mut out[g.mul(s, u)], v, c);
        }
    }
    Ok(CorrespondenceElement { rep: xi.rep.clone(), values: out })
}

fn hermitian(a: &[Cyclotomic], b: &[Cyclotomic]) -> Option<Cyclotomic> {
    let mut acc: Option<Cyclotomic> = None;
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let term = &x.conj() * y;
        match &mut acc {
            Some(s) => *s += &term,
            None => acc = Some(term),
        }
    }
    acc
}

/// `⟨ξ, η⟩(t) = Σ_s ⟨ξ(s), η(st)⟩`.
pub fn inner(xi: &CorrespondenceElement, eta: &CorrespondenceElement) -> Result<GroupAlgebraElement, CrossError> {
    xi.check_rep(eta)?;
    let g = xi.rep.group();
    let mut out = vec![xi.rep.field().zero(); g.order()];
    for (s, v) in xi.values.iter().enumerate() {
        for (t, slot) in out.iter_mut().enumerate() {
            if let Some(c) = hermitian(v, &eta.values[g.mul(s, t)]) {
                *slot += &c;
            }
        }
    }
    Ok(GroupAlgebraElement { group: g.clone(), values: out })
}

/// `pᵢ(g) = (dᵢ/|G|)·conj(χᵢ(g))`.
pub fn central_projection(t: &CharacterTable, i: usize) -> Result<GroupAlgebraElement, CrossError> {
    let chi = t.get(i)?;
    let d = chi.degree()?;
    let g = t.group();
    let q = Rational::new(BigInt::from(d), BigInt::from(g.order()));
    let values = (0..g.order()).map(|x| chi.value_at(x).conj().scale(&q)).collect();
    Ok(GroupAlgebraElement { group: g.clone(), values })
}

fn lcm_conductor(r: &Representation, t: &CharacterTable) -> u32 {
    t.characters()
        .iter()
        .flat_map(|c| c.values())
        .fold(r.conductor(), |acc, v| acc.lcm(&v.conductor()))
}

fn common_field(r: &Representation, t: &CharacterTable) -> Result<Arc<CycField>, CrossError> {
    let n = lcm_conductor(r, t);
    if n == r.conductor() {
        Ok(r.field().clone())
    } else {
        Ok(CycField::new(n)?)
    }
}

fn check_inputs(r: &Representation, t: &CharacterTable) -> Result<(), CrossError> {
    if !same_group(r.group(), t.group()) {
        return Err(CrossError::GroupMismatch);
    }
    validate_char_table(t)?;
    Ok(())
}

/// `dim pᵢ(H⋊G)p_k` for every pair of irreducibles: the rank of the
/// family `pᵢ ∗ ξ_x^j ∗ p_k` over all `x ∈ G` and `j < dim ρ`.
pub fn corner_dimensions(r: &Representation, t: &CharacterTable) -> Result<Vec<Vec<usize>>, CrossError> {
    check_inputs(r, t)?;
    let field = common_field(r, t)?;
    let rep = Arc::new(Representation::from_matrices(r.group(), &field, r.matrices().to_vec())?);
    let projections = (0..t.len())
        .map(|i| central_projection(t, i)?.lift_to(&field))
        .collect::<Result<Vec<_>, _>>()?;
    let order = r.group().order();
    let mut dims = vec![vec![0; t.len()]; t.len()];
    for (i, p_i) in projections.iter().enumerate() {
        let left = (0..order)
            .flat_map(|x| (0..rep.dim()).map(move |j| (x, j)))
            .map(|(x, j)| left_act(p_i, &CorrespondenceElement::basis(&rep, x, j)))
            .collect::<Result<Vec<_>, _>>()?;
        for (k, p_k) in projections.iter().enumerate() {
            let rows = left
                .iter()
                .map(|xi| right_act(xi, p_k).map(|e| e.flatten()))
                .collect::<Result<Vec<_>, _>>()?;
            dims[i][k] = rank_of_rows(rows);
        }
    }
    Ok(dims)
}

/// `B_ik = ⟨χᵢ, χ_ρ·χ_k⟩`, the multiplicity of `Vᵢ` in `H ⊗ V_k`.
pub fn fusion_matrix(r: &Representation, t: &CharacterTable) -> Result<IntMatrix, CrossError> {
    check_inputs(r, t)?;
    let chi_r = character_of(r);
    let size = t.len();
    let mut b = IntMatrix::zeros(size, size);
    for (k, chi_k) in t.characters().iter().enumerate() {
        let prod = tensor_char(&chi_r, chi_k)?;
        for (i, chi_i) in t.characters().iter().enumerate() {
            let value = char_inner(&prod, chi_i)?;
            if !value.is_integer() || value < Rational::zero() {
                return Err(CrossError::FusionNotInteger { i, k, value });
            }
            b.set(i, k, value.to_integer());
        }
    }
    let degrees = t.degrees()?;
    for k in 0..size {
        let found: usize = (0..size).map(|i| degrees[i] * b.get(i, k).to_usize().expect("small entry")).sum();
        let expected = r.dim() * degrees[k];
        if found != expected {
            return Err(CrossError::FusionRankIdentity { k, expected, found });
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests;
