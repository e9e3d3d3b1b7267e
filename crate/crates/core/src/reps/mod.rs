//! Unitary representations over ℚ(ζ_N) and their characters.
//!
//! Representations store one matrix per group element; characters store one
//! value per conjugacy class, in the class order of the group.

mod builtin;

pub use builtin::{builtin_character_table, builtin_irreducibles, sigma_s3};

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{CycField, CycMatrix, Cyclotomic, FieldExt, NumError, Rational};
use crate::groups::{BuiltinGroup, FiniteGroup, GroupError, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("objects are defined over different groups")]
    GroupMismatch,
    #[error("expected {expected} matrices (one per element), found {found}")]
    MatrixCount { expected: usize, found: usize },
    #[error("matrix at element {element} is {rows}x{cols}, expected {dim}x{dim}")]
    MatrixShape { element: usize, rows: usize, cols: usize, dim: usize },
    #[error("matrix at the identity is not the identity matrix")]
    IdentityNotIdentity,
    #[error("not a homomorphism: rho({g})*rho({h}) != rho({g}*{h})")]
    NotHomomorphism { g: usize, h: usize },
    #[error("non-unitary at element {element}")]
    NonUnitary { element: usize },
    #[error("generators do not reach element {element}")]
    GeneratorsIncomplete { element: usize },
    #[error("expected {expected} class values, found {found}")]
    ClassCount { expected: usize, found: usize },
    #[error("inner product has an irrational part: {0}")]
    NonRationalInner(alloc::string::String),
    #[error("multiplicity of irreducible {index} is {value}, not a nonnegative integer")]
    BadMultiplicity { index: usize, value: Rational },
    #[error("degree {0} is not a positive integer")]
    BadDegree(alloc::string::String),
    #[error("character table has {found} characters, group has {expected} classes")]
    TableCount { expected: usize, found: usize },
    #[error("first character is not the trivial character")]
    TrivialNotFirst,
    #[error("characters {i} and {j} have inner product {value}, expected {expected}")]
    NotOrthonormal { i: usize, j: usize, value: Rational, expected: u8 },
    #[error("squared degrees sum to {sum}, group order is {order}")]
    DegreeSum { sum: usize, order: usize },
    #[error("index {index} out of range for {len} irreducibles")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("tensor dimension {n}^{k} exceeds the cap of 256 (k <= 4)")]
    TensorCap { n: usize, k: usize },
    #[error("no built-in irreducible matrices for {0}")]
    NoBuiltinMatrices(alloc::string::String),
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A group homomorphism `G → U(n)` over ℚ(ζ_N).
#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<FiniteGroup>,
    field: Arc<CycField>,
    dim: usize,
    matrices: Vec<CycMatrix>,
}

impl Representation {
    /// Shape checks only; see [`check_representation`] for the algebra.
    /// Entries are lifted into `field`.
    pub fn from_matrices(
        group: &Arc<FiniteGroup>,
        field: &Arc<CycField>,
        matrices: Vec<CycMatrix>,
    ) -> Result<Self, RepError> {
        if matrices.len() != group.order() {
            return Err(RepError::MatrixCount { expected: group.order(), found: matrices.len() });
        }
        let dim = matrices[0].rows();
        let mut lifted = Vec::with_capacity(matrices.len());
        for (element, m) in matrices.into_iter().enumerate() {
            if m.rows() != dim || m.cols() != dim || dim == 0 {
                return Err(RepError::MatrixShape { element, rows: m.rows(), cols: m.cols(), dim });
            }
            let rows = m
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(|x| x.lift_to(field)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            lifted.push(CycMatrix::from_rows(rows));
        }
        Ok(Representation { group: group.clone(), field: field.clone(), dim, matrices: lifted })
    }

    /// [`Self::from_matrices`] followed by [`check_representation`].
    pub fn new(group: &Arc<FiniteGroup>, field: &Arc<CycField>, matrices: Vec<CycMatrix>) -> Result<Self, RepError> {
        let r = Self::from_matrices(group, field, matrices)?;
        check_representation(&r)?;
        Ok(r)
    }

    /// Extends generator images multiplicatively over the whole group and
    /// validates the result.
    pub fn from_generators(
        group: &Arc<FiniteGroup>,
        field: &Arc<CycField>,
        dim: usize,
        gens: &[(usize, CycMatrix)],
    ) -> Result<Self, RepError> {
        for (g, _) in gens {
            group.check_element(*g)?;
        }
        let mut images: Vec<Option<CycMatrix>> = vec![None; group.order()];
        images[0] = Some(CycMatrix::identity(field, dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, m) in gens {
                let y = group.mul(x, *s);
                let prod = images[x].as_ref().expect("visited").mul(m);
                match &images[y] {
                    Some(existing) if *existing != prod => {
                        return Err(RepError::NotHomomorphism { g: x, h: *s });
                    }
                    Some(_) => {}
                    None => {
                        images[y] = Some(prod);
                        queue.push_back(y);
                    }
                }
            }
        }
        let matrices = images
            .into_iter()
            .enumerate()
            .map(|(element, m)| m.ok_or(RepError::GeneratorsIncomplete { element }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(group, field, matrices)
    }

    pub fn trivial(group: &Arc<FiniteGroup>, field: &Arc<CycField>, dim: usize) -> Self {
        let id = CycMatrix::identity(field, dim);
        Representation { group: group.clone(), field: field.clone(), dim, matrices: vec![id; group.order()] }
    }

    /// The left regular representation, `ρ(g) e_h = e_{gh}`.
    pub fn regular(group: &Arc<FiniteGroup>, field: &Arc<CycField>) -> Self {
        Self::from_permutations(group, field, |g| (0..group.order()).map(|h| group.mul(g, h)).collect())
    }

    /// `ρ(g) e_j = e_{perm(g)[j]}` for a permutation action on a basis.
    pub fn from_permutations(
        group: &Arc<FiniteGroup>,
        field: &Arc<CycField>,
        perm: impl Fn(usize) -> Vec<usize>,
    ) -> Self {
        let matrices: Vec<CycMatrix> = (0..group.order())
            .map(|g| {
                let p = perm(g);
                let mut m = CycMatrix::zeros(field, p.len(), p.len());
                for (j, &i) in p.iter().enumerate() {
                    m.set(i, j, field.one());
                }
                m
            })
            .collect();
        Representation { group: group.clone(), field: field.clone(), dim: matrices[0].rows(), matrices }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &CycMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CycMatrix] {
        &self.matrices
    }
}

/// Confirms `ρ(e) = I`, unitarity of every `ρ(g)`, and `ρ(g)ρ(h) = ρ(gh)`,
/// reporting the first failing witness.
pub fn check_representation(r: &Representation) -> Result<(), RepError> {
    let g = &r.group;
    if !r.matrices[0].is_identity() {
        return Err(RepError::IdentityNotIdentity);
    }
    for (element, m) in r.matrices.iter().enumerate() {
        if !m.conj_transpose().mul(m).is_identity() {
            return Err(RepError::NonUnitary { element });
        }
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if r.matrices[a].mul(&r.matrices[b]) != r.matrices[g.mul(a, b)] {
                return Err(RepError::NotHomomorphism { g: a, h: b });
            }
        }
    }
    Ok(())
}

/// A class function, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self, RepError> {
        let expected = group.conjugacy_classes().count();
        if values.len() != expected {
            return Err(RepError::ClassCount { expected, found: values.len() });
        }
        Ok(Character { group: group.clone(), values })
    }

    /// The trivial character, all ones.
    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        let f = CycField::new(1).expect("conductor 1");
        let values = vec![f.one(); group.conjugacy_classes().count()];
        Character { group: group.clone(), values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    /// The value at the identity, required to be a positive integer.
    pub fn degree(&self) -> Result<usize, RepError> {
        let v = &self.values[0];
        v.to_rational()
            .filter(|q| q.is_integer() && *q > Rational::zero())
            .and_then(|q| q.to_integer().to_usize())
            .ok_or_else(|| RepError::BadDegree(alloc::format!("{v}")))
    }
}

/// Trace of `ρ(g)` at each class representative.
pub fn character_of(r: &Representation) -> Character {
    let cc = r.group.conjugacy_classes();
    let values = cc.representatives.iter().map(|&g| r.matrices[g].trace()).collect();
    Character { group: r.group.clone(), values }
}

/// `(1/|G|) Σ_g χ(g)·conj(ψ(g))`, which must be rational.
pub fn char_inner(chi: &Character, psi: &Character) -> Result<Rational, RepError> {
    if !same_group(&chi.group, &psi.group) {
        return Err(RepError::GroupMismatch);
    }
    let cc = chi.group.conjugacy_classes();
    let mut acc = chi.values[0].field().zero();
    for (c, size) in cc.sizes.iter().enumerate() {
        let term = &chi.values[c] * &psi.values[c].conj();
        acc += &term.scale(&Rational::from_integer(BigInt::from(*size)));
    }
    let acc = acc.scale(&Rational::new(BigInt::from(1), BigInt::from(chi.group.order())));
    acc.to_rational().ok_or_else(|| RepError::NonRationalInner(alloc::format!("{acc}")))
}

/// Irreducible characters of one group, trivial character first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    characters: Vec<Character>,
}

impl CharacterTable {
    /// Unvalidated; see [`validate_char_table`].
    pub fn new(group: &Arc<FiniteGroup>, characters: Vec<Character>) -> Result<Self, RepError> {
        if characters.iter().any(|c| !same_group(&c.group, group)) {
            return Err(RepError::GroupMismatch);
        }
        Ok(CharacterTable { group: group.clone(), characters })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn get(&self, i: usize) -> Result<&Character, RepError> {
        self.characters.get(i).ok_or(RepError::IndexOutOfRange { index: i, len: self.characters.len() })
    }

    pub fn degrees(&self) -> Result<Vec<usize>, RepError> {
        self.characters.iter().map(Character::degree).collect()
    }
}

/// Checks the class count, that the trivial character comes first, row
/// orthonormality and `Σ dᵢ² = |G|`.
pub fn validate_char_table(t: &CharacterTable) -> Result<(), RepError> {
    let g = &t.group;
    let classes = g.conjugacy_classes().count();
    if t.characters.len() != classes {
        return Err(RepError::TableCount { expected: classes, found: t.characters.len() });
    }
    if t.characters[0] != Character::trivial(g) {
        return Err(RepError::TrivialNotFirst);
    }
    for i in 0..t.characters.len() {
        for j in i..t.characters.len() {
            let value = char_inner(&t.characters[i], &t.characters[j])?;
            let expected = u8::from(i == j);
            if value != Rational::from_integer(BigInt::from(expected)) {
                return Err(RepError::NotOrthonormal { i, j, value, expected });
            }
        }
    }
    let degrees = t.degrees()?;
    let sum: usize = degrees.iter().map(|d| d * d).sum();
    if sum != g.order() {
        return Err(RepError::DegreeSum { sum, order: g.order() });
    }
    Ok(())
}

/// Multiplicity of each irreducible of `t` in `r`.
pub fn multiplicities(r: &Representation, t: &CharacterTable) -> Result<Vec<usize>, RepError> {
    if !same_group(&r.group, &t.group) {
        return Err(RepError::GroupMismatch);
    }
    let chi = character_of(r);
    t.characters
        .iter()
        .enumerate()
        .map(|(index, irr)| {
            let value = char_inner(&chi, irr)?;
            if value.is_integer() && value >= Rational::zero() {
                Ok(value.to_integer().to_usize().expect("small multiplicity"))
            } else {
                Err(RepError::BadMultiplicity { index, value })
            }
        })
        .collect()
}

pub fn tensor_char(chi: &Character, psi: &Character) -> Result<Character, RepError> {
    if !same_group(&chi.group, &psi.group) {
        return Err(RepError::GroupMismatch);
    }
    let values = chi.values.iter().zip(&psi.values).map(|(a, b)| a * b).collect();
    Ok(Character { group: chi.group.clone(), values })
}

/// `ρ ⊗ σ` via Kronecker products.
pub fn tensor_rep(r: &Representation, s: &Representation) -> Result<Representation, RepError> {
    if !same_group(&r.group, &s.group) {
        return Err(RepError::GroupMismatch);
    }
    let field = if r.conductor().is_multiple_of(s.conductor()) {
        r.field.clone()
    } else if s.conductor().is_multiple_of(r.conductor()) {
        s.field.clone()
    } else {
        CycField::new(r.conductor().lcm(&s.conductor()))?
    };
    let matrices = r.matrices.iter().zip(&s.matrices).map(|(a, b)| a.kron(b)).collect();
    Representation::from_matrices(&r.group, &field, matrices)
}

/// `Pᵢ = (dᵢ/|G|) Σ_g conj(χᵢ(g))·ρ(g)`, the projection onto the
/// χᵢ-isotypic component.
pub fn isotypic_projection(r: &Representation, chi: &Character) -> Result<CycMatrix, RepError> {
    if !same_group(&r.group, &chi.group) {
        return Err(RepError::GroupMismatch);
    }
    let d = chi.degree()?;
    let mut acc = CycMatrix::zeros(&r.field, r.dim, r.dim);
    for (g, m) in r.matrices.iter().enumerate() {
        let c = chi.value_at(g).conj();
        if !c.is_zero() {
            acc = acc.add(&m.scale(&c));
        }
    }
    Ok(acc.scale_rational(&Rational::new(BigInt::from(d), BigInt::from(r.group.order()))))
}

/// A basis of the fixed vectors, taken from the independent columns of the
/// averaging projection and scaled so each leading entry is 1.
pub fn invariant_subspace(r: &Representation) -> Vec<Vec<Cyclotomic>> {
    let p = isotypic_projection(r, &Character::trivial(&r.group)).expect("trivial character has degree 1");
    p.pivot_columns()
        .into_iter()
        .map(|j| {
            let col = p.column(j);
            let lead = col.iter().find(|x| !x.is_zero()).expect("pivot column is nonzero");
            let inv = lead.inverse().expect("nonzero");
            col.iter().map(|x| x * &inv).collect()
        })
        .collect()
}

/// Restriction of a character of `G` to `H`.
pub fn restrict_char(h: &Subgroup, chi: &Character) -> Result<Character, RepError> {
    if !same_group(&chi.group, h.parent()) {
        return Err(RepError::GroupMismatch);
    }
    let hg = h.group();
    let values = hg
        .conjugacy_classes()
        .representatives
        .iter()
        .map(|&local| chi.value_at(h.elements()[local]).clone())
        .collect();
    Ok(Character { group: hg.clone(), values })
}

/// `Ind ψ(g) = (1/|H|) Σ_{x ∈ G, x⁻¹gx ∈ H} ψ(x⁻¹gx)`.
pub fn induce_char(h: &Subgroup, psi: &Character) -> Result<Character, RepError> {
    if !same_group(&psi.group, h.group()) {
        return Err(RepError::GroupMismatch);
    }
    let g = h.parent();
    let scale = Rational::new(BigInt::from(1), BigInt::from(h.order()));
    let values = g
        .conjugacy_classes()
        .representatives
        .iter()
        .map(|&rep| {
            let mut acc = psi.values[0].field().zero();
            for x in 0..g.order() {
                let y = g.conjugate(g.inv(x), rep);
                if let Some(local) = h.local_index(y) {
                    acc += psi.value_at(local);
                }
            }
            acc.scale(&scale)
        })
        .collect();
    Ok(Character { group: g.clone(), values })
}

/// `S_k` permuting the tensor factors of `(ℂⁿ)^{⊗k}`. Basis tuples are
/// indexed in base `n`, first factor most significant.
pub fn permutation_tensor_rep(n: usize, k: usize) -> Result<Representation, RepError> {
    let dim = n.checked_pow(k as u32).filter(|&d| n >= 1 && (1..=4).contains(&k) && d <= 256);
    let Some(dim) = dim else {
        return Err(RepError::TensorCap { n, k });
    };
    let kind = BuiltinGroup::Symmetric(k);
    let group = Arc::new(kind.build()?);
    let field = CycField::new(1)?;
    let perms = crate::groups::permutations(k);
    Ok(Representation::from_permutations(&group, &field, |g| {
        let p = &perms[g];
        (0..dim)
            .map(|idx| {
                let digits = to_digits(idx, n, k);
                let mut moved = vec![0; k];
                for (j, &d) in digits.iter().enumerate() {
                    moved[p[j]] = d;
                }
                moved.iter().fold(0, |acc, &d| acc * n + d)
            })
            .collect()
    }))
}

fn to_digits(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}
