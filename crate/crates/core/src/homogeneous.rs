//! Homogeneous bundles `G ×_H V` over `G/H` and the fusion graph attached
//! to the transitive action.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::crossprod::{fusion_matrix, CrossError};
use crate::groups::{subgroup_generated, FiniteGroup, GroupError, Subgroup};
use crate::exactnum::Rational;
use crate::ktheory::{graph_k_theory, IntMatrix, KError, KGroups};
use crate::reps::{char_inner, induce_char, restrict_char, same_group, Character, CharacterTable, RepError, Representation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Cross(#[from] CrossError),
    #[error(transparent)]
    K(#[from] KError),
    #[error("module is defined on a group of order {found}, subgroup has order {expected}")]
    ModuleGroupMismatch { expected: usize, found: usize },
}

/// `E = G ×_H V`, recorded by the data that determines it.
#[derive(Clone, Debug)]
pub struct HomogeneousBundle {
    subgroup: Subgroup,
    module: Arc<Representation>,
}

/// Builds the bundle from generators of `H` (parent indices) and a module
/// defined on `H` in its local indexing.
pub fn homogeneous_bundle(
    group: &Arc<FiniteGroup>,
    gens: &[usize],
    module: Representation,
) -> Result<HomogeneousBundle, HomError> {
    let subgroup = subgroup_generated(group, gens)?;
    if !same_group(module.group(), subgroup.group()) {
        return Err(HomError::ModuleGroupMismatch { expected: subgroup.order(), found: module.group().order() });
    }
    Ok(HomogeneousBundle { subgroup, module: Arc::new(module) })
}

impl HomogeneousBundle {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn module(&self) -> &Arc<Representation> {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.module.dim()
    }

    /// `|G/H|`.
    pub fn base_size(&self) -> usize {
        self.subgroup.index()
    }

    /// Dimension of the space of sections, `[G:H]·dim V`.
    pub fn section_dimension(&self) -> usize {
        self.base_size() * self.rank()
    }
}

/// Where an incidence matrix comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphModel {
    /// `H = G`: the base is a point and the graph is the fusion graph of the
    /// crossed product.
    Point,
    /// `H ≠ G`: the fusion graph of `(H, V)` taken as the model graph.
    FusionGraphModel,
}

impl fmt::Display for GraphModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphModel::Point => "crossed product over a point",
            GraphModel::FusionGraphModel => "fusion-graph model",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveGraph {
    pub incidence: IntMatrix,
    pub k: KGroups,
    pub model: GraphModel,
}

/// Fusion matrix of `V` over `Irr(H)` and its graph K-theory.
pub fn transitive_graph(b: &HomogeneousBundle, table_h: &CharacterTable) -> Result<TransitiveGraph, HomError> {
    let incidence = fusion_matrix(&b.module, table_h)?;
    let k = graph_k_theory(&incidence)?;
    let model = if b.subgroup.is_whole() { GraphModel::Point } else { GraphModel::FusionGraphModel };
    Ok(TransitiveGraph { incidence, k, model })
}

/// `(⟨Ind ψ, χ⟩_G, ⟨ψ, Res χ⟩_H)`.
pub fn frobenius_check(h: &Subgroup, psi: &Character, chi: &Character) -> Result<(Rational, Rational), RepError> {
    let induced = induce_char(h, psi)?;
    let restricted = restrict_char(h, chi)?;
    Ok((char_inner(&induced, chi)?, char_inner(psi, &restricted)?))
}

/// Convenience: the pair for every irreducible `χ` of a table of `G`.
pub fn frobenius_table(h: &Subgroup, psi: &Character, t: &CharacterTable) -> Result<Vec<(Rational, Rational)>, RepError> {
    t.characters().iter().map(|chi| frobenius_check(h, psi, chi)).collect()
}
