//! Irreducible representations and character tables of the built-in
//! families.
//!
//! Matrices are provided for cyclic, dihedral, Klein and `S_n` with
//! `n ≤ 3`. For `S_4` and `S_5` only characters are provided, keyed by cycle
//! type.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{character_of, CharacterTable, RepError, Representation};
use crate::exactnum::{CycField, CycMatrix, FieldExt};
use crate::groups::{permutations, BuiltinGroup, FiniteGroup};
use crate::reps::Character;

fn check_matches(kind: BuiltinGroup, group: &Arc<FiniteGroup>) -> Result<(), RepError> {
    if *group.as_ref() != kind.build()? {
        return Err(RepError::GroupMismatch);
    }
    Ok(())
}

fn diag(field: &Arc<CycField>, entries: &[i64]) -> CycMatrix {
    let mut m = CycMatrix::zeros(field, entries.len(), entries.len());
    for (i, &k) in entries.iter().enumerate() {
        m.set(i, i, field.zeta_pow(k));
    }
    m
}

fn swap2(field: &Arc<CycField>) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![field.zero(), field.one()], vec![field.one(), field.zero()]])
}

fn scalar(field: &Arc<CycField>, sign: i64) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![field.integer(sign)]])
}

/// The two-dimensional irreducible of `S_3` written in the basis where the
/// transposition `(0 1)` swaps `e₁, e₂` and the 3-cycle `0→1→2→0` acts as
/// `diag(w, w²)`, `w = ζ₃`.
pub fn sigma_s3(group: &Arc<FiniteGroup>, field: &Arc<CycField>) -> Result<Representation, RepError> {
    check_matches(BuiltinGroup::Symmetric(3), group)?;
    if !field.conductor().is_multiple_of(3) {
        return Err(RepError::Num(crate::exactnum::NumError::ConductorMismatch { from: 3, to: field.conductor() }));
    }
    let t = BuiltinGroup::permutation_index(3, &[1, 0, 2]).expect("valid permutation");
    let s = BuiltinGroup::permutation_index(3, &[1, 2, 0]).expect("valid permutation");
    let step = (field.conductor() / 3) as i64;
    Representation::from_generators(group, field, 2, &[(t, swap2(field)), (s, diag(field, &[step, 2 * step]))])
}

/// Irreducible unitary representations of a built-in group, trivial first,
/// over ℚ(ζ_e) with `e` the group exponent.
pub fn builtin_irreducibles(kind: BuiltinGroup, group: &Arc<FiniteGroup>) -> Result<Vec<Representation>, RepError> {
    check_matches(kind, group)?;
    let field = CycField::new(group.exponent() as u32)?;
    let e = group.exponent() as i64;
    let mut out = Vec::new();
    match kind {
        BuiltinGroup::Cyclic(n) => {
            for j in 0..n as i64 {
                if n == 1 {
                    out.push(Representation::trivial(group, &field, 1));
                } else {
                    out.push(Representation::from_generators(group, &field, 1, &[(1, diag(&field, &[j * e / n as i64]))])?);
                }
            }
        }
        BuiltinGroup::Dihedral(n) => {
            let r = 1 % n;
            let s = n;
            let mut signs = vec![(1, 1), (1, -1)];
            if n % 2 == 0 {
                signs.extend([(-1, 1), (-1, -1)]);
            }
            for (rs, ss) in signs {
                let mut gens = vec![(s, scalar(&field, ss))];
                if n > 1 {
                    gens.push((r, scalar(&field, rs)));
                }
                out.push(Representation::from_generators(group, &field, 1, &gens)?);
            }
            let step = e / n as i64;
            for j in (1..n as i64).take_while(|j| 2 * j < n as i64) {
                let gens = [(r, diag(&field, &[j * step, -j * step])), (s, swap2(&field))];
                out.push(Representation::from_generators(group, &field, 2, &gens)?);
            }
        }
        BuiltinGroup::Klein => {
            for (a, b) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
                out.push(Representation::from_generators(group, &field, 1, &[(1, scalar(&field, a)), (2, scalar(&field, b))])?);
            }
        }
        BuiltinGroup::Symmetric(n) if n <= 3 => {
            out.push(Representation::trivial(group, &field, 1));
            if n >= 2 {
                let t = BuiltinGroup::permutation_index(n, &transposition(n)).expect("valid");
                let mut gens = vec![(t, scalar(&field, -1))];
                if n == 3 {
                    let s = BuiltinGroup::permutation_index(3, &[1, 2, 0]).expect("valid");
                    gens.push((s, scalar(&field, 1)));
                }
                out.push(Representation::from_generators(group, &field, 1, &gens)?);
            }
            if n == 3 {
                out.push(sigma_s3(group, &field)?);
            }
        }
        BuiltinGroup::Symmetric(_) => return Err(RepError::NoBuiltinMatrices(format!("{kind}"))),
    }
    Ok(out)
}

fn transposition(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(0, 1);
    p
}

/// Cycle type, longest cycle first.
fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

type CycleRow = (&'static [usize], &'static [i64]);

// Columns: trivial, sign, then the remaining irreducibles by degree.
const S4_TABLE: &[CycleRow] = &[
    (&[1, 1, 1, 1], &[1, 1, 2, 3, 3]),
    (&[2, 1, 1], &[1, -1, 0, 1, -1]),
    (&[2, 2], &[1, 1, 2, -1, -1]),
    (&[3, 1], &[1, 1, -1, 0, 0]),
    (&[4], &[1, -1, 0, -1, 1]),
];

const S5_TABLE: &[CycleRow] = &[
    (&[1, 1, 1, 1, 1], &[1, 1, 4, 4, 5, 5, 6]),
    (&[2, 1, 1, 1], &[1, -1, 2, -2, 1, -1, 0]),
    (&[2, 2, 1], &[1, 1, 0, 0, 1, 1, -2]),
    (&[3, 1, 1], &[1, 1, 1, 1, -1, -1, 0]),
    (&[3, 2], &[1, -1, -1, 1, 1, -1, 0]),
    (&[4, 1], &[1, -1, 0, 0, -1, 1, 0]),
    (&[5], &[1, 1, -1, -1, 0, 0, 1]),
];

/// The character table of a built-in group, trivial character first.
pub fn builtin_character_table(kind: BuiltinGroup, group: &Arc<FiniteGroup>) -> Result<CharacterTable, RepError> {
    check_matches(kind, group)?;
    let table = match kind {
        BuiltinGroup::Symmetric(n @ (4 | 5)) => {
            let rows = if n == 4 { S4_TABLE } else { S5_TABLE };
            let field = CycField::new(1)?;
            let perms = permutations(n);
            let reps = &group.conjugacy_classes().representatives;
            let width = rows[0].1.len();
            let mut chars = Vec::with_capacity(width);
            for col in 0..width {
                let values = reps
                    .iter()
                    .map(|&g| {
                        let ct = cycle_type(&perms[g]);
                        let row = rows.iter().find(|(t, _)| *t == ct.as_slice()).expect("every cycle type listed");
                        field.integer(row.1[col])
                    })
                    .collect();
                chars.push(Character::new(group, values)?);
            }
            chars
        }
        _ => builtin_irreducibles(kind, group)?.iter().map(character_of).collect(),
    };
    CharacterTable::new(group, table)
}
