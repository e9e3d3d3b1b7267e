//! Finite groups given by validated multiplication tables.
//!
//! Element `0` is always the identity. Conjugacy classes are computed once at
//! construction and ordered by `(element order, smallest member index)`, so
//! class `0` is `{e}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) is not an element index")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("element 0 is not the identity: failed at element {element}")]
    MissingIdentity { element: usize },
    #[error("row {row} is not a permutation")]
    RowNotPermutation { row: usize },
    #[error("column {col} is not a permutation")]
    ColumnNotPermutation { col: usize },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element index {index} out of range for group of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("{family} parameter {n} out of range ({bounds})")]
    BuiltinOutOfRange { family: &'static str, n: usize, bounds: &'static str },
    #[error("unknown built-in group `{0}`")]
    UnknownBuiltin(String),
    #[error("elements do not form a subgroup: {0}")]
    NotASubgroup(String),
}

/// A finite group as a multiplication table. Equality compares tables only.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    classes: ConjugacyClasses,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }
}

/// Validates a table and builds the group. `table[i][j]` is the index of
/// `g_i · g_j`.
pub fn build_group(name: &str, table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let order = table.len();
    if order == 0 {
        return Err(GroupError::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != order {
            return Err(GroupError::NotSquare { row, len: r.len(), order });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= order {
                return Err(GroupError::EntryOutOfRange { row, col, value });
            }
        }
    }
    for g in 0..order {
        if table[0][g] != g || table[g][0] != g {
            return Err(GroupError::MissingIdentity { element: g });
        }
    }
    let mut seen = vec![false; order];
    for (row, r) in table.iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for &v in r {
            if core::mem::replace(&mut seen[v], true) {
                return Err(GroupError::RowNotPermutation { row });
            }
        }
    }
    for col in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for r in table {
            if core::mem::replace(&mut seen[r[col]], true) {
                return Err(GroupError::ColumnNotPermutation { col });
            }
        }
    }
    let mut inverses = vec![0; order];
    for g in 0..order {
        let h = table[g].iter().position(|&v| v == 0).expect("row is a permutation");
        if table[h][g] != 0 {
            return Err(GroupError::MissingInverse { element: g });
        }
        inverses[g] = h;
    }
    for a in 0..order {
        for b in 0..order {
            let ab = table[a][b];
            for c in 0..order {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    Ok(FiniteGroup::from_validated(name.to_string(), order, flat, inverses))
}

impl FiniteGroup {
    fn from_validated(name: String, order: usize, table: Vec<usize>, inverses: Vec<usize>) -> Self {
        let mut g = FiniteGroup {
            name,
            order,
            table,
            inverses,
            classes: ConjugacyClasses { class_of: Vec::new(), representatives: Vec::new(), sizes: Vec::new(), members: Vec::new() },
        };
        g.classes = g.compute_classes();
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn check_element(&self, index: usize) -> Result<(), GroupError> {
        if index < self.order {
            Ok(())
        } else {
            Err(GroupError::InvalidElement { index, order: self.order })
        }
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.classes.class_of[g]
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let mut assigned = vec![false; self.order];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for h in 0..self.order {
            if assigned[h] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order).map(|g| self.conjugate(g, h)).collect();
            for &x in &class {
                assigned[x] = true;
            }
            members.push(class.into_iter().collect());
        }
        members.sort_by_key(|c| (self.element_order(c[0]), c[0]));
        let mut class_of = vec![0; self.order];
        for (i, c) in members.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        ConjugacyClasses {
            class_of,
            representatives: members.iter().map(|c| c[0]).collect(),
            sizes: members.iter().map(Vec::len).collect(),
            members,
        }
    }
}

/// `H ≤ G` as a sorted list of parent indices, together with `H` as a group
/// in its own right. Element `i` of [`Subgroup::group`] is
/// `elements()[i]` in the parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    group: Arc<FiniteGroup>,
}

impl Subgroup {
    /// Checks closure and builds the subgroup from an explicit element set.
    pub fn from_elements(parent: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        for &x in &set {
            parent.check_element(x)?;
        }
        if !set.contains(&0) {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(GroupError::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!("{a}*{b} not in the set")));
                }
            }
        }
        let elements: Vec<usize> = set.into_iter().collect();
        let mut position = vec![usize::MAX; parent.order()];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &elements {
            for &b in &elements {
                table.push(position[parent.mul(a, b)]);
            }
        }
        let inverses = elements.iter().map(|&a| position[parent.inv(a)]).collect();
        let name = if k == parent.order() { parent.name().to_string() } else { format!("{}<{k}>", parent.name()) };
        let group = Arc::new(FiniteGroup::from_validated(name, k, table, inverses));
        Ok(Subgroup { parent: parent.clone(), elements, group })
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        let all: Vec<usize> = (0..parent.order()).collect();
        Self::from_elements(parent, &all).expect("a group is a subgroup of itself")
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of a parent element inside the subgroup.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }
}

/// Closure of `gens` under multiplication (inverses come for free in a
/// finite group).
pub fn subgroup_generated(g: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup, GroupError> {
    for &x in gens {
        g.check_element(x)?;
    }
    let mut set = BTreeSet::from([0usize]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    let elements: Vec<usize> = set.into_iter().collect();
    Subgroup::from_elements(g, &elements)
}

/// Left cosets `gH`, each sorted, ordered by smallest member (so `H` first).
pub fn cosets(h: &Subgroup) -> Vec<Vec<usize>> {
    let g = h.parent();
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut c: Vec<usize> = h.elements().iter().map(|&y| g.mul(x, y)).collect();
        c.sort_unstable();
        for &y in &c {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}

/// The built-in families, with frozen element orderings:
///
/// - `Cyclic(n)`: element `k` is `g^k`.
/// - `Dihedral(n)` (order `2n`): element `k + n·f` is `r^k s^f`, with
///   `s r s = r⁻¹`.
/// - `Symmetric(n)`: permutations of `{0,…,n-1}` in lexicographic order of
///   their image arrays; the product is composition `(p·q)(x) = p(q(x))`.
/// - `Klein`: element `a + 2b` is `(a, b) ∈ ℤ₂ × ℤ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinGroup {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Klein,
}

pub const MAX_CYCLIC: usize = 1000;
pub const MAX_DIHEDRAL: usize = 500;
pub const MAX_SYMMETRIC: usize = 5;

impl BuiltinGroup {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let name = self.to_string();
        let (order, table) = match *self {
            BuiltinGroup::Cyclic(n) => {
                if n == 0 || n > MAX_CYCLIC {
                    return Err(GroupError::BuiltinOutOfRange { family: "cyclic", n, bounds: "1..=1000" });
                }
                (n, (0..n * n).map(|idx| (idx / n + idx % n) % n).collect::<Vec<_>>())
            }
            BuiltinGroup::Dihedral(n) => {
                if n == 0 || n > MAX_DIHEDRAL {
                    return Err(GroupError::BuiltinOutOfRange { family: "dihedral", n, bounds: "1..=500" });
                }
                let order = 2 * n;
                let mut t = Vec::with_capacity(order * order);
                for x in 0..order {
                    let (a, f) = (x % n, x / n);
                    for y in 0..order {
                        let (b, g) = (y % n, y / n);
                        // r^a s^f r^b s^g = r^{a ± b} s^{f+g}
                        let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
                        t.push(k + n * ((f + g) % 2));
                    }
                }
                (order, t)
            }
            BuiltinGroup::Symmetric(n) => {
                if n == 0 || n > MAX_SYMMETRIC {
                    return Err(GroupError::BuiltinOutOfRange { family: "symmetric", n, bounds: "1..=5" });
                }
                let perms = permutations(n);
                let order = perms.len();
                let mut t = Vec::with_capacity(order * order);
                for p in &perms {
                    for q in &perms {
                        let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                        t.push(perms.binary_search(&pq).expect("closed under composition"));
                    }
                }
                (order, t)
            }
            BuiltinGroup::Klein => (4, (0..16).map(|idx| (idx / 4) ^ (idx % 4)).collect()),
        };
        let rows: Vec<Vec<usize>> = table.chunks(order).map(<[usize]>::to_vec).collect();
        build_group(&name, &rows)
    }

    /// Image array of a symmetric-group element.
    pub fn permutation(&self, index: usize) -> Option<Vec<usize>> {
        match *self {
            BuiltinGroup::Symmetric(n) if n <= MAX_SYMMETRIC => permutations(n).get(index).cloned(),
            _ => None,
        }
    }

    /// Index of a permutation (given by its image array) in `Symmetric(n)`.
    pub fn permutation_index(n: usize, perm: &[usize]) -> Option<usize> {
        if perm.len() != n {
            return None;
        }
        permutations(n).binary_search(&perm.to_vec()).ok()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl fmt::Display for BuiltinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinGroup::Cyclic(n) => write!(f, "C{n}"),
            BuiltinGroup::Dihedral(n) => write!(f, "D{n}"),
            BuiltinGroup::Symmetric(n) => write!(f, "S{n}"),
            BuiltinGroup::Klein => f.write_str("V4"),
        }
    }
}

impl FromStr for BuiltinGroup {
    type Err = GroupError;

    /// Accepts `C<n>`, `D<n>`, `S<n>` and `V4`.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        if s == "V4" {
            return Ok(BuiltinGroup::Klein);
        }
        let unknown = || GroupError::UnknownBuiltin(s.to_string());
        let (family, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match family {
            "C" => Ok(BuiltinGroup::Cyclic(n)),
            "D" => Ok(BuiltinGroup::Dihedral(n)),
            "S" => Ok(BuiltinGroup::Symmetric(n)),
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(b: BuiltinGroup) -> Arc<FiniteGroup> {
        Arc::new(b.build().unwrap())
    }

    // Brute-force oracle: classes as orbits under conjugation, sizes sorted.
    fn oracle_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut done = vec![false; n];
        let mut sizes = Vec::new();
        for h in 0..n {
            if done[h] {
                continue;
            }
            let mut count = 0;
            for x in 0..n {
                let is_conj = (0..n).any(|y| g.mul(g.mul(y, h), g.inv(y)) == x);
                if is_conj {
                    done[x] = true;
                    count += 1;
                }
            }
            sizes.push(count);
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn trivial_and_z2_tables() {
        assert_eq!(build_group("1", &[vec![0]]).unwrap().order(), 1);
        let z2 = build_group("Z2", &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn latin_square_violation() {
        assert_eq!(build_group("bad", &[vec![0, 1], vec![1, 1]]), Err(GroupError::RowNotPermutation { row: 1 }));
    }

    #[test]
    fn non_associative_table_has_witness() {
        // A Latin square loop of order 5 with identity 0 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match build_group("loop", &t) {
            Err(GroupError::NotAssociative { a, b, c }) => {
                assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn identity_must_be_first() {
        let t = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(build_group("x", &t), Err(GroupError::MissingIdentity { element: 0 }));
    }

    #[test]
    fn builtin_orders_and_classes() {
        let s3 = arc(BuiltinGroup::Symmetric(3));
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.conjugacy_classes().sizes, vec![1, 3, 2]);

        let c4 = arc(BuiltinGroup::Cyclic(4));
        assert!(c4.is_abelian());
        assert_eq!(c4.conjugacy_classes().sizes, vec![1, 1, 1, 1]);

        let d4 = arc(BuiltinGroup::Dihedral(4));
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.conjugacy_classes().sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(oracle_class_sizes(&d4), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_partition_matches_brute_force() {
        for b in [
            BuiltinGroup::Symmetric(4),
            BuiltinGroup::Dihedral(5),
            BuiltinGroup::Dihedral(6),
            BuiltinGroup::Cyclic(7),
            BuiltinGroup::Klein,
        ] {
            let g = b.build().unwrap();
            let cc = g.conjugacy_classes();
            let mut sizes = cc.sizes.clone();
            assert_eq!(cc.members[0], vec![0]);
            assert_eq!(sizes.iter().sum::<usize>(), g.order());
            assert!(sizes.iter().all(|s| g.order() % s == 0));
            sizes.sort_unstable();
            assert_eq!(sizes, oracle_class_sizes(&g), "{b}");
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(BuiltinGroup::Symmetric(3).build().unwrap().exponent(), 6);
        assert_eq!(BuiltinGroup::Klein.build().unwrap().exponent(), 2);
        assert_eq!(BuiltinGroup::Cyclic(12).build().unwrap().exponent(), 12);
    }

    #[test]
    fn generated_subgroups() {
        let s3 = arc(BuiltinGroup::Symmetric(3));
        let s = BuiltinGroup::permutation_index(3, &[1, 2, 0]).unwrap();
        assert_eq!(subgroup_generated(&s3, &[s]).unwrap().order(), 3);
        assert_eq!(subgroup_generated(&s3, &[]).unwrap().elements(), &[0]);

        let d4 = arc(BuiltinGroup::Dihedral(4));
        let rot = subgroup_generated(&d4, &[1]).unwrap();
        assert_eq!(rot.elements(), &[0, 1, 2, 3]);
        assert!(rot.group().is_abelian());
        assert_eq!(*rot.group().as_ref(), BuiltinGroup::Cyclic(4).build().unwrap());
    }

    #[test]
    fn coset_partitions() {
        let s3 = arc(BuiltinGroup::Symmetric(3));
        let h = subgroup_generated(&s3, &[3]).unwrap();
        let cs = cosets(&h);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0], h.elements());
        assert_eq!(cosets(&Subgroup::whole(&s3)).len(), 1);

        let s4 = arc(BuiltinGroup::Symmetric(4));
        let stab: Vec<usize> = (0..24).filter(|&i| BuiltinGroup::Symmetric(4).permutation(i).unwrap()[3] == 3).collect();
        let h = Subgroup::from_elements(&s4, &stab).unwrap();
        let cs = cosets(&h);
        assert_eq!(cs.len(), 4);
        // Orbit count oracle: the orbit of 3 has four points.
        let orbit: BTreeSet<usize> = (0..24).map(|i| BuiltinGroup::Symmetric(4).permutation(i).unwrap()[3]).collect();
        assert_eq!(orbit.len(), cs.len());
        let mut all: Vec<usize> = cs.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..24).collect::<Vec<_>>());
        assert!(cs.iter().all(|c| c.len() == 6));
    }

    #[test]
    fn stabilizer_of_last_point_is_s3() {
        let s4 = arc(BuiltinGroup::Symmetric(4));
        let stab: Vec<usize> = (0..24).filter(|&i| BuiltinGroup::Symmetric(4).permutation(i).unwrap()[3] == 3).collect();
        let h = Subgroup::from_elements(&s4, &stab).unwrap();
        assert_eq!(*h.group().as_ref(), BuiltinGroup::Symmetric(3).build().unwrap());
    }

    #[test]
    fn out_of_range_builtins() {
        assert!(BuiltinGroup::Symmetric(6).build().is_err());
        assert!(BuiltinGroup::Cyclic(0).build().is_err());
        assert!("X3".parse::<BuiltinGroup>().is_err());
        assert_eq!("D4".parse::<BuiltinGroup>().unwrap(), BuiltinGroup::Dihedral(4));
        assert_eq!("C12".parse::<BuiltinGroup>().unwrap(), BuiltinGroup::Cyclic(12));
    }

    #[test]
    fn not_a_subgroup() {
        let s3 = arc(BuiltinGroup::Symmetric(3));
        assert!(Subgroup::from_elements(&s3, &[0, 1, 2]).is_err());
        assert!(Subgroup::from_elements(&s3, &[1]).is_err());
    }
}
