use super::*;
use crate::exactnum::{rat, CycMatrix};
use crate::groups::BuiltinGroup;
use crate::reps::{builtin_character_table, builtin_irreducibles, sigma_s3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const S: usize = 3; // (0 1 2) in lexicographic S3
const T: usize = 2; // (0 1)

fn group(kind: BuiltinGroup) -> Arc<FiniteGroup> {
    Arc::new(kind.build().unwrap())
}

fn s3_setup() -> (Arc<FiniteGroup>, CharacterTable, Arc<Representation>) {
    let g = group(BuiltinGroup::Symmetric(3));
    let t = builtin_character_table(BuiltinGroup::Symmetric(3), &g).unwrap();
    let sigma = sigma_s3(&g, &CycField::new(3).unwrap()).unwrap();
    (g, t, Arc::new(sigma))
}

fn sign_c2() -> (Arc<FiniteGroup>, CharacterTable, Arc<Representation>) {
    let g = group(BuiltinGroup::Cyclic(2));
    let t = builtin_character_table(BuiltinGroup::Cyclic(2), &g).unwrap();
    let f = CycField::new(1).unwrap();
    let mats = vec![CycMatrix::identity(&f, 1), CycMatrix::from_rows(vec![vec![f.integer(-1)]])];
    (g.clone(), t, Arc::new(Representation::new(&g, &f, mats).unwrap()))
}

fn int_rows(rows: &[&[usize]]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn rand_cyc(rng: &mut ChaCha8Rng, field: &Arc<CycField>) -> Cyclotomic {
    if rng.gen_bool(0.3) {
        return field.zero();
    }
    let n = field.conductor() as u64;
    let terms: Vec<(u64, Rational)> =
        (0..2).map(|_| (rng.gen_range(0..n), rat(rng.gen_range(-3..=3), rng.gen_range(1..=2)))).collect();
    field.from_terms(&terms).unwrap()
}

fn rand_alg(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>, field: &Arc<CycField>) -> GroupAlgebraElement {
    GroupAlgebraElement::new(g, (0..g.order()).map(|_| rand_cyc(rng, field)).collect()).unwrap()
}

fn rand_corr(rng: &mut ChaCha8Rng, rep: &Arc<Representation>) -> CorrespondenceElement {
    let f = rep.field().clone();
    let values = (0..rep.group().order()).map(|_| (0..rep.dim()).map(|_| rand_cyc(rng, &f)).collect()).collect();
    CorrespondenceElement::new(rep, values).unwrap()
}

#[test]
fn deltas_multiply_like_the_group() {
    let g = group(BuiltinGroup::Symmetric(3));
    let f = CycField::new(1).unwrap();
    for a in 0..6 {
        for b in 0..6 {
            let d = GroupAlgebraElement::delta(&g, &f, a).convolve(&GroupAlgebraElement::delta(&g, &f, b)).unwrap();
            assert_eq!(d, GroupAlgebraElement::delta(&g, &f, g.mul(a, b)));
        }
    }
    let z2 = group(BuiltinGroup::Cyclic(2));
    let dg = GroupAlgebraElement::delta(&z2, &f, 1);
    assert_eq!(dg.convolve(&dg).unwrap(), GroupAlgebraElement::delta(&z2, &f, 0));
}

#[test]
fn trivial_projection_of_z2_is_idempotent() {
    let z2 = group(BuiltinGroup::Cyclic(2));
    let f = CycField::new(1).unwrap();
    let p = GroupAlgebraElement::new(&z2, vec![f.rational(rat(1, 2)), f.rational(rat(1, 2))]).unwrap();
    // (½δ_e + ½δ_g)² = ¼(δ_e + 2δ_g + δ_e) = ½δ_e + ½δ_g
    assert_eq!(p.convolve(&p).unwrap(), p);
}

#[test]
fn convolution_rejects_group_mismatch() {
    let f = CycField::new(1).unwrap();
    let a = GroupAlgebraElement::delta(&group(BuiltinGroup::Cyclic(2)), &f, 0);
    let b = GroupAlgebraElement::delta(&group(BuiltinGroup::Cyclic(3)), &f, 0);
    assert_eq!(a.convolve(&b), Err(CrossError::GroupMismatch));
    assert!(matches!(GroupAlgebraElement::new(&a.group, vec![f.one()]), Err(CrossError::ValueCount { .. })));
}

#[test]
fn s3_central_projections() {
    let (g, t, _) = s3_setup();
    let p1 = central_projection(&t, 0).unwrap();
    assert!(p1.values().iter().all(|v| v.to_rational() == Some(rat(1, 6))));
    let p3 = central_projection(&t, 2).unwrap();
    let expect = [rat(2, 3), rat(0, 1), rat(-1, 3)];
    for x in 0..6 {
        let class_values = [2, 0, -1];
        let c = g.class_of(x);
        assert_eq!(p3.value(x).to_rational(), Some(rat(class_values[c], 3)));
        assert_eq!(p3.value(x).to_rational().unwrap(), expect[c]);
    }
    assert!(matches!(central_projection(&t, 3), Err(CrossError::Rep(RepError::IndexOutOfRange { .. }))));
}

#[test]
fn trivial_group_projection_is_delta() {
    let g = group(BuiltinGroup::Cyclic(1));
    let t = builtin_character_table(BuiltinGroup::Cyclic(1), &g).unwrap();
    let p = central_projection(&t, 0).unwrap();
    assert_eq!(p, GroupAlgebraElement::delta(&g, &CycField::new(1).unwrap(), 0));
}

fn assert_central_family(t: &CharacterTable) {
    let g = t.group();
    let f = CycField::new(g.exponent() as u32).unwrap();
    let ps: Vec<_> = (0..t.len()).map(|i| central_projection(t, i).unwrap()).collect();
    let mut sum = GroupAlgebraElement::zero(g, &f);
    for (i, p) in ps.iter().enumerate() {
        for (j, q) in ps.iter().enumerate() {
            let pq = p.convolve(q).unwrap();
            if i == j {
                assert_eq!(&pq, p);
            } else {
                assert!(pq.is_zero());
            }
        }
        for x in 0..g.order() {
            let d = GroupAlgebraElement::delta(g, &f, x);
            assert_eq!(p.convolve(&d).unwrap(), d.convolve(p).unwrap());
        }
        sum = sum.add(p).unwrap();
    }
    assert_eq!(sum, GroupAlgebraElement::delta(g, &f, 0));
}

#[test]
fn central_projections_form_a_complete_orthogonal_central_family() {
    for kind in [
        BuiltinGroup::Symmetric(3),
        BuiltinGroup::Dihedral(4),
        BuiltinGroup::Cyclic(5),
        BuiltinGroup::Klein,
        BuiltinGroup::Symmetric(4),
    ] {
        let g = group(kind);
        assert_central_family(&builtin_character_table(kind, &g).unwrap());
    }
}

#[test]
fn action_examples() {
    let (g, _, sigma) = s3_setup();
    let f = sigma.field().clone();
    let xi = CorrespondenceElement::basis(&sigma, 0, 0);
    assert_eq!(left_act(&GroupAlgebraElement::delta(&g, &f, 0), &xi).unwrap(), xi);
    assert_eq!(left_act(&GroupAlgebraElement::delta(&g, &f, T), &xi).unwrap(), CorrespondenceElement::basis(&sigma, T, 1));
    assert_eq!(inner(&xi, &xi).unwrap(), GroupAlgebraElement::delta(&g, &f, 0));
    // s scales e₁ by w.
    let s_xi = left_act(&GroupAlgebraElement::delta(&g, &f, S), &xi).unwrap();
    assert_eq!(s_xi, CorrespondenceElement::basis(&sigma, S, 0).scale(&f.zeta_pow(1)));
}

#[test]
fn correspondence_shape_errors() {
    let (_, _, sigma) = s3_setup();
    let f = sigma.field().clone();
    assert!(matches!(CorrespondenceElement::new(&sigma, vec![]), Err(CrossError::ValueCount { expected: 6, found: 0 })));
    let mut v = vec![vec![f.zero(); 2]; 6];
    v[4] = vec![f.zero()];
    assert!(matches!(CorrespondenceElement::new(&sigma, v), Err(CrossError::VectorLength { element: 4, .. })));
    let (c2, _, sign) = sign_c2();
    let h = GroupAlgebraElement::delta(&c2, &f, 0);
    assert_eq!(left_act(&h, &CorrespondenceElement::basis(&sigma, 0, 0)), Err(CrossError::GroupMismatch));
    let xi = CorrespondenceElement::basis(&sign, 0, 0);
    let eta = CorrespondenceElement::basis(&sigma, 0, 0);
    assert_eq!(inner(&xi, &eta), Err(CrossError::GroupMismatch));
}

fn check_axioms(rng: &mut ChaCha8Rng, rep: &Arc<Representation>) {
    let g = rep.group();
    let f = rep.field();
    let (h, h2, fa) = (rand_alg(rng, g, f), rand_alg(rng, g, f), rand_alg(rng, g, f));
    let (xi, eta) = (rand_corr(rng, rep), rand_corr(rng, rep));
    assert_eq!(
        left_act(&h.convolve(&h2).unwrap(), &xi).unwrap(),
        left_act(&h, &left_act(&h2, &xi).unwrap()).unwrap()
    );
    assert_eq!(
        right_act(&xi, &h.convolve(&fa).unwrap()).unwrap(),
        right_act(&right_act(&xi, &h).unwrap(), &fa).unwrap()
    );
    assert_eq!(
        right_act(&left_act(&h, &xi).unwrap(), &fa).unwrap(),
        left_act(&h, &right_act(&xi, &fa).unwrap()).unwrap()
    );
    assert_eq!(
        inner(&xi, &right_act(&eta, &fa).unwrap()).unwrap(),
        inner(&xi, &eta).unwrap().convolve(&fa).unwrap()
    );
    assert_eq!(inner(&xi, &eta).unwrap().involute(), inner(&eta, &xi).unwrap());
    assert_eq!(inner(&left_act(&h, &xi).unwrap(), &eta).unwrap(), inner(&xi, &left_act(&h.involute(), &eta).unwrap()).unwrap());
}

#[test]
fn bimodule_axioms_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (_, _, sigma) = s3_setup();
    let c4 = group(BuiltinGroup::Cyclic(4));
    let d4 = group(BuiltinGroup::Dihedral(4));
    let c4_rep = builtin_irreducibles(BuiltinGroup::Cyclic(4), &c4).unwrap().remove(1);
    let d4_rep = builtin_irreducibles(BuiltinGroup::Dihedral(4), &d4).unwrap().pop().unwrap();
    for rep in [sigma, Arc::new(c4_rep), Arc::new(d4_rep)] {
        for _ in 0..8 {
            check_axioms(&mut rng, &rep);
        }
    }
}

#[test]
fn involution_is_an_anti_automorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = group(BuiltinGroup::Dihedral(3));
    let f = CycField::new(6).unwrap();
    for _ in 0..10 {
        let (a, b) = (rand_alg(&mut rng, &g, &f), rand_alg(&mut rng, &g, &f));
        assert_eq!(a.convolve(&b).unwrap().involute(), b.involute().convolve(&a.involute()).unwrap());
        assert_eq!(a.involute().involute(), a);
    }
}

#[test]
fn s3_corner_dimensions_and_fusion() {
    let (_, t, sigma) = s3_setup();
    assert_eq!(corner_dimensions(&sigma, &t).unwrap(), int_rows(&[&[0, 0, 2], &[0, 0, 2], &[2, 2, 4]]));
    let b = fusion_matrix(&sigma, &t).unwrap();
    assert_eq!(b, IntMatrix::from_rows(&[vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 1]]).unwrap());
}

#[test]
fn trivial_group_corner_is_dimension() {
    let g = group(BuiltinGroup::Cyclic(1));
    let t = builtin_character_table(BuiltinGroup::Cyclic(1), &g).unwrap();
    for n in 1..4 {
        let r = Representation::trivial(&g, &CycField::new(1).unwrap(), n);
        assert_eq!(corner_dimensions(&r, &t).unwrap(), vec![vec![n]]);
        assert_eq!(fusion_matrix(&r, &t).unwrap(), IntMatrix::from_rows(&[vec![n as i64]]).unwrap());
    }
}

#[test]
fn z2_sign_corners_and_fusion() {
    let (_, t, sign) = sign_c2();
    assert_eq!(corner_dimensions(&sign, &t).unwrap(), int_rows(&[&[0, 1], &[1, 0]]));
    assert_eq!(fusion_matrix(&sign, &t).unwrap(), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
}

#[test]
fn trivial_rep_fusion_is_identity() {
    for kind in [BuiltinGroup::Symmetric(3), BuiltinGroup::Dihedral(5), BuiltinGroup::Symmetric(4)] {
        let g = group(kind);
        let t = builtin_character_table(kind, &g).unwrap();
        let r = Representation::trivial(&g, &CycField::new(1).unwrap(), 1);
        assert_eq!(fusion_matrix(&r, &t).unwrap(), IntMatrix::identity(t.len()));
    }
}

#[test]
fn fusion_detects_inconsistent_table() {
    let (g, t, sigma) = s3_setup();
    let c2 = group(BuiltinGroup::Cyclic(2));
    let t2 = builtin_character_table(BuiltinGroup::Cyclic(2), &c2).unwrap();
    assert_eq!(fusion_matrix(&sigma, &t2), Err(CrossError::GroupMismatch));
    let mut chars = t.characters().to_vec();
    chars[1] = chars[2].clone();
    let bad = CharacterTable::new(&g, chars).unwrap();
    assert!(matches!(fusion_matrix(&sigma, &bad), Err(CrossError::Rep(_))));
}

fn assert_bridge(kind: BuiltinGroup) {
    let g = group(kind);
    let t = builtin_character_table(kind, &g).unwrap();
    let d = t.degrees().unwrap();
    for r in builtin_irreducibles(kind, &g).unwrap() {
        let dims = corner_dimensions(&r, &t).unwrap();
        let b = fusion_matrix(&r, &t).unwrap();
        let mut total = 0;
        for i in 0..t.len() {
            for k in 0..t.len() {
                assert_eq!(BigInt::from(dims[i][k]), BigInt::from(d[i] * d[k]) * b.get(i, k), "{kind} ({i},{k})");
                total += dims[i][k];
            }
        }
        assert_eq!(total, g.order() * r.dim());
    }
}

#[test]
fn bridge_identity_on_small_groups() {
    for kind in [BuiltinGroup::Symmetric(3), BuiltinGroup::Cyclic(4), BuiltinGroup::Dihedral(4), BuiltinGroup::Klein] {
        assert_bridge(kind);
    }
}

#[test]
fn z2_picture_rejects_bad_input() {
    let f = CycField::new(4).unwrap();
    let s3 = group(BuiltinGroup::Symmetric(3));
    let c2 = group(BuiltinGroup::Cyclic(2));
    let swap = CycMatrix::from_rows(vec![vec![f.zero(), f.one()], vec![f.one(), f.zero()]]);
    assert!(matches!(Z2Picture::new(&s3, swap.clone()), Err(CrossError::NotOrderTwo(6))));
    let i = f.zeta_pow(1);
    let not_inv = CycMatrix::from_rows(vec![vec![i]]);
    assert_eq!(Z2Picture::new(&c2, not_inv).unwrap_err(), CrossError::SigmaNotInvolution);
    let two = f.integer(2);
    let skew = CycMatrix::from_rows(vec![vec![f.one(), two], vec![f.zero(), f.integer(-1)]]);
    assert_eq!(Z2Picture::new(&c2, skew).unwrap_err(), CrossError::SigmaNotUnitary);
    assert!(Z2Picture::new(&c2, swap).is_ok());
}

#[test]
fn z2_picture_examples() {
    let f = CycField::new(1).unwrap();
    let c2 = group(BuiltinGroup::Cyclic(2));
    let pic = Z2Picture::new(&c2, CycMatrix::from_rows(vec![vec![f.integer(-1)]])).unwrap();
    let z = pic.matrix_form(&[f.zero()], &[f.zero()]);
    assert!(z.entries.iter().flatten().flatten().all(Cyclotomic::is_zero));
    let m = pic.matrix_form(&[f.one()], &[f.zero()]);
    assert_eq!(m.right_mul(&Z2Picture::scalar_form(&f.one(), &f.zero())), m);
}

#[test]
fn z2_picture_preserves_operations() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = CycField::new(4).unwrap();
    let c2 = group(BuiltinGroup::Cyclic(2));
    let i = f.zeta_pow(1);
    // σ = [[0, i], [-i, 0]] is a unitary involution.
    let sigma = CycMatrix::from_rows(vec![vec![f.zero(), i.clone()], vec![-&i, f.zero()]]);
    let pic = Z2Picture::new(&c2, sigma).unwrap();
    let rep = pic.rep().clone();
    for _ in 0..40 {
        let (xi, eta) = (rand_corr(&mut rng, &rep), rand_corr(&mut rng, &rep));
        let a = rand_alg(&mut rng, &c2, &f);
        let (mx, my, ma) = (pic.element_form(&xi), pic.element_form(&eta), Z2Picture::algebra_form(&a));
        assert_eq!(pic.element_form(&right_act(&xi, &a).unwrap()), mx.right_mul(&ma));
        assert_eq!(pic.element_form(&left_act(&a, &xi).unwrap()), mx.left_mul(&ma));
        assert_eq!(Z2Picture::algebra_form(&inner(&xi, &eta).unwrap()), mx.inner(&my));
    }
}
