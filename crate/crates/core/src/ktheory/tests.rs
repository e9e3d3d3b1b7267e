use super::*;
use alloc::vec;
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn inv(free: usize, torsion: &[i64]) -> AbelianGroupInvariants {
    AbelianGroupInvariants::new(free, big(torsion)).unwrap()
}

fn paper_b() -> IntMatrix {
    m(&[&[0, 0, 1], &[0, 0, 1], &[1, 1, 1]])
}

// Independent oracle: determinant divisors D_k = gcd of all k×k minors,
// computed with i128 cofactor-free elimination over the rationals.
fn det_i128(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut a = a.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn invariant_factors_oracle(a: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i128> {
    let mut d_prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut d = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                d = gcd(d, det_i128(&minor));
            }
        }
        if d == 0 {
            out.extend(core::iter::repeat_n(0, rows.min(cols) - out.len()));
            break;
        }
        out.push(d / d_prev);
        d_prev = d;
    }
    out
}

fn check_snf_contract(a: &IntMatrix) {
    let f = smith_normal_form(a);
    assert_eq!(f.u.mul(a).mul(&f.v), f.s);
    assert_eq!(f.u.determinant().abs(), BigInt::one());
    assert_eq!(f.v.determinant().abs(), BigInt::one());
    for i in 0..f.s.rows() {
        for j in 0..f.s.cols() {
            if i != j {
                assert!(f.s.get(i, j).is_zero());
            }
        }
    }
    let d = f.diagonal();
    assert!(d.iter().all(|x| !x.is_negative()));
    for w in d.windows(2) {
        assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero(), "{d:?}");
    }
    let rows: Vec<Vec<i64>> = a.to_rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
    let expect: Vec<BigInt> = invariant_factors_oracle(&rows, a.rows(), a.cols()).into_iter().map(BigInt::from).collect();
    assert_eq!(d, expect);
}

#[test]
fn snf_zero_matrix() {
    let z = IntMatrix::zeros(3, 2);
    let f = smith_normal_form(&z);
    assert_eq!(f.s, z);
    assert_eq!(f.u, IntMatrix::identity(3));
    assert_eq!(f.v, IntMatrix::identity(2));
}

#[test]
fn snf_examples() {
    let a = m(&[&[1, 0, -1], &[0, 1, -1], &[-1, -1, 0]]);
    assert_eq!(a, IntMatrix::identity(3).sub(&paper_b().transpose()));
    assert_eq!(smith_normal_form(&a).diagonal(), big(&[1, 1, 2]));
    check_snf_contract(&a);
    let d = m(&[&[6, 0], &[0, 4]]);
    assert_eq!(smith_normal_form(&d).diagonal(), big(&[2, 12]));
    check_snf_contract(&d);
}

#[test]
fn oracle_agrees_on_hand_cases() {
    assert_eq!(invariant_factors_oracle(&[vec![6, 0], vec![0, 4]], 2, 2), vec![2, 12]);
    assert_eq!(invariant_factors_oracle(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3, 3), vec![2, 6, 12]);
    assert_eq!(det_i128(&[vec![1, 2], vec![3, 4]]), -2);
}

#[test]
fn snf_empty_and_thin_shapes() {
    check_snf_contract(&IntMatrix::zeros(0, 3));
    check_snf_contract(&m(&[&[4, 6, 10]]));
    check_snf_contract(&m(&[&[4], &[6], &[-9]]));
    assert_eq!(smith_normal_form(&m(&[&[4, 6, 10]])).diagonal(), big(&[2]));
}

#[test]
fn determinant_matches_oracle() {
    let a = m(&[&[2, -1, 0], &[3, 5, 7], &[0, 1, -4]]);
    let rows: Vec<Vec<i128>> = a.to_rows().iter().map(|r| r.iter().map(|x| i128::try_from(x).unwrap()).collect()).collect();
    assert_eq!(a.determinant(), BigInt::from(det_i128(&rows)));
    assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
}

#[test]
fn cokernel_examples() {
    let a = IntMatrix::identity(3).sub(&paper_b().transpose());
    assert_eq!(cokernel_invariants(&a), inv(0, &[2]));
    assert_eq!(cokernel_invariants(&IntMatrix::zeros(4, 4)), inv(4, &[]));
    let c = m(&[&[1, -1], &[-1, 1]]);
    assert_eq!(cokernel_invariants(&c), inv(1, &[]));
    assert_eq!(kernel_rank(&c), 1);
}

#[test]
fn invariants_validation() {
    assert!(AbelianGroupInvariants::new(0, big(&[1])).is_err());
    assert!(AbelianGroupInvariants::new(0, big(&[2, 3])).is_err());
    assert!(AbelianGroupInvariants::new(0, big(&[0])).is_err());
    assert!(AbelianGroupInvariants::new(1, big(&[2, 4])).is_ok());
}

#[test]
fn invariants_display() {
    use alloc::string::ToString;
    assert_eq!(inv(0, &[]).to_string(), "0");
    assert_eq!(inv(1, &[]).to_string(), "Z");
    assert_eq!(inv(2, &[]).to_string(), "Z^2");
    assert_eq!(inv(0, &[2]).to_string(), "Z/2");
    assert_eq!(inv(1, &[2, 4]).to_string(), "Z ⊕ Z/2 ⊕ Z/4");
    let k = KGroups { k0: inv(0, &[2]), k1: inv(0, &[]) };
    assert_eq!(k.to_string(), "K0 = Z/2, K1 = 0");
}

#[test]
fn graph_examples() {
    let k = graph_k_theory(&paper_b()).unwrap();
    assert_eq!(k.k0, inv(0, &[2]));
    assert!(k.k1.is_trivial());
    for n in 2..10i64 {
        let k = graph_k_theory(&m(&[&[n]])).unwrap();
        let expect = if n == 2 { inv(0, &[]) } else { inv(0, &[n - 1]) };
        assert_eq!(k.k0, expect);
        assert!(k.k1.is_trivial());
    }
    let k = graph_k_theory(&m(&[&[0, 1], &[1, 0]])).unwrap();
    assert_eq!((k.k0, k.k1), (inv(1, &[]), inv(1, &[])));
}

#[test]
fn graph_rejects_bad_input() {
    assert!(matches!(graph_k_theory(&m(&[&[1, 2]])), Err(KError::NotSquare { .. })));
    assert!(matches!(graph_k_theory(&m(&[&[1, -1], &[0, 1]])), Err(KError::NegativeEntry { row: 0, col: 1, .. })));
}

#[test]
fn sphere_examples() {
    let k = sphere_bundle_k0(&SphereBundleClass::new(3, 1).unwrap());
    assert_eq!(k.k0, inv(0, &[4]));
    assert!(k.k1.is_trivial());
    for n in 2..8 {
        let k = sphere_bundle_k0(&SphereBundleClass::new(n, 0).unwrap());
        let expect = if n == 2 { inv(0, &[]) } else { inv(0, &[n - 1, n - 1]) };
        assert_eq!(k.k0, expect);
    }
    assert!(sphere_bundle_k0(&SphereBundleClass::new(2, 5).unwrap()).k0.is_trivial());
    assert!(SphereBundleClass::new(0, 1).is_err());
}

#[test]
fn sphere_rank_one_reports_kernel() {
    let k = sphere_bundle_k0(&SphereBundleClass::new(1, 0).unwrap());
    assert_eq!((k.k0.free_rank(), k.k1.free_rank()), (2, 2));
    let k = sphere_bundle_k0(&SphereBundleClass::new(1, 3).unwrap());
    assert_eq!(k.k0, inv(1, &[3]));
    assert_eq!(k.k1, inv(1, &[]));
}

#[test]
fn sphere_grid() {
    for n in 2..=6i64 {
        for mm in 0..=5i64 {
            let g = (n - 1).gcd(&mm);
            let total = (n - 1) * (n - 1);
            let factors: Vec<i64> = [g, total / g].into_iter().filter(|&d| d >= 2).collect();
            let k = sphere_bundle_k0(&SphereBundleClass::new(n, mm).unwrap());
            assert_eq!(k.k0, inv(0, &factors), "n={n} m={mm}");
            assert!(k.k1.is_trivial());
        }
    }
}

#[test]
fn powers_of_b() {
    let p = paper_b().powers(3);
    assert_eq!(p[0], paper_b());
    assert_eq!(p[1], m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 3]]));
    assert_eq!(p[2], paper_b().mul(&p[1]));
}

#[test]
fn permute_square_relabels() {
    let b = m(&[&[1, 2, 0], &[0, 0, 3], &[4, 0, 0]]);
    let p = b.permute_square(&[2, 0, 1]);
    assert_eq!(p.get(2, 0), b.get(0, 1));
    assert_eq!(p.get(1, 2), b.get(2, 0));
}

fn int_matrix(max_dim: usize, max_entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-max_entry..=max_entry, r * c)
            .prop_map(move |v| IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

fn square_nonneg(max_dim: usize) -> impl Strategy<Value = (IntMatrix, Vec<usize>)> {
    (1..=max_dim).prop_flat_map(|n| {
        (
            proptest::collection::vec(0i64..=4, n * n)
                .prop_map(move |v| IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap()),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

proptest! {
    #[test]
    fn snf_contract(a in int_matrix(6, 20)) {
        check_snf_contract(&a);
    }

    #[test]
    fn graph_k_theory_invariant_under_relabeling((b, perm) in square_nonneg(5)) {
        let k = graph_k_theory(&b).unwrap();
        let kp = graph_k_theory(&b.permute_square(&perm)).unwrap();
        prop_assert_eq!(k, kp);
    }

    #[test]
    fn torsion_order_matches_determinant((b, _) in square_nonneg(5)) {
        let i_bt = IntMatrix::identity(b.rows()).sub(&b.transpose());
        let det = i_bt.determinant();
        if !det.is_zero() {
            let k = graph_k_theory(&b).unwrap();
            prop_assert_eq!(k.k0.free_rank(), 0);
            prop_assert_eq!(k.k0.torsion_order(), det.abs());
        }
    }
}
