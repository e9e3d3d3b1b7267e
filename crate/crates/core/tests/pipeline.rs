use std::sync::Arc;

use pimsner_core::crossprod::{corner_dimensions, fusion_matrix};
use pimsner_core::exactnum::CycField;
use pimsner_core::groups::BuiltinGroup;
use pimsner_core::ktheory::{graph_k_theory, k_theory_from_fusion, sphere_bundle_k0, SphereBundleClass};
use pimsner_core::reps::{builtin_character_table, sigma_s3};

#[test]
fn s3_sigma_end_to_end() {
    let g = Arc::new(BuiltinGroup::Symmetric(3).build().unwrap());
    let r = sigma_s3(&g, &CycField::new(3).unwrap()).unwrap();
    let t = builtin_character_table(BuiltinGroup::Symmetric(3), &g).unwrap();
    assert_eq!(corner_dimensions(&r, &t).unwrap(), vec![vec![0, 0, 2], vec![0, 0, 2], vec![2, 2, 4]]);
    let b = fusion_matrix(&r, &t).unwrap();
    assert_eq!(b.to_rows(), vec![vec![0.into(), 0.into(), 1.into()], vec![0.into(), 0.into(), 1.into()], vec![1.into(), 1.into(), 1.into()]]);
    let k = graph_k_theory(&b).unwrap();
    assert_eq!(k.to_string(), "K0 = Z/2, K1 = 0");
    assert_eq!(k_theory_from_fusion(&r, &t).unwrap(), k);
}

#[test]
fn sphere_bundle_display() {
    let k = sphere_bundle_k0(&SphereBundleClass::new(3, 2).unwrap());
    assert_eq!(k.to_string(), "K0 = Z/2 ⊕ Z/2, K1 = 0");
    let k = sphere_bundle_k0(&SphereBundleClass::new(1, 0).unwrap());
    assert_eq!(k.to_string(), "K0 = Z^2, K1 = Z^2");
}
