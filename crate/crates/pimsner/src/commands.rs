//! One function per subcommand. Each returns a [`Report`] holding the JSON
//! value and its text rendering.

use num_bigint::BigInt;
use pimsner_core::crossprod::{corner_dimensions, fusion_matrix};
use pimsner_core::groups::{cosets, subgroup_generated};
use pimsner_core::homogeneous::{homogeneous_bundle, transitive_graph};
use pimsner_core::ktheory::{graph_k_theory, sphere_bundle_k0, IntMatrix, SphereBundleClass};
use pimsner_core::reps::{character_of, multiplicities};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::formats::{
    cyclotomic_to_literal, identity_map, int_matrix_json, invariants_json, k_groups_json, LoadedGroup, load_group, load_matrix, load_rep,
    load_table, matrix_file_json, render_int_matrix,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

fn usize_matrix_text(m: &[Vec<usize>]) -> String {
    let rows: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    render_int_matrix(&IntMatrix::from_rows(&rows).expect("square"))
}

pub fn group_info(spec: &str) -> Result<Report, CliError> {
    let loaded = load_group(spec)?;
    let g = &loaded.group;
    let cc = g.conjugacy_classes();
    let classes: Vec<Value> = (0..cc.count())
        .map(|c| {
            let rep = cc.representatives[c];
            json!({ "representative": rep, "size": cc.sizes[c], "element_order": g.element_order(rep) })
        })
        .collect();
    let json = json!({
        "name": g.name(),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "num_classes": cc.count(),
        "classes": classes,
    });
    let sizes: Vec<String> = cc.sizes.iter().map(usize::to_string).collect();
    let text = format!(
        "group {}\norder: {}\nexponent: {}\nabelian: {}\nclasses: {} (sizes {})",
        g.name(),
        g.order(),
        g.exponent(),
        g.is_abelian(),
        cc.count(),
        sizes.join(", ")
    );
    Ok(Report { json, text })
}

pub fn rep_check(group: &str, rep: &str, table: Option<&str>) -> Result<Report, CliError> {
    let loaded = load_group(group)?;
    let g = &loaded.group;
    let r = load_rep(rep, &loaded, &identity_map(g.order()))?;
    let chi = character_of(&r);
    let reps = &g.conjugacy_classes().representatives;
    let values: Vec<Value> = chi.values().iter().map(cyclotomic_to_literal).collect();
    let mut json = json!({
        "valid": true,
        "dim": r.dim(),
        "conductor": r.conductor(),
        "character": { "classes": reps, "values": values },
    });
    let mut text = format!(
        "valid unitary representation of {}\ndim: {}\nconductor: {}\ncharacter: {}",
        g.name(),
        r.dim(),
        r.conductor(),
        chi.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );
    if let Some(t) = table {
        let t = load_table(t, g, &identity_map(g.order()))?;
        let m = multiplicities(&r, &t)?;
        json["multiplicities"] = json!(m);
        text.push_str(&format!("\nmultiplicities: {m:?}"));
    }
    Ok(Report { json, text })
}

pub fn fusion(group: &str, rep: &str, table: &str) -> Result<Report, CliError> {
    let loaded = load_group(group)?;
    let g = &loaded.group;
    let r = load_rep(rep, &loaded, &identity_map(g.order()))?;
    let t = load_table(table, g, &identity_map(g.order()))?;
    let b = fusion_matrix(&r, &t)?;
    Ok(Report { json: json!({ "fusion": int_matrix_json(&b) }), text: format!("fusion matrix:\n{}", render_int_matrix(&b)) })
}

pub fn corners(group: &str, rep: &str, table: &str) -> Result<Report, CliError> {
    let loaded = load_group(group)?;
    let g = &loaded.group;
    let r = load_rep(rep, &loaded, &identity_map(g.order()))?;
    let t = load_table(table, g, &identity_map(g.order()))?;
    let dims = corner_dimensions(&r, &t)?;
    let b = fusion_matrix(&r, &t)?;
    let json = json!({ "dims": dims, "fusion": int_matrix_json(&b) });
    let text = format!(
        "corner dimensions:\n{}\nfusion matrix:\n{}",
        usize_matrix_text(&dims),
        render_int_matrix(&b)
    );
    Ok(Report { json, text })
}

pub fn ktheory_graph(matrix: &str, iterates: Option<usize>) -> Result<Report, CliError> {
    let b = load_matrix(matrix)?;
    let k = graph_k_theory(&b)?;
    let mut json = k_groups_json(&k);
    let mut text = k.to_string();
    if let Some(n) = iterates {
        let powers = b.powers(n);
        json["iterates"] = Value::Array(powers.iter().map(matrix_file_json).collect());
        for (i, p) in powers.iter().enumerate() {
            text.push_str(&format!("\nB^{}:\n{}", i + 1, render_int_matrix(p)));
        }
    }
    Ok(Report { json, text })
}

pub fn ktheory_sphere(n: i64, m: i64) -> Result<Report, CliError> {
    let c = SphereBundleClass::new(n, m)?;
    let k = sphere_bundle_k0(&c);
    Ok(Report { json: k_groups_json(&k), text: k.to_string() })
}

pub fn homogeneous(group: &str, gens: &[usize], module: &str, table: &str) -> Result<Report, CliError> {
    let loaded = load_group(group)?;
    let g = &loaded.group;
    for &x in gens {
        g.check_element(x)?;
    }
    let h = subgroup_generated(g, gens)?;
    let local = |x: usize| h.local_index(x);
    let sub_loaded = LoadedGroup { group: h.group().clone(), builtin: None };
    let v = load_rep(module, &sub_loaded, &local)?;
    let t = load_table(table, h.group(), &local)?;
    let bundle = homogeneous_bundle(g, gens, v)?;
    let out = transitive_graph(&bundle, &t)?;
    let json = json!({
        "subgroup": bundle.subgroup().elements(),
        "rank": bundle.rank(),
        "base_size": bundle.base_size(),
        "section_dimension": bundle.section_dimension(),
        "cosets": cosets(bundle.subgroup()),
        "incidence": int_matrix_json(&out.incidence),
        "K0": invariants_json(&out.k.k0),
        "K1": invariants_json(&out.k.k1),
        "model": out.model.to_string(),
    });
    let text = format!(
        "subgroup {:?} (index {})\nbundle rank: {}\nsection dimension: {}\nincidence ({}):\n{}\n{}",
        bundle.subgroup().elements(),
        bundle.base_size(),
        bundle.rank(),
        bundle.section_dimension(),
        out.model,
        render_int_matrix(&out.incidence),
        out.k
    );
    Ok(Report { json, text })
}
