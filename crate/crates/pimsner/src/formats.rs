//! JSON file schemas and the `builtin:` / `fixture:` shorthands.
//!
//! * group: `{"name": str, "order": n, "table": [[...]]}`
//! * rep: `{"conductor": N, "dim": n, "matrices": {"<element>": [[literal, ...], ...]}}`
//! * character table: `{"conductor": N, "classes": [reps...], "characters": [[literal, ...], ...]}`
//! * matrix: `{"rows": r, "cols": c, "entries": [[...]]}`
//!
//! A cyclotomic literal is `[[k, num, den], ...]`, meaning `Σ (num/den)·ζ_N^k`
//! with `0 ≤ k < N`.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pimsner_core::exactnum::{CycField, CycMatrix, Cyclotomic, FieldExt, Rational};
use pimsner_core::groups::{build_group, BuiltinGroup, FiniteGroup};
use pimsner_core::ktheory::{AbelianGroupInvariants, IntMatrix, KGroups};
use pimsner_core::reps::{
    builtin_character_table, builtin_irreducibles, validate_char_table, Character, CharacterTable, Representation,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

pub const SIGMA_FIXTURE: &str = include_str!("../fixtures/sigma.json");
pub const S3_TABLE_FIXTURE: &str = include_str!("../fixtures/s3_table.json");
pub const INCIDENCE_FIXTURE: &str = include_str!("../fixtures/incidence_b.json");

pub const DEFAULT_MAX_ORDER: usize = 200;
pub const MAX_ORDER_VAR: &str = "PIMSNER_MAX_ORDER";

pub type Literal = Vec<(i64, i64, i64)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub conductor: u32,
    pub dim: usize,
    pub matrices: BTreeMap<String, Vec<Vec<Literal>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub conductor: u32,
    pub classes: Vec<usize>,
    pub characters: Vec<Vec<Literal>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsJson {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroupsJson {
    #[serde(rename = "K0")]
    pub k0: InvariantsJson,
    #[serde(rename = "K1")]
    pub k1: InvariantsJson,
}

pub fn parse_json<T: DeserializeOwned>(source_name: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::from_json(source_name, &e))
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::malformed(path, format!("cannot read file: {e}")))
}

/// Largest accepted group order, from the environment.
pub fn max_order() -> Result<usize, CliError> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::malformed(MAX_ORDER_VAR, format!("expected a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

pub fn literal_to_cyclotomic(
    field: &Arc<CycField>,
    lit: &Literal,
    source_name: &str,
    location: &str,
) -> Result<Cyclotomic, CliError> {
    let n = field.conductor() as i64;
    let mut terms = Vec::with_capacity(lit.len());
    for (idx, &(k, num, den)) in lit.iter().enumerate() {
        if den == 0 {
            return Err(CliError::malformed(source_name, format!("{location}, term {idx}: zero denominator")));
        }
        if !(0..n).contains(&k) {
            return Err(CliError::malformed(
                source_name,
                format!("{location}, term {idx}: exponent {k} outside 0..{n}"),
            ));
        }
        terms.push((k as u64, Rational::new(BigInt::from(num), BigInt::from(den))));
    }
    Ok(field.from_terms(&terms)?)
}

/// `[[k, num, den], ...]` in the value's own field, terms in increasing `k`.
pub fn cyclotomic_to_literal(c: &Cyclotomic) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .into_iter()
        .map(|(k, q)| json!([k, int_value(q.numer()), int_value(q.denom())]))
        .collect();
    Value::Array(terms)
}

pub fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn check_order(g: FiniteGroup, source_name: &str) -> Result<Arc<FiniteGroup>, CliError> {
    let cap = max_order()?;
    if g.order() > cap {
        return Err(CliError::validation(
            "max_order",
            json!({ "order": g.order(), "max": cap }),
            format!("group order {} exceeds {MAX_ORDER_VAR} = {cap} ({source_name})", g.order()),
        ));
    }
    Ok(Arc::new(g))
}

/// A loaded group, remembering the built-in family when there is one.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: Arc<FiniteGroup>,
    pub builtin: Option<BuiltinGroup>,
}

pub fn load_group(spec: &str) -> Result<LoadedGroup, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let kind = BuiltinGroup::from_str(name).map_err(|e| CliError::malformed(spec, e.to_string()))?;
        let g = kind.build().map_err(|e| CliError::malformed(spec, e.to_string()))?;
        return Ok(LoadedGroup { group: check_order(g, spec)?, builtin: Some(kind) });
    }
    let file: GroupFile = parse_json(spec, &read_file(spec)?)?;
    group_from_file(&file, spec)
}

pub fn group_from_file(file: &GroupFile, source_name: &str) -> Result<LoadedGroup, CliError> {
    if file.order != file.table.len() {
        return Err(CliError::malformed(
            source_name,
            format!("declared order {} but the table has {} rows", file.order, file.table.len()),
        ));
    }
    let g = build_group(&file.name, &file.table)?;
    Ok(LoadedGroup { group: check_order(g, source_name)?, builtin: None })
}

/// Maps element indices used in a file to indices of the target group.
pub type IndexMap<'a> = &'a dyn Fn(usize) -> Option<usize>;

pub fn identity_map(order: usize) -> impl Fn(usize) -> Option<usize> {
    move |i| (i < order).then_some(i)
}

fn rep_from_text(
    text: &str,
    source_name: &str,
    group: &Arc<FiniteGroup>,
    index: IndexMap,
) -> Result<Representation, CliError> {
    let file: RepFile = parse_json(source_name, text)?;
    let field = CycField::new(file.conductor)
        .map_err(|e| CliError::malformed(source_name, format!("conductor: {e}")))?;
    if file.dim == 0 {
        return Err(CliError::malformed(source_name, "dim must be at least 1"));
    }
    let mut slots: Vec<Option<CycMatrix>> = vec![None; group.order()];
    for (key, rows) in &file.matrices {
        let raw: usize = key
            .parse()
            .map_err(|_| CliError::malformed(source_name, format!("matrix key `{key}` is not an element index")))?;
        let g = index(raw).ok_or_else(|| {
            CliError::validation(
                "element_index",
                json!({ "index": raw }),
                format!("matrix key {raw} is not an element of the group"),
            )
        })?;
        if rows.len() != file.dim || rows.iter().any(|r| r.len() != file.dim) {
            return Err(CliError::malformed(source_name, format!("matrix {key} is not {0}x{0}", file.dim)));
        }
        let mut entries = Vec::with_capacity(file.dim);
        for (i, row) in rows.iter().enumerate() {
            let mut out = Vec::with_capacity(file.dim);
            for (j, lit) in row.iter().enumerate() {
                out.push(literal_to_cyclotomic(&field, lit, source_name, &format!("matrices/{key}/{i}/{j}"))?);
            }
            entries.push(out);
        }
        slots[g] = Some(CycMatrix::from_rows(entries));
    }
    let matrices = slots
        .into_iter()
        .enumerate()
        .map(|(g, m)| {
            m.ok_or_else(|| {
                CliError::validation(
                    "matrix_count",
                    json!({ "missing_element": g }),
                    format!("no matrix given for element {g}"),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Representation::new(group, &field, matrices)?)
}

/// `fixture:sigma`, `trivial`, `regular`, `irrep:K` (built-in groups) or a
/// rep file path.
pub fn load_rep(spec: &str, group: &LoadedGroup, index: IndexMap) -> Result<Representation, CliError> {
    let g = &group.group;
    match spec {
        "fixture:sigma" => rep_from_text(SIGMA_FIXTURE, spec, g, index),
        "trivial" => Ok(Representation::trivial(g, &CycField::new(1)?, 1)),
        "regular" => Ok(Representation::regular(g, &CycField::new(1)?)),
        _ => {
            if let Some(k) = spec.strip_prefix("irrep:") {
                let k: usize = k.parse().map_err(|_| CliError::malformed(spec, "expected irrep:<index>"))?;
                let kind = group.builtin.ok_or_else(|| {
                    CliError::malformed(spec, "irrep:<index> needs a builtin: group")
                })?;
                let mut irreps = builtin_irreducibles(kind, g)?;
                if k >= irreps.len() {
                    return Err(CliError::validation(
                        "index_range",
                        json!({ "index": k, "len": irreps.len() }),
                        format!("irreducible {k} out of range for {} irreducibles", irreps.len()),
                    ));
                }
                return Ok(irreps.swap_remove(k));
            }
            rep_from_text(&read_file(spec)?, spec, g, index)
        }
    }
}

fn table_from_text(
    text: &str,
    source_name: &str,
    group: &Arc<FiniteGroup>,
    index: IndexMap,
) -> Result<CharacterTable, CliError> {
    let file: TableFile = parse_json(source_name, text)?;
    let field = CycField::new(file.conductor)
        .map_err(|e| CliError::malformed(source_name, format!("conductor: {e}")))?;
    let cc = group.conjugacy_classes();
    let mut position: Vec<Option<usize>> = vec![None; cc.count()];
    for (col, &raw) in file.classes.iter().enumerate() {
        let g = index(raw).ok_or_else(|| {
            CliError::validation(
                "element_index",
                json!({ "index": raw }),
                format!("class representative {raw} is not an element of the group"),
            )
        })?;
        let c = group.class_of(g);
        if position[c].is_some() {
            return Err(CliError::validation(
                "distinct_classes",
                json!({ "representative": raw }),
                format!("class of element {raw} is listed twice"),
            ));
        }
        position[c] = Some(col);
    }
    if let Some(c) = position.iter().position(Option::is_none) {
        return Err(CliError::validation(
            "class_coverage",
            json!({ "class_representative": cc.representatives[c] }),
            format!("class of element {} is not listed", cc.representatives[c]),
        ));
    }
    let mut chars = Vec::with_capacity(file.characters.len());
    for (i, row) in file.characters.iter().enumerate() {
        if row.len() != file.classes.len() {
            return Err(CliError::malformed(
                source_name,
                format!("character {i} has {} values, expected {}", row.len(), file.classes.len()),
            ));
        }
        let values = position
            .iter()
            .map(|p| {
                let col = p.expect("all classes covered");
                literal_to_cyclotomic(&field, &row[col], source_name, &format!("characters/{i}/{col}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        chars.push(Character::new(group, values)?);
    }
    let table = CharacterTable::new(group, chars)?;
    validate_char_table(&table)?;
    Ok(table)
}

/// `builtin:NAME` (the table of that built-in family, which must match the
/// group) or a character-table file path.
pub fn load_table(spec: &str, group: &Arc<FiniteGroup>, index: IndexMap) -> Result<CharacterTable, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let kind = BuiltinGroup::from_str(name).map_err(|e| CliError::malformed(spec, e.to_string()))?;
        let table = builtin_character_table(kind, group)?;
        if kind == BuiltinGroup::Symmetric(3) {
            // The bundled fixture; the group was just checked to be S3.
            return table_from_text(S3_TABLE_FIXTURE, spec, group, &identity_map(group.order()));
        }
        return Ok(table);
    }
    table_from_text(&read_file(spec)?, spec, group, index)
}

pub fn matrix_from_file(file: &MatrixFile, source_name: &str) -> Result<IntMatrix, CliError> {
    if file.entries.len() != file.rows || file.entries.iter().any(|r| r.len() != file.cols) {
        return Err(CliError::malformed(
            source_name,
            format!("entries do not form a {}x{} matrix", file.rows, file.cols),
        ));
    }
    let flat = file.entries.iter().flatten().map(|&x| BigInt::from(x)).collect();
    Ok(IntMatrix::new(file.rows, file.cols, flat)?)
}

/// `fixture:b` or a matrix file path.
pub fn load_matrix(spec: &str) -> Result<IntMatrix, CliError> {
    let text = if spec == "fixture:b" { INCIDENCE_FIXTURE.to_string() } else { read_file(spec)? };
    let file: MatrixFile = parse_json(spec, &text)?;
    matrix_from_file(&file, spec)
}

pub fn int_matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(int_value).collect())).collect())
}

pub fn matrix_file_json(m: &IntMatrix) -> Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": int_matrix_json(m) })
}

pub fn invariants_json(a: &AbelianGroupInvariants) -> Value {
    json!({ "free_rank": a.free_rank(), "torsion": a.torsion().iter().map(int_value).collect::<Vec<_>>() })
}

pub fn k_groups_json(k: &KGroups) -> Value {
    json!({ "K0": invariants_json(&k.k0), "K1": invariants_json(&k.k1) })
}

/// Stable rendering: one line, keys sorted, trailing newline.
pub fn render_json(v: &Value) -> String {
    // serde_json's map is ordered by key unless `preserve_order` is enabled.
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn render_int_matrix(m: &IntMatrix) -> String {
    let rows = m.to_rows();
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
