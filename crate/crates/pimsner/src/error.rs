use pimsner_core::crossprod::CrossError;
use pimsner_core::exactnum::NumError;
use pimsner_core::groups::GroupError;
use pimsner_core::homogeneous::HomError;
use pimsner_core::ktheory::KError;
use pimsner_core::reps::RepError;
use serde_json::{json, Value};

/// Exit status 1: input parsed but violates an invariant.
pub const EXIT_VALIDATION: i32 = 1;
/// Exit status 2: input could not be parsed.
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}{}: {message}", position(.line, .column))]
    Malformed { source_name: String, line: Option<usize>, column: Option<usize>, message: String },
    #[error("{invariant} violated: {message}")]
    Validation { invariant: String, witness: Value, message: String },
}

fn position(line: &Option<usize>, column: &Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
        (Some(l), None) => format!(" at line {l}"),
        _ => String::new(),
    }
}

impl CliError {
    pub fn malformed(source_name: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Malformed { source_name: source_name.into(), line: None, column: None, message: message.into() }
    }

    pub fn from_json(source_name: impl Into<String>, e: &serde_json::Error) -> Self {
        CliError::Malformed {
            source_name: source_name.into(),
            line: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string(),
        }
    }

    pub fn validation(invariant: &str, witness: Value, message: impl Into<String>) -> Self {
        CliError::Validation { invariant: invariant.into(), witness, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed { .. } => EXIT_MALFORMED,
            CliError::Validation { .. } => EXIT_VALIDATION,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Malformed { source_name, line, column, message } => json!({
                "error": {
                    "kind": "malformed_input",
                    "source": source_name,
                    "line": line,
                    "column": column,
                    "message": message,
                }
            }),
            CliError::Validation { invariant, witness, message } => json!({
                "error": {
                    "kind": "validation",
                    "invariant": invariant,
                    "witness": witness,
                    "message": message,
                }
            }),
        }
    }
}

fn v(invariant: &str, witness: Value, e: &impl ToString) -> CliError {
    CliError::validation(invariant, witness, e.to_string())
}

impl From<NumError> for CliError {
    fn from(e: NumError) -> Self {
        match &e {
            NumError::InvalidConductor(n) => v("conductor_range", json!({ "conductor": n }), &e),
            NumError::ExponentOutOfRange { exponent, conductor } => {
                v("exponent_range", json!({ "exponent": exponent, "conductor": conductor }), &e)
            }
            NumError::ConductorMismatch { from, to } => v("conductor_divides", json!({ "from": from, "to": to }), &e),
            NumError::DivisionByZero => v("nonzero_divisor", Value::Null, &e),
            NumError::ZeroDenominator => v("nonzero_denominator", Value::Null, &e),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match &e {
            GroupError::Empty => v("nonempty_table", Value::Null, &e),
            GroupError::NotSquare { row, len, order } => {
                v("square_table", json!({ "row": row, "len": len, "order": order }), &e)
            }
            GroupError::EntryOutOfRange { row, col, value } => {
                v("entry_range", json!({ "row": row, "col": col, "value": value }), &e)
            }
            GroupError::MissingIdentity { element } => v("identity", json!({ "element": element }), &e),
            GroupError::RowNotPermutation { row } => v("latin_square", json!({ "row": row }), &e),
            GroupError::ColumnNotPermutation { col } => v("latin_square", json!({ "col": col }), &e),
            GroupError::MissingInverse { element } => v("inverses", json!({ "element": element }), &e),
            GroupError::NotAssociative { a, b, c } => v("associativity", json!({ "a": a, "b": b, "c": c }), &e),
            GroupError::InvalidElement { index, order } => {
                v("element_index", json!({ "index": index, "order": order }), &e)
            }
            GroupError::BuiltinOutOfRange { n, .. } => v("builtin_parameter", json!({ "n": n }), &e),
            GroupError::UnknownBuiltin(name) => v("builtin_name", json!({ "name": name }), &e),
            GroupError::NotASubgroup(what) => v("subgroup", json!({ "detail": what }), &e),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::Num(n) => n.into(),
            RepError::Group(g) => g.into(),
            ref e => match e {
                RepError::GroupMismatch => v("same_group", Value::Null, e),
                RepError::MatrixCount { expected, found } => {
                    v("matrix_count", json!({ "expected": expected, "found": found }), e)
                }
                RepError::MatrixShape { element, rows, cols, dim } => {
                    v("matrix_shape", json!({ "element": element, "rows": rows, "cols": cols, "dim": dim }), e)
                }
                RepError::IdentityNotIdentity => v("identity_maps_to_identity", json!({ "element": 0 }), e),
                RepError::NotHomomorphism { g, h } => v("homomorphism", json!({ "g": g, "h": h }), e),
                RepError::NonUnitary { element } => v("unitarity", json!({ "element": element }), e),
                RepError::GeneratorsIncomplete { element } => v("generation", json!({ "element": element }), e),
                RepError::ClassCount { expected, found } => {
                    v("class_count", json!({ "expected": expected, "found": found }), e)
                }
                RepError::NonRationalInner(value) => v("rational_inner_product", json!({ "value": value }), e),
                RepError::BadMultiplicity { index, value } => {
                    v("integral_multiplicity", json!({ "index": index, "value": value.to_string() }), e)
                }
                RepError::BadDegree(value) => v("positive_degree", json!({ "value": value }), e),
                RepError::TableCount { expected, found } => {
                    v("table_size", json!({ "expected": expected, "found": found }), e)
                }
                RepError::TrivialNotFirst => v("trivial_first", json!({ "index": 0 }), e),
                RepError::NotOrthonormal { i, j, value, expected } => v(
                    "orthonormality",
                    json!({ "i": i, "j": j, "value": value.to_string(), "expected": expected }),
                    e,
                ),
                RepError::DegreeSum { sum, order } => v("degree_sum", json!({ "sum": sum, "order": order }), e),
                RepError::IndexOutOfRange { index, len } => v("index_range", json!({ "index": index, "len": len }), e),
                RepError::TensorCap { n, k } => v("tensor_cap", json!({ "n": n, "k": k }), e),
                RepError::NoBuiltinMatrices(name) => v("builtin_matrices", json!({ "group": name }), e),
                RepError::Num(_) | RepError::Group(_) => unreachable!(),
            },
        }
    }
}

impl From<CrossError> for CliError {
    fn from(e: CrossError) -> Self {
        match e {
            CrossError::Num(n) => n.into(),
            CrossError::Rep(r) => r.into(),
            ref e => match e {
                CrossError::GroupMismatch => v("same_group", Value::Null, e),
                CrossError::RepMismatch => v("same_representation", Value::Null, e),
                CrossError::ValueCount { expected, found } => {
                    v("value_count", json!({ "expected": expected, "found": found }), e)
                }
                CrossError::VectorLength { element, expected, found } => {
                    v("vector_length", json!({ "element": element, "expected": expected, "found": found }), e)
                }
                CrossError::FusionNotInteger { i, k, value } => {
                    v("integral_fusion", json!({ "i": i, "k": k, "value": value.to_string() }), e)
                }
                CrossError::FusionRankIdentity { k, expected, found } => {
                    v("fusion_rank_identity", json!({ "k": k, "expected": expected, "found": found }), e)
                }
                CrossError::NotOrderTwo(order) => v("order_two", json!({ "order": order }), e),
                CrossError::SigmaShape { rows, cols } => v("sigma_square", json!({ "rows": rows, "cols": cols }), e),
                CrossError::SigmaNotInvolution => v("sigma_involution", Value::Null, e),
                CrossError::SigmaNotUnitary => v("sigma_unitary", Value::Null, e),
                CrossError::Num(_) | CrossError::Rep(_) => unreachable!(),
            },
        }
    }
}

impl From<KError> for CliError {
    fn from(e: KError) -> Self {
        match &e {
            KError::Shape { rows, cols, expected, found } => v(
                "matrix_shape",
                json!({ "rows": rows, "cols": cols, "expected": expected, "found": found }),
                &e,
            ),
            KError::Ragged { row, len, cols } => v("rectangular", json!({ "row": row, "len": len, "cols": cols }), &e),
            KError::NotSquare { rows, cols } => v("square_incidence", json!({ "rows": rows, "cols": cols }), &e),
            KError::NegativeEntry { row, col, value } => {
                v("nonnegative_incidence", json!({ "row": row, "col": col, "value": value.to_string() }), &e)
            }
            KError::InvalidInvariants(detail) => v("invariant_factors", json!({ "detail": detail }), &e),
            KError::InvalidRank(n) => v("bundle_rank", json!({ "n": n }), &e),
        }
    }
}

impl From<HomError> for CliError {
    fn from(e: HomError) -> Self {
        match e {
            HomError::Group(g) => g.into(),
            HomError::Rep(r) => r.into(),
            HomError::Cross(c) => c.into(),
            HomError::K(k) => k.into(),
            HomError::ModuleGroupMismatch { expected, found } => {
                let msg = e.to_string();
                CliError::validation("module_group", json!({ "expected": expected, "found": found }), msg)
            }
        }
    }
}
