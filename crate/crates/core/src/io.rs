//! JSON file formats for the `liext` command line: algebras, extension
//! data, matrices, action families, and full extension presentations.
//!
//! Every rational value travels as a *rational-string* matching
//! `-?digits(/digits)?` with a positive denominator — never a float — and
//! every document is emitted in one canonical form (fixed key order, basis
//! order for labels, lexicographic order for bracket keys, two-space
//! indentation, trailing newline), so parsing and re-serializing a
//! canonical file reproduces it byte for byte.
//!
//! Bracket and cochain keys are written with basis labels, `"[x,y]"`, not
//! indices; coefficient maps omit zero entries and unknown labels are
//! rejected.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cochain::{increasing_tuples, SkewCochain};
use crate::ext::{Extension, ExtensionData};
use crate::lie::{LieAlgebra, LinearMap};
use crate::linalg::{vec_is_zero, Matrix, Rat};

#[derive(Debug, Error, PartialEq)]
pub enum IoError {
    #[error("cannot read `{path}`: {message}")]
    Read { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Syntax(String),
    #[error("{0}")]
    Schema(String),
    #[error("`{0}` is not a rational-string (expected `-?digits(/digits)?` with a nonzero denominator)")]
    Rational(String),
    #[error("unknown basis label `{label}` of `{algebra}`")]
    Label { label: String, algebra: String },
    #[error("`{0}` is not a bracket key (expected `[label,label]` with the labels in basis order)")]
    BracketKey(String),
    #[error("{0}")]
    Invalid(String),
}

/// Parse a rational-string: optional sign, digits, optional `/digits` with
/// a nonzero denominator. Anything else — floats, signs in the denominator,
/// whitespace — is rejected.
pub fn parse_rational(s: &str) -> Result<Rat, IoError> {
    let (numer, denom) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let digits = numer.strip_prefix('-').unwrap_or(numer);
    let numer_ok = !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit());
    let denom_ok = !denom.is_empty() && denom.bytes().all(|b| b.is_ascii_digit());
    if !numer_ok || !denom_ok {
        return Err(IoError::Rational(s.to_string()));
    }
    let n: BigInt = numer.parse().expect("digits were validated");
    let d: BigInt = denom.parse().expect("digits were validated");
    if d.is_zero() {
        return Err(IoError::Rational(s.to_string()));
    }
    Ok(Rat::new(n, d))
}

/// The canonical rational-string of a value; the inverse of
/// [`parse_rational`] on its image.
pub fn rational_string(x: &Rat) -> String {
    x.to_string()
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    serde_json::to_string(v).expect("scalars never fail to serialize")
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
            } else if items.iter().all(is_scalar) {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&scalar_text(item));
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&" ".repeat(indent + 2));
                    write_value(item, indent + 2, out);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&" ".repeat(indent));
                out.push(']');
            }
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
            } else if indent > 0 && map.values().all(is_scalar) {
                out.push('{');
                for (i, (key, value)) in map.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&scalar_text(&Value::String(key.clone())));
                    out.push_str(": ");
                    out.push_str(&scalar_text(value));
                }
                out.push('}');
            } else {
                out.push_str("{\n");
                for (i, (key, value)) in map.iter().enumerate() {
                    out.push_str(&" ".repeat(indent + 2));
                    out.push_str(&scalar_text(&Value::String(key.clone())));
                    out.push_str(": ");
                    write_value(value, indent + 2, out);
                    if i + 1 < map.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str(&" ".repeat(indent));
                out.push('}');
            }
        }
        scalar => out.push_str(&scalar_text(scalar)),
    }
}

/// The canonical text of a document: two-space indentation, scalar-only
/// collections inline, a root object always expanded, trailing newline.
pub fn canonical_json(v: &Value) -> String {
    let mut text = String::new();
    write_value(v, 0, &mut text);
    text.push('\n');
    text
}

fn pretty(v: &Value) -> String {
    canonical_json(v)
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, IoError> {
    v.as_object().ok_or_else(|| IoError::Schema(format!("{what} must be an object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array().ok_or_else(|| IoError::Schema(format!("{what} must be a list")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, IoError> {
    v.as_str().ok_or_else(|| IoError::Schema(format!("{what} must be a string")))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value, IoError> {
    obj.get(key).ok_or_else(|| IoError::Schema(format!("{what} is missing the key `{key}`")))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<(), IoError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(IoError::Schema(format!("{what} has an unknown key `{key}`")));
        }
    }
    Ok(())
}

fn parse_json(text: &str) -> Result<Value, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Syntax(e.to_string()))
}

fn read_file(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|e| IoError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Split a `"[a,b]"` key into its labels.
fn bracket_key_labels(key: &str) -> Result<Vec<&str>, IoError> {
    let inner = key
        .strip_prefix('[')
        .and_then(|k| k.strip_suffix(']'))
        .ok_or_else(|| IoError::BracketKey(key.to_string()))?;
    let labels: Vec<&str> = inner.split(',').collect();
    if labels.iter().any(|l| l.is_empty()) {
        return Err(IoError::BracketKey(key.to_string()));
    }
    Ok(labels)
}

fn label_index(algebra: &LieAlgebra, label: &str) -> Result<usize, IoError> {
    algebra
        .basis_labels()
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| IoError::Label { label: label.to_string(), algebra: algebra.name().to_string() })
}

/// A coefficient object `{label: rational-string, …}` over `algebra`'s
/// basis, as a dense vector.
fn coefficient_vector(v: &Value, algebra: &LieAlgebra, what: &str) -> Result<Vec<Rat>, IoError> {
    let obj = as_object(v, what)?;
    let mut out = crate::linalg::vec_zero(algebra.dim());
    for (label, entry) in obj {
        let i = label_index(algebra, label)?;
        out[i] = parse_rational(as_str(entry, &format!("{what}.{label}"))?)?;
    }
    Ok(out)
}

fn coefficient_value(coeffs: &[Rat], labels: &[String]) -> Value {
    let mut map = Map::new();
    for (label, c) in labels.iter().zip(coeffs) {
        if !c.is_zero() {
            map.insert(label.clone(), Value::String(rational_string(c)));
        }
    }
    Value::Object(map)
}

/// Read an algebra document — `{"name", "basis", "brackets"}` — into a
/// validated [`LieAlgebra`]. Jacobi failures surface as [`IoError::Invalid`]
/// naming the violating triples.
pub fn algebra_from_value(v: &Value) -> Result<LieAlgebra, IoError> {
    let obj = as_object(v, "an algebra document")?;
    check_keys(obj, &["name", "basis", "brackets"], "an algebra document")?;
    let name = as_str(get(obj, "name", "an algebra document")?, "`name`")?.to_string();
    let basis_values = as_array(get(obj, "basis", "an algebra document")?, "`basis`")?;
    let mut basis = Vec::new();
    for label in basis_values {
        let label = as_str(label, "a basis label")?;
        if label.is_empty() || label.contains(['[', ']', ',']) {
            return Err(IoError::Schema(format!("basis label `{label}` is not a plain label")));
        }
        basis.push(label.to_string());
    }

    // Brackets are validated against a scaffold algebra with no structure,
    // purely to resolve labels to indices.
    let scaffold = LieAlgebra::new(name.clone(), basis.clone(), Vec::new())
        .map_err(|e| IoError::Invalid(e.to_string()))?;
    let brackets_obj =
        as_object(get(obj, "brackets", "an algebra document")?, "`brackets`")?;
    let mut brackets = Vec::new();
    for (key, value) in brackets_obj {
        let labels = bracket_key_labels(key)?;
        if labels.len() != 2 {
            return Err(IoError::BracketKey(key.clone()));
        }
        let i = label_index(&scaffold, labels[0])?;
        let j = label_index(&scaffold, labels[1])?;
        if i >= j {
            return Err(IoError::BracketKey(key.clone()));
        }
        brackets.push(((i, j), coefficient_vector(value, &scaffold, key)?));
    }
    LieAlgebra::new(name, basis, brackets).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn algebra_value(algebra: &LieAlgebra) -> Value {
    let mut brackets = Map::new();
    for ((i, j), coeffs) in algebra.structure() {
        if vec_is_zero(coeffs) {
            continue;
        }
        let key =
            format!("[{},{}]", algebra.basis_labels()[*i], algebra.basis_labels()[*j]);
        brackets.insert(key, coefficient_value(coeffs, algebra.basis_labels()));
    }
    json!({
        "name": algebra.name(),
        "basis": algebra.basis_labels(),
        "brackets": brackets,
    })
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, IoError> {
    algebra_from_value(&parse_json(text)?)
}

pub fn write_algebra(algebra: &LieAlgebra) -> String {
    pretty(&algebra_value(algebra))
}

pub fn read_algebra(path: &Path) -> Result<LieAlgebra, IoError> {
    parse_algebra(&read_file(path)?)
}

/// How a data document referred to one of its algebras: by path (relative
/// to the document) or inline. Preserved so re-serialization reproduces the
/// source.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraRef {
    Path(String),
    Inline(LieAlgebra),
}

impl AlgebraRef {
    fn parse(v: &Value, base: &Path) -> Result<(AlgebraRef, LieAlgebra), IoError> {
        match v {
            Value::String(path) => {
                let algebra = read_algebra(&base.join(path))?;
                Ok((AlgebraRef::Path(path.clone()), algebra))
            }
            other => {
                let algebra = algebra_from_value(other)?;
                Ok((AlgebraRef::Inline(algebra.clone()), algebra))
            }
        }
    }

    fn value(&self) -> Value {
        match self {
            AlgebraRef::Path(path) => Value::String(path.clone()),
            AlgebraRef::Inline(algebra) => algebra_value(algebra),
        }
    }
}

/// A parsed data document: the references as written plus the decoded
/// datum. Only shapes are enforced here — semantic validity is the business
/// of the operation consuming the datum.
#[derive(Debug, Clone, PartialEq)]
pub struct DataFile {
    pub g_ref: AlgebraRef,
    pub h_ref: AlgebraRef,
    pub data: ExtensionData,
}

impl DataFile {
    /// Wrap a datum for writing with both algebras inline.
    pub fn inline(data: ExtensionData) -> DataFile {
        DataFile {
            g_ref: AlgebraRef::Inline(data.g().clone()),
            h_ref: AlgebraRef::Inline(data.h().clone()),
            data,
        }
    }
}

fn matrix_from_value(
    v: &Value,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Matrix, IoError> {
    let row_values = as_array(v, what)?;
    if row_values.len() != rows {
        return Err(IoError::Schema(format!("{what} must have {rows} rows")));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (r, row) in row_values.iter().enumerate() {
        let entries = as_array(row, &format!("{what} row {r}"))?;
        if entries.len() != cols {
            return Err(IoError::Schema(format!("{what} row {r} must have {cols} entries")));
        }
        for entry in entries {
            data.push(parse_rational(as_str(entry, &format!("{what} row {r}"))?)?);
        }
    }
    Ok(Matrix::from_flat(rows, cols, data))
}

pub fn matrix_value(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            let row: Vec<Value> = (0..m.cols())
                .map(|c| Value::String(rational_string(m.get(r, c))))
                .collect();
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

/// A degree-2 correction object keyed by g-basis pairs with h-coefficient
/// objects as values.
fn rho_from_value(v: &Value, g: &LieAlgebra, h: &LieAlgebra) -> Result<SkewCochain, IoError> {
    let obj = as_object(v, "`rho`")?;
    let mut rho = SkewCochain::zero(2, g.dim(), h.dim());
    for (key, value) in obj {
        let labels = bracket_key_labels(key)?;
        if labels.len() != 2 {
            return Err(IoError::BracketKey(key.clone()));
        }
        let i = label_index(g, labels[0])?;
        let j = label_index(g, labels[1])?;
        if i >= j {
            return Err(IoError::BracketKey(key.clone()));
        }
        rho.set(&[i, j], coefficient_vector(value, h, key)?);
    }
    Ok(rho)
}

/// A cochain as a document value with plain coordinate lists — for values
/// in a space without basis labels, such as center coordinates or an
/// abstract module. Zero values omitted.
pub fn cochain_coords_value(c: &SkewCochain, labels: &[String]) -> Value {
    let mut map = Map::new();
    for tuple in increasing_tuples(c.source_dim(), c.degree()) {
        let value = c.get(&tuple);
        if vec_is_zero(value) {
            continue;
        }
        let key: Vec<&str> = tuple.iter().map(|&i| labels[i].as_str()).collect();
        let coords: Vec<Value> =
            value.iter().map(|x| Value::String(rational_string(x))).collect();
        map.insert(format!("[{}]", key.join(",")), Value::Array(coords));
    }
    Value::Object(map)
}

/// A cochain as a document value: keys over `labels` in lexicographic tuple
/// order, coefficient objects over `target_labels`, zero values omitted.
pub fn cochain_value(c: &SkewCochain, labels: &[String], target_labels: &[String]) -> Value {
    let mut map = Map::new();
    for tuple in increasing_tuples(c.source_dim(), c.degree()) {
        let value = c.get(&tuple);
        if vec_is_zero(value) {
            continue;
        }
        let key: Vec<&str> = tuple.iter().map(|&i| labels[i].as_str()).collect();
        map.insert(format!("[{}]", key.join(",")), coefficient_value(value, target_labels));
    }
    Value::Object(map)
}

pub fn parse_data(text: &str, base: &Path) -> Result<DataFile, IoError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "a data document")?;
    check_keys(obj, &["g", "h", "alpha", "rho"], "a data document")?;
    let (g_ref, g) = AlgebraRef::parse(get(obj, "g", "a data document")?, base)?;
    let (h_ref, h) = AlgebraRef::parse(get(obj, "h", "a data document")?, base)?;
    let alpha_values = as_array(get(obj, "alpha", "a data document")?, "`alpha`")?;
    if alpha_values.len() != g.dim() {
        return Err(IoError::Schema(format!(
            "`alpha` must have one matrix per basis element of `{}` ({} expected)",
            g.name(),
            g.dim()
        )));
    }
    let mut alpha = Vec::new();
    for (k, m) in alpha_values.iter().enumerate() {
        alpha.push(matrix_from_value(m, h.dim(), h.dim(), &format!("`alpha[{k}]`"))?);
    }
    let rho = rho_from_value(get(obj, "rho", "a data document")?, &g, &h)?;
    let data =
        ExtensionData::new(g, h, alpha, rho).map_err(|e| IoError::Invalid(e.to_string()))?;
    Ok(DataFile { g_ref, h_ref, data })
}

pub fn data_value(file: &DataFile) -> Value {
    let alpha: Vec<Value> = file.data.alpha().iter().map(matrix_value).collect();
    json!({
        "g": file.g_ref.value(),
        "h": file.h_ref.value(),
        "alpha": alpha,
        "rho": cochain_value(
            file.data.rho(),
            file.data.g().basis_labels(),
            file.data.h().basis_labels(),
        ),
    })
}

pub fn write_data(file: &DataFile) -> String {
    pretty(&data_value(file))
}

pub fn read_data(path: &Path) -> Result<DataFile, IoError> {
    let base = path.parent().unwrap_or(Path::new("")).to_path_buf();
    parse_data(&read_file(path)?, &base)
}

/// Parse a matrix document `{"matrix": [[…]]}` with the stated shape.
pub fn parse_matrix(text: &str, rows: usize, cols: usize) -> Result<Matrix, IoError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "a matrix document")?;
    check_keys(obj, &["matrix"], "a matrix document")?;
    matrix_from_value(get(obj, "matrix", "a matrix document")?, rows, cols, "`matrix`")
}

pub fn write_matrix(m: &Matrix) -> String {
    pretty(&json!({ "matrix": matrix_value(m) }))
}

pub fn read_matrix(path: &Path, rows: usize, cols: usize) -> Result<Matrix, IoError> {
    parse_matrix(&read_file(path)?, rows, cols)
}

/// Parse an action document `{"matrices": [matrix, …]}`: `count` matrices,
/// each `dim × dim`.
pub fn parse_action(text: &str, count: usize, dim: usize) -> Result<Vec<Matrix>, IoError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "an action document")?;
    check_keys(obj, &["matrices"], "an action document")?;
    let values = as_array(get(obj, "matrices", "an action document")?, "`matrices`")?;
    if values.len() != count {
        return Err(IoError::Schema(format!("`matrices` must have {count} entries")));
    }
    values
        .iter()
        .enumerate()
        .map(|(k, m)| matrix_from_value(m, dim, dim, &format!("`matrices[{k}]`")))
        .collect()
}

pub fn read_action(path: &Path, count: usize, dim: usize) -> Result<Vec<Matrix>, IoError> {
    parse_action(&read_file(path)?, count, dim)
}

/// Parse an outer-action document `{"images": [[rational-string, …], …]}`:
/// one coordinate vector in the outer algebra per g-basis element.
pub fn parse_outer_images(text: &str) -> Result<Vec<Vec<Rat>>, IoError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "an outer-action document")?;
    check_keys(obj, &["images"], "an outer-action document")?;
    let values = as_array(get(obj, "images", "an outer-action document")?, "`images`")?;
    let mut images = Vec::new();
    for (k, image) in values.iter().enumerate() {
        let coords = as_array(image, &format!("`images[{k}]`"))?;
        let mut row = Vec::new();
        for c in coords {
            row.push(parse_rational(as_str(c, &format!("`images[{k}]`"))?)?);
        }
        images.push(row);
    }
    Ok(images)
}

pub fn read_outer_images(path: &Path) -> Result<Vec<Vec<Rat>>, IoError> {
    parse_outer_images(&read_file(path)?)
}

/// A full presentation `{"g", "h", "e", "inclusion", "projection",
/// "section"?}` as emitted by `build`, validated on parse.
pub fn extension_value(ext: &Extension) -> Value {
    let mut obj = Map::new();
    obj.insert("g".into(), algebra_value(ext.g()));
    obj.insert("h".into(), algebra_value(ext.h()));
    obj.insert("e".into(), algebra_value(ext.e()));
    obj.insert("inclusion".into(), matrix_value(ext.inclusion().matrix()));
    obj.insert("projection".into(), matrix_value(ext.projection().matrix()));
    if let Some(section) = ext.section() {
        obj.insert("section".into(), matrix_value(section.matrix()));
    }
    Value::Object(obj)
}

pub fn write_extension(ext: &Extension) -> String {
    pretty(&extension_value(ext))
}

pub fn parse_extension(text: &str) -> Result<Extension, IoError> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "an extension document")?;
    check_keys(obj, &["g", "h", "e", "inclusion", "projection", "section"], "an extension document")?;
    let g = algebra_from_value(get(obj, "g", "an extension document")?)?;
    let h = algebra_from_value(get(obj, "h", "an extension document")?)?;
    let e = algebra_from_value(get(obj, "e", "an extension document")?)?;
    let inclusion = matrix_from_value(
        get(obj, "inclusion", "an extension document")?,
        e.dim(),
        h.dim(),
        "`inclusion`",
    )?;
    let projection = matrix_from_value(
        get(obj, "projection", "an extension document")?,
        g.dim(),
        e.dim(),
        "`projection`",
    )?;
    let section = match obj.get("section") {
        None => None,
        Some(v) => Some(LinearMap::new(matrix_from_value(v, e.dim(), g.dim(), "`section`")?)),
    };
    Extension::new(g, h, e, LinearMap::new(inclusion), LinearMap::new(projection), section)
        .map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn read_extension(path: &Path) -> Result<Extension, IoError> {
    parse_extension(&read_file(path)?)
}
