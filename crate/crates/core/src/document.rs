//! JSON interchange format.
//!
//! Every document is an object with a `"schema"` tag of the form
//! `trialab/<type>@1`. Rationals are strings such as `"-3/4"` or `"2"`,
//! indices are 0-based, and map entries `[row, col, c]` put column `j` at the
//! image of source basis vector `j`. Inside actions and crossed modules an
//! algebra, action or map may be replaced by a path string, resolved
//! relative to the containing file.
//!
//! Output is canonical: sorted keys, sorted tensor entries and rationals in
//! lowest terms, so saving a loaded document reproduces it byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::action::{layout, Action, Space};
use crate::algebra::{Algebra, Kind};
use crate::crossed::CrossedModule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};
use crate::tensor::Tensor;

pub const ALGEBRA: &str = "trialab/algebra@1";
pub const MAP: &str = "trialab/map@1";
pub const SUBSPACE: &str = "trialab/subspace@1";
pub const ACTION: &str = "trialab/action@1";
pub const CROSSED_MODULE: &str = "trialab/crossed-module@1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Algebra(Algebra),
    Map(Matrix),
    Subspace(Subspace),
    Action(Action),
    CrossedModule(CrossedModule),
}

impl Payload {
    pub fn schema(&self) -> &'static str {
        match self {
            Payload::Algebra(_) => ALGEBRA,
            Payload::Map(_) => MAP,
            Payload::Subspace(_) => SUBSPACE,
            Payload::Action(_) => ACTION,
            Payload::CrossedModule(_) => CROSSED_MODULE,
        }
    }
}

/// A payload plus the optional free-text `"note"` field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub payload: Payload,
    pub note: Option<String>,
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Document { payload, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn into_algebra(self) -> Result<Algebra> {
        match self.payload {
            Payload::Algebra(a) => Ok(a),
            other => Err(wrong_payload(ALGEBRA, &other)),
        }
    }

    pub fn into_map(self) -> Result<Matrix> {
        match self.payload {
            Payload::Map(m) => Ok(m),
            other => Err(wrong_payload(MAP, &other)),
        }
    }

    pub fn into_subspace(self) -> Result<Subspace> {
        match self.payload {
            Payload::Subspace(s) => Ok(s),
            other => Err(wrong_payload(SUBSPACE, &other)),
        }
    }

    pub fn into_action(self) -> Result<Action> {
        match self.payload {
            Payload::Action(a) => Ok(a),
            other => Err(wrong_payload(ACTION, &other)),
        }
    }

    pub fn into_crossed_module(self) -> Result<CrossedModule> {
        match self.payload {
            Payload::CrossedModule(c) => Ok(c),
            other => Err(wrong_payload(CROSSED_MODULE, &other)),
        }
    }
}

fn wrong_payload(expected: &str, found: &Payload) -> Error {
    Error::Invalid(format!("expected a {expected} document, found {}", found.schema()))
}

macro_rules! payload_from {
    ($($t:ty => $v:ident),*) => {
        $(impl From<$t> for Document {
            fn from(x: $t) -> Self {
                Document::new(Payload::$v(x))
            }
        })*
    };
}

payload_from!(Algebra => Algebra, Matrix => Map, Subspace => Subspace, Action => Action, CrossedModule => CrossedModule);

// ---------------------------------------------------------------- loading

struct Ctx {
    file: String,
    base: PathBuf,
}

impl Ctx {
    fn err(&self, field: &str, message: impl Into<String>) -> Error {
        Error::Schema {
            file: self.file.clone(),
            field: field.to_string(),
            message: message.into(),
        }
    }
}

/// Reads and validates a document.
pub fn load(path: impl AsRef<Path>) -> Result<Document> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    from_str_at(&text, &path.display().to_string(), &base)
}

/// Parses a document from text; path references resolve against `base`.
pub fn from_str_at(text: &str, name: &str, base: &Path) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: name.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let ctx = Ctx {
        file: name.to_string(),
        base: base.to_path_buf(),
    };
    parse_document(&ctx, &value, "$")
}

pub fn from_str(text: &str) -> Result<Document> {
    from_str_at(text, "<input>", Path::new("."))
}

fn object<'a>(ctx: &Ctx, v: &'a Value, field: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| ctx.err(field, "expected an object"))
}

fn check_fields(ctx: &Ctx, obj: &Map<String, Value>, field: &str, allowed: &[&str]) -> Result<()> {
    for key in obj.keys() {
        if key != "schema" && key != "note" && !allowed.contains(&key.as_str()) {
            return Err(ctx.err(&format!("{field}.{key}"), "unknown field"));
        }
    }
    Ok(())
}

fn required<'a>(ctx: &Ctx, obj: &'a Map<String, Value>, field: &str, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| ctx.err(&format!("{field}.{key}"), "missing field"))
}

fn count(ctx: &Ctx, v: &Value, field: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| ctx.err(field, "expected a non-negative integer"))
}

fn scalar(ctx: &Ctx, v: &Value, field: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| ctx.err(field, format!("invalid rational `{s}`"))),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_integer(n.as_i64().expect("checked").into())),
        _ => Err(ctx.err(field, "expected a rational string like \"-3/4\"")),
    }
}

/// Parses `"p/q"` or `"p"`; the result is in lowest terms.
pub fn parse_rational(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (s.parse().ok()?, num_bigint::BigInt::from(1)),
    };
    if q.is_zero() {
        return None;
    }
    Some(Scalar::new(p, q))
}

fn string(ctx: &Ctx, v: &Value, field: &str) -> Result<String> {
    v.as_str().map(str::to_string).ok_or_else(|| ctx.err(field, "expected a string"))
}

fn parse_document(ctx: &Ctx, v: &Value, field: &str) -> Result<Document> {
    let obj = object(ctx, v, field)?;
    let schema = string(ctx, required(ctx, obj, field, "schema")?, &format!("{field}.schema"))?;
    let note = match obj.get("note") {
        Some(n) => Some(string(ctx, n, &format!("{field}.note"))?),
        None => None,
    };
    let payload = match schema.as_str() {
        ALGEBRA => Payload::Algebra(parse_algebra(ctx, obj, field)?),
        MAP => Payload::Map(parse_map(ctx, obj, field)?),
        SUBSPACE => Payload::Subspace(parse_subspace(ctx, obj, field)?),
        ACTION => Payload::Action(parse_action(ctx, obj, field)?),
        CROSSED_MODULE => Payload::CrossedModule(parse_crossed(ctx, obj, field)?),
        other => return Err(ctx.err(&format!("{field}.schema"), format!("unknown schema `{other}`"))),
    };
    Ok(Document { payload, note })
}

/// A nested document or a path string pointing at one.
fn nested(ctx: &Ctx, v: &Value, field: &str) -> Result<Document> {
    match v {
        Value::String(p) => {
            let path = ctx.base.join(p);
            load(&path)
        }
        _ => parse_document(ctx, v, field),
    }
}

fn entries(ctx: &Ctx, v: &Value, field: &str, width: usize) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let arr = v.as_array().ok_or_else(|| ctx.err(field, "expected an array of entries"))?;
    arr.iter()
        .enumerate()
        .map(|(n, e)| {
            let f = format!("{field}[{n}]");
            let row = e.as_array().ok_or_else(|| ctx.err(&f, "expected an array"))?;
            if row.len() != width + 1 {
                return Err(ctx.err(&f, format!("expected {width} indices and a coefficient")));
            }
            let idx = row[..width]
                .iter()
                .enumerate()
                .map(|(k, x)| count(ctx, x, &format!("{f}[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok((idx, scalar(ctx, &row[width], &format!("{f}[{width}]"))?))
        })
        .collect()
}

fn tensor(ctx: &Ctx, v: &Value, field: &str, in_dims: Vec<usize>, out_dim: usize) -> Result<Tensor> {
    let list = entries(ctx, v, field, in_dims.len() + 1)?;
    Tensor::from_entries(in_dims, out_dim, list).map_err(|e| ctx.err(field, e.to_string()))
}

fn parse_algebra(ctx: &Ctx, obj: &Map<String, Value>, field: &str) -> Result<Algebra> {
    check_fields(ctx, obj, field, &["kind", "dim", "basis", "products"])?;
    let kind_field = format!("{field}.kind");
    let kind: Kind = string(ctx, required(ctx, obj, field, "kind")?, &kind_field)?
        .parse()
        .map_err(|e: Error| ctx.err(&kind_field, e.to_string()))?;
    let dim = count(ctx, required(ctx, obj, field, "dim")?, &format!("{field}.dim"))?;
    let products_field = format!("{field}.products");
    let products = object(ctx, required(ctx, obj, field, "products")?, &products_field)?;
    for key in products.keys() {
        if !kind.slots().iter().any(|s| s.name() == key) {
            return Err(ctx.err(&format!("{products_field}.{key}"), format!("not a product of {kind} algebras")));
        }
    }
    let tensors = kind
        .slots()
        .iter()
        .map(|slot| match products.get(slot.name()) {
            Some(v) => tensor(ctx, v, &format!("{products_field}.{slot}"), vec![dim; kind.arity()], dim),
            None => Ok(Tensor::square(kind.arity(), dim)),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut a = Algebra::new(kind, dim, tensors).map_err(|e| ctx.err(field, e.to_string()))?;
    if let Some(b) = obj.get("basis") {
        let bf = format!("{field}.basis");
        let names = b
            .as_array()
            .ok_or_else(|| ctx.err(&bf, "expected an array of labels"))?
            .iter()
            .enumerate()
            .map(|(n, x)| string(ctx, x, &format!("{bf}[{n}]")))
            .collect::<Result<Vec<_>>>()?;
        a = a.with_basis(names).map_err(|e| ctx.err(&bf, e.to_string()))?;
    }
    Ok(a)
}

fn parse_map(ctx: &Ctx, obj: &Map<String, Value>, field: &str) -> Result<Matrix> {
    check_fields(ctx, obj, field, &["rows", "cols", "entries"])?;
    let rows = count(ctx, required(ctx, obj, field, "rows")?, &format!("{field}.rows"))?;
    let cols = count(ctx, required(ctx, obj, field, "cols")?, &format!("{field}.cols"))?;
    let ef = format!("{field}.entries");
    let list = entries(ctx, required(ctx, obj, field, "entries")?, &ef, 2)?;
    let mut m = Matrix::zeros(rows, cols);
    let mut seen = std::collections::BTreeSet::new();
    for (n, (idx, c)) in list.into_iter().enumerate() {
        let f = format!("{ef}[{n}]");
        if idx[0] >= rows || idx[1] >= cols {
            return Err(ctx.err(&f, format!("index ({}, {}) outside a {rows}x{cols} matrix", idx[0], idx[1])));
        }
        if !seen.insert((idx[0], idx[1])) {
            return Err(ctx.err(&f, "duplicate entry"));
        }
        m.set(idx[0], idx[1], c);
    }
    Ok(m)
}

fn parse_subspace(ctx: &Ctx, obj: &Map<String, Value>, field: &str) -> Result<Subspace> {
    check_fields(ctx, obj, field, &["ambient_dim", "basis"])?;
    let n = count(ctx, required(ctx, obj, field, "ambient_dim")?, &format!("{field}.ambient_dim"))?;
    let bf = format!("{field}.basis");
    let rows = required(ctx, obj, field, "basis")?
        .as_array()
        .ok_or_else(|| ctx.err(&bf, "expected an array of vectors"))?;
    let vectors = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let f = format!("{bf}[{r}]");
            let xs = row.as_array().ok_or_else(|| ctx.err(&f, "expected a vector"))?;
            if xs.len() != n {
                return Err(ctx.err(&f, format!("expected {n} coordinates, found {}", xs.len())));
            }
            xs.iter()
                .enumerate()
                .map(|(k, x)| scalar(ctx, x, &format!("{f}[{k}]")))
                .collect::<Result<Vector>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(n, &vectors).map_err(|e| ctx.err(&bf, e.to_string()))
}

fn parse_action(ctx: &Ctx, obj: &Map<String, Value>, field: &str) -> Result<Action> {
    check_fields(ctx, obj, field, &["kind", "acted", "acting", "cross"])?;
    let kind_field = format!("{field}.kind");
    let kind: Kind = string(ctx, required(ctx, obj, field, "kind")?, &kind_field)?
        .parse()
        .map_err(|e: Error| ctx.err(&kind_field, e.to_string()))?;
    let acted = nested(ctx, required(ctx, obj, field, "acted")?, &format!("{field}.acted"))?.into_algebra()?;
    let acting = nested(ctx, required(ctx, obj, field, "acting")?, &format!("{field}.acting"))?.into_algebra()?;
    for (name, a) in [("acted", &acted), ("acting", &acting)] {
        if a.kind() != kind {
            return Err(ctx.err(&format!("{field}.{name}"), format!("expected a {kind} algebra, found {}", a.kind())));
        }
    }
    let cf = format!("{field}.cross");
    let cross = object(ctx, required(ctx, obj, field, "cross")?, &cf)?;
    let lay = layout(kind);
    for key in cross.keys() {
        if !lay.iter().any(|c| c.name == key) {
            return Err(ctx.err(&format!("{cf}.{key}"), format!("not a cross tensor of {kind} actions")));
        }
    }
    let tensors = lay
        .iter()
        .map(|c| {
            let dims: Vec<usize> = c
                .pattern
                .iter()
                .map(|s| if *s == Space::Acted { acted.dim() } else { acting.dim() })
                .collect();
            match cross.get(c.name) {
                Some(v) => tensor(ctx, v, &format!("{cf}.{}", c.name), dims, acted.dim()),
                None => Ok(Tensor::zero(dims, acted.dim())),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Action::new(acted, acting, tensors).map_err(|e| ctx.err(field, e.to_string()))
}

fn parse_crossed(ctx: &Ctx, obj: &Map<String, Value>, field: &str) -> Result<CrossedModule> {
    check_fields(ctx, obj, field, &["action", "phi"])?;
    let action = nested(ctx, required(ctx, obj, field, "action")?, &format!("{field}.action"))?.into_action()?;
    let phi = nested(ctx, required(ctx, obj, field, "phi")?, &format!("{field}.phi"))?.into_map()?;
    CrossedModule::new(action, phi).map_err(|e| ctx.err(&format!("{field}.phi"), e.to_string()))
}

// ---------------------------------------------------------------- saving

fn rational(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

fn tensor_value(t: &Tensor) -> Value {
    Value::Array(
        t.entries()
            .map(|(k, c)| {
                let mut row: Vec<Value> = k.iter().map(|&i| Value::from(i)).collect();
                row.push(rational(c));
                Value::Array(row)
            })
            .collect(),
    )
}

fn envelope(schema: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), Value::from(schema));
    m
}

pub fn algebra_value(a: &Algebra) -> Value {
    let mut m = envelope(ALGEBRA);
    m.insert("kind".into(), Value::from(a.kind().name()));
    m.insert("dim".into(), Value::from(a.dim()));
    m.insert("basis".into(), Value::from(a.basis().to_vec()));
    let mut products = Map::new();
    for (slot, t) in a.slots().iter().zip(a.products()) {
        products.insert(slot.name().into(), tensor_value(t));
    }
    m.insert("products".into(), Value::Object(products));
    Value::Object(m)
}

pub fn map_value(f: &Matrix) -> Value {
    let mut m = envelope(MAP);
    m.insert("rows".into(), Value::from(f.rows()));
    m.insert("cols".into(), Value::from(f.cols()));
    let mut list: Vec<(usize, usize, &Scalar)> = f.nonzero_entries().collect();
    list.sort_by_key(|&(r, c, _)| (r, c));
    m.insert(
        "entries".into(),
        Value::Array(
            list.into_iter()
                .map(|(r, c, v)| Value::Array(vec![Value::from(r), Value::from(c), rational(v)]))
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn subspace_value(s: &Subspace) -> Value {
    let mut m = envelope(SUBSPACE);
    m.insert("ambient_dim".into(), Value::from(s.ambient_dim()));
    m.insert(
        "basis".into(),
        Value::Array(
            s.basis_vectors()
                .iter()
                .map(|v| Value::Array(v.iter().map(rational).collect()))
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn action_value(act: &Action) -> Value {
    let mut m = envelope(ACTION);
    m.insert("kind".into(), Value::from(act.kind().name()));
    m.insert("acted".into(), algebra_value(act.acted()));
    m.insert("acting".into(), algebra_value(act.acting()));
    let mut cross = Map::new();
    for (c, t) in act.layout().iter().zip(act.cross()) {
        cross.insert(c.name.into(), tensor_value(t));
    }
    m.insert("cross".into(), Value::Object(cross));
    Value::Object(m)
}

pub fn crossed_value(cm: &CrossedModule) -> Value {
    let mut m = envelope(CROSSED_MODULE);
    m.insert("action".into(), action_value(cm.action()));
    m.insert("phi".into(), map_value(cm.phi()));
    Value::Object(m)
}

pub fn to_value(doc: &Document) -> Value {
    let mut v = match &doc.payload {
        Payload::Algebra(a) => algebra_value(a),
        Payload::Map(f) => map_value(f),
        Payload::Subspace(s) => subspace_value(s),
        Payload::Action(a) => action_value(a),
        Payload::CrossedModule(c) => crossed_value(c),
    };
    if let (Some(note), Value::Object(m)) = (&doc.note, &mut v) {
        m.insert("note".into(), Value::from(note.as_str()));
    }
    v
}

/// Canonical text: two-space indentation, arrays of scalars on one line.
pub fn to_string(doc: &Document) -> String {
    let mut out = String::new();
    write_value(&to_value(doc), 0, &mut out);
    out.push('\n');
    out
}

pub fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                if i + 1 < m.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(a) if a.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                if i + 1 < a.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn save(doc: &Document, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_string(doc)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
