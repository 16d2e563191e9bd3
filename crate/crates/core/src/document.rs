//! The canonical JSON document format.
//!
//! Every file holds one object with the keys `dims`, `kind`, `metadata`,
//! `name`, `payload` and `scalars`. Tensors are sparse lists of their nonzero
//! entries, sorted by index:
//!
//! * products: `[i, j, k, c]` meaning `b_i ∗ b_j = … + c·b_k`;
//! * maps: `[i, j, c]` meaning `f(b_j) = … + c·b_i` (row, column);
//! * actions: as products, with the slot order of the action (`x ≻ v` is
//!   algebra × module, `v ≺ x` is module × algebra).
//!
//! Rationals are strings `"a"` or `"a/b"` in lowest terms, residues mod p
//! are integers in `[0, p)`. Serialization is canonical (sorted keys, sorted
//! entries, fixed layout), so equal documents are byte-identical and
//! `parse(serialize(d)) == d`.
//!
//! Parsing is lenient by default: non-canonical spellings, explicit zeros and
//! unsorted entries are accepted, normalized and reported as warnings. In
//! strict mode each of those is a violation. Structural problems (bad
//! indices, parity violations, duplicate entries, …) are always errors, and
//! all of them are reported together.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::algebra::{HomAlgebra, HomPreAlgebra};
use crate::bilinear::Bilinear;
use crate::bimodule::{AltBimodule, PreActions, PreBimodule};
use crate::error::{Error, Result, Violation};
use crate::laws::LawReport;
use crate::linear::{EvenMap, Vector};
use crate::operators::OperatorKind;
use crate::scalar::{Field, Scalar};
use crate::space::SuperSpace;

/// What a document holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Algebra(HomAlgebra),
    PreAlgebra(HomPreAlgebra),
    Map {
        map: EvenMap,
        /// Present for operator documents.
        operator: Option<OperatorKind>,
    },
    AltBimodule(AltBimodule),
    PreBimodule(PreBimodule),
    /// A check result; the payload is kept as JSON.
    Report {
        field: Field,
        dims: (usize, usize),
        payload: Value,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    /// Provenance of constructed instances and other free-form data.
    pub metadata: Map<String, Value>,
    pub body: Body,
}

/// How strictly [`Document::parse`] treats non-canonical input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParseMode {
    #[default]
    Lenient,
    StrictCanonical,
}

/// A parsed document together with the normalizations applied to it.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub document: Document,
    pub warnings: Vec<Violation>,
}

impl Document {
    pub fn new(name: impl Into<String>, body: Body) -> Self {
        Self {
            name: name.into(),
            metadata: Map::new(),
            body,
        }
    }

    pub fn algebra(name: impl Into<String>, a: HomAlgebra) -> Self {
        Self::new(name, Body::Algebra(a))
    }

    pub fn pre_algebra(name: impl Into<String>, p: HomPreAlgebra) -> Self {
        Self::new(name, Body::PreAlgebra(p))
    }

    pub fn map(name: impl Into<String>, map: EvenMap) -> Self {
        Self::new(name, Body::Map { map, operator: None })
    }

    pub fn operator(name: impl Into<String>, map: EvenMap, kind: OperatorKind) -> Self {
        Self::new(
            name,
            Body::Map {
                map,
                operator: Some(kind),
            },
        )
    }

    pub fn report(name: impl Into<String>, field: Field, dims: (usize, usize), report: &LawReport) -> Self {
        Self::new(
            name,
            Body::Report {
                field,
                dims,
                payload: report_to_json(report),
            },
        )
    }

    pub fn with_metadata(mut self, key: &str, value: Value) -> Self {
        self.metadata.insert(key.to_string(), value);
        self
    }

    pub fn kind(&self) -> &'static str {
        match &self.body {
            Body::Algebra(_) => "algebra",
            Body::PreAlgebra(_) => "pre-algebra",
            Body::Map { .. } => "map",
            Body::AltBimodule(_) | Body::PreBimodule(_) => "bimodule",
            Body::Report { .. } => "report",
        }
    }

    pub fn field(&self) -> Field {
        match &self.body {
            Body::Algebra(a) => a.field(),
            Body::PreAlgebra(p) => p.field(),
            Body::Map { map, .. } => map.field(),
            Body::AltBimodule(m) => m.field(),
            Body::PreBimodule(m) => m.field(),
            Body::Report { field, .. } => *field,
        }
    }

    /// Dimensions of the underlying space (the domain for maps, the module
    /// for bimodules).
    pub fn dims(&self) -> (usize, usize) {
        match &self.body {
            Body::Algebra(a) => a.space().dims(),
            Body::PreAlgebra(p) => p.space().dims(),
            Body::Map { map, .. } => map.domain().dims(),
            Body::AltBimodule(m) => m.module().dims(),
            Body::PreBimodule(m) => m.module().dims(),
            Body::Report { dims, .. } => *dims,
        }
    }

    fn wrong_kind(&self, expected: &str) -> Error {
        Error::InvalidParameter(format!(
            "{:?} is a {} document, expected {expected}",
            self.name,
            self.kind()
        ))
    }

    pub fn as_algebra(&self) -> Result<&HomAlgebra> {
        match &self.body {
            Body::Algebra(a) => Ok(a),
            _ => Err(self.wrong_kind("an algebra")),
        }
    }

    pub fn as_pre_algebra(&self) -> Result<&HomPreAlgebra> {
        match &self.body {
            Body::PreAlgebra(p) => Ok(p),
            _ => Err(self.wrong_kind("a pre-algebra")),
        }
    }

    pub fn as_map(&self) -> Result<&EvenMap> {
        match &self.body {
            Body::Map { map, .. } => Ok(map),
            _ => Err(self.wrong_kind("a map")),
        }
    }

    pub fn operator_kind(&self) -> Option<&OperatorKind> {
        match &self.body {
            Body::Map { operator, .. } => operator.as_ref(),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let payload = match &self.body {
            Body::Algebra(a) => algebra_payload(a),
            Body::PreAlgebra(p) => pre_payload(p),
            Body::Map { map, operator } => {
                let mut o = Map::new();
                o.insert("codomain".into(), dims_json(map.codomain().dims()));
                o.insert("entries".into(), map_entries(map));
                if let Some(kind) = operator {
                    let mut k = Map::new();
                    k.insert("kind".into(), kind.name().into());
                    if let Some(w) = kind.weight() {
                        k.insert("weight".into(), scalar_json(w));
                    }
                    o.insert("operator".into(), Value::Object(k));
                }
                Value::Object(o)
            }
            Body::AltBimodule(m) => json!({
                "type": "alt",
                "base": Document::algebra("base", m.base().clone()).to_json(),
                "beta": map_entries(m.beta()),
                "left_succ": product_entries(m.left_action()),
                "right_prec": product_entries(m.right_action()),
            }),
            Body::PreBimodule(m) => {
                let acts = m.actions();
                json!({
                    "type": "pre",
                    "base": Document::pre_algebra("base", m.base().clone()).to_json(),
                    "beta": map_entries(m.beta()),
                    "left_prec": product_entries(&acts.left_prec),
                    "left_succ": product_entries(&acts.left_succ),
                    "right_prec": product_entries(&acts.right_prec),
                    "right_succ": product_entries(&acts.right_succ),
                })
            }
            Body::Report { payload, .. } => payload.clone(),
        };
        json!({
            "dims": dims_json(self.dims()),
            "kind": self.kind(),
            "metadata": Value::Object(self.metadata.clone()),
            "name": self.name,
            "payload": payload,
            "scalars": field_json(self.field()),
        })
    }

    /// The canonical text of the document, newline-terminated.
    pub fn to_canonical_string(&self) -> String {
        canonical_json(&self.to_json())
    }

    pub fn parse(text: &str, mode: ParseMode) -> Result<Parsed> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        Self::from_json(&value, mode)
    }

    pub fn from_json(value: &Value, mode: ParseMode) -> Result<Parsed> {
        let mut p = Parser {
            mode,
            violations: Vec::new(),
            warnings: Vec::new(),
        };
        let document = p.document(value, "")?;
        match document {
            Some(document) if p.violations.is_empty() => Ok(Parsed {
                document,
                warnings: p.warnings,
            }),
            _ => Err(Error::Validation(p.violations)),
        }
    }
}

/// The JSON form of a law report.
pub fn report_to_json(r: &LawReport) -> Value {
    let identities: Vec<Value> = r
        .identities
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "arity": s.arity,
                "tuples": s.tuples,
                "failures": s.failures,
            })
        })
        .collect();
    let witness = match &r.witness {
        None => Value::Null,
        Some(w) => json!({
            "identity": w.identity,
            "indices": w.indices,
            "parities": w.parities.iter().map(|p| p.as_u8()).collect::<Vec<_>>(),
            "residual": vector_entries(&w.residual),
        }),
    };
    json!({
        "law": r.law,
        "passed": r.passed,
        "tuples_checked": r.tuples_checked,
        "identities": identities,
        "witness": witness,
        "notes": r.notes,
    })
}

pub fn scalar_json(c: &Scalar) -> Value {
    match c {
        Scalar::Rational(r) => Value::String(r.to_string()),
        Scalar::Prime { value, .. } => Value::from(*value),
    }
}

fn field_json(f: Field) -> Value {
    match f {
        Field::Rational => Value::from("Q"),
        Field::Prime(p) => json!({ "Fp": p }),
    }
}

fn dims_json((n0, n1): (usize, usize)) -> Value {
    json!([n0, n1])
}

fn product_entries(b: &Bilinear) -> Value {
    Value::Array(
        b.nonzero_entries()
            .map(|(i, j, k, c)| json!([i, j, k, scalar_json(c)]))
            .collect(),
    )
}

fn map_entries(m: &EvenMap) -> Value {
    Value::Array(
        m.nonzero_entries()
            .map(|(i, j, c)| json!([i, j, scalar_json(c)]))
            .collect(),
    )
}

fn vector_entries(v: &Vector) -> Value {
    Value::Array(v.support().map(|(k, c)| json!([k, scalar_json(c)])).collect())
}

fn algebra_payload(a: &HomAlgebra) -> Value {
    json!({
        "alpha": map_entries(a.alpha()),
        "product": product_entries(a.product()),
    })
}

fn pre_payload(p: &HomPreAlgebra) -> Value {
    json!({
        "alpha": map_entries(p.alpha()),
        "prec": product_entries(p.prec_product()),
        "succ": product_entries(p.succ_product()),
    })
}

/// Pretty-prints JSON with two-space indentation, keeping arrays and
/// objects that contain no containers on one line.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Array(items) if items.iter().all(is_leaf) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            let _ = write!(out, "[{}]", parts.join(", "));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (n, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, item, indent + 1);
                out.push_str(if n + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (n, (k, item)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::from(k.as_str()));
                write_value(out, item, indent + 1);
                out.push_str(if n + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}

struct Parser {
    mode: ParseMode,
    violations: Vec<Violation>,
    warnings: Vec<Violation>,
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

impl Parser {
    fn fail(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation::new(location, message));
    }

    /// A canonical-form problem: a warning in lenient mode, an error in
    /// strict mode.
    fn noncanonical(&mut self, location: impl Into<String>, message: impl Into<String>) {
        let v = Violation::new(location, message);
        match self.mode {
            ParseMode::Lenient => self.warnings.push(v),
            ParseMode::StrictCanonical => self.violations.push(v),
        }
    }

    fn document(&mut self, v: &Value, at: &str) -> Result<Option<Document>> {
        let Some(obj) = v.as_object() else {
            self.fail(at_or_root(at), "document must be a JSON object");
            return Ok(None);
        };
        for key in obj.keys() {
            if !["dims", "kind", "metadata", "name", "payload", "scalars"].contains(&key.as_str()) {
                self.fail(join(at, key), "unknown key");
            }
        }
        let field = match obj.get("scalars") {
            None => {
                self.fail(join(at, "scalars"), "missing");
                None
            }
            Some(s) => self.field(s, &join(at, "scalars"))?,
        };
        let dims = self.dims(obj.get("dims"), &join(at, "dims"));
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(_) => {
                self.fail(join(at, "name"), "must be a string");
                String::new()
            }
            None => {
                self.fail(join(at, "name"), "missing");
                String::new()
            }
        };
        let metadata = match obj.get("metadata") {
            Some(Value::Object(m)) => m.clone(),
            None => {
                self.noncanonical(join(at, "metadata"), "missing, assumed empty");
                Map::new()
            }
            Some(_) => {
                self.fail(join(at, "metadata"), "must be an object");
                Map::new()
            }
        };
        let kind = match obj.get("kind") {
            Some(Value::String(s)) => s.as_str(),
            _ => {
                self.fail(join(at, "kind"), "missing or not a string");
                return Ok(None);
            }
        };
        let (Some(field), Some(dims)) = (field, dims) else {
            return Ok(None);
        };
        let payload_at = join(at, "payload");
        let Some(payload) = obj.get("payload").and_then(Value::as_object) else {
            self.fail(&payload_at, "missing or not an object");
            return Ok(None);
        };
        let space = SuperSpace::new(dims.0, dims.1);
        let cx = Ctx { field, at: payload_at.clone() };
        let body = match kind {
            "algebra" => {
                self.allow_keys(payload, &["alpha", "product"], &payload_at);
                let alpha = self.endo(&cx, payload, "alpha", space);
                let product = self.bilinear(&cx, payload, "product", space, space, space);
                match (alpha, product) {
                    (Some(alpha), Some(mu)) => self.built(HomAlgebra::new(mu, alpha), &payload_at).map(Body::Algebra),
                    _ => None,
                }
            }
            "pre-algebra" => {
                self.allow_keys(payload, &["alpha", "prec", "succ"], &payload_at);
                let alpha = self.endo(&cx, payload, "alpha", space);
                let prec = self.bilinear(&cx, payload, "prec", space, space, space);
                let succ = self.bilinear(&cx, payload, "succ", space, space, space);
                match (alpha, prec, succ) {
                    (Some(alpha), Some(l), Some(r)) => self
                        .built(HomPreAlgebra::new(l, r, alpha), &payload_at)
                        .map(Body::PreAlgebra),
                    _ => None,
                }
            }
            "map" => {
                self.allow_keys(payload, &["codomain", "entries", "operator"], &payload_at);
                let codomain = match payload.get("codomain") {
                    None => {
                        self.noncanonical(join(&payload_at, "codomain"), "missing, assumed equal to dims");
                        Some(dims)
                    }
                    c => self.dims(c, &join(&payload_at, "codomain")),
                };
                let operator = match payload.get("operator") {
                    None => None,
                    Some(o) => self.operator(&cx, o, &join(&payload_at, "operator")),
                };
                let map = codomain.and_then(|c| self.map(&cx, payload, "entries", space, SuperSpace::new(c.0, c.1)));
                map.map(|map| Body::Map { map, operator })
            }
            "bimodule" => self.bimodule(&cx, payload, space)?,
            "report" => Some(Body::Report {
                field,
                dims,
                payload: Value::Object(payload.clone()),
            }),
            other => {
                self.fail(join(at, "kind"), format!("unknown kind {other:?}"));
                None
            }
        };
        Ok(body.map(|body| Document { name, metadata, body }))
    }

    fn allow_keys(&mut self, obj: &Map<String, Value>, allowed: &[&str], at: &str) {
        for key in obj.keys() {
            if !allowed.contains(&key.as_str()) {
                self.fail(join(at, key), "unknown key");
            }
        }
    }

    fn built<T>(&mut self, r: Result<T>, at: &str) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(Error::Validation(vs)) => {
                for v in vs {
                    self.fail(join(at, &v.location), v.message);
                }
                None
            }
            Err(e) => {
                self.fail(at, e.to_string());
                None
            }
        }
    }

    fn field(&mut self, v: &Value, at: &str) -> Result<Option<Field>> {
        match v {
            Value::String(s) if s == "Q" => Ok(Some(Field::Rational)),
            Value::Object(o) if o.len() == 1 && o.contains_key("Fp") => match o["Fp"].as_u64() {
                Some(2) => Err(Error::CharacteristicTwo),
                Some(p) => match Field::prime(p) {
                    Ok(f) => Ok(Some(f)),
                    Err(e) => {
                        self.fail(at, e.to_string());
                        Ok(None)
                    }
                },
                None => {
                    self.fail(at, "Fp must be a positive integer");
                    Ok(None)
                }
            },
            _ => {
                self.fail(at, "expected \"Q\" or {\"Fp\": p}");
                Ok(None)
            }
        }
    }

    fn dims(&mut self, v: Option<&Value>, at: &str) -> Option<(usize, usize)> {
        let parsed = v.and_then(Value::as_array).and_then(|a| match a.as_slice() {
            [n0, n1] => Some((n0.as_u64()? as usize, n1.as_u64()? as usize)),
            _ => None,
        });
        if parsed.is_none() {
            self.fail(at, "expected [n0, n1] with nonnegative integers");
        }
        parsed
    }

    fn scalar(&mut self, cx: &Ctx, v: &Value, at: &str) -> Option<Scalar> {
        let field = cx.field;
        match (field, v) {
            (Field::Rational, Value::String(s)) => match field.parse_canonical(s) {
                Ok(c) => Some(c),
                Err(strict) => match field.parse(s) {
                    Ok(c) => {
                        self.noncanonical(at, format!("{}; read as {c}", error_text(&strict)));
                        Some(c)
                    }
                    Err(e) => {
                        self.fail(at, error_text(&e));
                        None
                    }
                },
            },
            (Field::Rational, Value::Number(n)) if n.is_i64() || n.is_u64() => {
                self.noncanonical(at, "rational written as a JSON number");
                field.parse(&n.to_string()).ok()
            }
            (Field::Prime(p), Value::Number(n)) if n.is_i64() || n.is_u64() => {
                let c = field.parse(&n.to_string()).ok()?;
                if n.as_u64().map_or(true, |x| x >= p) {
                    self.noncanonical(at, format!("residue outside [0, {p}); read as {c}"));
                }
                Some(c)
            }
            (Field::Prime(_), Value::String(s)) => match field.parse(s) {
                Ok(c) => {
                    self.noncanonical(at, "residue written as a string");
                    Some(c)
                }
                Err(e) => {
                    self.fail(at, error_text(&e));
                    None
                }
            },
            _ => {
                self.fail(at, format!("not a scalar of {field}"));
                None
            }
        }
    }

    /// Reads a list of `[indices…, c]` entries with the given index bounds.
    /// Returns the nonzero entries, or `None` after recording violations.
    fn entries(
        &mut self,
        cx: &Ctx,
        obj: &Map<String, Value>,
        key: &str,
        bounds: &[usize],
    ) -> Option<Vec<(Vec<usize>, Scalar)>> {
        let at = join(&cx.at, key);
        let Some(list) = obj.get(key) else {
            self.fail(at, "missing");
            return None;
        };
        let Some(list) = list.as_array() else {
            self.fail(at, "expected a list of entries");
            return None;
        };
        let before = self.violations.len();
        let mut out: Vec<(Vec<usize>, Scalar)> = Vec::with_capacity(list.len());
        let mut unsorted = false;
        for (n, e) in list.iter().enumerate() {
            let eat = format!("{at}[{n}]");
            let Some(parts) = e.as_array().filter(|p| p.len() == bounds.len() + 1) else {
                self.fail(eat, format!("expected {} indices and a scalar", bounds.len()));
                continue;
            };
            let mut idx = Vec::with_capacity(bounds.len());
            for (slot, (x, &bound)) in parts.iter().zip(bounds).enumerate() {
                match x.as_u64().map(|i| i as usize) {
                    Some(i) if i < bound => idx.push(i),
                    _ => self.fail(&eat, format!("index {x} in slot {slot} out of range 0..{bound}")),
                }
            }
            let c = self.scalar(cx, &parts[bounds.len()], &eat);
            if idx.len() != bounds.len() {
                continue;
            }
            let Some(c) = c else { continue };
            if let Some((last, _)) = out.last() {
                if *last == idx {
                    self.fail(&eat, format!("duplicate entry {idx:?}"));
                    continue;
                }
                if *last > idx {
                    unsorted = true;
                }
            }
            if c.is_zero() {
                self.noncanonical(&eat, "explicit zero entry");
                continue;
            }
            out.push((idx, c));
        }
        if unsorted {
            self.noncanonical(&at, "entries not sorted by index");
            out.sort_by(|a, b| a.0.cmp(&b.0));
            for w in out.windows(2) {
                if w[0].0 == w[1].0 {
                    self.fail(&at, format!("duplicate entry {:?}", w[0].0));
                }
            }
        }
        (self.violations.len() == before).then_some(out)
    }

    fn bilinear(
        &mut self,
        cx: &Ctx,
        obj: &Map<String, Value>,
        key: &str,
        left: SuperSpace,
        right: SuperSpace,
        out: SuperSpace,
    ) -> Option<Bilinear> {
        let entries = self.entries(cx, obj, key, &[left.dim(), right.dim(), out.dim()])?;
        let b = Bilinear::from_entries(
            left,
            right,
            out,
            cx.field,
            entries.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)),
        );
        self.built(b, &join(&cx.at, key))
    }

    fn map(
        &mut self,
        cx: &Ctx,
        obj: &Map<String, Value>,
        key: &str,
        domain: SuperSpace,
        codomain: SuperSpace,
    ) -> Option<EvenMap> {
        let entries = self.entries(cx, obj, key, &[codomain.dim(), domain.dim()])?;
        let mut dense = vec![cx.field.zero(); domain.dim() * codomain.dim()];
        for (i, c) in entries {
            dense[i[0] * domain.dim() + i[1]] = c;
        }
        let m = EvenMap::new(domain, codomain, cx.field, dense);
        self.built(m, &join(&cx.at, key))
    }

    fn endo(&mut self, cx: &Ctx, obj: &Map<String, Value>, key: &str, space: SuperSpace) -> Option<EvenMap> {
        self.map(cx, obj, key, space, space)
    }

    fn operator(&mut self, cx: &Ctx, v: &Value, at: &str) -> Option<OperatorKind> {
        let Some(o) = v.as_object() else {
            self.fail(at, "expected {\"kind\": …, \"weight\": …}");
            return None;
        };
        self.allow_keys(o, &["kind", "weight"], at);
        let Some(name) = o.get("kind").and_then(Value::as_str) else {
            self.fail(join(at, "kind"), "missing or not a string");
            return None;
        };
        let weight = match o.get("weight") {
            None => None,
            Some(w) => Some(self.scalar(cx, w, &join(at, "weight"))?),
        };
        match OperatorKind::from_parts(name, weight) {
            Ok(k) => Some(k),
            Err(e) => {
                self.fail(at, error_text(&e));
                None
            }
        }
    }

    fn bimodule(&mut self, cx: &Ctx, payload: &Map<String, Value>, module: SuperSpace) -> Result<Option<Body>> {
        let at = cx.at.clone();
        let ty = payload.get("type").and_then(Value::as_str).unwrap_or("");
        let (keys, base_kind): (&[&str], _) = match ty {
            "alt" => (&["type", "base", "beta", "left_succ", "right_prec"], "algebra"),
            "pre" => (
                &["type", "base", "beta", "left_prec", "left_succ", "right_prec", "right_succ"],
                "pre-algebra",
            ),
            _ => {
                self.fail(join(&at, "type"), "expected \"alt\" or \"pre\"");
                return Ok(None);
            }
        };
        self.allow_keys(payload, keys, &at);
        let Some(base_value) = payload.get("base") else {
            self.fail(join(&at, "base"), "missing");
            return Ok(None);
        };
        let base = self.document(base_value, &join(&at, "base"))?;
        let Some(base) = base else { return Ok(None) };
        if base.field() != cx.field {
            self.fail(join(&at, "base.scalars"), "base is over a different field");
            return Ok(None);
        }
        if base.kind() != base_kind {
            self.fail(join(&at, "base.kind"), format!("a {ty} bimodule needs a {base_kind} base"));
            return Ok(None);
        }
        let a = SuperSpace::new(base.dims().0, base.dims().1);
        let beta = self.endo(cx, payload, "beta", module);
        let body = match base.body {
            Body::Algebra(base) => {
                let l = self.bilinear(cx, payload, "left_succ", a, module, module);
                let r = self.bilinear(cx, payload, "right_prec", module, a, module);
                match (beta, l, r) {
                    (Some(beta), Some(l), Some(r)) => self
                        .built(AltBimodule::new(base, beta, l, r), &at)
                        .map(Body::AltBimodule),
                    _ => None,
                }
            }
            Body::PreAlgebra(base) => {
                let lp = self.bilinear(cx, payload, "left_prec", a, module, module);
                let ls = self.bilinear(cx, payload, "left_succ", a, module, module);
                let rp = self.bilinear(cx, payload, "right_prec", module, a, module);
                let rs = self.bilinear(cx, payload, "right_succ", module, a, module);
                match (beta, lp, ls, rp, rs) {
                    (Some(beta), Some(left_prec), Some(left_succ), Some(right_prec), Some(right_succ)) => {
                        let acts = PreActions {
                            left_prec,
                            left_succ,
                            right_prec,
                            right_succ,
                        };
                        self.built(PreBimodule::new(base, beta, acts), &at)
                            .map(Body::PreBimodule)
                    }
                    _ => None,
                }
            }
            _ => unreachable!("base kind checked above"),
        };
        Ok(body)
    }
}

struct Ctx {
    field: Field,
    at: String,
}

fn at_or_root(at: &str) -> String {
    if at.is_empty() {
        "(root)".into()
    } else {
        at.into()
    }
}

/// The message of an error without the generic prefix of its variant.
fn error_text(e: &Error) -> String {
    match e {
        Error::Parse(s) | Error::InvalidParameter(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn roundtrip(d: &Document) {
        let text = d.to_canonical_string();
        let parsed = Document::parse(&text, ParseMode::StrictCanonical).unwrap();
        assert!(parsed.warnings.is_empty());
        assert_eq!(&parsed.document, d);
        assert_eq!(parsed.document.to_canonical_string(), text);
    }

    #[test]
    fn grassmann_document_has_three_product_entries() {
        let d = Document::algebra("grassmann1", corpus::grassmann1(Field::Rational));
        let v = d.to_json();
        assert_eq!(v["dims"], json!([1, 1]));
        assert_eq!(v["payload"]["product"].as_array().unwrap().len(), 3);
        roundtrip(&d);
    }

    #[test]
    fn every_kind_round_trips() {
        let q = Field::Rational;
        let f5 = Field::prime(5).unwrap();
        roundtrip(&Document::algebra("o", corpus::octonions(f5).unwrap()));
        roundtrip(&Document::pre_algebra("s", corpus::graded_split_twisted(q).unwrap()));
        roundtrip(&Document::operator(
            "r",
            corpus::integration(q, 3).unwrap(),
            OperatorKind::RotaBaxter(q.zero()),
        ));
        let a = corpus::grassmann1_twisted(q).unwrap();
        roundtrip(&Document::new("m", Body::AltBimodule(AltBimodule::regular(&a).unwrap())));
        let p = corpus::p3_split(q).unwrap();
        roundtrip(&Document::new("pm", Body::PreBimodule(PreBimodule::regular(&p).unwrap())));
        let report = crate::laws::check_product_law(&corpus::octonions(q).unwrap(), crate::ProductLaw::HomAssociative);
        roundtrip(&Document::report("r", q, (8, 0), &report).with_metadata("input", json!("o.json")));
    }

    #[test]
    fn layout_is_fixed() {
        let d = Document::algebra("g", corpus::grassmann1(Field::Rational));
        let expected = r#"{
  "dims": [1, 1],
  "kind": "algebra",
  "metadata": {},
  "name": "g",
  "payload": {
    "alpha": [
      [0, 0, "1"],
      [1, 1, "1"]
    ],
    "product": [
      [0, 0, 0, "1"],
      [0, 1, 1, "1"],
      [1, 0, 1, "1"]
    ]
  },
  "scalars": "Q"
}
"#;
        assert_eq!(d.to_canonical_string(), expected);
    }

    const LOOSE: &str = r#"{"name":"g","kind":"algebra","scalars":"Q","dims":[1,1],
        "payload":{"alpha":[[1,1,"1"],[0,0,"2/2"]],
                   "product":[[0,0,0,"2/4"],[0,1,1,1],[1,0,1,"1"],[1,1,0,"0"]]}}"#;

    #[test]
    fn lenient_mode_normalizes_with_warnings() {
        let parsed = Document::parse(LOOSE, ParseMode::Lenient).unwrap();
        let msgs: Vec<String> = parsed.warnings.iter().map(ToString::to_string).collect();
        assert!(msgs.iter().any(|m| m.contains("rational not in lowest terms")), "{msgs:?}");
        assert!(msgs.iter().any(|m| m.contains("not sorted")));
        assert!(msgs.iter().any(|m| m.contains("explicit zero")));
        let a = parsed.document.as_algebra().unwrap();
        assert_eq!(a.product().coeff(0, 0, 0), &Field::Rational.ratio(1, 2).unwrap());
        assert!(a.alpha().is_identity());
    }

    #[test]
    fn strict_mode_lists_every_problem() {
        let Err(Error::Validation(vs)) = Document::parse(LOOSE, ParseMode::StrictCanonical) else {
            panic!("strict parse must fail");
        };
        assert!(vs.len() >= 5, "{vs:?}");
        assert!(vs.iter().any(|v| v.message.contains("rational not in lowest terms")
            && v.location == "payload.product[0]"));
    }

    #[test]
    fn characteristic_two_is_rejected() {
        let text = r#"{"name":"z","kind":"algebra","scalars":{"Fp":2},"dims":[1,0],"metadata":{},
            "payload":{"alpha":[],"product":[]}}"#;
        let err = Document::parse(text, ParseMode::Lenient).unwrap_err();
        assert_eq!(err.to_string(), "characteristic 2 unsupported");
    }

    #[test]
    fn structural_violations_are_collected() {
        let text = r#"{"name":"bad","kind":"algebra","scalars":"Q","dims":[1,1],"metadata":{},
            "payload":{"alpha":[[0,1,"1"]],"product":[[0,0,1,"1"],[0,0,1,"2"],[5,0,0,"1"]]}}"#;
        let Err(Error::Validation(vs)) = Document::parse(text, ParseMode::Lenient) else {
            panic!("must fail");
        };
        let text: Vec<String> = vs.iter().map(ToString::to_string).collect();
        assert!(text.iter().any(|m| m.contains("duplicate")), "{text:?}");
        assert!(text.iter().any(|m| m.contains("out of range")), "{text:?}");
        assert!(text.iter().any(|m| m.contains("even map mixes parities")), "{text:?}");
    }

    #[test]
    fn parity_violations_in_products_are_located() {
        let text = r#"{"name":"bad","kind":"algebra","scalars":"Q","dims":[1,1],"metadata":{},
            "payload":{"alpha":[],"product":[[0,0,1,"1"]]}}"#;
        let Err(Error::Validation(vs)) = Document::parse(text, ParseMode::Lenient) else {
            panic!("must fail");
        };
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].location, "payload.product.(0,0,1)");
        assert!(vs[0].message.contains("parity violation"));
    }

    #[test]
    fn bimodule_base_must_match_type() {
        let q = Field::Rational;
        let m = AltBimodule::regular(&corpus::grassmann1(q)).unwrap();
        let mut v = Document::new("m", Body::AltBimodule(m)).to_json();
        v["payload"]["type"] = json!("pre");
        assert!(Document::from_json(&v, ParseMode::Lenient).is_err());
    }
}
