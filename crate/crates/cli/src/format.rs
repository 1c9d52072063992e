//! JSON files for structures, actions and split extensions.
//!
//! Output is canonical: keys sorted, sparse triples sorted, zeros omitted and
//! scalars in lowest terms, so equal data serializes to equal bytes.

use bialg::{ActionData, Bialgebra, Field, FieldSpec, LinMap, Space, SplitExtension};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("key `{key}`: {message}")]
    Key { key: String, message: String },
    #[error(transparent)]
    Library(#[from] bialg::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Structure,
    Action,
    Extension,
}

fn bad(key: &str, message: impl Into<String>) -> FormatError {
    FormatError::Key {
        key: if key.is_empty() {
            "<root>".into()
        } else {
            key.into()
        },
        message: message.into(),
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

fn get<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value> {
    object(v, path)?
        .get(key)
        .ok_or_else(|| bad(&join(path, key), "missing"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(path, "expected an array"))
}

fn index(v: &Value, path: &str, bound: usize) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| bad(path, "expected a nonnegative integer"))? as usize;
    if i >= bound {
        return Err(bad(path, format!("index {i} out of range 0..{bound}")));
    }
    Ok(i)
}

fn scalar<K: Field>(v: &Value, path: &str) -> Result<K> {
    match v {
        Value::String(s) => K::parse_scalar(s).map_err(|e| bad(path, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(K::from_i64)
            .ok_or_else(|| bad(path, "expected an integer or a scalar string")),
        _ => Err(bad(path, "expected a scalar")),
    }
}

pub fn parse(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

pub fn kind(v: &Value) -> Result<FileKind> {
    let obj = object(v, "")?;
    if obj.contains_key("act") {
        Ok(FileKind::Action)
    } else if obj.contains_key("kappa") {
        Ok(FileKind::Extension)
    } else if obj.contains_key("mul") {
        Ok(FileKind::Structure)
    } else {
        Err(bad("", "not a structure, action or extension file"))
    }
}

pub fn field(v: &Value) -> Result<FieldSpec> {
    field_at(v, "")
}

fn field_at(v: &Value, path: &str) -> Result<FieldSpec> {
    let f = get(v, path, "field")?;
    let path = join(path, "field");
    let kind = get(f, &path, "kind")?
        .as_str()
        .ok_or_else(|| bad(&join(&path, "kind"), "expected a string"))?;
    match kind {
        "Q" => Ok(FieldSpec::Rationals),
        "Fp" => {
            let p = get(f, &path, "p")?
                .as_u64()
                .and_then(|p| u32::try_from(p).ok())
                .ok_or_else(|| bad(&join(&path, "p"), "expected a prime"))?;
            FieldSpec::prime(p).map_err(|e| bad(&join(&path, "p"), e.to_string()))
        }
        other => Err(bad(
            &join(&path, "kind"),
            format!("unknown field `{other}`"),
        )),
    }
}

pub fn write_field(spec: FieldSpec) -> Value {
    match spec {
        FieldSpec::Rationals => json!({ "kind": "Q" }),
        FieldSpec::PrimeField(p) => json!({ "kind": "Fp", "p": p }),
    }
}

fn dense<K: Field>(v: &Value, path: &str, space: &Space) -> Result<LinMap<K>> {
    let n = space.dim();
    let rows = array(v, path)?;
    if rows.len() != n {
        return Err(bad(path, format!("expected {n} rows")));
    }
    let mut out = Vec::with_capacity(n);
    for (r, row) in rows.iter().enumerate() {
        let p = format!("{path}[{r}]");
        let row = array(row, &p)?;
        if row.len() != n {
            return Err(bad(&p, format!("expected {n} entries")));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(c, x)| scalar(x, &format!("{p}[{c}]")))
            .collect::<Result<Vec<K>>>()?;
        out.push(parsed);
    }
    Ok(LinMap::from_dense(space.clone(), space.clone(), &out)?)
}

fn vector<K: Field>(v: &Value, path: &str, n: usize) -> Result<Vec<K>> {
    let items = array(v, path)?;
    if items.len() != n {
        return Err(bad(path, format!("expected {n} entries")));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(x, &format!("{path}[{i}]")))
        .collect()
}

/// `[i, j, k, s]` entries, returned as `((i, j, k), s)`.
fn triples<K: Field>(v: &Value, path: &str, n: usize) -> Result<Vec<([usize; 3], K)>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(t, item)| {
            let p = format!("{path}[{t}]");
            let item = array(item, &p)?;
            if item.len() != 4 {
                return Err(bad(&p, "expected [i, j, k, scalar]"));
            }
            let ijk = [
                index(&item[0], &p, n)?,
                index(&item[1], &p, n)?,
                index(&item[2], &p, n)?,
            ];
            Ok((ijk, scalar(&item[3], &p)?))
        })
        .collect()
}

pub fn parse_structure<K: Field>(v: &Value, path: &str) -> Result<Bialgebra<K>> {
    let spec = field_at(v, path)?;
    if spec != K::spec() {
        return Err(bad(
            &join(path, "field"),
            format!("expected {}, found {spec}", K::spec()),
        ));
    }
    let name = match object(v, path)?.get("name") {
        Some(n) => n
            .as_str()
            .ok_or_else(|| bad(&join(path, "name"), "expected a string"))?
            .to_string(),
        None => "A".to_string(),
    };
    let dim = get(v, path, "dim")?
        .as_u64()
        .filter(|d| *d > 0)
        .ok_or_else(|| bad(&join(path, "dim"), "expected a positive integer"))?
        as usize;
    let basis = array(get(v, path, "basis")?, &join(path, "basis"))?;
    if basis.len() != dim {
        return Err(bad(&join(path, "basis"), format!("expected {dim} labels")));
    }
    let labels = basis
        .iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad(&join(path, "basis"), "labels must be strings"))
        })
        .collect::<Result<Vec<_>>>()?;
    let space = Space::new(name.clone(), labels);
    let aa = space.tensor(&space);
    let unit = Space::unit();

    let mul = triples::<K>(get(v, path, "mul")?, &join(path, "mul"), dim)?;
    let m = LinMap::from_triplets(
        aa.clone(),
        space.clone(),
        mul.into_iter().map(|([i, j, k], s)| (k, i * dim + j, s)),
    )?;
    let comul = triples::<K>(get(v, path, "comul")?, &join(path, "comul"), dim)?;
    let delta = LinMap::from_triplets(
        space.clone(),
        aa,
        comul.into_iter().map(|([i, j, k], s)| (j * dim + k, i, s)),
    )?;
    let u = vector::<K>(get(v, path, "unit")?, &join(path, "unit"), dim)?;
    let u = LinMap::from_triplets(
        unit.clone(),
        space.clone(),
        u.into_iter().enumerate().map(|(r, s)| (r, 0, s)),
    )?;
    let e = vector::<K>(get(v, path, "counit")?, &join(path, "counit"), dim)?;
    let e = LinMap::from_triplets(
        space.clone(),
        unit,
        e.into_iter().enumerate().map(|(c, s)| (0, c, s)),
    )?;
    let a = Bialgebra::new(name, space.clone(), m, u, delta, e)?;

    let obj = object(v, path)?;
    let left = obj
        .get("antipode_left")
        .map(|s| dense::<K>(s, &join(path, "antipode_left"), &space))
        .transpose()?;
    let right = obj
        .get("antipode_right")
        .map(|s| dense::<K>(s, &join(path, "antipode_right"), &space))
        .transpose()?;
    Ok(match (left, right) {
        (Some(l), Some(r)) => a.with_antipodes(l, r)?,
        (Some(s), None) | (None, Some(s)) => a.with_antipode(s)?,
        (None, None) => a,
    })
}

pub fn parse_map<K: Field>(
    v: &Value,
    path: &str,
    domain: &Space,
    codomain: &Space,
) -> Result<LinMap<K>> {
    let (rows, cols) = (codomain.dim(), domain.dim());
    for (key, expected) in [("rows", rows), ("cols", cols)] {
        let found = get(v, path, key)?.as_u64();
        if found != Some(expected as u64) {
            return Err(bad(&join(path, key), format!("expected {expected}")));
        }
    }
    let p = join(path, "entries");
    let entries = array(get(v, path, "entries")?, &p)?
        .iter()
        .enumerate()
        .map(|(t, item)| {
            let q = format!("{p}[{t}]");
            let item = array(item, &q)?;
            if item.len() != 3 {
                return Err(bad(&q, "expected [row, col, scalar]"));
            }
            Ok((
                index(&item[0], &q, rows)?,
                index(&item[1], &q, cols)?,
                scalar(&item[2], &q)?,
            ))
        })
        .collect::<Result<Vec<(usize, usize, K)>>>()?;
    Ok(LinMap::from_triplets(
        domain.clone(),
        codomain.clone(),
        entries,
    )?)
}

pub fn parse_action<K: Field>(v: &Value) -> Result<ActionData<K>> {
    let acting = parse_structure::<K>(get(v, "", "acting")?, "acting")?;
    let acted = parse_structure::<K>(get(v, "", "acted")?, "acted")?;
    let dom = acting.space().tensor(acted.space());
    let act = parse_map(get(v, "", "act")?, "act", &dom, acted.space())?;
    Ok(ActionData::new(acting, acted, act)?)
}

pub fn parse_extension<K: Field>(v: &Value) -> Result<SplitExtension<K>> {
    let x = parse_structure::<K>(get(v, "", "x")?, "x")?;
    let a = parse_structure::<K>(get(v, "", "a")?, "a")?;
    let b = parse_structure::<K>(get(v, "", "b")?, "b")?;
    let (xs, as_, bs) = (x.space().clone(), a.space().clone(), b.space().clone());
    let kappa = parse_map(get(v, "", "kappa")?, "kappa", &xs, &as_)?;
    let alpha = parse_map(get(v, "", "alpha")?, "alpha", &as_, &bs)?;
    let e = parse_map(get(v, "", "e")?, "e", &bs, &as_)?;
    let lambda = parse_map(get(v, "", "lambda")?, "lambda", &as_, &xs)?;
    Ok(SplitExtension::new(x, a, b, kappa, alpha, e, lambda)?)
}

fn text<K: Field>(s: &K) -> Value {
    Value::String(s.to_string())
}

fn dense_value<K: Field>(f: &LinMap<K>) -> Value {
    Value::Array(
        f.to_dense()
            .iter()
            .map(|row| Value::Array(row.iter().map(text).collect()))
            .collect(),
    )
}

fn sorted_triples<K: Field>(entries: Vec<([usize; 3], K)>) -> Value {
    let mut entries = entries;
    entries.sort_by_key(|(ijk, _)| *ijk);
    Value::Array(
        entries
            .into_iter()
            .map(|([i, j, k], s)| json!([i, j, k, s.to_string()]))
            .collect(),
    )
}

pub fn write_structure<K: Field>(a: &Bialgebra<K>) -> Value {
    let n = a.dim();
    let mul = a
        .m()
        .triplets()
        .into_iter()
        .map(|(k, col, s)| ([col / n, col % n, k], s))
        .collect();
    let comul = a
        .delta()
        .triplets()
        .into_iter()
        .map(|(row, i, s)| ([i, row / n, row % n], s))
        .collect();
    let unit: Vec<Value> = (0..n).map(|r| text(&a.u().entry(r, 0))).collect();
    let counit: Vec<Value> = (0..n).map(|c| text(&a.eps().entry(0, c))).collect();
    let mut obj = Map::new();
    obj.insert("field".into(), write_field(K::spec()));
    obj.insert("name".into(), Value::String(a.name().to_string()));
    obj.insert("dim".into(), json!(n));
    obj.insert("basis".into(), json!(a.space().labels()));
    obj.insert("mul".into(), sorted_triples(mul));
    obj.insert("unit".into(), Value::Array(unit));
    obj.insert("comul".into(), sorted_triples(comul));
    obj.insert("counit".into(), Value::Array(counit));
    if let Some(s) = a.antipodes() {
        obj.insert("antipode_left".into(), dense_value(&s.left));
        obj.insert("antipode_right".into(), dense_value(&s.right));
    }
    Value::Object(obj)
}

pub fn write_map<K: Field>(f: &LinMap<K>) -> Value {
    let mut t = f.triplets();
    t.sort_by_key(|(r, c, _)| (*r, *c));
    json!({
        "rows": f.nrows(),
        "cols": f.ncols(),
        "entries": t.into_iter().map(|(r, c, s)| json!([r, c, s.to_string()])).collect::<Vec<_>>(),
    })
}

pub fn write_action<K: Field>(a: &ActionData<K>) -> Value {
    json!({
        "field": write_field(K::spec()),
        "acting": write_structure(a.acting()),
        "acted": write_structure(a.acted()),
        "act": write_map(a.act()),
    })
}

pub fn write_extension<K: Field>(s: &SplitExtension<K>) -> Value {
    json!({
        "field": write_field(K::spec()),
        "x": write_structure(&s.x),
        "a": write_structure(&s.a),
        "b": write_structure(&s.b),
        "kappa": write_map(&s.kappa),
        "alpha": write_map(&s.alpha),
        "e": write_map(&s.e),
        "lambda": write_map(&s.lambda),
    })
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|v| !v.is_array() && !v.is_object())
}

/// Indented rendering with flat arrays kept on one line. Ends with a newline.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out.push('\n');
    out
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Object(obj) if !obj.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in obj.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                render_into(val, depth + 1, out);
                out.push_str(if i + 1 < obj.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !is_flat(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                render_into(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}
