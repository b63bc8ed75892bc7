//! JSON encodings. Rationals are always strings (`"p/q"`, or `"p"` for
//! integers); no floating point appears anywhere.
//!
//! * `Oct`: `["α", "v1", "v2", "v3", "w1", "w2", "w3", "β"]`
//! * `AlbertElem`: `{"diag": [3 rationals], "oct": [[8], [8], [8]]}`
//! * `VPoint`: `{"a": AlbertElem, "b": AlbertElem}`
//! * `BinaryCubic`: `[c30, c21, c12, c03]`
//! * `StructureTensor`: `{"basis": "jbasis-v1", "point": ..., "entries": [19683]}`
//! * `GroupElem`: `{"L": 27×27, "c": "p/q", "g2": 2×2}` or a generator
//!   shorthand `{"kind": "scalar"|"diag"|"perm"|"gl2", "params": ...}`,
//!   or an array of either, read as their product in order.

use serde_json::{json, Map, Value};

use crate::albert::{AlbertElem, DIM};
use crate::error::{AlbertError, Result};
use crate::gaction::{GroupElem, Mat2};
use crate::linalg::Matrix;
use crate::octonion::Oct;
use crate::pvs::{BinaryCubic, VPoint};
use crate::rat::{self, Rat};
use crate::smap::StructureTensor;

fn err(msg: impl Into<String>) -> AlbertError {
    AlbertError::Parse(msg.into())
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, len: Option<usize>, what: &str) -> Result<&'a Vec<Value>> {
    let arr = v.as_array().ok_or_else(|| err(format!("{what}: expected an array")))?;
    if let Some(n) = len {
        if arr.len() != n {
            return Err(err(format!("{what}: expected {n} entries, got {}", arr.len())));
        }
    }
    Ok(arr)
}

pub fn rat_to_json(x: &Rat) -> Value {
    Value::String(rat::to_string(x))
}

/// Accepts `"p/q"` strings and, for convenience, JSON integers.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => rat::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rat::int(n.as_i64().expect("checked is_i64"))),
        other => Err(err(format!("expected a rational string, got {other}"))),
    }
}

fn rats_to_json(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(rat_to_json).collect())
}

fn rats_from_json(v: &Value, len: usize, what: &str) -> Result<Vec<Rat>> {
    array(v, Some(len), what)?.iter().map(rat_from_json).collect()
}

pub fn oct_to_json(x: &Oct) -> Value {
    rats_to_json(&x.coords())
}

pub fn oct_from_json(v: &Value) -> Result<Oct> {
    Ok(Oct::from_coords(&rats_from_json(v, 8, "octonion")?))
}

pub fn albert_to_json(x: &AlbertElem) -> Value {
    json!({
        "diag": rats_to_json(&x.s),
        "oct": x.x.iter().map(oct_to_json).collect::<Vec<_>>(),
    })
}

pub fn albert_from_json(v: &Value) -> Result<AlbertElem> {
    let diag = rats_from_json(field(v, "diag")?, 3, "diag")?;
    let octs = array(field(v, "oct")?, Some(3), "oct")?;
    let x = [oct_from_json(&octs[0])?, oct_from_json(&octs[1])?, oct_from_json(&octs[2])?];
    let [s1, s2, s3]: [Rat; 3] = diag.try_into().expect("length checked");
    Ok(AlbertElem::new([s1, s2, s3], x))
}

pub fn vpoint_to_json(x: &VPoint) -> Value {
    json!({ "a": albert_to_json(&x.a), "b": albert_to_json(&x.b) })
}

pub fn vpoint_from_json(v: &Value) -> Result<VPoint> {
    Ok(VPoint::new(albert_from_json(field(v, "a")?)?, albert_from_json(field(v, "b")?)?))
}

pub fn cubic_to_json(f: &BinaryCubic) -> Value {
    rats_to_json(&f.coeffs())
}

pub fn cubic_from_json(v: &Value) -> Result<BinaryCubic> {
    let [c30, c21, c12, c03]: [Rat; 4] =
        rats_from_json(v, 4, "binary cubic")?.try_into().expect("length checked");
    Ok(BinaryCubic { c30, c21, c12, c03 })
}

/// Header plus flat row-major `(i, j, out)` entries. `point` is whatever
/// the tensor was computed from (a `VPoint`, an element `a`, or null).
pub fn tensor_to_json(t: &StructureTensor, point: Value) -> Value {
    json!({
        "basis": crate::albert::JBasis::NAME,
        "point": point,
        "entries": rats_to_json(t.entries()),
    })
}

pub fn tensor_from_json(v: &Value) -> Result<StructureTensor> {
    let basis = field(v, "basis")?.as_str().unwrap_or_default();
    if basis != crate::albert::JBasis::NAME {
        return Err(err(format!("unknown basis {basis:?}")));
    }
    StructureTensor::from_entries(rats_from_json(field(v, "entries")?, StructureTensor::LEN, "entries")?)
}

fn mat2_to_json(m: &Mat2) -> Value {
    Value::Array(m.iter().map(|r| rats_to_json(r)).collect())
}

fn mat2_from_json(v: &Value) -> Result<Mat2> {
    let rows = array(v, Some(2), "2x2 matrix")?;
    let r0 = rats_from_json(&rows[0], 2, "2x2 matrix row")?;
    let r1 = rats_from_json(&rows[1], 2, "2x2 matrix row")?;
    Ok([[r0[0].clone(), r0[1].clone()], [r1[0].clone(), r1[1].clone()]])
}

pub fn group_elem_to_json(g: &GroupElem) -> Value {
    let mut m = Map::new();
    m.insert("L".into(), Value::Array(g.l.to_rows().iter().map(|r| rats_to_json(r)).collect()));
    m.insert("c".into(), rat_to_json(&g.c));
    m.insert("g2".into(), mat2_to_json(&g.g2));
    Value::Object(m)
}

pub fn group_elem_from_json(v: &Value) -> Result<GroupElem> {
    if let Some(items) = v.as_array() {
        return items
            .iter()
            .try_fold(GroupElem::identity(), |acc, item| Ok(&acc * &group_elem_from_json(item)?));
    }
    if v.get("kind").is_some() {
        return generator_from_json(v);
    }
    let rows = array(field(v, "L")?, Some(DIM), "L")?;
    let rows: Vec<Vec<Rat>> = rows.iter().map(|r| rats_from_json(r, DIM, "L row")).collect::<Result<_>>()?;
    Ok(GroupElem {
        l: Matrix::from_rows(rows)?,
        c: rat_from_json(field(v, "c")?)?,
        g2: mat2_from_json(field(v, "g2")?)?,
    })
}

fn generator_from_json(v: &Value) -> Result<GroupElem> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| err("kind must be a string"))?;
    let params = field(v, "params")?;
    match kind {
        "scalar" => {
            let t = match params {
                Value::Array(a) if a.len() == 1 => rat_from_json(&a[0])?,
                other => rat_from_json(other)?,
            };
            GroupElem::scalar(t)
        }
        "diag" => {
            let [l1, l2, l3]: [Rat; 3] = rats_from_json(params, 3, "diag params")?.try_into().expect("length checked");
            GroupElem::diag_conj(l1, l2, l3)
        }
        "perm" => {
            // 1-based images of 1, 2, 3.
            let p = array(params, Some(3), "perm params")?;
            let mut sigma = [0usize; 3];
            for (i, x) in p.iter().enumerate() {
                let k = x.as_u64().ok_or_else(|| err("perm entries must be integers 1..=3"))?;
                if !(1..=3).contains(&k) {
                    return Err(err("perm entries must be integers 1..=3"));
                }
                sigma[i] = (k - 1) as usize;
            }
            GroupElem::perm(sigma)
        }
        "gl2" => GroupElem::gl2(mat2_from_json(params)?),
        other => Err(err(format!("unknown generator kind {other:?}"))),
    }
}
