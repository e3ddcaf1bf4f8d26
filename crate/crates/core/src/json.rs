//! JSON encodings used by the CLI and any external harness.
//!
//! Rationals travel as strings "p/q" (or "p" for integers); integer JSON
//! numbers are accepted on input, non-integer floats are rejected so no
//! binary approximation silently enters exact computations. Matrices are
//! arrays of row arrays; a `Sym2Tensor` is a dense array of n packed rows
//! tagged with `"packing": "upper-jk"`; polynomials are arrays of
//! `{"coeff": "p/q", "exp": [e1, …, en]}` terms.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::jet::{Jet2, Membership, SubgroupTag};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::prolong::AlgebraSpec;
use crate::scalar::{rat_from_str, rat_to_f64, rat_to_string, Rat};
use crate::structures::Signature;
use crate::sym2::{pair_count, Sym2Tensor};
use crate::{RatMatrix, RatPoly, RatSym2};

fn schema_err(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn object_field<'v>(v: &'v Value, key: &str) -> Result<&'v Value> {
    v.get(key)
        .ok_or_else(|| schema_err(format!("missing field `{key}`")))
}

pub fn usize_from_value(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| schema_err(format!("`{what}` must be a nonnegative integer")))
}

pub fn rat_to_value(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => rat_from_str(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                Err(schema_err(format!(
                    "non-integer number {n}; use a \"p/q\" string for exact rationals"
                )))
            }
        }
        _ => Err(schema_err("expected a rational (string \"p/q\" or integer)")),
    }
}

pub fn rat_vec_to_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_value).collect())
}

pub fn rat_vec_from_value(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| schema_err("expected an array of rationals"))?
        .iter()
        .map(rat_from_value)
        .collect()
}

pub fn matrix_to_value(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rat_to_value).collect()))
            .collect(),
    )
}

pub fn matrix_to_f64_value(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|r| json!(rat_to_f64(r))).collect()))
            .collect(),
    )
}

pub fn float_matrix_to_value(m: &Matrix<f64>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| json!(x)).collect()))
            .collect(),
    )
}

pub fn matrix_from_value(v: &Value) -> Result<RatMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| schema_err("expected a matrix as an array of row arrays"))?;
    let parsed: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| schema_err("matrix row must be an array"))?
                .iter()
                .map(rat_from_value)
                .collect()
        })
        .collect::<Result<_>>()?;
    Matrix::from_rows(parsed).map_err(|e| schema_err(e.to_string()))
}

pub fn sym2_to_value(s: &RatSym2) -> Value {
    let n = s.n();
    let flat = s.flatten();
    let rows: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                flat[i * pair_count(n)..(i + 1) * pair_count(n)]
                    .iter()
                    .map(rat_to_value)
                    .collect(),
            )
        })
        .collect();
    json!({
        "n": n,
        "packing": "upper-jk",
        "entries": rows,
    })
}

pub fn sym2_from_value(v: &Value) -> Result<RatSym2> {
    let n = usize_from_value(object_field(v, "n")?, "n")?;
    if let Some(p) = v.get("packing") {
        if p.as_str() != Some("upper-jk") {
            return Err(schema_err("unsupported packing; expected \"upper-jk\""));
        }
    } else {
        return Err(schema_err("missing field `packing` (expected \"upper-jk\")"));
    }
    let entries = object_field(v, "entries")?
        .as_array()
        .ok_or_else(|| schema_err("`entries` must be an array of packed rows"))?;
    if entries.len() != n {
        return Err(schema_err(format!("expected {n} packed rows")));
    }
    let rows: Vec<Vec<Rat>> = entries
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| schema_err("packed row must be an array"))?
                .iter()
                .map(rat_from_value)
                .collect()
        })
        .collect::<Result<_>>()?;
    Sym2Tensor::from_rows(rows).map_err(|e| schema_err(e.to_string()))
}

pub fn jet_to_value(j: &Jet2) -> Value {
    json!({
        "a": matrix_to_value(j.a()),
        "s": sym2_to_value(j.s()),
    })
}

pub fn jet_from_value(v: &Value) -> Result<Jet2> {
    let a = matrix_from_value(object_field(v, "a")?)?;
    let s = sym2_from_value(object_field(v, "s")?)?;
    Jet2::new(a, s)
}

pub fn tag_to_value(tag: &SubgroupTag) -> Value {
    match *tag {
        SubgroupTag::SlPm { n } => json!({"tag": "SLpm", "n": n}),
        SubgroupTag::O { q, n } => json!({"tag": "O", "q": q, "n": n}),
        SubgroupTag::Co { q, n } => json!({"tag": "CO", "q": q, "n": n}),
        SubgroupTag::H { n } => json!({"tag": "H", "n": n}),
        SubgroupTag::Gl { n } => json!({"tag": "GL", "n": n}),
    }
}

pub fn tag_from_value(v: &Value) -> Result<SubgroupTag> {
    let name = object_field(v, "tag")?
        .as_str()
        .ok_or_else(|| schema_err("`tag` must be a string"))?;
    let n = usize_from_value(object_field(v, "n")?, "n")?;
    let q = || -> Result<usize> { usize_from_value(object_field(v, "q")?, "q") };
    let tag = match name {
        "SLpm" => SubgroupTag::SlPm { n },
        "O" => SubgroupTag::O { q: q()?, n },
        "CO" => SubgroupTag::Co { q: q()?, n },
        "H" => SubgroupTag::H { n },
        "GL" => SubgroupTag::Gl { n },
        other => return Err(schema_err(format!("unknown subgroup tag `{other}`"))),
    };
    tag.validate()?;
    Ok(tag)
}

pub fn membership_to_value(m: &Membership) -> Value {
    let mut obj = Map::new();
    obj.insert("member".into(), Value::Bool(m.member));
    if let Some(cert) = &m.certificate {
        obj.insert("certificate".into(), rat_to_value(cert));
        obj.insert("certificate_float".into(), json!(rat_to_f64(cert)));
    }
    Value::Object(obj)
}

pub fn algebra_from_value(v: &Value) -> Result<AlgebraSpec> {
    let name = object_field(v, "name")?
        .as_str()
        .ok_or_else(|| schema_err("`name` must be a string"))?;
    let n = || -> Result<usize> { usize_from_value(object_field(v, "n")?, "n") };
    let q = || -> Result<usize> { usize_from_value(object_field(v, "q")?, "q") };
    Ok(match name {
        "gl" => AlgebraSpec::Gl { n: n()? },
        "sl" => AlgebraSpec::Sl { n: n()? },
        "o" => AlgebraSpec::O { q: q()?, n: n()? },
        "co" => AlgebraSpec::Co { q: q()?, n: n()? },
        "glw" => AlgebraSpec::GlW { n: n()? },
        "glwc" => AlgebraSpec::GlWc {
            n: n()?,
            c: rat_from_value(object_field(v, "c")?)?,
        },
        "csp" => {
            if let Ok(dim) = n() {
                if dim != 4 {
                    return Err(schema_err("csp is only defined for n = 4"));
                }
            }
            AlgebraSpec::Csp
        }
        "custom" => {
            let basis = object_field(v, "basis")?
                .as_array()
                .ok_or_else(|| schema_err("`basis` must be an array of matrices"))?
                .iter()
                .map(matrix_from_value)
                .collect::<Result<Vec<_>>>()?;
            AlgebraSpec::Custom {
                n: n()?,
                name: "custom".into(),
                basis,
            }
        }
        other => return Err(schema_err(format!("unknown algebra name `{other}`"))),
    })
}

/// Polynomial as a term array; a bare rational is accepted as a constant.
pub fn poly_from_value(v: &Value, nvars: usize) -> Result<RatPoly> {
    match v {
        Value::String(_) | Value::Number(_) => {
            Ok(Polynomial::constant(nvars, rat_from_value(v)?))
        }
        Value::Array(terms) => {
            let mut parsed = Vec::with_capacity(terms.len());
            for t in terms {
                let coeff = rat_from_value(object_field(t, "coeff")?)?;
                let exp = object_field(t, "exp")?
                    .as_array()
                    .ok_or_else(|| schema_err("`exp` must be an array"))?
                    .iter()
                    .map(|e| {
                        e.as_u64()
                            .map(|u| u as u32)
                            .ok_or_else(|| schema_err("exponents must be nonnegative integers"))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                if exp.len() != nvars {
                    return Err(schema_err(format!(
                        "exponent vector has length {}, expected {nvars}",
                        exp.len()
                    )));
                }
                parsed.push((exp, coeff));
            }
            Polynomial::from_terms(nvars, parsed).map_err(|e| schema_err(e.to_string()))
        }
        _ => Err(schema_err(
            "expected a polynomial term array or a bare rational constant",
        )),
    }
}

pub fn poly_to_value(p: &RatPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(exp, coeff)| {
                json!({
                    "coeff": rat_to_string(coeff),
                    "exp": exp,
                })
            })
            .collect(),
    )
}

/// n×n array of polynomials (row arrays); entries may be bare rationals.
pub fn poly_matrix_from_value(v: &Value) -> Result<Vec<Vec<RatPoly>>> {
    let rows = v
        .as_array()
        .ok_or_else(|| schema_err("expected an array of polynomial rows"))?;
    let n = rows.len();
    rows.iter()
        .map(|row| {
            let cells = row
                .as_array()
                .ok_or_else(|| schema_err("polynomial row must be an array"))?;
            if cells.len() != n {
                return Err(schema_err("polynomial matrix must be square"));
            }
            cells.iter().map(|c| poly_from_value(c, n)).collect()
        })
        .collect()
}

pub fn signature_to_value(sig: Signature) -> Value {
    json!({"q": sig.neg, "n": sig.n()})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn rational_value_forms() {
        assert_eq!(rat_from_value(&json!("3/4")).unwrap(), rat(3, 4));
        assert_eq!(rat_from_value(&json!(-2)).unwrap(), rat_int(-2));
        assert!(rat_from_value(&json!(0.5)).is_err());
        assert_eq!(rat_to_value(&rat(3, 4)), json!("3/4"));
        assert_eq!(rat_to_value(&rat_int(7)), json!("7"));
    }

    #[test]
    fn sym2_roundtrip_with_packing_tag() {
        let mut s = Sym2Tensor::zeros(2);
        s.set(0, 0, 1, rat(1, 2));
        s.set(1, 1, 1, rat_int(-3));
        let v = sym2_to_value(&s);
        assert_eq!(v["packing"], json!("upper-jk"));
        assert_eq!(sym2_from_value(&v).unwrap(), s);

        let mut bad = v.clone();
        bad["packing"] = json!("lower-jk");
        assert!(sym2_from_value(&bad).is_err());
    }

    #[test]
    fn matrix_and_jet_roundtrip() {
        let a = Matrix::from_rows(vec![
            vec![rat(5, 4), rat(3, 4)],
            vec![rat(3, 4), rat(5, 4)],
        ])
        .unwrap();
        assert_eq!(matrix_from_value(&matrix_to_value(&a)).unwrap(), a);

        let j = Jet2::new(a, Sym2Tensor::unit(2, 0, 1, 1)).unwrap();
        assert_eq!(jet_from_value(&jet_to_value(&j)).unwrap(), j);
    }

    #[test]
    fn tag_parsing() {
        let t = tag_from_value(&json!({"tag": "O", "q": 1, "n": 4})).unwrap();
        assert_eq!(t, SubgroupTag::O { q: 1, n: 4 });
        assert!(tag_from_value(&json!({"tag": "O", "q": 5, "n": 4})).is_err());
        assert!(tag_from_value(&json!({"tag": "X", "n": 4})).is_err());
        assert_eq!(tag_to_value(&t), json!({"tag": "O", "q": 1, "n": 4}));
    }

    #[test]
    fn polynomial_forms() {
        let p = poly_from_value(
            &json!([
                {"coeff": "1", "exp": [0, 0]},
                {"coeff": "1", "exp": [2, 0]},
            ]),
            2,
        )
        .unwrap();
        assert_eq!(p.eval(&[rat_int(3), rat_int(0)]).unwrap(), rat_int(10));

        let c = poly_from_value(&json!("5/2"), 3).unwrap();
        assert_eq!(c.eval(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap(), rat(5, 2));

        let round = poly_from_value(&poly_to_value(&p), 2).unwrap();
        assert_eq!(round, p);
    }
}
