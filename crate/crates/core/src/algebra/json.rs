//! Versioned JSON import and export of algebras.

use serde_json::{json, Map, Value};

use super::frobenius::{FrobeniusData, GradingMode};
use super::knowledgeable::KnowledgeableFrobenius;
use super::{Algebra, AlgebraError};
use crate::linalg::{Field, Matrix};

pub const FORMAT_VERSION: u64 = 1;

fn bad(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Json(msg.into())
}

fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    let f = m.field();
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(|x| f.to_json(x)).collect())).collect())
}

fn matrix_from_json<F: Field>(f: &F, v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix<F>, AlgebraError> {
    let arr = v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))?;
    if arr.len() != rows {
        return Err(bad(format!("{what} must have {rows} rows")));
    }
    let mut m = Matrix::zeros(f, rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = row.as_array().filter(|x| x.len() == cols).ok_or_else(|| bad(format!("{what} row {r} must have {cols} entries")))?;
        for (c, x) in row.iter().enumerate() {
            m.set(r, c, f.from_json(x).map_err(|e| bad(format!("{what}: {e}")))?);
        }
    }
    Ok(m)
}

fn scalars<F: Field>(f: &F, v: &Value, n: usize, what: &str) -> Result<Vec<F::Elem>, AlgebraError> {
    let arr = v.as_array().filter(|a| a.len() == n).ok_or_else(|| bad(format!("{what} must be a list of {n} scalars")))?;
    arr.iter().map(|x| f.from_json(x).map_err(|e| bad(format!("{what}: {e}")))).collect()
}

impl<F: Field> FrobeniusData<F> {
    /// Encodes `mu[i][j][k] = μ_{ij}^k` and `delta[i][j][k] = Δ_i^{jk}`.
    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let n = self.dim();
        let mu: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::Array((0..n).map(|k| f.to_json(self.mu.get(k, i * n + j))).collect()))
                        .collect(),
                )
            })
            .collect();
        let delta: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::Array((0..n).map(|k| f.to_json(self.delta.get(j * n + k, i))).collect()))
                        .collect(),
                )
            })
            .collect();
        json!({
            "version": FORMAT_VERSION,
            "dim": n,
            "basis": self.labels,
            "mu": mu,
            "eta": (0..n).map(|k| f.to_json(self.eta.get(k, 0))).collect::<Vec<_>>(),
            "delta": delta,
            "eps": (0..n).map(|k| f.to_json(self.eps.get(0, k))).collect::<Vec<_>>(),
            "degrees": self.degrees,
            "grading_mode": self.grading.as_str(),
            "degree_unit": self.degree_unit,
            "field": f.spec().to_json(),
        })
    }

    pub fn from_json(f: &F, v: &Value) -> Result<Self, AlgebraError> {
        let obj = v.as_object().ok_or_else(|| bad("algebra must be an object"))?;
        check_header(f, obj)?;
        let n = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing dim"))? as usize;
        let labels: Vec<String> = match obj.get("basis") {
            Some(Value::Array(a)) if a.len() == n => {
                a.iter().map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("basis labels must be strings"))).collect::<Result<_, _>>()?
            }
            None => (0..n).map(|i| format!("e{i}")).collect(),
            _ => return Err(bad(format!("basis must list {n} labels"))),
        };
        let get = |k: &str| obj.get(k).ok_or_else(|| bad(format!("missing {k}")));
        let mu_v = get("mu")?.as_array().filter(|a| a.len() == n).ok_or_else(|| bad("mu must be dim x dim x dim"))?;
        let mut mu = Matrix::zeros(f, n, n * n);
        for (i, row) in mu_v.iter().enumerate() {
            let row = row.as_array().filter(|a| a.len() == n).ok_or_else(|| bad("mu must be dim x dim x dim"))?;
            for (j, col) in row.iter().enumerate() {
                for (k, x) in scalars(f, col, n, "mu")?.into_iter().enumerate() {
                    mu.set(k, i * n + j, x);
                }
            }
        }
        let d_v = get("delta")?.as_array().filter(|a| a.len() == n).ok_or_else(|| bad("delta must be dim x dim x dim"))?;
        let mut delta = Matrix::zeros(f, n * n, n);
        for (i, row) in d_v.iter().enumerate() {
            let row = row.as_array().filter(|a| a.len() == n).ok_or_else(|| bad("delta must be dim x dim x dim"))?;
            for (j, col) in row.iter().enumerate() {
                for (k, x) in scalars(f, col, n, "delta")?.into_iter().enumerate() {
                    delta.set(j * n + k, i, x);
                }
            }
        }
        let eta = Matrix::from_columns(f, n, &[scalars(f, get("eta")?, n, "eta")?]);
        let eps = Matrix::from_columns(f, n, &[scalars(f, get("eps")?, n, "eps")?]).transpose();
        let degrees: Vec<i64> = match obj.get("degrees") {
            None => vec![0; n],
            Some(Value::Array(a)) if a.len() == n => {
                a.iter().map(|x| x.as_i64().ok_or_else(|| bad("degrees must be integers"))).collect::<Result<_, _>>()?
            }
            _ => return Err(bad(format!("degrees must list {n} integers"))),
        };
        let grading = match obj.get("grading_mode") {
            None => GradingMode::None,
            Some(g) => g.as_str().and_then(GradingMode::parse).ok_or_else(|| bad("grading_mode must be graded, filtered or none"))?,
        };
        let degree_unit = obj.get("degree_unit").and_then(Value::as_i64).unwrap_or(1);
        Ok(Self { field: f.clone(), labels, mu, eta, delta, eps, degrees, grading, degree_unit })
    }
}

fn check_header<F: Field>(f: &F, obj: &Map<String, Value>) -> Result<(), AlgebraError> {
    if let Some(v) = obj.get("version") {
        if v.as_u64() != Some(FORMAT_VERSION) {
            return Err(bad(format!("unsupported version {v}")));
        }
    }
    if let Some(fv) = obj.get("field") {
        let ch = fv.get("char").and_then(Value::as_u64).ok_or_else(|| bad("field.char must be an integer"))?;
        if ch != f.characteristic() {
            return Err(bad(format!("document is over characteristic {ch}, expected {}", f.characteristic())));
        }
    }
    Ok(())
}

impl<F: Field> KnowledgeableFrobenius<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "version": FORMAT_VERSION,
            "A": self.a.to_json(),
            "C": self.c.to_json(),
            "iota": matrix_to_json(&self.iota),
            "iota_star": matrix_to_json(&self.iota_star),
            "field": self.field().spec().to_json(),
        })
    }

    pub fn from_json(f: &F, v: &Value) -> Result<Self, AlgebraError> {
        let obj = v.as_object().ok_or_else(|| bad("algebra must be an object"))?;
        check_header(f, obj)?;
        let get = |k: &str| obj.get(k).ok_or_else(|| bad(format!("missing {k}")));
        let a = FrobeniusData::from_json(f, get("A")?)?;
        let c = FrobeniusData::from_json(f, get("C")?)?;
        let iota = matrix_from_json(f, get("iota")?, a.dim(), c.dim(), "iota")?;
        let iota_star = matrix_from_json(f, get("iota_star")?, c.dim(), a.dim(), "iota_star")?;
        Ok(Self { a, c, iota, iota_star })
    }
}

impl<F: Field> Algebra<F> {
    pub fn to_json(&self) -> Value {
        match self {
            Algebra::Frobenius(a) => a.to_json(),
            Algebra::Knowledgeable(k) => k.to_json(),
        }
    }

    /// Reads either document kind; the presence of `"A"` selects the knowledgeable form.
    pub fn from_json(f: &F, v: &Value) -> Result<Self, AlgebraError> {
        if v.get("A").is_some() {
            Ok(Algebra::Knowledgeable(KnowledgeableFrobenius::from_json(f, v)?))
        } else {
            Ok(Algebra::Frobenius(FrobeniusData::from_json(f, v)?))
        }
    }
}
