//! JSON, text and CSV encodings of core values.

use gramdet_core::closed::{ClosedForm, Factor};
use gramdet_core::matrix::Matrix;
use gramdet_core::poly::{IntPolynomial, Variable};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::CliError;

fn var_name(v: Variable) -> &'static str {
    v.as_str()
}

fn parse_var(s: &str) -> Result<Variable, CliError> {
    match s {
        "n" => Ok(Variable::N),
        "t" => Ok(Variable::T),
        other => Err(CliError::Decode(format!("unknown variable {other:?}"))),
    }
}

/// `{"var": "n", "coeffs": ["c0", "c1", ...]}` with decimal strings.
pub fn poly_to_json(p: &IntPolynomial) -> Value {
    json!({
        "var": var_name(p.var()),
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

pub fn poly_from_json(v: &Value) -> Result<IntPolynomial, CliError> {
    let var = v
        .get("var")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Decode("missing \"var\"".into()))?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Decode("missing \"coeffs\"".into()))?
        .iter()
        .map(|c| {
            c.as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| CliError::Decode(format!("bad coefficient {c}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = IntPolynomial::new(parse_var(var)?, coeffs.clone());
    if p.coeffs().len() != coeffs.len() {
        return Err(CliError::Decode("trailing zero coefficients".into()));
    }
    Ok(p)
}

/// `{"monomial_exp": a, "factors": [{"factor", "poly", "exp"}], "expanded": poly}`.
pub fn closed_to_json(c: &ClosedForm) -> Value {
    json!({
        "monomial_exp": c.monomial_exp,
        "factors": c.factors.iter().map(|f| json!({
            "factor": f.name,
            "poly": poly_to_json(&f.poly),
            "exp": f.exp,
        })).collect::<Vec<_>>(),
        "expanded": poly_to_json(&c.poly),
    })
}

pub fn closed_from_json(v: &Value) -> Result<ClosedForm, CliError> {
    let bad = |what: &str| CliError::Decode(format!("missing or malformed {what:?}"));
    let monomial_exp = v
        .get("monomial_exp")
        .and_then(Value::as_i64)
        .ok_or_else(|| bad("monomial_exp"))?;
    let factors = v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("factors"))?
        .iter()
        .map(|f| {
            Ok(Factor {
                name: f
                    .get("factor")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("factor"))?
                    .to_string(),
                poly: poly_from_json(f.get("poly").ok_or_else(|| bad("poly"))?)?,
                exp: f
                    .get("exp")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| bad("exp"))?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let poly = poly_from_json(v.get("expanded").ok_or_else(|| bad("expanded"))?)?;
    Ok(ClosedForm {
        monomial_exp,
        factors,
        poly,
    })
}

pub fn matrix_to_strings<T: Clone + ToString>(m: &Matrix<T>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

/// Rows separated by newlines, cells by single spaces, right-aligned per column.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn csv_string(rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Decode(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Decode(e.to_string()))
}
