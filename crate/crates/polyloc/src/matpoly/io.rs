//! The matrix-polynomial interchange document: a JSON object with fields
//! `n`, `m`, and `coeffs`, where `coeffs` is a length-`m+1` list (ascending
//! degree) of `n x n` arrays of `[re, im]` pairs. Saving is canonical, so
//! loading and re-saving a document produced here is byte-identical.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::MatrixPolynomial;
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    n: usize,
    m: usize,
    coeffs: Vec<Vec<Vec<[f64; 2]>>>,
}

pub fn to_json_string(p: &MatrixPolynomial) -> String {
    let n = p.size();
    let doc = PolyDoc {
        n,
        m: p.degree(),
        coeffs: p
            .coeffs()
            .iter()
            .map(|a| {
                (0..n)
                    .map(|i| a.row(i).iter().map(|z| [z.re, z.im]).collect())
                    .collect()
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn from_json_str(s: &str) -> Result<MatrixPolynomial> {
    let doc: PolyDoc = serde_json::from_str(s)
        .map_err(|e| Error::Parse(format!("not a polynomial document: {e}")))?;
    if doc.n == 0 {
        return Err(Error::Parse("field 'n' must be at least 1".into()));
    }
    if doc.coeffs.len() != doc.m + 1 {
        return Err(Error::Parse(format!(
            "field 'coeffs' has {} entries, expected m + 1 = {}",
            doc.coeffs.len(),
            doc.m + 1
        )));
    }
    let mut coeffs = Vec::with_capacity(doc.coeffs.len());
    for (k, rows) in doc.coeffs.iter().enumerate() {
        if rows.len() != doc.n {
            return Err(Error::Parse(format!(
                "coefficient {k}: expected {} rows, found {}",
                doc.n,
                rows.len()
            )));
        }
        let mut a = ComplexMatrix::zeros(doc.n, doc.n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != doc.n {
                return Err(Error::Parse(format!(
                    "coefficient {k}, row {i}: expected {} entries, found {}",
                    doc.n,
                    row.len()
                )));
            }
            for (j, &[re, im]) in row.iter().enumerate() {
                if !re.is_finite() || !im.is_finite() {
                    return Err(Error::Parse(format!(
                        "coefficient {k}, entry ({i},{j}) is not finite"
                    )));
                }
                a[(i, j)] = Complex64::new(re, im);
            }
        }
        coeffs.push(a);
    }
    if doc.m > 0 && coeffs.last().is_some_and(ComplexMatrix::is_zero) {
        return Err(Error::Parse(format!(
            "coefficient {} (the leading coefficient) is the zero matrix",
            doc.m
        )));
    }
    MatrixPolynomial::new(coeffs)
}

pub fn save_file(p: &MatrixPolynomial, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), to_json_string(p))
        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.as_ref().display())))
}

pub fn load_file(path: impl AsRef<Path>) -> Result<MatrixPolynomial> {
    let s = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.as_ref().display())))?;
    from_json_str(&s)
}
