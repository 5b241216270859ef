//! JSON storage of structure constants as sparse index/coefficient lists.
//!
//! `mult` holds `[i, j, k, c]` for `e_i e_j ∋ c e_k`, `comult` holds
//! `[k, i, j, c]` for `Δ(e_k) ∋ c e_i ⊗ e_j`, `antipode` holds `[j, i, c]` for
//! `S(e_j) ∋ c e_i`. Coefficients are integers or strings such as `"-1/2"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{HopfAlgebra, HopfData};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub(crate) enum Coef {
    Int(i64),
    Text(String),
}

impl Coef {
    pub(crate) fn value(&self, field: Field) -> Result<Scalar> {
        match self {
            Coef::Int(n) => Ok(field.int(*n)),
            Coef::Text(s) => Scalar::parse(field, s),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct HopfFile {
    name: String,
    field: Field,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    basis: Vec<String>,
    unit: Vec<(usize, Coef)>,
    mult: Vec<(usize, usize, usize, Coef)>,
    comult: Vec<(usize, usize, usize, Coef)>,
    counit: Vec<(usize, Coef)>,
    antipode: Vec<(usize, usize, Coef)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rmatrix: Option<Vec<(usize, usize, Coef)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ribbon: Option<Vec<(usize, Coef)>>,
}

fn check_index(i: usize, n: usize, what: &str) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("{what}: index {i} out of range for dimension {n}")))
    }
}

fn vector(field: Field, n: usize, entries: &[(usize, Coef)], what: &str) -> Result<Vec<Scalar>> {
    let mut v = vec![field.zero(); n];
    for (i, c) in entries {
        check_index(*i, n, what)?;
        v[*i] += &c.value(field)?;
    }
    Ok(v)
}

/// Parses a Hopf algebra file; `field` overrides the field recorded in the file.
pub fn parse_hopf_json(text: &str, field: Option<Field>) -> Result<HopfAlgebra> {
    let file: HopfFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = field.unwrap_or(file.field);
    if let Field::Prime { p } = field {
        Field::prime(p)?;
    }
    let n = file.basis.len();
    if let Some(d) = file.dim {
        if d != n {
            return Err(Error::ShapeMismatch(format!("dim is {d} but {n} basis labels are given")));
        }
    }
    let mut mult = Matrix::zeros(field, n, n * n);
    for (i, j, k, c) in &file.mult {
        for x in [i, j, k] {
            check_index(*x, n, "mult")?;
        }
        mult[(*k, i * n + j)] += &c.value(field)?;
    }
    let mut comult = Matrix::zeros(field, n * n, n);
    for (k, i, j, c) in &file.comult {
        for x in [i, j, k] {
            check_index(*x, n, "comult")?;
        }
        comult[(i * n + j, *k)] += &c.value(field)?;
    }
    let mut antipode = Matrix::zeros(field, n, n);
    for (j, i, c) in &file.antipode {
        check_index(*i, n, "antipode")?;
        check_index(*j, n, "antipode")?;
        antipode[(*i, *j)] += &c.value(field)?;
    }
    let rmatrix = match &file.rmatrix {
        None => None,
        Some(entries) => {
            let mut r = vec![field.zero(); n * n];
            for (i, j, c) in entries {
                check_index(*i, n, "rmatrix")?;
                check_index(*j, n, "rmatrix")?;
                r[i * n + j] += &c.value(field)?;
            }
            Some(r)
        }
    };
    let ribbon = file.ribbon.as_ref().map(|e| vector(field, n, e, "ribbon")).transpose()?;
    HopfAlgebra::new(HopfData {
        name: file.name,
        field,
        unit: vector(field, n, &file.unit, "unit")?,
        counit: vector(field, n, &file.counit, "counit")?,
        basis: file.basis,
        mult,
        comult,
        antipode,
        rmatrix,
        ribbon,
    })
}

pub fn read_hopf(path: impl AsRef<Path>, field: Option<Field>) -> Result<HopfAlgebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_hopf_json(&text, field)
}

pub(crate) fn text(s: &Scalar) -> Coef {
    Coef::Text(s.to_string())
}

fn sparse1(v: &[Scalar]) -> Vec<(usize, Coef)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, text(x))).collect()
}

/// Deterministic JSON rendering, readable back by [`parse_hopf_json`].
pub fn hopf_to_json(h: &HopfAlgebra) -> String {
    let d = h.data();
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                mult.push((i, j, *k, text(c)));
            }
        }
    }
    let mut comult = Vec::new();
    for k in 0..n {
        for (i, j, c) in h.comult_basis(k) {
            comult.push((k, *i, *j, text(c)));
        }
    }
    let mut antipode = Vec::new();
    for j in 0..n {
        for (i, c) in h.antipode_basis(j) {
            antipode.push((j, *i, text(c)));
        }
    }
    let file = HopfFile {
        name: d.name.clone(),
        field: d.field,
        dim: Some(n),
        basis: d.basis.clone(),
        unit: sparse1(&d.unit),
        mult,
        comult,
        counit: sparse1(&d.counit),
        antipode,
        rmatrix: d.rmatrix.as_ref().map(|r| {
            r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(ij, x)| (ij / n, ij % n, text(x))).collect()
        }),
        ribbon: d.ribbon.as_ref().map(|v| sparse1(v)),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}
