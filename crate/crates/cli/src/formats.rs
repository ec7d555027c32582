//! JSON schemas and file formats of the command-line interface.
//!
//! Every argument that carries a document accepts either inline JSON (the
//! value starts with `{` or `[`) or a path to a file holding one JSON
//! document. The lattice itself travels as a plain text file: one row of
//! the Gram matrix per line, space-separated integers.

use std::fmt;
use std::fs;

use enriques_core::polarization::PolarizationCertificate;
use enriques_core::{CurveTestSet, DivisorClass, GramLattice, MukaiVector, NumClass};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// An input problem: malformed JSON, missing file, violated invariant.
/// Always maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn err(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// Inline JSON or a file path, one document.
pub fn load_json<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T, InputError> {
    let trimmed = arg.trim_start();
    let text: String = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| err(format!("{what}: cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| err(format!("{what}: {e}")))
}

/// `{"d": [..], "eps": 0|1}`
#[derive(Serialize, Deserialize)]
pub struct DivisorDoc {
    pub d: Vec<i64>,
    pub eps: u8,
}

/// `{"r": .., "d": [..], "eps": 0|1, "t": ..}`
#[derive(Serialize, Deserialize)]
pub struct MukaiDoc {
    pub r: i64,
    pub d: Vec<i64>,
    pub eps: u8,
    pub t: i64,
}

/// `{"r": .., "d": [..], "s": .., "form": "doubled"}`
#[derive(Serialize, Deserialize)]
pub struct K3Doc {
    pub r: i64,
    pub d: Vec<i64>,
    pub s: i64,
    pub form: String,
}

/// `{"curves": [[..], ..], "cone_ref": [..]}`
#[derive(Serialize, Deserialize)]
pub struct TestSetDoc {
    pub curves: Vec<Vec<i64>>,
    pub cone_ref: Vec<i64>,
}

/// `{"x": [..], "k": .., "h_prime": {..}, "d": .., "gcd_value": ..}`
#[derive(Serialize, Deserialize)]
pub struct CertificateDoc {
    pub x: Vec<i64>,
    pub k: i64,
    pub h_prime: DivisorDoc,
    pub d: i64,
    pub gcd_value: i64,
}

pub fn num_class(coords: Vec<i64>, lat: &GramLattice, field: &str) -> Result<NumClass, InputError> {
    if coords.len() != lat.rank() {
        return Err(err(format!(
            "{field}: expected {} coordinates, got {}",
            lat.rank(),
            coords.len()
        )));
    }
    Ok(NumClass::new(coords))
}

fn eps_bit(eps: u8, field: &str) -> Result<bool, InputError> {
    match eps {
        0 => Ok(false),
        1 => Ok(true),
        other => Err(err(format!("{field}.eps: must be 0 or 1, got {other}"))),
    }
}

pub fn divisor(
    doc: DivisorDoc,
    lat: &GramLattice,
    field: &str,
) -> Result<DivisorClass, InputError> {
    let num = num_class(doc.d, lat, &format!("{field}.d"))?;
    Ok(DivisorClass::new(num, eps_bit(doc.eps, field)?))
}

pub fn mukai(doc: MukaiDoc, lat: &GramLattice, field: &str) -> Result<MukaiVector, InputError> {
    let num = num_class(doc.d, lat, &format!("{field}.d"))?;
    let d = DivisorClass::new(num, eps_bit(doc.eps, field)?);
    MukaiVector::new(doc.r, d, doc.t).map_err(|e| err(format!("{field}: invariant violated: {e}")))
}

pub fn test_set(doc: TestSetDoc, lat: &GramLattice) -> Result<CurveTestSet, InputError> {
    let curves = doc
        .curves
        .into_iter()
        .enumerate()
        .map(|(i, c)| num_class(c, lat, &format!("curves[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let cone_ref = num_class(doc.cone_ref, lat, "cone_ref")?;
    CurveTestSet::new(lat, curves, cone_ref)
        .map_err(|e| err(format!("test set: invariant violated: {e}")))
}

pub fn divisor_doc(d: &DivisorClass) -> DivisorDoc {
    DivisorDoc { d: d.num.coords().to_vec(), eps: d.eps as u8 }
}

pub fn mukai_doc(v: &MukaiVector) -> MukaiDoc {
    MukaiDoc {
        r: v.r(),
        d: v.divisor().num.coords().to_vec(),
        eps: v.divisor().eps as u8,
        t: v.t(),
    }
}

pub fn k3_doc(w: &enriques_core::k3::K3MukaiVector) -> K3Doc {
    K3Doc { r: w.r(), d: w.d_num().coords().to_vec(), s: w.s(), form: "doubled".to_string() }
}

pub fn certificate_doc(c: &PolarizationCertificate) -> CertificateDoc {
    CertificateDoc {
        x: c.x.coords().to_vec(),
        k: c.k,
        h_prime: divisor_doc(&c.h_prime),
        d: c.divisibility,
        gcd_value: c.gcd_value,
    }
}

/// Gram matrix file: one row per line, space-separated integers.
pub fn load_gram_file(path: &str) -> Result<GramLattice, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| err(format!("lattice: cannot read {path}: {e}")))?;
    parse_gram(&text).map_err(|e| err(format!("lattice {path}: {e}")))
}

pub fn parse_gram(text: &str) -> Result<GramLattice, String> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| format!("line {}: bad integer {tok:?}", lineno + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    GramLattice::new(rows).map_err(|e| e.to_string())
}
