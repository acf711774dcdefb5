//! JSON code files.
//!
//! Elements are written as integers over prime fields and as coefficient
//! vectors (low degree first) otherwise, so a reloaded code has identical
//! matrices.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    AlphaTable, C2Params, Code, EvaluationCode, LinearCode, ParityCheckCode, Provenance,
    RepairGroup,
};
use crate::error::{Error, Result};
use crate::finite_field::{FieldElement, FieldSpec, FiniteField, Partition};
use crate::matrix::Matrix;
use crate::poly_spaces::{DensePolynomial, FamilySpec, PolyBasis};

pub const FORMAT: &str = "lrc-code/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Elem {
    Int(u32),
    Coeffs(Vec<u32>),
}

#[derive(Debug, Serialize, Deserialize)]
struct FileRecord {
    format: String,
    field: FieldSpec,
    #[serde(flatten)]
    body: Body,
    provenance: Provenance,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Body {
    Evaluation {
        params: EvalParams,
        points: Vec<Elem>,
        max_degree: usize,
        basis: Vec<Vec<Elem>>,
        partitions: Vec<PartitionRecord>,
    },
    ParityCheck {
        params: C2Params,
        h: Vec<Vec<Elem>>,
        repair_groups: Vec<RepairGroup>,
        alphas: AlphaRecord,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct EvalParams {
    n: usize,
    k: usize,
    profile: Vec<usize>,
    t: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct PartitionRecord {
    r: usize,
    blocks: Vec<Vec<Elem>>,
    constant_poly: Option<Vec<Elem>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlphaRecord {
    availability: Vec<Elem>,
    blocks: Vec<Vec<Vec<Elem>>>,
}

fn put(field: &FiniteField, e: FieldElement) -> Elem {
    if field.is_prime_field() {
        Elem::Int(e.index())
    } else {
        Elem::Coeffs(field.coeffs(e))
    }
}

fn get(field: &FiniteField, e: &Elem) -> Result<FieldElement> {
    match (e, field.is_prime_field()) {
        (Elem::Int(v), true) => field.element(*v),
        (Elem::Coeffs(c), false) if c.len() == field.degree() as usize => field.from_coeffs(c),
        _ => Err(Error::Format(format!("element {e:?} does not match the field"))),
    }
}

fn put_vec(field: &FiniteField, v: &[FieldElement]) -> Vec<Elem> {
    v.iter().map(|&e| put(field, e)).collect()
}

fn get_vec(field: &FiniteField, v: &[Elem]) -> Result<Vec<FieldElement>> {
    v.iter().map(|e| get(field, e)).collect()
}

fn put_poly(field: &FiniteField, p: &DensePolynomial) -> Vec<Elem> {
    put_vec(field, p.coeffs())
}

fn get_poly(field: &FiniteField, v: &[Elem]) -> Result<DensePolynomial> {
    let coeffs = get_vec(field, v)?;
    if coeffs.last().is_some_and(|c| c.is_zero()) {
        return Err(Error::Format("polynomial has a zero leading coefficient".into()));
    }
    Ok(DensePolynomial::from_coeffs(coeffs))
}

/// Serializes `code` as pretty-printed JSON.
pub fn to_json(code: &Code) -> Result<String> {
    let field = code.field();
    let body = match code {
        Code::Evaluation(c) => Body::Evaluation {
            params: EvalParams {
                n: c.length(),
                k: c.dimension(),
                profile: c.recovery_profile()?.original_order().to_vec(),
                t: c.families().len(),
            },
            points: put_vec(field, c.points()),
            max_degree: c.max_degree(),
            basis: c.basis().polys.iter().map(|p| put_poly(field, p)).collect(),
            partitions: c
                .families()
                .iter()
                .map(|f| PartitionRecord {
                    r: f.r,
                    blocks: f.partition.blocks().iter().map(|b| put_vec(field, b)).collect(),
                    constant_poly: f.partition.constant_polynomial().map(|p| put_poly(field, p)),
                })
                .collect(),
        },
        Code::ParityCheck(c) => Body::ParityCheck {
            params: c.params(),
            h: c.h().to_rows().iter().map(|r| put_vec(field, r)).collect(),
            repair_groups: c.repair_groups().to_vec(),
            alphas: AlphaRecord {
                availability: put_vec(field, &c.alphas().availability),
                blocks: c
                    .alphas()
                    .blocks
                    .iter()
                    .map(|g| g.iter().map(|b| put_vec(field, b)).collect())
                    .collect(),
            },
        },
    };
    let record = FileRecord {
        format: FORMAT.into(),
        field: field.spec(),
        body,
        provenance: code.provenance().clone(),
    };
    serde_json::to_string_pretty(&record).map_err(|e| Error::Format(e.to_string()))
}

/// Parses and validates a code file.
pub fn from_json(text: &str) -> Result<Code> {
    let record: FileRecord =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if record.format != FORMAT {
        return Err(Error::Format(format!("unknown format tag {:?}", record.format)));
    }
    let field = Arc::new(FiniteField::from_spec(&record.field)?);
    match record.body {
        Body::Evaluation {
            params,
            points,
            max_degree,
            basis,
            partitions,
        } => {
            let points = get_vec(&field, &points)?;
            let polys = basis
                .iter()
                .map(|p| get_poly(&field, p))
                .collect::<Result<Vec<_>>>()?;
            let basis = PolyBasis::from_distinct_degrees(polys, max_degree)?;
            let mut families = Vec::with_capacity(partitions.len());
            for p in partitions {
                let blocks = p
                    .blocks
                    .iter()
                    .map(|b| get_vec(&field, b))
                    .collect::<Result<Vec<_>>>()?;
                let mut part = Partition::new(blocks, points.clone())?;
                if let Some(cp) = p.constant_poly {
                    part = part.with_constant_polynomial(&field, get_poly(&field, &cp)?)?;
                }
                families.push(FamilySpec::new(part, p.r)?);
            }
            let code = EvaluationCode::from_parts(field, points, basis, families, record.provenance)?;
            if code.length() != params.n || code.dimension() != params.k || params.t != code.families().len() {
                return Err(Error::Format("stated parameters disagree with the code".into()));
            }
            Ok(Code::Evaluation(code))
        }
        Body::ParityCheck {
            params,
            h,
            repair_groups,
            alphas,
        } => {
            let rows = h
                .iter()
                .map(|r| get_vec(&field, r))
                .collect::<Result<Vec<_>>>()?;
            if rows.iter().any(|r| r.len() != params.n) {
                return Err(Error::Format("parity-check rows must have length n".into()));
            }
            let h = if rows.is_empty() {
                Matrix::zeros(0, params.n)
            } else {
                Matrix::from_rows(rows)
            };
            let alphas = AlphaTable {
                availability: get_vec(&field, &alphas.availability)?,
                blocks: alphas
                    .blocks
                    .iter()
                    .map(|g| g.iter().map(|b| get_vec(&field, b)).collect())
                    .collect::<Result<Vec<_>>>()?,
            };
            let code =
                ParityCheckCode::from_parts(field, h, params, repair_groups, alphas, record.provenance)?;
            Ok(Code::ParityCheck(code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construction1, construction2, presets};

    fn round_trip(code: Code) {
        let text = to_json(&code).unwrap();
        let back = from_json(&text).unwrap();
        assert_eq!(to_json(&back).unwrap(), text);
        assert_eq!(back.generator_matrix(), code.generator_matrix());
        assert_eq!(back.parity_check_matrix(), code.parity_check_matrix());
    }

    #[test]
    fn round_trips() {
        round_trip(presets::example2().default_code().unwrap().into());
        round_trip(construction1(3, 1, 2).unwrap().into());
        round_trip(construction2(2, 2, 2, 2, 2, None, None).unwrap().into());
    }

    #[test]
    fn prime_field_elements_are_integers() {
        let text = to_json(&presets::example2().default_code().unwrap().into()).unwrap();
        assert!(text.contains("\"kind\": \"evaluation\""));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["points"][0].is_u64());
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(matches!(from_json("{}"), Err(Error::Format(_))));
        let text = to_json(&construction1(3, 1, 2).unwrap().into()).unwrap();
        let bad = text.replace("lrc-code/1", "other");
        assert!(matches!(from_json(&bad), Err(Error::Format(_))));
    }
}
