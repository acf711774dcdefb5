//! Concrete LRC constructions.
//!
//! * [`tamo_barg_code`]: evaluation codes over intersections of `F^r_P`
//!   families for orthogonal partitions.
//! * [`construction1`]: all-symbol locality `r` with availability `t` and
//!   dimension `r + 1` over `GF((r+1)^t)`.
//! * [`construction2`]: parity-check matrix code with information locality
//!   `r` and availability `t`.

mod evaluation;
mod parity;
pub mod presets;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use evaluation::{construction1, tamo_barg_code, EvaluationCode};
pub use parity::{construction2, gf_q_independent, AlphaTable, C2Params, ParityCheckCode, RepairGroup};

use crate::error::{Error, Result};
use crate::finite_field::{FieldElement, FiniteField};
use crate::matrix::Matrix;

/// Construction name plus the inputs it was called with.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
}

impl Provenance {
    pub fn new(construction: &str) -> Self {
        Provenance {
            construction: construction.into(),
            inputs: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.inputs.insert(key.into(), value.into());
        self
    }
}

/// A `k × n` generator matrix of full row rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix(Matrix);

impl GeneratorMatrix {
    pub fn new(field: &FiniteField, matrix: Matrix) -> Result<Self> {
        let rank = matrix.rank(field);
        if rank != matrix.rows() {
            return Err(Error::RankDeficient {
                rank,
                expected: matrix.rows(),
            });
        }
        Ok(GeneratorMatrix(matrix))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.rows()
    }

    pub fn n(&self) -> usize {
        self.0.cols()
    }

    /// Rank of the code restricted to `columns`.
    pub fn rank_of(&self, field: &FiniteField, columns: &[usize]) -> usize {
        self.0.select_columns(columns).rank(field)
    }
}

/// Common surface of every linear code in this crate.
pub trait LinearCode {
    fn field(&self) -> &FiniteField;

    fn length(&self) -> usize;

    fn dimension(&self) -> usize;

    fn generator_matrix(&self) -> GeneratorMatrix;

    fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if message.len() != self.dimension() {
            return Err(Error::MessageLength {
                expected: self.dimension(),
                got: message.len(),
            });
        }
        if let Some(bad) = message.iter().find(|e| e.index() >= self.field().order()) {
            return Err(Error::NotAnElement(bad.index()));
        }
        Ok(self
            .generator_matrix()
            .matrix()
            .left_mul_vec(self.field(), message))
    }

    /// `(n - k) × n` matrix whose rows span the dual code.
    fn parity_check_matrix(&self) -> Matrix {
        self.generator_matrix().matrix().null_space(self.field())
    }
}

/// A code given only by its generator matrix.
#[derive(Clone, Debug)]
pub struct MatrixCode {
    field: Arc<FiniteField>,
    generator: GeneratorMatrix,
}

impl MatrixCode {
    pub fn new(field: Arc<FiniteField>, generator: Matrix) -> Result<Self> {
        let generator = GeneratorMatrix::new(&field, generator)?;
        Ok(MatrixCode { field, generator })
    }

    /// Each of `k` symbols repeated `copies` times, grouped by symbol.
    pub fn replication(field: Arc<FiniteField>, k: usize, copies: usize) -> Result<Self> {
        let mut g = Matrix::zeros(k, k * copies);
        for i in 0..k {
            for c in 0..copies {
                g.set(i, i * copies + c, FieldElement::ONE);
            }
        }
        Self::new(field, g)
    }

    /// Reed-Solomon code evaluating polynomials of degree `< k` at `points`.
    pub fn reed_solomon(field: Arc<FiniteField>, points: &[FieldElement], k: usize) -> Result<Self> {
        let mut g = Matrix::zeros(k, points.len());
        for i in 0..k {
            for (j, &x) in points.iter().enumerate() {
                g.set(i, j, field.pow(x, i as u64));
            }
        }
        Self::new(field, g)
    }
}

impl LinearCode for MatrixCode {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn length(&self) -> usize {
        self.generator.n()
    }

    fn dimension(&self) -> usize {
        self.generator.k()
    }

    fn generator_matrix(&self) -> GeneratorMatrix {
        self.generator.clone()
    }
}

/// Either kind of constructed code.
#[derive(Clone, Debug)]
pub enum Code {
    Evaluation(EvaluationCode),
    ParityCheck(ParityCheckCode),
}

impl Code {
    pub fn provenance(&self) -> &Provenance {
        match self {
            Code::Evaluation(c) => &c.provenance,
            Code::ParityCheck(c) => &c.provenance,
        }
    }

    pub fn field_arc(&self) -> Arc<FiniteField> {
        match self {
            Code::Evaluation(c) => c.field_arc(),
            Code::ParityCheck(c) => c.field_arc(),
        }
    }
}

impl LinearCode for Code {
    fn field(&self) -> &FiniteField {
        match self {
            Code::Evaluation(c) => c.field(),
            Code::ParityCheck(c) => c.field(),
        }
    }

    fn length(&self) -> usize {
        match self {
            Code::Evaluation(c) => c.length(),
            Code::ParityCheck(c) => c.length(),
        }
    }

    fn dimension(&self) -> usize {
        match self {
            Code::Evaluation(c) => c.dimension(),
            Code::ParityCheck(c) => c.dimension(),
        }
    }

    fn generator_matrix(&self) -> GeneratorMatrix {
        match self {
            Code::Evaluation(c) => c.generator_matrix(),
            Code::ParityCheck(c) => c.generator_matrix(),
        }
    }

    fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        match self {
            Code::Evaluation(c) => c.encode(message),
            Code::ParityCheck(c) => c.encode(message),
        }
    }

    fn parity_check_matrix(&self) -> Matrix {
        match self {
            Code::Evaluation(c) => c.parity_check_matrix(),
            Code::ParityCheck(c) => c.parity_check_matrix(),
        }
    }
}

impl From<EvaluationCode> for Code {
    fn from(c: EvaluationCode) -> Self {
        Code::Evaluation(c)
    }
}

impl From<ParityCheckCode> for Code {
    fn from(c: ParityCheckCode) -> Self {
        Code::ParityCheck(c)
    }
}
