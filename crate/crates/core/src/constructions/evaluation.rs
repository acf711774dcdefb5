use std::collections::HashSet;
use std::sync::Arc;

use super::{GeneratorMatrix, LinearCode, Provenance};
use crate::bounds::RecoveryProfile;
use crate::error::{Error, Result};
use crate::finite_field::{
    additive_subgroup, annihilator_polynomial, coset_partition, is_prime, FieldElement, FiniteField,
};
use crate::matrix::Matrix;
use crate::poly_spaces::{
    check_orthogonal, intersect_families, is_locally_recoverable, DensePolynomial, FamilySpec,
    PolyBasis,
};

/// Evaluation code `{(f(a))_{a ∈ A} : f ∈ V}` for a polynomial space `V`.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    field: Arc<FiniteField>,
    points: Vec<FieldElement>,
    basis: PolyBasis,
    families: Vec<FamilySpec>,
    generator: GeneratorMatrix,
    pub provenance: Provenance,
}

impl EvaluationCode {
    /// Assembles a code from its parts. Fails if the points repeat, a
    /// family's ground set differs from the points, or the evaluation map is
    /// not injective on `basis`.
    pub fn from_parts(
        field: Arc<FiniteField>,
        points: Vec<FieldElement>,
        basis: PolyBasis,
        families: Vec<FamilySpec>,
        provenance: Provenance,
    ) -> Result<Self> {
        let pts: HashSet<_> = points.iter().copied().collect();
        if pts.len() != points.len() {
            return Err(Error::InvalidParameters("evaluation points repeat".into()));
        }
        if let Some(bad) = points.iter().find(|e| e.index() >= field.order()) {
            return Err(Error::NotAnElement(bad.index()));
        }
        for f in &families {
            let g: HashSet<_> = f.partition.ground().iter().copied().collect();
            if g != pts {
                return Err(Error::GroundMismatch);
            }
        }
        if basis.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let rows = basis
            .polys
            .iter()
            .map(|p| points.iter().map(|&a| p.eval(&field, a)).collect())
            .collect();
        let generator = GeneratorMatrix::new(&field, Matrix::from_rows(rows))?;
        Ok(EvaluationCode {
            field,
            points,
            basis,
            families,
            generator,
            provenance,
        })
    }

    pub fn field_arc(&self) -> Arc<FiniteField> {
        Arc::clone(&self.field)
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn basis(&self) -> &PolyBasis {
        &self.basis
    }

    pub fn families(&self) -> &[FamilySpec] {
        &self.families
    }

    /// Degree cap `m` of the polynomial space.
    pub fn max_degree(&self) -> usize {
        self.basis.max_degree
    }

    /// `n - m`.
    pub fn designed_distance(&self) -> usize {
        self.points.len().saturating_sub(self.max_degree())
    }

    /// Recovering-set size caps: block size minus one per family.
    pub fn recovery_profile(&self) -> Result<RecoveryProfile> {
        RecoveryProfile::new(
            self.families
                .iter()
                .map(|f| f.partition.blocks().iter().map(Vec::len).max().unwrap_or(1) - 1)
                .collect(),
        )
    }

    /// `Σ a_i b_i` for a message `a`.
    pub fn message_polynomial(&self, message: &[FieldElement]) -> Result<DensePolynomial> {
        if message.len() != self.basis.dim() {
            return Err(Error::MessageLength {
                expected: self.basis.dim(),
                got: message.len(),
            });
        }
        Ok(self
            .basis
            .polys
            .iter()
            .zip(message)
            .fold(DensePolynomial::zero(), |acc, (b, &a)| {
                acc.add(&self.field, &b.scale(&self.field, a))
            }))
    }

    /// Whether every basis polynomial is locally recoverable for every
    /// family.
    pub fn check_local_recovery(&self) -> bool {
        self.basis.polys.iter().all(|p| {
            self.families
                .iter()
                .all(|f| is_locally_recoverable(&self.field, p, f))
        })
    }
}

impl LinearCode for EvaluationCode {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn length(&self) -> usize {
        self.points.len()
    }

    fn dimension(&self) -> usize {
        self.basis.dim()
    }

    fn generator_matrix(&self) -> GeneratorMatrix {
        self.generator.clone()
    }

    fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if let Some(bad) = message.iter().find(|e| e.index() >= self.field.order()) {
            return Err(Error::NotAnElement(bad.index()));
        }
        let f = self.message_polynomial(message)?;
        Ok(self.points.iter().map(|&a| f.eval(&self.field, a)).collect())
    }
}

/// Evaluation code over the ground set of `specs` whose space is
/// `∩ F^{r_i}_{P_i}` truncated to degree `m`. The partitions must be pairwise
/// orthogonal.
pub fn tamo_barg_code(
    field: Arc<FiniteField>,
    specs: Vec<FamilySpec>,
    m: usize,
    provenance: Provenance,
) -> Result<EvaluationCode> {
    for (i, a) in specs.iter().enumerate() {
        for b in &specs[i + 1..] {
            if !check_orthogonal(&a.partition, &b.partition)? {
                return Err(Error::NotOrthogonal);
            }
        }
    }
    let basis = intersect_families(&field, &specs, m)?;
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let points = specs[0].partition.ground().to_vec();
    EvaluationCode::from_parts(field, points, basis, specs, provenance)
}

/// Length `(r+1)^t`, dimension `r+1` code over `GF(p^{lt})` with `r + 1 = p^l`
/// and availability `t`.
///
/// `H_i` is the `GF(p)`-span of `α^{(i-1)l}, ..., α^{il-1}` and the code space
/// is `⟨1, x, ..., x^{r-1}, g_1⟩` where `g_1` is the annihilator of `H_1`.
pub fn construction1(p: u32, l: u32, t: u32) -> Result<EvaluationCode> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if l == 0 || t == 0 {
        return Err(Error::InvalidParameters("l and t must be positive".into()));
    }
    let m = l.checked_mul(t).ok_or(Error::FieldTooLarge { p, m: u32::MAX })?;
    let field = Arc::new(FiniteField::new(p, m, None)?);
    let r = (p.pow(l) - 1) as usize;
    let points: Vec<_> = field.elements().collect();
    let mut specs = Vec::with_capacity(t as usize);
    let mut g1 = None;
    for i in 0..t {
        let span: Vec<_> = (i * l..(i + 1) * l)
            .map(|e| field.alpha_pow(e as i64))
            .collect();
        let h = additive_subgroup(&field, &span)?;
        if i == 0 {
            g1 = Some(annihilator_polynomial(&field, &h));
        }
        specs.push(FamilySpec::new(coset_partition(&field, &h, &points)?, r)?);
    }
    let g1 = g1.expect("t >= 1");
    let mut polys: Vec<_> = (0..r).map(DensePolynomial::monomial).collect();
    polys.push(g1);
    let basis = PolyBasis::from_distinct_degrees(polys, r + 1)?;
    let provenance = Provenance::new("construction1")
        .with("p", p)
        .with("l", l)
        .with("t", t);
    EvaluationCode::from_parts(field, points, basis, specs, provenance)
}
