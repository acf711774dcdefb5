//! Polynomial spaces behind the Tamo-Barg availability codes.
//!
//! For a partition `P` of the evaluation set, `F_P[x]` is the space of
//! polynomials constant on every block of `P`, and the family
//! `F^r_P = ⊕_{i<r} F_P[x]·x^i` contains the polynomials whose restriction to
//! every block agrees with a polynomial of degree below `r`. Codes are built
//! from intersections of such families truncated to a maximum degree.

mod poly;

use std::collections::HashSet;

pub use poly::DensePolynomial;

use crate::error::{Error, Result};
use crate::finite_field::{FiniteField, Partition};
use crate::matrix::Matrix;

/// A partition together with the locality used for its family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub partition: Partition,
    pub r: usize,
}

impl FamilySpec {
    pub fn new(partition: Partition, r: usize) -> Result<Self> {
        let block = partition.min_block_size();
        if r == 0 || r > block {
            return Err(Error::BadLocality { r, block });
        }
        Ok(FamilySpec { partition, r })
    }
}

/// Basis in degree-echelon form: pairwise distinct degrees, ascending, each
/// member monic and reduced against the leading terms of the others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBasis {
    pub polys: Vec<DensePolynomial>,
    pub max_degree: usize,
}

impl PolyBasis {
    /// Echelonizes the span of `polys`.
    pub fn from_span(field: &FiniteField, polys: &[DensePolynomial], max_degree: usize) -> Self {
        let width = polys
            .iter()
            .filter_map(DensePolynomial::degree)
            .max()
            .map_or(1, |d| d.max(max_degree) + 1);
        let rows: Vec<_> = polys.iter().map(|p| to_reversed_row(p, width)).collect();
        if rows.is_empty() {
            return PolyBasis {
                polys: Vec::new(),
                max_degree,
            };
        }
        let (rref, _) = Matrix::from_rows(rows).rref(field);
        let mut out: Vec<_> = (0..rref.rows())
            .map(|r| from_reversed_row(rref.row(r)))
            .collect();
        out.sort_by_key(|p| p.degree());
        PolyBasis {
            polys: out,
            max_degree,
        }
    }

    /// Keeps `polys` as given after checking their degrees are distinct;
    /// the result is sorted by degree.
    pub fn from_distinct_degrees(mut polys: Vec<DensePolynomial>, max_degree: usize) -> Result<Self> {
        if polys.iter().any(DensePolynomial::is_zero) {
            return Err(Error::InvalidParameters("zero polynomial in basis".into()));
        }
        polys.sort_by_key(|p| p.degree());
        if polys.windows(2).any(|w| w[0].degree() == w[1].degree()) {
            return Err(Error::InvalidParameters("basis degrees must be distinct".into()));
        }
        if polys.last().and_then(DensePolynomial::degree).is_some_and(|d| d > max_degree) {
            return Err(Error::InvalidParameters(format!(
                "basis polynomial exceeds degree {max_degree}"
            )));
        }
        Ok(PolyBasis { polys, max_degree })
    }

    pub fn dim(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys.iter().filter_map(DensePolynomial::degree).collect()
    }

    /// Largest degree in the span.
    pub fn top_degree(&self) -> Option<usize> {
        self.polys.last().and_then(DensePolynomial::degree)
    }

    /// Intersection with polynomials of degree at most `m`.
    pub fn truncate(&self, m: usize) -> Self {
        PolyBasis {
            polys: self
                .polys
                .iter()
                .filter(|p| p.degree().is_some_and(|d| d <= m))
                .cloned()
                .collect(),
            max_degree: m,
        }
    }

    /// Membership by reduction against the leading terms.
    pub fn contains(&self, field: &FiniteField, poly: &DensePolynomial) -> bool {
        let mut rem = poly.clone();
        for b in self.polys.iter().rev() {
            let d = b.degree().expect("basis members are nonzero");
            let c = rem.coeff(d);
            if !c.is_zero() {
                rem = rem.sub(field, &b.scale(field, c));
            }
        }
        rem.is_zero()
    }
}

fn to_reversed_row(p: &DensePolynomial, width: usize) -> Vec<crate::FieldElement> {
    (0..width).map(|i| p.coeff(width - 1 - i)).collect()
}

fn from_reversed_row(row: &[crate::FieldElement]) -> DensePolynomial {
    DensePolynomial::from_coeffs(row.iter().rev().copied().collect())
}

/// Whether `poly` takes a single value on every block.
pub fn is_constant_on(field: &FiniteField, poly: &DensePolynomial, partition: &Partition) -> bool {
    partition.blocks().iter().all(|block| {
        let v = poly.eval(field, block[0]);
        block.iter().all(|&e| poly.eval(field, e) == v)
    })
}

/// Whether the restriction of `poly` to each block agrees with a polynomial
/// of degree below `spec.r`.
pub fn is_locally_recoverable(field: &FiniteField, poly: &DensePolynomial, spec: &FamilySpec) -> bool {
    spec.partition.blocks().iter().all(|block| {
        let (head, tail) = block.split_at(spec.r);
        let values: Vec<_> = head.iter().map(|&x| poly.eval(field, x)).collect();
        tail.iter()
            .all(|&x| lagrange_at(field, head, &values, x) == poly.eval(field, x))
    })
}

/// Value at `x` of the interpolant through `(xs[i], ys[i])`.
pub fn lagrange_at(
    field: &FiniteField,
    xs: &[crate::FieldElement],
    ys: &[crate::FieldElement],
    x: crate::FieldElement,
) -> crate::FieldElement {
    let mut acc = crate::FieldElement::ZERO;
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        let mut num = crate::FieldElement::ONE;
        let mut den = crate::FieldElement::ONE;
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                num = field.mul(num, field.sub(x, xj));
                den = field.mul(den, field.sub(xi, xj));
            }
        }
        let w = field.div(num, den).expect("interpolation nodes are distinct");
        acc = field.add(acc, field.mul(yi, w));
    }
    acc
}

/// `⟨1, g, g^2, ..., g^{b-1}⟩` where `g` is the partition's coset-constant
/// polynomial and `b` the number of blocks.
pub fn constant_space_basis(field: &FiniteField, partition: &Partition) -> Result<PolyBasis> {
    let g = partition
        .constant_polynomial()
        .ok_or(Error::NonCosetPartition)?;
    let n = partition.ground().len();
    let vanishing = DensePolynomial::from_roots(field, partition.ground());
    let mut polys = Vec::with_capacity(partition.blocks().len());
    let mut cur = DensePolynomial::one();
    for _ in 0..partition.blocks().len() {
        polys.push(cur.clone());
        cur = cur.mul(field, g);
        if cur.degree().is_some_and(|d| d > n) {
            cur = cur.rem(field, &vanishing);
        }
    }
    Ok(PolyBasis::from_span(field, &polys, n))
}

/// Basis of `F^r_P`.
pub fn family_basis(field: &FiniteField, spec: &FamilySpec) -> Result<PolyBasis> {
    let constant = constant_space_basis(field, &spec.partition)?;
    let polys: Vec<_> = constant
        .polys
        .iter()
        .flat_map(|b| (0..spec.r).map(move |i| b.shift(i)))
        .collect();
    Ok(PolyBasis::from_span(field, &polys, constant.max_degree))
}

/// Intersection of two spans given by echelon bases.
fn intersect_pair(field: &FiniteField, a: &PolyBasis, b: &PolyBasis, width: usize) -> PolyBasis {
    if a.is_empty() || b.is_empty() {
        return PolyBasis {
            polys: Vec::new(),
            max_degree: a.max_degree,
        };
    }
    // columns are a_1..a_s, -b_1..-b_t; a kernel vector (x, y) gives the
    // common element Σ x_i a_i
    let mut system = Matrix::zeros(width, a.dim() + b.dim());
    for (j, p) in a.polys.iter().enumerate() {
        for d in 0..width {
            system.set(d, j, p.coeff(d));
        }
    }
    for (j, p) in b.polys.iter().enumerate() {
        for d in 0..width {
            system.set(d, a.dim() + j, field.neg(p.coeff(d)));
        }
    }
    let kernel = system.null_space(field);
    let common: Vec<_> = (0..kernel.rows())
        .map(|r| {
            a.polys
                .iter()
                .enumerate()
                .fold(DensePolynomial::zero(), |acc, (j, p)| {
                    acc.add(field, &p.scale(field, kernel.get(r, j)))
                })
        })
        .collect();
    PolyBasis::from_span(field, &common, a.max_degree)
}

/// Echelon basis of `∩ F^{r_i}_{P_i}` truncated to degree at most
/// `max_degree`.
pub fn intersect_families(
    field: &FiniteField,
    specs: &[FamilySpec],
    max_degree: usize,
) -> Result<PolyBasis> {
    let Some(first) = specs.first() else {
        return Err(Error::InvalidParameters("no families to intersect".into()));
    };
    let ground: HashSet<_> = first.partition.ground().iter().collect();
    for s in specs {
        let g: HashSet<_> = s.partition.ground().iter().collect();
        if g != ground {
            return Err(Error::GroundMismatch);
        }
    }
    let n = ground.len();
    if max_degree > n {
        return Err(Error::InvalidParameters(format!(
            "maximum degree {max_degree} exceeds the evaluation set size {n}"
        )));
    }
    let mut acc = family_basis(field, first)?;
    for s in &specs[1..] {
        let next = family_basis(field, s)?;
        acc = intersect_pair(field, &acc, &next, n + 1);
    }
    Ok(acc.truncate(max_degree))
}

/// Every pair of blocks, one from each partition, meets in at most one point.
pub fn check_orthogonal(p1: &Partition, p2: &Partition) -> Result<bool> {
    let g1: HashSet<_> = p1.ground().iter().collect();
    let g2: HashSet<_> = p2.ground().iter().collect();
    if g1 != g2 {
        return Err(Error::GroundMismatch);
    }
    for a in p1.blocks() {
        let a: HashSet<_> = a.iter().collect();
        for b in p2.blocks() {
            if b.iter().filter(|e| a.contains(e)).count() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
