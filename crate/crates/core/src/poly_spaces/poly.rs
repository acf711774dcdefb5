use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::finite_field::{FieldElement, FiniteField};

/// Univariate polynomial with coefficients low degree first.
///
/// The highest stored coefficient is always nonzero; the zero polynomial has
/// no coefficients and no degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensePolynomial {
    coeffs: Vec<FieldElement>,
}

impl DensePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; d + 1];
        coeffs[d] = FieldElement::ONE;
        DensePolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots(field: &FiniteField, roots: &[FieldElement]) -> Self {
        let mut acc = Self::one();
        for &r in roots {
            acc = acc.mul(field, &Self::from_coeffs(vec![field.neg(r), FieldElement::ONE]));
        }
        acc
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn add(&self, field: &FiniteField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..len)
                .map(|i| field.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, field: &FiniteField) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| field.neg(c)).collect())
    }

    pub fn sub(&self, field: &FiniteField, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &FiniteField, c: FieldElement) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Multiplies by `x^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; d];
        coeffs.extend_from_slice(&self.coeffs);
        DensePolynomial { coeffs }
    }

    pub fn mul(&self, field: &FiniteField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, field: &FiniteField, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// Quotient and remainder.
    ///
    /// # Panics
    /// If `divisor` is zero.
    pub fn div_rem(&self, field: &FiniteField, divisor: &Self) -> (Self, Self) {
        let db = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; rem.len().saturating_sub(db)];
        while rem.len() > db {
            let dr = rem.len() - 1;
            let c = field.mul(rem[dr], lead_inv);
            if !c.is_zero() {
                quot[dr - db] = c;
                for (i, &b) in divisor.coeffs.iter().enumerate() {
                    let idx = dr - db + i;
                    rem[idx] = field.sub(rem[idx], field.mul(c, b));
                }
            }
            rem.pop();
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, field: &FiniteField, divisor: &Self) -> Self {
        self.div_rem(field, divisor).1
    }

    pub fn monic(&self, field: &FiniteField) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(field, inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &FiniteField, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidParameters("gcd of two zero polynomials".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        Ok(a.monic(field))
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &FiniteField, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn display(&self, field: &FiniteField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let coef = field.display(c);
            let coef = if coef.contains(' ') || coef.contains(',') {
                format!("({coef})")
            } else {
                coef
            };
            match (i, c == FieldElement::ONE) {
                (0, _) => out.push_str(&coef),
                (1, true) => out.push('x'),
                (1, false) => {
                    let _ = write!(out, "{coef}x");
                }
                (_, true) => {
                    let _ = write!(out, "x^{i}");
                }
                (_, false) => {
                    let _ = write!(out, "{coef}x^{i}");
                }
            }
        }
        out
    }
}
