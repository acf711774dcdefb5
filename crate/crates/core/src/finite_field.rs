//! Arithmetic in GF(p^m).
//!
//! Elements are packed coefficient vectors: the element with power-basis
//! coordinates `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is stored as the integer
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Multiplication and inversion go
//! through discrete-log tables built once per field.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly_spaces::DensePolynomial;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// An element of a [`FiniteField`], stored as its packed coefficient vector.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Packed index in `[0, q)`.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Serializable description of a field: characteristic, degree and modulus
/// coefficients (low to high).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

/// The field GF(p^m) together with its log/antilog tables.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    x_is_primitive: bool,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over GF(p) as coefficient vectors, low degree first. Only used
// while setting up a field.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn prime_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = prime_inv(b[db], p) as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] as u64 * lead_inv % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = ((r[idx] as u64 + (p as u64 - c) * bi as u64) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    if m <= 1 {
        return true;
    }
    for d in 1..=m / 2 {
        // every monic polynomial of degree d
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                div.push((v % p as u64) as u32);
                v /= p as u64;
            }
            div.push(1);
            if prime_poly_rem(modulus, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `m` over GF(p),
/// comparing coefficients from `x^{m-1}` down to the constant term.
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(m);
    for idx in 0..count {
        let mut poly = Vec::with_capacity(m as usize + 1);
        let mut v = idx;
        for _ in 0..m {
            poly.push((v % p as u64) as u32);
            v /= p as u64;
        }
        poly.push(1);
        if poly[0] != 0 && is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FiniteField {
    /// Builds GF(p^m). Without a modulus the default irreducible is used;
    /// a supplied modulus is checked for monicity and irreducibility.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge { p, m })? as u32;
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p) {
                    return Err(Error::BadModulus { expected: m });
                }
                if !is_irreducible(c, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                c.to_vec()
            }
            None => default_modulus(p, m),
        };
        let mut field = FiniteField {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            x_is_primitive: false,
        };
        field.build_tables();
        Ok(field)
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        Self::new(spec.p, spec.m, Some(&spec.modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
        }
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        let factors = prime_factors(order.max(1));
        let is_primitive = |f: &FiniteField, g: u32| {
            factors
                .iter()
                .all(|&l| f.slow_pow(g, (order / l) as u64) != 1)
        };
        let x = if self.m > 1 { self.p } else { 0 };
        self.x_is_primitive = self.m > 1 && is_primitive(self, x);
        let gen = if self.x_is_primitive {
            x
        } else if order == 1 {
            1
        } else {
            (2..self.q)
                .find(|&g| is_primitive(self, g))
                .expect("multiplicative group is cyclic")
        };
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp[i as usize] = cur;
            log[cur as usize] = i;
            cur = self.slow_mul(cur, gen);
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }
        self.exp = exp;
        self.log = log;
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut v = a;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * self.m as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut r = prime_poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.m as usize, 0);
        self.pack(&r)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.slow_mul(r, b);
            }
            b = self.slow_mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// All elements in packed-index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::NotAnElement(index))
        }
    }

    /// Integer residue in a prime field; packed index otherwise.
    pub fn from_u64(&self, v: u64) -> FieldElement {
        if self.m == 1 {
            FieldElement((v % self.p as u64) as u32)
        } else {
            FieldElement((v % self.q as u64) as u32)
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Format(format!("bad coefficient vector {coeffs:?}")));
        }
        Ok(FieldElement(self.pack(coeffs)))
    }

    /// Power-basis coordinates, low to high, length `m`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        self.digits(a.0)
    }

    /// The residue class of `x` modulo the field polynomial (for prime
    /// fields, the primitive element used by the log tables).
    pub fn alpha(&self) -> FieldElement {
        if self.m > 1 {
            FieldElement(self.p)
        } else {
            FieldElement(self.exp[1.min(self.exp.len() - 1)])
        }
    }

    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let a = self.alpha();
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            self.inv(self.pow(a, e.unsigned_abs())).expect("alpha is nonzero")
        }
    }

    /// Primitive element generating the log tables.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement(if self.q == 2 { 1 } else { self.exp[1] })
    }

    /// Discrete log with respect to [`FiniteField::primitive_element`].
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.m == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FieldElement(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64 * (e % order) % order;
        FieldElement(self.exp[l as usize])
    }

    /// Renders `0`, `1`, `a`, `a^j` when `x` is primitive, integers in prime
    /// fields, and coefficient vectors otherwise.
    pub fn display(&self, a: FieldElement) -> String {
        if self.m == 1 {
            return a.0.to_string();
        }
        if a.is_zero() {
            return "0".into();
        }
        if self.x_is_primitive {
            return match self.log[a.0 as usize] {
                0 => "1".into(),
                1 => "a".into(),
                j => format!("a^{j}"),
            };
        }
        format!("{:?}", self.coeffs(a))
    }
}

/// Whether a subgroup lives in the additive or the multiplicative group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupKind {
    Additive,
    Multiplicative,
}

/// A subgroup of `F^+` or `F^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub kind: SubgroupKind,
    /// Elements in generation order.
    pub elements: Vec<FieldElement>,
    /// The GF(p)-basis (additive) or the single generator (multiplicative).
    pub generators: Vec<FieldElement>,
}

impl Subgroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        self.elements.contains(&a)
    }

    fn act(&self, field: &FiniteField, x: FieldElement, h: FieldElement) -> FieldElement {
        match self.kind {
            SubgroupKind::Additive => field.add(x, h),
            SubgroupKind::Multiplicative => field.mul(x, h),
        }
    }

    /// A polynomial taking one value per coset and distinct values on
    /// distinct cosets: the annihilator for additive subgroups and the
    /// monomial `x^{|H|}` for multiplicative ones.
    pub fn coset_constant_polynomial(&self, field: &FiniteField) -> DensePolynomial {
        match self.kind {
            SubgroupKind::Additive => annihilator_polynomial(field, self),
            SubgroupKind::Multiplicative => DensePolynomial::monomial(self.len()),
        }
    }
}

/// GF(p)-span of `basis`. Elements are listed with the first basis
/// coordinate varying fastest.
pub fn additive_subgroup(field: &FiniteField, basis: &[FieldElement]) -> Result<Subgroup> {
    let p = field.characteristic();
    let mut elements = vec![FieldElement::ZERO];
    for &b in basis {
        if b.index() >= field.order() {
            return Err(Error::NotAnElement(b.index()));
        }
        let mut next = Vec::with_capacity(elements.len() * p as usize);
        let mut multiple = FieldElement::ZERO;
        for _ in 0..p {
            next.extend(elements.iter().map(|&e| field.add(e, multiple)));
            multiple = field.add(multiple, b);
        }
        elements = next;
    }
    let distinct: HashSet<_> = elements.iter().collect();
    if distinct.len() != elements.len() {
        return Err(Error::DependentBasis);
    }
    Ok(Subgroup {
        kind: SubgroupKind::Additive,
        elements,
        generators: basis.to_vec(),
    })
}

/// Cyclic subgroup `{g^0, g^1, ...}`.
pub fn multiplicative_subgroup(field: &FiniteField, generator: FieldElement) -> Result<Subgroup> {
    if generator.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    if generator.index() >= field.order() {
        return Err(Error::NotAnElement(generator.index()));
    }
    let mut elements = vec![FieldElement::ONE];
    let mut cur = generator;
    while cur != FieldElement::ONE {
        elements.push(cur);
        cur = field.mul(cur, generator);
    }
    Ok(Subgroup {
        kind: SubgroupKind::Multiplicative,
        elements,
        generators: vec![generator],
    })
}

/// `∏_{h ∈ H} (x - h)`.
pub fn annihilator_polynomial(field: &FiniteField, subgroup: &Subgroup) -> DensePolynomial {
    DensePolynomial::from_roots(field, &subgroup.elements)
}

/// A partition of a ground set into disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<FieldElement>>,
    ground: Vec<FieldElement>,
    constant_poly: Option<DensePolynomial>,
}

impl Partition {
    /// Checks that the blocks are disjoint, nonempty, and cover `ground`.
    pub fn new(blocks: Vec<Vec<FieldElement>>, ground: Vec<FieldElement>) -> Result<Self> {
        let ground_set: HashSet<_> = ground.iter().copied().collect();
        if ground_set.len() != ground.len() {
            return Err(Error::InvalidParameters("ground set has repeated points".into()));
        }
        let mut seen = HashSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidParameters("empty block".into()));
            }
            for e in block {
                if !ground_set.contains(e) || !seen.insert(*e) {
                    return Err(Error::InvalidParameters(
                        "blocks must be disjoint subsets of the ground set".into(),
                    ));
                }
            }
        }
        if seen.len() != ground.len() {
            return Err(Error::InvalidParameters("blocks do not cover the ground set".into()));
        }
        Ok(Partition {
            blocks,
            ground,
            constant_poly: None,
        })
    }

    /// Attaches a polynomial that is constant on each block with distinct
    /// values on distinct blocks.
    pub fn with_constant_polynomial(
        mut self,
        field: &FiniteField,
        poly: DensePolynomial,
    ) -> Result<Self> {
        let mut values = HashSet::new();
        for block in &self.blocks {
            let v = poly.eval(field, block[0]);
            if block.iter().any(|&e| poly.eval(field, e) != v) || !values.insert(v) {
                return Err(Error::NonCosetPartition);
            }
        }
        self.constant_poly = Some(poly);
        Ok(self)
    }

    pub fn blocks(&self) -> &[Vec<FieldElement>] {
        &self.blocks
    }

    pub fn ground(&self) -> &[FieldElement] {
        &self.ground
    }

    pub fn constant_polynomial(&self) -> Option<&DensePolynomial> {
        self.constant_poly.as_ref()
    }

    /// Common block size, if all blocks have the same size.
    pub fn block_size(&self) -> Option<usize> {
        let s = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == s).then_some(s)
    }

    pub fn min_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Index of the block containing `e`.
    pub fn block_of(&self, e: FieldElement) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&e))
    }
}

/// Splits `ground` into cosets of `subgroup`, in order of first appearance.
pub fn coset_partition(
    field: &FiniteField,
    subgroup: &Subgroup,
    ground: &[FieldElement],
) -> Result<Partition> {
    let ground_set: HashSet<_> = ground.iter().copied().collect();
    let mut covered = HashSet::new();
    let mut blocks = Vec::new();
    for &x in ground {
        if covered.contains(&x) {
            continue;
        }
        let coset: Vec<_> = subgroup
            .elements
            .iter()
            .map(|&h| subgroup.act(field, x, h))
            .collect();
        let distinct: HashSet<_> = coset.iter().copied().collect();
        if distinct.len() != subgroup.len()
            || coset.iter().any(|e| !ground_set.contains(e) || covered.contains(e))
        {
            return Err(Error::NotCosetAligned);
        }
        covered.extend(coset.iter().copied());
        blocks.push(coset);
    }
    let poly = subgroup.coset_constant_polynomial(field);
    Partition::new(blocks, ground.to_vec())?.with_constant_polynomial(field, poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> FiniteField {
        FiniteField::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap()
    }

    fn set(v: &[FieldElement]) -> HashSet<FieldElement> {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_bad_fields() {
        assert_eq!(FiniteField::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FiniteField::new(2, 0, None).unwrap_err(), Error::ZeroDegree);
        // x^4 + 1 = (x + 1)^4 over GF(2)
        assert_eq!(
            FiniteField::new(2, 4, Some(&[1, 0, 0, 0, 1])).unwrap_err(),
            Error::ReducibleModulus(2)
        );
        assert!(matches!(
            FiniteField::new(2, 4, Some(&[1, 1, 0, 0, 0])),
            Err(Error::BadModulus { .. })
        ));
        assert!(matches!(
            FiniteField::new(2, 17, None),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(default_modulus(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn gf16_alpha_arithmetic() {
        let f = gf16();
        let a = f.alpha();
        assert_eq!(f.mul(f.alpha_pow(5), f.alpha_pow(12)), f.alpha_pow(2));
        // a^4 = a + 1
        assert_eq!(f.add(f.alpha_pow(4), a), FieldElement::ONE);
        assert_eq!(f.coeffs(f.alpha_pow(4)), vec![1, 1, 0, 0]);
        assert_eq!(f.display(f.alpha_pow(10)), "a^10");
        assert_eq!(f.log(f.alpha_pow(7)), Some(7));
    }

    #[test]
    fn gf13_inverse() {
        let f = FiniteField::prime(13).unwrap();
        assert_eq!(f.inv(f.from_u64(5)).unwrap(), f.from_u64(8));
        assert_eq!(f.inv(FieldElement::ZERO).unwrap_err(), Error::ZeroInverse);
        assert_eq!(f.display(f.from_u64(11)), "11");
    }

    #[test]
    fn gf32_alpha_is_primitive() {
        let f = FiniteField::new(2, 5, Some(&[1, 0, 1, 0, 0, 1])).unwrap();
        let a = f.alpha();
        assert_eq!(f.primitive_element(), a);
        let a5 = f.pow(a, 5);
        assert_eq!(f.add(f.add(a5, f.pow(a, 2)), FieldElement::ONE), FieldElement::ZERO);
    }

    #[test]
    fn odd_extension_arithmetic() {
        let f = FiniteField::new(3, 2, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn example_one_subgroups() {
        let f = gf16();
        let h1 = additive_subgroup(&f, &[FieldElement::ONE, f.alpha()]).unwrap();
        let expected: Vec<_> = [0, 1, 4].iter().map(|&j| f.alpha_pow(j)).collect();
        assert_eq!(
            set(&h1.elements),
            set(&[&[FieldElement::ZERO][..], &expected].concat())
        );
        let h2 = additive_subgroup(&f, &[f.alpha_pow(2), f.alpha_pow(3)]).unwrap();
        let expected: Vec<_> = [2, 3, 6].iter().map(|&j| f.alpha_pow(j)).collect();
        assert_eq!(
            set(&h2.elements),
            set(&[&[FieldElement::ZERO][..], &expected].concat())
        );
        let trivial = additive_subgroup(&f, &[]).unwrap();
        assert_eq!(trivial.elements, vec![FieldElement::ZERO]);
        assert_eq!(
            additive_subgroup(&f, &[f.alpha(), f.alpha()]).unwrap_err(),
            Error::DependentBasis
        );
    }

    #[test]
    fn example_two_subgroups() {
        let f = FiniteField::prime(13).unwrap();
        let h = multiplicative_subgroup(&f, f.from_u64(5)).unwrap();
        assert_eq!(h.elements, [1, 5, 12, 8].map(|v| f.from_u64(v)).to_vec());
        let h = multiplicative_subgroup(&f, f.from_u64(3)).unwrap();
        assert_eq!(h.elements, [1, 3, 9].map(|v| f.from_u64(v)).to_vec());
        let h = multiplicative_subgroup(&f, FieldElement::ONE).unwrap();
        assert_eq!(h.elements, vec![FieldElement::ONE]);
        assert_eq!(
            multiplicative_subgroup(&f, FieldElement::ZERO).unwrap_err(),
            Error::ZeroGenerator
        );
    }

    #[test]
    fn example_one_partition() {
        let f = gf16();
        let h1 = additive_subgroup(&f, &[FieldElement::ONE, f.alpha()]).unwrap();
        let ground: Vec<_> = f.elements().collect();
        let part = coset_partition(&f, &h1, &ground).unwrap();
        let e = |j: i64| f.alpha_pow(j);
        let expected = vec![
            set(&[FieldElement::ZERO, e(0), e(1), e(4)]),
            set(&[e(2), e(8), e(5), e(10)]),
            set(&[e(3), e(14), e(9), e(7)]),
            set(&[e(6), e(13), e(11), e(12)]),
        ];
        let got: Vec<_> = part.blocks().iter().map(|b| set(b)).collect();
        for b in &expected {
            assert!(got.contains(b));
        }
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn example_two_partition() {
        let f = FiniteField::prime(13).unwrap();
        let h = multiplicative_subgroup(&f, f.from_u64(3)).unwrap();
        let ground: Vec<_> = f.nonzero_elements().collect();
        let part = coset_partition(&f, &h, &ground).unwrap();
        let blocks: Vec<Vec<u32>> = part
            .blocks()
            .iter()
            .map(|b| b.iter().map(|e| e.index()).collect())
            .collect();
        assert_eq!(blocks, vec![vec![1, 3, 9], vec![2, 6, 5], vec![4, 12, 10], vec![7, 8, 11]]);
        // zero is its own multiplicative coset
        let all: Vec<_> = f.elements().collect();
        assert_eq!(coset_partition(&f, &h, &all).unwrap_err(), Error::NotCosetAligned);
    }

    #[test]
    fn whole_group_single_block() {
        let f = FiniteField::prime(7).unwrap();
        let h = multiplicative_subgroup(&f, f.from_u64(3)).unwrap();
        assert_eq!(h.len(), 6);
        let ground: Vec<_> = f.nonzero_elements().collect();
        assert_eq!(coset_partition(&f, &h, &ground).unwrap().blocks().len(), 1);
    }

    #[test]
    fn example_one_annihilators() {
        let f = gf16();
        let e = |j: i64| f.alpha_pow(j);
        let h1 = additive_subgroup(&f, &[FieldElement::ONE, f.alpha()]).unwrap();
        let g1 = annihilator_polynomial(&f, &h1);
        assert_eq!(
            g1.coeffs(),
            &[FieldElement::ZERO, e(5), e(10), FieldElement::ZERO, FieldElement::ONE]
        );
        let h2 = additive_subgroup(&f, &[e(2), e(3)]).unwrap();
        let g2 = annihilator_polynomial(&f, &h2);
        assert_eq!(
            g2.coeffs(),
            &[FieldElement::ZERO, e(11), e(14), FieldElement::ZERO, FieldElement::ONE]
        );
        let zero = additive_subgroup(&f, &[]).unwrap();
        assert_eq!(annihilator_polynomial(&f, &zero), DensePolynomial::monomial(1));
    }

    #[test]
    fn partition_validation() {
        let f = FiniteField::prime(5).unwrap();
        let e = |v| f.from_u64(v);
        let ground = vec![e(1), e(2), e(3)];
        assert!(Partition::new(vec![vec![e(1)], vec![e(2), e(3)]], ground.clone()).is_ok());
        assert!(Partition::new(vec![vec![e(1)], vec![e(1), e(3)]], ground.clone()).is_err());
        assert!(Partition::new(vec![vec![e(1)]], ground).is_err());
    }
}
