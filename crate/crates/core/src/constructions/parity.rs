use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{GeneratorMatrix, LinearCode, Provenance};
use crate::bounds::gamma;
use crate::error::{Error, Result};
use crate::finite_field::{is_prime, FieldElement, FiniteField};
use crate::matrix::Matrix;

/// Parameters of a parity-check construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C2Params {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
    pub v: usize,
    pub u: usize,
    pub q: u32,
    pub m: u32,
}

/// One repair group: an availability column followed by `t` blocks of `r`
/// columns. Local row `j` covers the availability column and block `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairGroup {
    pub availability: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl RepairGroup {
    pub fn columns(&self) -> Vec<usize> {
        let mut c = vec![self.availability];
        c.extend(self.blocks.iter().flatten());
        c
    }

    /// Support of each local parity row.
    pub fn row_supports(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| {
                let mut s = vec![self.availability];
                s.extend(b);
                s
            })
            .collect()
    }
}

/// `α_{i,1,0}` per group and `α_{i,j,h}` for `h = 1..r` per group and block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaTable {
    pub availability: Vec<FieldElement>,
    pub blocks: Vec<Vec<Vec<FieldElement>>>,
}

impl AlphaTable {
    /// Distinct powers `β^0, β^1, ...` of the field generator placed on the
    /// availability entries and on positions `h < r` of every block, with
    /// `α_{i,j,r} = 0`.
    pub fn standard(field: &FiniteField, v: usize, t: usize, r: usize) -> Self {
        let beta = field.alpha();
        let mut e = 0u64;
        let mut next = || {
            let x = field.pow(beta, e);
            e += 1;
            x
        };
        let mut availability = Vec::with_capacity(v);
        let mut blocks = Vec::with_capacity(v);
        for _ in 0..v {
            availability.push(next());
            let group: Vec<Vec<_>> = (0..t)
                .map(|_| {
                    let mut b: Vec<_> = (1..r).map(|_| next()).collect();
                    b.push(FieldElement::ZERO);
                    b
                })
                .collect();
            blocks.push(group);
        }
        AlphaTable {
            availability,
            blocks,
        }
    }

    fn check_shape(&self, v: usize, t: usize, r: usize) -> Result<()> {
        let ok = self.availability.len() == v
            && self.blocks.len() == v
            && self
                .blocks
                .iter()
                .all(|g| g.len() == t && g.iter().all(|b| b.len() == r));
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!(
                "alpha table must have shape {v} × {t} × {r}"
            )))
        }
    }

    /// `{α_{i,1,0} - Σ_l α_{i,l,r}} ∪ {α_{i,j,h} - α_{i,j,r} : h < r}`.
    pub fn differences(&self, field: &FiniteField) -> Vec<FieldElement> {
        let mut out = Vec::new();
        for (a0, group) in self.availability.iter().zip(&self.blocks) {
            let tail = group
                .iter()
                .fold(FieldElement::ZERO, |acc, b| field.add(acc, *b.last().expect("r >= 1")));
            out.push(field.sub(*a0, tail));
            for b in group {
                let last = *b.last().expect("r >= 1");
                out.extend(b[..b.len() - 1].iter().map(|&a| field.sub(a, last)));
            }
        }
        out
    }
}

/// Whether `elems` are linearly independent over the subfield `GF(q)`, via
/// the rank of the Moore matrix `[e_j^{q^i}]`.
pub fn gf_q_independent(field: &FiniteField, q: u32, elems: &[FieldElement]) -> bool {
    let s = elems.len();
    let mut rows = Vec::with_capacity(s);
    let mut cur = elems.to_vec();
    for _ in 0..s {
        rows.push(cur.clone());
        for e in &mut cur {
            *e = field.pow(*e, q as u64);
        }
    }
    Matrix::from_rows(rows).rank(field) == s
}

/// Code defined by an explicit parity-check matrix with repair groups.
#[derive(Clone, Debug)]
pub struct ParityCheckCode {
    field: Arc<FiniteField>,
    h: Matrix,
    params: C2Params,
    groups: Vec<RepairGroup>,
    alphas: AlphaTable,
    generator: GeneratorMatrix,
    pub provenance: Provenance,
}

impl ParityCheckCode {
    pub fn field_arc(&self) -> Arc<FiniteField> {
        Arc::clone(&self.field)
    }

    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn params(&self) -> C2Params {
        self.params
    }

    pub fn repair_groups(&self) -> &[RepairGroup] {
        &self.groups
    }

    pub fn availability_columns(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.availability).collect()
    }

    /// The first `k` availability columns.
    pub fn information_columns(&self) -> Vec<usize> {
        self.availability_columns()[..self.params.k].to_vec()
    }

    pub fn alphas(&self) -> &AlphaTable {
        &self.alphas
    }

    /// `Γ` for these parameters.
    pub fn gamma(&self) -> i64 {
        let p = self.params;
        gamma(p.n, p.k, p.r, p.t).expect("parameters validated at construction")
    }
}

impl LinearCode for ParityCheckCode {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn length(&self) -> usize {
        self.params.n
    }

    fn dimension(&self) -> usize {
        self.params.k
    }

    fn generator_matrix(&self) -> GeneratorMatrix {
        self.generator.clone()
    }

    fn parity_check_matrix(&self) -> Matrix {
        self.h.clone()
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut e = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, e))
}

/// Parity-check code of length `n = v(tr+1)` and dimension `k ≤ v` over
/// `GF(q^m)`. `m` defaults to `v(t(r-1)+1)`, the smallest admissible value.
pub fn construction2(
    q: u32,
    r: usize,
    t: usize,
    v: usize,
    k: usize,
    m: Option<u32>,
    alphas: Option<AlphaTable>,
) -> Result<ParityCheckCode> {
    let (p, e) = prime_power(q)
        .ok_or_else(|| Error::InvalidParameters(format!("q = {q} is not a prime power")))?;
    if r == 0 || t == 0 || v == 0 || k == 0 {
        return Err(Error::InvalidParameters("r, t, v, k must be positive".into()));
    }
    if k > v {
        return Err(Error::InvalidParameters(format!(
            "n >= k(tr+1) requires k <= v (k = {k}, v = {v})"
        )));
    }
    let width = t * r + 1;
    let n = v * width;
    let g = gamma(n, k, r, t)?;
    if g.rem_euclid(width as i64) == 0 {
        return Err(Error::InvalidParameters(format!(
            "tr+1 = {width} divides Γ = {g}"
        )));
    }
    let u = n - k - v * t;
    let m_min = v * (t * (r - 1) + 1);
    let m = m.unwrap_or(m_min as u32);
    if (m as usize) < m_min {
        return Err(Error::InvalidParameters(format!(
            "m = {m} is below v(t(r-1)+1) = {m_min}"
        )));
    }
    let field = Arc::new(FiniteField::new(
        p,
        e.checked_mul(m).ok_or(Error::FieldTooLarge { p, m })?,
        None,
    )?);
    let alphas = match alphas {
        Some(a) => {
            a.check_shape(v, t, r)?;
            if let Some(bad) = a
                .availability
                .iter()
                .chain(a.blocks.iter().flatten().flatten())
                .find(|x| x.index() >= field.order())
            {
                return Err(Error::NotAnElement(bad.index()));
            }
            a
        }
        None => AlphaTable::standard(&field, v, t, r),
    };
    if !gf_q_independent(&field, q, &alphas.differences(&field)) {
        return Err(Error::DependentAlphas);
    }

    let groups: Vec<RepairGroup> = (0..v)
        .map(|i| {
            let base = i * width;
            RepairGroup {
                availability: base,
                blocks: (0..t)
                    .map(|j| (0..r).map(|h| base + 1 + j * r + h).collect())
                    .collect(),
            }
        })
        .collect();

    let mut h = Matrix::zeros(v * t + u, n);
    for (i, grp) in groups.iter().enumerate() {
        for (j, support) in grp.row_supports().iter().enumerate() {
            for &c in support {
                h.set(i * t + j, c, FieldElement::ONE);
            }
        }
    }
    for (i, grp) in groups.iter().enumerate() {
        let mut cols = vec![(grp.availability, alphas.availability[i])];
        for (j, b) in grp.blocks.iter().enumerate() {
            cols.extend(b.iter().copied().zip(alphas.blocks[i][j].iter().copied()));
        }
        for (c, a) in cols {
            let mut x = a;
            for s in 0..u {
                h.set(v * t + s, c, x);
                x = field.pow(x, q as u64);
            }
        }
    }
    let rank = h.rank(&field);
    if rank != n - k {
        return Err(Error::RankDeficient {
            rank,
            expected: n - k,
        });
    }

    let info: Vec<usize> = groups[..k].iter().map(|g| g.availability).collect();
    let parity: Vec<usize> = (0..n).filter(|c| !info.contains(c)).collect();
    let hp = h.select_columns(&parity);
    let hi = h.select_columns(&info);
    let mut gm = Matrix::zeros(k, n);
    for (row, &ic) in info.iter().enumerate() {
        let rhs: Vec<_> = hi.column(row).iter().map(|&x| field.neg(x)).collect();
        let sol = hp.solve(&field, &rhs).ok_or(Error::RankDeficient {
            rank: hp.rank(&field),
            expected: n - k,
        })?;
        gm.set(row, ic, FieldElement::ONE);
        for (&pc, x) in parity.iter().zip(sol) {
            gm.set(row, pc, x);
        }
    }
    let generator = GeneratorMatrix::new(&field, gm)?;
    let provenance = Provenance::new("construction2")
        .with("q", q)
        .with("r", r)
        .with("t", t)
        .with("v", v)
        .with("k", k)
        .with("m", m);
    Ok(ParityCheckCode {
        field,
        h,
        params: C2Params {
            n,
            k,
            r,
            t,
            v,
            u,
            q,
            m,
        },
        groups,
        alphas,
        generator,
        provenance,
    })
}

impl ParityCheckCode {
    /// Rebuilds a code from a stored parity-check matrix and layout.
    pub fn from_parts(
        field: Arc<FiniteField>,
        h: Matrix,
        params: C2Params,
        groups: Vec<RepairGroup>,
        alphas: AlphaTable,
        provenance: Provenance,
    ) -> Result<Self> {
        let C2Params { n, k, .. } = params;
        if h.cols() != n || h.rows() != n - k || groups.len() < k {
            return Err(Error::Format("parity-check matrix shape mismatch".into()));
        }
        let info: Vec<usize> = groups[..k].iter().map(|g| g.availability).collect();
        if info.iter().any(|&c| c >= n) {
            return Err(Error::Format("availability column out of range".into()));
        }
        let kernel = h.null_space(&field);
        if kernel.rows() != k {
            return Err(Error::RankDeficient {
                rank: n - kernel.rows(),
                expected: n - k,
            });
        }
        // put the kernel in systematic form on the information columns
        let sub = kernel.select_columns(&info);
        let mut gm = Matrix::zeros(k, n);
        for row in 0..k {
            let mut e = vec![FieldElement::ZERO; k];
            e[row] = FieldElement::ONE;
            let coeffs = sub
                .transpose()
                .solve(&field, &e)
                .ok_or(Error::Format("information columns are not independent".into()))?;
            let word = kernel.left_mul_vec(&field, &coeffs);
            for c in 0..n {
                gm.set(row, c, word[c]);
            }
        }
        let generator = GeneratorMatrix::new(&field, gm)?;
        Ok(ParityCheckCode {
            field,
            h,
            params,
            groups,
            alphas,
            generator,
            provenance,
        })
    }
}
