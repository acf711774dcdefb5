use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_eq1, bound_thm2, BoundEntry};
use crate::constructions::{Code, EvaluationCode, LinearCode};
use crate::finite_field::{FieldElement, FiniteField};
use crate::matrix::Matrix;
use crate::poly_spaces::DensePolynomial;

/// Default cap on enumerated messages.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 100_000_000;
/// Cap used by `--extended` runs.
pub const EXTENDED_CODEWORD_BUDGET: u64 = 1_000_000_000;
/// Default cap on subset rank checks.
pub const DEFAULT_SUBSET_BUDGET: u64 = 1_000_000;

/// Distance facts gathered for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub n: usize,
    pub k: usize,
    pub exact: Option<usize>,
    pub lb_degree: Option<usize>,
    pub lb_gcd: Option<usize>,
    pub ub: Vec<BoundEntry>,
    pub method: String,
    pub enumerations: u64,
    pub budget: u64,
    pub budget_exhausted: bool,
}

impl DistanceReport {
    pub fn min_upper_bound(&self) -> Option<i64> {
        self.ub.iter().map(|b| b.value).min()
    }

    /// `lb_degree ≤ lb_gcd ≤ exact ≤ min(ub)` over whichever values exist.
    pub fn is_consistent(&self) -> bool {
        let chain: Vec<i64> = [self.lb_degree, self.lb_gcd, self.exact]
            .iter()
            .flatten()
            .map(|&v| v as i64)
            .chain(self.min_upper_bound())
            .collect();
        chain.windows(2).all(|w| w[0] <= w[1])
    }
}

/// `q^k`, if it fits in a `u64`.
pub fn message_space_size(q: u32, k: usize) -> Option<u64> {
    (q as u64).checked_pow(k as u32)
}

/// Exact minimum distance by enumerating every message, or `exact = None`
/// when `q^k` exceeds `budget`.
pub fn min_distance_exhaustive(code: &dyn LinearCode, budget: u64) -> DistanceReport {
    let (n, k) = (code.length(), code.dimension());
    let size = message_space_size(code.field().order(), k);
    let within = size.is_some_and(|s| s <= budget);
    let exact = within.then(|| min_weight(code.field(), code.generator_matrix().matrix()));
    DistanceReport {
        n,
        k,
        exact: exact.flatten(),
        lb_degree: None,
        lb_gcd: None,
        ub: vec![BoundEntry {
            name: "singleton",
            value: n as i64 - k as i64 + 1,
        }],
        method: "generator enumeration".into(),
        enumerations: if within { size.unwrap_or(u64::MAX) } else { 0 },
        budget,
        budget_exhausted: !within,
    }
}

/// `n - max deg f_a` over the code space; the maximum is the top echelon
/// degree.
pub fn distance_lb_degree(code: &EvaluationCode) -> usize {
    code.length()
        .saturating_sub(code.basis().top_degree().unwrap_or(0))
}

/// `n - max deg gcd(f_a, ∏_{a ∈ A}(x - a))` over all nonzero `f_a`, computed
/// with a literal Euclidean gcd per message. `None` when `q^k > budget`.
pub fn distance_lb_gcd(code: &EvaluationCode, budget: u64) -> Option<usize> {
    let field = code.field();
    let size = message_space_size(field.order(), code.dimension())?;
    if size > budget {
        return None;
    }
    let vanishing = DensePolynomial::from_roots(field, code.points());
    let width = code.basis().top_degree().unwrap_or(0) + 1;
    let rows: Vec<Vec<FieldElement>> = code
        .basis()
        .polys
        .iter()
        .map(|p| (0..width).map(|i| p.coeff(i)).collect())
        .collect();
    let max_gcd = if field.order() <= 256 {
        let tables = Tables::new(field);
        max_gcd_degree(&tables, &rows, vanishing.coeffs())
    } else {
        max_gcd_degree(field, &rows, vanishing.coeffs())
    };
    Some(code.length() - max_gcd)
}

/// Every distance fact available for `code` within `budget`.
pub fn distance_report(code: &Code, budget: u64) -> DistanceReport {
    let mut report = min_distance_exhaustive(code, budget);
    match code {
        Code::Evaluation(c) => {
            report.lb_degree = Some(distance_lb_degree(c));
            report.lb_gcd = distance_lb_gcd(c, budget);
            // the partition bound only applies when the blocks really recover
            if let (true, Ok(profile)) = (c.check_local_recovery(), c.recovery_profile()) {
                if let Ok(v) = bound_thm2(report.n, report.k, &profile) {
                    report.ub.push(BoundEntry { name: "thm2", value: v });
                }
            }
        }
        Code::ParityCheck(c) => {
            let p = c.params();
            if let Ok(v) = bound_eq1(p.n, p.k, p.r, p.t) {
                report.ub.push(BoundEntry { name: "eq1", value: v });
            }
        }
    }
    report
}

/// Minimum nonzero weight of the row space of `g`, or `None` if `g` has no
/// rows. The last row is handled by a histogram: for each prefix
/// combination `b`, coordinate `j` vanishes for exactly one multiple
/// `c` of the last row (or for all `c` when that row is zero at `j`).
pub(crate) fn min_weight(field: &FiniteField, g: &Matrix) -> Option<usize> {
    let k = g.rows();
    if k == 0 {
        return None;
    }
    let n = g.cols();
    let q = field.order() as usize;
    let elems: Vec<FieldElement> = field.elements().collect();
    let scaled: Vec<Vec<Vec<FieldElement>>> = (0..k - 1)
        .map(|i| {
            elems
                .iter()
                .map(|&a| g.row(i).iter().map(|&x| field.mul(a, x)).collect())
                .collect()
        })
        .collect();
    let last = g.row(k - 1);
    let active: Vec<usize> = (0..n).filter(|&j| !last[j].is_zero()).collect();
    let passive: Vec<usize> = (0..n).filter(|&j| last[j].is_zero()).collect();
    // kill[a][b]: the multiplier c with b + c·last_j = 0 for the a-th active column
    let kill: Vec<Vec<u32>> = active
        .iter()
        .map(|&j| {
            let inv = field.inv(last[j]).expect("nonzero");
            elems
                .iter()
                .map(|&b| field.neg(field.mul(b, inv)).index())
                .collect()
        })
        .collect();
    let ctx = WeightCtx {
        field,
        q,
        n,
        scaled: &scaled,
        active: &active,
        passive: &passive,
        kill: &kill,
    };
    let levels = k - 1;
    let split = split_depth(q, levels);
    let prefixes = q.pow(split as u32);
    let best = (0..prefixes)
        .into_par_iter()
        .map(|p| {
            let mut w = ctx.worker(levels);
            let mut nonzero = false;
            let mut rest = p;
            for level in 0..split {
                let a = rest % q;
                rest /= q;
                nonzero |= a != 0;
                w.push(&ctx, level, a);
            }
            w.run(&ctx, split, nonzero)
        })
        .min()
        .unwrap_or(usize::MAX);
    Some(best)
}

/// Smallest prefix depth giving at least 64 independent work items.
fn split_depth(q: usize, levels: usize) -> usize {
    let mut d = 0;
    let mut items = 1usize;
    while d < levels && items < 64 {
        items = items.saturating_mul(q);
        d += 1;
    }
    d
}

struct WeightCtx<'a> {
    field: &'a FiniteField,
    q: usize,
    n: usize,
    scaled: &'a [Vec<Vec<FieldElement>>],
    active: &'a [usize],
    passive: &'a [usize],
    kill: &'a [Vec<u32>],
}

impl WeightCtx<'_> {
    fn worker(&self, levels: usize) -> WeightWorker {
        WeightWorker {
            bufs: vec![vec![FieldElement::ZERO; self.n]; levels + 1],
            hist: vec![0; self.q],
        }
    }
}

struct WeightWorker {
    bufs: Vec<Vec<FieldElement>>,
    hist: Vec<usize>,
}

impl WeightWorker {
    fn push(&mut self, ctx: &WeightCtx, level: usize, a: usize) {
        let (lo, hi) = self.bufs.split_at_mut(level + 1);
        for ((o, &x), &y) in hi[0].iter_mut().zip(&lo[level]).zip(&ctx.scaled[level][a]) {
            *o = ctx.field.add(x, y);
        }
    }

    fn run(&mut self, ctx: &WeightCtx, level: usize, nonzero: bool) -> usize {
        if level == self.bufs.len() - 1 {
            return self.leaf(ctx, level, nonzero);
        }
        let mut best = usize::MAX;
        for a in 0..ctx.q {
            self.push(ctx, level, a);
            best = best.min(self.run(ctx, level + 1, nonzero || a != 0));
        }
        best
    }

    fn leaf(&mut self, ctx: &WeightCtx, level: usize, nonzero: bool) -> usize {
        let base = &self.bufs[level];
        let fixed = ctx.passive.iter().filter(|&&j| base[j].is_zero()).count();
        let mut top = 0;
        for (a, &j) in ctx.active.iter().enumerate() {
            let c = ctx.kill[a][base[j].index() as usize] as usize;
            self.hist[c] += 1;
            if c != 0 {
                top = top.max(self.hist[c]);
            }
        }
        let mut zeros = fixed + top;
        if nonzero {
            zeros = zeros.max(fixed + self.hist[0]);
        }
        for (a, &j) in ctx.active.iter().enumerate() {
            self.hist[ctx.kill[a][base[j].index() as usize] as usize] = 0;
        }
        ctx.n - zeros
    }
}

/// Field operations needed by the gcd search.
trait Ops: Sync {
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement;
    fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement;
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement;
    fn inv(&self, a: FieldElement) -> FieldElement;
    fn order(&self) -> usize;
    fn elements(&self) -> Vec<FieldElement>;
}

impl Ops for FiniteField {
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FiniteField::add(self, a, b)
    }
    fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FiniteField::sub(self, a, b)
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FiniteField::mul(self, a, b)
    }
    fn inv(&self, a: FieldElement) -> FieldElement {
        FiniteField::inv(self, a).expect("nonzero")
    }
    fn order(&self) -> usize {
        FiniteField::order(self) as usize
    }
    fn elements(&self) -> Vec<FieldElement> {
        FiniteField::elements(self).collect()
    }
}

/// Full addition, subtraction and multiplication tables for small fields.
struct Tables {
    q: usize,
    add: Vec<FieldElement>,
    sub: Vec<FieldElement>,
    mul: Vec<FieldElement>,
    inv: Vec<FieldElement>,
    elems: Vec<FieldElement>,
}

impl Tables {
    fn new(field: &FiniteField) -> Self {
        let elems: Vec<_> = field.elements().collect();
        let q = elems.len();
        let mut add = Vec::with_capacity(q * q);
        let mut sub = Vec::with_capacity(q * q);
        let mut mul = Vec::with_capacity(q * q);
        for &a in &elems {
            for &b in &elems {
                add.push(field.add(a, b));
                sub.push(field.sub(a, b));
                mul.push(field.mul(a, b));
            }
        }
        let inv = elems
            .iter()
            .map(|&a| field.inv(a).unwrap_or(FieldElement::ZERO))
            .collect();
        Tables {
            q,
            add,
            sub,
            mul,
            inv,
            elems,
        }
    }

    #[inline]
    fn at(&self, a: FieldElement, b: FieldElement) -> usize {
        a.index() as usize * self.q + b.index() as usize
    }
}

impl Ops for Tables {
    #[inline]
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add[self.at(a, b)]
    }
    #[inline]
    fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.sub[self.at(a, b)]
    }
    #[inline]
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul[self.at(a, b)]
    }
    #[inline]
    fn inv(&self, a: FieldElement) -> FieldElement {
        self.inv[a.index() as usize]
    }
    fn order(&self) -> usize {
        self.q
    }
    fn elements(&self) -> Vec<FieldElement> {
        self.elems.clone()
    }
}

/// Degree of the highest nonzero coefficient in `p[..len]`, if any.
#[inline]
fn top(p: &[FieldElement], mut len: usize) -> Option<usize> {
    while len > 0 {
        if !p[len - 1].is_zero() {
            return Some(len - 1);
        }
        len -= 1;
    }
    None
}

/// Degree of `gcd(a, b)` for nonzero `b`, destroying both buffers.
fn gcd_degree<O: Ops>(ops: &O, a: &mut [FieldElement], b: &mut [FieldElement], db: usize) -> usize {
    let (mut x, mut y) = (a, b);
    let mut dx = top(x, x.len());
    let mut dy = db;
    loop {
        // x <- x mod y
        let lead_inv = ops.inv(y[dy]);
        while let Some(d) = dx {
            if d < dy {
                break;
            }
            let c = ops.mul(x[d], lead_inv);
            let shift = d - dy;
            for i in 0..=dy {
                x[shift + i] = ops.sub(x[shift + i], ops.mul(c, y[i]));
            }
            dx = top(x, d);
        }
        match dx {
            None => return dy,
            Some(d) => {
                std::mem::swap(&mut x, &mut y);
                dx = Some(dy);
                dy = d;
            }
        }
    }
}

fn max_gcd_degree<O: Ops>(ops: &O, rows: &[Vec<FieldElement>], vanishing: &[FieldElement]) -> usize {
    let k = rows.len();
    let width = rows[0].len();
    let q = ops.order();
    let elems = ops.elements();
    let scaled: Vec<Vec<Vec<FieldElement>>> = rows
        .iter()
        .map(|row| {
            elems
                .iter()
                .map(|&a| row.iter().map(|&x| ops.mul(a, x)).collect())
                .collect()
        })
        .collect();
    let split = split_depth(q, k);
    let prefixes = q.pow(split as u32);
    (0..prefixes)
        .into_par_iter()
        .map(|p| {
            let mut w = GcdWorker {
                bufs: vec![vec![FieldElement::ZERO; width]; k + 1],
                va: vec![FieldElement::ZERO; vanishing.len()],
                vb: vec![FieldElement::ZERO; width],
            };
            let mut rest = p;
            for level in 0..split {
                let a = rest % q;
                rest /= q;
                w.push(ops, &scaled, level, a);
            }
            w.run(ops, &scaled, vanishing, split)
        })
        .max()
        .unwrap_or(0)
}

struct GcdWorker {
    bufs: Vec<Vec<FieldElement>>,
    va: Vec<FieldElement>,
    vb: Vec<FieldElement>,
}

impl GcdWorker {
    fn push<O: Ops>(&mut self, ops: &O, scaled: &[Vec<Vec<FieldElement>>], level: usize, a: usize) {
        let (lo, hi) = self.bufs.split_at_mut(level + 1);
        for ((o, &x), &y) in hi[0].iter_mut().zip(&lo[level]).zip(&scaled[level][a]) {
            *o = ops.add(x, y);
        }
    }

    fn run<O: Ops>(
        &mut self,
        ops: &O,
        scaled: &[Vec<Vec<FieldElement>>],
        vanishing: &[FieldElement],
        level: usize,
    ) -> usize {
        if level == scaled.len() {
            let f = &self.bufs[level];
            let Some(df) = top(f, f.len()) else {
                return 0;
            };
            self.va.copy_from_slice(vanishing);
            self.vb.copy_from_slice(f);
            return gcd_degree(ops, &mut self.va, &mut self.vb, df);
        }
        let mut best = 0;
        for a in 0..ops.order() {
            self.push(ops, scaled, level, a);
            best = best.max(self.run(ops, scaled, vanishing, level + 1));
        }
        best
    }
}
