#![allow(dead_code)]

use std::sync::Arc;

use lrc_core::analysis::{discover_recovering_sets, RecoveringGraph, DEFAULT_SUBSET_BUDGET};
use lrc_core::bounds::RecoveryProfile;
use lrc_core::constructions::{
    construction1, construction2, presets, Code, EvaluationCode, LinearCode, MatrixCode,
};
use lrc_core::matrix::Matrix;
use lrc_core::{FieldElement, FiniteField};

/// 3×3 binary product code (row and column parities) next to a single
/// symbol stored three times. `n = 12`, `k = 5`, localities 2 on the grid
/// and 1 on the copies.
pub fn toy_mixed() -> (MatrixCode, RecoveringGraph) {
    let field = Arc::new(FiniteField::prime(2).unwrap());
    let mut g = Matrix::zeros(5, 12);
    for (row, (a, b)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                if (i == a || i == 2) && (j == b || j == 2) {
                    g.set(row, i * 3 + j, FieldElement::ONE);
                }
            }
        }
    }
    for c in 9..12 {
        g.set(4, c, FieldElement::ONE);
    }
    let code = MatrixCode::new(field, g).unwrap();
    let mut sets = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let row = (0..3).filter(|&x| x != j).map(|x| i * 3 + x).collect();
            let col = (0..3).filter(|&x| x != i).map(|x| x * 3 + j).collect();
            sets.push(vec![row, col]);
        }
    }
    for c in 9..12 {
        let others: Vec<usize> = (9..12).filter(|&x| x != c).collect();
        sets.push(vec![vec![others[0]], vec![others[1]]]);
    }
    let graph = RecoveringGraph::new(12, RecoveryProfile::new(vec![2, 2]).unwrap(), sets).unwrap();
    (code, graph)
}

/// Minimum number of non-roots among the points over all nonzero message
/// polynomials, each evaluated by Horner's rule.
pub fn root_count_distance(code: &EvaluationCode) -> usize {
    let f = code.field();
    let q = f.order() as u64;
    let k = code.dimension();
    let polys = &code.basis().polys;
    let width = code.max_degree() + 1;
    let mut best = code.length();
    let total = q.pow(k as u32);
    for idx in 1..total {
        let mut coeffs = vec![FieldElement::ZERO; width];
        let mut rest = idx;
        for p in polys {
            let a = f.element((rest % q) as u32).unwrap();
            rest /= q;
            for (i, &c) in p.coeffs().iter().enumerate() {
                coeffs[i] = f.add(coeffs[i], f.mul(a, c));
            }
        }
        let weight = code
            .points()
            .iter()
            .filter(|&&x| {
                let v = coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c));
                !v.is_zero()
            })
            .count();
        best = best.min(weight);
    }
    best
}

/// `n - max{|Z| : rank(G_Z) < k}`: a nonzero codeword vanishes exactly on
/// a set of columns of deficient rank.
pub fn zero_set_distance(code: &dyn LinearCode) -> usize {
    let (n, k) = (code.length(), code.dimension());
    let g = code.generator_matrix();
    let f = code.field();
    for size in (k.saturating_sub(1)..n).rev() {
        let mut cols: Vec<usize> = (0..size).collect();
        loop {
            if g.rank_of(f, &cols) < k {
                return n - size;
            }
            let mut i = size;
            while i > 0 && cols[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            cols[i - 1] += 1;
            for j in i..size {
                cols[j] = cols[j - 1] + 1;
            }
        }
    }
    n
}

/// A named code with a recovering graph it satisfies and, where a desk
/// computation reaches it, the exact distance.
pub struct DeskCode {
    pub name: String,
    pub code: Box<dyn LinearCode>,
    pub graph: RecoveringGraph,
    pub distance: usize,
}

/// Every worked instance small enough for desk verification, with its
/// distance from [`zero_set_distance`] (example 3: from the sandwich
/// `n - deg ≤ d ≤ thm2`, both 23).
pub fn desk_codes() -> Vec<DeskCode> {
    let mut out = Vec::new();
    let ex1 = presets::example1();
    for k in 4..=9 {
        let code = ex1.code_with_dimension(k).unwrap();
        out.push(eval_entry(format!("example 1, k = {k}"), code, true));
    }
    out.push(eval_entry("example 2".into(), presets::example2().default_code().unwrap(), true));
    out.push(eval_entry("example 3".into(), presets::example3().default_code().unwrap(), false));
    for (p, l, t) in [(3, 1, 2), (2, 2, 2)] {
        let code = construction1(p, l, t).unwrap();
        out.push(eval_entry(format!("construction 1 ({p},{l},{t})"), code, true));
    }
    let c = construction1(2, 1, 3).unwrap();
    let graph =
        discover_recovering_sets(&c, &RecoveryProfile::new(vec![1, 2, 2]).unwrap(), DEFAULT_SUBSET_BUDGET)
            .unwrap();
    out.push(DeskCode {
        name: "construction 1 (2,1,3)".into(),
        distance: zero_set_distance(&c),
        code: Box::new(c),
        graph,
    });
    let c2 = construction2(2, 2, 2, 2, 2, None, None).unwrap();
    let graph =
        discover_recovering_sets(&c2, &RecoveryProfile::new(vec![2, 2]).unwrap(), DEFAULT_SUBSET_BUDGET)
            .unwrap();
    out.push(DeskCode {
        name: "construction 2 (2,2,2,2,2)".into(),
        distance: zero_set_distance(&c2),
        code: Box::new(c2),
        graph,
    });
    let (toy, graph) = toy_mixed();
    out.push(DeskCode {
        name: "mixed-locality toy".into(),
        distance: zero_set_distance(&toy),
        code: Box::new(toy),
        graph,
    });
    out
}

fn eval_entry(name: String, code: EvaluationCode, exact: bool) -> DeskCode {
    let graph = RecoveringGraph::from_evaluation_code(&code).unwrap();
    let distance = if exact {
        zero_set_distance(&code)
    } else {
        code.designed_distance()
    };
    DeskCode {
        name,
        code: Box::new(code),
        graph,
        distance,
    }
}

/// Every code whose generator and parity-check matrices should be
/// orthogonal and survive a file round trip.
pub fn all_codes() -> Vec<(String, Code)> {
    let mut out: Vec<(String, Code)> = Vec::new();
    for n in 1..=3 {
        let p = presets::example(n).unwrap();
        out.push((format!("example {n}"), p.default_code().unwrap().into()));
    }
    for (p, l, t) in [(3, 1, 2), (2, 2, 2), (2, 1, 3)] {
        out.push((format!("construction 1 ({p},{l},{t})"), construction1(p, l, t).unwrap().into()));
    }
    out.push(("construction 2 (2,2,2,2,2)".into(), construction2(2, 2, 2, 2, 2, None, None).unwrap().into()));
    out.push(("construction 2 (3,2,1,2,1)".into(), construction2(3, 2, 1, 2, 1, None, None).unwrap().into()));
    out
}

/// Product of coefficient vectors reduced by the field modulus, over the
/// integers mod `p`.
pub fn schoolbook_mul(field: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let p = field.characteristic() as u64;
    let m = field.degree() as usize;
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    if m > 1 {
        let modulus: Vec<u64> = field.modulus().iter().map(|&c| c as u64).collect();
        for d in (m..2 * m).rev() {
            let c = prod[d];
            if c != 0 {
                for (i, &mc) in modulus.iter().enumerate() {
                    let idx = d - m + i;
                    prod[idx] = (prod[idx] + p * p - c * mc % p) % p;
                }
            }
        }
    }
    prod.truncate(m);
    prod.into_iter().map(|c| c as u32).collect()
}

pub fn test_fields() -> Vec<FiniteField> {
    let mut out = Vec::new();
    for p in [2, 3, 13] {
        out.push(FiniteField::prime(p).unwrap());
    }
    out.push(FiniteField::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap());
    out.push(FiniteField::new(2, 5, Some(&[1, 0, 1, 0, 0, 1])).unwrap());
    for (p, m) in [(2, 3), (3, 2), (2, 6), (3, 4), (5, 3), (7, 2)] {
        out.push(FiniteField::new(p, m, None).unwrap());
    }
    out
}

/// Closure by repeated full sweeps until nothing changes.
pub fn naive_closure(graph: &RecoveringGraph, s: &[usize]) -> Vec<usize> {
    let mut colored = vec![false; graph.n()];
    for &u in s {
        colored[u] = true;
    }
    loop {
        let mut changed = false;
        for u in 0..graph.n() {
            if !colored[u] && graph.sets(u).iter().any(|r| r.iter().all(|&w| colored[w])) {
                colored[u] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..graph.n()).filter(|&u| colored[u]).collect()
}
