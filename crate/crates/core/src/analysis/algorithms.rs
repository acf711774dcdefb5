use serde::Serialize;

use super::graph::{verify_recovering_sets, Combinations, RecoveringGraph};
use crate::constructions::{LinearCode, ParityCheckCode};
use crate::error::{Error, Result};
use crate::finite_field::FiniteField;
use crate::matrix::Matrix;

/// How one iteration extended `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum StepCase {
    /// `S ∪ Γ_t(j)` still had rank below `k`.
    Full,
    /// `S ∪ Γ_a(j) ∪ R` with `R` taken from `R_{a+1}^{(j)}`.
    Partial { a: usize, added: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub chosen: usize,
    #[serde(flatten)]
    pub case: StepCase,
    pub rank: usize,
    pub size: usize,
}

/// Coordinate set of rank `k - 1` and the iterations that built it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankSet {
    pub set: Vec<usize>,
    pub rank: usize,
    pub trace: Vec<Step>,
}

impl RankSet {
    /// `n - |S|`, an upper bound on the minimum distance.
    pub fn distance_bound(&self, n: usize) -> usize {
        n - self.set.len()
    }

    pub fn chosen(&self) -> Vec<usize> {
        self.trace.iter().map(|s| s.chosen).collect()
    }
}

/// Rank of the code restricted to `columns`.
pub fn rank_of(code: &dyn LinearCode, columns: &[usize]) -> usize {
    code.generator_matrix().rank_of(code.field(), columns)
}

/// Default selection: the lowest-index coordinate outside `S`.
pub fn lowest_index(in_set: &[bool]) -> Option<usize> {
    in_set.iter().position(|&b| !b)
}

/// Grows `S` until `rank(S) = k - 1`. `choose` receives the membership mask
/// of `S` and must return a coordinate outside it.
pub fn algorithm1(
    code: &dyn LinearCode,
    graph: &RecoveringGraph,
    choose: &mut dyn FnMut(&[bool]) -> Option<usize>,
) -> Result<RankSet> {
    let k = code.dimension();
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "rank-(k-1) search needs k >= 2, got {k}"
        )));
    }
    if !verify_recovering_sets(code, graph) {
        return Err(Error::GraphMismatch);
    }
    let n = code.length();
    let t = graph.t();
    let g = code.generator_matrix();
    let f = code.field();
    let mut in_set = vec![false; n];
    let mut rank = 0;
    let mut trace = Vec::new();
    let members = |mask: &[bool], extra: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = (0..n).filter(|&u| mask[u]).collect();
        for &e in extra {
            if !mask[e] && !v.contains(&e) {
                v.push(e);
            }
        }
        v
    };
    while rank + 2 <= k {
        let j = choose(&in_set)
            .filter(|&j| j < n && !in_set[j])
            .ok_or_else(|| Error::InvalidParameters("chooser returned no new coordinate".into()))?;
        let full = members(&in_set, &graph.gamma_a(j, t));
        let full_rank = g.rank_of(f, &full);
        let case = if full_rank < k {
            for &u in &full {
                in_set[u] = true;
            }
            rank = full_rank;
            StepCase::Full
        } else {
            let a = (0..t)
                .find(|&a| g.rank_of(f, &members(&in_set, &graph.gamma_a(j, a + 1))) == k)
                .expect("Γ_t(j) reaches rank k");
            let mut cur = members(&in_set, &graph.gamma_a(j, a));
            let mut cur_rank = g.rank_of(f, &cur);
            let mut added = Vec::new();
            for &x in &graph.sets(j)[a] {
                if cur_rank >= k - 1 {
                    break;
                }
                if !cur.contains(&x) {
                    cur.push(x);
                    added.push(x);
                    cur_rank = g.rank_of(f, &cur);
                }
            }
            for &u in &cur {
                in_set[u] = true;
            }
            rank = cur_rank;
            StepCase::Partial { a, added }
        };
        trace.push(Step {
            chosen: j,
            case,
            rank,
            size: in_set.iter().filter(|&&b| b).count(),
        });
    }
    Ok(RankSet {
        set: (0..n).filter(|&u| in_set[u]).collect(),
        rank,
        trace,
    })
}

/// [`algorithm1`] choosing an unchosen coordinate of minimal locality,
/// lowest index among ties.
pub fn algorithm2(
    code: &dyn LinearCode,
    graph: &RecoveringGraph,
    localities: &[usize],
) -> Result<RankSet> {
    if localities.len() != code.length() {
        return Err(Error::InvalidParameters(format!(
            "{} localities for {} coordinates",
            localities.len(),
            code.length()
        )));
    }
    let mut choose = |in_set: &[bool]| {
        (0..in_set.len())
            .filter(|&j| !in_set[j])
            .min_by_key(|&j| (localities[j], j))
    };
    algorithm1(code, graph, &mut choose)
}

/// Whether every `Γ`-subset of the columns of `pcode`'s parity-check matrix
/// is linearly independent.
pub fn check_gamma_columns(pcode: &ParityCheckCode, budget: u64) -> Result<bool> {
    let gamma = usize::try_from(pcode.gamma())
        .map_err(|_| Error::InvalidParameters("negative Γ".into()))?;
    columns_independent(pcode.field(), pcode.h(), gamma, budget)
}

/// Whether every `size`-subset of the columns of `h` has full rank.
pub fn columns_independent(field: &FiniteField, h: &Matrix, size: usize, budget: u64) -> Result<bool> {
    let total = binomial(h.cols() as u64, size as u64);
    if total.map_or(true, |t| t > budget) {
        return Err(Error::BudgetExceeded {
            budget,
            needed: total.unwrap_or(u64::MAX),
        });
    }
    Ok(Combinations::new(h.cols(), size).all(|cols| h.select_columns(&cols).rank(field) == size))
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}
