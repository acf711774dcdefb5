use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::bounds::{Rational, RecoveryProfile};
use crate::constructions::{EvaluationCode, LinearCode};
use crate::error::{Error, Result};

/// Per-vertex recovering sets `R_j^{(i)}`, colors ordered by ascending cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveringGraph {
    n: usize,
    profile: RecoveryProfile,
    sets: Vec<Vec<Vec<usize>>>,
}

impl RecoveringGraph {
    /// Checks that every vertex has `t` pairwise disjoint sets, none
    /// containing the vertex, with `1 ≤ |R_j| ≤ r_j`.
    pub fn new(n: usize, profile: RecoveryProfile, mut sets: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if sets.len() != n {
            return Err(Error::InvalidGraph(format!("{} vertices, expected {n}", sets.len())));
        }
        let caps = profile.caps();
        for (i, vs) in sets.iter_mut().enumerate() {
            if vs.len() != caps.len() {
                return Err(Error::InvalidGraph(format!(
                    "vertex {i} has {} sets, expected {}",
                    vs.len(),
                    caps.len()
                )));
            }
            let mut seen = BTreeSet::new();
            for (j, set) in vs.iter_mut().enumerate() {
                set.sort_unstable();
                if set.is_empty() || set.len() > caps[j] {
                    return Err(Error::InvalidGraph(format!(
                        "set {j} of vertex {i} has size {}, cap {}",
                        set.len(),
                        caps[j]
                    )));
                }
                for &u in set.iter() {
                    if u >= n || u == i || !seen.insert(u) {
                        return Err(Error::InvalidGraph(format!(
                            "sets of vertex {i} must be disjoint subsets of [n] without {i}"
                        )));
                    }
                }
            }
        }
        Ok(RecoveringGraph { n, profile, sets })
    }

    /// Block-minus-self sets from the code's partitions.
    pub fn from_evaluation_code(code: &EvaluationCode) -> Result<Self> {
        let points = code.points();
        let mut fams: Vec<_> = code
            .families()
            .iter()
            .map(|f| {
                let cap = f.partition.blocks().iter().map(Vec::len).max().unwrap_or(1) - 1;
                (cap, &f.partition)
            })
            .collect();
        fams.sort_by_key(|&(cap, _)| cap);
        let profile = RecoveryProfile::new(fams.iter().map(|&(c, _)| c).collect())?;
        let pos = |x| points.iter().position(|&p| p == x).expect("ground equals points");
        let sets = points
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                fams.iter()
                    .map(|(_, part)| {
                        let b = part.block_of(x).expect("partition covers the points");
                        part.blocks()[b]
                            .iter()
                            .map(|&y| pos(y))
                            .filter(|&u| u != i)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(points.len(), profile, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.profile.t()
    }

    pub fn profile(&self) -> &RecoveryProfile {
        &self.profile
    }

    pub fn sets(&self, i: usize) -> &[Vec<usize>] {
        &self.sets[i]
    }

    /// `{i} ∪ R_1^{(i)} ∪ ... ∪ R_a^{(i)}`, sorted.
    pub fn gamma_a(&self, i: usize, a: usize) -> Vec<usize> {
        let mut out: Vec<_> = std::iter::once(i)
            .chain(self.sets[i][..a].iter().flatten().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Largest recovering-set size at each vertex.
    pub fn localities(&self) -> Vec<usize> {
        self.sets
            .iter()
            .map(|vs| vs.iter().map(Vec::len).max().unwrap_or(0))
            .collect()
    }

    fn full_view(&self) -> View {
        View {
            active: vec![true; self.n],
            sets: self.sets.clone(),
        }
    }
}

/// Whether column `i` of the generator lies in the span of each `R_j^{(i)}`.
pub fn verify_recovering_sets(code: &dyn LinearCode, graph: &RecoveringGraph) -> bool {
    if graph.n() != code.length() {
        return false;
    }
    let g = code.generator_matrix();
    let f = code.field();
    (0..graph.n()).all(|i| {
        graph.sets(i).iter().all(|r| {
            let mut with = r.clone();
            with.push(i);
            g.rank_of(f, r) == g.rank_of(f, &with)
        })
    })
}

/// Searches for `t` disjoint recovering sets per coordinate with sizes
/// within `caps`. Candidates are the inclusion-minimal sets `R` with
/// `rank(R ∪ {i}) = rank(R)`, tried smallest first; `budget` bounds the
/// number of rank checks.
pub fn discover_recovering_sets(
    code: &dyn LinearCode,
    caps: &RecoveryProfile,
    budget: u64,
) -> Result<RecoveringGraph> {
    let n = code.length();
    let g = code.generator_matrix();
    let f = code.field();
    let rmax = *caps.caps().last().expect("profiles are nonempty");
    let mut checks = 0u64;
    let mut sets = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&u| u != i).collect();
        let mut cands: Vec<Vec<usize>> = Vec::new();
        for size in 1..=rmax.min(others.len()) {
            for combo in Combinations::new(others.len(), size) {
                let r: Vec<usize> = combo.iter().map(|&c| others[c]).collect();
                if cands.iter().any(|c| c.iter().all(|u| r.contains(u))) {
                    continue;
                }
                checks += 1;
                if checks > budget {
                    return Err(Error::BudgetExceeded {
                        budget,
                        needed: checks,
                    });
                }
                let mut with = r.clone();
                with.push(i);
                if g.rank_of(f, &r) == g.rank_of(f, &with) {
                    cands.push(r);
                }
            }
        }
        let mut chosen = Vec::new();
        if !pack(&cands, caps.caps(), &mut chosen) {
            return Err(Error::NoRecoveringSets(i));
        }
        sets.push(chosen.into_iter().map(|c| cands[c].clone()).collect());
    }
    RecoveringGraph::new(n, caps.clone(), sets)
}

/// Backtracking choice of pairwise disjoint candidates, one per cap.
fn pack(cands: &[Vec<usize>], caps: &[usize], chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == caps.len() {
        return true;
    }
    for (c, set) in cands.iter().enumerate() {
        if set.len() > caps[j] || chosen.contains(&c) {
            continue;
        }
        if chosen
            .iter()
            .any(|&o| cands[o].iter().any(|u| set.contains(u)))
        {
            continue;
        }
        chosen.push(c);
        if pack(cands, caps, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Lexicographic `size`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, size: usize) -> Self {
        Combinations {
            n,
            idx: (0..size).collect(),
            done: size > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let s = self.idx.len();
        let mut p = s;
        while p > 0 && self.idx[p - 1] == self.n - s + p - 1 {
            p -= 1;
        }
        if p == 0 {
            self.done = true;
        } else {
            self.idx[p - 1] += 1;
            for x in p..s {
                self.idx[x] = self.idx[x - 1] + 1;
            }
        }
        Some(out)
    }
}

/// A subgraph: active vertices and, per vertex, its remaining sets in
/// color order.
#[derive(Clone, Debug)]
struct View {
    active: Vec<bool>,
    sets: Vec<Vec<Vec<usize>>>,
}

impl View {
    fn closure(&self, s: &[usize]) -> Vec<bool> {
        let mut colored = vec![false; self.active.len()];
        for &v in s {
            colored[v] = true;
        }
        loop {
            let round: Vec<usize> = (0..colored.len())
                .filter(|&u| self.active[u] && !colored[u])
                .filter(|&u| {
                    self.sets[u]
                        .iter()
                        .any(|set| set.iter().all(|&w| colored[w]))
                })
                .collect();
            if round.is_empty() {
                return colored;
            }
            for u in round {
                colored[u] = true;
            }
        }
    }

    /// Drops `v`; every other vertex loses the set containing `v`, or its
    /// first (smallest-cap) set when none does.
    fn without_vertex(&self, v: usize) -> View {
        let mut next = self.clone();
        next.active[v] = false;
        next.sets[v].clear();
        for u in 0..next.active.len() {
            if !next.active[u] {
                continue;
            }
            let sets = &mut next.sets[u];
            let idx = sets.iter().position(|s| s.contains(&v)).unwrap_or(0);
            sets.remove(idx);
        }
        next
    }

    /// Induced subgraph on active vertices outside `removed`.
    fn induced(&self, removed: &[bool]) -> View {
        let active: Vec<bool> = self
            .active
            .iter()
            .zip(removed)
            .map(|(&a, &r)| a && !r)
            .collect();
        let sets = (0..active.len())
            .map(|u| {
                if !active[u] {
                    return Vec::new();
                }
                self.sets[u]
                    .iter()
                    .map(|s| s.iter().copied().filter(|&w| active[w]).collect())
                    .collect()
            })
            .collect();
        View { active, sets }
    }

    fn depth(&self, v: usize) -> usize {
        self.sets[v].len()
    }
}

/// Least fixed point of "color every vertex with a fully colored
/// recovering set", starting from `s`. Colored in breadth-first rounds.
pub fn closure(graph: &RecoveringGraph, s: &[usize]) -> Vec<usize> {
    let colored = graph.full_view().closure(s);
    (0..graph.n()).filter(|&u| colored[u]).collect()
}

/// `|Cl(S)| / |S|`.
pub fn expansion_ratio(graph: &RecoveringGraph, s: &[usize]) -> Result<Rational> {
    let distinct: BTreeSet<_> = s.iter().copied().collect();
    if distinct.is_empty() {
        return Err(Error::InvalidParameters("expansion ratio of an empty set".into()));
    }
    let cl = closure(graph, s).len();
    Ok(Ratio::new(cl as i64, distinct.len() as i64))
}

/// A set `S` with `v ∈ Cl(S)`, `|S| ≤ ∏ r_i` and `e(S) ≥ e_t`, built by the
/// recursive proof construction: remove `v` and one set per vertex
/// (preferring the one containing `v`, otherwise the smallest), recurse on
/// the members of `v`'s smallest set, and shrink the graph by the closure of
/// the pieces found so far.
pub fn find_expanding_set(graph: &RecoveringGraph, v: usize) -> Vec<usize> {
    let mut out = expand(&graph.full_view(), v);
    out.sort_unstable();
    out.dedup();
    out
}

fn expand(view: &View, v: usize) -> Vec<usize> {
    if view.depth(v) == 0 {
        return vec![v];
    }
    let smallest = view.sets[v][0].clone();
    let g1 = view.without_vertex(v);
    let mut found: Vec<usize> = Vec::new();
    for (idx, &vi) in smallest.iter().enumerate() {
        let piece = if idx == 0 {
            expand(&g1, vi)
        } else {
            let cl = g1.closure(&found);
            if cl[vi] {
                continue;
            }
            expand(&g1.induced(&cl), vi)
        };
        found.extend(piece);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> RecoveringGraph {
        // 0,1,2 each recover from the other two, one color
        let sets = vec![vec![vec![1, 2]], vec![vec![0, 2]], vec![vec![0, 1]]];
        RecoveringGraph::new(3, RecoveryProfile::new(vec![2]).unwrap(), sets).unwrap()
    }

    #[test]
    fn closure_fills_the_third_vertex() {
        let g = triangle();
        assert_eq!(closure(&g, &[0, 1]), vec![0, 1, 2]);
        assert_eq!(closure(&g, &[0]), vec![0]);
        assert!(closure(&g, &[]).is_empty());
    }

    #[test]
    fn invalid_graphs() {
        let p = RecoveryProfile::new(vec![1]).unwrap();
        assert!(RecoveringGraph::new(2, p.clone(), vec![vec![vec![0]], vec![vec![0]]]).is_err());
        assert!(RecoveringGraph::new(2, p.clone(), vec![vec![vec![]], vec![vec![0]]]).is_err());
        assert!(RecoveringGraph::new(2, p, vec![vec![vec![1]], vec![vec![0]]]).is_ok());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn expanding_set_on_triangle() {
        let g = triangle();
        let s = find_expanding_set(&g, 0);
        assert!(closure(&g, &s).contains(&0));
        assert!(s.len() <= 2);
        assert!(expansion_ratio(&g, &s).unwrap() >= Ratio::new(3, 2));
    }
}
