//! Closed-form upper bounds on the minimum distance of LRCs with
//! availability, and the integer helpers used by their proofs.
//!
//! Every bound returns the raw formula value, which may exceed the Singleton
//! bound; [`effective_bound`] clips it. All arithmetic is exact.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Recovering-set size caps `(r_1, ..., r_t)`, stored ascending. The order
/// the caps were given in is kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RecoveryProfile {
    sorted: Vec<usize>,
    original: Vec<usize>,
}

impl RecoveryProfile {
    pub fn new(caps: Vec<usize>) -> Result<Self> {
        if caps.contains(&0) {
            return Err(Error::InvalidParameters("recovery set sizes must be at least 1".into()));
        }
        let mut sorted = caps.clone();
        sorted.sort_unstable();
        Ok(RecoveryProfile {
            sorted,
            original: caps,
        })
    }

    /// `(r, ..., r)` with `t` entries.
    pub fn constant(r: usize, t: usize) -> Result<Self> {
        Self::new(vec![r; t])
    }

    pub fn caps(&self) -> &[usize] {
        &self.sorted
    }

    pub fn original_order(&self) -> &[usize] {
        &self.original
    }

    pub fn t(&self) -> usize {
        self.sorted.len()
    }

    /// `r_1 r_2 ... r_i`.
    pub fn prefix_product(&self, i: usize) -> i64 {
        self.sorted[..i].iter().map(|&r| r as i64).product()
    }

    pub fn product(&self) -> i64 {
        self.prefix_product(self.t())
    }
}

/// Information locality profile: `counts[j]` information symbols have
/// locality `j`, all with availability `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalityProfile {
    counts: BTreeMap<usize, usize>,
    t: usize,
}

impl LocalityProfile {
    pub fn new(counts: impl IntoIterator<Item = (usize, usize)>, t: usize) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (j, kj) in counts {
            if j == 0 {
                return Err(Error::InvalidParameters("locality must be at least 1".into()));
            }
            *map.entry(j).or_insert(0) += kj;
        }
        map.retain(|_, kj| *kj > 0);
        if map.is_empty() {
            return Err(Error::InvalidParameters("locality profile has k = 0".into()));
        }
        if t == 0 {
            return Err(Error::InvalidParameters("availability must be at least 1".into()));
        }
        Ok(LocalityProfile { counts: map, t })
    }

    pub fn k(&self) -> usize {
        self.counts.values().sum()
    }

    /// Largest locality with a nonzero count.
    pub fn r_max(&self) -> usize {
        *self.counts.keys().next_back().expect("profile is nonempty")
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn count(&self, j: usize) -> usize {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&j, &k)| (j, k))
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || n <= k {
        return Err(Error::InvalidParameters(format!("need n > k >= 1, got n={n}, k={k}")));
    }
    Ok(())
}

/// Information locality `r` with availability `t`:
/// `n - k - ⌈(t(k-1)+1)/(t(r-1)+1)⌉ + 2`.
pub fn bound_eq1(n: usize, k: usize, r: usize, t: usize) -> Result<i64> {
    check_nk(n, k)?;
    if r == 0 || t == 0 {
        return Err(Error::InvalidParameters("need r >= 1 and t >= 1".into()));
    }
    let (n, k, r, t) = (n as i64, k as i64, r as i64, t as i64);
    Ok(n - k - ceil_div(t * (k - 1) + 1, t * (r - 1) + 1) + 2)
}

/// All-symbol locality `r` with availability `t`:
/// `n - Σ_{i=0}^{t} ⌊(k-1)/r^i⌋`.
pub fn bound_eq2(n: usize, k: usize, r: usize, t: usize) -> Result<i64> {
    check_nk(n, k)?;
    if r == 0 {
        return Err(Error::InvalidParameters("need r >= 1".into()));
    }
    let mut sum = 0i64;
    let mut power = 1i64;
    for _ in 0..=t {
        sum += (k as i64 - 1) / power;
        power = power.saturating_mul(r as i64);
    }
    Ok(n as i64 - sum)
}

/// Irregular information locality:
/// `n - k - ⌈(t(k-1)+1)/(Σ(r_j-1)+1)⌉ + 2`.
pub fn bound_thm1(n: usize, k: usize, profile: &RecoveryProfile) -> Result<i64> {
    check_nk(n, k)?;
    if profile.t() == 0 {
        return Err(Error::InvalidParameters("profile is empty".into()));
    }
    let t = profile.t() as i64;
    let denom: i64 = profile.caps().iter().map(|&r| r as i64 - 1).sum::<i64>() + 1;
    let (n, k) = (n as i64, k as i64);
    Ok(n - k - ceil_div(t * (k - 1) + 1, denom) + 2)
}

/// Irregular all-symbol locality:
/// `n - k + 1 - Σ_{i=1}^{t} ⌊(k-1)/(r_1⋯r_i)⌋` with ascending caps.
pub fn bound_thm2(n: usize, k: usize, profile: &RecoveryProfile) -> Result<i64> {
    check_nk(n, k)?;
    let k1 = k as i64 - 1;
    let sum: i64 = (1..=profile.t()).map(|i| k1 / profile.prefix_product(i)).sum();
    Ok(n as i64 - k as i64 + 1 - sum)
}

/// Unequal information locality with availability `t`, taking `r` as the
/// largest locality present:
/// `n - k + 2 - t Σ_{j<r} ⌈k_j/(t(j-1)+1)⌉ - ⌈(t(k_r-1)+1)/(t(r-1)+1)⌉`.
pub fn bound_thm3(n: usize, profile: &LocalityProfile) -> Result<i64> {
    let k = profile.k();
    check_nk(n, k)?;
    let t = profile.t() as i64;
    let r = profile.r_max();
    let lower: i64 = profile
        .counts()
        .filter(|&(j, _)| j < r)
        .map(|(j, kj)| ceil_div(kj as i64, t * (j as i64 - 1) + 1))
        .sum();
    let kr = profile.count(r) as i64;
    let top = ceil_div(t * (kr - 1) + 1, t * (r as i64 - 1) + 1);
    Ok(n as i64 - k as i64 + 2 - t * lower - top)
}

/// Column-independence threshold: `n - k + 1 - ⌈(t(k-1)+1)/(t(r-1)+1)⌉`.
pub fn gamma(n: usize, k: usize, r: usize, t: usize) -> Result<i64> {
    check_nk(n, k)?;
    if r == 0 || t == 0 {
        return Err(Error::InvalidParameters("need r >= 1 and t >= 1".into()));
    }
    let (n, k, r, t) = (n as i64, k as i64, r as i64, t as i64);
    Ok(n - k + 1 - ceil_div(t * (k - 1) + 1, t * (r - 1) + 1))
}

/// `min(bound, n - k + 1)`.
pub fn effective_bound(bound: i64, n: usize, k: usize) -> i64 {
    bound.min(n as i64 - k as i64 + 1)
}

/// Digits of `m` in the unequal radix `{1, r_1, r_1 r_2, ..., r_1⋯r_t}`
/// with a top digit of range `r_t`:
/// `m = β r_t ∏r_i + Σ_{i=1}^{t} α_i ∏_{j≤i} r_j + α_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadixDecomposition {
    pub beta: i64,
    /// `α_0, ..., α_t`.
    pub alpha: Vec<i64>,
    pub profile: RecoveryProfile,
}

impl RadixDecomposition {
    pub fn reconstruct(&self) -> i64 {
        let p = &self.profile;
        let t = p.t();
        let mut m = self.beta * p.caps()[t - 1] as i64 * p.product();
        for (i, &a) in self.alpha.iter().enumerate() {
            m += a * p.prefix_product(i);
        }
        m
    }
}

pub fn radix_decompose(m: u64, profile: &RecoveryProfile) -> Result<RadixDecomposition> {
    let t = profile.t();
    if t == 0 {
        return Err(Error::InvalidParameters("profile is empty".into()));
    }
    let caps = profile.caps();
    let mut rest = m as i64;
    let mut alpha = Vec::with_capacity(t + 1);
    for &r in caps {
        alpha.push(rest % r as i64);
        rest /= r as i64;
    }
    let rt = caps[t - 1] as i64;
    alpha.push(rest % rt);
    Ok(RadixDecomposition {
        beta: rest / rt,
        alpha,
        profile: profile.clone(),
    })
}

/// `ẽ_i = 1 + Σ_{j=1}^{i} 1/(r_1⋯r_j)` for the ascending caps.
pub fn expansion_target(profile: &RecoveryProfile, i: usize) -> Rational {
    (1..=i).fold(Rational::from_integer(1), |acc, j| {
        acc + Rational::new(1, profile.prefix_product(j))
    })
}

/// `e_t` and `ẽ_0, ..., ẽ_{t-1}` (with `ẽ_0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTargets {
    pub e_t: Rational,
    pub partial: Vec<Rational>,
}

pub fn expansion_targets(profile: &RecoveryProfile) -> ExpansionTargets {
    let t = profile.t();
    ExpansionTargets {
        e_t: expansion_target(profile, t),
        partial: (0..t).map(|i| expansion_target(profile, i)).collect(),
    }
}

/// Both sides of the unequal-radix identity for `m`.
pub fn lemma2_sides(m: u64, profile: &RecoveryProfile) -> Result<(Rational, Rational)> {
    let d = radix_decompose(m, profile)?;
    let t = profile.t();
    let prod = profile.product();
    let mi = m as i64;
    let mut lhs = Rational::from_integer(mi / prod) * expansion_target(profile, t)
        * Rational::from_integer(prod);
    for i in 0..t {
        lhs += Rational::from_integer(d.alpha[i])
            * expansion_target(profile, i)
            * Rational::from_integer(profile.prefix_product(i));
    }
    let rhs: i64 = (0..=t).map(|i| mi / profile.prefix_product(i)).sum();
    Ok((lhs, Rational::from_integer(rhs)))
}

pub fn lemma2_check(m: u64, profile: &RecoveryProfile) -> Result<bool> {
    let (lhs, rhs) = lemma2_sides(m, profile)?;
    Ok(lhs == rhs)
}

/// One named bound value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: i64,
}

/// Inputs for [`bound_report`]; any subset may be present.
#[derive(Clone, Debug, Default)]
pub struct BoundQuery {
    pub n: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub profile: Option<RecoveryProfile>,
    pub locality: Option<LocalityProfile>,
}

/// Every bound that applies to the given parameters, in a fixed order.
pub fn bound_report(query: &BoundQuery) -> Result<Vec<BoundEntry>> {
    let (n, k) = (query.n, query.k);
    check_nk(n, k)?;
    let mut out = vec![BoundEntry {
        name: "singleton",
        value: n as i64 - k as i64 + 1,
    }];
    if let (Some(r), Some(t)) = (query.r, query.t) {
        out.push(BoundEntry {
            name: "eq1",
            value: bound_eq1(n, k, r, t)?,
        });
        out.push(BoundEntry {
            name: "eq2",
            value: bound_eq2(n, k, r, t)?,
        });
        out.push(BoundEntry {
            name: "gamma",
            value: gamma(n, k, r, t)?,
        });
    }
    if let Some(p) = &query.profile {
        out.push(BoundEntry {
            name: "thm1",
            value: bound_thm1(n, k, p)?,
        });
        out.push(BoundEntry {
            name: "thm2",
            value: bound_thm2(n, k, p)?,
        });
    }
    if let Some(l) = &query.locality {
        if l.k() != k {
            return Err(Error::InvalidParameters(format!(
                "locality profile sums to {} but k = {k}",
                l.k()
            )));
        }
        out.push(BoundEntry {
            name: "thm3",
            value: bound_thm3(n, l)?,
        });
    }
    Ok(out)
}
