//! Well-spread (weak Sidon) sets, the minimum pairwise-sum span ρ*(n), and
//! clique certificates for infinite super edge-magic deficiency.
//!
//! A clique of `m` vertices in a super edge-magic graph carries labels whose
//! pairwise sums are distinct, i.e. a well-spread set. Those `C(m, 2)` sums
//! span at least ρ*(m) integers, yet all edge sums of the graph sit in a run
//! of `q` consecutive integers. So ρ*(m) > q rules out every labeling of
//! `G ∪ nK1`, for every `n`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clique::{is_clique, max_clique};
use crate::graph::Graph;
use crate::search::{SearchBudget, SearchError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SidonError {
    #[error("elements must be strictly increasing positive integers")]
    NotIncreasing,
    #[error("need at least {need} elements, got {got}")]
    TooFew { need: usize, got: usize },
    #[error("pairwise sums are not distinct")]
    NotWellSpread,
    #[error("the lower bound is only asserted for n >= 7, got {0}")]
    BoundNotAsserted(usize),
}

/// Strictly increasing positive integers with pairwise distinct sums
/// `x_i + x_j` (`i < j`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WsSet(Vec<u32>);

impl WsSet {
    pub fn new(elements: Vec<u32>) -> Result<Self, SidonError> {
        if !is_ws_set(&elements)? {
            return Err(SidonError::NotWellSpread);
        }
        Ok(WsSet(elements))
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }
}

pub fn is_ws_set(xs: &[u32]) -> Result<bool, SidonError> {
    if xs.first() == Some(&0) || xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SidonError::NotIncreasing);
    }
    let mut sums: Vec<u32> = Vec::with_capacity(xs.len() * xs.len().saturating_sub(1) / 2);
    for (i, &a) in xs.iter().enumerate() {
        sums.extend(xs[i + 1..].iter().map(|&b| a + b));
    }
    sums.sort_unstable();
    Ok(sums.windows(2).all(|w| w[0] != w[1]))
}

/// `x_n + x_{n-1} - x_2 - x_1 + 1`: the number of integers between the
/// smallest and largest pairwise sum, inclusive.
pub fn pairwise_sum_span(xs: &WsSet) -> Result<u32, SidonError> {
    let x = &xs.0;
    let n = x.len();
    if n < 2 {
        return Err(SidonError::TooFew { need: 2, got: n });
    }
    Ok(x[n - 1] + x[n - 2] - x[1] - x[0] + 1)
}

/// `n^2 - 5n + 14`, asserted as a lower bound on ρ*(n) for `n >= 7`.
pub fn kotzig_lower_bound(n: usize) -> Result<u32, SidonError> {
    if n < 7 {
        return Err(SidonError::BoundNotAsserted(n));
    }
    Ok((n * n - 5 * n + 14) as u32)
}

/// Exact ρ*(n) for `n = 2..=10`, as computed by [`rho_star`]. Recomputed by
/// the test suite.
pub const RHO_STAR_TABLE: [(usize, u32); 9] =
    [(2, 1), (3, 3), (4, 6), (5, 11), (6, 19), (7, 30), (8, 43), (9, 62), (10, 80)];

pub fn tabulated_rho_star(n: usize) -> Option<u32> {
    RHO_STAR_TABLE.iter().find(|&&(m, _)| m == n).map(|&(_, r)| r)
}

struct RhoSearch<'a> {
    n: usize,
    /// exact ρ* for every smaller cardinality (index = cardinality)
    smaller: &'a [u32],
    elems: Vec<u32>,
    sum_used: Vec<bool>,
    best: u32,
    best_set: Vec<u32>,
}

impl RhoSearch<'_> {
    /// Largest pairwise sum an improving set may contain.
    fn sum_cap(&self) -> u32 {
        // objective = x_n + x_{n-1} - x_2 + 1 (x_1 = 0) must stay below best
        (self.best + self.elems[1]).saturating_sub(2)
    }

    fn dfs(&mut self, meter: &mut crate::search::Meter) -> Result<(), SearchError> {
        meter.tick()?;
        let k = self.elems.len();
        let last = *self.elems.last().expect("x_1 is always present");
        let mut x = last + 1;
        loop {
            if k >= 2 {
                // lower bound once x becomes x_{k+1}
                let placed = k + 1;
                let lb = if placed == self.n {
                    x + last - self.elems[1] + 1
                } else {
                    self.smaller[self.n - placed + 1] + 2 * x - self.elems[1] + 1
                };
                if lb >= self.best {
                    return Ok(());
                }
            } else {
                // x becomes x_2 = d; the other n - 1 elements alone span
                // rho*(n-1) sums, all at least 2d + 1
                if self.smaller[self.n - 1] + x + 1 >= self.best {
                    return Ok(());
                }
            }
            if self.fits(x) {
                self.toggle(x, true);
                self.elems.push(x);
                if self.elems.len() == self.n {
                    let x2 = self.elems[1];
                    let obj = self.elems[self.n - 1] + self.elems[self.n - 2] - x2 + 1;
                    if obj < self.best {
                        self.best = obj;
                        self.best_set = self.elems.clone();
                    }
                    self.elems.pop();
                    self.toggle(x, false);
                    // larger x only increases the objective
                    return Ok(());
                }
                let res = self.dfs(meter);
                self.elems.pop();
                self.toggle(x, false);
                res?;
            }
            x += 1;
        }
    }

    fn fits(&self, x: u32) -> bool {
        let cap = if self.elems.len() >= 2 { self.sum_cap() } else { u32::MAX };
        self.elems.iter().all(|&e| {
            let s = (e + x) as usize;
            e + x <= cap && !self.sum_used.get(s).copied().unwrap_or(false)
        })
    }

    fn toggle(&mut self, x: u32, on: bool) {
        for i in 0..self.elems.len() {
            let s = (self.elems[i] + x) as usize;
            if s >= self.sum_used.len() {
                self.sum_used.resize(s + 1, false);
            }
            self.sum_used[s] = on;
        }
    }
}

/// Greedy well-spread set `0, 1, 2, 4, 7, ...` of the given size.
fn greedy_ws(n: usize) -> Vec<u32> {
    let mut xs: Vec<u32> = Vec::with_capacity(n);
    let mut x = 0;
    while xs.len() < n {
        let mut candidate = xs.clone();
        candidate.push(x);
        let shifted: Vec<u32> = candidate.iter().map(|&v| v + 1).collect();
        if is_ws_set(&shifted).unwrap_or(false) {
            xs = candidate;
        }
        x += 1;
    }
    xs
}

/// Exact ρ*(n) with an optimal set (normalized to `x_1 = 1`).
pub fn rho_star_with_witness(n: usize, budget: SearchBudget) -> Result<(u32, WsSet), SearchError> {
    if n < 2 {
        return Err(SearchError::InvalidInput(format!("rho* needs n >= 2, got {n}")));
    }
    let mut meter = budget.meter();
    let mut values = vec![0u32; n + 1];
    values[2] = 1;
    let mut witness = vec![0, 1];
    for m in 3..=n {
        let start = greedy_ws(m);
        let span = start[m - 1] + start[m - 2] - start[1] - start[0] + 1;
        let mut search = RhoSearch {
            n: m,
            smaller: &values[..m],
            elems: vec![0],
            sum_used: vec![false; 4 * span as usize],
            best: span,
            best_set: start,
        };
        search.best += 1; // let the greedy set itself be rediscovered
        search.dfs(&mut meter)?;
        let (best, best_set) = (search.best, search.best_set);
        values[m] = best;
        witness = best_set;
    }
    let set = WsSet::new(witness.into_iter().map(|v| v + 1).collect()).expect("search only keeps well-spread sets");
    Ok((values[n], set))
}

pub fn rho_star(n: usize, budget: SearchBudget) -> Result<u32, SearchError> {
    rho_star_with_witness(n, budget).map(|(r, _)| r)
}

/// Where a certificate's ρ* lower bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RhoSource {
    Kotzig,
    Exact,
}

impl fmt::Display for RhoSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhoSource::Kotzig => "kotzig",
            RhoSource::Exact => "exact",
        })
    }
}

/// Best valid lower bound on ρ*(m') over `5 <= m' <= m`. Ties prefer the
/// exact table.
pub fn rho_lower_bound(m: usize) -> Option<(u32, RhoSource)> {
    let mut best: Option<(u32, RhoSource)> = None;
    for size in 5..=m {
        let options = [
            tabulated_rho_star(size).map(|r| (r, RhoSource::Exact)),
            kotzig_lower_bound(size).ok().map(|r| (r, RhoSource::Kotzig)),
        ];
        for (r, source) in options.into_iter().flatten() {
            if best.is_none_or(|(b, _)| r > b) {
                best = Some((r, source));
            }
        }
    }
    best
}

/// Proof that `G ∪ nK1` is super edge-magic for no `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityCertificate {
    pub clique: Vec<usize>,
    pub m: usize,
    pub q: usize,
    pub rho_lower: u32,
    pub source: RhoSource,
}

impl InfinityCertificate {
    /// The evaluated inequalities, one per line.
    pub fn inequality_ledger(&self) -> String {
        let pairs = self.m * (self.m - 1) / 2;
        format!(
            "clique of size {m} induces a well-spread label set with {pairs} distinct sums\n\
             rho*({m}) >= {r} ({src})\n\
             all {q} edge sums are consecutive, so the clique sums span at most {q}\n\
             {r} > {q}: contradiction",
            m = self.m,
            r = self.rho_lower,
            src = self.source,
            q = self.q,
        )
    }
}

/// Emits a certificate iff the maximum clique's ρ* bound exceeds the size.
/// `None` does not imply finite deficiency.
pub fn certify_infinite_deficiency(g: &Graph) -> Option<InfinityCertificate> {
    let clique = max_clique(g);
    let m = clique.len();
    let (rho_lower, source) = rho_lower_bound(m)?;
    (rho_lower as usize > g.size()).then(|| InfinityCertificate { clique, m, q: g.size(), rho_lower, source })
}

/// Standalone re-check of a certificate against its graph.
pub fn check_infinity_certificate(g: &Graph, cert: &InfinityCertificate) -> Result<(), String> {
    if cert.m != cert.clique.len() {
        return Err(format!("m = {} but the clique lists {} vertices", cert.m, cert.clique.len()));
    }
    if cert.m < 5 {
        return Err(format!("clique size {} is below 5", cert.m));
    }
    if !is_clique(g, &cert.clique) {
        return Err("listed vertices do not form a clique".into());
    }
    if cert.q != g.size() {
        return Err(format!("q = {} but the graph has {} edges", cert.q, g.size()));
    }
    let allowed = match cert.source {
        RhoSource::Exact => (5..=cert.m.min(10)).filter_map(tabulated_rho_star).max(),
        RhoSource::Kotzig => kotzig_lower_bound(cert.m).ok(),
    };
    match allowed {
        Some(bound) if cert.rho_lower <= bound => {}
        Some(bound) => return Err(format!("rho_lower {} exceeds the valid {} bound {bound}", cert.rho_lower, cert.source)),
        None => return Err(format!("no {} bound is available for m = {}", cert.source, cert.m)),
    }
    if cert.rho_lower as usize <= cert.q {
        return Err(format!("rho_lower {} does not exceed q = {}", cert.rho_lower, cert.q));
    }
    Ok(())
}
