//! Graceful and α-valuation search, driven by edge labels from `q` down to 1.
//!
//! At each step the largest missing difference `k` has to be realized by
//! some edge whose endpoints get labels `(a, a + k)`; either one endpoint is
//! already labeled or both are fresh. This enumerates every graceful
//! labeling exactly once up to the reflection `f -> q - f`.

use crate::graph::{bits, Graph};
use crate::labeling::{verify_alpha, GracefulLabeling};
use crate::search::budget::{Meter, SearchBudget, SearchError};

const UNSET: u32 = u32::MAX;

struct State<'a> {
    g: &'a Graph,
    q: u32,
    labels: Vec<u32>,
    owner: Vec<Option<usize>>,
    diff_used: Vec<bool>,
    alpha: bool,
    /// (largest lower endpoint, smallest upper endpoint) over labeled edges
    bounds: (u32, u32),
}

impl State<'_> {
    /// Labels `v` with `a` if every new edge difference is fresh (and the α
    /// window stays open). Returns the data needed to undo.
    fn assign(&mut self, v: usize, a: u32) -> Option<(Vec<u32>, (u32, u32))> {
        let mut diffs = Vec::new();
        let mut bounds = self.bounds;
        for u in bits(self.g.neighbors(v)) {
            let b = self.labels[u];
            if b == UNSET {
                continue;
            }
            let d = a.abs_diff(b);
            if self.diff_used[d as usize] || diffs.contains(&d) {
                return None;
            }
            diffs.push(d);
            bounds = (bounds.0.max(a.min(b)), bounds.1.min(a.max(b)));
        }
        if self.alpha && bounds.0 >= bounds.1 {
            return None;
        }
        let saved = self.bounds;
        for &d in &diffs {
            self.diff_used[d as usize] = true;
        }
        self.labels[v] = a;
        self.owner[a as usize] = Some(v);
        self.bounds = bounds;
        Some((diffs, saved))
    }

    fn unassign(&mut self, v: usize, undo: (Vec<u32>, (u32, u32))) {
        let a = self.labels[v];
        for d in undo.0 {
            self.diff_used[d as usize] = false;
        }
        self.owner[a as usize] = None;
        self.labels[v] = UNSET;
        self.bounds = undo.1;
    }

    /// Tries `v <- a` and continues with difference `k - 1`.
    fn branch_one(&mut self, v: usize, a: u32, k: u32, meter: &mut Meter) -> Result<bool, SearchError> {
        let Some(undo) = self.assign(v, a) else { return Ok(false) };
        let found = self.dfs(k - 1, meter);
        if !matches!(found, Ok(true)) {
            self.unassign(v, undo);
        }
        found
    }

    fn branch_two(&mut self, (u, a): (usize, u32), (w, b): (usize, u32), k: u32, meter: &mut Meter) -> Result<bool, SearchError> {
        let Some(undo) = self.assign(u, a) else { return Ok(false) };
        let found = self.branch_one(w, b, k, meter);
        if !matches!(found, Ok(true)) {
            self.unassign(u, undo);
        }
        found
    }

    fn dfs(&mut self, k: u32, meter: &mut Meter) -> Result<bool, SearchError> {
        meter.tick()?;
        if k == 0 {
            return Ok(true);
        }
        if self.diff_used[k as usize] {
            return self.dfs(k - 1, meter);
        }
        let n = self.g.order();
        for a in 0..=self.q - k {
            let b = a + k;
            match (self.owner[a as usize], self.owner[b as usize]) {
                (Some(_), Some(_)) => {}
                (Some(u), None) | (None, Some(u)) => {
                    let fresh = if self.owner[a as usize].is_some() { b } else { a };
                    for w in bits(self.g.neighbors(u)) {
                        if self.labels[w] == UNSET && self.branch_one(w, fresh, k, meter)? {
                            return Ok(true);
                        }
                    }
                }
                (None, None) => {
                    for u in 0..n {
                        if self.labels[u] != UNSET {
                            continue;
                        }
                        for w in bits(self.g.neighbors(u)) {
                            if self.labels[w] != UNSET {
                                continue;
                            }
                            // the top difference fixes orientation up to reflection
                            if k == self.q && u > w {
                                continue;
                            }
                            if self.branch_two((u, a), (w, b), k, meter)? {
                                return Ok(true);
                            }
                        }
                    }
                }
            }
        }
        Ok(false)
    }
}

fn find(g: &Graph, alpha: bool, budget: SearchBudget) -> Result<Option<GracefulLabeling>, SearchError> {
    let q = g.size();
    if q == 0 {
        return Err(SearchError::InvalidInput("graceful labelings need at least one edge".into()));
    }
    let n = g.order();
    if n > q + 1 || (alpha && !g.is_bipartite()) {
        return Ok(None);
    }
    let mut state = State {
        g,
        q: q as u32,
        labels: vec![UNSET; n],
        owner: vec![None; q + 1],
        diff_used: vec![false; q + 1],
        alpha,
        bounds: (0, u32::MAX),
    };
    if !state.dfs(q as u32, &mut budget.meter())? {
        return Ok(None);
    }
    // isolated vertices take whatever labels are left
    let mut free = (0..=q as u32).filter(|&a| state.owner[a as usize].is_none());
    let values: Vec<u32> =
        state.labels.iter().map(|&l| if l == UNSET { free.next().expect("p <= q + 1") } else { l }).collect();
    let mut labeling = GracefulLabeling { values, lambda: None };
    if alpha {
        labeling.lambda = verify_alpha(g, &labeling).expect("search output is graceful");
        debug_assert!(labeling.lambda.is_some());
    }
    Ok(Some(labeling))
}

pub fn find_graceful(g: &Graph, budget: SearchBudget) -> Result<Option<GracefulLabeling>, SearchError> {
    find(g, false, budget)
}

/// Graceful labeling with a boundary λ separating every edge's endpoints.
/// Non-bipartite graphs are rejected without search.
pub fn find_alpha_valuation(g: &Graph, budget: SearchBudget) -> Result<Option<GracefulLabeling>, SearchError> {
    find(g, true, budget)
}
