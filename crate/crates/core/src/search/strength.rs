//! Branch and bound for the strength of a graph: the least possible maximum
//! edge sum over all numberings `V -> [1, p]`.

use crate::graph::{bits, Graph};
use crate::labeling::Numbering;
use crate::search::budget::{Meter, SearchBudget, SearchError};

struct Bnb<'a> {
    g: &'a Graph,
    labels: Vec<u32>,
    assigned: u64,
    best: u32,
    best_labels: Vec<u32>,
    floor: u32,
}

impl Bnb<'_> {
    /// Assigns `label` (counting down from `p`) to some unassigned vertex.
    fn dfs(&mut self, label: u32, current: u32, meter: &mut Meter) -> Result<(), SearchError> {
        meter.tick()?;
        if label == 0 {
            if current < self.best {
                self.best = current;
                self.best_labels = self.labels.clone();
            }
            return Ok(());
        }
        let n = self.g.order();
        let mut candidates: Vec<usize> = (0..n).filter(|&v| self.assigned >> v & 1 == 0).collect();
        // large labels go to low-degree vertices first
        candidates.sort_by_key(|&v| (self.g.degree(v), v));
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            // twins get interchangeable labels
            if tried.iter().any(|&t| self.g.neighbors(t) & !(1 << v) == self.g.neighbors(v) & !(1 << t)) {
                continue;
            }
            tried.push(v);
            let placed_max = bits(self.g.neighbors(v) & self.assigned).map(|u| self.labels[u]).max();
            let next = current.max(placed_max.map_or(0, |m| m + label));
            self.labels[v] = label;
            self.assigned |= 1 << v;
            if self.lower_bound(next) < self.best {
                self.dfs(label - 1, next, meter)?;
            }
            self.assigned &= !(1 << v);
            self.labels[v] = 0;
            if self.best == self.floor {
                break;
            }
        }
        Ok(())
    }

    /// Every assigned vertex with `k` unassigned neighbours will see an edge
    /// sum of at least its label plus `k`.
    fn lower_bound(&self, current: u32) -> u32 {
        let open = !self.assigned;
        bits(self.assigned).fold(current, |acc, u| {
            let k = (self.g.neighbors(u) & open).count_ones();
            if k == 0 {
                acc
            } else {
                acc.max(self.labels[u] + k)
            }
        })
    }
}

/// Exact strength together with an optimal numbering.
pub fn strength_with_numbering(g: &Graph, budget: SearchBudget) -> Result<(u32, Numbering), SearchError> {
    if g.size() == 0 {
        return Err(SearchError::InvalidInput("strength is undefined for an edgeless graph".into()));
    }
    let n = g.order();
    // r non-isolated vertices carry r distinct labels, the largest is >= r
    let non_isolated = (0..n).filter(|&v| g.degree(v) > 0).count() as u32;
    let mut bnb = Bnb {
        g,
        labels: vec![0; n],
        assigned: 0,
        best: 2 * n as u32,
        best_labels: Vec::new(),
        floor: non_isolated + 1,
    };
    bnb.dfs(n as u32, 0, &mut budget.meter())?;
    let numbering = Numbering::new(bnb.best_labels).expect("search assigns a bijection onto [1, p]");
    Ok((bnb.best, numbering))
}

pub fn strength(g: &Graph, budget: SearchBudget) -> Result<u32, SearchError> {
    strength_with_numbering(g, budget).map(|(s, _)| s)
}
