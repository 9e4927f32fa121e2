//! Backtracking for injective labelings into `[lo, hi]` whose edge sums are
//! `q` distinct consecutive integers. Super edge-magic search uses
//! `[1, max_label]`; sequential search uses `[0, q - 1]` (or `[0, q]` for
//! trees).

use crate::graph::{bits, Graph};
use crate::search::budget::{Meter, SearchError};

const UNSET: u32 = u32::MAX;

/// Placement order: start at the highest-degree vertex, then repeatedly take
/// the vertex with the most placed neighbours (ties: higher degree, then
/// lower index). Isolated vertices end up last.
pub(crate) fn placement_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbors(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

struct State<'a> {
    g: &'a Graph,
    lo: u32,
    hi: u32,
    q: u32,
    order: Vec<usize>,
    /// earlier-placed neighbours of `order[i]`
    back: Vec<Vec<usize>>,
    labels: Vec<u32>,
    label_used: Vec<bool>,
    sum_used: Vec<bool>,
    min_sum: u32,
    max_sum: u32,
    placed_edges: u32,
}

impl State<'_> {
    fn dfs(&mut self, i: usize, meter: &mut Meter) -> Result<bool, SearchError> {
        meter.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let v = self.order[i];
        if self.g.degree(v) == 0 {
            // only isolated vertices remain; hand out the smallest free labels
            let mut free = (self.lo..=self.hi).filter(|&a| !self.label_used[(a - self.lo) as usize]);
            for &w in &self.order[i..] {
                self.labels[w] = free.next().expect("label range was checked to be large enough");
            }
            return Ok(true);
        }

        let (mut a_lo, mut a_hi) = (self.lo, self.hi);
        if i == 0 {
            // reflection a -> lo + hi - a preserves consecutive sums
            a_hi = (self.lo + self.hi) / 2;
        }
        let back = std::mem::take(&mut self.back[i]);
        if self.placed_edges > 0 && !back.is_empty() {
            let win_lo = self.max_sum.saturating_sub(self.q - 1);
            let win_hi = self.min_sum + self.q - 1;
            for &u in &back {
                let l = self.labels[u];
                a_lo = a_lo.max(win_lo.saturating_sub(l));
                a_hi = a_hi.min(win_hi.saturating_sub(l));
            }
        }
        let mut found = false;
        if a_lo <= a_hi {
            for a in a_lo..=a_hi {
                if self.label_used[(a - self.lo) as usize] {
                    continue;
                }
                if self.fits(a, &back) {
                    let saved = (self.min_sum, self.max_sum, self.placed_edges);
                    self.apply(v, a, &back, true);
                    let res = self.dfs(i + 1, meter);
                    if matches!(res, Ok(true)) {
                        found = true;
                        break;
                    }
                    self.apply(v, a, &back, false);
                    (self.min_sum, self.max_sum, self.placed_edges) = saved;
                    if let Err(e) = res {
                        self.back[i] = back;
                        return Err(e);
                    }
                }
            }
        }
        self.back[i] = back;
        Ok(found)
    }

    fn fits(&self, a: u32, back: &[usize]) -> bool {
        let (mut mn, mut mx) = if self.placed_edges > 0 { (self.min_sum, self.max_sum) } else { (u32::MAX, 0) };
        // new sums are pairwise distinct because the neighbour labels are
        for &u in back {
            let s = a + self.labels[u];
            if self.sum_used[s as usize] {
                return false;
            }
            mn = mn.min(s);
            mx = mx.max(s);
        }
        back.is_empty() || mx - mn < self.q
    }

    fn apply(&mut self, v: usize, a: u32, back: &[usize], on: bool) {
        for &u in back {
            let s = a + self.labels[u];
            self.sum_used[s as usize] = on;
            if on {
                if self.placed_edges == 0 {
                    (self.min_sum, self.max_sum) = (s, s);
                } else {
                    self.min_sum = self.min_sum.min(s);
                    self.max_sum = self.max_sum.max(s);
                }
                self.placed_edges += 1;
            }
        }
        self.labels[v] = if on { a } else { UNSET };
        self.label_used[(a - self.lo) as usize] = on;
    }
}

/// Lexicographically first labeling (in placement order) of `g` into
/// `[lo, hi]` with `q` distinct consecutive edge sums, if any.
pub(crate) fn find_consecutive_labeling(
    g: &Graph,
    lo: u32,
    hi: u32,
    meter: &mut Meter,
) -> Result<Option<Vec<u32>>, SearchError> {
    let n = g.order();
    if lo > hi || ((hi - lo + 1) as usize) < n {
        return Ok(None);
    }
    let order = placement_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| bits(g.neighbors(v)).filter(|&u| position[u] < i).collect())
        .collect();
    let mut state = State {
        g,
        lo,
        hi,
        q: g.size() as u32,
        order,
        back,
        labels: vec![UNSET; n],
        label_used: vec![false; (hi - lo + 1) as usize],
        sum_used: vec![false; 2 * hi as usize + 1],
        min_sum: 0,
        max_sum: 0,
        placed_edges: 0,
    };
    if state.dfs(0, meter)? {
        Ok(Some(state.labels))
    } else {
        Ok(None)
    }
}
