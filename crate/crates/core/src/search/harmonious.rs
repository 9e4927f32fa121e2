use crate::graph::{bits, Graph};
use crate::labeling::{verify_harmonious, ModularLabeling};
use crate::search::budget::{Meter, SearchBudget, SearchError};
use crate::search::consecutive::placement_order;

struct State<'a> {
    g: &'a Graph,
    q: u32,
    order: Vec<usize>,
    labels: Vec<u32>,
    placed: u64,
    count: Vec<u8>,
    residue_used: Vec<bool>,
    repeats_left: u8,
}

impl State<'_> {
    fn dfs(&mut self, i: usize, meter: &mut Meter) -> Result<bool, SearchError> {
        meter.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let v = self.order[i];
        // translation by a constant mod q preserves harmony, so pin the first label
        let range = if i == 0 { 0..1 } else { 0..self.q };
        let back: Vec<usize> = bits(self.g.neighbors(v) & self.placed).collect();
        for a in range {
            let repeat = self.count[a as usize] > 0;
            if repeat && self.repeats_left == 0 {
                continue;
            }
            let mut residues = Vec::with_capacity(back.len());
            let ok = back.iter().all(|&u| {
                let r = (a + self.labels[u]) % self.q;
                let fresh = !self.residue_used[r as usize] && !residues.contains(&r);
                residues.push(r);
                fresh
            });
            if !ok {
                continue;
            }
            for &r in &residues {
                self.residue_used[r as usize] = true;
            }
            self.labels[v] = a;
            self.placed |= 1 << v;
            self.count[a as usize] += 1;
            self.repeats_left -= u8::from(repeat);
            if self.dfs(i + 1, meter)? {
                return Ok(true);
            }
            self.repeats_left += u8::from(repeat);
            self.count[a as usize] -= 1;
            self.placed &= !(1 << v);
            for &r in &residues {
                self.residue_used[r as usize] = false;
            }
        }
        Ok(false)
    }
}

/// Harmonious labeling into `Z_q`; trees may repeat one label.
pub fn find_harmonious(g: &Graph, budget: SearchBudget) -> Result<Option<ModularLabeling>, SearchError> {
    let q = g.size();
    if q == 0 {
        return Err(SearchError::InvalidInput("harmonious labelings need at least one edge".into()));
    }
    let n = g.order();
    let allowance = u8::from(g.is_tree());
    if n > q + allowance as usize {
        return Ok(None);
    }
    let mut state = State {
        g,
        q: q as u32,
        order: placement_order(g),
        labels: vec![0; n],
        placed: 0,
        count: vec![0; q],
        residue_used: vec![false; q],
        repeats_left: allowance,
    };
    if !state.dfs(0, &mut budget.meter())? {
        return Ok(None);
    }
    let f = ModularLabeling { values: state.labels, repeat_allowance: allowance };
    debug_assert_eq!(verify_harmonious(g, &f), Ok(true));
    Ok(Some(f))
}
