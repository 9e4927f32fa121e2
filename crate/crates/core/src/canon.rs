//! Canonical forms for isomorphism testing.
//!
//! [`canonical_form`] runs colour refinement followed by individualization
//! and takes the smallest adjacency matrix over all leaves of the search
//! tree. Interchangeable twins (vertices with the same neighbourhood apart
//! from each other) are only individualized once per twin class, which keeps
//! stars, empty graphs and complete graphs cheap.

use crate::graph::{bits, Graph};

/// Canonical adjacency rows. Two graphs are isomorphic iff their canonical
/// forms are equal. Ordering is lexicographic on `(order, rows)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(&self.rows).expect("canonical rows describe a simple graph")
    }
}

/// Ordered partition of the vertex set.
type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |acc, &v| acc | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.neighbors(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
                cells = next;
            }
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn leaf_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(g.neighbors(v)).fold(0u64, |acc, w| acc | 1 << position[w]))
        .collect()
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u)
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = leaf_rows(g, &order);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut representatives: Vec<usize> = Vec::new();
    for &v in cell {
        if !representatives.iter().any(|&r| are_twins(g, r, v)) {
            representatives.push(v);
        }
    }
    for v in representatives {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Canonical form together with the vertex order realizing it
/// (`perm[i]` is the original vertex placed at position `i`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalForm { order: 0, rows: Vec::new() }, Vec::new());
    }
    let mut best = None;
    search(g, refine(g, vec![(0..n).collect()]), &mut best);
    let (rows, perm) = best.expect("search visits at least one leaf");
    (CanonicalForm { order: n, rows }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}
