//! Exact maximum clique by bitset branch and bound with a greedy colouring
//! bound.

use crate::graph::Graph;
#[cfg(test)]
use crate::graph::bits;

/// Greedy sequential colouring of `cand`; returns vertices in colour order
/// with their colour numbers (1-based, nondecreasing).
fn colour_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut open = uncoloured;
        while open != 0 {
            let v = open.trailing_zeros() as usize;
            open &= !adj[v] & !(1 << v);
            uncoloured &= !(1 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand(adj: &[u64], mut cand: u64, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, colours) = colour_sort(adj, cand);
    for i in (0..order.len()).rev() {
        if current.len() + colours[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = cand & adj[v];
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, next, current, best);
        }
        current.pop();
        cand &= !(1 << v);
    }
}

/// A maximum clique, vertices in increasing order. Empty for the null graph.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let all = (0..g.order()).fold(0u64, |acc, v| acc | 1 << v);
    let mut best = Vec::new();
    expand(g.adjacency(), all, &mut Vec::new(), &mut best);
    best.sort_unstable();
    best
}

pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        u < g.order() && vertices[i + 1..].iter().all(|&v| u != v && v < g.order() && g.is_adjacent(u, v))
    })
}

/// Reference implementation for tests: tries every vertex subset.
#[cfg(test)]
pub(crate) fn brute_force_clique_number(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| bits(s).all(|v| s & !(1 << v) & !g.neighbors(v) == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
