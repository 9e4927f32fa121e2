//! Isomorphism-class enumeration: all graphs of a small order, free trees,
//! and complete graphs with a fixed number of edges removed.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{bits, Graph, GraphError, MAX_ORDER};

/// Extends every class in `classes` by each candidate produced by `grow`,
/// keeping one representative per canonical form.
fn grow_classes(classes: &[Graph], mut grow: impl FnMut(&Graph, &mut dyn FnMut(Graph))) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
    for g in classes {
        grow(g, &mut |h| {
            seen.entry(canonical_form(&h)).or_insert(());
        });
    }
    seen.into_keys().map(|form| form.to_graph()).collect()
}

/// One representative of every isomorphism class of graphs of order `n`,
/// in canonical-form order. Built by vertex augmentation; practical up to
/// order 8 (12346 classes).
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ORDER, "order {n} too large");
    let mut classes = vec![Graph::empty(0).unwrap()];
    for k in 0..n {
        classes = grow_classes(&classes, |g, emit| {
            for mask in 0..1u64 << k {
                let mut rows = g.adjacency().to_vec();
                for v in bits(mask) {
                    rows[v] |= 1 << k;
                }
                rows.push(mask);
                emit(Graph::from_adjacency(&rows).unwrap());
            }
        });
    }
    classes
}

/// One representative of every isomorphism class of trees of order `n`,
/// sorted by canonical form. Order 0 yields nothing.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut classes = vec![Graph::empty(1).unwrap()];
    for k in 1..n {
        classes = grow_classes(&classes, |t, emit| {
            for v in 0..k {
                let mut rows = t.adjacency().to_vec();
                rows[v] |= 1 << k;
                rows.push(1 << v);
                emit(Graph::from_adjacency(&rows).unwrap());
            }
        });
    }
    classes
}

/// Every non-isomorphic graph obtained from `K_n` by deleting exactly
/// `alpha` edges. Requires `n > 2 * alpha`.
///
/// Classes are deduplicated through the complement: the deleted edges form
/// an `alpha`-edge graph that lives on at most `2 * alpha` vertices.
pub fn enumerate_k_minus(n: usize, alpha: usize) -> Result<Vec<Graph>, GraphError> {
    if alpha == 0 || n <= 2 * alpha {
        return Err(GraphError::InvalidParameter(format!("need alpha >= 1 and n > 2*alpha, got n={n}, alpha={alpha}")));
    }
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    let support = 2 * alpha;
    let mut removed = vec![Graph::empty(support)?];
    for _ in 0..alpha {
        removed = grow_classes(&removed, |g, emit| {
            for &(u, v) in non_edges(g).iter() {
                let mut rows = g.adjacency().to_vec();
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
                emit(Graph::from_adjacency(&rows).unwrap());
            }
        });
    }
    removed
        .iter()
        .map(|r| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !(v < support && r.is_adjacent(u, v)));
            Graph::new(n, edges)
        })
        .collect()
}

fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.is_adjacent(u, v)).collect()
}

/// True iff deleting every leaf of the tree leaves a path (or nothing).
pub fn is_caterpillar(g: &Graph) -> Result<bool, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let spine: u64 = (0..g.order()).filter(|&v| g.degree(v) >= 2).fold(0, |acc, v| acc | 1 << v);
    // the spine of a tree is connected, so it is a path iff it has max degree 2
    Ok(bits(spine).all(|v| (g.neighbors(v) & spine).count_ones() <= 2))
}
