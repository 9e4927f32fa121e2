//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, plus the
//! generators for every family the rest of the crate works with.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labeling::VertexLabeling;

/// Largest supported order. Matches the single-byte graph6 header and lets
/// every adjacency row live in one `u64`.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for order {order}")]
    EndpointOutOfRange { vertex: usize, order: usize },
    #[error("invalid family parameters: {0}")]
    InvalidParameter(String),
    #[error("input graph is not a tree")]
    NotATree,
}

/// A simple undirected graph with vertices `0..order`.
///
/// Edges are stored normalized (`u < v`) in insertion order alongside
/// symmetric adjacency bitrows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph { order, edges: Vec::new(), adj: vec![0; order] })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::EndpointOutOfRange { vertex: w, order: self.order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.adj[a] >> b & 1 == 1 {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        self.edges.push((a, b));
        Ok(())
    }

    /// Builds a graph from adjacency bitrows. Rows must be symmetric and
    /// loop-free; edges are listed in lexicographic order.
    pub fn from_adjacency(rows: &[u64]) -> Result<Self, GraphError> {
        let order = rows.len();
        let mut edges = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            if order < 64 && row >> order != 0 {
                let vertex = 63 - row.leading_zeros() as usize;
                return Err(GraphError::EndpointOutOfRange { vertex, order });
            }
            for v in u + 1..order {
                if row >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(order, edges)?;
        if g.adj != rows {
            // an asymmetric row would have produced a different edge set
            let u = (0..order).find(|&u| g.adj[u] != rows[u]).unwrap_or(0);
            return Err(GraphError::InvalidParameter(format!("adjacency row {u} is not symmetric")));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Adjacency bitrow of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.size() + 1 == self.order && self.is_connected()
    }

    /// Two-colouring of the graph if it is bipartite; `side[v]` is 0 or 1 and
    /// the lowest vertex of each component gets 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.order];
        for root in 0..self.order {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for v in bits(self.adj[u]) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn complement(&self) -> Graph {
        let full = if self.order == 64 { u64::MAX } else { (1u64 << self.order) - 1 };
        let rows: Vec<u64> = (0..self.order).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        Graph::from_adjacency(&rows).expect("complement of a simple graph is simple")
    }

    /// Relabels vertices so that old vertex `perm[i]` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut inverse = vec![0; self.order];
        for (i, &v) in perm.iter().enumerate() {
            inverse[v] = i;
        }
        let rows: Vec<u64> = perm
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0u64, |acc, w| acc | 1 << inverse[w]))
            .collect();
        Graph::from_adjacency(&rows).expect("relabeling preserves simplicity")
    }

    /// Disjoint union with `count` isolated vertices.
    pub fn with_isolated(&self, count: usize) -> Result<Graph, GraphError> {
        Graph::new(self.order + count, self.edges.iter().copied())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(p={}, q={}, {:?})", self.order, self.size(), self.edges)
    }
}

/// Iterates over the set bit positions of `word`, lowest first.
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

pub fn build_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn build_complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn build_path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Star `K_{1,leaves}` with the centre at vertex 0.
pub fn build_star(leaves: usize) -> Result<Graph, GraphError> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// The prism `C_n x K_2`: outer cycle on `0..n`, inner cycle on `n..2n`,
/// spokes `i -- n+i`.
pub fn build_prism(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("prism needs n >= 3, got {n}")));
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let inner = (0..n).map(|i| (n + i, n + (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    Graph::new(2 * n, outer.chain(inner).chain(spokes))
}

/// The extremal witness graph of order `n` together with its consecutive-sum
/// labeling.
///
/// Vertices `x_1..x_c` (`c = ceil(n/2)`) are `0..c`, `y_1..y_f`
/// (`f = floor(n/2)`) are `c..n`. Edges: the star `x_1 x_i`, every `x_i y_j`,
/// and `y_1 y_f`. Labels: `x_i -> i`, `y_j -> c*j + 1`.
pub fn build_lower_bound_witness(n: usize) -> Result<(Graph, VertexLabeling), GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidParameter(format!("lower-bound witness needs n >= 4, got {n}")));
    }
    let c = n.div_ceil(2);
    let f = n / 2;
    let x = |i: usize| i - 1;
    let y = |j: usize| c + j - 1;
    let mut edges = Vec::with_capacity(c * (f + 1));
    edges.extend((2..=c).map(|i| (x(1), x(i))));
    for i in 1..=c {
        edges.extend((1..=f).map(|j| (x(i), y(j))));
    }
    edges.push((y(1), y(f)));
    let g = Graph::new(n, edges)?;
    let labels = (1..=c).map(|i| i as u32).chain((1..=f).map(|j| (c * j + 1) as u32)).collect();
    let labeling = VertexLabeling::new(labels).expect("witness labels are distinct and positive");
    Ok((g, labeling))
}

/// Tags for the graph families the command line can generate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "parameters", rename_all = "kebab-case")]
pub enum GraphFamilyTag {
    Cycle(usize),
    Complete(usize),
    Prism(usize),
    LowerBoundWitness(usize),
    CompleteMinusAlpha(usize, usize),
    TreeEnumeration(usize),
    Custom(String),
}

impl GraphFamilyTag {
    /// Materializes every graph of the family. `Custom` carries a graph6
    /// string.
    pub fn build(&self) -> Result<Vec<Graph>, crate::Error> {
        Ok(match *self {
            GraphFamilyTag::Cycle(n) => vec![build_cycle(n)?],
            GraphFamilyTag::Complete(n) => vec![build_complete(n)?],
            GraphFamilyTag::Prism(n) => vec![build_prism(n)?],
            GraphFamilyTag::LowerBoundWitness(n) => vec![build_lower_bound_witness(n)?.0],
            GraphFamilyTag::CompleteMinusAlpha(n, alpha) => crate::enumerate::enumerate_k_minus(n, alpha)?,
            GraphFamilyTag::TreeEnumeration(n) => crate::enumerate::enumerate_trees(n),
            GraphFamilyTag::Custom(ref text) => vec![crate::graph6::parse_graph6(text)?],
        })
    }
}

impl FromStr for GraphFamilyTag {
    type Err = GraphError;

    /// Parses `name:p1,p2,...`, e.g. `prism:4` or `complete-minus-alpha:8,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        if name == "custom" {
            return Ok(GraphFamilyTag::Custom(params.to_string()));
        }
        let nums = params
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GraphError::InvalidParameter(format!("{s}: {e}")))?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(GraphError::InvalidParameter(format!("{name} takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let tag = match name {
            "cycle" => arity(1).map(|_| GraphFamilyTag::Cycle(nums[0])),
            "complete" => arity(1).map(|_| GraphFamilyTag::Complete(nums[0])),
            "prism" => arity(1).map(|_| GraphFamilyTag::Prism(nums[0])),
            "lower-bound-witness" => arity(1).map(|_| GraphFamilyTag::LowerBoundWitness(nums[0])),
            "complete-minus-alpha" => arity(2).map(|_| GraphFamilyTag::CompleteMinusAlpha(nums[0], nums[1])),
            "tree-enumeration" => arity(1).map(|_| GraphFamilyTag::TreeEnumeration(nums[0])),
            _ => Err(GraphError::InvalidParameter(format!("unknown family {name:?}"))),
        }?;
        Ok(tag)
    }
}
