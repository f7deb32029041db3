//! Graph representation, parsing, generation, and permutation utilities.

mod generate;
mod graph6;
mod parse;

pub use generate::{named, random_connected, random_regular, GraphKind};
pub use graph6::{encode_graph6, parse_graph6};
pub use parse::{parse_edge_list, write_edge_list};

use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;

/// An undirected simple graph over vertices `0..n`.
///
/// Edges are stored both as a sorted pair list and as sorted per-vertex
/// neighbor lists. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates, and
    /// out-of-range endpoints. Edge pairs may be given in either order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for &w in &[u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index: w, n });
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Per-vertex degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True iff the graph has a single connected component. A one-vertex
    /// graph counts as connected; the empty graph does not arise (n >= 1
    /// is enforced at parse/generation time).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Relabels vertices: edge `(u, v)` becomes `(p(u), p(v))`.
    pub fn permute(&self, p: &Permutation) -> Result<Graph> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p.len(),
            });
        }
        Graph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (p.image(u), p.image(v))),
        )
    }

    /// Degrees sorted ascending, for quick invariant comparisons.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }
}

/// A bijection on `{0..n-1}`, stored as an image vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Validates that `map` is a bijection on `{0..n-1}`.
    pub fn from_vec(map: Vec<usize>) -> Result<Permutation> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &img in &map {
            if img >= n {
                return Err(Error::VertexOutOfRange { index: img, n });
            }
            if seen[img] {
                return Err(Error::MalformedLine {
                    line: 0,
                    reason: format!("image {img} repeated; not a bijection"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { map })
    }

    /// Uniform random permutation from the given RNG.
    pub fn random(n: usize, rng: &mut impl Rng) -> Permutation {
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(rng);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &img) in self.map.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { map: inv }
    }

    /// Moves entry `i` to position `image(i)`: `out[p(i)] = v[i]`.
    ///
    /// This is the vector-side counterpart of [`Graph::permute`]: the value
    /// attached to vertex `i` follows the vertex to its new label.
    pub fn apply_slice<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.map.len(), "permutation length mismatch");
        let mut out = v.to_vec();
        for (i, &img) in self.map.iter().enumerate() {
            out[img] = v[i].clone();
        }
        out
    }
}
