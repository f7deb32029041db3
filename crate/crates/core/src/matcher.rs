//! Candidate-correspondence bigraphs between the vertex sets of two
//! graphs, built from k-value equality, plus intersection and transversal
//! (perfect matching) extraction.

use crate::weights::KMatrix;
use std::collections::HashMap;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Bipartite candidate graph over two n-vertex sides, stored as one n-bit
/// row per left vertex. Intersection is rowwise AND, the hot operation of
/// the refinement loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bigraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Bigraph {
    pub fn new(n: usize) -> Bigraph {
        let words = n.div_ceil(64).max(1);
        Bigraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, p: usize, q: usize) {
        debug_assert!(p < self.n && q < self.n);
        self.rows[p * self.words + q / 64] |= 1 << (q % 64);
    }

    pub fn remove(&mut self, p: usize, q: usize) {
        self.rows[p * self.words + q / 64] &= !(1 << (q % 64));
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        self.rows[p * self.words + q / 64] & (1 << (q % 64)) != 0
    }

    /// Set intersection of the edge sets; commutative and associative.
    pub fn intersect(&self, other: &Bigraph) -> Bigraph {
        assert_eq!(self.n, other.n, "bigraph dimension mismatch");
        Bigraph {
            n: self.n,
            words: self.words,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Right neighbors of left vertex `p`, ascending.
    pub fn row_iter(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[p * self.words..(p + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// All edges `(p, q)` in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |p| self.row_iter(p).map(move |q| (p, q)))
    }

    pub fn left_degree(&self, p: usize) -> usize {
        let row = &self.rows[p * self.words..(p + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (_, q) in self.edges() {
            deg[q] += 1;
        }
        deg
    }
}

/// A transversal: a bijection pairing every left vertex with a distinct
/// right vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapping {
    assignment: Vec<usize>,
}

impl Mapping {
    /// Builds a mapping, panicking if `assignment` is not a bijection.
    pub fn new(assignment: Vec<usize>) -> Mapping {
        let n = assignment.len();
        let mut seen = vec![false; n];
        for &q in &assignment {
            assert!(q < n && !seen[q], "mapping is not a bijection");
            seen[q] = true;
        }
        Mapping { assignment }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn image(&self, p: usize) -> usize {
        self.assignment[p]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.assignment
    }
}

/// Builds the candidate bigraph anchored at the pair `(i, j)`: edge
/// `(p, q)` present iff `deg(p) = deg(q)` and `k_ip = k'_jq` (exact
/// equality, or residue-tuple equality in fingerprint mode).
///
/// Right-side values are bucketed by `(degree, k-value)` hash so each row
/// pair costs O(n) expected instead of O(n^2) pairwise comparisons.
pub fn build_bigraph(k: &KMatrix, kp: &KMatrix, i: usize, j: usize) -> Bigraph {
    let n = k.n();
    assert_eq!(n, kp.n(), "bigraph dimension mismatch");
    assert_eq!(
        k.primes(),
        kp.primes(),
        "k-matrices must share a comparison mode"
    );
    let mut buckets: HashMap<(usize, crate::weights::KValueRef<'_>), Vec<usize>> =
        HashMap::with_capacity(n);
    for q in 0..n {
        buckets
            .entry((kp.degree(q), kp.value(j, q)))
            .or_default()
            .push(q);
    }
    let mut h = Bigraph::new(n);
    for p in 0..n {
        if let Some(qs) = buckets.get(&(k.degree(p), k.value(i, p))) {
            for &q in qs {
                h.insert(p, q);
            }
        }
    }
    h
}

/// Returns a perfect matching of the bigraph, or `None` if none exists.
/// Hopcroft-Karp with vertices and adjacency scanned in ascending index
/// order, so the result is deterministic for a fixed edge set.
pub fn transversal(h: &Bigraph) -> Option<Mapping> {
    let n = h.n();
    let mut pair_left = vec![NONE; n];
    let mut pair_right = vec![NONE; n];
    let mut dist = vec![usize::MAX; n];
    let mut matched = 0;

    loop {
        // BFS phase: layer left vertices by shortest alternating path
        let mut queue: VecDeque<usize> = VecDeque::new();
        for u in 0..n {
            if pair_left[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found_augmenting = false;
        while let Some(u) = queue.pop_front() {
            for v in h.row_iter(u) {
                match pair_right[v] {
                    NONE => found_augmenting = true,
                    w => {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        if !found_augmenting {
            break;
        }
        for u in 0..n {
            if pair_left[u] == NONE && augment(h, u, &mut pair_left, &mut pair_right, &mut dist) {
                matched += 1;
            }
        }
    }

    (matched == n).then(|| Mapping::new(pair_left))
}

fn augment(
    h: &Bigraph,
    u: usize,
    pair_left: &mut [usize],
    pair_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for v in h.row_iter(u) {
        let w = pair_right[v];
        let reachable = w == NONE
            || (dist[w] == dist[u].wrapping_add(1) && augment(h, w, pair_left, pair_right, dist));
        if reachable {
            pair_left[u] = v;
            pair_right[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::weights::KMatrix;

    fn p3_k() -> KMatrix {
        KMatrix::exact(&Graph::new(3, [(0, 1), (1, 2)]).unwrap())
    }

    fn bigraph_from(n: usize, edges: &[(usize, usize)]) -> Bigraph {
        let mut h = Bigraph::new(n);
        for &(p, q) in edges {
            h.insert(p, q);
        }
        h
    }

    #[test]
    fn build_p3_center_anchor() {
        let k = p3_k();
        let h = build_bigraph(&k, &k, 1, 1);
        let edges: Vec<_> = h.edges().collect();
        assert_eq!(edges, vec![(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)]);
    }

    #[test]
    fn build_k2_anchor() {
        let k = KMatrix::exact(&Graph::new(2, [(0, 1)]).unwrap());
        let h = build_bigraph(&k, &k, 0, 0);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn build_mismatched_anchor_degrees() {
        // anchoring endpoint 0 of P3 against center 1: k_00 = 5/4 vs
        // k'_11 = 3/2, so left vertex 0 gets no edge and no transversal
        // can exist downstream
        let k = p3_k();
        let h = build_bigraph(&k, &k, 0, 1);
        assert!(!h.contains(0, 1));
        assert_eq!(h.left_degree(0), 0);
        assert!(transversal(&h).is_none());
    }

    #[test]
    fn anchor_vertex_incident_only_to_anchor_edge() {
        // k_ii lies in (1,2) while off-diagonal values lie in (0,1), so
        // the anchor row can only match the anchor column
        let k = p3_k();
        for i in 0..3 {
            let h = build_bigraph(&k, &k, i, i);
            assert_eq!(h.row_iter(i).collect::<Vec<_>>(), vec![i]);
        }
    }

    #[test]
    fn intersect_laws() {
        let a = bigraph_from(3, &[(0, 0), (1, 1), (1, 2)]);
        let b = bigraph_from(3, &[(1, 1), (0, 0), (2, 2)]);
        let empty = Bigraph::new(3);
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.intersect(&empty), empty);
        assert_eq!(
            a.intersect(&b).edges().collect::<Vec<_>>(),
            vec![(0, 0), (1, 1)]
        );
        assert_eq!(a.intersect(&b), b.intersect(&a));
    }

    #[test]
    fn transversal_diagonal() {
        let h = bigraph_from(4, &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let m = transversal(&h).unwrap();
        assert_eq!(m.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn transversal_none_when_vertex_uncovered() {
        let h = bigraph_from(3, &[(0, 0), (1, 1)]);
        assert!(transversal(&h).is_none());
    }

    #[test]
    fn transversal_on_p3_center_bigraph() {
        let k = p3_k();
        let h = build_bigraph(&k, &k, 1, 1);
        let m = transversal(&h).unwrap();
        assert_eq!(m.image(1), 1);
        // endpoints pair with endpoints, either way
        let ends = [m.image(0), m.image(2)];
        assert!(ends == [0, 2] || ends == [2, 0]);
    }

    #[test]
    fn transversal_needs_augmenting_paths() {
        // greedy ascending assignment fails here without augmentation:
        // 0 -> {0,1}, 1 -> {0}, 2 -> {1,2}
        let h = bigraph_from(3, &[(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)]);
        let m = transversal(&h).unwrap();
        assert_eq!(m.image(1), 0);
        for p in 0..3 {
            assert!(h.contains(p, m.image(p)));
        }
    }

    #[test]
    fn transversal_hall_violation() {
        // left {0,1,2} all confined to right {0,1}
        let h = bigraph_from(3, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]);
        assert!(transversal(&h).is_none());
    }

    #[test]
    fn edge_count_and_degrees() {
        let h = bigraph_from(3, &[(0, 0), (0, 1), (2, 1)]);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.left_degree(0), 2);
        assert_eq!(h.right_degrees(), vec![1, 2, 0]);
    }
}
