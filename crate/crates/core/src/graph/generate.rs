use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Named test-instance graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    K2,
    Path(usize),
    Cycle(usize),
    Petersen,
    K33,
    Prism,
    Rook44,
    Shrikhande,
}

impl GraphKind {
    /// Parses names like `k2`, `path(5)`, `cycle(8)`, `petersen`,
    /// `shrikhande`, `rook44`.
    pub fn parse_named(name: &str) -> Result<GraphKind> {
        let name = name.trim().to_ascii_lowercase();
        let parametric = |s: &str, prefix: &str| -> Option<Result<usize>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.parse().map_err(|_| Error::UnknownName(s.to_string())))
        };
        if let Some(k) = parametric(&name, "path") {
            return Ok(GraphKind::Path(k?));
        }
        if let Some(k) = parametric(&name, "cycle") {
            return Ok(GraphKind::Cycle(k?));
        }
        match name.as_str() {
            "k2" => Ok(GraphKind::K2),
            "petersen" => Ok(GraphKind::Petersen),
            "k33" => Ok(GraphKind::K33),
            "prism" => Ok(GraphKind::Prism),
            "rook44" => Ok(GraphKind::Rook44),
            "shrikhande" => Ok(GraphKind::Shrikhande),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Builds a named graph with its standard construction.
pub fn named(kind: &GraphKind) -> Result<Graph> {
    match kind {
        GraphKind::K2 => Graph::new(2, [(0, 1)]),
        GraphKind::Path(n) => {
            if *n < 1 {
                return Err(Error::InfeasibleGenerator("path needs n >= 1".into()));
            }
            Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
        }
        GraphKind::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InfeasibleGenerator("cycle needs n >= 3".into()));
            }
            Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
                edges.push((i, 5 + i)); // spokes
            }
            Graph::new(10, edges)
        }
        GraphKind::K33 => Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))),
        GraphKind::Prism => Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        ),
        GraphKind::Rook44 => {
            // 4x4 rook's graph: vertices (a, b), edges on shared row or column
            let idx = |a: usize, b: usize| a * 4 + b;
            let mut edges = Vec::new();
            for a in 0..4 {
                for b in 0..4 {
                    for b2 in b + 1..4 {
                        edges.push((idx(a, b), idx(a, b2)));
                    }
                    for a2 in a + 1..4 {
                        edges.push((idx(a, b), idx(a2, b)));
                    }
                }
            }
            Graph::new(16, edges)
        }
        GraphKind::Shrikhande => {
            // Cayley graph on Z4 x Z4 with connection set +-{(1,0),(0,1),(1,1)}
            let idx = |a: usize, b: usize| a * 4 + b;
            let mut edges = Vec::new();
            for a in 0..4 {
                for b in 0..4 {
                    for (da, db) in [(1usize, 0usize), (0, 1), (1, 1)] {
                        let u = idx(a, b);
                        let v = idx((a + da) % 4, (b + db) % 4);
                        if u < v {
                            edges.push((u, v));
                        } else {
                            edges.push((v, u));
                        }
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::new(16, edges)
        }
    }
}

/// Erdos-Renyi G(n, p), then random inter-component edges until connected.
/// Deterministic for a fixed seed.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleGenerator("n must be positive".into()));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InfeasibleGenerator(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::new(n, edges.iter().copied())?;
    while !g.is_connected() {
        let comp = components(&g);
        let (u, v) = random_cross_pair(&comp, &mut rng);
        edges.push((u.min(v), u.max(v)));
        g = Graph::new(n, edges.iter().copied())?;
    }
    Ok(g)
}

fn components(g: &Graph) -> Vec<usize> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut next = 0;
    for start in 0..g.n() {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

fn random_cross_pair(comp: &[usize], rng: &mut impl Rng) -> (usize, usize) {
    loop {
        let u = rng.gen_range(0..comp.len());
        let v = rng.gen_range(0..comp.len());
        if comp[u] != comp[v] {
            return (u, v);
        }
    }
}

/// Random d-regular graph via the pairing model, retried until simple.
/// Deterministic for a fixed seed.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleGenerator("n must be positive".into()));
    }
    if d >= n {
        return Err(Error::InfeasibleGenerator(format!(
            "degree {d} must be below n = {n}"
        )));
    }
    if (n * d) % 2 != 0 {
        return Err(Error::InfeasibleGenerator(format!(
            "n*d = {} is odd; no {d}-regular graph on {n} vertices exists",
            n * d
        )));
    }
    if d == 0 {
        return Graph::new(n, []);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        stubs.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        let simple = pairs.iter().all(|&(u, v)| u != v)
            && {
                let mut sorted: Vec<(usize, usize)> =
                    pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
                sorted.sort_unstable();
                sorted.windows(2).all(|w| w[0] != w[1])
            };
        if simple {
            return Graph::new(n, pairs);
        }
    }
    Err(Error::InfeasibleGenerator(format!(
        "pairing model failed to produce a simple {d}-regular graph on {n} vertices"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k33_shape() {
        let g = named(&GraphKind::K33).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn prism_shape() {
        let g = named(&GraphKind::Prism).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2)); // triangle
    }

    #[test]
    fn petersen_shape() {
        let g = named(&GraphKind::Petersen).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn srg_pair_shapes() {
        let rook = named(&GraphKind::Rook44).unwrap();
        let shr = named(&GraphKind::Shrikhande).unwrap();
        for g in [&rook, &shr] {
            assert_eq!((g.n(), g.m()), (16, 48));
            assert!(g.degrees().iter().all(|&d| d == 6));
            assert!(g.is_connected());
        }
        // both are strongly regular (16, 6, 2, 2)
        for g in [&rook, &shr] {
            for u in 0..16 {
                for v in u + 1..16 {
                    let common = g
                        .neighbors(u)
                        .iter()
                        .filter(|w| g.neighbors(v).contains(w))
                        .count();
                    assert_eq!(common, 2);
                }
            }
        }
    }

    /// Brute-force max clique, the certificate separating the SRG pair.
    fn max_clique(g: &Graph) -> usize {
        fn extend(g: &Graph, clique: &mut Vec<usize>, cands: &[usize], best: &mut usize) {
            *best = (*best).max(clique.len());
            for (idx, &v) in cands.iter().enumerate() {
                if clique.iter().all(|&u| g.has_edge(u, v)) {
                    clique.push(v);
                    extend(g, clique, &cands[idx + 1..], best);
                    clique.pop();
                }
            }
        }
        let mut best = 0;
        let verts: Vec<usize> = (0..g.n()).collect();
        extend(g, &mut Vec::new(), &verts, &mut best);
        best
    }

    #[test]
    fn srg_pair_distinguished_by_clique_number() {
        assert_eq!(max_clique(&named(&GraphKind::Rook44).unwrap()), 4);
        assert_eq!(max_clique(&named(&GraphKind::Shrikhande).unwrap()), 3);
    }

    #[test]
    fn random_connected_is_connected_and_deterministic() {
        for seed in 0..20 {
            let g = random_connected(12, 0.1, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected(12, 0.1, seed).unwrap());
        }
    }

    #[test]
    fn random_regular_degrees() {
        for seed in 0..10 {
            let g = random_regular(12, 3, seed).unwrap();
            assert!(g.degrees().iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn random_regular_infeasible() {
        assert!(random_regular(5, 3, 0).is_err()); // odd n*d
        assert!(random_regular(4, 4, 0).is_err()); // d >= n
    }

    #[test]
    fn parse_named_parametric() {
        assert_eq!(GraphKind::parse_named("path(4)").unwrap(), GraphKind::Path(4));
        assert_eq!(GraphKind::parse_named("cycle(6)").unwrap(), GraphKind::Cycle(6));
        assert!(GraphKind::parse_named("dodecahedron").is_err());
    }
}
