//! Exact solution of the vertex-weight linear system, the coefficient
//! matrix of k-values with its entry bounds, and the sorted-weight
//! topological index.
//!
//! The weight of vertex i satisfies
//! `x_i = (1/(d_i+1)) * sum_{j ~ i} x_j + b_i`. Scaling row i by `d_i + 1`
//! gives the integer system `((E+D) - M) X = (E+D) b`, whose matrix is
//! strictly diagonally dominant and therefore always invertible. All
//! k-value comparisons downstream are exact equalities, so everything here
//! is exact rational arithmetic; the optional multi-modular fingerprint
//! mode trades that for speed at large n and is never allowed to confirm
//! an isomorphism on its own.

mod modular;
mod solver;

pub use modular::{is_prime_u64, random_primes};

use crate::error::{Error, Result};
use crate::graph::Graph;
use num::{BigInt, One, Signed, Zero};

/// Exact rational scalar used for all weights and k-values.
pub type Rational = num::BigRational;

/// Formats a rational as the locale-independent `"num/den"` string used in
/// JSON reports, e.g. `"3/2"` or `"2/1"`.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Solves the weight system exactly: returns the unique X with
/// `x_i = (1/(d_i+1)) * sum_{j ~ i} x_j + b_i`.
pub fn solve_system(g: &Graph, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = g.n();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    // Clear denominators of b: b_i = c_i / scale with integer c_i.
    let scale: BigInt = b
        .iter()
        .fold(BigInt::one(), |acc, r| num::integer::lcm(acc, r.denom().clone()));
    let c: Vec<BigInt> = b.iter().map(|r| r.numer() * (&scale / r.denom())).collect();

    let mut a = vec![vec![BigInt::zero(); n + 1]; n];
    for i in 0..n {
        let diag = BigInt::from(g.degree(i) as u64 + 1);
        a[i][n] = &diag * &c[i];
        a[i][i] = diag;
        for &j in g.neighbors(i) {
            a[i][j] = BigInt::from(-1);
        }
    }
    let columns = solver::solve_fraction_free(a, n, 1)
        .expect("weight system matrix is strictly diagonally dominant, never singular");
    let inv_scale = Rational::from(scale).recip();
    Ok(columns.into_iter().next().unwrap().into_iter().map(|x| x * &inv_scale).collect())
}

/// The coefficient matrix of k-values. Column j equals the solution of the
/// weight system with b = e_j, so `entry(i, j) = k_ij`.
///
/// Stores the per-vertex degrees of the source graph, which bigraph
/// construction needs alongside the k-values.
#[derive(Debug, Clone)]
pub struct KMatrix {
    n: usize,
    degrees: Vec<usize>,
    entries: KEntries,
}

#[derive(Debug, Clone)]
enum KEntries {
    /// Row-major n*n exact rationals.
    Exact(Vec<Rational>),
    /// Row-major n*n tuples of residues, `primes.len()` residues per entry.
    Modular { primes: Vec<u64>, residues: Vec<u64> },
}

/// Borrowed comparable/hashable view of a single k-value. Values from
/// exact and modular matrices never compare equal; callers must build both
/// sides of a comparison in the same mode (and, for modular, with the same
/// primes).
#[derive(Debug, PartialEq, Eq, Hash, Clone, Copy)]
pub enum KValueRef<'a> {
    Exact(&'a Rational),
    Residues(&'a [u64]),
}

impl KMatrix {
    /// Computes the full exact matrix via one fraction-free solve with all
    /// n unit right-hand sides. The caller is expected to pass a connected
    /// graph; the entry bounds only hold in that case.
    pub fn exact(g: &Graph) -> KMatrix {
        let n = g.n();
        let mut a = vec![vec![BigInt::zero(); 2 * n]; n];
        for i in 0..n {
            let diag = BigInt::from(g.degree(i) as u64 + 1);
            a[i][n + i] = diag.clone();
            a[i][i] = diag;
            for &j in g.neighbors(i) {
                a[i][j] = BigInt::from(-1);
            }
        }
        let columns = solver::solve_fraction_free(a, n, n)
            .expect("weight system matrix is strictly diagonally dominant, never singular");
        let mut entries = vec![Rational::zero(); n * n];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, value) in col.into_iter().enumerate() {
                entries[i * n + j] = value;
            }
        }
        KMatrix {
            n,
            degrees: g.degrees(),
            entries: KEntries::Exact(entries),
        }
    }

    /// Multi-modular fingerprint matrix: each entry is the tuple of
    /// residues of k_ij modulo the given primes. Returns `None` if the
    /// system matrix is singular modulo one of the primes; retry with a
    /// fresh prime set.
    pub fn fingerprint(g: &Graph, primes: &[u64]) -> Option<KMatrix> {
        let n = g.n();
        let t = primes.len();
        let mut residues = vec![0u64; n * n * t];
        for (k, &p) in primes.iter().enumerate() {
            let per_prime = modular::k_matrix_mod(g, p)?;
            for i in 0..n {
                for j in 0..n {
                    residues[(i * n + j) * t + k] = per_prime[i * n + j];
                }
            }
        }
        Some(KMatrix {
            n,
            degrees: g.degrees(),
            entries: KEntries::Modular {
                primes: primes.to_vec(),
                residues,
            },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, KEntries::Exact(_))
    }

    /// Primes backing a fingerprint matrix; empty for exact matrices.
    pub fn primes(&self) -> &[u64] {
        match &self.entries {
            KEntries::Exact(_) => &[],
            KEntries::Modular { primes, .. } => primes,
        }
    }

    /// Comparable view of k_ij; see [`KValueRef`].
    pub fn value(&self, i: usize, j: usize) -> KValueRef<'_> {
        match &self.entries {
            KEntries::Exact(e) => KValueRef::Exact(&e[i * self.n + j]),
            KEntries::Modular { primes, residues } => {
                let t = primes.len();
                let base = (i * self.n + j) * t;
                KValueRef::Residues(&residues[base..base + t])
            }
        }
    }

    /// The exact rational k_ij, or `None` for fingerprint matrices.
    pub fn exact_entry(&self, i: usize, j: usize) -> Option<&Rational> {
        match &self.entries {
            KEntries::Exact(e) => Some(&e[i * self.n + j]),
            KEntries::Modular { .. } => None,
        }
    }
}

/// Checks the strict entry bounds: `1 < k_ii < 2` on the diagonal and
/// `0 < k_ij < 1` off it. The single-vertex matrix has its lone entry
/// exactly 1 and passes by special case (the strict bounds presume every
/// vertex has a neighbor). Requires an exact matrix.
pub fn check_bounds(k: &KMatrix) -> bool {
    let n = k.n();
    if n == 1 {
        return k.exact_entry(0, 0).expect("check_bounds requires an exact matrix")
            == &Rational::one();
    }
    let one = Rational::one();
    let two = &one + &one;
    for i in 0..n {
        for j in 0..n {
            let e = k
                .exact_entry(i, j)
                .expect("check_bounds requires an exact matrix");
            let ok = if i == j {
                *e > one && *e < two
            } else {
                e.is_positive() && *e < one
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// The sorted-weight graph invariant: the solution of the weight system
/// with b = (1, ..., 1), sorted ascending. Equal for isomorphic graphs.
pub fn topo_index(g: &Graph) -> Result<Vec<Rational>> {
    let ones = vec![Rational::one(); g.n()];
    let mut x = solve_system(g, &ones)?;
    x.sort();
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_connected, Permutation};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn k2() -> Graph {
        Graph::new(2, [(0, 1)]).unwrap()
    }

    fn c3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    // Expected values below were frozen after confirming them with an
    // independent dense rational solver.

    #[test]
    fn solve_k2_all_ones() {
        let x = solve_system(&k2(), &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(2, 1)]);
    }

    #[test]
    fn solve_k2_unit_vector() {
        let x = solve_system(&k2(), &[rat(1, 1), rat(0, 1)]).unwrap();
        assert_eq!(x, vec![rat(4, 3), rat(2, 3)]);
    }

    #[test]
    fn solve_c3_all_ones() {
        let x = solve_system(&c3(), &[rat(1, 1), rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, vec![rat(3, 1), rat(3, 1), rat(3, 1)]);
    }

    #[test]
    fn solve_rejects_dimension_mismatch() {
        assert!(matches!(
            solve_system(&k2(), &[rat(1, 1)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn solve_handles_rational_b() {
        // linearity sanity with non-integer b
        let x = solve_system(&k2(), &[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn kmatrix_k2() {
        let k = KMatrix::exact(&k2());
        let expect = [[rat(4, 3), rat(2, 3)], [rat(2, 3), rat(4, 3)]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(k.exact_entry(i, j).unwrap(), &expect[i][j]);
            }
        }
    }

    #[test]
    fn kmatrix_c3() {
        let k = KMatrix::exact(&c3());
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { rat(3, 2) } else { rat(3, 4) };
                assert_eq!(k.exact_entry(i, j).unwrap(), &expect);
            }
        }
    }

    #[test]
    fn kmatrix_p3() {
        let k = KMatrix::exact(&p3());
        let expect = [
            [rat(5, 4), rat(3, 4), rat(1, 4)],
            [rat(1, 2), rat(3, 2), rat(1, 2)],
            [rat(1, 4), rat(3, 4), rat(5, 4)],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k.exact_entry(i, j).unwrap(), &expect[i][j]);
            }
        }
    }

    #[test]
    fn column_identity() {
        let g = random_connected(7, 0.4, 17).unwrap();
        let k = KMatrix::exact(&g);
        for j in 0..7 {
            let mut e = vec![Rational::zero(); 7];
            e[j] = Rational::one();
            let col = solve_system(&g, &e).unwrap();
            for i in 0..7 {
                assert_eq!(k.exact_entry(i, j).unwrap(), &col[i]);
            }
        }
    }

    #[test]
    fn bounds_hold_for_small_graphs() {
        assert!(check_bounds(&KMatrix::exact(&k2())));
        assert!(check_bounds(&KMatrix::exact(&p3())));
        assert!(check_bounds(&KMatrix::exact(&c3())));
    }

    #[test]
    fn bounds_single_vertex_special_case() {
        let g = Graph::new(1, []).unwrap();
        let k = KMatrix::exact(&g);
        assert_eq!(k.exact_entry(0, 0).unwrap(), &Rational::one());
        assert!(check_bounds(&k));
    }

    #[test]
    fn topo_index_examples() {
        assert_eq!(topo_index(&k2()).unwrap(), vec![rat(2, 1), rat(2, 1)]);
        assert_eq!(
            topo_index(&c3()).unwrap(),
            vec![rat(3, 1), rat(3, 1), rat(3, 1)]
        );
        let p3_index = topo_index(&p3()).unwrap();
        assert_eq!(p3_index.len(), 3);
        // endpoint symmetry: the two extreme entries are the endpoints
        let raw = solve_system(&p3(), &vec![Rational::one(); 3]).unwrap();
        assert_eq!(raw[0], raw[2]);
    }

    #[test]
    fn equivariance_under_permutation() {
        // solve on a relabeled graph with a relabeled b equals the
        // relabeled solution
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for seed in 0..10 {
            let g = random_connected(8, 0.4, seed).unwrap();
            let p = Permutation::random(8, &mut rng);
            let b: Vec<Rational> = (0..8).map(|i| rat(i as i64 % 5 - 2, 1)).collect();
            let x = solve_system(&g, &b).unwrap();
            let gp = g.permute(&p).unwrap();
            let xp = solve_system(&gp, &p.apply_slice(&b)).unwrap();
            assert_eq!(xp, p.apply_slice(&x));
        }
    }

    #[test]
    fn linearity() {
        let g = random_connected(6, 0.5, 2).unwrap();
        let b1: Vec<Rational> = (0..6).map(|i| rat(i as i64, 3)).collect();
        let b2: Vec<Rational> = (0..6).map(|i| rat(7 - i as i64, 2)).collect();
        let sum: Vec<Rational> = b1.iter().zip(&b2).map(|(a, b)| a + b).collect();
        let lhs = solve_system(&g, &sum).unwrap();
        let x1 = solve_system(&g, &b1).unwrap();
        let x2 = solve_system(&g, &b2).unwrap();
        let rhs: Vec<Rational> = x1.iter().zip(&x2).map(|(a, b)| a + b).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_string_format() {
        assert_eq!(rational_string(&rat(3, 2)), "3/2");
        assert_eq!(rational_string(&rat(2, 1)), "2/1");
        assert_eq!(rational_string(&rat(-1, 4)), "-1/4");
    }

    #[test]
    fn fingerprint_distinguishes_and_matches() {
        let g = p3();
        let primes = random_primes(3, 7);
        let k = KMatrix::fingerprint(&g, &primes).unwrap();
        assert!(!k.is_exact());
        // same symmetry structure as the exact matrix
        assert_eq!(k.value(1, 0), k.value(1, 2));
        assert_ne!(k.value(0, 0), k.value(1, 1)); // 5/4 vs 3/2
        assert_eq!(k.value(0, 0), k.value(2, 2));
    }
}
