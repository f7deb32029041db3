//! Multi-modular fingerprints for k-values: residues of each k_ij modulo a
//! handful of random 62-bit primes, computed without any big-integer work.
//! A residue-tuple mismatch is definitive inequality; matches are treated
//! as probable equality and every "isomorphic" verdict is still gated by
//! the exact edge-level verification.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Random 62-bit primes, deterministic for a fixed seed.
pub fn random_primes(count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = Vec::with_capacity(count);
    while primes.len() < count {
        let candidate = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        if is_prime_u64(candidate) && !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    primes
}

/// Residues of every k_ij modulo `p`, row-major, or `None` if the scaled
/// system matrix happens to be singular mod `p` (caller retries with a
/// different prime).
///
/// Works on the integer-scaled form: K = S^{-1} (E+D) with
/// S = (E+D) - M, inverted by Gauss-Jordan mod p.
pub(crate) fn k_matrix_mod(g: &Graph, p: u64) -> Option<Vec<u64>> {
    let n = g.n();
    // augmented [S | E+D] mod p
    let width = 2 * n;
    let mut a = vec![0u64; n * width];
    for i in 0..n {
        let scale = (g.degree(i) as u64 + 1) % p;
        a[i * width + i] = scale;
        a[i * width + n + i] = scale;
        for &j in g.neighbors(i) {
            a[i * width + j] = p - 1; // -1 mod p
        }
    }
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| a[r * width + k] != 0)?;
        if pivot_row != k {
            for c in 0..width {
                a.swap(k * width + c, pivot_row * width + c);
            }
        }
        let inv = inv_mod(a[k * width + k], p);
        for c in 0..width {
            a[k * width + c] = mul_mod(a[k * width + c], inv, p);
        }
        for r in 0..n {
            if r == k || a[r * width + k] == 0 {
                continue;
            }
            let factor = a[r * width + k];
            for c in 0..width {
                let sub = mul_mod(factor, a[k * width + c], p);
                a[r * width + c] = (a[r * width + c] + p - sub) % p;
            }
        }
    }
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = a[i * width + n + j];
        }
    }
    Some(out)
}
