use crate::weights::Rational;
use num::{BigInt, Zero};

/// Fraction-free (Bareiss) elimination on an integer system with multiple
/// right-hand sides. `a` holds `n` rows of length `n + m`: the coefficient
/// matrix followed by `m` RHS columns. Returns the `m` solution columns, or
/// `None` if the matrix is singular.
///
/// Intermediate entries are minors' determinants, so growth stays
/// polynomial in digit count instead of the exponential blowup of naive
/// rational elimination.
pub(crate) fn solve_fraction_free(
    mut a: Vec<Vec<BigInt>>,
    n: usize,
    m: usize,
) -> Option<Vec<Vec<Rational>>> {
    debug_assert!(a.len() == n && a.iter().all(|r| r.len() == n + m));
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, swap);
        }
        for i in k + 1..n {
            for j in k + 1..n + m {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Bareiss identity
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if a[n - 1][n - 1].is_zero() {
        return None;
    }

    // Integer back substitution over the upper triangle. With
    // det = a[n-1][n-1], the scaled solution y_i = det * x_i is an integer
    // (it is a signed Cramer determinant), and the recurrence
    //   y_i = (det * rhs_i - sum_{j>i} a[i][j] * y_j) / a[i][i]
    // stays in BigInt with exact divisions. Keeping the whole sweep integer
    // avoids a gcd normalization per arithmetic op; only the final n*m
    // entries are reduced to lowest terms.
    let det = a[n - 1][n - 1].clone();
    let mut columns = Vec::with_capacity(m);
    for col in 0..m {
        let mut y = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let mut acc = &det * &a[i][n + col];
            for j in i + 1..n {
                if !a[i][j].is_zero() && !y[j].is_zero() {
                    acc -= &a[i][j] * &y[j];
                }
            }
            y[i] = acc / &a[i][i];
        }
        columns.push(
            y.into_iter()
                .map(|yi| Rational::new(yi, det.clone()))
                .collect(),
        );
    }
    Some(columns)
}
