//! Exact rational Gaussian elimination with full pivoting.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Solves `a · y = b` exactly, where `a` is `rows × cols` (row-major) with
/// linearly independent columns.
///
/// Returns `None` when the system is inconsistent.
pub(crate) fn solve_full_pivot(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    debug_assert_eq!(b.len(), rows);
    // col_of[i] = original column index living in position i
    let mut col_of: Vec<usize> = (0..cols).collect();
    let mut rank = 0;

    while rank < rows.min(cols) {
        // Full pivoting: largest magnitude entry in the trailing submatrix.
        let mut best: Option<(usize, usize)> = None;
        for r in rank..rows {
            for c in rank..cols {
                if a[r][c].is_zero() {
                    continue;
                }
                match best {
                    Some((br, bc)) if a[br][bc].abs() >= a[r][c].abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(rank, pr);
        b.swap(rank, pr);
        if pc != rank {
            for row in a.iter_mut() {
                row.swap(rank, pc);
            }
            col_of.swap(rank, pc);
        }

        let pivot = a[rank][rank].clone();
        for r in rank + 1..rows {
            if a[r][rank].is_zero() {
                continue;
            }
            let factor = &a[r][rank] / &pivot;
            #[allow(clippy::needless_range_loop)]
            for c in rank..cols {
                if !a[rank][c].is_zero() {
                    let delta = &factor * &a[rank][c];
                    a[r][c] -= delta;
                }
            }
            let delta = &factor * &b[rank];
            b[r] -= delta;
        }
        rank += 1;
    }

    if b[rank..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    assert_eq!(rank, cols, "basis columns must be independent");

    let mut sol = vec![BigRational::zero(); cols];
    for i in (0..rank).rev() {
        let mut acc = b[i].clone();
        for c in i + 1..cols {
            if !a[i][c].is_zero() {
                acc -= &a[i][c] * &sol[c];
            }
        }
        sol[i] = acc / &a[i][i];
    }
    let mut out = vec![BigRational::zero(); cols];
    for (pos, &orig) in col_of.iter().enumerate() {
        out[orig] = sol[pos].clone();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        // columns (1,0,1) and (0,1,1); b = 2*c0 - 1/3*c1
        let a = vec![
            vec![q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1)],
        ];
        let b = vec![q(2, 1), q(-1, 3), q(5, 3)];
        assert_eq!(solve_full_pivot(a, b), Some(vec![q(2, 1), q(-1, 3)]));
    }

    #[test]
    fn rejects_inconsistent_system() {
        let a = vec![
            vec![q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1)],
        ];
        let b = vec![q(1, 1), q(1, 1), q(1, 1)];
        assert_eq!(solve_full_pivot(a, b), None);
    }
}
