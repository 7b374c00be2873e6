//! Numerical spectra. Nothing here decides a period; these values back
//! cross-checks and reports only.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur, SymmetricEigen};
use num_complex::Complex64;

use super::operator::{build_blocks, WalkSpec};
use crate::error::Result;
use crate::period::char_poly_exact;

/// Eigenvalues of a dense complex matrix from its complex Schur form.
pub fn dense_eigenvalues(m: DMatrix<Complex64>) -> Vec<Complex64> {
    let (_, t) = Schur::try_new(m, f64::EPSILON, 100_000)
        .expect("Schur iteration did not converge")
        .unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Eigenvalues of a unitary matrix.
///
/// U is normal, so it shares its eigenvectors with the Hermitian matrix
/// (U + U†)/2 + α(U − U†)/2i, whose eigenvalue for e^{iθ} is cos θ + α sin θ.
/// With α irrational distinct θ stay apart, and each eigenvalue of U is read
/// off as v†Uv.
pub fn unitary_eigenvalues(u: &DMatrix<Complex64>) -> Vec<Complex64> {
    let alpha = std::f64::consts::SQRT_2 - 0.5;
    let adj = u.adjoint();
    let i2 = Complex64::new(0.0, 2.0);
    let h = (u + &adj).map(|z| z / 2.0) + (u - &adj).map(|z| z / i2 * alpha);
    let h = (&h + h.adjoint()).map(|z| z / 2.0);
    let eig = SymmetricEigen::new(h);
    let v = eig.eigenvectors;
    (0..v.ncols())
        .map(|j| {
            let col = v.column(j);
            (col.adjoint() * u * col)[(0, 0)]
        })
        .collect()
}

/// Roots of a monic polynomial given highest degree first, via the
/// eigenvalues of its companion matrix.
pub fn companion_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    assert!(d >= 1, "constant polynomial has no roots");
    let lead = coeffs[0];
    let companion = DMatrix::from_fn(d, d, |r, c| {
        if r == 0 {
            -coeffs[c + 1] / lead
        } else if r == c + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    dense_eigenvalues(companion)
}

/// Eigenvalues of each block Û(k), k = 0..N−1, from the exact
/// characteristic polynomial. Exact root-of-unity factors are split off
/// first; the remaining factor is solved through its companion matrix.
pub fn spectrum_numeric(spec: &WalkSpec) -> Result<Vec<Vec<Complex64>>> {
    Ok(build_blocks(spec)?
        .iter()
        .map(|b| {
            let (rest, roots) = char_poly_exact(b).split_roots_of_unity();
            let mut out: Vec<Complex64> = roots.iter().map(|r| r.eval()).collect();
            if rest.degree() > 0 {
                out.extend(companion_roots(&rest.eval()));
            }
            out
        })
        .collect())
}

/// Largest distance after greedily pairing each element of `a` with its
/// nearest unused element of `b`. Infinite if the lengths differ.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("lengths match");
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

/// arg(z)/2π normalized to [0, 1).
pub fn angle_fraction(z: Complex64) -> f64 {
    let a = z.arg() / (2.0 * PI);
    let a = if a < 0.0 { a + 1.0 } else { a };
    if a >= 1.0 {
        0.0
    } else {
        a
    }
}

/// Best rational p/q ≈ x with q ≤ `max_den` from the continued-fraction
/// convergents, if one lies within `tol`.
pub fn suggest_rational(x: f64, max_den: u64, tol: f64) -> Option<(i64, u64)> {
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1u64, 1i64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a as i64;
        let p2 = ai.checked_mul(p1)?.checked_add(p0)?;
        let q2 = (ai as u64).checked_mul(q1)?.checked_add(q0)?;
        if q2 > max_den {
            return None;
        }
        if (p2 as f64 / q2 as f64 - x).abs() <= tol {
            return Some((p2, q2));
        }
        let frac = r - a;
        if frac.abs() < 1e-15 {
            return None;
        }
        r = 1.0 / frac;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}
