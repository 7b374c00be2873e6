use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::cyclo::CycloNum;
use crate::matrix::ExactMatrix;
use crate::walk::{angle_fraction, companion_roots};

/// A monic polynomial over ℚ[ζ_level], highest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CharPoly {
    coeffs: Vec<CycloNum>,
}

impl CharPoly {
    /// Takes coefficients highest degree first; the leading one must be 1.
    pub fn new(coeffs: Vec<CycloNum>) -> Self {
        assert!(
            !coeffs.is_empty() && coeffs[0].is_one(),
            "polynomial must be monic"
        );
        let level = coeffs[0].level();
        assert!(coeffs.iter().all(|c| c.level() == level), "mixed levels");
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn level(&self) -> u64 {
        self.coeffs[0].level()
    }

    /// Coefficients mapped to ℂ.
    pub fn eval(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(CycloNum::eval).collect()
    }

    /// Horner evaluation at a field element of the same level.
    pub fn eval_at(&self, x: &CycloNum) -> CycloNum {
        self.coeffs
            .iter()
            .skip(1)
            .fold(self.coeffs[0].clone(), |acc, c| &acc * x + c)
    }

    /// Divides by (λ − root) when `root` is an exact root.
    pub fn deflate(&self, root: &CycloNum) -> Option<CharPoly> {
        if self.degree() == 0 {
            return None;
        }
        let mut quotient = Vec::with_capacity(self.degree());
        let mut acc = self.coeffs[0].clone();
        for c in &self.coeffs[1..] {
            quotient.push(acc.clone());
            acc = &acc * root + c;
        }
        acc.is_zero().then_some(CharPoly { coeffs: quotient })
    }

    /// Product of two polynomials at the same level.
    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let level = self.level();
        let mut out = vec![CycloNum::zero(level); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        CharPoly { coeffs: out }
    }
}

/// det(λI − M) computed exactly by the Faddeev–LeVerrier recursion.
///
/// For a 3×3 matrix the coefficients are (1, −tr M, e₂(M), −det M).
pub fn char_poly_exact(m: &ExactMatrix) -> CharPoly {
    let n = m.dim();
    let level = m.level();
    let mut coeffs = vec![CycloNum::one(level)];
    // aux = M_k, starting from M_0 = 0
    let mut aux = ExactMatrix::zeros(n, level);
    for k in 1..=n {
        let prev = coeffs.last().expect("non-empty").clone();
        let mut next = m.mul(&aux);
        for i in 0..n {
            let d = next.get(i, i) + &prev;
            next.set(i, i, d);
        }
        aux = next;
        let tr = m.mul(&aux).trace();
        coeffs.push(tr.scale(&BigRational::new((-1).into(), (k as i64).into())));
    }
    CharPoly { coeffs }
}

/// Order of the group of roots of unity in ℚ[ζ_L].
pub(crate) fn unit_group_order(level: u64) -> u64 {
    if level.is_even() {
        level
    } else {
        2 * level
    }
}

impl CharPoly {
    /// Divides out every root of unity that the numerical roots point at.
    /// Each candidate is confirmed by exact division, so numerics only
    /// affect how much gets removed, never correctness.
    pub fn split_roots_of_unity(&self) -> (CharPoly, Vec<CycloNum>) {
        let mut poly = self.clone();
        let level = poly.level();
        let m = unit_group_order(level);
        let mut removed = Vec::new();
        if poly.degree() == 0 {
            return (poly, removed);
        }
        for z in companion_roots(&poly.eval()) {
            if (z.norm() - 1.0).abs() > 1e-6 || poly.degree() == 0 {
                continue;
            }
            let j = (angle_fraction(z) * m as f64).round() as u64 % m;
            let cand = root_of_unity(level, j);
            if (cand.eval() - z).norm() > 1e-6 {
                continue;
            }
            if let Some(q) = poly.deflate(&cand) {
                poly = q;
                removed.push(cand);
            }
        }
        (poly, removed)
    }
}

/// ζ_m^j written at `level`, where m is the unit group order.
fn root_of_unity(level: u64, j: u64) -> CycloNum {
    if level.is_even() {
        return CycloNum::zeta(level, j as i64);
    }
    // ζ_{2L} = −ζ_L^{(L+1)/2} for odd L
    let base = CycloNum::zeta(level, (j * level.div_ceil(2)) as i64);
    if j.is_odd() {
        -base
    } else {
        base
    }
}
