//! Dense square matrices over a single cyclotomic field.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};

/// A square matrix whose entries all live in ℚ[ζ_level].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    dim: usize,
    level: u64,
    entries: Vec<CycloNum>,
}

impl ExactMatrix {
    /// Builds from row-major entries; every entry must be at `level`.
    pub fn from_entries(dim: usize, level: u64, entries: Vec<CycloNum>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.level() != level) {
            return Err(Error::LevelMismatch {
                left: level,
                right: bad.level(),
            });
        }
        Ok(ExactMatrix {
            dim,
            level,
            entries,
        })
    }

    pub fn from_fn(dim: usize, level: u64, mut f: impl FnMut(usize, usize) -> CycloNum) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                let e = f(r, c);
                assert_eq!(e.level(), level, "entry ({r},{c}) at wrong level");
                entries.push(e);
            }
        }
        ExactMatrix {
            dim,
            level,
            entries,
        }
    }

    pub fn zeros(dim: usize, level: u64) -> Self {
        Self::from_fn(dim, level, |_, _| CycloNum::zero(level))
    }

    pub fn identity(dim: usize, level: u64) -> Self {
        Self::from_fn(dim, level, |r, c| {
            if r == c {
                CycloNum::one(level)
            } else {
                CycloNum::zero(level)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloNum {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: CycloNum) {
        assert_eq!(value.level(), self.level);
        self.entries[r * self.dim + c] = value;
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[CycloNum] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    /// Re-expresses every entry at a multiple of the current level.
    pub fn embed(&self, target: u64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            dim: self.dim,
            level: target,
            entries,
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        if self.level != rhs.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: rhs.level,
            });
        }
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            let row = self.row(r);
            for c in 0..n {
                let pairs = (0..n).map(|k| (&row[k], rhs.get(k, c)));
                entries.push(CycloNum::sum_of_products(self.level, pairs));
            }
        }
        Ok(ExactMatrix {
            dim: n,
            level: self.level,
            entries,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.dim, self.level);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, self.level, |r, c| self.get(c, r).conj())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Exact test of M·M† = I.
    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint()).is_identity()
    }

    pub fn trace(&self) -> CycloNum {
        (0..self.dim).fold(CycloNum::zero(self.level), |acc, i| acc + self.get(i, i))
    }

    /// Numerical image under ζ ↦ e^{2πi/level}.
    pub fn eval(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim, self.dim, |r, c| self.get(r, c).eval())
    }
}
