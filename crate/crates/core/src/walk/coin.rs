use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclo::{lcm, CycloNum};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// A 3×3 coin operator with entries in a single cyclotomic field, checked to
/// be exactly unitary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinMatrix {
    matrix: ExactMatrix,
}

impl CoinMatrix {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if matrix.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: matrix.dim(),
            });
        }
        check_unitary(&matrix)?;
        Ok(CoinMatrix { matrix })
    }

    pub fn level(&self) -> u64 {
        self.matrix.level()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    /// c_{ij} with 1-based indices as in the usual matrix notation.
    pub fn c(&self, i: usize, j: usize) -> &CycloNum {
        self.matrix.get(i - 1, j - 1)
    }

    /// True when every entry is a rational number.
    pub fn is_rational(&self) -> bool {
        self.matrix.entries().iter().all(CycloNum::is_rational)
    }

    /// The coin with its first and last rows exchanged.
    pub fn swap_outer_rows(&self) -> ExactMatrix {
        let m = &self.matrix;
        ExactMatrix::from_fn(3, m.level(), |r, c| {
            let src = match r {
                0 => 2,
                2 => 0,
                other => other,
            };
            m.get(src, c).clone()
        })
    }

    pub fn to_json(&self) -> CoinFile {
        CoinFile {
            level: self.level(),
            entries: (0..3).map(|r| self.matrix.row(r).to_vec()).collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: CoinFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("coin file: {e}")))?;
        file.into_coin()
    }
}

/// On-disk form of a custom coin: `{"level": m, "entries": [[CycloNum; 3]; 3]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoinFile {
    pub level: u64,
    pub entries: Vec<Vec<CycloNum>>,
}

impl CoinFile {
    pub fn into_coin(self) -> Result<CoinMatrix> {
        if self.level == 0 {
            return Err(Error::InvalidArgument("coin level must be positive".into()));
        }
        if self.entries.len() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: self.entries.len(),
            });
        }
        let mut flat = Vec::with_capacity(9);
        for row in self.entries {
            if row.len() != 3 {
                return Err(Error::DimensionMismatch {
                    expected: 3,
                    found: row.len(),
                });
            }
            for e in row {
                flat.push(e.embed(self.level)?);
            }
        }
        CoinMatrix::new(ExactMatrix::from_entries(3, self.level, flat)?)
    }
}

fn check_unitary(m: &ExactMatrix) -> Result<()> {
    let gram = m.mul(&m.adjoint());
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            let v = gram.get(r, c);
            let ok = if r == c { v.is_one() } else { v.is_zero() };
            if !ok {
                return Err(Error::NotUnitary(format!(
                    "<row {}, row {}> = {} (expected {})",
                    r + 1,
                    c + 1,
                    v,
                    if r == c { 1 } else { 0 }
                )));
            }
        }
    }
    Ok(())
}

/// The Grover matrix G(n): 2/n − 1 on the diagonal and 2/n elsewhere, at level 1.
pub fn grover_matrix(n: usize) -> ExactMatrix {
    assert!(n >= 2, "Grover matrix needs n >= 2");
    let off = CycloNum::ratio(1, 2, n as i64);
    let diag = CycloNum::ratio(1, 2 - n as i64, n as i64);
    ExactMatrix::from_fn(n, 1, |r, c| if r == c { diag.clone() } else { off.clone() })
}

/// G(3) as a coin.
pub fn grover_coin() -> CoinMatrix {
    CoinMatrix::new(grover_matrix(3)).expect("G(3) is unitary")
}

/// The positive square root of a positive integer as an exact cyclotomic
/// number, built from quadratic Gauss sums.
pub fn sqrt_integer(n: u64) -> CycloNum {
    assert!(n >= 1);
    let (square, free) = split_square(n);
    let mut level = 1;
    let mut factors = Vec::new();
    for p in prime_factors(free) {
        let (l, r) = sqrt_prime(p);
        level = lcm(level, l);
        factors.push(r);
    }
    let mut acc = CycloNum::from_integer(level, square as i64);
    for f in factors {
        acc = acc * f.embed(level).expect("lcm is a multiple");
    }
    debug_assert_eq!(
        &acc * &acc,
        CycloNum::from_integer(level, n as i64),
        "square root check"
    );
    acc
}

fn sqrt_prime(p: u64) -> (u64, CycloNum) {
    if p == 2 {
        // ζ_8 + ζ_8^7 = √2
        return (8, CycloNum::zeta(8, 1) + CycloNum::zeta(8, 7));
    }
    // Gauss sum g = Σ (a/p) ζ_p^a, g² = (−1/p)·p
    let level = if p % 4 == 1 { p } else { 4 * p };
    let step = (level / p) as i64;
    let mut g = CycloNum::zero(level);
    for a in 1..p {
        let term = CycloNum::zeta(level, a as i64 * step);
        g = if legendre(a, p) == 1 {
            g + term
        } else {
            g - term
        };
    }
    let mut root = if p % 4 == 1 {
        g
    } else {
        // g = i√p, so √p = −i·g
        -(CycloNum::zeta(level, (level / 4) as i64) * g)
    };
    if root.eval().re < 0.0 {
        root = -root;
    }
    (level, root)
}

fn legendre(a: u64, p: u64) -> i32 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// n = square² · free with `free` squarefree.
fn split_square(n: u64) -> (u64, u64) {
    let mut square = 1;
    let mut free = 1;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    (square, free * m)
}

/// The Fourier matrix F(n) with entries ζ_n^{uv}/√n (0-based u, v).
///
/// Lives at level lcm(n, level of √n); F(3) is at level 12.
pub fn fourier_matrix(n: usize) -> ExactMatrix {
    assert!(n >= 2, "Fourier matrix needs n >= 2");
    let root = sqrt_integer(n as u64);
    let level = lcm(n as u64, root.level());
    let step = (level / n as u64) as i64;
    // 1/√n = √n / n
    let inv_root = root
        .embed(level)
        .expect("lcm is a multiple")
        .scale(&BigRational::new(BigInt::from(1), BigInt::from(n)));
    ExactMatrix::from_fn(n, level, |u, v| {
        let e = ((u * v) % n) as i64 * step;
        CycloNum::zeta(level, e) * &inv_root
    })
}

/// F(3) as a coin.
pub fn fourier_coin() -> CoinMatrix {
    CoinMatrix::new(fourier_matrix(3)).expect("F(3) is unitary")
}
