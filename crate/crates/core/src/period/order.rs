use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::cyclo::{field, CycloNum};
use crate::matrix::ExactMatrix;

/// Outcome of searching for the multiplicative order of a unitary matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockOrder {
    Finite(u64),
    UnknownUpTo(u64),
}

impl BlockOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            BlockOrder::Finite(t) => Some(t),
            BlockOrder::UnknownUpTo(_) => None,
        }
    }
}

/// Serialized as the order, or `null` when none was found.
impl Serialize for BlockOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

/// Smallest t ≤ `t_max` with M^t = I, decided exactly.
///
/// Powers are first tracked modulo a large prime p in F_p[x]/Φ_n (reduction
/// mod p is a ring homomorphism on the entries, so M^t ≢ I mod p already
/// proves M^t ≠ I). Whenever the residue is the identity the claim is
/// confirmed with exact arithmetic. If some denominator is divisible by p
/// the search falls back to plain exact multiplication.
pub fn block_order(m: &ExactMatrix, t_max: u64) -> BlockOrder {
    match ModMatrix::from_exact(m) {
        Some(mm) => screened_order(m, &mm, t_max),
        None => exact_order(m, t_max),
    }
}

fn exact_order(m: &ExactMatrix, t_max: u64) -> BlockOrder {
    let mut power = m.clone();
    for t in 1..=t_max {
        if power.is_identity() {
            return BlockOrder::Finite(t);
        }
        power = power.mul(m);
    }
    BlockOrder::UnknownUpTo(t_max)
}

fn screened_order(m: &ExactMatrix, mm: &ModMatrix, t_max: u64) -> BlockOrder {
    let mut power = mm.clone();
    for t in 1..=t_max {
        if power.is_identity() && m.pow(t).is_identity() {
            return BlockOrder::Finite(t);
        }
        power = power.mul(mm);
    }
    BlockOrder::UnknownUpTo(t_max)
}

/// 2^61 − 1.
const PRIME: u64 = (1 << 61) - 1;

#[derive(Clone)]
struct ModMatrix {
    dim: usize,
    phi: usize,
    tail: std::sync::Arc<Vec<(usize, u64)>>,
    entries: Vec<Vec<u64>>,
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn residue(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(PRIME))
        .to_u64()
        .expect("residue below the prime")
}

fn entry_residues(x: &CycloNum) -> Option<Vec<u64>> {
    let den = residue(x.denominator());
    if den == 0 {
        return None;
    }
    let inv = powmod(den, PRIME - 2);
    Some(
        x.numerators()
            .iter()
            .map(|c| mulmod(residue(c), inv))
            .collect(),
    )
}

impl ModMatrix {
    fn from_exact(m: &ExactMatrix) -> Option<Self> {
        let f = field(m.level());
        let entries = m
            .entries()
            .iter()
            .map(entry_residues)
            .collect::<Option<Vec<_>>>()?;
        Some(ModMatrix {
            dim: m.dim(),
            phi: f.phi,
            tail: std::sync::Arc::new(f.tail_mod(PRIME)),
            entries,
        })
    }

    fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let e = &self.entries[r * self.dim + c];
                let lead = if r == c { 1 } else { 0 };
                e[0] == lead && e[1..].iter().all(|v| *v == 0)
            })
        })
    }

    fn mul(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let width = 2 * self.phi - 1;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = vec![0u128; width];
                for k in 0..n {
                    let a = &self.entries[r * n + k];
                    let b = &rhs.entries[k * n + c];
                    for (i, &x) in a.iter().enumerate() {
                        if x == 0 {
                            continue;
                        }
                        for (j, &y) in b.iter().enumerate() {
                            acc[i + j] = (acc[i + j] + x as u128 * y as u128) % PRIME as u128;
                        }
                    }
                }
                let mut poly: Vec<u64> = acc.into_iter().map(|v| v as u64).collect();
                self.reduce(&mut poly);
                entries.push(poly);
            }
        }
        ModMatrix {
            dim: n,
            phi: self.phi,
            tail: self.tail.clone(),
            entries,
        }
    }

    fn reduce(&self, poly: &mut Vec<u64>) {
        let phi = self.phi;
        for i in (phi..poly.len()).rev() {
            let c = poly[i];
            if c == 0 {
                continue;
            }
            poly[i] = 0;
            for &(j, f) in self.tail.iter() {
                let idx = i - phi + j;
                poly[idx] = (poly[idx] + PRIME - mulmod(c, f)) % PRIME;
            }
        }
        poly.truncate(phi);
    }
}

/// lcm of the given orders, computed with arbitrary precision.
pub(crate) fn lcm_all(orders: impl IntoIterator<Item = u64>) -> BigInt {
    orders
        .into_iter()
        .fold(BigInt::from(1), |acc, t| acc.lcm(&BigInt::from(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::{build_block, build_blocks, fourier_coin, grover_coin, ShiftType, WalkSpec};

    #[test]
    fn small_examples() {
        assert_eq!(
            block_order(&ExactMatrix::identity(3, 1), 10),
            BlockOrder::Finite(1)
        );
        let d = ExactMatrix::from_fn(3, 2, |r, c| {
            if r != c {
                CycloNum::zero(2)
            } else if r == 1 {
                CycloNum::one(2)
            } else {
                CycloNum::from_integer(2, -1)
            }
        });
        assert_eq!(block_order(&d, 10), BlockOrder::Finite(2));
        assert_eq!(block_order(&d, 1), BlockOrder::UnknownUpTo(1));
        let s = WalkSpec::new(3, grover_coin(), ShiftType::Moving).unwrap();
        assert_eq!(
            block_order(&build_block(&s, 1).unwrap(), 100),
            BlockOrder::Finite(3)
        );
    }

    #[test]
    fn screened_and_plain_search_agree() {
        for coin in [grover_coin(), fourier_coin()] {
            for n in 2..=6 {
                let s = WalkSpec::new(n, coin.clone(), ShiftType::Moving).unwrap();
                for b in build_blocks(&s).unwrap() {
                    assert_eq!(block_order(&b, 30), exact_order(&b, 30));
                }
            }
        }
    }

    #[test]
    fn order_serializes_as_number_or_null() {
        assert_eq!(serde_json::to_string(&BlockOrder::Finite(4)).unwrap(), "4");
        assert_eq!(
            serde_json::to_string(&BlockOrder::UnknownUpTo(9)).unwrap(),
            "null"
        );
    }

    #[test]
    fn lcm_of_orders() {
        assert_eq!(lcm_all([2, 3, 3]), BigInt::from(6));
        assert_eq!(lcm_all([4, 4, 12]), BigInt::from(12));
    }
}
