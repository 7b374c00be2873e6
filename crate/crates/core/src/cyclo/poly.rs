//! Cyclotomic polynomials and the small amount of elementary number theory
//! needed to work with them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Euler's totient φ(n).
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Φ_n with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloPoly {
    n: u64,
    coeffs: Vec<BigInt>,
}

impl CycloPoly {
    pub fn index(&self) -> u64 {
        self.n
    }

    /// Coefficients in ascending degree; the last one is the leading 1.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates the polynomial at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// The n-th cyclotomic polynomial, obtained by exact division of x^n − 1 by
/// every Φ_d with d a proper divisor of n.
pub fn cyclotomic_poly(n: u64) -> CycloPoly {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    field(n).poly.clone()
}

fn compute_cyclotomic(n: u64) -> CycloPoly {
    let mut rem: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    rem[0] = -BigInt::one();
    rem[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = field(d);
        rem = exact_div_monic(&rem, phi_d.poly.coeffs());
    }
    CycloPoly { n, coeffs: rem }
}

/// Divides `num` by the monic polynomial `den`, asserting the remainder vanishes.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    debug_assert!(den[dd].is_one());
    if nd < dd {
        return num.to_vec();
    }
    let mut work = num.to_vec();
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = work[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            if !dj.is_zero() {
                work[i + j] -= &c * dj;
            }
        }
        quot[i] = c;
    }
    debug_assert!(work[..dd].iter().all(Zero::is_zero), "inexact division");
    quot
}

/// Per-level data shared by every element of ℚ[ζ_n].
#[derive(Debug)]
pub(crate) struct Field {
    pub(crate) level: u64,
    pub(crate) phi: usize,
    pub(crate) poly: CycloPoly,
    /// Non-zero, non-leading coefficients of Φ_n as (degree, value).
    pub(crate) tail: Vec<(usize, BigInt)>,
}

impl Field {
    fn new(level: u64) -> Self {
        let poly = if level == 1 {
            CycloPoly {
                n: 1,
                coeffs: vec![-BigInt::one(), BigInt::one()],
            }
        } else {
            compute_cyclotomic(level)
        };
        let phi = poly.degree();
        debug_assert_eq!(phi as u64, totient(level));
        let tail = poly.coeffs[..phi]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        Field {
            level,
            phi,
            poly,
            tail,
        }
    }

    /// Reduces an integer polynomial (any length) modulo Φ_n in place and
    /// truncates it to φ(n) coefficients.
    pub(crate) fn reduce(&self, poly: &mut Vec<BigInt>) {
        let phi = self.phi;
        if poly.len() > phi {
            for i in (phi..poly.len()).rev() {
                if poly[i].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut poly[i]);
                let shift = i - phi;
                for (j, fj) in &self.tail {
                    poly[shift + j] -= &c * fj;
                }
            }
        }
        poly.resize(phi, BigInt::zero());
    }

    /// Reduces modulo Φ_n working with residues mod `p`.
    pub(crate) fn tail_mod(&self, p: u64) -> Vec<(usize, u64)> {
        let pb = BigInt::from(p);
        self.tail
            .iter()
            .map(|(j, c)| {
                let r = c.mod_floor(&pb);
                let r: u64 = r.abs().try_into().expect("residue fits in u64");
                (*j, r)
            })
            .collect()
    }
}

type FieldCache = Mutex<HashMap<u64, Arc<Field>>>;

fn cache() -> &'static FieldCache {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized field data for level `n`.
pub(crate) fn field(n: u64) -> Arc<Field> {
    if let Some(f) = cache().lock().expect("field cache poisoned").get(&n) {
        return f.clone();
    }
    // Built outside the lock: construction recurses into smaller levels.
    let built = Arc::new(Field::new(n));
    cache()
        .lock()
        .expect("field cache poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::gcd;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn totient_small_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(9), 6);
        let brute = (1..=12u64).filter(|&k| gcd(k, 12) == 1).count() as u64;
        assert_eq!(brute, 4);
        assert_eq!(totient(12), brute);
        for n in 1..200u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(totient(n), brute, "n = {n}");
        }
    }

    #[test]
    fn divisors_are_sorted() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1).coeffs(), ints(&[-1, 1]).as_slice());
        assert_eq!(cyclotomic_poly(2).coeffs(), ints(&[1, 1]).as_slice());
        assert_eq!(cyclotomic_poly(3).coeffs(), ints(&[1, 1, 1]).as_slice());
        assert_eq!(cyclotomic_poly(4).coeffs(), ints(&[1, 0, 1]).as_slice());
        assert_eq!(cyclotomic_poly(6).coeffs(), ints(&[1, -1, 1]).as_slice());
        assert_eq!(
            cyclotomic_poly(12).coeffs(),
            ints(&[1, 0, -1, 0, 1]).as_slice()
        );
        assert_eq!(
            cyclotomic_poly(9).coeffs(),
            ints(&[1, 0, 0, 1, 0, 0, 1]).as_slice()
        );
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_poly(105);
        assert_eq!(p.degree(), 48);
        assert!(p.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn product_over_divisors_is_x_pow_n_minus_one() {
        for n in 1..=40u64 {
            let mut prod = ints(&[1]);
            for d in divisors(n) {
                let f = cyclotomic_poly(d);
                let mut out = vec![BigInt::zero(); prod.len() + f.degree()];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in f.coeffs().iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                prod = out;
            }
            let mut expected = vec![BigInt::zero(); n as usize + 1];
            expected[0] = BigInt::from(-1);
            expected[n as usize] = BigInt::one();
            assert_eq!(prod, expected, "n = {n}");
        }
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=100 {
            assert_eq!(cyclotomic_poly(n).degree() as u64, totient(n));
        }
    }
}
