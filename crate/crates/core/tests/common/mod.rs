#![allow(dead_code)]

pub mod walks;

use cyclowalk::cyclo::{cyclotomic_poly, divisors, totient};
use cyclowalk::{in_ring_of_integers, CycloNum};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// A rational with a small numerator and denominator.
pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

/// Random element at `level`, given by up to `level` power coefficients
/// (so reduction mod Φ_level is exercised too).
pub fn element(level: u64) -> impl Strategy<Value = CycloNum> {
    prop::collection::vec(small_rational(), 1..=level as usize)
        .prop_map(move |c| CycloNum::from_poly(level, &c))
}

pub fn level_and_triple() -> impl Strategy<Value = (CycloNum, CycloNum, CycloNum)> {
    (1u64..=16).prop_flat_map(|n| (element(n), element(n), element(n)))
}

pub fn pair() -> impl Strategy<Value = (CycloNum, CycloNum)> {
    (1u64..=30).prop_flat_map(|n| (element(n), element(n)))
}

/// (x at level d, L) with d | L ≤ 48.
pub fn tower() -> impl Strategy<Value = (CycloNum, u64)> {
    (1u64..=48)
        .prop_flat_map(|l| (prop::sample::select(divisors(l)), Just(l)))
        .prop_flat_map(|(d, l)| (element(d), Just(l)))
}

/// Integer combination Σ a_j ζ_n^j with arbitrary exponents j.
pub fn integer_combination() -> impl Strategy<Value = (u64, CycloNum)> {
    (1u64..=40).prop_flat_map(|n| {
        prop::collection::vec((-50i64..=50, 0i64..200), 0..8).prop_map(move |terms| {
            let x = terms.iter().fold(CycloNum::zero(n), |acc, &(a, j)| {
                acc + CycloNum::zeta(n, j).scale_int(a)
            });
            (n, x)
        })
    })
}

pub fn ring_axioms(a: &CycloNum, b: &CycloNum, c: &CycloNum) -> Result<(), String> {
    let checks = [
        ("additive associativity", (a + b) + c == a + (b + c)),
        ("additive commutativity", a + b == b + a),
        ("multiplicative associativity", (a * b) * c == a * (b * c)),
        ("multiplicative commutativity", a * b == b * a),
        ("distributivity", a * (b + c) == a * b + a * c),
        (
            "additive inverse",
            (a - &a.clone()).is_zero() && (a + &(-a)).is_zero(),
        ),
        (
            "multiplicative identity",
            a * &CycloNum::one(a.level()) == *a,
        ),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} fails for {a}, {b}, {c}")),
        None => Ok(()),
    }
}

pub fn eval_homomorphism(x: &CycloNum, y: &CycloNum) -> Result<(), String> {
    let prod = ((x * y).eval() - x.eval() * y.eval()).norm();
    let sum = ((x + y).eval() - (x.eval() + y.eval())).norm();
    if prod < 1e-10 && sum < 1e-10 {
        Ok(())
    } else {
        Err(format!("eval drift {prod:e}/{sum:e} for {x}, {y}"))
    }
}

pub fn conjugation(x: &CycloNum, y: &CycloNum) -> Result<(), String> {
    let ok = x.conj().conj() == *x
        && (x * y).conj() == x.conj() * y.conj()
        && (x + y).conj() == x.conj() + y.conj()
        && (x * &x.conj()).eval().im.abs() < 1e-10;
    if ok {
        Ok(())
    } else {
        Err(format!("conjugation fails for {x}, {y}"))
    }
}

pub fn round_trip(x: &CycloNum, l: u64) -> Result<(), String> {
    let up = x.embed(l).map_err(|e| e.to_string())?;
    if (up.eval() - x.eval()).norm() > 1e-9 {
        return Err(format!("embedding {x} into level {l} moves its value"));
    }
    match up.descend(x.level()).map_err(|e| e.to_string())? {
        Some(back) if back == *x => Ok(()),
        other => Err(format!("descend(embed({x}, {l})) = {other:?}")),
    }
}

pub fn integer_combination_is_integral(n: u64, x: &CycloNum) -> Result<(), String> {
    if in_ring_of_integers(x, n, 1) && x.has_integer_coeffs() {
        Ok(())
    } else {
        Err(format!("{x} not recognised as an integer of level {n}"))
    }
}

/// ζ_n^n = 1 and Φ_n(ζ_n) = 0, evaluated in the field.
pub fn cyclotomic_identities(n: u64) -> Result<(), String> {
    let z = CycloNum::zeta(n, 1);
    if !z.pow(n).is_one() {
        return Err(format!("zeta_{n}^{n} != 1"));
    }
    let poly = cyclotomic_poly(n);
    if poly.degree() as u64 != totient(n) {
        return Err(format!("deg Phi_{n} != phi({n})"));
    }
    let value = poly
        .coeffs()
        .iter()
        .rev()
        .fold(CycloNum::zero(n), |acc, c| {
            &acc * &z + CycloNum::from_bigint(n, c.clone())
        });
    if value.is_zero() {
        Ok(())
    } else {
        Err(format!("Phi_{n}(zeta_{n}) = {value}"))
    }
}

/// Σ_{k<N} ζ_N^k = 0.
pub fn orthogonality(n: u64) -> bool {
    (0..n as i64)
        .map(|k| CycloNum::zeta(n, k))
        .fold(CycloNum::zero(n), |a, b| a + b)
        .is_zero()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
