use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::linsolve::solve_full_pivot;
use super::poly::{divisors, field, Field};
use crate::error::{Error, Result};

/// An element of the cyclotomic field ℚ[ζ_n].
///
/// Stored in the power basis ζ_n^0..ζ_n^{φ(n)−1} as an integer numerator
/// vector over one positive common denominator. The representation is
/// canonical (reduced mod Φ_n, lowest terms), so `==` is field equality.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    fn from_parts(field: Arc<Field>, num: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.phi);
        let mut x = CycloNum { field, num, den };
        x.normalize();
        x
    }

    /// Builds from an integer polynomial of any length over `den`, reducing
    /// mod Φ_level.
    fn from_int_poly(field: Arc<Field>, mut poly: Vec<BigInt>, den: BigInt) -> Self {
        field.reduce(&mut poly);
        Self::from_parts(field, poly, den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero(level: u64) -> Self {
        let f = field(level);
        let phi = f.phi;
        CycloNum {
            field: f,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(level: u64) -> Self {
        Self::from_integer(level, 1)
    }

    pub fn from_integer(level: u64, value: i64) -> Self {
        Self::from_bigint(level, BigInt::from(value))
    }

    pub fn from_bigint(level: u64, value: BigInt) -> Self {
        let mut x = Self::zero(level);
        x.num[0] = value;
        x
    }

    pub fn from_rational(level: u64, value: &BigRational) -> Self {
        let f = field(level);
        let mut num = vec![BigInt::zero(); f.phi];
        num[0] = value.numer().clone();
        Self::from_parts(f, num, value.denom().clone())
    }

    /// Shorthand for the rational `p/q` at `level`.
    pub fn ratio(level: u64, p: i64, q: i64) -> Self {
        Self::from_rational(level, &BigRational::new(p.into(), q.into()))
    }

    /// Builds from exactly φ(level) power-basis coefficients.
    pub fn from_coeffs(level: u64, coeffs: &[BigRational]) -> Result<Self> {
        let f = field(level);
        if coeffs.len() != f.phi {
            return Err(Error::CoefficientCount {
                level,
                expected: f.phi,
                found: coeffs.len(),
            });
        }
        Ok(Self::from_poly(level, coeffs))
    }

    /// Builds Σ coeffs[j]·ζ_level^j for a coefficient list of any length,
    /// reducing powers ≥ φ(level) mod Φ_level.
    pub fn from_poly(level: u64, coeffs: &[BigRational]) -> Self {
        let f = field(level);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let poly = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_int_poly(f, poly, den)
    }

    /// Integer convenience form of [`CycloNum::from_poly`].
    pub fn from_int_coeffs(level: u64, coeffs: &[i64]) -> Self {
        let poly = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_int_poly(field(level), poly, BigInt::one())
    }

    /// ζ_n^power, for any integer power.
    pub fn zeta(n: u64, power: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let e = power.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        Self::from_int_poly(field(n), poly, BigInt::one())
    }

    pub fn level(&self) -> u64 {
        self.field.level
    }

    /// φ(level), the length of the coefficient vector.
    pub fn dimension(&self) -> usize {
        self.field.phi
    }

    pub fn coeff(&self, j: usize) -> BigRational {
        BigRational::new(self.num[j].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|j| self.coeff(j)).collect()
    }

    /// Numerators over the common denominator.
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// All power-basis coefficients are integers.
    pub fn has_integer_coeffs(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level() == other.level() {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                left: self.level(),
                right: other.level(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let poly = raw_product(&self.num, &other.num);
        Ok(Self::from_int_poly(
            self.field.clone(),
            poly,
            &self.den * &other.den,
        ))
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let den = self.den.lcm(&other.den);
            let sa = &den / &self.den;
            let sb = &den / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    if subtract {
                        a * &sa - b * &sb
                    } else {
                        a * &sa + b * &sb
                    }
                })
                .collect();
            (num, den)
        };
        Self::from_parts(self.field.clone(), num, den)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.level());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Σ aᵢ·bᵢ with a single reduction mod Φ_n at the end.
    ///
    /// Panics if any operand is not at `level`.
    pub fn sum_of_products<'a, I>(level: u64, pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a CycloNum, &'a CycloNum)>,
    {
        let f = field(level);
        let width = (2 * f.phi).saturating_sub(1).max(1);
        let mut acc = vec![BigInt::zero(); width];
        let mut acc_den = BigInt::one();
        let mut any = false;
        for (a, b) in pairs {
            assert!(
                a.level() == level && b.level() == level,
                "sum_of_products operands must be at level {level}"
            );
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let mut p = raw_product(&a.num, &b.num);
            let d = &a.den * &b.den;
            if !any {
                acc_den = d;
                for (x, y) in acc.iter_mut().zip(p) {
                    *x = y;
                }
                any = true;
                continue;
            }
            if d != acc_den {
                let l = acc_den.lcm(&d);
                let sa = &l / &acc_den;
                if !sa.is_one() {
                    acc.iter_mut().for_each(|x| *x *= &sa);
                }
                let sp = &l / &d;
                if !sp.is_one() {
                    p.iter_mut().for_each(|x| *x *= &sp);
                }
                acc_den = l;
            }
            for (x, y) in acc.iter_mut().zip(p) {
                *x += y;
            }
        }
        Self::from_int_poly(f, acc, acc_den)
    }

    /// The automorphism ζ_n ↦ ζ_n^a (requires gcd(a, n) = 1).
    pub fn galois(&self, a: u64) -> Self {
        let n = self.level();
        let a = a % n;
        assert!(
            n == 1 || a.gcd(&n) == 1,
            "galois exponent {a} is not a unit mod {n}"
        );
        let mut poly = vec![BigInt::zero(); n as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                poly[(j as u64 * a % n) as usize] += c;
            }
        }
        Self::from_int_poly(self.field.clone(), poly, self.den.clone())
    }

    /// Complex conjugation, ζ_n ↦ ζ_n^{n−1}.
    pub fn conj(&self) -> Self {
        let n = self.level();
        if n <= 2 {
            return self.clone();
        }
        self.galois(n - 1)
    }

    /// The same element written at level `target` via ζ_n = ζ_target^{target/n}.
    pub fn embed(&self, target: u64) -> Result<Self> {
        let n = self.level();
        if target == 0 || !target.is_multiple_of(n) {
            return Err(Error::NotAMultiple { level: n, target });
        }
        if target == n {
            return Ok(self.clone());
        }
        let step = (target / n) as usize;
        let mut poly = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        Ok(Self::from_int_poly(field(target), poly, self.den.clone()))
    }

    /// Decides whether this element lies in ℚ[ζ_n] (n must divide the level),
    /// returning its level-n representation if so.
    pub fn descend(&self, n: u64) -> Result<Option<Self>> {
        let l = self.level();
        if n == 0 || !l.is_multiple_of(n) {
            return Err(Error::NotAMultiple {
                level: n,
                target: l,
            });
        }
        if n == l {
            return Ok(Some(self.clone()));
        }
        let sub = field(n);
        let phi_l = self.field.phi;
        let basis: Vec<CycloNum> = (0..sub.phi as i64)
            .map(|j| CycloNum::zeta(n, j).embed(l).expect("n divides the level"))
            .collect();
        let a: Vec<Vec<BigRational>> = (0..phi_l)
            .map(|r| {
                basis
                    .iter()
                    .map(|col| BigRational::from_integer(col.num[r].clone()))
                    .collect()
            })
            .collect();
        let b: Vec<BigRational> = self.coeffs();
        let solution = solve_full_pivot(a, b);
        debug_assert_eq!(
            solution.is_some(),
            self.fixed_by_subgroup(n),
            "linear-algebra descent disagrees with the Galois fixed-point test"
        );
        Ok(solution.map(|y| Self::from_poly(n, &y)))
    }

    /// x is fixed by every ζ_L ↦ ζ_L^a with a ≡ 1 (mod n), gcd(a, L) = 1.
    pub fn fixed_by_subgroup(&self, n: u64) -> bool {
        let l = self.level();
        (1..=l)
            .filter(|&a| a % n == 1 % n && a.gcd(&l) == 1)
            .all(|a| self.galois(a) == *self)
    }

    /// Smallest level d with `multiple_of | d | level` such that the element
    /// lies in ℚ[ζ_d], together with its representation there.
    pub fn minimal_level(&self, multiple_of: u64) -> Result<(u64, Self)> {
        let l = self.level();
        if multiple_of == 0 || !l.is_multiple_of(multiple_of) {
            return Err(Error::NotAMultiple {
                level: multiple_of,
                target: l,
            });
        }
        for d in divisors(l) {
            if d % multiple_of != 0 {
                continue;
            }
            if let Some(y) = self.descend(d)? {
                return Ok((d, y));
            }
        }
        unreachable!("an element always lies in its own field")
    }

    /// Complex embedding ζ_n ↦ e^{2πi/n}.
    pub fn eval(&self) -> Complex64 {
        let n = self.level() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = BigRational::new(c.clone(), self.den.clone())
                .to_f64()
                .unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
            acc += Complex64::from_polar(v, theta);
        }
        acc
    }
}

fn raw_product(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Whether `denominator · x` lies in ℤ[ζ_n].
///
/// The operands are first brought to level lcm(x.level, n); if x is not in
/// ℚ[ζ_n] the answer is `false`.
pub fn in_ring_of_integers(x: &CycloNum, n: u64, denominator: u64) -> bool {
    assert!(n >= 1 && denominator >= 1);
    let l = x.level().lcm(&n);
    let scaled = x
        .embed(l)
        .expect("lcm is a multiple")
        .scale(&BigRational::from_integer(denominator.into()));
    match scaled.descend(n).expect("n divides the lcm") {
        Some(y) => y.has_integer_coeffs(),
        None => false,
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.level() == other.level() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloNum {}

impl Hash for CycloNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.level().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum[{}]({})", self.level(), self)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z{}^{}", self.level(), j)?,
                _ => write!(f, "{mag}*z{}^{}", self.level(), j)?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycloNumRepr {
    level: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycloNumRepr {
            level: self.level(),
            coeffs: self.coeffs().iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CycloNumRepr::deserialize(deserializer)?;
        if repr.level == 0 {
            return Err(D::Error::custom("level must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_fraction(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        CycloNum::from_coeffs(repr.level, &coeffs).map_err(D::Error::custom)
    }
}

/// Parses `"p/q"` or `"p"` with integer p, q (q ≠ 0).
pub fn parse_fraction(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a fraction: {s:?}"));
    if t.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(level: u64, c: &[i64]) -> CycloNum {
        CycloNum::from_int_coeffs(level, c)
    }

    #[test]
    fn zeta_is_canonical() {
        assert_eq!(
            CycloNum::zeta(5, 0).coeffs(),
            vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]
        );
        assert_eq!(CycloNum::zeta(4, 2), ints(4, &[-1, 0]));
        assert_eq!(CycloNum::zeta(3, 2), ints(3, &[-1, -1]));
        assert_eq!(CycloNum::zeta(7, -1), CycloNum::zeta(7, 6));
        assert_eq!(CycloNum::zeta(1, 5), CycloNum::one(1));
    }

    #[test]
    fn ring_examples() {
        let z3 = CycloNum::zeta(3, 1);
        assert!((&z3 * &CycloNum::zeta(3, 2)).is_one());
        let z4 = CycloNum::zeta(4, 1);
        let one = CycloNum::one(4);
        assert_eq!((&one + &z4) * (&one - &z4), CycloNum::from_integer(4, 2));
        let x = ints(7, &[3, -1, 0, 5, 2, 9]).scale(&q(1, 6));
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let err = CycloNum::zeta(3, 1)
            .try_add(&CycloNum::zeta(4, 1))
            .unwrap_err();
        assert_eq!(err, Error::LevelMismatch { left: 3, right: 4 });
        assert!(CycloNum::zeta(3, 1).try_mul(&CycloNum::zeta(6, 1)).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(CycloNum::zeta(4, 1).conj(), -CycloNum::zeta(4, 1));
        let r = CycloNum::ratio(9, -7, 5);
        assert_eq!(r.conj(), r);
        let x = ints(15, &[1, 2, 0, -3, 4, 0, 0, 1]);
        assert_eq!(x.conj().conj(), x);
        let im = (&x * &x.conj()).eval().im;
        assert!(im.abs() < 1e-10);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(CycloNum::zeta(3, 1).embed(6).unwrap(), CycloNum::zeta(6, 2));
        assert_eq!(
            CycloNum::from_integer(1, 5).embed(12).unwrap(),
            CycloNum::from_integer(12, 5)
        );
        assert_eq!(
            CycloNum::zeta(2, 1).embed(4).unwrap(),
            CycloNum::from_integer(4, -1)
        );
        assert_eq!(
            CycloNum::zeta(4, 1).embed(6).unwrap_err(),
            Error::NotAMultiple {
                level: 4,
                target: 6
            }
        );
    }

    #[test]
    fn descend_examples() {
        let z3_at_12 = CycloNum::zeta(3, 1).embed(12).unwrap();
        assert_eq!(z3_at_12.descend(3).unwrap(), Some(CycloNum::zeta(3, 1)));
        assert_eq!(CycloNum::zeta(12, 1).descend(3).unwrap(), None);
        // ζ_12 + ζ_12^{-1} = √3 is real but irrational
        let sqrt3 = CycloNum::zeta(12, 1) + CycloNum::zeta(12, 11);
        assert!((sqrt3.eval().re - 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(sqrt3.descend(1).unwrap(), None);
        let three = (&sqrt3 * &sqrt3).descend(1).unwrap();
        assert_eq!(three, Some(CycloNum::from_integer(1, 3)));
        assert!(CycloNum::zeta(12, 1).descend(5).is_err());
    }

    #[test]
    fn galois_map_moves_zeta12() {
        let z = CycloNum::zeta(12, 1);
        assert_ne!(z.galois(7), z);
        assert!(!z.fixed_by_subgroup(3));
        assert!(CycloNum::zeta(12, 4).fixed_by_subgroup(3));
    }

    #[test]
    fn integrality_examples() {
        let x = ints(6, &[-1, -4, -1]).scale(&q(1, 3));
        assert_eq!(ints(6, &[-1, -4, -1]), ints(6, &[0, -5]));
        assert!(!in_ring_of_integers(&x, 6, 1));
        let y = CycloNum::ratio(2, 2, 3);
        assert!(!in_ring_of_integers(&y, 2, 1));
        assert!(in_ring_of_integers(&y, 2, 3));
        let z = ints(5, &[7, 2]);
        assert!(in_ring_of_integers(&z, 5, 1));
        // √3 ∉ ℚ[ζ_3]
        let sqrt3 = CycloNum::zeta(12, 1) + CycloNum::zeta(12, 11);
        assert!(!in_ring_of_integers(&sqrt3, 3, 1));
        assert!(in_ring_of_integers(&sqrt3, 12, 1));
        // level-lower element tested in a bigger ring
        assert!(in_ring_of_integers(&CycloNum::zeta(3, 1), 12, 1));
    }

    #[test]
    fn minimal_level_respects_required_multiple() {
        let x = CycloNum::zeta(3, 1).embed(12).unwrap();
        assert_eq!(x.minimal_level(1).unwrap().0, 3);
        assert_eq!(x.minimal_level(2).unwrap().0, 6);
        assert_eq!(x.minimal_level(4).unwrap().0, 12);
    }

    #[test]
    fn json_round_trip_and_format() {
        let x = ints(5, &[1, 0, -2, 0]).scale(&q(3, 4));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"level":5,"coeffs":["3/4","0","-3/2","0"]}"#);
        let back: CycloNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<CycloNum>(r#"{"level":5,"coeffs":["1"]}"#).is_err());
        assert!(serde_json::from_str::<CycloNum>(r#"{"level":2,"coeffs":["0.5"]}"#).is_err());
        assert!(serde_json::from_str::<CycloNum>(r#"{"level":2,"coeffs":["1/0"]}"#).is_err());
    }

    #[test]
    fn sum_of_products_matches_naive() {
        let a = [ints(9, &[1, 2, 3]).scale(&q(1, 3)), CycloNum::zeta(9, 4)];
        let b = [
            ints(9, &[0, 0, 0, 0, 0, 1]).scale(&q(5, 2)),
            ints(9, &[-1, 1]),
        ];
        let fast = CycloNum::sum_of_products(9, a.iter().zip(&b));
        let slow = &a[0] * &b[0] + &a[1] * &b[1];
        assert_eq!(fast, slow);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(ints(6, &[0, -5]).to_string(), "-5*z6^1");
        assert_eq!(CycloNum::ratio(1, 2, 3).to_string(), "2/3");
        assert_eq!(ints(9, &[1, 1, 0, -1]).to_string(), "1 + z9^1 - z9^3");
    }
}
