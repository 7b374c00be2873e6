//! Trace non-integrality certificates.
//!
//! If U_N^T = I then every eigenvalue of every block Û(k) is a root of unity,
//! so each elementary symmetric function of any subset of them is an
//! algebraic integer. Such values lie in ℚ[ζ_L], hence in ℤ[ζ_L], which has the
//! power basis as an integral basis. A coefficient outside ℤ refutes
//! periodicity.
//!
//! The witnesses are the coefficients of the characteristic polynomial after
//! exact roots of unity have been divided out: w_1 is the trace of what is
//! left, w_2 the next coefficient and so on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::charpoly::{char_poly_exact, unit_group_order};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::walk::{build_block, WalkSpec};

/// One coefficient of the deflated characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// i such that the value is −(coefficient of λ^{d−i}).
    pub coefficient: usize,
    /// The value at the block level.
    pub value: CycloNum,
}

/// Evidence that block Û(k) has an eigenvalue that is not a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename = "trace_nonintegrality")]
pub struct TraceCertificate {
    pub k: usize,
    /// Smallest n with N | n | L such that the witness lies in ℚ[ζ_n].
    #[serde(rename = "level")]
    pub target_level: u64,
    /// L = lcm(N, coin level), where the blocks live.
    pub block_level: u64,
    /// tr Û(k) at the block level.
    pub trace: CycloNum,
    /// Roots of unity removed from the characteristic polynomial, exactly.
    pub deflated_roots: Vec<CycloNum>,
    pub witness: Witness,
    /// Common denominator of the witness at the target level.
    #[serde(with = "int_or_string")]
    pub scale: BigInt,
    /// j in reduced_form = scale · ζ_n^j · witness.
    pub unit_power: u64,
    pub reduced_form: CycloNum,
    /// Integer coefficients of `reduced_form`.
    #[serde(with = "int_or_string::vec")]
    pub scaled_coeffs: Vec<BigInt>,
    /// Indices of `scaled_coeffs` not divisible by `scale`.
    pub violations: Vec<usize>,
}

impl TraceCertificate {
    /// Self-consistency check using field arithmetic only.
    pub fn verify(&self) -> bool {
        let n = self.target_level;
        let w = match self.witness.value.descend(n) {
            Ok(Some(w)) => w,
            _ => return false,
        };
        if self.scale <= BigInt::one() || self.reduced_form.level() != n {
            return false;
        }
        let unit = CycloNum::zeta(n, self.unit_power as i64);
        let expected = (&unit * &w).scale(&self.scale.clone().into());
        if expected != self.reduced_form || !expected.has_integer_coeffs() {
            return false;
        }
        let coeffs: Vec<BigInt> = expected.coeffs().iter().map(|c| c.to_integer()).collect();
        if coeffs != self.scaled_coeffs {
            return false;
        }
        let bad: Vec<usize> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_multiple_of(&self.scale))
            .map(|(i, _)| i)
            .collect();
        !bad.is_empty()
            && bad == self.violations
            && !crate::cyclo::in_ring_of_integers(&self.witness.value, n, 1)
    }

    /// Recomputes the block from `spec` and checks that the witness really is
    /// the stated coefficient after removing the stated roots of unity.
    pub fn verify_for(&self, spec: &WalkSpec) -> Result<bool> {
        if self.k >= spec.n() || spec.level()? != self.block_level {
            return Ok(false);
        }
        let block = build_block(spec, self.k)?;
        if block.trace() != self.trace {
            return Ok(false);
        }
        let order = unit_group_order(self.block_level);
        let mut poly = char_poly_exact(&block);
        for r in &self.deflated_roots {
            if r.level() != self.block_level || !r.pow(order).is_one() {
                return Ok(false);
            }
            poly = match poly.deflate(r) {
                Some(q) => q,
                None => return Ok(false),
            };
        }
        let i = self.witness.coefficient;
        if i == 0 || i > poly.degree() || -&poly.coeffs()[i] != self.witness.value {
            return Ok(false);
        }
        Ok(self.verify())
    }
}

/// Searches the blocks k = 0, 1, … for a non-integral witness and returns the
/// certificate for the first block that has one.
pub fn certify_infinite(spec: &WalkSpec) -> Result<Option<TraceCertificate>> {
    for k in 0..spec.n() {
        if let Some(cert) = certify_block(spec, k)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// The certificate for a single block, if any witness is non-integral.
pub fn certify_block(spec: &WalkSpec, k: usize) -> Result<Option<TraceCertificate>> {
    if k >= spec.n() {
        return Err(Error::InvalidArgument(format!(
            "block index {k} out of range for N = {}",
            spec.n()
        )));
    }
    let level = spec.level()?;
    let block = build_block(spec, k)?;
    let full = char_poly_exact(&block);
    let (deflated, roots) = full.split_roots_of_unity();
    let n_walk = spec.n() as u64;

    // Both the deflated and the full polynomial give sound witnesses. Take the
    // one living in the smallest field; ties go to the deflated one, then to
    // the lowest coefficient.
    let mut stages = vec![(deflated, roots)];
    if !stages[0].1.is_empty() {
        stages.push((full, Vec::new()));
    }
    let mut best: Option<(u64, usize, usize, CycloNum, CycloNum)> = None;
    for (s, (poly, _)) in stages.iter().enumerate() {
        for i in 1..=poly.degree() {
            let w = -&poly.coeffs()[i];
            if w.has_integer_coeffs() {
                continue;
            }
            let (n, low) = w.minimal_level(n_walk)?;
            if best.as_ref().is_none_or(|b| n < b.0) {
                best = Some((n, s, i, w, low));
            }
        }
    }
    let Some((n, stage, i, w, low)) = best else {
        return Ok(None);
    };
    let roots = stages.swap_remove(stage).1;

    let scale = low.denominator().clone();
    let unit_power = if spec.coin().is_rational() {
        (k as u64 * (n / n_walk)) % n
    } else {
        0
    };
    let reduced_form = (&CycloNum::zeta(n, unit_power as i64) * &low).scale(&scale.clone().into());
    let scaled_coeffs: Vec<BigInt> = reduced_form
        .coeffs()
        .iter()
        .map(|c| c.to_integer())
        .collect();
    let violations = scaled_coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_multiple_of(&scale))
        .map(|(j, _)| j)
        .collect();
    let cert = TraceCertificate {
        k,
        target_level: n,
        block_level: level,
        trace: block.trace(),
        deflated_roots: roots,
        witness: Witness {
            coefficient: i,
            value: w,
        },
        scale,
        unit_power,
        reduced_form,
        scaled_coeffs,
        violations,
    };
    assert!(cert.verify(), "constructed certificate failed verification");
    Ok(Some(cert))
}

mod int_or_string {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    fn to_repr(x: &BigInt) -> Repr {
        match x.to_i64() {
            Some(v) => Repr::Int(v),
            None => Repr::Str(x.to_string()),
        }
    }

    fn from_repr<E: Error>(r: Repr) -> Result<BigInt, E> {
        match r {
            Repr::Int(v) => Ok(v.into()),
            Repr::Str(s) => s.parse().map_err(E::custom),
        }
    }

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_repr(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            xs.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(from_repr)
                .collect()
        }
    }
}
