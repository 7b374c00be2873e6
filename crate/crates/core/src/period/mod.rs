//! Periods of 3-state walks on C_N.
//!
//! U_N is unitarily equivalent to the direct sum of its Fourier blocks Û(k),
//! so U_N^T = I exactly when every block satisfies Û(k)^T = I. The period is
//! the lcm of the block orders, and a non-integral characteristic polynomial
//! coefficient of any block rules out every finite period.

mod certificate;
mod charpoly;
mod coin_check;
mod order;

use num_traits::ToPrimitive;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use certificate::{certify_block, certify_infinite, TraceCertificate, Witness};
pub use charpoly::{char_poly_exact, CharPoly};
pub use coin_check::{
    check_coin_necessary, check_coin_necessary_with_cap, check_walk_necessary, CoinConditionReport,
    CoinEntryCheck,
};
pub use order::{block_order, BlockOrder};

use crate::error::{Error, Result};
use crate::walk::{build_blocks, WalkSpec};

/// Default bound on the block-order search.
pub const DEFAULT_T_MAX: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PeriodResult {
    Finite(u64),
    CertifiedInfinite(TraceCertificate),
    UnknownUpTo(u64),
}

impl PeriodResult {
    pub fn kind(&self) -> &'static str {
        match self {
            PeriodResult::Finite(_) => "finite",
            PeriodResult::CertifiedInfinite(_) => "certified_infinite",
            PeriodResult::UnknownUpTo(_) => "unknown",
        }
    }
}

/// `{"result": ..., "T": ...}`, `{"result": ..., "certificate": ...}` or
/// `{"result": ..., "bound": ...}`.
impl Serialize for PeriodResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("result", self.kind())?;
        match self {
            PeriodResult::Finite(t) => map.serialize_entry("T", t)?,
            PeriodResult::CertifiedInfinite(c) => map.serialize_entry("certificate", c)?,
            PeriodResult::UnknownUpTo(b) => map.serialize_entry("bound", b)?,
        }
        map.end()
    }
}

/// block_order for every Û(k), k = 0..N−1.
pub fn block_orders(spec: &WalkSpec, t_max: u64) -> Result<Vec<BlockOrder>> {
    Ok(build_blocks(spec)?
        .iter()
        .map(|b| block_order(b, t_max))
        .collect())
}

/// Decides the period: a certificate first, then the lcm of the block orders.
pub fn walk_period(spec: &WalkSpec, t_max: u64) -> Result<PeriodResult> {
    Ok(walk_period_detailed(spec, t_max)?.0)
}

/// [`walk_period`] together with the order of every block. The orders are
/// empty when a certificate settles the question without a search.
pub fn walk_period_detailed(
    spec: &WalkSpec,
    t_max: u64,
) -> Result<(PeriodResult, Vec<BlockOrder>)> {
    if t_max == 0 {
        return Err(Error::InvalidArgument("t_max must be positive".into()));
    }
    if let Some(cert) = certify_infinite(spec)? {
        return Ok((PeriodResult::CertifiedInfinite(cert), Vec::new()));
    }
    let blocks = build_blocks(spec)?;
    let orders: Vec<BlockOrder> = blocks.iter().map(|b| block_order(b, t_max)).collect();
    let Some(finite) = orders
        .iter()
        .map(|o| o.finite())
        .collect::<Option<Vec<u64>>>()
    else {
        return Ok((PeriodResult::UnknownUpTo(t_max), orders));
    };
    let t = order::lcm_all(finite)
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("period does not fit in 64 bits".into()))?;

    assert!(
        blocks.iter().all(|b| b.pow(t).is_identity()),
        "lcm of block orders does not annihilate every block"
    );
    for q in prime_factors(t) {
        assert!(
            blocks.iter().any(|b| !b.pow(t / q).is_identity()),
            "period {t} is not minimal: {} also works",
            t / q
        );
    }
    Ok((PeriodResult::Finite(t), orders))
}

fn prime_factors(mut t: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= t {
        if t.is_multiple_of(p) {
            out.push(p);
            while t.is_multiple_of(p) {
                t /= p;
            }
        }
        p += 1;
    }
    if t > 1 {
        out.push(t);
    }
    out
}
