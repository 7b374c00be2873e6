use serde::Serialize;

use crate::cyclo::{in_ring_of_integers, lcm, CycloNum};
use crate::error::{Error, Result};
use crate::walk::{CoinMatrix, WalkSpec, DEFAULT_LEVEL_CAP};

/// Membership of one diagonal coin entry in (1/denominator)·ℤ[ζ_ring_level].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoinEntryCheck {
    pub entry: String,
    pub value: CycloNum,
    pub ring_level: u64,
    pub denominator: u64,
    pub member: bool,
}

/// Necessary condition for U_N^T = I read off the diagonal of the coin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoinConditionReport {
    pub n: usize,
    pub t: u64,
    pub passes: bool,
    pub entries: Vec<CoinEntryCheck>,
}

/// Tests c₁₁, c₃₃ ∈ (1/N)ℤ[ζ_lcm(N,T)] and c₂₂ ∈ (1/N)ℤ[ζ_T]. A failing
/// report proves U_N^T ≠ I for this T.
pub fn check_coin_necessary(coin: &CoinMatrix, n: usize, t: u64) -> Result<CoinConditionReport> {
    check_coin_necessary_with_cap(coin, n, t, DEFAULT_LEVEL_CAP)
}

pub fn check_coin_necessary_with_cap(
    coin: &CoinMatrix,
    n: usize,
    t: u64,
    level_cap: u64,
) -> Result<CoinConditionReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "cycle size must be at least 2, got {n}"
        )));
    }
    if t == 0 {
        return Err(Error::InvalidArgument("T must be positive".into()));
    }
    let outer = lcm(n as u64, t);
    let checks = [("c11", 1, outer), ("c22", 2, t), ("c33", 3, outer)];
    let mut entries = Vec::with_capacity(3);
    for (name, i, ring_level) in checks {
        let value = coin.c(i, i).clone();
        let working = lcm(value.level(), ring_level);
        if working > level_cap {
            return Err(Error::LevelCapExceeded {
                level: working,
                cap: level_cap,
            });
        }
        entries.push(CoinEntryCheck {
            entry: name.to_string(),
            member: in_ring_of_integers(&value, ring_level, n as u64),
            value,
            ring_level,
            denominator: n as u64,
        });
    }
    Ok(CoinConditionReport {
        n,
        t,
        passes: entries.iter().all(|e| e.member),
        entries,
    })
}

/// The same test applied to the coin as routed by the walk's shift.
pub fn check_walk_necessary(spec: &WalkSpec, t: u64) -> Result<CoinConditionReport> {
    let routed = CoinMatrix::new(spec.routed_coin())?;
    check_coin_necessary_with_cap(&routed, spec.n(), t, spec.level_cap())
}
