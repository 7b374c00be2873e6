use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::coin::CoinMatrix;
use crate::cyclo::{lcm, CycloNum};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Default bound on the cyclotomic level of any walk computation.
pub const DEFAULT_LEVEL_CAP: u64 = 30_000;

/// How the coined state is routed between neighbouring vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ShiftType {
    /// P = |←⟩⟨←|C, R = |•⟩⟨•|C, Q = |→⟩⟨→|C.
    #[default]
    Moving,
    /// P = |←⟩⟨→|C, R = |•⟩⟨•|C, Q = |→⟩⟨←|C.
    FlipFlop,
}

impl fmt::Display for ShiftType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShiftType::Moving => "moving",
            ShiftType::FlipFlop => "flip-flop",
        })
    }
}

impl FromStr for ShiftType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moving" => Ok(ShiftType::Moving),
            "flip-flop" | "flipflop" => Ok(ShiftType::FlipFlop),
            other => Err(Error::Parse(format!("unknown shift type {other:?}"))),
        }
    }
}

/// A 3-state walk on the cycle C_N.
#[derive(Clone, Debug)]
pub struct WalkSpec {
    n: usize,
    coin: CoinMatrix,
    shift: ShiftType,
    level_cap: u64,
}

impl WalkSpec {
    pub fn new(n: usize, coin: CoinMatrix, shift: ShiftType) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "cycle size must be at least 2, got {n}"
            )));
        }
        Ok(WalkSpec {
            n,
            coin,
            shift,
            level_cap: DEFAULT_LEVEL_CAP,
        })
    }

    pub fn with_level_cap(mut self, cap: u64) -> Self {
        self.level_cap = cap;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coin(&self) -> &CoinMatrix {
        &self.coin
    }

    pub fn shift(&self) -> ShiftType {
        self.shift
    }

    pub fn level_cap(&self) -> u64 {
        self.level_cap
    }

    /// lcm(N, coin level): the field holding U_N and every Û(k).
    pub fn level(&self) -> Result<u64> {
        let level = lcm(self.n as u64, self.coin.level());
        if level > self.level_cap {
            return Err(Error::LevelCapExceeded {
                level,
                cap: self.level_cap,
            });
        }
        Ok(level)
    }

    /// The coin after the shift's chirality routing: C itself for the moving
    /// shift, C with rows ← and → exchanged for flip-flop.
    pub fn routed_coin(&self) -> ExactMatrix {
        match self.shift {
            ShiftType::Moving => self.coin.matrix().clone(),
            ShiftType::FlipFlop => self.coin.swap_outer_rows(),
        }
    }

    /// ζ_N^k written at `level`.
    pub(crate) fn phase(&self, k: i64, level: u64) -> CycloNum {
        CycloNum::zeta(level, k * (level / self.n as u64) as i64)
    }
}

/// Û(k) = diag(ζ_N^k, 1, ζ_N^{−k})·C (C routed by the shift) for k = 0..N−1.
pub fn build_blocks(spec: &WalkSpec) -> Result<Vec<ExactMatrix>> {
    let level = spec.level()?;
    let coin = spec.routed_coin().embed(level)?;
    Ok((0..spec.n as i64)
        .map(|k| block_from(&coin, spec, k, level))
        .collect())
}

/// The single block Û(k).
pub fn build_block(spec: &WalkSpec, k: usize) -> Result<ExactMatrix> {
    let level = spec.level()?;
    let coin = spec.routed_coin().embed(level)?;
    Ok(block_from(&coin, spec, k as i64, level))
}

fn block_from(coin: &ExactMatrix, spec: &WalkSpec, k: i64, level: u64) -> ExactMatrix {
    let up = spec.phase(k, level);
    let down = spec.phase(-k, level);
    ExactMatrix::from_fn(3, level, |r, c| match r {
        0 => &up * coin.get(r, c),
        1 => coin.get(r, c).clone(),
        _ => &down * coin.get(r, c),
    })
}

/// The 3N×3N evolution operator U_N.
///
/// Vertex x's block row holds R on the diagonal, P at column x+1 and Q at
/// column x−1 (indices mod N). For N = 2 both neighbours coincide, giving
/// U_2 = [[R, P+Q], [P+Q, R]].
pub fn build_full(spec: &WalkSpec) -> Result<ExactMatrix> {
    let level = spec.level()?;
    let coin = spec.routed_coin().embed(level)?;
    let n = spec.n;
    let mut u = ExactMatrix::zeros(3 * n, level);
    for x in 0..n {
        let right = (x + 1) % n;
        let left = (x + n - 1) % n;
        for c in 0..3 {
            // P: row ← of the routed coin, pulled from vertex x+1
            add_entry(&mut u, 3 * x, 3 * right + c, coin.get(0, c));
            // R: row •, stays
            add_entry(&mut u, 3 * x + 1, 3 * x + c, coin.get(1, c));
            // Q: row →, pulled from vertex x−1
            add_entry(&mut u, 3 * x + 2, 3 * left + c, coin.get(2, c));
        }
    }
    Ok(u)
}

fn add_entry(m: &mut ExactMatrix, r: usize, c: usize, v: &CycloNum) {
    let sum = m.get(r, c) + v;
    m.set(r, c, sum);
}
