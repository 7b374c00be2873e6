//! Shared inputs for the criterion benchmarks.

use cyclowalk::{fourier_coin, grover_coin, ShiftType, WalkSpec};

pub fn grover(n: usize) -> WalkSpec {
    WalkSpec::new(n, grover_coin(), ShiftType::Moving).expect("n >= 2")
}

pub fn fourier(n: usize) -> WalkSpec {
    WalkSpec::new(n, fourier_coin(), ShiftType::Moving).expect("n >= 2")
}
