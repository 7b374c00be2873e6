//! Coins, shifts, the evolution operator U_N and its Fourier blocks.
//!
//! Chirality order inside each vertex is (←, •, →). The exact operators live
//! at level lcm(N, coin level); state evolution runs in floating point.

mod coin;
mod operator;
mod spectrum;
mod state;

pub use coin::{
    fourier_coin, fourier_matrix, grover_coin, grover_matrix, sqrt_integer, CoinFile, CoinMatrix,
};
pub use operator::{build_block, build_blocks, build_full, ShiftType, WalkSpec, DEFAULT_LEVEL_CAP};
pub use spectrum::{
    angle_fraction, companion_roots, dense_eigenvalues, multiset_distance, spectrum_numeric,
    suggest_rational, unitary_eigenvalues,
};
pub use state::{
    evolve, fourier_transform, inverse_fourier_transform, write_probability_csv, WalkState,
};
