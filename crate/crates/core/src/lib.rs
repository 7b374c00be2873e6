//! Exact periodicity analysis for 3-state discrete-time quantum walks on
//! cycle graphs.
//!
//! * [`cyclo`]: arithmetic in cyclotomic fields with membership tests in ℤ[ζ_n].
//! * [`walk`]: coins, shift types, the evolution operator U_N and its Fourier
//!   blocks Û(k), plus floating-point state evolution.
//! * [`period`]: block orders, exact periods and trace non-integrality
//!   certificates for non-periodic walks.

pub mod cyclo;
pub mod error;
pub mod matrix;
pub mod period;
pub mod walk;

pub use cyclo::{in_ring_of_integers, totient, CycloNum, CycloPoly};
pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use period::{
    block_order, certify_infinite, char_poly_exact, check_coin_necessary, walk_period, BlockOrder,
    CharPoly, CoinConditionReport, PeriodResult, TraceCertificate, DEFAULT_T_MAX,
};
pub use walk::{
    build_blocks, build_full, evolve, fourier_coin, fourier_transform, grover_coin,
    inverse_fourier_transform, spectrum_numeric, CoinMatrix, ShiftType, WalkSpec, WalkState,
    DEFAULT_LEVEL_CAP,
};
