//! Exact arithmetic in cyclotomic fields ℚ[ζ_n].
//!
//! Elements are kept in the power basis 1, ζ_n, …, ζ_n^{φ(n)−1}, which is also
//! an integral basis of ℤ[ζ_n]; membership in ℤ[ζ_n] is therefore a literal
//! check that every coefficient is an integer. Levels are never changed
//! implicitly: use [`CycloNum::embed`] to move up and [`CycloNum::descend`]
//! to move down.

mod linsolve;
mod number;
mod poly;

pub use number::{in_ring_of_integers, parse_fraction, CycloNum};
pub(crate) use poly::field;
pub use poly::{cyclotomic_poly, divisors, lcm, totient, CycloPoly};
