//! Number sequences hidden in the coefficients: Stirling, Bell, Eulerian and
//! generalized Stirling numbers, ODE and Faà di Bruno coefficients, and the
//! congruences modulo primes.

mod classical;
mod genstirling;
mod modp;
mod series;
mod triangle;

pub use classical::{
    bell, eulerian, eulerian_with, rising_factorial, specialize, stirling_first,
    stirling_first_with, stirling_second, stirling_second_positional, stirling_second_with,
};
pub use genstirling::{
    gen_stirling, gen_stirling_arrays, gen_stirling_k_range, gen_stirling_partition_sum,
};
pub use modp::{verify_modp, verify_modp_d, ModpReport, Violation};
pub use series::{
    eval_faa_di_bruno, faa_di_bruno, ode_coefficients, ode_residual, verify_faa_di_bruno,
};
pub use triangle::{IntegerTriangle, TriangleKind};
