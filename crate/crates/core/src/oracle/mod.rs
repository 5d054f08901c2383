//! A brute-force formal differential operator ring `A[z; ∂]`, used to check
//! the universal polynomials against direct normal ordering.

mod ah;
mod ring;
mod skew;

pub use ah::{ah_transitions, mat_mul, AhTransitions};
pub use ring::DifferentialRing;
pub use skew::{
    apply, eval_u, gen_stirling_from_operator, power_h_zd, skew_mul, table_from_y_oracle,
    SkewPolynomial,
};
