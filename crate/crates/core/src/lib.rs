//! Exact normal ordering of `(h ∂^d)^n` through the universal polynomials
//! `U_n`, `U_{n,d}` and `V_n`, their coefficient tables, the classical
//! sequences they specialize to, and a brute-force operator ring to check it all.

pub mod algebra;
pub mod enumerators;
pub mod error;
pub mod oracle;
pub mod special;
pub mod strategy;
pub mod universal;
pub mod verify;

pub use error::{Error, Result};
