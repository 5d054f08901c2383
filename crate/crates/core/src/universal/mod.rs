//! The universal polynomials `U_n`, `U_{n,d}`, `V_n` and their coefficients.

pub mod formulas;
pub mod polys;
pub mod table;

pub use formulas::{
    candidate_partitions, coeff_arrays, coeff_binomial, coeff_comtet, coeff_recurrence, Recurrence,
};
pub use polys::{u_poly, u_poly_d, u_umbral, v_poly};
pub use table::CoeffTable;
