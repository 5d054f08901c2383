//! Exact carriers: partitions, commutative and non-commutative polynomials in
//! the `y_i` and `t`, and dense integer polynomials.

pub mod intpoly;
pub mod nc;
pub mod normal;
pub mod numbers;
pub mod partition;

pub use intpoly::IntPoly;
pub use nc::{NCPolynomial, NCWord};
pub use normal::{NormalMonomial, NormalPolynomial};
pub use partition::{partitions_bounded, partitions_of, partitions_up_to, Partition};
