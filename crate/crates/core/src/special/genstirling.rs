//! Generalized Stirling numbers `S(n, k)_{q,d}`, the normal-ordering
//! coefficients of `(x^q ∂^d)^n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::numbers::{factorial, falling_factorial};
use crate::algebra::partitions_bounded;
use crate::error::{Error, Result};
use crate::universal::{coeff_binomial, formulas::visit_arrays};

/// `Σ_{λ ⊢ nd-k, ℓ(λ) <= n-1} c^{n,d}_λ Π_i (q)_{λ_i}`. Valid for `q >= d` only.
pub fn gen_stirling_partition_sum(n: u32, k: u32, q: u32, d: u32) -> Result<BigInt> {
    check_args(d)?;
    if q < d {
        return Err(Error::OutOfRange(format!(
            "the partition-sum formula needs q >= d (got q = {q}, d = {d})"
        )));
    }
    if n == 0 {
        return Ok(BigInt::from((k == 0) as u8));
    }
    let Some(size) = (n * d).checked_sub(k) else {
        return Ok(BigInt::zero());
    };
    Ok(partitions_bounded(size, n - 1)
        .iter()
        .map(|l| {
            l.parts().iter().fold(coeff_binomial(n, d, l), |acc, &p| {
                acc * falling_factorial(q as i64, p)
            })
        })
        .sum())
}

/// `Σ_a Π_i (d)_{r_i(a)} Π_j (q)_{c_j(a)} / Π a_{i,j}!` over lower-triangular
/// arrays with entry total `n·min(q, d) - k`. Symmetric in `q` and `d`.
pub fn gen_stirling_arrays(n: u32, k: u32, q: u32, d: u32) -> Result<BigInt> {
    check_args(d)?;
    if n == 0 {
        return Ok(BigInt::from((k == 0) as u8));
    }
    // For q < d the normal form carries an extra ∂^{(d-q)n}, which shifts the total.
    let Some(total) = (n * q.min(d)).checked_sub(k) else {
        return Ok(BigInt::zero());
    };
    let mut sum = BigRational::zero();
    visit_arrays(n, total, d, q, |entries, rows, cols| {
        let num = rows
            .iter()
            .map(|&r| falling_factorial(d as i64, r))
            .chain(cols.iter().map(|&c| falling_factorial(q as i64, c)))
            .fold(BigInt::one(), |acc, f| acc * f);
        let den = entries
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * factorial(a));
        sum += BigRational::new(num, den);
    });
    if !sum.is_integer() {
        return Err(Error::NonIntegral {
            formula: "symmetric array formula",
            value: sum.to_string(),
        });
    }
    Ok(sum.to_integer())
}

/// `S(n, k)_{q,d}`: the partition-sum formula when `q >= d`, the symmetric
/// array formula otherwise.
pub fn gen_stirling(n: u32, k: u32, q: u32, d: u32) -> Result<BigInt> {
    if q >= d {
        gen_stirling_partition_sum(n, k, q, d)
    } else {
        gen_stirling_arrays(n, k, q, d)
    }
}

/// The `k` range on which `S(n, k)_{q,d}` can be nonzero.
pub fn gen_stirling_k_range(n: u32, q: u32, d: u32) -> std::ops::RangeInclusive<u32> {
    let top = n * q.min(d);
    if n == 0 {
        0..=0
    } else {
        q.min(d)..=top
    }
}

fn check_args(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::OutOfRange(
            "generalized Stirling numbers need d >= 1".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::classical::stirling_second;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn reduces_to_stirling() {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(gen_stirling(n, k, 1, 1).unwrap(), stirling_second(n, k));
                assert_eq!(
                    gen_stirling_arrays(n, k, 1, 1).unwrap(),
                    stirling_second(n, k)
                );
            }
        }
    }

    #[test]
    fn small_hand_values() {
        assert_eq!(gen_stirling(2, 1, 2, 1).unwrap(), big(2));
        assert_eq!(gen_stirling(2, 2, 2, 1).unwrap(), big(1));
        // (x ∂²)² = (x² ∂² + 2x ∂) ∂²
        assert_eq!(gen_stirling(2, 1, 1, 2).unwrap(), big(2));
        assert_eq!(gen_stirling(2, 2, 1, 2).unwrap(), big(1));
        assert!(gen_stirling_partition_sum(2, 1, 1, 2).is_err());
        assert!(gen_stirling(2, 1, 1, 0).is_err());
        assert_eq!(gen_stirling(3, 0, 0, 2).unwrap(), big(1));
        assert_eq!(gen_stirling(3, 1, 0, 2).unwrap(), big(0));
    }

    #[test]
    fn paths_agree_and_symmetry() {
        for n in 1..=4 {
            for d in 1..=3 {
                for q in d..=4 {
                    for k in 0..=n * d + 1 {
                        let a = gen_stirling_partition_sum(n, k, q, d).unwrap();
                        assert_eq!(
                            gen_stirling_arrays(n, k, q, d).unwrap(),
                            a,
                            "{n} {k} {q} {d}"
                        );
                        assert_eq!(gen_stirling_arrays(n, k, d, q).unwrap(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn k_range() {
        assert_eq!(gen_stirling_k_range(3, 2, 1), 1..=3);
        assert_eq!(gen_stirling_k_range(3, 1, 2), 1..=3);
        assert_eq!(gen_stirling_k_range(2, 3, 3), 3..=6);
    }
}
