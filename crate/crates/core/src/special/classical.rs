//! Stirling, Bell and Eulerian numbers read off the coefficients `c^n_λ`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{partitions_of, IntPoly, NormalPolynomial, Partition};
use crate::universal::Recurrence;

/// Signless Stirling number of the first kind `c(n, k) = Σ_{λ ⊢ n-k} c^n_λ`.
/// Zero outside `1 <= k <= n`, except `c(0, 0) = 1`.
pub fn stirling_first(n: u32, k: u32) -> BigInt {
    stirling_first_with(&mut Recurrence::new(), n, k)
}

pub fn stirling_first_with(rec: &mut Recurrence, n: u32, k: u32) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::from((n == 0 && k == 0) as u8);
    }
    partitions_of(n - k).iter().map(|l| rec.coeff(n, l)).sum()
}

/// `S{n, k} = c^n_{(1^{n-k})}`. Zero outside `1 <= k <= n`, except `S{0, 0} = 1`.
pub fn stirling_second(n: u32, k: u32) -> BigInt {
    stirling_second_with(&mut Recurrence::new(), n, k)
}

pub fn stirling_second_with(rec: &mut Recurrence, n: u32, k: u32) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::from((n == 0 && k == 0) as u8);
    }
    rec.coeff(n, &Partition::ones(n - k))
}

/// `B_n = Σ_k S{n, k}`.
pub fn bell(n: u32) -> BigInt {
    let mut rec = Recurrence::new();
    (0..=n).map(|k| stirling_second_with(&mut rec, n, k)).sum()
}

/// `S{n, k} = Σ_{1 <= a_1 < ... < a_{n-k} <= n-1} Π_s (a_s - (s - 1))`.
pub fn stirling_second_positional(n: u32, k: u32) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::from((n == 0 && k == 0) as u8);
    }
    // ways[s] accumulates over subsets of {1..a} of size s.
    let picks = (n - k) as usize;
    let mut ways = vec![BigInt::zero(); picks + 1];
    ways[0] = BigInt::one();
    for a in 1..n {
        for s in (1..=picks.min(a as usize)).rev() {
            let add = &ways[s - 1] * (a as i64 - (s as i64 - 1));
            ways[s] += add;
        }
    }
    ways.swap_remove(picks)
}

/// Eulerian number `A(n, k) = Σ_{ℓ(λ) = k-1} c^n_λ`, the number of permutations
/// of `[n]` with `k - 1` descents. Zero outside `1 <= k <= n`.
pub fn eulerian(n: u32, k: u32) -> BigInt {
    eulerian_with(&mut Recurrence::new(), n, k)
}

pub fn eulerian_with(rec: &mut Recurrence, n: u32, k: u32) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::zero();
    }
    rec.table(n)
        .entries()
        .filter(|(l, _, _)| l.len() == k - 1)
        .map(|(_, _, c)| c.clone())
        .sum()
}

/// `t (t+1) ... (t+n-1)` as a polynomial in `t`.
pub fn rising_factorial(n: u32) -> IntPoly {
    (0..n).fold(IntPoly::one(), |acc, i| {
        &acc * &IntPoly::from_i64s(&[i as i64, 1])
    })
}

/// Substitutes integers for the `y_i` and returns the result as a polynomial in `t`.
pub fn specialize<F: FnMut(u32) -> BigInt>(u: &NormalPolynomial, value: F) -> IntPoly {
    IntPoly::from_coeffs(u.specialize_y(value))
}
