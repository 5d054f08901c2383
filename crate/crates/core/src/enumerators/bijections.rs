//! Subdiagonal partial bijections `[n] × [d] -> [n] × [q]` and rook placements
//! on the matching staircase board.

use num_bigint::BigUint;
use num_traits::Zero;

use super::caps::Caps;
use crate::error::{Error, Result};

/// Brute-force count of partial bijections `g` with `g(i, a) = (j, b) ⇒ j < i`
/// and `#Dom(g) = nd - k`.
pub fn count_partial_bijections(n: u32, k: u32, q: u32, d: u32, caps: &Caps) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::OutOfRange("partial bijections need d >= 1".into()));
    }
    let Some(target) = (n * d).checked_sub(k) else {
        return Ok(BigUint::zero());
    };
    let bound: BigUint = (1..=n)
        .map(|i| num_traits::pow(BigUint::from(1 + (i - 1) * q), d as usize))
        .product();
    caps.check_items("partial bijections", &bound)?;

    let rows: Vec<u32> = (1..=n)
        .flat_map(|i| std::iter::repeat_n(i, d as usize))
        .collect();
    let mut used = vec![false; (n * q) as usize];
    let mut count = 0u64;
    place(&rows, q, 0, target, &mut used, &mut count);
    Ok(BigUint::from(count))
}

/// `S(n, k)_{q,d}` as a count of partial bijections. The count is symmetric in
/// `q` and `d`, so for `q < d` the roles are swapped to keep `k` in range.
pub fn gen_stirling_by_bijections(n: u32, k: u32, q: u32, d: u32, caps: &Caps) -> Result<BigUint> {
    if q >= d {
        count_partial_bijections(n, k, q, d, caps)
    } else {
        count_partial_bijections(n, k, d, q, caps)
    }
}

/// Rows are source elements `(i, a)`, labelled by `i`; columns `(j, b)` are
/// encoded as `(j - 1) q + (b - 1)`.
fn place(rows: &[u32], q: u32, row: usize, left: u32, used: &mut [bool], count: &mut u64) {
    if left as usize > rows.len() - row {
        return;
    }
    if row == rows.len() {
        *count += 1;
        return;
    }
    place(rows, q, row + 1, left, used, count);
    if left == 0 {
        return;
    }
    for col in 0..((rows[row] - 1) * q) as usize {
        if !used[col] {
            used[col] = true;
            place(rows, q, row + 1, left - 1, used, count);
            used[col] = false;
        }
    }
}

/// Row lengths `0, q, 2q, ..., (n - 1)q`, each repeated `d` times: row `(i, a)`
/// may use the `(i - 1)q` columns `(j, b)` with `j < i`.
pub fn staircase_board(n: u32, q: u32, d: u32) -> Vec<u32> {
    (0..n)
        .flat_map(|i| std::iter::repeat_n(i * q, d as usize))
        .collect()
}

/// Non-attacking placements of `rooks` rooks on a Ferrers board given by row
/// lengths (any order; every row is a prefix of the same column sequence).
pub fn count_rook_placements(rows: &[u32], rooks: u32) -> BigUint {
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    let r = rooks as usize;
    let mut ways = vec![BigUint::zero(); r + 1];
    ways[0] = BigUint::from(1u32);
    for &len in &sorted {
        for placed in (0..r).rev() {
            if len as usize > placed && !ways[placed].is_zero() {
                let add = &ways[placed] * (len as usize - placed);
                ways[placed + 1] += add;
            }
        }
    }
    ways.swap_remove(r)
}
