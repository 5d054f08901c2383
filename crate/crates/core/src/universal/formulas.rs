//! Closed and recursive formulas for the coefficients `c^n_λ` and `c^{n,d}_λ`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::table::CoeffTable;
use crate::algebra::numbers::{binomial, factorial, falling_factorial};
use crate::algebra::Partition;
use crate::error::{Error, Result};

/// Memoized evaluation of the coefficient recurrence
/// `c^{n+1}_λ = c^n_λ + Σ_i (β_{i-1} + 1) c^n_{λ_i}`, where `λ_i` lowers one
/// part of size `i`, `β_0 = n - ℓ(λ)` and `β_j` is the multiplicity of `j`.
#[derive(Debug, Default)]
pub struct Recurrence {
    memo: HashMap<(u32, Partition), BigInt>,
}

impl Recurrence {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c^n_λ`, zero outside `|λ| < n`.
    pub fn coeff(&mut self, n: u32, lambda: &Partition) -> BigInt {
        if n == 0 || lambda.size() >= n {
            return BigInt::zero();
        }
        if n == 1 {
            return BigInt::one();
        }
        if let Some(c) = self.memo.get(&(n, lambda.clone())) {
            return c.clone();
        }
        let prev = n - 1;
        let mut value = self.coeff(prev, lambda);
        // Only part sizes actually present contribute: c^n_{λ_i} = 0 when β_i = 0.
        for i in lambda.distinct_parts() {
            let beta_below = if i == 1 {
                prev - lambda.len()
            } else {
                lambda.multiplicity(i - 1)
            };
            let lowered = lambda.decrement_part(i).expect("part is present");
            value += self.coeff(prev, &lowered) * (beta_below + 1);
        }
        self.memo.insert((n, lambda.clone()), value.clone());
        value
    }

    pub fn table(&mut self, n: u32) -> CoeffTable {
        let mut table = CoeffTable::new(n, 1);
        for lambda in CoeffTable::expected_support(n, 1) {
            let c = self.coeff(n, &lambda);
            table.insert(lambda, c);
        }
        table
    }
}

pub fn coeff_recurrence(n: u32, lambda: &Partition) -> BigInt {
    Recurrence::new().coeff(n, lambda)
}

/// Visits every distinct sequence `(i_1, ..., i_{n-1})` whose nonzero terms
/// are the parts of `λ` in some order. `factor(j, s, v)` is the contribution
/// of placing `v` at position `j` after a prefix summing to `s`; a zero
/// factor prunes the branch. Returns the sum of the products.
fn arrangement_sum<F>(n: u32, lambda: &Partition, mut factor: F) -> BigInt
where
    F: FnMut(u32, u32, u32) -> BigInt,
{
    let slots = n.saturating_sub(1);
    if lambda.len() > slots {
        return BigInt::zero();
    }
    let mut values: Vec<(u32, u32)> = lambda
        .distinct_parts()
        .into_iter()
        .map(|p| (p, lambda.multiplicity(p)))
        .collect();
    if slots > lambda.len() {
        values.push((0, slots - lambda.len()));
    }
    let mut total = BigInt::zero();
    descend(
        1,
        slots,
        0,
        &mut values,
        BigInt::one(),
        &mut factor,
        &mut total,
    );
    total
}

fn descend<F>(
    j: u32,
    slots: u32,
    prefix: u32,
    values: &mut [(u32, u32)],
    acc: BigInt,
    factor: &mut F,
    total: &mut BigInt,
) where
    F: FnMut(u32, u32, u32) -> BigInt,
{
    if j > slots {
        *total += acc;
        return;
    }
    for idx in 0..values.len() {
        let (v, count) = values[idx];
        if count == 0 {
            continue;
        }
        let f = factor(j, prefix, v);
        if f.is_zero() {
            continue;
        }
        values[idx].1 -= 1;
        descend(j + 1, slots, prefix + v, values, &acc * f, factor, total);
        values[idx].1 += 1;
    }
}

/// `c^{n,d}_λ = Σ Π_j C(jd - i_1 - ... - i_{j-1}, i_j)` over arrangements of `λ`.
pub fn coeff_binomial(n: u32, d: u32, lambda: &Partition) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    arrangement_sum(n, lambda, |j, s, v| {
        binomial((j * d) as i64 - s as i64, v as i64)
    })
}

/// Comtet-type evaluation:
/// `c^{n,d}_λ = 1/((k-d)! Π λ_i!) · Σ Π_{j=1}^{n-1} (jd - i_1 - ... - i_{j-1})_d`,
/// summed over arrangements with `i_1 + ... + i_j <= jd`. For `d = 1` the
/// falling factorials are single factors and the prefactor is `1/(k-1)!`.
///
/// Requires `d <= k = nd - |λ|`; the quotient is computed exactly and must be
/// an integer.
pub fn coeff_comtet(n: u32, d: u32, lambda: &Partition) -> Result<BigInt> {
    if n == 0 || d == 0 {
        return Err(Error::OutOfRange("comtet formula needs n, d >= 1".into()));
    }
    let k = (n * d) as i64 - lambda.size() as i64;
    if k < d as i64 {
        return Err(Error::OutOfRange(format!(
            "comtet formula needs k = nd - |λ| >= d, got k = {k} for λ = {lambda}"
        )));
    }
    let sum = arrangement_sum(n, lambda, |j, s, v| {
        if s + v > j * d {
            BigInt::zero()
        } else {
            falling_factorial((j * d - s) as i64, d)
        }
    });
    let denominator = lambda
        .parts()
        .iter()
        .fold(factorial((k - d as i64) as u32), |acc, &p| {
            acc * factorial(p)
        });
    integral(BigRational::new(sum, denominator), "comtet formula")
}

/// Visits lower-triangular arrays `(a_{i,j})_{1 <= j < i <= n}` with entry
/// total `total`, row sums at most `row_cap` and column sums at most
/// `col_cap`. The visitor receives the entries row-major together with the
/// row sums (rows `2..=n`) and column sums (columns `1..n`).
pub fn visit_arrays<F>(n: u32, total: u32, row_cap: u32, col_cap: u32, mut visit: F)
where
    F: FnMut(&[u32], &[u32], &[u32]),
{
    let n = n as usize;
    if n < 2 {
        if total == 0 {
            visit(&[], &[], &[]);
        }
        return;
    }
    let cells: Vec<(usize, usize)> = (2..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    let mut state = ArrayState {
        cells,
        entries: Vec::new(),
        rows: vec![0; n - 1],
        cols: vec![0; n - 1],
        row_cap,
        col_cap,
    };
    state.walk(0, total, &mut visit);
}

struct ArrayState {
    cells: Vec<(usize, usize)>,
    entries: Vec<u32>,
    rows: Vec<u32>,
    cols: Vec<u32>,
    row_cap: u32,
    col_cap: u32,
}

impl ArrayState {
    fn walk<F: FnMut(&[u32], &[u32], &[u32])>(
        &mut self,
        idx: usize,
        remaining: u32,
        visit: &mut F,
    ) {
        if idx == self.cells.len() {
            if remaining == 0 {
                visit(&self.entries, &self.rows, &self.cols);
            }
            return;
        }
        let (i, j) = self.cells[idx];
        // Rows after the current one can absorb at most row_cap each.
        let later_rows = (self.rows.len() - (i - 1)) as u32;
        let row_left = self.row_cap - self.rows[i - 2];
        let is_last_in_row = j == i - 1;
        let max_here = remaining.min(row_left).min(self.col_cap - self.cols[j - 1]);
        for a in 0..=max_here {
            let left = remaining - a;
            let capacity = later_rows
                .saturating_mul(self.row_cap)
                .saturating_add(if is_last_in_row { 0 } else { row_left - a });
            if left > capacity {
                continue;
            }
            self.entries.push(a);
            self.rows[i - 2] += a;
            self.cols[j - 1] += a;
            self.walk(idx + 1, left, visit);
            self.rows[i - 2] -= a;
            self.cols[j - 1] -= a;
            self.entries.pop();
        }
    }
}

/// `c^{n,d}_λ = Σ_a Π_i (d)_{r_i(a)} / Π_{i,j} a_{i,j}!` over lower-triangular
/// arrays whose nonzero column sums are the parts of `λ`.
pub fn coeff_arrays(n: u32, d: u32, lambda: &Partition) -> Result<BigInt> {
    if n == 0 || d == 0 {
        return Err(Error::OutOfRange("array formula needs n, d >= 1".into()));
    }
    let col_cap = lambda.parts().first().copied().unwrap_or(0);
    let mut sum = BigRational::zero();
    visit_arrays(n, lambda.size(), d, col_cap, |entries, rows, cols| {
        if Partition::from_unsorted(cols.iter().copied()) != *lambda {
            return;
        }
        let num = rows.iter().fold(BigInt::one(), |acc, &r| {
            acc * falling_factorial(d as i64, r)
        });
        let den = entries
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * factorial(a));
        sum += BigRational::new(num, den);
    });
    integral(sum, "array formula")
}

fn integral(value: BigRational, formula: &'static str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            formula,
            value: value.to_string(),
        })
    }
}

/// All partitions that can index a coefficient of `U_{n,d}`.
pub fn candidate_partitions(n: u32, d: u32) -> Vec<Partition> {
    CoeffTable::expected_support(n, d)
}
