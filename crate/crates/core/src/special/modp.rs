//! Congruences of the coefficients modulo a prime `p` when `n` or `d` is a power of `p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::numbers::is_prime;
use crate::algebra::Partition;
use crate::error::{Error, Result};
use crate::universal::{coeff_binomial, CoeffTable, Recurrence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub partition: Partition,
    pub coeff: String,
    /// The residue the coefficient should have had.
    pub expected: String,
}

/// Outcome of a congruence check; clean when `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModpReport {
    pub p: u64,
    pub n: u32,
    pub d: u32,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl ModpReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ModpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "p = {}, n = {}, d = {}: {} coefficients checked, {} violations",
            self.p,
            self.n,
            self.d,
            self.checked,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(
                f,
                "  {}: {} (expected ≡ {})",
                v.partition, v.coeff, v.expected
            )?;
        }
        Ok(())
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn checked_power(p: u64, e: u32) -> Result<u32> {
    p.checked_pow(e)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{e} is too large")))
}

/// For `n = p^m`: `c^n_λ ≡ 0 (mod p)` whenever `|λ| ≠ n - 1` and `p ∤ |λ|`.
pub fn verify_modp(p: u64, m: u32) -> Result<ModpReport> {
    require_prime(p)?;
    let n = checked_power(p, m)?;
    Ok(check_vanishing(&Recurrence::new().table(n), p))
}

fn check_vanishing(table: &CoeffTable, p: u64) -> ModpReport {
    let n = table.n();
    let big_p = BigInt::from(p);
    let mut report = ModpReport {
        p,
        n,
        d: table.d(),
        checked: 0,
        violations: Vec::new(),
    };
    for (l, _, c) in table.entries() {
        let size = l.size();
        if size + 1 == n || u64::from(size) % p == 0 {
            continue;
        }
        report.checked += 1;
        if !c.mod_floor(&big_p).is_zero() {
            report.violations.push(Violation {
                partition: l.clone(),
                coeff: c.to_string(),
                expected: "0".into(),
            });
        }
    }
    report
}

/// For `d = p^e`: `c^{n,d}_{d·λ} ≡ c^n_λ` and `c^{n,d}_μ ≡ 0 (mod p)` when `μ`
/// is not of the form `d·λ`.
pub fn verify_modp_d(p: u64, e: u32, n: u32) -> Result<ModpReport> {
    require_prime(p)?;
    let d = checked_power(p, e)?;
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let base = Recurrence::new().table(n);
    let big_p = BigInt::from(p);
    let mut report = ModpReport {
        p,
        n,
        d,
        checked: 0,
        violations: Vec::new(),
    };
    for mu in CoeffTable::expected_support(n, d) {
        let c = coeff_binomial(n, d, &mu);
        let expected = match mu.divided(d) {
            Some(lambda) => base.get(&lambda).mod_floor(&big_p),
            None => BigInt::zero(),
        };
        report.checked += 1;
        if c.mod_floor(&big_p) != expected {
            report.violations.push(Violation {
                partition: mu,
                coeff: c.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(report)
}
