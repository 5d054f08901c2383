use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;

use super::ring::DifferentialRing;
use crate::algebra::{IntPoly, NormalMonomial, NormalPolynomial};
use crate::error::{Error, Result};
use crate::universal::CoeffTable;

/// `Σ_k a_k z^k` in `A[z; ∂]`, where `z a = a z + ∂(a)`. `coeffs[k] = a_k`,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewPolynomial<R: DifferentialRing> {
    coeffs: Vec<R>,
}

impl<R: DifferentialRing> SkewPolynomial<R> {
    pub fn zero() -> Self {
        SkewPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn z() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn constant(a: R) -> Self {
        Self::monomial(a, 0)
    }

    /// `a z^k`.
    pub fn monomial(a: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = a;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        SkewPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `z · self`, by rewriting `z a_k z^k = a_k z^{k+1} + ∂(a_k) z^k`.
    pub fn left_mul_z(&self) -> Self {
        let mut out = vec![R::zero(); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k + 1] = out[k + 1].add(a);
            out[k] = out[k].add(&a.derive());
        }
        Self::from_coeffs(out)
    }

    /// `a · self`.
    pub fn left_mul_scalar(&self, a: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| a.mul(c)).collect())
    }

    fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| skew_mul(&acc, self))
    }
}

/// Normal form of `p · q`: each `a_i z^i · b_j z^j` is rewritten by pushing
/// `z` through `b_j` one step at a time.
pub fn skew_mul<R: DifferentialRing>(
    p: &SkewPolynomial<R>,
    q: &SkewPolynomial<R>,
) -> SkewPolynomial<R> {
    let mut out = SkewPolynomial::zero();
    for (j, b) in q.coeffs.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        // z^i b for i = 0, 1, ..., deg p.
        let mut pushed = SkewPolynomial::constant(b.clone());
        for (i, a) in p.coeffs.iter().enumerate() {
            if i > 0 {
                pushed = pushed.left_mul_z();
            }
            if !a.is_zero() {
                out = &out + &pushed.left_mul_scalar(a).shift(j);
            }
        }
    }
    out
}

/// `(h z^d)^n` by repeated multiplication.
pub fn power_h_zd<R: DifferentialRing>(h: &R, d: u32, n: u32) -> SkewPolynomial<R> {
    SkewPolynomial::monomial(h.clone(), d as usize).pow(n)
}

/// `u` evaluated at `y_i = ∂^i(h)`, `t = z`.
pub fn eval_u<R: DifferentialRing>(u: &NormalPolynomial, h: &R) -> SkewPolynomial<R> {
    let mut derivs = vec![h.clone()];
    let mut coeffs: Vec<R> = Vec::new();
    for (m, c) in u.terms() {
        let mut term = R::from_int(c.clone());
        for (i, e) in m.exponents() {
            while derivs.len() <= i as usize {
                let next = derivs.last().expect("nonempty").derive();
                derivs.push(next);
            }
            term = term.mul(&derivs[i as usize].pow(e));
        }
        let k = m.t_power() as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, R::zero());
        }
        coeffs[k] = coeffs[k].add(&term);
    }
    SkewPolynomial::from_coeffs(coeffs)
}

/// The action on `ℤ[x]`: `Σ a_k(x) f^{(k)}(x)`.
pub fn apply(p: &SkewPolynomial<IntPoly>, f: &IntPoly) -> IntPoly {
    let mut deriv = f.clone();
    let mut out = IntPoly::zero();
    for a in &p.coeffs {
        out = &out + &(a * &deriv);
        deriv = deriv.derivative();
    }
    out
}

/// `S(n, k)_{q,d}` read off the normal form of `(x^q z^d)^n` in `ℤ[x][z; d/dx]`.
pub fn gen_stirling_from_operator(n: u32, k: u32, q: u32, d: u32) -> Result<BigInt> {
    let h = IntPoly::monomial(BigInt::from(1), q as usize);
    let p = power_h_zd(&h, d, n);
    let (z_power, x_power) = if q >= d {
        (k, (q - d) * n + k)
    } else {
        (k + (d - q) * n, k)
    };
    let a = p.coeff(z_power as usize);
    if a.is_zero() {
        return Ok(BigInt::default());
    }
    match a.as_monomial() {
        Some((c, e)) if e == x_power as usize => Ok(c),
        _ => Err(Error::InvalidArgument(format!(
            "coefficient of z^{z_power} is {a}, expected a multiple of x^{x_power}"
        ))),
    }
}

/// Reads the coefficient table of `U_{n,d}` off `(y_0 z^d)^n` in `ℤ[y][z; Δ]`.
pub fn table_from_y_oracle(n: u32, d: u32) -> Result<CoeffTable> {
    let p = power_h_zd(&NormalPolynomial::y(0), d, n);
    let mut u = NormalPolynomial::zero();
    for (k, a) in p.coeffs.iter().enumerate() {
        for (m, c) in a.terms() {
            u.add_term(m.mul(&NormalMonomial::t_pow(k as u32)), c.clone());
        }
    }
    CoeffTable::from_polynomial(&u, n, d)
}

impl<R: DifferentialRing> Add for &SkewPolynomial<R> {
    type Output = SkewPolynomial<R>;

    fn add(self, rhs: &SkewPolynomial<R>) -> SkewPolynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SkewPolynomial::from_coeffs((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }
}

impl<R: DifferentialRing> Sub for &SkewPolynomial<R> {
    type Output = SkewPolynomial<R>;

    fn sub(self, rhs: &SkewPolynomial<R>) -> SkewPolynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SkewPolynomial::from_coeffs(
            (0..n)
                .map(|k| self.coeff(k).add(&rhs.coeff(k).neg()))
                .collect(),
        )
    }
}

impl<R: DifferentialRing> Mul for &SkewPolynomial<R> {
    type Output = SkewPolynomial<R>;

    fn mul(self, rhs: &SkewPolynomial<R>) -> SkewPolynomial<R> {
        skew_mul(self, rhs)
    }
}

impl<R: DifferentialRing> fmt::Display for SkewPolynomial<R> {
    /// `a_k·z^k` terms, highest power of `z` first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = a.render();
            let coef = if coef.contains(" + ") || coef.contains(" - ") {
                format!("({coef})")
            } else {
                coef
            };
            match (k, coef.as_str()) {
                (0, _) => f.write_str(&coef)?,
                (_, "1") => write!(f, "{}", z_power(k))?,
                _ => write!(f, "{coef}·{}", z_power(k))?,
            }
        }
        Ok(())
    }
}

fn z_power(k: usize) -> String {
    if k == 1 {
        "z".to_string()
    } else {
        format!("z^{k}")
    }
}
