//! The autonomous ODE `x'(u) = y(x(u))` and the Faà di Bruno polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::numbers::factorial;
use crate::algebra::{IntPoly, NormalPolynomial};
use crate::error::{Error, Result};

/// Exponential-series coefficients `x_1, ..., x_order` of the solution of
/// `x'(u) = y(x(u))`, `x(0) = 0`, where `y(u) = Σ y_i u^i / i!`.
///
/// `x_n` is the image of `U_{n-1}` under `y_i ↦ y_i`, `t^k ↦ y_k`, so `y` must
/// supply `y_0, ..., y_{order-1}`.
pub fn ode_coefficients(y: &[BigInt], order: u32) -> Result<Vec<BigInt>> {
    if y.len() < order as usize {
        return Err(Error::InvalidArgument(format!(
            "{order} coefficients need y_0..y_{}, got {} values",
            order.saturating_sub(1),
            y.len()
        )));
    }
    let mut out = Vec::with_capacity(order as usize);
    let mut u = NormalPolynomial::one();
    for n in 1..=order {
        if n > 1 {
            u = u_poly_step(&u);
        }
        let by_t = u.specialize_y(|i| y[i as usize].clone());
        out.push(by_t.iter().zip(y).map(|(c, yk)| c * yk).sum());
    }
    Ok(out)
}

fn u_poly_step(u: &NormalPolynomial) -> NormalPolynomial {
    (&u.delta() + &u.mul_t()).mul_y(0)
}

/// Residuals of `x' - y(x)` as ordinary power-series coefficients of
/// `u^0, ..., u^{order-1}`, where `x = [x_1, x_2, ...]` holds exponential
/// coefficients; all zero when `x` solves the equation to that order.
pub fn ode_residual(y: &[BigInt], x: &[BigInt], order: u32) -> Vec<BigRational> {
    let order = order as usize;
    let exp_coeff = |c: &BigInt, n: usize| BigRational::new(c.clone(), factorial(n as u32));
    let mut lhs = vec![BigRational::zero(); order];
    for (j, c) in x.iter().enumerate().take(order) {
        lhs[j] = exp_coeff(c, j);
    }
    let mut xs = vec![BigRational::zero(); order];
    for (j, c) in x.iter().enumerate().take(order.saturating_sub(1)) {
        xs[j + 1] = exp_coeff(c, j + 1);
    }
    // y(x(u)) = Σ_i y_i x^i / i!; x has no constant term, so i < order suffices.
    let mut rhs = vec![BigRational::zero(); order];
    let mut power = vec![BigRational::zero(); order];
    if order > 0 {
        power[0] = BigRational::one();
    }
    for (i, yi) in y.iter().enumerate().take(order) {
        let scale = exp_coeff(yi, i);
        for (r, p) in rhs.iter_mut().zip(&power) {
            *r += &scale * p;
        }
        power = truncated_mul(&power, &xs, order);
    }
    lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect()
}

fn truncated_mul(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order];
    for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.iter().enumerate().take(order - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `F_n = (Δ + t y_1)^n (1)`.
pub fn faa_di_bruno(n: u32) -> NormalPolynomial {
    let mut f = NormalPolynomial::one();
    for _ in 0..n {
        f = &f.delta() + &f.mul_t().mul_y(1);
    }
    f
}

/// Evaluates `F_n(y', y'', ...; ∂)(outer) ∘ inner`, which should equal the
/// `n`-th derivative of `outer ∘ inner`.
pub fn eval_faa_di_bruno(f: &NormalPolynomial, outer: &IntPoly, inner: &IntPoly) -> IntPoly {
    let mut inner_derivs = vec![inner.clone()];
    let mut outer_derivs = vec![outer.clone()];
    let mut out = IntPoly::zero();
    for (m, c) in f.terms() {
        let mut term = IntPoly::constant(c.clone());
        for (i, e) in m.exponents() {
            while inner_derivs.len() <= i as usize {
                let next = inner_derivs.last().expect("nonempty").derivative();
                inner_derivs.push(next);
            }
            term = &term * &inner_derivs[i as usize].pow(e);
        }
        let k = m.t_power() as usize;
        while outer_derivs.len() <= k {
            let next = outer_derivs.last().expect("nonempty").derivative();
            outer_derivs.push(next);
        }
        out = &out + &(&term * &outer_derivs[k].compose(inner));
    }
    out
}

/// Checks `F_n` against direct differentiation of `outer ∘ inner`.
pub fn verify_faa_di_bruno(n: u32, outer: &IntPoly, inner: &IntPoly) -> bool {
    let direct = (0..n).fold(outer.compose(inner), |p, _| p.derivative());
    eval_faa_di_bruno(&faa_di_bruno(n), outer, inner) == direct
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn exponential_right_hand_side() {
        let y = bigs(&[1; 8]);
        let x = ode_coefficients(&y, 8).unwrap();
        assert_eq!(x, bigs(&[1, 1, 2, 6, 24, 120, 720, 5040]));
        assert!(ode_residual(&y, &x, 8).iter().all(Zero::is_zero));
    }

    #[test]
    fn identity_right_hand_side() {
        let mut y = bigs(&[0; 6]);
        y[0] = BigInt::one();
        assert_eq!(ode_coefficients(&y, 6).unwrap(), bigs(&[1, 0, 0, 0, 0, 0]));
        assert!(ode_coefficients(&y, 7).is_err());
    }

    #[test]
    fn residual_detects_wrong_coefficients() {
        let y = bigs(&[2, -1, 3, 0, 5, 1]);
        let mut x = ode_coefficients(&y, 6).unwrap();
        assert!(ode_residual(&y, &x, 6).iter().all(Zero::is_zero));
        x[3] += 1;
        assert!(!ode_residual(&y, &x, 6).iter().all(Zero::is_zero));
    }

    #[test]
    fn faa_di_bruno_small() {
        assert_eq!(faa_di_bruno(0), NormalPolynomial::one());
        assert_eq!(faa_di_bruno(1).to_string(), "y1 t");
        assert_eq!(faa_di_bruno(2).to_string(), "y2 t + y1^2 t^2");
        let outer: IntPoly = "x^3".parse().unwrap();
        let inner: IntPoly = "x + x^2".parse().unwrap();
        for n in 0..=5 {
            assert!(verify_faa_di_bruno(n, &outer, &inner));
        }
    }
}
