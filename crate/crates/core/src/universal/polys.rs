use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{NCPolynomial, NormalMonomial, NormalPolynomial};
use crate::error::{Error, Result};

/// `U_n`, built by `U_{n+1} = y_0 (Δ + ρ_t) U_n` from `U_0 = 1`.
pub fn u_poly(n: u32) -> NormalPolynomial {
    iterate(n, 1)
}

/// `U_{n,d}`, built by `U_{n+1,d} = y_0 (Δ + ρ_t)^d U_{n,d}`. Rejects `d = 0`.
pub fn u_poly_d(n: u32, d: u32) -> Result<NormalPolynomial> {
    if d == 0 {
        return Err(Error::OutOfRange(
            "U_(n,d) is defined for d >= 1 only".into(),
        ));
    }
    Ok(iterate(n, d))
}

fn iterate(n: u32, d: u32) -> NormalPolynomial {
    let mut u = NormalPolynomial::one();
    for _ in 0..n {
        for _ in 0..d {
            u = &u.delta() + &u.mul_t();
        }
        u = u.mul_y(0);
    }
    u
}

/// `U_n` from the product `Π_{i=0}^{n-1} (x_0 + ... + x_i)`, expanded in
/// commuting variables, with `x_n^{a_n} ... x_1^{a_1} x_0^k ↦ y_{a_n} ... y_{a_1} t^k`.
pub fn u_umbral(n: u32) -> NormalPolynomial {
    let width = n as usize + 1;
    let mut product: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    product.insert(vec![0; width], BigInt::one());
    for i in 0..n as usize {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (exps, c) in &product {
            for j in 0..=i {
                let mut e = exps.clone();
                e[j] += 1;
                *next.entry(e).or_default() += c;
            }
        }
        product = next;
    }
    NormalPolynomial::from_terms(product.into_iter().map(|(e, c)| {
        let m = NormalMonomial::from_parts(e[1..].iter().map(|&a| (a, 1)), e[0]);
        (m, c)
    }))
}

/// `V_n`, the non-commutative analogue.
pub fn v_poly(n: u32) -> NCPolynomial {
    let mut v = NCPolynomial::one();
    for _ in 0..n {
        v = (&v.delta() + &v.mul_t()).left_mul_y(0);
    }
    v
}
