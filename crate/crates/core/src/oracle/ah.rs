//! Transitions between the three `ℤ[x]`-bases `(ŷ^k)`, `((hy)^k)` and
//! `(h^k y^k)` of the algebra generated by `x` and `ŷ = y h`.

use super::skew::{skew_mul, SkewPolynomial};
use crate::algebra::IntPoly;
use crate::error::{Error, Result};

type Matrix = Vec<Vec<IntPoly>>;

/// `to_hy[i][j]`: coefficient of `(hy)^i` in `ŷ^j`.
/// `hy_to_normal[i][j]`: coefficient of `h^i y^i` in `(hy)^j`.
/// `to_normal[i][j]`: coefficient of `h^i y^i` in `ŷ^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct AhTransitions {
    pub to_hy: Matrix,
    pub hy_to_normal: Matrix,
    pub to_normal: Matrix,
}

/// Computes the transition matrices for `0 <= i, j <= n` by multiplying out
/// `(hy)^j` and `ŷ^j` in `ℤ[x][y; d/dx]`.
pub fn ah_transitions(n: u32, h: &IntPoly) -> Result<AhTransitions> {
    if h.is_zero() {
        return Err(Error::InvalidArgument("h must be nonzero".into()));
    }
    let size = n as usize + 1;
    let hy = SkewPolynomial::monomial(h.clone(), 1);
    let y_hat = skew_mul(&SkewPolynomial::z(), &SkewPolynomial::constant(h.clone()));
    let h_powers: Vec<IntPoly> = (0..size as u32).map(|j| h.pow(j)).collect();

    let expand = |gen: &SkewPolynomial<IntPoly>| -> Result<Matrix> {
        let mut m = vec![vec![IntPoly::zero(); size]; size];
        let mut power = SkewPolynomial::one();
        for j in 0..size {
            if j > 0 {
                power = skew_mul(&power, gen);
            }
            for (i, (row, hp)) in m.iter_mut().zip(&h_powers).enumerate() {
                row[j] = power.coeff(i).div_exact(hp).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "coefficient of y^{i} in power {j} is not divisible by h^{i}"
                    ))
                })?;
            }
        }
        Ok(m)
    };
    let hy_to_normal = expand(&hy)?;
    let to_normal = expand(&y_hat)?;

    // hy_to_normal is upper unitriangular, so back substitution stays in ℤ[x].
    let mut to_hy = vec![vec![IntPoly::zero(); size]; size];
    for j in 0..size {
        for i in (0..size).rev() {
            let mut v = to_normal[i][j].clone();
            for m in i + 1..size {
                v = &v - &(&hy_to_normal[i][m] * &to_hy[m][j]);
            }
            to_hy[i][j] = v;
        }
    }
    Ok(AhTransitions {
        to_hy,
        hy_to_normal,
        to_normal,
    })
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).fold(IntPoly::zero(), |acc, m| &acc + &(&a[i][m] * &b[m][j])))
                .collect()
        })
        .collect()
}

impl AhTransitions {
    /// Row-major JSON with entries as polynomial strings.
    pub fn to_json(&self) -> serde_json::Value {
        let render = |m: &Matrix| -> serde_json::Value {
            m.iter()
                .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        };
        serde_json::json!({
            "to_hy": render(&self.to_hy),
            "hy_to_normal": render(&self.hy_to_normal),
            "to_normal": render(&self.to_normal),
        })
    }

    /// Checks `hy_to_normal · to_hy = to_normal`.
    pub fn is_consistent(&self) -> bool {
        mat_mul(&self.hy_to_normal, &self.to_hy) == self.to_normal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::binomial;
    use crate::special::stirling_second;

    #[test]
    fn linear_h() {
        let t = ah_transitions(5, &IntPoly::x()).unwrap();
        for i in 0..=5u32 {
            for j in 0..=5u32 {
                let (iu, ju) = (i as usize, j as usize);
                assert_eq!(
                    t.to_hy[iu][ju],
                    IntPoly::constant(binomial(j as i64, i as i64))
                );
                assert_eq!(
                    t.hy_to_normal[iu][ju],
                    IntPoly::constant(stirling_second(j, i))
                );
                assert_eq!(
                    t.to_normal[iu][ju],
                    IntPoly::constant(stirling_second(j + 1, i + 1))
                );
            }
        }
        assert!(t.is_consistent());
        let col: Vec<String> = (0..4).map(|i| t.to_normal[i][3].to_string()).collect();
        assert_eq!(col, ["1", "7", "6", "1"]);
    }

    #[test]
    fn constant_h_is_identity() {
        let t = ah_transitions(4, &IntPoly::one()).unwrap();
        for m in [&t.to_hy, &t.hy_to_normal, &t.to_normal] {
            for (i, row) in m.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(
                        *v,
                        if i == j {
                            IntPoly::one()
                        } else {
                            IntPoly::zero()
                        }
                    );
                }
            }
        }
        assert!(ah_transitions(2, &IntPoly::zero()).is_err());
    }

    #[test]
    fn nonlinear_h() {
        let t = ah_transitions(4, &"x^2 + 1".parse().unwrap()).unwrap();
        assert!(t.is_consistent());
        assert_eq!(t.to_json()["to_normal"][0][0], "1");
    }
}
