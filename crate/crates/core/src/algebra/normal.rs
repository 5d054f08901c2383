//! Commutative normal form `Σ c · y_0^{a_0} y_1^{a_1} ... t^k` with `t` kept to the right.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::partition::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalMonomial {
    y: BTreeMap<u32, u32>,
    t: u32,
}

impl NormalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(index: u32) -> Self {
        Self::from_parts([(index, 1)], 0)
    }

    pub fn t_pow(k: u32) -> Self {
        Self::from_parts([], k)
    }

    /// Builds `Π y_i^{e_i} t^k`, merging repeated indices and dropping zero exponents.
    pub fn from_parts<I: IntoIterator<Item = (u32, u32)>>(exponents: I, t: u32) -> Self {
        let mut y = BTreeMap::new();
        for (i, e) in exponents {
            if e > 0 {
                *y.entry(i).or_insert(0) += e;
            }
        }
        NormalMonomial { y, t }
    }

    /// `y_0^{y0} · y_λ · t^k`.
    pub fn from_partition(y0: u32, lambda: &Partition, k: u32) -> Self {
        Self::from_parts(
            std::iter::once((0, y0)).chain(lambda.parts().iter().map(|&p| (p, 1))),
            k,
        )
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.y.get(&index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.y.iter().map(|(&i, &e)| (i, e))
    }

    pub fn t_power(&self) -> u32 {
        self.t
    }

    /// Total degree in the `y` variables.
    pub fn y_degree(&self) -> u32 {
        self.y.values().sum()
    }

    /// `Σ i · a_i`, the weight of the `y` part.
    pub fn y_weight(&self) -> u32 {
        self.y.iter().map(|(i, e)| i * e).sum()
    }

    pub fn is_y_free(&self) -> bool {
        self.y.is_empty()
    }

    /// Indices of all `y` factors with repetition, largest first.
    pub fn index_multiset(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .y
            .iter()
            .rev()
            .flat_map(|(&i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut y = self.y.clone();
        for (&i, &e) in &other.y {
            *y.entry(i).or_insert(0) += e;
        }
        NormalMonomial {
            y,
            t: self.t + other.t,
        }
    }

    pub fn with_t(&self, t: u32) -> Self {
        NormalMonomial {
            y: self.y.clone(),
            t,
        }
    }

    /// Reads the monomial as `y_0^{n-ℓ(λ)} y_λ t^k` and returns `(λ, k)`.
    pub fn canonical_split(&self, n: u32) -> Result<(Partition, u32)> {
        let lambda = Partition::from_unsorted(
            self.y
                .iter()
                .filter(|(&i, _)| i > 0)
                .flat_map(|(&i, &e)| std::iter::repeat_n(i, e as usize)),
        );
        let found = self.exponent(0);
        let expected = n.checked_sub(lambda.len());
        if expected != Some(found) {
            return Err(Error::InconsistentMonomial {
                monomial: self.to_string(),
                n,
                found,
                expected: expected.unwrap_or(0),
            });
        }
        Ok((lambda, self.t))
    }

    fn display_key(&self) -> (u32, Vec<u32>) {
        (self.t, self.index_multiset())
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (&i, &e) in &self.y {
            factors.push(power("y", Some(i), e));
        }
        if self.t > 0 {
            factors.push(power("t", None, self.t));
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join(" "))
        }
    }
}

pub(crate) fn power(var: &str, index: Option<u32>, e: u32) -> String {
    let base = match index {
        Some(i) => format!("{var}{i}"),
        None => var.to_string(),
    };
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

/// Joins `(coefficient, monomial text)` pairs as `a + 3·b - c`; an empty
/// monomial text marks a constant.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a BigInt, String)>,
{
    let mut out = String::new();
    for (idx, (c, mono)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}·{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A finite `ℤ`-combination of [`NormalMonomial`]s. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalPolynomial {
    terms: BTreeMap<NormalMonomial, BigInt>,
}

impl NormalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(NormalMonomial::one(), BigInt::one())
    }

    pub fn y(index: u32) -> Self {
        Self::from_monomial(NormalMonomial::y(index), BigInt::one())
    }

    pub fn from_monomial(m: NormalMonomial, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (NormalMonomial, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c · m` in place, pruning the entry if it cancels.
    pub fn add_term(&mut self, m: NormalMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in display order: ascending `t` power, then ascending index multiset.
    pub fn display_terms(&self) -> Vec<(&NormalMonomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(m, _)| m.display_key());
        v
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NormalPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplication by `t` on the right.
    pub fn mul_t(&self) -> Self {
        NormalPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_t(m.t + 1), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by `y_index`.
    pub fn mul_y(&self, index: u32) -> Self {
        let y = NormalMonomial::y(index);
        NormalPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&y), c.clone()))
                .collect(),
        }
    }

    /// The derivation `Δ = Σ y_{i+1} ∂/∂y_i`; `t` is a constant for it.
    pub fn delta(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (&i, &e) in &m.y {
                let mut y = m.y.clone();
                if e == 1 {
                    y.remove(&i);
                } else {
                    y.insert(i, e - 1);
                }
                *y.entry(i + 1).or_insert(0) += 1;
                out.add_term(NormalMonomial { y, t: m.t }, c * e);
            }
        }
        out
    }

    /// Largest `t` power present, `None` for zero.
    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    /// Part of the polynomial with the given `t` power, with `t` removed.
    pub fn t_coefficient(&self, k: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.t == k)
                .map(|(m, c)| (m.with_t(0), c.clone())),
        )
    }

    /// Substitutes integers for every `y_i` and returns the coefficients of the
    /// resulting polynomial in `t`, indexed by power.
    pub fn specialize_y<F: FnMut(u32) -> BigInt>(&self, mut value: F) -> Vec<BigInt> {
        let mut cache: BTreeMap<u32, BigInt> = BTreeMap::new();
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (&i, &e) in &m.y {
                let base = cache.entry(i).or_insert_with(|| value(i)).clone();
                v *= num_traits::pow(base, e as usize);
            }
            let k = m.t as usize;
            if out.len() <= k {
                out.resize(k + 1, BigInt::zero());
            }
            out[k] += v;
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// JSON form: `{"terms": [{"y": [a0, a1, ...], "t": k, "coeff": "c"}]}` in display order.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            y: Vec<u32>,
            t: u32,
            coeff: String,
        }
        let terms: Vec<Term> = self
            .display_terms()
            .into_iter()
            .map(|(m, c)| {
                let top = m.y.keys().next_back().map_or(0, |&i| i + 1);
                Term {
                    y: (0..top).map(|i| m.exponent(i)).collect(),
                    t: m.t,
                    coeff: c.to_string(),
                }
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    /// LaTeX rendering such as `y_{0} y_{1}^{2} t + 3 y_{0}^{2} y_{1} t^{2}`.
    pub fn to_latex(&self) -> String {
        let terms = self.display_terms().into_iter().map(|(m, c)| {
            let mut f: Vec<String> =
                m.y.iter()
                    .map(|(&i, &e)| latex_power(&format!("y_{{{i}}}"), e))
                    .collect();
            if m.t > 0 {
                f.push(latex_power("t", m.t));
            }
            (c, f.join(" "))
        });
        render_terms(terms).replace('·', " ")
    }
}

fn latex_power(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{e}}}")
    }
}

impl fmt::Display for NormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.display_terms().into_iter().map(|(m, c)| {
            let s = if m.y.is_empty() && m.t == 0 {
                String::new()
            } else {
                m.to_string()
            };
            (c, s)
        });
        f.write_str(&render_terms(terms))
    }
}

impl Add for &NormalPolynomial {
    type Output = NormalPolynomial;

    fn add(self, rhs: &NormalPolynomial) -> NormalPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for NormalPolynomial {
    type Output = NormalPolynomial;

    fn add(self, rhs: NormalPolynomial) -> NormalPolynomial {
        &self + &rhs
    }
}

impl Neg for &NormalPolynomial {
    type Output = NormalPolynomial;

    fn neg(self) -> NormalPolynomial {
        NormalPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &NormalPolynomial {
    type Output = NormalPolynomial;

    fn sub(self, rhs: &NormalPolynomial) -> NormalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &NormalPolynomial {
    type Output = NormalPolynomial;

    fn mul(self, rhs: &NormalPolynomial) -> NormalPolynomial {
        let mut out = NormalPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for NormalPolynomial {
    type Output = NormalPolynomial;

    fn mul(self, rhs: NormalPolynomial) -> NormalPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(y: &[(u32, u32)], t: u32) -> NormalMonomial {
        NormalMonomial::from_parts(y.iter().copied(), t)
    }

    type Term<'a> = (i64, &'a [(u32, u32)], u32);

    fn poly(terms: &[Term]) -> NormalPolynomial {
        NormalPolynomial::from_terms(terms.iter().map(|&(c, y, t)| (mono(y, t), BigInt::from(c))))
    }

    #[test]
    fn delta_of_generator() {
        assert_eq!(NormalPolynomial::y(0).delta(), NormalPolynomial::y(1));
    }

    #[test]
    fn delta_of_square_keeps_t() {
        let p = poly(&[(1, &[(0, 2)], 1)]);
        assert_eq!(p.delta(), poly(&[(2, &[(0, 1), (1, 1)], 1)]));
    }

    #[test]
    fn delta_steps_u2_towards_u3() {
        let u2 = poly(&[(1, &[(0, 1), (1, 1)], 1), (1, &[(0, 2)], 2)]);
        let expected = poly(&[
            (1, &[(1, 2)], 1),
            (1, &[(0, 1), (2, 1)], 1),
            (2, &[(0, 1), (1, 1)], 2),
        ]);
        assert_eq!(u2.delta(), expected);
    }

    #[test]
    fn arithmetic() {
        let y0t = poly(&[(1, &[(0, 1)], 1)]);
        assert_eq!(&y0t * &y0t, poly(&[(1, &[(0, 2)], 2)]));
        let m = poly(&[(1, &[(0, 1), (1, 1)], 1)]);
        assert_eq!(m.mul_t(), poly(&[(1, &[(0, 1), (1, 1)], 2)]));
        let sum = &y0t + &y0t.scale(&BigInt::from(-1));
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn canonical_split_cases() {
        assert_eq!(
            mono(&[(0, 2), (2, 1)], 1).canonical_split(3).unwrap(),
            (Partition::new(vec![2]).unwrap(), 1)
        );
        assert_eq!(
            mono(&[(0, 3)], 3).canonical_split(3).unwrap(),
            (Partition::empty(), 3)
        );
        assert_eq!(
            mono(&[(0, 2), (1, 1)], 2).canonical_split(3).unwrap(),
            (Partition::new(vec![1]).unwrap(), 2)
        );
        assert!(matches!(
            mono(&[(0, 1), (1, 1)], 2).canonical_split(3),
            Err(Error::InconsistentMonomial { .. })
        ));
    }

    #[test]
    fn rendering() {
        let u3 = poly(&[
            (1, &[(0, 3)], 3),
            (3, &[(0, 2), (1, 1)], 2),
            (1, &[(0, 2), (2, 1)], 1),
            (1, &[(0, 1), (1, 2)], 1),
        ]);
        assert_eq!(
            u3.to_string(),
            "y0 y1^2 t + y0^2 y2 t + 3·y0^2 y1 t^2 + y0^3 t^3"
        );
        assert_eq!(
            poly(&[(-2, &[(0, 1)], 0), (5, &[], 0)]).to_string(),
            "5 - 2·y0"
        );
        assert_eq!(NormalPolynomial::zero().to_string(), "0");
        assert_eq!(NormalPolynomial::one().to_string(), "1");
        assert_eq!(
            u3.to_latex(),
            "y_{0} y_{1}^{2} t + y_{0}^{2} y_{2} t + 3 y_{0}^{2} y_{1} t^{2} + y_{0}^{3} t^{3}"
        );
    }

    #[test]
    fn specialization() {
        let u2 = poly(&[(1, &[(0, 1), (1, 1)], 1), (1, &[(0, 2)], 2)]);
        let all_ones = u2.specialize_y(|_| BigInt::one());
        assert_eq!(all_ones, vec![BigInt::zero(), BigInt::one(), BigInt::one()]);
    }
}
