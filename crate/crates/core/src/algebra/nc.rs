//! Words in non-commuting letters `y_0, y_1, ...` followed by a power of `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::normal::{power, render_terms, NormalMonomial, NormalPolynomial};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCWord {
    letters: Vec<u32>,
    t: u32,
}

impl NCWord {
    pub fn new(letters: Vec<u32>, t: u32) -> Self {
        NCWord { letters, t }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn t_power(&self) -> u32 {
        self.t
    }

    /// Concatenation; the `t` powers add up since `t` always sits at the far right.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        NCWord {
            letters,
            t: self.t + other.t,
        }
    }

    pub fn abelianize(&self) -> NormalMonomial {
        NormalMonomial::from_parts(self.letters.iter().map(|&i| (i, 1)), self.t)
    }

    fn display_key(&self) -> (u32, Vec<u32>, Vec<u32>) {
        let mut sorted = self.letters.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        (self.t, sorted, self.letters.clone())
    }
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Runs of equal adjacent letters are shown as powers.
        let mut factors = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == self.letters[i] {
                j += 1;
            }
            factors.push(power("y", Some(self.letters[i]), (j - i) as u32));
            i = j;
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

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPolynomial {
    terms: BTreeMap<NCWord, BigInt>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(NCWord::empty(), BigInt::from(1))
    }

    pub fn from_word(w: NCWord, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (NCWord, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: NCWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
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

    pub fn coeff(&self, w: &NCWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &BigInt)> {
        self.terms.iter()
    }

    /// Display order: ascending `t`, then by sorted letters, then by the word itself.
    pub fn display_terms(&self) -> Vec<(&NCWord, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(w, _)| w.display_key());
        v
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    pub fn mul_t(&self) -> Self {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (NCWord::new(w.letters.clone(), w.t + 1), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by the letter `y_index` on the left.
    pub fn left_mul_y(&self, index: u32) -> Self {
        NCPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut letters = Vec::with_capacity(w.letters.len() + 1);
                    letters.push(index);
                    letters.extend_from_slice(&w.letters);
                    (NCWord::new(letters, w.t), c.clone())
                })
                .collect(),
        }
    }

    /// `Δ = Σ_i D_i`, where `D_i` raises the letter in position `i` by one.
    pub fn delta(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            for pos in 0..w.letters.len() {
                let mut letters = w.letters.clone();
                letters[pos] += 1;
                out.add_term(NCWord::new(letters, w.t), c.clone());
            }
        }
        out
    }

    /// Lets the letters commute.
    pub fn abelianize(&self) -> NormalPolynomial {
        NormalPolynomial::from_terms(self.terms.iter().map(|(w, c)| (w.abelianize(), c.clone())))
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.display_terms().into_iter().map(|(w, c)| {
            let s = if w.letters.is_empty() && w.t == 0 {
                String::new()
            } else {
                w.to_string()
            };
            (c, s)
        });
        f.write_str(&render_terms(terms))
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;

    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Mul for &NCPolynomial {
    type Output = NCPolynomial;

    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}
