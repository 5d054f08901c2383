//! Subdiagonal maps `f(i) < i` and subdiagonal partial maps on `[n] × [d]`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::caps::{factorial_u, Caps, Odometer};
use crate::algebra::{NormalMonomial, NormalPolynomial, Partition};
use crate::error::Result;

/// A total map `f: [n] -> {0, ..., n}` with `f(i) < i`; `image[i - 1] = f(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubdiagonalMap {
    image: Vec<u32>,
}

impl SubdiagonalMap {
    pub fn new(image: Vec<u32>) -> Option<Self> {
        image
            .iter()
            .enumerate()
            .all(|(pos, &v)| (v as usize) <= pos)
            .then_some(SubdiagonalMap { image })
    }

    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// `#f^{-1}({v})` for `v = 0..=n`.
    pub fn fiber_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0; self.image.len() + 1];
        for &v in &self.image {
            sizes[v as usize] += 1;
        }
        sizes
    }
}

/// All `n!` subdiagonal maps in lexicographic order of their image arrays.
pub fn enumerate_sd(n: u32, caps: &Caps) -> Result<impl Iterator<Item = SubdiagonalMap>> {
    caps.check_items("subdiagonal maps", &factorial_u(n))?;
    Ok(Odometer::new((1..=n).collect()).map(|image| SubdiagonalMap { image }))
}

/// `U_n = Σ_{f ∈ SD_n} (Π_{i=1}^n y_{#f^{-1}(i)}) t^{#f^{-1}(0)}`.
pub fn u_from_subdiagonal(n: u32, caps: &Caps) -> Result<NormalPolynomial> {
    let mut u = NormalPolynomial::zero();
    for f in enumerate_sd(n, caps)? {
        let sizes = f.fiber_sizes();
        let m = NormalMonomial::from_parts(sizes[1..].iter().map(|&s| (s, 1)), sizes[0]);
        u.add_term(m, BigInt::one());
    }
    Ok(u)
}

/// A partial map `g: [n] × [d] -> [n]` with `g(i, a) < i` on its domain.
///
/// `values[(i - 1) * d + (a - 1)]` is `g(i, a)`, with `0` meaning undefined
/// (the codomain `[n]` does not contain 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialSubdiagonalMap {
    n: u32,
    d: u32,
    values: Vec<u32>,
}

impl PartialSubdiagonalMap {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, i: u32, a: u32) -> Option<u32> {
        match self.values[((i - 1) * self.d + (a - 1)) as usize] {
            0 => None,
            v => Some(v),
        }
    }

    pub fn domain_size(&self) -> u32 {
        self.values.iter().filter(|&&v| v != 0).count() as u32
    }

    /// `#g^{-1}({j})` for `j = 1..=n`.
    pub fn fiber_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0; self.n as usize];
        for &v in self.values.iter().filter(|&&v| v != 0) {
            sizes[(v - 1) as usize] += 1;
        }
        sizes
    }

    /// The partition formed by the nonzero fiber sizes.
    pub fn map_type(&self) -> Partition {
        Partition::from_unsorted(self.fiber_sizes())
    }
}

/// All `(n!)^d` elements of `PD_{n,d}`, lexicographic in the value array.
pub fn enumerate_pd(
    n: u32,
    d: u32,
    caps: &Caps,
) -> Result<impl Iterator<Item = PartialSubdiagonalMap>> {
    caps.check_items(
        "subdiagonal partial maps",
        &num_traits::pow(factorial_u(n), d as usize),
    )?;
    let radices: Vec<u32> = (1..=n)
        .flat_map(|i| std::iter::repeat_n(i, d as usize))
        .collect();
    Ok(Odometer::new(radices).map(move |values| PartialSubdiagonalMap { n, d, values }))
}

/// `U_{n,d} = Σ_{g ∈ PD_{n,d}} (Π_{i=1}^n y_{#g^{-1}(i)}) t^{nd - #Dom(g)}`.
pub fn u_from_partial_maps(n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
    let mut u = NormalPolynomial::zero();
    for g in enumerate_pd(n, d, caps)? {
        let m = NormalMonomial::from_parts(
            g.fiber_sizes().into_iter().map(|s| (s, 1)),
            n * d - g.domain_size(),
        );
        u.add_term(m, BigInt::one());
    }
    Ok(u)
}

/// Number of elements of `PD_{n,d}` of each type.
pub fn pd_type_counts(n: u32, d: u32, caps: &Caps) -> Result<BTreeMap<Partition, BigUint>> {
    let mut counts: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for g in enumerate_pd(n, d, caps)? {
        *counts.entry(g.map_type()).or_default() += 1u32;
    }
    Ok(counts)
}

/// Number of elements of `PD_{n,d}` of type `λ`.
pub fn count_pd_by_type(n: u32, d: u32, lambda: &Partition, caps: &Caps) -> Result<BigUint> {
    let mut count = BigUint::default();
    for g in enumerate_pd(n, d, caps)? {
        if g.map_type() == *lambda {
            count += 1u32;
        }
    }
    Ok(count)
}
