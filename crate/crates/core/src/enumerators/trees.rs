//! Increasing rooted trees on `{0, ..., n}` and tuples of them.

use num_bigint::BigInt;
use num_traits::One;

use super::caps::{factorial_u, Caps, Odometer};
use super::maps::SubdiagonalMap;
use crate::algebra::{NCPolynomial, NCWord, NormalMonomial, NormalPolynomial};
use crate::error::Result;

/// An increasing tree rooted at 0; `parent[j - 1]` is the parent of vertex `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTree {
    parent: Vec<u32>,
}

impl IncreasingTree {
    pub fn new(parent: Vec<u32>) -> Option<Self> {
        SubdiagonalMap::new(parent).map(Self::from)
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> u32 {
        self.parent.len() as u32
    }

    pub fn parent(&self, vertex: u32) -> Option<u32> {
        vertex
            .checked_sub(1)
            .and_then(|j| self.parent.get(j as usize).copied())
    }

    pub fn parents(&self) -> &[u32] {
        &self.parent
    }

    /// `ch(i; T)` for `i = 0..=n`.
    pub fn outdegrees(&self) -> Vec<u32> {
        let mut ch = vec![0; self.parent.len() + 1];
        for &p in &self.parent {
            ch[p as usize] += 1;
        }
        ch
    }

    /// Children of `vertex`, in increasing order.
    pub fn children(&self, vertex: u32) -> Vec<u32> {
        (1..=self.n())
            .filter(|&j| self.parent[(j - 1) as usize] == vertex)
            .collect()
    }

    pub fn to_subdiagonal(&self) -> SubdiagonalMap {
        SubdiagonalMap::new(self.parent.clone()).expect("parent array is subdiagonal")
    }

    fn monomial(&self) -> NormalMonomial {
        let ch = self.outdegrees();
        NormalMonomial::from_parts(ch[1..].iter().map(|&c| (c, 1)), ch[0])
    }
}

impl From<SubdiagonalMap> for IncreasingTree {
    fn from(f: SubdiagonalMap) -> Self {
        IncreasingTree {
            parent: f.image().to_vec(),
        }
    }
}

/// All `n!` increasing trees, lexicographic in the parent array.
pub fn enumerate_trees(n: u32, caps: &Caps) -> Result<impl Iterator<Item = IncreasingTree>> {
    caps.check_items("increasing trees", &factorial_u(n))?;
    Ok(Odometer::new((1..=n).collect()).map(|parent| IncreasingTree { parent }))
}

/// `U_n = Σ_T (Π_{i=1}^n y_{ch(i;T)}) t^{ch(0;T)}`.
pub fn u_from_trees(n: u32, caps: &Caps) -> Result<NormalPolynomial> {
    let mut u = NormalPolynomial::zero();
    for tree in enumerate_trees(n, caps)? {
        u.add_term(tree.monomial(), BigInt::one());
    }
    Ok(u)
}

/// `V_n = Σ_T y_{ch(n;T)} ... y_{ch(1;T)} t^{ch(0;T)}`.
pub fn v_from_trees(n: u32, caps: &Caps) -> Result<NCPolynomial> {
    let mut v = NCPolynomial::zero();
    for tree in enumerate_trees(n, caps)? {
        let ch = tree.outdegrees();
        let letters = ch[1..].iter().rev().copied().collect();
        v.add_term(NCWord::new(letters, ch[0]), BigInt::one());
    }
    Ok(v)
}

/// All `(n!)^d` tuples `(T_1, ..., T_d)` of increasing trees, lexicographic in
/// the concatenated parent arrays.
pub fn enumerate_tree_tuples(
    n: u32,
    d: u32,
    caps: &Caps,
) -> Result<impl Iterator<Item = Vec<IncreasingTree>>> {
    caps.check_items(
        "tuples of increasing trees",
        &num_traits::pow(factorial_u(n), d as usize),
    )?;
    let radices: Vec<u32> = (0..d).flat_map(|_| 1..=n).collect();
    Ok(Odometer::new(radices).map(move |flat| {
        if n == 0 {
            return vec![IncreasingTree { parent: Vec::new() }; d as usize];
        }
        flat.chunks(n as usize)
            .map(|c| IncreasingTree { parent: c.to_vec() })
            .collect()
    }))
}

/// `U_{n,d}` as a sum over `d`-tuples of trees with the summed outdegrees
/// `ch(i; F) = Σ_j ch(i; T_j)`.
pub fn u_d_from_tree_tuples(n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
    let mut u = NormalPolynomial::zero();
    for forest in enumerate_tree_tuples(n, d, caps)? {
        let mut ch = vec![0u32; n as usize + 1];
        for tree in &forest {
            for (total, c) in ch.iter_mut().zip(tree.outdegrees()) {
                *total += c;
            }
        }
        let m = NormalMonomial::from_parts(ch[1..].iter().map(|&c| (c, 1)), ch[0]);
        u.add_term(m, BigInt::one());
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universal::{u_poly, u_poly_d, v_poly};

    #[test]
    fn tree_basics() {
        let path = IncreasingTree::new(vec![0, 1, 2]).unwrap();
        assert_eq!(path.outdegrees(), vec![1, 1, 1, 0]);
        assert_eq!(path.parent(3), Some(2));
        assert_eq!(path.parent(0), None);
        assert_eq!(path.children(0), vec![1]);
        assert!(IncreasingTree::new(vec![1]).is_none());
        let star = IncreasingTree::new(vec![0, 0, 0]).unwrap();
        assert_eq!(star.children(0), vec![1, 2, 3]);
    }

    #[test]
    fn sd_bijection_roundtrip() {
        let caps = Caps::default();
        for t in enumerate_trees(5, &caps).unwrap() {
            assert_eq!(IncreasingTree::from(t.to_subdiagonal()), t);
        }
    }

    #[test]
    fn trees_give_u() {
        let caps = Caps::default();
        assert_eq!(u_from_trees(1, &caps).unwrap().to_string(), "y0 t");
        assert_eq!(u_from_trees(2, &caps).unwrap(), u_poly(2));
        assert_eq!(u_from_trees(6, &caps).unwrap(), u_poly(6));
        assert_eq!(v_from_trees(4, &caps).unwrap(), v_poly(4));
    }

    #[test]
    fn tuples_give_u_d() {
        let caps = Caps::default();
        assert_eq!(enumerate_tree_tuples(2, 2, &caps).unwrap().count(), 4);
        assert_eq!(
            u_d_from_tree_tuples(2, 2, &caps).unwrap(),
            u_poly_d(2, 2).unwrap()
        );
        assert_eq!(
            u_d_from_tree_tuples(3, 3, &caps).unwrap(),
            u_poly_d(3, 3).unwrap()
        );
        assert_eq!(
            u_d_from_tree_tuples(0, 2, &caps).unwrap(),
            NormalPolynomial::one()
        );
        assert!(u_d_from_tree_tuples(6, 2, &caps).is_err());
    }
}
