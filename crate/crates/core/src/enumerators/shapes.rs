//! Unlabeled rooted trees and their increasing-labeling counts.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};

use super::caps::{factorial_u, Caps};
use super::trees::IncreasingTree;
use crate::algebra::{NormalMonomial, NormalPolynomial};
use crate::error::Result;

/// An unlabeled rooted tree in canonical form: children sorted by
/// `(size, children)`, which is also the derived ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    size: u32,
    children: Vec<Arc<RootedTree>>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree {
            size: 1,
            children: Vec::new(),
        }
    }

    pub fn new(mut children: Vec<Arc<RootedTree>>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<u32>();
        RootedTree { size, children }
    }

    /// Number of vertices.
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn children(&self) -> &[Arc<RootedTree>] {
        &self.children
    }

    pub fn root_outdegree(&self) -> u32 {
        self.children.len() as u32
    }

    /// Outdegrees of all non-root vertices.
    pub fn non_root_outdegrees(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size as usize - 1);
        let mut stack: Vec<&RootedTree> = self.children.iter().map(|c| c.as_ref()).collect();
        while let Some(v) = stack.pop() {
            out.push(v.root_outdegree());
            stack.extend(v.children.iter().map(|c| c.as_ref()));
        }
        out
    }

    /// Main branches grouped as `(branch, multiplicity)`.
    pub fn branch_multiplicities(&self) -> Vec<(&RootedTree, u32)> {
        let mut out: Vec<(&RootedTree, u32)> = Vec::new();
        for c in &self.children {
            match out.last_mut() {
                Some((prev, m)) if *prev == c.as_ref() => *m += 1,
                _ => out.push((c.as_ref(), 1)),
            }
        }
        out
    }
}

impl fmt::Display for RootedTree {
    /// Nested brackets: a leaf is `[]`, a root with two leaves `[[][]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Number of increasing labelings of `tree` by `{0, ..., #T - 1}`:
/// `α(T) = n! / Π_s (m(s)! (#s)!^{m(s)}) · Π_s α(s)^{m(s)}` over the main branches.
pub fn alpha(tree: &RootedTree) -> BigUint {
    let n = tree.size - 1;
    let mut denom = BigUint::from(1u32);
    let mut product = BigUint::from(1u32);
    for (branch, m) in tree.branch_multiplicities() {
        denom *= factorial_u(m) * num_traits::pow(factorial_u(branch.size), m as usize);
        product *= num_traits::pow(alpha(branch), m as usize);
    }
    factorial_u(n) / denom * product
}

/// All shapes with `n + 1` vertices in canonical order.
pub fn enumerate_shapes(n: u32, caps: &Caps) -> Result<Vec<RootedTree>> {
    caps.check_shapes(n)?;
    Ok(shapes_up_to(n + 1).pop().expect("vertex count >= 1"))
}

/// `by_size[v - 1]` holds every shape with `v` vertices, for `v = 1..=max_vertices`.
fn shapes_up_to(max_vertices: u32) -> Vec<Vec<RootedTree>> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![vec![RootedTree::leaf()]];
    let mut pool: Vec<Arc<RootedTree>> = vec![Arc::new(RootedTree::leaf())];
    for v in 2..=max_vertices {
        let mut found = Vec::new();
        let mut chosen = Vec::new();
        pick_children(&pool, 0, v - 1, &mut chosen, &mut found);
        found.sort();
        pool.extend(found.iter().cloned().map(Arc::new));
        by_size.push(found);
    }
    by_size
}

/// Chooses a nondecreasing sequence of pool indices whose sizes sum to `remaining`.
fn pick_children(
    pool: &[Arc<RootedTree>],
    start: usize,
    remaining: u32,
    chosen: &mut Vec<Arc<RootedTree>>,
    found: &mut Vec<RootedTree>,
) {
    if remaining == 0 {
        found.push(RootedTree::new(chosen.clone()));
        return;
    }
    for (i, s) in pool.iter().enumerate().skip(start) {
        if s.size > remaining {
            break;
        }
        chosen.push(s.clone());
        pick_children(pool, i, remaining - s.size, chosen, found);
        chosen.pop();
    }
}

/// The unlabeled shape of an increasing tree.
pub fn shape_of(tree: &IncreasingTree) -> RootedTree {
    let n = tree.n() as usize;
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (j, &p) in tree.parents().iter().enumerate() {
        kids[p as usize].push(j + 1);
    }
    // Children carry larger labels than parents, so building from the top label down is bottom-up.
    let mut built: Vec<Option<Arc<RootedTree>>> = vec![None; n + 1];
    for v in (0..=n).rev() {
        let children = kids[v]
            .iter()
            .map(|&c| built[c].take().expect("child built first"))
            .collect();
        built[v] = Some(Arc::new(RootedTree::new(children)));
    }
    Arc::unwrap_or_clone(built[0].take().expect("root built"))
}

/// `U_n = Σ_{T} α(T) (Π_{v ≠ root} y_{ch(v;T)}) t^{ch(root;T)}` over shapes on `n + 1` vertices.
pub fn u_from_shapes(n: u32, caps: &Caps) -> Result<NormalPolynomial> {
    let mut u = NormalPolynomial::zero();
    for shape in enumerate_shapes(n, caps)? {
        let m = NormalMonomial::from_parts(
            shape.non_root_outdegrees().into_iter().map(|c| (c, 1)),
            shape.root_outdegree(),
        );
        u.add_term(m, BigInt::from(alpha(&shape)));
    }
    Ok(u)
}
