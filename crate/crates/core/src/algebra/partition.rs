use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored with its parts weakly decreasing.
///
/// Partitions are ordered by size first and, among partitions of the same
/// size, lexicographically with larger parts first: `() < (1) < (2) < (1,1)
/// < (3) < (2,1) < (1,1,1)`. This is the canonical order of coefficient
/// tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(1, 1, ..., 1)` with `count` parts.
    pub fn ones(count: u32) -> Self {
        Partition {
            parts: vec![1; count as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Distinct part sizes, largest first.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut d = self.parts.clone();
        d.dedup();
        d
    }

    /// Every part multiplied by `factor`.
    pub fn scaled(&self, factor: u32) -> Self {
        Partition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }

    /// Returns `Some(mu)` when every part is divisible by `factor` and `self = factor * mu`.
    pub fn divided(&self, factor: u32) -> Option<Self> {
        if factor == 0 || self.parts.iter().any(|p| p % factor != 0) {
            return None;
        }
        Some(Partition {
            parts: self.parts.iter().map(|p| p / factor).collect(),
        })
    }

    /// Subtracts one from a single part of size `part`; `None` if no such part exists.
    pub fn decrement_part(&self, part: u32) -> Option<Self> {
        let pos = self.parts.iter().rposition(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts[pos] -= 1;
        // The last occurrence of a part size can be lowered without breaking the order.
        if parts[pos] == 0 {
            parts.remove(pos);
        }
        Some(Partition { parts })
    }

    /// Canonical total order described on the type.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }

    /// Parts joined by commas, `∅` for the empty partition.
    pub fn to_tuple_string(&self) -> String {
        if self.parts.is_empty() {
            return "∅".to_string();
        }
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        format!("({})", inner.join(","))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tuple_string())
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `2,1,1`; an empty string or `()` gives the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition part '{t}'")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `size`, in canonical order.
pub fn partitions_of(size: u32) -> Vec<Partition> {
    partitions_bounded(size, u32::MAX)
}

/// Partitions of `size` with at most `max_len` parts, in canonical order.
pub fn partitions_bounded(size: u32, max_len: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(size, size, max_len, &mut current, &mut out);
    out
}

/// Partitions with size at most `max_size` and at most `max_len` parts, in canonical order.
pub fn partitions_up_to(max_size: u32, max_len: u32) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_bounded(s, max_len))
        .collect()
}

// Emits parts in decreasing order, largest first part first: this is the
// canonical order within a fixed size.
fn fill(
    remaining: u32,
    max_part: u32,
    max_len: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if current.len() as u32 >= max_len {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, max_len, current, out);
        current.pop();
    }
}
