use num_bigint::BigUint;

use crate::error::{Error, Result};

pub const CAP_ITEMS_ENV: &str = "NORMORD_CAP_ITEMS";
pub const CAP_SHAPES_ENV: &str = "NORMORD_CAP_SHAPES";

/// Limits on brute-force enumeration. Exceeding one is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest number of maps, trees or tuples a single enumeration may produce.
    pub max_items: u64,
    /// Largest `n` for which unlabeled shapes on `n + 1` vertices are generated.
    pub max_shape_n: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_items: 362_880,
            max_shape_n: 15,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Caps {
            max_items: u64::MAX,
            max_shape_n: u32::MAX,
        }
    }

    /// Defaults overridden by `NORMORD_CAP_ITEMS` / `NORMORD_CAP_SHAPES` when set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var(CAP_ITEMS_ENV) {
            caps.max_items = v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{CAP_ITEMS_ENV}='{v}' is not a count"))
            })?;
        }
        if let Ok(v) = std::env::var(CAP_SHAPES_ENV) {
            caps.max_shape_n = v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{CAP_SHAPES_ENV}='{v}' is not a count"))
            })?;
        }
        Ok(caps)
    }

    pub fn check_items(&self, what: &'static str, requested: &BigUint) -> Result<()> {
        let cap = BigUint::from(self.max_items);
        if *requested > cap {
            return Err(Error::CapExceeded {
                what,
                requested: requested.clone(),
                cap,
            });
        }
        Ok(())
    }

    pub fn check_shapes(&self, n: u32) -> Result<()> {
        if n > self.max_shape_n {
            return Err(Error::CapExceeded {
                what: "vertices in unlabeled shapes",
                requested: BigUint::from(n + 1),
                cap: BigUint::from(self.max_shape_n + 1),
            });
        }
        Ok(())
    }
}

pub(crate) fn factorial_u(n: u32) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Mixed-radix counter: position `p` runs through `0..radices[p]`, the last
/// position fastest, so the output is lexicographic.
pub(crate) struct Odometer {
    radices: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl Odometer {
    pub(crate) fn new(radices: Vec<u32>) -> Self {
        let current = radices
            .iter()
            .all(|&r| r > 0)
            .then(|| vec![0; radices.len()]);
        Odometer { radices, current }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.radices[pos] {
                break;
            }
            cur[pos] = 0;
        }
        Some(out)
    }
}
