use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{partitions_up_to, NormalMonomial, NormalPolynomial, Partition};
use crate::error::{Error, Result};

/// The coefficients `c^{n,d}_λ` of `U_{n,d}`, keyed by `λ`; the `t` power of
/// each entry is `k = nd - |λ|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    n: u32,
    d: u32,
    entries: BTreeMap<Partition, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: u32,
    d: u32,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    partition: Partition,
    k: u32,
    coeff: String,
}

impl CoeffTable {
    pub fn new(n: u32, d: u32) -> Self {
        CoeffTable {
            n,
            d,
            entries: BTreeMap::new(),
        }
    }

    /// Reads a table off `U_{n,d}` (or anything claiming to be it).
    pub fn from_polynomial(poly: &NormalPolynomial, n: u32, d: u32) -> Result<Self> {
        let mut table = CoeffTable::new(n, d);
        for (m, c) in poly.terms() {
            let (lambda, k) = m.canonical_split(n)?;
            if lambda.size() + k != n * d {
                return Err(Error::OutOfRange(format!(
                    "term {m} has t power {k}, expected {}",
                    (n * d) as i64 - lambda.size() as i64
                )));
            }
            table.insert(lambda, c.clone());
        }
        Ok(table)
    }

    /// Stores a coefficient; zeros are dropped.
    pub fn insert(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            self.entries.remove(&lambda);
        } else {
            self.entries.insert(lambda, coeff);
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k_of(&self, lambda: &Partition) -> u32 {
        self.n * self.d - lambda.size()
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(λ, k, c)` in canonical order: `k` descending, then larger parts first.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, u32, &BigInt)> {
        self.entries.iter().map(|(l, c)| (l, self.k_of(l), c))
    }

    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// Rebuilds `Σ c y_0^{n-ℓ(λ)} y_λ t^k`.
    pub fn to_polynomial(&self) -> NormalPolynomial {
        NormalPolynomial::from_terms(self.entries().map(|(l, k, c)| {
            (
                NormalMonomial::from_partition(self.n - l.len(), l, k),
                c.clone(),
            )
        }))
    }

    /// Index set of a genuine `U_{n,d}` table: `|λ| <= (n-1)d`, `ℓ(λ) <= n-1`.
    pub fn expected_support(n: u32, d: u32) -> Vec<Partition> {
        if n == 0 {
            return Vec::new();
        }
        partitions_up_to((n - 1) * d, n - 1)
    }

    /// Checks the structural invariants; returns a description of the first failure.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let (n, d) = (self.n, self.d);
        for (l, k, c) in self.entries() {
            if !c.is_positive() {
                return Err(format!("coefficient of {l} is {c}, not positive"));
            }
            if k < d || k > n * d || l.len() + 1 > n.max(1) {
                return Err(format!(
                    "entry {l} with k = {k} is outside the admissible range"
                ));
            }
        }
        let support = Self::expected_support(n, d);
        if support.len() != self.len() {
            return Err(format!(
                "{} entries, expected {} (every admissible partition)",
                self.len(),
                support.len()
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = TableJson {
            n: self.n,
            d: self.d,
            entries: self
                .entries()
                .map(|(l, k, c)| EntryJson {
                    partition: l.clone(),
                    k,
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("bad coefficient table JSON: {e}")))?;
        let mut table = CoeffTable::new(doc.n, doc.d);
        for e in doc.entries {
            let coeff: BigInt = e
                .coeff
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient '{}'", e.coeff)))?;
            if e.partition.size() + e.k != doc.n * doc.d {
                return Err(Error::InvalidArgument(format!(
                    "entry {} has inconsistent k = {}",
                    e.partition, e.k
                )));
            }
            table.insert(e.partition, coeff);
        }
        Ok(table)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("partition,k,coeff\n");
        for (l, k, c) in self.entries() {
            let parts: Vec<String> = l.parts().iter().map(u32::to_string).collect();
            out.push_str(&format!("\"{}\",{k},{c}\n", parts.join(",")));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}, d = {}, {} entries\n", self.n, self.d, self.len());
        for (l, k, c) in self.entries() {
            out.push_str(&format!("{l:<12} k = {k:<3} {c}\n"));
        }
        out
    }

    /// A column-per-partition LaTeX array; several tables become several rows
    /// over the union of their partitions.
    pub fn to_latex(tables: &[CoeffTable]) -> String {
        let mut cols: Vec<&Partition> = tables.iter().flat_map(|t| t.entries.keys()).collect();
        cols.sort();
        cols.dedup();
        let latex_partition = |p: &Partition| {
            if p.is_empty() {
                "\\emptyset".to_string()
            } else {
                p.to_tuple_string()
            }
        };
        let mut out = format!("\\begin{{array}}{{c|*{{{}}}{{c}}}}\n", cols.len());
        let header: Vec<String> = cols.iter().map(|p| latex_partition(p)).collect();
        out.push_str(&format!(
            "\\lambda & {} \\\\\n\\hline\n",
            header.join(" & ")
        ));
        for t in tables {
            let cells: Vec<String> = cols
                .iter()
                .map(|p| t.entries.get(*p).map(|c| c.to_string()).unwrap_or_default())
                .collect();
            let label = if t.d == 1 {
                format!("c^{{{}}}_{{\\lambda}}", t.n)
            } else {
                format!("c^{{{},{}}}_{{\\lambda}}", t.n, t.d)
            };
            out.push_str(&format!("{label} & {} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{array}\n");
        out
    }
}
