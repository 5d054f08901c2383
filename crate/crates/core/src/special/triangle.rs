use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::classical::{eulerian_with, stirling_first_with, stirling_second_with};
use super::genstirling::{gen_stirling, gen_stirling_k_range};
use crate::error::Result;
use crate::universal::Recurrence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    StirlingFirst,
    StirlingSecond,
    Eulerian,
    GenStirling { q: u32, d: u32 },
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleKind::StirlingFirst => f.write_str("stirling1"),
            TriangleKind::StirlingSecond => f.write_str("stirling2"),
            TriangleKind::Eulerian => f.write_str("eulerian"),
            TriangleKind::GenStirling { q, d } => write!(f, "gen_stirling({q},{d})"),
        }
    }
}

/// A number triangle `T(n, k)` for `n = 1..=max_n`, zero entries omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerTriangle {
    kind: TriangleKind,
    entries: BTreeMap<(u32, u32), BigInt>,
}

#[derive(Serialize)]
struct TriangleJson {
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    entries: Vec<EntryJson>,
}

#[derive(Serialize)]
struct EntryJson {
    n: u32,
    k: u32,
    value: String,
}

impl IntegerTriangle {
    pub fn build(kind: TriangleKind, max_n: u32) -> Result<Self> {
        let mut rec = Recurrence::new();
        let mut entries = BTreeMap::new();
        for n in 1..=max_n {
            let ks: Vec<u32> = match kind {
                TriangleKind::GenStirling { q, d } => gen_stirling_k_range(n, q, d).collect(),
                _ => (1..=n).collect(),
            };
            for k in ks {
                let v = match kind {
                    TriangleKind::StirlingFirst => stirling_first_with(&mut rec, n, k),
                    TriangleKind::StirlingSecond => stirling_second_with(&mut rec, n, k),
                    TriangleKind::Eulerian => eulerian_with(&mut rec, n, k),
                    TriangleKind::GenStirling { q, d } => gen_stirling(n, k, q, d)?,
                };
                if v != BigInt::default() {
                    entries.insert((n, k), v);
                }
            }
        }
        Ok(IntegerTriangle { kind, entries })
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn get(&self, n: u32, k: u32) -> BigInt {
        self.entries.get(&(n, k)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.entries.iter().map(|(&(n, k), v)| (n, k, v))
    }

    pub fn row(&self, n: u32) -> Vec<(u32, &BigInt)> {
        self.entries
            .range((n, 0)..=(n, u32::MAX))
            .map(|(&(_, k), v)| (k, v))
            .collect()
    }

    pub fn row_sum(&self, n: u32) -> BigInt {
        self.row(n).into_iter().map(|(_, v)| v).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (q, d) = match self.kind {
            TriangleKind::GenStirling { q, d } => (Some(q), Some(d)),
            _ => (None, None),
        };
        let doc = TriangleJson {
            name: match self.kind {
                TriangleKind::GenStirling { .. } => "gen_stirling".to_string(),
                other => other.to_string(),
            },
            q,
            d,
            entries: self
                .entries()
                .map(|(n, k, v)| EntryJson {
                    n,
                    k,
                    value: v.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("triangle serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, k, v) in self.entries() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.kind);
        let mut current = None;
        for (n, _, v) in self.entries() {
            if current != Some(n) {
                if current.is_some() {
                    out.push('\n');
                }
                out.push_str(&format!("{n:>3}:"));
                current = Some(n);
            }
            out.push_str(&format!(" {v}"));
        }
        if current.is_some() {
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{array}{r|l}\n");
        let max_n = self.entries.keys().map(|&(n, _)| n).max().unwrap_or(0);
        for n in 1..=max_n {
            let cells: Vec<String> = self.row(n).iter().map(|(_, v)| v.to_string()).collect();
            out.push_str(&format!("{n} & {} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{array}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_triangles() {
        let s2 = IntegerTriangle::build(TriangleKind::StirlingSecond, 6).unwrap();
        assert_eq!(s2.get(5, 2), BigInt::from(15));
        assert_eq!(s2.row_sum(6), BigInt::from(203));
        let s1 = IntegerTriangle::build(TriangleKind::StirlingFirst, 6).unwrap();
        assert_eq!(s1.row_sum(6), BigInt::from(720));
        assert!(s1.to_text().contains("  3: 2 3 1"));
    }

    #[test]
    fn exports() {
        let e = IntegerTriangle::build(TriangleKind::Eulerian, 3).unwrap();
        let v = e.to_json();
        assert_eq!(v["name"], "eulerian");
        assert_eq!(v["entries"][4]["value"], "4");
        assert!(e.to_csv().starts_with("n,k,value\n1,1,1\n"));
        let g = IntegerTriangle::build(TriangleKind::GenStirling { q: 2, d: 1 }, 2).unwrap();
        let gv = g.to_json();
        assert_eq!(gv["q"], 2);
        assert_eq!(g.get(2, 1), BigInt::from(2));
        assert!(g.to_latex().contains("2 & 2 & 1"));
    }
}
