//! Integer partitions, Ferrers diagrams, hooks and `z_lambda`.
//!
//! Cells are 1-indexed `(row, column)` pairs in English notation, longest
//! row on top.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::factorial;

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by size first, then reverse lexicographic, so that within a
/// fixed size `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`; this is the
/// order [`partitions_of`] produces and the order every map keyed by
/// partitions iterates in.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: u32) -> Self {
        Self::from_unsorted(vec![k])
    }

    /// `(1^k)`.
    pub fn column(k: u32) -> Self {
        Self(vec![1; k as usize])
    }

    /// `(d, d, ..., d)` with `count` parts.
    pub fn rectangle(d: u32, count: u32) -> Self {
        Self::from_unsorted(vec![d; count as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && r <= self.0.len() && c as u32 <= self.0[r - 1]
    }

    /// All cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len as usize).map(move |c| (r + 1, c)))
    }

    /// `arm + leg + 1` of cell `(r, c)`.
    pub fn hook_length(&self, r: usize, c: usize) -> Result<u32> {
        if !self.contains_cell(r, c) {
            return Err(Error::Domain(format!("cell ({r},{c}) is not in {self}")));
        }
        let arm = self.0[r - 1] - c as u32;
        let leg = self.0[r..].iter().filter(|&&p| p as usize >= c).count() as u32;
        Ok(arm + leg + 1)
    }

    /// Hook lengths of every cell, in [`Partition::cells`] order.
    pub fn hook_lengths(&self) -> Vec<u32> {
        self.cells()
            .map(|(r, c)| self.hook_length(r, c).expect("cell in diagram"))
            .collect()
    }

    /// Multiplicity `a_i` of each part `i`, as `(i, a_i)` in increasing `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, a)) if *q == p => *a += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_lambda = prod_i i^{a_i} a_i!`, the centralizer order of a
    /// permutation of this cycle type.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, a)| {
                acc * num_traits::pow(BigInt::from(i), a as usize) * factorial(a as u64)
            })
    }

    /// `(-1)^{|lambda| - len(lambda)}`, the sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    /// Every part multiplied by `d`.
    pub fn scaled(&self, d: u32) -> Self {
        Self(self.0.iter().map(|p| p * d).collect())
    }

    /// Whether every part equals `d`.
    pub fn is_rectangle_of_width(&self, d: u32) -> bool {
        !self.is_empty() && self.0.iter().all(|&p| p == d)
    }
}

/// `z_lambda` as a free function.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda.z()
}

/// `conjugate` as a free function.
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `hook_length` as a free function.
pub fn hook_length(lambda: &Partition, r: usize, c: usize) -> Result<u32> {
    lambda.hook_length(r, c)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"(4,2,1)"`, `"4,2,1"` and `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
