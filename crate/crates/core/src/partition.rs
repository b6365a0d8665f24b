//! Integer partitions with the dominance order and single-box moves.
//!
//! A [`Partition`] keeps whatever trailing zeros it was built with. Plain
//! partitions (components of a bipartition) are stored normalized, while the
//! sorted symbol entries keep their zeros because their length `2N + b` is
//! part of the data. Indices in this module are 1-based, with the usual
//! conventions `p_i = 0` past the end and `p_i = +inf` for `i <= 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// The raising operator `Up_{k1,k2}` (or its inverse), 1-based with `k1 < k2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxMove {
    k1: usize,
    k2: usize,
}

impl BoxMove {
    pub fn new(k1: usize, k2: usize) -> Result<Self> {
        if k1 == 0 || k1 >= k2 {
            return Err(Error::InvalidMove { k1, k2 });
        }
        Ok(BoxMove { k1, k2 })
    }

    /// Row receiving the box under `up`.
    pub fn k1(&self) -> usize {
        self.k1
    }

    /// Row losing the box under `up`.
    pub fn k2(&self) -> usize {
        self.k2
    }
}

impl fmt::Display for BoxMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Up({},{})", self.k1, self.k2)
    }
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    /// Trailing zeros are kept.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(join(&parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative entries into a partition (zeros kept).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of stored entries, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&x| x > 0).count()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Copy with trailing zeros removed.
    pub fn normalized(&self) -> Partition {
        Partition {
            parts: self.parts[..self.length()].to_vec(),
        }
    }

    /// Copy padded with zeros (or with zeros trimmed) to exactly `len` entries.
    ///
    /// Panics if that would drop a nonzero part.
    pub fn padded(&self, len: usize) -> Partition {
        assert!(self.length() <= len, "cannot pad {self} to length {len}");
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Partition { parts }
    }

    /// `p_i` for `i >= 1`, zero beyond the stored entries.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "partition indices are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Prefix sums `p_1 + ... + p_m` for `m = 1..=len`.
    pub fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (1..=len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// Dominance order: every prefix sum of `self` is at most the matching
    /// prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        let (left, right) = (self.size(), other.size());
        if left != right {
            return Err(Error::SizeMismatch { left, right });
        }
        Ok(self.dominated_by(other))
    }

    /// Unchecked dominance test for partitions known to have equal size.
    pub(crate) fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Conjugate partition (normalized).
    pub fn transpose(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|c| self.parts.iter().take_while(|&&x| x >= c).count())
            .collect();
        Partition { parts }
    }

    /// Number of maximal runs of exactly `l` equal entries. Zero is an
    /// ordinary value here.
    pub fn overlap_count(&self, l: usize) -> usize {
        self.runs().filter(|&(_, len)| len == l).count()
    }

    /// Maximal runs of equal entries as `(value, run length)`.
    pub fn runs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .chunk_by(|a, b| a == b)
            .map(|run| (run[0], run.len()))
    }

    /// Moves one box from row `k2` up to row `k1`.
    pub fn up(&self, m: BoxMove) -> Result<Partition> {
        self.shift(m.k1, m.k2)
    }

    /// Moves one box from row `k1` down to row `k2`.
    pub fn down(&self, m: BoxMove) -> Result<Partition> {
        self.shift(m.k2, m.k1)
    }

    fn shift(&self, gain: usize, lose: usize) -> Result<Partition> {
        let len = self.len();
        for index in [gain, lose] {
            if index == 0 || index > len {
                return Err(Error::IndexOutOfRange { index, len });
            }
        }
        let mut parts = self.parts.clone();
        if parts[lose - 1] == 0 {
            return Err(Error::NotAPartition(format!("negative part in row {lose} of {self}")));
        }
        parts[lose - 1] -= 1;
        parts[gain - 1] += 1;
        Partition::new(parts)
    }

    /// `p_k - p_{k+1}` for `k >= 1`.
    pub fn gap(&self, k: usize) -> usize {
        self.part(k) - self.part(k + 1)
    }

    /// Indices `k` in `[i, j]` with both neighbouring gaps positive. The gap
    /// left of index 1 is infinite.
    pub fn break_points(&self, i: usize, j: usize) -> Vec<usize> {
        (i.max(1)..=j)
            .filter(|&k| (k == 1 || self.gap(k - 1) >= 1) && self.gap(k) >= 1)
            .collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&join(&self.parts))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"9,4,4,3,2,1,1,0"`; `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse(format!("{s:?} is not weakly decreasing")))
    }
}
