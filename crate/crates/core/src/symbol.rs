//! Bipartitions, `(b, N)`-symbols and their sorted entries `kappa`.
//!
//! For a bipartition `(l1, l2)` of `n`, weight `b` and width `N`, the symbol
//! has a first row `l1_j - j + N + b` (`j = 1..=N+b`) and a second row
//! `l2_j - j + N` (`j = 1..=N`). Sorting all `2N + b` entries decreasingly
//! gives `kappa`, a partition of `f(b, N, n)`. Two bipartitions lie in the
//! same family exactly when their `kappa` agree at a common width.
//!
//! Any `N` with `len(l1) <= N + b` and `len(l2) <= N` produces well-formed
//! rows, and raising `N` by one maps `kappa` to `(kappa + 1, 0, 0)`, which
//! preserves dominance and shifts every `n`-statistic by the same amount.
//! [`min_admissible`] is the stricter `max(len(l1), len(l2))` used as the
//! default width.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An ordered pair of partitions, labelling an irreducible character of `W(B_n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    first: Partition,
    second: Partition,
}

impl Bipartition {
    /// Both components are stored without trailing zeros.
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition {
            first: first.normalized(),
            second: second.normalized(),
        }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn rank(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// The label of the character tensored with the sign:
    /// `(l1, l2) -> (transpose(l2), transpose(l1))`.
    pub fn transpose(&self) -> Bipartition {
        Bipartition {
            first: self.second.transpose(),
            second: self.first.transpose(),
        }
    }

    /// Smallest `N` bounding the index of every nonzero part.
    pub fn min_admissible(&self) -> usize {
        self.first.length().max(self.second.length())
    }

    /// Whether the `(b, N)`-symbol rows are defined for this bipartition.
    pub fn fits(&self, b: usize, width: usize) -> bool {
        self.first.length() <= width + b && self.second.length() <= width
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parses `"5,1|2,2,1"` or `"-|1,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected '<first>|<second>', got {s:?}")))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// A `(b, N)`-symbol. Both rows are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub b: usize,
    pub width: usize,
    /// `N + b` entries coming from the first component.
    pub row1: Vec<usize>,
    /// `N` entries coming from the second component.
    pub row2: Vec<usize>,
}

/// Symbol entries sorted decreasingly, zeros kept: exactly `2N + b` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Kappa {
    pub b: usize,
    pub width: usize,
    pub entries: Partition,
}

/// Machine-readable form of a symbol together with its `kappa`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolRecord {
    pub bipartition: String,
    pub b: usize,
    #[serde(rename = "N")]
    pub width: usize,
    pub row1: Vec<usize>,
    pub row2: Vec<usize>,
    pub kappa: Vec<usize>,
}

fn beta_row(p: &Partition, count: usize) -> Vec<usize> {
    // entry j (1-based) is p_j - j + count; listed increasingly
    (1..=count).rev().map(|j| p.part(j) + count - j).collect()
}

impl Symbol {
    pub fn new(bp: &Bipartition, b: usize, width: usize) -> Result<Self> {
        if !bp.fits(b, width) {
            return Err(Error::NotAdmissible {
                bipartition: bp.to_string(),
                b,
                width,
            });
        }
        Ok(Symbol {
            b,
            width,
            row1: beta_row(&bp.first, width + b),
            row2: beta_row(&bp.second, width),
        })
    }

    pub fn kappa(&self) -> Kappa {
        let mut entries = self.row1.clone();
        entries.extend_from_slice(&self.row2);
        Kappa {
            b: self.b,
            width: self.width,
            entries: Partition::from_unsorted(entries),
        }
    }

    pub fn record(&self, bp: &Bipartition) -> SymbolRecord {
        SymbolRecord {
            bipartition: bp.to_string(),
            b: self.b,
            width: self.width,
            row1: self.row1.clone(),
            row2: self.row2.clone(),
            kappa: self.kappa().entries.into_parts(),
        }
    }
}

pub fn symbol(bp: &Bipartition, b: usize, width: usize) -> Result<Symbol> {
    Symbol::new(bp, b, width)
}

pub fn kappa(bp: &Bipartition, b: usize, width: usize) -> Result<Kappa> {
    Ok(Symbol::new(bp, b, width)?.kappa())
}

/// `f(b, N, n) = n + N(N-1)/2 + (N+b)(N+b-1)/2`, the size of every `kappa`.
pub fn f_stat(b: usize, width: usize, n: usize) -> usize {
    let tri = |m: usize| m * m.saturating_sub(1) / 2;
    n + tri(width) + tri(width + b)
}

/// `sum (i - 1) * p_i`.
pub fn n_stat(p: &Partition) -> usize {
    p.parts().iter().enumerate().map(|(i, &x)| i * x).sum()
}

fn a_value_at(bp: &Bipartition, b: usize, width: usize) -> Result<usize> {
    let own = n_stat(&kappa(bp, b, width)?.entries);
    let base = n_stat(&kappa(&Bipartition::empty(), b, width)?.entries);
    Ok(own - base)
}

/// Lusztig's `a`-value of `E^bp` for the weight `L(t) = b`.
pub fn a_value(bp: &Bipartition, b: usize) -> usize {
    let width = bp.min_admissible();
    let a = a_value_at(bp, b, width).expect("minimal admissible width always fits");
    debug_assert_eq!(Some(a), a_value_at(bp, b, width + 1).ok());
    a
}

/// Width-checked variant of [`a_value`].
pub fn a_value_with_width(bp: &Bipartition, b: usize, width: usize) -> Result<usize> {
    a_value_at(bp, b, width)
}

/// `p` (zero-padded to `2N + b`) is a partition of `f(b, N, n)` without
/// 3-overlaps and with at most `N` 2-overlaps.
pub fn is_sympartition(p: &Partition, b: usize, width: usize, n: usize) -> bool {
    let len = 2 * width + b;
    if p.length() > len || p.size() != f_stat(b, width, n) {
        return false;
    }
    let padded = p.padded(len);
    let mut doubles = 0;
    for (_, run) in padded.runs() {
        match run {
            1 => {}
            2 => doubles += 1,
            _ => return false,
        }
    }
    doubles <= width
}

fn not_sympartition(p: &Partition, b: usize, width: usize, n: usize) -> Error {
    Error::NotSympartition {
        partition: p.to_string(),
        b,
        width,
        rank: n,
    }
}

/// Entries of a row listed decreasingly -> the partition they encode.
fn unbeta(row_desc: &[usize]) -> Partition {
    let count = row_desc.len();
    let parts = row_desc
        .iter()
        .enumerate()
        .map(|(idx, &x)| x + idx + 1 - count)
        .collect();
    Partition::from_sorted(parts).normalized()
}

struct Split {
    doubles: Vec<usize>,
    singles: Vec<usize>,
}

fn split_entries(p: &Partition, b: usize, width: usize, n: usize) -> Result<Split> {
    if !is_sympartition(p, b, width, n) {
        return Err(not_sympartition(p, b, width, n));
    }
    let padded = p.padded(2 * width + b);
    let mut split = Split {
        doubles: Vec::new(),
        singles: Vec::new(),
    };
    for (value, run) in padded.runs() {
        if run == 2 {
            split.doubles.push(value);
        } else {
            split.singles.push(value);
        }
    }
    Ok(split)
}

fn assemble(split: &Split, to_first: &[bool]) -> Bipartition {
    let mut row1 = Vec::new();
    let mut row2 = Vec::new();
    let mut d = split.doubles.iter().peekable();
    let mut s = split.singles.iter().zip(to_first).peekable();
    // merge in decreasing order so both rows come out decreasing
    loop {
        let take_double = match (d.peek(), s.peek()) {
            (Some(&&x), Some(&(&y, _))) => x > y,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_double {
            let x = *d.next().unwrap();
            row1.push(x);
            row2.push(x);
        } else {
            let (&y, &first) = s.next().unwrap();
            if first {
                row1.push(y);
            } else {
                row2.push(y);
            }
        }
    }
    Bipartition::new(unbeta(&row1), unbeta(&row2))
}

/// One bipartition of `n` whose `(b, N)`-kappa is `p`.
///
/// Each repeated value goes to both rows; the distinct values are handed to
/// the first row in decreasing order until it holds `N + b` entries, the rest
/// go to the second row.
pub fn from_sympartition(p: &Partition, b: usize, width: usize, n: usize) -> Result<Bipartition> {
    let split = split_entries(p, b, width, n)?;
    let first_singles = width + b - split.doubles.len();
    let to_first: Vec<bool> = (0..split.singles.len()).map(|k| k < first_singles).collect();
    Ok(assemble(&split, &to_first))
}

/// Every bipartition of `n` whose `(b, N)`-kappa is `p`, sorted.
pub fn family_members(p: &Partition, b: usize, width: usize, n: usize) -> Result<Vec<Bipartition>> {
    let split = split_entries(p, b, width, n)?;
    let first_singles = width + b - split.doubles.len();
    let mut out = Vec::new();
    let mut choice = vec![false; split.singles.len()];
    choose(&split, 0, first_singles, &mut choice, &mut out);
    out.sort_by_key(|bp| bp.to_string());
    Ok(out)
}

fn choose(split: &Split, at: usize, left: usize, choice: &mut Vec<bool>, out: &mut Vec<Bipartition>) {
    let remaining = choice.len() - at;
    if left > remaining {
        return;
    }
    if at == choice.len() {
        out.push(assemble(split, choice));
        return;
    }
    if left > 0 {
        choice[at] = true;
        choose(split, at + 1, left - 1, choice, out);
        choice[at] = false;
    }
    choose(split, at + 1, left, choice, out);
}
