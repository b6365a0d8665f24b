//! Adjacency for the dominance order on `kappa` values.
//!
//! Two bipartitions `a`, `c` of `n` are adjacent when `kappa(a) < kappa(c)`
//! strictly and no bipartition of `n` has its `kappa` strictly in between.
//! Adjacency is decided by enumerating every bipartition of `n`; the
//! single-box-move property of adjacent pairs is then checked, not assumed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::enumerate_bipartitions;
use crate::partition::{BoxMove, Partition};
use crate::symbol::{kappa, Bipartition};

/// The window `[i, j]` where two strictly comparable partitions differ.
///
/// `i` is the first index with `low_i < high_i`, `j` the first index after
/// `i` at which the prefix sums agree again.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyFrame {
    pub kappa_low: Partition,
    pub kappa_high: Partition,
    pub i: usize,
    pub j: usize,
}

/// Computes the frame of `low < high` and checks
/// `low_j > high_j >= high_{j+1} >= low_{j+1}`.
pub fn frame(low: &Partition, high: &Partition) -> Result<AdjacencyFrame> {
    let strictly = low != high && low.len() == high.len() && low.dominance_leq(high).unwrap_or(false);
    if !strictly {
        return Err(Error::NotStrictlyDominated {
            low: low.to_string(),
            high: high.to_string(),
        });
    }
    let len = low.len();
    let i = (1..=len)
        .find(|&k| low.part(k) < high.part(k))
        .expect("strict dominance has a first increase");
    let (sl, sh) = (low.prefix_sums(len), high.prefix_sums(len));
    let j = (i + 1..=len)
        .find(|&m| sl[m - 1] == sh[m - 1])
        .expect("equal sizes close the window by the last index");
    let chain = low.part(j) > high.part(j)
        && high.part(j) >= high.part(j + 1)
        && high.part(j + 1) >= low.part(j + 1);
    if !chain {
        return Err(Error::PreconditionViolated(format!(
            "frame ({i},{j}) of {low} < {high} breaks the j-chain"
        )));
    }
    Ok(AdjacencyFrame {
        kappa_low: low.clone(),
        kappa_high: high.clone(),
        i,
        j,
    })
}

impl AdjacencyFrame {
    /// `low` and `high` agree before `i` and after `j`.
    pub fn outside_agrees(&self) -> bool {
        let len = self.kappa_low.len();
        (1..self.i)
            .chain(self.j + 1..=len)
            .all(|k| self.kappa_low.part(k) == self.kappa_high.part(k))
    }

    /// Every `Up_{k1,k2}` with `i <= k1 < k2 <= j` that keeps `low` a partition.
    pub fn window_moves(&self) -> Vec<(BoxMove, Partition)> {
        let mut out = Vec::new();
        for k1 in self.i..self.j {
            for k2 in k1 + 1..=self.j {
                let m = BoxMove::new(k1, k2).expect("k1 < k2");
                if let Ok(up) = self.kappa_low.up(m) {
                    out.push((m, up));
                }
            }
        }
        out
    }
}

/// The unique box move taking `low` to `high`, if they differ by one.
pub fn single_move(low: &Partition, high: &Partition) -> Option<BoxMove> {
    if low.len() != high.len() {
        return None;
    }
    let mut gain = None;
    let mut lose = None;
    for k in 1..=low.len() {
        let (x, y) = (low.part(k), high.part(k));
        if y == x + 1 && gain.is_none() {
            gain = Some(k);
        } else if x == y + 1 && lose.is_none() {
            lose = Some(k);
        } else if x != y {
            return None;
        }
    }
    BoxMove::new(gain?, lose?).ok()
}

/// Gap condition check for the double-break property: when every gap of
/// `high` on `[i, j-1]` is 0 or 1, there are at least two break points there.
pub fn verify_double_break(high: &Partition, fr: &AdjacencyFrame) -> Result<bool> {
    if let Some(m) = (fr.i..fr.j).find(|&m| high.gap(m) > 1) {
        return Err(Error::PreconditionViolated(format!(
            "gap {} at index {m} of {high}",
            high.gap(m)
        )));
    }
    Ok(high.break_points(fr.i, fr.j - 1).len() >= 2)
}

/// Every bipartition of `n` with its `kappa` at width `N = n`, and the
/// dominance order on the distinct `kappa` values.
#[derive(Clone, Debug)]
pub struct OrderTable {
    pub rank: usize,
    pub b: usize,
    pub width: usize,
    bipartitions: Vec<Bipartition>,
    kappas: Vec<Partition>,
    /// Distinct `kappa`, sorted decreasingly.
    classes: Vec<Partition>,
    class_of: Vec<usize>,
    leq: Vec<Vec<bool>>,
    covers: Vec<Vec<bool>>,
}

impl OrderTable {
    pub fn new(n: usize, b: usize) -> Self {
        let width = n;
        let bipartitions = enumerate_bipartitions(n);
        let kappas: Vec<Partition> = bipartitions
            .iter()
            .map(|bp| kappa(bp, b, width).expect("width n fits").entries)
            .collect();
        let mut classes = kappas.clone();
        classes.sort_unstable_by(|x, y| y.cmp(x));
        classes.dedup();
        let class_of = kappas
            .iter()
            .map(|k| classes.binary_search_by(|c| k.cmp(c)).expect("present"))
            .collect();
        let c = classes.len();
        let leq: Vec<Vec<bool>> = classes
            .iter()
            .map(|x| classes.iter().map(|y| x.dominated_by(y)).collect())
            .collect();
        let mut covers = vec![vec![false; c]; c];
        for lo in 0..c {
            for hi in 0..c {
                if lo != hi
                    && leq[lo][hi]
                    && (0..c).all(|m| m == lo || m == hi || !(leq[lo][m] && leq[m][hi]))
                {
                    covers[lo][hi] = true;
                }
            }
        }
        OrderTable {
            rank: n,
            b,
            width,
            bipartitions,
            kappas,
            classes,
            class_of,
            leq,
            covers,
        }
    }

    pub fn bipartitions(&self) -> &[Bipartition] {
        &self.bipartitions
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn index_of(&self, bp: &Bipartition) -> Result<usize> {
        if bp.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: bp.rank(),
                right: self.rank,
            });
        }
        let key = bp.to_string();
        self.bipartitions
            .binary_search_by(|x| x.to_string().cmp(&key))
            .map_err(|_| Error::InvalidArgument(format!("{bp} not enumerated")))
    }

    pub fn kappa_of(&self, bp: &Bipartition) -> Result<&Partition> {
        Ok(&self.kappas[self.index_of(bp)?])
    }

    pub fn class_of(&self, bp: &Bipartition) -> Result<usize> {
        Ok(self.class_of[self.index_of(bp)?])
    }

    /// Dominance between bipartitions through their `kappa`.
    pub fn leq(&self, a: &Bipartition, c: &Bipartition) -> Result<bool> {
        Ok(self.leq[self.class_of(a)?][self.class_of(c)?])
    }

    pub fn class_leq(&self, lo: usize, hi: usize) -> bool {
        self.leq[lo][hi]
    }

    pub fn class_covers(&self, lo: usize, hi: usize) -> bool {
        self.covers[lo][hi]
    }

    /// First member of a class in canonical order.
    pub fn representative(&self, class: usize) -> &Bipartition {
        let idx = self.class_of.iter().position(|&c| c == class).expect("nonempty class");
        &self.bipartitions[idx]
    }

    pub fn members(&self, class: usize) -> Vec<&Bipartition> {
        self.class_of
            .iter()
            .zip(&self.bipartitions)
            .filter(|(&c, _)| c == class)
            .map(|(_, bp)| bp)
            .collect()
    }

    /// All covering pairs `(lo, hi)` of classes.
    pub fn adjacent_classes(&self) -> Vec<(usize, usize)> {
        let c = self.classes.len();
        (0..c)
            .flat_map(|lo| (0..c).map(move |hi| (lo, hi)))
            .filter(|&(lo, hi)| self.covers[lo][hi])
            .collect()
    }

    fn comparable_strict(&self, a: &Bipartition, c: &Bipartition) -> Result<(usize, usize)> {
        let (ca, cc) = (self.class_of(a)?, self.class_of(c)?);
        if ca == cc || !(self.leq[ca][cc] || self.leq[cc][ca]) {
            return Err(Error::NotComparable(a.to_string(), c.to_string()));
        }
        Ok((ca, cc))
    }

    /// Whether `kappa(a) < kappa(c)` is a covering relation. A pair in the
    /// opposite order is not adjacent.
    pub fn is_adjacent(&self, a: &Bipartition, c: &Bipartition) -> Result<bool> {
        let (ca, cc) = self.comparable_strict(a, c)?;
        Ok(self.covers[ca][cc])
    }

    pub fn adjacency_move(&self, a: &Bipartition, c: &Bipartition) -> Result<BoxMove> {
        let adjacent = match self.is_adjacent(a, c) {
            Ok(adj) => adj,
            Err(Error::NotComparable(..)) => false,
            Err(e) => return Err(e),
        };
        if !adjacent {
            return Err(Error::NotAdjacent(a.to_string(), c.to_string()));
        }
        let (low, high) = (self.kappa_of(a)?, self.kappa_of(c)?);
        single_move(low, high).ok_or_else(|| Error::NoSingleMove(low.to_string(), high.to_string()))
    }

    /// A saturated chain from `a` up to `c`: consecutive entries are adjacent,
    /// except a single family hop when `a` and `c` share a `kappa`. Each step
    /// goes to the lexicographically smallest covering `kappa` below `c`.
    pub fn saturated_chain(&self, a: &Bipartition, c: &Bipartition) -> Result<Vec<Bipartition>> {
        let (ca, cc) = (self.class_of(a)?, self.class_of(c)?);
        if !self.leq[ca][cc] {
            return Err(Error::NotComparable(a.to_string(), c.to_string()));
        }
        let mut chain = vec![a.clone()];
        let mut current = ca;
        while current != cc {
            // classes are sorted decreasingly, so the last candidate is lexicographically smallest
            let next = (0..self.classes.len())
                .rev()
                .find(|&m| self.covers[current][m] && self.leq[m][cc])
                .expect("a cover exists inside a nonempty interval");
            chain.push(if next == cc {
                c.clone()
            } else {
                self.representative(next).clone()
            });
            current = next;
        }
        if chain.last() != Some(c) {
            chain.push(c.clone());
        }
        Ok(chain)
    }
}

fn common_table(a: &Bipartition, c: &Bipartition, b: usize) -> Result<OrderTable> {
    if a.rank() != c.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: c.rank(),
        });
    }
    Ok(OrderTable::new(a.rank(), b))
}

pub fn is_adjacent(a: &Bipartition, c: &Bipartition, b: usize) -> Result<bool> {
    common_table(a, c, b)?.is_adjacent(a, c)
}

pub fn adjacency_move(a: &Bipartition, c: &Bipartition, b: usize) -> Result<BoxMove> {
    common_table(a, c, b)?.adjacency_move(a, c)
}

pub fn saturated_chain(a: &Bipartition, c: &Bipartition, b: usize) -> Result<Vec<Bipartition>> {
    common_table(a, c, b)?.saturated_chain(a, c)
}
