//! Geck's preorder on the characters of `W(B_n)`.
//!
//! Induction from `W(B_k) x S_l` tensored with the sign of `S_l` raises `l`
//! distinct entries of `kappa` by one; truncated induction (preserving the
//! `a`-value) raises the `l` largest ones. Two routes to the order live here:
//!
//! * [`preceq`]: dominance of `kappa` at a common width, used in production;
//! * [`PreorderOracle`]: the least preorder closed under the elementary
//!   induction steps, built rank by rank, against which [`preceq`] is checked.
//!
//! [`witness_step`] turns each adjacent dominance pair into one explicit
//! elementary step.

use serde::{Deserialize, Serialize};

use crate::adjacency::{single_move, OrderTable};
use crate::error::{Error, Result};
use crate::family::enumerate_bipartitions;
use crate::partition::Partition;
use crate::relation::Relation;
use crate::symbol::{family_members, from_sympartition, is_sympartition, kappa, Bipartition};

fn check_l(l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    Ok(())
}

/// Every sorted vector obtained from `base` by adding 1 to `l` distinct entries.
pub fn raise_entries(base: &Partition, l: usize) -> Vec<Partition> {
    let runs: Vec<(usize, usize)> = base.runs().collect();
    let mut out = Vec::new();
    let mut counts = vec![0usize; runs.len()];
    raise_rec(&runs, 0, l, &mut counts, &mut out);
    out.sort();
    out.dedup();
    out
}

fn raise_rec(
    runs: &[(usize, usize)],
    at: usize,
    left: usize,
    counts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if at == runs.len() {
        if left == 0 {
            let entries = runs
                .iter()
                .zip(counts.iter())
                .flat_map(|(&(v, len), &c)| {
                    std::iter::repeat_n(v + 1, c).chain(std::iter::repeat_n(v, len - c))
                })
                .collect();
            out.push(Partition::from_unsorted(entries));
        }
        return;
    }
    let remaining: usize = runs[at..].iter().map(|r| r.1).sum();
    if left > remaining {
        return;
    }
    for c in 0..=runs[at].1.min(left) {
        counts[at] = c;
        raise_rec(runs, at + 1, left - c, counts, out);
    }
    counts[at] = 0;
}

/// Adds 1 to the `l` largest entries.
pub fn raise_largest(base: &Partition, l: usize) -> Partition {
    let mut parts = base.parts().to_vec();
    for x in parts.iter_mut().take(l) {
        *x += 1;
    }
    Partition::from_unsorted(parts)
}

/// `kappa` values (at `width`) of the constituents of `Ind(E^nu x sign_l)`.
pub fn induction_kappas(nu: &Bipartition, l: usize, b: usize, width: usize) -> Result<Vec<Partition>> {
    check_l(l)?;
    let rank = nu.rank() + l;
    let base = kappa(nu, b, width)?.entries;
    Ok(raise_entries(&base, l)
        .into_iter()
        .filter(|p| is_sympartition(p, b, width, rank))
        .collect())
}

fn members_of(kappas: &[Partition], b: usize, width: usize, rank: usize) -> Result<Vec<Bipartition>> {
    let mut out = Vec::new();
    for k in kappas {
        out.extend(family_members(k, b, width, rank)?);
    }
    out.sort_by_cached_key(|bp| bp.to_string());
    out.dedup();
    Ok(out)
}

/// Constituents of `Ind(E^nu x sign_l)` at an explicit common width.
pub fn induction_targets_at(nu: &Bipartition, l: usize, b: usize, width: usize) -> Result<Vec<Bipartition>> {
    let ks = induction_kappas(nu, l, b, width)?;
    members_of(&ks, b, width, nu.rank() + l)
}

/// Constituents of `Ind(E^nu x sign_l)`, compared at width `rank(nu) + l`.
pub fn induction_targets(nu: &Bipartition, l: usize, b: usize) -> Result<Vec<Bipartition>> {
    induction_targets_at(nu, l, b, nu.rank() + l)
}

/// Truncated-induction targets at an explicit common width.
pub fn truncated_targets_at(nu: &Bipartition, l: usize, b: usize, width: usize) -> Result<Vec<Bipartition>> {
    check_l(l)?;
    let rank = nu.rank() + l;
    let base = kappa(nu, b, width)?.entries;
    if l > base.len() {
        return Ok(Vec::new());
    }
    let raised = raise_largest(&base, l);
    if !is_sympartition(&raised, b, width, rank) {
        return Ok(Vec::new());
    }
    members_of(&[raised], b, width, rank)
}

/// Constituents of `Ind(E^nu x sign_l)` with the same `a`-value as
/// `E^nu x sign_l`: one whole family.
pub fn truncated_targets(nu: &Bipartition, l: usize, b: usize) -> Result<Vec<Bipartition>> {
    truncated_targets_at(nu, l, b, nu.rank() + l)
}

/// Dominance of `kappa` at the smallest width admissible for both.
pub fn preceq(a: &Bipartition, c: &Bipartition, b: usize) -> Result<bool> {
    if a.rank() != c.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: c.rank(),
        });
    }
    let width = a.min_admissible().max(c.min_admissible());
    let (ka, kc) = (kappa(a, b, width)?, kappa(c, b, width)?);
    Ok(ka.entries.dominated_by(&kc.entries))
}

/// Dominance as a dense relation on the bipartitions of `n`.
pub fn preceq_relation(n: usize, b: usize) -> Relation<Bipartition> {
    let table = OrderTable::new(n, b);
    Relation::from_fn(enumerate_bipartitions(n), |x, y| {
        table.leq(x, y).expect("same rank")
    })
}

/// One elementary step `a -> c`: `E^nu x sign_l` induces to `a` and
/// truncated-induces to `c`. With `transposed`, the same holds for the
/// transposes with the roles of `a` and `c` swapped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionWitness {
    pub nu: Bipartition,
    pub l: usize,
    pub transposed: bool,
    /// `kappa(nu)` at the common width.
    pub kappa_nu: Partition,
    pub width: usize,
}

/// Serialized form of one witnessed step of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub step: usize,
    pub from: String,
    pub to: String,
    pub nu: String,
    pub l: usize,
    pub transposed: bool,
    pub kappa_before: Vec<usize>,
    pub kappa_after: Vec<usize>,
    pub kappa_nu: Vec<usize>,
}

impl InductionWitness {
    /// Checks the witness through the induction rules alone.
    pub fn validate(&self, a: &Bipartition, c: &Bipartition, b: usize) -> Result<()> {
        let rank = self.nu.rank() + self.l;
        if !is_sympartition(&self.kappa_nu, b, self.width, self.nu.rank()) {
            return Err(Error::WitnessInvalid(format!(
                "{} is not a ({b},{},{})-sympartition",
                self.kappa_nu,
                self.width,
                self.nu.rank()
            )));
        }
        if kappa(&self.nu, b, self.width)?.entries != self.kappa_nu {
            return Err(Error::WitnessInvalid(format!("kappa({}) != {}", self.nu, self.kappa_nu)));
        }
        let (induced, truncated) = if self.transposed {
            (c.transpose(), a.transpose())
        } else {
            (a.clone(), c.clone())
        };
        if induced.rank() != rank {
            return Err(Error::WitnessInvalid(format!("rank of {induced} is not {rank}")));
        }
        let ind = induction_targets_at(&self.nu, self.l, b, self.width)?;
        let tr = truncated_targets_at(&self.nu, self.l, b, self.width)?;
        if !ind.contains(&induced) {
            return Err(Error::WitnessInvalid(format!(
                "{induced} is not induced from {} with l = {}",
                self.nu, self.l
            )));
        }
        if !tr.contains(&truncated) {
            return Err(Error::WitnessInvalid(format!(
                "{truncated} is not truncated-induced from {} with l = {}",
                self.nu, self.l
            )));
        }
        Ok(())
    }

    pub fn record(&self, step: usize, a: &Bipartition, c: &Bipartition, b: usize) -> Result<WitnessRecord> {
        Ok(WitnessRecord {
            step,
            from: a.to_string(),
            to: c.to_string(),
            nu: self.nu.to_string(),
            l: self.l,
            transposed: self.transposed,
            kappa_before: kappa(a, b, self.width)?.entries.into_parts(),
            kappa_after: kappa(c, b, self.width)?.entries.into_parts(),
            kappa_nu: self.kappa_nu.parts().to_vec(),
        })
    }
}

/// Builds the elementary step for an adjacent pair `kappa(a) < kappa(c)`.
///
/// Let `Up(i1, j1)` take `kappa(a)` to `kappa(c)`. If
/// `kappa(a)_{j1-1} != kappa(a)_{j1}`, lowering the first `j1 - 1` entries of
/// `kappa(c)` by one gives `kappa(nu)` with `l = j1 - 1`. Otherwise the same
/// is done on the transposed pair, whose kappa values differ by
/// `Up(i2, j2)` in the opposite direction: lower the first `i2` entries of
/// `kappa(transpose(a))`, `l = i2`.
pub fn witness_step(a: &Bipartition, c: &Bipartition, b: usize) -> Result<InductionWitness> {
    let table = OrderTable::new(a.rank(), b);
    witness_step_in(&table, a, c)
}

pub fn witness_step_in(table: &OrderTable, a: &Bipartition, c: &Bipartition) -> Result<InductionWitness> {
    let b = table.b;
    let width = table.width;
    let n = table.rank;
    let m = table.adjacency_move(a, c)?;
    let low = table.kappa_of(a)?;
    let high = table.kappa_of(c)?;
    let j1 = m.k2();

    let lowered = |source: &Partition, count: usize| -> Result<Partition> {
        let parts = source
            .parts()
            .iter()
            .enumerate()
            .map(|(idx, &x)| {
                if idx < count {
                    x.checked_sub(1)
                        .ok_or_else(|| Error::WitnessInvalid(format!("cannot lower {source}")))
                } else {
                    Ok(x)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::WitnessInvalid(e.to_string()))
    };

    let (kappa_nu, l, transposed) = if low.part(j1 - 1) != low.part(j1) {
        (lowered(high, j1 - 1)?, j1 - 1, false)
    } else {
        let (ta, tc) = (a.transpose(), c.transpose());
        let (bar_a, bar_c) = (table.kappa_of(&ta)?, table.kappa_of(&tc)?);
        let m2 = single_move(bar_c, bar_a).ok_or_else(|| {
            Error::WitnessInvalid(format!("transposed kappa {bar_c} -> {bar_a} is not a single move"))
        })?;
        let i2 = m2.k1();
        (lowered(bar_a, i2)?, i2, true)
    };

    if l > n || !is_sympartition(&kappa_nu, b, width, n - l) {
        return Err(Error::WitnessInvalid(format!(
            "{kappa_nu} is not a sympartition for rank {}",
            n.saturating_sub(l)
        )));
    }
    let nu = from_sympartition(&kappa_nu, b, width, n - l)?;
    let witness = InductionWitness {
        nu,
        l,
        transposed,
        kappa_nu,
        width,
    };
    witness.validate(a, c, b)?;
    Ok(witness)
}

/// Memoized rank-by-rank construction of the preorder generated by the
/// elementary induction steps, for a fixed weight `b`.
#[derive(Clone, Debug)]
pub struct PreorderOracle {
    b: usize,
    seed_families: bool,
    ranks: Vec<Relation<Bipartition>>,
}

impl PreorderOracle {
    pub fn new(b: usize) -> Self {
        PreorderOracle {
            b,
            seed_families: true,
            ranks: Vec::new(),
        }
    }

    /// Skips relating members of one family up front, so that only the
    /// induction steps generate the relation.
    pub fn without_family_seed(b: usize) -> Self {
        PreorderOracle {
            seed_families: false,
            ..PreorderOracle::new(b)
        }
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// The relation on bipartitions of `n`, labels in canonical order.
    pub fn relation(&mut self, n: usize) -> &Relation<Bipartition> {
        while self.ranks.len() <= n {
            let m = self.ranks.len();
            let next = self.build_rank(m);
            self.ranks.push(next);
        }
        &self.ranks[n]
    }

    fn build_rank(&self, m: usize) -> Relation<Bipartition> {
        let labels = enumerate_bipartitions(m);
        let mut rel = Relation::identity(labels.clone());
        if m == 0 {
            return rel;
        }
        let index = |bp: &Bipartition| rel_position(&labels, bp);
        let transpose_of: Vec<usize> = labels.iter().map(|bp| index(&bp.transpose())).collect();
        let b = self.b;
        let width = m;

        for k in 0..m {
            let l = m - k;
            let lower = &self.ranks[k];
            let targets: Vec<(Vec<usize>, Vec<usize>)> = lower
                .labels()
                .iter()
                .map(|nu| {
                    let ind = induction_targets_at(nu, l, b, width).expect("width m fits rank k");
                    let tr = truncated_targets_at(nu, l, b, width).expect("width m fits rank k");
                    (
                        ind.iter().map(&index).collect(),
                        tr.iter().map(&index).collect(),
                    )
                })
                .collect();
            for p in 0..lower.len() {
                for q in 0..lower.len() {
                    if !lower.get(p, q) {
                        continue;
                    }
                    for &x in &targets[p].0 {
                        for &y in &targets[q].1 {
                            rel.set(x, y);
                            rel.set(transpose_of[y], transpose_of[x]);
                        }
                    }
                }
            }
        }

        if self.seed_families {
            let table = OrderTable::new(m, b);
            for x in 0..labels.len() {
                for y in 0..labels.len() {
                    if table.class_of(&labels[x]).ok() == table.class_of(&labels[y]).ok() {
                        rel.set(x, y);
                    }
                }
            }
        }
        rel.close();
        rel
    }
}

fn rel_position(labels: &[Bipartition], bp: &Bipartition) -> usize {
    let key = bp.to_string();
    labels
        .binary_search_by(|x| x.to_string().cmp(&key))
        .expect("bipartition of the right rank")
}

/// The oracle relation on the bipartitions of `n`.
pub fn preceq_oracle(n: usize, b: usize) -> Relation<Bipartition> {
    PreorderOracle::new(b).relation(n).clone()
}
