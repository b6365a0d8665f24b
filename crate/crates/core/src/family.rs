//! Lusztig families of `W(B_n)`: fibres of `kappa` at a common width.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::Partition;
use crate::symbol::{a_value_with_width, kappa, Bipartition};

/// All bipartitions of `n`, ordered lexicographically by their text form.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = (0..=n)
        .flat_map(|k| {
            let firsts = Partition::all_of(k);
            let seconds = Partition::all_of(n - k);
            firsts
                .into_iter()
                .flat_map(move |f| {
                    seconds
                        .clone()
                        .into_iter()
                        .map(move |s| Bipartition::new(f.clone(), s))
                })
        })
        .collect();
    out.sort_by_cached_key(|bp| bp.to_string());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub kappa: Partition,
    pub a_value: usize,
    pub members: Vec<Bipartition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTable {
    pub rank: usize,
    pub b: usize,
    pub width: usize,
    /// Sorted by decreasing `kappa`.
    pub families: Vec<Family>,
}

/// Families of `W(B_n)` for `L(t) = b`, computed at width `N = n`.
pub fn family_table(n: usize, b: usize) -> FamilyTable {
    family_table_with_width(n, b, n).expect("width n fits every bipartition of n")
}

pub fn family_table_with_width(n: usize, b: usize, width: usize) -> Result<FamilyTable> {
    let mut groups: BTreeMap<Partition, Vec<Bipartition>> = BTreeMap::new();
    for bp in enumerate_bipartitions(n) {
        let k = kappa(&bp, b, width)?;
        groups.entry(k.entries).or_default().push(bp);
    }
    let mut families = Vec::with_capacity(groups.len());
    for (kappa, members) in groups.into_iter().rev() {
        let a_value = a_value_with_width(&members[0], b, width)?;
        families.push(Family {
            kappa,
            a_value,
            members,
        });
    }
    Ok(FamilyTable {
        rank: n,
        b,
        width,
        families,
    })
}

impl FamilyTable {
    /// Index of the family containing `bp`, if it has the right rank.
    pub fn family_of(&self, bp: &Bipartition) -> Option<usize> {
        self.families.iter().position(|f| f.members.contains(bp))
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// One line per family: `kappa`, `a`, member count, members.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("kappa\ta\tsize\tmembers\n");
        for f in &self.families {
            let members: Vec<String> = f.members.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                f.kappa,
                f.a_value,
                f.members.len(),
                members.join(" ")
            );
        }
        out
    }

    /// Covering relations of dominance between the family `kappa` values.
    pub fn hasse(&self) -> HasseDiagram {
        let k = self.families.len();
        let leq: Vec<Vec<bool>> = self
            .families
            .iter()
            .map(|x| self.families.iter().map(|y| x.kappa.dominated_by(&y.kappa)).collect())
            .collect();
        let mut edges = Vec::new();
        for lo in 0..k {
            for hi in 0..k {
                if lo == hi || !leq[lo][hi] {
                    continue;
                }
                let covered = (0..k).all(|mid| mid == lo || mid == hi || !(leq[lo][mid] && leq[mid][hi]));
                if covered {
                    edges.push((lo, hi));
                }
            }
        }
        HasseDiagram {
            labels: self
                .families
                .iter()
                .map(|f| (f.kappa.clone(), f.a_value))
                .collect(),
            edges,
        }
    }
}

/// Transitive reduction of dominance on families. Nodes are indices into the
/// family table; an edge `(lo, hi)` means `kappa(lo)` is covered by `kappa(hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub labels: Vec<(Partition, usize)>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Nodes with no outgoing edge.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| self.edges.iter().all(|&(lo, _)| lo != v))
            .collect()
    }

    /// Nodes with no incoming edge.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| self.edges.iter().all(|&(_, hi)| hi != v))
            .collect()
    }

    /// Graphviz `digraph` text.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (idx, (kappa, a)) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  f{idx} [label=\"({kappa})\\na={a}\"];");
        }
        for &(lo, hi) in &self.edges {
            let _ = writeln!(out, "  f{lo} -> f{hi};");
        }
        out.push_str("}\n");
        out
    }
}
