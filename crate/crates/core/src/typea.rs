//! The symmetric-group counterpart: Pieri rules, the type A `a`-function and
//! the preorder they generate, which should be plain dominance.

use crate::adjacency::single_move;
use crate::error::{Error, Result};
use crate::partition::{BoxMove, Partition};
use crate::relation::Relation;

/// `sum (i - 1) * p_i`.
pub fn a_value_type_a(p: &Partition) -> usize {
    p.parts().iter().enumerate().map(|(i, &x)| i * x).sum()
}

/// Partitions obtained by adding one box to each of `l` distinct rows, rows
/// below the diagram included (a vertical strip of size `l`).
pub fn pieri_targets(p: &Partition, l: usize) -> Result<Vec<Partition>> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let base = p.normalized();
    let rows = base.len() + l;
    let padded = base.padded(rows);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(l);
    strip(&padded, 0, l, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

fn strip(base: &Partition, at: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        let mut parts = base.parts().to_vec();
        for &r in chosen.iter() {
            parts[r] += 1;
        }
        if let Ok(q) = Partition::new(parts) {
            out.push(q.normalized());
        }
        return;
    }
    if at + left > base.len() {
        return;
    }
    chosen.push(at);
    strip(base, at + 1, left - 1, chosen, out);
    chosen.pop();
    strip(base, at + 1, left, chosen, out);
}

/// Adds one box to each of the `l` largest rows.
pub fn truncated_pieri_targets(p: &Partition, l: usize) -> Result<Vec<Partition>> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let base = p.normalized();
    let mut parts = base.padded(base.len().max(l)).into_parts();
    for x in parts.iter_mut().take(l) {
        *x += 1;
    }
    Ok(vec![Partition::new(parts).expect("raising a prefix keeps the order")])
}

/// Dominance on partitions of `n`.
pub fn dominance_relation_type_a(n: usize) -> Relation<Partition> {
    Relation::from_fn(Partition::all_of(n), |x, y| x.dominated_by(y))
}

/// Least preorder on partitions of `n` closed under the Pieri steps, built
/// from the relations on all smaller sizes.
pub fn preceq_type_a_oracle(n: usize) -> Relation<Partition> {
    let mut ranks: Vec<Relation<Partition>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let labels = Partition::all_of(m);
        let mut rel = Relation::identity(labels.clone());
        let index = |q: &Partition| labels.iter().position(|x| x == q).expect("size m");
        let transpose_of: Vec<usize> = labels.iter().map(|q| index(&q.transpose())).collect();
        for (k, lower) in ranks.iter().enumerate() {
            let l = m - k;
            let targets: Vec<(Vec<usize>, Vec<usize>)> = lower
                .labels()
                .iter()
                .map(|nu| {
                    let ind = pieri_targets(nu, l).expect("l >= 1");
                    let tr = truncated_pieri_targets(nu, l).expect("l >= 1");
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
        rel.close();
        ranks.push(rel);
    }
    ranks.pop().expect("rank n built")
}

/// The single box move between adjacent partitions `p < q` of the same size.
pub fn adjacent_single_box(p: &Partition, q: &Partition) -> Result<BoxMove> {
    let (p, q) = (p.normalized(), q.normalized());
    let n = p.size();
    if q.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: q.size(),
        });
    }
    let not_adjacent = || Error::NotAdjacent(p.to_string(), q.to_string());
    if p == q || !p.dominated_by(&q) {
        return Err(not_adjacent());
    }
    let between = Partition::all_of(n)
        .into_iter()
        .any(|r| r != p && r != q && p.dominated_by(&r) && r.dominated_by(&q));
    if between {
        return Err(not_adjacent());
    }
    let len = p.len().max(q.len());
    single_move(&p.padded(len), &q.padded(len))
        .ok_or_else(|| Error::NoSingleMove(p.to_string(), q.to_string()))
}
