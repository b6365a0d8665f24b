//! Exhaustive property suites over all objects up to a given rank.
//!
//! Each suite returns a [`SuiteReport`] counting the individual checks and
//! keeping the first few failures. The `kappa` map used by the symbol suite
//! is injectable so that a broken implementation can be shown to be caught.

use std::collections::BTreeSet;

use crate::adjacency::{frame, single_move, verify_double_break, OrderTable};
use crate::error::{Error, Result};
use crate::family::{enumerate_bipartitions, family_table};
use crate::partition::{BoxMove, Partition};
use crate::preorder::{
    induction_targets_at, preceq_relation, truncated_targets, truncated_targets_at, witness_step_in,
    PreorderOracle,
};
use crate::symbol::{
    a_value, a_value_with_width, f_stat, family_members, from_sympartition, is_sympartition, kappa,
    n_stat, Bipartition,
};
use crate::typea::{
    a_value_type_a, dominance_relation_type_a, pieri_targets, preceq_type_a_oracle,
    truncated_pieri_targets,
};

const MAX_REPORTED: usize = 5;

pub type KappaFn = fn(&Bipartition, usize, usize) -> Result<Partition>;

fn library_kappa(bp: &Bipartition, b: usize, width: usize) -> Result<Partition> {
    Ok(kappa(bp, b, width)?.entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub failed: usize,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(describe());
            }
        }
    }

    fn check_ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => {
                self.checks += 1;
                Some(v)
            }
            Err(e) => {
                self.check(false, || format!("{}: {e}", context()));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// `PASS <name> (<checks> checks)` or `FAIL <name> ...` with the first failure.
    pub fn line(&self) -> String {
        if self.passed() {
            format!("PASS {} ({} checks)", self.name, self.checks)
        } else {
            format!(
                "FAIL {} ({} of {} checks failed; first: {})",
                self.name,
                self.failed,
                self.checks,
                self.failures.first().map(String::as_str).unwrap_or("?")
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub b_list: Vec<usize>,
    pub oracle: bool,
}

pub struct Verifier {
    kappa_fn: KappaFn,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            kappa_fn: library_kappa,
        }
    }
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    /// Replaces the `kappa` map checked by the symbol suite.
    pub fn with_kappa(kappa_fn: KappaFn) -> Self {
        Verifier { kappa_fn }
    }

    pub fn run(&self, cfg: &VerifyConfig) -> Vec<SuiteReport> {
        let b_list = &cfg.b_list;
        let mut reports = vec![
            partitions_suite(cfg.max_n),
            self.symbols_suite(cfg.max_n, b_list),
            families_suite(cfg.max_n, b_list),
            adjacency_suite(cfg.max_n, b_list),
            witness_suite(cfg.max_n, b_list),
            induction_suite(cfg.max_n, b_list),
            type_a_suite(cfg.max_n),
        ];
        if cfg.oracle {
            reports.push(oracle_suite(cfg.max_n, b_list));
            reports.push(type_a_oracle_suite(cfg.max_n));
        }
        reports
    }

    /// Golden values, sympartition shape, sizes, width stability of `kappa`
    /// and `a`, and the `kappa` / sympartition round trip.
    pub fn symbols_suite(&self, max_n: usize, b_list: &[usize]) -> SuiteReport {
        let kf = self.kappa_fn;
        let mut r = SuiteReport::new("symbols");

        for (text, b, width, want) in goldens() {
            let bp: Bipartition = text.parse().expect("golden bipartition");
            let got = r.check_ok(kf(&bp, b, width), || format!("kappa({text})"));
            if let Some(got) = got {
                r.check(got.to_string() == want, || {
                    format!("kappa_({b},{width})({text}) = {got}, expected {want}")
                });
            }
        }

        for n in 0..=max_n {
            for &b in b_list {
                let empty = Bipartition::empty();
                for bp in enumerate_bipartitions(n) {
                    let base = bp.min_admissible();
                    let mut a_values = BTreeSet::new();
                    let mut previous: Option<Partition> = None;
                    for width in base..=base + 3 {
                        let Some(k) = r.check_ok(kf(&bp, b, width), || format!("kappa({bp})")) else {
                            continue;
                        };
                        let Some(k0) = r.check_ok(kf(&empty, b, width), || "kappa(-|-)".into()) else {
                            continue;
                        };
                        r.check(k.len() == 2 * width + b, || format!("{bp}: kappa {k} has wrong length"));
                        r.check(k.size() == f_stat(b, width, n), || {
                            format!("{bp}: |kappa| = {} != f({b},{width},{n})", k.size())
                        });
                        r.check(is_sympartition(&k, b, width, n), || {
                            format!("{bp}: {k} not a ({b},{width},{n})-sympartition")
                        });
                        if let Some(prev) = &previous {
                            let mut shifted: Vec<usize> = prev.parts().iter().map(|x| x + 1).collect();
                            shifted.extend([0, 0]);
                            r.check(shifted == k.parts(), || format!("{bp}: kappa not stable from N={}", width - 1));
                        }
                        a_values.insert(n_stat(&k) as i64 - n_stat(&k0) as i64);
                        if width == base {
                            match from_sympartition(&k, b, width, n) {
                                Ok(back) => {
                                    let again = kf(&back, b, width).ok();
                                    r.check(again.as_ref() == Some(&k), || {
                                        format!("round trip of {k} gave {back}")
                                    });
                                }
                                Err(e) => r.check(false, || format!("from_sympartition({k}): {e}")),
                            }
                            match family_members(&k, b, width, n) {
                                Ok(ms) => r.check(ms.contains(&bp), || format!("{bp} missing from family of {k}")),
                                Err(e) => r.check(false, || format!("family_members({k}): {e}")),
                            }
                        }
                        previous = Some(k);
                    }
                    r.check(a_values.len() == 1, || format!("{bp}: a-value depends on N: {a_values:?}"));
                    r.check(
                        a_values.first().copied() == Some(a_value(&bp, b) as i64),
                        || format!("{bp}: a-value mismatch"),
                    );
                }
            }
        }
        r
    }
}

/// `(bipartition, b, N, kappa)` reference values: the worked `B_11` example
/// and the ten characters of `B_3` with `b = 1`.
pub fn goldens() -> Vec<(&'static str, usize, usize, &'static str)> {
    vec![
        ("5,1|2,2,1", 2, 3, "9,4,4,3,2,1,1,0"),
        ("1,1,1|-", 1, 3, "4,3,2,2,1,0,0"),
        ("2,1|-", 1, 3, "5,3,2,1,1,0,0"),
        ("3|-", 1, 3, "6,2,2,1,1,0,0"),
        ("-|1,1,1", 1, 3, "3,3,2,2,1,1,0"),
        ("-|2,1", 1, 3, "4,3,2,2,1,0,0"),
        ("-|3", 1, 3, "5,3,2,1,1,0,0"),
        ("1|1,1", 1, 3, "4,3,2,2,1,0,0"),
        ("1|2", 1, 3, "4,4,2,1,1,0,0"),
        ("1,1|1", 1, 3, "4,3,3,1,1,0,0"),
        ("2|1", 1, 3, "5,3,2,1,1,0,0"),
    ]
}

/// Dominance is a partial order, transposition reverses it, box moves raise
/// it strictly, and overlap counts account for every repeated part.
pub fn partitions_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("partitions");
    for n in 0..=max_n {
        let all = Partition::all_of(n);
        let leq: Vec<Vec<bool>> = all
            .iter()
            .map(|x| all.iter().map(|y| x.dominance_leq(y).unwrap()).collect())
            .collect();
        for (i, x) in all.iter().enumerate() {
            r.check(leq[i][i], || format!("{x} not reflexive"));
            r.check(x.transpose().transpose() == *x, || format!("transpose not involutive on {x}"));
            let covered: usize = (1..=x.len()).map(|l| l * x.overlap_count(l)).sum();
            r.check(covered == x.len(), || format!("overlap counts of {x} miss entries"));
            for (j, y) in all.iter().enumerate() {
                if i != j {
                    r.check(!(leq[i][j] && leq[j][i]), || format!("{x}, {y} not antisymmetric"));
                }
                let reversed = y.transpose().dominance_leq(&x.transpose()).unwrap();
                r.check(leq[i][j] == reversed, || format!("transpose does not reverse {x} <= {y}"));
                if leq[i][j] {
                    for (k, z) in all.iter().enumerate() {
                        if leq[j][k] {
                            r.check(leq[i][k], || format!("{x} <= {y} <= {z} not transitive"));
                        }
                    }
                }
            }
            for k1 in 1..=x.len() {
                for k2 in k1 + 1..=x.len() {
                    let m = BoxMove::new(k1, k2).unwrap();
                    if let Ok(up) = x.up(m) {
                        r.check(up.size() == x.size(), || format!("{m} changes size of {x}"));
                        r.check(x.dominance_leq(&up) == Ok(true) && up != *x, || {
                            format!("{m} does not raise {x}")
                        });
                        r.check(up.down(m).as_ref() == Ok(x), || format!("down does not undo {m} on {x}"));
                    }
                }
            }
        }
    }
    r
}

/// Families cover each rank once, share `a`, `a` decreases along dominance,
/// the character transpose reverses dominance, and `b > n - 1` gives
/// singleton families.
pub fn families_suite(max_n: usize, b_list: &[usize]) -> SuiteReport {
    let mut r = SuiteReport::new("families");
    for n in 0..=max_n {
        let mut bs: Vec<usize> = b_list.to_vec();
        bs.push(n);
        bs.sort_unstable();
        bs.dedup();
        let all = enumerate_bipartitions(n);
        for &b in &bs {
            let t = family_table(n, b);
            let mut seen: Vec<&Bipartition> = t.families.iter().flat_map(|f| &f.members).collect();
            seen.sort();
            let mut expected: Vec<&Bipartition> = all.iter().collect();
            expected.sort();
            r.check(seen == expected, || format!("families of B_{n}, b={b} do not cover each character once"));
            for f in &t.families {
                for m in &f.members {
                    r.check(a_value(m, b) == f.a_value, || format!("{m} has a different a-value in its family"));
                }
            }
            for x in &t.families {
                for y in &t.families {
                    if x.kappa.dominated_by(&y.kappa) {
                        r.check(x.a_value >= y.a_value, || {
                            format!("b={b}: kappa {} <= {} but a {} < {}", x.kappa, y.kappa, x.a_value, y.a_value)
                        });
                    }
                }
            }
            if b + 1 > n {
                r.check(t.families.iter().all(|f| f.members.len() == 1), || {
                    format!("B_{n}, b={b}: non-singleton family in the asymptotic case")
                });
            }
            let table = OrderTable::new(n, b);
            for x in &all {
                for y in &all {
                    let forward = table.leq(x, y).unwrap();
                    let back = table.leq(&y.transpose(), &x.transpose()).unwrap();
                    r.check(forward == back, || format!("b={b}: transpose does not reverse {x} <= {y}"));
                }
            }
            if n >= 1 {
                for x in &all {
                    for y in &all {
                        let at_min = crate::preorder::preceq(x, y, b).unwrap();
                        r.check(at_min == table.leq(x, y).unwrap(), || {
                            format!("b={b}: dominance of {x}, {y} depends on N")
                        });
                    }
                }
            }
        }
    }
    r
}

fn adjacent_member_pairs(t: &OrderTable) -> Vec<(Bipartition, Bipartition)> {
    let mut out = Vec::new();
    for (lo, hi) in t.adjacent_classes() {
        for a in t.members(lo) {
            for c in t.members(hi) {
                out.push((a.clone(), c.clone()));
            }
        }
    }
    out
}

/// Every adjacent pair differs by one box move inside its frame, agrees
/// outside it, satisfies the window sandwich, and meets the double-break
/// property whenever its gap hypothesis holds.
pub fn adjacency_suite(max_n: usize, b_list: &[usize]) -> SuiteReport {
    adjacency_suite_counted(max_n, b_list).0
}

/// As [`adjacency_suite`], also returning how many pairs met the
/// double-break hypothesis.
pub fn adjacency_suite_counted(max_n: usize, b_list: &[usize]) -> (SuiteReport, usize) {
    let mut r = SuiteReport::new("adjacency");
    let mut double_break_cases = 0;
    for n in 0..=max_n {
        for &b in b_list {
            let t = OrderTable::new(n, b);
            for (a, c) in adjacent_member_pairs(&t) {
                let (low, high) = (t.kappa_of(&a).unwrap(), t.kappa_of(&c).unwrap());
                let m = match t.adjacency_move(&a, &c) {
                    Ok(m) => m,
                    Err(e) => {
                        r.check(false, || format!("b={b}: {a} < {c}: {e}"));
                        continue;
                    }
                };
                r.check(low.up(m).as_ref() == Ok(high), || format!("{m} does not take {low} to {high}"));
                let Some(fr) = r.check_ok(frame(low, high), || format!("frame of {low} < {high}")) else {
                    continue;
                };
                r.check(fr.outside_agrees(), || format!("{low}, {high} differ outside ({},{})", fr.i, fr.j));
                r.check(fr.i <= m.k1() && m.k2() <= fr.j, || {
                    format!("{m} outside frame ({},{}) of {low} < {high}", fr.i, fr.j)
                });
                for (wm, up) in fr.window_moves() {
                    let sandwiched = low.dominated_by(&up) && up != *low && up.dominated_by(high);
                    r.check(sandwiched, || format!("{wm} of {low} escapes [{low}, {high}]"));
                }
                match verify_double_break(high, &fr) {
                    Ok(holds) => {
                        double_break_cases += 1;
                        r.check(holds, || format!("{high} has fewer than two break points in [{}, {}]", fr.i, fr.j - 1));
                    }
                    Err(Error::PreconditionViolated(_)) => {}
                    Err(e) => r.check(false, || e.to_string()),
                }
            }
        }
    }
    (r, double_break_cases)
}

/// Every adjacent pair has a valid elementary induction step, built by the
/// case the two kappa values select.
pub fn witness_suite(max_n: usize, b_list: &[usize]) -> SuiteReport {
    let mut r = SuiteReport::new("witnesses");
    for n in 0..=max_n {
        for &b in b_list {
            let t = OrderTable::new(n, b);
            for (a, c) in adjacent_member_pairs(&t) {
                let Some(w) = r.check_ok(witness_step_in(&t, &a, &c), || format!("b={b}: witness {a} < {c}")) else {
                    continue;
                };
                let low = t.kappa_of(&a).unwrap();
                let high = t.kappa_of(&c).unwrap();
                let j1 = single_move(low, high).map(|m| m.k2()).unwrap_or(2);
                let equal = low.part(j1 - 1) == low.part(j1);
                r.check(w.transposed == equal, || format!("b={b}: wrong case for {a} < {c}"));
                r.check(is_sympartition(&w.kappa_nu, b, w.width, n - w.l), || {
                    format!("b={b}: {} is not a sympartition", w.kappa_nu)
                });
                r.check(w.validate(&a, &c, b).is_ok(), || format!("b={b}: witness for {a} < {c} invalid"));
            }
        }
    }
    r
}

/// Truncated induction shifts `a` by `l(l-1)/2`, and induction targets do
/// not depend on the common width.
pub fn induction_suite(max_n: usize, b_list: &[usize]) -> SuiteReport {
    let mut r = SuiteReport::new("induction");
    for k in 0..max_n {
        for &b in b_list {
            for nu in enumerate_bipartitions(k) {
                for l in 1..=max_n - k {
                    let Some(tr) = r.check_ok(truncated_targets(&nu, l, b), || format!("truncated {nu}")) else {
                        continue;
                    };
                    r.check(!tr.is_empty(), || format!("no truncated target for {nu}, l={l}"));
                    for mu in &tr {
                        r.check(a_value(mu, b) == a_value(&nu, b) + l * (l - 1) / 2, || {
                            format!("b={b}: a({mu}) != a({nu}) + {}", l * (l - 1) / 2)
                        });
                    }
                    let width = k + l;
                    let ind = induction_targets_at(&nu, l, b, width).unwrap_or_default();
                    let ind_wider = induction_targets_at(&nu, l, b, width + 1).unwrap_or_default();
                    let tr_wider = truncated_targets_at(&nu, l, b, width + 1).unwrap_or_default();
                    r.check(ind == ind_wider, || format!("b={b}: induction from {nu}, l={l} depends on N"));
                    r.check(tr == tr_wider, || format!("b={b}: truncation from {nu}, l={l} depends on N"));
                    r.check(tr.iter().all(|x| ind.contains(x)), || {
                        format!("b={b}: truncated targets of {nu} not among induced ones")
                    });
                    // truncation keeps exactly the constituents of minimal a-value
                    let floor = a_value_with_width(&nu, b, width).unwrap_or(0) + l * (l - 1) / 2;
                    r.check(ind.iter().all(|x| a_value(x, b) >= floor), || {
                        format!("b={b}: induced constituent of {nu} below a = {floor}")
                    });
                    let minimal: Vec<&Bipartition> = ind.iter().filter(|x| a_value(x, b) == floor).collect();
                    r.check(minimal.len() == tr.len(), || {
                        format!("b={b}: truncated targets of {nu}, l={l} are not the a-minimal ones")
                    });
                }
            }
        }
    }
    r
}

/// Type A `a`-values and the truncated-Pieri witness for adjacent partitions.
pub fn type_a_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("type-a");
    for n in 0..=max_n.max(10) {
        for p in Partition::all_of(n) {
            let direct: usize = (1..=p.len()).map(|i| (i - 1) * p.part(i)).sum();
            r.check(a_value_type_a(&p) == direct, || format!("a({p})"));
        }
    }
    for n in 1..=max_n {
        let all = Partition::all_of(n);
        for p in &all {
            for l in 1..=n {
                let tr = truncated_pieri_targets(p, l).unwrap();
                let ind = pieri_targets(p, l).unwrap();
                r.check(tr.iter().all(|x| ind.contains(x)), || format!("truncated Pieri of {p}, l={l}"));
            }
        }
        for p in &all {
            for q in &all {
                if p == q || !p.dominated_by(q) {
                    continue;
                }
                let between = all
                    .iter()
                    .any(|x| x != p && x != q && p.dominated_by(x) && x.dominated_by(q));
                if between {
                    continue;
                }
                let len = p.len().max(q.len());
                let Some(m) = single_move(&p.padded(len), &q.padded(len)) else {
                    r.check(false, || format!("{p} < {q} adjacent but not one box apart"));
                    continue;
                };
                let j1 = m.k2();
                let nu: Vec<usize> = (1..=len)
                    .map(|k| if k < j1 { q.part(k) - 1 } else { q.part(k) })
                    .collect();
                let nu = Partition::from_unsorted(nu).normalized();
                let l = j1 - 1;
                r.check(truncated_pieri_targets(&nu, l).unwrap().contains(q), || {
                    format!("{q} not truncated-Pieri from {nu}")
                });
                r.check(pieri_targets(&nu, l).unwrap().contains(p), || format!("{p} not Pieri from {nu}"));
            }
        }
    }
    r
}

/// Dominance on `kappa` equals the preorder generated by induction steps,
/// with and without relating family members up front.
pub fn oracle_suite(max_n: usize, b_list: &[usize]) -> SuiteReport {
    let mut r = SuiteReport::new("oracle");
    let mut bs: Vec<usize> = b_list.to_vec();
    bs.extend(0..=max_n);
    bs.sort_unstable();
    bs.dedup();
    for &b in &bs {
        let mut seeded = PreorderOracle::new(b);
        let mut bare = PreorderOracle::without_family_seed(b);
        for n in 0..=max_n {
            // b = n is part of the required range; other b only where listed
            if !b_list.contains(&b) && b != n {
                continue;
            }
            let dom = preceq_relation(n, b);
            for (name, oracle) in [("seeded", &mut seeded), ("bare", &mut bare)] {
                let diff = oracle.relation(n).disagreements(&dom);
                r.checks += dom.len() * dom.len();
                if !diff.is_empty() {
                    r.failed += diff.len();
                    if r.failures.len() < MAX_REPORTED {
                        let (x, y) = &diff[0];
                        r.failures.push(format!("{name} oracle, n={n}, b={b}: disagrees on ({x}, {y})"));
                    }
                }
            }
        }
    }
    r
}

/// Dominance equals the Pieri-generated preorder on partitions.
pub fn type_a_oracle_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("type-a-oracle");
    for n in 0..=max_n {
        let diff = preceq_type_a_oracle(n).disagreements(&dominance_relation_type_a(n));
        let total = Partition::all_of(n).len();
        r.checks += total * total;
        if !diff.is_empty() {
            r.failed += diff.len();
            let (x, y) = &diff[0];
            r.failures.push(format!("n={n}: disagrees on ({x}, {y})"));
        }
    }
    r
}

/// Round trip `kappa(from_sympartition(p)) = p` over every `(b, N, n)`
/// sympartition with `f(b, N, n) <= max_f`. Returns the number of
/// sympartitions visited.
pub fn sympartition_round_trip(max_f: usize) -> (SuiteReport, usize) {
    let mut r = SuiteReport::new("sympartition-round-trip");
    let mut visited = 0;
    for width in 0..=max_f {
        for b in 0..=max_f {
            if f_stat(b, width, 0) > max_f {
                break;
            }
            for n in 0.. {
                let f = f_stat(b, width, n);
                if f > max_f {
                    break;
                }
                let len = 2 * width + b;
                for p in Partition::all_of(f) {
                    if p.length() > len {
                        continue;
                    }
                    let p = p.padded(len);
                    if !is_sympartition(&p, b, width, n) {
                        continue;
                    }
                    visited += 1;
                    let back = from_sympartition(&p, b, width, n)
                        .and_then(|bp| kappa(&bp, b, width).map(|k| (bp, k.entries)));
                    match back {
                        Ok((bp, k)) => {
                            r.check(k == p && bp.rank() == n, || format!("({b},{width},{n}): {p} -> {bp} -> {k}"));
                        }
                        Err(e) => r.check(false, || format!("({b},{width},{n}): {p}: {e}")),
                    }
                }
            }
        }
    }
    (r, visited)
}
