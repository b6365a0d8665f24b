//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use typeb_core::adjacency::{frame, single_move, verify_double_break, OrderTable};
use typeb_core::preorder::{preceq_relation, truncated_targets, witness_step_in, PreorderOracle};
use typeb_core::typea::{a_value_type_a, dominance_relation_type_a, preceq_type_a_oracle};
use typeb_core::verify::sympartition_round_trip;
use typeb_core::{
    a_value, enumerate_bipartitions, f_stat, family_table, is_sympartition, symbol, Bipartition,
    Error, Partition,
};

const LIMIT_SYMBOL: Duration = Duration::from_millis(1);
const LIMIT_B3: Duration = Duration::from_millis(10);
const LIMIT_SYMPARTITION: Duration = Duration::from_secs(5);
const LIMIT_ADJACENCY: Duration = Duration::from_secs(60);
const LIMIT_ORACLE: Duration = Duration::from_secs(120);
const LIMIT_MONOTONE: Duration = Duration::from_secs(30);
const LIMIT_ASYMPTOTIC: Duration = Duration::from_secs(5);
const LIMIT_TYPE_A: Duration = Duration::from_secs(30);

const MAX_N_ADJACENCY: usize = 8;
const B_ADJACENCY: [usize; 5] = [0, 1, 2, 3, 4];
const MAX_N_ORACLE: usize = 6;
const MAX_F_ROUND_TRIP: usize = 30;

struct Outcome {
    id: u8,
    name: &'static str,
    failures: Vec<String>,
    detail: String,
    elapsed: Option<(Duration, Duration)>,
}

impl Outcome {
    fn new(id: u8, name: &'static str) -> Self {
        Outcome {
            id,
            name,
            failures: Vec::new(),
            detail: String::new(),
            elapsed: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    fn timed(mut self, started: Instant, limit: Duration) -> Self {
        let took = started.elapsed();
        self.check(took < limit, || format!("took {took:?}, limit {limit:?}"));
        self.elapsed = Some((took, limit));
        self
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {:>2} {status} {}", self.id, self.name);
        if !self.detail.is_empty() {
            s += &format!(" [{}]", self.detail);
        }
        if let Some((took, limit)) = self.elapsed {
            s += &format!(" ({:.3} ms, limit {:?})", took.as_secs_f64() * 1e3, limit);
        }
        if let Some(first) = self.failures.first() {
            s += &format!(": {first}");
        }
        s
    }
}

fn bp(s: &str) -> Bipartition {
    s.parse().expect("bipartition literal")
}

fn parts(s: &str) -> Vec<usize> {
    s.split(',').map(|x| x.parse().expect("integer")).collect()
}

fn worked_symbol() -> Outcome {
    let mut o = Outcome::new(1, "worked symbol example");
    let started = Instant::now();
    let s = symbol(&bp("5,1|2,2,1"), 2, 3);
    let o_timed = {
        let took = started.elapsed();
        match s {
            Ok(s) => {
                let k = s.kappa().entries;
                o.check(s.row2 == [1, 3, 4], || format!("top row {:?}", s.row2));
                o.check(s.row1 == [0, 1, 2, 4, 9], || format!("bottom row {:?}", s.row1));
                o.check(k.parts() == [9, 4, 4, 3, 2, 1, 1, 0], || format!("kappa {k}"));
                // f(2,3,11) = 11 + 3*2/2 + 5*4/2
                o.check(k.size() == 24 && f_stat(2, 3, 11) == 24, || format!("|kappa| = {}", k.size()));
            }
            Err(e) => o.check(false, || e.to_string()),
        }
        o.elapsed = Some((took, LIMIT_SYMBOL));
        o.check(took < LIMIT_SYMBOL, || format!("took {took:?}"));
        o
    };
    let mut o = o_timed;
    let out = Command::new(env!("CARGO_BIN_EXE_typeb"))
        .args(["symbol", "5,1|2,2,1", "--b", "2", "--N", "3"])
        .output()
        .expect("run typeb");
    let text = String::from_utf8_lossy(&out.stdout);
    o.check(
        out.status.success()
            && text.contains("top\t1,3,4\n")
            && text.contains("bottom\t0,1,2,4,9\n")
            && text.contains("kappa\t9,4,4,3,2,1,1,0\n")
            && text.contains("size\t24\n"),
        || format!("CLI printed {text:?}"),
    );
    o
}

fn b3_table() -> Outcome {
    let mut o = Outcome::new(2, "B3 symbols and families at b = 1");
    let rows: [(&str, &str, &str, &str); 10] = [
        ("1,1,1|-", "0,1,2", "0,2,3,4", "4,3,2,2,1,0,0"),
        ("2,1|-", "0,1,2", "0,1,3,5", "5,3,2,1,1,0,0"),
        ("3|-", "0,1,2", "0,1,2,6", "6,2,2,1,1,0,0"),
        ("-|1,1,1", "1,2,3", "0,1,2,3", "3,3,2,2,1,1,0"),
        ("-|2,1", "0,2,4", "0,1,2,3", "4,3,2,2,1,0,0"),
        ("-|3", "0,1,5", "0,1,2,3", "5,3,2,1,1,0,0"),
        ("1|1,1", "0,2,3", "0,1,2,4", "4,3,2,2,1,0,0"),
        ("1|2", "0,1,4", "0,1,2,4", "4,4,2,1,1,0,0"),
        ("1,1|1", "0,1,3", "0,1,3,4", "4,3,3,1,1,0,0"),
        ("2|1", "0,1,3", "0,1,2,5", "5,3,2,1,1,0,0"),
    ];
    let expected_families: Vec<Vec<&str>> = vec![
        vec!["1,1,1|-", "-|2,1", "1|1,1"],
        vec!["2,1|-", "-|3", "2|1"],
        vec!["3|-"],
        vec!["-|1,1,1"],
        vec!["1|2"],
        vec!["1,1|1"],
    ];
    let started = Instant::now();
    for (text, top, bottom, k) in rows {
        match symbol(&bp(text), 1, 3) {
            Ok(s) => {
                let got_k = s.kappa().entries;
                o.check(
                    s.row2 == parts(top) && s.row1 == parts(bottom) && got_k.parts() == parts(k),
                    || format!("{text}: rows {:?}/{:?}, kappa {got_k}", s.row2, s.row1),
                );
            }
            Err(e) => o.check(false, || format!("{text}: {e}")),
        }
    }
    let table = family_table(3, 1);
    let normalize = |fams: Vec<Vec<String>>| {
        let mut fams: Vec<Vec<String>> = fams
            .into_iter()
            .map(|mut f| {
                f.sort();
                f
            })
            .collect();
        fams.sort();
        fams
    };
    let got = normalize(
        table
            .families
            .iter()
            .map(|f| f.members.iter().map(|m| m.to_string()).collect())
            .collect(),
    );
    let want = normalize(
        expected_families
            .iter()
            .map(|f| f.iter().map(|s| s.to_string()).collect())
            .collect(),
    );
    o.check(got == want, || format!("families {got:?}"));
    let sizes: Vec<usize> = table.families.iter().map(|f| f.members.len()).collect();
    o.check(
        sizes.iter().filter(|&&s| s == 3).count() == 2 && sizes.iter().filter(|&&s| s == 1).count() == 4,
        || format!("family sizes {sizes:?}"),
    );
    o.timed(started, LIMIT_B3)
}

fn sympartitions() -> Outcome {
    let mut o = Outcome::new(3, "sympartition characterization and round trip");
    let started = Instant::now();
    let p = Partition::new(vec![7, 4, 4, 3, 2, 1, 1, 0]).expect("partition");
    o.check(is_sympartition(&p, 2, 3, 9), || "rejected for (2,3,9)".into());
    o.check(is_sympartition(&p, 4, 2, 6), || "rejected for (4,2,6)".into());
    for b in 0..=12 {
        for n in 0..=30 {
            o.check(!is_sympartition(&p, b, 1, n), || format!("accepted for ({b},1,{n})"));
        }
    }
    let (report, visited) = sympartition_round_trip(MAX_F_ROUND_TRIP);
    o.check(report.passed(), || report.line());
    o.check(visited > 0, || "no sympartitions visited".into());
    o.detail = format!("{visited} sympartitions with f <= {MAX_F_ROUND_TRIP}");
    o.timed(started, LIMIT_SYMPARTITION)
}

// i = first index where low < high, j = first m > i with equal prefix sums (1-based)
fn frame_indices(low: &Partition, high: &Partition) -> Option<(usize, usize)> {
    let len = low.len();
    let i = (1..=len).find(|&k| low.part(k) < high.part(k))?;
    let (mut sl, mut sh) = (0, 0);
    for m in 1..=len {
        sl += low.part(m);
        sh += high.part(m);
        if m > i && sl == sh {
            return Some((i, m));
        }
    }
    None
}

struct AdjacencyTallies {
    single_move: Outcome,
    frame: Outcome,
    double_break: Outcome,
    witness: Outcome,
}

fn adjacency() -> AdjacencyTallies {
    let mut single = Outcome::new(4, "adjacent pairs differ by one up move");
    let mut fr_out = Outcome::new(5, "frame prefix/suffix equality and j-sandwich");
    let mut db = Outcome::new(6, "double-break property");
    let mut wit = Outcome::new(8, "witness soundness and case selection");
    let started = Instant::now();
    let (mut pairs, mut db_cases, mut case2) = (0usize, 0usize, 0usize);
    for n in 0..=MAX_N_ADJACENCY {
        for b in B_ADJACENCY {
            let t = OrderTable::new(n, b);
            for (lo, hi) in t.adjacent_classes() {
                for a in t.members(lo) {
                    for c in t.members(hi) {
                        pairs += 1;
                        let (low, high) = (t.kappa_of(a).unwrap(), t.kappa_of(c).unwrap());
                        match t.adjacency_move(a, c) {
                            Ok(m) => single.check(low.up(m).as_ref() == Ok(high), || {
                                format!("b={b}: {m} does not map {low} to {high}")
                            }),
                            Err(e @ Error::NoSingleMove(..)) => single.check(false, || format!("tripwire: {e}")),
                            Err(e) => single.check(false, || e.to_string()),
                        }
                        let Some((i, j)) = frame_indices(low, high) else {
                            fr_out.check(false, || format!("no frame for {low} < {high}"));
                            continue;
                        };
                        let len = low.len();
                        fr_out.check((1..i).all(|k| low.part(k) == high.part(k)), || {
                            format!("{low}, {high} differ before {i}")
                        });
                        fr_out.check((j + 1..=len).all(|k| low.part(k) == high.part(k)), || {
                            format!("{low}, {high} differ after {j}")
                        });
                        fr_out.check(
                            low.part(j) > high.part(j)
                                && high.part(j) >= high.part(j + 1)
                                && high.part(j + 1) >= low.part(j + 1),
                            || format!("sandwich fails at j={j} for {low} < {high}"),
                        );
                        match frame(low, high) {
                            Ok(f) => {
                                fr_out.check(f.i == i && f.j == j, || format!("frame ({},{}) != ({i},{j})", f.i, f.j));
                                if (i..j).all(|m| high.gap(m) <= 1) {
                                    db_cases += 1;
                                    // break point: both neighbouring gaps positive, index 1 open on the left
                                    let breaks = (i..j)
                                        .filter(|&k| (k == 1 || high.gap(k - 1) >= 1) && high.gap(k) >= 1)
                                        .count();
                                    db.check(breaks >= 2, || format!("{high} on [{i},{}]: {breaks} break points", j - 1));
                                    db.check(verify_double_break(high, &f) == Ok(true), || {
                                        format!("library disagrees on {high}")
                                    });
                                } else {
                                    db.check(
                                        matches!(verify_double_break(high, &f), Err(Error::PreconditionViolated(_))),
                                        || format!("precondition not reported for {high}"),
                                    );
                                }
                            }
                            Err(e) => fr_out.check(false, || e.to_string()),
                        }
                        match witness_step_in(&t, a, c) {
                            Ok(w) => {
                                let j1 = single_move(low, high).map_or(2, |m| m.k2());
                                let equal = low.part(j1 - 1) == low.part(j1);
                                case2 += usize::from(w.transposed);
                                wit.check(w.transposed == equal, || format!("b={b}: wrong case for {a} < {c}"));
                                wit.check(w.l <= n && is_sympartition(&w.kappa_nu, b, w.width, n - w.l), || {
                                    format!("b={b}: {} not a sympartition", w.kappa_nu)
                                });
                                wit.check(w.validate(a, c, b).is_ok(), || format!("b={b}: {a} < {c} invalid"));
                            }
                            Err(e) => wit.check(false, || format!("b={b}: {a} < {c}: {e}")),
                        }
                    }
                }
            }
        }
    }
    let took = started.elapsed();
    single.check(pairs > 0, || "no adjacent pairs".into());
    db.check(db_cases > 0, || "hypothesis never met".into());
    single.detail = format!("{pairs} pairs, n <= {MAX_N_ADJACENCY}, b <= 4");
    db.detail = format!("{db_cases} pairs meet the gap hypothesis");
    wit.detail = format!("{case2} transposed-case witnesses");
    single.check(took < LIMIT_ADJACENCY, || format!("took {took:?}"));
    single.elapsed = Some((took, LIMIT_ADJACENCY));
    AdjacencyTallies {
        single_move: single,
        frame: fr_out,
        double_break: db,
        witness: wit,
    }
}

fn oracle_equivalence() -> Outcome {
    let mut o = Outcome::new(7, "dominance equals the induction preorder");
    let started = Instant::now();
    let mut compared = 0usize;
    for b in 0..=MAX_N_ORACLE {
        let mut seeded = PreorderOracle::new(b);
        let mut bare = PreorderOracle::without_family_seed(b);
        for n in 0..=MAX_N_ORACLE {
            if b > 3 && b != n {
                continue;
            }
            let dom = preceq_relation(n, b);
            compared += dom.len() * dom.len();
            for (name, oracle) in [("seeded", &mut seeded), ("bare", &mut bare)] {
                let diff = oracle.relation(n).disagreements(&dom);
                o.check(diff.is_empty(), || {
                    format!("{name}, n={n}, b={b}: {} disagreements, e.g. {:?}", diff.len(), diff[0])
                });
            }
        }
    }
    o.detail = format!("{compared} ordered pairs, 0 disagreements required");
    o.timed(started, LIMIT_ORACLE)
}

fn monotonicity() -> Outcome {
    let mut o = Outcome::new(9, "a decreases along dominance; truncation shifts a");
    let started = Instant::now();
    for n in 0..=MAX_N_ADJACENCY {
        for b in B_ADJACENCY {
            let t = OrderTable::new(n, b);
            let all = t.bipartitions();
            let a: Vec<usize> = all.iter().map(|x| a_value(x, b)).collect();
            for (x, ax) in all.iter().zip(&a) {
                for (y, ay) in all.iter().zip(&a) {
                    if t.leq(x, y).unwrap() {
                        o.check(ax >= ay, || format!("b={b}: {x} <= {y} but a {ax} < {ay}"));
                    }
                }
            }
        }
    }
    for k in 0..MAX_N_ADJACENCY {
        for b in B_ADJACENCY {
            for nu in enumerate_bipartitions(k) {
                for l in 1..=MAX_N_ADJACENCY - k {
                    match truncated_targets(&nu, l, b) {
                        Ok(targets) => {
                            for mu in targets {
                                o.check(a_value(&mu, b) == a_value(&nu, b) + l * (l - 1) / 2, || {
                                    format!("b={b}: a({mu}) vs a({nu}), l={l}")
                                });
                            }
                        }
                        Err(e) => o.check(false, || e.to_string()),
                    }
                }
            }
        }
    }
    o.timed(started, LIMIT_MONOTONE)
}

fn asymptotic() -> Outcome {
    let mut o = Outcome::new(10, "b = n gives singleton families");
    let started = Instant::now();
    for n in 0..=MAX_N_ADJACENCY {
        let t = family_table(n, n);
        o.check(t.len() == enumerate_bipartitions(n).len(), || {
            format!("n={n}: {} families", t.len())
        });
    }
    o.timed(started, LIMIT_ASYMPTOTIC)
}

fn type_a() -> Outcome {
    let mut o = Outcome::new(11, "type A oracle and a-values");
    let started = Instant::now();
    for n in 0..=MAX_N_ORACLE {
        let diff = preceq_type_a_oracle(n).disagreements(&dominance_relation_type_a(n));
        o.check(diff.is_empty(), || format!("n={n}: {} disagreements", diff.len()));
    }
    for n in 0..=10 {
        for p in Partition::all_of(n) {
            let direct: usize = p.parts().iter().enumerate().map(|(i, x)| i * x).sum();
            o.check(a_value_type_a(&p) == direct, || format!("a({p})"));
        }
    }
    o.timed(started, LIMIT_TYPE_A)
}

fn determinism() -> Outcome {
    let mut o = Outcome::new(12, "verify output is byte-identical across runs");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_typeb"))
            .args(["verify", "--max-n", "6", "--b-list", "0,1,2,3", "--oracle"])
            .output()
            .expect("run typeb")
    };
    let (first, second) = (run(), run());
    o.check(first.status.code() == Some(0), || format!("exit {:?}", first.status.code()));
    o.check(second.status.code() == Some(0), || format!("exit {:?}", second.status.code()));
    o.check(!first.stdout.is_empty() && first.stdout == second.stdout, || "outputs differ".into());
    o
}

fn main() -> ExitCode {
    let adj = adjacency();
    let outcomes = vec![
        worked_symbol(),
        b3_table(),
        sympartitions(),
        adj.single_move,
        adj.frame,
        adj.double_break,
        oracle_equivalence(),
        adj.witness,
        monotonicity(),
        asymptotic(),
        type_a(),
        determinism(),
    ];
    let mut failed = 0;
    for o in &outcomes {
        println!("{}", o.line());
        failed += usize::from(!o.passed());
    }
    println!("acceptance: {} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
