use typeb_core::adjacency::OrderTable;
use typeb_core::preorder::{preceq_relation, witness_step, PreorderOracle};
use typeb_core::{
    a_value, enumerate_bipartitions, family_table, is_adjacent, kappa, saturated_chain, symbol,
    Bipartition, Error, Partition,
};

fn bp(s: &str) -> Bipartition {
    s.parse().unwrap()
}

fn parts(s: &str) -> Vec<usize> {
    s.split(',').map(|x| x.parse().unwrap()).collect()
}

// (bipartition, top row, bottom row, kappa) for B_3 at b = 1, N = 3
const B3_AT_B1: [(&str, &str, &str, &str); 10] = [
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

#[test]
fn b3_symbols() {
    for (text, top, bottom, k) in B3_AT_B1 {
        let s = symbol(&bp(text), 1, 3).unwrap();
        assert_eq!(s.row2, parts(top), "{text}");
        assert_eq!(s.row1, parts(bottom), "{text}");
        assert_eq!(s.kappa().entries.parts(), parts(k).as_slice(), "{text}");
    }
}

#[test]
fn b3_families() {
    let t = family_table(3, 1);
    let mut got: Vec<Vec<String>> = t
        .families
        .iter()
        .map(|f| {
            let mut m: Vec<String> = f.members.iter().map(|x| x.to_string()).collect();
            m.sort();
            m
        })
        .collect();
    got.sort();
    let mut want: Vec<Vec<String>> = vec![
        vec!["-|2,1", "1,1,1|-", "1|1,1"],
        vec!["-|3", "2,1|-", "2|1"],
        vec!["3|-"],
        vec!["-|1,1,1"],
        vec!["1|2"],
        vec!["1,1|1"],
    ]
    .into_iter()
    .map(|f| {
        let mut f: Vec<String> = f.into_iter().map(String::from).collect();
        f.sort();
        f
    })
    .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn worked_example() {
    let s = symbol(&bp("5,1|2,2,1"), 2, 3).unwrap();
    assert_eq!(s.row2, vec![1, 3, 4]);
    assert_eq!(s.row1, vec![0, 1, 2, 4, 9]);
    let k = s.kappa().entries;
    assert_eq!(k.parts(), &[9, 4, 4, 3, 2, 1, 1, 0]);
    assert_eq!(k.size(), 24);
}

#[test]
fn asymptotic_singletons() {
    let t = family_table(3, 3);
    assert_eq!(t.len(), 10);
    assert!(t.families.iter().all(|f| f.members.len() == 1));
    assert_eq!(family_table(0, 5).len(), 1);
}

#[test]
fn hasse_extremes_for_b3() {
    let t = family_table(3, 1);
    let h = t.hasse();
    assert_eq!(h.node_count(), 6);
    let label = |v: usize| h.labels[v].0.to_string();
    assert_eq!(h.maximal().into_iter().map(label).collect::<Vec<_>>(), ["6,2,2,1,1,0,0"]);
    assert_eq!(h.minimal().into_iter().map(label).collect::<Vec<_>>(), ["3,3,2,2,1,1,0"]);
    let dot = h.to_dot("b3");
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), h.edges.len());
}

#[test]
fn a_values_of_extremes() {
    // the trivial character has a = 0; sign has a = b n + n (n - 1)
    for n in 0..6 {
        for b in 0..4 {
            let triv = Bipartition::new(Partition::new(vec![n]).unwrap(), Partition::empty());
            let sign = Bipartition::new(Partition::empty(), Partition::new(vec![1; n]).unwrap());
            assert_eq!(a_value(&triv, b), 0);
            assert_eq!(a_value(&sign, b), b * n + n * n.saturating_sub(1));
        }
    }
}

#[test]
fn errors() {
    assert!(matches!("1,2|-".parse::<Bipartition>(), Err(Error::Parse(_))));
    assert!(matches!(
        kappa(&bp("1,1|-"), 0, 1),
        Err(Error::NotAdmissible { .. })
    ));
    assert!(matches!(
        saturated_chain(&bp("2|1"), &bp("1|2"), 1),
        Err(Error::NotComparable(..))
    ));
    assert!(matches!(
        is_adjacent(&bp("1|-"), &bp("2|-"), 0),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn chain_through_b3() {
    let chain = saturated_chain(&bp("-|1,1,1"), &bp("3|-"), 1).unwrap();
    assert_eq!(chain.len(), 6);
    assert_eq!(chain.first(), Some(&bp("-|1,1,1")));
    assert_eq!(chain.last(), Some(&bp("3|-")));
    for pair in chain.windows(2) {
        assert_eq!(is_adjacent(&pair[0], &pair[1], 1), Ok(true));
        witness_step(&pair[0], &pair[1], 1).unwrap().validate(&pair[0], &pair[1], 1).unwrap();
    }
    assert_eq!(saturated_chain(&bp("2|1"), &bp("2|1"), 1).unwrap().len(), 1);
}

#[test]
fn oracle_agrees_for_b3() {
    let dom = preceq_relation(3, 1);
    let mut oracle = PreorderOracle::new(1);
    assert!(oracle.relation(3).disagreements(&dom).is_empty());
    let mut bare = PreorderOracle::without_family_seed(1);
    assert!(bare.relation(3).disagreements(&dom).is_empty());
}

#[test]
fn enumeration_sizes() {
    // coefficients of prod 1/(1-x^k)^2
    let want = [1, 2, 5, 10, 20, 36, 65, 110, 185];
    for (n, &w) in want.iter().enumerate() {
        assert_eq!(enumerate_bipartitions(n).len(), w, "n = {n}");
        assert_eq!(OrderTable::new(n, 1).bipartitions().len(), w);
    }
}
