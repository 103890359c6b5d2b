mod common;

use common::{all_subgraph_max, Frac};
use proptest::prelude::*;
use ramsey_core::density::{
    density_report, m2, m2_pair, parse_rational, rho, threshold_p, Rational,
};
use ramsey_core::spec::build;
use ramsey_core::{Error, Graph};

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn frac(x: Frac) -> Rational {
    Rational::new(x.0, x.1)
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

#[test]
fn frozen_values() {
    let m2v = |s: &str| m2(&build(s).unwrap()).unwrap().unwrap().value;
    let rhov = |s: &str| rho(&build(s).unwrap()).unwrap().value;
    // Values confirmed by the all-subgraphs oracle in `oracle_on_named_graphs`.
    assert_eq!(m2v("K3"), r(2, 1));
    assert_eq!(m2v("K4"), r(5, 2));
    assert_eq!(m2v("C4"), r(3, 2));
    assert_eq!(m2v("C5"), r(4, 3));
    assert_eq!(m2v("K6"), r(7, 2));
    assert_eq!(rhov("K4"), r(3, 2));
    assert_eq!(rhov("C5"), r(1, 1));
    assert_eq!(rhov("K6"), r(5, 2));
    assert_eq!(rhov("S3"), r(3, 4));
    let k3 = build("K3").unwrap();
    assert_eq!(m2_pair(&k3, &k3).unwrap().value, r(2, 1));
    // m2(K4, K3) = 6 / (2 + 1/2) = 12/5.
    let p = m2_pair(&build("K4").unwrap(), &k3).unwrap();
    assert_eq!((p.value, p.swapped), (r(12, 5), false));
    let p = m2_pair(&k3, &build("K4").unwrap()).unwrap();
    assert_eq!((p.value, p.swapped), (r(12, 5), true));
}

#[test]
fn oracle_on_named_graphs() {
    for s in ["K3", "K4", "C4", "C5", "K3+K2", "K4+C4", "S3+K3"] {
        let x = build(s).unwrap();
        let want = all_subgraph_max(&x, 3, |v, e| Frac(e - 1, v - 2)).unwrap();
        assert_eq!(m2(&x).unwrap().unwrap().value, frac(want), "{s}");
        let want = all_subgraph_max(&x, 1, |v, e| Frac(e, v)).unwrap();
        assert_eq!(rho(&x).unwrap().value, frac(want), "{s}");
    }
    // m2(K4, K3) through the oracle: 1/m2(K3) = 1/2.
    let want = all_subgraph_max(&build("K4").unwrap(), 2, |v, e| {
        Frac(2 * e, 2 * (v - 2) + 1)
    })
    .unwrap();
    assert_eq!(frac(want), r(12, 5));
}

#[test]
fn witnesses_and_tie_break() {
    // K4 ∪ K4: both copies tie; the first by vertex order is reported.
    let x = build("K4+K4").unwrap();
    let d = rho(&x).unwrap();
    assert_eq!(d.value, r(3, 2));
    assert_eq!(d.witness, vec![0, 1, 2, 3]);
    // C4 ∪ K3: attained by the triangle alone.
    let d = m2(&build("C4+K3").unwrap()).unwrap().unwrap();
    assert_eq!(d.value, r(2, 1));
    assert_eq!(d.witness.len(), 3);
}

#[test]
fn errors() {
    assert!(matches!(
        rho(&Graph::empty(0).unwrap()),
        Err(Error::EmptyGraph)
    ));
    assert_eq!(m2(&build("P4").unwrap()).unwrap(), None);
    assert!(matches!(
        m2_pair(&build("P4").unwrap(), &build("K3").unwrap()),
        Err(Error::Acyclic)
    ));
    assert!(matches!(
        rho(&Graph::empty(25).unwrap()),
        Err(Error::VertexCap { .. })
    ));
    assert!(threshold_p(&build("K3").unwrap(), &build("K3").unwrap(), 2, r(1, 1)).is_err());
    assert!(threshold_p(&build("K3").unwrap(), &build("K3").unwrap(), 10, r(0, 1)).is_err());
}

#[test]
fn threshold_probability() {
    let k3 = build("K3").unwrap();
    let p = threshold_p(&k3, &k3, 16, r(1, 1)).unwrap();
    assert!((p - 0.25).abs() < 1e-12);
    assert_eq!(threshold_p(&k3, &k3, 16, r(100, 1)).unwrap(), 1.0);
}

#[test]
fn report_and_rational_parsing() {
    let rep = density_report(&build("K4").unwrap(), Some(&build("K3").unwrap())).unwrap();
    assert_eq!(rep.rho.value, r(3, 2));
    assert_eq!(rep.m2.unwrap().value, r(5, 2));
    assert_eq!(rep.m2_pair.unwrap().value, r(12, 5));
    assert_eq!(parse_rational("0.2").unwrap(), r(1, 5));
    assert_eq!(parse_rational("5/2").unwrap(), r(5, 2));
    assert_eq!(parse_rational("3").unwrap(), r(3, 1));
    assert!(parse_rational("1e3").is_err());
    assert!(parse_rational("1/0").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn subset_optimum_equals_all_subgraphs(x in arb_graph(6)) {
        let want = all_subgraph_max(&x, 1, |v, e| Frac(e, v)).unwrap();
        prop_assert_eq!(rho(&x).unwrap().value, frac(want));
        if x.has_cycle() {
            let want = all_subgraph_max(&x, 3, |v, e| Frac(e - 1, v - 2)).unwrap();
            prop_assert_eq!(m2(&x).unwrap().unwrap().value, frac(want));
        }
    }

    #[test]
    fn monotone_under_edge_addition(x in arb_graph(8), u in 0usize..8, v in 0usize..8) {
        prop_assume!(u != v && u < x.order() && v < x.order() && !x.has_edge(u, v));
        let y = x.with_edge((u, v)).unwrap();
        prop_assert!(rho(&y).unwrap().value >= rho(&x).unwrap().value);
        if let (Some(a), Some(b)) = (m2(&x).unwrap(), m2(&y).unwrap()) {
            prop_assert!(b.value >= a.value);
        }
    }

    #[test]
    fn witness_attains_value(x in arb_graph(8)) {
        let d = rho(&x).unwrap();
        let mask = d.witness.iter().fold(0u64, |m, &v| m | 1 << v);
        prop_assert_eq!(r(x.induced_edge_count(mask) as i64, d.witness.len() as i64), d.value);
    }
}
