mod common;

use std::collections::BTreeSet;

use common::{brute_classes, naive_is_minimal};
use ramsey_core::canon::certificate;
use ramsey_core::enumerate::{
    catalog_density_audit, enumerate_graphs, enumerate_ramsey_minimal, is_subgraph, verify_member,
    AuditOutcome, Completeness, SearchBounds,
};
use ramsey_core::spec::build;
use ramsey_core::{Error, Graph};

fn certs<'a>(it: impl Iterator<Item = &'a Graph>) -> BTreeSet<Vec<u8>> {
    it.map(certificate).collect()
}

#[test]
fn generator_matches_brute_force_classes() {
    // Classes on exactly n vertices with an edge and no isolated vertices.
    for n in 2..=5 {
        let brute: BTreeSet<Vec<u8>> = brute_classes(n)
            .into_iter()
            .filter(|g| g.edge_count() > 0 && !g.has_isolated_vertices())
            .map(|g| certificate(&g))
            .collect();
        let generated: BTreeSet<Vec<u8>> = enumerate_graphs(&SearchBounds::new(n, 10))
            .unwrap()
            .filter(|g| g.order() == n)
            .map(|g| certificate(&g))
            .collect();
        assert_eq!(generated, brute, "n = {n}");
    }
}

#[test]
fn generator_counts_and_order() {
    let all: Vec<Graph> = enumerate_graphs(&SearchBounds::new(6, 15))
        .unwrap()
        .collect();
    // 1 + 2 + 7 + 23 + 122 graphs without isolated vertices on 2..=6 vertices.
    assert_eq!(all.len(), 155);
    assert!(all.windows(2).all(|w| w[0].order() <= w[1].order()));
    assert_eq!(certs(all.iter()).len(), all.len());
    let capped: Vec<Graph> = enumerate_graphs(&SearchBounds::new(8, 3))
        .unwrap()
        .collect();
    // K2, 2K2, P3, 3K2, P3+K2, K3, P4, S3.
    assert_eq!(capped.len(), 8);
}

#[test]
fn two_k2_catalog_matches_oracle() {
    let two = build("2K2").unwrap();
    let bounds = SearchBounds::new(8, 10);
    let cat = enumerate_ramsey_minimal(&two, &two, &bounds).unwrap();
    assert_eq!(cat.completeness, Completeness::CompleteWithinBounds);
    let oracle: BTreeSet<Vec<u8>> = enumerate_graphs(&bounds)
        .unwrap()
        .filter(|f| naive_is_minimal(f, &two, &two))
        .map(|f| certificate(&f))
        .collect();
    let frozen = certs([build("3K2").unwrap(), build("C5").unwrap()].iter());
    assert_eq!(oracle, frozen);
    assert_eq!(certs(cat.graphs()), frozen);
}

#[test]
fn small_catalogs_match_oracle() {
    for (g, h, v, e) in [
        ("P3", "P3", 6, 7),
        ("K2", "P3", 5, 5),
        ("2K2", "P3", 6, 7),
        ("K3", "K2", 5, 6),
    ] {
        let (gg, hg) = (build(g).unwrap(), build(h).unwrap());
        let bounds = SearchBounds::new(v, e);
        let cat = enumerate_ramsey_minimal(&gg, &hg, &bounds).unwrap();
        let oracle: BTreeSet<Vec<u8>> = enumerate_graphs(&bounds)
            .unwrap()
            .filter(|f| naive_is_minimal(f, &gg, &hg))
            .map(|f| certificate(&f))
            .collect();
        assert_eq!(certs(cat.graphs()), oracle, "({g}, {h})");
    }
}

#[test]
fn trivial_and_k3_catalogs() {
    let k2 = build("K2").unwrap();
    let cat = enumerate_ramsey_minimal(&k2, &k2, &SearchBounds::new(4, 4)).unwrap();
    assert_eq!(certs(cat.graphs()), certs([k2.clone()].iter()));

    let k3 = build("K3").unwrap();
    let cat = enumerate_ramsey_minimal(&k3, &k3, &SearchBounds::new(6, 15)).unwrap();
    assert!(cat
        .graphs()
        .any(|f| certificate(f) == certificate(&build("K6").unwrap())));
    let audit = catalog_density_audit(cat.graphs(), &k3, &k3).unwrap();
    assert!(audit.passed());
    assert!(audit
        .entries
        .iter()
        .all(|e| e.outcome == AuditOutcome::Pass));
}

#[test]
fn catalog_invariants() {
    for (g, h, v, e) in [
        ("2K2", "2K2", 8, 10),
        ("P3", "P3", 6, 8),
        ("K3", "K3", 7, 21),
    ] {
        let (gg, hg) = (build(g).unwrap(), build(h).unwrap());
        let cat = enumerate_ramsey_minimal(&gg, &hg, &SearchBounds::new(v, e)).unwrap();
        for (i, a) in cat.members.iter().enumerate() {
            assert!(verify_member(a, &gg, &hg), "({g}, {h}) member witness");
            for (j, b) in cat.members.iter().enumerate() {
                assert!(
                    i == j || !is_subgraph(&a.graph, &b.graph),
                    "({g}, {h}) antichain"
                );
            }
        }
        let doc = cat.document();
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            serde_json::from_str::<ramsey_core::enumerate::CatalogDocument>(&json).unwrap(),
            doc
        );
    }
}

#[test]
fn members_persist_as_bounds_grow() {
    let p3 = build("P3").unwrap();
    let mut previous = BTreeSet::new();
    for (v, e) in [(4, 4), (5, 6), (6, 8)] {
        let cat = enumerate_ramsey_minimal(&p3, &p3, &SearchBounds::new(v, e)).unwrap();
        let now = certs(cat.graphs());
        assert!(previous.is_subset(&now), "bounds ({v}, {e})");
        previous = now;
    }
}

#[test]
fn budget_limited_catalog() {
    let k3 = build("K3").unwrap();
    let mut bounds = SearchBounds::new(6, 15);
    bounds.node_budget = 2;
    let cat = enumerate_ramsey_minimal(&k3, &k3, &bounds).unwrap();
    assert_eq!(cat.completeness, Completeness::BudgetLimited);
    assert!(!cat.undecided.is_empty());
}

#[test]
fn bad_inputs() {
    let k3 = build("K3").unwrap();
    assert!(matches!(
        enumerate_ramsey_minimal(&k3, &k3, &SearchBounds::new(65, 3)),
        Err(Error::Bounds(_))
    ));
    let padded = k3.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
    assert!(matches!(
        enumerate_ramsey_minimal(&padded, &k3, &SearchBounds::new(6, 6)),
        Err(Error::Precondition(_))
    ));
}
