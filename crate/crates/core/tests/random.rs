use ramsey_core::density::{parse_rational, Rational};
use ramsey_core::random::{
    format_sig9, run_experiment, sample_gnp, sample_stream, threshold_graph, to_csv_string,
    uniform_table, ExperimentConfig,
};
use ramsey_core::spec::build;
use ramsey_core::Error;

fn cs(list: &[&str]) -> Vec<Rational> {
    list.iter().map(|s| parse_rational(s).unwrap()).collect()
}

#[test]
fn gnp_mean_edge_count() {
    // E[e(G(10, 0.3))] = 45 * 0.3 = 13.5, variance 45 * 0.3 * 0.7.
    let samples = 10_000;
    let total: usize = (0..samples)
        .map(|i| {
            sample_gnp(10, 0.3, &mut sample_stream(99, 10, i))
                .unwrap()
                .edge_count()
        })
        .sum();
    let mean = total as f64 / samples as f64;
    let se = (45.0 * 0.3 * 0.7 / samples as f64).sqrt();
    assert!((mean - 13.5).abs() < 3.0 * se, "mean {mean}");
}

#[test]
fn streams_are_deterministic_and_distinct() {
    let a = uniform_table(12, &mut sample_stream(5, 12, 0));
    let b = uniform_table(12, &mut sample_stream(5, 12, 0));
    let c = uniform_table(12, &mut sample_stream(5, 12, 1));
    let d = uniform_table(12, &mut sample_stream(6, 12, 0));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_ne!(a, d);
    assert_eq!(a.len(), 66);
}

#[test]
fn threshold_graphs_are_nested() {
    let table = uniform_table(15, &mut sample_stream(1, 15, 3));
    let mut prev = threshold_graph(15, &table, 0.0);
    assert_eq!(prev.edge_count(), 0);
    for p in [0.1, 0.2, 0.5, 0.9, 1.0] {
        let g = threshold_graph(15, &table, p);
        assert!(prev.is_labeled_subgraph_of(&g));
        prev = g;
    }
    assert_eq!(prev.edge_count(), 105);
}

#[test]
fn experiment_is_reproducible_and_monotone() {
    let k3 = build("K3").unwrap();
    let config = ExperimentConfig::new(
        k3.clone(),
        k3,
        vec![8, 10],
        cs(&["0.5", "1", "2", "4"]),
        40,
        11,
    );
    let a = run_experiment(&config).unwrap();
    let b = run_experiment(&config).unwrap();
    assert_eq!(to_csv_string(&a).unwrap(), to_csv_string(&b).unwrap());
    assert_eq!(a.cells.len(), 8);
    assert!(a.coupled.iter().all(|s| s.is_monotone()));
    for n in [8, 10] {
        let row: Vec<usize> = a
            .cells
            .iter()
            .filter(|c| c.n == n)
            .map(|c| c.hits)
            .collect();
        assert!(row.windows(2).all(|w| w[0] <= w[1]), "n = {n}: {row:?}");
    }
    // c = 4 at n = 10 gives p = 1: K10 always arrows.
    let last = a.cells.last().unwrap();
    assert_eq!((last.p, last.hits), (1.0, 40));
}

#[test]
fn csv_layout() {
    let k3 = build("K3").unwrap();
    let config = ExperimentConfig::new(k3.clone(), k3, vec![6], cs(&["1/2"]), 3, 4);
    let text = to_csv_string(&run_experiment(&config).unwrap()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,c,p,samples,hits,misses,unknowns,estimate,seed");
    assert!(lines[1].starts_with("6,0.500000000,0.204124145,3,"));
    assert!(lines[1].ends_with(",4"));
}

#[test]
fn sig9_formatting() {
    assert_eq!(format_sig9(0.1), "0.100000000");
    assert_eq!(format_sig9(2.0), "2.00000000");
    assert_eq!(format_sig9(123.456), "123.456000");
    assert_eq!(format_sig9(0.0), "0");
    assert_eq!(format_sig9(f64::NAN), "nan");
    assert_eq!(format_sig9(9.9999999999), "10.0000000");
}

#[test]
fn config_validation() {
    let k3 = build("K3").unwrap();
    let p3 = build("P3").unwrap();
    let err = |g, h, ns: Vec<usize>, c: &[&str], samples| {
        run_experiment(&ExperimentConfig::new(g, h, ns, cs(c), samples, 0)).unwrap_err()
    };
    assert!(matches!(
        err(p3.clone(), k3.clone(), vec![8], &["1"], 5),
        Error::Acyclic
    ));
    assert!(matches!(
        err(k3.clone(), k3.clone(), vec![2], &["1"], 5),
        Error::Config(_)
    ));
    assert!(matches!(
        err(k3.clone(), k3.clone(), vec![30], &["1"], 5),
        Error::Config(_)
    ));
    assert!(matches!(
        err(k3.clone(), k3.clone(), vec![8], &["0"], 5),
        Error::Config(_)
    ));
    assert!(matches!(
        err(k3.clone(), k3.clone(), vec![8], &["1"], 0),
        Error::Config(_)
    ));
    assert!(matches!(
        err(k3.clone(), k3, vec![8], &[], 5),
        Error::Config(_)
    ));
}
