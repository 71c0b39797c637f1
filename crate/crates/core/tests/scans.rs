use std::collections::BTreeSet;
use std::sync::Arc;

use gminor_core::canon::{brute_force_form, BruteForm};
use gminor_core::complex::ComplexKind;
use gminor_core::families::{
    corpus, dimension_bound_check, enumerate_graphs, enumerate_graphs_exhaustive, generation_scan, torsion_record, torsion_scan,
    EdgeModule, HomologyModule, NamedGraph,
};
use gminor_core::graph::standard_graph;
use gminor_core::minors::enumerate;
use gminor_core::{Graph, StandardGraph};

#[test]
fn enumeration_methods_agree_to_five_edges() {
    for simple in [false, true] {
        let grown: BTreeSet<BruteForm> = enumerate_graphs(5, simple).unwrap().iter().map(brute_force_form).collect();
        let exhaustive: BTreeSet<BruteForm> = enumerate_graphs_exhaustive(5, simple).unwrap().into_iter().collect();
        assert_eq!(grown, exhaustive);
    }
}

#[test]
fn cayley_counts() {
    let point = Arc::new(Graph::point());
    for n in 2..=5usize {
        let kn = Arc::new(standard_graph(StandardGraph::Complete(n)).unwrap());
        let count = gminor_core::minors::enumerate_with_limit(&kn, &point, 10).unwrap().len();
        assert_eq!(count, n.pow(n as u32 - 2));
    }
}

#[test]
fn hom_bound_holds_on_small_corpus() {
    let mut targets = vec![Arc::new(Graph::point())];
    targets.extend(enumerate_graphs(3, false).unwrap().into_iter().map(Arc::new));
    for t in &targets {
        let report = dimension_bound_check(t, 5).unwrap();
        assert!(report.violations().is_empty(), "{:?}", report.violations());
    }
}

#[test]
fn generation_scans() {
    let h0 = HomologyModule {
        kind: ComplexKind::Matching,
        degree: 0,
        reduced: false,
    };
    let report = generation_scan(&h0, 2, 5).unwrap();
    assert!(report.deficits().is_empty(), "{:?}", report.deficits());
    assert!(generation_scan(&EdgeModule, 1, 5).unwrap().deficits().is_empty());
    let none = generation_scan(&EdgeModule, 0, 3).unwrap();
    assert!(none.records.iter().all(|r| r.span_rank == 0));
}

#[test]
fn torsion_scan_is_relabeling_invariant() {
    let fam = corpus(5, false).unwrap();
    for g in fam.iter().step_by(7) {
        let n = g.graph.vertex_count();
        let vs: Vec<String> = (0..n).rev().map(|i| format!("x{i}")).collect();
        let es: Vec<String> = (0..g.graph.edge_count()).rev().map(|i| format!("y{i}")).collect();
        let relabeled = NamedGraph {
            name: g.name.clone(),
            graph: Arc::new(g.graph.relabeled(&vs, &es).unwrap()),
        };
        for i in 0..=2 {
            let a = torsion_record(ComplexKind::Matching, i, g, &[2, 3]).unwrap();
            let b = torsion_record(ComplexKind::Matching, i, &relabeled, &[2, 3]).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn small_simple_graphs_have_torsion_free_h1() {
    let report = torsion_scan(ComplexKind::Matching, 1, &corpus(6, true).unwrap()).unwrap();
    assert_eq!(report.observed_exponent(), 1u32.into());
    assert_eq!(report.uct_failures(), 0);
}

#[test]
fn automorphisms_are_the_self_morphisms() {
    for g in enumerate_graphs(4, false).unwrap() {
        let g = Arc::new(g);
        assert_eq!(enumerate(&g, &g).unwrap().len() as u128, g.automorphism_count().unwrap());
    }
}
