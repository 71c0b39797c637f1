use std::sync::Arc;
use std::time::Instant;

use gminor_core::checks::{complex_suite, functoriality};
use gminor_core::complex::ComplexKind;
use gminor_core::families::{corpus, enumerate_graphs, EdgeModule, HomologyModule, PrincipalProjective};
use gminor_core::Graph;

#[test]
fn corpus_sizes() {
    let counts: Vec<usize> = (1..=6).map(|e| enumerate_graphs(e, false).unwrap().len()).collect();
    // connected multigraphs with loops by edge count: 2, 4, 11, 30, 95, 328
    assert_eq!(counts, vec![2, 6, 17, 47, 142, 470]);
    let simple: Vec<usize> = (1..=6).map(|e| enumerate_graphs(e, true).unwrap().len()).collect();
    // connected simple graphs by edge count: 1, 1, 3, 5, 12, 30
    assert_eq!(simple, vec![1, 2, 5, 10, 22, 52]);
}

#[test]
fn complex_properties_on_corpus() {
    let start = Instant::now();
    let graphs = corpus(6, false).unwrap();
    let kinds = [ComplexKind::Matching, ComplexKind::DMatching(2), ComplexKind::FlagOfLineGraph];
    let failures = complex_suite(&graphs, &kinds, &[2, 3, 5, 7]).unwrap();
    eprintln!("{} graphs in {:?}", graphs.len(), start.elapsed());
    assert!(failures.is_empty(), "{failures:?}");
}

fn small_graphs() -> Vec<Arc<Graph>> {
    let mut out = vec![Arc::new(Graph::point())];
    out.extend(enumerate_graphs(3, false).unwrap().into_iter().map(Arc::new));
    out
}

#[test]
fn homology_is_functorial() {
    let graphs = small_graphs();
    for degree in [0, 1] {
        for reduced in [false, true] {
            let m = HomologyModule {
                kind: ComplexKind::Matching,
                degree,
                reduced,
            };
            let t = functoriality(&m, &graphs).unwrap();
            assert!(t.compositions > 0);
            assert!(t.failures.is_empty(), "{:?}", t.failures);
        }
    }
}

#[test]
fn edge_module_and_projectives_are_functorial() {
    let graphs = small_graphs();
    assert!(functoriality(&EdgeModule, &graphs).unwrap().failures.is_empty());
    let p = PrincipalProjective {
        target: Arc::new(Graph::point()),
    };
    assert!(functoriality(&p, &graphs).unwrap().failures.is_empty());
}
