mod common;

use std::collections::BTreeSet;

use hyperc::format::{read_edge_list, read_labels, write_edge_list, write_labels};
use hyperc::ingest::{from_ngrams, from_transactions, prepare, NgramOptions, TransactionMode, TransactionOptions, TransactionRecord};
use hyperc::{is_connected, Hypergraph};
use proptest::prelude::*;

fn words() -> impl Strategy<Value = Vec<Vec<String>>> {
    prop::collection::vec(prop::collection::vec("[a-f]", 1..7), 1..25)
}

fn label_sets(h: &Hypergraph, labels: &hyperc::NodeLabelMap) -> BTreeSet<BTreeSet<String>> {
    h.edges().map(|e| e.iter().map(|&v| labels.label(v).unwrap().to_owned()).collect()).collect()
}

fn opts(m: usize, mode: TransactionMode) -> TransactionOptions {
    TransactionOptions { m, mode, weighted: false, lowercase: false }
}

proptest! {
    #[test]
    fn subsets_are_covered_by_a_record(records in words(), m in 2usize..=4) {
        let recs: Vec<TransactionRecord> = records.iter().map(|r| TransactionRecord::new(r.clone())).collect();
        if let Ok(b) = from_transactions::<f64, _>(recs, &opts(m, TransactionMode::Subsets)) {
            let sets: Vec<BTreeSet<&str>> = records.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
            for e in label_sets(&b.hypergraph, &b.labels) {
                prop_assert!(sets.iter().any(|s| e.iter().all(|w| s.contains(w.as_str()))));
            }
        }
    }

    #[test]
    fn exact_edges_are_whole_records(records in words(), m in 2usize..=4) {
        let recs: Vec<TransactionRecord> = records.iter().map(|r| TransactionRecord::new(r.clone())).collect();
        if let Ok(b) = from_transactions::<f64, _>(recs, &opts(m, TransactionMode::Exact)) {
            let sets: Vec<BTreeSet<String>> = records.iter().map(|r| r.iter().cloned().collect()).collect();
            for e in label_sets(&b.hypergraph, &b.labels) {
                prop_assert!(sets.iter().any(|s| s.len() == m && *s == e));
            }
        }
    }

    #[test]
    fn canonical_files_round_trip(records in words(), m in 2usize..=3) {
        let recs: Vec<TransactionRecord> = records.iter().map(|r| TransactionRecord::new(r.clone())).collect();
        if let Ok(b) = from_transactions::<f64, _>(recs, &opts(m, TransactionMode::Subsets)) {
            let (mut hg, mut tsv) = (Vec::new(), Vec::new());
            write_edge_list(&mut hg, &b.hypergraph).unwrap();
            write_labels(&mut tsv, &b.labels).unwrap();
            let h: Hypergraph = read_edge_list(&hg[..]).unwrap();
            let labels = read_labels(&tsv[..]).unwrap();
            prop_assert_eq!(label_sets(&h, &labels), label_sets(&b.hypergraph, &b.labels));
            prop_assert_eq!(&h, &b.hypergraph);
        }
    }

    #[test]
    fn labels_follow_first_appearance(records in words()) {
        let text: String = records.iter().filter(|r| r.len() == 3).map(|r| r.join(" ") + "\n").collect();
        if let Ok(b) = from_ngrams::<f64, _>(text.as_bytes(), &NgramOptions::new(3)) {
            let mut seen: Vec<String> = Vec::new();
            for line in text.lines() {
                let ws: Vec<&str> = line.split(' ').collect();
                if ws.iter().collect::<BTreeSet<_>>().len() == 3 {
                    for w in ws {
                        if !seen.iter().any(|s| s == w) {
                            seen.push(w.to_owned());
                        }
                    }
                }
            }
            prop_assert_eq!(b.labels.labels(), &seen[..]);
        }
    }
}

#[test]
fn prepare_restricts_to_largest_component() {
    let text = "a b c\nb c d\nx y z\n";
    let b = from_ngrams::<f64, _>(text.as_bytes(), &NgramOptions::new(3)).unwrap();
    let p = prepare(&b.hypergraph, &b.labels).unwrap();
    assert!(is_connected(&p.hypergraph));
    assert_eq!(p.labels.labels(), ["a", "b", "c", "d"]);
    assert_eq!((p.stats.nodes, p.stats.edges, p.stats.nnz), (4, 2, 12));
}
