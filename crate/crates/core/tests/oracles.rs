use std::collections::BTreeSet;

use hyperturan::{
    canonical_form, contains_expansion, contains_subhypergraph, ex_graph_edges, ex_hypergraph, expand, free_classes,
    Budget, Forbidden, Graph, UniformHypergraph,
};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
        .collect()
}

fn from_pick(n: usize, r: usize, all: &[Vec<usize>], pick: u64) -> UniformHypergraph {
    let edges: Vec<&Vec<usize>> = all.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, e)| e).collect();
    UniformHypergraph::new(n, r, edges).unwrap()
}

fn has_triangle(g: &UniformHypergraph) -> bool {
    subsets(g.n(), 3)
        .iter()
        .any(|t| g.contains_edge(&[t[0], t[1]]) && g.contains_edge(&[t[0], t[2]]) && g.contains_edge(&[t[1], t[2]]))
}

#[test]
fn level_enumeration_matches_labelled_filtering() {
    let k3 = Graph::complete(3).unwrap();
    for n in 1..=6 {
        let pairs = subsets(n, 2);
        let mut classes = BTreeSet::new();
        let mut best = 0;
        for pick in 0u64..1 << pairs.len() {
            let g = from_pick(n, 2, &pairs, pick);
            if !has_triangle(&g) {
                best = best.max(g.edge_count());
                classes.insert(canonical_form(&g).unwrap());
            }
        }
        let (found, exhaustive) =
            free_classes(n, 2, &[Forbidden::Subgraph(k3.hypergraph().clone())], &Budget::default()).unwrap();
        assert!(exhaustive);
        let keys: BTreeSet<_> = found.iter().map(|h| canonical_form(h).unwrap()).collect();
        assert_eq!(keys, classes, "n = {n}");
        assert_eq!(found.len(), classes.len());
        let res = ex_graph_edges(n, std::slice::from_ref(&k3), &Budget::default()).unwrap();
        assert_eq!(res.value as usize, best, "n = {n}");
    }
}

#[test]
fn ex3_six_k3_by_subset_enumeration() {
    let k3 = Graph::complete(3).unwrap();
    let triples = subsets(6, 3);
    assert_eq!(triples.len(), 20);
    let mut free_ten = false;
    let mut free_eleven = false;
    for pick in 0u64..1 << 20 {
        let size = pick.count_ones();
        if size != 10 && size != 11 {
            continue;
        }
        if size == 10 && free_ten {
            continue;
        }
        let h = from_pick(6, 3, &triples, pick);
        if contains_expansion(&h, &k3, 3).unwrap().is_none() {
            if size == 10 {
                free_ten = true;
            } else {
                free_eleven = true;
                break;
            }
        }
    }
    assert!(free_ten);
    assert!(!free_eleven);
    assert_eq!(ex_hypergraph(6, 3, &k3, &Budget::default()).unwrap().value, 10);
}

#[test]
fn exhaustive_values_agree_between_searches() {
    let cores =
        [Graph::complete(3).unwrap(), Graph::path(3).unwrap(), Graph::matching(2).unwrap(), Graph::star(3).unwrap()];
    for f in &cores {
        for n in 3..=6 {
            let branch = ex_hypergraph(n, 3, f, &Budget::default()).unwrap();
            let (classes, done) = free_classes(n, 3, &[Forbidden::Expansion(f.clone())], &Budget::default()).unwrap();
            assert!(branch.exhaustive && done);
            let best = classes.iter().map(UniformHypergraph::edge_count).max().unwrap() as u64;
            assert_eq!(branch.value, best, "F = {f:?}, n = {n}");
        }
    }
}

#[test]
fn witnesses_avoid_the_literal_expansion() {
    for f in [Graph::complete(3).unwrap(), Graph::path(3).unwrap(), Graph::matching(2).unwrap()] {
        let literal = expand(&f, 3).unwrap();
        for n in 4..=7 {
            let res = ex_hypergraph(n, 3, &f, &Budget::default()).unwrap();
            assert_eq!(res.witness.edge_count() as u64, res.value);
            assert!(!contains_subhypergraph(&res.witness, &literal).unwrap(), "F = {f:?}, n = {n}");
        }
    }
}

#[test]
fn parallel_searches_return_identical_results() {
    let k3 = Graph::complete(3).unwrap();
    for n in 5..=7 {
        let a = ex_hypergraph(n, 3, &k3, &Budget::default()).unwrap();
        let b = ex_hypergraph(n, 3, &k3, &Budget::default().with_parallel(true)).unwrap();
        assert_eq!((a.value, &a.witness), (b.value, &b.witness));
    }
    let k4 = Graph::complete(4).unwrap();
    let a = ex_graph_edges(7, std::slice::from_ref(&k4), &Budget::default()).unwrap();
    let b = ex_graph_edges(7, std::slice::from_ref(&k4), &Budget::default().with_parallel(true)).unwrap();
    assert_eq!((a.value, &a.witness), (b.value, &b.witness));
}
