use maxnil_core::canon::is_isomorphic;
use maxnil_core::cliquesum::{clique_sum, CliqueSumSpec};
use maxnil_core::connectivity::{components_without, is_vertex_cut};
use maxnil_core::embed::is_planar;
use maxnil_core::families::*;
use maxnil_core::{FamilyError, Graph};

fn contract_named(g: &Graph, a: &str, b: &str) -> Graph {
    g.contract_edge(g.vertex(a).unwrap(), g.vertex(b).unwrap()).unwrap()
}

/// Contracts `x z1 ... zi` into `x`.
fn contract_path(g: &Graph, i: usize) -> Graph {
    let mut h = g.clone();
    for j in 1..=i {
        h = contract_named(&h, "x", &format!("z{j}"));
    }
    h
}

#[test]
fn jorgensen_counts() {
    for i in 0..=6 {
        let g = jorgensen_family(i).unwrap();
        assert_eq!((g.order(), g.size()), (8 + i, 3 * (8 + i) - 3), "J_{i}");
    }
}

#[test]
fn g_family_counts_and_contractions() {
    let g = graph_g().unwrap();
    assert_eq!((g.order(), g.size()), (10, 25));
    let j = contract_named(&contract_named(&g, "a", "d"), "b", "c");
    assert!(is_isomorphic(&j, &jorgensen_graph().unwrap()));
    for i in 1..=5 {
        let gi = family_3n5(i).unwrap();
        assert_eq!((gi.order(), gi.size()), (10 + i, 3 * (10 + i) - 5), "G_{i}");
        assert!(is_isomorphic(&contract_path(&gi, i), &g));
        let ji = contract_named(&contract_named(&gi, "a", "d"), "b", "c");
        assert!(is_isomorphic(&ji, &jorgensen_family(i).unwrap()));
    }
}

#[test]
fn jorgensen_family_contracts_to_base() {
    let j = jorgensen_graph().unwrap();
    for i in 1..=4 {
        assert!(is_isomorphic(&contract_path(&jorgensen_family(i).unwrap(), i), &j));
    }
}

#[test]
fn b_neighbourhood_is_a_sparse_cut() {
    let g = graph_g().unwrap();
    let nb = g.neighbors(g.vertex("b").unwrap()).to_vec();
    assert_eq!(nb.len(), 4);
    assert!(is_vertex_cut(&g, &nb));
    assert_eq!(g.induced_subgraph(&nb).0.size(), 2);
}

#[test]
fn q13_shape() {
    let q = q13_3().unwrap();
    assert_eq!((q.order(), q.size()), (13, 26));
    assert!(q.is_triangle_free());
    assert!(!q.is_triangular_graph());
    for v in 0..13 {
        let nb = q.neighbors(v).to_vec();
        assert_eq!(q.induced_subgraph(&nb).0.size(), 0);
        assert!(components_without(&q, &nb).len() >= 2);
    }
}

#[test]
fn q_extension_counts_and_triangularity() {
    for n in 13..=39 {
        let g = q_extension(n, None).unwrap();
        assert_eq!((g.order(), g.size()), (n, 2 * n));
        assert_eq!(g.is_triangular_graph(), n == 39, "n = {n}");
    }
    assert_eq!(q_extension(13, None).unwrap(), q13_3().unwrap());
    assert!(matches!(q_extension(40, None), Err(FamilyError::OutOfRange { .. })));
    assert!(matches!(q_extension(12, None), Err(FamilyError::OutOfRange { .. })));
    let e = q13_3().unwrap().edges()[3];
    assert!(matches!(
        q_extension(15, Some(&[e, e])),
        Err(FamilyError::RepeatedEdge(_))
    ));
    assert!(matches!(
        q_extension(14, Some(&[(0, 6)])),
        Err(FamilyError::NotAnEdge(_))
    ));
}

#[test]
fn q_extension_is_repeated_ear_sum() {
    let q = q13_3().unwrap();
    let mut g = q.clone();
    for &(a, b) in q.edges().iter().take(4) {
        let spec = CliqueSumSpec::new(g, Graph::complete(3), vec![(a, 0), (b, 1)]).unwrap();
        g = clique_sum(&spec);
    }
    assert_eq!((g.order(), g.size()), (17, 34));
    assert!(is_isomorphic(&g, &q_extension(17, None).unwrap()));
}

#[test]
fn h_k_counts() {
    assert!(is_isomorphic(&h_k(1).unwrap(), &q13_3().unwrap()));
    for k in 1..=5 {
        let h = h_k(k).unwrap();
        assert_eq!((h.order(), h.size()), (11 * k + 2, 25 * k + 1));
        assert!(h.non_triangular_edges().len() == h.size());
    }
    assert_eq!((h_k(2).unwrap().order(), h_k(2).unwrap().size()), (24, 51));
}

#[test]
fn h_k_is_an_edge_sum_of_copies() {
    let q = q13_3().unwrap();
    let mut g = q.clone();
    for _ in 1..3 {
        let spec = CliqueSumSpec::new(g, q.clone(), vec![(0, 0), (1, 1)]).unwrap();
        g = clique_sum(&spec);
    }
    assert!(is_isomorphic(&g, &h_k(3).unwrap()));
}

#[test]
fn theorem_graph_formula() {
    for n in 13usize..=120 {
        let k = (n - 3).div_ceil(36);
        let g = theorem_main_graph(n).unwrap();
        assert_eq!(g.order(), n);
        assert_eq!(g.size(), 2 * n + 3 * k - 3, "n = {n}");
        assert!(BoundsRow::of_graph("t", &g, None).below_target(), "n = {n}");
    }
    assert_eq!(theorem_main_graph(13).unwrap().size(), 26);
    assert_eq!(theorem_main_graph(39).unwrap().size(), 78);
    assert_eq!(theorem_main_graph(40).unwrap().size(), 83);
}

#[test]
fn fig6_is_sum_of_two_k6_minus_edge() {
    let g = k5_sum_example().unwrap();
    assert_eq!((g.order(), g.size()), (7, 18));
    let k6e = Graph::complete(6).delete_edge(4, 5).unwrap();
    // the private vertices miss different core vertices
    let spec = CliqueSumSpec::new(k6e.clone(), k6e.clone(), (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
    assert!(is_isomorphic(&clique_sum(&spec), &g));
    let same = CliqueSumSpec::new(k6e.clone(), k6e, (0..5).map(|i| (i, i)).collect()).unwrap();
    assert!(!is_isomorphic(&clique_sum(&same), &g));
}

#[test]
fn fig7_shape() {
    let h = fig7_base().unwrap();
    assert!(is_planar(&h));
    assert_eq!(h.size(), 3 * 9 - 6);
    let g = fig7_graph().unwrap();
    assert_eq!(g.order(), 11);
    let v = g.vertex("v").unwrap();
    assert_eq!(g.degree(v), 9);
    for n in 11..=16 {
        let f = fig7_family(n).unwrap();
        assert_eq!(f.order(), n);
        // H grows by a stacked triangulation: 3 edges per new vertex, plus one to v
        assert_eq!(f.size(), 21 + 9 + 3 + 4 * (n - 11));
        let hv: Vec<usize> = (0..n)
            .filter(|&x| f.label(x) != Some("w") && f.label(x) != Some("v"))
            .collect();
        let part = f.induced_subgraph(&hv).0;
        assert!(is_planar(&part));
        assert_eq!(part.size(), 3 * part.order() - 6);
    }
    assert!(fig7_family(10).is_err());
}

#[test]
fn drawn_embeddings_have_the_right_hosts() {
    for i in 0..3 {
        let emb = jorgensen_embedding(i).unwrap();
        assert_eq!(emb.host().order(), 6 + i);
        let emb = family_3n5_embedding(i).unwrap();
        assert_eq!(emb.host().order(), 8 + i);
        assert!(emb.euler_characteristics().iter().all(|&c| c == 2));
    }
}

#[test]
fn family_params_dispatch() {
    let g = FamilyParams::G3n5(2).build().unwrap();
    assert_eq!((g.order(), g.size()), (12, 31));
    assert_eq!(FamilyParams::G3n5(0).build().unwrap(), graph_g().unwrap());
    assert_eq!(FamilyParams::HK(2).build().unwrap().size(), 51);
    assert!(FamilyParams::TheoremMain(12).build().is_err());
}
