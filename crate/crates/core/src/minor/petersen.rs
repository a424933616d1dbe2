use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::search::PatternSet;
use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::graph::Graph;

/// All graphs reachable from `seed` by triangle-to-Y and Y-to-triangle
/// moves, one per isomorphism class, sorted by order and canonical form.
pub fn delta_wye_closure(seed: &Graph) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut queue = vec![seed.clone().unlabeled()];
    seen.insert(canonical_form(seed), seed.clone().unlabeled());
    while let Some(g) = queue.pop() {
        let mut next = Vec::new();
        let n = g.order();
        for a in 0..n {
            for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
                for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                    if g.has_edge(a, c) {
                        next.push(g.triangle_to_y(a, b, c).expect("triangle").0);
                    }
                }
            }
            if g.degree(a) == 3 {
                next.push(g.y_to_triangle(a).expect("degree three"));
            }
        }
        for h in next {
            let form = canonical_form(&h);
            if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(form) {
                slot.insert(h.clone());
                queue.push(h);
            }
        }
    }
    let mut out: Vec<(usize, CanonicalForm, Graph)> = seen.into_iter().map(|(f, g)| (g.order(), f, g)).collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    out.into_iter().map(|(_, _, g)| g).collect()
}

/// The seven forbidden minors for linkless embeddability, K6 first.
pub fn petersen_family() -> Vec<Graph> {
    petersen_patterns().graphs().to_vec()
}

pub(crate) fn petersen_patterns() -> &'static PatternSet {
    static SET: OnceLock<PatternSet> = OnceLock::new();
    SET.get_or_init(|| PatternSet::new(delta_wye_closure(&Graph::complete(6))))
}

pub(crate) fn k6_pattern() -> &'static PatternSet {
    static SET: OnceLock<PatternSet> = OnceLock::new();
    SET.get_or_init(|| PatternSet::new(vec![Graph::complete(6)]))
}

/// Conventional name of a Petersen-family member: `K6`, `K3,3,1`,
/// `K4,4-e`, `Petersen`, or `G7`, `G8`, `G9` for the rest.
pub fn petersen_name(g: &Graph) -> String {
    let n = g.order();
    if is_isomorphic(g, &Graph::complete(6)) {
        return "K6".into();
    }
    if is_isomorphic(g, &Graph::complete_multipartite(&[3, 3, 1])) {
        return "K3,3,1".into();
    }
    let k44 = Graph::complete_bipartite(4, 4);
    let (a, b) = k44.edges()[0];
    if is_isomorphic(g, &k44.delete_edge(a, b).unwrap()) {
        return "K4,4-e".into();
    }
    if n == 10 && g.size() == 15 && g.girth() == Some(5) {
        return "Petersen".into();
    }
    format!("G{n}")
}
