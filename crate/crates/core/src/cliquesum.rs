//! Clique sums and the maxnility criteria for sums over small cliques.

use serde::{Deserialize, Serialize};

use crate::connectivity::{components_without, is_minimal_cut, minimal_vertex_cuts, vertex_connectivity};
use crate::error::{CliqueSumError, GraphError};
use crate::graph::{edge, Edge, Graph};
use crate::minor::{find_subgraph, is_maxnil};

/// Two graphs and a bijection between a clique of each: pair `(a, b)`
/// identifies vertex `a` of `left` with vertex `b` of `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSumSpec {
    pub left: Graph,
    pub right: Graph,
    pub identification: Vec<(usize, usize)>,
}

fn check_range(g: &Graph, v: usize) -> Result<(), CliqueSumError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        }
        .into());
    }
    Ok(())
}

fn distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

impl CliqueSumSpec {
    pub fn new(left: Graph, right: Graph, identification: Vec<(usize, usize)>) -> Result<Self, CliqueSumError> {
        let t = identification.len();
        if !(1..=5).contains(&t) {
            return Err(CliqueSumError::BadOrder(t));
        }
        let l: Vec<usize> = identification.iter().map(|p| p.0).collect();
        let r: Vec<usize> = identification.iter().map(|p| p.1).collect();
        for (g, vs, side) in [(&left, &l, "left"), (&right, &r, "right")] {
            for &v in vs {
                check_range(g, v)?;
            }
            if !distinct(vs) || !g.is_clique(vs) {
                return Err(CliqueSumError::NotAClique { side });
            }
        }
        Ok(CliqueSumSpec {
            left,
            right,
            identification,
        })
    }

    /// Order of the shared clique.
    pub fn order(&self) -> usize {
        self.identification.len()
    }
}

/// Glues the two summands along the identified clique. The left graph
/// keeps its numbering; private right vertices follow in their original
/// order. The second vector maps right vertices into the sum. A right
/// label that clashes gets primes appended until it is unique.
pub fn clique_sum_mapped(spec: &CliqueSumSpec) -> (Graph, Vec<usize>) {
    let n1 = spec.left.order();
    let mut map = vec![usize::MAX; spec.right.order()];
    for &(a, b) in &spec.identification {
        map[b] = a;
    }
    let mut next = n1;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: std::collections::BTreeSet<Edge> = spec.left.edges().into_iter().collect();
    for (a, b) in spec.right.edges() {
        edges.insert(edge(map[a], map[b]));
    }
    let edges: Vec<Edge> = edges.into_iter().collect();
    let g = Graph::from_edges(next, &edges).expect("valid sum");
    if !spec.left.is_labeled() && !spec.right.is_labeled() {
        return (g, map);
    }
    let mut labels: Vec<Option<String>> = spec.left.labels().to_vec();
    labels.resize(next, None);
    let mut used: std::collections::BTreeSet<String> = labels.iter().flatten().cloned().collect();
    for (b, &s) in map.iter().enumerate() {
        if s < n1 {
            continue;
        }
        if let Some(l) = spec.right.label(b) {
            let mut name = l.to_string();
            while used.contains(&name) {
                name.push('\'');
            }
            used.insert(name.clone());
            labels[s] = Some(name);
        }
    }
    (g.relabel(labels).expect("unique labels"), map)
}

/// `n = n1 + n2 - t` and `m = m1 + m2 - t(t-1)/2`.
pub fn clique_sum(spec: &CliqueSumSpec) -> Graph {
    clique_sum_mapped(spec).0
}

fn sorted_clique(g: &Graph, s: &[usize]) -> Result<Vec<usize>, CliqueSumError> {
    for &v in s {
        check_range(g, v)?;
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    if !distinct(&s) || !g.is_clique(&s) {
        return Err(CliqueSumError::CutNotClique(s));
    }
    Ok(s)
}

fn k7_minus_triangle() -> Graph {
    let edges: Vec<Edge> = Graph::complete(7)
        .edges()
        .into_iter()
        .filter(|&(a, b)| !(a < 3 && b < 3))
        .collect();
    Graph::from_edges(7, &edges).unwrap()
}

/// Decides linking for a sum over the clique `s` by contracting two or
/// three components of `g - s` and looking for `K7` minus a triangle on
/// the contracted nodes together with `s`. Each contracted node is
/// adjacent to exactly the vertices of `s` its component touches. Two
/// components share no edge, so contracted nodes are pairwise
/// non-adjacent, and with three of them the missing triangle is forced
/// onto the contracted nodes. Valid when the pieces `<C, s>` are nIL.
pub fn hls_clique_sum_is_il(g: &Graph, s: &[usize]) -> Result<bool, CliqueSumError> {
    let s = sorted_clique(g, s)?;
    let comps = components_without(g, &s);
    if comps.len() < 2 {
        return Err(CliqueSumError::NotACut(s));
    }
    let t = s.len();
    let attach: Vec<Vec<usize>> = comps
        .iter()
        .map(|c| {
            (0..t)
                .filter(|&i| g.neighbors(s[i]).iter().any(|w| c.binary_search(w).is_ok()))
                .collect()
        })
        .collect();
    let pattern = k7_minus_triangle();
    let r = comps.len();
    let mut choices: Vec<Vec<usize>> = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            choices.push(vec![a, b]);
            for c in b + 1..r {
                choices.push(vec![a, b, c]);
            }
        }
    }
    for choice in choices {
        if t + choice.len() < 7 {
            continue;
        }
        let mut edges: Vec<Edge> = Graph::complete(t).edges();
        for (k, &ci) in choice.iter().enumerate() {
            edges.extend(attach[ci].iter().map(|&i| (i, t + k)));
        }
        let h = Graph::from_edges(t + choice.len(), &edges)?;
        if find_subgraph(&h, &pattern).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn tetrahedron(g: &Graph, t: &[usize]) -> Result<Vec<usize>, CliqueSumError> {
    for &v in t {
        check_range(g, v)?;
    }
    let mut s = t.to_vec();
    s.sort_unstable();
    if s.len() != 4 || !distinct(&s) || !g.is_clique(&s) {
        return Err(CliqueSumError::NotTetrahedral(s));
    }
    Ok(s)
}

/// Whether at least two components of `g - t` see every vertex of the
/// induced `K4` `t`.
pub fn is_strongly_separating(g: &Graph, t: &[usize]) -> Result<bool, CliqueSumError> {
    let t = tetrahedron(g, t)?;
    let full = components_without(g, &t)
        .iter()
        .filter(|c| {
            t.iter()
                .all(|&x| g.neighbors(x).iter().any(|w| c.binary_search(w).is_ok()))
        })
        .count();
    Ok(full >= 2)
}

/// How much a sum predicate trusts its inputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypotheses {
    /// The caller certifies that both summands are maxnil.
    #[default]
    Trusted,
    /// Re-certify the summands (and, for triangle sums, connectivity 3).
    Strict,
}

fn verify_summands(mode: Hypotheses, graphs: [&Graph; 2]) -> Result<(), CliqueSumError> {
    if mode == Hypotheses::Strict {
        for (i, g) in graphs.into_iter().enumerate() {
            if is_maxnil(g)?.is_maxnil() != Some(true) {
                return Err(CliqueSumError::SummandNotMaxnil(i + 1));
            }
        }
    }
    Ok(())
}

fn check_edge(g: &Graph, e: Edge) -> Result<(), CliqueSumError> {
    check_range(g, e.0)?;
    check_range(g, e.1)?;
    if !g.has_edge(e.0, e.1) {
        return Err(GraphError::MissingEdge(e.0, e.1).into());
    }
    Ok(())
}

/// A sum of two maxnil graphs over an edge is maxnil exactly when the
/// edge lies in no triangle on at least one side.
pub fn k2_sum_maxnil_predicate(
    g1: &Graph,
    e1: Edge,
    g2: &Graph,
    e2: Edge,
    mode: Hypotheses,
) -> Result<bool, CliqueSumError> {
    check_edge(g1, e1)?;
    check_edge(g2, e2)?;
    verify_summands(mode, [g1, g2])?;
    Ok(!g1.is_triangular_edge(e1.0, e1.1)? || !g2.is_triangular_edge(e2.0, e2.1)?)
}

/// Builds the sum over the paired cliques and checks that the shared
/// clique is a minimal vertex cut of it.
fn sum_with_minimal_cut(g1: &Graph, c1: &[usize], g2: &Graph, c2: &[usize]) -> Result<Graph, CliqueSumError> {
    let spec = CliqueSumSpec::new(
        g1.clone(),
        g2.clone(),
        c1.iter().copied().zip(c2.iter().copied()).collect(),
    )?;
    let sum = clique_sum(&spec);
    let mut cut = c1.to_vec();
    cut.sort_unstable();
    if !is_minimal_cut(&sum, &cut) {
        return Err(CliqueSumError::NotMinimalCut(cut));
    }
    Ok(sum)
}

/// Every induced `K4` of `g` containing the triangle `d` is strongly
/// separating. True when there is no such `K4`.
fn all_tetrahedra_separating(g: &Graph, d: &[usize; 3]) -> Result<bool, CliqueSumError> {
    for t in 0..g.order() {
        if d.contains(&t) || !d.iter().all(|&x| g.has_edge(x, t)) {
            continue;
        }
        if !is_strongly_separating(g, &[d[0], d[1], d[2], t])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A sum of two maxnil graphs over a triangle that is a minimal cut of
/// the sum is maxnil exactly when, on some side, every induced `K4`
/// through the triangle is strongly separating.
pub fn k3_sum_maxnil_predicate(
    g1: &Graph,
    d1: [usize; 3],
    g2: &Graph,
    d2: [usize; 3],
    mode: Hypotheses,
) -> Result<bool, CliqueSumError> {
    let sum = sum_with_minimal_cut(g1, &d1, g2, &d2)?;
    verify_summands(mode, [g1, g2])?;
    if mode == Hypotheses::Strict {
        let k = vertex_connectivity(&sum);
        if k != 3 {
            return Err(CliqueSumError::Connectivity(k));
        }
    }
    Ok(all_tetrahedra_separating(g1, &d1)? || all_tetrahedra_separating(g2, &d2)?)
}

/// A sum of two maxnil graphs over a `K4` that is a minimal cut of the sum
/// is maxnil exactly when the `K4` is strongly separating on neither side.
pub fn k4_sum_maxnil_predicate(
    g1: &Graph,
    s1: [usize; 4],
    g2: &Graph,
    s2: [usize; 4],
    mode: Hypotheses,
) -> Result<bool, CliqueSumError> {
    tetrahedron(g1, &s1)?;
    tetrahedron(g2, &s2)?;
    sum_with_minimal_cut(g1, &s1, g2, &s2)?;
    verify_summands(mode, [g1, g2])?;
    Ok(!is_strongly_separating(g1, &s1)? && !is_strongly_separating(g2, &s2)?)
}

/// One piece `<C, s>` per component `C` of `g - s`, with `s` listed first
/// in the given order. Each piece comes with its map back to `g`; labels
/// carry over.
pub fn decompose_at_cut(g: &Graph, s: &[usize]) -> Result<Vec<(Graph, Vec<usize>)>, CliqueSumError> {
    for &v in s {
        check_range(g, v)?;
    }
    let comps = components_without(g, s);
    if comps.len() < 2 {
        return Err(CliqueSumError::NotACut(s.to_vec()));
    }
    Ok(comps
        .into_iter()
        .map(|c| {
            let vs: Vec<usize> = s.iter().copied().chain(c).collect();
            g.induced_subgraph(&vs)
        })
        .collect())
}

/// Minimal vertex cuts of size `t` that induce cliques: the candidate
/// decompositions of `g` as a sum over `K_t`.
pub fn clique_cuts(g: &Graph, t: usize) -> Vec<Vec<usize>> {
    minimal_vertex_cuts(g, t)
        .into_iter()
        .map(|c| c.vertices)
        .filter(|c| g.is_clique(c))
        .collect()
}
