//! The named graphs and families, each built from a fixed edge list and
//! checked against its defining properties on construction.

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::embed::RotationSystem;
use crate::error::FamilyError;
use crate::graph::{edge, Edge, Graph};

pub use crate::bounds::{bounds_table, target_bound, BoundsRow};

const J_VERTICES: [&str; 8] = ["u", "v", "x", "y", "z", "t", "a", "b"];
/// `J - {u, v}` is the prism with triangles `axt`, `byz` and rungs `ab`,
/// `xy`, `tz`; `u` and `v` see all six prism vertices.
const J_PRISM: [(&str, &str); 9] = [
    ("a", "x"),
    ("x", "t"),
    ("t", "a"),
    ("b", "y"),
    ("y", "z"),
    ("z", "b"),
    ("a", "b"),
    ("x", "y"),
    ("t", "z"),
];

const G_VERTICES: [&str; 10] = ["u", "v", "x", "y", "z", "t", "a", "b", "c", "d"];
const G_INNER: [(&str, &str); 13] = [
    ("a", "d"),
    ("b", "c"),
    ("a", "c"),
    ("d", "t"),
    ("c", "z"),
    ("a", "b"),
    ("c", "d"),
    ("b", "y"),
    ("a", "x"),
    ("x", "y"),
    ("x", "t"),
    ("y", "z"),
    ("z", "t"),
];
const G_U: [&str; 6] = ["x", "y", "z", "t", "d", "b"];
const G_V: [&str; 6] = ["x", "y", "z", "t", "a", "c"];

fn check(graph: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::SelfCheck {
            graph,
            detail: detail(),
        })
    }
}

fn check_counts(graph: &'static str, g: &Graph, n: usize, m: usize) -> Result<(), FamilyError> {
    check(graph, g.order() == n && g.size() == m, || {
        format!(
            "expected {n} vertices and {m} edges, found {} and {}",
            g.order(),
            g.size()
        )
    })
}

fn named(g: &Graph, name: &str) -> usize {
    g.vertex(name).expect("constructions label every vertex")
}

/// The 8-vertex Jørgensen graph: the complement of a hexagon plus a
/// disjoint edge `uv`.
pub fn jorgensen_graph() -> Result<Graph, FamilyError> {
    let mut edges: Vec<(&str, &str)> = J_PRISM.to_vec();
    for s in ["u", "v"] {
        for p in ["x", "y", "z", "t", "a", "b"] {
            edges.push((s, p));
        }
    }
    let g = Graph::from_named_edges(&J_VERTICES, &edges)?;
    check_counts("jorgensen", &g, 8, 21)?;
    let complement_shape = Graph::cycle(6).disjoint_union(&Graph::complete(2));
    let complement = Graph::from_edges(8, &g.non_edges())?;
    check("jorgensen", is_isomorphic(&complement, &complement_shape), || {
        "complement is not a hexagon plus an edge".into()
    })?;
    Ok(g)
}

/// Subdivides `x y` by `z1` joined to `u`, `v`, then each `z_{j-1} y` by
/// `z_j`, `i` times in all.
fn subdivide_towards_y(base: &Graph, i: usize) -> Result<Graph, FamilyError> {
    let mut g = base.clone();
    let (u, v, y) = (named(&g, "u"), named(&g, "v"), named(&g, "y"));
    let mut prev = named(&g, "x");
    for j in 1..=i {
        let name = format!("z{j}");
        let (h, z) = g.subdivide_edge_labeled(prev, y, Some(&name))?;
        g = h.add_edge(z, u)?.add_edge(z, v)?;
        prev = z;
    }
    Ok(g)
}

/// `J_i`: `8 + i` vertices and `3(8 + i) - 3` edges.
pub fn jorgensen_family(i: usize) -> Result<Graph, FamilyError> {
    let g = subdivide_towards_y(&jorgensen_graph()?, i)?;
    check_counts("jorgensen family", &g, 8 + i, 3 * (8 + i) - 3)?;
    Ok(g)
}

/// The 10-vertex graph obtained from the Jørgensen graph by splitting `a`
/// into `a, d` and `b` into `b, c`.
pub fn graph_g() -> Result<Graph, FamilyError> {
    let mut edges: Vec<(&str, &str)> = G_INNER.to_vec();
    edges.extend(G_U.iter().map(|&p| ("u", p)));
    edges.extend(G_V.iter().map(|&p| ("v", p)));
    let g = Graph::from_named_edges(&G_VERTICES, &edges)?;
    check_counts("G", &g, 10, 25)?;
    let n = |s| named(&g, s);
    let contracted = g.contract_edge(n("a"), n("d"))?;
    let contracted = contracted.contract_edge(contracted.vertex("b").unwrap(), contracted.vertex("c").unwrap())?;
    check("G", is_isomorphic(&contracted, &jorgensen_graph()?), || {
        "contracting ad and bc does not give the Jorgensen graph".into()
    })?;
    let nb = g.neighbors(n("b")).to_vec();
    let inner = g.induced_subgraph(&nb).0.size();
    check("G", nb.len() == 4 && inner == 2, || {
        format!("N(b) has {} vertices inducing {inner} edges", nb.len())
    })?;
    Ok(g)
}

/// `G_i`: `10 + i` vertices and `3(10 + i) - 5` edges.
pub fn family_3n5(i: usize) -> Result<Graph, FamilyError> {
    let g = subdivide_towards_y(&graph_g()?, i)?;
    check_counts("3n-5 family", &g, 10 + i, 3 * (10 + i) - 5)?;
    Ok(g)
}

/// Clockwise rotations of the prism `J - {u, v}` drawn with `axt` outside
/// and `byz` inside.
const J_ROTATION: &str = "\
a: t b x
x: a y t
t: x z a
b: a z y
y: b z x
z: y b t
";

/// Rotations of `G - {u, v}`: the prism drawing with `a` split into `a, d`
/// and `b` into `b, c`.
const G_ROTATION: &str = "\
a: d c b x
d: a t c
b: a c y
c: b a d z
x: a y t
y: b z x
z: y c t
t: x z d
";

/// `g - {u, v}` with the drawn rotation, every `z_j` inserted on its path
/// from `x` to `y`.
fn uv_embedding(graph: &'static str, g: &Graph, base: &str, i: usize) -> Result<RotationSystem, FamilyError> {
    let mut rot: Vec<(String, Vec<String>)> = base
        .lines()
        .filter_map(|l| l.split_once(':'))
        .map(|(v, r)| (v.trim().to_string(), r.split_whitespace().map(String::from).collect()))
        .collect();
    let mut prev = "x".to_string();
    for j in 1..=i {
        let z = format!("z{j}");
        for (v, r) in rot.iter_mut() {
            let from = if *v == prev {
                "y"
            } else if v == "y" {
                prev.as_str()
            } else {
                continue;
            };
            let from = from.to_string();
            for w in r.iter_mut().filter(|w| **w == from) {
                *w = z.clone();
            }
        }
        rot.push((z.clone(), vec![prev.clone(), "y".into()]));
        prev = z;
    }
    let text: String = rot.iter().map(|(v, r)| format!("{v}: {}\n", r.join(" "))).collect();
    let keep: Vec<usize> = (0..g.order())
        .filter(|&w| w != named(g, "u") && w != named(g, "v"))
        .collect();
    let rest = g.induced_subgraph(&keep).0;
    RotationSystem::from_text(rest, &text).map_err(|e| FamilyError::SelfCheck {
        graph,
        detail: e.to_string(),
    })
}

/// The drawn planar embedding of `J_i - {u, v}`.
pub fn jorgensen_embedding(i: usize) -> Result<RotationSystem, FamilyError> {
    uv_embedding("jorgensen family", &jorgensen_family(i)?, J_ROTATION, i)
}

/// The drawn planar embedding of `G_i - {u, v}` (`i = 0` for `G`).
pub fn family_3n5_embedding(i: usize) -> Result<RotationSystem, FamilyError> {
    let g = if i == 0 { graph_g()? } else { family_3n5(i)? };
    uv_embedding("3n-5 family", &g, G_ROTATION, i)
}

/// The 13-vertex, 26-edge triangle-free graph: the circulant on `Z_13`
/// with connection set `{±1, ±3}`.
pub fn q13_3() -> Result<Graph, FamilyError> {
    let mut edges = Vec::new();
    for i in 0..13 {
        edges.push(edge(i, (i + 1) % 13));
        edges.push(edge(i, (i + 3) % 13));
    }
    let g = Graph::from_edges(13, &edges)?;
    check_counts("Q(13,3)", &g, 13, 26)?;
    check("Q(13,3)", g.is_triangle_free(), || "graph has a triangle".into())?;
    check("Q(13,3)", g.degree_sequence().iter().all(|&d| d == 4), || {
        "graph is not 4-regular".into()
    })?;
    Ok(g)
}

/// Adds one degree-2 vertex across each listed edge.
fn add_ears(base: &Graph, chosen: &[Edge]) -> Result<Graph, FamilyError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut g = base.clone();
    for &(a, b) in chosen {
        let e = edge(a, b);
        if !base.has_edge(a, b) {
            return Err(FamilyError::NotAnEdge(e));
        }
        if !seen.insert(e) {
            return Err(FamilyError::RepeatedEdge(e));
        }
        g = g.add_vertex(&[e.0, e.1], None)?.0;
    }
    Ok(g)
}

/// `Q(13,3)` with `n - 13` degree-2 vertices, one across each chosen edge
/// (by default the first `n - 13` edges in lexicographic order).
pub fn q_extension(n: usize, chosen: Option<&[Edge]>) -> Result<Graph, FamilyError> {
    if !(13..=39).contains(&n) {
        return Err(FamilyError::OutOfRange {
            param: "n",
            value: n,
            range: "13..=39",
        });
    }
    let q = q13_3()?;
    let default: Vec<Edge> = q.edges().into_iter().take(n - 13).collect();
    let chosen = chosen.unwrap_or(&default);
    if chosen.len() != n - 13 {
        return Err(FamilyError::OutOfRange {
            param: "edge choice length",
            value: chosen.len(),
            range: "exactly n - 13",
        });
    }
    let g = add_ears(&q, chosen)?;
    check_counts("Q(13,3) extension", &g, n, 2 * n)?;
    Ok(g)
}

/// `k` copies of `Q(13,3)` sharing one edge: copy `c` keeps vertices 0 and
/// 1 of the shared edge `01` and renumbers its others from `2 + 11c`.
pub fn h_k(k: usize) -> Result<Graph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::OutOfRange {
            param: "k",
            value: 0,
            range: ">= 1",
        });
    }
    let q = q13_3()?;
    let shared = q.edges()[0];
    debug_assert_eq!(shared, (0, 1));
    let mut edges = vec![shared];
    for c in 0..k {
        let id = |v: usize| if v < 2 { v } else { 2 + 11 * c + (v - 2) };
        edges.extend(
            q.edges()
                .into_iter()
                .filter(|&e| e != shared)
                .map(|(a, b)| edge(id(a), id(b))),
        );
    }
    let g = Graph::from_edges(11 * k + 2, &edges)?;
    check_counts("H_k", &g, 11 * k + 2, 25 * k + 1)?;
    check("H_k", g.non_triangular_edges().len() == g.size(), || {
        "some edge lies in a triangle".into()
    })?;
    Ok(g)
}

/// Number of shared-edge copies used for order `n`: `ceil((n - 3) / 36)`.
pub fn theorem_copies(n: usize) -> usize {
    (n - 3).div_ceil(36)
}

/// The sparse maxnil graph of order `n >= 13`: `H_k` with
/// `n - (11k + 2)` degree-2 vertices across its first edges.
pub fn theorem_main_graph(n: usize) -> Result<Graph, FamilyError> {
    if n < 13 {
        return Err(FamilyError::OutOfRange {
            param: "n",
            value: n,
            range: ">= 13",
        });
    }
    let k = theorem_copies(n);
    let h = h_k(k)?;
    let chosen: Vec<Edge> = h.edges().into_iter().take(n - (11 * k + 2)).collect();
    let g = add_ears(&h, &chosen)?;
    check_counts("theorem family", &g, n, 2 * n + 3 * k - 3)?;
    Ok(g)
}

/// Two copies of `K6` minus an edge glued along their common `K5`
/// `{x, y, z, t, u}`; the missing edges are `at` and `bz`.
pub fn k5_sum_example() -> Result<Graph, FamilyError> {
    let names = ["a", "b", "x", "y", "z", "t", "u"];
    let core = ["x", "y", "z", "t", "u"];
    let mut edges = Vec::new();
    for (i, &p) in core.iter().enumerate() {
        for &q in &core[i + 1..] {
            edges.push((p, q));
        }
    }
    for p in ["x", "y", "z", "u"] {
        edges.push(("a", p));
    }
    for p in ["x", "y", "t", "u"] {
        edges.push(("b", p));
    }
    let g = Graph::from_named_edges(&names, &edges)?;
    check_counts("K5 sum example", &g, 7, 18)?;
    Ok(g)
}

const H_VERTICES: [&str; 9] = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];
/// Two octahedra sharing the face `abc`; `efg` is a face of the first.
const H_EDGES: [(&str, &str); 21] = [
    ("a", "b"),
    ("b", "c"),
    ("a", "c"),
    ("e", "f"),
    ("f", "g"),
    ("e", "g"),
    ("e", "b"),
    ("e", "c"),
    ("f", "a"),
    ("f", "c"),
    ("g", "a"),
    ("g", "b"),
    ("d", "h"),
    ("h", "i"),
    ("d", "i"),
    ("d", "b"),
    ("d", "c"),
    ("h", "a"),
    ("h", "c"),
    ("i", "a"),
    ("i", "b"),
];

/// The 9-vertex plane triangulation with separating triangle `abc`.
pub fn fig7_base() -> Result<Graph, FamilyError> {
    let g = Graph::from_named_edges(&H_VERTICES, &H_EDGES)?;
    check_counts("H", &g, 9, 21)?;
    let (a, b, c) = (named(&g, "a"), named(&g, "b"), named(&g, "c"));
    let dominating = (0..9).find(|&p| g.has_edge(p, a) && g.has_edge(p, b) && g.has_edge(p, c));
    check("H", dominating.is_none(), || {
        format!("vertex {} is adjacent to all of a, b, c", g.name(dominating.unwrap()))
    })?;
    check("H", crate::embed::is_planar(&g), || "H is not planar".into())?;
    Ok(g)
}

/// `H` plus `v` joined to all of `H` plus `w` joined to `a`, `b`, `c`.
pub fn fig7_graph() -> Result<Graph, FamilyError> {
    fig7_family(11)
}

/// Order-`n` member: `n - 11` vertices stacked inside the face `efg`
/// (`p1` in `efg`, then `p_j` in `p_{j-1} f g`), each also joined to `v`.
pub fn fig7_family(n: usize) -> Result<Graph, FamilyError> {
    if n < 11 {
        return Err(FamilyError::OutOfRange {
            param: "n",
            value: n,
            range: ">= 11",
        });
    }
    let h = fig7_base()?;
    let all: Vec<usize> = (0..9).collect();
    let (mut g, v) = h.add_vertex(&all, Some("v"))?;
    let abc = [named(&g, "a"), named(&g, "b"), named(&g, "c")];
    g = g.add_vertex(&abc, Some("w"))?.0;
    let (f, gg) = (named(&g, "f"), named(&g, "g"));
    let mut prev = named(&g, "e");
    for j in 1..=n - 11 {
        let (h2, p) = g.add_vertex(&[prev, f, gg, v], Some(&format!("p{j}")))?;
        g = h2;
        prev = p;
    }
    check_counts("fig7 family", &g, n, 33 + 4 * (n - 11))?;
    Ok(g)
}

/// Family identifiers with their parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyParams {
    Jorgensen(usize),
    G3n5(usize),
    QExtension(usize),
    HK(usize),
    TheoremMain(usize),
    Fig6,
    Fig7(usize),
    Q13,
}

impl FamilyParams {
    pub fn build(self) -> Result<Graph, FamilyError> {
        match self {
            FamilyParams::Jorgensen(i) => jorgensen_family(i),
            FamilyParams::G3n5(0) => graph_g(),
            FamilyParams::G3n5(i) => family_3n5(i),
            FamilyParams::QExtension(n) => q_extension(n, None),
            FamilyParams::HK(k) => h_k(k),
            FamilyParams::TheoremMain(n) => theorem_main_graph(n),
            FamilyParams::Fig6 => k5_sum_example(),
            FamilyParams::Fig7(n) => fig7_family(n),
            FamilyParams::Q13 => q13_3(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_graphs_build() {
        assert_eq!(jorgensen_graph().unwrap().size(), 21);
        assert_eq!(graph_g().unwrap().size(), 25);
        assert_eq!(q13_3().unwrap().size(), 26);
        assert_eq!(k5_sum_example().unwrap().size(), 18);
        assert_eq!(fig7_graph().unwrap().size(), 33);
    }

    #[test]
    fn family_counts() {
        for i in 0..5 {
            let j = jorgensen_family(i).unwrap();
            assert_eq!((j.order(), j.size()), (8 + i, 3 * (8 + i) - 3));
        }
        for i in 1..5 {
            let g = family_3n5(i).unwrap();
            assert_eq!((g.order(), g.size()), (10 + i, 25 + 3 * i));
        }
        for k in 1..4 {
            let h = h_k(k).unwrap();
            assert_eq!((h.order(), h.size()), (11 * k + 2, 25 * k + 1));
        }
    }

    #[test]
    fn ear_choices_are_validated() {
        assert!(matches!(
            q_extension(15, Some(&[(0, 1), (1, 0)])),
            Err(FamilyError::RepeatedEdge((0, 1)))
        ));
        assert!(matches!(
            q_extension(14, Some(&[(0, 2)])),
            Err(FamilyError::NotAnEdge((0, 2)))
        ));
        assert!(q_extension(40, None).is_err());
    }

    #[test]
    fn theorem_parameters() {
        assert_eq!(theorem_copies(13), 1);
        assert_eq!(theorem_copies(39), 1);
        assert_eq!(theorem_copies(40), 2);
        assert_eq!(theorem_main_graph(40).unwrap().size(), 83);
    }
}
