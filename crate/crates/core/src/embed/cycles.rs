use serde::{Deserialize, Serialize};

use super::planarity::RotationSystem;
use crate::connectivity::{components, separates};
use crate::error::EmbedError;
use crate::graph::Graph;

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// All simple cycles, each once: it starts at its smallest vertex and its
/// second vertex is smaller than its last. Fails once more than `cap`
/// cycles have been found.
pub fn enumerate_cycles(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>, EmbedError> {
    let n = g.order();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        // stack of next-neighbor indices, parallel to `path`
        let mut next = vec![0usize];
        while let Some(&top) = path.last() {
            let i = *next.last().unwrap();
            let nbrs = g.neighbors(top);
            if i == nbrs.len() {
                on_path[top] = false;
                path.pop();
                next.pop();
                continue;
            }
            *next.last_mut().unwrap() += 1;
            let w = nbrs[i];
            if w == s && path.len() >= 3 && path[1] < top {
                out.push(path.clone());
                if out.len() > cap {
                    return Err(EmbedError::TooManyCycles(cap));
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                next.push(0);
            }
        }
        on_path[s] = false;
    }
    Ok(out)
}

/// The two sides of a cycle in an embedding. Vertices of other
/// components count as outside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSide {
    pub cycle: Vec<usize>,
    pub inside: Vec<usize>,
    pub outside: Vec<usize>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<(), EmbedError> {
    let n = g.order();
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    let ok = cycle.len() >= 3
        && distinct
        && cycle.iter().all(|&v| v < n)
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
    if ok {
        Ok(())
    } else {
        Err(EmbedError::NotACycle(cycle.to_vec()))
    }
}

/// Splits the vertices off `cycle` into its two sides. Faces are merged
/// across every edge not on the cycle; the faces of the cycle's component
/// then fall into exactly two classes, and each vertex off the cycle lies
/// in the class of any face it touches. The outside is the class of the
/// outer face (or, when the outer face lies in another component, of the
/// component's longest face).
pub fn cycle_sides(emb: &RotationSystem, cycle: &[usize]) -> Result<CycleSide, EmbedError> {
    let g = emb.host();
    check_cycle(g, cycle)?;
    let n = g.order();
    let len = cycle.len();
    let mut on_cycle_edge = std::collections::HashSet::new();
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        on_cycle_edge.insert((a.min(b), a.max(b)));
    }
    let faces = emb.faces();
    // face of each dart
    let mut dart_face = std::collections::HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        if f.len() == 1 && g.degree(f[0]) == 0 {
            continue;
        }
        for i in 0..f.len() {
            dart_face.insert((f[i], f[(i + 1) % f.len()]), fi);
        }
    }
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    for (&(a, b), &fi) in &dart_face {
        if a < b && !on_cycle_edge.contains(&(a, b)) {
            let fj = dart_face[&(b, a)];
            let (ra, rb) = (find(&mut parent, fi), find(&mut parent, fj));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    let comp = components(g)
        .into_iter()
        .find(|c| c.binary_search(&cycle[0]).is_ok())
        .unwrap();
    let face_comp = |f: &Vec<usize>| comp.binary_search(&f[0]).is_ok();
    let outer = emb.outer_face();
    let outer = if face_comp(&faces[outer]) {
        outer
    } else {
        let mut best = None;
        for (i, f) in faces.iter().enumerate() {
            if face_comp(f) && best.is_none_or(|b: usize| f.len() > faces[b].len()) {
                best = Some(i);
            }
        }
        best.unwrap()
    };
    let outer_class = find(&mut parent, outer);
    let mut in_cycle = vec![false; n];
    for &c in cycle {
        in_cycle[c] = true;
    }
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for w in 0..n {
        if in_cycle[w] {
            continue;
        }
        if comp.binary_search(&w).is_err() {
            outside.push(w);
            continue;
        }
        let x = g.neighbors(w)[0];
        let class = find(&mut parent, dart_face[&(w, x)]);
        if class == outer_class {
            outside.push(w);
        } else {
            inside.push(w);
        }
    }
    Ok(CycleSide {
        cycle: cycle.to_vec(),
        inside,
        outside,
    })
}

/// Maps vertices of `g - {u, v}` (densely renumbered) back to `g`.
fn host_without(g: &Graph, u: usize, v: usize) -> Result<(Graph, Vec<usize>), EmbedError> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(crate::error::GraphError::MissingVertex(x).into());
        }
    }
    if g.has_edge(u, v) {
        return Err(EmbedError::Adjacent(u, v));
    }
    let keep: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    Ok(g.induced_subgraph(&keep))
}

/// The first cycle of `emb` for which neither side `X` makes `X ∪ C`
/// separate `u` from `v` in `g`, or `None` when every cycle has such a
/// side. `emb` must embed `g - {u, v}` with vertices renumbered in order.
pub fn lemma21_violation(
    g: &Graph,
    u: usize,
    v: usize,
    emb: &RotationSystem,
    cap: usize,
) -> Result<Option<Vec<usize>>, EmbedError> {
    let (rest, back) = host_without(g, u, v)?;
    if rest.order() != emb.host().order() || rest.edges() != emb.host().edges() {
        return Err(EmbedError::BadRotation(
            "embedding does not match the graph with u and v removed".into(),
        ));
    }
    for cycle in enumerate_cycles(&rest, cap)? {
        let sides = cycle_sides(emb, &cycle)?;
        let ok = [&sides.inside, &sides.outside].iter().any(|side| {
            let removed: Vec<usize> = side.iter().chain(&cycle).map(|&w| back[w]).collect();
            separates(g, &removed, u, v)
        });
        if !ok {
            return Ok(Some(cycle.iter().map(|&w| back[w]).collect()));
        }
    }
    Ok(None)
}

/// Whether every cycle `C` of the embedding has a side `X` such that every
/// `u`-`v` path in `g` meets `X ∪ C`.
pub fn lemma21_condition(g: &Graph, u: usize, v: usize, emb: &RotationSystem) -> Result<bool, EmbedError> {
    Ok(lemma21_violation(g, u, v, emb, DEFAULT_CYCLE_CAP)?.is_none())
}

/// Checks the separation condition on the embedding produced by the
/// planarity test. `false` when `g - {u, v}` is not planar or the
/// condition fails on that embedding; `true` certifies a linkless
/// embedding of `g`.
pub fn certify_nil_via_lemma21(g: &Graph, u: usize, v: usize) -> Result<bool, EmbedError> {
    let (rest, _) = host_without(g, u, v)?;
    match super::planarity::planar_embedding(&rest) {
        Some(emb) => lemma21_condition(g, u, v, &emb),
        None => Ok(false),
    }
}
