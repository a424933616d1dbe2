//! Components, blocks, vertex cuts and vertex connectivity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A vertex set whose removal disconnects the graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexCut {
    pub vertices: Vec<usize>,
    pub minimal: bool,
}

/// Connected components of `g` with the vertices in `removed` deleted.
/// Each component is sorted; components are ordered by smallest vertex.
pub fn components_without(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    for &r in removed {
        if r < n {
            comp[r] = usize::MAX - 1;
        }
    }
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for &y in g.neighbors(x) {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    components_without(g, &[])
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() <= 1 || components(g).len() == 1
}

/// True when `set` is a vertex cut: `g - set` has at least two components.
pub fn is_vertex_cut(g: &Graph, set: &[usize]) -> bool {
    components_without(g, set).len() >= 2
}

/// True when `u` and `v` lie in different components of `g - removed`.
pub fn separates(g: &Graph, removed: &[usize], u: usize, v: usize) -> bool {
    let n = g.order();
    let mut blocked = vec![false; n];
    for &r in removed {
        blocked[r] = true;
    }
    if blocked[u] || blocked[v] {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(x) = queue.pop_front() {
        if x == v {
            return false;
        }
        for &y in g.neighbors(x) {
            if !seen[y] && !blocked[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    true
}

/// Maximum number of internally disjoint `s`-`t` paths for nonadjacent
/// `s`, `t`, stopping early once `cap` paths are found.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    // Vertex x splits into x_in = 2x and x_out = 2x + 1 joined by a unit arc.
    let size = 2 * n;
    let mut residual = vec![0i32; size * size];
    for x in 0..n {
        residual[(2 * x) * size + 2 * x + 1] = if x == s || x == t { n as i32 } else { 1 };
        for &y in g.neighbors(x) {
            residual[(2 * x + 1) * size + 2 * y] = 1;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut total = 0;
    while total < cap {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(a) = queue.pop_front() {
            let x = a / 2;
            let mut candidates = vec![a ^ 1];
            for &y in g.neighbors(x) {
                candidates.push(2 * y);
                candidates.push(2 * y + 1);
            }
            for b in candidates {
                if prev[b] == usize::MAX && residual[a * size + b] > 0 {
                    prev[b] = a;
                    if b == sink {
                        break 'bfs;
                    }
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            residual[a * size + b] -= 1;
            residual[b * size + a] += 1;
            b = a;
        }
        total += 1;
    }
    total
}

/// Vertex connectivity: the size of a smallest vertex cut, `n - 1` for
/// complete graphs and 0 for disconnected graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !is_connected(g) {
        return 0;
    }
    let mut best = n - 1;
    // A minimum cut either misses vertex 0, and then separates it from some
    // nonadjacent vertex, or contains it, and then separates two of its
    // nonadjacent neighbors.
    for t in 0..n {
        if t != 0 && !g.has_edge(0, t) {
            best = best.min(local_connectivity(g, 0, t, best));
        }
    }
    let nb = g.neighbors(0);
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !g.has_edge(a, b) {
                best = best.min(local_connectivity(g, a, b, best));
            }
        }
    }
    best
}

pub fn is_minimal_cut(g: &Graph, set: &[usize]) -> bool {
    if !is_vertex_cut(g, set) {
        return false;
    }
    // Cuts here have at most a handful of vertices; test every proper subset.
    let k = set.len();
    for mask in 0..(1u32 << k) - 1 {
        let sub: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| set[i]).collect();
        if is_vertex_cut(g, &sub) {
            return false;
        }
    }
    true
}

/// All minimal vertex cuts of size exactly `k`, in lexicographic order.
pub fn minimal_vertex_cuts(g: &Graph, k: usize) -> Vec<VertexCut> {
    let n = g.order();
    let mut out = Vec::new();
    if k >= n {
        return out;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if is_minimal_cut(g, &combo) {
            out.push(VertexCut {
                vertices: combo.clone(),
                minimal: true,
            });
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Builds a [`VertexCut`] for `set`, or `None` if it does not disconnect.
pub fn vertex_cut(g: &Graph, set: &[usize]) -> Option<VertexCut> {
    let mut vertices = set.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if !is_vertex_cut(g, &vertices) {
        return None;
    }
    let minimal = is_minimal_cut(g, &vertices);
    Some(VertexCut { vertices, minimal })
}

/// Biconnected components as sorted vertex lists. Isolated vertices are
/// omitted; a bridge is reported as a two-vertex block.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (x, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(x) {
                let y = g.neighbors(x)[*idx];
                *idx += 1;
                if y == parent {
                    continue;
                }
                if disc[y] == usize::MAX {
                    edge_stack.push((x, y));
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    stack.push((y, x, 0));
                } else if disc[y] < disc[x] {
                    edge_stack.push((x, y));
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[x]);
                    if low[x] >= disc[p] {
                        let mut verts = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.push(a);
                            verts.push(b);
                            if (a, b) == (p, x) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        out.push(verts);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// First two-vertex separator `{x, y}` (lexicographic) of a graph, if any.
pub fn find_two_separator(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            if components_without(g, &[x, y]).len() >= 2 {
                return Some((x, y));
            }
        }
    }
    None
}
