//! Planarity testing with a combinatorial embedding as the certificate.
//!
//! Each block is embedded with the Demoucron–Malgrange–Pertuiset
//! path-addition algorithm; block rotations are then concatenated at cut
//! vertices. Every embedding handed out passes the Euler check.

use std::fmt::Write as _;

use crate::connectivity::{blocks, components};
use crate::error::EmbedError;
use crate::graph::Graph;

/// A combinatorial embedding: for every vertex the cyclic (clockwise)
/// order of its neighbors, plus a designated outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    host: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    outer_face: usize,
}

impl RotationSystem {
    /// Validates `rotation` against `host` (each list a permutation of the
    /// neighborhood) and checks Euler's formula per component.
    pub fn new(host: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbedError> {
        if rotation.len() != host.order() {
            return Err(EmbedError::BadRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                host.order()
            )));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted.as_slice() != host.neighbors(v) {
                return Err(EmbedError::BadRotation(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        let faces = trace_faces(&host, &rotation);
        let sys = RotationSystem {
            outer_face: longest(&faces),
            host,
            rotation,
            faces,
        };
        sys.check_euler()?;
        Ok(sys)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Face boundary walks as vertex sequences; consecutive entries (and the
    /// last and first) are the darts of the face. An isolated vertex forms
    /// a face on its own.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn with_outer_face(mut self, face: usize) -> Result<Self, EmbedError> {
        if face >= self.faces.len() {
            return Err(EmbedError::BadRotation(format!("no face {face}")));
        }
        self.outer_face = face;
        Ok(self)
    }

    /// Index of a face whose boundary walk visits exactly the vertices of
    /// `cycle`, each once.
    pub fn face_of_cycle(&self, cycle: &[usize]) -> Option<usize> {
        let mut want = cycle.to_vec();
        want.sort_unstable();
        self.faces.iter().position(|f| {
            let mut have = f.clone();
            have.sort_unstable();
            have == want
        })
    }

    /// `V - E + F` for each connected component.
    pub fn euler_characteristics(&self) -> Vec<i64> {
        let comps = components(&self.host);
        let mut comp_of = vec![0; self.host.order()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut chi = vec![0i64; comps.len()];
        for (i, c) in comps.iter().enumerate() {
            chi[i] += c.len() as i64;
        }
        for (u, v) in self.host.edges() {
            debug_assert_eq!(comp_of[u], comp_of[v]);
            chi[comp_of[u]] -= 1;
        }
        for f in &self.faces {
            chi[comp_of[f[0]]] += 1;
        }
        chi
    }

    fn check_euler(&self) -> Result<(), EmbedError> {
        match self.euler_characteristics().into_iter().find(|&c| c != 2) {
            Some(c) => Err(EmbedError::NotPlanar(c)),
            None => Ok(()),
        }
    }

    /// One line per vertex: `v: n1 n2 ...` in clockwise order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            write!(out, "{v}:").unwrap();
            for w in rot {
                write!(out, " {w}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses the format written by [`RotationSystem::to_text`]. Blank lines
    /// and `#` comments are ignored; vertices may be given as ids or, when
    /// the host is labelled, as labels.
    pub fn from_text(host: Graph, text: &str) -> Result<Self, EmbedError> {
        let n = host.order();
        let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
        let resolve = |tok: &str, line: usize| -> Result<usize, EmbedError> {
            if let Ok(v) = tok.parse::<usize>() {
                if v < n {
                    return Ok(v);
                }
            }
            host.vertex(tok).ok_or_else(|| EmbedError::Parse {
                line,
                message: format!("unknown vertex {tok:?}"),
            })
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (head, tail) = body.split_once(':').ok_or_else(|| EmbedError::Parse {
                line,
                message: "expected `vertex: neighbors`".into(),
            })?;
            let v = resolve(head.trim(), line)?;
            if rotation[v].is_some() {
                return Err(EmbedError::Parse {
                    line,
                    message: format!("vertex {v} listed twice"),
                });
            }
            let nbrs = tail
                .split_whitespace()
                .map(|t| resolve(t, line))
                .collect::<Result<Vec<_>, _>>()?;
            rotation[v] = Some(nbrs);
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(v, r)| match r {
                Some(r) => Ok(r),
                None if host.degree(v) == 0 => Ok(Vec::new()),
                None => Err(EmbedError::Parse {
                    line: 0,
                    message: format!("no rotation for vertex {v}"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        RotationSystem::new(host, rotation)
    }
}

fn longest(faces: &[Vec<usize>]) -> usize {
    let mut best = 0;
    for (i, f) in faces.iter().enumerate() {
        if f.len() > faces[best].len() {
            best = i;
        }
    }
    best
}

/// Traces the faces of a rotation system. The dart after `u -> w` is
/// `w -> x` with `x` the successor of `u` in the rotation at `w`.
fn trace_faces(host: &Graph, rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = host.order();
    let pos = |at: usize, x: usize| rotation[at].iter().position(|&y| y == x).unwrap();
    let mut used: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..n {
        if rotation[u].is_empty() {
            faces.push(vec![u]);
            continue;
        }
        for i in 0..rotation[u].len() {
            if used[u][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut ai) = (u, i);
            while !used[a][ai] {
                used[a][ai] = true;
                face.push(a);
                let b = rotation[a][ai];
                let j = pos(b, a);
                let bi = (j + 1) % rotation[b].len();
                a = b;
                ai = bi;
            }
            faces.push(face);
        }
    }
    faces
}

/// Path-addition embedding of one 2-connected block given by its sorted
/// vertex list (at least three vertices). Returns the face cycles in host
/// ids, or `None` if the block is not planar.
fn embed_block(g: &Graph, verts: &[usize]) -> Option<Vec<Vec<usize>>> {
    let k = verts.len();
    let local = |v: usize| verts.binary_search(&v).ok();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors(v).iter().filter_map(|&w| local(w)).collect())
        .collect();
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if total_edges > 3 * k - 6 {
        return None;
    }

    let cycle = find_cycle(&adj)?;

    let mut emb_v = vec![false; k];
    let mut emb_e = vec![vec![false; k]; k];
    let mut embedded_edges = cycle.len();
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        emb_v[a] = true;
        emb_e[a][b] = true;
        emb_e[b][a] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_edges < total_edges {
        // Fragments: (attachments, path between two attachments).
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for a in 0..k {
            if !emb_v[a] {
                continue;
            }
            for &b in &adj[a] {
                if a < b && emb_v[b] && !emb_e[a][b] {
                    fragments.push((vec![a, b], vec![a, b]));
                }
            }
        }
        let mut comp = vec![usize::MAX; k];
        for s in 0..k {
            if emb_v[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = s;
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for &y in &adj[x] {
                    if !emb_v[y] && comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            let mut att: Vec<usize> = members
                .iter()
                .flat_map(|&x| adj[x].iter().copied())
                .filter(|&y| emb_v[y])
                .collect();
            att.sort_unstable();
            att.dedup();
            let path = fragment_path(&adj, &emb_v, &comp, id, &members, &att);
            fragments.push((att, path));
        }

        let mut choice: Option<(usize, usize)> = None;
        for (fi, (att, _)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| att.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = &fragments[fi].1;
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let interior = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut i = ia;
        loop {
            f1.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % len;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut i = ib;
        loop {
            f2.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % len;
        }
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            emb_e[w[0]][w[1]] = true;
            emb_e[w[1]][w[0]] = true;
            embedded_edges += 1;
        }
        for &x in path {
            emb_v[x] = true;
        }
    }
    Some(
        faces
            .into_iter()
            .map(|f| f.into_iter().map(|x| verts[x]).collect())
            .collect(),
    )
}

/// A shortest cycle through the first edge that lies on one.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let k = adj.len();
    for s in 0..k {
        for &t in &adj[s] {
            // shortest s-t path avoiding the edge st
            let mut prev = vec![usize::MAX; k];
            prev[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if (x == s && y == t) || prev[y] != usize::MAX {
                        continue;
                    }
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
            if prev[t] != usize::MAX {
                let mut c = vec![t];
                let mut z = t;
                while z != s {
                    z = prev[z];
                    c.push(z);
                }
                return Some(c);
            }
        }
    }
    None
}

fn fragment_path(
    adj: &[Vec<usize>],
    emb_v: &[bool],
    comp: &[usize],
    id: usize,
    members: &[usize],
    att: &[usize],
) -> Vec<usize> {
    let a0 = att[0];
    let start = *members
        .iter()
        .find(|&&x| adj[x].contains(&a0))
        .expect("fragment touches its first attachment");
    let k = adj.len();
    let mut prev = vec![usize::MAX; k];
    prev[start] = start;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&a1) = adj[x].iter().find(|&&y| emb_v[y] && y != a0) {
            let mut path = vec![a1, x];
            let mut z = x;
            while z != start {
                z = prev[z];
                path.push(z);
            }
            path.push(a0);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if !emb_v[y] && comp[y] == id && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("a fragment of a 2-connected graph has two attachments")
}

/// Rotation at every vertex of a block from its face cycles.
fn rotations_from_faces(faces: &[Vec<usize>], verts: &[usize], g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut succ: std::collections::HashMap<(usize, usize), usize> = std::collections::HashMap::new();
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let prev = f[(i + len - 1) % len];
            let cur = f[i];
            let next = f[(i + 1) % len];
            succ.insert((cur, prev), next);
        }
    }
    verts
        .iter()
        .map(|&v| {
            let nbrs: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|w| verts.binary_search(w).is_ok())
                .collect();
            let mut rot = vec![nbrs[0]];
            while rot.len() < nbrs.len() {
                let next = succ[&(v, *rot.last().unwrap())];
                rot.push(next);
            }
            (v, rot)
        })
        .collect()
}

/// A planar embedding of `g`, or `None` when `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<RotationSystem> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 2 {
            let (a, b) = (block[0], block[1]);
            rotation[a].push(b);
            rotation[b].push(a);
            continue;
        }
        let faces = embed_block(g, &block)?;
        for (v, rot) in rotations_from_faces(&faces, &block, g) {
            rotation[v].extend(rot);
        }
    }
    Some(RotationSystem::new(g.clone(), rotation).expect("path addition yields a planar rotation system"))
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|b| b.len() <= 4 || embed_block(g, b).is_some())
}

/// True when deleting some single vertex (or none) leaves a planar graph.
pub fn is_apex(g: &Graph) -> bool {
    if is_planar(g) {
        return true;
    }
    let n = g.order();
    let m = g.size();
    (0..n).any(|v| {
        let rest = n - 1;
        (rest < 3 || m - g.degree(v) <= 3 * rest - 6) && is_planar(&g.delete_vertex(v).unwrap())
    })
}
