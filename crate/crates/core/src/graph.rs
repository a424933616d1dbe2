//! Simple undirected graphs and the elementary transformations used by the
//! minor machinery: deletion, contraction, subdivision, vertex splitting and
//! the ∇Y / Y∇ exchanges.
//!
//! Graph values are immutable; every transformation returns a fresh graph.
//! Vertex ids are dense (`0..n`). Operations that remove vertices shift the
//! ids above the removed one down by one, and labels travel with their
//! vertices, so named vertices survive arbitrary pipelines.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::GraphError;

/// An undirected edge with `0 <= .0 < .1`.
pub type Edge = (usize, usize);

/// Normalizes a vertex pair so the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

/// Neighbor assignment for [`Graph::split_vertex`].
///
/// `keep` stays on the original vertex, `moved` goes to the new vertex and
/// `shared` attaches to both. The three sets must partition the neighborhood.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSplit {
    pub keep: Vec<usize>,
    pub moved: Vec<usize>,
    pub shared: Vec<usize>,
}

impl Graph {
    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            labels: vec![None; order],
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut adj = vec![Vec::new(); order];
        for (u, row) in adj.iter_mut().enumerate() {
            row.extend((0..order).filter(|&v| v != u));
        }
        Graph {
            adj,
            labels: vec![None; order],
        }
    }

    pub fn cycle(order: usize) -> Self {
        let edges: Vec<Edge> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Graph::from_edges(order, &edges).expect("cycle needs at least three vertices")
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<Edge> = (1..order).map(|i| (i - 1, i)).collect();
        Graph::from_edges(order, &edges).expect("valid path")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<Edge> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        Graph::from_edges(a + b, &edges).expect("valid bipartite graph")
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("valid multipartite graph")
    }

    /// Builds a graph from an explicit edge list, rejecting loops, repeated
    /// pairs and endpoints outside `0..order`.
    pub fn from_edges(order: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !seen.insert(edge(u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            adj,
            labels: vec![None; order],
        })
    }

    /// Builds a graph from an edge list plus a name for every vertex.
    pub fn with_labels(order: usize, edges: &[Edge], labels: &[&str]) -> Result<Self, GraphError> {
        let g = Graph::from_edges(order, edges)?;
        if labels.len() != order {
            return Err(GraphError::LabelCount {
                expected: order,
                found: labels.len(),
            });
        }
        g.relabel(labels.iter().map(|s| Some(s.to_string())).collect())
    }

    /// Builds a labelled graph from named edges. Vertices are numbered in
    /// the order of `names`.
    pub fn from_named_edges(names: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        if index.len() != names.len() {
            let mut seen = BTreeSet::new();
            let dup = names.iter().find(|s| !seen.insert(**s)).unwrap();
            return Err(GraphError::DuplicateLabel(dup.to_string()));
        }
        let mut list = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = *index.get(a).ok_or_else(|| GraphError::UnknownLabel(a.to_string()))?;
            let v = *index.get(b).ok_or_else(|| GraphError::UnknownLabel(b.to_string()))?;
            list.push((u, v));
        }
        Graph::with_labels(names.len(), &list, names)
    }

    /// Replaces the label vector. Labels must be unique where present.
    pub fn relabel(mut self, labels: Vec<Option<String>>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount {
                expected: self.order(),
                found: labels.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for l in labels.iter().flatten() {
            if !seen.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Drops all labels.
    pub fn unlabeled(mut self) -> Self {
        self.labels = vec![None; self.order()];
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn is_labeled(&self) -> bool {
        self.labels.iter().any(Option::is_some)
    }

    /// Vertex carrying `name`, if any.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(name))
    }

    /// Like [`Graph::vertex`] but reports a missing name as an error.
    pub fn vertex_named(&self, name: &str) -> Result<usize, GraphError> {
        self.vertex(name)
            .ok_or_else(|| GraphError::UnknownLabel(name.to_string()))
    }

    /// Display name: the label when present, otherwise the numeric id.
    pub fn name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// True when every pair of `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::MissingVertex(v))
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(GraphError::MissingEdge(u, v))
        }
    }

    fn rebuild(order: usize, edges: impl IntoIterator<Item = Edge>, labels: Vec<Option<String>>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Graph { adj, labels }
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut g = self.clone();
        let pos = g.adj[u].binary_search(&v).unwrap_err();
        g.adj[u].insert(pos, v);
        let pos = g.adj[v].binary_search(&u).unwrap_err();
        g.adj[v].insert(pos, u);
        Ok(g)
    }

    /// Appends a fresh vertex joined to `neighbors`; returns the graph and
    /// the new id (always the old order).
    pub fn add_vertex(&self, neighbors: &[usize], label: Option<&str>) -> Result<(Graph, usize), GraphError> {
        let w = self.order();
        for &x in neighbors {
            self.check_vertex(x)?;
        }
        if let Some(l) = label {
            if self.vertex(l).is_some() {
                return Err(GraphError::DuplicateLabel(l.to_string()));
            }
        }
        let mut edges = self.edges();
        let mut uniq = BTreeSet::new();
        for &x in neighbors {
            if !uniq.insert(x) {
                return Err(GraphError::DuplicateEdge(x, w));
            }
            edges.push((x, w));
        }
        let mut labels = self.labels.clone();
        labels.push(label.map(str::to_string));
        Ok((Graph::rebuild(w + 1, edges, labels), w))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.adj[u].retain(|&x| x != v);
        g.adj[v].retain(|&x| x != u);
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.remove_vertices(&[v]).0)
    }

    /// Deletes a set of vertices. Returns the new graph and the map from old
    /// ids to new ids (`None` for deleted vertices).
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in removed {
            if v < n {
                gone[v] = true;
            }
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        let (g, _) = self.induced_subgraph(&keep);
        let mut map = vec![None; n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        (g, map)
    }

    /// Subgraph induced by `vertices`, numbered in the given order. The
    /// returned vector maps new ids back to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        (Graph::rebuild(vertices.len(), edges, labels), vertices.to_vec())
    }

    /// Contracts the edge `uv`. The merged vertex keeps the smaller id and
    /// its label; parallel edges collapse and no loop is kept.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Ok(self.contract_edge_mapped(u, v)?.0)
    }

    /// [`Graph::contract_edge`] plus the old-id to new-id map.
    pub fn contract_edge_mapped(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_edge(u, v)?;
        let (keep, gone) = edge(u, v);
        let map: Vec<usize> = (0..self.order())
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let edges = self.edges().into_iter().map(|(a, b)| edge(map[a], map[b]));
        let mut labels = self.labels.clone();
        labels.remove(gone);
        Ok((Graph::rebuild(self.order() - 1, edges, labels), map))
    }

    /// Contracts a connected vertex set onto its smallest member.
    pub fn contract_set(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut members: Vec<usize> = set.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut g = self.clone();
        while members.len() > 1 {
            let root = members[0];
            let next = members
                .iter()
                .skip(1)
                .copied()
                .find(|&w| g.has_edge(root, w))
                .ok_or(GraphError::Disconnected)?;
            let (h, map) = g.contract_edge_mapped(root, next)?;
            members = members.iter().filter(|&&w| w != next).map(|&w| map[w]).collect();
            g = h;
        }
        Ok(g)
    }

    /// Replaces `uv` by a path `u w v` through a fresh vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<(Graph, usize), GraphError> {
        self.subdivide_edge_labeled(u, v, None)
    }

    pub fn subdivide_edge_labeled(
        &self,
        u: usize,
        v: usize,
        label: Option<&str>,
    ) -> Result<(Graph, usize), GraphError> {
        self.check_edge(u, v)?;
        self.delete_edge(u, v)?.add_vertex(&[u, v], label)
    }

    /// Splits `v` into an adjacent pair `v`, `v'` (with `v' = n`).
    ///
    /// Contracting the new edge `vv'` gives back the original graph.
    pub fn split_vertex(&self, v: usize, split: &VertexSplit) -> Result<(Graph, usize), GraphError> {
        self.split_vertex_labeled(v, split, None)
    }

    pub fn split_vertex_labeled(
        &self,
        v: usize,
        split: &VertexSplit,
        label: Option<&str>,
    ) -> Result<(Graph, usize), GraphError> {
        self.check_vertex(v)?;
        let mut all: Vec<usize> = split
            .keep
            .iter()
            .chain(&split.moved)
            .chain(&split.shared)
            .copied()
            .collect();
        all.sort_unstable();
        let count = all.len();
        all.dedup();
        if count != all.len() || all.as_slice() != self.neighbors(v) {
            return Err(GraphError::BadSplit(v));
        }
        let mut g = self.clone();
        for &x in &split.moved {
            g = g.delete_edge(v, x)?;
        }
        let mut new_nbrs: Vec<usize> = split.moved.iter().chain(&split.shared).copied().collect();
        new_nbrs.push(v);
        g.add_vertex(&new_nbrs, label)
    }

    /// ∇Y exchange: removes the triangle `abc` and joins a fresh vertex
    /// (id `n`) to its corners.
    pub fn triangle_to_y(&self, a: usize, b: usize, c: usize) -> Result<(Graph, usize), GraphError> {
        for x in [a, b, c] {
            self.check_vertex(x)?;
        }
        if a == b || b == c || a == c || !self.is_clique(&[a, b, c]) {
            return Err(GraphError::NotATriangle(a, b, c));
        }
        let g = self.delete_edge(a, b)?.delete_edge(b, c)?.delete_edge(a, c)?;
        g.add_vertex(&[a, b, c], None)
    }

    /// Y∇ exchange: removes a degree-3 vertex and joins its neighbors
    /// pairwise, collapsing any duplicate edges.
    pub fn y_to_triangle(&self, center: usize) -> Result<Graph, GraphError> {
        self.check_vertex(center)?;
        let deg = self.degree(center);
        if deg != 3 {
            return Err(GraphError::WrongDegree {
                vertex: center,
                degree: deg,
            });
        }
        let nb = self.adj[center].clone();
        let mut edges = self.edges();
        edges.extend([(nb[0], nb[1]), (nb[0], nb[2]), (nb[1], nb[2])]);
        let full = Graph::rebuild(
            self.order(),
            edges.into_iter().map(|(a, b)| edge(a, b)),
            self.labels.clone(),
        );
        full.delete_vertex(center)
    }

    pub fn is_triangular_edge(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_edge(u, v)?;
        Ok(!self.common_neighbors(u, v).is_empty())
    }

    pub fn non_triangular_edges(&self) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.common_neighbors(u, v).is_empty())
            .collect()
    }

    /// True when every edge lies in a triangle.
    pub fn is_triangular_graph(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| !self.common_neighbors(u, v).is_empty())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.common_neighbors(u, v).is_empty())
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + off, b + off)));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Graph::rebuild(off + other.order(), edges, labels)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        let edges = self.edges().into_iter().map(|(a, b)| edge(perm[a], perm[b]));
        let mut labels = vec![None; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        Graph::rebuild(n, edges, labels)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, [", self.order(), self.size())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", self.name(u), self.name(v))?;
        }
        write!(f, "])")
    }
}
