//! Canonical labeling by individualization and refinement.
//!
//! The ordered partition of the vertices is refined to an equitable one
//! (degree counts into every cell); when cells remain that are not
//! singletons, each vertex of the first smallest such cell is tried in turn
//! and the search recurses. The canonical labeling is the leaf with the
//! lexicographically largest adjacency certificate. Automorphisms found at
//! equal leaves prune sibling branches in the same orbit.

use std::fmt;

use crate::graph::Graph;
use crate::graph6;

/// Dense adjacency bit matrix, `words` 64-bit words per row.
#[derive(Clone, Debug)]
pub(crate) struct BitAdj {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitAdj {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitAdj {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        let mut a = BitAdj::new(g.order());
        for (u, v) in g.edges() {
            a.set(u, v);
            a.set(v, u);
        }
        a
    }

    /// Single-word rows, for graphs with at most 64 vertices.
    pub(crate) fn from_masks(rows: &[u64]) -> Self {
        BitAdj {
            n: rows.len(),
            words: 1,
            data: rows.to_vec(),
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.data[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn has(&self, u: usize, v: usize) -> bool {
        self.data[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.data[u * self.words..(u + 1) * self.words]
    }
}

fn mask_of(cell: &[usize], words: usize) -> Vec<u64> {
    let mut m = vec![0u64; words];
    for &v in cell {
        m[v / 64] |= 1 << (v % 64);
    }
    m
}

fn count_into(adj: &BitAdj, v: usize, mask: &[u64]) -> u32 {
    adj.row(v).iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum()
}

/// Refines an ordered partition until it is equitable.
fn refine(adj: &BitAdj, cells: &mut Vec<Vec<usize>>) {
    let mut ci = 0;
    while ci < cells.len() {
        let mask = mask_of(&cells[ci], adj.words);
        let mut split = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| (count_into(adj, v, &mask), v)).collect();
            keyed.sort_by_key(|&(c, _)| c);
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if keyed[0].0 != keyed[keyed.len() - 1].0 {
                split = true;
            }
        }
        *cells = next;
        if split {
            ci = 0;
        } else {
            ci += 1;
        }
    }
}

struct Search<'a> {
    adj: &'a BitAdj,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl Search<'_> {
    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let n = self.adj.n;
        let words = self.adj.words;
        let mut inv = vec![0; n];
        for (v, &p) in lab.iter().enumerate() {
            inv[p] = v;
        }
        let mut cert = vec![0u64; n * words];
        for i in 0..n {
            let v = inv[i];
            for j in 0..n {
                if self.adj.has(v, inv[j]) {
                    cert[i * words + j / 64] |= 1 << (63 - (j % 64));
                }
            }
        }
        cert
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.adj.n;
        let mut lab = vec![0; n];
        for (p, cell) in cells.iter().enumerate() {
            lab[cell[0]] = p;
        }
        let cert = self.certificate(&lab);
        match &self.best {
            Some((best, best_lab)) if cert == *best => {
                let mut inv = vec![0; n];
                for (v, &p) in best_lab.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| inv[lab[v]]).collect();
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.autos.push(gamma);
                }
            }
            Some((best, _)) if cert < *best => {}
            _ => self.best = Some((cert, lab)),
        }
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let n = self.adj.n;
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.autos {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn recurse(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if explored.iter().any(|&x| self.same_orbit(prefix, x, v)) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(candidates.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.adj, &mut next);
            prefix.push(v);
            self.recurse(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical position of every vertex plus the certificate of the
/// relabeled adjacency matrix.
pub(crate) fn canonical_labeling(adj: &BitAdj) -> (Vec<usize>, Vec<u64>) {
    let n = adj.n;
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut cells = vec![(0..n).collect::<Vec<usize>>()];
    refine(adj, &mut cells);
    let mut search = Search {
        adj,
        best: None,
        autos: Vec::new(),
    };
    search.recurse(cells, &mut Vec::new());
    let (cert, lab) = search.best.expect("search visits at least one leaf");
    (lab, cert)
}

/// Certificate of an unlabeled graph given by single-word adjacency rows.
pub(crate) fn mask_certificate(rows: &[u64]) -> Vec<u64> {
    let mut cert = canonical_labeling(&BitAdj::from_masks(rows)).1;
    cert.push(rows.len() as u64);
    cert
}

/// Canonical byte string of a graph: the graph6 encoding of its canonical
/// relabeling. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

/// The graph relabeled into canonical order, labels dropped.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (lab, _) = canonical_labeling(&BitAdj::from_graph(g));
    g.permute(&lab).unlabeled()
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::encode(&canonical_graph(g)))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}
