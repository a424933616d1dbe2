//! Exact minor search with certificates.
//!
//! For a connected pattern and a connected host, a pattern `P` is a minor
//! iff the host vertices can be partitioned into `|P|` connected parts whose
//! quotient graph contains `P` as a spanning subgraph: unused host vertices
//! can always be absorbed into a neighboring branch set. The search walks
//! the quotients reachable by edge contractions, memoizing refuted
//! quotients by canonical certificate.
//!
//! Before that, hosts are split into components, blocks and (for
//! 3-connected patterns) the two sides of 2-vertex separators, each side
//! completed by the separator edge. A cheap randomized contraction phase
//! runs before the exhaustive one to find witnesses early.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::model::MinorModel;
use super::subgraph::{embed, rows_of, PatternPlan};
use crate::canon::{canonical_form, mask_certificate};
use crate::connectivity::{blocks, components, components_without, find_two_separator, vertex_connectivity};
use crate::embed::{is_apex, is_planar};
use crate::error::MinorError;
use crate::graph::Graph;

/// Patterns searched for together. A host contains the set when it
/// contains any member; the first member found supplies the witness.
#[derive(Debug)]
pub struct PatternSet {
    graphs: Vec<Graph>,
    plans: Vec<PatternPlan>,
    orders: Vec<usize>,
    sizes: Vec<usize>,
    min_degrees: Vec<usize>,
    connected: bool,
    connectivity: usize,
    non_apex: bool,
    non_planar: bool,
    key: u64,
}

impl PatternSet {
    pub fn new(graphs: Vec<Graph>) -> Self {
        let graphs: Vec<Graph> = graphs.into_iter().map(Graph::unlabeled).collect();
        let plans = graphs.iter().map(|g| PatternPlan::new(&rows_of(g))).collect();
        let connected = graphs.iter().all(|g| g.order() > 0 && components(g).len() == 1);
        let connectivity = graphs.iter().map(vertex_connectivity).min().unwrap_or(0);
        let mut hasher = DefaultHasher::new();
        for g in &graphs {
            canonical_form(g).hash(&mut hasher);
        }
        PatternSet {
            orders: graphs.iter().map(Graph::order).collect(),
            sizes: graphs.iter().map(Graph::size).collect(),
            min_degrees: graphs.iter().map(Graph::min_degree).collect(),
            non_apex: graphs.iter().all(|g| !is_apex(g)),
            non_planar: graphs.iter().all(|g| !is_planar(g)),
            connected,
            connectivity,
            key: hasher.finish(),
            plans,
            graphs,
        }
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    fn min_order(&self) -> usize {
        self.orders.iter().copied().min().unwrap_or(0)
    }

    fn max_order(&self) -> usize {
        self.orders.iter().copied().max().unwrap_or(0)
    }

    fn min_size(&self) -> usize {
        self.sizes.iter().copied().min().unwrap_or(0)
    }
}

/// Search effort settings. `budget` caps the number of exhaustive-search
/// nodes per query; exhausting it yields [`MinorError::Undecided`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: Option<u64>,
    pub seed: u64,
    pub heuristic_trials: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: None,
            seed: 0x6d61_786e_696c,
            heuristic_trials: 200,
        }
    }
}

/// A reusable searcher. Refuted host pieces are cached by canonical form,
/// so repeated queries on related graphs (edge augmentations of one graph)
/// share work. Safe to use from several threads.
#[derive(Debug, Default)]
pub struct MinorSearcher {
    config: SearchConfig,
    refuted: Mutex<HashSet<(u64, Vec<u64>)>>,
}

/// Internal result: pattern index plus branch sets in host ids.
struct Hit {
    pattern: usize,
    sets: Vec<Vec<usize>>,
}

impl MinorSearcher {
    pub fn new(config: SearchConfig) -> Self {
        MinorSearcher {
            config,
            refuted: Mutex::new(HashSet::new()),
        }
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    /// Index of a pattern found as a minor of `host` together with a
    /// verified model, or `None` if no pattern of the set is a minor.
    pub fn find(&self, host: &Graph, pats: &PatternSet) -> Result<Option<(usize, MinorModel)>, MinorError> {
        if let Some(i) = pats.orders.iter().position(|&p| p == 0) {
            return Ok(Some((
                i,
                MinorModel {
                    branch_sets: Vec::new(),
                    edge_witnesses: Vec::new(),
                },
            )));
        }
        let mut ctx = Ctx {
            pats,
            searcher: self,
            nodes: 0,
        };
        let hit = if pats.connected {
            ctx.reduce(host)?
        } else {
            ctx.general(host)?
        };
        Ok(hit.map(|h| {
            let pattern = &pats.graphs[h.pattern];
            let model =
                MinorModel::from_branch_sets(host, pattern, h.sets).expect("search produces adjacent branch sets");
            debug_assert!(super::model::verify_minor_model(host, pattern, &model));
            (h.pattern, model)
        }))
    }

    fn is_refuted(&self, key: &(u64, Vec<u64>)) -> bool {
        self.refuted.lock().unwrap().contains(key)
    }

    fn refute(&self, key: (u64, Vec<u64>)) {
        self.refuted.lock().unwrap().insert(key);
    }
}

/// A quotient of the host: adjacency rows plus the host vertices merged
/// into each quotient vertex.
#[derive(Clone)]
struct State {
    adj: Vec<u64>,
    members: Vec<u64>,
}

fn remove_bit(row: u64, b: usize) -> u64 {
    let low = row & ((1u64 << b) - 1);
    let high = if b == 63 { 0 } else { (row >> (b + 1)) << b };
    low | high
}

impl State {
    fn initial(rows: Vec<u64>) -> Self {
        let members = (0..rows.len()).map(|v| 1u64 << v).collect();
        State { adj: rows, members }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edges(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Merges `b` into `a` (`a < b`).
    fn contract(&self, a: usize, b: usize) -> State {
        debug_assert!(a < b);
        let mut adj = self.adj.clone();
        let mut members = self.members.clone();
        adj[a] = (adj[a] | adj[b]) & !(1u64 << a) & !(1u64 << b);
        for (r, row) in adj.iter_mut().enumerate() {
            if r != a && r != b && *row >> b & 1 == 1 {
                *row |= 1u64 << a;
            }
        }
        members[a] |= members[b];
        adj.remove(b);
        members.remove(b);
        for row in &mut adj {
            *row = remove_bit(*row, b);
        }
        State { adj, members }
    }

    fn branch_sets(&self, map: &[usize]) -> Vec<Vec<usize>> {
        map.iter().map(|&q| bits(self.members[q]).collect()).collect()
    }

    fn graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n())
            .flat_map(|a| bits(self.adj[a]).filter(move |&b| a < b).map(move |b| (a, b)))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("quotient rows are simple")
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

struct Ctx<'a> {
    pats: &'a PatternSet,
    searcher: &'a MinorSearcher,
    nodes: u64,
}

impl Ctx<'_> {
    fn tick(&mut self) -> Result<(), MinorError> {
        self.nodes += 1;
        match self.searcher.config.budget {
            Some(b) if self.nodes > b => Err(MinorError::Undecided(b)),
            _ => Ok(()),
        }
    }

    fn reduce(&mut self, g: &Graph) -> Result<Option<Hit>, MinorError> {
        let p = self.pats;
        if g.order() < p.min_order() || g.size() < p.min_size() {
            return Ok(None);
        }
        let comps = components(g);
        if comps.len() > 1 {
            for c in comps {
                if let Some(hit) = self.reduce_on(g, &c)? {
                    return Ok(Some(hit));
                }
            }
            return Ok(None);
        }
        if p.connectivity >= 2 {
            let bl = blocks(g);
            if bl.len() > 1 {
                for b in bl {
                    if let Some(hit) = self.reduce_on(g, &b)? {
                        return Ok(Some(hit));
                    }
                }
                return Ok(None);
            }
        }
        if p.connectivity >= 3 && g.order() > 3 {
            if let Some((x, y)) = find_two_separator(g) {
                return self.reduce_two_cut(g, x, y);
            }
        }
        self.core(g)
    }

    fn reduce_on(&mut self, g: &Graph, verts: &[usize]) -> Result<Option<Hit>, MinorError> {
        let (sub, map) = g.induced_subgraph(verts);
        Ok(self.reduce(&sub)?.map(|mut hit| {
            for s in &mut hit.sets {
                for v in s.iter_mut() {
                    *v = map[*v];
                }
            }
            hit
        }))
    }

    /// Each side of the separator `{x, y}` plus the edge `xy`. When a model
    /// found in one side uses both `x` and `y`, an `x`-`y` path through
    /// another side is added to the branch set of `x`, which realizes any
    /// use of the added edge.
    fn reduce_two_cut(&mut self, g: &Graph, x: usize, y: usize) -> Result<Option<Hit>, MinorError> {
        let parts = components_without(g, &[x, y]);
        for (i, part) in parts.iter().enumerate() {
            let mut verts = part.clone();
            verts.push(x);
            verts.push(y);
            verts.sort_unstable();
            let (mut sub, map) = g.induced_subgraph(&verts);
            let lx = map.iter().position(|&v| v == x).unwrap();
            let ly = map.iter().position(|&v| v == y).unwrap();
            let virtual_edge = !sub.has_edge(lx, ly);
            if virtual_edge {
                sub = sub.add_edge(lx, ly).expect("separator pair is nonadjacent");
            }
            let Some(mut hit) = self.reduce(&sub)? else {
                continue;
            };
            for s in &mut hit.sets {
                for v in s.iter_mut() {
                    *v = map[*v];
                }
            }
            if virtual_edge {
                let sx = hit.sets.iter().position(|s| s.contains(&x));
                let sy = hit.sets.iter().position(|s| s.contains(&y));
                if let (Some(sx), Some(_)) = (sx, sy) {
                    let other = if i == 0 { &parts[1] } else { &parts[0] };
                    let interior = path_through(g, x, y, other);
                    hit.sets[sx].extend(interior);
                    hit.sets[sx].sort_unstable();
                }
            }
            return Ok(Some(hit));
        }
        Ok(None)
    }

    fn core(&mut self, g: &Graph) -> Result<Option<Hit>, MinorError> {
        let n = g.order();
        if n > 64 {
            return Err(MinorError::TooLarge(n));
        }
        let rows = rows_of(g);
        let key = (self.pats.key, mask_certificate(&rows));
        if self.searcher.is_refuted(&key) {
            return Ok(None);
        }
        if (self.pats.non_apex && is_apex(g)) || (self.pats.non_planar && is_planar(g)) {
            self.searcher.refute(key);
            return Ok(None);
        }
        let start = State::initial(rows);
        if let Some(hit) = self.heuristic(&start) {
            return Ok(Some(hit));
        }
        let mut memo = HashSet::new();
        match self.exact(&start, &mut memo)? {
            Some(hit) => Ok(Some(hit)),
            None => {
                self.searcher.refute(key);
                Ok(None)
            }
        }
    }

    fn check(&self, st: &State, spanning_only: bool) -> Option<Hit> {
        let n = st.n();
        for (i, plan) in self.pats.plans.iter().enumerate() {
            let p = plan.order();
            if p > n || (spanning_only && p != n) || st.edges() < self.pats.sizes[i] {
                continue;
            }
            if let Some(map) = embed(plan, &st.adj) {
                return Some(Hit {
                    pattern: i,
                    sets: st.branch_sets(&map),
                });
            }
        }
        None
    }

    /// Random contraction sequences, preferring low-degree vertices and
    /// edges whose ends share few neighbors.
    fn heuristic(&self, start: &State) -> Option<Hit> {
        let pats = self.pats;
        let min_deg = pats.min_degrees.iter().copied().min().unwrap_or(0) as u32;
        let mut rng = ChaCha8Rng::seed_from_u64(self.searcher.config.seed);
        for _ in 0..self.searcher.config.heuristic_trials {
            let mut st = start.clone();
            loop {
                let n = st.n();
                if n <= pats.max_order() + 2 {
                    if let Some(hit) = self.check(&st, false) {
                        return Some(hit);
                    }
                }
                if n <= pats.min_order() || st.edges() < pats.min_size() {
                    break;
                }
                let low = (0..n).map(|v| st.degree(v)).min().unwrap();
                let (v, w) = if low < min_deg || rng.gen_bool(0.5) {
                    let lows: Vec<usize> = (0..n).filter(|&v| st.degree(v) == low).collect();
                    let v = *lows.choose(&mut rng).unwrap();
                    let best = bits(st.adj[v])
                        .map(|w| (st.adj[v] & st.adj[w]).count_ones())
                        .min()
                        .unwrap();
                    let ws: Vec<usize> = bits(st.adj[v])
                        .filter(|&w| (st.adj[v] & st.adj[w]).count_ones() == best)
                        .collect();
                    (v, *ws.choose(&mut rng).unwrap())
                } else {
                    let v = rng.gen_range(0..n);
                    let ws: Vec<usize> = bits(st.adj[v]).collect();
                    (v, *ws.choose(&mut rng).unwrap())
                };
                st = st.contract(v.min(w), v.max(w));
            }
        }
        None
    }

    fn exact(&mut self, st: &State, memo: &mut HashSet<Vec<u64>>) -> Result<Option<Hit>, MinorError> {
        self.tick()?;
        let pats = self.pats;
        let n = st.n();
        if let Some(hit) = self.check(st, true) {
            return Ok(Some(hit));
        }
        let e = st.edges();
        // Each contraction loses at least one edge.
        let smaller: Vec<usize> = (0..pats.len())
            .filter(|&i| pats.orders[i] < n && e >= pats.sizes[i] + (n - pats.orders[i]))
            .collect();
        if smaller.is_empty() {
            return Ok(None);
        }
        let cert = mask_certificate(&st.adj);
        if memo.contains(&cert) {
            return Ok(None);
        }
        let g = st.graph();
        if (pats.non_apex && is_apex(&g)) || (pats.non_planar && is_planar(&g)) {
            memo.insert(cert);
            return Ok(None);
        }
        // A vertex of degree below every remaining pattern's minimum degree
        // cannot be a branch set alone, so its part contains a neighbor.
        // For degree at most 2 all such contractions give the same graph.
        let delta = smaller.iter().map(|&i| pats.min_degrees[i]).min().unwrap() as u32;
        let v = (0..n).min_by_key(|&v| (st.degree(v), v)).unwrap();
        let mut edges: Vec<(usize, usize)> = if st.degree(v) < delta {
            let nbrs: Vec<usize> = bits(st.adj[v]).collect();
            let take = if st.degree(v) <= 2 { 1 } else { nbrs.len() };
            nbrs[..take].iter().map(|&w| (v.min(w), v.max(w))).collect()
        } else {
            (0..n)
                .flat_map(|a| bits(st.adj[a]).filter(move |&b| a < b).map(move |b| (a, b)))
                .collect()
        };
        edges.sort_by_key(|&(a, b)| ((st.adj[a] & st.adj[b]).count_ones(), a, b));
        for (a, b) in edges {
            if let Some(hit) = self.exact(&st.contract(a, b), memo)? {
                return Ok(Some(hit));
            }
        }
        memo.insert(cert);
        Ok(None)
    }

    /// Exhaustive search without the full-cover assumption, for patterns
    /// with several components: every quotient is tested for a (not
    /// necessarily spanning) copy of each pattern.
    fn general(&mut self, g: &Graph) -> Result<Option<Hit>, MinorError> {
        let n = g.order();
        if n > 64 {
            return Err(MinorError::TooLarge(n));
        }
        let mut memo = HashSet::new();
        self.general_rec(&State::initial(rows_of(g)), &mut memo)
    }

    fn general_rec(&mut self, st: &State, memo: &mut HashSet<Vec<u64>>) -> Result<Option<Hit>, MinorError> {
        self.tick()?;
        if st.n() < self.pats.min_order() || st.edges() < self.pats.min_size() {
            return Ok(None);
        }
        if let Some(hit) = self.check(st, false) {
            return Ok(Some(hit));
        }
        let cert = mask_certificate(&st.adj);
        if !memo.insert(cert) {
            return Ok(None);
        }
        for a in 0..st.n() {
            for b in bits(st.adj[a]).filter(|&b| a < b) {
                if let Some(hit) = self.general_rec(&st.contract(a, b), memo)? {
                    return Ok(Some(hit));
                }
            }
        }
        Ok(None)
    }
}

/// Interior vertices of a shortest `x`-`y` path whose interior lies in
/// `part`.
fn path_through(g: &Graph, x: usize, y: usize, part: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if b == y && a != x {
                let mut path = vec![a];
                let mut z = a;
                while prev[z] != x {
                    z = prev[z];
                    path.push(z);
                }
                return path;
            }
            if prev[b] == usize::MAX && part.binary_search(&b).is_ok() {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    unreachable!("every side of a minimal separator reaches both separator vertices")
}
