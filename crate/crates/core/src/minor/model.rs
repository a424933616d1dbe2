use serde::{Deserialize, Serialize};

use crate::graph::{edge, Edge, Graph};

/// Host edge standing in for one pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub pattern_edge: Edge,
    pub host_edge: Edge,
}

/// A minor model: `branch_sets[x]` is the sorted host vertex set of pattern
/// vertex `x`, and every pattern edge has a host edge joining its two sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
    pub edge_witnesses: Vec<EdgeWitness>,
}

impl MinorModel {
    /// Builds a model from branch sets, choosing for each pattern edge the
    /// lexicographically smallest host edge between the two sets. Returns
    /// `None` when some pattern edge has no such host edge.
    pub fn from_branch_sets(host: &Graph, pattern: &Graph, mut sets: Vec<Vec<usize>>) -> Option<Self> {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        let mut owner = vec![usize::MAX; host.order()];
        for (x, s) in sets.iter().enumerate() {
            for &h in s {
                owner[h] = x;
            }
        }
        let mut edge_witnesses = Vec::with_capacity(pattern.size());
        for (x, y) in pattern.edges() {
            let host_edge = sets[x]
                .iter()
                .flat_map(|&a| {
                    host.neighbors(a)
                        .iter()
                        .filter(|&&b| owner[b] == y)
                        .map(move |&b| edge(a, b))
                })
                .min()?;
            edge_witnesses.push(EdgeWitness {
                pattern_edge: (x, y),
                host_edge,
            });
        }
        Some(MinorModel {
            branch_sets: sets,
            edge_witnesses,
        })
    }

    /// The trivial model of a graph in itself.
    pub fn identity(g: &Graph) -> Self {
        MinorModel::from_branch_sets(g, g, (0..g.order()).map(|v| vec![v]).collect())
            .expect("every edge witnesses itself")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("models serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Host vertices used by the model, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.branch_sets.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

fn induces_connected(host: &Graph, set: &[usize]) -> bool {
    let Some(&start) = set.first() else {
        return false;
    };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        i += 1;
        for &y in host.neighbors(x) {
            if set.binary_search(&y).is_ok() && !seen.contains(&y) {
                seen.push(y);
            }
        }
    }
    seen.len() == set.len()
}

/// Checks every model invariant against `host` and `pattern` directly:
/// one nonempty, connected branch set per pattern vertex, pairwise
/// disjoint, and exactly one valid host edge per pattern edge.
pub fn verify_minor_model(host: &Graph, pattern: &Graph, model: &MinorModel) -> bool {
    let n = host.order();
    if model.branch_sets.len() != pattern.order() {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for (x, set) in model.branch_sets.iter().enumerate() {
        let mut sorted = set.clone();
        sorted.sort_unstable();
        if sorted.is_empty() || sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        for &h in &sorted {
            if h >= n || owner[h] != usize::MAX {
                return false;
            }
            owner[h] = x;
        }
        if !induces_connected(host, &sorted) {
            return false;
        }
    }
    let mut covered: Vec<Edge> = Vec::with_capacity(model.edge_witnesses.len());
    for w in &model.edge_witnesses {
        let (x, y) = w.pattern_edge;
        let (a, b) = w.host_edge;
        if x >= pattern.order() || y >= pattern.order() || !pattern.has_edge(x, y) {
            return false;
        }
        if a >= n || b >= n || !host.has_edge(a, b) {
            return false;
        }
        let ok = (owner[a] == x && owner[b] == y) || (owner[a] == y && owner[b] == x);
        if !ok {
            return false;
        }
        covered.push(edge(x, y));
    }
    covered.sort_unstable();
    covered == pattern.edges()
}
