//! Subgraph monomorphism on single-word adjacency rows.

use crate::graph::Graph;

pub(crate) fn rows_of(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 64, "bit rows hold at most 64 vertices");
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Search order for a pattern: each vertex is placed after as many of its
/// neighbors as possible, so candidates are cut down by adjacency early.
#[derive(Clone, Debug)]
pub(crate) struct PatternPlan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    degree: Vec<u32>,
}

impl PatternPlan {
    pub(crate) fn new(rows: &[u64]) -> Self {
        let p = rows.len();
        let degree: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
        let mut placed = vec![false; p];
        let mut pos = vec![usize::MAX; p];
        let mut order = Vec::with_capacity(p);
        let mut back = Vec::with_capacity(p);
        for _ in 0..p {
            let next = (0..p)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let mapped = (0..p).filter(|&w| placed[w] && rows[v] >> w & 1 == 1).count();
                    (mapped, degree[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            pos[next] = order.len();
            back.push(
                (0..p)
                    .filter(|&w| rows[next] >> w & 1 == 1 && pos[w] != usize::MAX && w != next)
                    .map(|w| pos[w])
                    .collect(),
            );
            order.push(next);
        }
        PatternPlan { order, back, degree }
    }

    pub(crate) fn order(&self) -> usize {
        self.order.len()
    }
}

/// An injective map from pattern vertices to host vertices carrying
/// pattern edges onto host edges, if one exists.
pub(crate) fn embed(plan: &PatternPlan, host: &[u64]) -> Option<Vec<usize>> {
    let p = plan.order.len();
    let n = host.len();
    if p > n {
        return None;
    }
    let host_deg: Vec<u32> = host.iter().map(|r| r.count_ones()).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut image = vec![0usize; p];
    let mut cands = vec![0u64; p];
    let mut used = 0u64;
    let candidates = |i: usize, image: &[usize], used: u64| -> u64 {
        let mut c = all & !used;
        for &j in &plan.back[i] {
            c &= host[image[j]];
        }
        let need = plan.degree[plan.order[i]];
        let mut out = 0u64;
        let mut rest = c;
        while rest != 0 {
            let h = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if host_deg[h] >= need {
                out |= 1 << h;
            }
        }
        out
    };
    let mut i = 0;
    cands[0] = candidates(0, &image, used);
    loop {
        if cands[i] == 0 {
            if i == 0 {
                return None;
            }
            i -= 1;
            used &= !(1 << image[i]);
            continue;
        }
        let h = cands[i].trailing_zeros() as usize;
        cands[i] &= cands[i] - 1;
        image[i] = h;
        used |= 1 << h;
        if i + 1 == p {
            let mut map = vec![0; p];
            for (k, &v) in plan.order.iter().enumerate() {
                map[v] = image[k];
            }
            return Some(map);
        }
        i += 1;
        cands[i] = candidates(i, &image, used);
    }
}

/// Subgraph monomorphism between two graphs of at most 64 vertices:
/// `map[x]` is the host vertex of pattern vertex `x`.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.order() == 0 {
        return Some(Vec::new());
    }
    let plan = PatternPlan::new(&rows_of(pattern));
    embed(&plan, &rows_of(host))
}
