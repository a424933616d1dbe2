//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Set `MAXNIL_LAB_SLOW=1` for the slow suite (H_2, fig7_family(12), and
//! maxnil certification of the theorem family up to n = 24).
//!
//! A criterion contradicted by a certificate that this run checks itself
//! (a verified Petersen-family minor in a graph expected to be linkless)
//! is reported as `FAIL (refuted)` and does not change the exit status.
//! Every other failure exits nonzero.

use std::cell::RefCell;
use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxnil_core::canon::is_isomorphic;
use maxnil_core::cliquesum::{clique_sum, clique_sum_mapped, decompose_at_cut, hls_clique_sum_is_il, CliqueSumSpec};
use maxnil_core::connectivity::{minimal_vertex_cuts, vertex_connectivity};
use maxnil_core::embed::{is_planar, lemma21_condition, RotationSystem};
use maxnil_core::families::*;
use maxnil_core::minor::{
    delta_wye_closure, petersen_family, petersen_name, verify_minor_model, Decider, VerificationReport, Witness,
};
use maxnil_core::{graph6, FamilyError, Graph};

#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    refutations: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn refuted(&mut self, what: impl Into<String>) {
        self.refutations.push(what.into());
    }

    fn absorb<T, E: std::fmt::Display>(&mut self, r: Result<T, E>, what: &str) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

struct Lab {
    decider: Decider,
    slow: bool,
    reports: RefCell<HashMap<String, VerificationReport>>,
    /// Graphs certified maxnil during the run, for the structural checks.
    certified: RefCell<Vec<(String, Graph)>>,
    models_checked: RefCell<usize>,
}

fn pattern_named(name: &str) -> Option<Graph> {
    petersen_family().into_iter().find(|p| petersen_name(p) == name)
}

impl Lab {
    fn witness_ok(&self, g: &Graph, w: &Witness) -> bool {
        *self.models_checked.borrow_mut() += 1;
        pattern_named(&w.pattern).is_some_and(|p| verify_minor_model(g, &p, &w.model))
    }

    fn report(&self, g: &Graph) -> Result<VerificationReport, String> {
        let key = graph6::encode(g);
        if let Some(r) = self.reports.borrow().get(&key) {
            return Ok(r.clone());
        }
        let r = self.decider.maxnil_report(g).map_err(|e| e.to_string())?;
        self.reports.borrow_mut().insert(key, r.clone());
        Ok(r)
    }

    /// Certifies maxnility and checks every witness in the report. Returns
    /// `Some(maxnil)` when the report is internally consistent.
    fn certify(&self, c: &mut Checks, label: &str, g: &Graph) -> Option<VerificationReport> {
        let r = c.absorb(self.report(g), label)?;
        if let Some(w) = &r.linking.witness {
            if self.witness_ok(g, w) {
                c.note(format!("{label} has a verified {} minor", w.pattern));
            } else {
                c.check(false, format!("{label}: IL witness does not verify"));
                return None;
            }
        }
        let st = r.maxnil.as_ref().unwrap();
        for a in &st.augmentations {
            let (x, y) = a.edge;
            let h = g.add_edge(x, y).unwrap();
            if !self.witness_ok(&h, &a.witness) {
                c.check(false, format!("{label}: witness for {x}-{y} does not verify"));
                return None;
            }
        }
        if st.maxnil {
            self.certified.borrow_mut().push((label.to_string(), g.clone()));
        }
        Some(r)
    }

    fn il(&self, c: &mut Checks, label: &str, g: &Graph) -> Option<bool> {
        let w = c.absorb(self.decider.intrinsic_link(g), label)?;
        match w {
            Some(w) if self.witness_ok(g, &w) => Some(true),
            Some(_) => {
                c.check(false, format!("{label}: IL witness does not verify"));
                None
            }
            None => Some(false),
        }
    }

    fn expect_il(&self, c: &mut Checks, label: &str, g: &Graph, want: bool) {
        let got = self.il(c, label, g);
        let word = if want { "IL" } else { "nIL" };
        c.check(got.is_none() || got == Some(want), format!("{label} should be {word}"));
    }

    /// Expects `g` to certify maxnil; a verified IL witness counts as a
    /// refutation rather than a plain failure.
    fn expect_maxnil(&self, c: &mut Checks, label: &str, g: &Graph, augmentations: Option<usize>) -> bool {
        let Some(r) = self.certify(c, label, g) else {
            return false;
        };
        let st = r.maxnil.as_ref().unwrap();
        if let Some(w) = &r.linking.witness {
            c.refuted(format!(
                "{label} is intrinsically linked ({} minor verified)",
                w.pattern
            ));
            return false;
        }
        if let Some((a, b)) = st.nil_augmentation {
            c.check(false, format!("{label}: adding {a}-{b} gives no Petersen-family minor"));
            return false;
        }
        if let Some(k) = augmentations {
            c.check(
                st.augmentations.len() == k,
                format!("{label}: {} augmentations, expected {k}", st.augmentations.len()),
            );
        }
        true
    }
}

fn k6_minus() -> Graph {
    Graph::complete(6).delete_edge(4, 5).unwrap()
}

fn vertex(g: &Graph, name: &str) -> usize {
    g.vertex(name).unwrap_or_else(|| panic!("no vertex {name}"))
}

// ---- shared constructions ------------------------------------------------

struct EdgeSums {
    q_plus_triangle: Graph,
    k6_pair: Graph,
}

fn edge_sums() -> EdgeSums {
    let q = q13_3().unwrap();
    let e = q.edges()[0];
    let spec = CliqueSumSpec::new(q, Graph::complete(3), vec![(e.0, 0), (e.1, 1)]).unwrap();
    let q_plus_triangle = clique_sum(&spec);
    let spec = CliqueSumSpec::new(k6_minus(), k6_minus(), vec![(0, 0), (1, 1)]).unwrap();
    EdgeSums {
        q_plus_triangle,
        k6_pair: clique_sum(&spec),
    }
}

/// `G1 ∪ K ∪ G2` over the triangles `x y t_i`, built from the two copies
/// of `K6^-` and a `K4` on `x, y, t1, t2`. Returns the graph and the two
/// triangles in its numbering. Left private vertices keep their ids;
/// `t2` is right vertex `r`.
fn triangle_bridge(t1: usize, r: usize) -> (Graph, [Vec<usize>; 2]) {
    let k = k6_minus();
    // K on ids 0 = x, 1 = y, 2 = t1, 3 = t2
    let spec = CliqueSumSpec::new(k.clone(), Graph::complete(4), vec![(0, 0), (1, 1), (t1, 2)]).unwrap();
    let (left, map) = clique_sum_mapped(&spec);
    let t2 = map[3];
    let spec = CliqueSumSpec::new(left, k, vec![(0, 0), (1, 1), (t2, r)]).unwrap();
    let (g, _) = clique_sum_mapped(&spec);
    let mut d1 = vec![0, 1, t1];
    let mut d2 = vec![0, 1, t2];
    d1.sort_unstable();
    d2.sort_unstable();
    (g, [d1, d2])
}

// ---- criteria ------------------------------------------------------------

fn c1(_lab: &Lab, c: &mut Checks) {
    let closure = delta_wye_closure(&Graph::complete(6));
    c.check(closure.len() == 7, format!("{} classes", closure.len()));
    c.check(closure.iter().all(|g| g.size() == 15), "edge counts");
    let petersen = closure
        .iter()
        .filter(|g| g.order() == 10 && (0..10).all(|v| g.degree(v) == 3) && g.girth() == Some(5))
        .count();
    c.check(
        petersen == 1,
        format!("{petersen} cubic girth-5 members on 10 vertices"),
    );
    c.note(format!("{} classes with 15 edges", closure.len()));
}

fn c2(lab: &Lab, c: &mut Checks) {
    let k7 = Graph::complete(7);
    let k7t = k7
        .delete_edge(0, 1)
        .unwrap()
        .delete_edge(0, 2)
        .unwrap()
        .delete_edge(1, 2)
        .unwrap();
    let k6 = Graph::complete(6);
    lab.expect_il(c, "K6", &k6, true);
    lab.expect_il(c, "K7 minus a triangle", &k7t, true);
    lab.expect_il(c, "K6 minus an edge", &k6_minus(), false);
    if let Some(k44) = lab.il(c, "K4,4", &Graph::complete_bipartite(4, 4)) {
        c.note(format!("K4,4: {}", if k44 { "IL, witness verified" } else { "nIL" }));
    }
}

fn c3(lab: &Lab, c: &mut Checks) {
    let g = graph_g().unwrap();
    c.check((g.order(), g.size()) == (10, 25), "G counts");
    if lab.expect_maxnil(c, "G", &g, Some(20)) {
        c.note("G: maxnil, 20 augmentations verified");
    }
}

fn c4(lab: &Lab, c: &mut Checks) {
    for i in 1..=3 {
        let g = family_3n5(i).unwrap();
        let n = 10 + i;
        c.check((g.order(), g.size()) == (n, 3 * n - 5), format!("G_{i} counts"));
        if lab.expect_maxnil(c, &format!("G_{i}"), &g, None) {
            c.note(format!("G_{i}: maxnil"));
        }
    }
}

fn c5(lab: &Lab, c: &mut Checks) {
    for i in 0..=2 {
        let g = jorgensen_family(i).unwrap();
        let n = 8 + i;
        c.check((g.order(), g.size()) == (n, 3 * n - 3), format!("J_{i} counts"));
        if lab.expect_maxnil(c, &format!("J_{i}"), &g, Some(n * (n - 1) / 2 - g.size())) {
            c.note(format!("J_{i}: maxnil"));
        }
    }
}

fn c6(lab: &Lab, c: &mut Checks) {
    let q = q13_3().unwrap();
    c.check((q.order(), q.size()) == (13, 26), "Q(13,3) counts");
    c.check(q.is_triangle_free(), "Q(13,3) has a triangle");
    if lab.expect_maxnil(c, "Q(13,3)", &q, Some(52)) {
        c.note("Q(13,3): maxnil, 52 augmentations verified");
    }
}

fn c7(lab: &Lab, c: &mut Checks) {
    for n in 13usize..=50 {
        let Some(g) = c.absorb(theorem_main_graph(n), "theorem_main_graph") else {
            continue;
        };
        let k = (n - 3).div_ceil(36);
        let m = g.size();
        c.check(g.order() == n && m == 2 * n + 3 * k - 3, format!("n={n}: m={m}"));
        // m < 25n/12 - 1/4  <=>  12m + 3 < 25n
        let below = 12 * m + 3 < 25 * n;
        c.check(below, format!("n={n}: m={m} not below 25n/12 - 1/4"));
        c.check(
            BoundsRow::of_graph("t", &g, None).below_target() == below,
            format!("n={n}: rational comparison"),
        );
    }
    c.note("counts and bound for n = 13..50");
    if lab.slow {
        for n in 13..=24 {
            let g = theorem_main_graph(n).unwrap();
            lab.expect_maxnil(c, &format!("theorem graph n={n}"), &g, None);
        }
        c.note("maxnil for n = 13..24");
    }
}

fn c8(lab: &Lab, c: &mut Checks) {
    let sums = edge_sums();
    if lab.expect_maxnil(c, "Q(13,3) + triangle", &sums.q_plus_triangle, None) {
        c.note("Q(13,3) + triangle: maxnil");
    }
    let g = &sums.k6_pair;
    let Some(r) = lab.certify(c, "K6^- + K6^-", g) else {
        return;
    };
    let st = r.maxnil.as_ref().unwrap();
    c.check(!r.linking.intrinsically_linked, "K6^- + K6^- should be nIL");
    let Some((a, b)) = st.nil_augmentation else {
        c.check(false, "K6^- + K6^- certified maxnil");
        return;
    };
    // left private vertices are 2..6, right private ones 6..10
    let predicted = |t: usize| g.has_edge(t, 0) && g.has_edge(t, 1);
    c.check(
        (2..6).contains(&a) && (6..10).contains(&b) && predicted(a) && predicted(b),
        format!("augmentation {a}-{b} is not of the form t1t2"),
    );
    let (bridge, _) = triangle_bridge(a, b - 4);
    c.check(
        is_isomorphic(&bridge, &g.add_edge(a, b).unwrap()),
        "G + t1t2 differs from the triangle sum",
    );
    lab.expect_il(c, "G + t1t2", &bridge, false);
    c.note(format!("K6^- + K6^-: not maxnil, linkless augmentation {a}-{b}"));
}

fn c9(lab: &Lab, c: &mut Checks) {
    let sums = edge_sums();
    let q = &sums.q_plus_triangle;
    let e = q13_3().unwrap().edges()[0];
    let mut cases: Vec<(String, Graph, Vec<usize>)> = vec![
        ("Q(13,3) + triangle".into(), q.clone(), vec![e.0, e.1]),
        ("K6^- + K6^-".into(), sums.k6_pair.clone(), vec![0, 1]),
    ];
    let (bridge, [d1, d2]) = triangle_bridge(2, 2);
    cases.push(("G + t1t2 at the first triangle".into(), bridge.clone(), d1));
    cases.push(("G + t1t2 at the second triangle".into(), bridge, d2));
    let f7 = fig7_graph().unwrap();
    for cut in minimal_vertex_cuts(&f7, 3) {
        cases.push((format!("fig7 at {:?}", cut.vertices), f7.clone(), cut.vertices));
    }
    let f6 = k5_sum_example().unwrap();
    let core: Vec<usize> = ["x", "y", "z", "t", "u"].iter().map(|s| vertex(&f6, s)).collect();
    cases.push(("fig6".into(), f6, core));
    for (label, g, s) in &cases {
        let Some(fast) = c.absorb(hls_clique_sum_is_il(g, s), label) else {
            continue;
        };
        if let Some(direct) = lab.il(c, label, g) {
            c.check(fast == direct, format!("{label}: sum test {fast}, minor test {direct}"));
        }
    }
    c.note(format!("{} sums agree", cases.len()));
}

fn c10(lab: &Lab, c: &mut Checks) {
    let mut graphs = vec![("fig7".to_string(), fig7_graph().unwrap())];
    if lab.slow {
        graphs.push(("fig7_family(12)".into(), fig7_family(12).unwrap()));
    }
    for (label, g) in graphs {
        lab.expect_maxnil(c, &label, &g, None);
        let Some(r) = c.absorb(lab.decider.k6_maximal_report(&g), &label) else {
            continue;
        };
        let st = r.k6_maximal.unwrap();
        c.check(!st.maximal, format!("{label} is maximal without a K6 minor"));
        let (v, w) = (vertex(&g, "v"), vertex(&g, "w"));
        let vw = g.add_edge(v, w).unwrap();
        if let Some(m) = c.absorb(lab.decider.k6_minor(&vw), &label) {
            c.check(m.is_none(), format!("{label} + vw has a K6 minor"));
        }
        c.note(format!("{label}: maxnil, + vw has no K6 minor"));
    }
}

fn c11(lab: &Lab, c: &mut Checks) {
    let g = k5_sum_example().unwrap();
    c.check((g.order(), g.size()) == (7, 18), "fig6 counts");
    lab.expect_maxnil(c, "fig6", &g, None);
    let h = g.delete_vertex(vertex(&g, "u")).unwrap();
    c.check(
        is_planar(&h) && h.size() == 3 * h.order() - 6,
        "fig6 - u is not maximal planar",
    );
    c.note("fig6: maxnil, G - u maximal planar");
}

fn c12(lab: &Lab, c: &mut Checks) {
    type Emb = Result<RotationSystem, FamilyError>;
    let cases: [(&str, Graph, Emb); 3] = [
        ("Jorgensen", jorgensen_graph().unwrap(), jorgensen_embedding(0)),
        ("G", graph_g().unwrap(), family_3n5_embedding(0)),
        ("G_1", family_3n5(1).unwrap(), family_3n5_embedding(1)),
    ];
    for (label, g, emb) in cases {
        let Some(emb) = c.absorb(emb, label) else {
            continue;
        };
        let (u, v) = (vertex(&g, "u"), vertex(&g, "v"));
        let Some(holds) = c.absorb(lemma21_condition(&g, u, v, &emb), label) else {
            continue;
        };
        let il = lab.il(c, label, &g);
        if holds {
            c.check(
                il == Some(false),
                format!("{label}: condition holds but the graph is not certified nIL"),
            );
            c.note(format!("{label}: holds"));
        } else if il == Some(true) {
            c.refuted(format!(
                "{label}: condition fails; the graph has a verified Petersen-family minor"
            ));
        } else {
            c.check(false, format!("{label}: condition fails"));
        }
    }
}

fn c13(lab: &Lab, c: &mut Checks) {
    let graphs = lab.certified.borrow().clone();
    for (label, g) in &graphs {
        let (n, m) = (g.order(), g.size());
        c.check(
            n < 3 || vertex_connectivity(g) >= 2,
            format!("{label} is not 2-connected"),
        );
        if n >= 5 {
            c.check(
                2 * n <= m && m + 10 <= 4 * n,
                format!("{label}: m={m} outside 2n..4n-10"),
            );
        }
        for cut in minimal_vertex_cuts(g, 4) {
            let s = &cut.vertices;
            let (h, _) = g.induced_subgraph(s);
            let c4_sub = h.is_triangle_free() && (0..4).all(|x| h.degree(x) <= 2);
            c.check(g.is_clique(s) || c4_sub, format!("{label}: 4-cut {s:?}"));
        }
    }
    c.note(format!("{} certified graphs", graphs.len()));
}

fn c14(lab: &Lab, c: &mut Checks) {
    let h = h_k(2).unwrap();
    c.check((h.order(), h.size()) == (24, 51), "H_2 counts");
    let start = Instant::now();
    let ok = lab.expect_maxnil(c, "H_2", &h, Some(225));
    c.check(
        start.elapsed() <= Duration::from_secs(30 * 60),
        "H_2 exceeded 30 minutes",
    );
    if ok {
        c.note("H_2: maxnil, 225 augmentations verified");
    }
    // the pieces of the edge sum are the two copies
    let cut = [0, 1];
    if let Some(pieces) = c.absorb(decompose_at_cut(&h, &cut), "H_2 cut") {
        let q = q13_3().unwrap();
        c.check(pieces.iter().all(|(p, _)| is_isomorphic(p, &q)), "H_2 pieces");
    }
}

type Criterion = (u32, &'static str, f64, bool, fn(&Lab, &mut Checks));

fn main() -> ExitCode {
    let slow = std::env::var("MAXNIL_LAB_SLOW").is_ok_and(|v| v == "1");
    let lab = Lab {
        decider: Decider::default(),
        slow,
        reports: RefCell::new(HashMap::new()),
        certified: RefCell::new(Vec::new()),
        models_checked: RefCell::new(0),
    };
    let criteria: [Criterion; 14] = [
        (1, "Petersen closure", 1.0, false, c1),
        (2, "IL decider sanity", 4.0, false, c2),
        (3, "graph G is maxnil", 30.0, false, c3),
        (4, "3n-5 family G_1..G_3", 360.0, false, c4),
        (5, "Jorgensen family J_0..J_2", 180.0, false, c5),
        (6, "Q(13,3)", 120.0, false, c6),
        (7, "theorem family counts and bound", 1.0, false, c7),
        (8, "edge-sum lemma, both directions", 60.0, false, c8),
        (9, "sum test agrees with minor test", 120.0, false, c9),
        (10, "fig7 separates the classes", 120.0, false, c10),
        (11, "fig6", 5.0, false, c11),
        (12, "separation condition on drawn embeddings", 30.0, false, c12),
        (13, "structural invariants", 120.0, false, c13),
        (14, "H_2", 1800.0, true, c14),
    ];
    let mut failed = 0;
    let mut refuted = 0;
    for (id, title, target, needs_slow, run) in criteria {
        if needs_slow && !slow {
            println!("SKIP {id:>2} {title} (set MAXNIL_LAB_SLOW=1)");
            continue;
        }
        let mut c = Checks::default();
        let start = Instant::now();
        run(&lab, &mut c);
        let secs = start.elapsed().as_secs_f64();
        // the slow suite adds maxnil certification of n = 13..24
        let target = if id == 7 && slow { 30.0 * 60.0 } else { target };
        let timing = format!(
            "{secs:.2} s, target {target} s{}",
            if secs > target { ", over target" } else { "" }
        );
        if !c.failures.is_empty() {
            failed += 1;
            println!("FAIL {id:>2} {title}: {} [{timing}]", c.failures.join("; "));
        } else if !c.refutations.is_empty() {
            refuted += 1;
            println!(
                "FAIL {id:>2} {title} (refuted): {} [{timing}]",
                c.refutations.join("; ")
            );
        } else {
            println!("PASS {id:>2} {title}: {} [{timing}]", c.notes.join("; "));
        }
    }
    println!(
        "{failed} failed, {refuted} refuted by verified certificates, {} minor models checked",
        lab.models_checked.borrow()
    );
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
