use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use maxnil_core::families::BoundsRow;
use maxnil_core::minor::VerificationReport;
use maxnil_core::{graph6, Graph};

/// Outcome of the planar separation check for one vertex pair.
#[derive(Debug, Serialize)]
pub struct Lemma21 {
    pub u: usize,
    pub v: usize,
    pub planar: bool,
    pub holds: bool,
    pub violating_cycle: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct SumResult {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub clique_order: usize,
    pub predicate: Option<bool>,
    pub certified: Option<bool>,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn graph_json(g: &Graph) -> Value {
    let mut v = json!({
        "graph6": graph6::encode(g),
        "n": g.order(),
        "m": g.size(),
        "edges": g.edges(),
    });
    if g.is_labeled() {
        v["labels"] = json!(g.labels());
    }
    v
}

pub fn report_json(report: &VerificationReport, lemma: Option<&Lemma21>, timings: bool) -> anyhow::Result<Value> {
    let mut v = serde_json::to_value(report)?;
    if let Some(l) = lemma {
        v["separation"] = serde_json::to_value(l)?;
    }
    if timings {
        v["elapsed_ms"] = json!(report.elapsed.as_secs_f64() * 1000.0);
    }
    Ok(v)
}

pub fn report_text(report: &VerificationReport, lemma: Option<&Lemma21>, timings: bool) -> String {
    let mut s = String::new();
    let (n, m) = (report.n, report.m);
    writeln!(s, "graph: {}", report.graph6).unwrap();
    match &report.linking.witness {
        Some(w) => writeln!(s, "intrinsically linked: yes ({} minor), n={n}, m={m}", w.pattern).unwrap(),
        None => writeln!(s, "intrinsically linked: no, n={n}, m={m}").unwrap(),
    }
    if let Some(st) = &report.maxnil {
        writeln!(s, "maxnil: {}, n={n}, m={m}", yes(st.maxnil)).unwrap();
        if st.maxnil {
            writeln!(s, "  linked augmentations: {}", st.augmentations.len()).unwrap();
        } else if let Some((a, b)) = st.nil_augmentation {
            writeln!(s, "  linkless augmentation: {a}-{b}").unwrap();
        } else {
            writeln!(s, "  the graph itself is intrinsically linked").unwrap();
        }
    }
    if let Some(st) = &report.k6_maximal {
        writeln!(s, "maximal without K6 minor: {}, n={n}, m={m}", yes(st.maximal)).unwrap();
        if st.k6_minor.is_some() {
            writeln!(s, "  the graph has a K6 minor").unwrap();
        } else if let Some((a, b)) = st.k6_free_augmentation {
            writeln!(s, "  K6-free augmentation: {a}-{b}").unwrap();
        }
    }
    if let Some(l) = lemma {
        let verdict = if !l.planar {
            "not applicable (nonplanar after removing the pair)".to_string()
        } else if l.holds {
            "holds".to_string()
        } else {
            let c: Vec<String> = l.violating_cycle.iter().flatten().map(|v| v.to_string()).collect();
            format!("fails at cycle {}", c.join(" "))
        };
        writeln!(s, "separation condition for {},{}: {verdict}", l.u, l.v).unwrap();
    }
    if timings {
        writeln!(s, "elapsed: {:.3} s", report.elapsed.as_secs_f64()).unwrap();
    }
    s
}

pub fn sum_text(r: &SumResult) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "sum: {}, n={}, m={}, clique order {}",
        r.graph6, r.n, r.m, r.clique_order
    )
    .unwrap();
    match r.predicate {
        Some(p) => writeln!(s, "criterion: maxnil {}", yes(p)).unwrap(),
        None => writeln!(s, "criterion: none for this clique order").unwrap(),
    }
    if let Some(c) = r.certified {
        writeln!(s, "certified: maxnil {}", yes(c)).unwrap();
    }
    s
}

fn certified(c: Option<bool>) -> &'static str {
    match c {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn bounds_text(rows: &[BoundsRow]) -> String {
    let header = ["graph", "n", "m", "m/n", "2n", "4n-10", "25n/12-1/4", "maxnil"];
    let mut cells: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
    for r in rows {
        cells.push(vec![
            r.label.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.ratio.to_string(),
            r.aires.to_string(),
            r.mader.to_string(),
            r.target.to_string(),
            certified(r.certified).to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap())
        .collect();
    let mut s = String::new();
    for (i, row) in cells.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                write!(s, "{cell:<w$}", w = widths[c]).unwrap();
            } else {
                write!(s, "  {cell:>w$}", w = widths[c]).unwrap();
            }
        }
        if i > 0 {
            let r = &rows[i - 1];
            write!(s, "  < 25n/12 − 1/4: {}", yes(r.below_target())).unwrap();
            if r.violation() {
                s.push_str("  OUTSIDE 2n..4n-10");
            }
        }
        s.push('\n');
    }
    s
}

pub fn bounds_csv(rows: &[BoundsRow]) -> String {
    let mut s = String::from("graph,n,m,ratio,aires,mader,target,below_target,maxnil\n");
    for r in rows {
        writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.label,
            r.n,
            r.m,
            r.ratio,
            r.aires,
            r.mader,
            r.target,
            r.below_target(),
            certified(r.certified)
        )
        .unwrap();
    }
    s
}
