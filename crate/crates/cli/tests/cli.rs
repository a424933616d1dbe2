use std::io::Write;
use std::process::{Command, Output, Stdio};

use maxnil_core::embed::planar_embedding;
use maxnil_core::families::{graph_g, q13_3};
use maxnil_core::{graph6, Graph};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxnil-lab"))
        .args(args)
        .env_remove("MAXNIL_LAB_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    let o = run(&all, "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn gen_then_verify_g() {
    let g6 = gen(&["g3n5", "--i", "0"]);
    assert_eq!(g6.trim(), graph6::encode(&graph_g().unwrap()));
    let o = run(&["verify", "--maxnil"], &g6);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("maxnil: yes, n=10, m=25"), "{text}");
    assert!(text.contains("linked augmentations: 20"), "{text}");
}

#[test]
fn not_maxnil_exits_one() {
    let g6 = gen(&["g3n5", "--i", "2"]);
    let o = run(&["verify", "--maxnil"], &g6);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("maxnil: no, n=12, m=31"));
}

#[test]
fn gen_formats() {
    let json: serde_json::Value = serde_json::from_str(&gen(&["q13", "--format", "json"])).unwrap();
    assert_eq!(json["n"], 13);
    assert_eq!(json["m"], 26);
    let dot = gen(&["fig6", "--format", "dot"]);
    assert_eq!(dot.matches(" -- ").count(), 18);
    let q = graph6::decode(gen(&["q-extension", "--n", "14"]).trim()).unwrap();
    assert_eq!((q.order(), q.size()), (14, 28));
}

#[test]
fn petersen_listing() {
    let o = run(&["petersen", "--count"], "");
    assert_eq!(stdout(&o).trim(), "7");
    let o = run(&["petersen"], "");
    let graphs: Vec<Graph> = stdout(&o).lines().map(|l| graph6::decode(l).unwrap()).collect();
    assert_eq!(graphs.len(), 7);
    assert!(graphs.iter().all(|g| g.size() == 15));
}

#[test]
fn bounds_table_rows() {
    let o = run(&["bounds-table", "theorem-main", "--n", "38..41", "--csv"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    for r in &rows {
        let n: usize = r[1].parse().unwrap();
        let m: usize = r[2].parse().unwrap();
        assert_eq!(m, 2 * n + 3 * (n - 3).div_ceil(36) - 3);
        assert_eq!(r[7], (12 * m + 3 < 25 * n).to_string());
    }
    assert_eq!(rows[1][6], "81");
    assert_eq!(rows[2][6], "997/12");
    let o = run(&["bounds-table", "theorem-main", "--n", "13..=14"], "");
    assert!(stdout(&o).lines().skip(1).all(|l| l.contains("< 25n/12 − 1/4: yes")));
}

#[test]
fn json_reports_are_stable() {
    let g6 = graph6::encode(&q13_3().unwrap());
    let a = run(&["verify", "--maxnil", "--json"], &g6);
    let b = run(&["--threads", "3", "verify", "--maxnil", "--json"], &g6);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains("elapsed"));
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["maxnil"]["augmentations"].as_array().unwrap().len(), 52);
    let t = run(&["verify", "--json", "--timings"], &g6);
    assert!(stdout(&t).contains("elapsed_ms"));
}

#[test]
fn separation_condition() {
    let g = graph_g().unwrap();
    let (u, v) = (g.vertex("u").unwrap(), g.vertex("v").unwrap());
    let pair = format!("{u},{v}");
    let g6 = graph6::encode(&g);
    let o = run(&["verify", "--lemma21", &pair], &g6);
    let text = stdout(&o);
    assert!(text.contains(&format!("separation condition for {u},{v}:")), "{text}");

    let keep: Vec<usize> = (0..g.order()).filter(|&x| x != u && x != v).collect();
    let rest = graph6::decode(&g6).unwrap().induced_subgraph(&keep).0;
    let path = std::env::temp_dir().join(format!("maxnil-lab-rotation-{}.txt", std::process::id()));
    std::fs::write(&path, planar_embedding(&rest).unwrap().to_text()).unwrap();
    let o = run(
        &[
            "verify",
            "--json",
            "--lemma21",
            &pair,
            "--rotation",
            path.to_str().unwrap(),
        ],
        &g6,
    );
    std::fs::remove_file(&path).ok();
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["separation"]["planar"], true);
    let holds = v["separation"]["holds"].as_bool().unwrap();
    assert_eq!(o.status.code(), Some(if holds { 0 } else { 1 }));
}

#[test]
fn clique_sums() {
    let k6e = graph6::encode(&Graph::complete(6).delete_edge(4, 5).unwrap());
    let o = run(
        &[
            "verify",
            "sum",
            &k6e,
            &k6e,
            "--left-clique",
            "0,1",
            "--right-clique",
            "0,1",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("criterion: maxnil no"));

    let q = graph6::encode(&q13_3().unwrap());
    let k3 = graph6::encode(&Graph::complete(3));
    let o = run(
        &[
            "verify",
            "sum",
            &q,
            &k3,
            "--left-clique",
            "0,1",
            "--right-clique",
            "0,1",
            "--certify",
            "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["predicate"], true);
    assert_eq!(v["certified"], true);
    assert_eq!(v["n"], 14);
}

#[test]
fn export_with_witness() {
    let o = run(&["export", "--witness"], &graph6::encode(&Graph::complete(6)));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["m"], 15);
    assert!(stdout(&o).contains("K6"));
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["verify"], "!!!\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let h2 = gen(&["hk", "--k", "2"]);
    let o = run(&["verify", "--maxnil"], &h2);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--slow"));
    let o = run(&["gen", "theorem-main", "--n", "12"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let g6 = gen(&["q-extension", "--n", "20"]);
    let o = run(&["--budget", "1", "verify", "--maxnil"], &g6);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("undecided"));
}
