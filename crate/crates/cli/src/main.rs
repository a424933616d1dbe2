mod output;

use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use maxnil_core::cliquesum::{
    clique_sum, k2_sum_maxnil_predicate, k3_sum_maxnil_predicate, k4_sum_maxnil_predicate, CliqueSumSpec, Hypotheses,
};
use maxnil_core::embed::{lemma21_violation, planar_embedding, RotationSystem, DEFAULT_CYCLE_CAP};
use maxnil_core::families::{bounds_table, FamilyParams};
use maxnil_core::minor::{petersen_family, petersen_name, Decider, SearchConfig};
use maxnil_core::{graph6, CliqueSumError, Graph, Graph6Error, MinorError};

/// Graphs at or above this order are certified only with `--slow`.
const SLOW_ORDER: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "maxnil-lab", version, about = "Maxnil graph constructions and certification")]
struct Cli {
    /// Worker threads for augmentation checks.
    #[arg(long, global = true, env = "MAXNIL_LAB_THREADS", default_value_t = 1)]
    threads: usize,
    /// Search-node budget per minor query; exhaustion exits with status 3.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Allow certification of graphs with 24 or more vertices.
    #[arg(long, global = true)]
    slow: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a member of a named family.
    Gen(GenArgs),
    /// Certify graph6 graphs read from a file or stdin, one per line.
    #[command(args_conflicts_with_subcommands = true)]
    Verify {
        #[command(subcommand)]
        sum: Option<VerifyCommand>,
        #[command(flatten)]
        args: VerifyArgs,
    },
    /// Write the seven Petersen-family graphs.
    Petersen {
        /// Print only how many there are.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Edge counts against the known bounds for a range of a family.
    BoundsTable(BoundsArgs),
    /// Convert graph6 input to another format, optionally with a linking witness.
    Export {
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Attach a Petersen-family minor model when one exists.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Evaluate the maxnility criterion for a clique sum of two graphs.
    Sum(SumArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Jorgensen,
    G3n5,
    Q13,
    QExtension,
    Hk,
    TheoremMain,
    Fig6,
    Fig7,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    family: Family,
    /// Subdivision count for jorgensen and g3n5 (0 gives the base graph).
    #[arg(long = "i")]
    i: Option<String>,
    /// Order for q-extension, theorem-main and fig7.
    #[arg(long = "n")]
    n: Option<String>,
    /// Copy count for hk.
    #[arg(long = "k")]
    k: Option<String>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// graph6 file; stdin when absent.
    input: Option<String>,
    /// Certify maxnility by edge augmentation.
    #[arg(long)]
    maxnil: bool,
    /// Certify maximality without a K6 minor.
    #[arg(long)]
    k6: bool,
    /// Both certifications.
    #[arg(long)]
    all: bool,
    /// Check the planar separation condition for the nonadjacent pair U,V.
    #[arg(long, value_name = "U,V")]
    lemma21: Option<String>,
    /// Rotation system of the graph minus U and V (default: the planarity test's embedding).
    #[arg(long, requires = "lemma21")]
    rotation: Option<String>,
    /// One JSON report per line.
    #[arg(long)]
    json: bool,
    /// Include elapsed time in reports.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct SumArgs {
    /// Left summand, graph6.
    left: String,
    /// Right summand, graph6.
    right: String,
    /// Clique of the left summand, comma separated.
    #[arg(long)]
    left_clique: String,
    /// Clique of the right summand, identified in order with the left one.
    #[arg(long)]
    right_clique: String,
    /// Re-certify the summands instead of trusting them.
    #[arg(long)]
    strict: bool,
    /// Also certify the sum directly.
    #[arg(long)]
    certify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Certify every row (slow).
    #[arg(long)]
    certify: bool,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

fn classify(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(MinorError::Undecided(_)) = cause.downcast_ref::<MinorError>() {
            return 3;
        }
        if let Some(CliqueSumError::Minor(MinorError::Undecided(_))) = cause.downcast_ref::<CliqueSumError>() {
            return 3;
        }
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = classify(&err);
            let kind = if code == 3 { "undecided" } else { "error" };
            eprintln!("{kind}: {err:#}");
            ExitCode::from(code)
        }
    }
}

fn decider(cli: &Cli) -> Decider {
    Decider::new(SearchConfig {
        budget: cli.budget,
        ..SearchConfig::default()
    })
    .with_threads(cli.threads)
}

fn run(cli: &Cli) -> Result<u8> {
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Gen(args) => {
            let (label, g) = build(&args.family, None)?;
            write_graph(&mut out, &g, &label, args.format)?;
            Ok(0)
        }
        Command::Verify {
            sum: Some(VerifyCommand::Sum(args)),
            ..
        } => verify_sum(cli, args, &mut out),
        Command::Verify { sum: None, args } => verify(cli, args, &mut out),
        Command::Petersen { count, format } => {
            let fam = petersen_family();
            if *count {
                writeln!(out, "{}", fam.len())?;
            } else {
                for g in &fam {
                    write_graph(&mut out, g, &petersen_name(g), *format)?;
                }
            }
            Ok(0)
        }
        Command::BoundsTable(args) => bounds(cli, args, &mut out),
        Command::Export { input, format, witness } => {
            let d = decider(cli);
            for (line, g) in read_graphs(input.as_deref())? {
                let name = format!("g{line}");
                if *format == Format::Json && *witness {
                    let w = d.intrinsic_link(&g)?;
                    let mut v = output::graph_json(&g);
                    v["witness"] = serde_json::to_value(w)?;
                    writeln!(out, "{}", serde_json::to_string(&v)?)?;
                } else {
                    write_graph(&mut out, &g, &name, *format)?;
                }
            }
            Ok(0)
        }
    }
}

fn write_graph(out: &mut impl Write, g: &Graph, name: &str, format: Format) -> Result<()> {
    match format {
        Format::Graph6 => writeln!(out, "{}", graph6::encode(g))?,
        Format::Dot => write!(out, "{}", graph6::dot_export(g, name))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&output::graph_json(g))?)?,
    }
    Ok(())
}

/// Inclusive range `a..b`, `a..=b` or a single value.
fn parse_range(s: &str) -> Result<(usize, usize)> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad number {t:?}"));
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (parse(a)?, parse(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (parse(a)?, parse(b)?)
    } else {
        let v = parse(s)?;
        (v, v)
    };
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

/// The family's parameter text and its flag name.
fn family_param(args: &FamilyArgs) -> Result<Option<(&'static str, &str)>> {
    let (want, got): (Option<&'static str>, [(&'static str, &Option<String>); 3]) = (
        match args.family {
            Family::Jorgensen | Family::G3n5 => Some("i"),
            Family::QExtension | Family::TheoremMain | Family::Fig7 => Some("n"),
            Family::Hk => Some("k"),
            Family::Q13 | Family::Fig6 => None,
        },
        [("i", &args.i), ("n", &args.n), ("k", &args.k)],
    );
    for (flag, value) in got {
        if value.is_some() && Some(flag) != want {
            bail!("--{flag} does not apply to {:?}", args.family);
        }
    }
    Ok(want.and_then(|flag| {
        got.iter()
            .find(|(f, _)| *f == flag)
            .and_then(|(_, v)| v.as_deref())
            .map(|v| (flag, v))
    }))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Jorgensen => "jorgensen",
        Family::G3n5 => "g3n5",
        Family::Q13 => "q13",
        Family::QExtension => "q-extension",
        Family::Hk => "hk",
        Family::TheoremMain => "theorem-main",
        Family::Fig6 => "fig6",
        Family::Fig7 => "fig7",
    }
}

fn params(f: Family, value: Option<usize>) -> Result<FamilyParams> {
    let need = |flag: &str| value.ok_or_else(|| anyhow!("{} needs --{flag}", family_name(f)));
    Ok(match f {
        Family::Jorgensen => FamilyParams::Jorgensen(value.unwrap_or(0)),
        Family::G3n5 => FamilyParams::G3n5(value.unwrap_or(0)),
        Family::Q13 => FamilyParams::Q13,
        Family::QExtension => FamilyParams::QExtension(need("n")?),
        Family::Hk => FamilyParams::HK(need("k")?),
        Family::TheoremMain => FamilyParams::TheoremMain(need("n")?),
        Family::Fig6 => FamilyParams::Fig6,
        Family::Fig7 => FamilyParams::Fig7(value.unwrap_or(11)),
    })
}

fn build_one(f: Family, value: Option<usize>) -> Result<(String, Graph)> {
    let g = params(f, value)?.build()?;
    let label = match value {
        Some(v) => format!("{}({v})", family_name(f)),
        None => family_name(f).to_string(),
    };
    Ok((label, g))
}

/// A single family member; `range` lists every member instead.
fn build(args: &FamilyArgs, range: Option<&mut Vec<(String, Graph)>>) -> Result<(String, Graph)> {
    let param = family_param(args)?;
    match range {
        None => {
            let value = param.map(|(_, v)| v.trim().parse::<usize>()).transpose()?;
            build_one(args.family, value)
        }
        Some(list) => {
            match param {
                Some((_, text)) => {
                    let (lo, hi) = parse_range(text)?;
                    for v in lo..=hi {
                        list.push(build_one(args.family, Some(v))?);
                    }
                }
                None => list.push(build_one(args.family, None)?),
            }
            Ok(list[0].clone())
        }
    }
}

fn read_input(path: Option<&str>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some("-") | None => {
            io::stdin().lock().read_to_string(&mut text)?;
        }
        Some(p) => text = fs::read_to_string(p).with_context(|| format!("reading {p}"))?,
    }
    Ok(text)
}

/// Non-empty lines of graph6, with their 1-based line numbers.
fn read_graphs(path: Option<&str>) -> Result<Vec<(usize, Graph)>> {
    let text = read_input(path)?;
    let mut out = Vec::new();
    for (i, line) in io::Cursor::new(text).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line).map_err(|e: Graph6Error| anyhow!("line {}: {e}", i + 1))?;
        out.push((i + 1, g));
    }
    Ok(out)
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad vertex {t:?}")))
        .collect()
}

fn gate(cli: &Cli, g: &Graph) -> Result<()> {
    if g.order() >= SLOW_ORDER && !cli.slow {
        bail!(
            "certifying a graph on {} vertices needs --slow (threshold {SLOW_ORDER})",
            g.order()
        );
    }
    Ok(())
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut impl Write) -> Result<u8> {
    let graphs = read_graphs(args.input.as_deref())?;
    let (want_maxnil, want_k6) = (args.maxnil || args.all, args.k6 || args.all);
    let pair = args
        .lemma21
        .as_deref()
        .map(|s| match parse_list(s)?.as_slice() {
            &[u, v] => Ok((u, v)),
            _ => bail!("--lemma21 takes two vertices U,V"),
        })
        .transpose()?;
    let rotation = args.rotation.as_deref().map(|p| read_input(Some(p))).transpose()?;
    for (_, g) in &graphs {
        if want_maxnil || want_k6 {
            gate(cli, g)?;
        }
    }
    let d = decider(cli);
    let mut code = 0;
    for (_, g) in &graphs {
        let mut report = match (want_maxnil, want_k6) {
            (true, true) => d.full_report(g)?,
            (true, false) => d.maxnil_report(g)?,
            (false, true) => d.k6_maximal_report(g)?,
            (false, false) => d.linking_report(g)?,
        };
        let lemma = match pair {
            Some((u, v)) => Some(lemma21(g, u, v, rotation.as_deref())?),
            None => None,
        };
        if report.is_maxnil() == Some(false) || report.is_k6_maximal() == Some(false) {
            code = 1;
        }
        if let Some(l) = &lemma {
            if !l.holds {
                code = 1;
            }
        }
        if !args.timings {
            report.elapsed = Default::default();
        }
        if args.json {
            let v = output::report_json(&report, lemma.as_ref(), args.timings)?;
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        } else {
            write!(out, "{}", output::report_text(&report, lemma.as_ref(), args.timings))?;
        }
    }
    Ok(code)
}

fn lemma21(g: &Graph, u: usize, v: usize, rotation: Option<&str>) -> Result<output::Lemma21> {
    let n = g.order();
    if u >= n || v >= n || u == v {
        bail!("--lemma21 needs two distinct vertices below {n}");
    }
    let keep: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let rest = g.induced_subgraph(&keep).0;
    let emb = match rotation {
        Some(text) => Some(RotationSystem::from_text(rest, text)?),
        None => planar_embedding(&rest),
    };
    Ok(match emb {
        None => output::Lemma21 {
            u,
            v,
            planar: false,
            holds: false,
            violating_cycle: None,
        },
        Some(emb) => {
            let bad = lemma21_violation(g, u, v, &emb, DEFAULT_CYCLE_CAP)?;
            output::Lemma21 {
                u,
                v,
                planar: true,
                holds: bad.is_none(),
                violating_cycle: bad,
            }
        }
    })
}

fn verify_sum(cli: &Cli, args: &SumArgs, out: &mut impl Write) -> Result<u8> {
    let left = graph6::decode(args.left.trim()).context("left summand")?;
    let right = graph6::decode(args.right.trim()).context("right summand")?;
    let lc = parse_list(&args.left_clique)?;
    let rc = parse_list(&args.right_clique)?;
    if lc.len() != rc.len() {
        bail!("cliques have different orders");
    }
    let mode = if args.strict {
        Hypotheses::Strict
    } else {
        Hypotheses::Trusted
    };
    let predicate = match lc.len() {
        2 => Some(k2_sum_maxnil_predicate(
            &left,
            (lc[0], lc[1]),
            &right,
            (rc[0], rc[1]),
            mode,
        )?),
        3 => Some(k3_sum_maxnil_predicate(
            &left,
            [lc[0], lc[1], lc[2]],
            &right,
            [rc[0], rc[1], rc[2]],
            mode,
        )?),
        4 => Some(k4_sum_maxnil_predicate(
            &left,
            [lc[0], lc[1], lc[2], lc[3]],
            &right,
            [rc[0], rc[1], rc[2], rc[3]],
            mode,
        )?),
        _ => None,
    };
    let spec = CliqueSumSpec::new(left, right, lc.into_iter().zip(rc).collect())?;
    let sum = clique_sum(&spec);
    let certified = if args.certify {
        gate(cli, &sum)?;
        decider(cli).maxnil_report(&sum)?.is_maxnil()
    } else {
        None
    };
    let result = output::SumResult {
        graph6: graph6::encode(&sum),
        n: sum.order(),
        m: sum.size(),
        clique_order: spec.order(),
        predicate,
        certified,
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&result)?)?;
    } else {
        write!(out, "{}", output::sum_text(&result))?;
    }
    let disagree = matches!((predicate, certified), (Some(p), Some(c)) if p != c);
    Ok(if disagree || predicate == Some(false) || certified == Some(false) {
        1
    } else {
        0
    })
}

fn bounds(cli: &Cli, args: &BoundsArgs, out: &mut impl Write) -> Result<u8> {
    let mut list = Vec::new();
    build(&args.family, Some(&mut list))?;
    let mut certified = Vec::new();
    if args.certify {
        for (_, g) in &list {
            gate(cli, g)?;
        }
        let d = decider(cli);
        for (_, g) in &list {
            certified.push(d.maxnil_report(g)?.is_maxnil());
        }
    } else {
        certified.resize(list.len(), None);
    }
    let rows = bounds_table(list.iter().zip(certified).map(|((l, g), c)| (l.clone(), g, c)));
    if args.json {
        for r in &rows {
            writeln!(out, "{}", serde_json::to_string(r)?)?;
        }
    } else if args.csv {
        write!(out, "{}", output::bounds_csv(&rows))?;
    } else {
        write!(out, "{}", output::bounds_text(&rows))?;
    }
    Ok(if rows.iter().any(|r| r.violation() || r.certified == Some(false)) {
        1
    } else {
        0
    })
}
