//! Command-line front end. Every command prints a readable summary, writes a
//! JSON [`RunReport`] with `--out`, and exits 0 on pass, 1 on a certified
//! failure and 2 on usage or input errors.

mod reproduce;
mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::aut::{automorphism_group, Permutation, DEFAULT_ENUMERATE_BUDGET};
use crate::certify::{
    certify_edge_separated, certify_star_separated, certify_triangle_link, certify_vertex_separated, Certificate,
    Outcome,
};
use crate::complex::{
    antipodal_graph, check_gromov, hypergraph_checks, parse_point, trace_hypergraph, PolygonalComplex, Seed,
};
use crate::cutset::{
    is_cutset, is_minimal_cutset, is_proper, is_sigma_separated, is_star_cutset, parse_family, ProperWitness, write_family, Cutset, CutsetKind, Point,
};
use crate::error::{Error, ParseError};
use crate::f090a;
use crate::gluing::{
    pair_orbits, parse_weights, solve_gluing, verify_gluing, GluingSolution, GluingStructure, LinkInstance,
    WeightAssignment,
};
use crate::graph::{parse_edge_list, structural_report, Graph, Metric, Q};
use crate::search::{search_edge_cutset_cover, search_star_cutsets, Budget, EdgeCoverOutcome, Goal, SearchTask};

pub use report::{render, RunReport};
pub use reproduce::{f090a_reproduce, ReproduceOptions, Reproduction};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "linksep", version, about = "Separation certificates for graph cutsets, links and polygonal complexes")]
pub struct Cli {
    /// Write the JSON run report here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural facts about a graph.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Automorphism group order, generators and vertex orbits.
    Aut(AutArgs),
    /// Check or search cutsets.
    Cutset {
        #[command(subcommand)]
        cmd: CutsetCmd,
    },
    /// Whole-graph certificates.
    Certify {
        #[command(subcommand)]
        cmd: CertifyCmd,
    },
    /// Gluing equations of a link-homogeneous structure.
    Gluing {
        #[command(subcommand)]
        cmd: GluingCmd,
    },
    /// Polygonal complexes.
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// The built-in F090A dataset.
    F090a {
        #[command(subcommand)]
        cmd: F090aCmd,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Builtin {
    F090a,
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Edge-list file.
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    Info(GraphArg),
}

#[derive(Args, Debug)]
pub struct AutArgs {
    #[command(flatten)]
    pub g: GraphArg,
    /// Print every element in cycle notation.
    #[arg(long)]
    pub elements: bool,
}

#[derive(Subcommand, Debug)]
pub enum CutsetCmd {
    /// Evaluate cutset predicates on each member of a family. Properness and
    /// minimality are always reported; they fail the run only when requested.
    Check {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        family: PathBuf,
        /// Separation threshold p/q, in units of the metric.
        #[arg(long)]
        sigma: Option<String>,
        /// Also require *-separated cutsets.
        #[arg(long)]
        star: bool,
        #[arg(long)]
        proper: bool,
        #[arg(long)]
        minimal: bool,
    },
    /// Search *-separated cutsets, or with `--sigma` alone a cover by
    /// σ-separated edge cutsets.
    Search(SearchArgs),
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub g: GraphArg,
    #[arg(long)]
    pub star: bool,
    /// Cut vertex of a split goal.
    #[arg(long)]
    pub at: Option<usize>,
    /// Neighbour indices i j (1..=3) to separate at `--at`.
    #[arg(long, num_args = 2)]
    pub split: Option<Vec<usize>>,
    /// Two vertices to separate.
    #[arg(long, num_args = 2)]
    pub pair: Option<Vec<usize>>,
    #[arg(long)]
    pub sigma: Option<String>,
    /// Explore the whole space; fail unless it was exhausted.
    #[arg(long)]
    pub exhaust: bool,
    /// Node-expansion limit.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Write the found cutsets as a family file.
    #[arg(long)]
    pub family_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CertifyCmd {
    /// Evenly π-separated triangle link (searches a family when none is given).
    Link {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        family: Option<PathBuf>,
    },
    VertexSeparated {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        family: PathBuf,
    },
    EdgeSeparated {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        family: PathBuf,
    },
    StarSeparated {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum GluingCmd {
    Verify {
        structure: PathBuf,
        /// Lines `orbit-id value`; all weights 1 when absent.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    Solve {
        structure: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum KindArg {
    Vertex,
    Edge,
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    /// Gromov link condition, D(X) and the antipodal graph.
    Check { file: PathBuf },
    /// Trace a hypergraph from a seed cutset and check it.
    Trace {
        file: PathBuf,
        /// A vertex `7` or an edge midpoint `3-4`.
        #[arg(long)]
        seed_vertex: String,
        /// One line of neighbour ids (vertex kind) or faces `f3` (edge kind).
        #[arg(long)]
        cutset: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum F090aCmd {
    /// Re-run the F090A computation end to end.
    Reproduce {
        /// Skip the automorphism group; the closure-dependent stages are not checked.
        #[arg(long)]
        skip_aut: bool,
        /// Seed cutsets replacing C1, C2, C3.
        #[arg(long)]
        family: Option<PathBuf>,
        /// Reduce each seed to a minimal cutset before validating it.
        #[arg(long)]
        reduce_minimal: bool,
    },
}

/// Parses `argv`, runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(report) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("error: {}: {}", path.display(), e);
                    return 2;
                }
            }
            if report.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

fn read(path: &Path, report: &mut RunReport) -> CliResult<String> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    report.input(path.display().to_string(), text.as_bytes());
    Ok(text)
}

fn load_graph(arg: &GraphArg, report: &mut RunReport) -> CliResult<(Graph, Metric)> {
    match (&arg.graph, arg.builtin) {
        (Some(_), Some(_)) => Err(CliError::Usage("give a graph file or --builtin, not both".into())),
        (None, None) => Err(CliError::Usage("a graph file or --builtin f090a is required".into())),
        (None, Some(Builtin::F090a)) => {
            report.input("builtin:f090a", f090a::ADJACENCY_TABLE.as_bytes());
            Ok((f090a::graph(), Metric::Combinatorial))
        }
        (Some(p), None) => {
            let text = read(p, report)?;
            let el = parse_edge_list(&text).map_err(|source| CliError::Parse {
                path: p.display().to_string(),
                source,
            })?;
            Ok((el.graph, el.metric))
        }
    }
}

fn load_family(path: &Path, g: &Graph, report: &mut RunReport) -> CliResult<(Vec<String>, Vec<Cutset>)> {
    let text = read(path, report)?;
    let fam = parse_family(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    let cutsets = fam.resolve(g)?;
    Ok((fam.names().iter().map(|s| s.to_string()).collect(), cutsets))
}

pub fn parse_rational(s: &str) -> CliResult<Q> {
    let bad = || CliError::Usage(format!("expected p/q, got {:?}", s));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<i64>().map_err(|_| bad())?, q.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    if q <= 0 || p <= 0 {
        return Err(bad());
    }
    Ok(Q::new(p, q))
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

fn finish(report: &mut RunReport, out: &mut dyn Write, certs: &[Certificate]) {
    for c in certs {
        emit(out, &render(c));
        report.certificate(c);
    }
}

/// Family file text: one `name: ...` line per cutset, 1-based.
pub fn family_text(g: &Graph, prefix: &str, cutsets: &[Cutset]) -> String {
    let named: Vec<(String, Cutset)> = cutsets.iter().enumerate().map(|(i, c)| (format!("{}{}", prefix, i + 1), c.clone())).collect();
    write_family(g, &named)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<RunReport> {
    match &cli.command {
        Command::Graph { cmd: GraphCmd::Info(arg) } => {
            let mut r = RunReport::new("graph info");
            let (g, m) = load_graph(arg, &mut r)?;
            let s = structural_report(&g);
            emit(
                out,
                &format!(
                    "n={} m={} degrees {:?} bipartite {} connected {} girth {} diameter {} metric {}\n",
                    s.n,
                    s.edges,
                    s.degree_histogram,
                    s.bipartite,
                    s.connected,
                    s.girth,
                    s.diameter,
                    if matches!(m, Metric::Combinatorial) { "combinatorial" } else { "angular" }
                ),
            );
            r.statistics = json!(s);
            Ok(r)
        }
        Command::Aut(a) => {
            let mut r = RunReport::new("aut");
            let (g, _) = load_graph(&a.g, &mut r)?;
            let grp = automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET);
            emit(
                out,
                &format!(
                    "order {}\ngenerators {}\nvertex orbits {}\n",
                    grp.order(),
                    grp.generators().len(),
                    grp.vertex_orbits().len()
                ),
            );
            if a.elements {
                for p in grp.elements()? {
                    emit(out, &format!("{}\n", p.cycle_notation()));
                }
            }
            r.statistics = json!({
                "order": grp.order().to_string(),
                "generators": grp.generators(),
                "vertex_orbits": grp.vertex_orbits().len(),
                "base": grp.base().iter().map(|v| v + 1).collect::<Vec<_>>(),
                "basic_orbit_sizes": grp.basic_orbit_sizes(),
                "enumerated": grp.is_enumerated(),
            });
            Ok(r)
        }
        Command::Cutset {
            cmd:
                CutsetCmd::Check {
                    g,
                    family,
                    sigma,
                    star,
                    proper,
                    minimal,
                },
        } => {
            let mut r = RunReport::new("cutset check");
            let (g, m) = load_graph(g, &mut r)?;
            let (names, fam) = load_family(family, &g, &mut r)?;
            let sigma = sigma.as_deref().map(parse_rational).transpose()?;
            let trivalent = (0..g.n()).all(|v| g.degree(v) == 3);
            let mut cert = Certificate::new("cutset check");
            for (name, c) in names.iter().zip(&fam) {
                let cut = is_cutset(&g, c)?;
                let (pw, min) = if cut.is_cutset {
                    (is_proper(&g, c)?, Some(is_minimal_cutset(&g, c)?))
                } else {
                    (None, None)
                };
                let removable: Vec<String> = min
                    .as_ref()
                    .map_or(Vec::new(), |mm| mm.removable.iter().map(|&x| Point::of(c.kind(), x).describe(&g)).collect());
                let proper_witness = pw.map(|w| match w {
                    ProperWitness::Vertex(u, v, w) => json!({"cut_vertex": g.vertex_name(u), "neighbours": [g.vertex_name(v), g.vertex_name(w)]}),
                    ProperWitness::Edge(e) => json!({"edge": Point::Midpoint(e).describe(&g)}),
                });
                cert.run(format!("{}: cutset", name), || {
                    let note = match &min {
                        Some(mm) => format!(
                            "{} components, {}, {}",
                            cut.components.len(),
                            if proper_witness.is_none() { "proper" } else { "not proper" },
                            if mm.minimal { "minimal" } else { "not minimal" }
                        ),
                        None => format!("{} components", cut.components.len()),
                    };
                    Outcome::verdict(cut.is_cutset, (!cut.is_cutset).then(|| json!({"components": cut.components.len()}))).with_note(note)
                });
                if !cut.is_cutset {
                    continue;
                }
                if *proper {
                    cert.run(format!("{}: proper", name), || match &proper_witness {
                        None => Outcome::pass(),
                        Some(w) => Outcome::fail(w.clone()),
                    });
                }
                if *minimal {
                    let ok = removable.is_empty();
                    cert.run(format!("{}: minimal", name), || {
                        Outcome::verdict(ok, (!ok).then(|| json!({"removable": removable})))
                    });
                }
                if let Some(s) = sigma {
                    let sc = is_sigma_separated(&g, &m, c, s)?;
                    cert.run(format!("{}: {}-separated", name, s), || {
                        let w = sc.closest.map(|(a, b, d)| json!({"pair": [a.describe(&g), b.describe(&g)], "distance": d}));
                        Outcome::verdict(sc.separated, if sc.separated { None } else { w })
                    });
                }
                if *star && !trivalent {
                    cert.skip(format!("{}: *-separated", name), "graph is not trivalent");
                } else if *star {
                    let st = is_star_cutset(&g, c)?;
                    cert.run(format!("{}: *-separated", name), || {
                        Outcome::verdict(st.is_star(), st.failure().map(|f| json!({"reason": f})))
                    });
                }
            }
            finish(&mut r, out, &[cert]);
            Ok(r)
        }
        Command::Cutset { cmd: CutsetCmd::Search(s) } => search(s, out),
        Command::Certify { cmd } => {
            let mut r;
            let cert = match cmd {
                CertifyCmd::Link { g, family } => {
                    r = RunReport::new("certify link");
                    let (g, _) = load_graph(g, &mut r)?;
                    let fam = family.as_ref().map(|f| load_family(f, &g, &mut r)).transpose()?;
                    certify_triangle_link(&g, fam.as_ref().map(|f| f.1.as_slice()))
                }
                CertifyCmd::VertexSeparated { g, n, family } => {
                    r = RunReport::new("certify vertex-separated");
                    let (g, _) = load_graph(g, &mut r)?;
                    let (_, fam) = load_family(family, &g, &mut r)?;
                    certify_vertex_separated(&g, *n, &fam)?
                }
                CertifyCmd::EdgeSeparated { g, sigma, family } => {
                    r = RunReport::new("certify edge-separated");
                    let (g, m) = load_graph(g, &mut r)?;
                    let (_, fam) = load_family(family, &g, &mut r)?;
                    certify_edge_separated(&g, &m, parse_rational(sigma)?, &fam)?
                }
                CertifyCmd::StarSeparated { g, family } => {
                    r = RunReport::new("certify star-separated");
                    let (g, _) = load_graph(g, &mut r)?;
                    let (_, fam) = load_family(family, &g, &mut r)?;
                    certify_star_separated(&g, &fam)?
                }
            };
            finish(&mut r, out, &[cert]);
            Ok(r)
        }
        Command::Gluing { cmd } => gluing(cmd, out),
        Command::Complex { cmd } => complex(cmd, out),
        Command::F090a {
            cmd: F090aCmd::Reproduce {
                skip_aut,
                family,
                reduce_minimal,
            },
        } => {
            let mut r = RunReport::new("f090a reproduce");
            r.input("builtin:f090a", f090a::ADJACENCY_TABLE.as_bytes());
            let seeds = match family {
                Some(f) => Some(load_family(f, &f090a::graph(), &mut r)?),
                None => {
                    r.input("builtin:f090a-cutsets", f090a::CUTSETS.as_bytes());
                    None
                }
            };
            let rep = f090a_reproduce(&ReproduceOptions {
                seeds,
                skip_aut: *skip_aut,
                reduce_minimal: *reduce_minimal,
            });
            r.statistics = rep.statistics;
            finish(&mut r, out, &[rep.certificate]);
            Ok(r)
        }
    }
}

fn search(s: &SearchArgs, out: &mut dyn Write) -> CliResult<RunReport> {
    let mut r = RunReport::new("cutset search");
    let (g, m) = load_graph(&s.g, &mut r)?;
    let one_based = |v: usize| -> CliResult<usize> {
        if v == 0 || v > g.n() {
            Err(CliError::Usage(format!("vertex {} outside 1..={}", v, g.n())))
        } else {
            Ok(v - 1)
        }
    };
    if s.sigma.is_some() && !s.star {
        let sigma = parse_rational(s.sigma.as_deref().expect("checked"))?;
        let (found, covered, note) = match search_edge_cutset_cover(&g, &m, sigma)? {
            EdgeCoverOutcome::Covered(f) => (f, true, "every edge covered".to_string()),
            EdgeCoverOutcome::Uncoverable { edges, family } => {
                let list: Vec<String> = edges.iter().map(|&e| Point::Midpoint(e).describe(&g)).collect();
                (family, false, format!("uncovered edges {}", list.join(" ")))
            }
            EdgeCoverOutcome::PreconditionFailed(why) => (Vec::new(), false, why),
        };
        let text = family_text(&g, "E", &found);
        emit(out, &text);
        emit(out, &format!("# {}\n", note));
        if let Some(p) = &s.family_out {
            std::fs::write(p, &text).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
        }
        r.statistics = json!({"found": found.len(), "covered": covered, "note": note});
        r.pass = covered;
        return Ok(r);
    }
    let goal = match (s.at, &s.split, &s.pair) {
        (Some(v), Some(ij), None) => Goal::SplitNeighbors {
            v: one_based(v)?,
            i: ij[0],
            j: ij[1],
        },
        (None, None, Some(xy)) => Goal::SeparatePair {
            x: one_based(xy[0])?,
            y: one_based(xy[1])?,
        },
        (None, None, None) => Goal::CoverAll,
        _ => return Err(CliError::Usage("use --at v --split i j, or --pair x y, or neither".into())),
    };
    let mut task = SearchTask::star(g.clone(), goal);
    if let Some(sig) = &s.sigma {
        task.sigma = parse_rational(sig)?;
    }
    task.workers = s.workers;
    if s.exhaust {
        task.budget = Budget {
            nodes: u64::MAX,
            wall: Duration::from_secs(u64::MAX / 4),
        };
    }
    if let Some(b) = s.budget {
        task.budget.nodes = b;
    }
    if matches!(goal, Goal::CoverAll) && g.is_cubic() {
        task.group = Some(automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET));
    }
    let res = search_star_cutsets(&task)?;
    let text = family_text(&g, "S", &res.found);
    emit(out, &text);
    emit(
        out,
        &format!("# {} cutsets, {} nodes, exhausted {}\n", res.found.len(), res.stats.nodes, res.exhausted),
    );
    if let Some(p) = &s.family_out {
        std::fs::write(p, &text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?;
    }
    r.statistics = json!({"found": res.found.len(), "exhausted": res.exhausted, "stats": res.stats});
    r.pass = !s.exhaust || res.exhausted;
    Ok(r)
}

/// Structure file: the link graph (`builtin:f090a` or an edge-list path
/// relative to the structure file), a family file, the cutset kind, a
/// uniform link-edge angle p/q (in units of π) when the graph file carries
/// no lengths, and the generators of the symmetry group as 1-based image
/// lists (computed when absent). Germs are the ones induced by the
/// generators plus all local direction bijections.
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub link: String,
    pub family: String,
    #[serde(default)]
    pub kind: Option<String>,
    #[serde(default)]
    pub angle: Option<String>,
    #[serde(default)]
    pub generators: Option<Vec<Vec<usize>>>,
}

fn load_structure(path: &Path, r: &mut RunReport) -> CliResult<GluingStructure> {
    let text = read(path, r)?;
    let sf: StructureFile = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let (g, file_metric) = if sf.link == "builtin:f090a" {
        r.input("builtin:f090a", f090a::ADJACENCY_TABLE.as_bytes());
        (f090a::graph(), Metric::Combinatorial)
    } else {
        load_graph(
            &GraphArg {
                graph: Some(dir.join(&sf.link)),
                builtin: None,
            },
            r,
        )?
    };
    let metric = match (&sf.angle, file_metric) {
        (Some(a), _) => Metric::uniform_angular(&g, parse_rational(a)?),
        (None, m @ Metric::Angular(_)) => m,
        (None, Metric::Combinatorial) => Metric::uniform_angular(&g, Q::new(1, 3)),
    };
    let kind = match sf.kind.as_deref() {
        None | Some("vertex") => CutsetKind::Vertex,
        Some("edge") => CutsetKind::Edge,
        Some(k) => return Err(CliError::Usage(format!("unknown kind {:?}", k))),
    };
    let (_, fam) = load_family(&dir.join(&sf.family), &g, r)?;
    let gens = match sf.generators {
        None => automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET).generators().to_vec(),
        Some(list) => list
            .into_iter()
            .map(|imgs| {
                let zero = imgs
                    .iter()
                    .map(|&v| v.checked_sub(1).ok_or_else(|| CliError::Usage("generator images are 1-based".into())))
                    .collect::<CliResult<Vec<_>>>()?;
                let p = Permutation::from_images(zero)?;
                if !p.is_automorphism(&g) {
                    return Err(CliError::Usage(format!("generator {} is not an automorphism", p.cycle_notation())));
                }
                Ok(p)
            })
            .collect::<CliResult<Vec<_>>>()?,
    };
    let li = LinkInstance::canonical(g, metric, kind, &fam)?;
    Ok(GluingStructure::link_homogeneous(li, gens)?)
}

fn gluing(cmd: &GluingCmd, out: &mut dyn Write) -> CliResult<RunReport> {
    match cmd {
        GluingCmd::Verify { structure, weights } => {
            let mut r = RunReport::new("gluing verify");
            let s = load_structure(structure, &mut r)?;
            let orbits = pair_orbits(&s)?;
            let w = match weights {
                None => WeightAssignment::ones(&s),
                Some(p) => {
                    let text = read(p, &mut r)?;
                    let mut zero = BTreeMap::new();
                    for (o, v) in parse_weights(&text)? {
                        let o = o.checked_sub(1).ok_or_else(|| CliError::Usage("orbit ids are 1-based".into()))?;
                        zero.insert(o, v);
                    }
                    WeightAssignment::from_orbit_values(&orbits, &zero)?
                }
            };
            let cert = verify_gluing(&s, &w)?;
            r.statistics = json!({
                "orbits": orbits.orbits.len(),
                "orbit_sizes": orbits.orbits.iter().map(Vec::len).collect::<Vec<_>>(),
            });
            finish(&mut r, out, &[cert]);
            Ok(r)
        }
        GluingCmd::Solve { structure } => {
            let mut r = RunReport::new("gluing solve");
            let s = load_structure(structure, &mut r)?;
            match solve_gluing(&s)? {
                GluingSolution::Solved {
                    weights,
                    orbit_values,
                    method,
                } => {
                    for (o, v) in orbit_values.iter().enumerate() {
                        emit(out, &format!("{} {}\n", o + 1, v));
                    }
                    emit(out, &format!("# method: {}\n", method));
                    let cert = verify_gluing(&s, &weights)?;
                    r.statistics = json!({"method": method, "orbit_values": orbit_values});
                    finish(&mut r, out, &[cert]);
                }
                GluingSolution::Infeasible { equations, combined } => {
                    let mut cert = Certificate::new("gluing solve");
                    cert.run("strictly positive solution", || {
                        Outcome::fail(json!({"equations": equations, "combined": combined}))
                            .with_note("a nonnegative nonzero combination of these equations rules out positive weights")
                    });
                    finish(&mut r, out, &[cert]);
                }
            }
            Ok(r)
        }
    }
}

fn complex(cmd: &ComplexCmd, out: &mut dyn Write) -> CliResult<RunReport> {
    match cmd {
        ComplexCmd::Check { file } => {
            let mut r = RunReport::new("complex check");
            let x = PolygonalComplex::parse(&read(file, &mut r)?)?;
            let ag = antipodal_graph(&x);
            let boundary = (0..x.vertex_count())
                .filter(|&v| x.on_boundary(Point::Vertex(v)))
                .count();
            emit(
                out,
                &format!(
                    "vertices {} edges {} faces {} D(X) {} antipodal edges {} boundary vertices {}\n",
                    x.vertex_count(),
                    x.edge_count(),
                    x.face_count(),
                    x.max_circumference(),
                    ag.edges.len(),
                    boundary
                ),
            );
            r.statistics = json!({
                "vertices": x.vertex_count(),
                "edges": x.edge_count(),
                "faces": x.face_count(),
                "max_circumference": x.max_circumference(),
                "antipodal_edges": ag.edges.len(),
                "boundary_vertices": boundary,
            });
            finish(&mut r, out, &[check_gromov(&x)]);
            Ok(r)
        }
        ComplexCmd::Trace {
            file,
            seed_vertex,
            cutset,
            kind,
        } => {
            let mut r = RunReport::new("complex trace");
            let x = PolygonalComplex::parse(&read(file, &mut r)?)?;
            let at = parse_point(&x, seed_vertex)?;
            let text = read(cutset, &mut r)?;
            let line = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .ok_or_else(|| CliError::Usage(format!("{}: no cutset line", cutset.display())))?;
            let items = line.split_once(':').map_or(line, |(_, rest)| rest);
            let labels: Vec<String> = items.split_whitespace().map(|t| t.trim_start_matches('v').to_string()).collect();
            let kind = match kind {
                KindArg::Vertex => CutsetKind::Vertex,
                KindArg::Edge => CutsetKind::Edge,
            };
            let h = trace_hypergraph(&x, &Seed::from_labels(&x, at, kind, &labels)?)?;
            emit(
                out,
                &format!(
                    "{} segments, {} traced points, {} frontier, {} conflicts\n",
                    h.segments.len(),
                    h.vertices().len(),
                    h.frontier.len(),
                    h.conflicts.len()
                ),
            );
            r.statistics = h.to_json(&x);
            finish(&mut r, out, &[hypergraph_checks(&x, &h)]);
            Ok(r)
        }
    }
}
