//! Acceptance run: one line per criterion, then a summary. Exits non-zero
//! when a criterion fails, except the ones listed in `KNOWN_FAILING`, which
//! must fail with the recorded witness.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use linksep::aut::{automorphism_group, is_distance_transitive, PermutationGroup, DEFAULT_ENUMERATE_BUDGET};
use linksep::certify::{certify_triangle_link, certify_vertex_separated, multiset_star_counts, star_counts, NEIGHBOR_PAIRS};
use linksep::complex::{cone, hypergraph_checks, square_grid, trace_hypergraph, wall_cut, Hypergraph, Seed};
use linksep::cutset::{is_star_cutset, reduce_to_minimal, separates, Cutset, CutsetKind, NeighborOrdering, Point};
use linksep::f090a;
use linksep::graph::families::small_cubic_corpus;
use linksep::graph::{structural_report, Distance};
use linksep::search::{orbit_closure, search_star_cutsets, Goal, SearchTask};
use linksep::Graph;

/// Criterion 2: the given C1, C2, C3 are not minimal. Each contains
/// three vertices whose neighbours all lie on one side.
const KNOWN_FAILING: [(usize, &str); 1] = [(2, "C1 removable 15 29 85; C2 removable 7 21 33; C3 removable 41 47 65")];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

struct Ctx {
    g: Graph,
    given: Vec<Cutset>,
    grp: Option<PermutationGroup>,
    closure: Option<Vec<Cutset>>,
}

impl Ctx {
    fn grp(&mut self) -> &PermutationGroup {
        if self.grp.is_none() {
            self.grp = Some(automorphism_group(&self.g, DEFAULT_ENUMERATE_BUDGET));
        }
        self.grp.as_ref().unwrap()
    }

    fn closure(&mut self) -> Vec<Cutset> {
        if self.closure.is_none() {
            let gens = self.grp().generators().to_vec();
            self.closure = Some(orbit_closure(&self.g, &gens, &self.given));
        }
        self.closure.clone().unwrap()
    }
}

fn names(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn c1_structure(ctx: &mut Ctx) -> Verdict {
    let r = structural_report(&ctx.g);
    let adj = common::adjacency(&ctx.g);
    let oracle_diameter = (0..ctx.g.n())
        .map(|s| common::bfs(&adj, s).into_iter().map(Option::unwrap).max().unwrap())
        .max()
        .unwrap();
    let ok = r.n == 90
        && r.edges == 135
        && r.regular_degree == Some(3)
        && r.bipartite
        && r.connected
        && r.girth == Distance::from_int(10)
        && r.diameter == Distance::from_int(8)
        && oracle_diameter == 8;
    verdict(
        ok,
        format!(
            "n={} m={} regular {:?} bipartite {} connected {} girth {} diameter {} (BFS oracle {})",
            r.n, r.edges, r.regular_degree, r.bipartite, r.connected, r.girth, r.diameter, oracle_diameter
        ),
    )
}

fn c2_given_cutsets(ctx: &mut Ctx) -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, c) in ["C1", "C2", "C3"].iter().zip(&ctx.given) {
        let s = is_star_cutset(&ctx.g, c).unwrap();
        ok &= s.is_star();
        parts.push(format!(
            "{}: 3-separated {}, components {}, removable [{}]",
            name,
            s.three_separated(),
            s.component_count,
            names(&s.removable)
        ));
    }
    verdict(ok, parts.join("; "))
}

/// The neighbour of `v` that `c` puts alone on one side, by the oracle's components.
fn split_off(g: &Graph, c: &Cutset, v: usize) -> Option<usize> {
    let adj = common::adjacency(g);
    let set: BTreeSet<usize> = c.elements().iter().copied().collect();
    let (label, _) = common::pieces(&adj, &set);
    let w = &adj[v];
    (0..3)
        .find(|&i| label[w[(i + 1) % 3]] == label[w[(i + 2) % 3]] && label[w[i]] != label[w[(i + 1) % 3]])
        .map(|i| w[i])
}

fn c3_neighbour_splits(ctx: &mut Ctx) -> Verdict {
    let expected = [89usize, 1, 17];
    let got: Vec<Option<usize>> = ctx.given.iter().map(|c| split_off(&ctx.g, c, 0)).collect();
    let ok = got.iter().zip(expected).all(|(g, e)| *g == Some(e));
    let show = |o: &Option<usize>| o.map_or("-".to_string(), |v| format!("v{}", v + 1));
    verdict(
        ok,
        format!("C1 splits off {}, C2 splits off {}, C3 splits off {}", show(&got[0]), show(&got[1]), show(&got[2])),
    )
}

fn c4_pairs(ctx: &mut Ctx) -> Verdict {
    let closure = ctx.closure();
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for &(l, x, y, _) in &f090a::SEPARATION_PAIRS {
        let hit = closure
            .iter()
            .position(|c| separates(&ctx.g, c, Point::Vertex(x - 1), Point::Vertex(y - 1)).unwrap_or(false));
        ok &= hit.is_some();
        parts.push(format!("{} {}", l, if hit.is_some() { "separated" } else { "NOT separated" }));
    }
    let secs = t.elapsed().as_secs_f64();
    ok &= secs < 60.0;
    verdict(ok, format!("{} over {} closure members, {:.2}s after the group", parts.join(", "), closure.len(), secs))
}

fn c5_vertex_separated(ctx: &mut Ctx) -> Verdict {
    let closure = ctx.closure();
    let cert = certify_vertex_separated(&ctx.g, 3, &closure).unwrap();
    let failed: Vec<&str> = cert.failures().map(|k| k.name.as_str()).collect();
    verdict(
        cert.pass,
        format!("{} checks over {} cutsets, failing: [{}]", cert.checks.len(), closure.len(), failed.join(", ")),
    )
}

fn c6_constant_count(ctx: &mut Ctx) -> Verdict {
    let closure = ctx.closure();
    let ord = NeighborOrdering::ascending(&ctx.g).unwrap();
    let set = star_counts(&ctx.g, &closure, &ord).unwrap();
    let given = ctx.given.clone();
    let g = ctx.g.clone();
    let multi = multiset_star_counts(&g, ctx.grp(), &given, &ord).unwrap();
    // Independent recount over the distinct members.
    let adj = common::adjacency(&ctx.g);
    let mut recount = vec![[0u64; 3]; ctx.g.n()];
    for c in &closure {
        let set: BTreeSet<usize> = c.elements().iter().copied().collect();
        let (label, _) = common::pieces(&adj, &set);
        for &v in c.elements() {
            let mut w = adj[v].clone();
            w.sort_unstable();
            for (k, &(i, j)) in NEIGHBOR_PAIRS.iter().enumerate() {
                if label[w[i - 1]] == label[w[j - 1]] {
                    recount[v][k] += 1;
                }
            }
        }
    }
    let agree = recount == set.counts;
    match (set.constant, multi.constant) {
        (Some(c), m) if c > 0 && agree => verdict(
            true,
            format!("set-level |C(v,i,j)| = {} for all 90 vertices and 3 pairs, M = {} (multiset constant {:?})", c, 3 * c, m),
        ),
        (None, Some(m)) => verdict(
            false,
            format!("SET-LEVEL COUNT NOT CONSTANT (first difference at {:?}) while the multiset count is constant {}", set.witness, m),
        ),
        (s, m) => verdict(false, format!("set {:?}, multiset {:?}, recount agrees {}", s, m, agree)),
    }
}

fn c7_gluing(_: &mut Ctx) -> Verdict {
    let t = Instant::now();
    let cert = certify_triangle_link(&f090a::graph(), None);
    let secs = t.elapsed().as_secs_f64();
    let gluing: Vec<&str> = cert
        .checks
        .iter()
        .filter(|k| k.name.starts_with("gluing"))
        .map(|k| if k.pass { "ok" } else { "FAIL" })
        .collect();
    let failed: Vec<&str> = cert.failures().map(|k| k.name.as_str()).collect();
    let ok = cert.pass && !gluing.is_empty() && secs < 300.0;
    verdict(
        ok,
        format!(
            "{}: {} checks, {} gluing checks with all weights 1, failing [{}], {:.1}s",
            cert.target,
            cert.checks.len(),
            gluing.len(),
            failed.join(", "),
            secs
        ),
    )
}

fn c8_automorphisms(ctx: &mut Ctx) -> Verdict {
    let oracle = common::count_automorphisms(&ctx.g);
    let g = ctx.g.clone();
    let grp = ctx.grp();
    let order: u64 = grp.order().to_string().parse().unwrap();
    let elements = grp.elements().unwrap();
    let mut os = Vec::new();
    let mut ok = order == oracle && elements.len() as u64 == order;
    for v in [0usize, 44, 89] {
        let stab = elements.iter().filter(|p| p.apply(v) == v).count() as u64;
        let orbit = grp.orbit_of_vertex(v).len() as u64;
        ok &= orbit * stab == order && grp.stabilizer_order(v).unwrap() as u64 == stab;
        os.push(format!("v{}: {}x{}", v + 1, orbit, stab));
    }
    let dt = is_distance_transitive(&g, grp).unwrap();
    ok &= dt.holds;
    verdict(
        ok,
        format!("|Aut| = {} (backtracking oracle {}), orbit x stabilizer {}, distance-transitive {}", order, oracle, os.join(", "), dt.holds),
    )
}

fn c9_search_vs_brute_force(_: &mut Ctx) -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, g) in small_cubic_corpus() {
        let oracle = common::brute_force_star_cutsets(&g);
        let mut task = SearchTask::star(g.clone(), Goal::CoverAll);
        task.budget.nodes = u64::MAX;
        let res = search_star_cutsets(&task).unwrap();
        let found: BTreeSet<Vec<usize>> = res.found.iter().map(|c| c.elements().to_vec()).collect();
        let same = res.exhausted && found == oracle;
        ok &= same && (name != "Q3" || found.is_empty());
        parts.push(format!("{} {}{}", name, found.len(), if same { "" } else { " MISMATCH" }));
    }
    verdict(ok, parts.join(", "))
}

fn c10_search_reproduction(ctx: &mut Ctx) -> Verdict {
    let closure: BTreeSet<Cutset> = ctx.closure().into_iter().collect();
    let reduced: Vec<Cutset> = ctx.given.iter().map(|c| reduce_to_minimal(&ctx.g, c).unwrap()).collect();
    let gens = ctx.grp().generators().to_vec();
    let reduced_closure: BTreeSet<Cutset> = orbit_closure(&ctx.g, &gens, &reduced).into_iter().collect();
    let mut task = SearchTask::star(ctx.g.clone(), Goal::SplitNeighbors { v: 0, i: 2, j: 3 });
    task.budget.wall = Duration::from_secs(600);
    let t = Instant::now();
    let res = search_star_cutsets(&task).unwrap();
    let secs = t.elapsed().as_secs_f64();
    let ord = NeighborOrdering::ascending(&ctx.g).unwrap();
    let valid = res.found.iter().all(|c| {
        is_star_cutset(&ctx.g, c).unwrap().is_star()
            && separates(&ctx.g, c, Point::Vertex(ord.w(0, 2)), Point::Vertex(ord.w(0, 3))).unwrap()
    });
    let in_given = res.found.iter().filter(|c| closure.contains(c)).count();
    let in_reduced = res.found.iter().filter(|c| reduced_closure.contains(c)).count();
    let ok = !res.found.is_empty() && valid && secs < 600.0;
    verdict(
        ok,
        format!(
            "split v18 | v90 at v1: {} cutsets, all valid {}, {} in the given orbit closure, {} in the closure of the minimal reductions, {:.1}s",
            res.found.len(),
            valid,
            in_given,
            in_reduced,
            secs
        ),
    )
}

fn c11_grid(_: &mut Ctx) -> Verdict {
    let t = Instant::now();
    let x = square_grid(4, 4);
    let mut lines: BTreeMap<Vec<(Point, Point)>, usize> = BTreeMap::new();
    let mut ok = true;
    let mut seeds = 0;
    for e in 0..x.edge_count() {
        let faces = x.faces_on_edge(e);
        if faces.len() != 2 {
            continue;
        }
        seeds += 1;
        let labels: Vec<String> = faces.iter().map(|&(f, _)| format!("f{}", f + 1)).collect();
        let s = Seed::from_labels(&x, Point::Midpoint(e), CutsetKind::Edge, &labels).unwrap();
        let h = trace_hypergraph(&x, &s).unwrap();
        let cert = hypergraph_checks(&x, &h);
        let sides = wall_cut(&x, &h).unwrap().len();
        // A mid-line crosses four squares through five edge midpoints.
        let straight = h.segments.len() == 4 && h.vertices().iter().all(|p| matches!(p, Point::Midpoint(_)));
        ok &= cert.pass && sides == 2 && straight && h.frontier.len() == 2;
        let key: Vec<(Point, Point)> = h.segments.iter().map(|s| (s.a, s.b)).collect();
        *lines.entry(key).or_default() += 1;
    }
    ok &= lines.len() == 8 && lines.values().all(|&k| k == 3);
    let secs = t.elapsed().as_secs_f64();
    ok &= secs < 1.0;
    verdict(ok, format!("{} seeds, {} distinct hypergraphs, each acyclic, frontier-leaved, geodesic, 2 sides; {:.3}s", seeds, lines.len(), secs))
}

fn c12_cone(ctx: &mut Ctx) -> Verdict {
    let g = &ctx.g;
    let x = cone(g);
    let c1 = &ctx.given[0];
    let labels: Vec<String> = c1.elements().iter().map(|v| (v + 1).to_string()).collect();
    let s = Seed::from_labels(&x, Point::Vertex(g.n()), CutsetKind::Vertex, &labels).unwrap();
    let h: Hypergraph = trace_hypergraph(&x, &s).unwrap();
    let cert = hypergraph_checks(&x, &h);
    let leaves: BTreeSet<Point> = h.frontier.keys().copied().collect();
    let star = h.segments.len() == 21
        && leaves.len() == 21
        && h.segments.iter().all(|s| s.a == Point::Vertex(g.n()) || s.b == Point::Vertex(g.n()))
        && leaves == c1.elements().iter().map(|&v| Point::Vertex(v)).collect();
    let cut = wall_cut(&x, &h).unwrap();
    let adj = common::adjacency(g);
    let set: BTreeSet<usize> = c1.elements().iter().copied().collect();
    let (label, _) = common::pieces(&adj, &set);
    let outer: Vec<usize> = (0..g.n()).filter(|v| !set.contains(v)).collect();
    let grouped = outer.iter().all(|&u| {
        outer
            .iter()
            .all(|&v| (cut.side_of(Point::Vertex(u)) == cut.side_of(Point::Vertex(v))) == (label[u] == label[v]))
    }) && outer.iter().all(|&u| cut.side_of(Point::Vertex(u)).is_some());
    let ok = star && cert.pass && grouped && cut.len() == 2;
    verdict(
        ok,
        format!(
            "{} segments, {} leaves (the vertices of C1), checks {}, {} sides matching the components of F090A - C1: {}",
            h.segments.len(),
            leaves.len(),
            if cert.pass { "pass" } else { "FAIL" },
            cut.len(),
            grouped
        ),
    )
}

fn c13_properties(_: &mut Ctx) -> Verdict {
    use common::props;
    let suites: [(&str, fn() -> Result<(), String>); 6] = [
        ("sigma monotonicity", props::sigma_separation_is_monotone),
        ("minimality witness", props::minimality_witness_is_exact),
        ("canonical-partition refinement", props::canonical_partition_refines_every_partition),
        ("equatability laws", props::equatability_is_an_equivalence),
        ("automorphism equivariance", props::cutset_predicates_are_automorphism_invariant),
        ("search determinism", props::search_ignores_worker_count),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    let mut run = |name: &str, f: fn() -> Result<(), String>| match f() {
        Ok(()) => parts.push(format!("{} ok", name)),
        Err(e) => {
            ok = false;
            parts.push(format!("{} FAILED: {}", name, e));
        }
    };
    for (name, f) in suites {
        run(name, f);
    }
    run("tracing determinism", props::tracing_ignores_worker_count);
    verdict(ok, format!("{} cases each: {}", props::CASES, parts.join(", ")))
}

fn main() {
    let mut ctx = Ctx {
        g: f090a::graph(),
        given: f090a::cutset_list(),
        grp: None,
        closure: None,
    };
    let criteria: [(&str, fn(&mut Ctx) -> Verdict, f64); 13] = [
        ("F090A structure", c1_structure, 1.0),
        ("given cutsets are *-separated", c2_given_cutsets, 1.0),
        ("neighbour splits at v1", c3_neighbour_splits, f64::INFINITY),
        ("pairs P3-P8 separated", c4_pairs, f64::INFINITY),
        ("vertex 3-separated certificate", c5_vertex_separated, 300.0),
        ("constant |C(v,i,j)|", c6_constant_count, f64::INFINITY),
        ("gluing and triangle link", c7_gluing, 300.0),
        ("automorphism group", c8_automorphisms, 600.0),
        ("search equals brute force", c9_search_vs_brute_force, f64::INFINITY),
        ("search reproduction", c10_search_reproduction, 600.0),
        ("grid mid-lines", c11_grid, 1.0),
        ("cone star", c12_cone, f64::INFINITY),
        ("property suites", c13_properties, f64::INFINITY),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, f, limit)) in criteria.into_iter().enumerate() {
        let k = i + 1;
        let t = Instant::now();
        let mut v = f(&mut ctx);
        let secs = t.elapsed().as_secs_f64();
        if secs >= limit {
            v.pass = false;
            v.detail.push_str(&format!("; over the {}s limit", limit));
        }
        let known = KNOWN_FAILING.iter().find(|(c, _)| *c == k);
        let tag = if v.pass { "PASS" } else { "FAIL" };
        let note = match known {
            Some((_, why)) if !v.pass => format!(" [known: {}]", why),
            _ => String::new(),
        };
        println!("criterion {:>2} {} {} ({:.2}s): {}{}", k, tag, name, secs, v.detail, note);
        let expected_fail = match known {
            Some((_, why)) => why
                .split("; ")
                .all(|part| {
                    let (cname, list) = part.split_once(" removable ").unwrap();
                    v.detail.contains(&format!("{}: ", cname)) && v.detail.contains(&format!("removable [{}]", list))
                }),
            None => false,
        };
        if v.pass == expected_fail || (known.is_some() && v.pass) {
            unexpected.push(k);
        }
    }
    let known: Vec<usize> = KNOWN_FAILING.iter().map(|(c, _)| *c).collect();
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected (known failing: {:?})", known);
    } else {
        println!("acceptance: unexpected results for criteria {:?}", unexpected);
        std::process::exit(1);
    }
}
