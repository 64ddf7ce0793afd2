//! The property suites, shared by the test harness and the acceptance run.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use linksep::aut::{automorphism_group, Permutation, DEFAULT_ENUMERATE_BUDGET};
use linksep::complex::{cone, separation_check, square_grid, trace_hypergraph, Hypergraph, PolygonalComplex, Seed};
use linksep::cutset::{
    is_cutset, is_minimal_cutset, is_sigma_separated, is_star_cutset, midpoint_distance, partition_separates,
    reduce_to_minimal, separates, Cutset, CutsetKind, CutsetPartition, Partition, Point,
};
use linksep::f090a;
use linksep::gluing::{equatable_along, EdgeGerm, LinkInstance};
use linksep::graph::families::{cycle, hypercube, petersen, prism, small_cubic_corpus};
use linksep::graph::Distance;
use linksep::search::{cutset_image, search_star_cutsets, Goal, SearchTask};
use linksep::{Graph, Metric, Q};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::{adjacency, brute_force_star_cutsets, pieces, random_cubic};

pub const CASES: u32 = 500;

fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Small graphs of mixed shape: trivalent, cycles, a grid skeleton, a tree-ish path.
fn graph_pool() -> &'static Vec<Graph> {
    static POOL: OnceLock<Vec<Graph>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut rng = StdRng::seed_from_u64(11);
        let mut v: Vec<Graph> = small_cubic_corpus().into_iter().map(|(_, g)| g).collect();
        v.push(cycle(9));
        v.push(square_grid(3, 3).skeleton().clone());
        v.push(linksep::graph::families::path(7));
        for n in [16, 18, 20] {
            v.push(random_cubic(&mut rng, n));
        }
        v
    })
}

struct Symmetric {
    graph: Graph,
    elements: Vec<Permutation>,
}

fn symmetric_pool() -> &'static Vec<Symmetric> {
    static POOL: OnceLock<Vec<Symmetric>> = OnceLock::new();
    POOL.get_or_init(|| {
        [petersen(), hypercube(3), prism(6), cycle(8), f090a::graph()]
            .into_iter()
            .map(|g| {
                let grp = automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET);
                Symmetric {
                    elements: grp.elements().unwrap().to_vec(),
                    graph: g,
                }
            })
            .collect()
    })
}

/// Link instances built from every *-separated cutset of random trivalent
/// graphs, with link edges of length π/3.
fn link_pool() -> &'static Vec<LinkInstance> {
    static POOL: OnceLock<Vec<LinkInstance>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut rng = StdRng::seed_from_u64(23);
        let mut out = Vec::new();
        while out.len() < 8 {
            let n = *[8usize, 10, 12, 14].choose(&mut rng).unwrap();
            let g = random_cubic(&mut rng, n);
            let fam: Vec<Cutset> = brute_force_star_cutsets(&g)
                .into_iter()
                .map(|c| Cutset::vertices(c).unwrap())
                .collect();
            if fam.len() < 2 {
                continue;
            }
            let m = Metric::uniform_angular(&g, Q::new(1, 3));
            out.push(LinkInstance::canonical(g, m, CutsetKind::Vertex, &fam).unwrap());
        }
        out
    })
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, max: usize) -> Vec<usize> {
    let k = rng.gen_range(1..=max.min(n));
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}

fn random_cutset<R: Rng>(rng: &mut R, g: &Graph, kind: CutsetKind) -> Cutset {
    match kind {
        CutsetKind::Vertex => Cutset::vertices(random_subset(rng, g.n(), 5)).unwrap(),
        CutsetKind::Edge => Cutset::edges(random_subset(rng, g.edge_count(), 5)).unwrap(),
    }
}

fn random_metric<R: Rng>(rng: &mut R, g: &Graph) -> Metric {
    if rng.gen_bool(0.5) {
        Metric::Combinatorial
    } else {
        Metric::Angular(
            (0..g.edge_count())
                .map(|_| Q::new(rng.gen_range(1..=6), rng.gen_range(1..=4)))
                .collect(),
        )
    }
}

fn off_cut_point<R: Rng>(rng: &mut R, g: &Graph, c: &Cutset) -> Option<Point> {
    let pts: Vec<Point> = (0..g.n())
        .map(Point::Vertex)
        .chain((0..g.edge_count()).map(Point::Midpoint))
        .filter(|p| !c.points().contains(p))
        .collect();
    pts.choose(rng).copied()
}

pub fn sigma_separation_is_monotone() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(
            &(any::<u64>(), 1i64..40, 1i64..40, 1i64..8),
            |(seed, a, b, den)| -> Result<(), TestCaseError> {
                let mut rng = StdRng::seed_from_u64(seed);
                let g = graph_pool().choose(&mut rng).unwrap();
                let m = random_metric(&mut rng, g);
                let kind = if rng.gen_bool(0.5) {
                    CutsetKind::Vertex
                } else {
                    CutsetKind::Edge
                };
                let c = random_cutset(&mut rng, g, kind);
                let (lo, hi) = (Q::new(a.min(b), den), Q::new(a.max(b), den));
                let at_hi = is_sigma_separated(g, &m, &c, hi).unwrap();
                let at_lo = is_sigma_separated(g, &m, &c, lo).unwrap();
                prop_assert!(!at_hi.separated || at_lo.separated);
                // The reported closest pair is the true minimum.
                let pts = c.points();
                let mut best: Option<Distance> = None;
                for (i, &p) in pts.iter().enumerate() {
                    for &q in &pts[i + 1..] {
                        let d = midpoint_distance(g, &m, p, q).unwrap();
                        best = Some(best.map_or(d, |x| x.min(d)));
                    }
                }
                prop_assert_eq!(at_lo.closest.map(|t| t.2), best);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

pub fn minimality_witness_is_exact() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(&(any::<u64>(),), |(seed,)| -> Result<(), TestCaseError> {
            let mut rng = StdRng::seed_from_u64(seed);
            let g = graph_pool().choose(&mut rng).unwrap();
            let c = Cutset::vertices(random_subset(&mut rng, g.n(), 6)).unwrap();
            let adj = adjacency(g);
            let set: BTreeSet<usize> = c.elements().iter().copied().collect();
            let cut = is_cutset(g, &c).unwrap();
            prop_assert_eq!(cut.is_cutset, pieces(&adj, &set).1 >= 2);
            if !cut.is_cutset {
                prop_assert!(is_minimal_cutset(g, &c).is_err());
                return Ok(());
            }
            let mm = is_minimal_cutset(g, &c).unwrap();
            for &x in c.elements() {
                let mut rest = set.clone();
                rest.remove(&x);
                let still = !rest.is_empty() && pieces(&adj, &rest).1 >= 2;
                prop_assert_eq!(mm.removable.contains(&x), still, "element {}", x);
            }
            prop_assert_eq!(mm.minimal, mm.removable.is_empty());
            let r = reduce_to_minimal(g, &c).unwrap();
            prop_assert!(r.elements().iter().all(|x| set.contains(x)));
            prop_assert!(is_minimal_cutset(g, &r).unwrap().minimal);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn canonical_partition_refines_every_partition() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(&(any::<u64>(),), |(seed,)| -> Result<(), TestCaseError> {
            let mut rng = StdRng::seed_from_u64(seed);
            let g = graph_pool().choose(&mut rng).unwrap();
            let kind = if rng.gen_bool(0.5) {
                CutsetKind::Vertex
            } else {
                CutsetKind::Edge
            };
            let c = random_cutset(&mut rng, g, kind);
            let k = is_cutset(g, &c).unwrap().components.len();
            if k < 2 {
                return Ok(());
            }
            let nblocks = rng.gen_range(2..=k);
            let mut label: Vec<usize> = (0..k)
                .map(|i| if i < nblocks { i } else { rng.gen_range(0..nblocks) })
                .collect();
            label.shuffle(&mut rng);
            let blocks: Vec<Vec<usize>> = (0..nblocks)
                .map(|b| (0..k).filter(|&i| label[i] == b).collect())
                .collect();
            let p = Partition::new(blocks, k).unwrap();
            let canon = Partition::canonical(k).unwrap();
            prop_assert!(canon.refines(&p));
            prop_assert!(p.refines(&p));
            prop_assert_eq!(p.refines(&canon), p.is_canonical());
            let cp = CutsetPartition::new(g, c.clone(), p).unwrap();
            if let (Some(x), Some(y)) = (off_cut_point(&mut rng, g, &c), off_cut_point(&mut rng, g, &c)) {
                if partition_separates(g, &cp, x, y).unwrap() {
                    prop_assert!(separates(g, &c, x, y).unwrap());
                }
                let canonical = CutsetPartition::canonical(g, c.clone()).unwrap();
                prop_assert_eq!(
                    partition_separates(g, &canonical, x, y).unwrap(),
                    separates(g, &c, x, y).unwrap()
                );
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn equatability_is_an_equivalence() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(&(any::<u64>(),), |(seed,)| -> Result<(), TestCaseError> {
            let mut rng = StdRng::seed_from_u64(seed);
            let li = link_pool().choose(&mut rng).unwrap().clone();
            let xs: Vec<usize> = (0..li.element_count())
                .filter(|&x| !li.pairs_at(x).is_empty())
                .collect();
            let x = *xs.choose(&mut rng).unwrap();
            let at = li.pairs_at(x).to_vec();
            let dirs = li.directions(x);
            let links = vec![li];
            let germ = |perm: &[usize]| -> EdgeGerm {
                let pairs: Vec<(usize, usize)> = (0..dirs.len()).map(|i| (dirs[i], dirs[perm[i]])).collect();
                EdgeGerm::new(&links, (0, x), (0, x), &pairs).unwrap()
            };
            let mut p1: Vec<usize> = (0..dirs.len()).collect();
            let mut p2 = p1.clone();
            p1.shuffle(&mut rng);
            p2.shuffle(&mut rng);
            let id: Vec<usize> = (0..dirs.len()).collect();
            let composed: Vec<usize> = (0..dirs.len()).map(|i| p2[p1[i]]).collect();
            let (g1, g2, g12) = (germ(&p1), germ(&p2), germ(&composed));
            let pick = |rng: &mut StdRng| &links[0].pairs()[*at.choose(rng).unwrap()];
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            prop_assert!(equatable_along(&links, &germ(&id), a, a).unwrap());
            let ab = equatable_along(&links, &g1, a, b).unwrap();
            prop_assert_eq!(ab, equatable_along(&links, &g1.reversed(), b, a).unwrap());
            if ab && equatable_along(&links, &g2, b, c).unwrap() {
                prop_assert!(equatable_along(&links, &g12, a, c).unwrap());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn cutset_predicates_are_automorphism_invariant() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(&(any::<u64>(),), |(seed,)| -> Result<(), TestCaseError> {
            let mut rng = StdRng::seed_from_u64(seed);
            let s = symmetric_pool().choose(&mut rng).unwrap();
            let g = &s.graph;
            let gamma = s.elements.choose(&mut rng).unwrap();
            let kind = if rng.gen_bool(0.7) {
                CutsetKind::Vertex
            } else {
                CutsetKind::Edge
            };
            let c = random_cutset(&mut rng, g, kind);
            let d = cutset_image(g, gamma, &c);
            let (cc, cd) = (is_cutset(g, &c).unwrap(), is_cutset(g, &d).unwrap());
            prop_assert_eq!(cc.is_cutset, cd.is_cutset);
            prop_assert_eq!(cc.components.len(), cd.components.len());
            let sigma = Q::new(rng.gen_range(1..8), 2);
            prop_assert_eq!(
                is_sigma_separated(g, &Metric::Combinatorial, &c, sigma)
                    .unwrap()
                    .separated,
                is_sigma_separated(g, &Metric::Combinatorial, &d, sigma)
                    .unwrap()
                    .separated
            );
            if cc.is_cutset {
                prop_assert_eq!(
                    is_minimal_cutset(g, &c).unwrap().removable.len(),
                    is_minimal_cutset(g, &d).unwrap().removable.len()
                );
            }
            if kind == CutsetKind::Vertex && (0..g.n()).all(|v| g.degree(v) == 3) {
                prop_assert_eq!(
                    is_star_cutset(g, &c).unwrap().is_star(),
                    is_star_cutset(g, &d).unwrap().is_star()
                );
            }
            let img = |p: Point| match p {
                Point::Vertex(v) => Point::Vertex(gamma.apply(v)),
                Point::Midpoint(e) => {
                    let (a, b) = g.edge(e);
                    Point::Midpoint(g.edge_between(gamma.apply(a), gamma.apply(b)).unwrap())
                }
            };
            if let (Some(x), Some(y)) = (off_cut_point(&mut rng, g, &c), off_cut_point(&mut rng, g, &c)) {
                prop_assert_eq!(
                    separates(g, &c, x, y).unwrap(),
                    separates(g, &d, img(x), img(y)).unwrap()
                );
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn random_goal<R: Rng>(rng: &mut R, n: usize) -> Goal {
    match rng.gen_range(0..3) {
        0 => {
            let (i, j) = *[(1, 2), (1, 3), (2, 3)].choose(rng).unwrap();
            Goal::SplitNeighbors {
                v: rng.gen_range(0..n),
                i,
                j,
            }
        }
        1 => {
            let x = rng.gen_range(0..n);
            let y = (x + rng.gen_range(1..n)) % n;
            Goal::SeparatePair { x, y }
        }
        _ => Goal::CoverAll,
    }
}

fn traced_in_pool(x: &PolygonalComplex, seed: &Seed, threads: usize) -> Hypergraph {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(|| trace_hypergraph(x, seed).unwrap())
}

pub fn search_ignores_worker_count() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(
            &(any::<u64>(), 2usize..6, 20u64..4000),
            |(seed, workers, budget)| -> Result<(), TestCaseError> {
                let mut rng = StdRng::seed_from_u64(seed);
                let n = 2 * rng.gen_range(4..=11);
                let g = random_cubic(&mut rng, n);
                let mut task = SearchTask::star(g, random_goal(&mut rng, n));
                task.budget.nodes = budget;
                task.workers = Some(1);
                let one = search_star_cutsets(&task).unwrap();
                task.workers = Some(workers);
                let many = search_star_cutsets(&task).unwrap();
                prop_assert_eq!(&one.found, &many.found);
                prop_assert_eq!(one.exhausted, many.exhausted);
                prop_assert_eq!(one.stats.nodes, many.stats.nodes);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

pub fn tracing_ignores_worker_count() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(
            &(any::<u64>(), 2usize..6),
            |(seed, workers)| -> Result<(), TestCaseError> {
                let mut rng = StdRng::seed_from_u64(seed);
                let li = link_pool().choose(&mut rng).unwrap();
                let g = li.graph();
                let x = cone(g);
                let cp = li.pairs().choose(&mut rng).unwrap();
                let labels: Vec<String> = cp.cutset().elements().iter().map(|v| (v + 1).to_string()).collect();
                let s = Seed::from_labels(&x, Point::Vertex(g.n()), CutsetKind::Vertex, &labels).unwrap();
                let one = traced_in_pool(&x, &s, 1);
                let many = traced_in_pool(&x, &s, workers);
                prop_assert_eq!(one, many);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

const BIG: usize = 20;

/// Every mid-line of a 20 × 20 grid of unit squares, traced from one
/// interior edge midpoint each.
fn big_grid() -> &'static (PolygonalComplex, Vec<Hypergraph>) {
    static GRID: OnceLock<(PolygonalComplex, Vec<Hypergraph>)> = OnceLock::new();
    GRID.get_or_init(|| {
        let x = square_grid(BIG, BIG);
        let mut lines: Vec<Hypergraph> = Vec::new();
        for e in 0..x.edge_count() {
            if x.faces_on_edge(e).len() != 2 || lines.iter().any(|h| h.covered_points().contains(&Point::Midpoint(e))) {
                continue;
            }
            let labels: Vec<String> = x.faces_on_edge(e).iter().map(|&(f, _)| format!("f{}", f + 1)).collect();
            let s = Seed::from_labels(&x, Point::Midpoint(e), CutsetKind::Edge, &labels).unwrap();
            lines.push(trace_hypergraph(&x, &s).unwrap());
        }
        (x, lines)
    })
}

pub fn big_grid_mid_lines() {
    let (x, lines) = big_grid();
    assert_eq!(lines.len(), 2 * BIG);
    assert_eq!(x.max_circumference(), 4);
    for h in lines {
        assert_eq!(h.segments.len(), BIG);
        assert_eq!(h.frontier.len(), 2);
    }
}

pub fn far_apart_vertices_are_cut_by_a_mid_line() -> Result<(), String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(&(any::<prop::sample::Index>(),), |(i,)| -> Result<(), TestCaseError> {
            let (x, lines) = big_grid();
            let w = BIG + 1;
            let far: Vec<(usize, usize)> = (0..w * w)
                .flat_map(|a| (a + 1..w * w).map(move |b| (a, b)))
                .filter(|&(a, b)| (a / w).abs_diff(b / w) + (a % w).abs_diff(b % w) >= 4 * x.max_circumference())
                .collect();
            let (a, b) = far[i.index(far.len())];
            let (p, q) = (Point::Vertex(a), Point::Vertex(b));
            prop_assert!(lines.iter().any(|h| separation_check(x, h, p, q).unwrap()));
            Ok(())
        })
        .map_err(|e| e.to_string())
}
