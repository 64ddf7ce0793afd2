//! Search for *-separated cutsets and for σ-separated edge-cutset covers.
//!
//! The *-cutset search grows the component `A` of `Γ − C` from a seed by
//! frontier two-colouring: the least undecided vertex adjacent to `A` is
//! either cut or joins `A`. Once no frontier remains, everything not in
//! `A ∪ C` forms `B`, which must be a single component touching every cut
//! vertex. Pruning rules: cut vertices keep pairwise distance ≥ 3, no
//! vertex of `A` touches `B`, every cut vertex keeps a neighbour outside
//! `A` and a neighbour in the region still reachable from the `B` seeds.
//!
//! The tree is cut at a fixed depth into independent subtrees that run in
//! parallel; results are merged in subtree order with a cumulative node
//! count, so output does not depend on the number of workers.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{Permutation, PermutationGroup};
use crate::cutset::{is_star_cutset, require_trivalent, Cutset, CutsetKind, MidpointMetric, NeighborOrdering, Point};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, Metric, UnionFind, Q};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_WALL_CLOCK: Duration = Duration::from_secs(600);

/// Depth of the fixed split into parallel subtrees (at most 64 per goal).
const SPLIT_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
    pub wall: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: DEFAULT_NODE_BUDGET,
            wall: DEFAULT_WALL_CLOCK,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    /// `v` is cut, `w_i(v)` and `w_j(v)` end up in different components.
    SplitNeighbors { v: usize, i: usize, j: usize },
    /// `x` and `y` end up in different components.
    SeparatePair { x: usize, y: usize },
    /// Every *-separated cutset of the graph.
    CoverAll,
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub graph: Graph,
    pub goal: Goal,
    pub sigma: Q,
    pub kind: CutsetKind,
    pub budget: Budget,
    /// Worker threads; `None` uses the global pool size.
    pub workers: Option<usize>,
    pub ordering: Option<NeighborOrdering>,
    /// Symmetry used by `CoverAll` to search one incidence per orbit.
    pub group: Option<PermutationGroup>,
}

impl SearchTask {
    /// A *-cutset search with default budget, ordering and worker count.
    pub fn star(graph: Graph, goal: Goal) -> SearchTask {
        SearchTask {
            graph,
            goal,
            sigma: Q::from_integer(3),
            kind: CutsetKind::Vertex,
            budget: Budget::default(),
            workers: None,
            ordering: None,
            group: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub goals: usize,
    pub subtrees: usize,
    pub nodes: u64,
    pub prunes: BTreeMap<String, u64>,
    pub timed_out: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Validated cutsets in ascending order.
    pub found: Vec<Cutset>,
    pub stats: SearchStats,
    /// Whether the whole space was explored within budget.
    pub exhausted: bool,
}

const UNDECIDED: u8 = 0;
const SIDE_A: u8 = 1;
const SIDE_B: u8 = 2;
const CUT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Prune {
    ThreeSeparation,
    ABEdge,
    CutInsideA,
    BUnreachable,
    BDisconnected,
    NotMinimal,
}

impl Prune {
    const ALL: [Prune; 6] = [
        Prune::ThreeSeparation,
        Prune::ABEdge,
        Prune::CutInsideA,
        Prune::BUnreachable,
        Prune::BDisconnected,
        Prune::NotMinimal,
    ];

    fn name(self) -> &'static str {
        match self {
            Prune::ThreeSeparation => "three_separation",
            Prune::ABEdge => "a_b_edge",
            Prune::CutInsideA => "cut_inside_a",
            Prune::BUnreachable => "b_unreachable",
            Prune::BDisconnected => "b_disconnected",
            Prune::NotMinimal => "not_minimal",
        }
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    ball2: Vec<Vec<usize>>,
    deadline: Instant,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, deadline: Instant) -> Ctx<'a> {
        let ball2 = (0..g.n())
            .map(|v| {
                let mut ball = BTreeSet::new();
                for &w in g.neighbors(v) {
                    ball.insert(w);
                    ball.extend(g.neighbors(w).iter().copied());
                }
                ball.remove(&v);
                ball.into_iter().collect()
            })
            .collect();
        Ctx { g, ball2, deadline }
    }
}

#[derive(Clone, Debug)]
struct Node {
    status: Vec<u8>,
    a_nbrs: Vec<u8>,
    /// Number of cut vertices within distance 2.
    blocked: Vec<u16>,
}

impl Node {
    fn new(ctx: &Ctx<'_>, status: Vec<u8>) -> Node {
        let n = status.len();
        let mut node = Node {
            status: vec![UNDECIDED; n],
            a_nbrs: vec![0; n],
            blocked: vec![0; n],
        };
        for (v, &s) in status.iter().enumerate() {
            if s != UNDECIDED {
                node.assign(ctx, v, s);
            }
        }
        node
    }

    fn assign(&mut self, ctx: &Ctx<'_>, v: usize, s: u8) {
        self.status[v] = s;
        match s {
            SIDE_A => ctx.g.neighbors(v).iter().for_each(|&w| self.a_nbrs[w] += 1),
            CUT => ctx.ball2[v].iter().for_each(|&w| self.blocked[w] += 1),
            _ => {}
        }
    }

    fn unassign(&mut self, ctx: &Ctx<'_>, v: usize) {
        match self.status[v] {
            SIDE_A => ctx.g.neighbors(v).iter().for_each(|&w| self.a_nbrs[w] -= 1),
            CUT => ctx.ball2[v].iter().for_each(|&w| self.blocked[w] -= 1),
            _ => {}
        }
        self.status[v] = UNDECIDED;
    }

    fn frontier(&self) -> Option<usize> {
        (0..self.status.len()).find(|&v| self.status[v] == UNDECIDED && self.a_nbrs[v] > 0)
    }

    fn can_cut(&self, ctx: &Ctx<'_>, u: usize) -> std::result::Result<(), Prune> {
        if self.blocked[u] > 0 {
            return Err(Prune::ThreeSeparation);
        }
        if self.a_nbrs[u] as usize >= ctx.g.degree(u) {
            return Err(Prune::CutInsideA);
        }
        Ok(())
    }

    fn can_join_a(&self, ctx: &Ctx<'_>, u: usize) -> std::result::Result<(), Prune> {
        for &w in ctx.g.neighbors(u) {
            match self.status[w] {
                SIDE_B => return Err(Prune::ABEdge),
                CUT if self.a_nbrs[w] as usize + 1 >= ctx.g.degree(w) => return Err(Prune::CutInsideA),
                _ => {}
            }
        }
        Ok(())
    }

    /// Vertices reachable from the `B` seeds without entering `A` or the cut.
    fn b_region(&self, ctx: &Ctx<'_>) -> (Vec<bool>, bool) {
        let n = self.status.len();
        let mut seen = vec![false; n];
        let seeds: Vec<usize> = (0..n).filter(|&v| self.status[v] == SIDE_B).collect();
        let Some(&first) = seeds.first() else {
            return (seen, true);
        };
        seen[first] = true;
        let mut queue = VecDeque::from([first]);
        while let Some(u) = queue.pop_front() {
            for &w in ctx.g.neighbors(u) {
                if !seen[w] && (self.status[w] == UNDECIDED || self.status[w] == SIDE_B) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let connected = seeds.iter().all(|&s| seen[s]);
        (seen, connected)
    }

    fn check(&self, ctx: &Ctx<'_>) -> std::result::Result<(), Prune> {
        let (reach, connected) = self.b_region(ctx);
        if !connected {
            return Err(Prune::BDisconnected);
        }
        if !reach.iter().any(|&r| r) {
            return Ok(());
        }
        for v in 0..self.status.len() {
            if self.status[v] == CUT && !ctx.g.neighbors(v).iter().any(|&w| reach[w]) {
                return Err(Prune::BUnreachable);
            }
        }
        Ok(())
    }

    /// With the frontier closed, the rest must form one component `B`
    /// adjacent to every cut vertex.
    fn complete(&self, ctx: &Ctx<'_>) -> std::result::Result<Vec<usize>, Prune> {
        let n = self.status.len();
        let rest: Vec<usize> = (0..n)
            .filter(|&v| self.status[v] == UNDECIDED || self.status[v] == SIDE_B)
            .collect();
        let Some(&first) = rest.first() else {
            return Err(Prune::BDisconnected);
        };
        let mut seen = vec![false; n];
        seen[first] = true;
        let mut queue = VecDeque::from([first]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in ctx.g.neighbors(u) {
                if !seen[w] && (self.status[w] == UNDECIDED || self.status[w] == SIDE_B) {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        if count != rest.len() {
            return Err(Prune::BDisconnected);
        }
        let cut: Vec<usize> = (0..n).filter(|&v| self.status[v] == CUT).collect();
        for &c in &cut {
            let nb = ctx.g.neighbors(c);
            if !nb.iter().any(|&w| seen[w]) || !nb.iter().any(|&w| self.status[w] == SIDE_A) {
                return Err(Prune::NotMinimal);
            }
        }
        Ok(cut)
    }

    /// Root consistency: seeds respect 3-separation and have no `A–B` edge.
    fn root_violation(&self, ctx: &Ctx<'_>) -> Option<Prune> {
        for v in 0..self.status.len() {
            match self.status[v] {
                CUT if self.blocked[v] > 0 => return Some(Prune::ThreeSeparation),
                SIDE_A if ctx.g.neighbors(v).iter().any(|&w| self.status[w] == SIDE_B) => {
                    return Some(Prune::ABEdge)
                }
                _ => {}
            }
        }
        None
    }
}

#[derive(Default)]
struct SubtreeRun {
    nodes: u64,
    found: Vec<(u64, Vec<usize>)>,
    prunes: BTreeMap<Prune, u64>,
    timed_out: bool,
}

struct Dfs<'a, 'c> {
    ctx: &'c Ctx<'a>,
    node: Node,
    cap: u64,
    run: SubtreeRun,
    stopped: bool,
}

impl Dfs<'_, '_> {
    fn prune(&mut self, p: Prune) {
        *self.run.prunes.entry(p).or_insert(0) += 1;
    }

    fn visit(&mut self) {
        if self.stopped {
            return;
        }
        self.run.nodes += 1;
        if self.run.nodes > self.cap {
            self.stopped = true;
            return;
        }
        if self.run.nodes % 1024 == 0 && Instant::now() > self.ctx.deadline {
            self.run.timed_out = true;
            self.stopped = true;
            return;
        }
        if let Err(p) = self.node.check(self.ctx) {
            self.prune(p);
            return;
        }
        let Some(u) = self.node.frontier() else {
            match self.node.complete(self.ctx) {
                Ok(cut) => self.run.found.push((self.run.nodes, cut)),
                Err(p) => self.prune(p),
            }
            return;
        };
        for side in [CUT, SIDE_A] {
            let allowed = if side == CUT {
                self.node.can_cut(self.ctx, u)
            } else {
                self.node.can_join_a(self.ctx, u)
            };
            match allowed {
                Ok(()) => {
                    self.node.assign(self.ctx, u, side);
                    self.visit();
                    self.node.unassign(self.ctx, u);
                }
                Err(p) => self.prune(p),
            }
        }
    }
}

/// Expands the first `SPLIT_DEPTH` levels; nodes that do not branch are
/// passed through as subtree roots so their own run handles them.
fn split(ctx: &Ctx<'_>, node: Node, depth: usize, roots: &mut Vec<Node>, prefix: &mut SubtreeRun) {
    if depth == SPLIT_DEPTH || node.check(ctx).is_err() {
        roots.push(node);
        return;
    }
    let Some(u) = node.frontier() else {
        roots.push(node);
        return;
    };
    prefix.nodes += 1;
    for side in [CUT, SIDE_A] {
        let allowed = if side == CUT {
            node.can_cut(ctx, u)
        } else {
            node.can_join_a(ctx, u)
        };
        match allowed {
            Ok(()) => {
                let mut child = node.clone();
                child.assign(ctx, u, side);
                split(ctx, child, depth + 1, roots, prefix);
            }
            Err(p) => *prefix.prunes.entry(p).or_insert(0) += 1,
        }
    }
}

fn goal_roots(task: &SearchTask, ord: &NeighborOrdering) -> Result<Vec<Vec<u8>>> {
    let g = &task.graph;
    let n = g.n();
    let check = |v: usize| if v < n { Ok(v) } else { Err(Error::UnknownVertex(v)) };
    let seeded = |cut: &[usize], a: &[usize], b: &[usize]| {
        let mut s = vec![UNDECIDED; n];
        cut.iter().for_each(|&v| s[v] = CUT);
        a.iter().for_each(|&v| s[v] = SIDE_A);
        b.iter().for_each(|&v| s[v] = SIDE_B);
        s
    };
    match task.goal {
        Goal::SplitNeighbors { v, i, j } => {
            check(v)?;
            if i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
                return Err(Error::InvalidTask(format!("need distinct i, j in 1..=3, got {} and {}", i, j)));
            }
            Ok(vec![seeded(&[v], &[ord.w(v, i)], &[ord.w(v, j)])])
        }
        Goal::SeparatePair { x, y } => {
            check(x)?;
            check(y)?;
            if x == y {
                return Err(Error::InvalidTask("pair must be two distinct vertices".into()));
            }
            Ok(vec![seeded(&[], &[x], &[y])])
        }
        Goal::CoverAll => {
            // One root per orbit of arcs (v, lone neighbour w_k): every
            // *-cutset through v splits the neighbours of v as 1 | 2.
            let arcs: Vec<(usize, usize)> = (0..n).flat_map(|v| (1..=3).map(move |k| (v, k))).collect();
            let reps: Vec<(usize, usize)> = match &task.group {
                Some(grp) => {
                    let index = |v: usize, w: usize| 3 * v + (1..=3).position(|k| ord.w(v, k) == w).expect("neighbour");
                    let mut uf = UnionFind::new(3 * n);
                    for p in grp.generators() {
                        for &(v, k) in &arcs {
                            let w = ord.w(v, k);
                            uf.union(index(v, w), index(p.apply(v), p.apply(w)));
                        }
                    }
                    let mut seen = BTreeSet::new();
                    arcs.into_iter().filter(|&(v, k)| seen.insert(uf.find(3 * v + k - 1))).collect()
                }
                None => arcs,
            };
            Ok(reps
                .into_iter()
                .map(|(v, k)| {
                    let others: Vec<usize> = (1..=3).filter(|&i| i != k).map(|i| ord.w(v, i)).collect();
                    seeded(&[v], &[ord.w(v, k)], &others)
                })
                .collect())
        }
    }
}

/// Image of a cutset under a vertex permutation.
pub fn cutset_image(g: &Graph, p: &Permutation, c: &Cutset) -> Cutset {
    let elements = match c.kind() {
        CutsetKind::Vertex => p.apply_set(c.elements()),
        CutsetKind::Edge => c
            .elements()
            .iter()
            .map(|&e| {
                let (a, b) = g.edge(e);
                g.edge_between(p.apply(a), p.apply(b)).expect("automorphism maps edges to edges")
            })
            .collect(),
    };
    Cutset::new(c.kind(), elements).expect("image of a nonempty set")
}

/// Closure of `family` under the group generated by `gens`, ascending.
pub fn orbit_closure(g: &Graph, gens: &[Permutation], family: &[Cutset]) -> Vec<Cutset> {
    let mut seen: BTreeSet<Cutset> = family.iter().cloned().collect();
    let mut queue: VecDeque<Cutset> = seen.iter().cloned().collect();
    while let Some(c) = queue.pop_front() {
        for p in gens {
            let img = cutset_image(g, p, &c);
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen.into_iter().collect()
}

/// Runs the frontier search for *-separated cutsets.
pub fn search_star_cutsets(task: &SearchTask) -> Result<SearchResult> {
    let g = &task.graph;
    require_trivalent(g)?;
    if !g.is_connected() {
        return Err(Error::InvalidTask("graph must be connected".into()));
    }
    if task.kind != CutsetKind::Vertex || task.sigma != Q::from_integer(3) {
        return Err(Error::InvalidTask("*-cutset search needs vertex kind and σ = 3".into()));
    }
    let ord = match &task.ordering {
        Some(o) => o.clone(),
        None => NeighborOrdering::ascending(g)?,
    };
    let deadline = Instant::now() + task.budget.wall;
    let ctx = Ctx::new(g, deadline);
    let goals = goal_roots(task, &ord)?;

    let mut prefix = SubtreeRun::default();
    let mut roots = Vec::new();
    for status in &goals {
        let node = Node::new(&ctx, status.clone());
        if let Some(p) = node.root_violation(&ctx) {
            prefix.nodes += 1;
            *prefix.prunes.entry(p).or_insert(0) += 1;
            continue;
        }
        split(&ctx, node, 0, &mut roots, &mut prefix);
    }

    let cap = task.budget.nodes.saturating_sub(prefix.nodes);
    let run_root = |root: &Node| {
        let mut dfs = Dfs {
            ctx: &ctx,
            node: root.clone(),
            cap,
            run: SubtreeRun::default(),
            stopped: false,
        };
        dfs.visit();
        dfs.run
    };
    let runs: Vec<SubtreeRun> = match task.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::InvalidTask(e.to_string()))?
            .install(|| roots.par_iter().map(run_root).collect()),
        None => roots.par_iter().map(run_root).collect(),
    };

    let mut stats = SearchStats {
        goals: goals.len(),
        subtrees: roots.len(),
        ..SearchStats::default()
    };
    let mut prunes = prefix.prunes;
    let mut offset = prefix.nodes;
    let mut found = BTreeSet::new();
    for run in &runs {
        for &(idx, ref cut) in &run.found {
            if offset + idx <= task.budget.nodes {
                found.insert(cut.clone());
            }
        }
        offset += run.nodes;
        for (&p, &k) in &run.prunes {
            *prunes.entry(p).or_insert(0) += k;
        }
        stats.timed_out |= run.timed_out;
    }
    stats.nodes = offset;
    stats.prunes = Prune::ALL
        .iter()
        .map(|&p| (p.name().to_string(), prunes.get(&p).copied().unwrap_or(0)))
        .collect();
    let exhausted = !stats.timed_out && offset <= task.budget.nodes;

    let mut cutsets: Vec<Cutset> = found
        .into_iter()
        .map(|vs| Cutset::vertices(vs).expect("a cut vertex is always present"))
        .collect();
    if let (Goal::CoverAll, Some(grp)) = (task.goal, &task.group) {
        cutsets = orbit_closure(g, grp.generators(), &cutsets);
    }
    for c in &cutsets {
        let check = is_star_cutset(g, c)?;
        assert!(check.is_star(), "search emitted a non-*-separated cutset: {:?}", check.failure());
    }
    Ok(SearchResult {
        found: cutsets,
        stats,
        exhausted,
    })
}

/// Result of the greedy edge-cutset cover search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeCoverOutcome {
    /// A family of proper σ-separated edge cutsets covering every edge.
    Covered(Vec<Cutset>),
    /// Edges no cutset was found for, with the partial family.
    Uncoverable { edges: Vec<usize>, family: Vec<Cutset> },
    /// The graph is disconnected or has a vertex of degree 1.
    PreconditionFailed(String),
}

struct EdgeSearch<'a> {
    g: &'a Graph,
    mm: MidpointMetric<'a>,
    sigma: Distance,
    /// 0 undecided, 1 in A, 2 excluded.
    status: Vec<u8>,
    cut: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl EdgeSearch<'_> {
    fn separated_from_cut(&self, e: usize) -> bool {
        self.cut
            .iter()
            .all(|&f| self.mm.distance(Point::Midpoint(e), Point::Midpoint(f)) >= self.sigma)
    }

    /// Edges that become cut when `u` takes `side`.
    fn new_cut_edges(&self, u: usize, side: u8) -> Vec<usize> {
        let other = if side == 1 { 2 } else { 1 };
        self.g
            .neighbors(u)
            .iter()
            .filter(|&&w| self.status[w] == other)
            .map(|&w| self.g.edge_between(u, w).expect("neighbour"))
            .collect()
    }

    fn visit(&mut self) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return None;
        }
        let frontier = (0..self.g.n())
            .find(|&u| self.status[u] == 0 && self.g.neighbors(u).iter().any(|&w| self.status[w] == 1));
        let Some(u) = frontier else {
            return (self.cut.len() >= 2).then(|| {
                let mut c = self.cut.clone();
                c.sort_unstable();
                c
            });
        };
        for side in [2u8, 1u8] {
            let added = self.new_cut_edges(u, side);
            let ok = added.iter().enumerate().all(|(i, &e)| {
                self.separated_from_cut(e)
                    && added[..i]
                        .iter()
                        .all(|&f| self.mm.distance(Point::Midpoint(e), Point::Midpoint(f)) >= self.sigma)
            });
            if !ok {
                continue;
            }
            self.status[u] = side;
            let mark = self.cut.len();
            self.cut.extend(&added);
            if let Some(c) = self.visit() {
                return Some(c);
            }
            self.cut.truncate(mark);
            self.status[u] = 0;
        }
        None
    }
}

/// Greedily covers the edges of `g` by proper σ-separated edge cutsets of
/// size ≥ 2, searching for each uncovered edge in id order a connected side
/// containing its lower endpoint whose edge boundary qualifies.
pub fn search_edge_cutset_cover(g: &Graph, m: &Metric, sigma: Q) -> Result<EdgeCoverOutcome> {
    if !g.is_connected() {
        return Ok(EdgeCoverOutcome::PreconditionFailed("graph is not connected".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return Ok(EdgeCoverOutcome::PreconditionFailed(format!("vertex {} has degree 1", v + 1)));
    }
    let mm = MidpointMetric::new(g, m)?;
    let mut covered = vec![false; g.edge_count()];
    let mut family: Vec<Cutset> = Vec::new();
    let mut missing = Vec::new();
    for e in 0..g.edge_count() {
        if covered[e] {
            continue;
        }
        let (a, b) = g.edge(e);
        let mut status = vec![0u8; g.n()];
        status[a] = 1;
        status[b] = 2;
        let mut search = EdgeSearch {
            g,
            mm: mm.clone(),
            sigma: Distance::Finite(sigma),
            status,
            cut: vec![e],
            nodes: 0,
            cap: DEFAULT_NODE_BUDGET,
        };
        match search.visit() {
            Some(c) => {
                c.iter().for_each(|&f| covered[f] = true);
                family.push(Cutset::edges(c).expect("nonempty"));
            }
            None => missing.push(e),
        }
    }
    Ok(if missing.is_empty() {
        EdgeCoverOutcome::Covered(family)
    } else {
        EdgeCoverOutcome::Uncoverable { edges: missing, family }
    })
}

/// One representative per orbit (the least image) with its orbit size,
/// ordered by representative.
pub fn dedup_up_to_aut(g: &Graph, grp: &PermutationGroup, cutsets: &[Cutset]) -> Result<Vec<(Cutset, usize)>> {
    let elements = grp.elements()?;
    let mut reps: BTreeMap<Cutset, usize> = BTreeMap::new();
    for c in cutsets {
        let orbit: BTreeSet<Cutset> = elements.iter().map(|p| cutset_image(g, p, c)).collect();
        let size = orbit.len();
        reps.insert(orbit.into_iter().next().expect("orbit contains c"), size);
    }
    Ok(reps.into_iter().collect())
}
