//! Hypergraphs traced through local cutset-partitions.
//!
//! Every point of the subdivided 1-skeleton gets a local link `L'`: one ray
//! node per direction along a complex edge, one corner node per face corner,
//! each corner joined to its two rays by half its angle. Vertex cutsets are
//! sets of rays, edge cutsets sets of corners, so both kinds become vertex
//! cutsets of the simple graph `L'` with the same midpoint distances.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;
use serde_json::{json, Value};

use super::PolygonalComplex;
use crate::certify::{Certificate, Outcome};
use crate::cutset::{CutsetKind, CutsetPartition, Cutset, MidpointMetric, Partition, Point};
use crate::error::{Error, Result};
use crate::graph::{Graph, Metric, Removal, UnionFind, Q};

/// Local links with more candidate elements than this are not enumerated.
const MAX_ELIGIBLE: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LinkNode {
    /// Direction along a complex edge: the edge id at a vertex, the endpoint
    /// pointed at from a midpoint.
    Ray(usize),
    /// Corner of `face` at subdivided boundary position `pos`.
    Corner { face: usize, pos: usize },
}

#[derive(Clone, Debug)]
pub struct LocalLink {
    pub center: Point,
    /// Sorted; rays precede corners.
    pub nodes: Vec<LinkNode>,
    pub graph: Graph,
    pub metric: Metric,
}

impl LocalLink {
    pub fn index(&self, node: LinkNode) -> Option<usize> {
        self.nodes.binary_search(&node).ok()
    }

    /// Nodes that may belong to a cutset of the given kind.
    pub fn eligible(&self, kind: CutsetKind) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| matches!((kind, self.nodes[i]), (CutsetKind::Vertex, LinkNode::Ray(_)) | (CutsetKind::Edge, LinkNode::Corner { .. })))
            .collect()
    }

    pub fn label(&self, i: usize) -> String {
        self.graph.vertex_name(i)
    }
}

fn node_label(x: &PolygonalComplex, center: Point, node: LinkNode) -> String {
    match (center, node) {
        (Point::Vertex(u), LinkNode::Ray(e)) => {
            let (a, b) = x.skeleton().edge(e);
            (if a == u { b + 1 } else { a + 1 }).to_string()
        }
        (_, LinkNode::Ray(v)) => (v + 1).to_string(),
        (_, LinkNode::Corner { face, .. }) => format!("f{}", face + 1),
    }
}

fn check_point(x: &PolygonalComplex, p: Point) -> Result<()> {
    match p {
        Point::Vertex(v) if v >= x.vertex_count() => Err(Error::UnknownVertex(v)),
        Point::Midpoint(e) if e >= x.edge_count() => Err(Error::UnknownEdge(e)),
        _ => Ok(()),
    }
}

/// Parses `7` (a vertex) or `3-4` (an edge midpoint), 1-based.
pub fn parse_point(x: &PolygonalComplex, s: &str) -> Result<Point> {
    let id = |t: &str| -> Result<usize> {
        let v: usize = t
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSeed(format!("bad point {:?}", s)))?;
        if v == 0 || v > x.vertex_count() {
            return Err(Error::InvalidSeed(format!("vertex {} outside 1..={}", v, x.vertex_count())));
        }
        Ok(v - 1)
    };
    match s.split_once('-') {
        None => Ok(Point::Vertex(id(s)?)),
        Some((a, b)) => {
            let (a, b) = (id(a)?, id(b)?);
            x.skeleton()
                .edge_between(a, b)
                .map(Point::Midpoint)
                .ok_or_else(|| Error::InvalidSeed(format!("{} is not an edge", s)))
        }
    }
}

pub fn local_link(x: &PolygonalComplex, p: Point) -> Result<LocalLink> {
    check_point(x, p)?;
    let g = x.skeleton();
    let mut nodes = Vec::new();
    // (corner, ray, ray, half angle)
    let mut joins: Vec<(LinkNode, LinkNode, LinkNode, Q)> = Vec::new();
    match p {
        Point::Vertex(u) => {
            nodes.extend(g.incident_edges(u).map(LinkNode::Ray));
            for (f, face) in x.faces().iter().enumerate() {
                let k = face.len();
                let fe = x.face_edges(f);
                for i in (0..k).filter(|&i| face[i] == u) {
                    let c = LinkNode::Corner { face: f, pos: 2 * i };
                    joins.push((c, LinkNode::Ray(fe[i]), LinkNode::Ray(fe[(i + k - 1) % k]), x.corner_angle(f) / 2));
                }
            }
        }
        Point::Midpoint(e) => {
            let (a, b) = g.edge(e);
            nodes.push(LinkNode::Ray(a));
            nodes.push(LinkNode::Ray(b));
            for &(f, i) in x.faces_on_edge(e) {
                let c = LinkNode::Corner { face: f, pos: 2 * i + 1 };
                joins.push((c, LinkNode::Ray(a), LinkNode::Ray(b), Q::new(1, 2)));
            }
        }
    }
    nodes.extend(joins.iter().map(|j| j.0));
    nodes.sort_unstable();
    let idx = |n: LinkNode| nodes.binary_search(&n).expect("node listed");
    let mut pairs = Vec::with_capacity(2 * joins.len());
    for &(c, r, s, _) in &joins {
        pairs.push((idx(c), idx(r)));
        pairs.push((idx(c), idx(s)));
    }
    let labels = nodes.iter().map(|&n| node_label(x, p, n)).collect();
    let graph = Graph::new(nodes.len(), &pairs)?.with_labels(labels)?;
    let mut lengths = vec![Q::from(0); graph.edge_count()];
    for &(c, r, s, half) in &joins {
        for t in [r, s] {
            lengths[graph.edge_between(idx(c), idx(t)).expect("join")] = half;
        }
    }
    Ok(LocalLink {
        center: p,
        nodes,
        graph,
        metric: Metric::Angular(lengths),
    })
}

/// Direction on the boundary of face `f` from position `p` towards `p ± 1`.
fn ray_toward(x: &PolygonalComplex, f: usize, p: usize, forward: bool) -> LinkNode {
    let k = x.faces()[f].len();
    let face = &x.faces()[f];
    if p % 2 == 0 {
        let i = p / 2;
        LinkNode::Ray(x.face_edges(f)[if forward { i } else { (i + k - 1) % k }])
    } else {
        let j = p / 2;
        LinkNode::Ray(if forward { face[(j + 1) % k] } else { face[j] })
    }
}

/// The edge of Δ leaving `at` through element `node`: its far end, the
/// element there, and the matching of directions at the two elements.
fn delta_edge(x: &PolygonalComplex, at: Point, node: LinkNode) -> Result<(Point, LinkNode, Vec<(LinkNode, LinkNode)>)> {
    match (at, node) {
        (Point::Vertex(u), LinkNode::Ray(e)) => {
            let (a, b) = x.skeleton().edge(e);
            let w = if a == u { b } else { a };
            let mut dirs = Vec::new();
            for &(f, j) in x.faces_on_edge(e) {
                let k = x.faces()[f].len();
                let here = LinkNode::Corner { face: f, pos: 2 * j };
                let there = LinkNode::Corner { face: f, pos: 2 * ((j + 1) % k) };
                dirs.push(if x.faces()[f][j] == u { (here, there) } else { (there, here) });
            }
            Ok((Point::Vertex(w), LinkNode::Ray(e), dirs))
        }
        (_, LinkNode::Corner { face, pos }) => {
            let k = x.faces()[face].len();
            let q = (pos + k) % (2 * k);
            let dirs = vec![
                (ray_toward(x, face, pos, true), ray_toward(x, face, q, false)),
                (ray_toward(x, face, pos, false), ray_toward(x, face, q, true)),
            ];
            Ok((x.boundary_point(face, q), LinkNode::Corner { face, pos: q }, dirs))
        }
        _ => Err(Error::InvalidSeed(format!("{:?} is not an element at {:?}", node, at))),
    }
}

fn pair(ll: &LocalLink, elements: &[LinkNode], partition: Option<&Partition>) -> Result<CutsetPartition> {
    let idx = elements
        .iter()
        .map(|&n| ll.index(n).ok_or_else(|| Error::InvalidSeed(format!("{:?} is not in the link", n))))
        .collect::<Result<Vec<_>>>()?;
    let c = Cutset::vertices(idx)?;
    match partition {
        None => CutsetPartition::canonical(&ll.graph, c),
        Some(p) => CutsetPartition::new(&ll.graph, c, p.clone()),
    }
}

type Induced = BTreeSet<BTreeSet<LinkNode>>;

/// Partition of the directions at element `x` induced by the pair.
fn induced(ll: &LocalLink, cp: &CutsetPartition, x: LinkNode) -> Induced {
    let i = ll.index(x).expect("element in link");
    let mut blocks: BTreeMap<usize, BTreeSet<LinkNode>> = BTreeMap::new();
    for &d in ll.graph.neighbors(i) {
        if let Some(b) = cp.block_of_point(Point::Vertex(d)) {
            blocks.entry(b).or_default().insert(ll.nodes[d]);
        }
    }
    blocks.into_values().collect()
}

fn carry(p: &Induced, dirs: &[(LinkNode, LinkNode)]) -> Induced {
    let map: HashMap<LinkNode, LinkNode> = dirs.iter().copied().collect();
    p.iter().map(|b| b.iter().map(|d| map[d]).collect()).collect()
}

fn pi_separated(mm: &MidpointMetric<'_>, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| {
        set[i + 1..]
            .iter()
            .all(|&b| mm.distance(Point::Vertex(a), Point::Vertex(b)).finite().map_or(true, |d| d >= Q::from(1)))
    })
}

/// All π-separated cutsets of at least two elements, lexicographically;
/// `None` when the link is too large to enumerate.
fn local_family(ll: &LocalLink, kind: CutsetKind) -> Result<Option<Vec<Vec<usize>>>> {
    let el = ll.eligible(kind);
    if el.len() > MAX_ELIGIBLE {
        return Ok(None);
    }
    let mm = MidpointMetric::new(&ll.graph, &ll.metric)?;
    let far = |a: usize, b: usize| {
        mm.distance(Point::Vertex(a), Point::Vertex(b))
            .finite()
            .map_or(true, |d| d >= Q::from(1))
    };
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((set, from)) = stack.pop() {
        if set.len() >= 2 && ll.graph.components(Removal::Vertices(&set))?.len() >= 2 {
            out.push(set.clone());
        }
        for j in from..el.len() {
            if set.iter().all(|&a| far(a, el[j])) {
                let mut next = set.clone();
                next.push(el[j]);
                stack.push((next, j + 1));
            }
        }
    }
    out.sort();
    Ok(Some(out))
}

/// Where tracing starts.
#[derive(Clone, Debug)]
pub struct Seed {
    pub at: Point,
    pub kind: CutsetKind,
    pub elements: Vec<LinkNode>,
    /// Canonical when absent.
    pub partition: Option<Partition>,
}

impl Seed {
    /// Elements by label: neighbour ids for the vertex kind, `fK` (face K)
    /// for the edge kind.
    pub fn from_labels(x: &PolygonalComplex, at: Point, kind: CutsetKind, labels: &[String]) -> Result<Seed> {
        check_point(x, at)?;
        let mut elements = Vec::new();
        for l in labels {
            let node = match kind {
                CutsetKind::Vertex => {
                    let Point::Vertex(u) = at else {
                        return Err(Error::InvalidSeed("vertex cutsets sit at vertices of the complex".into()));
                    };
                    let w: usize = l.parse().map_err(|_| Error::InvalidSeed(format!("bad neighbour {:?}", l)))?;
                    let e = (w >= 1)
                        .then(|| x.skeleton().edge_between(u, w - 1))
                        .flatten()
                        .ok_or_else(|| Error::InvalidSeed(format!("{} is not adjacent to {}", w, u + 1)))?;
                    LinkNode::Ray(e)
                }
                CutsetKind::Edge => {
                    let f: usize = l
                        .strip_prefix('f')
                        .and_then(|t| t.parse().ok())
                        .filter(|&f| f >= 1 && f <= x.face_count())
                        .ok_or_else(|| Error::InvalidSeed(format!("bad face {:?}", l)))?;
                    let f = f - 1;
                    let k = x.faces()[f].len();
                    let pos = (0..2 * k)
                        .find(|&p| x.boundary_point(f, p) == at)
                        .ok_or_else(|| Error::InvalidSeed(format!("face {} does not touch the seed point", f + 1)))?;
                    LinkNode::Corner { face: f, pos }
                }
            };
            elements.push(node);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Seed {
            at,
            kind,
            elements,
            partition: None,
        })
    }
}

/// The pair chosen at a traced point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Choice {
    pub elements: Vec<LinkNode>,
    pub partition: Partition,
}

/// A traced edge of Δ, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
    pub at_a: LinkNode,
    pub at_b: LinkNode,
}

impl Segment {
    fn new(p: Point, np: LinkNode, q: Point, nq: LinkNode) -> Segment {
        if p <= q {
            Segment { a: p, b: q, at_a: np, at_b: nq }
        } else {
            Segment { a: q, b: p, at_a: nq, at_b: np }
        }
    }

    pub fn face(&self) -> Option<usize> {
        match self.at_a {
            LinkNode::Corner { face, .. } => Some(face),
            LinkNode::Ray(_) => None,
        }
    }

    fn ends(&self) -> [(Point, LinkNode); 2] {
        [(self.a, self.at_a), (self.b, self.at_b)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub kind: CutsetKind,
    pub seed: Point,
    pub segments: BTreeSet<Segment>,
    pub choices: BTreeMap<Point, Choice>,
    /// Points where tracing stopped, with the reason.
    pub frontier: BTreeMap<Point, String>,
    /// Arrivals at an already chosen point that the choice does not honour.
    pub conflicts: Vec<String>,
}

impl Hypergraph {
    /// Segment endpoints, plus every chosen point.
    pub fn vertices(&self) -> BTreeSet<Point> {
        let mut s: BTreeSet<Point> = self.choices.keys().copied().collect();
        for seg in &self.segments {
            s.insert(seg.a);
            s.insert(seg.b);
        }
        s
    }

    /// Points of the subdivided 1-skeleton covered by the hypergraph.
    pub fn covered_points(&self) -> BTreeSet<Point> {
        let mut s = self.vertices();
        for seg in &self.segments {
            if let LinkNode::Ray(e) = seg.at_a {
                s.insert(Point::Midpoint(e));
            }
        }
        s
    }

    /// Traced elements at each point.
    pub fn directions(&self) -> BTreeMap<Point, BTreeSet<LinkNode>> {
        let mut m: BTreeMap<Point, BTreeSet<LinkNode>> = BTreeMap::new();
        for seg in &self.segments {
            for (p, n) in seg.ends() {
                m.entry(p).or_default().insert(n);
            }
        }
        m
    }

    pub fn to_json(&self, x: &PolygonalComplex) -> Value {
        let pt = |p: Point| x.describe_point(p);
        json!({
            "kind": self.kind.to_string(),
            "seed": pt(self.seed),
            "segments": self.segments.iter().map(|s| json!({
                "from": pt(s.a),
                "to": pt(s.b),
                "face": s.face().map(|f| f + 1),
            })).collect::<Vec<_>>(),
            "choices": self.choices.iter().map(|(&p, c)| json!({
                "at": pt(p),
                "cutset": c.elements.iter().map(|&n| node_label(x, p, n)).collect::<Vec<_>>(),
                "partition": c.partition.blocks(),
            })).collect::<Vec<_>>(),
            "frontier": self.frontier.iter().map(|(&p, r)| json!({"at": pt(p), "reason": r})).collect::<Vec<_>>(),
            "conflicts": self.conflicts,
        })
    }
}

struct Tracer<'a> {
    x: &'a PolygonalComplex,
    links: HashMap<Point, LocalLink>,
    pairs: HashMap<Point, CutsetPartition>,
}

impl Tracer<'_> {
    fn link(&mut self, p: Point) -> Result<&LocalLink> {
        if !self.links.contains_key(&p) {
            let ll = local_link(self.x, p)?;
            self.links.insert(p, ll);
        }
        Ok(&self.links[&p])
    }
}

/// Breadth-first extension from the seed: each newly reached point takes the
/// lexicographically least π-separated cutset (canonical partition) that
/// contains the arriving element and is equatable along the traced edge.
pub fn trace_hypergraph(x: &PolygonalComplex, seed: &Seed) -> Result<Hypergraph> {
    let mut t = Tracer {
        x,
        links: HashMap::new(),
        pairs: HashMap::new(),
    };
    let kind = seed.kind;
    let ll = t.link(seed.at)?;
    let mut idx = Vec::new();
    for &n in &seed.elements {
        let i = ll.index(n).ok_or_else(|| Error::InvalidSeed(format!("{:?} is not at the seed point", n)))?;
        if !ll.eligible(kind).contains(&i) {
            return Err(Error::InvalidSeed(format!("{} is not a {} element", ll.label(i), kind)));
        }
        idx.push(i);
    }
    if idx.len() < 2 {
        return Err(Error::InvalidSeed("a seed cutset needs at least two elements".into()));
    }
    let mm = MidpointMetric::new(&ll.graph, &ll.metric)?;
    if !pi_separated(&mm, &idx) {
        return Err(Error::InvalidSeed("seed cutset is not π-separated".into()));
    }
    let cp = pair(ll, &seed.elements, seed.partition.as_ref()).map_err(|e| Error::InvalidSeed(e.to_string()))?;
    let mut h = Hypergraph {
        kind,
        seed: seed.at,
        segments: BTreeSet::new(),
        choices: BTreeMap::new(),
        frontier: BTreeMap::new(),
        conflicts: Vec::new(),
    };
    h.choices.insert(
        seed.at,
        Choice {
            elements: seed.elements.clone(),
            partition: cp.partition().clone(),
        },
    );
    t.pairs.insert(seed.at, cp);
    let mut queue = VecDeque::from([seed.at]);
    while let Some(u) = queue.pop_front() {
        let elements = h.choices[&u].elements.clone();
        for node in elements {
            let (target, tnode, dirs) = delta_edge(x, u, node)?;
            h.segments.insert(Segment::new(u, node, target, tnode));
            let incoming = carry(&induced(&t.links[&u], &t.pairs[&u], node), &dirs);
            if let Some(c) = h.choices.get(&target) {
                let describe = || format!("{} via {}", x.describe_point(target), node_label(x, target, tnode));
                if !c.elements.contains(&tnode) {
                    h.conflicts.push(format!("{}: element not in the chosen cutset", describe()));
                } else if induced(&t.links[&target], &t.pairs[&target], tnode) != incoming {
                    h.conflicts.push(format!("{}: partitions not equatable", describe()));
                }
                continue;
            }
            if h.frontier.contains_key(&target) {
                continue;
            }
            if x.on_boundary(target) {
                h.frontier.insert(target, "incomplete link".into());
                continue;
            }
            let lt = t.link(target)?.clone();
            let Some(family) = local_family(&lt, kind)? else {
                h.frontier.insert(target, "link too large to enumerate".into());
                continue;
            };
            let ti = lt.index(tnode).expect("arriving element");
            let mut chosen = None;
            for set in family.iter().filter(|s| s.contains(&ti)) {
                let cp = CutsetPartition::canonical(&lt.graph, Cutset::vertices(set.clone())?)?;
                if induced(&lt, &cp, tnode) == incoming {
                    chosen = Some((set.iter().map(|&i| lt.nodes[i]).collect::<Vec<_>>(), cp));
                    break;
                }
            }
            match chosen {
                None => {
                    h.frontier.insert(target, "no equatable pair".into());
                }
                Some((elements, cp)) => {
                    h.choices.insert(
                        target,
                        Choice {
                            elements,
                            partition: cp.partition().clone(),
                        },
                    );
                    t.pairs.insert(target, cp);
                    queue.push_back(target);
                }
            }
        }
    }
    Ok(h)
}

/// Tree checks, stars against choices, local geodesy and separation.
pub fn hypergraph_checks(x: &PolygonalComplex, h: &Hypergraph) -> Certificate {
    let mut cert = Certificate::new(format!("hypergraph traced from {}", x.describe_point(h.seed)));
    let pt = |p: Point| x.describe_point(p);
    cert.run("segments in labelled faces", || {
        let bad = h.segments.iter().find(|s| match (s.at_a, s.at_b) {
            (LinkNode::Corner { face: f, pos: p }, LinkNode::Corner { face: g, pos: q }) => {
                let k = x.faces()[f].len();
                !(f == g
                    && (p + k) % (2 * k) == q
                    && x.boundary_point(f, p) == s.a
                    && x.boundary_point(f, q) == s.b)
            }
            (LinkNode::Ray(e), LinkNode::Ray(e2)) => {
                let (u, w) = x.skeleton().edge(e);
                !(e == e2 && s.a == Point::Vertex(u) && s.b == Point::Vertex(w))
            }
            _ => true,
        });
        match bad {
            None => Outcome::pass(),
            Some(s) => Outcome::fail(json!({"segment": [pt(s.a), pt(s.b)]})),
        }
    });
    let dirs = h.directions();
    cert.run("compatible along segments", || {
        if let Some(c) = h.conflicts.first() {
            return Outcome::fail(json!({"conflict": c}));
        }
        for s in &h.segments {
            for (p, n) in s.ends() {
                let ok = match h.choices.get(&p) {
                    Some(c) => c.elements.contains(&n),
                    None => h.frontier.contains_key(&p),
                };
                if !ok {
                    return Outcome::fail(json!({"segment": [pt(s.a), pt(s.b)], "at": pt(p)}));
                }
            }
        }
        Outcome::pass()
    });
    cert.run("stars match cutsets", || {
        for (&p, c) in &h.choices {
            let traced: Vec<LinkNode> = dirs.get(&p).map(|d| d.iter().copied().collect()).unwrap_or_default();
            if traced != c.elements {
                return Outcome::fail(json!({
                    "at": pt(p),
                    "cutset": c.elements.iter().map(|&n| node_label(x, p, n)).collect::<Vec<_>>(),
                    "traced": traced.iter().map(|&n| node_label(x, p, n)).collect::<Vec<_>>(),
                }));
            }
        }
        Outcome::pass()
    });
    let verts: Vec<Point> = h.vertices().into_iter().collect();
    cert.run("acyclic", || {
        let index: BTreeMap<Point, usize> = verts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for s in &h.segments {
            if !uf.union(index[&s.a], index[&s.b]) {
                return Outcome::fail(json!({"closing_segment": [pt(s.a), pt(s.b)]}));
            }
        }
        Outcome::pass()
    });
    cert.run("leaves on frontier", || {
        let leaves: Vec<Point> = verts
            .iter()
            .copied()
            .filter(|p| dirs.get(p).map_or(0, |d| d.len()) <= 1)
            .collect();
        match leaves.iter().find(|p| !h.frontier.contains_key(p)) {
            Some(&p) => Outcome::fail(json!({"leaf": pt(p)})),
            None => Outcome::pass().with_note(format!("{} leaves", leaves.len())),
        }
    });
    cert.run("locally geodesic", || {
        let mut least: Option<Q> = None;
        for (&p, d) in dirs.iter().filter(|(p, d)| d.len() >= 2 && !h.frontier.contains_key(p)) {
            let ll = match local_link(x, p) {
                Ok(ll) => ll,
                Err(e) => return Outcome::fail(json!({"at": pt(p), "error": e.to_string()})),
            };
            let mm = match MidpointMetric::new(&ll.graph, &ll.metric) {
                Ok(mm) => mm,
                Err(e) => return Outcome::fail(json!({"at": pt(p), "error": e.to_string()})),
            };
            let idx: Vec<usize> = d.iter().map(|&n| ll.index(n).expect("traced element")).collect();
            for (i, &a) in idx.iter().enumerate() {
                for &b in &idx[i + 1..] {
                    if let Some(q) = mm.distance(Point::Vertex(a), Point::Vertex(b)).finite() {
                        if q < Q::from(1) {
                            return Outcome::fail(json!({
                                "at": pt(p),
                                "directions": [ll.label(a), ll.label(b)],
                                "angle": format!("{}π", q),
                            }));
                        }
                        least = Some(least.map_or(q, |l: Q| l.min(q)));
                    }
                }
            }
        }
        let o = Outcome::pass();
        match least {
            Some(q) => o.with_note(format!("least turning angle {}π", q)),
            None => o,
        }
    });
    cert.run("separates", || match wall_cut(x, h) {
        Err(e) => Outcome::fail(json!({"error": e.to_string()})),
        Ok(w) if w.len() >= 2 => Outcome::pass().with_note(format!("{} sides", w.len())),
        Ok(w) => Outcome::fail(json!({"sides": w.len()})),
    });
    cert
}

/// Sides of the complex minus a hypergraph: surviving points of the
/// subdivided 1-skeleton, joined through each crossed point according to the
/// blocks of its partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCut {
    pub sides: Vec<Vec<Point>>,
    side_of: BTreeMap<Point, usize>,
}

impl WallCut {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side_of(&self, p: Point) -> Option<usize> {
        self.side_of.get(&p).copied()
    }
}

pub fn wall_cut(x: &PolygonalComplex, h: &Hypergraph) -> Result<WallCut> {
    let n = x.vertex_count();
    let m = x.edge_count();
    let g = x.skeleton();
    // Points 0..n+m, then half-edge 2e (at the lower endpoint) and 2e + 1.
    let node = |p: Point| match p {
        Point::Vertex(v) => v,
        Point::Midpoint(e) => n + e,
    };
    let half = |e: usize, end: usize| n + m + 2 * e + usize::from(g.edge(e).0 != end);
    let removed = h.covered_points();
    let mut dead_half = vec![false; 2 * m];
    for s in &h.segments {
        if let LinkNode::Ray(e) = s.at_a {
            dead_half[2 * e] = true;
            dead_half[2 * e + 1] = true;
        }
    }
    let mut uf = UnionFind::new(n + 3 * m);
    for e in 0..m {
        let (a, b) = g.edge(e);
        for (end, slot) in [(a, 2 * e), (b, 2 * e + 1)] {
            if dead_half[slot] {
                continue;
            }
            for p in [Point::Vertex(end), Point::Midpoint(e)] {
                if !removed.contains(&p) {
                    uf.union(n + m + slot, node(p));
                }
            }
        }
    }
    let dirs = h.directions();
    for p in h.vertices() {
        let ll = local_link(x, p)?;
        let cut: Vec<LinkNode> = dirs.get(&p).map(|d| d.iter().copied().collect()).unwrap_or_default();
        let idx: Vec<usize> = cut.iter().filter_map(|&c| ll.index(c)).collect();
        let comps = ll.graph.components(Removal::Vertices(&idx))?;
        // Chosen points group directions by their partition; elsewhere by local component.
        let partition = match h.choices.get(&p) {
            Some(c) if c.elements == cut && c.partition.component_count() == comps.len() => Some(c.partition.clone()),
            _ => None,
        };
        let mut first_in_block: HashMap<usize, usize> = HashMap::new();
        for (i, &nd) in ll.nodes.iter().enumerate() {
            let LinkNode::Ray(r) = nd else { continue };
            let Some(c) = comps.of_vertex(i) else { continue };
            let block = partition.as_ref().map_or(c, |pt| pt.block_of(c));
            let slot = match p {
                Point::Vertex(u) => half(r, u),
                Point::Midpoint(e) => half(e, r),
            };
            if dead_half[slot - n - m] {
                continue;
            }
            match first_in_block.get(&block) {
                Some(&s) => {
                    uf.union(s, slot);
                }
                None => {
                    first_in_block.insert(block, slot);
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<Point>> = BTreeMap::new();
    for v in 0..n {
        if !removed.contains(&Point::Vertex(v)) {
            by_root.entry(uf.find(v)).or_default().push(Point::Vertex(v));
        }
    }
    for e in 0..m {
        if !removed.contains(&Point::Midpoint(e)) {
            by_root.entry(uf.find(n + e)).or_default().push(Point::Midpoint(e));
        }
    }
    let mut sides: Vec<Vec<Point>> = by_root.into_values().collect();
    sides.sort();
    let side_of = sides
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |&p| (p, i)))
        .collect();
    Ok(WallCut { sides, side_of })
}

/// Whether `p` and `q` lie on different sides of the hypergraph.
pub fn separation_check(x: &PolygonalComplex, h: &Hypergraph, p: Point, q: Point) -> Result<bool> {
    check_point(x, p)?;
    check_point(x, q)?;
    let on = h.covered_points();
    for r in [p, q] {
        if on.contains(&r) {
            return Err(Error::PointOnHypergraph(x.describe_point(r)));
        }
    }
    let w = wall_cut(x, h)?;
    Ok(w.side_of(p) != w.side_of(q))
}

#[cfg(test)]
mod tests {
    use super::super::{cone, square_grid};
    use super::*;
    use crate::graph::families::cycle;

    fn mid(x: &PolygonalComplex, a: usize, b: usize) -> Point {
        Point::Midpoint(x.skeleton().edge_between(a, b).unwrap())
    }

    fn faces_at(x: &PolygonalComplex, p: Point) -> Vec<String> {
        let ll = local_link(x, p).unwrap();
        ll.eligible(CutsetKind::Edge).iter().map(|&i| ll.label(i)).collect()
    }

    #[test]
    fn grid_mid_line() {
        let x = square_grid(4, 4);
        // horizontal edge between (2,1) and (2,2): vertices 11 and 12
        let s = mid(&x, 11, 12);
        let seed = Seed::from_labels(&x, s, CutsetKind::Edge, &faces_at(&x, s)).unwrap();
        let h = trace_hypergraph(&x, &seed).unwrap();
        assert_eq!(h.segments.len(), 4);
        assert_eq!(h.frontier.len(), 2);
        assert!(h.conflicts.is_empty());
        let c = hypergraph_checks(&x, &h);
        assert!(c.pass, "{}", c.to_json());
        assert_eq!(c.check("locally geodesic").unwrap().note.as_deref(), Some("least turning angle 1π"));
        assert!(separation_check(&x, &h, Point::Vertex(0), Point::Vertex(4)).unwrap());
        assert!(!separation_check(&x, &h, Point::Vertex(0), Point::Vertex(20)).unwrap());
        assert_eq!(wall_cut(&x, &h).unwrap().len(), 2);
    }

    #[test]
    fn interior_vertex_link_in_subdivision() {
        let x = square_grid(2, 2);
        let ll = local_link(&x, Point::Vertex(4)).unwrap();
        assert_eq!(ll.nodes.len(), 8);
        assert!((0..ll.graph.edge_count()).all(|e| ll.metric.length(e) == Q::new(1, 4)));
        assert_eq!(local_family(&ll, CutsetKind::Edge).unwrap().unwrap().len(), 2);
        assert_eq!(local_family(&ll, CutsetKind::Vertex).unwrap().unwrap().len(), 2);
    }

    #[test]
    fn deleting_a_segment_is_caught() {
        let x = square_grid(4, 4);
        let s = mid(&x, 11, 12);
        let seed = Seed::from_labels(&x, s, CutsetKind::Edge, &faces_at(&x, s)).unwrap();
        let mut h = trace_hypergraph(&x, &seed).unwrap();
        let last = *h.segments.iter().next_back().unwrap();
        h.segments.remove(&last);
        let c = hypergraph_checks(&x, &h);
        assert!(!c.pass);
        assert!(!c.check("leaves on frontier").unwrap().pass);
    }

    #[test]
    fn hexagon_fan_star() {
        let x = cone(&cycle(6));
        let seed = Seed::from_labels(&x, Point::Vertex(6), CutsetKind::Vertex, &["1".into(), "4".into()]).unwrap();
        let h = trace_hypergraph(&x, &seed).unwrap();
        assert_eq!(h.segments.len(), 2);
        assert_eq!(h.frontier.len(), 2);
        assert!(hypergraph_checks(&x, &h).pass);
        assert!(separation_check(&x, &h, Point::Vertex(1), Point::Vertex(4)).unwrap());
        assert!(!separation_check(&x, &h, Point::Vertex(1), Point::Vertex(2)).unwrap());
        assert!(separation_check(&x, &h, Point::Vertex(0), Point::Vertex(1)).is_err());
    }

    #[test]
    fn close_seed_is_rejected() {
        let x = cone(&cycle(6));
        let seed = Seed::from_labels(&x, Point::Vertex(6), CutsetKind::Vertex, &["1".into(), "3".into()]).unwrap();
        assert!(matches!(trace_hypergraph(&x, &seed), Err(Error::InvalidSeed(_))));
    }
}
