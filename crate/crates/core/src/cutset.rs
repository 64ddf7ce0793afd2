//! Cutsets and the predicates built on them: properness, σ-separation,
//! minimality, canonical partitions, *-separated cutsets and the
//! neighbour-splitting subfamilies `𝒞(v,i,j)`.
//!
//! A vertex cutset removes closed vertices (their incident open edges stay
//! as hanging segments); an edge cutset removes open edges. Metric
//! questions are answered on the barycentric subdivision, where an edge
//! contributes its midpoint.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::graph::{bfs_distances, distances, Components, Distance, DistanceTable, Graph, Metric, Removal, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutsetKind {
    Vertex,
    Edge,
}

impl fmt::Display for CutsetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutsetKind::Vertex => "vertex",
            CutsetKind::Edge => "edge",
        })
    }
}

/// A nonempty set of vertices or of edges, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cutset {
    kind: CutsetKind,
    elements: Vec<usize>,
}

impl Cutset {
    pub fn new(kind: CutsetKind, mut elements: Vec<usize>) -> Result<Cutset> {
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::InvalidCutset("cutset is empty".into()));
        }
        Ok(Cutset { kind, elements })
    }

    pub fn vertices(vs: Vec<usize>) -> Result<Cutset> {
        Cutset::new(CutsetKind::Vertex, vs)
    }

    pub fn edges(es: Vec<usize>) -> Result<Cutset> {
        Cutset::new(CutsetKind::Edge, es)
    }

    /// Edge cutset given by endpoint pairs.
    pub fn edges_between(g: &Graph, pairs: &[(usize, usize)]) -> Result<Cutset> {
        let es = pairs
            .iter()
            .map(|&(a, b)| {
                g.edge_between(a, b)
                    .ok_or_else(|| Error::InvalidCutset(format!("{}-{} is not an edge", a + 1, b + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Cutset::edges(es)
    }

    pub fn kind(&self) -> CutsetKind {
        self.kind
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn points(&self) -> Vec<Point> {
        self.elements.iter().map(|&x| Point::of(self.kind, x)).collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let last = *self.elements.last().expect("nonempty");
        match self.kind {
            CutsetKind::Vertex if last >= g.n() => Err(Error::UnknownVertex(last)),
            CutsetKind::Edge if last >= g.edge_count() => Err(Error::UnknownEdge(last)),
            _ => Ok(()),
        }
    }

    pub fn removal(&self) -> Removal<'_> {
        match self.kind {
            CutsetKind::Vertex => Removal::Vertices(&self.elements),
            CutsetKind::Edge => Removal::Edges(&self.elements),
        }
    }

    /// The same cutset with one element dropped, or `None` if it would be empty.
    pub fn without(&self, x: usize) -> Option<Cutset> {
        let rest: Vec<usize> = self.elements.iter().copied().filter(|&y| y != x).collect();
        (!rest.is_empty()).then(|| Cutset {
            kind: self.kind,
            elements: rest,
        })
    }

    /// Space-separated 1-based ids, or `a-b` endpoint pairs for edges.
    pub fn describe(&self, g: &Graph) -> String {
        let items: Vec<String> = self.points().iter().map(|p| p.describe(g)).collect();
        items.join(" ")
    }
}

/// A vertex or the midpoint of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Point {
    Vertex(usize),
    Midpoint(usize),
}

impl Point {
    pub fn of(kind: CutsetKind, x: usize) -> Point {
        match kind {
            CutsetKind::Vertex => Point::Vertex(x),
            CutsetKind::Edge => Point::Midpoint(x),
        }
    }

    /// `7` for a vertex, `3-4` for an edge midpoint (1-based).
    pub fn describe(&self, g: &Graph) -> String {
        match *self {
            Point::Vertex(v) => (v + 1).to_string(),
            Point::Midpoint(e) => {
                let (a, b) = g.edge(e);
                format!("{}-{}", a + 1, b + 1)
            }
        }
    }

    fn in_cutset(&self, c: &Cutset) -> bool {
        match (*self, c.kind) {
            (Point::Vertex(v), CutsetKind::Vertex) => c.contains(v),
            (Point::Midpoint(e), CutsetKind::Edge) => c.contains(e),
            _ => false,
        }
    }

    fn component(&self, comps: &Components) -> Option<usize> {
        match *self {
            Point::Vertex(v) => comps.of_vertex(v),
            Point::Midpoint(e) => comps.of_edge(e),
        }
    }
}

/// Blocks of component indices of `Γ − C`, each ascending, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Checks that `blocks` partition `0..components` into at least two parts.
    pub fn new(mut blocks: Vec<Vec<usize>>, components: usize) -> Result<Partition> {
        let mut seen = vec![false; components];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &c in b.iter() {
                if c >= components {
                    return Err(Error::InvalidPartition(format!("no component {}", c)));
                }
                if std::mem::replace(&mut seen[c], true) {
                    return Err(Error::InvalidPartition(format!("component {} in two blocks", c)));
                }
            }
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("component {} in no block", c)));
        }
        if blocks.len() < 2 {
            return Err(Error::InvalidPartition("fewer than two blocks".into()));
        }
        blocks.sort();
        Ok(Partition { blocks })
    }

    /// One block per component.
    pub fn canonical(components: usize) -> Result<Partition> {
        Partition::new((0..components).map(|c| vec![c]).collect(), components)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn component_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_of(&self, component: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&component))
            .expect("blocks cover every component")
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&c| other.block_of(c) == other.block_of(b[0])))
    }
}

/// A cutset together with a partition of the components it leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutsetPartition {
    cutset: Cutset,
    partition: Partition,
    components: Components,
}

impl CutsetPartition {
    pub fn new(g: &Graph, cutset: Cutset, partition: Partition) -> Result<CutsetPartition> {
        cutset.validate(g)?;
        let components = g.components(cutset.removal())?;
        if partition.component_count() != components.len() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} components, cutset leaves {}",
                partition.component_count(),
                components.len()
            )));
        }
        Ok(CutsetPartition {
            cutset,
            partition,
            components,
        })
    }

    /// The cutset with its canonical partition.
    pub fn canonical(g: &Graph, cutset: Cutset) -> Result<CutsetPartition> {
        let partition = canonical_partition(g, &cutset)?;
        CutsetPartition::new(g, cutset, partition)
    }

    pub fn cutset(&self) -> &Cutset {
        &self.cutset
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    /// Partition block containing a point off the cutset.
    pub fn block_of_point(&self, p: Point) -> Option<usize> {
        p.component(&self.components).map(|c| self.partition.block_of(c))
    }
}

/// Cut vertex `v` with two neighbours not separated by the cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProperWitness {
    /// `(u, v, w)`: neighbours `v`, `w` of the cut vertex `u` are not in distinct components.
    Vertex(usize, usize, usize),
    /// An edge of the cutset whose endpoints share a component.
    Edge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutsetCheck {
    pub is_cutset: bool,
    pub components: Components,
}

pub fn is_cutset(g: &Graph, c: &Cutset) -> Result<CutsetCheck> {
    c.validate(g)?;
    let components = g.components(c.removal())?;
    Ok(CutsetCheck {
        is_cutset: components.len() >= 2,
        components,
    })
}

fn require_cutset(g: &Graph, c: &Cutset) -> Result<Components> {
    let check = is_cutset(g, c)?;
    if !check.is_cutset {
        return Err(Error::NotACutset);
    }
    Ok(check.components)
}

pub fn canonical_partition(g: &Graph, c: &Cutset) -> Result<Partition> {
    let comps = require_cutset(g, c)?;
    Partition::canonical(comps.len())
}

/// `None` when proper, otherwise the first violation found.
pub fn is_proper(g: &Graph, c: &Cutset) -> Result<Option<ProperWitness>> {
    let comps = require_cutset(g, c)?;
    Ok(proper_violation(g, c, &comps))
}

pub(crate) fn proper_violation(g: &Graph, c: &Cutset, comps: &Components) -> Option<ProperWitness> {
    match c.kind {
        CutsetKind::Edge => c.elements.iter().copied().find_map(|e| {
            let (a, b) = g.edge(e);
            (comps.of_vertex(a) == comps.of_vertex(b)).then_some(ProperWitness::Edge(e))
        }),
        CutsetKind::Vertex => {
            for &u in &c.elements {
                let nbrs = g.neighbors(u);
                for (i, &v) in nbrs.iter().enumerate() {
                    for &w in &nbrs[i + 1..] {
                        let (cv, cw) = (comps.of_vertex(v), comps.of_vertex(w));
                        if cv.is_none() || cw.is_none() || cv == cw {
                            return Some(ProperWitness::Vertex(u, v, w));
                        }
                    }
                }
            }
            None
        }
    }
}

/// Distances between vertices and edge midpoints under a fixed metric.
#[derive(Clone, Debug)]
pub struct MidpointMetric<'a> {
    g: &'a Graph,
    m: &'a Metric,
    table: DistanceTable,
}

impl<'a> MidpointMetric<'a> {
    pub fn new(g: &'a Graph, m: &'a Metric) -> Result<MidpointMetric<'a>> {
        Ok(MidpointMetric {
            g,
            m,
            table: distances(g, m)?,
        })
    }

    pub fn table(&self) -> &DistanceTable {
        &self.table
    }

    fn anchors(&self, p: Point) -> Vec<(usize, Q)> {
        match p {
            Point::Vertex(v) => vec![(v, Q::zero())],
            Point::Midpoint(e) => {
                let (a, b) = self.g.edge(e);
                let half = self.m.length(e) / 2;
                vec![(a, half), (b, half)]
            }
        }
    }

    /// Shortest path between two points; a path between distinct points
    /// leaves each midpoint through one of its half-edges.
    pub fn distance(&self, a: Point, b: Point) -> Distance {
        if a == b {
            return Distance::Finite(Q::zero());
        }
        let mut best = Distance::Infinite;
        for (x, ox) in self.anchors(a) {
            for (y, oy) in self.anchors(b) {
                let d = self.table.get(x, y) + ox + oy;
                if d < best {
                    best = d;
                }
            }
        }
        best
    }
}

pub fn midpoint_distance(g: &Graph, m: &Metric, a: Point, b: Point) -> Result<Distance> {
    for p in [a, b] {
        match p {
            Point::Vertex(v) if v >= g.n() => return Err(Error::UnknownVertex(v)),
            Point::Midpoint(e) if e >= g.edge_count() => return Err(Error::UnknownEdge(e)),
            _ => {}
        }
    }
    Ok(MidpointMetric::new(g, m)?.distance(a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCheck {
    pub separated: bool,
    /// The closest pair of distinct elements and their distance.
    pub closest: Option<(Point, Point, Distance)>,
}

pub fn is_sigma_separated(g: &Graph, m: &Metric, c: &Cutset, sigma: Q) -> Result<SigmaCheck> {
    c.validate(g)?;
    let mm = MidpointMetric::new(g, m)?;
    Ok(sigma_check(&mm, c, sigma))
}

pub(crate) fn sigma_check(mm: &MidpointMetric<'_>, c: &Cutset, sigma: Q) -> SigmaCheck {
    let pts = c.points();
    let mut closest: Option<(Point, Point, Distance)> = None;
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            let d = mm.distance(a, b);
            if closest.map_or(true, |(_, _, best)| d < best) {
                closest = Some((a, b, d));
            }
        }
    }
    let separated = closest.map_or(true, |(_, _, d)| d >= Distance::Finite(sigma));
    SigmaCheck { separated, closest }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    pub minimal: bool,
    /// Every element whose removal still leaves a cutset.
    pub removable: Vec<usize>,
}

pub fn is_minimal_cutset(g: &Graph, c: &Cutset) -> Result<Minimality> {
    require_cutset(g, c)?;
    let removable: Vec<usize> = c
        .elements
        .iter()
        .copied()
        .filter(|&x| {
            c.without(x)
                .map_or(false, |rest| g.components(rest.removal()).expect("valid").len() >= 2)
        })
        .collect();
    Ok(Minimality {
        minimal: removable.is_empty(),
        removable,
    })
}

/// Drops removable elements one at a time, lowest first, until the cutset
/// is minimal. The components of the result refine nothing away: every pair
/// separated by `c` stays separated.
pub fn reduce_to_minimal(g: &Graph, c: &Cutset) -> Result<Cutset> {
    let mut cur = c.clone();
    loop {
        let m = is_minimal_cutset(g, &cur)?;
        match m.removable.first() {
            None => return Ok(cur),
            Some(&x) => cur = cur.without(x).expect("a removable element leaves a cutset"),
        }
    }
}

/// The three clauses of a *-separated cutset, reported separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCheck {
    /// Closest pair of cut vertices at combinatorial distance below 3.
    pub too_close: Option<(usize, usize, u32)>,
    pub component_count: usize,
    /// Elements whose removal leaves a cutset.
    pub removable: Vec<usize>,
}

impl StarCheck {
    pub fn three_separated(&self) -> bool {
        self.too_close.is_none()
    }

    pub fn two_components(&self) -> bool {
        self.component_count == 2
    }

    pub fn minimal(&self) -> bool {
        self.removable.is_empty()
    }

    pub fn is_star(&self) -> bool {
        self.three_separated() && self.two_components() && self.minimal()
    }

    /// First failing clause, for error messages.
    pub fn failure(&self) -> Option<String> {
        if let Some((a, b, d)) = self.too_close {
            return Some(format!("vertices {} and {} at distance {} < 3", a + 1, b + 1, d));
        }
        if !self.two_components() {
            return Some(format!("{} components instead of 2", self.component_count));
        }
        self.removable
            .first()
            .map(|&w| format!("not minimal: dropping {} still disconnects", w + 1))
    }
}

/// Degree-3 check shared by the *-cutset predicate and the search.
pub(crate) fn require_trivalent(g: &Graph) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) != 3) {
        Some(v) => Err(Error::NotCubic(format!("vertex {} has degree {}", v + 1, g.degree(v)))),
        None => Ok(()),
    }
}

/// Evaluates 3-separation (combinatorial), the two-component clause and
/// minimality for a vertex set in a trivalent graph.
pub fn is_star_cutset(g: &Graph, c: &Cutset) -> Result<StarCheck> {
    require_trivalent(g)?;
    if c.kind != CutsetKind::Vertex {
        return Err(Error::InvalidCutset("*-separated cutsets are vertex cutsets".into()));
    }
    c.validate(g)?;
    let mut too_close = None;
    for (i, &a) in c.elements.iter().enumerate() {
        let d = bfs_distances(g, a);
        for &b in &c.elements[i + 1..] {
            let dab = d[b].unwrap_or(u32::MAX);
            if dab < 3 && too_close.map_or(true, |(_, _, best)| dab < best) {
                too_close = Some((a, b, dab));
            }
        }
    }
    let component_count = g.components(c.removal())?.len();
    let removable = if component_count >= 2 {
        is_minimal_cutset(g, c)?.removable
    } else {
        Vec::new()
    };
    Ok(StarCheck {
        too_close,
        component_count,
        removable,
    })
}

/// For each vertex of a trivalent graph, the ordered neighbours `w1, w2, w3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborOrdering {
    order: Vec<[usize; 3]>,
}

impl NeighborOrdering {
    /// Neighbours in ascending id order.
    pub fn ascending(g: &Graph) -> Result<NeighborOrdering> {
        require_trivalent(g)?;
        Ok(NeighborOrdering {
            order: (0..g.n())
                .map(|v| {
                    let n = g.neighbors(v);
                    [n[0], n[1], n[2]]
                })
                .collect(),
        })
    }

    pub fn custom(g: &Graph, order: Vec<[usize; 3]>) -> Result<NeighborOrdering> {
        require_trivalent(g)?;
        if order.len() != g.n() {
            return Err(Error::InvalidGraph("ordering must list every vertex".into()));
        }
        for (v, row) in order.iter().enumerate() {
            let mut sorted = *row;
            sorted.sort_unstable();
            if sorted[..] != *g.neighbors(v) {
                return Err(Error::InvalidGraph(format!("ordering at {} is not its neighbour set", v + 1)));
            }
        }
        Ok(NeighborOrdering { order })
    }

    /// `w_i(v)` for `i ∈ {1, 2, 3}`.
    pub fn w(&self, v: usize, i: usize) -> usize {
        self.order[v][i - 1]
    }
}

/// Members of `family` that contain `v` and leave `w_i(v)`, `w_j(v)` in one component.
pub fn family_at(
    g: &Graph,
    v: usize,
    i: usize,
    j: usize,
    family: &[Cutset],
    ord: &NeighborOrdering,
) -> Result<Vec<usize>> {
    if i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::InvalidTask(format!("need distinct i, j in 1..=3, got {} and {}", i, j)));
    }
    let (wi, wj) = (ord.w(v, i), ord.w(v, j));
    let mut out = Vec::new();
    for (index, c) in family.iter().enumerate() {
        let check = is_star_cutset(g, c)?;
        if !check.is_star() {
            return Err(Error::NotStarCutset {
                index,
                reason: check.failure().unwrap_or_default(),
            });
        }
        if c.contains(v) {
            let comps = g.components(c.removal())?;
            if comps.of_vertex(wi) == comps.of_vertex(wj) {
                out.push(index);
            }
        }
    }
    Ok(out)
}

/// Whether `x` and `y` lie in different components of `g − c`.
pub fn separates(g: &Graph, c: &Cutset, x: Point, y: Point) -> Result<bool> {
    c.validate(g)?;
    for p in [x, y] {
        if p.in_cutset(c) {
            return Err(Error::PointInCutset(p.describe(g)));
        }
    }
    let comps = g.components(c.removal())?;
    Ok(x.component(&comps) != y.component(&comps))
}

/// Whether `x` and `y` lie in different blocks of the partition.
pub fn partition_separates(g: &Graph, cp: &CutsetPartition, x: Point, y: Point) -> Result<bool> {
    match (cp.block_of_point(x), cp.block_of_point(y)) {
        (Some(a), Some(b)) => Ok(a != b),
        _ => {
            let bad = if cp.block_of_point(x).is_none() { x } else { y };
            Err(Error::PointInCutset(bad.describe(g)))
        }
    }
}

/// Items of one family line, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyItems {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    pub name: String,
    pub items: FamilyItems,
}

/// A parsed cutset family file.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CutsetFamily {
    pub entries: Vec<FamilyEntry>,
}

impl CutsetFamily {
    /// Cutsets in file order, checked against `g`.
    pub fn resolve(&self, g: &Graph) -> Result<Vec<Cutset>> {
        self.entries
            .iter()
            .map(|e| {
                let c = match &e.items {
                    FamilyItems::Vertices(vs) => Cutset::vertices(vs.clone())?,
                    FamilyItems::Edges(ps) => Cutset::edges_between(g, ps)?,
                };
                c.validate(g)?;
                Ok(c)
            })
            .collect()
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }
}

/// Parses lines `name: 1 4 7` (vertex kind) or `name: 1-2 4-5` (edge kind).
pub fn parse_family(text: &str) -> Result<CutsetFamily, ParseError> {
    let mut entries = Vec::new();
    let mut kind: Option<CutsetKind> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let bad = || ParseError::new(lineno, ParseErrorKind::Malformed(content.to_string()));
        let (name, rest) = content.split_once(':').ok_or_else(bad)?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(bad());
        }
        let line_kind = if tokens[0].contains('-') {
            CutsetKind::Edge
        } else {
            CutsetKind::Vertex
        };
        if *kind.get_or_insert(line_kind) != line_kind {
            return Err(bad());
        }
        let id = |s: &str| -> Result<usize, ParseError> {
            let s = s.strip_prefix('v').unwrap_or(s);
            match s.parse::<usize>() {
                Ok(0) => Err(ParseError::new(lineno, ParseErrorKind::VertexOutOfRange(0, 0))),
                Ok(v) => Ok(v - 1),
                Err(_) => Err(bad()),
            }
        };
        let items = match line_kind {
            CutsetKind::Vertex => FamilyItems::Vertices(tokens.iter().map(|t| id(t)).collect::<Result<_, _>>()?),
            CutsetKind::Edge => FamilyItems::Edges(
                tokens
                    .iter()
                    .map(|t| {
                        let (a, b) = t.split_once('-').ok_or_else(bad)?;
                        Ok((id(a)?, id(b)?))
                    })
                    .collect::<Result<_, ParseError>>()?,
            ),
        };
        entries.push(FamilyEntry {
            name: name.trim().to_string(),
            items,
        });
    }
    Ok(CutsetFamily { entries })
}

/// Writes named cutsets in the family format.
pub fn write_family(g: &Graph, named: &[(String, Cutset)]) -> String {
    named
        .iter()
        .map(|(name, c)| format!("{}: {}\n", name, c.describe(g)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn vs(ids: &[usize]) -> Cutset {
        Cutset::vertices(ids.iter().map(|v| v - 1).collect()).unwrap()
    }

    #[test]
    fn hexagon_cuts() {
        let g = cycle(6);
        let check = is_cutset(&g, &vs(&[1, 4])).unwrap();
        assert!(check.is_cutset);
        assert_eq!(check.components.len(), 2);
        assert!(!is_cutset(&g, &vs(&[1])).unwrap().is_cutset);
        assert_eq!(canonical_partition(&g, &vs(&[1])), Err(Error::NotACutset));
    }

    #[test]
    fn theta_has_three_components() {
        let g = theta(3);
        let p = canonical_partition(&g, &Cutset::vertices(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn properness() {
        let g = cycle(6);
        let opposite = Cutset::edges_between(&g, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(is_proper(&g, &opposite).unwrap(), None);
        assert_eq!(is_proper(&g, &vs(&[1, 4])).unwrap(), None);
        let k = k4_minus_edge();
        let w = is_proper(&k, &Cutset::vertices(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(w, Some(ProperWitness::Vertex(0, 1, 2)));
    }

    #[test]
    fn midpoint_distances() {
        let g = cycle(6);
        let (a, b) = (g.edge_between(0, 1).unwrap(), g.edge_between(3, 4).unwrap());
        let d = midpoint_distance(&g, &Metric::Combinatorial, Point::Midpoint(a), Point::Midpoint(b)).unwrap();
        assert_eq!(d, Distance::from_int(3));
        let d = midpoint_distance(&g, &Metric::Combinatorial, Point::Midpoint(a), Point::Vertex(1)).unwrap();
        assert_eq!(d, Distance::Finite(Q::new(1, 2)));
        let c4 = cycle(4);
        let m = Metric::uniform_angular(&c4, Q::new(1, 2));
        let (a, b) = (c4.edge_between(0, 1).unwrap(), c4.edge_between(2, 3).unwrap());
        assert_eq!(
            midpoint_distance(&c4, &m, Point::Midpoint(a), Point::Midpoint(b)).unwrap(),
            Distance::from_int(1)
        );
    }

    #[test]
    fn sigma_separation() {
        let g = cycle(6);
        let three = Q::from_integer(3);
        let check = is_sigma_separated(&g, &Metric::Combinatorial, &vs(&[1, 2]), three).unwrap();
        assert!(!check.separated);
        assert_eq!(check.closest.unwrap().2, Distance::from_int(1));
        assert!(is_sigma_separated(&g, &Metric::Combinatorial, &vs(&[5]), Q::from_integer(100)).unwrap().separated);
    }

    #[test]
    fn minimality() {
        let g = cycle(6);
        assert!(is_minimal_cutset(&g, &vs(&[1, 4])).unwrap().minimal);
        let m = is_minimal_cutset(&g, &vs(&[1, 2, 4])).unwrap();
        assert!(!m.minimal);
        assert!(m.removable.contains(&1));
    }

    #[test]
    fn star_cutsets_need_trivalent_graphs() {
        assert!(matches!(is_star_cutset(&cycle(6), &vs(&[1, 4])), Err(Error::NotCubic(_))));
        let q3 = hypercube(3);
        let check = is_star_cutset(&q3, &Cutset::vertices(vec![0, 7]).unwrap()).unwrap();
        assert!(!check.is_star());
        assert_eq!(check.component_count, 1);
    }

    #[test]
    fn separation_queries() {
        let g = cycle(6);
        let c = vs(&[1, 4]);
        assert!(separates(&g, &c, Point::Vertex(1), Point::Vertex(4)).unwrap());
        assert!(!separates(&g, &c, Point::Vertex(1), Point::Vertex(2)).unwrap());
        assert!(matches!(separates(&g, &c, Point::Vertex(0), Point::Vertex(2)), Err(Error::PointInCutset(_))));
        let cp = CutsetPartition::canonical(&g, c).unwrap();
        assert!(partition_separates(&g, &cp, Point::Vertex(1), Point::Vertex(4)).unwrap());
    }

    #[test]
    fn partitions_are_validated() {
        assert!(Partition::new(vec![vec![0, 1]], 2).is_err());
        assert!(Partition::new(vec![vec![0], vec![0, 1]], 2).is_err());
        assert!(Partition::new(vec![vec![0], vec![2]], 3).is_err());
        let coarse = Partition::new(vec![vec![2, 0], vec![1]], 3).unwrap();
        assert_eq!(coarse.blocks(), &[vec![0, 2], vec![1]]);
        assert!(Partition::canonical(3).unwrap().refines(&coarse));
        assert!(!coarse.refines(&Partition::canonical(3).unwrap()));
    }

    #[test]
    fn family_files() {
        let fam = parse_family("# two cuts\nA: 1 4\nB: v2 v5 # trailing\n").unwrap();
        assert_eq!(fam.names(), vec!["A", "B"]);
        let g = cycle(6);
        assert_eq!(fam.resolve(&g).unwrap()[1], vs(&[2, 5]));
        let edges = parse_family("E: 1-2 4-5\n").unwrap();
        assert_eq!(edges.resolve(&g).unwrap()[0].kind(), CutsetKind::Edge);
        assert!(parse_family("A: 1 2\nB: 1-2\n").is_err());
        assert!(parse_family("A 1 2\n").is_err());
        assert!(parse_family("A: 0\n").is_err());
        let written = write_family(&g, &[("A".into(), vs(&[1, 4]))]);
        assert_eq!(parse_family(&written).unwrap().resolve(&g).unwrap()[0], vs(&[1, 4]));
    }
}
