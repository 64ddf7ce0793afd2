//! Finite simple graphs with exact combinatorial or angular metrics.
//!
//! Vertices are stored as indices `0..n`; every textual or JSON surface
//! shows them as ids `1..=n` (`index + 1`), so the built-in tables can be
//! read verbatim. Edges get ids `0..m` in lexicographic order of their
//! endpoint pairs.

pub mod families;
mod metric;
mod parse;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use metric::{distances, girth, shortest_cycle, Distance, DistanceTable, Metric, Q};
pub use parse::{parse_edge_list, to_edge_list, EdgeList};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from 0-based endpoint pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::UnknownVertex(a));
            }
            if b >= n {
                return Err(Error::UnknownVertex(b));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", a + 1)));
            }
            list.push((a.min(b), a.max(b)));
            adj[a].push(b);
            adj[b].push(a);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges: list,
            labels: None,
        })
    }

    /// Builds a graph from 1-based vertex ids, as listed in tables.
    pub fn from_ids(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut zero = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::UnknownVertex(0));
            }
            zero.push((a - 1, b - 1));
        }
        Graph::new(n, &zero)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edge endpoints `(a, b)` with `a < b`, indexed by edge id.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Ids of the edges incident to `v`, in neighbor order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .map(move |&w| self.edge_between(v, w).expect("adjacency is symmetric"))
    }

    /// Display form of a vertex: its label if any, else its 1-based id.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || bfs_distances(self, 0).iter().all(|d| d.is_some())
    }

    /// Proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Connected, bipartite and trivalent.
    pub fn is_cubic(&self) -> bool {
        self.cubic_violation().is_none()
    }

    pub(crate) fn cubic_violation(&self) -> Option<String> {
        if let Some(v) = (0..self.n()).find(|&v| self.degree(v) != 3) {
            return Some(format!(
                "vertex {} has degree {}",
                self.vertex_name(v),
                self.degree(v)
            ));
        }
        if !self.is_connected() {
            return Some("graph is disconnected".into());
        }
        if !self.is_bipartite() {
            return Some("graph is not bipartite".into());
        }
        None
    }

    /// Image of the graph under a vertex permutation (`perm[v]` is the new index of `v`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::new(self.n(), &edges).expect("a permutation preserves simplicity")
    }

    pub fn components(&self, removed: Removal<'_>) -> Result<Components> {
        Components::compute(self, removed)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n(), self.edge_count())
    }
}

/// Breadth-first hop counts from `s`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// What is deleted from the graph's topological realisation.
#[derive(Clone, Copy, Debug)]
pub enum Removal<'a> {
    /// Closed vertices; the open edges incident to them survive as hanging segments.
    Vertices(&'a [usize]),
    /// Open edges (interiors); endpoints survive.
    Edges(&'a [usize]),
}

/// One connected piece of `Γ − removed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Surviving vertices in the piece, ascending.
    pub vertices: Vec<usize>,
    /// Edges whose surviving interior lies (at least partly) in the piece.
    pub edges: Vec<usize>,
}

/// Connected components of a graph with vertices or open edges removed.
///
/// An open edge whose endpoints are both removed forms a component of its
/// own. Components are ordered by least vertex; vertex-free pieces follow,
/// ordered by edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    comps: Vec<Component>,
    vertex_comp: Vec<Option<usize>>,
    edge_comp: Vec<Option<usize>>,
}

impl Components {
    fn compute(g: &Graph, removed: Removal<'_>) -> Result<Components> {
        let n = g.n();
        let m = g.edge_count();
        let mut dead_v = vec![false; n];
        let mut dead_e = vec![false; m];
        match removed {
            Removal::Vertices(vs) => {
                for &v in vs {
                    if v >= n {
                        return Err(Error::UnknownVertex(v));
                    }
                    dead_v[v] = true;
                }
            }
            Removal::Edges(es) => {
                for &e in es {
                    if e >= m {
                        return Err(Error::UnknownEdge(e));
                    }
                    dead_e[e] = true;
                }
            }
        }
        // Union-find over vertices (0..n) and edge interiors (n..n+m).
        let mut uf = UnionFind::new(n + m);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if dead_e[e] {
                continue;
            }
            if !dead_v[a] {
                uf.union(n + e, a);
            }
            if !dead_v[b] {
                uf.union(n + e, b);
            }
        }
        let mut key_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        for v in (0..n).filter(|&v| !dead_v[v]) {
            let r = uf.find(v);
            let k = key_of_root.entry(r).or_insert(usize::MAX);
            *k = (*k).min(v);
        }
        for e in (0..m).filter(|&e| !dead_e[e]) {
            let r = uf.find(n + e);
            let k = key_of_root.entry(r).or_insert(usize::MAX);
            *k = (*k).min(n + e);
        }
        let mut roots: Vec<(usize, usize)> = key_of_root.into_iter().map(|(r, k)| (k, r)).collect();
        roots.sort_unstable();
        let index: BTreeMap<usize, usize> = roots.iter().enumerate().map(|(i, &(_, r))| (r, i)).collect();
        let mut comps = vec![
            Component {
                vertices: Vec::new(),
                edges: Vec::new()
            };
            roots.len()
        ];
        let mut vertex_comp = vec![None; n];
        let mut edge_comp = vec![None; m];
        for v in (0..n).filter(|&v| !dead_v[v]) {
            let c = index[&uf.find(v)];
            comps[c].vertices.push(v);
            vertex_comp[v] = Some(c);
        }
        for e in (0..m).filter(|&e| !dead_e[e]) {
            let c = index[&uf.find(n + e)];
            comps[c].edges.push(e);
            edge_comp[e] = Some(c);
        }
        Ok(Components {
            comps,
            vertex_comp,
            edge_comp,
        })
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn list(&self) -> &[Component] {
        &self.comps
    }

    /// Component containing a surviving vertex.
    pub fn of_vertex(&self, v: usize) -> Option<usize> {
        self.vertex_comp.get(v).copied().flatten()
    }

    /// Component containing the midpoint of a surviving edge.
    pub fn of_edge(&self, e: usize) -> Option<usize> {
        self.edge_comp.get(e).copied().flatten()
    }

    /// Per-vertex component labels (`None` for removed vertices).
    pub fn vertex_labels(&self) -> &[Option<usize>] {
        &self.vertex_comp
    }
}

/// Summary of the structural facts used by the cubic-graph clauses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub n: usize,
    pub edges: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub regular_degree: Option<usize>,
    pub bipartite: bool,
    pub connected: bool,
    pub girth: Distance,
    pub diameter: Distance,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let mut degree_histogram = BTreeMap::new();
    for v in 0..g.n() {
        *degree_histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    let regular_degree = if degree_histogram.len() == 1 {
        degree_histogram.keys().next().copied()
    } else {
        None
    };
    StructuralReport {
        n: g.n(),
        edges: g.edge_count(),
        degree_histogram,
        regular_degree,
        bipartite: g.is_bipartite(),
        connected: g.is_connected(),
        girth: girth(g, &Metric::Combinatorial).expect("combinatorial metric always applies"),
        diameter: distances(g, &Metric::Combinatorial)
            .expect("combinatorial metric always applies")
            .diameter(),
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}
