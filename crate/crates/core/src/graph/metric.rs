use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::ops::Add;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

/// Exact rational. Under an angular metric a value `q` means `q·π` radians.
pub type Q = Rational64;

/// Edge lengths of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Every edge has length 1.
    Combinatorial,
    /// Per-edge length `q·π`, indexed by edge id; every `q` strictly positive.
    Angular(Vec<Q>),
}

impl Metric {
    /// Angular metric giving every edge of `g` the same length `q·π`.
    pub fn uniform_angular(g: &Graph, q: Q) -> Metric {
        Metric::Angular(vec![q; g.edge_count()])
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Metric::Angular(lengths) = self {
            if lengths.len() != g.edge_count() {
                return Err(Error::InvalidMetric(format!(
                    "{} lengths for {} edges",
                    lengths.len(),
                    g.edge_count()
                )));
            }
            if let Some(e) = lengths.iter().position(|q| *q <= Q::zero()) {
                return Err(Error::InvalidMetric(format!(
                    "edge {} has non-positive length",
                    e
                )));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn length(&self, e: usize) -> Q {
        match self {
            Metric::Combinatorial => Q::one(),
            Metric::Angular(l) => l[e],
        }
    }
}

/// A finite exact distance or infinity (disconnected pair, acyclic graph).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(Q),
    Infinite,
}

impl Distance {
    pub fn from_int(k: i64) -> Distance {
        Distance::Finite(Q::from_integer(k))
    }

    pub fn finite(self) -> Option<Q> {
        match self {
            Distance::Finite(q) => Some(q),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl Add for Distance {
    type Output = Distance;
    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl Add<Q> for Distance {
    type Output = Distance;
    fn add(self, rhs: Q) -> Distance {
        self + Distance::Finite(rhs)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(q) => write!(f, "{}", q),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All-pairs exact shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceTable {
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> Distance {
        self.d[a * self.n + b]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest entry; infinite when some pair is disconnected.
    pub fn diameter(&self) -> Distance {
        self.d.iter().copied().max().unwrap_or(Distance::from_int(0))
    }

    pub fn row(&self, a: usize) -> &[Distance] {
        &self.d[a * self.n..(a + 1) * self.n]
    }
}

/// Exact all-pairs distances: breadth-first search for the combinatorial
/// metric, rational Dijkstra for angular lengths.
pub fn distances(g: &Graph, m: &Metric) -> Result<DistanceTable> {
    m.validate(g)?;
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        match m {
            Metric::Combinatorial => {
                d.extend(super::bfs_distances(g, s).into_iter().map(|x| match x {
                    Some(k) => Distance::from_int(k as i64),
                    None => Distance::Infinite,
                }))
            }
            Metric::Angular(_) => d.extend(dijkstra(g, m, s).0),
        }
    }
    Ok(DistanceTable { n, d })
}

/// Single-source distances and shortest-path-tree parents.
pub(crate) fn dijkstra(g: &Graph, m: &Metric, s: usize) -> (Vec<Distance>, Vec<Option<usize>>) {
    let n = g.n();
    let mut dist = vec![Distance::Infinite; n];
    let mut parent = vec![None; n];
    let mut done = vec![false; n];
    dist[s] = Distance::Finite(Q::zero());
    let mut heap = BinaryHeap::from([Reverse((Q::zero(), s))]);
    while let Some(Reverse((du, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for (&w, e) in g.neighbors(u).iter().zip(g.incident_edges(u)) {
            let cand = du + m.length(e);
            if Distance::Finite(cand) < dist[w] {
                dist[w] = Distance::Finite(cand);
                parent[w] = Some(u);
                heap.push(Reverse((cand, w)));
            }
        }
    }
    (dist, parent)
}

/// Length of a shortest cycle under `m`; infinite for forests.
pub fn girth(g: &Graph, m: &Metric) -> Result<Distance> {
    Ok(shortest_cycle(g, m)?.map_or(Distance::Infinite, |(len, _)| Distance::Finite(len)))
}

/// A shortest cycle under `m` as its length and vertex sequence, or `None`
/// for forests.
///
/// For each root the shortest-path tree is grown and every non-tree edge
/// `uw` closes a walk of length `d(u) + len(uw) + d(w)`; some root on a
/// shortest cycle attains its length exactly, and a minimal walk is simple.
pub fn shortest_cycle(g: &Graph, m: &Metric) -> Result<Option<(Q, Vec<usize>)>> {
    m.validate(g)?;
    let mut best: Option<(Q, usize, usize, usize)> = None;
    for root in 0..g.n() {
        let (dist, parent) = tree(g, m, root);
        for (e, &(u, w)) in g.edges().iter().enumerate() {
            if parent[u] == Some(w) || parent[w] == Some(u) {
                continue;
            }
            if let Distance::Finite(len) = dist[u] + m.length(e) + dist[w] {
                if best.map_or(true, |(b, ..)| len < b) {
                    best = Some((len, root, u, w));
                }
            }
        }
    }
    Ok(best.map(|(len, root, u, w)| {
        let parent = tree(g, m, root).1;
        let climb = |mut x: usize| {
            let mut p = vec![x];
            while let Some(y) = parent[x] {
                p.push(y);
                x = y;
            }
            p
        };
        let (mut a, mut b) = (climb(u), climb(w));
        // Drop the common tail above the branching point.
        while a.len() > 1 && b.len() > 1 && a[a.len() - 2] == b[b.len() - 2] {
            a.pop();
            b.pop();
        }
        b.pop();
        a.reverse();
        a.extend(b);
        let lowest = a.iter().enumerate().min_by_key(|&(_, &x)| x).map_or(0, |(i, _)| i);
        a.rotate_left(lowest);
        (len, a)
    }))
}

fn tree(g: &Graph, m: &Metric, root: usize) -> (Vec<Distance>, Vec<Option<usize>>) {
    match m {
        Metric::Combinatorial => bfs_tree(g, root),
        Metric::Angular(_) => dijkstra(g, m, root),
    }
}

fn bfs_tree(g: &Graph, s: usize) -> (Vec<Distance>, Vec<Option<usize>>) {
    let n = g.n();
    let mut hops = vec![None; n];
    let mut parent = vec![None; n];
    hops[s] = Some(0i64);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if hops[w].is_none() {
                hops[w] = Some(hops[u].unwrap() + 1);
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    let dist = hops
        .into_iter()
        .map(|h| h.map_or(Distance::Infinite, Distance::from_int))
        .collect();
    (dist, parent)
}
