//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library beyond graph construction.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use linksep::Graph;

use rand::seq::SliceRandom;
use rand::Rng;

/// Plain adjacency lists.
pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if d[w].is_none() {
                d[w] = Some(d[u].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    d
}

/// Component labels of the vertices outside `cut`; edges with both ends in
/// `cut` are open segments and count as extra pieces.
pub fn pieces(adj: &[Vec<usize>], cut: &BTreeSet<usize>) -> (Vec<Option<usize>>, usize) {
    let mut label = vec![None; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if cut.contains(&s) || label[s].is_some() {
            continue;
        }
        label[s] = Some(count);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !cut.contains(&w) && label[w].is_none() {
                    label[w] = Some(count);
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    let open = adj
        .iter()
        .enumerate()
        .filter(|(u, _)| cut.contains(u))
        .map(|(u, ns)| ns.iter().filter(|&&w| w > u && cut.contains(&w)).count())
        .sum::<usize>();
    (label, count + open)
}

/// Every *-separated vertex set by exhaustive subset enumeration: pairwise
/// distance ≥ 3, exactly two pieces, and no proper subset of the form
/// `C − {c}` still disconnects.
pub fn brute_force_star_cutsets(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20);
    let adj = adjacency(g);
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| bfs(&adj, s)).collect();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let c: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let far = c
            .iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| dist[a][b].map_or(true, |d| d >= 3)));
        if !far {
            continue;
        }
        let set: BTreeSet<usize> = c.iter().copied().collect();
        if pieces(&adj, &set).1 != 2 {
            continue;
        }
        let minimal = c.iter().all(|&x| {
            let mut rest = set.clone();
            rest.remove(&x);
            pieces(&adj, &rest).1 < 2
        });
        if minimal {
            out.insert(c);
        }
    }
    out
}

/// A random simple connected trivalent graph on `n` vertices (n even),
/// by pairing stubs and rejecting loops, multi-edges and disconnection.
pub fn random_cubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut edges = BTreeSet::new();
        let ok = stubs.chunks(2).all(|p| {
            let (a, b) = (p[0].min(p[1]), p[0].max(p[1]));
            a != b && edges.insert((a, b))
        });
        if !ok {
            continue;
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Number of automorphisms by plain backtracking: vertices are mapped in
/// BFS order, each one onto an unused neighbour of its parent's image, and
/// every partial map must preserve all pairwise distances so far. A full
/// map preserving distance 1 both ways is an automorphism.
pub fn count_automorphisms(g: &Graph) -> u64 {
    let n = g.n();
    let adj = adjacency(g);
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| bfs(&adj, s)).collect();
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    assert_eq!(order.len(), n, "connected graphs only");
    struct St<'a> {
        order: &'a [usize],
        parent: &'a [usize],
        adj: &'a [Vec<usize>],
        dist: &'a [Vec<Option<usize>>],
        img: Vec<usize>,
        used: Vec<bool>,
    }
    fn go(k: usize, st: &mut St<'_>) -> u64 {
        if k == st.order.len() {
            return 1;
        }
        let v = st.order[k];
        let cands: Vec<usize> = if k == 0 {
            (0..st.adj.len()).collect()
        } else {
            st.adj[st.img[st.parent[v]]].clone()
        };
        let mut total = 0;
        for c in cands {
            if st.used[c] || st.adj[c].len() != st.adj[v].len() {
                continue;
            }
            let consistent = st.order[..k].iter().all(|&u| st.dist[u][v] == st.dist[st.img[u]][c]);
            if !consistent {
                continue;
            }
            st.img[v] = c;
            st.used[c] = true;
            total += go(k + 1, st);
            st.used[c] = false;
        }
        total
    }
    let mut st = St {
        order: &order,
        parent: &parent,
        adj: &adj,
        dist: &dist,
        img: vec![usize::MAX; n],
        used: vec![false; n],
    };
    go(0, &mut st)
}

/// Midpoint distances through an explicit subdivision: every edge gets a
/// middle vertex, distances are halved.
pub fn subdivided_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let m = g.edge_count();
    let mut adj = vec![Vec::new(); n + m];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        adj[a].push(n + e);
        adj[b].push(n + e);
        adj[n + e].push(a);
        adj[n + e].push(b);
    }
    (0..n + m).map(|s| bfs(&adj, s)).collect()
}
pub mod props;
