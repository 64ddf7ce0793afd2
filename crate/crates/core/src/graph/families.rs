//! Small named graphs used by tests, examples and the search corpus.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("named graph is simple")
}

/// Cycle `C_n` on vertices `0..n`, edges `i ~ i+1`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    build(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in 0..b {
            edges.push((x, a + y));
        }
    }
    build(a + b, &edges)
}

/// The `d`-dimensional hypercube; vertices are bit strings.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    build(n, &edges)
}

/// Disjoint union of graphs, relabelled consecutively.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        offset += g.n();
    }
    build(offset, &edges)
}

/// `C_n × K_2`.
pub fn prism(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    build(2 * n, &edges)
}

/// Möbius ladder on `2k` vertices: a `2k`-cycle plus its long diagonals.
pub fn mobius_ladder(k: usize) -> Graph {
    let n = 2 * k;
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..k).map(|i| (i, i + k)));
    build(n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    build(10, &edges)
}

/// Heawood graph: LCF notation [5,−5]^7.
pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

/// Franklin graph: LCF [5,−5]^6.
pub fn franklin() -> Graph {
    lcf(12, &[5, -5])
}

/// Truncated tetrahedron: LCF [2,6,−2]^4.
pub fn truncated_tetrahedron() -> Graph {
    lcf(12, &[2, 6, -2])
}

/// Hamiltonian cubic graph from LCF notation.
pub fn lcf(n: usize, jumps: &[i64]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as i64 + jumps[i % jumps.len()]).rem_euclid(n as i64) as usize;
        let pair = (i.min(j), i.max(j));
        if !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == pair) {
            edges.push(pair);
        }
    }
    build(n, &edges)
}

/// Two branch vertices `0` and `1` joined by `k` paths of length 2.
pub fn theta(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((0, 2 + i));
        edges.push((1, 2 + i));
    }
    build(k + 2, &edges)
}

/// `K_4` minus the edge `2-3`; vertices 0 and 1 have degree 3.
pub fn k4_minus_edge() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Two copies of `K_4` with one edge subdivided, joined at the subdivision
/// vertices by a bridge.
pub fn bridged_k4_pair() -> Graph {
    let gadget = [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut edges: Vec<(usize, usize)> = gadget.to_vec();
    edges.extend(gadget.iter().map(|&(a, b)| (a + 5, b + 5)));
    edges.push((4, 9));
    build(10, &edges)
}

/// Named trivalent graphs on at most 14 vertices, for exhaustive search checks.
pub fn small_cubic_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", complete(4)),
        ("K3,3", complete_bipartite(3, 3)),
        ("prism3", prism(3)),
        ("Q3", hypercube(3)),
        ("wagner", mobius_ladder(4)),
        ("petersen", petersen()),
        ("prism5", prism(5)),
        ("mobius10", mobius_ladder(5)),
        ("prism6", prism(6)),
        ("franklin", franklin()),
        ("truncated-tetrahedron", truncated_tetrahedron()),
        ("heawood", heawood()),
        ("prism7", prism(7)),
        ("bridged-k4-pair", bridged_k4_pair()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{structural_report, Distance};

    #[test]
    fn corpus_is_trivalent_and_connected() {
        for (name, g) in small_cubic_corpus() {
            assert!(g.n() <= 14, "{name}");
            assert!((0..g.n()).all(|v| g.degree(v) == 3), "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn heawood_is_the_incidence_graph_of_the_fano_plane() {
        let r = structural_report(&heawood());
        assert_eq!((r.n, r.edges), (14, 21));
        assert!(r.bipartite);
        assert_eq!(r.girth, Distance::from_int(6));
        assert_eq!(r.diameter, Distance::from_int(3));
    }

    #[test]
    fn petersen_girth_five() {
        let r = structural_report(&petersen());
        assert_eq!(r.girth, Distance::from_int(5));
        assert!(!r.bipartite);
    }
}
