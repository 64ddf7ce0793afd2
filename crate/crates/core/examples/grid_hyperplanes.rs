//! Hypergraphs traced through a 5 x 5 grid of squares: one mid-line per
//! row and column of squares, each cutting the grid in two.

use std::collections::BTreeSet;

use linksep::complex::{check_gromov, hypergraph_checks, square_grid, trace_hypergraph, wall_cut, Seed};
use linksep::cutset::{CutsetKind, Point};

fn main() {
    let x = square_grid(4, 4);
    println!(
        "{} vertices, {} edges, {} squares, D(X) = {}, CAT(0) links {}",
        x.vertex_count(),
        x.edge_count(),
        x.face_count(),
        x.max_circumference(),
        check_gromov(&x).pass
    );
    let mut seen = BTreeSet::new();
    for e in 0..x.edge_count() {
        let faces = x.faces_on_edge(e);
        if faces.len() != 2 {
            continue;
        }
        let labels: Vec<String> = faces.iter().map(|&(f, _)| format!("f{}", f + 1)).collect();
        let seed = Seed::from_labels(&x, Point::Midpoint(e), CutsetKind::Edge, &labels).unwrap();
        let h = trace_hypergraph(&x, &seed).unwrap();
        if !seen.insert(h.segments.clone()) {
            continue;
        }
        let ends: Vec<String> = h.frontier.keys().map(|&p| x.describe_point(p)).collect();
        println!(
            "mid-line from {}: ends {}, checks pass {}, {} sides",
            x.describe_point(Point::Midpoint(e)),
            ends.join(" and "),
            hypergraph_checks(&x, &h).pass,
            wall_cut(&x, &h).unwrap().len()
        );
    }
}
