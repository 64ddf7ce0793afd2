//! The cone over F090A: its apex link is F090A, and the vertex cutset C1
//! traced from the apex is a star with 21 leaves on the rim.

use linksep::complex::{cone, hypergraph_checks, link, trace_hypergraph, wall_cut, Seed};
use linksep::cutset::{CutsetKind, Point};
use linksep::f090a;

fn main() {
    let g = f090a::graph();
    let x = cone(&g);
    let apex = g.n();
    let l = link(&x, apex).unwrap();
    println!("apex link: {} vertices, {} edges", l.graph.n(), l.graph.edge_count());

    let c1 = &f090a::cutset_list()[0];
    let labels: Vec<String> = c1.elements().iter().map(|v| (v + 1).to_string()).collect();
    let seed = Seed::from_labels(&x, Point::Vertex(apex), CutsetKind::Vertex, &labels).unwrap();
    let h = trace_hypergraph(&x, &seed).unwrap();
    println!("{} segments, {} frontier points", h.segments.len(), h.frontier.len());
    print!("{}", linksep::cli::render(&hypergraph_checks(&x, &h)));

    let cut = wall_cut(&x, &h).unwrap();
    for side in 0..cut.len() {
        let members: Vec<String> = (0..g.n())
            .filter(|&v| cut.side_of(Point::Vertex(v)) == Some(side))
            .map(|v| (v + 1).to_string())
            .collect();
        println!("side {}: {} rim vertices", side, members.len());
    }
}
