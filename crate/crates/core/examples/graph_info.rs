//! Structure of a graph read from an edge list, with and without angular
//! lengths, next to the built-in F090A.

use linksep::f090a;
use linksep::graph::{girth, parse_edge_list, shortest_cycle, structural_report};

const HEXAGON: &str = "\
# a hexagon with one long side
1 2 1/3
2 3 1/3
3 4 1/3
4 5 1/3
5 6 1/3
6 1 2/3
";

fn main() {
    let r = structural_report(&f090a::graph());
    println!("F090A: n={} m={} girth {} diameter {} bipartite {}", r.n, r.edges, r.girth, r.diameter, r.bipartite);

    let el = parse_edge_list(HEXAGON).expect("valid edge list");
    let g = &el.graph;
    println!("hexagon: n={} m={} angular girth {}", g.n(), g.edge_count(), girth(g, &el.metric).unwrap());
    if let Some((len, cycle)) = shortest_cycle(g, &el.metric).unwrap() {
        let names: Vec<String> = cycle.iter().map(|&v| g.vertex_name(v)).collect();
        println!("  shortest cycle {} of length {}π", names.join(" "), len);
    }
}
