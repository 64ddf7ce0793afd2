//! Gluing equations. A hexagon glued to itself is solved by all-ones; a
//! hexagon glued to an octagon along one edge needs weights (2, 1).

use linksep::aut::{automorphism_group, Permutation};
use linksep::cutset::{Cutset, CutsetKind};
use linksep::gluing::{solve_gluing, EdgeGerm, GluingSolution, GluingStructure, LinkInstance};
use linksep::graph::families::cycle;
use linksep::{Metric, Q};

fn link(n: usize, step: usize) -> LinkInstance {
    let g = cycle(n);
    let pairs: Vec<Cutset> = (0..n)
        .map(|i| Cutset::vertices(vec![i, (i + step) % n]).unwrap())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let m = Metric::uniform_angular(&g, Q::new(1, 3));
    LinkInstance::canonical(g, m, CutsetKind::Vertex, &pairs).unwrap()
}

fn show(s: &GluingStructure) {
    match solve_gluing(s).unwrap() {
        GluingSolution::Solved { orbit_values, method, .. } => println!("  weights per orbit {:?} ({})", orbit_values, method),
        GluingSolution::Infeasible { equations, combined } => {
            println!("  no positive solution; {} equations combine to {:?}", equations.len(), combined)
        }
    }
}

fn main() {
    let hex = link(6, 3);
    let gens = automorphism_group(hex.graph(), 1000).generators().to_vec();
    println!("hexagon with itself:");
    show(&GluingStructure::link_homogeneous(hex.clone(), gens).unwrap());

    let links = vec![hex, link(8, 3)];
    let germ = EdgeGerm::new(&links, (0, 0), (1, 0), &[(1, 1), (5, 7)]).unwrap();
    let rot = |n: usize| Permutation::from_images((0..n).map(|v| (v + 1) % n).collect()).unwrap();
    let flip = Permutation::from_images((0..8).map(|v| (8 - v) % 8).collect()).unwrap();
    let s = GluingStructure {
        links,
        germs: vec![germ],
        symmetries: vec![vec![rot(6)], vec![rot(8), flip]],
    };
    println!("hexagon to octagon:");
    show(&s);
}
