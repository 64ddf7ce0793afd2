//! Automorphism group of the built-in F090A graph: order, basic orbits,
//! distance-transitivity, and the orbit of the cutset C1.

use linksep::aut::{automorphism_group, is_distance_transitive, orbit_of_vertex_set, DEFAULT_ENUMERATE_BUDGET};
use linksep::f090a;

fn main() {
    let g = f090a::graph();
    let grp = automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET);
    println!("|Aut(F090A)| = {}", grp.order());
    println!("base {:?}, basic orbit sizes {:?}", grp.base().iter().map(|v| v + 1).collect::<Vec<_>>(), grp.basic_orbit_sizes());
    println!("generators: {}", grp.generators().len());
    for p in grp.generators().iter().take(2) {
        println!("  {}", p);
    }

    let dt = is_distance_transitive(&g, &grp).expect("group is enumerated");
    println!("distance-transitive: {}", dt.holds);
    for (d, pairs, orbit) in &dt.layers {
        println!("  d={} ordered pairs {} orbit of first pair {}", d, pairs, orbit);
    }

    let c1 = &f090a::cutset_list()[0];
    let orbit = orbit_of_vertex_set(&grp, c1.elements()).expect("group is enumerated");
    println!("orbit of C1: {} distinct cutsets", orbit.len());
}
