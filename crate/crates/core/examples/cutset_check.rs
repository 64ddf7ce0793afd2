//! Cutset predicates on the given F090A cutsets and on their minimal
//! reductions.

use linksep::cutset::{is_cutset, is_minimal_cutset, is_proper, is_star_cutset, reduce_to_minimal};
use linksep::f090a;

fn main() {
    let g = f090a::graph();
    let fam = f090a::cutsets();
    for (name, c) in fam.names().into_iter().zip(f090a::cutset_list()) {
        let cut = is_cutset(&g, &c).unwrap();
        let star = is_star_cutset(&g, &c).unwrap();
        println!(
            "{}: {} vertices, {} components, proper {}, *-separated {}",
            name,
            c.len(),
            cut.components.len(),
            is_proper(&g, &c).unwrap().is_none(),
            star.is_star()
        );
        if let Some(why) = star.failure() {
            println!("  {}", why);
        }
        let r = reduce_to_minimal(&g, &c).unwrap();
        println!(
            "  reduced to {} vertices: minimal {}, *-separated {}",
            r.len(),
            is_minimal_cutset(&g, &r).unwrap().minimal,
            is_star_cutset(&g, &r).unwrap().is_star()
        );
    }
}
