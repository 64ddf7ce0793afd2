//! Triangle-link certificates: the pentagon fails the Gromov condition,
//! F090A passes with a searched family of *-cutsets.

use linksep::certify::certify_triangle_link;
use linksep::f090a;
use linksep::graph::families::cycle;

fn main() {
    let c5 = certify_triangle_link(&cycle(5), None);
    println!("pentagon: pass {}", c5.pass);
    for k in c5.failures().take(2) {
        println!("  {} {}", k.name, k.witness.as_ref().map_or(String::new(), |w| w.to_string()));
    }

    let cert = certify_triangle_link(&f090a::graph(), None);
    println!("F090A: pass {}", cert.pass);
    for k in &cert.checks {
        println!("  [{}] {}", if k.pass { "ok" } else { "FAIL" }, k.name);
    }
}
