//! Covers by σ-separated edge cutsets, and the edge-separated certificate
//! they feed.

use linksep::certify::certify_edge_separated;
use linksep::graph::families::{cycle, heawood, prism};
use linksep::search::{search_edge_cutset_cover, EdgeCoverOutcome};
use linksep::{Graph, Metric, Q};

fn main() {
    let graphs: [(&str, Graph); 3] = [("hexagon", cycle(6)), ("prism6", prism(6)), ("heawood", heawood())];
    let m = Metric::Combinatorial;
    for ((name, g), s) in graphs.into_iter().flat_map(|x| [2, 3].map(|s| (x.clone(), s))) {
        let sigma = Q::from_integer(s);
        print!("sigma {} ", s);
        match search_edge_cutset_cover(&g, &m, sigma).unwrap() {
            EdgeCoverOutcome::Covered(fam) => {
                let cert = certify_edge_separated(&g, &m, sigma, &fam).unwrap();
                println!("{}: {} cutsets cover every edge, certificate {}", name, fam.len(), cert.pass);
                for c in fam.iter().take(3) {
                    println!("  {}", c.describe(&g));
                }
            }
            EdgeCoverOutcome::Uncoverable { edges, family } => {
                println!("{}: {} edges uncovered after {} cutsets", name, edges.len(), family.len())
            }
            EdgeCoverOutcome::PreconditionFailed(why) => println!("{}: {}", name, why),
        }
    }
}
