//! Frontier search for *-separated cutsets in F090A: one neighbour split at
//! vertex 1, then every *-cutset up to symmetry.

use std::time::Instant;

use linksep::aut::{automorphism_group, DEFAULT_ENUMERATE_BUDGET};
use linksep::f090a;
use linksep::search::{dedup_up_to_aut, search_star_cutsets, Goal, SearchTask};

fn main() {
    let g = f090a::graph();
    let grp = automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET);

    // Vertex 1 has neighbours 2, 18, 90; split 90 off from 2.
    let t = Instant::now();
    let task = SearchTask::star(g.clone(), Goal::SplitNeighbors { v: 0, i: 3, j: 1 });
    let r = search_star_cutsets(&task).expect("F090A is trivalent");
    println!(
        "split at v1: {} cutsets, {} nodes, exhausted {} ({:.2?})",
        r.found.len(),
        r.stats.nodes,
        r.exhausted,
        t.elapsed()
    );
    let given = f090a::cutset_list();
    let closure = linksep::search::orbit_closure(&g, grp.generators(), &given);
    let known = r.found.iter().filter(|c| closure.binary_search(c).is_ok()).count();
    println!("  of which {} lie in the orbit closure of C1, C2, C3", known);

    let t = Instant::now();
    let mut task = SearchTask::star(g.clone(), Goal::CoverAll);
    task.group = Some(grp.clone());
    let all = search_star_cutsets(&task).expect("F090A is trivalent");
    println!(
        "all *-cutsets: {} ({} goals, {} nodes, exhausted {}, {:.2?})",
        all.found.len(),
        all.stats.goals,
        all.stats.nodes,
        all.exhausted,
        t.elapsed()
    );
    for (rep, size) in dedup_up_to_aut(&g, &grp, &all.found).expect("group is enumerated") {
        println!("  orbit of size {:4}: {}", size, rep.describe(&g));
    }
    println!("orbit closure of C1, C2, C3: {} cutsets", closure.len());
}
