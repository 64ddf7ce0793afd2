//! The F090A pipeline: dataset, structure, symmetry, seed cutsets, orbit
//! closure, *-separation, the test pairs and the triangle-link certificate.

use serde_json::{json, Value};

use crate::aut::{automorphism_group, is_distance_transitive, PermutationGroup, DEFAULT_ENUMERATE_BUDGET};
use crate::certify::{certify_star_separated_with, certify_triangle_link_with, Certificate, Outcome};
use crate::cutset::{is_star_cutset, reduce_to_minimal, separates, Cutset, Point};
use crate::error::Result;
use crate::f090a;
use crate::graph::{bfs_distances, structural_report, Distance, Graph};
use crate::search::orbit_closure;

const NOT_REACHED: &str = "not reached: an earlier stage failed";
const NO_GROUP: &str = "not checked: automorphism group skipped";

#[derive(Clone, Debug, Default)]
pub struct ReproduceOptions {
    /// Named seed cutsets replacing C1, C2, C3.
    pub seeds: Option<(Vec<String>, Vec<Cutset>)>,
    pub skip_aut: bool,
    /// Replace each seed by its minimal reduction before validation.
    pub reduce_minimal: bool,
}

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub certificate: Certificate,
    pub statistics: Value,
}

struct Pipeline {
    cert: Certificate,
    aborted: bool,
}

impl Pipeline {
    fn stage(&mut self, name: &str, f: impl FnOnce() -> Outcome) -> bool {
        if self.aborted {
            self.cert.skip(name, NOT_REACHED);
            return false;
        }
        let ok = self.cert.run(name, f);
        self.aborted |= !ok;
        ok
    }

    fn sub(&mut self, prefix: &str, f: impl FnOnce() -> Result<Certificate>) {
        if self.aborted {
            self.cert.skip(prefix, NOT_REACHED);
            return;
        }
        match f() {
            Ok(c) => {
                self.aborted |= c.checks.iter().any(|k| !k.pass && !k.skipped);
                self.cert.absorb(prefix, c);
            }
            Err(e) => {
                self.cert.run(prefix, || Outcome::fail(json!({"error": e.to_string()})));
                self.aborted = true;
            }
        }
    }

    fn not_checked(&mut self, name: &str) {
        self.cert.skip(name, if self.aborted { NOT_REACHED } else { NO_GROUP });
    }
}

fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.vertex_name(v)).collect()
}

/// The neighbour of `v` that `c` cuts off from the other two, if any.
fn split_off(g: &Graph, c: &Cutset, v: usize) -> Option<usize> {
    let comps = g.components(c.removal()).ok()?;
    let w = g.neighbors(v);
    if w.len() != 3 {
        return None;
    }
    let l: Vec<usize> = w.iter().map(|&u| comps.of_vertex(u)).collect::<Option<_>>()?;
    (0..3).find(|&i| l[(i + 1) % 3] == l[(i + 2) % 3] && l[i] != l[(i + 1) % 3]).map(|i| w[i])
}

pub fn f090a_reproduce(opts: &ReproduceOptions) -> Reproduction {
    let mut p = Pipeline {
        cert: Certificate::new("F090A reproduction"),
        aborted: false,
    };
    let mut stats = serde_json::Map::new();
    let g = f090a::graph();

    p.stage("dataset digest", || match f090a::verify_digests() {
        Ok(()) => Outcome::pass().with_note(format!("sha256 {}", f090a::ADJACENCY_SHA256)),
        Err(e) => Outcome::fail(json!({"error": e})),
    });
    let rep = structural_report(&g);
    stats.insert("structure".into(), json!(rep));
    p.stage("structure", || {
        let ok = rep.n == 90
            && rep.edges == 135
            && rep.regular_degree == Some(3)
            && rep.bipartite
            && rep.connected
            && rep.girth == Distance::from_int(10);
        let o = Outcome::verdict(ok, (!ok).then(|| json!(rep)));
        o.with_note(format!(
            "n={} m={} cubic bipartite connected, girth {}, diameter {}",
            rep.n, rep.edges, rep.girth, rep.diameter
        ))
    });

    let grp: Option<PermutationGroup> = if opts.skip_aut || p.aborted {
        p.not_checked("automorphism group");
        p.not_checked("distance-transitive");
        None
    } else {
        let grp = automorphism_group(&g, DEFAULT_ENUMERATE_BUDGET);
        stats.insert("automorphism_order".into(), json!(grp.order().to_string()));
        p.stage("automorphism group", || {
            let ok = grp.is_enumerated() && grp.is_vertex_transitive();
            Outcome::verdict(ok, (!ok).then(|| json!({"vertex_orbits": grp.vertex_orbits().len()})))
                .with_note(format!("order {}, {} generators, vertex-transitive", grp.order(), grp.generators().len()))
        });
        p.stage("distance-transitive", || match is_distance_transitive(&g, &grp) {
            Ok(d) => Outcome::verdict(
                d.holds,
                d.witness.map(|((a, b), (c, e))| json!({"pair": names(&g, &[a, b]), "unreached": names(&g, &[c, e])})),
            )
            .with_note(format!("transitive on ordered pairs at each of {} distances", d.layers.len())),
            Err(e) => Outcome::fail(json!({"error": e.to_string()})),
        });
        Some(grp)
    };

    let (labels, given) = opts.seeds.clone().unwrap_or_else(|| {
        let fam = f090a::cutsets();
        (fam.names().iter().map(|s| s.to_string()).collect(), f090a::cutset_list())
    });
    let seeds: Vec<Cutset> = if opts.reduce_minimal {
        given.iter().map(|c| reduce_to_minimal(&g, c).unwrap_or_else(|_| c.clone())).collect()
    } else {
        given.clone()
    };
    stats.insert(
        "seeds".into(),
        json!(labels
            .iter()
            .zip(&seeds)
            .zip(&given)
            .map(|((l, c), o)| json!({"name": l, "size": c.len(), "given_size": o.len()}))
            .collect::<Vec<_>>()),
    );
    p.stage("seed cutsets are *-separated", || {
        for (l, c) in labels.iter().zip(&seeds) {
            match is_star_cutset(&g, c) {
                Err(e) => return Outcome::fail(json!({"cutset": l, "error": e.to_string()})),
                Ok(s) if !s.is_star() => {
                    return Outcome::fail(json!({
                        "cutset": l,
                        "reason": s.failure(),
                        "too_close": s.too_close.map(|(a, b, d)| json!({"pair": names(&g, &[a, b]), "distance": d})),
                        "components": s.component_count,
                        "removable": names(&g, &s.removable),
                    }))
                }
                Ok(_) => {}
            }
        }
        let sizes: Vec<String> = labels.iter().zip(&seeds).map(|(l, c)| format!("{} ({})", l, c.len())).collect();
        let suffix = if opts.reduce_minimal { "; reduced to minimal" } else { "" };
        Outcome::pass().with_note(format!("{}{}", sizes.join(", "), suffix))
    });

    p.stage("neighbour splits at v1", || {
        let expected = [("C1", 89usize), ("C2", 1), ("C3", 17)];
        let pattern: Vec<Value> = labels
            .iter()
            .zip(&seeds)
            .filter(|(_, c)| c.contains(0))
            .map(|(l, c)| json!({"cutset": l, "splits_off": split_off(&g, c, 0).map(|w| g.vertex_name(w))}))
            .collect();
        for (name, w) in expected {
            if let Some(i) = labels.iter().position(|l| l == name) {
                if split_off(&g, &seeds[i], 0) != Some(w) {
                    return Outcome::fail(json!({"cutset": name, "expected": g.vertex_name(w), "pattern": pattern}));
                }
            }
        }
        let covered: Vec<usize> = g
            .neighbors(0)
            .iter()
            .copied()
            .filter(|&w| seeds.iter().any(|c| split_off(&g, c, 0) == Some(w)))
            .collect();
        if covered.len() != 3 {
            return Outcome::fail(json!({"pattern": pattern}));
        }
        Outcome::pass().with_note(
            pattern
                .iter()
                .map(|v| format!("{} splits off {}", v["cutset"].as_str().unwrap_or(""), v["splits_off"].as_str().unwrap_or("-")))
                .collect::<Vec<_>>()
                .join("; "),
        )
    });

    let closure = match &grp {
        Some(grp) if !p.aborted => {
            let c = orbit_closure(&g, grp.generators(), &seeds);
            stats.insert("closure_size".into(), json!(c.len()));
            p.stage("orbit closure", || Outcome::pass().with_note(format!("{} distinct cutsets", c.len())));
            c
        }
        _ => {
            p.not_checked("orbit closure");
            seeds.clone()
        }
    };

    if p.aborted {
        p.cert.skip("*-separated", NOT_REACHED);
        if grp.is_none() {
            p.cert.skip("*-separated/iii: constant count", NO_GROUP);
        }
    } else {
        p.sub("*-separated", || {
            let mut c = certify_star_separated_with(&g, &closure, grp.as_ref().map(|x| (x, &seeds[..])))?;
            if grp.is_none() {
                c.mark_skipped("iii: constant count", NO_GROUP);
            }
            Ok(c)
        });
    }

    let dist0: Vec<Vec<Option<u32>>> = (0..g.n()).map(|s| bfs_distances(&g, s)).collect();
    stats.insert(
        "pairs".into(),
        json!(f090a::SEPARATION_PAIRS
            .iter()
            .map(|&(l, x, y, d)| json!({"pair": l, "x": x, "y": y, "labelled_distance": d, "distance": dist0[x - 1][y - 1]}))
            .collect::<Vec<_>>()),
    );
    p.stage("pairs P3-P8 separated", || {
        let mut hits = Vec::new();
        for &(l, x, y, _) in &f090a::SEPARATION_PAIRS {
            let (a, b) = (Point::Vertex(x - 1), Point::Vertex(y - 1));
            let hit = closure.iter().position(|c| separates(&g, c, a, b).unwrap_or(false));
            match hit {
                Some(i) => hits.push(format!("{} by member {}", l, i)),
                None => return Outcome::fail(json!({"pair": l, "x": x, "y": y, "members": closure.len()})),
            }
        }
        Outcome::pass().with_note(hits.join(", "))
    });

    match &grp {
        Some(grp) => p.sub("link", || Ok(certify_triangle_link_with(&g, Some(&closure), Some(grp)))),
        None => p.not_checked("link"),
    }
    if p.cert.pass {
        p.cert.conclusion = Some(format!(
            "F090A is *-separated by the orbit closure of the seeds ({} cutsets); unit equilateral triangle complexes with every link F090A are CAT(0) and evenly π-separated with all gluing weights 1",
            closure.len()
        ));
    }
    Reproduction {
        certificate: p.cert,
        statistics: Value::Object(stats),
    }
}
