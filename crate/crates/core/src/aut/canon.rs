use super::refine::{individualize, is_discrete, refine, target_cell};
use super::{automorphism_group, base_path, BasePath, PermutationGroup};
use crate::graph::Graph;

/// A canonical relabelling and the isomorphism-invariant string it yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical index of vertex `v`.
    pub labeling: Vec<usize>,
    /// `n=<n>;` followed by the relabelled edge list, 1-based.
    pub certificate: String,
}

struct Search<'a> {
    g: &'a Graph,
    grp: PermutationGroup,
    path: BasePath,
    best: Option<(Vec<(usize, usize)>, Vec<usize>)>,
}

impl Search<'_> {
    fn explore(&mut self, col: Vec<u32>, depth: usize, on_path: bool) {
        if is_discrete(&col) {
            let labeling: Vec<usize> = col.iter().map(|&c| c as usize).collect();
            let mut edges: Vec<(usize, usize)> = self
                .g
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (labeling[a], labeling[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            if self.best.as_ref().map_or(true, |(e, _)| edges < *e) {
                self.best = Some((edges, labeling));
            }
            return;
        }
        let cell = target_cell(&col).expect("not discrete");
        // Along the base path siblings in one stabilizer orbit head
        // isomorphic subtrees; one representative per orbit suffices.
        let children = if on_path {
            self.grp.level_orbit_reps(depth, &cell)
        } else {
            cell
        };
        for y in children {
            let next = refine(self.g, &individualize(&col, y));
            let stays = on_path && self.path.base.get(depth) == Some(&y);
            self.explore(next, depth + 1, stays);
        }
    }
}

/// Canonical form by exhaustive individualization-refinement, pruned by
/// automorphisms along the base path.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let grp = automorphism_group(g, 0);
    let path = base_path(g);
    let root = path.cols[0].clone();
    let mut search = Search {
        g,
        grp,
        path,
        best: None,
    };
    search.explore(root, 0, true);
    let (edges, labeling) = search.best.expect("the tree has a leaf");
    let body: Vec<String> = edges.iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
    CanonicalForm {
        labeling,
        certificate: format!("n={};{}", g.n(), body.join(",")),
    }
}
