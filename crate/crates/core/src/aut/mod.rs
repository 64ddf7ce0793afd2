//! Automorphism groups by individualization and refinement.
//!
//! The group is built as a stabilizer chain along the base path of the
//! refinement tree: for each base point the orbit under the pointwise
//! stabilizer of the earlier points is found by searching for a mapping
//! automorphism, deepest level first, so generators already found prune
//! the candidates further up. The order is the product of the basic orbit
//! sizes; the element list is produced from the coset representatives when
//! it fits the budget.

mod canon;
pub(crate) mod refine;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, UnionFind};
use refine::{histogram, individualize, is_discrete, refine, target_cell, Colouring};

pub use canon::{canonical_form, CanonicalForm};

/// Default cap on the number of group elements listed explicitly.
pub const DEFAULT_ENUMERATE_BUDGET: u64 = 10_000_000;

/// A bijection of `0..n`; `image[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGraph(format!("{:?} is not a permutation", image)));
            }
        }
        Ok(Permutation { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.n() == g.n() && g.edges().iter().all(|&(a, b)| g.adjacent(self.image[a], self.image[b]))
    }

    /// Image of a vertex set, sorted.
    pub fn apply_set(&self, s: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().map(|&v| self.image[v]).collect();
        out.sort_unstable();
        out
    }

    /// Disjoint cycles with 1-based ids, fixed points omitted; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.n()];
        let mut out = String::new();
        for start in 0..self.n() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            out.push('(');
            let mut v = start;
            let mut first = true;
            while !seen[v] {
                seen[v] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(v + 1).to_string());
                first = false;
                v = self.image[v];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.cycle_notation())
    }
}

/// Automorphism group of a graph.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    n: usize,
    generators: Vec<Permutation>,
    order: BigUint,
    base: Vec<usize>,
    basic_orbit_sizes: Vec<usize>,
    /// Generators found at each base level; level `i` fixes `base[..i]`.
    level_gens: Vec<Vec<Permutation>>,
    elements: Option<Vec<Permutation>>,
    vertex_orbits: Vec<Vec<usize>>,
}

impl PermutationGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn basic_orbit_sizes(&self) -> &[usize] {
        &self.basic_orbit_sizes
    }

    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    /// All elements in lexicographic order of their image lists.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.elements.as_deref().ok_or(Error::NotEnumerated)
    }

    pub fn vertex_orbits(&self) -> &[Vec<usize>] {
        &self.vertex_orbits
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits.len() <= 1
    }

    /// Orbit of a single vertex, ascending.
    pub fn orbit_of_vertex(&self, v: usize) -> &[usize] {
        self.vertex_orbits
            .iter()
            .find(|o| o.binary_search(&v).is_ok())
            .expect("orbits cover every vertex")
    }

    /// Number of elements fixing `v`.
    pub fn stabilizer_order(&self, v: usize) -> Result<usize> {
        Ok(self.elements()?.iter().filter(|p| p.apply(v) == v).count())
    }

    /// Number of elements mapping the set `s` onto itself.
    pub fn set_stabilizer_order(&self, s: &[usize]) -> Result<usize> {
        let mut key = s.to_vec();
        key.sort_unstable();
        Ok(self.elements()?.iter().filter(|p| p.apply_set(&key) == key).count())
    }

    /// Orbit partition of `cell` under the generators of level `level` and deeper.
    pub(crate) fn level_orbit_reps(&self, level: usize, cell: &[usize]) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for p in self.level_gens[level..].iter().flatten() {
            for v in 0..self.n {
                uf.union(v, p.apply(v));
            }
        }
        let mut seen = BTreeSet::new();
        cell.iter().copied().filter(|&v| seen.insert(uf.find(v))).collect()
    }
}

/// Base path of the refinement tree: the colouring at each depth, the
/// target cell split there and the point individualized.
pub(crate) struct BasePath {
    pub cols: Vec<Colouring>,
    pub cells: Vec<Vec<usize>>,
    pub base: Vec<usize>,
}

pub(crate) fn base_path(g: &Graph) -> BasePath {
    let mut cols = vec![refine(g, &vec![0; g.n()])];
    let mut cells = Vec::new();
    let mut base = Vec::new();
    while let Some(cell) = target_cell(cols.last().unwrap()) {
        let b = cell[0];
        let next = refine(g, &individualize(cols.last().unwrap(), b));
        base.push(b);
        cells.push(cell);
        cols.push(next);
    }
    BasePath { cols, cells, base }
}

/// Searches the refinement subtree below `start` (at `depth`) for a leaf
/// whose colour correspondence with `leaf` is an automorphism.
fn find_leaf_map(g: &Graph, path: &BasePath, start: Colouring, depth: usize) -> Option<Permutation> {
    if is_discrete(&start) {
        let leaf = path.cols.last().unwrap();
        let mut by_colour = vec![0; g.n()];
        for (w, &c) in start.iter().enumerate() {
            by_colour[c as usize] = w;
        }
        let p = Permutation {
            image: leaf.iter().map(|&c| by_colour[c as usize]).collect(),
        };
        return p.is_automorphism(g).then_some(p);
    }
    let expected = histogram(&path.cols[depth + 1]);
    for y in target_cell(&start).expect("not discrete") {
        let next = refine(g, &individualize(&start, y));
        if histogram(&next) == expected {
            if let Some(p) = find_leaf_map(g, path, next, depth + 1) {
                return Some(p);
            }
        }
    }
    None
}

fn orbit_of_point(n: usize, point: usize, gens: &[&Permutation]) -> BTreeMap<usize, Permutation> {
    let mut reps = BTreeMap::from([(point, Permutation::identity(n))]);
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !reps.contains_key(&y) {
                let r = g.compose(&reps[&x]);
                reps.insert(y, r);
                queue.push_back(y);
            }
        }
    }
    reps
}

/// Computes `Aut(g)`, listing every element when the order is at most `enumerate_budget`.
pub fn automorphism_group(g: &Graph, enumerate_budget: u64) -> PermutationGroup {
    let n = g.n();
    let path = base_path(g);
    let k = path.base.len();
    let mut level_gens: Vec<Vec<Permutation>> = vec![Vec::new(); k];
    let mut transversals: Vec<BTreeMap<usize, Permutation>> = vec![BTreeMap::new(); k];

    for i in (0..k).rev() {
        let b = path.base[i];
        let mut reps = orbit_of_point(n, b, &level_gens[i..].iter().flatten().collect::<Vec<_>>());
        for &x in &path.cells[i] {
            if reps.contains_key(&x) {
                continue;
            }
            let start = refine(g, &individualize(&path.cols[i], x));
            if histogram(&start) != histogram(&path.cols[i + 1]) {
                continue;
            }
            if let Some(p) = find_leaf_map(g, &path, start, i + 1) {
                level_gens[i].push(p);
                reps = orbit_of_point(n, b, &level_gens[i..].iter().flatten().collect::<Vec<_>>());
            }
        }
        transversals[i] = reps;
    }

    let basic_orbit_sizes: Vec<usize> = transversals.iter().map(BTreeMap::len).collect();
    let order = basic_orbit_sizes.iter().fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s));
    let generators: Vec<Permutation> = level_gens.iter().flatten().cloned().collect();

    let elements = (order <= BigUint::from(enumerate_budget)).then(|| {
        let mut elems = vec![Permutation::identity(n)];
        for t in transversals.iter().rev() {
            elems = t.values().flat_map(|r| elems.iter().map(move |e| r.compose(e))).collect();
        }
        elems.sort_unstable();
        assert!(
            elems.iter().all(|p| p.is_automorphism(g)),
            "enumerated element fails to preserve adjacency"
        );
        elems
    });

    let mut uf = UnionFind::new(n);
    for p in &generators {
        for v in 0..n {
            uf.union(v, p.apply(v));
        }
    }
    let mut orbit_map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        orbit_map.entry(uf.find(v)).or_default().push(v);
    }
    let mut vertex_orbits: Vec<Vec<usize>> = orbit_map.into_values().collect();
    vertex_orbits.sort();

    PermutationGroup {
        n,
        generators,
        order,
        base: path.base,
        basic_orbit_sizes,
        level_gens,
        elements,
        vertex_orbits,
    }
}

/// `{γ(s) : γ ∈ G}`, each set sorted, in lexicographic order.
pub fn orbit_of_vertex_set(grp: &PermutationGroup, s: &[usize]) -> Result<Vec<Vec<usize>>> {
    let images: BTreeSet<Vec<usize>> = grp.elements()?.iter().map(|p| p.apply_set(s)).collect();
    Ok(images.into_iter().collect())
}

/// Per-vertex counts of pairs `(γ, C)` with the vertex in `γ(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultisetCounts {
    pub counts: Vec<u64>,
    pub total: u64,
    /// The common value when every vertex has the same count.
    pub constant: Option<u64>,
    /// Two vertices with different counts.
    pub witness: Option<(usize, usize)>,
    pub vertex_transitive: bool,
}

pub fn orbit_multiset_counts(grp: &PermutationGroup, family: &[Vec<usize>]) -> Result<MultisetCounts> {
    let mut counts = vec![0u64; grp.n()];
    for p in grp.elements()? {
        for c in family {
            for &v in c {
                counts[p.apply(v)] += 1;
            }
        }
    }
    let total = counts.iter().sum();
    let witness = (1..counts.len()).find(|&v| counts[v] != counts[0]).map(|v| (0, v));
    let constant = match (witness, counts.first()) {
        (None, Some(&c)) => Some(c),
        _ => None,
    };
    let vertex_transitive = grp.is_vertex_transitive();
    if vertex_transitive {
        assert!(witness.is_none(), "transitive group with non-constant counts");
    }
    Ok(MultisetCounts {
        counts,
        total,
        constant,
        witness,
        vertex_transitive,
    })
}

/// Outcome of the ordered-pair transitivity check, one entry per distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceTransitivity {
    pub holds: bool,
    /// `(d, number of ordered pairs at distance d, orbit size of the first pair)`.
    pub layers: Vec<(u32, usize, usize)>,
    /// A pair at some distance not reached from the first pair at that distance.
    pub witness: Option<((usize, usize), (usize, usize))>,
}

/// Whether `grp` is transitive on ordered pairs at each distance `d`,
/// including `d = 0`.
pub fn is_distance_transitive(g: &Graph, grp: &PermutationGroup) -> Result<DistanceTransitivity> {
    let elements = grp.elements()?;
    if !g.is_connected() {
        return Err(Error::InvalidGraph("distance-transitivity needs a connected graph".into()));
    }
    let n = g.n();
    let dist: Vec<Vec<u32>> = (0..n)
        .map(|s| bfs_distances(g, s).into_iter().map(|d| d.expect("connected")).collect())
        .collect();
    let mut by_distance: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (a, row) in dist.iter().enumerate() {
        for (b, &d) in row.iter().enumerate() {
            by_distance.entry(d).or_default().push((a, b));
        }
    }
    let mut layers = Vec::new();
    let mut witness = None;
    for (&d, pairs) in &by_distance {
        let (a, b) = pairs[0];
        let orbit: BTreeSet<(usize, usize)> = elements.iter().map(|p| (p.apply(a), p.apply(b))).collect();
        layers.push((d, pairs.len(), orbit.len()));
        if witness.is_none() {
            if let Some(&miss) = pairs.iter().find(|x| !orbit.contains(x)) {
                witness = Some(((a, b), miss));
            }
        }
    }
    Ok(DistanceTransitivity {
        holds: witness.is_none(),
        layers,
        witness,
    })
}
