//! Equatable cutset-partitions along edges and the gluing equations.
//!
//! A structure is link-homogeneous: a list of link instances (usually one)
//! and oriented edge germs between elements of them. The directions at a
//! link element are its incident link edges (vertex cutsets) or its two
//! half-edges (edge cutsets); both are named by the neighbouring vertex.
//! The star of a point near the end of an edge is read combinatorially as
//! that direction set, which is what the induced maps act on.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::json;

use crate::aut::Permutation;
use crate::certify::{Certificate, Outcome};
use crate::cutset::{sigma_check, Cutset, CutsetKind, CutsetPartition, MidpointMetric, Partition, Point};
use crate::error::{Error, Result};
use crate::graph::{Graph, Metric, UnionFind, Q};
use crate::search::cutset_image;

/// Partition of the directions at a link element: ascending blocks of
/// neighbour vertices, ordered by least member.
pub type DirectionPartition = Vec<Vec<usize>>;

pub const STAR_INTERPRETATION: &str =
    "St(v') read as the set of directions at the link element of e: incident link edges for vertex cutsets, half-edges for edge cutsets";

/// A link graph with its metric and the cutset-partition pairs chosen at it.
#[derive(Clone, Debug)]
pub struct LinkInstance {
    graph: Graph,
    metric: Metric,
    kind: CutsetKind,
    pairs: Vec<CutsetPartition>,
    at: Vec<Vec<usize>>,
}

impl LinkInstance {
    /// Checks that every pair has the given kind, at least two elements and
    /// is π-separated under `metric`.
    pub fn new(graph: Graph, metric: Metric, kind: CutsetKind, pairs: Vec<CutsetPartition>) -> Result<LinkInstance> {
        let mm = MidpointMetric::new(&graph, &metric)?;
        for (i, p) in pairs.iter().enumerate() {
            let c = p.cutset();
            if c.kind() != kind {
                return Err(Error::InvalidStructure(format!("pair {} is a {} cutset", i, c.kind())));
            }
            if c.len() < 2 {
                return Err(Error::InvalidStructure(format!("pair {} has fewer than two elements", i)));
            }
            let s = sigma_check(&mm, c, Q::one());
            if !s.separated {
                return Err(Error::InvalidStructure(format!("pair {} is not π-separated", i)));
            }
        }
        let size = match kind {
            CutsetKind::Vertex => graph.n(),
            CutsetKind::Edge => graph.edge_count(),
        };
        let mut at = vec![Vec::new(); size];
        for (i, p) in pairs.iter().enumerate() {
            for &x in p.cutset().elements() {
                at[x].push(i);
            }
        }
        Ok(LinkInstance {
            graph,
            metric,
            kind,
            pairs,
            at,
        })
    }

    /// Every cutset with its canonical partition.
    pub fn canonical(graph: Graph, metric: Metric, kind: CutsetKind, cutsets: &[Cutset]) -> Result<LinkInstance> {
        let pairs = cutsets
            .iter()
            .map(|c| CutsetPartition::canonical(&graph, c.clone()))
            .collect::<Result<Vec<_>>>()?;
        LinkInstance::new(graph, metric, kind, pairs)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn kind(&self) -> CutsetKind {
        self.kind
    }

    pub fn pairs(&self) -> &[CutsetPartition] {
        &self.pairs
    }

    /// Number of link elements of the instance's kind.
    pub fn element_count(&self) -> usize {
        self.at.len()
    }

    /// Indices of the pairs whose cutset contains `x`.
    pub fn pairs_at(&self, x: usize) -> &[usize] {
        self.at.get(x).map_or(&[], |v| v.as_slice())
    }

    /// Directions at element `x`, named by neighbouring vertex.
    pub fn directions(&self, x: usize) -> Vec<usize> {
        match self.kind {
            CutsetKind::Vertex => self.graph.neighbors(x).to_vec(),
            CutsetKind::Edge => {
                let (a, b) = self.graph.edge(x);
                vec![a, b]
            }
        }
    }

    pub fn describe_element(&self, x: usize) -> String {
        Point::of(self.kind, x).describe(&self.graph)
    }
}

/// Assigns each direction at `x` the partition block it enters.
pub fn induced_star_partition(li: &LinkInstance, cp: &CutsetPartition, x: usize) -> Result<DirectionPartition> {
    if !cp.cutset().contains(x) {
        return Err(Error::InvalidCutset(format!(
            "element {} is not in the cutset",
            li.describe_element(x)
        )));
    }
    let dirs = li.directions(x);
    if dirs.is_empty() {
        return Err(Error::InvalidStructure(format!(
            "element {} has no directions",
            li.describe_element(x)
        )));
    }
    let mut by_block: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for d in dirs {
        let p = match li.kind {
            CutsetKind::Vertex => Point::Midpoint(li.graph.edge_between(x, d).expect("neighbour")),
            CutsetKind::Edge => Point::Vertex(d),
        };
        let b = cp.block_of_point(p).ok_or_else(|| {
            Error::InvalidStructure(format!(
                "direction {} at {} enters no component",
                d + 1,
                li.describe_element(x)
            ))
        })?;
        by_block.entry(b).or_default().push(d);
    }
    Ok(normalize(by_block.into_values().collect()))
}

fn normalize(mut p: DirectionPartition) -> DirectionPartition {
    for b in &mut p {
        b.sort_unstable();
    }
    p.sort();
    p
}

/// An oriented edge of Δ seen from both ends: link `from.0` at element
/// `from.1` and link `to.0` at element `to.1`, with a bijection of directions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeGerm {
    pub from: (usize, usize),
    pub to: (usize, usize),
    bijection: BTreeMap<usize, usize>,
}

impl EdgeGerm {
    pub fn new(links: &[LinkInstance], from: (usize, usize), to: (usize, usize), pairs: &[(usize, usize)]) -> Result<EdgeGerm> {
        let dirs = |(l, x): (usize, usize)| -> Result<Vec<usize>> {
            let li = links
                .get(l)
                .ok_or_else(|| Error::InvalidStructure(format!("no link {}", l)))?;
            if x >= li.element_count() {
                return Err(Error::InvalidStructure(format!("link {} has no element {}", l, x)));
            }
            let mut d = li.directions(x);
            d.sort_unstable();
            Ok(d)
        };
        let (a, b) = (dirs(from)?, dirs(to)?);
        let bijection: BTreeMap<usize, usize> = pairs.iter().copied().collect();
        let mut keys: Vec<usize> = bijection.keys().copied().collect();
        let mut vals: Vec<usize> = bijection.values().copied().collect();
        keys.sort_unstable();
        vals.sort_unstable();
        if bijection.len() != pairs.len() || keys != a || vals != b {
            return Err(Error::InvalidStructure(format!(
                "germ {:?} -> {:?} is not a bijection of directions",
                from, to
            )));
        }
        Ok(EdgeGerm { from, to, bijection })
    }

    pub fn map(&self, d: usize) -> usize {
        self.bijection[&d]
    }

    /// The same edge traversed the other way.
    pub fn reversed(&self) -> EdgeGerm {
        EdgeGerm {
            from: self.to,
            to: self.from,
            bijection: self.bijection.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    /// ψ: carries a direction partition at the source to the target.
    pub fn push(&self, p: &DirectionPartition) -> DirectionPartition {
        normalize(p.iter().map(|b| b.iter().map(|&d| self.map(d)).collect()).collect())
    }
}

/// Whether `a` at the source of the germ and `b` at its target are equatable.
pub fn equatable_along(
    links: &[LinkInstance],
    germ: &EdgeGerm,
    a: &CutsetPartition,
    b: &CutsetPartition,
) -> Result<bool> {
    let pa = induced_star_partition(&links[germ.from.0], a, germ.from.1)?;
    let pb = induced_star_partition(&links[germ.to.0], b, germ.to.1)?;
    Ok(germ.push(&pa) == pb)
}

/// One class `[[C,P]]_e`: the pairs at `x` inducing `partition`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivClass {
    pub partition: DirectionPartition,
    pub members: Vec<usize>,
}

/// Classes of `𝒞𝒫(e)` for the element `x`, ordered by first member.
pub fn equivalence_classes(li: &LinkInstance, x: usize) -> Result<Vec<EquivClass>> {
    let mut classes: Vec<EquivClass> = Vec::new();
    let mut index: HashMap<DirectionPartition, usize> = HashMap::new();
    for &i in li.pairs_at(x) {
        let p = induced_star_partition(li, &li.pairs[i], x)?;
        match index.get(&p) {
            Some(&k) => classes[k].members.push(i),
            None => {
                index.insert(p.clone(), classes.len());
                classes.push(EquivClass {
                    partition: p,
                    members: vec![i],
                });
            }
        }
    }
    Ok(classes)
}

/// Label-free identity of a cutset-partition pair: the cutset and, per
/// block, the surviving vertices and edges it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairKey {
    pub cutset: Cutset,
    pub blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

pub fn pair_key(cp: &CutsetPartition) -> PairKey {
    let comps = cp.components().list();
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = cp
        .partition()
        .blocks()
        .iter()
        .map(|b| {
            let mut vs: Vec<usize> = b.iter().flat_map(|&c| comps[c].vertices.iter().copied()).collect();
            let mut es: Vec<usize> = b.iter().flat_map(|&c| comps[c].edges.iter().copied()).collect();
            vs.sort_unstable();
            es.sort_unstable();
            (vs, es)
        })
        .collect();
    blocks.sort();
    PairKey {
        cutset: cp.cutset().clone(),
        blocks,
    }
}

/// Image of a cutset-partition pair under a graph automorphism.
pub fn pair_image(g: &Graph, p: &Permutation, cp: &CutsetPartition) -> Result<CutsetPartition> {
    let image = cutset_image(g, p, cp.cutset());
    let target = g.components(image.removal())?;
    let map_edge = |e: usize| {
        let (a, b) = g.edge(e);
        g.edge_between(p.apply(a), p.apply(b)).expect("automorphism")
    };
    let comps = cp.components().list();
    let mut blocks = Vec::new();
    for b in cp.partition().blocks() {
        let mut out = Vec::new();
        for &c in b {
            let k = match comps[c].vertices.first() {
                Some(&v) => target.of_vertex(p.apply(v)),
                None => target.of_edge(map_edge(comps[c].edges[0])),
            };
            out.push(k.ok_or_else(|| Error::InvalidStructure("permutation is not an automorphism".into()))?);
        }
        blocks.push(out);
    }
    let part = Partition::new(blocks, target.len())?;
    CutsetPartition::new(g, image, part)
}

/// Link instances, oriented germs and, per link, automorphism generators
/// under which weights must be constant.
#[derive(Clone, Debug)]
pub struct GluingStructure {
    pub links: Vec<LinkInstance>,
    pub germs: Vec<EdgeGerm>,
    pub symmetries: Vec<Vec<Permutation>>,
}

impl GluingStructure {
    /// One link type glued to itself. Germs: at every element `x`, each
    /// bijection of its directions onto themselves, and for each generator
    /// `γ` the germ `x → γx` induced by `γ`.
    pub fn link_homogeneous(li: LinkInstance, generators: Vec<Permutation>) -> Result<GluingStructure> {
        let g = li.graph().clone();
        let links = vec![li];
        let mut germs = Vec::new();
        for x in 0..links[0].element_count() {
            let dirs = links[0].directions(x);
            for perm in permutations(dirs.len()) {
                let pairs: Vec<(usize, usize)> = (0..dirs.len()).map(|k| (dirs[k], dirs[perm[k]])).collect();
                germs.push(EdgeGerm::new(&links, (0, x), (0, x), &pairs)?);
            }
            for gamma in &generators {
                let y = match links[0].kind() {
                    CutsetKind::Vertex => gamma.apply(x),
                    CutsetKind::Edge => {
                        let (a, b) = g.edge(x);
                        g.edge_between(gamma.apply(a), gamma.apply(b))
                            .ok_or_else(|| Error::InvalidStructure("generator is not an automorphism".into()))?
                    }
                };
                let pairs: Vec<(usize, usize)> = dirs.iter().map(|&d| (d, gamma.apply(d))).collect();
                germs.push(EdgeGerm::new(&links, (0, x), (0, y), &pairs)?);
            }
        }
        Ok(GluingStructure {
            links,
            germs,
            symmetries: vec![generators],
        })
    }

    fn pair_count(&self) -> usize {
        self.links.iter().map(|l| l.pairs.len()).sum()
    }

    fn flat(&self, link: usize, pair: usize) -> usize {
        self.links[..link].iter().map(|l| l.pairs.len()).sum::<usize>() + pair
    }

    fn unflat(&self, mut k: usize) -> (usize, usize) {
        for (l, li) in self.links.iter().enumerate() {
            if k < li.pairs.len() {
                return (l, k);
            }
            k -= li.pairs.len();
        }
        panic!("pair index out of range")
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, a, out);
        let j = if k % 2 == 0 { i } else { 0 };
        a.swap(j, k - 1);
    }
}

/// Orbits of all pairs of a structure under its symmetries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairOrbits {
    /// Members `(link, pair)` of each orbit, ordered by least member.
    pub orbits: Vec<Vec<(usize, usize)>>,
    /// `orbit_of[link][pair]`.
    pub orbit_of: Vec<Vec<usize>>,
    /// `(link, pair, generator)` whose image is not among the link's pairs.
    pub escapes: Vec<(usize, usize, usize)>,
}

pub fn pair_orbits(s: &GluingStructure) -> Result<PairOrbits> {
    let total = s.pair_count();
    let mut uf = UnionFind::new(total);
    let mut escapes = Vec::new();
    for (l, li) in s.links.iter().enumerate() {
        let keys: HashMap<PairKey, usize> = li.pairs.iter().enumerate().map(|(i, p)| (pair_key(p), i)).collect();
        for (k, gamma) in s.symmetries.get(l).map_or(&[][..], |v| v.as_slice()).iter().enumerate() {
            for (i, p) in li.pairs.iter().enumerate() {
                let img = pair_key(&pair_image(&li.graph, gamma, p)?);
                match keys.get(&img) {
                    Some(&j) => {
                        uf.union(s.flat(l, i), s.flat(l, j));
                    }
                    None => escapes.push((l, i, k)),
                }
            }
        }
    }
    let mut root_index: HashMap<usize, usize> = HashMap::new();
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut orbit_of: Vec<Vec<usize>> = s.links.iter().map(|l| vec![0; l.pairs.len()]).collect();
    for k in 0..total {
        let r = uf.find(k);
        let o = *root_index.entry(r).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        let (l, i) = s.unflat(k);
        orbits[o].push((l, i));
        orbit_of[l][i] = o;
    }
    Ok(PairOrbits {
        orbits,
        orbit_of,
        escapes,
    })
}

/// Strictly positive integer weight per pair, indexed `[link][pair]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightAssignment {
    pub weights: Vec<Vec<u64>>,
}

impl WeightAssignment {
    pub fn ones(s: &GluingStructure) -> WeightAssignment {
        WeightAssignment {
            weights: s.links.iter().map(|l| vec![1; l.pairs.len()]).collect(),
        }
    }

    /// Spreads one value per orbit over the orbit's members.
    pub fn from_orbit_values(orbits: &PairOrbits, values: &BTreeMap<usize, u64>) -> Result<WeightAssignment> {
        let weights = orbits
            .orbit_of
            .iter()
            .enumerate()
            .map(|(l, row)| {
                row.iter()
                    .enumerate()
                    .map(|(i, o)| {
                        values
                            .get(o)
                            .copied()
                            .ok_or_else(|| Error::MissingWeight(format!("orbit {} (link {}, pair {})", o, l, i)))
                    })
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightAssignment { weights })
    }

    fn get(&self, l: usize, i: usize) -> Result<u64> {
        self.weights
            .get(l)
            .and_then(|r| r.get(i))
            .copied()
            .ok_or_else(|| Error::MissingWeight(format!("link {}, pair {}", l, i)))
    }
}

/// Parses weight lines `orbit-id value`; `#` starts a comment.
pub fn parse_weights(text: &str) -> Result<BTreeMap<usize, u64>> {
    let mut out = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parsed = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => a.parse::<usize>().ok().zip(b.parse::<u64>().ok()),
            _ => None,
        };
        let (o, w) = parsed.ok_or_else(|| Error::InvalidStructure(format!("weights line {}: {:?}", n + 1, raw)))?;
        if out.insert(o, w).is_some() {
            return Err(Error::InvalidStructure(format!("weights line {}: orbit {} repeated", n + 1, o)));
        }
    }
    Ok(out)
}

/// `M(C,P)` at `x`: total weight of the class of pair `i` at element `x`.
pub fn class_weight(s: &GluingStructure, w: &WeightAssignment, link: usize, i: usize, x: usize) -> Result<u64> {
    let li = &s.links[link];
    let key = induced_star_partition(li, &li.pairs[i], x)?;
    let mut total = 0;
    for c in equivalence_classes(li, x)? {
        if c.partition == key {
            for m in c.members {
                total += w.get(link, m)?;
            }
        }
    }
    Ok(total)
}

/// Classes per (link, element), computed once, with each pair's class at
/// each of its elements.
struct ClassTable {
    classes: Vec<Vec<Vec<EquivClass>>>,
    /// `pair_class[link][pair][k]`: class index at the `k`-th element of the cutset.
    pair_class: Vec<Vec<Vec<usize>>>,
}

/// A class `(link, element, index)`.
type ClassRef = (usize, usize, usize);

impl ClassTable {
    fn new(s: &GluingStructure) -> Result<ClassTable> {
        let classes: Vec<Vec<Vec<EquivClass>>> = s
            .links
            .iter()
            .map(|li| (0..li.element_count()).map(|x| equivalence_classes(li, x)).collect())
            .collect::<Result<Vec<_>>>()?;
        let pair_class = s
            .links
            .iter()
            .enumerate()
            .map(|(l, li)| {
                li.pairs
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        p.cutset()
                            .elements()
                            .iter()
                            .map(|&x| {
                                classes[l][x]
                                    .iter()
                                    .position(|c| c.members.binary_search(&i).is_ok())
                                    .expect("pair lies in a class at each of its elements")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(ClassTable { classes, pair_class })
    }

    fn at(&self, l: usize, x: usize) -> &[EquivClass] {
        &self.classes[l][x]
    }

    fn members(&self, (l, x, c): ClassRef) -> &[usize] {
        &self.classes[l][x][c].members
    }
}

#[derive(Clone, Copy, Debug)]
enum EqKind {
    Balance { germ: usize, reversed: bool },
    Cross { pair: usize, elements: (usize, usize) },
}

/// One instantiated gluing equation: total weight of the left class equals
/// that of the right class (an absent class weighs zero).
#[derive(Clone, Copy, Debug)]
struct Equation {
    kind: EqKind,
    left: ClassRef,
    right: Option<ClassRef>,
}

impl Equation {
    fn label(&self, s: &GluingStructure, t: &ClassTable) -> String {
        let (l, x, c) = self.left;
        let li = &s.links[l];
        match self.kind {
            EqKind::Balance { germ, reversed } => {
                let g = &s.germs[germ];
                let to = if reversed { g.from } else { g.to };
                format!(
                    "balance {}germ {} at {} -> {}, class {}",
                    if reversed { "reversed " } else { "" },
                    germ,
                    li.describe_element(x),
                    s.links[to.0].describe_element(to.1),
                    show_partition(&t.at(l, x)[c].partition)
                )
            }
            EqKind::Cross { pair, elements: (a, b) } => format!(
                "cross link {} pair {} at {} and {}",
                l,
                pair,
                li.describe_element(a),
                li.describe_element(b)
            ),
        }
    }
}

fn instantiate(s: &GluingStructure, table: &ClassTable) -> Vec<Equation> {
    let mut eqs = Vec::new();
    for (gi, g0) in s.germs.iter().enumerate() {
        for (reversed, germ) in [(false, g0.clone()), (true, g0.reversed())] {
            let (fl, fx) = germ.from;
            let (tl, tx) = germ.to;
            for (ci, class) in table.at(fl, fx).iter().enumerate() {
                let target = germ.push(&class.partition);
                let right = table
                    .at(tl, tx)
                    .iter()
                    .position(|c| c.partition == target)
                    .map(|k| (tl, tx, k));
                eqs.push(Equation {
                    kind: EqKind::Balance { germ: gi, reversed },
                    left: (fl, fx, ci),
                    right,
                });
            }
        }
    }
    for (l, li) in s.links.iter().enumerate() {
        for (i, p) in li.pairs.iter().enumerate() {
            let els = p.cutset().elements();
            let cls = &table.pair_class[l][i];
            for k in 1..els.len() {
                eqs.push(Equation {
                    kind: EqKind::Cross {
                        pair: i,
                        elements: (els[k - 1], els[k]),
                    },
                    left: (l, els[k - 1], cls[k - 1]),
                    right: Some((l, els[k], cls[k])),
                });
            }
        }
    }
    eqs
}

fn show_partition(p: &DirectionPartition) -> String {
    let blocks: Vec<String> = p
        .iter()
        .map(|b| {
            let v: Vec<String> = b.iter().map(|d| (d + 1).to_string()).collect();
            format!("{{{}}}", v.join(","))
        })
        .collect();
    blocks.join("|")
}

/// Checks positivity, orbit-constancy and every instantiated equation.
pub fn verify_gluing(s: &GluingStructure, w: &WeightAssignment) -> Result<Certificate> {
    for (l, li) in s.links.iter().enumerate() {
        for i in 0..li.pairs.len() {
            w.get(l, i)?;
        }
    }
    let table = ClassTable::new(s)?;
    let mut cert = Certificate::new("gluing equations");
    cert.run("positive", || {
        let zero = s
            .links
            .iter()
            .enumerate()
            .flat_map(|(l, li)| (0..li.pairs.len()).map(move |i| (l, i)))
            .find(|&(l, i)| w.weights[l][i] == 0);
        match zero {
            None => Outcome::pass(),
            Some((l, i)) => Outcome::fail(json!({"link": l, "pair": i, "weight": 0})),
        }
    });
    let orbits = pair_orbits(s)?;
    cert.run("invariant", || {
        if let Some(&(l, i, k)) = orbits.escapes.first() {
            return Outcome::fail(json!({
                "link": l, "pair": i, "generator": s.symmetries[l][k].cycle_notation(),
                "reason": "image is not a pair of the structure"
            }));
        }
        let bad = orbits.orbits.iter().find_map(|o| {
            let (l0, i0) = o[0];
            o.iter()
                .find(|&&(l, i)| w.weights[l][i] != w.weights[l0][i0])
                .map(|&(l, i)| json!({"orbit": [[l0, i0], [l, i]], "weights": [w.weights[l0][i0], w.weights[l][i]]}))
        });
        match bad {
            None => Outcome::pass().with_note(format!("{} orbits of pairs", orbits.orbits.len())),
            Some(wit) => Outcome::fail(wit),
        }
    });
    let sums: Vec<Vec<Vec<u64>>> = table
        .classes
        .iter()
        .enumerate()
        .map(|(l, per_x)| {
            per_x
                .iter()
                .map(|cl| cl.iter().map(|c| c.members.iter().map(|&m| w.weights[l][m]).sum()).collect())
                .collect()
        })
        .collect();
    let weight = |r: Option<ClassRef>| r.map_or(0, |(l, x, c)| sums[l][x][c]);
    let eqs = instantiate(s, &table);
    let (balance, cross): (Vec<&Equation>, Vec<&Equation>) =
        eqs.iter().partition(|e| matches!(e.kind, EqKind::Balance { .. }));
    for (name, group) in [("edge balance", balance), ("cross-edge", cross)] {
        cert.run(name, || {
            let bad = group.iter().find(|e| weight(Some(e.left)) != weight(e.right));
            match bad {
                None => Outcome::pass().with_note(format!("{} equations; {}", group.len(), STAR_INTERPRETATION)),
                Some(e) => Outcome::fail(json!({
                    "equation": e.label(s, &table),
                    "left": weight(Some(e.left)),
                    "right": weight(e.right),
                })),
            }
        });
    }
    Ok(cert)
}

/// A strictly positive orbit-constant integer solution, or a certificate
/// that none exists.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum GluingSolution {
    Solved {
        weights: WeightAssignment,
        /// One value per orbit of [`pair_orbits`].
        orbit_values: Vec<u64>,
        method: &'static str,
    },
    /// Rational multipliers on the listed equations whose combination has
    /// every coefficient ≥ 0 and some coefficient > 0, so no strictly
    /// positive vector satisfies them all.
    Infeasible {
        equations: Vec<(String, String)>,
        combined: Vec<String>,
    },
}

/// Nullspace enumeration bound per parameter, and the largest nullspace
/// dimension for which the enumeration is attempted.
const ENUMERATION_BOUND: i64 = 16;
const ENUMERATION_MAX_DIM: usize = 3;

/// Solves the gluing equations with one unknown per orbit of pairs.
pub fn solve_gluing(s: &GluingStructure) -> Result<GluingSolution> {
    let orbits = pair_orbits(s)?;
    if let Some(&(l, i, _)) = orbits.escapes.first() {
        return Err(Error::InvalidStructure(format!(
            "pairs are not closed under the symmetries (link {}, pair {})",
            l, i
        )));
    }
    let k = orbits.orbits.len();
    let table = ClassTable::new(s)?;
    let orbit_vec = |r: Option<ClassRef>| -> Vec<i64> {
        let mut v = vec![0i64; k];
        if let Some(r) = r {
            for &m in table.members(r) {
                v[orbits.orbit_of[r.0][m]] += 1;
            }
        }
        v
    };
    let mut rows: Vec<(String, Vec<BigRational>)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for e in instantiate(s, &table) {
        let (a, b) = (orbit_vec(Some(e.left)), orbit_vec(e.right));
        let r: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        if r.iter().all(|&c| c == 0) || !seen.insert(r.clone()) {
            continue;
        }
        rows.push((e.label(s, &table), r.into_iter().map(|c| BigRational::from_integer(c.into())).collect()));
    }
    let finish = |x: Vec<BigRational>, method: &'static str| -> Result<GluingSolution> {
        let values = to_integers(&x)?;
        let map: BTreeMap<usize, u64> = values.iter().copied().enumerate().collect();
        let weights = WeightAssignment::from_orbit_values(&orbits, &map)?;
        let cert = verify_gluing(s, &weights)?;
        if !cert.pass {
            return Err(Error::InvalidStructure(format!(
                "solver output failed verification: {:?}",
                cert.failures().next()
            )));
        }
        Ok(GluingSolution::Solved {
            weights,
            orbit_values: values,
            method,
        })
    };
    let ones = vec![BigRational::one(); k];
    if rows.iter().all(|(_, r)| dot(r, &ones).is_zero()) {
        return finish(ones, "all-ones");
    }
    let basis = independent_rows(&rows);
    let a: Vec<Vec<BigRational>> = basis.iter().map(|&i| rows[i].1.clone()).collect();
    let null = nullspace(&a, k);
    if !null.is_empty() && null.len() <= ENUMERATION_MAX_DIM {
        if let Some(x) = enumerate_positive(&null) {
            return finish(x, "nullspace enumeration");
        }
    }
    match positive_point(&a, k) {
        Ok(x) => finish(x, "exact simplex"),
        Err(y) => {
            let mut combined = vec![BigRational::zero(); k];
            for (yi, row) in y.iter().zip(&a) {
                for (c, v) in combined.iter_mut().zip(row) {
                    *c += yi * v;
                }
            }
            debug_assert!(combined.iter().all(|c| !c.is_negative()) && combined.iter().any(|c| c.is_positive()));
            Ok(GluingSolution::Infeasible {
                equations: basis
                    .iter()
                    .zip(&y)
                    .filter(|(_, yi)| !yi.is_zero())
                    .map(|(&i, yi)| (rows[i].0.clone(), yi.to_string()))
                    .collect(),
                combined: combined.iter().map(|c| c.to_string()).collect(),
            })
        }
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Indices of a maximal linearly independent subset, greedily in order.
fn independent_rows(rows: &[(String, Vec<BigRational>)]) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut keep = Vec::new();
    for (i, (_, r)) in rows.iter().enumerate() {
        let mut v = r.clone();
        for (p, e) in &echelon {
            if !v[*p].is_zero() {
                let f = &v[*p] / &e[*p];
                for (x, y) in v.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((p, v));
            keep.push(i);
        }
    }
    keep
}

/// Basis of `{x : A x = 0}` from the reduced row echelon form.
fn nullspace(a: &[Vec<BigRational>], k: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); k];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

/// Integer combinations of the basis with coefficients in `±16`, smallest
/// max-norm first; the first strictly positive one.
fn enumerate_positive(basis: &[Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let d = basis.len();
    let k = basis[0].len();
    for norm in 1..=ENUMERATION_BOUND {
        let span = (2 * norm + 1) as usize;
        let total = span.pow(d as u32);
        for idx in 0..total {
            let mut t = Vec::with_capacity(d);
            let mut rest = idx;
            for _ in 0..d {
                t.push((rest % span) as i64 - norm);
                rest /= span;
            }
            if t.iter().all(|x| x.abs() < norm) {
                continue;
            }
            let mut x = vec![BigRational::zero(); k];
            for (ti, b) in t.iter().zip(basis) {
                let f = BigRational::from_integer((*ti).into());
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += &f * bi;
                }
            }
            if x.iter().all(|v| v.is_positive()) {
                return Some(x);
            }
        }
    }
    None
}

/// Finds `x ≥ 1` with `A x = 0` by a phase-one simplex (Bland's rule) on
/// `A s = −A·1, s ≥ 0`. On infeasibility returns multipliers `y` with
/// `yᵀA ≥ 0` and `yᵀA·1 > 0`.
fn positive_point(a: &[Vec<BigRational>], k: usize) -> std::result::Result<Vec<BigRational>, Vec<BigRational>> {
    let m = a.len();
    let ones = vec![BigRational::one(); k];
    let width = k + m + 1;
    let mut sign = vec![BigRational::one(); m];
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let mut b = -dot(row, &ones);
        let mut r: Vec<BigRational> = row.clone();
        if b.is_negative() {
            sign[i] = -BigRational::one();
            b = -b;
            for x in r.iter_mut() {
                *x = -x.clone();
            }
        }
        r.extend((0..m).map(|j| if j == i { BigRational::one() } else { BigRational::zero() }));
        r.push(b);
        t.push(r);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    // Reduced costs of the phase-one objective Σ artificials; last entry is −objective.
    let mut cost = vec![BigRational::zero(); width];
    for j in 0..width {
        let col_sum = t.iter().fold(BigRational::zero(), |acc, r| acc + &r[j]);
        let c = if (k..k + m).contains(&j) { BigRational::one() } else { BigRational::zero() };
        cost[j] = c - col_sum;
    }
    loop {
        let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.expect("phase one is bounded");
        let inv = BigRational::one() / &t[r][enter];
        for x in t[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * y;
        }
        basis[r] = enter;
    }
    let objective = -cost[width - 1].clone();
    if objective.is_zero() {
        let mut x = ones;
        for (i, &b) in basis.iter().enumerate() {
            if b < k {
                x[b] += &t[i][width - 1];
            }
        }
        Ok(x)
    } else {
        // y_i = 1 − reduced cost of artificial i; −y certifies infeasibility
        // of the sign-adjusted rows.
        let y: Vec<BigRational> = (0..m)
            .map(|i| -(BigRational::one() - &cost[k + i]) * &sign[i])
            .collect();
        Err(y)
    }
}

fn to_integers(x: &[BigRational]) -> Result<Vec<u64>> {
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.iter()
        .map(|v| {
            (v / &gcd)
                .to_u64()
                .filter(|&w| w > 0)
                .ok_or_else(|| Error::InvalidStructure(format!("weight {} out of range", v)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::cycle;

    fn c6_link() -> LinkInstance {
        let g = cycle(6);
        let m = Metric::uniform_angular(&g, Q::new(1, 3));
        let cs: Vec<Cutset> = (0..3).map(|i| Cutset::vertices(vec![i, i + 3]).unwrap()).collect();
        LinkInstance::canonical(g, m, CutsetKind::Vertex, &cs).unwrap()
    }

    #[test]
    fn antipodal_cut_splits_the_two_directions() {
        let li = c6_link();
        let p = induced_star_partition(&li, &li.pairs()[0], 0).unwrap();
        assert_eq!(p, vec![vec![1], vec![5]]);
    }

    #[test]
    fn element_outside_the_cutset_is_rejected() {
        let li = c6_link();
        assert!(induced_star_partition(&li, &li.pairs()[0], 1).is_err());
    }

    #[test]
    fn pairs_closer_than_pi_are_rejected() {
        let g = cycle(6);
        let m = Metric::uniform_angular(&g, Q::new(1, 3));
        let c = Cutset::vertices(vec![0, 2]).unwrap();
        assert!(LinkInstance::canonical(g, m, CutsetKind::Vertex, &[c]).is_err());
    }

    #[test]
    fn swapping_directions_breaks_equatability() {
        let li = c6_link();
        let links = vec![li];
        let id = EdgeGerm::new(&links, (0, 0), (0, 0), &[(1, 1), (5, 5)]).unwrap();
        let swap = EdgeGerm::new(&links, (0, 0), (0, 0), &[(1, 5), (5, 1)]).unwrap();
        let a = &links[0].pairs()[0];
        assert!(equatable_along(&links, &id, a, a).unwrap());
        // Both blocks are singletons, so the swap maps the partition to itself.
        assert!(equatable_along(&links, &swap, a, a).unwrap());
        assert!(EdgeGerm::new(&links, (0, 0), (0, 0), &[(1, 1), (5, 1)]).is_err());
    }

    #[test]
    fn single_pair_gives_one_singleton_class() {
        let li = c6_link();
        let cl = equivalence_classes(&li, 3).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].members, vec![0]);
    }

    #[test]
    fn hexagon_structure_is_solved_by_ones() {
        let li = c6_link();
        let grp = crate::aut::automorphism_group(li.graph(), 1000);
        let s = GluingStructure::link_homogeneous(li, grp.generators().to_vec()).unwrap();
        let cert = verify_gluing(&s, &WeightAssignment::ones(&s)).unwrap();
        assert!(cert.pass, "{}", cert.to_json());
        match solve_gluing(&s).unwrap() {
            GluingSolution::Solved { orbit_values, method, .. } => {
                assert_eq!(orbit_values, vec![1]);
                assert_eq!(method, "all-ones");
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn weights_file_round_trip() {
        let w = parse_weights("# orbit weight\n0 2\n1 1\n").unwrap();
        assert_eq!(w.get(&0), Some(&2));
        assert!(parse_weights("0 1\n0 2\n").is_err());
        assert!(parse_weights("0 x\n").is_err());
    }

    #[test]
    fn heap_permutations_are_complete() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        let mut d = p.clone();
        d.dedup();
        assert_eq!(d.len(), 6);
    }
}
