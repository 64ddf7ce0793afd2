//! Finite regular polygonal complexes: links with angular metrics, the
//! Gromov link condition, the antipodal graph, and hypergraphs traced
//! through local cutsets.
//!
//! Faces are regular polygons with unit sides, given as cyclic vertex
//! sequences. Subdividing every edge at its midpoint turns a k-gon into a
//! 2k-gon whose boundary positions `0..2k` alternate between original
//! (primary) vertices at even positions and edge midpoints (secondary
//! vertices) at odd ones.

mod trace;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certify::{Certificate, Outcome};
use crate::cutset::Point;
use crate::error::{Error, Result};
use crate::graph::{shortest_cycle, Graph, Metric, Q};

pub use trace::{
    hypergraph_checks, local_link, parse_point, separation_check, trace_hypergraph, wall_cut, Choice, Hypergraph, LinkNode,
    LocalLink, Segment, Seed, WallCut,
};

/// The JSON document: 1-based vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: usize,
    pub faces: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug)]
pub struct PolygonalComplex {
    skeleton: Graph,
    faces: Vec<Vec<usize>>,
    /// `face_edges[f][i]`: edge from `faces[f][i]` to `faces[f][i + 1]`.
    face_edges: Vec<Vec<usize>>,
    /// Faces on each edge, as `(face, boundary index)`.
    edge_faces: Vec<Vec<(usize, usize)>>,
}

impl PolygonalComplex {
    /// Validates faces given with 0-based vertices.
    pub fn new(n: usize, faces: Vec<Vec<usize>>) -> Result<PolygonalComplex> {
        let mut pairs = Vec::new();
        for (f, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::InvalidComplex(format!("face {} has fewer than three sides", f + 1)));
            }
            for (i, &v) in face.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidComplex(format!("face {} uses unknown vertex {}", f + 1, v + 1)));
                }
                let w = face[(i + 1) % face.len()];
                if v == w {
                    return Err(Error::InvalidComplex(format!("face {} repeats vertex {}", f + 1, v + 1)));
                }
                pairs.push((v.min(w), v.max(w)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let skeleton = Graph::new(n, &pairs)?;
        let mut edge_faces = vec![Vec::new(); skeleton.edge_count()];
        let mut face_edges = Vec::with_capacity(faces.len());
        for (f, face) in faces.iter().enumerate() {
            let k = face.len();
            let es: Vec<usize> = (0..k)
                .map(|i| skeleton.edge_between(face[i], face[(i + 1) % k]).expect("edge was added"))
                .collect();
            let mut sorted = es.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != k {
                return Err(Error::InvalidComplex(format!("face {} runs along an edge twice", f + 1)));
            }
            for (i, &e) in es.iter().enumerate() {
                edge_faces[e].push((f, i));
            }
            face_edges.push(es);
        }
        Ok(PolygonalComplex {
            skeleton,
            faces,
            face_edges,
            edge_faces,
        })
    }

    /// Builds from the JSON document; explicit edges must bound a face.
    pub fn from_document(doc: &ComplexDocument) -> Result<PolygonalComplex> {
        let to0 = |v: usize| {
            if v == 0 || v > doc.vertices {
                Err(Error::InvalidComplex(format!("vertex {} outside 1..={}", v, doc.vertices)))
            } else {
                Ok(v - 1)
            }
        };
        let faces = doc
            .faces
            .iter()
            .map(|f| f.iter().map(|&v| to0(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let x = PolygonalComplex::new(doc.vertices, faces)?;
        for &[a, b] in &doc.edges {
            let (a, b) = (to0(a)?, to0(b)?);
            if x.skeleton.edge_between(a, b).is_none() {
                return Err(Error::InvalidComplex(format!("edge {}-{} bounds no face", a + 1, b + 1)));
            }
        }
        Ok(x)
    }

    pub fn parse(json_text: &str) -> Result<PolygonalComplex> {
        let doc: ComplexDocument =
            serde_json::from_str(json_text).map_err(|e| Error::InvalidComplex(format!("bad JSON: {}", e)))?;
        PolygonalComplex::from_document(&doc)
    }

    pub fn document(&self) -> ComplexDocument {
        ComplexDocument {
            vertices: self.skeleton.n(),
            faces: self.faces.iter().map(|f| f.iter().map(|v| v + 1).collect()).collect(),
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.n()
    }

    pub fn edge_count(&self) -> usize {
        self.skeleton.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_edges(&self, f: usize) -> &[usize] {
        &self.face_edges[f]
    }

    pub fn faces_on_edge(&self, e: usize) -> &[(usize, usize)] {
        &self.edge_faces[e]
    }

    /// Interior angle of face `f` at a primary corner, in units of π.
    pub fn corner_angle(&self, f: usize) -> Q {
        let k = self.faces[f].len() as i64;
        Q::new(k - 2, k)
    }

    /// An edge lying on exactly one face.
    pub fn is_free_edge(&self, e: usize) -> bool {
        self.edge_faces[e].len() == 1
    }

    /// A point of the subdivided 1-skeleton whose link is incomplete: a
    /// vertex on a free edge, or the midpoint of a free edge.
    pub fn on_boundary(&self, p: Point) -> bool {
        match p {
            Point::Vertex(v) => self.skeleton.incident_edges(v).any(|e| self.is_free_edge(e)),
            Point::Midpoint(e) => self.is_free_edge(e),
        }
    }

    /// D(X): the largest face circumference (sides have unit length).
    pub fn max_circumference(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Point at position `p` of the subdivided boundary of face `f`.
    pub fn boundary_point(&self, f: usize, p: usize) -> Point {
        let k = self.faces[f].len();
        let p = p % (2 * k);
        if p % 2 == 0 {
            Point::Vertex(self.faces[f][p / 2])
        } else {
            Point::Midpoint(self.face_edges[f][p / 2])
        }
    }

    pub fn describe_point(&self, p: Point) -> String {
        p.describe(&self.skeleton)
    }
}

/// The link of a vertex: one link vertex per incident edge (ordered by edge
/// id), one link edge per face corner, lengths `(k−2)π/k`.
#[derive(Clone, Debug)]
pub struct Link {
    pub graph: Graph,
    pub metric: Metric,
    /// Complex edge behind each link vertex.
    pub edge_of: Vec<usize>,
    /// `(face, boundary index)` behind each link edge.
    pub corner_of: Vec<(usize, usize)>,
}

/// The link at `v`. Link vertices are labelled by the far endpoint of their
/// edge. Fails when two faces share two edges at `v` (a doubled link edge).
pub fn link(x: &PolygonalComplex, v: usize) -> Result<Link> {
    if v >= x.vertex_count() {
        return Err(Error::UnknownVertex(v));
    }
    let edge_of: Vec<usize> = x.skeleton.incident_edges(v).collect::<Vec<_>>();
    let mut edge_of = edge_of;
    edge_of.sort_unstable();
    let index = |e: usize| edge_of.binary_search(&e).expect("incident edge");
    let mut corners: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for (f, face) in x.faces.iter().enumerate() {
        let k = face.len();
        for i in (0..k).filter(|&i| face[i] == v) {
            let a = index(x.face_edges[f][i]);
            let b = index(x.face_edges[f][(i + k - 1) % k]);
            corners.push(((a.min(b), a.max(b)), (f, i)));
        }
    }
    corners.sort_unstable();
    for w in corners.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::InvalidComplex(format!(
                "faces {} and {} meet along two edges at vertex {}",
                w[0].1 .0 + 1,
                w[1].1 .0 + 1,
                v + 1
            )));
        }
    }
    let pairs: Vec<(usize, usize)> = corners.iter().map(|c| c.0).collect();
    let labels: Vec<String> = edge_of
        .iter()
        .map(|&e| {
            let (a, b) = x.skeleton.edge(e);
            (if a == v { b + 1 } else { a + 1 }).to_string()
        })
        .collect();
    let graph = Graph::new(edge_of.len(), &pairs)?.with_labels(labels)?;
    // Graph sorts its edges; recover the corner behind each sorted edge.
    let mut corner_of = vec![(0, 0); graph.edge_count()];
    let mut lengths = vec![Q::from(0); graph.edge_count()];
    for &((a, b), (f, i)) in &corners {
        let e = graph.edge_between(a, b).expect("corner edge");
        corner_of[e] = (f, i);
        lengths[e] = x.corner_angle(f);
    }
    Ok(Link {
        graph,
        metric: Metric::Angular(lengths),
        edge_of,
        corner_of,
    })
}

/// Gromov's link condition: every link has angular girth at least 2π.
pub fn check_gromov(x: &PolygonalComplex) -> Certificate {
    let mut cert = Certificate::new("Gromov link condition");
    for v in 0..x.vertex_count() {
        cert.run(format!("link at {}", v + 1), || match link(x, v) {
            Err(e) => Outcome::fail(json!({"error": e.to_string()})),
            Ok(lk) => match shortest_cycle(&lk.graph, &lk.metric) {
                Err(e) => Outcome::fail(json!({"error": e.to_string()})),
                Ok(None) => Outcome::pass().with_note("link is a forest"),
                Ok(Some((len, _))) if len >= Q::from(2) => Outcome::pass().with_note(format!("angular girth {}π", len)),
                Ok(Some((len, cyc))) => Outcome::fail(json!({
                    "cycle": cyc.iter().map(|&u| lk.graph.vertex_name(u)).collect::<Vec<_>>(),
                    "angular_length": format!("{}π", len),
                })),
            },
        });
    }
    cert
}

/// An edge of the antipodal graph: antipodal boundary points of a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AntipodalEdge {
    pub a: Point,
    pub b: Point,
    pub face: usize,
    /// Subdivided boundary positions of `a` and `b`; they differ by the side count.
    pub positions: (usize, usize),
}

/// Primary vertices, secondary vertices (edge midpoints) and one edge per
/// antipodal pair of boundary points of each face.
#[derive(Clone, Debug, Serialize)]
pub struct AntipodalGraph {
    pub primary: usize,
    pub secondary: usize,
    pub edges: Vec<AntipodalEdge>,
}

pub fn antipodal_graph(x: &PolygonalComplex) -> AntipodalGraph {
    let mut edges = Vec::new();
    for (f, face) in x.faces.iter().enumerate() {
        let k = face.len();
        for p in 0..k {
            edges.push(AntipodalEdge {
                a: x.boundary_point(f, p),
                b: x.boundary_point(f, p + k),
                face: f,
                positions: (p, p + k),
            });
        }
    }
    AntipodalGraph {
        primary: x.vertex_count(),
        secondary: x.edge_count(),
        edges,
    }
}

impl AntipodalGraph {
    /// The canonical map of an edge: its endpoints lie on the boundary of
    /// the face labelling it, at antipodal positions.
    pub fn maps_into_face(&self, x: &PolygonalComplex, e: &AntipodalEdge) -> bool {
        let k = x.faces[e.face].len();
        e.positions.1 == e.positions.0 + k
            && x.boundary_point(e.face, e.positions.0) == e.a
            && x.boundary_point(e.face, e.positions.1) == e.b
    }
}

/// A `rows × cols` grid of unit squares on `(rows + 1)(cols + 1)` vertices,
/// vertex `(i, j)` at index `i (cols + 1) + j`.
pub fn square_grid(rows: usize, cols: usize) -> PolygonalComplex {
    let w = cols + 1;
    let mut faces = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * w + j;
            faces.push(vec![v, v + 1, v + 1 + w, v + w]);
        }
    }
    PolygonalComplex::new((rows + 1) * w, faces).expect("grid is valid")
}

/// Cone over a graph: vertex `n` is the apex, one triangle per edge.
pub fn cone(g: &Graph) -> PolygonalComplex {
    let apex = g.n();
    let faces = g.edges().iter().map(|&(a, b)| vec![apex, a, b]).collect();
    PolygonalComplex::new(g.n() + 1, faces).expect("cone over a simple graph is valid")
}

/// A single regular k-gon.
pub fn polygon(k: usize) -> PolygonalComplex {
    PolygonalComplex::new(k, vec![(0..k).collect()]).expect("polygon is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::cycle;

    #[test]
    fn five_by_five_grid_counts() {
        let x = square_grid(4, 4);
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (25, 40, 16));
        assert_eq!(x.max_circumference(), 4);
    }

    #[test]
    fn grid_links() {
        let x = square_grid(4, 4);
        let inner = link(&x, 6).unwrap();
        assert_eq!(inner.graph.n(), 4);
        assert_eq!(inner.graph.edge_count(), 4);
        assert!(inner.graph.is_connected());
        assert!((0..4).all(|e| inner.metric.length(e) == Q::new(1, 2)));
        let corner = link(&x, 0).unwrap();
        assert_eq!((corner.graph.n(), corner.graph.edge_count()), (2, 1));
    }

    #[test]
    fn non_edge_face_is_rejected() {
        let doc = ComplexDocument {
            vertices: 3,
            faces: vec![vec![1, 2, 4]],
            edges: vec![],
        };
        assert!(PolygonalComplex::from_document(&doc).is_err());
        let doc = ComplexDocument {
            vertices: 4,
            faces: vec![vec![1, 2, 3]],
            edges: vec![[1, 4]],
        };
        assert!(PolygonalComplex::from_document(&doc).is_err());
    }

    #[test]
    fn gromov_on_fans() {
        assert!(check_gromov(&square_grid(2, 2)).pass);
        let c = check_gromov(&cone(&cycle(5)));
        assert!(!c.pass);
        let w = c.check("link at 6").unwrap().witness.clone().unwrap();
        assert_eq!(w["angular_length"], json!("5/3π"));
        assert!(check_gromov(&cone(&cycle(6))).pass);
    }

    #[test]
    fn antipodes_in_single_faces() {
        let sq = antipodal_graph(&polygon(4));
        assert_eq!(sq.edges.len(), 4);
        let tri = antipodal_graph(&polygon(3));
        assert_eq!(tri.edges.len(), 3);
        for e in &tri.edges {
            assert!(matches!(
                (e.a, e.b),
                (Point::Vertex(_), Point::Midpoint(_)) | (Point::Midpoint(_), Point::Vertex(_))
            ));
            assert!(tri.maps_into_face(&polygon(3), e));
        }
    }
}
