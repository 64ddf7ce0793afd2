//! The built-in F090A dataset: the 90-vertex cubic graph's adjacency table
//! and the three *-separated cutsets shipped with it.
//!
//! Both are embedded as data files and guarded by SHA-256 digests so any
//! regeneration has to reproduce the exact bytes.

use sha2::{Digest, Sha256};

use crate::cutset::{parse_family, Cutset, CutsetFamily};
use crate::graph::Graph;

pub const ADJACENCY_TABLE: &str = include_str!("../data/f090a.adj");
pub const CUTSETS: &str = include_str!("../data/f090a_cutsets.fam");

pub const ADJACENCY_SHA256: &str = "1d79ebd2289be2411182a604d4e165e941f015d1c682dedd0d82c126704f8a52";
pub const CUTSETS_SHA256: &str = "56da6de27220e538ceb9d98d8d38b31f7c3d183b8245b15cfa5a0e65689a59d7";

/// Test pairs `P3..P8` as listed alongside the table, 1-based, with the
/// distance each one is labelled with.
pub const SEPARATION_PAIRS: [(&str, usize, usize, u32); 6] = [
    ("P3", 2, 17, 3),
    ("P4", 3, 19, 4),
    ("P5", 2, 9, 5),
    ("P6", 3, 9, 6),
    ("P7", 16, 39, 7),
    ("P8", 16, 63, 8),
];

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Parses an adjacency table: each non-comment line is a vertex id
/// followed by its neighbours.
pub fn parse_adjacency_table(text: &str) -> Result<Graph, String> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums: Result<Vec<usize>, _> = content.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|_| format!("line {}: malformed row", i + 1))?;
        let (&v, rest) = nums.split_first().ok_or_else(|| format!("line {}: empty row", i + 1))?;
        rows.push((v, rest.to_vec()));
    }
    let n = rows.len();
    let mut edges = Vec::new();
    for (v, nbrs) in &rows {
        if *v == 0 || *v > n {
            return Err(format!("vertex {} outside 1..={}", v, n));
        }
        for &w in nbrs {
            let back = rows
                .iter()
                .find(|(x, _)| *x == w)
                .map_or(false, |(_, ns)| ns.contains(v));
            if !back {
                return Err(format!("adjacency {}-{} is not symmetric", v, w));
            }
            if v < &w {
                edges.push((*v, w));
            }
        }
    }
    Graph::from_ids(n, &edges).map_err(|e| e.to_string())
}

/// The F090A graph, vertex `i` of the table at index `i − 1`.
pub fn graph() -> Graph {
    parse_adjacency_table(ADJACENCY_TABLE).expect("embedded table is valid")
}

/// `C1`, `C2`, `C3` in that order.
pub fn cutsets() -> CutsetFamily {
    parse_family(CUTSETS).expect("embedded family is valid")
}

pub fn cutset_list() -> Vec<Cutset> {
    cutsets().resolve(&graph()).expect("embedded family fits the graph")
}

pub fn verify_digests() -> Result<(), String> {
    let a = sha256_hex(ADJACENCY_TABLE.as_bytes());
    if a != ADJACENCY_SHA256 {
        return Err(format!("adjacency table digest {} != pinned {}", a, ADJACENCY_SHA256));
    }
    let c = sha256_hex(CUTSETS.as_bytes());
    if c != CUTSETS_SHA256 {
        return Err(format!("cutset digest {} != pinned {}", c, CUTSETS_SHA256));
    }
    Ok(())
}
