//! Label-independent colour refinement.
//!
//! Colours are ranks `0..k`. A refinement step gives every vertex the
//! signature (own colour, sorted neighbour colours) and re-ranks by sorting
//! signatures, so the result depends only on the isomorphism type of the
//! coloured graph. Old colour order is kept as the primary key, hence the
//! partition only ever splits.

use crate::graph::Graph;

pub(crate) type Colouring = Vec<u32>;

pub(crate) fn refine(g: &Graph, colours: &[u32]) -> Colouring {
    let n = g.n();
    let mut col = colours.to_vec();
    let mut count = distinct(&col);
    let mut order: Vec<usize> = (0..n).collect();
    let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); n];
    loop {
        for v in 0..n {
            let s = &mut sigs[v];
            s.clear();
            s.push(col[v]);
            s.extend(g.neighbors(v).iter().map(|&w| col[w]));
            s[1..].sort_unstable();
        }
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                rank += 1;
            }
            next[order[i]] = rank;
        }
        let new_count = if n == 0 { 0 } else { rank as usize + 1 };
        col = next;
        if new_count == count {
            return col;
        }
        count = new_count;
    }
}

fn distinct(col: &[u32]) -> usize {
    let mut c = col.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Gives `v` a colour of its own just below its former cell mates.
pub(crate) fn individualize(col: &[u32], v: usize) -> Colouring {
    col.iter()
        .enumerate()
        .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
        .collect()
}

pub(crate) fn is_discrete(col: &[u32]) -> bool {
    histogram(col).iter().all(|&k| k <= 1)
}

/// Cell sizes indexed by colour.
pub(crate) fn histogram(col: &[u32]) -> Vec<u32> {
    let k = col.iter().max().map_or(0, |&m| m as usize + 1);
    let mut h = vec![0u32; k];
    for &c in col {
        h[c as usize] += 1;
    }
    h
}

/// The first largest non-singleton cell, as ascending vertex list.
pub(crate) fn target_cell(col: &[u32]) -> Option<Vec<usize>> {
    let h = histogram(col);
    let best = (0..h.len())
        .filter(|&c| h[c] > 1)
        .max_by_key(|&c| (h[c], std::cmp::Reverse(c)))?;
    Some((0..col.len()).filter(|&v| col[v] as usize == best).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle, path};

    #[test]
    fn path_splits_by_distance_to_the_ends() {
        let g = path(5);
        let c = refine(&g, &[0; 5]);
        assert_eq!(c[0], c[4]);
        assert_eq!(c[1], c[3]);
        assert_ne!(c[0], c[1]);
        assert_ne!(c[1], c[2]);
    }

    #[test]
    fn regular_graphs_do_not_split() {
        let g = cycle(6);
        assert_eq!(refine(&g, &[0; 6]), vec![0; 6]);
        let c = refine(&g, &individualize(&[0; 6], 0));
        assert_eq!(histogram(&c), vec![1, 2, 2, 1]);
        assert_eq!(target_cell(&c), Some(vec![1, 5]));
    }
}
