//! Twin detection, reduction to twin-free graphs without isolated vertices,
//! and the structural classifiers (cograph, self-complementary) used by the
//! checkers.
//!
//! "Twins" for reducedness means open twins (equal open neighbourhoods);
//! closed twins are detected separately and never affect `is_reduced`.

use crate::graph::{Graph, GraphError};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("order {order} above the isomorphism search limit {limit}")]
    OrderAboveIsoLimit { order: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Default cap for the self-complementarity isomorphism search.
pub const DEFAULT_ISO_LIMIT: usize = 32;

/// Vertex partitions by open and closed neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClasses {
    pub open_classes: Vec<Vec<usize>>,
    pub closed_classes: Vec<Vec<usize>>,
}

impl TwinClasses {
    pub fn has_open_twins(&self) -> bool {
        self.open_classes.iter().any(|c| c.len() >= 2)
    }

    pub fn has_closed_twins(&self) -> bool {
        self.closed_classes.iter().any(|c| c.len() >= 2)
    }
}

fn group_by_key(n: usize, key: impl Fn(usize) -> Vec<u64>) -> Vec<Vec<usize>> {
    let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        groups.entry(key(v)).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Partition vertices by N(u) and by N[u].
pub fn twin_classes(g: &Graph) -> TwinClasses {
    let n = g.order();
    let open_classes = group_by_key(n, |v| g.row(v).to_vec());
    let closed_classes = group_by_key(n, |v| {
        let mut row = g.row(v).to_vec();
        row[v / 64] |= 1 << (v % 64);
        row
    });
    TwinClasses {
        open_classes,
        closed_classes,
    }
}

/// Reduced: no open-twin pair and no isolated vertex.
pub fn is_reduced(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) > 0) && !twin_classes(g).has_open_twins()
}

/// Repeatedly delete the highest-indexed vertex of each open-twin class and
/// all isolated vertices until the graph is reduced (possibly empty).
pub fn reduce(g: &Graph) -> Graph {
    reduce_with_map(g).0
}

/// As [`reduce`], also returning the surviving vertices' original indices.
pub fn reduce_with_map(g: &Graph) -> (Graph, Vec<usize>) {
    let mut current = g.clone();
    let mut map: Vec<usize> = (0..g.order()).collect();
    loop {
        let mut drop: Vec<usize> = twin_classes(&current)
            .open_classes
            .iter()
            .filter(|c| c.len() >= 2)
            .map(|c| *c.last().unwrap())
            .collect();
        drop.extend((0..current.order()).filter(|&v| current.degree(v) == 0));
        if drop.is_empty() {
            return (current, map);
        }
        drop.sort_unstable();
        drop.dedup();
        let keep: Vec<usize> = (0..current.order()).filter(|v| !drop.contains(v)).collect();
        map = keep.iter().map(|&v| map[v]).collect();
        current = current.induced_subgraph(&keep).expect("keep is in range");
    }
}

/// P4-free test by exhaustive scan over 4-subsets. Among the graphs with 3
/// edges on 4 vertices, the path is the one with local degree multiset
/// {1,1,2,2}.
pub fn is_cograph(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let quad = [a, b, c, d];
                    let mut degs = [0usize; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in (i + 1)..4 {
                            if g.has_edge(quad[i], quad[j]) {
                                edges += 1;
                                degs[i] += 1;
                                degs[j] += 1;
                            }
                        }
                    }
                    if edges == 3 {
                        degs.sort_unstable();
                        if degs == [1, 1, 2, 2] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Whether g is isomorphic to its complement, by degree-refinement
/// colouring followed by colour-respecting backtracking.
pub fn is_self_complementary(g: &Graph) -> Result<bool, ReductionError> {
    is_self_complementary_with_limit(g, DEFAULT_ISO_LIMIT)
}

pub fn is_self_complementary_with_limit(g: &Graph, limit: usize) -> Result<bool, ReductionError> {
    let n = g.order();
    if n > limit {
        return Err(ReductionError::OrderAboveIsoLimit { order: n, limit });
    }
    // a self-complementary graph has exactly half of all pairs as edges
    if !(n * (n - 1) / 2).is_multiple_of(2) || g.size() != n * (n - 1) / 4 {
        return Ok(false);
    }
    let h = g.complement();
    let (cg, ch) = (refine_colors(g), refine_colors(&h));
    // the colour multisets must match for an isomorphism to exist
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_isomorphism(
        g,
        &h,
        &cg,
        &ch,
        &mut mapping,
        &mut used,
        0,
    ))
}

/// Iterated neighbourhood-colour refinement (1-dimensional Weisfeiler-Leman),
/// returning a stable colour per vertex.
fn refine_colors(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..n {
        let sigs: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u64, Vec<u64>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let index_of = |s: &(u64, Vec<u64>)| sorted.binary_search(&s).unwrap() as u64;
        let next: Vec<u64> = sigs.iter().map(index_of).collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    cg: &[u64],
    ch: &[u64],
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    let n = g.order();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || cg[v] != ch[w] {
            continue;
        }
        // adjacency with already-mapped vertices must match
        let consistent = (0..v).all(|u| g.has_edge(v, u) == h.has_edge(w, mapping[u]));
        if !consistent {
            continue;
        }
        mapping[v] = w;
        used[w] = true;
        if extend_isomorphism(g, h, cg, ch, mapping, used, v + 1) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}
