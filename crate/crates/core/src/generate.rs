//! Deterministic graph generation: exhaustive labeled enumeration, seeded
//! G(n, 1/2) sampling, and labeled trees from Prüfer sequences.
//!
//! The random stream is splitmix64 so that runs are reproducible across
//! machines and reimplementable in other languages from the description
//! alone: each potential edge, taken in the same pair order as the
//! enumeration code below, consumes one bit (least-significant first) from
//! successive splitmix64 outputs; a 1 bit means the edge is present.

use crate::graph::Graph;

/// Identifier recorded in run summaries.
pub const RNG_ALGORITHM: &str = "splitmix64";

/// splitmix64 generator (Steele, Lea, Flood 2014).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound via rejection sampling.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// Bit-at-a-time view over the splitmix64 stream.
pub struct BitStream {
    rng: SplitMix64,
    word: u64,
    left: u32,
}

impl BitStream {
    pub fn new(rng: SplitMix64) -> BitStream {
        BitStream {
            rng,
            word: 0,
            left: 0,
        }
    }

    pub fn next_bit(&mut self) -> bool {
        if self.left == 0 {
            self.word = self.rng.next_u64();
            self.left = 64;
        }
        let bit = self.word & 1 == 1;
        self.word >>= 1;
        self.left -= 1;
        bit
    }
}

/// Number of edge slots of a labeled graph on n vertices.
pub fn edge_slots(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of labeled graphs on n vertices (2^C(n,2)); n ≤ 11 so the count
/// fits in u64.
pub fn labeled_graph_count(n: usize) -> u64 {
    assert!(n <= 11, "labeled enumeration supports order ≤ 11");
    1u64 << edge_slots(n)
}

/// The labeled graph encoded by `code`: bit t of the code is edge t in the
/// column order (0,1), (0,2), (1,2), (0,3), … — the same pair order as the
/// graph6 body.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            if code >> t & 1 == 1 {
                g.set_edge(i, j);
            }
            t += 1;
        }
    }
    g
}

/// Erdős–Rényi G(n, 1/2): every pair independently present with
/// probability 1/2, one stream bit per pair.
pub fn gnp_half(n: usize, bits: &mut BitStream) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if bits.next_bit() {
                g.set_edge(i, j);
            }
        }
    }
    g
}

/// Labeled tree on n ≥ 2 vertices from a Prüfer sequence of length n − 2.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        assert!(v < n);
        degree[v] += 1;
    }
    let mut g = Graph::empty(n);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut seq_iter = seq.iter();
    for &v in seq_iter.by_ref() {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("a leaf always remains");
        g.set_edge(leaf, v);
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    g.set_edge(a, b);
    g
}

/// Visit every labeled tree on n vertices exactly once (n^(n−2) trees via
/// all Prüfer sequences; for n ≤ 2 the single tree).
pub fn for_each_labeled_tree(n: usize, mut f: impl FnMut(&Graph)) {
    if n == 0 {
        return;
    }
    if n == 1 {
        f(&Graph::empty(1));
        return;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        f(&tree_from_prufer(n, &seq));
        // increment the sequence as a base-n counter
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
    }
}
