//! Graph constructions and named families: line graphs, joins, unions,
//! tensor products, the order-doubling operation that increments both n⁺
//! and n⁻, twin addition, and fixture graphs with known spectra.

use crate::graph::{Graph, GraphError, DEFAULT_MAX_ORDER};
use crate::inertia::Inertia;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("spectrum multiplicities sum to {got}, declared order is {declared}")]
    SpectrumOrderMismatch { declared: usize, got: usize },
    #[error("spectrum eigenvalues must be strictly decreasing")]
    SpectrumNotSorted,
    #[error("spectrum multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("fixture table failed its checksum")]
    FixtureChecksum,
}

fn check_order(n: usize) -> Result<(), ConstructionError> {
    if n > DEFAULT_MAX_ORDER {
        return Err(ConstructionError::Graph(GraphError::OrderOverflow {
            requested: n,
            max: DEFAULT_MAX_ORDER,
        }));
    }
    Ok(())
}

/// Line graph L(g): one vertex per edge of `g` in lexicographic edge order,
/// adjacent when the underlying edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let m = edges.len();
    let mut lg = Graph::empty(m);
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                lg.set_edge(i, j);
            }
        }
    }
    lg
}

/// Line graph together with the source edge labeling, so reports can name
/// original edges.
pub fn line_graph_with_edges(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    (line_graph(g), g.edges())
}

/// Disjoint union on shifted vertex sets.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, ConstructionError> {
    let n = g.order() + h.order();
    check_order(n)?;
    let mut out = Graph::empty(n);
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.set_edge(g.order() + u, g.order() + v);
    }
    Ok(out)
}

/// Join: disjoint union plus all cross edges.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, ConstructionError> {
    let mut out = disjoint_union(g, h)?;
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.set_edge(u, g.order() + v);
        }
    }
    Ok(out)
}

/// Direct (tensor) product: (u1,v1) ~ (u2,v2) iff u1~u2 and v1~v2.
/// Vertex (u,v) maps to index u·order(h) + v.
pub fn tensor_product(g: &Graph, h: &Graph) -> Result<Graph, ConstructionError> {
    let n = g
        .order()
        .checked_mul(h.order())
        .ok_or(ConstructionError::Graph(GraphError::OrderOverflow {
            requested: usize::MAX,
            max: DEFAULT_MAX_ORDER,
        }))?;
    check_order(n)?;
    let hn = h.order();
    let mut out = Graph::empty(n);
    for (u1, u2) in g.edges() {
        for (v1, v2) in h.edges() {
            // both orientations of the h edge pair with the g edge
            out.set_edge(u1 * hn + v1, u2 * hn + v2);
            out.set_edge(u1 * hn + v2, u2 * hn + v1);
        }
    }
    Ok(out)
}

/// Order-doubling construction: two copies of g with cross edges following
/// g (a vertex is not adjacent to its own duplicate), a vertex x adjacent
/// to all of the second copy and to y, and y adjacent only to x. Increments
/// both n⁺ and n⁻ by exactly one.
pub fn kotlov_lovasz_double(g: &Graph) -> Result<Graph, ConstructionError> {
    let n = g.order();
    let out_n = 2 * n + 2;
    check_order(out_n)?;
    let x = 2 * n;
    let y = 2 * n + 1;
    let mut out = Graph::empty(out_n);
    for (u, v) in g.edges() {
        out.set_edge(u, v); // first copy
        out.set_edge(n + u, n + v); // second copy
        out.set_edge(u, n + v); // cross, both directions
        out.set_edge(v, n + u);
    }
    for v in 0..n {
        out.set_edge(x, n + v);
    }
    out.set_edge(x, y);
    Ok(out)
}

/// Append a vertex with the same open neighbourhood as `v`; with `closed`
/// set it is additionally adjacent to `v` itself (closed twin).
pub fn add_twin(g: &Graph, v: usize, closed: bool) -> Result<Graph, ConstructionError> {
    if v >= g.order() {
        return Err(ConstructionError::Graph(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        }));
    }
    let n = g.order() + 1;
    check_order(n)?;
    let new = n - 1;
    let mut out = Graph::empty(n);
    for (a, b) in g.edges() {
        out.set_edge(a, b);
    }
    for u in g.neighbors(v) {
        out.set_edge(new, u);
    }
    if closed {
        out.set_edge(new, v);
    }
    Ok(out)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

pub fn cycle(n: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameters(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    check_order(n)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

pub fn complete(n: usize) -> Result<Graph, ConstructionError> {
    check_order(n)?;
    Ok(Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap())
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, ConstructionError> {
    complete_multipartite(&[p, q])
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, ConstructionError> {
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0usize;
    for &p in parts {
        offsets.push(acc);
        acc += p;
    }
    let mut g = Graph::empty(n);
    for (i, &pi) in parts.iter().enumerate() {
        for (j, &pj) in parts.iter().enumerate().skip(i + 1) {
            for a in 0..pi {
                for b in 0..pj {
                    g.set_edge(offsets[i] + a, offsets[j] + b);
                }
            }
        }
    }
    Ok(g)
}

/// Star K_{1,leaves}: vertex 0 is the centre.
pub fn star(leaves: usize) -> Result<Graph, ConstructionError> {
    check_order(leaves + 1)?;
    Ok(Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap())
}

/// Triangular graph T(k): the line graph of K_k.
pub fn triangular(k: usize) -> Result<Graph, ConstructionError> {
    Ok(line_graph(&complete(k)?))
}

/// Petersen graph, realized as the complement of T(5).
pub fn petersen() -> Graph {
    triangular(5).unwrap().complement()
}

/// Paley graph on a prime q ≡ 1 (mod 4): vertices Z/q, edges between
/// quadratic-residue differences. Prime powers are not supported.
pub fn paley(q: usize) -> Result<Graph, ConstructionError> {
    if q % 4 != 1 {
        return Err(ConstructionError::InvalidParameters(format!(
            "paley requires q ≡ 1 (mod 4), got {q}"
        )));
    }
    let is_prime = q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d));
    if !is_prime {
        return Err(ConstructionError::InvalidParameters(format!(
            "paley requires a prime q in this artifact, got {q}"
        )));
    }
    check_order(q)?;
    let mut residues = vec![false; q];
    for x in 1..q {
        residues[x * x % q] = true;
    }
    let mut g = Graph::empty(q);
    for u in 0..q {
        for v in (u + 1)..q {
            if residues[(v - u) % q] {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// H1 fixture on 9 vertices with inertia (6, 0, 3); frozen edge list.
pub fn h1() -> Graph {
    Graph::from_edges(
        9,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (4, 7),
            (6, 7),
            (7, 8),
            (1, 7),
            (3, 6),
            (0, 6),
            (6, 8),
            (5, 8),
            (2, 8),
        ],
    )
    .unwrap()
}

/// H2 fixture on 9 vertices with inertia (6, 0, 3); frozen edge list.
pub fn h2() -> Graph {
    Graph::from_edges(
        9,
        [
            (0, 1),
            (1, 6),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (2, 5),
            (5, 7),
            (5, 8),
            (6, 8),
            (3, 6),
            (0, 4),
            (0, 7),
            (6, 7),
            (3, 7),
            (4, 8),
        ],
    )
    .unwrap()
}

/// Explicit eigenvalue/multiplicity list for fixture graphs too large to
/// build. Eigenvalues strictly decreasing, multiplicities positive and
/// summing to the declared order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSpec {
    order: usize,
    pairs: Vec<(BigRational, usize)>,
}

impl SpectrumSpec {
    pub fn new(
        order: usize,
        pairs: Vec<(BigRational, usize)>,
    ) -> Result<SpectrumSpec, ConstructionError> {
        if pairs.iter().any(|(_, m)| *m == 0) {
            return Err(ConstructionError::ZeroMultiplicity);
        }
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(ConstructionError::SpectrumNotSorted);
        }
        let got: usize = pairs.iter().map(|(_, m)| m).sum();
        if got != order {
            return Err(ConstructionError::SpectrumOrderMismatch {
                declared: order,
                got,
            });
        }
        Ok(SpectrumSpec { order, pairs })
    }

    pub fn from_i64(
        order: usize,
        pairs: &[(i64, usize)],
    ) -> Result<SpectrumSpec, ConstructionError> {
        SpectrumSpec::new(
            order,
            pairs
                .iter()
                .map(|&(v, m)| (BigRational::from(BigInt::from(v)), m))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pairs(&self) -> &[(BigRational, usize)] {
        &self.pairs
    }

    /// Multiplicity of the second and third distinct eigenvalue when the
    /// spectrum has exactly three distinct values and a simple largest one.
    pub fn three_eigenvalue_multiplicities(&self) -> Option<(usize, usize)> {
        match self.pairs.as_slice() {
            [(_, 1), (_, f), (_, g)] => Some((*f, *g)),
            _ => None,
        }
    }
}

/// Count multiplicities by eigenvalue sign.
pub fn inertia_from_spectrum(s: &SpectrumSpec) -> Inertia {
    let mut acc = Inertia::new(0, 0, 0);
    for (value, mult) in s.pairs() {
        if value.is_positive() {
            acc.n_plus += mult;
        } else if value.is_negative() {
            acc.n_minus += mult;
        } else {
            acc.n_zero += mult;
        }
    }
    acc
}

/// A shipped spectrum fixture: name, order, spectrum, citation.
#[derive(Clone, Debug)]
pub struct SpectrumFixture {
    pub name: &'static str,
    pub order: usize,
    pub pairs: &'static [(i64, usize)],
    pub citation: &'static str,
}

/// Fixture graphs known only by their spectra.
pub const SPECTRUM_FIXTURES: &[SpectrumFixture] = &[
    SpectrumFixture {
        name: "GQ(2,4)",
        order: 27,
        pairs: &[(10, 1), (1, 20), (-5, 6)],
        citation: "generalized quadrangle GQ(2,4), srg(27,10,1,5); spectrum 10^1 1^20 (-5)^6",
    },
    SpectrumFixture {
        name: "McLaughlin",
        order: 275,
        pairs: &[(112, 1), (2, 252), (-28, 22)],
        citation: "McLaughlin graph, srg(275,112,30,56); spectrum 112^1 2^252 (-28)^22",
    },
];

const FIXTURE_CHECKSUM: u64 = 0x55e8_3293_243d_1f33;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Hash of the canonical rendering of the fixture table.
pub fn fixture_table_digest() -> u64 {
    let mut canon = String::new();
    for f in SPECTRUM_FIXTURES {
        canon.push_str(f.name);
        canon.push('|');
        canon.push_str(&f.order.to_string());
        for (v, m) in f.pairs {
            canon.push_str(&format!("|{v}^{m}"));
        }
        canon.push('\n');
    }
    fnv1a(canon.as_bytes())
}

/// Verify the shipped table against its frozen checksum and internal
/// consistency, returning the parsed spectra.
pub fn validated_fixtures(
) -> Result<Vec<(&'static SpectrumFixture, SpectrumSpec)>, ConstructionError> {
    if fixture_table_digest() != FIXTURE_CHECKSUM {
        return Err(ConstructionError::FixtureChecksum);
    }
    SPECTRUM_FIXTURES
        .iter()
        .map(|f| SpectrumSpec::from_i64(f.order, f.pairs).map(|s| (f, s)))
        .collect()
}
