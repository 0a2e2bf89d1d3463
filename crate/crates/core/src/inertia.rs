//! Exact inertia of symmetric matrices by congruence elimination.
//!
//! The engine works entirely over the integers. A 1×1 pivot step stores
//! `p·S` instead of the rational Schur complement `S`; a fraction-free
//! division by the previous pivot (exact by Sylvester's determinant
//! identity) keeps entries at the size of minors of the input. Multiplying
//! the trailing block by the pivot `p` flips its inertia when `p < 0`, so a
//! running sign `sigma` tracks the orientation of the stored block. When
//! the whole active diagonal is zero, a 2×2 pivot `[[0,a],[a,0]]`
//! contributes one positive and one negative eigenvalue and the run
//! restarts after a global gcd reduction.
//!
//! Everything is attempted in `i128` first; on overflow the elimination is
//! redone with `BigInt`. No eigenvalue is ever classified by a tolerance.

use crate::matrix::{IntSymMatrix, RationalSymMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InertiaError {
    #[error("interval bounds out of order: {a} > {b}")]
    BadInterval { a: Rational64, b: Rational64 },
}

/// Counts of positive, zero, and negative eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Inertia {
        Inertia {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    /// s = n⁺ − n⁻.
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    /// r = n⁺ + n⁻.
    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

impl std::ops::Add for Inertia {
    type Output = Inertia;
    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(
            self.n_plus + rhs.n_plus,
            self.n_zero + rhs.n_zero,
            self.n_minus + rhs.n_minus,
        )
    }
}

/// Integer scalar usable by the elimination engine.
trait EngineInt: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// −1, 0, or 1.
    fn sgn(&self) -> i8;
    fn abs_gt(&self, other: &Self) -> bool;
    fn mul_checked(&self, other: &Self) -> Option<Self>;
    fn sub_checked(&self, other: &Self) -> Option<Self>;
    fn gcd_abs(&self, other: &Self) -> Self;
    /// Exact division by a positive divisor; `None` when not exact.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn is_one_abs(&self) -> bool;
    fn abs(&self) -> Self;
}

impl EngineInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn sgn(&self) -> i8 {
        match self.cmp(&0) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }
    fn abs_gt(&self, other: &Self) -> bool {
        self.unsigned_abs() > other.unsigned_abs()
    }
    fn mul_checked(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub_checked(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd_abs(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (self % d == 0).then(|| self / d)
    }
    fn is_one_abs(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn abs(&self) -> Self {
        i128::abs(*self)
    }
}

impl EngineInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sgn(&self) -> i8 {
        match self.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
    fn abs_gt(&self, other: &Self) -> bool {
        self.magnitude() > other.magnitude()
    }
    fn mul_checked(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub_checked(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd_abs(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = Integer::div_rem(self, d);
        Zero::is_zero(&r).then_some(q)
    }
    fn is_one_abs(&self) -> bool {
        num_traits::One::is_one(&Signed::abs(self))
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

fn swap_sym<T: Clone>(m: &mut [T], n: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..n {
        m.swap(a * n + j, b * n + j);
    }
    for i in 0..n {
        m.swap(i * n + a, i * n + b);
    }
}

/// Divide the active block `k..n` by the positive divisor `d` if every
/// entry is exactly divisible; returns false (leaving `m` unchanged) when
/// some entry is not.
fn divide_block<T: EngineInt>(m: &mut [T], n: usize, k: usize, d: &T) -> bool {
    let mut q = Vec::with_capacity((n - k) * (n - k));
    for i in k..n {
        for j in k..n {
            match m[i * n + j].div_exact(d) {
                Some(v) => q.push(v),
                None => return false,
            }
        }
    }
    let mut it = q.into_iter();
    for i in k..n {
        for j in k..n {
            m[i * n + j] = it.next().unwrap();
        }
    }
    true
}

/// gcd of all entries of the active block; zero when the block is zero.
fn block_gcd<T: EngineInt>(m: &[T], n: usize, k: usize) -> T {
    let mut g = T::from_i64(0);
    for i in k..n {
        for j in i..n {
            let e = &m[i * n + j];
            if !e.is_zero() {
                g = g.gcd_abs(e);
                if g.is_one_abs() {
                    return g;
                }
            }
        }
    }
    g
}

/// Symmetric congruence elimination; `None` signals scalar overflow.
fn eliminate<T: EngineInt>(n: usize, m: &mut [T]) -> Option<Inertia> {
    let mut acc = Inertia::new(0, 0, 0);
    let mut sigma: i8 = 1;
    // pivot of the previous 1×1 step in the current fraction-free run
    let mut run_divisor: Option<T> = None;
    let mut k = 0usize;
    while k < n {
        // greedy 1×1 pivot: largest-magnitude nonzero diagonal entry
        let mut best: Option<usize> = None;
        for i in k..n {
            let e = &m[i * n + i];
            if !e.is_zero() && best.is_none_or(|b| e.abs_gt(&m[b * n + b])) {
                best = Some(i);
            }
        }
        if let Some(i) = best {
            swap_sym(m, n, k, i);
            let p = m[k * n + k].clone();
            if sigma * p.sgn() > 0 {
                acc.n_plus += 1;
            } else {
                acc.n_minus += 1;
            }
            for r in (k + 1)..n {
                for c in r..n {
                    let t1 = m[r * n + c].mul_checked(&p)?;
                    let t2 = m[r * n + k].mul_checked(&m[c * n + k])?;
                    let v = t1.sub_checked(&t2)?;
                    m[r * n + c] = v.clone();
                    m[c * n + r] = v;
                }
            }
            sigma *= p.sgn();
            k += 1;
            if let Some(d) = run_divisor.take() {
                if !d.is_one_abs() {
                    let ok = divide_block(m, n, k, &d.abs());
                    if !ok {
                        // theory guarantees exactness inside a run; fall
                        // back to a plain gcd reduction if it ever fails
                        let g = block_gcd(m, n, k);
                        if !g.is_zero() && !g.is_one_abs() {
                            divide_block(m, n, k, &g);
                        }
                    }
                }
            }
            run_divisor = Some(p);
        } else {
            // active diagonal is all zero: 2×2 pivot on the largest
            // off-diagonal entry, or finish if the block is zero
            let mut best: Option<(usize, usize)> = None;
            for r in k..n {
                for c in (r + 1)..n {
                    let e = &m[r * n + c];
                    if !e.is_zero() && best.is_none_or(|(br, bc)| e.abs_gt(&m[br * n + bc])) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((r, c)) = best else {
                acc.n_zero += n - k;
                break;
            };
            swap_sym(m, n, k, r);
            let c = if c == k { r } else { c };
            swap_sym(m, n, k + 1, c);
            let a = m[k * n + k + 1].clone();
            acc.n_plus += 1;
            acc.n_minus += 1;
            for i in (k + 2)..n {
                for j in i..n {
                    let t1 = m[i * n + j].mul_checked(&a)?;
                    let t2 = m[i * n + k].mul_checked(&m[j * n + k + 1])?;
                    let t3 = m[i * n + k + 1].mul_checked(&m[j * n + k])?;
                    let v = t1.sub_checked(&t2)?.sub_checked(&t3)?;
                    m[i * n + j] = v.clone();
                    m[j * n + i] = v;
                }
            }
            sigma *= a.sgn();
            k += 2;
            // restart the fraction-free run after a block step
            run_divisor = None;
            let g = block_gcd(m, n, k);
            if !g.is_zero() && !g.is_one_abs() {
                divide_block(m, n, k, &g);
            }
        }
    }
    Some(acc)
}

// Above this dimension the i128 attempt is skipped: minors of desk-scale
// integer matrices overflow quickly past it.
const I128_DIM_LIMIT: usize = 40;

fn eliminate_auto(
    n: usize,
    small: Option<Vec<i128>>,
    big: impl FnOnce() -> Vec<BigInt>,
) -> Inertia {
    if let Some(mut data) = small {
        if n <= I128_DIM_LIMIT {
            if let Some(result) = eliminate::<i128>(n, &mut data) {
                return result;
            }
        }
    }
    let mut data = big();
    eliminate::<BigInt>(n, &mut data).expect("BigInt elimination cannot overflow")
}

/// Exact inertia of a symmetric integer matrix.
pub fn inertia(m: &IntSymMatrix) -> Inertia {
    let n = m.dim();
    let small: Vec<i128> = m.entries().iter().map(|&v| v as i128).collect();
    eliminate_auto(n, Some(small), || {
        m.entries().iter().map(|&v| BigInt::from(v)).collect()
    })
}

/// Exact inertia of `m − c·I`: counts of eigenvalues above / at / below `c`.
pub fn shifted_inertia(m: &IntSymMatrix, c: Rational64) -> Inertia {
    let n = m.dim();
    let p = *c.numer();
    let q = *c.denom(); // always positive
                        // q·(A − (p/q)I) = qA − pI, a positive scaling
    let small: Vec<i128> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            m.get(i, j) as i128 * q as i128 - if i == j { p as i128 } else { 0 }
        })
        .collect();
    eliminate_auto(n, Some(small), || {
        (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                BigInt::from(m.get(i, j)) * BigInt::from(q)
                    - if i == j {
                        BigInt::from(p)
                    } else {
                        BigInt::zero()
                    }
            })
            .collect()
    })
}

/// Exact inertia of a symmetric rational matrix.
pub fn inertia_rational(m: &RationalSymMatrix) -> Inertia {
    let (n, ints) = m.to_integer_congruent();
    let small: Option<Vec<i128>> = ints.iter().map(|v| v.to_i128()).collect();
    eliminate_auto(n, small, || ints)
}

/// Exact count of eigenvalues of `m` in the interval from `a` to `b` with
/// the given endpoint inclusion flags, via two shifted inertias.
pub fn count_eigenvalues_in_interval(
    m: &IntSymMatrix,
    a: Rational64,
    b: Rational64,
    include_a: bool,
    include_b: bool,
) -> Result<usize, InertiaError> {
    if a > b {
        return Err(InertiaError::BadInterval { a, b });
    }
    let at_a = shifted_inertia(m, a);
    if a == b {
        return Ok(if include_a && include_b {
            at_a.n_zero
        } else {
            0
        });
    }
    let at_b = shifted_inertia(m, b);
    let mut count = at_b.n_minus - at_a.n_minus - at_a.n_zero;
    if include_a {
        count += at_a.n_zero;
    }
    if include_b {
        count += at_b.n_zero;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrix::{adjacency_matrix, laplacian_matrix};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn known_inertias() {
        assert_eq!(
            inertia(&adjacency_matrix(&complete(2))),
            Inertia::new(1, 0, 1)
        );
        assert_eq!(inertia(&adjacency_matrix(&path(3))), Inertia::new(1, 1, 1));
        assert_eq!(inertia(&adjacency_matrix(&cycle(5))), Inertia::new(3, 0, 2));
        assert_eq!(
            inertia(&adjacency_matrix(&complete(3))),
            Inertia::new(1, 0, 2)
        );
        assert_eq!(
            inertia(&adjacency_matrix(&Graph::empty(1))),
            Inertia::new(0, 1, 0)
        );
        assert_eq!(inertia(&IntSymMatrix::zeros(0)), Inertia::new(0, 0, 0));
    }

    #[test]
    fn signature_and_rank() {
        let i = Inertia::new(3, 0, 2);
        assert_eq!(i.signature(), 1);
        assert_eq!(i.rank(), 5);
        assert_eq!(i.dim(), 5);
    }

    #[test]
    fn shifted_known_values() {
        let k2 = adjacency_matrix(&complete(2));
        assert_eq!(
            shifted_inertia(&k2, Rational64::new(1, 1)),
            Inertia::new(0, 1, 1)
        );
        // C5 spectrum has two values below −1 and none equal to −1
        let c5 = adjacency_matrix(&cycle(5));
        assert_eq!(
            shifted_inertia(&c5, Rational64::new(-1, 1)),
            Inertia::new(3, 0, 2)
        );
        let k3 = adjacency_matrix(&complete(3));
        assert_eq!(
            shifted_inertia(&k3, Rational64::new(-1, 1)),
            Inertia::new(1, 2, 0)
        );
    }

    #[test]
    fn interval_counts() {
        // char poly of P4 is λ⁴−3λ²+1 with roots ±(1±√5)/2 ≈ ±1.618, ±0.618
        let p4 = adjacency_matrix(&path(4));
        assert_eq!(
            count_eigenvalues_in_interval(
                &p4,
                Rational64::new(-1, 1),
                Rational64::new(0, 1),
                false,
                false
            )
            .unwrap(),
            1
        );
        // Laplacian spectrum of P3 is {0, 1, 3}
        let lp3 = laplacian_matrix(&path(3));
        assert_eq!(
            count_eigenvalues_in_interval(
                &lp3,
                Rational64::new(0, 1),
                Rational64::new(2, 1),
                true,
                false
            )
            .unwrap(),
            2
        );
        let k3 = adjacency_matrix(&complete(3));
        assert_eq!(
            count_eigenvalues_in_interval(
                &k3,
                Rational64::new(-1, 1),
                Rational64::new(0, 1),
                false,
                false
            )
            .unwrap(),
            0
        );
        assert!(count_eigenvalues_in_interval(
            &k3,
            Rational64::new(1, 1),
            Rational64::new(0, 1),
            false,
            false
        )
        .is_err());
    }

    #[test]
    fn interval_additivity() {
        let g = cycle(7);
        let a = adjacency_matrix(&g);
        let lo = Rational64::new(-2, 1);
        let mid = Rational64::new(-1, 2);
        let hi = Rational64::new(2, 1);
        let left = count_eigenvalues_in_interval(&a, lo, mid, false, false).unwrap();
        let right = count_eigenvalues_in_interval(&a, mid, hi, false, false).unwrap();
        let at_mid = shifted_inertia(&a, mid).n_zero;
        let whole = count_eigenvalues_in_interval(&a, lo, hi, false, false).unwrap();
        assert_eq!(left + right + at_mid, whole);
    }

    #[test]
    fn rational_matrix_agrees_with_integer_shift() {
        let a = adjacency_matrix(&cycle(5));
        let half = num_rational::BigRational::new(BigInt::from(1), BigInt::from(2));
        let shifted = RationalSymMatrix::shifted(&a, &half);
        assert_eq!(
            inertia_rational(&shifted),
            shifted_inertia(&a, Rational64::new(1, 2))
        );
    }

    #[test]
    fn congruence_invariance_under_relabeling() {
        // relabeling vertices permutes rows and columns simultaneously
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let base = inertia(&adjacency_matrix(&g));
        for perm in [[5, 4, 3, 2, 1, 0], [2, 0, 4, 1, 5, 3]] {
            let relabeled =
                Graph::from_edges(6, g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
            assert_eq!(inertia(&adjacency_matrix(&relabeled)), base);
        }
    }

    #[test]
    fn any_edge_forces_mixed_signs() {
        for g in [complete(2), path(4), cycle(6)] {
            let i = inertia(&adjacency_matrix(&g));
            assert!(i.n_plus >= 1 && i.n_minus >= 1);
        }
    }

    #[test]
    fn big_path_matches_small_path() {
        // force the BigInt path by lying about the limit: compare on a
        // moderately large structured graph instead
        let g = cycle(30);
        let a = adjacency_matrix(&g);
        let n = a.dim();
        let mut big: Vec<BigInt> = a.entries().iter().map(|&v| BigInt::from(v)).collect();
        let from_big = eliminate::<BigInt>(n, &mut big).unwrap();
        assert_eq!(from_big, inertia(&a));
    }
}
