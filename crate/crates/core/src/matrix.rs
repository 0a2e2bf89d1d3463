//! Exact symmetric matrices and the standard graph matrices A, L = D − A,
//! Q = D + A.

use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("entry count {got} does not match dimension {dim}")]
    BadLength { dim: usize, got: usize },
    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
}

/// Dense symmetric matrix with machine-integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSymMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntSymMatrix {
    pub fn zeros(dim: usize) -> IntSymMatrix {
        IntSymMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    /// Build from row-major entries, verifying symmetry.
    pub fn new(dim: usize, data: Vec<i64>) -> Result<IntSymMatrix, MatrixError> {
        if data.len() != dim * dim {
            return Err(MatrixError::BadLength {
                dim,
                got: data.len(),
            });
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if data[i * dim + j] != data[j * dim + i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(IntSymMatrix { dim, data })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> i64) -> IntSymMatrix {
        let mut m = IntSymMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                m.data[i * dim + j] = v;
                m.data[j * dim + i] = v;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    pub(crate) fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }
}

/// Dense symmetric matrix with arbitrary-precision rational entries.
/// Houses shifted matrices A − cI for rational c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSymMatrix {
    dim: usize,
    data: Vec<BigRational>,
}

impl RationalSymMatrix {
    pub fn new(dim: usize, data: Vec<BigRational>) -> Result<RationalSymMatrix, MatrixError> {
        if data.len() != dim * dim {
            return Err(MatrixError::BadLength {
                dim,
                got: data.len(),
            });
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if data[i * dim + j] != data[j * dim + i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(RationalSymMatrix { dim, data })
    }

    pub fn from_int(m: &IntSymMatrix) -> RationalSymMatrix {
        RationalSymMatrix {
            dim: m.dim,
            data: m
                .data
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
        }
    }

    /// A − cI for a rational shift c.
    pub fn shifted(m: &IntSymMatrix, c: &BigRational) -> RationalSymMatrix {
        let mut r = RationalSymMatrix::from_int(m);
        for i in 0..m.dim {
            let d = &r.data[i * m.dim + i] - c;
            r.data[i * m.dim + i] = d;
        }
        r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.dim + j]
    }

    /// Clear denominators by the positive diagonal congruence
    /// D M D with D = diag(lcm of row-i denominators): inertia is unchanged
    /// and all entries become integers.
    pub(crate) fn to_integer_congruent(&self) -> (usize, Vec<BigInt>) {
        use num_integer::Integer;
        let n = self.dim;
        let mut scale = vec![BigInt::from(1); n];
        for (i, s) in scale.iter_mut().enumerate() {
            for j in 0..n {
                *s = s.lcm(self.data[i * n + j].denom());
            }
        }
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = &self.data[i * n + j];
                if e.is_zero() {
                    out.push(BigInt::zero());
                } else {
                    let num = e.numer() * &scale[i] * &scale[j];
                    let (q, r) = num_integer::Integer::div_rem(&num, e.denom());
                    debug_assert!(r.is_zero());
                    out.push(q);
                }
            }
        }
        (n, out)
    }
}

/// Adjacency matrix A(g): entries in {0,1}, zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> IntSymMatrix {
    IntSymMatrix::from_fn(g.order(), |i, j| i64::from(g.has_edge(i, j)))
}

/// Laplacian matrix D − A.
pub fn laplacian_matrix(g: &Graph) -> IntSymMatrix {
    IntSymMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            -i64::from(g.has_edge(i, j))
        }
    })
}

/// Signless Laplacian matrix D + A.
pub fn signless_laplacian_matrix(g: &Graph) -> IntSymMatrix {
    IntSymMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            i64::from(g.has_edge(i, j))
        }
    })
}
