//! Exact integer characteristic polynomials and the Descartes cross-check.
//!
//! `char_poly` runs the Faddeev–LeVerrier recurrence over `BigInt`; the
//! only divisions are by the step index and are exact. For a symmetric
//! matrix all roots are real, so the number of positive roots equals the
//! number of sign variations in the coefficient sequence, which gives an
//! independent route to the inertia.

use crate::inertia::Inertia;
use crate::matrix::IntSymMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharPolyError {
    #[error("zero polynomial has no inertia")]
    ZeroPolynomial,
}

/// Integer polynomial, coefficients degree-descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from degree-descending coefficients; leading zeros are stripped.
    pub fn new(coeffs: Vec<BigInt>) -> IntPolynomial {
        let first_nonzero = coeffs.iter().position(|c| !c.is_zero());
        match first_nonzero {
            Some(i) => IntPolynomial {
                coeffs: coeffs[i..].to_vec(),
            },
            None => IntPolynomial { coeffs: vec![] },
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one)
    }

    /// Degree-descending coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let deg = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = deg - i;
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if power > 0 {
                write!(f, "·λ^{power}")?;
            }
        }
        Ok(())
    }
}

/// Monic characteristic polynomial det(λI − m), exact.
pub fn char_poly(m: &IntSymMatrix) -> IntPolynomial {
    let n = m.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    if n == 0 {
        return IntPolynomial::new(coeffs);
    }
    let a: Vec<BigInt> = (0..n * n)
        .map(|idx| BigInt::from(m.get(idx / n, idx % n)))
        .collect();
    // Faddeev–LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_k = A·(M_{k-1} + c_{n-k+1}·I), c_{n-k} = -tr(M_k)/k.
    let mut mk = a.clone();
    for k in 1..=n {
        if k > 1 {
            let c = coeffs[k - 1].clone();
            for i in 0..n {
                mk[i * n + i] += &c;
            }
            let mut next = vec![BigInt::zero(); n * n];
            for i in 0..n {
                for l in 0..n {
                    let aval = &a[i * n + l];
                    if aval.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let t = aval * &mk[l * n + j];
                        next[i * n + j] += t;
                    }
                }
            }
            mk = next;
        }
        let trace: BigInt = (0..n).map(|i| mk[i * n + i].clone()).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[k] = q;
    }
    IntPolynomial::new(coeffs)
}

/// Inertia read from a characteristic polynomial of a real symmetric
/// matrix: trailing zero coefficients give the zero multiplicity, and sign
/// variations give the positive count (Descartes' rule, exact when all
/// roots are real).
pub fn inertia_from_charpoly(p: &IntPolynomial) -> Result<Inertia, CharPolyError> {
    if p.is_zero() {
        return Err(CharPolyError::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    let degree = p.degree();
    let n_zero = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let nonzero: Vec<i8> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| if c.is_negative() { -1 } else { 1 })
        .collect();
    let n_plus = nonzero.windows(2).filter(|w| w[0] != w[1]).count();
    Ok(Inertia::new(n_plus, n_zero, degree - n_zero - n_plus))
}
