//! Coefficient traits.
//!
//! Everything in the crate is generic over one of three layers:
//!
//! * [`Ring`] is enough for free-algebra arithmetic, Kronecker bookkeeping
//!   and symbolic identity checks (the symbolic scalar [`crate::Sym`] lives
//!   here).
//! * [`Field`] adds division, used by linear substitution and elimination.
//! * [`Scalar`] is an ordered field with the spectral helpers needed by the
//!   inertia and positivity layers. `BigRational` is exact, `f64`/`f32` use
//!   tolerances.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::matrix::Matrix;

pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// True when the printer should emit ` - ` followed by the negation.
    fn is_negative_hint(&self) -> bool {
        false
    }

    /// Coefficient text used by the polynomial printer. Compound symbolic
    /// values come back parenthesized.
    fn coeff_text(&self) -> String {
        format!("{self:?}")
    }
}

pub trait Field: Ring + Div<Output = Self> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

pub trait Scalar: Field + PartialOrd + Signed + Display + FromPrimitive + ToPrimitive {
    /// Whether zero tests are exact.
    const EXACT: bool;

    fn from_rational(r: &BigRational) -> Self;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Zero test; floating types compare against `tol * scale`.
    fn is_negligible(&self, scale: f64, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64_lossy().abs() <= tol * scale
        }
    }

    /// Rank of a matrix. Exact elimination unless overridden.
    fn rank_of(m: &Matrix<Self>) -> usize {
        m.rank_exact()
    }

    /// Column basis of the null space of `m`.
    fn null_space_of(m: &Matrix<Self>) -> Matrix<Self> {
        m.null_space_exact()
    }

    /// For symmetric `m`: a vector `z` with `zᵀ m z < 0` (beyond `tol`
    /// relative to the norm of `m` for floating types), or `None` when `m`
    /// is positive semidefinite.
    fn negative_direction(m: &Matrix<Self>, tol: f64) -> Option<Vec<Self>>;
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_negative_hint(&self) -> bool {
        self.is_negative()
    }
    fn coeff_text(&self) -> String {
        self.to_string()
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_negative_hint(&self) -> bool {
        self.is_negative()
    }
    fn coeff_text(&self) -> String {
        self.to_string()
    }
}

impl Field for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn negative_direction(m: &Matrix<Self>, _tol: f64) -> Option<Vec<Self>> {
        crate::inertia::exact_negative_direction(m)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn is_negative_hint(&self) -> bool {
                *self < 0.0
            }
            fn coeff_text(&self) -> String {
                self.to_string()
            }
        }

        impl Field for $t {}

        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_rational(r: &BigRational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn rank_of(m: &Matrix<Self>) -> usize {
                let a = to_dmatrix(m);
                let norm = a.norm();
                if norm == 0.0 {
                    return 0;
                }
                let sv = a.svd(false, false).singular_values;
                sv.iter().filter(|s| **s > 1e-10 * norm).count()
            }

            fn null_space_of(m: &Matrix<Self>) -> Matrix<Self> {
                let a = to_dmatrix(m);
                float_null_space(&a, m.cols())
            }

            fn negative_direction(m: &Matrix<Self>, tol: f64) -> Option<Vec<Self>> {
                let a = to_dmatrix(m);
                let norm = a.norm();
                if a.nrows() == 0 {
                    return None;
                }
                let eig = SymmetricEigen::new(a);
                let (idx, min) = eig
                    .eigenvalues
                    .iter()
                    .copied()
                    .enumerate()
                    .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
                if min < -tol * norm {
                    Some(eig.eigenvectors.column(idx).iter().map(|v| *v as $t).collect())
                } else {
                    None
                }
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

fn to_dmatrix<S: Scalar>(m: &Matrix<S>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].to_f64_lossy())
}

fn float_null_space<S: Scalar>(a: &DMatrix<f64>, cols: usize) -> Matrix<S> {
    if a.nrows() == 0 {
        return Matrix::identity(cols);
    }
    // Gram matrix keeps the eigenproblem square whatever the shape of `a`.
    let gram = a.transpose() * a;
    let norm = gram.norm();
    let eig = SymmetricEigen::new(gram);
    let basis: Vec<usize> = (0..cols)
        .filter(|&i| eig.eigenvalues[i].abs() <= 1e-10 * norm.max(f64::MIN_POSITIVE))
        .collect();
    Matrix::from_fn(cols, basis.len(), |r, c| {
        S::from_f64(eig.eigenvectors[(r, basis[c])]).unwrap_or_else(S::zero)
    })
}

/// Shorthand for an exact rational constant.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::from_ratio(num, den)
}
