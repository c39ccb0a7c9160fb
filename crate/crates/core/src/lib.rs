//! Noncommutative polynomial calculus in symmetric variables: derivatives,
//! Hessian middle matrices, exact signatures, the structure of polynomials
//! whose Hessian has at most one negative square, and pointwise positivity
//! tests for modified and relaxed Hessians.
//!
//! Most items are generic over the coefficient type. Exact work uses
//! [`Rational`]; the aliases below fix the common choices.

pub mod classify;
pub mod error;
pub mod freealg;
pub mod identities;
pub mod inertia;
pub mod kronops;
pub mod matrix;
pub mod midmat;
pub mod ncderiv;
pub mod ncparse;
pub mod positivity;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod symbolic;

pub use error::{NcError, Result};
pub use freealg::{Letter, LetterKind, MatrixTuple, NcPoly, Word};
pub use matrix::Matrix;
pub use report::{CheckReport, Outcome};
pub use scalar::{rat, Field, Ring, Scalar};
pub use symbolic::Sym;

pub type Rational = num_rational::BigRational;
pub type QPoly = NcPoly<Rational>;
pub type FPoly = NcPoly<f64>;
pub type QMatrix = Matrix<Rational>;
pub type FMatrix = Matrix<f64>;
pub type QTuple = MatrixTuple<Rational>;
pub type FTuple = MatrixTuple<f64>;
