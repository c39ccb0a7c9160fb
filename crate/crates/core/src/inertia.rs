//! Inertia of symmetric matrices, congruence certificates and
//! sum-and-difference-of-squares decompositions.

use serde::Serialize;

use crate::error::{NcError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

mod sds;

pub use sds::{
    gram_sds, min_signature_hessian, sds_from_hessian, HessianSignature, SdsDecomposition,
    WeightedSquare,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn size(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    pub fn is_psd(&self) -> bool {
        self.minus == 0
    }

    pub fn scaled(&self, n: usize) -> Inertia {
        Inertia { plus: self.plus * n, minus: self.minus * n, zero: self.zero * n }
    }
}

/// `transformᵀ · diag(diagonal) · transform` equals the input matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceCert<S> {
    pub transform: Matrix<S>,
    pub diagonal: Vec<S>,
    /// Row operations with `elimination · M · eliminationᵀ = diag`.
    pub elimination: Matrix<S>,
}

impl<S: Scalar> CongruenceCert<S> {
    pub fn reconstruct(&self) -> Matrix<S> {
        let d = Matrix::diagonal(&self.diagonal);
        self.transform.transpose().mul(&d).mul(&self.transform)
    }

    pub fn inertia(&self) -> Inertia {
        let mut out = Inertia::default();
        for d in &self.diagonal {
            if d.is_zero() {
                out.zero += 1;
            } else if d.is_positive() {
                out.plus += 1;
            } else {
                out.minus += 1;
            }
        }
        out
    }

    /// `z` with `zᵀ M z = diagonal[k]`.
    pub fn direction(&self, k: usize) -> Vec<S> {
        self.elimination.row_slice(k).to_vec()
    }

    pub fn negative_directions(&self) -> Vec<Vec<S>> {
        (0..self.diagonal.len())
            .filter(|&k| self.diagonal[k].is_negative())
            .map(|k| self.direction(k))
            .collect()
    }
}

fn swap_sym<S: Scalar>(a: &mut Matrix<S>, e: &mut Matrix<S>, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
    for c in 0..e.cols() {
        let t = e[(i, c)].clone();
        e[(i, c)] = e[(j, c)].clone();
        e[(j, c)] = t;
    }
}

/// Symmetric elimination `E M Eᵀ = D`. Pivots are the largest remaining
/// diagonal entries; when the remaining diagonal vanishes but an
/// off-diagonal entry does not, its column is added to the pivot column,
/// which splits the 2x2 block into two nonzero pivots.
fn symmetric_elimination<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<S>) {
    let n = m.rows();
    let mut a = m.clone();
    let mut e = Matrix::<S>::identity(n);
    let mut s = 0;
    while s < n {
        let best = (s..n)
            .filter(|&r| !a[(r, r)].is_zero())
            .max_by(|&i, &j| a[(i, i)].abs().partial_cmp(&a[(j, j)].abs()).unwrap());
        let pivot = match best {
            Some(r) => r,
            None => {
                let off = (s..n).find_map(|k| (k + 1..n).find(|&l| !a[(k, l)].is_zero()).map(|l| (k, l)));
                let Some((k, l)) = off else { break };
                // row/col l added to row/col k: a_kk becomes 2 a_kl
                for c in 0..n {
                    let v = a[(k, c)].clone() + a[(l, c)].clone();
                    a[(k, c)] = v;
                }
                for r in 0..n {
                    let v = a[(r, k)].clone() + a[(r, l)].clone();
                    a[(r, k)] = v;
                }
                for c in 0..n {
                    let v = e[(k, c)].clone() + e[(l, c)].clone();
                    e[(k, c)] = v;
                }
                k
            }
        };
        swap_sym(&mut a, &mut e, s, pivot);
        let p = a[(s, s)].clone();
        for i in s + 1..n {
            if a[(i, s)].is_zero() {
                continue;
            }
            let f = a[(i, s)].clone() / p.clone();
            for c in s..n {
                let v = a[(i, c)].clone() - f.clone() * a[(s, c)].clone();
                a[(i, c)] = v;
            }
            for r in s..n {
                let v = a[(r, i)].clone() - f.clone() * a[(r, s)].clone();
                a[(r, i)] = v;
            }
            for c in 0..n {
                let v = e[(i, c)].clone() - f.clone() * e[(s, c)].clone();
                e[(i, c)] = v;
            }
        }
        s += 1;
    }
    let d = (0..n).map(|i| a[(i, i)].clone()).collect();
    (e, d)
}

/// Inertia by congruence, with a certificate. Zero tests are exact, so this
/// is meant for exact scalars.
pub fn exact_inertia<S: Scalar>(m: &Matrix<S>) -> Result<(Inertia, CongruenceCert<S>)> {
    if !m.is_symmetric() {
        return Err(NcError::NotSymmetric);
    }
    let (e, d) = symmetric_elimination(m);
    let transform = e.transpose().inverse().map_err(|_| {
        NcError::Internal("elimination matrix lost invertibility".into())
    })?;
    let cert = CongruenceCert { transform, diagonal: d, elimination: e };
    Ok((cert.inertia(), cert))
}

/// Inertia for any scalar: congruence for exact types, eigenvalues with a
/// relative tolerance for floating types.
pub fn inertia_of<S: Scalar>(m: &Matrix<S>, tol: f64) -> Result<Inertia> {
    if S::EXACT {
        return exact_inertia(m).map(|(i, _)| i);
    }
    if !m.is_square() {
        return Err(NcError::Dimension("inertia of a non-square matrix".into()));
    }
    let f = m.to_f64();
    let a = nalgebra::DMatrix::from_fn(f.rows(), f.cols(), |i, j| 0.5 * (f[(i, j)] + f[(j, i)]));
    let norm = a.norm();
    let eig = nalgebra::SymmetricEigen::new(a);
    let mut out = Inertia::default();
    for &v in eig.eigenvalues.iter() {
        if v > tol * norm {
            out.plus += 1;
        } else if v < -tol * norm {
            out.minus += 1;
        } else {
            out.zero += 1;
        }
    }
    Ok(out)
}

/// A vector `z` with `zᵀ M z < 0`, or `None` when `M` is positive
/// semidefinite. Exact.
pub fn exact_negative_direction<S: Scalar>(m: &Matrix<S>) -> Option<Vec<S>> {
    if m.rows() == 0 {
        return None;
    }
    let (e, d) = symmetric_elimination(m);
    d.iter().position(|x| x.is_negative()).map(|k| e.row_slice(k).to_vec())
}

pub fn is_psd_exact<S: Scalar>(m: &Matrix<S>) -> Result<bool> {
    exact_inertia(m).map(|(i, _)| i.is_psd())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn identity_is_positive() {
        let (i, c) = exact_inertia(&Matrix::<BigRational>::identity(3)).unwrap();
        assert_eq!(i, Inertia { plus: 3, minus: 0, zero: 0 });
        assert_eq!(c.reconstruct(), Matrix::identity(3));
    }

    #[test]
    fn hyperbolic_pair_uses_split_pivot() {
        let m = q(&[&[0, 2], &[2, 0]]);
        let (i, c) = exact_inertia(&m).unwrap();
        assert_eq!(i, Inertia { plus: 1, minus: 1, zero: 0 });
        assert_eq!(c.reconstruct(), m);
        let z = &c.negative_directions()[0];
        assert!(m.quadratic_form(z) < rat(0, 1));
    }

    #[test]
    fn anti_diagonal_middle_matrix() {
        let m = q(&[&[0, 0, 2], &[0, 2, 0], &[2, 0, 0]]);
        let (i, c) = exact_inertia(&m).unwrap();
        assert_eq!(i, Inertia { plus: 2, minus: 1, zero: 0 });
        assert_eq!(c.reconstruct(), m);
    }

    #[test]
    fn singular_matrix_counts_zeros() {
        let m = q(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]);
        let (i, c) = exact_inertia(&m).unwrap();
        assert_eq!(i, Inertia { plus: 1, minus: 0, zero: 2 });
        assert_eq!(c.reconstruct(), m);
    }

    #[test]
    fn nonsymmetric_rejected() {
        assert_eq!(exact_inertia(&q(&[&[0, 1], &[0, 0]])).unwrap_err(), NcError::NotSymmetric);
    }

    #[test]
    fn float_inertia_uses_eigenvalues() {
        let m = Matrix::from_rows(&[vec![0.0, 2.0], vec![2.0, 0.0]]).unwrap();
        assert_eq!(inertia_of(&m, 1e-9).unwrap(), Inertia { plus: 1, minus: 1, zero: 0 });
    }
}
