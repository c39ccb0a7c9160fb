//! Kronecker bookkeeping for words.
//!
//! A word of length `j` over `g` letters sits at the position it occupies in
//! the j-fold Kronecker product `[x1 .. xg] ⊗ .. ⊗ [x1 .. xg]`: the leftmost
//! letter is the most significant digit in base `g`. Direction letters use
//! the same digit as their `x` counterpart.

use crate::error::{NcError, Result};
use crate::freealg::{Letter, NcPoly, Word};
use crate::matrix::Matrix;
use crate::scalar::Ring;

pub fn pow(g: usize, j: usize) -> usize {
    g.checked_pow(j as u32).expect("Kronecker dimension overflows usize")
}

/// `1 + g + .. + g^k`.
pub fn geometric_sum(g: usize, k: usize) -> usize {
    (0..=k).map(|j| pow(g, j)).sum()
}

/// Kronecker position of a word.
pub fn word_index(w: &Word, g: usize) -> usize {
    w.letters().iter().fold(0, |acc, l| acc * g + l.index())
}

/// Letter indices of the word at position `idx` among words of length `len`.
pub fn index_digits(g: usize, len: usize, mut idx: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    for k in (0..len).rev() {
        digits[k] = idx % g;
        idx /= g;
    }
    digits
}

pub fn index_word(g: usize, len: usize, idx: usize) -> Word {
    Word::from_x_indices(&index_digits(g, len, idx))
}

/// A permutation of `0..n`; as a matrix it sends `v` to `w[k] = v[image[k]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || seen[i] {
                return Err(NcError::InvalidArgument("not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// `self ∘ other` as matrices: `(self * other) v`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation { image: self.image.iter().map(|&i| other.image[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (k, &i) in self.image.iter().enumerate() {
            inv[i] = k;
        }
        Permutation { image: inv }
    }

    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.image.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn matrix<S: Ring>(&self) -> Matrix<S> {
        let n = self.image.len();
        Matrix::from_fn(n, n, |r, c| if self.image[r] == c { S::one() } else { S::zero() })
    }
}

/// The permutation on words of length `j + 1` sending each position to the
/// position of the reversed word. It is an involution.
pub fn reversal_permutation(g: usize, j: usize) -> Permutation {
    let len = j + 1;
    let n = pow(g, len);
    let image = (0..n)
        .map(|k| {
            let mut d = index_digits(g, len, k);
            d.reverse();
            d.iter().fold(0, |acc, &x| acc * g + x)
        })
        .collect();
    Permutation { image }
}

/// Column stacking of a `g x n` matrix.
pub fn vec_of<S: Ring>(a: &Matrix<S>) -> Vec<S> {
    (0..a.cols()).flat_map(|c| a.col_vec(c)).collect()
}

/// Inverse of [`vec_of`] for matrices with `g` rows.
pub fn mat_g<S: Ring>(w: &[S], g: usize) -> Result<Matrix<S>> {
    if g == 0 || w.len() % g != 0 {
        return Err(NcError::Dimension(format!("length {} is not a multiple of {g}", w.len())));
    }
    let n = w.len() / g;
    Ok(Matrix::from_fn(g, n, |r, c| w[c * g + r].clone()))
}

/// Block transpose of a `g x (g*b)` matrix viewed as `g x g` blocks of
/// `1 x b` rows.
pub fn structured_transpose<S: Ring>(c: &Matrix<S>) -> Result<Matrix<S>> {
    let g = c.rows();
    if g == 0 || c.cols() % g != 0 {
        return Err(NcError::Dimension(format!(
            "a {}x{} matrix has no square block layout",
            c.rows(),
            c.cols()
        )));
    }
    let b = c.cols() / g;
    Ok(Matrix::from_fn(g, c.cols(), |i, col| {
        let (j, k) = (col / b, col % b);
        c[(j, i * b + k)].clone()
    }))
}

/// Entries of `[x1 .. xg]_j` (equivalently of the column version).
pub fn monomials<S: Ring>(g: usize, j: usize) -> Vec<NcPoly<S>> {
    (0..pow(g, j)).map(|k| NcPoly::monomial(g, index_word(g, j, k), S::one())).collect()
}

/// Entries of `([x1 .. xg]_j)^T`: the monomials with each word reversed.
pub fn monomials_transposed<S: Ring>(g: usize, j: usize) -> Vec<NcPoly<S>> {
    monomials::<S>(g, j).iter().map(NcPoly::involution).collect()
}

/// The border column `V_j(x)[h]`: position `idx(m) * g + i` holds
/// `h_i * reverse(m)` for words `m` of length `j`.
pub fn border_vector<S: Ring>(g: usize, j: usize) -> Vec<NcPoly<S>> {
    let mut out = Vec::with_capacity(pow(g, j + 1));
    for k in 0..pow(g, j) {
        let m = index_word(g, j, k).reversed();
        for i in 0..g {
            let w = Word::new(vec![Letter::h(i)]).concat(&m);
            out.push(NcPoly::monomial(g, w, S::one()));
        }
    }
    out
}

/// `V = col(V_0, .., V_upto)`.
pub fn stacked_border<S: Ring>(g: usize, upto: usize) -> Vec<NcPoly<S>> {
    (0..=upto).flat_map(|j| border_vector::<S>(g, j)).collect()
}

/// Polynomial-matrix helpers.
pub mod polymat {
    use super::*;
    use crate::scalar::Scalar;
    use crate::freealg::MatrixTuple;

    pub type PolyMatrix<S> = Matrix<NcPoly<S>>;

    pub fn column<S: Ring>(v: Vec<NcPoly<S>>) -> PolyMatrix<S> {
        Matrix::column(&v)
    }

    pub fn row<S: Ring>(v: Vec<NcPoly<S>>) -> PolyMatrix<S> {
        Matrix::row(&v)
    }

    /// Transpose combined with the involution on every entry.
    pub fn star<S: Ring>(m: &PolyMatrix<S>) -> PolyMatrix<S> {
        Matrix::from_fn(m.cols(), m.rows(), |r, c| m[(c, r)].involution())
    }

    pub fn constant<S: Ring>(m: &Matrix<S>, g: usize) -> PolyMatrix<S> {
        m.map(|c| NcPoly::constant(g, c.clone()))
    }

    /// Constant terms of every entry.
    pub fn at_zero<S: Ring>(m: &PolyMatrix<S>) -> Matrix<S> {
        m.map(|p| p.at_x_zero().constant_term())
    }

    pub fn is_star_symmetric<S: Ring>(m: &PolyMatrix<S>) -> bool {
        m.is_square() && *m == star(m)
    }

    /// Sets the ambient variable count of every entry.
    pub fn with_g<S: Ring>(m: &PolyMatrix<S>, g: usize) -> PolyMatrix<S> {
        m.map(|p| p.clone().with_g(g))
    }

    /// Evaluates entrywise at `X`, laying each `n x n` value in its block.
    pub fn evaluate<S: Scalar>(m: &PolyMatrix<S>, xs: &MatrixTuple<S>) -> Result<Matrix<S>> {
        let n = xs.n();
        let mut out = Matrix::zeros(m.rows() * n, m.cols() * n);
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m[(r, c)].is_zero() {
                    continue;
                }
                out.set_block(r * n, c * n, &m[(r, c)].evaluate(xs, None)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::polymat::*;
    use super::*;
    use crate::ncparse::{parse_with, ParseOptions};
    use crate::scalar::rat;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn reversal_on_pairs() {
        assert_eq!(reversal_permutation(2, 1).image(), &[0, 2, 1, 3]);
        for g in 1..=3 {
            assert!(reversal_permutation(g, 0).is_identity());
            for j in 0..=3 {
                let p = reversal_permutation(g, j);
                assert!(p.compose(&p).is_identity());
            }
        }
    }

    #[test]
    fn vec_and_mat_invert_each_other() {
        let id = Matrix::<Q>::identity(2);
        assert_eq!(vec_of(&id), vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);
        let a = Matrix::from_fn(2, 3, |r, c| rat((r * 3 + c) as i64, 1));
        assert_eq!(mat_g(&vec_of(&a), 2).unwrap(), a);
        assert!(mat_g(&vec![rat(1, 1); 3], 2).is_err());
    }

    #[test]
    fn structured_transpose_swaps_blocks() {
        // blocks c11 = [1 2], c12 = [3 4], c21 = [5 6], c22 = [7 8]
        let c = Matrix::from_fn(2, 4, |r, k| rat((r * 4 + k + 1) as i64, 1));
        let t = structured_transpose(&c).unwrap();
        let expect = Matrix::from_rows(&[
            vec![rat(1, 1), rat(2, 1), rat(5, 1), rat(6, 1)],
            vec![rat(3, 1), rat(4, 1), rat(7, 1), rat(8, 1)],
        ])
        .unwrap();
        assert_eq!(t, expect);
        assert_eq!(structured_transpose(&t).unwrap(), c);
        let same = Matrix::from_fn(2, 4, |_, k| rat((k % 2) as i64, 1));
        assert_eq!(structured_transpose(&same).unwrap(), same);
        assert!(structured_transpose(&Matrix::<Q>::zeros(2, 3)).is_err());
    }

    #[test]
    fn border_vector_listing() {
        let hp = |s: &str| parse_with(s, 2, ParseOptions { allow_h: true }).unwrap();
        let v1 = border_vector::<Q>(2, 1);
        assert_eq!(v1, vec![hp("h1x1"), hp("h2x1"), hp("h1x2"), hp("h2x2")]);
        let v = border_vector::<Q>(1, 2);
        assert_eq!(v, vec![parse_with("h1x1x1", 1, ParseOptions { allow_h: true }).unwrap()]);
    }

    #[test]
    fn border_transpose_is_row_kronecker() {
        for g in 1..=3 {
            for j in 0..=3 {
                let v = border_vector::<Q>(g, j);
                let xs = monomials::<Q>(g, j);
                let hs: Vec<NcPoly<Q>> = (0..g).map(|i| NcPoly::h(g, i)).collect();
                let mut kron = Vec::new();
                for m in &xs {
                    for h in &hs {
                        kron.push(m * h);
                    }
                }
                let vt: Vec<NcPoly<Q>> = v.iter().map(NcPoly::involution).collect();
                assert_eq!(vt, kron, "g={g} j={j}");
            }
        }
    }

    #[test]
    fn permuted_border_is_column_kronecker() {
        for g in 1..=3 {
            for j in 1..=3 {
                let pv = reversal_permutation(g, j).apply(&border_vector::<Q>(g, j));
                let hcol = Matrix::column(&(0..g).map(|i| NcPoly::<Q>::h(g, i)).collect::<Vec<_>>());
                let rhs = hcol.kron(&Matrix::identity(pow(g, j))).mul(&column(monomials(g, j)));
                assert_eq!(pv, rhs.col_vec(0));
            }
        }
    }

    #[test]
    fn star_of_product() {
        let m = Matrix::from_fn(2, 2, |r, c| monomials::<Q>(2, 2)[(r + 2 * c + 1) % 4].clone());
        assert!(!is_star_symmetric(&m));
        assert_eq!(star(&star(&m)), m);
    }
}
