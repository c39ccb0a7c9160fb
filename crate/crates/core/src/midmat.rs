//! Middle matrices of Hessians.
//!
//! For symmetric `p` of degree `d >= 2`, `p''(x)[h] = V(x)[h]ᵀ Z(x) V(x)[h]`
//! with `V = col(V_0, .., V_{d-2})`. Each word of `p''` factors uniquely as
//! `a h_i z h_j b`; its coefficient times `z` lands in block `(|a|, |b|)`
//! at row `idx(a) g + i` and column `idx(reverse b) g + j`.

use crate::error::{NcError, Result};
use crate::freealg::NcPoly;
use crate::kronops::{
    geometric_sum, monomials, monomials_transposed, pow, reversal_permutation,
    stacked_border, word_index,
};
use crate::kronops::polymat::{self, PolyMatrix};
use crate::matrix::Matrix;
use crate::ncderiv::{directional_derivative, hessian};
use crate::report::CheckReport;
use crate::scalar::{Field, Ring};

fn block_offsets(g: usize, last: usize) -> Vec<usize> {
    let mut offs = vec![0];
    for j in 0..=last {
        offs.push(offs[j] + pow(g, j + 1));
    }
    offs
}

#[derive(Clone, Debug, PartialEq)]
pub struct MiddleMatrix<S: Ring> {
    g: usize,
    d: usize,
    offsets: Vec<usize>,
    z: PolyMatrix<S>,
}

/// Checks the common preconditions and returns the degree.
fn symmetric_degree<S: Ring>(p: &NcPoly<S>, min: usize) -> Result<usize> {
    p.require_x_only()?;
    if !p.is_symmetric() {
        return Err(NcError::NotSymmetric);
    }
    let d = p.degree().unwrap_or(0);
    if d < min {
        return Err(NcError::DegreeTooLow { got: d, need: min });
    }
    Ok(d)
}

impl<S: Ring> MiddleMatrix<S> {
    pub fn build(p: &NcPoly<S>) -> Result<Self> {
        let d = symmetric_degree(p, 2)?;
        let g = p.g();
        let offsets = block_offsets(g, d - 2);
        let size = *offsets.last().unwrap();
        let mut z: PolyMatrix<S> = Matrix::from_fn(size, size, |_, _| NcPoly::zero_in(g));
        let hess = hessian(p)?;
        for (w, c) in hess.terms() {
            let hs: Vec<usize> = (0..w.len()).filter(|&k| w.letters()[k].is_h()).collect();
            let [first, second] = hs[..] else {
                return Err(NcError::Internal(format!("Hessian word {w} lacks two h letters")));
            };
            let a = w.slice(0, first);
            let mid = w.slice(first + 1, second);
            let b = w.slice(second + 1, w.len());
            let (i, j) = (w.letters()[first].index(), w.letters()[second].index());
            let row = offsets[a.len()] + word_index(&a, g) * g + i;
            let col = offsets[b.len()] + word_index(&b.reversed(), g) * g + j;
            let entry = z[(row, col)].clone() + NcPoly::monomial(g, mid, c.clone());
            z[(row, col)] = entry;
        }
        Ok(MiddleMatrix { g, d, offsets, z })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Number of block rows, `d - 1`.
    pub fn num_blocks(&self) -> usize {
        self.d - 1
    }

    pub fn size(&self) -> usize {
        self.z.rows()
    }

    pub fn full(&self) -> &PolyMatrix<S> {
        &self.z
    }

    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn block(&self, i: usize, j: usize) -> PolyMatrix<S> {
        let (r, c) = (self.block_range(i), self.block_range(j));
        self.z.block(r.start, c.start, r.len(), c.len())
    }

    /// The scalar middle matrix `Z(0)`.
    pub fn scalar(&self) -> Matrix<S> {
        polymat::at_zero(&self.z)
    }

    pub fn scalar_block(&self, i: usize, j: usize) -> Matrix<S> {
        polymat::at_zero(&self.block(i, j))
    }

    /// `Vᵀ Z V`, summed over the nonzero entries only.
    pub fn reconstruct(&self) -> NcPoly<S> {
        let v = stacked_border::<S>(self.g, self.d - 2);
        let vt: Vec<NcPoly<S>> = v.iter().map(NcPoly::involution).collect();
        let mut out = NcPoly::zero_in(self.g);
        for r in 0..self.size() {
            for c in 0..self.size() {
                let e = &self.z[(r, c)];
                if !e.is_zero() {
                    out = out + &(&vt[r] * e) * &v[c];
                }
            }
        }
        out
    }

    /// Structural conditions on the blocks: star symmetry, vanishing below
    /// the anti-diagonal, entry degrees at most `d - 2 - (i + j)`.
    pub fn structure_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !polymat::is_star_symmetric(&self.z) {
            out.push("Z is not symmetric under the involution".into());
        }
        let last = self.d - 2;
        for i in 0..=last {
            for j in 0..=last {
                let b = self.block(i, j);
                for e in b.data() {
                    match e.degree() {
                        None => {}
                        Some(_) if i + j > last => out.push(format!("block ({i},{j}) should vanish")),
                        Some(k) if k > last - (i + j) => {
                            out.push(format!("block ({i},{j}) has an entry of degree {k}"))
                        }
                        _ => {}
                    }
                }
            }
        }
        out
    }
}

impl<S: Field> MiddleMatrix<S> {
    /// `½ [x]_{i+1} 𝒵_ij ([x]_{j+1})ᵀ`, the homogeneous part of degree
    /// `i + j + 2` read off one block.
    pub fn recover_from_block(&self, i: usize, j: usize) -> NcPoly<S> {
        let g = self.g;
        let left = monomials::<S>(g, i + 1);
        let right = monomials_transposed::<S>(g, j + 1);
        let blk = self.scalar_block(i, j);
        let half = S::from_ratio(1, 2);
        let mut out = NcPoly::zero_in(g);
        for r in 0..blk.rows() {
            for c in 0..blk.cols() {
                if !blk[(r, c)].is_zero() {
                    out = out + (&left[r] * &right[c]).scale(&(half.clone() * blk[(r, c)].clone()));
                }
            }
        }
        out
    }

    /// Homogeneous parts `p_0 .. p_d`, degrees `>= 2` recovered through the
    /// blocks `(0, k - 2)`; lower parts are zero here since the Hessian
    /// does not see them.
    pub fn recover_homogeneous(&self) -> Vec<NcPoly<S>> {
        let mut parts = vec![NcPoly::zero_in(self.g), NcPoly::zero_in(self.g)];
        for k in 2..=self.d {
            parts.push(self.recover_from_block(0, k - 2));
        }
        parts
    }
}

/// The coefficient columns `ψ_s` with `p'(x)[h] = Σ_s ψ_sᵀ V_s`.
pub fn gradient_coefficients<S: Ring>(p: &NcPoly<S>) -> Result<Vec<Vec<NcPoly<S>>>> {
    p.require_x_only()?;
    let g = p.g();
    let d = p.degree().unwrap_or(0);
    let mut psi: Vec<Vec<NcPoly<S>>> =
        (0..d).map(|s| vec![NcPoly::zero_in(g); pow(g, s + 1)]).collect();
    for (w, c) in directional_derivative(p)?.terms() {
        let pos = w
            .letters()
            .iter()
            .position(|l| l.is_h())
            .ok_or_else(|| NcError::Internal("derivative word without h".into()))?;
        let a = w.slice(0, pos);
        let b = w.slice(pos + 1, w.len());
        let s = b.len();
        let k = word_index(&b.reversed(), g) * g + w.letters()[pos].index();
        psi[s][k] = psi[s][k].clone() + NcPoly::monomial(g, a.reversed(), c.clone());
    }
    Ok(psi)
}

/// `W = [ψ_i ψ_jᵀ]`, so that `Ṽᵀ W Ṽ = p'(x)[h]ᵀ p'(x)[h]`.
pub fn build_w<S: Ring>(p: &NcPoly<S>) -> Result<PolyMatrix<S>> {
    let psi = gradient_coefficients(p)?;
    let col: Vec<NcPoly<S>> = psi.into_iter().flatten().collect();
    let n = col.len();
    Ok(Matrix::from_fn(n, n, |r, c| &col[r] * &col[c].involution()))
}

/// `Ṽᵀ M Ṽ` for a polynomial matrix over the border `col(V_0 .. V_{k})`.
pub fn sandwich<S: Ring>(m: &PolyMatrix<S>, g: usize) -> Result<NcPoly<S>> {
    let mut k = 0;
    while geometric_sum(g, k) * g < m.rows() {
        k += 1;
    }
    if geometric_sum(g, k) * g != m.rows() || !m.is_square() {
        return Err(NcError::Dimension(format!("{} is not a border height", m.rows())));
    }
    let v = stacked_border::<S>(g, k);
    let mut out = NcPoly::zero_in(g);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() {
                out = out + &(&v[r].involution() * &m[(r, c)]) * &v[c];
            }
        }
    }
    Ok(out)
}

/// `diag(𝒵, λ ψ_{d-1}(0) ψ_{d-1}(0)ᵀ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModifiedScalarMiddle<S> {
    pub base: Matrix<S>,
    pub tail: Vec<S>,
    pub lambda: S,
}

impl<S: Ring> ModifiedScalarMiddle<S> {
    pub fn assemble(&self) -> Matrix<S> {
        let t = Matrix::column(&self.tail);
        let outer = t.mul(&t.transpose()).scale(&self.lambda);
        self.base.direct_sum(&outer)
    }
}

pub fn modified_scalar_middle<S: Ring>(p: &NcPoly<S>, lambda: S) -> Result<ModifiedScalarMiddle<S>> {
    let d = symmetric_degree(p, 1)?;
    let base = if d >= 2 { MiddleMatrix::build(p)?.scalar() } else { Matrix::zeros(0, 0) };
    let psi = gradient_coefficients(p)?;
    let last = &psi[d - 1];
    if last.iter().any(|e| !e.is_constant()) {
        return Err(NcError::Internal("top gradient coefficient is not constant".into()));
    }
    let tail: Vec<S> = last.iter().map(NcPoly::constant_term).collect();
    if tail.iter().all(|t| t.is_zero()) {
        return Err(NcError::Internal("top gradient coefficient vanishes".into()));
    }
    Ok(ModifiedScalarMiddle { base, tail, lambda })
}

/// `K_j(x) = Π_{j+1} ([x-col] ⊗ I_{g^{j+1}}) Π_j`.
fn shift_matrix<S: Ring>(g: usize, j: usize) -> PolyMatrix<S> {
    let xcol = polymat::column(monomials::<S>(g, 1));
    let mid = xcol.kron(&Matrix::identity(pow(g, j + 1)));
    let left = reversal_permutation(g, j + 1).matrix::<NcPoly<S>>();
    let right = reversal_permutation(g, j).matrix::<NcPoly<S>>();
    polymat::with_g(&left.mul(&mid).mul(&right), g)
}

/// `Z_{0i}(x) = Σ_{l >= i} 𝒵_{0l} K_{l-1} .. K_i` for every `i`.
pub fn verify_shift_chain<S: Ring>(p: &NcPoly<S>) -> Result<CheckReport> {
    let mm = MiddleMatrix::build(p)?;
    let g = mm.g;
    let last = mm.d - 2;
    let shifts: Vec<PolyMatrix<S>> = (0..last).map(|j| shift_matrix::<S>(g, j)).collect();
    for i in 0..=last {
        let target = polymat::with_g(&mm.block(0, i), g);
        let mut sum = polymat::with_g(&polymat::constant(&mm.scalar_block(0, i), g), g);
        let mut chain: PolyMatrix<S> = polymat::with_g(&Matrix::identity(pow(g, i + 1)), g);
        for l in i + 1..=last {
            chain = shifts[l - 1].mul(&chain);
            let term = polymat::constant(&mm.scalar_block(0, l), g).mul(&chain);
            sum = sum.add(&term);
        }
        if sum != target {
            return Ok(CheckReport::new(
                "shift-chain expansion of Z_0i",
                false,
                format!("block (0,{i}) differs"),
            ));
        }
    }
    Ok(CheckReport::new("shift-chain expansion of Z_0i", true, format!("{} blocks", last + 1)))
}

/// Relations between the gradient coefficients and the first block row.
pub fn verify_gradient_relations<S: Field>(p: &NcPoly<S>) -> Result<Vec<CheckReport>> {
    let mm = MiddleMatrix::build(p)?;
    let (g, d) = (mm.g, mm.d);
    let last = d - 2;
    let psi = gradient_coefficients(p)?;
    let half = S::from_ratio(1, 2);
    let xrow = polymat::row(monomials::<S>(g, 1));
    let mut out = Vec::new();

    let mut ok = true;
    for (s, col) in psi.iter().enumerate() {
        let lhs: Vec<NcPoly<S>> = col.iter().map(NcPoly::involution).collect();
        let z0s = if s <= last { mm.block(0, s) } else { Matrix::from_fn(g, pow(g, s + 1), |_, _| NcPoly::zero_in(g)) };
        let first = xrow.mul(&z0s).scale(&NcPoly::constant(g, half.clone()));
        let rhs: Vec<NcPoly<S>> =
            (0..col.len()).map(|k| first[(0, k)].clone() + NcPoly::constant(g, col[k].constant_term())).collect();
        ok &= lhs == rhs;
    }
    out.push(CheckReport::new("gradient coefficients from first block row", ok, format!("s = 0..{}", d - 1)));

    let vanish = psi[..=last].iter().all(|c| c.iter().all(|e| e.constant_term().is_zero()));
    if vanish {
        let quarter = S::from_ratio(1, 4);
        let xcol = polymat::column(monomials::<S>(g, 1));
        let q = xcol.mul(&xrow).scale(&NcPoly::constant(g, quarter));
        let mut ok = true;
        for i in 0..=last {
            for j in 0..=last {
                let w = Matrix::from_fn(psi[i].len(), psi[j].len(), |r, c| &psi[i][r] * &psi[j][c].involution());
                let rhs = mm.block(i, 0).mul(&q).mul(&mm.block(0, j));
                ok &= polymat::with_g(&w, g) == polymat::with_g(&rhs, g);
            }
        }
        out.push(CheckReport::new("W blocks factor through Z_i0 Q Z_0j", ok, ""));
    } else {
        out.push(CheckReport::skipped("W blocks factor through Z_i0 Q Z_0j", "some ψ_j(0) is nonzero"));
    }

    let no_low = p.homogeneous_part(1).is_zero() && p.homogeneous_part(d - 1).is_zero();
    if no_low {
        let zero0 = psi[0].iter().all(|e| e.constant_term().is_zero());
        let zerol = psi[last].iter().all(|e| e.constant_term().is_zero());
        out.push(CheckReport::new(
            "ψ_0(0) and ψ_(d-2)(0) vanish",
            zero0 && zerol,
            format!("ψ_0(0) zero: {zero0}, ψ_(d-2)(0) zero: {zerol}"),
        ));
    } else {
        out.push(CheckReport::skipped("ψ_0(0) and ψ_(d-2)(0) vanish", "p has terms of degree 1 or d-1"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse;
    use crate::scalar::rat;
    use num_rational::BigRational;
use num_traits::Zero;

    type Q = BigRational;

    fn q(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn fourth_power_middle_matrix() {
        let p = parse("x1^4", 1).unwrap();
        let mm = MiddleMatrix::build(&p).unwrap();
        assert_eq!(mm.scalar(), q(&[&[0, 0, 2], &[0, 2, 0], &[2, 0, 0]]));
        let expect = [["2x1^2", "2x1", "2"], ["2x1", "2", "0"], ["2", "0", "0"]];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(mm.full()[(r, c)], parse(expect[r][c], 1).unwrap());
            }
        }
        assert_eq!(mm.reconstruct(), hessian(&p).unwrap());
        assert!(mm.structure_violations().is_empty());
    }

    #[test]
    fn palindrome_middle_matrix() {
        let p = parse("x1 x2 x1", 2).unwrap();
        let mm = MiddleMatrix::build(&p).unwrap();
        let z01 = mm.scalar_block(0, 1);
        let nonzero: Vec<_> = (0..2)
            .flat_map(|r| (0..4).map(move |c| (r, c)))
            .filter(|&(r, c)| !z01[(r, c)].is_zero())
            .collect();
        assert_eq!(nonzero, vec![(0, 1)]);
        assert_eq!(z01[(0, 1)], rat(2, 1));
        assert_eq!(mm.block(0, 0)[(0, 0)], parse("2x2", 2).unwrap());
        assert_eq!(mm.reconstruct(), hessian(&p).unwrap());
    }

    #[test]
    fn square_has_one_block() {
        let mm = MiddleMatrix::build(&parse("x1^2", 1).unwrap()).unwrap();
        assert_eq!(mm.scalar(), q(&[&[2]]));
    }

    #[test]
    fn preconditions() {
        assert_eq!(MiddleMatrix::build(&parse("x1 x2", 2).unwrap()), Err(NcError::NotSymmetric));
        assert_eq!(
            MiddleMatrix::build(&parse("x1 + 1", 1).unwrap()),
            Err(NcError::DegreeTooLow { got: 1, need: 2 })
        );
    }

    #[test]
    fn homogeneous_recovery() {
        let p = parse("x1^4", 1).unwrap();
        let mm = MiddleMatrix::build(&p).unwrap();
        assert_eq!(mm.recover_from_block(1, 1), p);
        assert_eq!(mm.recover_from_block(0, 2), p);
        assert_eq!(mm.recover_from_block(2, 0), p);
        let p = parse("x1 x2 x1", 2).unwrap();
        let mm = MiddleMatrix::build(&p).unwrap();
        assert_eq!(mm.recover_homogeneous()[3], p);
        assert!(mm.recover_homogeneous()[2].is_zero());
    }

    #[test]
    fn gradient_of_square() {
        let psi = gradient_coefficients(&parse("x1^2", 1).unwrap()).unwrap();
        assert_eq!(psi, vec![vec![parse("x1", 1).unwrap()], vec![parse("1", 1).unwrap()]]);
        let psi = gradient_coefficients(&parse("x1^4", 1).unwrap()).unwrap();
        assert_eq!(psi[3][0].constant_term(), rat(1, 1));
        let psi = gradient_coefficients(&parse("x1", 1).unwrap()).unwrap();
        assert_eq!(psi, vec![vec![parse("1", 1).unwrap()]]);
    }

    #[test]
    fn w_of_square() {
        let p = parse("x1^2", 1).unwrap();
        let w = build_w(&p).unwrap();
        let expect = [["x1^2", "x1"], ["x1", "1"]];
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(w[(r, c)], parse(expect[r][c], 1).unwrap());
            }
        }
        let d = directional_derivative(&p).unwrap();
        assert_eq!(sandwich(&w, 1).unwrap(), &d.involution() * &d);
        assert!(build_w(&parse("5", 1).unwrap()).unwrap().rows() == 0);
    }

    #[test]
    fn modified_middle_of_square() {
        let m = modified_scalar_middle(&parse("x1^2", 1).unwrap(), rat(1, 1)).unwrap();
        assert_eq!(m.assemble(), q(&[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn shift_chain_examples() {
        for s in ["x1^4", "x1^2", "x1 x2 x1 + x2^3 - 2 x1^2", "x1 x2 x2 x1 + x2 x1 x1 x2 + x1^3"] {
            let g = if s.contains("x2") { 2 } else { 1 };
            assert!(verify_shift_chain(&parse(s, g).unwrap()).unwrap().passed(), "{s}");
        }
    }

    #[test]
    fn gradient_relation_examples() {
        let r = verify_gradient_relations(&parse("x1^4", 1).unwrap()).unwrap();
        assert!(r.iter().all(|c| c.passed()), "{r:?}");
        let r = verify_gradient_relations(&parse("x1^2 + x1", 1).unwrap()).unwrap();
        assert!(r[0].passed());
        assert_eq!(r[2].outcome, crate::report::Outcome::Skipped);
    }
}
