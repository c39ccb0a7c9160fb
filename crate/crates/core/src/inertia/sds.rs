use std::collections::BTreeMap;

use crate::error::{NcError, Result};
use crate::freealg::{NcPoly, Word};
use crate::kronops::polymat::PolyMatrix;
use crate::kronops::stacked_border;
use crate::matrix::Matrix;
use crate::midmat::MiddleMatrix;
use crate::ncderiv::hessian;
use crate::scalar::{Ring, Scalar};

use super::{exact_inertia, Inertia};

/// `weight * polyᵀ poly` with a positive weight.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSquare<S: Ring> {
    pub weight: S,
    pub poly: NcPoly<S>,
}

impl<S: Scalar> WeightedSquare<S> {
    pub fn expand(&self) -> NcPoly<S> {
        (&self.poly.involution() * &self.poly).scale(&self.weight)
    }
}

/// `Σ w⁺ (f⁺)ᵀ f⁺ − Σ w⁻ (f⁻)ᵀ f⁻`.
#[derive(Clone, Debug, PartialEq)]
pub struct SdsDecomposition<S: Ring> {
    pub plus: Vec<WeightedSquare<S>>,
    pub minus: Vec<WeightedSquare<S>>,
}

impl<S: Scalar> SdsDecomposition<S> {
    pub fn empty() -> Self {
        SdsDecomposition { plus: Vec::new(), minus: Vec::new() }
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.plus.len(), self.minus.len())
    }

    pub fn expand(&self, g: usize) -> NcPoly<S> {
        let mut out = NcPoly::zero_in(g);
        for s in &self.plus {
            out = out + s.expand();
        }
        for s in &self.minus {
            out = out - s.expand();
        }
        out
    }

    fn push(&mut self, weight: S, poly: NcPoly<S>) {
        if weight.is_negative() {
            self.minus.push(WeightedSquare { weight: -weight, poly });
        } else {
            self.plus.push(WeightedSquare { weight, poly });
        }
    }
}

/// Minimal numbers of positive and negative squares in an SDS of `p''`,
/// read off the scalar middle matrix. Polynomials of degree below two have
/// a zero Hessian; they report `(0, 0)` with `low_degree` set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HessianSignature {
    pub plus: usize,
    pub minus: usize,
    pub low_degree: bool,
}

pub fn min_signature_hessian<S: Scalar>(p: &NcPoly<S>) -> Result<HessianSignature> {
    p.require_x_only()?;
    if !p.is_symmetric() {
        return Err(NcError::NotSymmetric);
    }
    if p.degree().unwrap_or(0) < 2 {
        return Ok(HessianSignature { plus: 0, minus: 0, low_degree: true });
    }
    let (i, _) = exact_inertia(&MiddleMatrix::build(p)?.scalar())?;
    Ok(HessianSignature { plus: i.plus, minus: i.minus, low_degree: false })
}

/// Elimination on `Z(x)` using only constant pivots. A diagonal constant
/// pivot yields one square; a constant off-diagonal entry `c` facing a zero
/// diagonal entry yields a pair `c/2 (f+g)ᵀ(f+g) − c/2 (f−g)ᵀ(f−g)`.
struct Eliminator<S: Scalar> {
    a: PolyMatrix<S>,
    y: Vec<NcPoly<S>>,
    active: Vec<bool>,
    out: SdsDecomposition<S>,
    g: usize,
}

impl<S: Scalar> Eliminator<S> {
    fn constant_of(p: &NcPoly<S>) -> Option<S> {
        (p.is_constant() && !p.is_zero()).then(|| p.constant_term())
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.active.len()).filter(|&i| self.active[i]).collect()
    }

    fn diagonal_pivot(&self) -> Option<(usize, S)> {
        self.active_indices()
            .into_iter()
            .filter_map(|k| Self::constant_of(&self.a[(k, k)]).map(|c| (k, c)))
            .max_by(|x, y| x.1.abs().partial_cmp(&y.1.abs()).unwrap())
    }

    fn pair_pivot(&self) -> Option<(usize, usize, S)> {
        let idx = self.active_indices();
        for &l in &idx {
            if !self.a[(l, l)].is_zero() {
                continue;
            }
            for &k in &idx {
                if k != l {
                    if let Some(c) = Self::constant_of(&self.a[(k, l)]) {
                        return Some((k, l, c));
                    }
                }
            }
        }
        None
    }

    fn single(&mut self, k: usize, a: S) {
        let inv = NcPoly::constant(self.g, S::one() / a.clone());
        self.active[k] = false;
        let rest = self.active_indices();
        let mut f = self.y[k].clone();
        for &s in &rest {
            if !self.a[(k, s)].is_zero() {
                f = f + &(&inv * &self.a[(k, s)]) * &self.y[s];
            }
        }
        self.out.push(a, f);
        for &r in &rest {
            if self.a[(r, k)].is_zero() {
                continue;
            }
            let left = &self.a[(r, k)] * &inv;
            for &s in &rest {
                if !self.a[(k, s)].is_zero() {
                    let v = &self.a[(r, s)] - &(&left * &self.a[(k, s)]);
                    self.a[(r, s)] = v;
                }
            }
        }
    }

    fn pair(&mut self, k: usize, l: usize, c: S) {
        let g = self.g;
        let cinv = NcPoly::constant(g, S::one() / c.clone());
        let a = self.a[(k, k)].clone();
        let a_over = a.scale(&(S::one() / (c.clone() * c.clone())));
        self.active[k] = false;
        self.active[l] = false;
        let rest = self.active_indices();
        // rows of B⁻¹ C with B = [[a, c], [c, 0]]
        let mut top = BTreeMap::new();
        let mut bottom = BTreeMap::new();
        for &s in &rest {
            let (aks, als) = (&self.a[(k, s)], &self.a[(l, s)]);
            if aks.is_zero() && als.is_zero() {
                continue;
            }
            top.insert(s, &cinv * als);
            bottom.insert(s, &(&cinv * aks) - &(&a_over * als));
        }
        let mut fk = self.y[k].clone();
        let mut fl = self.y[l].clone();
        for (&s, t) in &top {
            fk = fk + t * &self.y[s];
        }
        for (&s, b) in &bottom {
            fl = fl + b * &self.y[s];
        }
        let half_c_inv = a.scale(&(S::one() / (c.clone() + c.clone())));
        let gvec = fl + &half_c_inv * &fk;
        let w = c.clone() / <S as Ring>::from_i64(2);
        self.out.push(w.clone(), &fk + &gvec);
        self.out.push(-w, &fk - &gvec);
        for &r in &rest {
            let (ark, arl) = (self.a[(r, k)].clone(), self.a[(r, l)].clone());
            if ark.is_zero() && arl.is_zero() {
                continue;
            }
            for &s in &rest {
                let mut delta = NcPoly::zero_in(g);
                if let Some(t) = top.get(&s) {
                    delta = delta + &ark * t;
                }
                if let Some(b) = bottom.get(&s) {
                    delta = delta + &arl * b;
                }
                if !delta.is_zero() {
                    let v = &self.a[(r, s)] - &delta;
                    self.a[(r, s)] = v;
                }
            }
        }
    }

    fn run(mut self) -> Result<SdsDecomposition<S>> {
        loop {
            if let Some((k, a)) = self.diagonal_pivot() {
                self.single(k, a);
            } else if let Some((k, l, c)) = self.pair_pivot() {
                self.pair(k, l, c);
            } else {
                let rest = self.active_indices();
                let stuck = rest.iter().any(|&r| rest.iter().any(|&s| !self.a[(r, s)].is_zero()));
                if stuck {
                    return Err(NcError::Internal("no constant pivot in the remaining middle matrix".into()));
                }
                return Ok(self.out);
            }
        }
    }
}

/// An SDS of `p''` with the minimal numbers of squares, built from the
/// middle matrix. The expansion and the counts are checked before return.
pub fn sds_from_hessian<S: Scalar>(p: &NcPoly<S>) -> Result<SdsDecomposition<S>> {
    let mm = MiddleMatrix::build(p)?;
    let g = p.g();
    let elim = Eliminator {
        a: mm.full().clone(),
        y: stacked_border::<S>(g, mm.degree() - 2),
        active: vec![true; mm.size()],
        out: SdsDecomposition::empty(),
        g,
    };
    let sds = elim.run()?;
    if sds.expand(g) != hessian(p)? {
        return Err(NcError::Internal("squares do not sum to the Hessian".into()));
    }
    let (i, _) = exact_inertia(&mm.scalar())?;
    if sds.counts() != (i.plus, i.minus) {
        return Err(NcError::Internal("square counts differ from the middle-matrix inertia".into()));
    }
    Ok(sds)
}

/// A valid, not necessarily minimal, SDS of a symmetric `p` from a Gram
/// matrix over half-length words. Each word `a b` with `|a| = ⌊|w|/2⌋` is
/// deposited at cell `(reverse a, b)`; the Gram matrix is then symmetrized.
pub fn gram_sds<S: Scalar>(p: &NcPoly<S>) -> Result<(SdsDecomposition<S>, Inertia)> {
    if !p.is_symmetric() {
        return Err(NcError::NotSymmetric);
    }
    let g = p.g();
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    let mut cells = Vec::new();
    for (w, c) in p.terms() {
        let cut = w.len() / 2;
        let left = w.slice(0, cut).reversed();
        let right = w.slice(cut, w.len());
        let n = index.len();
        let r = *index.entry(left).or_insert(n);
        let n = index.len();
        let col = *index.entry(right).or_insert(n);
        cells.push((r, col, c.clone()));
    }
    let n = index.len();
    let mut gram = Matrix::<S>::zeros(n, n);
    let half = S::from_ratio(1, 2);
    for (r, c, v) in cells {
        let h = half.clone() * v;
        gram[(r, c)] = gram[(r, c)].clone() + h.clone();
        gram[(c, r)] = gram[(c, r)].clone() + h;
    }
    let mut words = vec![Word::empty(); n];
    for (w, k) in index {
        words[k] = w;
    }
    let (inertia, cert) = exact_inertia(&gram)?;
    let mut out = SdsDecomposition::empty();
    for (k, d) in cert.diagonal.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        let f = NcPoly::from_terms(
            g,
            (0..n).map(|r| (words[r].clone(), cert.transform[(k, r)].clone())),
        );
        out.push(d.clone(), f);
    }
    if out.expand(g) != *p {
        return Err(NcError::Internal("Gram squares do not sum to the polynomial".into()));
    }
    Ok((out, inertia))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse;
    use crate::scalar::rat;

    #[test]
    fn square_hessian() {
        let p = parse("x1^2", 1).unwrap();
        let s = sds_from_hessian(&p).unwrap();
        assert_eq!(s.counts(), (1, 0));
        assert_eq!(s.plus[0].weight, rat(2, 1));
    }

    #[test]
    fn fourth_power_hessian_has_one_negative_square() {
        let p = parse("x1^4", 1).unwrap();
        assert_eq!(sds_from_hessian(&p).unwrap().counts(), (2, 1));
        let sig = min_signature_hessian(&p).unwrap();
        assert_eq!((sig.plus, sig.minus), (2, 1));
    }

    #[test]
    fn concave_square() {
        let p = parse("-x1^2", 1).unwrap();
        assert_eq!(sds_from_hessian(&p).unwrap().counts(), (0, 1));
    }

    #[test]
    fn sum_of_squares_signature() {
        let sig = min_signature_hessian(&parse("x1^2 + x2^2", 2).unwrap()).unwrap();
        assert_eq!((sig.plus, sig.minus), (2, 0));
        assert!(min_signature_hessian(&parse("x1", 1).unwrap()).unwrap().low_degree);
    }

    #[test]
    fn gram_examples() {
        let (s, _) = gram_sds(&parse("x1^2", 1).unwrap()).unwrap();
        assert_eq!(s.counts(), (1, 0));
        let (s, i) = gram_sds(&parse("x1 x2 + x2 x1", 2).unwrap()).unwrap();
        assert_eq!(s.counts(), (1, 1));
        assert_eq!(i, Inertia { plus: 1, minus: 1, zero: 0 });
        let (s, _) = gram_sds(&parse("0", 1).unwrap()).unwrap();
        assert_eq!(s.counts(), (0, 0));
    }
}
