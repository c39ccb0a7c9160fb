//! Words, noncommutative polynomials and matrix evaluation.
//!
//! The alphabet holds `g` symmetric letters `x1..xg` and, for derivatives,
//! `g` direction letters `h1..hg`. Letters are stored 0-based and printed
//! 1-based. All letters are symmetric, so the involution reverses words.

use std::cmp::Ordering;
use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{NcError, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Ring, Scalar};

const H_FLAG: u8 = 0x80;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterKind {
    X,
    H,
}

/// One letter packed into a byte: the low bits hold the index, the high bit
/// marks a direction letter, so `x` letters order before `h` letters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub const MAX_INDEX: usize = 127;

    pub fn x(index: usize) -> Self {
        assert!(index < Self::MAX_INDEX, "letter index {index} too large");
        Letter(index as u8)
    }

    pub fn h(index: usize) -> Self {
        assert!(index < Self::MAX_INDEX, "letter index {index} too large");
        Letter(index as u8 | H_FLAG)
    }

    pub fn new(kind: LetterKind, index: usize) -> Self {
        match kind {
            LetterKind::X => Self::x(index),
            LetterKind::H => Self::h(index),
        }
    }

    pub fn kind(self) -> LetterKind {
        if self.0 & H_FLAG == 0 {
            LetterKind::X
        } else {
            LetterKind::H
        }
    }

    pub fn is_x(self) -> bool {
        self.kind() == LetterKind::X
    }

    pub fn is_h(self) -> bool {
        self.kind() == LetterKind::H
    }

    /// 0-based index.
    pub fn index(self) -> usize {
        (self.0 & !H_FLAG) as usize
    }

    pub fn to_h(self) -> Self {
        Letter(self.0 | H_FLAG)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.is_x() { 'x' } else { 'h' };
        write!(f, "{c}{}", self.index() + 1)
    }
}

/// A monomial. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Word in `x` letters from 0-based indices.
    pub fn from_x_indices(idx: &[usize]) -> Self {
        Word(idx.iter().map(|&i| Letter::x(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        Word(self.0[start..end].to_vec())
    }

    pub fn count_h(&self) -> usize {
        self.0.iter().filter(|l| l.is_h()).count()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(|l| l.index()).max()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Finitely supported map from words to coefficients. Zero coefficients are
/// never stored.
///
/// `g == 0` marks a polynomial built without an ambient variable count (the
/// ring constants `0` and `1`); it combines with any `g`.
#[derive(Clone)]
pub struct NcPoly<S> {
    g: usize,
    terms: BTreeMap<Word, S>,
}

impl<S: Ring> PartialEq for NcPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        (self.g == other.g || self.g == 0 || other.g == 0) && self.terms == other.terms
    }
}

fn merge_g(a: usize, b: usize) -> Result<usize> {
    if a == b || b == 0 {
        Ok(a)
    } else if a == 0 {
        Ok(b)
    } else {
        Err(NcError::VariableCount(a, b))
    }
}

fn insert_term<S: Ring>(terms: &mut BTreeMap<Word, S>, w: Word, c: S) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let v = e.get().clone() + c;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl<S: Ring> NcPoly<S> {
    pub fn zero_in(g: usize) -> Self {
        NcPoly { g, terms: BTreeMap::new() }
    }

    pub fn one_in(g: usize) -> Self {
        Self::constant(g, S::one())
    }

    pub fn constant(g: usize, c: S) -> Self {
        Self::monomial(g, Word::empty(), c)
    }

    pub fn monomial(g: usize, w: Word, c: S) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, w, c);
        NcPoly { g, terms }
    }

    /// The variable `x_{i+1}`.
    pub fn x(g: usize, i: usize) -> Self {
        Self::monomial(g, Word::new(vec![Letter::x(i)]), S::one())
    }

    /// The direction variable `h_{i+1}`.
    pub fn h(g: usize, i: usize) -> Self {
        Self::monomial(g, Word::new(vec![Letter::h(i)]), S::one())
    }

    pub fn letter(g: usize, l: Letter) -> Self {
        Self::monomial(g, Word::new(vec![l]), S::one())
    }

    pub fn from_terms(g: usize, terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            insert_term(&mut map, w, c);
        }
        NcPoly { g, terms: map }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn with_g(mut self, g: usize) -> Self {
        self.g = g;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&Word::empty())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn uses_h(&self) -> bool {
        self.terms.keys().any(|w| w.count_h() > 0)
    }

    pub fn require_x_only(&self) -> Result<()> {
        if self.uses_h() {
            Err(NcError::DirectionLetters)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let g = merge_g(self.g, other.g)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            insert_term(&mut terms, w.clone(), c.clone());
        }
        Ok(NcPoly { g, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let g = merge_g(self.g, other.g)?;
        let mut terms = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                insert_term(&mut terms, wa.concat(wb), ca.clone() * cb.clone());
            }
        }
        Ok(NcPoly { g, terms })
    }

    fn neg_ref(&self) -> Self {
        NcPoly { g: self.g, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_terms(self.g, self.terms.iter().map(|(w, c)| (w.clone(), s.clone() * c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one_in(self.g);
        for _ in 0..k {
            out = out * self.clone();
        }
        out
    }

    /// Reverses every word.
    pub fn involution(&self) -> Self {
        NcPoly {
            g: self.g,
            terms: self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(w, c)| self.terms.get(&w.reversed()) == Some(c))
    }

    pub fn homogeneous_part(&self, k: usize) -> Self {
        NcPoly {
            g: self.g,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Parts of degree `0..=degree`; empty for the zero polynomial.
    pub fn homogeneous_parts(&self) -> Vec<Self> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.homogeneous_part(k)).collect(),
        }
    }

    /// Keeps the terms without `x` letters, i.e. sets every `x_j` to zero.
    pub fn at_x_zero(&self) -> Self {
        NcPoly {
            g: self.g,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.letters().iter().all(|l| l.is_h()))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&Word) -> bool) -> Self {
        NcPoly {
            g: self.g,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> NcPoly<T> {
        NcPoly::from_terms(self.g, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Replaces every letter by a polynomial and expands.
    pub fn substitute(&self, image: impl Fn(Letter) -> NcPoly<S>) -> Self {
        let mut cache: BTreeMap<Letter, NcPoly<S>> = BTreeMap::new();
        let mut out = Self::zero_in(self.g);
        for (w, c) in &self.terms {
            let mut t = Self::constant(self.g, c.clone());
            for &l in w.letters() {
                let img = cache.entry(l).or_insert_with(|| image(l));
                t = t * img.clone();
            }
            out = out + t;
        }
        out
    }

    /// Evaluates at matrices over the coefficient ring. The constant term
    /// becomes a multiple of the identity.
    pub fn evaluate_in(&self, xs: &[Matrix<S>], hs: Option<&[Matrix<S>]>) -> Result<Matrix<S>> {
        let n = xs.first().map(Matrix::rows).ok_or_else(|| {
            NcError::Dimension("evaluation needs at least one matrix".into())
        })?;
        let check = |ms: &[Matrix<S>]| -> Result<()> {
            if ms.len() < self.g {
                return Err(NcError::Dimension(format!(
                    "{} matrices supplied for {} variables",
                    ms.len(),
                    self.g
                )));
            }
            if ms.iter().any(|m| m.shape() != (n, n)) {
                return Err(NcError::Dimension("matrices of unequal size".into()));
            }
            Ok(())
        };
        check(xs)?;
        if let Some(hs) = hs {
            check(hs)?;
        } else if self.uses_h() {
            return Err(NcError::MissingDirection);
        }
        let mut acc = Matrix::zeros(n, n);
        for (w, c) in &self.terms {
            let mut prod: Option<Matrix<S>> = None;
            for &l in w.letters() {
                let m = match l.kind() {
                    LetterKind::X => xs.get(l.index()),
                    LetterKind::H => hs.and_then(|h| h.get(l.index())),
                }
                .ok_or(NcError::IndexOutOfRange { index: l.index() + 1, g: xs.len() })?;
                prod = Some(match prod {
                    None => m.clone(),
                    Some(p) => p.mul(m),
                });
            }
            let term = match prod {
                None => Matrix::identity(n).scale(c),
                Some(p) => p.scale(c),
            };
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl<S: Field> NcPoly<S> {
    /// Replaces each `x_j` by `sum_k m[j,k] x_k`; direction letters are kept.
    pub fn substitute_linear(&self, m: &Matrix<S>) -> Result<Self> {
        if m.shape() != (self.g, self.g) {
            return Err(NcError::Dimension(format!(
                "substitution matrix is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                self.g,
                self.g
            )));
        }
        m.inverse()?;
        let g = self.g;
        Ok(self.substitute(|l| match l.kind() {
            LetterKind::H => NcPoly::letter(g, l),
            LetterKind::X => NcPoly::from_terms(
                g,
                (0..g).map(|k| (Word::new(vec![Letter::x(k)]), m[(l.index(), k)].clone())),
            ),
        }))
    }
}

impl<S: Scalar> NcPoly<S> {
    pub fn evaluate(&self, xs: &MatrixTuple<S>, hs: Option<&MatrixTuple<S>>) -> Result<Matrix<S>> {
        if let Some(h) = hs {
            if h.n() != xs.n() {
                return Err(NcError::Dimension("x and h tuples differ in size".into()));
            }
        }
        self.evaluate_in(xs.matrices(), hs.map(MatrixTuple::matrices))
    }
}

impl<S: Ring> fmt::Debug for NcPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::ncparse::print(self))
    }
}

impl<S: Ring> fmt::Display for NcPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::ncparse::print(self))
    }
}

impl<S: Ring> Add for NcPoly<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let g = merge_g(self.g, rhs.g).expect("variable count mismatch in sum");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        for (w, c) in small.terms {
            insert_term(&mut big.terms, w, c);
        }
        big.g = g;
        big
    }
}

impl<S: Ring> Sub for NcPoly<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Ring> Neg for NcPoly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<S: Ring> Mul for NcPoly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("variable count mismatch in product")
    }
}

impl<'a, S: Ring> Add<&'a NcPoly<S>> for &'a NcPoly<S> {
    type Output = NcPoly<S>;
    fn add(self, rhs: &NcPoly<S>) -> NcPoly<S> {
        self.try_add(rhs).expect("variable count mismatch in sum")
    }
}

impl<'a, S: Ring> Sub<&'a NcPoly<S>> for &'a NcPoly<S> {
    type Output = NcPoly<S>;
    fn sub(self, rhs: &NcPoly<S>) -> NcPoly<S> {
        self.try_sub(rhs).expect("variable count mismatch in difference")
    }
}

impl<'a, S: Ring> Mul<&'a NcPoly<S>> for &'a NcPoly<S> {
    type Output = NcPoly<S>;
    fn mul(self, rhs: &NcPoly<S>) -> NcPoly<S> {
        self.try_mul(rhs).expect("variable count mismatch in product")
    }
}

impl<S: Ring> Zero for NcPoly<S> {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Ring> One for NcPoly<S> {
    fn one() -> Self {
        Self::one_in(0)
    }
}

impl<S: Ring> Ring for NcPoly<S> {
    fn from_i64(v: i64) -> Self {
        Self::constant(0, S::from_i64(v))
    }
}

/// `g` symmetric `n x n` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixTuple<S> {
    mats: Vec<Matrix<S>>,
}

impl<S: Scalar> MatrixTuple<S> {
    /// Exact inputs must be symmetric; floating inputs are symmetrized.
    pub fn new(mats: Vec<Matrix<S>>) -> Result<Self> {
        let n = mats.first().map_or(0, Matrix::rows);
        let mut out = Vec::with_capacity(mats.len());
        for m in mats {
            if m.shape() != (n, n) {
                return Err(NcError::Dimension("tuple matrices must share one square size".into()));
            }
            if S::EXACT {
                if !m.is_symmetric() {
                    return Err(NcError::NotSymmetric);
                }
                out.push(m);
            } else {
                let half = S::from_ratio(1, 2);
                out.push(m.add(&m.transpose()).scale(&half));
            }
        }
        Ok(MatrixTuple { mats: out })
    }

    pub fn zeros(g: usize, n: usize) -> Self {
        MatrixTuple { mats: vec![Matrix::zeros(n, n); g] }
    }

    pub fn g(&self) -> usize {
        self.mats.len()
    }

    pub fn n(&self) -> usize {
        self.mats.first().map_or(0, Matrix::rows)
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.mats
    }

    pub fn get(&self, i: usize) -> &Matrix<S> {
        &self.mats[i]
    }

    pub fn scale(&self, s: &S) -> Self {
        MatrixTuple { mats: self.mats.iter().map(|m| m.scale(s)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_rational::BigRational;

    type Q = BigRational;

    fn x(g: usize, i: usize) -> NcPoly<Q> {
        NcPoly::x(g, i)
    }

    #[test]
    fn product_is_noncommutative() {
        let a = x(2, 0) * x(2, 1);
        let b = x(2, 1) * x(2, 0);
        assert_ne!(a, b);
        assert_eq!(a.involution(), b);
    }

    #[test]
    fn difference_of_squares_expands_in_order() {
        let p = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
        let expect = NcPoly::from_terms(
            2,
            [
                (Word::from_x_indices(&[0, 0]), rat(1, 1)),
                (Word::from_x_indices(&[0, 1]), rat(-1, 1)),
                (Word::from_x_indices(&[1, 0]), rat(1, 1)),
                (Word::from_x_indices(&[1, 1]), rat(-1, 1)),
            ],
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = (x(2, 0) * x(2, 1) + x(2, 1)) + (-x(2, 1));
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn mismatched_variable_counts_rejected() {
        assert_eq!(x(2, 0).try_add(&x(3, 0)), Err(NcError::VariableCount(2, 3)));
        assert!(x(2, 0).try_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(NcPoly::<Q>::zero_in(2).degree(), None);
        assert_eq!(NcPoly::<Q>::one_in(2).degree(), Some(0));
    }

    #[test]
    fn homogeneous_parts_of_shifted_square() {
        let p = NcPoly::constant(1, rat(3, 1)) + x(1, 0) * x(1, 0);
        let parts = p.homogeneous_parts();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], NcPoly::constant(1, rat(3, 1)));
        assert!(parts[1].is_zero());
        assert_eq!(parts[2], x(1, 0) * x(1, 0));
        assert!(p.homogeneous_part(7).is_zero());
    }

    #[test]
    fn linear_substitution_direct_and_singular() {
        let m = Matrix::from_rows(&[vec![rat(1, 1), rat(0, 1)], vec![rat(1, 1), rat(1, 1)]]).unwrap();
        assert_eq!(x(2, 1).substitute_linear(&m).unwrap(), x(2, 0) + x(2, 1));
        let s = Matrix::from_rows(&[vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]]).unwrap();
        assert_eq!(x(2, 1).substitute_linear(&s), Err(NcError::Singular));
    }

    #[test]
    fn shifted_square_evaluates_with_identity() {
        let p = NcPoly::constant(1, rat(3, 1)) + x(1, 0) * x(1, 0);
        let xm = Matrix::from_rows(&[vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(0, 1)]]).unwrap();
        let t = MatrixTuple::new(vec![xm.clone()]).unwrap();
        let v = p.evaluate(&t, None).unwrap();
        assert_eq!(v, Matrix::identity(2).scale(&rat(3, 1)).add(&xm.mul(&xm)));
    }

    #[test]
    fn commutator_vanishes_on_diagonal_pair() {
        let p = x(2, 0) * x(2, 1) - x(2, 1) * x(2, 0);
        let a = Matrix::diagonal(&[rat(1, 1), rat(2, 1)]);
        let b = Matrix::diagonal(&[rat(-3, 1), rat(5, 7)]);
        let t = MatrixTuple::new(vec![a, b]).unwrap();
        assert!(p.evaluate(&t, None).unwrap().is_zero());
    }

    #[test]
    fn direction_letters_need_a_direction_tuple() {
        let p = NcPoly::<Q>::h(1, 0);
        let t = MatrixTuple::new(vec![Matrix::identity(2)]).unwrap();
        assert_eq!(p.evaluate(&t, None), Err(NcError::MissingDirection));
    }

    #[test]
    fn non_symmetric_exact_tuple_rejected() {
        let m = Matrix::from_rows(&[vec![rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(0, 1)]]).unwrap();
        assert_eq!(MatrixTuple::new(vec![m]), Err(NcError::NotSymmetric));
    }

    #[test]
    fn float_tuple_is_symmetrized() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let t = MatrixTuple::new(vec![m]).unwrap();
        assert_eq!(t.get(0)[(0, 1)], 0.5);
        assert_eq!(t.get(0)[(1, 0)], 0.5);
    }
}
