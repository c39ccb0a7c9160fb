//! Seeded random inputs: small-integer matrices, tuples, symmetric
//! polynomials, generic points and polynomials with at most one negative
//! Hessian square.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{linear_poly, quadratic_poly, synthesize};
use crate::error::{NcError, Result};
use crate::freealg::{MatrixTuple, NcPoly, Word};
use crate::kronops::{index_word, pow};
use crate::matrix::Matrix;
use crate::positivity::monomials_independent;
use crate::scalar::rat;
use crate::{QMatrix, QPoly, QTuple, Rational};

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Entries are drawn from `-bound..=bound`.
    pub bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), bound: 3 }
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), bound: bound.max(1) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn nonzero_int(&mut self) -> i64 {
        loop {
            let k = self.int();
            if k != 0 {
                return k;
            }
        }
    }

    pub fn rational(&mut self) -> Rational {
        rat(self.int(), 1)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Rational> {
        loop {
            let v = self.vector(n);
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> QMatrix {
        Matrix::from_fn(rows, cols, |_, _| rat(self.rng.gen_range(-self.bound..=self.bound), 1))
    }

    pub fn symmetric(&mut self, n: usize) -> QMatrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let c = self.rational();
                m[(i, j)] = c.clone();
                m[(j, i)] = c;
            }
        }
        m
    }

    pub fn tuple(&mut self, g: usize, n: usize) -> QTuple {
        MatrixTuple::new((0..g).map(|_| self.symmetric(n)).collect()).expect("symmetric input")
    }

    /// `w + wᵀ` over random words, for every degree up to `degree`, with a
    /// nonzero top part.
    pub fn symmetric_poly(&mut self, g: usize, degree: usize) -> QPoly {
        loop {
            let mut p = NcPoly::zero_in(g);
            for k in 0..=degree {
                p = &p + &self.homogeneous_half(g, k);
            }
            let p = &p + &p.involution();
            if p.degree() == Some(degree) {
                return p;
            }
        }
    }

    /// `w + wᵀ` over `words` random words of length `≤ degree`, so at most
    /// `2 words` terms, with exact degree `degree`.
    pub fn sparse_symmetric(&mut self, g: usize, degree: usize, words: usize) -> QPoly {
        loop {
            let mut terms = Vec::with_capacity(words.max(1));
            for k in 0..words.max(1) {
                let len = if k == 0 { degree } else { self.rng.gen_range(0..=degree) };
                let idx = self.rng.gen_range(0..pow(g, len));
                terms.push((index_word(g, len, idx), rat(self.nonzero_int(), 1)));
            }
            let h = NcPoly::from_terms(g, terms);
            let p = &h + &h.involution();
            if p.degree() == Some(degree) {
                return p;
            }
        }
    }

    /// A nonzero symmetric polynomial homogeneous of degree `degree`.
    pub fn homogeneous_symmetric(&mut self, g: usize, degree: usize) -> QPoly {
        loop {
            let h = self.homogeneous_half(g, degree);
            let p = &h + &h.involution();
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn homogeneous_half(&mut self, g: usize, k: usize) -> QPoly {
        let count = pow(g, k);
        let picks = count.min(3);
        let mut idx: Vec<usize> = (0..count).collect();
        idx.shuffle(&mut self.rng);
        let terms: Vec<(Word, Rational)> =
            idx.into_iter().take(picks).map(|i| (index_word(g, k, i), self.rational())).collect();
        NcPoly::from_terms(g, terms)
    }

    /// A point `(X, v)` at which `{m(X)v : |m| ≤ r}` is linearly independent.
    pub fn generic_point(&mut self, g: usize, n: usize, r: usize) -> Result<(QTuple, Vec<Rational>)> {
        for _ in 0..200 {
            let xs = self.tuple(g, n);
            let v = self.nonzero_vector(n);
            if monomials_independent(&xs, &v, r) {
                return Ok((xs, v));
            }
        }
        Err(NcError::Hypothesis(format!("no independent point found for g = {g}, n = {n}, r = {r}")))
    }

    /// A symmetric polynomial of degree ≤ 4 in `g ≥ 2` letters whose Hessian
    /// has at most one negative square, built as
    /// `p0 + p1 + p2 + φq + qᵀφ + φ f0 φ` with
    /// `[P R1; R2] [R1ᵀP  R2ᵀ]` as the form certificate.
    pub fn one_negative(&mut self, g: usize) -> Result<QPoly> {
        if g < 2 {
            return Err(NcError::InvalidArgument("need at least two letters".into()));
        }
        let u = self.nonzero_vector(g);
        let n2 = u.iter().fold(Rational::zero(), |acc, c| acc + c.clone() * c.clone());
        let pr = Matrix::from_fn(g, g, |i, j| {
            let id = if i == j { Rational::one() } else { Rational::zero() };
            id - u[i].clone() * u[j].clone() / n2.clone()
        });
        let rank = self.rng.gen_range(1..=g);
        let r1 = self.matrix(g, rank);
        let r2 = self.matrix(g, rank);
        let t = self.vector(g);
        let s = self.rational();
        let r = self.vector(g);
        let col = Matrix::column(&u);
        let outer = |a: &[Rational], b: &[Rational]| Matrix::column(a).mul(&Matrix::row(b));
        let qp2 = pr
            .mul(&r1)
            .mul(&r1.transpose())
            .mul(&pr)
            .add(&col.mul(&col.transpose()).scale(&s))
            .add(&outer(&u, &t))
            .add(&outer(&t, &u));
        let qq = r2.mul(&r1.transpose()).mul(&pr).add(&outer(&r, &u));
        let qf0 = r2.mul(&r2.transpose());
        let p1 = linear_poly(&self.vector(g));
        synthesize(&self.rational(), &p1, &quadratic_poly(&qp2), &u, &quadratic_poly(&qq), &quadratic_poly(&qf0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inertia::min_signature_hessian;

    #[test]
    fn seeds_are_reproducible() {
        let a = Sampler::new(7).symmetric_poly(2, 3);
        let b = Sampler::new(7).symmetric_poly(2, 3);
        assert_eq!(a, b);
        assert!(a.is_symmetric());
        assert_eq!(a.degree(), Some(3));
    }

    #[test]
    fn generic_point_is_independent() {
        let (xs, v) = Sampler::new(1).generic_point(1, 4, 3).unwrap();
        assert!(monomials_independent(&xs, &v, 3));
    }

    #[test]
    fn one_negative_has_at_most_one_negative_square() {
        let mut s = Sampler::new(3);
        for _ in 0..10 {
            let p = s.one_negative(2).unwrap();
            assert!(p.is_symmetric());
            assert!(min_signature_hessian(&p).unwrap().minus <= 1, "{p}");
        }
    }
}
