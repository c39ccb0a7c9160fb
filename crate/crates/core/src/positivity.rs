//! Hessian positivity at a matrix point `(X, v)`.
//!
//! Directions `H = (H_1, .., H_g)` are symmetric `n x n` matrices, written
//! in the basis `E_aa` and `E_ab + E_ba` (a < b) for each letter. Every
//! quadratic form in `H` below is a matrix over these coordinates.
//! Vectors indexed by border positions use the block layout of
//! [`polymat::evaluate`]: border position `p` occupies rows `p n .. p n + n`.

use crate::error::{NcError, Result};
use crate::freealg::{MatrixTuple, NcPoly};
use crate::inertia::{inertia_of, min_signature_hessian, Inertia};
use crate::kronops::polymat;
use crate::kronops::{geometric_sum, index_word, pow, stacked_border, word_index};
use crate::matrix::Matrix;
use crate::midmat::MiddleMatrix;
use crate::ncderiv::{directional_derivative, hessian};
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// `g n (n+1) / 2`.
pub fn h_dimension(g: usize, n: usize) -> usize {
    g * n * (n + 1) / 2
}

/// Coordinate `k` as `(letter, a, b)` with `a ≤ b`.
fn basis_entry(n: usize, k: usize) -> (usize, usize, usize) {
    let per = n * (n + 1) / 2;
    let (i, mut r) = (k / per, k % per);
    for a in 0..n {
        let len = n - a;
        if r < len {
            return (i, a, a + r);
        }
        r -= len;
    }
    unreachable!("coordinate out of range")
}

/// The direction tuple with the given coordinates.
pub fn coords_to_tuple<S: Scalar>(g: usize, n: usize, coords: &[S]) -> Result<MatrixTuple<S>> {
    if coords.len() != h_dimension(g, n) {
        return Err(NcError::Dimension(format!("{} coordinates for g = {g}, n = {n}", coords.len())));
    }
    let mut mats = vec![Matrix::zeros(n, n); g];
    for (k, c) in coords.iter().enumerate() {
        let (i, a, b) = basis_entry(n, k);
        mats[i][(a, b)] = c.clone();
        mats[i][(b, a)] = c.clone();
    }
    MatrixTuple::new(mats)
}

pub fn tuple_to_coords<S: Scalar>(h: &MatrixTuple<S>) -> Vec<S> {
    let n = h.n();
    (0..h_dimension(h.g(), n))
        .map(|k| {
            let (i, a, b) = basis_entry(n, k);
            h.get(i)[(a, b)].clone()
        })
        .collect()
}

fn basis_tuple<S: Scalar>(g: usize, n: usize, k: usize) -> MatrixTuple<S> {
    let mut coords = vec![S::zero(); h_dimension(g, n)];
    coords[k] = S::one();
    coords_to_tuple(g, n, &coords).expect("basis coordinates have the right length")
}

fn check_point<S: Scalar>(xs: &MatrixTuple<S>, v: &[S]) -> Result<()> {
    if xs.n() != v.len() {
        return Err(NcError::Dimension(format!("vector of length {} for {}x{} matrices", v.len(), xs.n(), xs.n())));
    }
    if xs.g() == 0 {
        return Err(NcError::Dimension("empty matrix tuple".into()));
    }
    Ok(())
}

/// `m(X) v` for every word of length `0..=upto`, by length then index.
pub fn monomial_vectors<S: Scalar>(xs: &MatrixTuple<S>, v: &[S], upto: usize) -> Vec<Vec<Vec<S>>> {
    let g = xs.g();
    let mut out = vec![vec![v.to_vec()]];
    for k in 1..=upto {
        let prev = &out[k - 1];
        let mut level = Vec::with_capacity(pow(g, k));
        for l in 0..g {
            for w in prev {
                level.push(xs.get(l).mul_vec(w));
            }
        }
        out.push(level);
    }
    out
}

/// Whether `{m(X) v : |m| ≤ r}` is linearly independent.
pub fn monomials_independent<S: Scalar>(xs: &MatrixTuple<S>, v: &[S], r: usize) -> bool {
    let vecs: Vec<Vec<S>> = monomial_vectors(xs, v, r).into_iter().flatten().collect();
    if vecs.len() > v.len() {
        return false;
    }
    let m = Matrix::from_fn(v.len(), vecs.len(), |i, j| vecs[j][i].clone());
    S::rank_of(&m) == vecs.len()
}

/// The linear map `H ↦ col(V_0(X)[H]v, .., V_upto(X)[H]v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BorderMap<S> {
    pub g: usize,
    pub n: usize,
    pub upto: usize,
    pub matrix: Matrix<S>,
}

impl<S: Scalar> BorderMap<S> {
    pub fn apply(&self, coords: &[S]) -> Vec<S> {
        self.matrix.mul_vec(coords)
    }
}

pub fn border_map<S: Scalar>(xs: &MatrixTuple<S>, v: &[S], upto: usize) -> Result<BorderMap<S>> {
    check_point(xs, v)?;
    let (g, n) = (xs.g(), xs.n());
    let mono = monomial_vectors(xs, v, upto);
    let rows = n * g * geometric_sum(g, upto);
    let cols = h_dimension(g, n);
    let mut m = Matrix::<S>::zeros(rows, cols);
    for col in 0..cols {
        let (i, a, b) = basis_entry(n, col);
        let mut offset = 0;
        for (k, level) in mono.iter().enumerate() {
            for idx in 0..pow(g, k) {
                // entry h_i · reverse(m)
                let rev = word_index(&index_word(g, k, idx).reversed(), g);
                let w = &level[rev];
                let base = (offset + idx * g + i) * n;
                m[(base + a, col)] = m[(base + a, col)].clone() + w[b].clone();
                if a != b {
                    m[(base + b, col)] = m[(base + b, col)].clone() + w[a].clone();
                }
            }
            offset += pow(g, k + 1);
        }
    }
    Ok(BorderMap { g, n, upto, matrix: m })
}

/// The map `H ↦ p'(X)[H] v`, an `n x dim` matrix.
pub fn gradient_map<S: Scalar>(p: &NcPoly<S>, xs: &MatrixTuple<S>, v: &[S]) -> Result<Matrix<S>> {
    check_point(xs, v)?;
    let (g, n) = (xs.g(), xs.n());
    let d1 = directional_derivative(p)?;
    let dim = h_dimension(g, n);
    let mut out = Matrix::zeros(n, dim);
    if d1.is_zero() {
        return Ok(out);
    }
    for k in 0..dim {
        let col = d1.evaluate(xs, Some(&basis_tuple(g, n, k)))?.mul_vec(v);
        for (r, c) in col.into_iter().enumerate() {
            out[(r, k)] = c;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum HessianVariant<S> {
    Plain,
    Modified { lambda: S },
    Relaxed { lambda: S, delta: S },
}

fn gram<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    m.transpose().mul(m)
}

/// `Lᵀ Z(X) L`: the form `H ↦ ⟨p''(X)[H]v, v⟩`.
fn plain_form<S: Scalar>(p: &NcPoly<S>, xs: &MatrixTuple<S>, v: &[S]) -> Result<Matrix<S>> {
    check_point(xs, v)?;
    let dim = h_dimension(xs.g(), xs.n());
    let d = p.degree().unwrap_or(0);
    if d < 2 {
        p.require_x_only()?;
        return Ok(Matrix::zeros(dim, dim));
    }
    let mm = MiddleMatrix::build(p)?;
    let zx = polymat::evaluate(mm.full(), xs)?;
    let l = border_map(xs, v, d - 2)?.matrix;
    Ok(l.transpose().mul(&zx).mul(&l))
}

/// `L̃ᵀ L̃`: the form `H ↦ ‖Ṽ(X)[H] v‖²`.
fn relaxation_form<S: Scalar>(p: &NcPoly<S>, xs: &MatrixTuple<S>, v: &[S]) -> Result<Matrix<S>> {
    let d = p.degree().unwrap_or(0);
    let dim = h_dimension(xs.g(), xs.n());
    if d == 0 {
        return Ok(Matrix::zeros(dim, dim));
    }
    Ok(gram(&border_map(xs, v, d - 1)?.matrix))
}

/// The matrix `M` with `coords(H)ᵀ M coords(H) = ⟨variant(X)[H] v, v⟩`.
pub fn hessian_form<S: Scalar>(
    p: &NcPoly<S>,
    xs: &MatrixTuple<S>,
    v: &[S],
    variant: &HessianVariant<S>,
) -> Result<Matrix<S>> {
    let mut m = plain_form(p, xs, v)?;
    let (lambda, delta) = match variant {
        HessianVariant::Plain => (None, None),
        HessianVariant::Modified { lambda } => (Some(lambda), None),
        HessianVariant::Relaxed { lambda, delta } => (Some(lambda), Some(delta)),
    };
    for s in [lambda, delta].into_iter().flatten() {
        if s.is_negative() {
            return Err(NcError::InvalidArgument("λ and δ must be nonnegative".into()));
        }
    }
    if let Some(l) = lambda {
        m = m.add(&gram(&gradient_map(p, xs, v)?).scale(l));
    }
    if let Some(dl) = delta {
        m = m.add(&relaxation_form(p, xs, v)?.scale(dl));
    }
    Ok(m)
}

/// `⟨p''_{λ,δ}(X)[H] v, v⟩` by direct evaluation of the polynomials.
pub fn relaxed_value<S: Scalar>(
    p: &NcPoly<S>,
    xs: &MatrixTuple<S>,
    v: &[S],
    hs: &MatrixTuple<S>,
    lambda: &S,
    delta: &S,
) -> Result<S> {
    check_point(xs, v)?;
    let dot = |a: &[S], b: &[S]| a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
    let hv = hessian(p)?.evaluate(xs, Some(hs))?.mul_vec(v);
    let gv = directional_derivative(p)?.evaluate(xs, Some(hs))?.mul_vec(v);
    let mut total = dot(&hv, v) + lambda.clone() * dot(&gv, &gv);
    if let Some(d) = p.degree().filter(|&d| d >= 1) {
        for e in stacked_border::<S>(xs.g(), d - 1) {
            let ev = e.with_g(xs.g()).evaluate(xs, Some(hs))?.mul_vec(v);
            total = total + delta.clone() * dot(&ev, &ev);
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq)]
pub enum PositivityVerdict<S> {
    /// `M(λ)` has smallest eigenvalue `≥ -tol‖M‖` at this `λ`.
    Positive { lambda: f64, min_eigenvalue: f64 },
    /// `witness` lies in the kernel of `H ↦ p'(X)[H]v`, so its value does
    /// not depend on `λ`.
    Negative { witness: MatrixTuple<S>, coords: Vec<S>, value: S },
    Indeterminate { reason: String },
}

impl<S> PositivityVerdict<S> {
    pub fn label(&self) -> &'static str {
        match self {
            PositivityVerdict::Positive { .. } => "Positive",
            PositivityVerdict::Negative { .. } => "Negative",
            PositivityVerdict::Indeterminate { .. } => "Indeterminate",
        }
    }
}

/// Smallest eigenvalue and Frobenius norm, in floating point.
pub fn min_eigenvalue<S: Scalar>(m: &Matrix<S>) -> (f64, f64) {
    if m.rows() == 0 {
        return (0.0, 0.0);
    }
    let f = m.to_f64();
    let a = nalgebra::DMatrix::from_fn(f.rows(), f.cols(), |i, j| 0.5 * (f[(i, j)] + f[(j, i)]));
    let norm = a.norm();
    let min = nalgebra::SymmetricEigen::new(a).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    (min, norm)
}

/// Number of doublings from the first `λ` up to `λ_max`.
pub const LAMBDA_DOUBLINGS: u32 = 16;

/// Tests `∃λ ≤ λ_max: ⟨p''_{λ,δ}(X)[H]v, v⟩ ≥ 0 for all H` for one `δ`.
pub fn relaxed_positivity<S: Scalar>(
    p: &NcPoly<S>,
    xs: &MatrixTuple<S>,
    v: &[S],
    delta: &S,
    lambda_max: f64,
    tol: f64,
) -> Result<PositivityVerdict<S>> {
    if !delta.is_positive() || lambda_max <= 0.0 {
        return Err(NcError::InvalidArgument("δ and λ_max must be positive".into()));
    }
    let a = plain_form(p, xs, v)?.add(&relaxation_form(p, xs, v)?.scale(delta));
    let gm = gradient_map(p, xs, v)?;
    let kernel = S::null_space_of(&gm);
    if kernel.cols() > 0 {
        let restricted = kernel.transpose().mul(&a).mul(&kernel);
        if let Some(z) = S::negative_direction(&restricted, tol) {
            let coords = kernel.mul_vec(&z);
            let value = a.quadratic_form(&coords);
            let (_, norm) = min_eigenvalue(&a);
            if value.is_negative() && !value.is_negligible(norm.max(1.0), tol) {
                let witness = coords_to_tuple(xs.g(), xs.n(), &coords)?;
                return Ok(PositivityVerdict::Negative { witness, coords, value });
            }
        }
    }
    let b = gram(&gm);
    let mut lambda = lambda_max / f64::from(1u32 << LAMBDA_DOUBLINGS);
    let mut worst = f64::INFINITY;
    for _ in 0..=LAMBDA_DOUBLINGS {
        let l = S::from_f64(lambda).ok_or_else(|| NcError::InvalidArgument(format!("λ = {lambda}")))?;
        let (min, norm) = min_eigenvalue(&a.add(&b.scale(&l)));
        if min >= -tol * norm.max(1.0) {
            return Ok(PositivityVerdict::Positive { lambda, min_eigenvalue: min });
        }
        worst = worst.min(min.abs());
        lambda *= 2.0;
    }
    Ok(PositivityVerdict::Indeterminate {
        reason: format!("no negative direction in the gradient kernel, and λ up to {lambda_max} leaves eigenvalue ≤ -{worst:e}"),
    })
}

/// `μ±(Z(X)) = n μ±(𝒵)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransportReport {
    pub n: usize,
    pub scalar: Inertia,
    pub evaluated: Inertia,
}

impl TransportReport {
    pub fn holds(&self) -> bool {
        self.evaluated == self.scalar.scaled(self.n)
    }

    pub fn to_check(&self) -> CheckReport {
        CheckReport::new(
            "middle inertia transport",
            self.holds(),
            format!("n = {}, μ(𝒵) = {:?}, μ(Z(X)) = {:?}", self.n, self.scalar, self.evaluated),
        )
    }
}

pub fn middle_inertia_transport<S: Scalar>(p: &NcPoly<S>, xs: &MatrixTuple<S>, tol: f64) -> Result<TransportReport> {
    let mm = MiddleMatrix::build(p)?;
    if xs.g() < mm.g() {
        return Err(NcError::VariableCount(xs.g(), mm.g()));
    }
    let scalar = inertia_of(&mm.scalar(), tol)?;
    let evaluated = inertia_of(&polymat::evaluate(mm.full(), xs)?, tol)?;
    Ok(TransportReport { n: xs.n(), scalar, evaluated })
}

/// Codimension of `R_k = {col(V_0(X)[H]v, .., V_k(X)[H]v)}` against the
/// bound `n g (α_k − α_r) + g α_r (α_r − 1) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChsyReport {
    pub g: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// `{m(X)v : |m| ≤ r}` is linearly independent.
    pub independent: bool,
    pub rank: usize,
    pub codim: usize,
    pub bound: usize,
}

impl ChsyReport {
    /// Within the bound, with equality when `k = r`. Vacuous if the
    /// independence hypothesis fails.
    pub fn holds(&self) -> bool {
        !self.independent || (self.codim <= self.bound && (self.k != self.r || self.codim == self.bound))
    }

    pub fn to_check(&self) -> CheckReport {
        if !self.independent {
            return CheckReport::skipped("codimension", "monomial vectors are dependent; hypothesis fails");
        }
        CheckReport::new(
            "codimension",
            self.holds(),
            format!(
                "g = {}, n = {}, k = {}, r = {}: codim = {}, bound = {}",
                self.g, self.n, self.k, self.r, self.codim, self.bound
            ),
        )
    }
}

pub fn chsy_codim<S: Scalar>(xs: &MatrixTuple<S>, v: &[S], k: usize, r: usize) -> Result<ChsyReport> {
    check_point(xs, v)?;
    if k < r {
        return Err(NcError::InvalidArgument("need k ≥ r".into()));
    }
    let (g, n) = (xs.g(), xs.n());
    let independent = monomials_independent(xs, v, r);
    let l = border_map(xs, v, k)?;
    let rank = S::rank_of(&l.matrix);
    let (ak, ar) = (geometric_sum(g, k), geometric_sum(g, r));
    Ok(ChsyReport {
        g,
        n,
        k,
        r,
        independent,
        rank,
        codim: n * g * ak - rank,
        bound: n * g * (ak - ar) + g * ar * (ar - 1) / 2,
    })
}

/// Positivity of the plain Hessian form on a subspace of directions.
#[derive(Clone, Debug, PartialEq)]
pub struct RelativeReport<S> {
    pub positive: bool,
    /// Coordinates of a direction in the subspace with negative value.
    pub witness: Option<Vec<S>>,
    /// Codimension of `{V(X)[H]v : H in the subspace}` in `ℝ^{n g ν}`.
    pub codim: usize,
    /// Smallest `k` with `codim ≤ k n − 1`.
    pub k_min: usize,
    /// `σ₋ < k_min` when the form is positive on the subspace.
    pub implied_bound: Option<usize>,
    /// The exact `σ₋` of the Hessian.
    pub sigma_minus: usize,
}

impl<S> RelativeReport<S> {
    /// The implied bound, if any, agrees with the exact signature.
    pub fn consistent(&self) -> bool {
        self.implied_bound.is_none_or(|k| self.sigma_minus < k)
    }
}

/// `basis` holds direction coordinates as columns.
pub fn relative_hessian_positivity<S: Scalar>(
    p: &NcPoly<S>,
    xs: &MatrixTuple<S>,
    v: &[S],
    basis: &Matrix<S>,
    tol: f64,
) -> Result<RelativeReport<S>> {
    check_point(xs, v)?;
    let (g, n) = (xs.g(), xs.n());
    if basis.rows() != h_dimension(g, n) {
        return Err(NcError::Dimension(format!("basis rows {} ≠ {}", basis.rows(), h_dimension(g, n))));
    }
    let sigma_minus = min_signature_hessian(p)?.minus;
    let m = plain_form(p, xs, v)?;
    let restricted = basis.transpose().mul(&m).mul(basis);
    let witness = S::negative_direction(&restricted, tol).map(|z| basis.mul_vec(&z));
    let d = p.degree().unwrap_or(0);
    let codim = if d < 2 {
        0
    } else {
        let image = border_map(xs, v, d - 2)?.matrix.mul(basis);
        n * g * geometric_sum(g, d - 2) - S::rank_of(&image)
    };
    let k_min = ((codim + 1).div_ceil(n)).max(1);
    let positive = witness.is_none();
    Ok(RelativeReport {
        positive,
        witness,
        codim,
        k_min,
        implied_bound: positive.then_some(k_min),
        sigma_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse;
    use crate::scalar::rat;
    use crate::{QTuple, Rational};

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    fn tuple(rows: &[&[&[i64]]]) -> QTuple {
        MatrixTuple::new(
            rows.iter()
                .map(|m| Matrix::from_rows(&m.iter().map(|row| row.iter().map(|&c| r(c)).collect()).collect::<Vec<_>>()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn coordinates_round_trip() {
        let coords: Vec<Rational> = (1..=6).map(r).collect();
        let h = coords_to_tuple(1, 3, &coords).unwrap();
        assert_eq!(h.get(0)[(0, 2)], r(3));
        assert_eq!(h.get(0)[(2, 0)], r(3));
        assert_eq!(h.get(0)[(1, 1)], r(4));
        assert_eq!(tuple_to_coords(&h), coords);
    }

    #[test]
    fn border_map_at_zero_keeps_first_block() {
        let xs = QTuple::zeros(2, 2);
        let v = vec![r(1), r(2)];
        let l = border_map(&xs, &v, 1).unwrap();
        assert_eq!(l.matrix.rows(), 2 * 2 * 3);
        let coords: Vec<Rational> = (1..=6).map(r).collect();
        let h = coords_to_tuple(2, 2, &coords).unwrap();
        let out = l.apply(&coords);
        let h1v = h.get(0).mul_vec(&v);
        let h2v = h.get(1).mul_vec(&v);
        assert_eq!(&out[0..2], &h1v[..]);
        assert_eq!(&out[2..4], &h2v[..]);
        assert!(out[4..].iter().all(|c| c == &r(0)));
    }

    #[test]
    fn plain_form_matches_direct_evaluation() {
        let p = parse("x1^4 + x1 x2 x1 - 2 x2^2", 2).unwrap();
        let xs = tuple(&[&[&[1, 2], &[2, -1]], &[&[0, 1], &[1, 3]]]);
        let v = vec![r(1), r(-2)];
        let coords: Vec<Rational> = vec![r(1), r(-1), r(2), r(0), r(3), r(1)];
        let hs = coords_to_tuple(2, 2, &coords).unwrap();
        for variant in [
            HessianVariant::Plain,
            HessianVariant::Modified { lambda: r(3) },
            HessianVariant::Relaxed { lambda: r(3), delta: rat(1, 5) },
        ] {
            let m = hessian_form(&p, &xs, &v, &variant).unwrap();
            let (l, d) = match &variant {
                HessianVariant::Plain => (r(0), r(0)),
                HessianVariant::Modified { lambda } => (lambda.clone(), r(0)),
                HessianVariant::Relaxed { lambda, delta } => (lambda.clone(), delta.clone()),
            };
            assert_eq!(m.quadratic_form(&coords), relaxed_value(&p, &xs, &v, &hs, &l, &d).unwrap());
        }
    }

    #[test]
    fn square_is_convex_form() {
        let p = parse("x1^2", 1).unwrap();
        let xs = tuple(&[&[&[1, 2], &[2, 5]]]);
        let m = hessian_form(&p, &xs, &[r(1), r(1)], &HessianVariant::Plain).unwrap();
        assert!(inertia_of(&m, 0.0).unwrap().is_psd());
        let verdict = relaxed_positivity(&p, &xs, &[r(1), r(1)], &rat(1, 10), 100.0, 1e-9).unwrap();
        assert_eq!(verdict.label(), "Positive");
    }

    #[test]
    fn quartic_at_zero_has_zero_plain_form() {
        let p = parse("x1^4", 1).unwrap();
        let xs = QTuple::zeros(1, 3);
        let v = vec![r(1), r(0), r(0)];
        assert!(hessian_form(&p, &xs, &v, &HessianVariant::Plain).unwrap().is_zero());
        let verdict = relaxed_positivity(&p, &xs, &v, &rat(1, 10), 100.0, 1e-9).unwrap();
        assert_eq!(verdict.label(), "Positive");
    }

    #[test]
    fn transport_scales_inertia() {
        let p = parse("x1^4", 1).unwrap();
        let xs = tuple(&[&[&[1, 2], &[2, -3]]]);
        let t = middle_inertia_transport(&p, &xs, 0.0).unwrap();
        assert_eq!(t.evaluated, Inertia { plus: 4, minus: 2, zero: 0 });
        assert!(t.holds());
    }

    #[test]
    fn codimension_single_letter() {
        let xs = tuple(&[&[&[1, 2, 0], &[2, 0, 1], &[0, 1, 3]]]);
        let v = vec![r(1), r(0), r(0)];
        let c = chsy_codim(&xs, &v, 1, 1).unwrap();
        assert!(c.independent);
        assert_eq!((c.codim, c.bound), (1, 1));
        let c = chsy_codim(&QTuple::zeros(1, 3), &v, 1, 1).unwrap();
        assert!(!c.independent);
        assert_eq!(c.to_check().outcome, crate::report::Outcome::Skipped);
    }

    #[test]
    fn relative_positivity_examples() {
        let xs = tuple(&[&[&[1, 2, 0], &[2, 0, 1], &[0, 1, 3]]]);
        let v = vec![r(1), r(0), r(0)];
        let full = Matrix::identity(6);
        let rep = relative_hessian_positivity(&parse("x1^2", 1).unwrap(), &xs, &v, &full, 1e-9).unwrap();
        assert!(rep.positive && rep.consistent());
        let empty = Matrix::<Rational>::zeros(6, 0);
        let rep = relative_hessian_positivity(&parse("x1^4", 1).unwrap(), &xs, &v, &empty, 1e-9).unwrap();
        assert_eq!(rep.codim, 3 * 3);
        assert!(rep.consistent());
    }

    #[test]
    fn quartic_is_relaxed_negative_at_generic_point() {
        let p = parse("x1^4", 1).unwrap();
        let (xs, v) = crate::sample::Sampler::new(11).generic_point(1, 7, 3).unwrap();
        let verdict = relaxed_positivity(&p, &xs, &v, &rat(1, 100), 1e6, 1e-9).unwrap();
        let PositivityVerdict::Negative { witness, value, .. } = verdict else { panic!("{verdict:?}") };
        assert!(value < r(0));
        for lambda in [r(0), r(1000)] {
            assert_eq!(relaxed_value(&p, &xs, &v, &witness, &lambda, &rat(1, 100)).unwrap(), value);
        }
    }

    #[test]
    fn codimension_two_letters() {
        let (xs, v) = crate::sample::Sampler::new(5).generic_point(2, 4, 1).unwrap();
        let c = chsy_codim(&xs, &v, 1, 1).unwrap();
        assert_eq!((c.codim, c.bound), (6, 6));
        let c = chsy_codim(&xs, &v, 2, 1).unwrap();
        assert!(c.holds(), "{c:?}");
    }
}
