//! Kronecker and structured-transpose identities, verified by symbolic
//! expansion.
//!
//! Every vector and matrix that an identity quantifies over is filled with
//! fresh [`Sym`] unknowns, so a passing check is a proof for the given `g`
//! rather than a sample. Polynomial sides are expanded as matrices of
//! [`NcPoly<Sym>`].

use std::fmt;

use crate::error::Result;
use crate::freealg::NcPoly;
use crate::kronops::polymat::{self, PolyMatrix};
use crate::kronops::{
    border_vector, mat_g, monomials, pow, reversal_permutation, structured_transpose, vec_of,
};
use crate::matrix::Matrix;
use crate::midmat::MiddleMatrix;
use crate::report::CheckReport;
use crate::scalar::Ring;
use crate::symbolic::Sym;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `[x]_2 (u⊗A) = φ [x] A`.
    QuadraticRowKron,
    /// `(u⊗A)ᵀ ([x]_2)ᵀ = Aᵀ [x-col] φ`.
    QuadraticRowKronTransposed,
    /// `[x] (u⊗A)ᵀ = uᵀ ⊗ ([x] Aᵀ)`.
    RowTimesKronTranspose,
    /// `([x]_2)ᵀ = (I ⊗ [x]ᵀ) [x]ᵀ`.
    QuadraticColumnSplit,
    /// `([x]a)([y]b) = (bᵀ⊗aᵀ)([y]⊗[x])ᵀ`.
    ProductOfLinearForms,
    /// `φ^k = (uᵀ⊗..⊗uᵀ)([x]_k)ᵀ` for k = 2, 3.
    PowerOfLinearForm,
    /// `[x] u wᵀ ([x]_2)ᵀ = (wᵀ⊗uᵀ)([x]_3)ᵀ`.
    LinearTimesQuadratic,
    /// `[x]_2 w uᵀ = uᵀ ⊗ ((Π₁ᵀw)ᵀ([x]_2)ᵀ)`.
    QuadraticTimesRow,
    /// `[x]_2 w uᵀ [x]ᵀ = (uᵀ⊗(Π₁ᵀw)ᵀ)([x]_3)ᵀ`.
    QuadraticTimesLinear,
    /// `([x-col]⊗I)[x-col]_k = [x-col]_{k+1}`.
    ColumnPowerStep,
    /// `[x]A = wᵀ(I⊗[x-col])` and `[x]_2 w = [x]Aᵀ[x]ᵀ` for `w = vec A`.
    VecRowForms,
    /// `A (u⊗I)ᵀ = uᵀ⊗A`.
    ScalarKron,
    /// `(I_{g²}⊗[x-col])([x]_2)ᵀ = ([x]_3)ᵀ`.
    TransposedPowerStep,
    /// `(vᵀ⊗wᵀ)[x-col]_{k+l} = (vᵀ[x-col]_k)(wᵀ[x-col]_l)`.
    KronSplit,
    /// `(aᵀ⊗bᵀ)(c⊗d) = (aᵀc)(bᵀd)`.
    MixedProduct,
    /// Sum of the linear-times-quadratic and quadratic-times-linear forms.
    CubicSplit,
    /// `(BUUᵀ)^{sT} = uuᵀB^{sT}` and `(uuᵀB)^{sT} = B^{sT}UUᵀ`.
    ProjectorStructuredTranspose,
    /// `(uᵀ⊗Aᵀ)^{sT} = u (vec A)ᵀ`.
    KronStructuredTranspose,
    /// Structured transposes of rank-one blocks.
    RankOneStructuredTranspose,
    /// The cubic block of the scalar middle matrix is block symmetric.
    CubicBlockSymmetry,
    /// First-row blocks `𝒵_{0j}` of the scalar middle matrix: `b_st = b_ts`
    /// for `j ≤ 1`, and `b_st = b_ts Π_{j-1}` (words reversed inside each
    /// block) for `j ≥ 2`, where plain block symmetry fails.
    FirstRowBlockSymmetry,
    /// `Π_j V_j = ([h-col]⊗I)[x-col]_j`.
    PermutedBorder,
    /// `[x-col]_{j+1} = Π_j ([x]_{j+1})ᵀ`.
    ReversalOfMonomials,
    /// `([u]⊗[v]) a = [u] A [v]ᵀ` with `A` the row-major reshaping of `a`.
    KronRowReshape,
    /// `u⊗v = (u⊗I)v`.
    ColumnKronFactor,
    /// `([x]_k u)([y] v) = ([x]_k⊗[y])(u⊗v)`.
    ProductKron,
    /// `mat_g((P⊗I)w) = (mat_g w) Pᵀ`.
    MatOfKronProduct,
}

impl Identity {
    pub const ALL: [Identity; 27] = [
        Identity::QuadraticRowKron,
        Identity::QuadraticRowKronTransposed,
        Identity::RowTimesKronTranspose,
        Identity::QuadraticColumnSplit,
        Identity::ProductOfLinearForms,
        Identity::PowerOfLinearForm,
        Identity::LinearTimesQuadratic,
        Identity::QuadraticTimesRow,
        Identity::QuadraticTimesLinear,
        Identity::ColumnPowerStep,
        Identity::VecRowForms,
        Identity::ScalarKron,
        Identity::TransposedPowerStep,
        Identity::KronSplit,
        Identity::MixedProduct,
        Identity::CubicSplit,
        Identity::ProjectorStructuredTranspose,
        Identity::KronStructuredTranspose,
        Identity::RankOneStructuredTranspose,
        Identity::CubicBlockSymmetry,
        Identity::FirstRowBlockSymmetry,
        Identity::PermutedBorder,
        Identity::ReversalOfMonomials,
        Identity::KronRowReshape,
        Identity::ColumnKronFactor,
        Identity::ProductKron,
        Identity::MatOfKronProduct,
    ];

    /// The first fifteen entries of [`Identity::ALL`] form the basic list.
    pub fn basic_number(self) -> Option<usize> {
        Self::ALL[..15].iter().position(|&i| i == self).map(|k| k + 1)
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::QuadraticRowKron => "quadratic-row-kron",
            Identity::QuadraticRowKronTransposed => "quadratic-row-kron-transposed",
            Identity::RowTimesKronTranspose => "row-times-kron-transpose",
            Identity::QuadraticColumnSplit => "quadratic-column-split",
            Identity::ProductOfLinearForms => "product-of-linear-forms",
            Identity::PowerOfLinearForm => "power-of-linear-form",
            Identity::LinearTimesQuadratic => "linear-times-quadratic",
            Identity::QuadraticTimesRow => "quadratic-times-row",
            Identity::QuadraticTimesLinear => "quadratic-times-linear",
            Identity::ColumnPowerStep => "column-power-step",
            Identity::VecRowForms => "vec-row-forms",
            Identity::ScalarKron => "scalar-kron",
            Identity::TransposedPowerStep => "transposed-power-step",
            Identity::KronSplit => "kron-split",
            Identity::MixedProduct => "mixed-product",
            Identity::CubicSplit => "cubic-split",
            Identity::ProjectorStructuredTranspose => "projector-structured-transpose",
            Identity::KronStructuredTranspose => "kron-structured-transpose",
            Identity::RankOneStructuredTranspose => "rank-one-structured-transpose",
            Identity::CubicBlockSymmetry => "cubic-block-symmetry",
            Identity::FirstRowBlockSymmetry => "first-row-block-symmetry",
            Identity::PermutedBorder => "permuted-border",
            Identity::ReversalOfMonomials => "reversal-of-monomials",
            Identity::KronRowReshape => "kron-row-reshape",
            Identity::ColumnKronFactor => "column-kron-factor",
            Identity::ProductKron => "product-kron",
            Identity::MatOfKronProduct => "mat-of-kron-product",
        }
    }

    pub fn from_name(name: &str) -> Option<Identity> {
        Self::ALL.iter().copied().find(|i| i.name() == name)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Hands out fresh symbolic unknowns.
struct Unknowns {
    next: u32,
}

impl Unknowns {
    fn new() -> Self {
        Unknowns { next: 0 }
    }

    fn scalar(&mut self) -> Sym {
        self.next += 1;
        Sym::var(self.next - 1)
    }

    fn vector(&mut self, n: usize) -> Vec<Sym> {
        (0..n).map(|_| self.scalar()).collect()
    }

    fn matrix(&mut self, r: usize, c: usize) -> Matrix<Sym> {
        Matrix::from_fn(r, c, |_, _| self.scalar())
    }
}

type SPoly = NcPoly<Sym>;
type SMat = PolyMatrix<Sym>;

fn lift(m: &Matrix<Sym>, g: usize) -> SMat {
    polymat::constant(m, g)
}

fn col(v: &[Sym]) -> Matrix<Sym> {
    Matrix::column(v)
}

fn row(v: &[Sym]) -> Matrix<Sym> {
    Matrix::row(v)
}

/// `[x]_k` as a row.
fn x_row(g: usize, k: usize) -> SMat {
    polymat::row(monomials(g, k))
}

/// `[x-col]_k`: Kronecker power of the column `[x1; ..; xg]`.
fn x_col(g: usize, k: usize) -> SMat {
    polymat::column(monomials(g, k))
}

/// `([x]_k)ᵀ`: transpose including the involution.
fn x_row_t(g: usize, k: usize) -> SMat {
    polymat::star(&x_row(g, k))
}

fn h_col(g: usize) -> SMat {
    polymat::column((0..g).map(|i| SPoly::h(g, i)).collect())
}

fn ident(n: usize, g: usize) -> SMat {
    lift(&Matrix::identity(n), g)
}

fn scalar_poly(m: &SMat) -> SPoly {
    m[(0, 0)].clone()
}

fn reversal(g: usize, j: usize) -> Matrix<Sym> {
    reversal_permutation(g, j).matrix()
}

/// `None` when equal, otherwise the first differing entry.
fn compare<T: Ring>(lhs: &Matrix<T>, rhs: &Matrix<T>) -> Option<String> {
    if lhs.shape() != rhs.shape() {
        return Some(format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape()));
    }
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs[(r, c)] != rhs[(r, c)] {
                return Some(format!("entry ({r},{c}): {:?} vs {:?}", lhs[(r, c)], rhs[(r, c)]));
            }
        }
    }
    None
}

struct Outcome {
    checked: usize,
    failure: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checked: 0, failure: None }
    }

    fn eq<T: Ring>(&mut self, label: &str, lhs: &Matrix<T>, rhs: &Matrix<T>) {
        self.checked += 1;
        if self.failure.is_none() {
            if let Some(d) = compare(lhs, rhs) {
                self.failure = Some(format!("{label}: {d}"));
            }
        }
    }

    fn poly(&mut self, label: &str, lhs: SPoly, rhs: SPoly) {
        self.eq(label, &Matrix::from_vec(1, 1, vec![lhs]).unwrap(), &Matrix::from_vec(1, 1, vec![rhs]).unwrap());
    }
}

/// Checks one identity for `g` letters.
pub fn verify_identity(id: Identity, g: usize) -> Result<CheckReport> {
    let mut u = Unknowns::new();
    let mut out = Outcome::new();
    let n2 = g * g;
    match id {
        Identity::QuadraticRowKron => {
            let uu = u.vector(g);
            let a = u.matrix(g, g);
            let phi = x_row(g, 1).mul(&lift(&col(&uu), g));
            let lhs = x_row(g, 2).mul(&lift(&col(&uu).kron(&a), g));
            let rhs = phi.mul(&x_row(g, 1)).mul(&lift(&a, g));
            out.eq("row", &lhs, &rhs);
        }
        Identity::QuadraticRowKronTransposed => {
            let uu = u.vector(g);
            let a = u.matrix(g, g);
            let phi = x_row(g, 1).mul(&lift(&col(&uu), g));
            let lhs = lift(&col(&uu).kron(&a).transpose(), g).mul(&x_row_t(g, 2));
            let rhs = lift(&a.transpose(), g).mul(&x_col(g, 1)).mul(&phi);
            out.eq("column", &lhs, &rhs);
        }
        Identity::RowTimesKronTranspose => {
            let uu = u.vector(g);
            let a = u.matrix(g, g);
            let lhs = x_row(g, 1).mul(&lift(&col(&uu).kron(&a).transpose(), g));
            let rhs = lift(&row(&uu), g).kron(&x_row(g, 1).mul(&lift(&a.transpose(), g)));
            out.eq("row", &lhs, &rhs);
        }
        Identity::QuadraticColumnSplit => {
            let rhs = ident(g, g).kron(&x_col(g, 1)).mul(&x_col(g, 1));
            out.eq("column", &x_row_t(g, 2), &rhs);
        }
        Identity::ProductOfLinearForms => {
            let a = u.vector(g);
            let b = u.vector(g);
            let lhs = x_row(g, 1).mul(&lift(&col(&a), g)).mul(&x_row(g, 1).mul(&lift(&col(&b), g)));
            let coeff = row(&b).kron(&row(&a));
            let rhs = lift(&coeff, g).mul(&polymat::star(&x_row(g, 1).kron(&x_row(g, 1))));
            out.eq("same letters", &lhs, &rhs);
            // distinct letter sets: x = (x1..xk), y = (x_{k+1}..x_g)
            if g >= 2 {
                let k = g / 2;
                let l = g - k;
                let xs = polymat::row((0..k).map(|i| SPoly::x(g, i)).collect());
                let ys = polymat::row((k..g).map(|i| SPoly::x(g, i)).collect());
                let a = u.vector(k);
                let b = u.vector(l);
                let lhs = xs.mul(&lift(&col(&a), g)).mul(&ys.mul(&lift(&col(&b), g)));
                let rhs = lift(&row(&b).kron(&row(&a)), g).mul(&polymat::star(&ys.kron(&xs)));
                out.eq("split letters", &lhs, &rhs);
            }
        }
        Identity::PowerOfLinearForm => {
            let uu = u.vector(g);
            let phi = scalar_poly(&x_row(g, 1).mul(&lift(&col(&uu), g)));
            let ut = row(&uu);
            let rhs2 = lift(&ut.kron(&ut), g).mul(&x_row_t(g, 2));
            out.poly("square", &phi * &phi, scalar_poly(&rhs2));
            let rhs3 = lift(&ut.kron(&ut).kron(&ut), g).mul(&x_row_t(g, 3));
            out.poly("cube", phi.pow(3), scalar_poly(&rhs3));
        }
        Identity::LinearTimesQuadratic => {
            let uu = u.vector(g);
            let w = u.vector(n2);
            let lhs = x_row(g, 1).mul(&lift(&col(&uu).mul(&row(&w)), g)).mul(&x_row_t(g, 2));
            let rhs = lift(&row(&w).kron(&row(&uu)), g).mul(&x_row_t(g, 3));
            out.eq("cubic", &lhs, &rhs);
        }
        Identity::QuadraticTimesRow => {
            let uu = u.vector(g);
            let w = u.vector(n2);
            let pw = reversal(g, 1).transpose().mul(&col(&w));
            let lhs = x_row(g, 2).mul(&lift(&col(&w).mul(&row(&uu)), g));
            let rhs = lift(&row(&uu), g).kron(&lift(&pw.transpose(), g).mul(&x_row_t(g, 2)));
            out.eq("row", &lhs, &rhs);
        }
        Identity::QuadraticTimesLinear => {
            let uu = u.vector(g);
            let w = u.vector(n2);
            let pw = reversal(g, 1).transpose().mul(&col(&w));
            let lhs = x_row(g, 2).mul(&lift(&col(&w).mul(&row(&uu)), g)).mul(&x_row_t(g, 1));
            let rhs = lift(&row(&uu).kron(&pw.transpose()), g).mul(&x_row_t(g, 3));
            out.eq("cubic", &lhs, &rhs);
        }
        Identity::ColumnPowerStep => {
            for k in 1..=3 {
                let lhs = x_col(g, 1).kron(&ident(pow(g, k), g)).mul(&x_col(g, k));
                out.eq(&format!("k={k}"), &lhs, &x_col(g, k + 1));
            }
        }
        Identity::VecRowForms => {
            let a = u.matrix(g, g);
            let w = vec_of(&a);
            let lhs = x_row(g, 1).mul(&lift(&a, g));
            let rhs = lift(&row(&w), g).mul(&ident(g, g).kron(&x_col(g, 1)));
            out.eq("linear", &lhs, &rhs);
            let lhs = x_row(g, 2).mul(&lift(&col(&w), g));
            let rhs = x_row(g, 1).mul(&lift(&a.transpose(), g)).mul(&x_row_t(g, 1));
            out.eq("quadratic", &lhs, &rhs);
        }
        Identity::ScalarKron => {
            let uu = u.vector(g);
            let a = u.matrix(g, g);
            let lhs = a.mul(&col(&uu).kron(&Matrix::identity(g)).transpose());
            out.eq("matrix", &lhs, &row(&uu).kron(&a));
        }
        Identity::TransposedPowerStep => {
            let lhs = ident(n2, g).kron(&x_col(g, 1)).mul(&x_row_t(g, 2));
            out.eq("column", &lhs, &x_row_t(g, 3));
        }
        Identity::KronSplit => {
            for (k, l) in [(1, 1), (1, 2), (2, 1)] {
                let v = u.vector(pow(g, k));
                let w = u.vector(pow(g, l));
                let lhs = lift(&row(&v).kron(&row(&w)), g).mul(&x_col(g, k + l));
                let rhs = lift(&row(&v), g).mul(&x_col(g, k)).mul(&lift(&row(&w), g).mul(&x_col(g, l)));
                out.eq(&format!("k={k} l={l}"), &lhs, &rhs);
            }
        }
        Identity::MixedProduct => {
            for (k, l) in [(g, g), (g, n2), (n2, g)] {
                let (a, c) = (u.vector(k), u.vector(k));
                let (b, d) = (u.vector(l), u.vector(l));
                let lhs = row(&a).kron(&row(&b)).mul(&col(&c).kron(&col(&d)));
                let rhs = row(&a).mul(&col(&c)).mul(&row(&b).mul(&col(&d)));
                out.eq(&format!("k={k} l={l}"), &lhs, &rhs);
            }
        }
        Identity::CubicSplit => {
            let uu = u.vector(g);
            let w = u.vector(n2);
            let pw = reversal(g, 1).transpose().mul(&col(&w));
            let first = x_row(g, 1).mul(&lift(&col(&uu).mul(&row(&w)), g)).mul(&x_row_t(g, 2));
            let second = x_row(g, 2).mul(&lift(&col(&w).mul(&row(&uu)), g)).mul(&x_row_t(g, 1));
            let coeff = row(&w).kron(&row(&uu)).add(&row(&uu).kron(&pw.transpose()));
            let rhs = lift(&coeff, g).mul(&x_row_t(g, 3));
            out.eq("cubic", &first.add(&second), &rhs);
        }
        Identity::ProjectorStructuredTranspose => {
            let uu = u.vector(g);
            let b = u.matrix(g, n2);
            let big_u = col(&uu).kron(&Matrix::identity(g));
            let uut = col(&uu).mul(&row(&uu));
            let bst = structured_transpose(&b)?;
            let lhs = structured_transpose(&b.mul(&big_u).mul(&big_u.transpose()))?;
            out.eq("right projector", &lhs, &uut.mul(&bst));
            let lhs = structured_transpose(&uut.mul(&b))?;
            out.eq("left projector", &lhs, &bst.mul(&big_u).mul(&big_u.transpose()));
        }
        Identity::KronStructuredTranspose => {
            let uu = u.vector(g);
            let a = u.matrix(g, g);
            let lhs = structured_transpose(&row(&uu).kron(&a.transpose()))?;
            out.eq("matrix", &lhs, &col(&uu).mul(&row(&vec_of(&a))));
        }
        Identity::RankOneStructuredTranspose => {
            let uu = u.vector(g);
            let v = u.vector(g);
            let w = u.vector(g);
            let big_u = col(&uu).kron(&Matrix::identity(g));
            let vw = row(&v).kron(&row(&w));
            out.eq("outer", &col(&uu).mul(&vw), &col(&uu).kron(&vw));
            let st = structured_transpose(&col(&uu).kron(&vw))?;
            let a = row(&uu).kron(&col(&v).kron(&row(&w)));
            out.eq("first form", &st, &a);
            out.eq("second form", &st, &col(&v).kron(&row(&w)).mul(&big_u.transpose()));
            out.eq("third form", &st, &col(&v).mul(&row(&uu).kron(&row(&w))));
            let y = u.vector(n2);
            let lhs = structured_transpose(&col(&uu).mul(&row(&y)))?;
            out.eq("vector", &lhs, &mat_g(&y, g)?.transpose().mul(&big_u.transpose()));
        }
        Identity::CubicBlockSymmetry => {
            for d in 3..=4 {
                let z = MiddleMatrix::build(&generic_symmetric(g, d, &mut u))?;
                let z01 = z.scalar_block(0, 1);
                out.eq(&format!("degree {d}"), &structured_transpose(&z01)?, &z01);
            }
        }
        Identity::FirstRowBlockSymmetry => {
            let top = if g <= 2 { 5 } else { 4 };
            for d in 2..=top {
                let z = MiddleMatrix::build(&generic_symmetric(g, d, &mut u))?;
                for j in 0..=d - 2 {
                    let b = z.scalar_block(0, j);
                    let rhs = if j <= 1 { b.clone() } else { reversed_within_blocks(&b, g, j) };
                    out.eq(&format!("degree {d} block {j}"), &structured_transpose(&b)?, &rhs);
                }
            }
        }
        Identity::PermutedBorder => {
            for j in 1..=3 {
                let v = polymat::column(border_vector::<Sym>(g, j));
                let lhs = lift(&reversal(g, j), g).mul(&v);
                let rhs = h_col(g).kron(&ident(pow(g, j), g)).mul(&x_col(g, j));
                out.eq(&format!("j={j}"), &lhs, &rhs);
            }
        }
        Identity::ReversalOfMonomials => {
            for j in 1..=3 {
                let lhs = lift(&reversal(g, j), g).mul(&x_row_t(g, j + 1));
                out.eq(&format!("j={j}"), &x_col(g, j + 1), &lhs);
            }
        }
        Identity::KronRowReshape => {
            let k = g;
            let l = g + 1;
            let us = polymat::row((0..k).map(|i| SPoly::x(g + 1, i)).collect());
            let vs = polymat::row((0..l).map(|i| SPoly::h(g + 1, i)).collect());
            let a = u.vector(k * l);
            let big_a = Matrix::from_fn(k, l, |r, c| a[r * l + c].clone());
            let lhs = us.kron(&vs).mul(&lift(&col(&a), g + 1));
            let rhs = us.mul(&lift(&big_a, g + 1)).mul(&polymat::star(&vs));
            out.eq("form", &lhs, &rhs);
        }
        Identity::ColumnKronFactor => {
            let a = u.vector(g);
            let b = u.vector(n2);
            let lhs = col(&a).kron(&col(&b));
            let rhs = col(&a).kron(&Matrix::identity(n2)).mul(&col(&b));
            out.eq("column", &lhs, &rhs);
        }
        Identity::ProductKron => {
            for k in 1..=2 {
                let a = u.vector(pow(g, k));
                let b = u.vector(g);
                let lhs = x_row(g, k).mul(&lift(&col(&a), g)).mul(&x_row(g, 1).mul(&lift(&col(&b), g)));
                let rhs = x_row(g, k).kron(&x_row(g, 1)).mul(&lift(&col(&a).kron(&col(&b)), g));
                out.eq(&format!("k={k}"), &lhs, &rhs);
            }
        }
        Identity::MatOfKronProduct => {
            let p = u.matrix(g, g);
            let w = u.vector(n2);
            let pw = p.kron(&Matrix::identity(g)).mul(&col(&w)).col_vec(0);
            out.eq("matrix", &mat_g(&pw, g)?, &mat_g(&w, g)?.mul(&p.transpose()));
        }
    }
    let name = format!("{id} (g={g})");
    Ok(match out.failure {
        None => CheckReport::new(name, true, format!("{} symbolic equalities", out.checked)),
        Some(f) => CheckReport::new(name, false, f),
    })
}

/// `b_st ↦ b_st Π_{j-1}` on every `1 x g^j` block of a `g x g^{j+1}` matrix.
fn reversed_within_blocks<T: Ring>(b: &Matrix<T>, g: usize, j: usize) -> Matrix<T> {
    let width = pow(g, j);
    let rev = reversal_permutation(g, j - 1);
    Matrix::from_fn(b.rows(), b.cols(), |r, c| {
        let (t, k) = (c / width, c % width);
        b[(r, t * width + rev.image()[k])].clone()
    })
}

/// `x1² x2² + x2² x1²`: its block `𝒵_{02}` is not block symmetric. Returns
/// the two differing blocks `b_12` and `b_21`, or `None` if they agree.
pub fn plain_block_symmetry_counterexample() -> Result<Option<(Vec<crate::Rational>, Vec<crate::Rational>)>> {
    let p = crate::ncparse::parse("x1^2 x2^2 + x2^2 x1^2", 2)?;
    let b = MiddleMatrix::build(&p)?.scalar_block(0, 2);
    let width = 4;
    let b12: Vec<_> = (0..width).map(|k| b[(0, width + k)].clone()).collect();
    let b21: Vec<_> = (0..width).map(|k| b[(1, k)].clone()).collect();
    Ok((b12 != b21).then_some((b12, b21)))
}

/// The symmetric polynomial of degree `d` whose coefficients are
/// independent unknowns, one per pair `{w, reverse(w)}`.
fn generic_symmetric(g: usize, d: usize, u: &mut Unknowns) -> SPoly {
    let mut p = SPoly::zero_in(g);
    for len in 0..=d {
        for w in monomials::<Sym>(g, len) {
            let word = w.terms().next().map(|(w, _)| w.clone()).unwrap();
            let rev = word.reversed();
            if rev < word {
                continue;
            }
            let c = u.scalar();
            let term = if rev == word { w.scale(&c) } else { (&w + &w.involution()).scale(&c) };
            p = &p + &term;
        }
    }
    p
}

/// Runs every identity for each requested `g`.
pub fn verify_all(gs: &[usize]) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for &g in gs {
        for id in Identity::ALL {
            out.push(verify_identity(id, g)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_holds_for_two_letters() {
        for id in Identity::ALL {
            let r = verify_identity(id, 2).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn plain_block_symmetry_fails_beyond_cubic_blocks() {
        let (b12, b21) = plain_block_symmetry_counterexample().unwrap().expect("blocks differ");
        assert_ne!(b12, b21);
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(Identity::from_name(id.name()), Some(id));
        }
        assert_eq!(Identity::MixedProduct.basic_number(), Some(15));
        assert_eq!(Identity::CubicSplit.basic_number(), None);
    }

    #[test]
    fn a_false_identity_is_caught() {
        let mut out = Outcome::new();
        let a = Matrix::column(&[Sym::var(0), Sym::var(1)]);
        let b = Matrix::column(&[Sym::var(1), Sym::var(0)]);
        out.eq("swap", &a, &b);
        assert!(out.failure.unwrap().starts_with("swap: entry (0,0)"));
    }
}
