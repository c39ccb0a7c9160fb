//! Polynomials whose Hessian has at most one negative square.
//!
//! [`classify_one_negative`] reads off the structure from the scalar middle
//! matrix and returns the decomposition
//! `p = p0 + p1 + p2 + φq + qᵀφ + φ f0 φ` with `φ = [x]u`, together with the
//! positive semidefinite matrix that certifies it. The direction `u` is kept
//! unnormalized (first nonzero entry 1); all formulas below are written so
//! that they agree with the unit-vector versions up to a congruence by a
//! positive diagonal, which preserves both semidefiniteness and the
//! reconstruction.

use num_traits::{One, Zero};

use crate::error::{NcError, Result};
use crate::freealg::{NcPoly, Word};
use crate::inertia::{exact_inertia, min_signature_hessian, Inertia};
use crate::kronops::{mat_g, structured_transpose};
use crate::matrix::Matrix;
use crate::midmat::MiddleMatrix;
use crate::report::CheckReport;
use crate::scalar::rat;
use crate::{QMatrix, QPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    SigmaZero,
    SigmaOne,
    SigmaAtLeastTwo,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::SigmaZero => "SigmaZero",
            Verdict::SigmaOne => "SigmaOne",
            Verdict::SigmaAtLeastTwo => "SigmaAtLeastTwo",
        }
    }
}

/// The four mutually exclusive shapes of a scalar middle matrix with at
/// most one negative eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// Degree four: the top block of the first row has rank one.
    TopRankOne,
    /// Degree three: no top block, the cubic block has rank one.
    CubicRankOne,
    /// Degree two with one negative eigenvalue.
    Quadratic,
    /// No negative eigenvalue; degree at most two.
    Convex,
}

impl Case {
    pub fn number(self) -> u8 {
        match self {
            Case::TopRankOne => 1,
            Case::CubicRankOne => 2,
            Case::Quadratic => 3,
            Case::Convex => 4,
        }
    }
}

/// Structural data of a polynomial with at most one negative Hessian
/// square.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureData {
    /// `u`, scaled so its first nonzero entry is 1.
    pub direction: Vec<Rational>,
    /// `uᵀu`.
    pub direction_norm_sq: Rational,
    /// `y ∈ ℝ^g`, the cubic coefficient along `u`.
    pub cubic_coeff: Vec<Rational>,
    /// `v ∈ ℝ^{g²}` with `(mat_g v) u = 0`.
    pub mixed_coeff: Vec<Rational>,
    /// `A`, the symmetric quartic matrix.
    pub quartic_matrix: QMatrix,
    pub constant: Rational,
    pub linear: QPoly,
    pub quadratic: QPoly,
    /// `q`.
    pub cofactor: QPoly,
    /// `f0 = ½ xᵀ A x`.
    pub quartic_factor: QPoly,
    /// `φ = [x]u`.
    pub direction_form: QPoly,
    /// `f1` with `q = f1 φ`, present in degree three.
    pub cubic_factor: Option<QPoly>,
    /// `[[P𝒵₀₀P, (mat v)ᵀ], [mat v, A]]`.
    pub middle_certificate: QMatrix,
    pub middle_certificate_inertia: Inertia,
    /// `[[P Q(p2) P, P Q(q)ᵀ], [Q(q) P, Q(f0)]]`, equal to half the middle
    /// certificate.
    pub form_certificate: QMatrix,
    pub form_certificate_inertia: Inertia,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub g: usize,
    pub degree: Option<usize>,
    /// Inertia of the scalar middle matrix; `None` below degree two.
    pub scalar_inertia: Option<Inertia>,
    pub verdict: Verdict,
    /// `None` when the verdict is [`Verdict::SigmaAtLeastTwo`].
    pub case: Option<Case>,
    pub data: Option<StructureData>,
    /// Inertia of the reduced matrix `[[P𝒵₀₀P, P𝒵₀₁], [𝒵₁₀P, 𝒵₁₁]]` in the
    /// top-rank-one case.
    pub reduced_inertia: Option<Inertia>,
}

impl ClassificationReport {
    /// `(σ₊, σ₋)` of the Hessian.
    pub fn signature(&self) -> (usize, usize) {
        self.scalar_inertia.map_or((0, 0), |i| (i.plus, i.minus))
    }
}

/// Coefficient matrix of a homogeneous quadratic.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadFormMatrix {
    pub matrix: QMatrix,
}

impl QuadFormMatrix {
    pub fn to_poly(&self) -> QPoly {
        quadratic_poly(&self.matrix)
    }
}

fn internal(msg: impl Into<String>) -> NcError {
    NcError::Internal(msg.into())
}

fn half() -> Rational {
    rat(1, 2)
}

/// `[x]u`.
pub fn linear_poly(u: &[Rational]) -> QPoly {
    let g = u.len();
    NcPoly::from_terms(g, u.iter().enumerate().map(|(i, c)| (Word::from_x_indices(&[i]), c.clone())))
}

/// `Σ m_ij x_i x_j`.
pub fn quadratic_poly(m: &QMatrix) -> QPoly {
    let g = m.rows();
    NcPoly::from_terms(
        g,
        (0..g).flat_map(|i| (0..g).map(move |j| (i, j))).map(|(i, j)| (Word::from_x_indices(&[i, j]), m[(i, j)].clone())),
    )
}

pub fn quad_form_matrix(q: &QPoly) -> Result<QuadFormMatrix> {
    q.require_x_only()?;
    let g = q.g();
    let mut matrix = Matrix::zeros(g, g);
    for (w, c) in q.terms() {
        if w.len() != 2 {
            return Err(NcError::InvalidArgument(format!("{q} is not a homogeneous quadratic")));
        }
        let l = w.letters();
        matrix[(l[0].index(), l[1].index())] = c.clone();
    }
    Ok(QuadFormMatrix { matrix })
}

/// The vector `u` of a linear form `[x]u`.
pub fn linear_form_vector(phi: &QPoly) -> Result<Vec<Rational>> {
    phi.require_x_only()?;
    let mut u = vec![Rational::zero(); phi.g()];
    for (w, c) in phi.terms() {
        if w.len() != 1 {
            return Err(NcError::InvalidArgument(format!("{phi} is not a linear form")));
        }
        u[w.letters()[0].index()] = c.clone();
    }
    Ok(u)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn first_nonzero(v: &[Rational]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Scales so the first nonzero entry is 1.
fn normalized(v: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = first_nonzero(&v)?;
    let s = v[k].clone();
    Some(v.into_iter().map(|c| c / s.clone()).collect())
}

fn projector(u: &[Rational]) -> QMatrix {
    let n2 = dot(u, u);
    let g = u.len();
    Matrix::from_fn(g, g, |i, j| {
        let id = if i == j { Rational::one() } else { Rational::zero() };
        id - u[i].clone() * u[j].clone() / n2.clone()
    })
}

/// Direction of the first nonzero column, normalized.
fn rank_one_column(m: &QMatrix) -> Result<Vec<Rational>> {
    (0..m.cols())
        .find_map(|c| normalized(m.col_vec(c)))
        .ok_or_else(|| internal("expected a nonzero rank-one block"))
}

/// `q = ¼ (u⊗y + 2v)ᵀ ([x]_2)ᵀ`.
fn cofactor_poly(u: &[Rational], y: &[Rational], v: &[Rational]) -> QPoly {
    let g = u.len();
    let quarter = rat(1, 4);
    NcPoly::from_terms(
        g,
        (0..g).flat_map(|i| (0..g).map(move |j| (i, j))).map(|(i, j)| {
            let c = u[i].clone() * y[j].clone() + rat(2, 1) * v[i * g + j].clone();
            (Word::from_x_indices(&[j, i]), c * quarter.clone())
        }),
    )
}

fn block2(a: &QMatrix, b: &QMatrix, c: &QMatrix, d: &QMatrix) -> QMatrix {
    a.hstack(b).vstack(&c.hstack(d))
}

/// `p0 + p1 + p2 + φq + qᵀφ + φ f0 φ` with `φ = [x]u`.
pub fn synthesize(
    constant: &Rational,
    linear: &QPoly,
    quadratic: &QPoly,
    direction: &[Rational],
    cofactor: &QPoly,
    quartic_factor: &QPoly,
) -> Result<QPoly> {
    let g = direction.len();
    if first_nonzero(direction).is_none() {
        return Err(NcError::InvalidArgument("direction must be nonzero".into()));
    }
    for (name, p, deg) in [("p1", linear, 1), ("p2", quadratic, 2), ("q", cofactor, 2), ("f0", quartic_factor, 2)] {
        p.require_x_only()?;
        if p.g() != g && !p.is_zero() {
            return Err(NcError::VariableCount(p.g(), g));
        }
        if p.terms().any(|(w, _)| w.len() != deg) {
            return Err(NcError::InvalidArgument(format!("{name} must be homogeneous of degree {deg}")));
        }
    }
    let lift = |p: &QPoly| p.clone().with_g(g);
    let phi = linear_poly(direction);
    let q = lift(cofactor);
    let mut out = NcPoly::constant(g, constant.clone());
    out = &out + &lift(linear);
    out = &out + &lift(quadratic);
    out = &out + &(&phi * &q);
    out = &out + &(&q.involution() * &phi);
    out = &out + &(&(&phi * &lift(quartic_factor)) * &phi);
    Ok(out)
}

/// Builds every derived quantity from `(u, y, v, A)`, checks the
/// certificate identities and the reconstruction.
fn assemble(
    p: &QPoly,
    u: Vec<Rational>,
    y: Vec<Rational>,
    v: Vec<Rational>,
    a: QMatrix,
    z00: &QMatrix,
) -> Result<StructureData> {
    let g = u.len();
    let n2 = dot(&u, &u);
    let pr = projector(&u);
    let mv = mat_g(&v, g)?;
    if mv.mul_vec(&u).iter().any(|c| !c.is_zero()) {
        return Err(internal("(mat v) u is not zero"));
    }
    if !a.is_symmetric() {
        return Err(internal("quartic matrix is not symmetric"));
    }
    let e1 = block2(&pr.mul(z00).mul(&pr), &mv.transpose(), &mv, &a);

    let linear = p.homogeneous_part(1);
    let quadratic = p.homogeneous_part(2);
    let cofactor = cofactor_poly(&u, &y, &v);
    let quartic_factor = quadratic_poly(&a.scale(&half()));
    let qp2 = quad_form_matrix(&quadratic.clone().with_g(g))?.matrix;
    let qq = quad_form_matrix(&cofactor)?.matrix;
    let qf0 = quad_form_matrix(&quartic_factor.clone().with_g(g))?.matrix;
    let e2 = block2(&pr.mul(&qp2).mul(&pr), &pr.mul(&qq.transpose()), &qq.mul(&pr), &qf0);
    if e1 != e2.scale(&rat(2, 1)) {
        return Err(internal("E1 differs from 2 E2"));
    }
    let (e1_inertia, _) = exact_inertia(&e1)?;
    let (e2_inertia, _) = exact_inertia(&e2)?;
    if !e1_inertia.is_psd() {
        return Err(internal(format!("E1 is not positive semidefinite: {e1_inertia:?}")));
    }
    let constant = p.constant_term();
    let rebuilt = synthesize(&constant, &linear, &quadratic, &u, &cofactor, &quartic_factor)?;
    if rebuilt != *p {
        return Err(internal(format!("reconstruction gives {rebuilt}, expected {p}")));
    }
    let cubic_factor = (p.degree() == Some(3)).then(|| linear_poly(&y).scale(&rat(1, 4)));
    if let Some(f1) = &cubic_factor {
        if &(f1 * &linear_poly(&u)) != &cofactor {
            return Err(internal("q does not factor as f1 φ"));
        }
    }
    Ok(StructureData {
        direction_form: linear_poly(&u),
        direction: u,
        direction_norm_sq: n2,
        cubic_coeff: y,
        mixed_coeff: v,
        quartic_matrix: a,
        constant,
        linear,
        quadratic,
        cofactor,
        quartic_factor,
        cubic_factor,
        middle_certificate: e1,
        middle_certificate_inertia: e1_inertia,
        form_certificate: e2,
        form_certificate_inertia: e2_inertia,
    })
}

fn unit(g: usize) -> Vec<Rational> {
    (0..g).map(|i| if i == 0 { Rational::one() } else { Rational::zero() }).collect()
}

fn zeros(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// `uᵀ M (K⊗I)` for a `g x g²` block `M`.
fn contract_first(u: &[Rational], m: &QMatrix, k: &QMatrix) -> Vec<Rational> {
    let g = u.len();
    let left = Matrix::row(u).mul(m);
    left.mul(&k.kron(&Matrix::identity(g))).row_slice(0).to_vec()
}

/// `u (uᵀ⊗yᵀ) + u vᵀ + (u vᵀ)^{sT}`.
fn cubic_block(u: &[Rational], y: &[Rational], v: &[Rational]) -> Result<QMatrix> {
    let uc = Matrix::column(u);
    let first = uc.mul(&Matrix::row(u).kron(&Matrix::row(y)));
    let uv = uc.mul(&Matrix::row(v));
    Ok(first.add(&uv).add(&structured_transpose(&uv)?))
}

/// Decides whether the Hessian of `p` has at most one negative square and,
/// if so, extracts the structural data.
pub fn classify_one_negative(p: &QPoly) -> Result<ClassificationReport> {
    p.require_x_only()?;
    if !p.is_symmetric() {
        return Err(NcError::NotSymmetric);
    }
    let g = p.g();
    let mut report = ClassificationReport {
        g,
        degree: p.degree(),
        scalar_inertia: None,
        verdict: Verdict::SigmaZero,
        case: Some(Case::Convex),
        data: None,
        reduced_inertia: None,
    };
    let d = match p.degree() {
        None => return Ok(report),
        Some(d) if d < 2 => {
            let z00 = Matrix::zeros(g, g);
            report.data = Some(assemble(p, unit(g), zeros(g), zeros(g * g), Matrix::zeros(g, g), &z00)?);
            return Ok(report);
        }
        Some(d) => d,
    };
    let mm = MiddleMatrix::build(p)?;
    let z = mm.scalar();
    let (inertia, cert) = exact_inertia(&z)?;
    report.scalar_inertia = Some(inertia);
    let z00 = mm.scalar_block(0, 0);
    match inertia.minus {
        0 => {
            if d > 2 {
                return Err(internal(format!("semidefinite scalar middle matrix in degree {d}")));
            }
            report.data = Some(assemble(p, unit(g), zeros(g), zeros(g * g), Matrix::zeros(g, g), &z00)?);
        }
        1 => {
            report.verdict = Verdict::SigmaOne;
            match d {
                2 => {
                    report.case = Some(Case::Quadratic);
                    let dir = cert.negative_directions().remove(0);
                    let u = normalized(z00.mul_vec(&dir)).ok_or_else(|| internal("zero eigen-direction"))?;
                    report.data = Some(assemble(p, u, zeros(g), zeros(g * g), Matrix::zeros(g, g), &z00)?);
                }
                3 => {
                    report.case = Some(Case::CubicRankOne);
                    let z01 = mm.scalar_block(0, 1);
                    if z01.rank_exact() != 1 {
                        return Err(internal("cubic block does not have rank one"));
                    }
                    let u = rank_one_column(&z01)?;
                    let n2 = dot(&u, &u);
                    let y: Vec<_> = contract_first(&u, &z01, &Matrix::column(&u))
                        .into_iter()
                        .map(|c| c / (n2.clone() * n2.clone()))
                        .collect();
                    let v = zeros(g * g);
                    if cubic_block(&u, &y, &v)? != z01 {
                        return Err(internal("cubic block is not u(uᵀ⊗yᵀ)"));
                    }
                    report.data = Some(assemble(p, u, y, v, Matrix::zeros(g, g), &z00)?);
                }
                4 => {
                    report.case = Some(Case::TopRankOne);
                    let (data, reduced) = top_rank_one(p, &mm, &z00, inertia)?;
                    report.data = Some(data);
                    report.reduced_inertia = Some(reduced);
                }
                _ => return Err(internal(format!("one negative square in degree {d}"))),
            }
        }
        _ => {
            report.verdict = Verdict::SigmaAtLeastTwo;
            report.case = None;
        }
    }
    Ok(report)
}

fn top_rank_one(
    p: &QPoly,
    mm: &MiddleMatrix<Rational>,
    z00: &QMatrix,
    inertia: Inertia,
) -> Result<(StructureData, Inertia)> {
    let g = mm.g();
    let gg = g * g;
    let z02 = mm.scalar_block(0, 2);
    if z02.rank_exact() != 1 {
        return Err(internal("top block does not have rank one"));
    }
    let u = rank_one_column(&z02)?;
    let r0 = first_nonzero(&u).unwrap();
    let w = z02.row_slice(r0).to_vec();
    if Matrix::column(&u).mul(&Matrix::row(&w)) != z02 {
        return Err(internal("top block is not u wᵀ"));
    }
    let w1 = w[r0 * gg..(r0 + 1) * gg].to_vec();
    let uw1: Vec<_> = u.iter().flat_map(|ui| w1.iter().map(move |c| ui.clone() * c.clone())).collect();
    if uw1 != w {
        return Err(internal("w is not u ⊗ w1"));
    }
    let a = mat_g(&w1, g)?;

    let n2 = dot(&u, &u);
    let pr = projector(&u);
    let z01 = mm.scalar_block(0, 1);
    let y: Vec<_> = contract_first(&u, &z01, &Matrix::column(&u))
        .into_iter()
        .map(|c| c / (n2.clone() * n2.clone()))
        .collect();
    let v: Vec<_> = contract_first(&u, &z01, &pr).into_iter().map(|c| c / n2.clone()).collect();
    if cubic_block(&u, &y, &v)? != z01 {
        return Err(internal("cubic block does not match u, y, v"));
    }
    let big_u = Matrix::column(&u).kron(&Matrix::identity(g));
    if big_u.mul(&a).mul(&big_u.transpose()) != mm.scalar_block(1, 1) {
        return Err(internal("middle quartic block is not U A Uᵀ"));
    }
    let reduced = block2(
        &pr.mul(z00).mul(&pr),
        &pr.mul(&z01),
        &z01.transpose().mul(&pr),
        &mm.scalar_block(1, 1),
    );
    let (ri, _) = exact_inertia(&reduced)?;
    if ri.plus + 1 != inertia.plus || ri.minus + 1 != inertia.minus {
        return Err(internal(format!("reduced inertia {ri:?} does not account for {inertia:?}")));
    }
    Ok((assemble(p, u, y, v, a, z00)?, ri))
}

/// `d ≤ 2σ₊ + 2` and `d ≤ 2σ₋ + 2` for the Hessian signature.
pub fn degree_bound_check(p: &QPoly) -> Result<CheckReport> {
    let d = p.degree().unwrap_or(0);
    if d < 2 {
        return Err(NcError::DegreeTooLow { got: d, need: 2 });
    }
    let s = min_signature_hessian(p)?;
    let ok = d <= 2 * s.plus + 2 && d <= 2 * s.minus + 2;
    Ok(CheckReport::new(
        "degree bound",
        ok,
        format!("d = {d}, σ = ({}, {}): {d} ≤ {} and {d} ≤ {}", s.plus, s.minus, 2 * s.plus + 2, 2 * s.minus + 2),
    ))
}

/// Given `φ f1 = f2 ψ` with `φ = [x]u`, `ψ = [x]b`, returns `f3` with
/// `f1 = f3 ψ` and `f2 = φ f3`.
pub fn berkovich_factor(u: &[Rational], b: &[Rational], f1: &QPoly, f2: &QPoly) -> Result<QPoly> {
    let g = u.len();
    if b.len() != g {
        return Err(NcError::VariableCount(b.len(), g));
    }
    let t = first_nonzero(b).ok_or_else(|| NcError::Hypothesis("ψ is zero".into()))?;
    let f1 = f1.clone().with_g(g);
    let f2 = f2.clone().with_g(g);
    if !f1.constant_term().is_zero() || !f2.constant_term().is_zero() {
        return Err(NcError::Hypothesis("f1 and f2 must vanish at 0".into()));
    }
    let phi = linear_poly(u);
    let psi = linear_poly(b);
    if &phi * &f1 != &f2 * &psi {
        return Err(NcError::Hypothesis("φ f1 ≠ f2 ψ".into()));
    }
    // y = M x with row t of M equal to b, so ψ(x) = y_t
    let mut m = Matrix::<Rational>::identity(g);
    for (k, c) in b.iter().enumerate() {
        m[(t, k)] = c.clone();
    }
    let minv = m.inverse()?;
    let f1y = f1.substitute_linear(&minv)?;
    let mut stripped = Vec::new();
    for (w, c) in f1y.terms() {
        let l = w.letters();
        match l.last() {
            Some(last) if last.is_x() && last.index() == t => {
                stripped.push((w.slice(0, w.len() - 1), c.clone()));
            }
            _ => return Err(internal("f1 has a word not ending in ψ after the change of variables")),
        }
    }
    let f3 = NcPoly::from_terms(g, stripped).substitute_linear(&m)?;
    if &f3 * &psi != f1 || &phi * &f3 != f2 {
        return Err(internal("recovered factor fails the identities"));
    }
    Ok(f3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse;

    fn q(s: &str, g: usize) -> QPoly {
        parse(s, g).unwrap()
    }

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn fourth_power_is_top_rank_one() {
        let rep = classify_one_negative(&q("x1^4", 1)).unwrap();
        assert_eq!(rep.verdict, Verdict::SigmaOne);
        assert_eq!(rep.case, Some(Case::TopRankOne));
        assert_eq!(rep.signature(), (2, 1));
        let d = rep.data.unwrap();
        assert_eq!(d.direction, vec![r(1)]);
        assert_eq!(d.quartic_matrix, Matrix::from_rows(&[vec![r(2)]]).unwrap());
        assert_eq!(d.cubic_coeff, vec![r(0)]);
        assert_eq!(d.mixed_coeff, vec![r(0)]);
        assert_eq!(d.quartic_factor, q("x1^2", 1));
        assert!(d.cofactor.is_zero());
        assert_eq!(d.middle_certificate, Matrix::from_rows(&[vec![r(0), r(0)], vec![r(0), r(2)]]).unwrap());
        assert!(d.middle_certificate_inertia.is_psd());
    }

    #[test]
    fn palindrome_cubic_is_cubic_rank_one() {
        let rep = classify_one_negative(&q("x1 x2 x1", 2)).unwrap();
        assert_eq!(rep.verdict, Verdict::SigmaOne);
        assert_eq!(rep.case, Some(Case::CubicRankOne));
        let d = rep.data.unwrap();
        assert_eq!(d.direction, vec![r(1), r(0)]);
        assert_eq!(d.cubic_coeff, vec![r(0), r(2)]);
        assert_eq!(d.cofactor, q("1/2 x2 x1", 2));
        assert_eq!(d.cubic_factor, Some(q("1/2 x2", 2)));
        assert!(d.quartic_matrix.is_zero());
        let phi = &d.direction_form;
        assert_eq!(&(phi * &d.cofactor) + &(&d.cofactor.involution() * phi), q("x1 x2 x1", 2));
    }

    #[test]
    fn convex_and_zero() {
        let rep = classify_one_negative(&q("x1^2 + x2^2", 2)).unwrap();
        assert_eq!((rep.verdict, rep.case), (Verdict::SigmaZero, Some(Case::Convex)));
        let rep = classify_one_negative(&q("0", 2)).unwrap();
        assert_eq!(rep.verdict, Verdict::SigmaZero);
        assert!(rep.data.is_none());
        let rep = classify_one_negative(&q("3 + x1", 2)).unwrap();
        assert_eq!(rep.verdict, Verdict::SigmaZero);
        assert!(rep.data.is_some());
    }

    #[test]
    fn indefinite_quadratic() {
        let p = q("x1^2 - x2^2 + x1 x2 + x2 x1", 2);
        let rep = classify_one_negative(&p).unwrap();
        assert_eq!((rep.verdict, rep.case), (Verdict::SigmaOne, Some(Case::Quadratic)));
        let rep = classify_one_negative(&q("x1^2 - x2^2 - x3^2", 3)).unwrap();
        assert_eq!(rep.verdict, Verdict::SigmaAtLeastTwo);
    }

    #[test]
    fn high_degree_has_two_negative_squares() {
        let rep = classify_one_negative(&q("x1^6", 1)).unwrap();
        assert_eq!(rep.verdict, Verdict::SigmaAtLeastTwo);
        assert!(classify_one_negative(&q("x1 x2", 2)).is_err());
    }

    #[test]
    fn synthesize_examples() {
        let one = vec![r(1)];
        let zero = QPoly::zero_in(1);
        let p = synthesize(&r(0), &zero, &zero, &one, &zero, &q("x1^2", 1)).unwrap();
        assert_eq!(p, q("x1^4", 1));
        let p = synthesize(&r(0), &zero, &zero, &one, &zero, &zero).unwrap();
        assert!(p.is_zero());
        assert!(synthesize(&r(0), &q("x1^2", 1), &zero, &one, &zero, &zero).is_err());
        assert!(synthesize(&r(0), &zero, &zero, &[r(0)], &zero, &zero).is_err());
    }

    #[test]
    fn quad_form_matrix_examples() {
        let m = quad_form_matrix(&q("x1 x2", 2)).unwrap().matrix;
        assert_eq!(m, Matrix::from_rows(&[vec![r(0), r(1)], vec![r(0), r(0)]]).unwrap());
        let m = quad_form_matrix(&q("1/2 x2 x1", 2)).unwrap();
        assert_eq!(m.matrix[(1, 0)], rat(1, 2));
        assert_eq!(m.to_poly(), q("1/2 x2 x1", 2));
        assert!(quad_form_matrix(&q("x1", 2)).is_err());
    }

    #[test]
    fn degree_bounds() {
        assert!(degree_bound_check(&q("x1^4", 1)).unwrap().passed());
        assert!(degree_bound_check(&q("x1^2", 1)).unwrap().passed());
        assert!(degree_bound_check(&q("x1", 1)).is_err());
    }

    #[test]
    fn linear_form_factor_examples() {
        let f3 = berkovich_factor(&[r(1)], &[r(1)], &q("x1^2", 1), &q("x1^2", 1)).unwrap();
        assert_eq!(f3, q("x1", 1));
        let f3 = berkovich_factor(&[r(1), r(0)], &[r(0), r(1)], &q("x1 x2", 2), &q("x1 x1", 2)).unwrap();
        assert_eq!(f3, q("x1", 2));
        let u = [r(1), r(2)];
        let b = [r(3), r(-1)];
        let f3 = q("x1 x2 - 2 x2 + x2 x2 x1", 2);
        let f1 = &f3 * &linear_poly(&b);
        let f2 = &linear_poly(&u) * &f3;
        assert_eq!(berkovich_factor(&u, &b, &f1, &f2).unwrap(), f3);
        assert!(berkovich_factor(&u, &[r(0), r(0)], &f1, &f2).is_err());
        assert!(berkovich_factor(&u, &b, &f2, &f1).is_err());
    }
}
