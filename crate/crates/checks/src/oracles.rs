//! Reference computations that share no code path with the library
//! routines they are compared against.

use nchess_core::freealg::Letter;
use nchess_core::inertia::Inertia;
use nchess_core::kronops::{index_word, pow, stacked_border};
use nchess_core::midmat::MiddleMatrix;
use nchess_core::positivity::{coords_to_tuple, h_dimension};
use nchess_core::{Matrix, NcPoly, QMatrix, QPoly, QTuple, Rational, Result, Sym};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `k! · [t^k] p(x + t h)`, expanded with `t` as a commuting unknown.
pub fn taylor_derivative(p: &QPoly, k: usize) -> QPoly {
    let g = p.g();
    let t = Sym::var(0);
    let lifted: NcPoly<Sym> = p.map_coeffs(|c| Sym::constant(c.clone()));
    let shifted = lifted.substitute(|l: Letter| {
        let x = NcPoly::letter(g, l);
        if l.is_x() {
            &x + &NcPoly::letter(g, l.to_h()).scale(&t)
        } else {
            x
        }
    });
    let fact: i64 = (1..=k as i64).product();
    shifted
        .map_coeffs(|c| c.coeff_of_power(0, k as u32) * Rational::from_integer(BigInt::from(fact)))
}

/// Characteristic polynomial of an integer matrix, coefficients from the
/// constant term up, by the Faddeev–LeVerrier recursion.
pub fn charpoly_integer(a: &Matrix<BigInt>) -> Vec<BigInt> {
    let n = a.rows();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = Matrix::<BigInt>::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m);
        for i in 0..n {
            next[(i, i)] += c[n - k + 1].clone();
        }
        let tr = a.mul(&next).trace();
        c[n - k] = -(tr / BigInt::from(k as i64));
        m = next;
    }
    c
}

fn sign_changes(coeffs: impl Iterator<Item = BigInt>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for c in coeffs.filter(|c| !c.is_zero()) {
        let pos = c.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Inertia of a rational symmetric matrix by Descartes' rule applied to its
/// characteristic polynomial, which has only real roots.
pub fn charpoly_inertia(m: &QMatrix) -> Inertia {
    let n = m.rows();
    let lcm = m.data().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = Matrix::from_fn(n, n, |i, j| (m[(i, j)].clone() * Rational::from_integer(lcm.clone())).to_integer());
    let c = charpoly_integer(&scaled);
    let zero = c.iter().take_while(|x| x.is_zero()).count();
    let plus = sign_changes(c.iter().cloned());
    let minus = sign_changes(c.iter().enumerate().map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() }));
    Inertia { plus, minus, zero }
}

/// The border map at `(X, v)` built column by column from evaluations of the
/// border polynomials `h_i · reverse(m)`.
pub fn direct_border_matrix(xs: &QTuple, v: &[Rational], upto: usize) -> Result<QMatrix> {
    let (g, n) = (xs.g(), xs.n());
    let entries = stacked_border::<Rational>(g, upto);
    let dim = h_dimension(g, n);
    let mut out = Matrix::zeros(entries.len() * n, dim);
    for k in 0..dim {
        let mut coords = vec![Rational::zero(); dim];
        coords[k] = Rational::one();
        let hs = coords_to_tuple(g, n, &coords)?;
        for (pos, e) in entries.iter().enumerate() {
            let col = e.evaluate(xs, Some(&hs))?.mul_vec(v);
            for (r, c) in col.into_iter().enumerate() {
                out[(pos * n + r, k)] = c;
            }
        }
    }
    Ok(out)
}

/// `⟨p(X + tH) v, v⟩` as coefficients in `t`, by evaluation at
/// `t = 0..=d` and Vandermonde inversion.
pub fn t_profile(p: &QPoly, xs: &QTuple, hs: &QTuple, v: &[Rational]) -> Result<Vec<Rational>> {
    let d = p.degree().unwrap_or(0);
    let pts: Vec<Rational> = (0..=d as i64).map(|t| Rational::from_integer(BigInt::from(t))).collect();
    let mut values = Vec::with_capacity(d + 1);
    for t in &pts {
        let shifted = nchess_core::MatrixTuple::new(
            xs.matrices().iter().zip(hs.matrices()).map(|(x, h)| x.add(&h.scale(t))).collect(),
        )?;
        let pv = p.evaluate(&shifted, None)?.mul_vec(v);
        values.push(dot(&pv, v));
    }
    let vander = Matrix::from_fn(d + 1, d + 1, |i, j| (0..j).fold(Rational::one(), |acc, _| acc * pts[i].clone()));
    Ok(vander.inverse()?.mul_vec(&values))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `Σ_j Σ_{|m| ≤ upto} ‖H_j m(X) v‖²` with every word applied directly.
pub fn relaxation_value(xs: &QTuple, hs: &QTuple, v: &[Rational], upto: usize) -> Rational {
    let g = xs.g();
    let mut total = Rational::zero();
    for len in 0..=upto {
        for idx in 0..pow(g, len) {
            let w = index_word(g, len, idx);
            let mut mv = v.to_vec();
            for l in w.letters().iter().rev() {
                mv = xs.get(l.index()).mul_vec(&mv);
            }
            for j in 0..g {
                let e = hs.get(j).mul_vec(&mv);
                total += dot(&e, &e);
            }
        }
    }
    total
}

/// Block symmetry of the first block row: each `𝒵_{0j}` split into `g x g`
/// blocks of width `g^j` satisfies `b_st[w] = b_ts[reverse(w)]`. Returns the
/// first `(j, s, t)` where the unreversed equality `b_st = b_ts` fails.
pub fn first_row_block_symmetry(p: &QPoly) -> Result<(bool, Option<(usize, usize, usize)>)> {
    let mm = MiddleMatrix::build(p)?;
    let g = mm.g();
    let mut reversed_ok = true;
    let mut plain_fail = None;
    for j in 0..=mm.degree() - 2 {
        let b = mm.scalar_block(0, j);
        let width = pow(g, j);
        for s in 0..g {
            for t in 0..g {
                for k in 0..width {
                    let w = index_word(g, j, k);
                    let rk = nchess_core::kronops::word_index(&w.reversed(), g);
                    let st = &b[(s, t * width + k)];
                    reversed_ok &= st == &b[(t, s * width + rk)];
                    if plain_fail.is_none() && st != &b[(t, s * width + k)] {
                        plain_fail = Some((j, s, t));
                    }
                }
            }
        }
    }
    Ok((reversed_ok, plain_fail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nchess_core::ncparse::{parse, parse_with, ParseOptions};
    use nchess_core::rat;

    #[test]
    fn taylor_matches_textbook_quartic() {
        let p = parse("x1^4", 1).unwrap();
        let h = |s: &str| parse_with(s, 1, ParseOptions { allow_h: true }).unwrap();
        assert_eq!(taylor_derivative(&p, 4), h("24 h1^4"));
        assert!(taylor_derivative(&p, 5).is_zero());
    }

    #[test]
    fn sign_counting() {
        let m = Matrix::from_rows(&[
            vec![rat(0, 1), rat(0, 1), rat(2, 1)],
            vec![rat(0, 1), rat(2, 1), rat(0, 1)],
            vec![rat(2, 1), rat(0, 1), rat(0, 1)],
        ])
        .unwrap();
        assert_eq!(charpoly_inertia(&m), Inertia { plus: 2, minus: 1, zero: 0 });
        let z = Matrix::from_rows(&[vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(1, 2)]]).unwrap();
        assert_eq!(charpoly_inertia(&z), Inertia { plus: 1, minus: 0, zero: 1 });
    }

    #[test]
    fn palindromes_have_plain_block_symmetry() {
        let (ok, fail) = first_row_block_symmetry(&parse("x1 x2 x2 x1 + x1^3", 2).unwrap()).unwrap();
        assert!(ok);
        assert!(fail.is_none());
        let (ok, fail) = first_row_block_symmetry(&parse("x1^2 x2^2 + x2^2 x1^2", 2).unwrap()).unwrap();
        assert!(ok);
        assert_eq!(fail.map(|f| f.0), Some(2));
    }
}
