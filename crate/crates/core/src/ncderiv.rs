//! Directional derivatives in the direction `h`.
//!
//! The derivative of a word replaces one `x_j` by `h_j`, summed over the
//! positions. The k-th derivative repeats this k times, which amounts to
//! `k!` times the sum over all k-element position sets.

use crate::error::{NcError, Result};
use crate::freealg::{NcPoly, Word};
use crate::scalar::Ring;

/// One replacement step, applied to a polynomial that may already contain
/// direction letters.
fn replace_once<S: Ring>(p: &NcPoly<S>) -> NcPoly<S> {
    let mut out = Vec::new();
    for (w, c) in p.terms() {
        for (pos, l) in w.letters().iter().enumerate() {
            if l.is_x() {
                let mut letters = w.letters().to_vec();
                letters[pos] = l.to_h();
                out.push((Word::new(letters), c.clone()));
            }
        }
    }
    NcPoly::from_terms(p.g(), out)
}

/// `p'(x)[h]`.
pub fn directional_derivative<S: Ring>(p: &NcPoly<S>) -> Result<NcPoly<S>> {
    kth_derivative(p, 1)
}

/// `p^{(k)}(x)[h]`, homogeneous of degree `k` in `h`.
pub fn kth_derivative<S: Ring>(p: &NcPoly<S>, k: usize) -> Result<NcPoly<S>> {
    if k == 0 {
        return Err(NcError::InvalidArgument("derivative order must be at least 1".into()));
    }
    p.require_x_only()?;
    let mut out = p.clone();
    for _ in 0..k {
        if out.is_zero() {
            break;
        }
        out = replace_once(&out);
    }
    Ok(out)
}

/// `p''(x)[h]`.
pub fn hessian<S: Ring>(p: &NcPoly<S>) -> Result<NcPoly<S>> {
    kth_derivative(p, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::{parse, parse_with, ParseOptions};
    use num_rational::BigRational;

    fn hp(s: &str, g: usize) -> NcPoly<BigRational> {
        parse_with(s, g, ParseOptions { allow_h: true }).unwrap()
    }

    #[test]
    fn fourth_power_derivatives() {
        let p = parse("x1^4", 1).unwrap();
        assert_eq!(
            directional_derivative(&p).unwrap(),
            hp("h1 x1 x1 x1 + x1 h1 x1 x1 + x1 x1 h1 x1 + x1 x1 x1 h1", 1)
        );
        assert_eq!(
            hessian(&p).unwrap(),
            hp("2h1h1x1x1 + 2h1x1h1x1 + 2h1x1x1h1 + 2x1h1h1x1 + 2x1h1x1h1 + 2x1x1h1h1", 1)
        );
        assert_eq!(kth_derivative(&p, 3).unwrap(), hp("6(h1h1h1x1 + h1h1x1h1 + h1x1h1h1 + x1h1h1h1)", 1));
        assert_eq!(kth_derivative(&p, 4).unwrap(), hp("24 h1^4", 1));
        assert!(kth_derivative(&p, 5).unwrap().is_zero());
    }

    #[test]
    fn sandwich_derivative() {
        let p = parse("x2 x1 x2", 2).unwrap();
        assert_eq!(directional_derivative(&p).unwrap(), hp("h2x1x2 + x2h1x2 + x2x1h2", 2));
    }

    #[test]
    fn mixed_second_derivative() {
        let p = parse("x1^2 x2", 2).unwrap();
        assert_eq!(kth_derivative(&p, 2).unwrap(), hp("2(h1h1x2 + h1x1h2 + x1h1h2)", 2));
    }

    #[test]
    fn palindrome_hessian() {
        let p = parse("x1 x2 x1", 2).unwrap();
        assert_eq!(hessian(&p).unwrap(), hp("2(h1h2x1 + h1x2h1 + x1h2h1)", 2));
    }

    #[test]
    fn constants_and_linear_terms() {
        assert!(directional_derivative(&parse("7", 1).unwrap()).unwrap().is_zero());
        assert!(hessian(&parse("x1 + 3", 1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn direction_letters_rejected() {
        assert_eq!(hessian(&hp("h1x1", 1)), Err(NcError::DirectionLetters));
    }
}
