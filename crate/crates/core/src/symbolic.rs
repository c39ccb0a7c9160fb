//! Commutative polynomials over the rationals, used as coefficients when an
//! identity has to hold for every value of some scalar unknowns.
//!
//! A `Sym` is a sparse map from monomials `s0^a0 s1^a1 ...` to rationals.
//! Treating the unknowns symbolically turns "holds for all u, w, A" into a
//! single exact equality check.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Ring;

/// Sorted `(variable, exponent)` pairs with positive exponents.
type Monomial = Vec<(u32, u32)>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Sym {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Sym {
    pub fn var(i: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(i, 1)], BigRational::one());
        Sym { terms }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Sym { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant coefficient, if the value has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Coefficient of `var^k` (the other variables must be absent).
    pub fn coeff_of_power(&self, var: u32, k: u32) -> BigRational {
        let key: Monomial = if k == 0 { Vec::new() } else { vec![(var, k)] };
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Substitute rational values for every variable.
    pub fn eval(&self, values: &dyn Fn(u32) -> BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m {
                let x = values(v);
                for _ in 0..e {
                    t *= x.clone();
                }
            }
            acc += t;
        }
        acc
    }

    fn insert(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let parts: Vec<String> = m
                .iter()
                .map(|&(v, e)| if e == 1 { format!("s{v}") } else { format!("s{v}^{e}") })
                .collect();
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for Sym {
    type Output = Sym;
    fn add(mut self, rhs: Sym) -> Sym {
        for (m, c) in rhs.terms {
            Sym::insert(&mut self.terms, m, c);
        }
        self
    }
}

impl Neg for Sym {
    type Output = Sym;
    fn neg(mut self) -> Sym {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for Sym {
    type Output = Sym;
    fn sub(self, rhs: Sym) -> Sym {
        self + (-rhs)
    }
}

impl Mul for Sym {
    type Output = Sym;
    fn mul(self, rhs: Sym) -> Sym {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Sym::insert(&mut terms, mul_monomials(ma, mb), ca * cb);
            }
        }
        Sym { terms }
    }
}

impl Zero for Sym {
    fn zero() -> Self {
        Sym::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Sym {
    fn one() -> Self {
        Sym::constant(BigRational::one())
    }
}

impl Ring for Sym {
    fn from_i64(v: i64) -> Self {
        Sym::constant(BigRational::from_integer(BigInt::from(v)))
    }

    fn is_negative_hint(&self) -> bool {
        self.as_constant().is_some_and(|c| c < BigRational::zero())
    }

    fn coeff_text(&self) -> String {
        if self.terms.len() > 1 || self.as_constant().is_none() {
            format!("({self:?})")
        } else {
            format!("{self:?}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn commutative_product_collects() {
        let a = Sym::var(0);
        let b = Sym::var(1);
        let lhs = (a.clone() + b.clone()) * (a.clone() - b.clone());
        let rhs = a.clone() * a - b.clone() * b;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_leaves_zero() {
        let a = Sym::var(3);
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn evaluation_matches_rational_arithmetic() {
        let s = Sym::var(0) * Sym::var(0) + Sym::from_i64(2) * Sym::var(1);
        let v = s.eval(&|i| if i == 0 { rat(3, 2) } else { rat(-1, 1) });
        assert_eq!(v, rat(1, 4));
    }
}
