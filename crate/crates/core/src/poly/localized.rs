use std::fmt;

use super::{Coeff, Monomial, Polynomial, VarSet};
use crate::error::{Error, Result};

/// An element `num / den` of a polynomial ring localized at monomials.
///
/// The representation is normalized by cancelling every monomial factor
/// shared by `den` and all terms of `num`, so equal elements compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized {
    num: Polynomial,
    den: Monomial,
}

impl Localized {
    pub fn new(num: Polynomial, den: Monomial) -> Self {
        assert_eq!(num.vars().len(), den.len(), "denominator arity");
        let mut out = Localized { num, den };
        out.normalize();
        out
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let n = p.vars().len();
        Localized::new(p, Monomial::one(n))
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::from_poly(Polynomial::var(vars, i))
    }

    pub fn var_inverse(vars: &VarSet, i: usize) -> Self {
        Localized::new(Polynomial::one(vars), Monomial::var(vars.len(), i))
    }

    pub fn constant(vars: &VarSet, c: Coeff) -> Self {
        Self::from_poly(Polynomial::constant(vars, c))
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Monomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The element as a polynomial, if its denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Monomial::one(self.den.len());
            return;
        }
        let mut g = self.den.clone();
        for m in self.num.monomials() {
            g = g.gcd(m);
            if g.is_one() {
                return;
            }
        }
        if g.is_one() {
            return;
        }
        let mut num = Polynomial::zero(self.num.vars());
        for (m, c) in self.num.terms() {
            num.add_term(g.quotient_of(m).expect("gcd divides"), c.clone());
        }
        self.den = g.quotient_of(&self.den).expect("gcd divides");
        self.num = num;
    }

    pub fn add(&self, other: &Localized) -> Localized {
        let l = self.den.lcm(&other.den);
        let a = self.num.mul_monomial(&self.den.quotient_of(&l).unwrap());
        let b = other.num.mul_monomial(&other.den.quotient_of(&l).unwrap());
        Localized::new(&a + &b, l)
    }

    pub fn sub(&self, other: &Localized) -> Localized {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Localized {
        Localized {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Localized) -> Localized {
        Localized::new(&self.num * &other.num, self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Coeff) -> Localized {
        Localized::new(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, k: u32) -> Localized {
        let den = self.den.try_pow(k).expect("exponent overflow");
        Localized::new(self.num.pow(k), den)
    }

    /// Inverse of an element whose numerator is a single term.
    pub fn inverse(&self) -> Result<Localized> {
        if !self.num.is_monomial() {
            return Err(Error::InvalidInput(format!(
                "`{self}` is not a unit in the monomial localization"
            )));
        }
        let (m, c) = self.num.terms().next().unwrap();
        let num = Polynomial::term(self.vars(), self.den.clone(), c.recip());
        Ok(Localized::new(num, m.clone()))
    }

    /// Ring map from the polynomial ring of `f` sending variable `i` to
    /// `images[i]`.
    pub fn substitute(f: &Polynomial, images: &[Localized]) -> Result<Localized> {
        if images.len() != f.vars().len() {
            return Err(Error::MissingImage(
                f.vars().names().get(images.len()).cloned().unwrap_or_default(),
            ));
        }
        let target = match images.first() {
            Some(x) => x.vars().clone(),
            None => return Err(Error::InvalidInput("no variables to substitute".into())),
        };
        let mut acc = Localized::from_poly(Polynomial::zero(&target));
        for (m, c) in f.terms() {
            let mut t = Localized::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }
}

impl fmt::Display for Localized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let den = Polynomial::monomial(self.vars(), self.den.clone());
        write!(f, "({}) / ({})", self.num, den)
    }
}
