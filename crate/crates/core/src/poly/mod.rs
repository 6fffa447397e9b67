//! Sparse multivariate polynomials with exact rational coefficients.

mod bidegree;
mod localized;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use bidegree::{bidegree, BiDegree};
pub use localized::Localized;
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial;

pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone, Debug, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidInput(format!("bad variable name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidInput(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VarSet(Arc::from(names)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A new variable set with `extra` appended.
    pub fn extended<I, S>(&self, extra: I) -> Result<VarSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarSet::new(
            self.0
                .iter()
                .cloned()
                .chain(extra.into_iter().map(Into::into)),
        )
    }

    fn joined(&self) -> String {
        self.0.join(",")
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// Exponent vector. Ordering is plain lexicographic on the exponents; use a
/// [`MonomialOrder`] for term orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("exponent overflow");
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn try_pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(
            other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.exps.cmp(&other.exps)
    }
}

/// A polynomial over the rationals in a named set of variables.
///
/// Zero coefficients are never stored, so the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Coeff::one())
    }

    pub fn constant(vars: &VarSet, c: Coeff) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    pub fn term(vars: &VarSet, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn monomial(vars: &VarSet, m: Monomial) -> Self {
        Self::term(vars, m, Coeff::one())
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i))
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Result<Self> {
        Ok(Self::var(vars, vars.index(name)?))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// duplicates.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Coeff, Vec<u32>)>,
    {
        let mut p = Polynomial::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "monomial arity does not match ring");
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage order (lexicographic on exponent vectors).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// Terms strictly below `bound` in storage order, largest first.
    pub fn terms_below<'a>(
        &'a self,
        bound: Option<&Monomial>,
    ) -> Box<dyn Iterator<Item = (&'a Monomial, &'a Coeff)> + 'a> {
        match bound {
            None => Box::new(self.terms.iter().rev()),
            Some(b) => Box::new(self.terms.range(..b.clone()).rev()),
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Terms sorted descending in `order`.
    pub fn terms_ordered(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Largest monomial in storage order; used as a pivot in linear algebra.
    pub fn pivot(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    /// Variables occurring with a positive exponent in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.joined(),
                right: other.vars.joined(),
            })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &Coeff, m: &Monomial, other: &Polynomial) {
        debug_assert!(self.vars == other.vars);
        if c.is_zero() {
            return;
        }
        for (mo, co) in &other.terms {
            self.add_term(m.mul(mo), c * co);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mo, c)| (mo.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides every coefficient by the leading coefficient in `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * rat(e as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`. All images must
    /// live in one common ring.
    pub fn substitute_vec(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.vars.len() {
            let missing = self
                .vars
                .names()
                .get(images.len())
                .cloned()
                .unwrap_or_default();
            return Err(Error::MissingImage(missing));
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => {
                // no variables: the polynomial is a constant
                return Ok(self.clone());
            }
        };
        for img in images {
            if img.vars != target {
                return Err(Error::VariableMismatch {
                    left: target.joined(),
                    right: img.vars.joined(),
                });
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitution keyed by variable name. Every variable of `self` needs an
    /// image.
    pub fn substitute(&self, images: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let ordered = self
            .vars
            .names()
            .iter()
            .map(|n| {
                images
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::MissingImage(n.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute_vec(&ordered)
    }

    /// Re-expresses `self` in `target`, matching variables by name. Variables
    /// absent from `target` must not occur in `self`.
    pub fn embed(&self, target: &VarSet) -> Result<Polynomial> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.exp(i) > 0) {
                        return Err(Error::ExtraneousVariable(name.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = e;
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// The polynomial printed with terms descending in `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms_ordered(order).into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono = format_monomial(&self.vars, m);
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&abs.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

fn format_monomial(vars: &VarSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::degrevlex()))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.joined())
    }
}

// Operator impls panic on mismatched rings; use the `try_*` methods where the
// operands come from untrusted input.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// All monomials of total degree `<= max_degree` in `n` variables, in
/// graded order (degree ascending, then lexicographic descending).
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut cur = vec![0u32; n];
        push_compositions(&mut out, &mut cur, 0, d);
    }
    out
}

fn push_compositions(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, rest: u32) {
    let n = cur.len();
    if n == 0 {
        if rest == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = rest;
        out.push(Monomial::new(cur.clone()));
        cur[i] = 0;
        return;
    }
    for e in (0..=rest).rev() {
        cur[i] = e;
        push_compositions(out, cur, i + 1, rest - e);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn p(vars: &VarSet, s: &str) -> Polynomial {
        parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x", "y"]);
        let lhs = &p(&r, "x + y") * &p(&r, "x - y");
        assert_eq!(lhs, p(&r, "x^2 - y^2"));
    }

    #[test]
    fn shifting_the_sl2_relation() {
        let r = ring(&["x", "y", "u", "v"]);
        assert_eq!(&p(&r, "x*v - y*u - 1") + &Polynomial::one(&r), p(&r, "x*v - y*u"));
    }

    #[test]
    fn square_matches_naive_expansion() {
        let r = ring(&["t", "v", "u"]);
        let f = p(&r, "u*t^3 - v*t^2");
        // naive term-by-term product oracle
        let mut naive = Polynomial::zero(&r);
        for (ma, ca) in f.terms() {
            for (mb, cb) in f.terms() {
                naive.add_term(ma.mul(mb), ca * cb);
            }
        }
        let expected = p(&r, "u^2*t^6 - 2*u*v*t^5 + v^2*t^4");
        assert_eq!(f.pow(2), expected);
        assert_eq!(naive, expected);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Polynomial::var(&ring(&["x", "y"]), 0);
        let b = Polynomial::var(&ring(&["x", "z"]), 0);
        assert!(matches!(a.try_add(&b), Err(Error::VariableMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn substitution_into_smooth_extension_chart() {
        let src = ring(&["T1", "T2", "T3", "T4", "T5"]);
        let tgt = ring(&["x", "y", "t"]);
        let f = p(&src, "T1*T4 - T2*T3");
        let images: Vec<_> = ["x", "y", "x*t", "y*t", "x*t^2 - t"]
            .iter()
            .map(|s| p(&tgt, s))
            .collect();
        assert!(f.substitute_vec(&images).unwrap().is_zero());
    }

    #[test]
    fn identity_substitution() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "3*x^2*y - 1/2*y + 7");
        let ids = vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)];
        assert_eq!(f.substitute_vec(&ids).unwrap(), f);
    }

    #[test]
    fn missing_image_is_an_error() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x*y");
        let mut images = BTreeMap::new();
        images.insert("x".to_string(), Polynomial::var(&r, 0));
        assert_eq!(f.substitute(&images), Err(Error::MissingImage("y".into())));
    }

    #[test]
    fn embed_rejects_used_missing_variable() {
        let r = ring(&["x", "y", "u"]);
        let base = ring(&["x", "y"]);
        assert!(p(&r, "x*y").embed(&base).is_ok());
        assert_eq!(
            p(&r, "x*u").embed(&base),
            Err(Error::ExtraneousVariable("u".into()))
        );
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(n + d, n) monomials of degree <= d in n variables
        assert_eq!(monomials_up_to(2, 4).len(), 15);
        assert_eq!(monomials_up_to(3, 3).len(), 20);
        assert_eq!(monomials_up_to(0, 3).len(), 1);
    }

    fn arb_poly(vars: VarSet) -> impl Strategy<Value = Polynomial> {
        let n = vars.len();
        prop::collection::vec(
            (-5i64..=5, prop::collection::vec(0u32..=3, n)),
            0..5,
        )
        .prop_map(move |terms| {
            Polynomial::from_terms(&vars, terms.into_iter().map(|(c, e)| (rat(c), e)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn ring_axioms(
            a in arb_poly(ring(&["x", "y", "z"])),
            b in arb_poly(ring(&["x", "y", "z"])),
            c in arb_poly(ring(&["x", "y", "z"])),
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn substitution_is_a_homomorphism(
            f in arb_poly(ring(&["x", "y"])),
            g in arb_poly(ring(&["x", "y"])),
            i0 in arb_poly(ring(&["s", "t", "w"])),
            i1 in arb_poly(ring(&["s", "t", "w"])),
        ) {
            let images = [i0, i1];
            let sf = f.substitute_vec(&images).unwrap();
            let sg = g.substitute_vec(&images).unwrap();
            prop_assert_eq!((&f * &g).substitute_vec(&images).unwrap(), &sf * &sg);
            prop_assert_eq!((&f + &g).substitute_vec(&images).unwrap(), &sf + &sg);
        }

        #[test]
        fn printer_round_trips(f in arb_poly(ring(&["x", "y", "z"]))) {
            let vars = f.vars().clone();
            prop_assert_eq!(parse_polynomial(&f.to_string(), &vars).unwrap(), f);
        }
    }
}
