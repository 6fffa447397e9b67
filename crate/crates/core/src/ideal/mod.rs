//! Ideals, Gröbner bases and presented quotient rings.

mod groebner;
mod monomial;
mod ring;

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::span_basis;
use crate::poly::{Monomial, MonomialOrder, OrderKind, Polynomial, VarSet};

pub use monomial::{maximal_ideal_power, monomial_ideal, weighted_monomial_ideal};
pub use ring::PresentedRing;


use groebner::Sorted;

/// A reduced Gröbner basis: monic, interreduced, ascending by leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    vars: VarSet,
    sorted: Vec<Sorted>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn compute(vars: &VarSet, gens: &[Polynomial], order: &MonomialOrder) -> Self {
        let sorted = groebner::buchberger(gens, order);
        let polys = sorted.iter().map(|s| s.to_poly(vars)).collect();
        GroebnerBasis {
            order: order.clone(),
            vars: vars.clone(),
            sorted,
            polys,
        }
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|s| s.lead())
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0].lead().is_one()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        if f.is_zero() || self.sorted.is_empty() {
            return f.clone();
        }
        groebner::reduce_full(Sorted::from_poly(f, &self.order), &self.sorted, &self.order)
            .to_poly(&self.vars)
    }

    /// Number of standard monomials, when finite.
    pub fn standard_monomial_count(&self) -> Option<usize> {
        let n = self.vars.len();
        let leads: Vec<&Monomial> = self.leading_monomials().collect();
        if leads.iter().any(|m| m.is_one()) {
            return Some(0);
        }
        let mut bounds = vec![0u32; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            *b = leads
                .iter()
                .filter(|m| m.degree() == m.exp(i) && m.exp(i) > 0)
                .map(|m| m.exp(i))
                .min()?;
        }
        let mut count = 0usize;
        let mut cur = vec![0u32; n];
        loop {
            let m = Monomial::new(cur.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return Some(count);
                }
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// S-polynomials of all pairs reduce to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (a, b) = (&self.polys[i], &self.polys[j]);
                let la = a.leading_term(&self.order).unwrap();
                let lb = b.leading_term(&self.order).unwrap();
                let l = la.0.lcm(lb.0);
                let mut s = Polynomial::zero(&self.vars);
                s.add_scaled(&la.1.recip(), &la.0.quotient_of(&l).unwrap(), a);
                s.add_scaled(&(-lb.1.recip()), &lb.0.quotient_of(&l).unwrap(), b);
                if !self.reduce(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of testing whether an ideal is primary to the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Primality {
    Primary,
    NotPrimary,
    /// The power search bound was exhausted without a decision.
    Indeterminate,
}

/// An ideal of a polynomial ring with a lazily computed Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    vars: VarSet,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    pub fn new(vars: &VarSet, gens: Vec<Polynomial>) -> Result<Self> {
        Self::with_order(vars, gens, MonomialOrder::degrevlex())
    }

    pub fn with_order(vars: &VarSet, gens: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        for g in &gens {
            if g.vars() != vars {
                return Err(Error::VariableMismatch {
                    left: vars.to_string(),
                    right: g.vars().to_string(),
                });
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            vars: vars.clone(),
            gens,
            order,
            gb: OnceLock::new(),
        })
    }

    /// Ideal generated by a linearly independent subset of the span of
    /// `gens`, which keeps generator lists of products and powers small.
    pub fn from_span(vars: &VarSet, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.vars() != vars {
                return Err(Error::VariableMismatch {
                    left: vars.to_string(),
                    right: g.vars().to_string(),
                });
            }
        }
        Self::new(vars, span_basis(gens))
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::new(vars, Vec::new()).unwrap()
    }

    pub fn unit(vars: &VarSet) -> Self {
        Self::new(vars, vec![Polynomial::one(vars)]).unwrap()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The same ideal under another monomial order.
    pub fn reordered(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            vars: self.vars.clone(),
            gens: self.gens.clone(),
            order,
            gb: OnceLock::new(),
        }
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| Arc::new(GroebnerBasis::compute(&self.vars, &self.gens, &self.order)))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner().reduce(f)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.normal_form(f).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// First generator of `other` outside `self`, if any.
    pub fn first_outside<'a>(&self, other: &'a Ideal) -> Option<&'a Polynomial> {
        other.gens.iter().find(|g| !self.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ideal::with_order(&self.vars, gens, self.order.clone())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(Ideal::from_span(&self.vars, gens)?.reordered(self.order.clone()))
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.vars).reordered(self.order.clone());
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Whether `f` lies in the radical, by the Rabinowitsch trick.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.vars() != &self.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: f.vars().to_string(),
            });
        }
        let ext = self.vars.extended([fresh_name(&self.vars, "rab")])?;
        let s = Polynomial::var(&ext, self.vars.len());
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.embed(&ext)).collect::<Result<_>>()?;
        gens.push(&Polynomial::one(&ext) - &(&s * &f.embed(&ext)?));
        Ok(Ideal::new(&ext, gens)?.is_unit())
    }

    /// The saturation `self : g^∞`.
    pub fn saturate(&self, g: &Polynomial) -> Result<Ideal> {
        let n = self.vars.len();
        let ext = self.vars.extended([fresh_name(&self.vars, "sat")])?;
        let s = Polynomial::var(&ext, n);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|h| h.embed(&ext)).collect::<Result<_>>()?;
        gens.push(&Polynomial::one(&ext) - &(&s * &g.embed(&ext)?));
        let mut priority = vec![n];
        priority.extend(0..n);
        let ord = MonomialOrder::with_priority(OrderKind::Elimination { block: 1 }, priority);
        let gb = GroebnerBasis::compute(&ext, &gens, &ord);
        let kept = gb
            .polynomials()
            .iter()
            .filter(|p| p.degree_in(n).unwrap_or(0) == 0)
            .map(|p| p.embed(&self.vars))
            .collect::<Result<Vec<_>>>()?;
        Ideal::with_order(&self.vars, kept, self.order.clone())
    }

    /// Decides whether the ideal is primary to the maximal ideal at the
    /// origin, searching pure powers of each variable up to degree
    /// `4 * (maximal generator degree)`.
    pub fn is_primary_at_origin(&self) -> Primality {
        if self.gens.iter().any(|g| !g.constant_term().is_zero()) || self.is_zero() {
            // not inside the maximal ideal, or the zero ideal
            return Primality::NotPrimary;
        }
        let gb = self.groebner();
        let delta = match gb.standard_monomial_count() {
            None => return Primality::NotPrimary,
            Some(d) => d,
        };
        let max_deg = self.gens.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
        let bound = 4 * max_deg as usize;
        let n = self.vars.len();
        let mut all_found = true;
        for i in 0..n {
            let x = Polynomial::var(&self.vars, i);
            let found = (1..=bound).any(|k| self.contains(&x.pow(k as u32)));
            if !found {
                all_found = false;
                break;
            }
        }
        if all_found {
            Primality::Primary
        } else if delta <= bound {
            // x_i^delta lies in any ideal primary to the origin of colength delta
            Primality::NotPrimary
        } else {
            Primality::Indeterminate
        }
    }
}

fn fresh_name(vars: &VarSet, base: &str) -> String {
    let mut name = format!("_{base}");
    while vars.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.equals(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn xy() -> VarSet {
        VarSet::new(["x", "y"]).unwrap()
    }

    fn ideal(vars: &VarSet, gens: &[&str]) -> Ideal {
        Ideal::new(vars, gens.iter().map(|g| parse_polynomial(g, vars).unwrap()).collect()).unwrap()
    }

    #[test]
    fn principal_sl2_relation_is_its_own_basis() {
        let vars = VarSet::new(["x", "y", "u", "v"]).unwrap();
        let i = ideal(&vars, &["x*v - y*u - 1"]);
        let gen = parse_polynomial("x*v - y*u - 1", &vars).unwrap();
        assert_eq!(i.groebner().polynomials(), &[gen.monic(i.order())]);
        assert_eq!(i.groebner().polynomials().len(), 1);
        let lead = i.groebner().polynomials()[0].leading_term(i.order()).unwrap();
        // degrevlex with x > y > u > v leads with y*u
        assert_eq!(lead.0, &Monomial::new(vec![0, 1, 1, 0]));
    }

    #[test]
    fn monomial_ideal_basis() {
        let i = ideal(&xy(), &["x^2", "x*y", "y^2"]);
        assert_eq!(i.groebner().polynomials().len(), 3);
        assert!(i.groebner().polynomials().iter().all(|p| p.is_monomial()));
    }

    #[test]
    fn cusp_and_line() {
        let i = ideal(&xy(), &["y^2 - x^3", "y"]);
        let expected = ideal(&xy(), &["y", "x^3"]);
        assert!(i.equals(&expected));
        assert!(i.contains(&parse_polynomial("x^3", &xy()).unwrap()));
        assert!(!i.contains(&parse_polynomial("x^2", &xy()).unwrap()));
    }

    #[test]
    fn normal_form_in_sl2() {
        let vars = VarSet::new(["x", "y", "u", "v"]).unwrap();
        let i = ideal(&vars, &["x*v - y*u - 1"]);
        let f = parse_polynomial("x*v - y*u", &vars).unwrap();
        assert_eq!(i.normal_form(&f), Polynomial::one(&vars));
        let g = parse_polynomial("x^2*(u*y + 1 - x*v)", &vars).unwrap();
        assert!(i.normal_form(&g).is_zero());
    }

    #[test]
    fn ideal_arithmetic() {
        let m = ideal(&xy(), &["x", "y"]);
        let m2 = ideal(&xy(), &["x^2", "x*y", "y^2"]);
        assert!(m.product(&m).unwrap().equals(&m2));
        assert!(m.power(2).equals(&m2));
        let sum = ideal(&xy(), &["x"]).sum(&ideal(&xy(), &["y"])).unwrap();
        assert!(sum.equals(&m));
        assert!(m.power(0).is_unit());
        assert!(m.contains(&Polynomial::zero(&xy())));
    }

    #[test]
    fn primary_at_origin() {
        assert_eq!(ideal(&xy(), &["x", "y"]).power(3).is_primary_at_origin(), Primality::Primary);
        assert_eq!(ideal(&xy(), &["x"]).is_primary_at_origin(), Primality::NotPrimary);
        assert_eq!(ideal(&xy(), &["x^2", "x*y", "y^3"]).is_primary_at_origin(), Primality::Primary);
        assert_eq!(ideal(&xy(), &["x - 1", "y"]).is_primary_at_origin(), Primality::NotPrimary);
        // V = {(0,0), (0,1)}: zero-dimensional but with a second point
        assert_eq!(ideal(&xy(), &["x", "y^2 - y"]).is_primary_at_origin(), Primality::NotPrimary);
    }

    #[test]
    fn radical_and_saturation() {
        let i = ideal(&xy(), &["x^3", "y^2"]);
        assert!(i.radical_contains(&parse_polynomial("x + y", &xy()).unwrap()).unwrap());
        assert!(!i.radical_contains(&parse_polynomial("x + 1", &xy()).unwrap()).unwrap());
        // <x*y, x^2> : x^inf = unit
        let j = ideal(&xy(), &["x*y", "x^2"]);
        assert!(j.saturate(&parse_polynomial("x", &xy()).unwrap()).unwrap().is_unit());
        // <x*y> : x^inf = <y>
        let k = ideal(&xy(), &["x*y"]);
        assert!(k.saturate(&parse_polynomial("x", &xy()).unwrap()).unwrap().equals(&ideal(&xy(), &["y"])));
    }

    #[test]
    fn standard_monomials() {
        let i = ideal(&xy(), &["x^2", "x*y", "y^3"]);
        assert_eq!(i.groebner().standard_monomial_count(), Some(4));
        assert_eq!(ideal(&xy(), &["x"]).groebner().standard_monomial_count(), None);
    }

    fn arb_gens(n: usize) -> impl Strategy<Value = Vec<Vec<(i64, Vec<u32>)>>> {
        prop::collection::vec(
            prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=2, n)), 1..4),
            1..=3,
        )
    }

    fn build(vars: &VarSet, raw: Vec<Vec<(i64, Vec<u32>)>>) -> Ideal {
        let gens = raw
            .into_iter()
            .map(|t| Polynomial::from_terms(vars, t.into_iter().map(|(c, e)| (crate::poly::rat(c), e))))
            .collect();
        Ideal::new(vars, gens).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn buchberger_output_is_closed(raw in arb_gens(3)) {
            let vars = VarSet::new(["x", "y", "z"]).unwrap();
            let i = build(&vars, raw);
            prop_assert!(i.groebner().satisfies_buchberger_criterion());
            for g in i.generators() {
                prop_assert!(i.contains(g));
            }
        }

        #[test]
        fn normal_form_is_idempotent_and_linear(raw in arb_gens(2),
                                                f in prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=4, 2)), 0..5),
                                                g in prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=4, 2)), 0..5),
                                                c in -4i64..=4) {
            let vars = xy();
            let i = build(&vars, raw);
            let f = Polynomial::from_terms(&vars, f.into_iter().map(|(c, e)| (crate::poly::rat(c), e)));
            let g = Polynomial::from_terms(&vars, g.into_iter().map(|(c, e)| (crate::poly::rat(c), e)));
            let nf = i.normal_form(&f);
            prop_assert_eq!(i.normal_form(&nf), nf.clone());
            let c = crate::poly::rat(c);
            let lhs = i.normal_form(&(&f.scale(&c) + &g));
            let rhs = &nf.scale(&c) + &i.normal_form(&g);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ideal_equality_is_an_equivalence(a in arb_gens(2), b in arb_gens(2)) {
            let vars = xy();
            let i = build(&vars, a);
            let j = build(&vars, b);
            prop_assert!(i.equals(&i));
            prop_assert_eq!(i.equals(&j), j.equals(&i));
            let k = i.sum(&Ideal::zero(&vars)).unwrap();
            prop_assert!(i.equals(&k));
            if i.equals(&j) {
                prop_assert!(k.equals(&j));
            }
        }
    }
}
