//! Pullbacks of SL2 along a map `(g, h)` to the plane: the ring
//! `O(U)[f0, f1] / (g f1 - h f0 - 1)` with `D(f0) = g`, `D(f1) = h`.

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::filtered::{FilteredSubalgebra, TruncationParams};
use crate::ideal::{Ideal, Primality, PresentedRing};
use crate::poly::Polynomial;
use crate::report::{Check, Report};
use crate::sequence::{verify_axioms_with, IdealSequence};

#[derive(Clone, Debug)]
pub struct PullbackBundle {
    base: PresentedRing,
    g: Polynomial,
    h: Polynomial,
    ring: PresentedRing,
    derivation: Derivation,
    trivial: bool,
}

impl PullbackBundle {
    pub fn base(&self) -> &PresentedRing {
        &self.base
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    /// The total ring, with variables the base variables followed by `f0, f1`.
    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// `<g, h>` is the unit ideal, so the bundle is trivial.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    /// `<g, h>` in the base ring (without the base relations).
    pub fn center(&self) -> Ideal {
        Ideal::with_order(self.base.vars(), vec![self.g.clone(), self.h.clone()], self.base.order().clone())
            .expect("same ring")
    }

    pub fn subalgebra(&self) -> Result<FilteredSubalgebra> {
        let names: Vec<&str> = self.base.vars().names().iter().map(String::as_str).collect();
        let n = self.base.vars().len();
        let gens = vec![Polynomial::var(self.ring.vars(), n), Polynomial::var(self.ring.vars(), n + 1)];
        FilteredSubalgebra::new(self.derivation.clone(), &names, gens)
    }

    /// `L = nu`, `d = nu (max(deg g, deg h) + 1) + 2`.
    pub fn default_truncation(&self, nu: u32) -> TruncationParams {
        let k = self.g.total_degree().unwrap_or(0).max(self.h.total_degree().unwrap_or(0));
        TruncationParams::uniform(nu, nu * (k + 1) + 2).expect("positive")
    }
}

/// Builds the pullback of SL2 along `(g, h)`.
pub fn build_pullback(base: &PresentedRing, g: &Polynomial, h: &Polynomial) -> Result<PullbackBundle> {
    base.check_member(g)?;
    base.check_member(h)?;
    let (g, h) = (base.normal_form(g), base.normal_form(h));
    if g.is_zero() && h.is_zero() {
        return Err(Error::Degenerate("g = h = 0".into()));
    }
    for name in ["f0", "f1"] {
        if base.vars().index_of(name).is_some() {
            return Err(Error::InvalidInput(format!("base ring already uses `{name}`")));
        }
    }
    let vars = base.vars().extended(["f0", "f1"])?;
    let n = base.vars().len();
    let (f0, f1) = (Polynomial::var(&vars, n), Polynomial::var(&vars, n + 1));
    let (gu, hu) = (g.embed(&vars)?, h.embed(&vars)?);
    let mut rels: Vec<Polynomial> = base
        .relations()
        .generators()
        .iter()
        .map(|r| r.embed(&vars))
        .collect::<Result<_>>()?;
    rels.push(&(&(&gu * &f1) - &(&hu * &f0)) - &Polynomial::one(&vars));
    let ring = PresentedRing::new(&vars, rels, base.order().clone())?;
    let mut images = vec![Polynomial::zero(&vars); vars.len()];
    images[n] = gu;
    images[n + 1] = hu;
    let derivation = Derivation::new(&ring, images)?;
    let mut center = base.relations().generators().to_vec();
    center.extend([g.clone(), h.clone()]);
    let trivial = Ideal::with_order(base.vars(), center, base.order().clone())?.is_unit();
    Ok(PullbackBundle {
        base: base.clone(),
        g,
        h,
        ring,
        derivation,
        trivial,
    })
}

/// `m_1, ..., m_{nu_max}` of the pullback, at `params(nu)`.
pub fn graded_sequence_of_pullback<F>(p: &PullbackBundle, nu_max: u32, params: F) -> Result<IdealSequence>
where
    F: Fn(u32) -> TruncationParams + Sync,
{
    p.subalgebra()?.ideal_sequence(nu_max, params)
}

/// Compares `m_nu` with `<g,h>^nu` and checks the sequence axioms with
/// support in `V(g, h)`.
pub fn verify_pullback(p: &PullbackBundle, nu_max: u32) -> Result<Report> {
    let mut report = Report::new("pullback");
    report.push(Check::of("nontrivial", !p.is_trivial(), format!("<{}, {}> is the unit ideal", p.g, p.h)));
    let seq = graded_sequence_of_pullback(p, nu_max, |nu| p.default_truncation(nu))?;
    let center = p.center();
    for nu in 1..=nu_max {
        let want = center.power(nu);
        let got = seq.get(nu);
        let w = got
            .first_outside(&want)
            .or_else(|| want.first_outside(&got))
            .map(|f| f.to_string())
            .unwrap_or_default();
        report.push(Check::of(format!("m_nu[{nu}]"), w.is_empty(), w).with_params(p.default_truncation(nu).to_string()));
    }
    let axioms = verify_axioms_with(&seq, |m| {
        if center.contains_ideal(m) || m.is_unit() {
            Primality::Primary
        } else {
            Primality::NotPrimary
        }
    });
    report.absorb("axioms.", axioms);
    for nu in 1..=nu_max {
        let ok = seq.get(nu).contains_ideal(&center.power(nu));
        report.push(Check::of(format!("contains_power[{nu}]"), ok, ""));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Sl2Ring;
    use crate::ideal::maximal_ideal_power;
    use crate::poly::{parse_polynomial, VarSet};

    fn plane() -> PresentedRing {
        PresentedRing::polynomial(&VarSet::new(["x", "y"]).unwrap())
    }

    fn el(s: &str) -> Polynomial {
        parse_polynomial(s, plane().vars()).unwrap()
    }

    #[test]
    fn standard_pair_is_sl2() {
        let p = build_pullback(&plane(), &el("x"), &el("y")).unwrap();
        let sl2 = Sl2Ring::new();
        // rename f0 -> u, f1 -> v
        let vars = p.ring().vars();
        assert_eq!(vars.names(), &["x", "y", "f0", "f1"]);
        let rel = &p.ring().relations().generators()[0];
        let renamed = rel.substitute_vec(&[sl2.element("x"), sl2.element("y"), sl2.element("u"), sl2.element("v")]).unwrap();
        assert!(sl2.ring().is_zero(&renamed));
        let sl2_rel = &sl2.ring().relations().generators()[0];
        let back = sl2_rel
            .substitute_vec(&[Polynomial::var(vars, 0), Polynomial::var(vars, 1), Polynomial::var(vars, 2), Polynomial::var(vars, 3)])
            .unwrap();
        assert!(p.ring().is_zero(&back));
        assert_eq!(p.derivation().image(2), &Polynomial::var(vars, 0));
        assert_eq!(p.derivation().image(3), &Polynomial::var(vars, 1));
        assert!(!p.is_trivial());
    }

    #[test]
    fn sequences() {
        let p = build_pullback(&plane(), &el("x"), &el("y")).unwrap();
        let seq = graded_sequence_of_pullback(&p, 2, |nu| p.default_truncation(nu)).unwrap();
        for nu in 1..=2 {
            assert!(seq.get(nu).equals(&maximal_ideal_power(plane().vars(), nu)));
        }
        let p = build_pullback(&plane(), &el("x^2"), &el("y")).unwrap();
        let r = verify_pullback(&p, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let m1 = Ideal::new(plane().vars(), vec![el("x^2"), el("y")]).unwrap();
        let seq = graded_sequence_of_pullback(&p, 1, |nu| p.default_truncation(nu)).unwrap();
        assert!(seq.get(1).equals(&m1));
        assert!(seq.get(0).is_unit());
    }

    #[test]
    fn degenerate_and_trivial() {
        assert!(matches!(build_pullback(&plane(), &el("0"), &el("0")), Err(Error::Degenerate(_))));
        let p = build_pullback(&plane(), &el("1"), &el("0")).unwrap();
        assert!(p.is_trivial());
        let p = build_pullback(&plane(), &el("x + 1"), &el("y")).unwrap();
        assert!(!p.is_trivial());
    }
}
