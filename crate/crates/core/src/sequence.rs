//! Ideal sequences `m_1, m_2, ...` in a base ring and their axioms.

use crate::filtered::simplify;
use crate::ideal::{Ideal, Primality};
use crate::poly::{Polynomial, VarSet};
use crate::report::{Check, Report, Status};

/// Ideals indexed by `nu = 1..=nu_max`; `m_0` is the unit ideal.
#[derive(Clone, Debug)]
pub struct IdealSequence {
    base: VarSet,
    ideals: Vec<Ideal>,
}

impl IdealSequence {
    pub fn new(base: &VarSet, ideals: Vec<Ideal>) -> Self {
        IdealSequence {
            base: base.clone(),
            ideals,
        }
    }

    /// `nu -> f(nu)` for `nu = 1..=nu_max`.
    pub fn from_fn(base: &VarSet, nu_max: u32, f: impl Fn(u32) -> Ideal) -> Self {
        Self::new(base, (1..=nu_max).map(f).collect())
    }

    pub fn base(&self) -> &VarSet {
        &self.base
    }

    pub fn nu_max(&self) -> u32 {
        self.ideals.len() as u32
    }

    pub fn get(&self, nu: u32) -> Ideal {
        if nu == 0 {
            Ideal::unit(&self.base)
        } else {
            self.ideals[nu as usize - 1].clone()
        }
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn equals(&self, other: &IdealSequence) -> bool {
        self.ideals.len() == other.ideals.len()
            && self.ideals.iter().zip(&other.ideals).all(|(a, b)| a.equals(b))
    }
}

/// Checks that the sequence decreases, is submultiplicative, and consists
/// of ideals primary to the origin (or the unit ideal).
pub fn verify_sequence_axioms(seq: &IdealSequence) -> Report {
    verify_axioms_with(seq, |i| {
        if i.is_unit() {
            Primality::Primary
        } else {
            i.is_primary_at_origin()
        }
    })
}

/// As [`verify_sequence_axioms`], with a caller-supplied support test.
pub fn verify_axioms_with(seq: &IdealSequence, support: impl Fn(&Ideal) -> Primality) -> Report {
    let mut report = Report::new("sequence-axioms");
    let n = seq.nu_max();
    for nu in 1..n {
        let (big, small) = (seq.get(nu), seq.get(nu + 1));
        let witness = big.first_outside(&small).map(|p| p.to_string()).unwrap_or_default();
        report.push(Check::of(format!("decreasing[{nu}]"), witness.is_empty(), witness));
    }
    for nu in 1..=n {
        for mu in nu..=n - nu {
            let target = seq.get(nu + mu);
            let (a, b) = (seq.get(nu), seq.get(mu));
            let mut witness = None;
            'outer: for f in a.generators() {
                for g in b.generators() {
                    let prod: Polynomial = f * g;
                    if !target.contains(&prod) {
                        witness = Some(prod);
                        break 'outer;
                    }
                }
            }
            report.push(Check::of(
                format!("submultiplicative[{nu},{mu}]"),
                witness.is_none(),
                witness.map(|w| w.to_string()).unwrap_or_default(),
            ));
        }
    }
    for nu in 1..=n {
        let status = match support(&seq.get(nu)) {
            Primality::Primary => Status::Pass,
            Primality::NotPrimary => Status::Fail,
            Primality::Indeterminate => Status::Indeterminate,
        };
        report.push(Check::new(format!("primary[{nu}]"), status));
    }
    report
}

/// Outcome of comparing `m_nu` with `m_1^nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOne {
    pub nu: u32,
    pub equal: bool,
    /// A generator of `m_nu` outside `m_1^nu`, when they differ.
    pub witness: Option<Polynomial>,
}

/// For each `nu >= 2`, whether `m_nu = m_1^nu`.
pub fn generated_in_degree_one(seq: &IdealSequence) -> Vec<DegreeOne> {
    let m1 = simplify(&seq.get(1));
    let mut power = m1.clone();
    let mut out = Vec::new();
    for nu in 2..=seq.nu_max() {
        power = simplify(&power.product(&m1).expect("same ring"));
        let m = seq.get(nu);
        let witness = power
            .first_outside(&m)
            .cloned()
            .or_else(|| m.first_outside(&power).cloned());
        out.push(DegreeOne {
            nu,
            equal: witness.is_none(),
            witness,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{maximal_ideal_power, monomial_ideal, weighted_monomial_ideal};
    use crate::poly::Monomial;

    fn xy() -> VarSet {
        VarSet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn powers_of_cube_pass() {
        let seq = IdealSequence::from_fn(&xy(), 3, |nu| maximal_ideal_power(&xy(), 3 * nu));
        let r = verify_sequence_axioms(&seq);
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn line_is_not_primary() {
        let x = monomial_ideal(&xy(), [Monomial::new(vec![1, 0])]);
        let seq = IdealSequence::new(&xy(), vec![x.clone(), x.power(2)]);
        let r = verify_sequence_axioms(&seq);
        assert_eq!(r.find("primary[1]").unwrap().status, Status::Fail);
        assert_eq!(r.find("primary[2]").unwrap().status, Status::Fail);
    }

    #[test]
    fn too_fast_growth_breaks_submultiplicativity() {
        let seq = IdealSequence::new(&xy(), vec![maximal_ideal_power(&xy(), 1), maximal_ideal_power(&xy(), 3)]);
        let r = verify_sequence_axioms(&seq);
        let c = r.find("submultiplicative[1,1]").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert!(!c.witness.is_empty());
        assert!(r.find("decreasing[1]").unwrap().passed());
    }

    #[test]
    fn degree_one_generation() {
        let seq = IdealSequence::from_fn(&xy(), 3, |nu| maximal_ideal_power(&xy(), 3 * nu));
        assert!(generated_in_degree_one(&seq).iter().all(|d| d.equal));

        let seq = IdealSequence::from_fn(&xy(), 2, |nu| weighted_monomial_ideal(&xy(), 2, 1, nu).unwrap());
        let res = generated_in_degree_one(&seq);
        assert!(!res[0].equal);
        assert_eq!(res[0].witness.as_ref().unwrap().to_string(), "x^3");

        let unit = IdealSequence::from_fn(&xy(), 3, |_| Ideal::unit(&xy()));
        assert!(generated_in_degree_one(&unit).iter().all(|d| d.equal));
    }
}
