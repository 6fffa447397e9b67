//! The extensions `P(p,q)`: the nonnegative part of the coordinate ring of
//! SL2 under the grading `(p, q, -q, -p)`.

use num_integer::Integer;

use crate::derivation::{Grading, Homogeneity};
use crate::error::{Error, Result};
use crate::filtered::{FilteredSubalgebra, TruncationParams};
use crate::ideal::{weighted_monomial_ideal, Ideal, PresentedRing};
use crate::poly::{monomials_up_to, Monomial, Polynomial, VarSet};
use crate::report::{Check, Report, Status};
use crate::sequence::{generated_in_degree_one, verify_sequence_axioms, IdealSequence};

use super::sl2::Sl2Ring;

#[derive(Clone, Debug)]
pub struct FamilyTwo {
    p: u32,
    q: u32,
    bezout: (i64, i64),
    sl2: Sl2Ring,
    grading: Grading,
}

impl FamilyTwo {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidInput("p and q must be positive".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidInput(format!("gcd({p}, {q}) != 1")));
        }
        let (pi, qi) = (p as i64, q as i64);
        let m = (0..pi).find(|m| (m * qi - 1).rem_euclid(pi) == 0).expect("q is invertible mod p");
        let n = (m * qi - 1) / pi;
        Ok(FamilyTwo {
            p,
            q,
            bezout: (m, n),
            sl2: Sl2Ring::new(),
            grading: Sl2Ring::weight_grading(pi, qi),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `(m, n)` with `m q - n p = 1` and `m` the least nonnegative choice.
    pub fn bezout(&self) -> (i64, i64) {
        self.bezout
    }

    pub fn sl2(&self) -> &Sl2Ring {
        &self.sl2
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn weight(&self, m: &Monomial) -> i64 {
        self.grading.weight(m)[0]
    }

    /// The quotient surface `Q[a,b,c]/(ac - b^q (b-1)^p)`.
    pub fn base_ring(&self) -> PresentedRing {
        let rel = format!("a*c - b^{}*(b - 1)^{}", self.q, self.p);
        PresentedRing::parse(&["a", "b", "c"], &[rel.as_str()]).expect("static ring")
    }

    /// Images of `a, b, c`: `x^q u^p, xv, y^p v^q`.
    pub fn quotient_images(&self) -> Vec<Polynomial> {
        let vars = self.sl2.vars();
        let (p, q) = (self.p, self.q);
        vec![
            Polynomial::monomial(vars, Monomial::new(vec![q, 0, p, 0])),
            Polynomial::monomial(vars, Monomial::new(vec![1, 0, 0, 1])),
            Polynomial::monomial(vars, Monomial::new(vec![0, p, 0, q])),
        ]
    }

    /// Nonnegative normal-form monomials not obtained from another one by
    /// multiplying with `x` or `y`, and not in `Q[x,y]`. Together with
    /// `Q[x,y]` they span the nonnegative part as a module.
    pub fn module_generators(&self, max_degree: u32) -> Vec<Polynomial> {
        let vars = self.sl2.vars();
        let nonneg: Vec<Monomial> = nonnegative_monomials(self, max_degree);
        nonneg
            .iter()
            .filter(|m| m.exp(2) + m.exp(3) > 0)
            .filter(|m| {
                [0usize, 1].iter().all(|&i| {
                    if m.exp(i) == 0 {
                        return true;
                    }
                    let mut e = m.exps().to_vec();
                    e[i] -= 1;
                    self.weight(&Monomial::new(e)) < 0
                })
            })
            .map(|m| Polynomial::monomial(vars, m.clone()))
            .collect()
    }

    /// The truncated nonnegative part over `Q[x,y]`, split by the bigrading.
    pub fn subalgebra(&self, max_degree: u32) -> FilteredSubalgebra {
        self.sl2.subalgebra_with(self.module_generators(max_degree))
    }

    /// `L = 1`, `d = 2 (p+q) nu + 4`.
    pub fn default_truncation(&self, nu: u32) -> TruncationParams {
        TruncationParams::uniform(1, 2 * (self.p + self.q) * nu + 4).expect("positive")
    }

    pub fn expected_m_nu(&self, nu: u32) -> Ideal {
        weighted_monomial_ideal(&VarSet::new(["x", "y"]).expect("names"), self.p, self.q, nu).expect("coprime")
    }

    /// `m_1, ..., m_{nu_max}`, each at `params(nu)`.
    pub fn sequence<F>(&self, nu_max: u32, params: F) -> Result<IdealSequence>
    where
        F: Fn(u32) -> TruncationParams + Sync,
    {
        let d = (1..=nu_max).map(|nu| params(nu).max_degree).max().unwrap_or(1);
        self.subalgebra(d).ideal_sequence(nu_max, params)
    }
}

fn nonnegative_monomials(fam: &FamilyTwo, d: u32) -> Vec<Monomial> {
    let ring = fam.sl2.ring();
    let leads: Vec<Monomial> = ring.relations().groebner().leading_monomials().cloned().collect();
    monomials_up_to(4, d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .filter(|m| fam.weight(m) >= 0)
        .collect()
}

/// Normal-form monomials `x^a y^b u^c v^e` of degree `<= d` and weight
/// `pa + qb - qc - pe >= 0`. They span the degree-`d` truncation of the
/// nonnegative part.
pub fn family2_nonnegative_generators(p: u32, q: u32, d: u32) -> Result<Vec<Polynomial>> {
    let fam = FamilyTwo::new(p, q)?;
    let vars = fam.sl2.vars().clone();
    Ok(nonnegative_monomials(&fam, d)
        .into_iter()
        .map(|m| Polynomial::monomial(&vars, m))
        .collect())
}

/// Checks homogeneity of the derivation, the quotient identity, the Bezout
/// pair, `m_nu` against the weighted monomial ideals, the fixed-fiber
/// property, degree-one generation and the sequence axioms.
pub fn verify_family2<F>(p: u32, q: u32, nu_max: u32, params: F) -> Result<Report>
where
    F: Fn(u32) -> TruncationParams + Sync,
{
    let fam = FamilyTwo::new(p, q)?;
    let mut report = Report::new("family2");
    let sl2 = fam.sl2().ring();
    let d = fam.sl2().derivation();
    let s = (p + q) as i64;

    let h = d.homogeneity_degree(fam.grading());
    report.push(Check::of("homogeneity", h == Homogeneity::Degree(vec![s]), format!("{h:?}")));

    let base = fam.base_ring();
    let rel = &base.relations().generators()[0];
    let r = sl2.normal_form(&rel.substitute_vec(&fam.quotient_images())?);
    report.push(Check::of("base_identity", r.is_zero(), r.to_string()));

    let (m, n) = fam.bezout();
    let ok = m * q as i64 - n * p as i64 == 1 && (0..(p as i64).max(1)).contains(&m);
    report.push(Check::of("bezout", ok, format!("m={m} n={n}")));

    let seq = fam.sequence(nu_max, &params)?;
    for nu in 1..=nu_max {
        let got = seq.get(nu);
        let want = fam.expected_m_nu(nu);
        let witness = got
            .first_outside(&want)
            .or_else(|| want.first_outside(&got))
            .map(|p| p.to_string())
            .unwrap_or_default();
        report.push(
            Check::of(format!("m_nu[{nu}]"), witness.is_empty(), witness).with_params(params(nu).to_string()),
        );
    }

    let gens = fam.module_generators(params(1).max_degree);
    let bad = gens.iter().find_map(|g| {
        let w = fam.weight(g.monomials().next()?);
        if w <= 0 {
            return None;
        }
        let dg = d.apply(g);
        let fine = dg.monomials().all(|mono| fam.weight(mono) == w + s);
        (!fine).then(|| format!("{g} -> {dg}"))
    });
    report.push(Check::of("fixed_fiber", bad.is_none(), bad.unwrap_or_default()));

    let m1 = fam.expected_m_nu(1);
    for res in generated_in_degree_one(&seq) {
        let expected = fam.expected_m_nu(res.nu).equals(&m1.power(res.nu));
        let mut c = Check::new(format!("degree_one[{}]", res.nu), Status::from_bool(res.equal == expected))
            .with_params(format!("equal={}", res.equal));
        if let Some(w) = res.witness {
            c = c.with_witness(w.to_string());
        }
        report.push(c);
    }

    report.absorb("axioms.", verify_sequence_axioms(&seq));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bezout_pairs() {
        for (p, q) in [(1, 1), (2, 1), (3, 2), (5, 3), (1, 4)] {
            let (m, n) = FamilyTwo::new(p, q).unwrap().bezout();
            assert_eq!(m * q as i64 - n * p as i64, 1);
            assert!(m >= 0 && m < p as i64 || (p == 1 && m == 0));
        }
        assert!(FamilyTwo::new(2, 4).is_err());
        assert!(FamilyTwo::new(0, 1).is_err());
    }

    #[test]
    fn nonnegative_examples() {
        let s = Sl2Ring::new();
        let g = family2_nonnegative_generators(1, 1, 2).unwrap();
        for m in ["x", "y", "x*v", "x*u", "1"] {
            assert!(g.contains(&s.element(m)), "{m}");
        }
        assert!(!g.contains(&s.element("u")));
        let g = family2_nonnegative_generators(2, 1, 3).unwrap();
        assert!(g.contains(&s.element("u*x^2")));
        assert!(!g.contains(&s.element("u*v")));
    }

    #[test]
    fn module_generators_span_nonnegative_part() {
        let fam = FamilyTwo::new(2, 1).unwrap();
        let b = fam.subalgebra(6);
        let t = TruncationParams::uniform(1, 6).unwrap();
        let span = b.truncated_span(&t);
        let all = family2_nonnegative_generators(2, 1, 6).unwrap();
        assert_eq!(span.len(), all.len());
    }

    #[test]
    fn quotient_identity_small() {
        let fam = FamilyTwo::new(1, 1).unwrap();
        let s = fam.sl2();
        let im = fam.quotient_images();
        // ac - b(b-1) = xu*yv - xv(xv - 1)
        let e = &(&im[0] * &im[2]) - &(&im[1] * &(&im[1] - &s.element("1")));
        assert!(s.ring().is_zero(&e));
    }

    #[test]
    fn weighted_ideal_for_2_1() {
        let fam = FamilyTwo::new(2, 1).unwrap();
        let b = fam.subalgebra(10);
        let m = b.compute_m_nu(1, &fam.default_truncation(1)).unwrap();
        assert!(m.ideal.equals(&fam.expected_m_nu(1)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn weight_is_additive(a in prop::collection::vec(0u32..3, 4), b in prop::collection::vec(0u32..3, 4)) {
            let fam = FamilyTwo::new(3, 2).unwrap();
            let s = fam.sl2();
            let f = Polynomial::monomial(s.vars(), Monomial::new(a));
            let g = Polynomial::monomial(s.vars(), Monomial::new(b));
            let w = fam.weight(f.monomials().next().unwrap()) + fam.weight(g.monomials().next().unwrap());
            let prod = s.ring().mul(&f, &g);
            for (wt, _) in fam.grading().components(&prod) {
                prop_assert_eq!(wt[0], w);
            }
        }
    }
}
