//! The extensions `P_n`: the ideal `I(n)`, the map `psi` into the
//! coordinate ring of SL2, and the induced derivation.

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::filtered::{FilteredSubalgebra, TruncationParams};
use crate::ideal::{maximal_ideal_power, Ideal, PresentedRing};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarSet};
use crate::report::{Check, Report};
use crate::sequence::{generated_in_degree_one, verify_sequence_axioms, IdealSequence};

use super::sl2::Sl2Ring;

/// Variables `X0, X1, Y0, ..., Y{n+1}, Z`.
pub fn family1_vars(n: u32) -> VarSet {
    let mut names = vec!["X0".to_string(), "X1".to_string()];
    names.extend((0..=n + 1).map(|i| format!("Y{i}")));
    names.push("Z".into());
    VarSet::new(names).expect("distinct names")
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1; n = 0 is the family-two case (1,1)".into()));
    }
    Ok(())
}

/// Generators of `I(n)` in a fixed order: the quadratic `Y` relations (one
/// per pair of distinct index pairs with equal sum), then `X0 Y{i+1} - X1 Yi`,
/// then `Z Yi + X1^n Y{i+1} - Y{i+1} Y{n+1}`, then `Z X0 + X1^{n+1} - X1 Y{n+1}`.
pub fn family1_generators(n: u32) -> Result<Vec<Polynomial>> {
    check_n(n)?;
    let vars = family1_vars(n);
    let k = n as usize;
    let x0 = Polynomial::var(&vars, 0);
    let x1 = Polynomial::var(&vars, 1);
    let y = |i: usize| Polynomial::var(&vars, 2 + i);
    let z = Polynomial::var(&vars, k + 4);
    let mut gens = Vec::new();
    for s in 0..=2 * (k + 1) {
        let pairs: Vec<(usize, usize)> = (0..=k + 1)
            .filter_map(|i| {
                let j = s.checked_sub(i)?;
                (j >= i && j <= k + 1).then_some((i, j))
            })
            .collect();
        for a in 0..pairs.len() {
            for b in a + 1..pairs.len() {
                let (i, j) = pairs[a];
                let (p, q) = pairs[b];
                gens.push(&(&y(i) * &y(j)) - &(&y(p) * &y(q)));
            }
        }
    }
    for i in 0..=k {
        gens.push(&(&x0 * &y(i + 1)) - &(&x1 * &y(i)));
    }
    for i in 0..=k {
        gens.push(&(&(&z * &y(i)) + &(&x1.pow(n) * &y(i + 1))) - &(&y(i + 1) * &y(k + 1)));
    }
    gens.push(&(&(&z * &x0) + &x1.pow(n + 1)) - &(&x1 * &y(k + 1)));
    Ok(gens)
}

/// The ideal `I(n)` under degrevlex.
pub fn family1_ideal(n: u32) -> Result<Ideal> {
    let gens = family1_generators(n)?;
    Ideal::new(&family1_vars(n), gens)
}

/// Images of `X0, X1, Y0, ..., Y{n+1}, Z` in the coordinate ring of SL2:
/// `y, x, v y^{n+1}, v x y^n, ..., v x^{n+1}, u x^{n+1}`.
pub fn family1_psi(n: u32, sl2: &Sl2Ring) -> Result<Vec<Polynomial>> {
    check_n(n)?;
    let vars = sl2.vars();
    let mono = |x: u32, y: u32, u: u32, v: u32| Polynomial::monomial(vars, Monomial::new(vec![x, y, u, v]));
    let mut out = vec![mono(0, 1, 0, 0), mono(1, 0, 0, 0)];
    out.extend((0..=n + 1).map(|i| mono(i, n + 1 - i, 0, 1)));
    out.push(mono(n + 1, 0, 1, 0));
    Ok(out)
}

/// `P_n` with its coordinate ring, the map `psi` and the derivation
/// `X -> 0`, `Yi -> X1^i X0^{n+2-i}`, `Z -> X1^{n+2}`.
#[derive(Clone, Debug)]
pub struct FamilyOne {
    n: u32,
    sl2: Sl2Ring,
    ring: PresentedRing,
    psi: Vec<Polynomial>,
    derivation: Derivation,
}

impl FamilyOne {
    pub fn new(n: u32) -> Result<Self> {
        let vars = family1_vars(n);
        let ring = PresentedRing::new(&vars, family1_generators(n)?, MonomialOrder::degrevlex())?;
        let sl2 = Sl2Ring::new();
        let psi = family1_psi(n, &sl2)?;
        let x0 = Polynomial::var(&vars, 0);
        let x1 = Polynomial::var(&vars, 1);
        let mut images = vec![Polynomial::zero(&vars); vars.len()];
        for i in 0..=n + 1 {
            images[2 + i as usize] = &x1.pow(i) * &x0.pow(n + 2 - i);
        }
        images[n as usize + 4] = x1.pow(n + 2);
        let derivation = Derivation::new(&ring, images)?;
        Ok(FamilyOne {
            n,
            sl2,
            ring,
            psi,
            derivation,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sl2(&self) -> &Sl2Ring {
        &self.sl2
    }

    /// `Q[X0, X1, Y, Z] / I(n)`.
    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn psi(&self) -> &[Polynomial] {
        &self.psi
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// Pullback of `g` along `psi`, in normal form.
    pub fn pull_back(&self, g: &Polynomial) -> Result<Polynomial> {
        Ok(self.sl2.ring().normal_form(&g.substitute_vec(&self.psi)?))
    }

    /// Images of `Y0, ..., Y{n+1}, Z`; together with `x, y` they generate
    /// the coordinate ring of `P_n` inside that of SL2.
    pub fn subalgebra_generators(&self) -> Vec<Polynomial> {
        self.psi[2..].to_vec()
    }

    pub fn subalgebra(&self) -> FilteredSubalgebra {
        self.sl2.subalgebra_with(self.subalgebra_generators())
    }

    /// `L = nu + 1`, `d = (n+2) nu + 4`.
    pub fn default_truncation(&self, nu: u32) -> TruncationParams {
        TruncationParams::uniform(nu + 1, (self.n + 2) * nu + 4).expect("positive")
    }

    /// The expected `m_nu = <x,y>^{(n+2) nu}`.
    pub fn expected_m_nu(&self, nu: u32) -> Ideal {
        maximal_ideal_power(&VarSet::new(["x", "y"]).expect("names"), (self.n + 2) * nu)
    }
}

/// Checks the construction of `P_n`: `psi` kills `I(n)`, `psi` intertwines
/// the derivations, `m_nu = <x,y>^{(n+2) nu}` for `nu <= nu_max`, degree-one
/// generation, the fixed locus, and the sequence axioms.
pub fn verify_family1<F>(n: u32, nu_max: u32, params: F) -> Result<Report>
where
    F: Fn(u32) -> TruncationParams + Sync,
{
    let fam = FamilyOne::new(n)?;
    let mut report = Report::new("family1");
    let sl2 = fam.sl2().ring();

    for (k, g) in family1_generators(n)?.iter().enumerate() {
        let r = fam.pull_back(g)?;
        report.push(Check::of(format!("psi_vanishes[{k}]"), r.is_zero(), r.to_string()));
    }

    let d = fam.sl2().derivation();
    for (i, name) in fam.ring().vars().names().iter().enumerate() {
        let lhs = d.apply(&fam.psi()[i]);
        let rhs = fam.pull_back(fam.derivation().image(i))?;
        let diff = sl2.normal_form(&(&lhs - &rhs));
        report.push(Check::of(format!("intertwines[{name}]"), diff.is_zero(), diff.to_string()));
    }

    let b = fam.subalgebra();
    let seq = b.ideal_sequence(nu_max, &params)?;
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

    for res in generated_in_degree_one(&seq) {
        let w = res.witness.map(|p| p.to_string()).unwrap_or_default();
        report.push(Check::of(format!("degree_one[{}]", res.nu), res.equal, w));
    }

    let vars = fam.ring().vars();
    let coords: Vec<Polynomial> = (0..vars.len()).map(|i| Polynomial::var(vars, i)).collect();
    let fixed = crate::blowup::fixed_locus_ideal(fam.derivation(), &coords);
    let mut expected: Vec<Polynomial> = (0..=n + 2)
        .map(|a| {
            let mut e = vec![0; vars.len()];
            e[0] = a;
            e[1] = n + 2 - a;
            Polynomial::monomial(vars, Monomial::new(e))
        })
        .collect();
    expected.extend(fam.ring().relations().generators().iter().cloned());
    let expected = Ideal::new(vars, expected)?;
    let witness = fixed
        .first_outside(&expected)
        .or_else(|| expected.first_outside(&fixed))
        .map(|p| p.to_string())
        .unwrap_or_default();
    report.push(Check::of("fixed_locus", witness.is_empty(), witness));

    report.absorb("axioms.", verify_sequence_axioms(&seq));
    Ok(report)
}

/// The computed sequence `m_1, ..., m_{nu_max}` of `P_n`.
pub fn family1_sequence(n: u32, nu_max: u32) -> Result<IdealSequence> {
    let fam = FamilyOne::new(n)?;
    fam.subalgebra().ideal_sequence(nu_max, |nu| fam.default_truncation(nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    #[test]
    fn n1_generators() {
        let vars = family1_vars(1);
        let gens = family1_generators(1).unwrap();
        let expected = [
            "Y0*Y2 - Y1^2",
            "X0*Y1 - X1*Y0",
            "X0*Y2 - X1*Y1",
            "Z*Y0 + X1*Y1 - Y1*Y2",
            "Z*Y1 + X1*Y2 - Y2^2",
            "Z*X0 + X1^2 - X1*Y2",
        ];
        assert_eq!(gens.len(), expected.len());
        for (g, e) in gens.iter().zip(expected) {
            assert_eq!(g, &parse_polynomial(e, &vars).unwrap());
        }
    }

    #[test]
    fn generator_count_by_enumeration() {
        for n in 1..=5u32 {
            let m = n as usize + 1;
            // oracle: count unordered pairs {a, b} of distinct multisets
            // {i, j} with i + j = s, over every s
            let mut y = 0;
            for s in 0..=2 * m {
                let mut c = 0;
                for i in 0..=m {
                    for j in i..=m {
                        if i + j == s {
                            c += 1;
                        }
                    }
                }
                y += c * (c - 1) / 2;
            }
            let total = y + 2 * (m) + 1;
            assert_eq!(family1_generators(n).unwrap().len(), total, "n = {n}");
        }
    }

    #[test]
    fn n_zero_rejected() {
        assert!(family1_ideal(0).is_err());
        assert!(FamilyOne::new(0).is_err());
    }

    #[test]
    fn psi_images() {
        let s = Sl2Ring::new();
        let psi = family1_psi(1, &s).unwrap();
        let want = ["y", "x", "v*y^2", "v*x*y", "v*x^2", "u*x^2"];
        for (p, w) in psi.iter().zip(want) {
            assert_eq!(p, &s.element(w));
        }
        let psi2 = family1_psi(2, &s).unwrap();
        assert_eq!(psi2[5], s.element("v*x^3"));
        assert_eq!(psi2[0], s.element("y"));
    }

    #[test]
    fn last_generator_pulls_back_to_zero() {
        let fam = FamilyOne::new(1).unwrap();
        let g = parse_polynomial("Z*X0 + X1^2 - X1*Y2", fam.ring().vars()).unwrap();
        // x^2 (uy + 1 - xv) before reduction
        let raw = g.substitute_vec(fam.psi()).unwrap();
        assert_eq!(raw, parse_polynomial("u*x^2*y + x^2 - x^3*v", fam.sl2().vars()).unwrap());
        assert!(fam.pull_back(&g).unwrap().is_zero());
    }

    #[test]
    fn psi_is_multiplicative_on_generator_pairs() {
        let fam = FamilyOne::new(2).unwrap();
        let vars = fam.ring().vars().clone();
        for i in 0..vars.len() {
            for j in i..vars.len() {
                let a = Polynomial::var(&vars, i);
                let b = Polynomial::var(&vars, j);
                let lhs = fam.pull_back(&(&a * &b)).unwrap();
                let rhs = fam.sl2().ring().mul(&fam.pull_back(&a).unwrap(), &fam.pull_back(&b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn graded_leading_terms_of_generators() {
        for n in 1..=3 {
            let fam = FamilyOne::new(n).unwrap();
            let d = fam.sl2().derivation();
            for i in 0..=n + 1 {
                let (deg, lead) = d.graded_leading_term(&fam.psi()[2 + i as usize]).unwrap();
                assert_eq!(deg, 1);
                let want = Polynomial::monomial(fam.sl2().vars(), Monomial::new(vec![i, n + 2 - i, 0, 0]));
                assert_eq!(lead, want);
            }
        }
    }

    #[test]
    fn verify_n1_small() {
        let fam = FamilyOne::new(1).unwrap();
        let r = verify_family1(1, 1, |nu| fam.default_truncation(nu)).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
