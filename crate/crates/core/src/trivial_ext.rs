//! Extensions of the trivial bundle over the punctured plane: subalgebras
//! of `Q[x,y][t]` containing `Q[x,y]` and stable under `d/dt`.

use serde::Serialize;

use crate::derivation::{Derivation, Grading};
use crate::error::{Error, Result};
use crate::filtered::{FilteredSubalgebra, Membership, TruncationParams};
use crate::ideal::PresentedRing;
use crate::poly::{parse_polynomial, Localized, Polynomial, VarSet};
use crate::report::{Check, Report, Status};
use crate::sequence::{verify_sequence_axioms, IdealSequence};

/// The variables `x, y, t`.
pub fn xyt() -> VarSet {
    VarSet::new(["x", "y", "t"]).expect("distinct names")
}

#[derive(Clone, Debug)]
pub struct TrivialExtension {
    derivation: Derivation,
    generators: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    FirstKind,
    SecondKind,
}

/// Cases where the algebra is not a proper extension algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Degeneracy {
    /// No generator involves `t`: the algebra is `Q[x,y]`.
    BaseOnly,
    /// `t` itself lies in the algebra: it is all of `Q[x,y][t]`.
    FullPolynomialRing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub degenerate: Option<Degeneracy>,
    /// For the first kind: a generator and a power `t^nu` whose coefficient
    /// has a nonzero constant term.
    pub witness: Option<(usize, u32)>,
}

impl TrivialExtension {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let ring = PresentedRing::polynomial(&xyt());
        let derivation = Derivation::from_strings(&ring, &[("t", "1")])?;
        let mut gens = Vec::new();
        for g in generators {
            let g = g.embed(ring.vars())?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(TrivialExtension {
            derivation,
            generators: gens,
        })
    }

    pub fn parse(generators: &[&str]) -> Result<Self> {
        let vars = xyt();
        let gens = generators
            .iter()
            .map(|s| parse_polynomial(s, &vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// The algebra over `Q[x,y]`, with the `Z^3` grading by exponents used
    /// for splitting when all candidates are monomials.
    pub fn subalgebra(&self) -> FilteredSubalgebra {
        let grading = Grading::multi(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).expect("uniform");
        FilteredSubalgebra::new(self.derivation.clone(), &["x", "y"], self.generators.clone())
            .and_then(|b| b.with_grading(grading))
            .expect("polynomial generators")
    }

    /// Whether `d/dt` of every generator is found in the truncated span.
    pub fn is_stable(&self, t: &TruncationParams) -> Result<Vec<(Polynomial, Membership)>> {
        let b = self.subalgebra();
        self.generators
            .iter()
            .map(|g| {
                let dg = self.derivation.apply(g);
                b.subalgebra_contains(&dg, t).map(|m| (dg, m))
            })
            .collect()
    }
}

/// The coefficient of `t^nu` in `g`, as a polynomial in `x, y, t` without `t`.
fn t_coefficients(g: &Polynomial) -> std::collections::BTreeMap<u32, Polynomial> {
    let mut out: std::collections::BTreeMap<u32, Polynomial> = Default::default();
    for (m, c) in g.terms() {
        let mut e = m.exps().to_vec();
        let nu = e[2];
        e[2] = 0;
        out.entry(nu)
            .or_insert_with(|| Polynomial::zero(g.vars()))
            .add_term(crate::poly::Monomial::new(e), c.clone());
    }
    out
}

/// Second kind iff every coefficient of `t^nu`, `nu >= 1`, of every
/// generator vanishes at the origin.
pub fn classify_kind(ext: &TrivialExtension) -> Classification {
    let mut witness = None;
    let mut involves_t = false;
    'outer: for (i, g) in ext.generators.iter().enumerate() {
        for (nu, coeff) in t_coefficients(g) {
            if nu == 0 {
                continue;
            }
            involves_t = true;
            if !num_traits::Zero::is_zero(&coeff.constant_term()) {
                witness = Some((i, nu));
                break 'outer;
            }
        }
    }
    let kind = if witness.is_some() { Kind::FirstKind } else { Kind::SecondKind };
    let degenerate = if !involves_t {
        Some(Degeneracy::BaseOnly)
    } else if contains_t(ext) {
        Some(Degeneracy::FullPolynomialRing)
    } else {
        None
    };
    Classification {
        kind,
        degenerate,
        witness,
    }
}

fn contains_t(ext: &TrivialExtension) -> bool {
    let vars = xyt();
    let t = Polynomial::var(&vars, 2);
    let maxdeg = ext.generators.iter().filter_map(Polynomial::total_degree).max().unwrap_or(1);
    let params = TruncationParams::uniform(2, 2 * maxdeg + 1).expect("positive");
    ext.subalgebra()
        .subalgebra_contains(&t, &params)
        .map(|m| m.is_member())
        .unwrap_or(false)
}

/// The graded algebra `Q[x,y] + sum m_nu t^nu`, generated by `m t^nu` for
/// the generators `m` of `m_nu`, `nu <= nu_max`.
pub fn ideal_sequence_algebra(seq: &IdealSequence) -> Result<TrivialExtension> {
    let report = verify_sequence_axioms(seq);
    if report.status() == Status::Fail {
        let ids: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
        return Err(Error::InvalidInput(format!("sequence axioms fail: {}", ids.join(", "))));
    }
    let vars = xyt();
    let t = Polynomial::var(&vars, 2);
    let mut gens = Vec::new();
    for nu in 1..=seq.nu_max() {
        for m in seq.get(nu).generators() {
            gens.push(&m.embed(&vars)? * &t.pow(nu));
        }
    }
    TrivialExtension::new(gens)
}

/// Identities for the smooth extension `Q[x, y, xt, yt, xt^2 - t]`.
pub fn verify_smoothext() -> Result<Report> {
    let mut report = Report::new("smoothext");
    let vars = xyt();
    let p = |s: &str| parse_polynomial(s, &vars).expect("static formula");
    let tv = VarSet::new(["T1", "T2", "T3", "T4", "T5"]).expect("names");
    let equations: Vec<Polynomial> = ["T1*T4 - T2*T3", "T2*T5 + T4 - T3*T4", "T1*T5 - T3^2 + T3"]
        .iter()
        .map(|s| parse_polynomial(s, &tv).expect("static formula"))
        .collect();
    let chart2: Vec<Polynomial> = ["x", "y", "x*t", "y*t", "x*t^2 - t"].iter().map(|s| p(s)).collect();
    let chart1: Vec<Polynomial> = ["x", "x*y", "x*t + 1", "x*y*t + y", "x*t^2 + t"].iter().map(|s| p(s)).collect();

    for (label, images) in [("chart2", &chart2), ("chart1", &chart1)] {
        for (k, eq) in equations.iter().enumerate() {
            let r = eq.substitute_vec(images)?;
            report.push(Check::of(format!("equation[{k}].{label}"), r.is_zero(), r.to_string()));
        }
    }

    // (x, y, t) -> (x, xy, t + 1/x) carries the second chart's images to the first's
    let (x, y, t) = (Localized::var(&vars, 0), Localized::var(&vars, 1), Localized::var(&vars, 2));
    let glue = [x.clone(), x.mul(&y), t.add(&x.inverse()?)];
    for (k, (a, b)) in chart2.iter().zip(&chart1).enumerate() {
        let moved = Localized::substitute(a, &glue)?;
        let want = Localized::from_poly(b.clone());
        report.push(Check::of(format!("gluing[{k}]"), moved == want, format!("{moved} vs {want}")));
    }

    // inverse on c != 0 (first chart) and c != 1 (second chart), denominators cleared
    let (yy, tt) = (p("y"), p("t"));
    let one = Polynomial::one(&vars);
    let inv = [
        ("inverse.chart1.y", &chart1[3] - &(&yy * &chart1[2])),
        ("inverse.chart1.t", &chart1[4] - &(&tt * &chart1[2])),
        ("inverse.chart2.t", &chart2[4] - &(&tt * &(&chart2[2] - &one))),
    ];
    for (id, r) in inv {
        report.push(Check::of(id, r.is_zero(), r.to_string()));
    }

    let ext = TrivialExtension::new(chart2.clone())?;
    let c = classify_kind(&ext);
    report.push(Check::of("kind", c.kind == Kind::FirstKind, format!("{c:?}")));

    let params = TruncationParams::uniform(2, 4)?;
    for (dg, m) in ext.is_stable(&params)? {
        report.push(Check::of(format!("stable[{dg}]"), m.is_member(), dg.to_string()).with_params(params.to_string()));
    }
    Ok(report)
}
