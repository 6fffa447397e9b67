//! Named verification suites with their default parameters.

use crate::blowup::verify_section7_cases;
use crate::error::{Error, Result};
use crate::families::{gluing_checks, verify_family1, verify_family2, FamilyOne, FamilyTwo, Sl2Ring};
use crate::filtered::{Membership, TruncationParams};
use crate::ideal::maximal_ideal_power;
use crate::poly::VarSet;
use crate::properties::{property_report, rewriter_report, sequence_axiom_report, DEFAULT_SEED};
use crate::report::{Check, Report, Status};
use crate::trivial_ext::verify_smoothext;

pub const SUITES: &[&str] = &[
    "family1",
    "family2",
    "smoothext",
    "section7",
    "gluing",
    "sequence-axioms",
    "cross-family",
    "sl2",
    "equimod",
    "properties",
    "rewriter",
];

/// Options shared by all suites. Unset values fall back to per-suite
/// defaults; explicit truncation bounds replace the default ones, and
/// `scale` multiplies the result.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteParams {
    pub n: Option<u32>,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub nu_max: Option<u32>,
    pub trunc_len: Option<u32>,
    pub trunc_deg: Option<u32>,
    pub seed: u64,
    pub scale: f64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: None,
            p: None,
            q: None,
            nu_max: None,
            trunc_len: None,
            trunc_deg: None,
            seed: DEFAULT_SEED,
            scale: 1.0,
        }
    }
}

impl SuiteParams {
    /// Defaults with `scale` read from `LND_TRUNC_SCALE`.
    pub fn from_env() -> Result<Self> {
        let mut p = Self::default();
        if let Ok(s) = std::env::var("LND_TRUNC_SCALE") {
            p.scale = parse_scale(&s)?;
        }
        Ok(p)
    }

    pub fn truncation(&self, default: TruncationParams) -> TruncationParams {
        let mut t = default;
        if let Some(l) = self.trunc_len {
            t.max_len = l;
        }
        if let Some(d) = self.trunc_deg {
            t.max_degree = d;
            t.out_degree = d;
        }
        if self.scale != 1.0 {
            t = t.scaled(self.scale);
        }
        t
    }
}

pub fn parse_scale(s: &str) -> Result<f64> {
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(Error::InvalidInput(format!("LND_TRUNC_SCALE must be a positive number, got `{s}`"))),
    }
}

/// Runs the suite called `name`.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<Report> {
    match name {
        "family1" => {
            let n = params.n.unwrap_or(1);
            if n == 0 {
                return Err(Error::InvalidInput(
                    "family1 needs n >= 1; n = 0 is the family2 instance p = q = 1".into(),
                ));
            }
            let fam = FamilyOne::new(n)?;
            verify_family1(n, params.nu_max.unwrap_or(2), |nu| params.truncation(fam.default_truncation(nu)))
        }
        "family2" => {
            let (p, q) = (params.p.unwrap_or(2), params.q.unwrap_or(1));
            let fam = FamilyTwo::new(p, q)?;
            verify_family2(p, q, params.nu_max.unwrap_or(2), |nu| params.truncation(fam.default_truncation(nu)))
        }
        "smoothext" => verify_smoothext(),
        "section7" => verify_section7_cases(),
        "gluing" => {
            let ns: Vec<u32> = match params.n {
                Some(n) => vec![n],
                None => vec![1, 2, 3],
            };
            let mut report = Report::new("gluing");
            for n in ns {
                report.absorb("", gluing_checks(n)?);
            }
            Ok(report)
        }
        "sequence-axioms" => sequence_axiom_report(params.nu_max.unwrap_or(2)),
        "cross-family" => cross_family(params),
        "sl2" => sl2_graded(params),
        "equimod" => equimod(params),
        "properties" => property_report(params.seed),
        "rewriter" => rewriter_report(params.seed, 200, 100),
        other => Err(Error::InvalidInput(format!(
            "unknown suite `{other}`; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

fn xy() -> VarSet {
    VarSet::new(["x", "y"]).expect("names")
}

fn compare(id: String, got: &crate::ideal::Ideal, want: &crate::ideal::Ideal, params: TruncationParams) -> Check {
    let w = got
        .first_outside(want)
        .or_else(|| want.first_outside(got))
        .map(|p| p.to_string())
        .unwrap_or_default();
    Check::of(id, w.is_empty(), w).with_params(params.to_string())
}

/// `m_nu` of SL2 against `<x,y>^nu` at `L = nu`, `d = 2 nu + 2`.
fn sl2_graded(params: &SuiteParams) -> Result<Report> {
    let sl2 = Sl2Ring::new();
    let nu_max = params.nu_max.unwrap_or(4);
    let t = |nu: u32| params.truncation(TruncationParams::uniform(nu, 2 * nu + 2).expect("positive"));
    let seq = sl2.subalgebra().ideal_sequence(nu_max, t)?;
    let mut report = Report::new("sl2");
    for nu in 1..=nu_max {
        report.push(compare(format!("m_nu[{nu}]"), &seq.get(nu), &maximal_ideal_power(&xy(), nu), t(nu)));
    }
    Ok(report)
}

/// The sequence of `P(1,1)` against `<x,y>^{2 nu}`, the first family
/// continued to `n = 0`.
fn cross_family(params: &SuiteParams) -> Result<Report> {
    let fam = FamilyTwo::new(1, 1)?;
    let nu_max = params.nu_max.unwrap_or(3);
    let t = |nu: u32| params.truncation(fam.default_truncation(nu));
    let seq = fam.sequence(nu_max, t)?;
    let mut report = Report::new("cross-family");
    for nu in 1..=nu_max {
        report.push(compare(format!("m_nu[{nu}]"), &seq.get(nu), &maximal_ideal_power(&xy(), 2 * nu), t(nu)));
        report.push(compare(format!("weighted[{nu}]"), &seq.get(nu), &fam.expected_m_nu(nu), t(nu)));
    }
    Ok(report)
}

/// For `C = P(p,q)` (default `(2,1)`): the least `n` with
/// `<x,y>^{n+2}` inside `m_1(C)`, then membership of the generators of
/// `P_n` in the truncated span of `C`.
fn equimod(params: &SuiteParams) -> Result<Report> {
    let (p, q) = (params.p.unwrap_or(2), params.q.unwrap_or(1));
    let c = FamilyTwo::new(p, q)?;
    let t1 = params.truncation(c.default_truncation(1));
    let m1 = c.sequence(1, |_| t1)?.get(1);
    let mut report = Report::new("equimod");
    let n_max = params.n.unwrap_or(8).max(1);
    let n = (1..=n_max).find(|&n| m1.contains_ideal(&maximal_ideal_power(&xy(), n + 2)));
    let Some(n) = n else {
        report.push(Check::fail("find_n", format!("no n <= {n_max}")).with_params(t1.to_string()));
        return Ok(report);
    };
    report.push(Check::pass("find_n").with_params(format!("n={n} {t1}")));
    let gens = FamilyOne::new(n)?.subalgebra_generators();
    let deg = gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(1);
    let t = params.truncation(TruncationParams::uniform(1, deg)?);
    let b = c.subalgebra(t.max_degree);
    for (i, g) in gens.iter().enumerate() {
        let status = match b.subalgebra_contains(g, &t)? {
            Membership::Member(_) => Status::Pass,
            Membership::NotFoundWithinBounds => Status::Fail,
        };
        report.push(Check::new(format!("member[{i}]"), status).with_params(t.to_string()).with_witness(g.to_string()));
    }
    Ok(report)
}
