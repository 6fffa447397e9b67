//! Acceptance gate: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lndext::families::{family1_generators, gluing_checks, FamilyOne, FamilyTwo, Sl2Ring};
use lndext::filtered::TruncationParams;
use lndext::ideal::Ideal;
use lndext::poly::{parse_polynomial, rat, Coeff, Monomial, Polynomial, VarSet};
use lndext::properties::{property_report, rewriter_report, DEFAULT_SEED};
use lndext::report::Report;
use lndext::sequence::generated_in_degree_one;
use lndext::suites::{run_suite, SuiteParams};
use lndext::{blowup, trivial_ext};

fn xy() -> VarSet {
    VarSet::new(["x", "y"]).unwrap()
}

/// `x^a y^b` with `p a + q b >= target`, listed for `a, b <= target`.
fn weighted_oracle(p: u32, q: u32, target: u32) -> Ideal {
    let vars = xy();
    let mut gens = Vec::new();
    for a in 0..=target {
        for b in 0..=target {
            if p * a + q * b >= target {
                gens.push(Polynomial::monomial(&vars, Monomial::new(vec![a, b])));
            }
        }
    }
    Ideal::new(&vars, gens).unwrap()
}

fn power_oracle(k: u32) -> Ideal {
    weighted_oracle(1, 1, k)
}

fn same(a: &Ideal, b: &Ideal) -> bool {
    a.contains_ideal(b) && b.contains_ideal(a)
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn from_report(r: &Report) -> Outcome {
    match r.failures().next() {
        None => pass(format!("{} checks", r.checks.len())),
        Some(c) => fail(format!("{} {} {}", c.id, c.status.as_str(), c.witness)),
    }
}

fn sl2_graded() -> Outcome {
    let b = Sl2Ring::new().subalgebra();
    for nu in 1..=4 {
        let t = TruncationParams::uniform(nu, 2 * nu + 2).unwrap();
        let m = b.compute_m_nu(nu, &t).unwrap().ideal;
        if !same(&m, &power_oracle(nu)) {
            return fail(format!("nu={nu} {t}"));
        }
    }
    pass("nu=1..4")
}

fn family_one_graded() -> Outcome {
    for n in 1..=2 {
        let fam = FamilyOne::new(n).unwrap();
        let seq = fam
            .subalgebra()
            .ideal_sequence(2, |nu| TruncationParams::uniform(nu + 1, (n + 2) * nu + 4).unwrap())
            .unwrap();
        for nu in 1..=2 {
            if !same(&seq.get(nu), &power_oracle((n + 2) * nu)) {
                return fail(format!("n={n} nu={nu}"));
            }
        }
    }
    pass("n=1,2 nu=1,2")
}

fn family_two_graded() -> Outcome {
    for (p, q) in [(1, 1), (2, 1), (3, 2)] {
        let fam = FamilyTwo::new(p, q).unwrap();
        let seq = fam
            .sequence(2, |nu| TruncationParams::uniform(1, 2 * (p + q) * nu + 4).unwrap())
            .unwrap();
        for nu in 1..=2 {
            if !same(&seq.get(nu), &weighted_oracle(p, q, (p + q) * nu)) {
                return fail(format!("p={p} q={q} nu={nu}"));
            }
        }
    }
    pass("(1,1) (2,1) (3,2) nu=1,2")
}

fn degree_one() -> Outcome {
    let x3 = parse_polynomial("x^3", &xy()).unwrap();
    let fam = FamilyTwo::new(2, 1).unwrap();
    let seq = fam.sequence(2, |nu| fam.default_truncation(nu)).unwrap();
    if !seq.get(2).contains(&x3) {
        return fail("x^3 not in m_2(P(2,1))");
    }
    if seq.get(1).power(2).contains(&x3) {
        return fail("x^3 in m_1(P(2,1))^2");
    }
    let r = generated_in_degree_one(&seq);
    if r[0].equal {
        return fail("P(2,1) reported generated in degree one");
    }
    for n in 1..=2 {
        let fam = FamilyOne::new(n).unwrap();
        let seq = fam.subalgebra().ideal_sequence(2, |nu| fam.default_truncation(nu)).unwrap();
        if !generated_in_degree_one(&seq).iter().all(|d| d.equal) {
            return fail(format!("P_{n} not generated in degree one"));
        }
    }
    pass("x^3 witness")
}

fn cross_family() -> Outcome {
    let fam = FamilyTwo::new(1, 1).unwrap();
    let seq = fam.sequence(3, |nu| fam.default_truncation(nu)).unwrap();
    for nu in 1..=3 {
        if !same(&seq.get(nu), &power_oracle(2 * nu)) {
            return fail(format!("nu={nu}"));
        }
    }
    pass("nu=1..3")
}

/// Rational points of SL2: `x, y, u` chosen, `v = (1 + y u) / x`.
fn sl2_points() -> Vec<[Coeff; 4]> {
    let mut pts = Vec::new();
    for (x, y, u) in [(1, 2, 3), (2, -1, 5), (-3, 4, 1), (5, 7, -2), (3, 0, 4)] {
        let (x, y, u) = (rat(x), rat(y), rat(u));
        let v = (Coeff::from_integer(1.into()) + &y * &u) / &x;
        pts.push([x, y, u, v]);
    }
    pts
}

fn psi_vanishing() -> Outcome {
    for n in 1..=3 {
        let fam = FamilyOne::new(n).unwrap();
        let sl2 = fam.sl2();
        for g in family1_generators(n).unwrap() {
            if !fam.pull_back(&g).unwrap().is_zero() {
                return fail(format!("n={n} {g}"));
            }
            for pt in sl2_points() {
                let image: Vec<Coeff> = fam.psi().iter().map(|f| f.eval(&pt)).collect();
                if g.eval(&image) != rat(0) {
                    return fail(format!("n={n} {g} at a point"));
                }
            }
        }
        let d = sl2.derivation();
        for (i, f) in fam.psi().iter().enumerate() {
            let lhs = d.apply(f);
            let rhs = fam.pull_back(fam.derivation().image(i)).unwrap();
            if !sl2.ring().equal(&lhs, &rhs) {
                return fail(format!("n={n} D(psi_{i})"));
            }
        }
    }
    pass("n=1..3")
}

fn smoothext() -> Outcome {
    let r = trivial_ext::verify_smoothext().unwrap();
    match r.find("kind") {
        Some(c) if c.passed() => from_report(&r),
        _ => fail("kind"),
    }
}

fn gluing() -> Outcome {
    for n in 1..=3 {
        let r = gluing_checks(n).unwrap();
        if !r.passed() {
            return from_report(&r);
        }
    }
    pass("n=1..3")
}

fn run(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let dt = start.elapsed();
    if let Some(l) = limit {
        if dt > l {
            out.ok = false;
            out.detail = format!("{} (over {:?})", out.detail, l);
        }
    }
    (out, dt)
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    type Criterion = (&'static str, Option<Duration>, Box<dyn FnOnce() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        ("graded ideals of SL2", secs(5), Box::new(sl2_graded)),
        ("first family m_nu", secs(60), Box::new(family_one_graded)),
        ("second family m_nu", secs(60), Box::new(family_two_graded)),
        ("degree-one generation", None, Box::new(degree_one)),
        ("cross-family P(1,1)", None, Box::new(cross_family)),
        ("psi vanishing and intertwining", secs(10), Box::new(psi_vanishing)),
        ("rewriter members and rejections", None, Box::new(|| from_report(&rewriter_report(DEFAULT_SEED, 200, 100).unwrap()))),
        ("smoothext", None, Box::new(smoothext)),
        ("gluing", None, Box::new(gluing)),
        ("blowup cases", None, Box::new(|| from_report(&blowup::verify_section7_cases().unwrap()))),
        ("equimod instance", None, Box::new(|| from_report(&run_suite("equimod", &SuiteParams::default()).unwrap()))),
        ("property suites", None, Box::new(|| from_report(&property_report(DEFAULT_SEED).unwrap()))),
    ];
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.into_iter().enumerate() {
        let (out, dt) = run(limit, f);
        if !out.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} [{:.2}s]",
            k + 1,
            if out.ok { "PASS" } else { "FAIL" },
            out.detail,
            dt.as_secs_f64()
        );
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
