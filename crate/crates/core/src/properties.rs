//! Seeded randomized property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blowup::linear_chart;
use crate::derivation::{Derivation, Grading};
use crate::error::Result;
use crate::families::{FamilyOne, FamilyTwo, Sl2Ring};
use crate::filtered::{FilteredSubalgebra, TruncationParams};
use crate::ideal::{GroebnerBasis, PresentedRing};
use crate::poly::{rat, Monomial, MonomialOrder, OrderKind, Polynomial, VarSet};
use crate::pullback::{build_pullback, verify_pullback};
use crate::report::{Check, Report};
use crate::rewriter::{chart_generators, chart_vars, default_max_steps, expand, generator_vars, rewrite_membership, Outcome};
use crate::sequence::verify_sequence_axioms;

pub const DEFAULT_SEED: u64 = 0x5eed;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn nonzero_coeff(rng: &mut impl Rng) -> i64 {
    let c = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        c
    } else {
        -c
    }
}

fn random_monomial(rng: &mut impl Rng, n: usize, max_degree: u32) -> Monomial {
    let d = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// A polynomial with at most `max_terms` terms of degree `<= max_degree`
/// and small integer coefficients.
pub fn random_polynomial(rng: &mut impl Rng, vars: &VarSet, max_degree: u32, max_terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(vars);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let m = random_monomial(rng, vars.len(), max_degree);
        p.add_term(m, rat(nonzero_coeff(rng)));
    }
    p
}

fn random_nonzero(rng: &mut impl Rng, ring: &PresentedRing, max_degree: u32, max_terms: usize) -> Polynomial {
    loop {
        let f = ring.normal_form(&random_polynomial(rng, ring.vars(), max_degree, max_terms));
        if !f.is_zero() {
            return f;
        }
    }
}

fn leibniz(d: &Derivation, name: &str, pairs: usize, rng: &mut impl Rng) -> Check {
    let ring = d.ring();
    for _ in 0..pairs {
        let f = random_polynomial(rng, ring.vars(), 3, 4);
        let g = random_polynomial(rng, ring.vars(), 3, 4);
        let lhs = d.apply(&(&f * &g));
        let rhs = ring.normal_form(&(&(&f * &d.apply(&g)) + &(&g * &d.apply(&f))));
        if lhs != rhs {
            return Check::fail(format!("leibniz.{name}"), format!("f={f} g={g}"));
        }
    }
    Check::pass(format!("leibniz.{name}")).with_params(format!("pairs={pairs}"))
}

fn gr_multiplicative(pairs: usize, rng: &mut impl Rng) -> Result<Check> {
    let sl2 = Sl2Ring::new();
    let (ring, d) = (sl2.ring(), sl2.derivation());
    for _ in 0..pairs {
        let f = random_nonzero(rng, ring, 3, 3);
        let g = random_nonzero(rng, ring, 3, 3);
        let (a, lf) = d.graded_leading_term(&f)?;
        let (b, lg) = d.graded_leading_term(&g)?;
        let (c, lfg) = d.graded_leading_term(&ring.mul(&f, &g))?;
        if c != a + b || lfg != ring.mul(&lf, &lg) {
            return Ok(Check::fail("gr_multiplicative.sl2", format!("f={f} g={g}")));
        }
    }
    Ok(Check::pass("gr_multiplicative.sl2").with_params(format!("pairs={pairs}")))
}

fn filtration_consistency(nu_max: u32) -> Result<Check> {
    let sl2 = Sl2Ring::new();
    let b = sl2.subalgebra();
    for nu in 0..=nu_max {
        let t = TruncationParams::uniform(nu + 1, 2 * nu + 2)?;
        for e in b.filtration_subspace(nu, &t) {
            let (k, _) = sl2.derivation().graded_leading_term(&e)?;
            if k > nu {
                return Ok(Check::fail("filtration.sl2", format!("nu={nu} {e}")));
            }
        }
    }
    Ok(Check::pass("filtration.sl2").with_params(format!("nu_max={nu_max}")))
}

fn buchberger_closure(count: usize, rng: &mut impl Rng) -> Check {
    let vars = VarSet::new(["x", "y", "z"]).expect("names");
    let orders = [
        MonomialOrder::degrevlex(),
        MonomialOrder::deglex(),
        MonomialOrder::new(OrderKind::Elimination { block: 1 }),
    ];
    for k in 0..count {
        let gens: Vec<Polynomial> = (0..rng.gen_range(2..=3))
            .map(|_| random_polynomial(rng, &vars, 3, 3))
            .collect();
        let order = &orders[k % orders.len()];
        let gb = GroebnerBasis::compute(&vars, &gens, order);
        let reduces = gens.iter().all(|g| gb.reduce(g).is_zero());
        if !gb.satisfies_buchberger_criterion() || !reduces {
            let w: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            return Check::fail("buchberger_closure", w.join(", "));
        }
    }
    Check::pass("buchberger_closure").with_params(format!("ideals={count}"))
}

/// Sequence axioms on the sequences of `SL2`, `P_1`, `P(2,1)`, `P(1,1)`
/// and the pullback along `(x^2, y)`.
pub fn sequence_axiom_report(nu_max: u32) -> Result<Report> {
    let mut report = Report::new("sequence-axioms");
    let sl2 = Sl2Ring::new();
    let seq = sl2
        .subalgebra()
        .ideal_sequence(nu_max + 1, |nu| TruncationParams::uniform(nu, 2 * nu + 2).expect("positive"))?;
    report.absorb("sl2.", verify_sequence_axioms(&seq));

    let fam = FamilyOne::new(1)?;
    let seq = fam.subalgebra().ideal_sequence(nu_max, |nu| fam.default_truncation(nu))?;
    report.absorb("family1[n=1].", verify_sequence_axioms(&seq));

    for (p, q) in [(2, 1), (1, 1)] {
        let fam = FamilyTwo::new(p, q)?;
        let seq = fam.sequence(nu_max, |nu| fam.default_truncation(nu))?;
        report.absorb(&format!("family2[p={p},q={q}]."), verify_sequence_axioms(&seq));
    }

    let plane = PresentedRing::polynomial(&VarSet::new(["x", "y"])?);
    let g = plane.element("x^2")?;
    let h = plane.element("y")?;
    let pb = build_pullback(&plane, &g, &h)?;
    let r = verify_pullback(&pb, nu_max)?;
    let mut sub = Report::new("pullback");
    sub.extend(r.checks.into_iter().filter(|c| c.id.starts_with("axioms.") || c.id.starts_with("contains_power")));
    report.absorb("pullback[x^2,y].", sub);
    Ok(report)
}

/// Leibniz rule, multiplicativity of graded leading terms on SL2, the
/// filtration bound, Buchberger closure and the sequence axioms.
pub fn property_report(seed: u64) -> Result<Report> {
    let mut report = Report::new("properties");
    let mut r = rng(seed, 1);
    let sl2 = Sl2Ring::new();
    report.push(leibniz(sl2.derivation(), "sl2", 100, &mut r));
    report.push(leibniz(&linear_chart(), "linear_chart", 25, &mut r));
    let quad = Derivation::from_strings(&PresentedRing::parse(&["x", "y", "z"], &[])?, &[("x", "y^2")])?;
    report.push(leibniz(&quad, "quadratic", 25, &mut r));
    report.push(leibniz(FamilyOne::new(1)?.derivation(), "family1[n=1]", 25, &mut r));

    let mut r = rng(seed, 2);
    report.push(gr_multiplicative(50, &mut r)?);
    report.push(filtration_consistency(2)?);

    let mut r = rng(seed, 3);
    report.push(buchberger_closure(30, &mut r));

    report.absorb("sequence_axioms.", sequence_axiom_report(2)?);
    for c in &mut report.checks {
        if c.params.is_empty() {
            c.params = format!("seed={seed}");
        }
    }
    Ok(report)
}

/// Linear-algebra membership in the chart algebra: the zero derivation on
/// `Q[t,v,u]`, base `Q[v]`, graded by `v:(1,0) t:(0,1) u:(n,-1)`.
pub fn chart_oracle(n: u32) -> Result<FilteredSubalgebra> {
    let ring = PresentedRing::polynomial(&chart_vars());
    let d = Derivation::new(&ring, vec![Polynomial::zero(ring.vars()); 3])?;
    let gens = chart_generators(n)[1..].to_vec();
    let grading = Grading::multi(vec![vec![0, 1], vec![1, 0], vec![n as i64, -1]])?;
    FilteredSubalgebra::new(d, &["v"], gens)?.with_grading(grading)
}

fn generator_degrees(n: u32) -> Vec<u32> {
    chart_generators(n).iter().map(|g| g.total_degree().unwrap_or(0)).collect()
}

/// A random combination of generator words of chart degree `<= max_degree`.
pub fn random_member(rng: &mut impl Rng, n: u32, max_degree: u32) -> Polynomial {
    let gv = generator_vars(n);
    let degs = generator_degrees(n);
    loop {
        let mut expr = Polynomial::zero(&gv);
        for _ in 0..rng.gen_range(1..=4) {
            let mut e = vec![0u32; gv.len()];
            let mut deg = 0;
            for _ in 0..rng.gen_range(1..=4) {
                let i = rng.gen_range(0..gv.len());
                if deg + degs[i] <= max_degree {
                    e[i] += 1;
                    deg += degs[i];
                }
            }
            expr.add_term(Monomial::new(e), rat(nonzero_coeff(rng)));
        }
        if !expand(&expr, n).expect("generator variables").is_zero() {
            return expr;
        }
    }
}

/// A term `c t^i v^j u^k` with `i > j + (n+2) k` and `i + j + k <= max_degree`.
pub fn random_irregular_term(rng: &mut impl Rng, n: u32, max_degree: u32) -> Polynomial {
    loop {
        let k = rng.gen_range(0..=1u32);
        let j = rng.gen_range(0..=2u32);
        let lo = j + (n + 2) * k + 1;
        if lo + j + k > max_degree {
            continue;
        }
        let i = rng.gen_range(lo..=max_degree - j - k);
        return Polynomial::term(&chart_vars(), Monomial::new(vec![i, j, k]), rat(nonzero_coeff(rng)));
    }
}

/// Random members must rewrite exactly with strictly descending bidegrees
/// and agree with [`chart_oracle`]; members plus an irregular term must be
/// rejected.
pub fn rewriter_report(seed: u64, members: usize, injected: usize) -> Result<Report> {
    const DEG: u32 = 8;
    let mut report = Report::new("rewriter");
    let mut r = rng(seed, 4);
    let oracles = [chart_oracle(1)?, chart_oracle(2)?];
    let t = TruncationParams::uniform(DEG, DEG)?;
    let (mut exact, mut descent, mut oracle) = (None, None, None);
    let mut conclusive = 0;
    for k in 0..members {
        let n = 1 + (k % 2) as u32;
        let expr = random_member(&mut r, n, DEG);
        let f = expand(&expr, n)?;
        let tr = rewrite_membership(&f, n, default_max_steps(&f))?;
        if !tr.strictly_descending() && descent.is_none() {
            descent = Some(format!("n={n} {f}"));
        }
        let ok = matches!(&tr.outcome, Outcome::Member(e) if expand(e, n)? == f);
        if !ok && exact.is_none() {
            exact = Some(format!("n={n} {f}"));
        }
        let lin = oracles[n as usize - 1].subalgebra_contains(&f, &t)?;
        if lin.is_member() {
            conclusive += 1;
            if !tr.is_member() && oracle.is_none() {
                oracle = Some(format!("n={n} {f}"));
            }
        }
    }
    let params = format!("seed={seed} count={members} max_degree={DEG}");
    report.push(Check::of("members.exact", exact.is_none(), exact.unwrap_or_default()).with_params(params.clone()));
    report.push(Check::of("members.descending", descent.is_none(), descent.unwrap_or_default()).with_params(params));
    report.push(
        Check::of("members.oracle", oracle.is_none(), oracle.unwrap_or_default())
            .with_params(format!("conclusive={conclusive}/{members}")),
    );

    let mut rejected = None;
    for k in 0..injected {
        let n = 1 + (k % 2) as u32;
        let base = expand(&random_member(&mut r, n, DEG - 2), n)?;
        let f = &base + &random_irregular_term(&mut r, n, DEG);
        let tr = rewrite_membership(&f, n, default_max_steps(&f))?;
        if !matches!(tr.outcome, Outcome::NotMember(_)) && rejected.is_none() {
            rejected = Some(format!("n={n} {f}"));
        }
    }
    report.push(
        Check::of("injected.rejected", rejected.is_none(), rejected.unwrap_or_default())
            .with_params(format!("seed={seed} count={injected}")),
    );
    Ok(report)
}
