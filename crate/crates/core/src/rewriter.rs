//! Membership in the chart algebra
//! `Q[v, vt, u, ut, ..., ut^{n+1}, ut^{n+2} - v^n t^{n+1}]` by repeatedly
//! cancelling the terms of maximal bidegree.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{bidegree, BiDegree, Coeff, Monomial, Polynomial, VarSet};

/// The variables `t, v, u`.
pub fn chart_vars() -> VarSet {
    VarSet::new(["t", "v", "u"]).expect("distinct names")
}

/// Names `G0, ..., G{n+4}` for the chart generators.
pub fn generator_vars(n: u32) -> VarSet {
    VarSet::new((0..n + 5).map(|i| format!("G{i}"))).expect("distinct names")
}

/// `G0 = v`, `G1 = vt`, `G{2+i} = u t^i` for `i <= n+1`, and
/// `G{n+4} = u t^{n+2} - v^n t^{n+1}`.
pub fn chart_generators(n: u32) -> Vec<Polynomial> {
    let vars = chart_vars();
    let m = |t: u32, v: u32, u: u32| Polynomial::monomial(&vars, Monomial::new(vec![t, v, u]));
    let mut g = vec![m(0, 1, 0), m(1, 1, 0)];
    g.extend((0..=n + 1).map(|i| m(i, 0, 1)));
    g.push(&m(n + 2, 0, 1) - &m(n + 1, n, 0));
    g
}

/// Expands a polynomial in `G0, ..., G{n+4}` to one in `t, v, u`.
pub fn expand(expr: &Polynomial, n: u32) -> Result<Polynomial> {
    expr.substitute_vec(&chart_generators(n))
}

/// Which case of the reduction produced a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// `i <= j`: `c (tv)^i v^{j-i} u^k`.
    Diagonal,
    /// `i - j = (n+2) q + r` with `q < k`: `c (tv)^j u t^r G^q u^{k-q-1}`.
    Shifted { q: u32, r: u32 },
    /// `i - j = (n+2) k`: `c (tv)^j G^k`, where `G = u t^{n+2} - v^n t^{n+1}`.
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub bidegree: BiDegree,
    /// The terms of maximal bidegree.
    pub lead: Polynomial,
    /// The subtracted element, as a polynomial in the generators.
    pub word: Polynomial,
    pub rules: Vec<Rule>,
    /// What remains after subtracting `word`.
    pub remainder: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// A polynomial in `G0, ..., G{n+4}` expanding to the input.
    Member(Polynomial),
    /// A term `c t^i v^j u^k` of maximal bidegree with `i > j + (n+2) k`.
    NotMember(Polynomial),
    StepLimit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTrace {
    pub n: u32,
    pub input: Polynomial,
    pub steps: Vec<Step>,
    pub outcome: Outcome,
}

impl RewriteTrace {
    pub fn is_member(&self) -> bool {
        matches!(self.outcome, Outcome::Member(_))
    }

    /// Bidegrees decrease strictly from the input through every remainder.
    pub fn strictly_descending(&self) -> bool {
        let mut prev = match bidegree(&self.input) {
            Ok(b) => b,
            Err(_) => return false,
        };
        for s in &self.steps {
            if s.bidegree != prev {
                return false;
            }
            let next = bidegree(&s.remainder).unwrap_or(BiDegree::Bottom);
            if next >= prev {
                return false;
            }
            prev = next;
        }
        true
    }

    pub fn used_boundary_rule(&self) -> bool {
        self.steps.iter().any(|s| s.rules.contains(&Rule::Boundary))
    }
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {}", self.input)?;
        for (k, s) in self.steps.iter().enumerate() {
            writeln!(f, "step {k}: bideg {} lead {} -> {} ; remainder {}", s.bidegree, s.lead, s.word, s.remainder)?;
        }
        match &self.outcome {
            Outcome::Member(e) => {
                writeln!(f, "member: {e}")?;
                if self.used_boundary_rule() {
                    writeln!(f, "note: boundary case i - j = (n+2)k handled by c (tv)^j G^k")?;
                }
                Ok(())
            }
            Outcome::NotMember(w) => writeln!(f, "not a member: {w} violates i <= j + (n+2)k"),
            Outcome::StepLimit => writeln!(f, "step limit reached"),
        }
    }
}

fn to_chart(f: &Polynomial) -> Result<Polynomial> {
    bidegree(f)?;
    f.embed(&chart_vars())
}

/// Generator word for one term `c t^i v^j u^k`, or `None` if
/// `i > j + (n+2) k`.
fn word_for(n: u32, i: u32, j: u32, k: u32) -> Option<(Vec<u32>, Rule)> {
    let mut e = vec![0u32; n as usize + 5];
    let top = n as usize + 4;
    if i <= j {
        e[1] = i;
        e[0] = j - i;
        e[2] += k;
        return Some((e, Rule::Diagonal));
    }
    let d = i - j;
    let step = n + 2;
    if d == step * k {
        e[1] = j;
        e[top] = k;
        return Some((e, Rule::Boundary));
    }
    let (q, r) = (d / step, d % step);
    if k == 0 || q > k - 1 {
        return None;
    }
    e[1] = j;
    e[2 + r as usize] += 1;
    e[top] += q;
    e[2] += k - q - 1;
    Some((e, Rule::Shifted { q, r }))
}

/// One reduction step: subtracts an element of the chart algebra with the
/// same terms of maximal bidegree. `Err` carries a violating term.
pub fn reduce_step(f: &Polynomial, n: u32) -> Result<std::result::Result<Step, Polynomial>> {
    let f = to_chart(f)?;
    let bd = bidegree(&f)?;
    let (k, j) = match bd {
        BiDegree::Bottom => return Err(Error::ZeroElement),
        BiDegree::Pair(k, j) => (k, j),
    };
    let vars = chart_vars();
    let gvars = generator_vars(n);
    let gens = chart_generators(n);
    let mut lead = Polynomial::zero(&vars);
    let mut word = Polynomial::zero(&gvars);
    let mut rules = Vec::new();
    let mut group: Vec<(Monomial, Coeff)> = f
        .terms()
        .filter(|(m, _)| m.exp(1) == j && m.exp(2) == k)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    group.sort_by(|a, b| b.0.exp(0).cmp(&a.0.exp(0)));
    for (m, c) in group {
        let i = m.exp(0);
        match word_for(n, i, j, k) {
            None => return Ok(Err(Polynomial::term(&vars, m, c))),
            Some((e, rule)) => {
                word.add_term(Monomial::new(e), c.clone());
                lead.add_term(m, c);
                if !rules.contains(&rule) {
                    rules.push(rule);
                }
            }
        }
    }
    let remainder = &f - &word.substitute_vec(&gens)?;
    Ok(Ok(Step {
        bidegree: bd,
        lead,
        word,
        rules,
        remainder,
    }))
}

/// Rewrites `f` in the chart generators, or exhibits a term showing it is
/// not in the chart algebra.
pub fn rewrite_membership(f: &Polynomial, n: u32, max_steps: usize) -> Result<RewriteTrace> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let input = to_chart(f)?;
    let mut current = input.clone();
    let mut expr = Polynomial::zero(&generator_vars(n));
    let mut steps = Vec::new();
    let outcome = loop {
        if current.is_zero() {
            break Outcome::Member(expr);
        }
        if steps.len() >= max_steps {
            break Outcome::StepLimit;
        }
        match reduce_step(&current, n)? {
            Err(term) => break Outcome::NotMember(term),
            Ok(step) => {
                expr = &expr + &step.word;
                current = step.remainder.clone();
                steps.push(step);
            }
        }
    };
    Ok(RewriteTrace {
        n,
        input,
        steps,
        outcome,
    })
}

/// A generous step bound: the number of bidegrees below that of `f`.
pub fn default_max_steps(f: &Polynomial) -> usize {
    match bidegree(f) {
        Ok(BiDegree::Pair(k, j)) => {
            let deg = f.total_degree().unwrap_or(0) as usize;
            (k as usize + 1) * (j as usize + deg + 1) + 16
        }
        _ => 16,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::{Derivation, Grading};
    use crate::filtered::{FilteredSubalgebra, TruncationParams};
    use crate::ideal::PresentedRing;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &chart_vars()).unwrap()
    }

    fn g(n: u32, s: &str) -> Polynomial {
        parse_polynomial(s, &generator_vars(n)).unwrap()
    }

    #[test]
    fn generators_n1() {
        let gens = chart_generators(1);
        let want = ["v", "v*t", "u", "u*t", "u*t^2", "u*t^3 - v*t^2"];
        assert_eq!(gens.len(), want.len());
        for (a, b) in gens.iter().zip(want) {
            assert_eq!(a, &p(b));
        }
    }

    #[test]
    fn shifted_single_step() {
        let f = p("u^2*t^3 - u*v*t^2");
        let step = reduce_step(&f, 1).unwrap().unwrap();
        assert_eq!(step.bidegree, BiDegree::Pair(2, 0));
        assert_eq!(step.rules, vec![Rule::Shifted { q: 1, r: 0 }]);
        assert!(step.remainder.is_zero());
        let tr = rewrite_membership(&f, 1, 10).unwrap();
        assert_eq!(tr.outcome, Outcome::Member(g(1, "G5*G2")));
    }

    #[test]
    fn simple_members() {
        let tr = rewrite_membership(&p("v^3"), 1, 10).unwrap();
        assert_eq!(tr.outcome, Outcome::Member(g(1, "G0^3")));
        let tr = rewrite_membership(&p("v + v*t"), 1, 10).unwrap();
        assert_eq!(tr.outcome, Outcome::Member(g(1, "G0 + G1")));
        let tr = rewrite_membership(&p("t^2*u"), 1, 10).unwrap();
        assert_eq!(tr.outcome, Outcome::Member(g(1, "G4")));
        let tr = rewrite_membership(&p("0"), 1, 10).unwrap();
        assert_eq!(tr.outcome, Outcome::Member(Polynomial::zero(&generator_vars(1))));
    }

    #[test]
    fn t_is_not_a_member() {
        let tr = rewrite_membership(&p("t"), 1, 10).unwrap();
        assert_eq!(tr.outcome, Outcome::NotMember(p("t")));
        assert!(matches!(reduce_step(&p("t"), 1).unwrap(), Err(_)));
    }

    #[test]
    fn boundary_case() {
        // leading term u^2 t^7 v of G1 G5^2 for n = 1: i - j = 6 = 3 * 2
        let f = expand(&g(1, "G1*G5^2"), 1).unwrap();
        let tr = rewrite_membership(&f, 1, 20).unwrap();
        assert!(tr.is_member(), "{tr}");
        assert!(tr.used_boundary_rule());
        if let Outcome::Member(e) = &tr.outcome {
            assert_eq!(expand(e, 1).unwrap(), f);
        }
        // u^2 t^6 alone has the same shape of leading term but is not regular
        let tr = rewrite_membership(&p("u^2*t^6"), 1, 20).unwrap();
        assert!(matches!(tr.outcome, Outcome::NotMember(_)));
    }

    #[test]
    fn extraneous_variable_rejected() {
        let vars = VarSet::new(["t", "v", "u", "w"]).unwrap();
        let f = parse_polynomial("w*t", &vars).unwrap();
        assert!(rewrite_membership(&f, 1, 10).is_err());
        assert!(rewrite_membership(&p("t"), 0, 10).is_err());
    }

    /// Truncated linear algebra over the chart generators, graded by
    /// `v:(1,0) t:(0,1) u:(n,-1)`.
    fn oracle(n: u32) -> FilteredSubalgebra {
        let ring = PresentedRing::polynomial(&chart_vars());
        let d = Derivation::new(&ring, vec![Polynomial::zero(ring.vars()); 3]).unwrap();
        let gens = chart_generators(n)[1..].to_vec();
        let grading = Grading::multi(vec![vec![0, 1], vec![1, 0], vec![n as i64, -1]]).unwrap();
        FilteredSubalgebra::new(d, &["v"], gens).unwrap().with_grading(grading).unwrap()
    }

    fn word_strategy(n: u32) -> impl Strategy<Value = Polynomial> {
        let len = n as usize + 5;
        prop::collection::vec((prop::collection::vec(0u32..3, len), -4i64..5), 1..5).prop_map(move |terms| {
            let gv = generator_vars(n);
            let mut e = Polynomial::zero(&gv);
            for (exps, c) in terms {
                let m = Monomial::new(exps);
                if m.degree() <= 3 {
                    e.add_term(m, crate::poly::rat(c));
                }
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn members_rewrite_exactly((n, expr) in (1u32..3).prop_flat_map(|n| (Just(n), word_strategy(n)))) {
            let f = expand(&expr, n).unwrap();
            let tr = rewrite_membership(&f, n, default_max_steps(&f)).unwrap();
            prop_assert!(tr.strictly_descending());
            match &tr.outcome {
                Outcome::Member(e) => prop_assert_eq!(expand(e, n).unwrap(), f),
                other => prop_assert!(false, "{:?}", other),
            }
        }

        #[test]
        fn injected_term_is_rejected(n in 1u32..3, i in 0u32..4, j in 0u32..3, k in 0u32..2, c in 1i64..5) {
            let f = expand(&g(n, "G1*G2 + G0^2"), n).unwrap();
            let i = i + j + (n + 2) * k + 1;
            let bad = Polynomial::term(&chart_vars(), Monomial::new(vec![i, j, k]), crate::poly::rat(c));
            let tr = rewrite_membership(&(&f + &bad), n, 100).unwrap();
            prop_assert!(matches!(tr.outcome, Outcome::NotMember(_)));
        }
    }

    #[test]
    fn agrees_with_linear_algebra() {
        for n in 1..=2 {
            let b = oracle(n);
            let t = TruncationParams::uniform(6, 6).unwrap();
            let samples = ["u^2*t^3 - u*v*t^2", "v*t + u*t^2", "t", "u*t^4", "v^2*t^3", "u*t^2*v + v^3", "t*u*v^2"];
            for s in samples {
                let f = p(s);
                if f.total_degree().unwrap_or(0) > 6 {
                    continue;
                }
                let tr = rewrite_membership(&f, n, 50).unwrap();
                let lin = b.subalgebra_contains(&f, &t).unwrap();
                if lin.is_member() {
                    assert!(tr.is_member(), "n={n} {s}");
                }
                if tr.is_member() {
                    assert!(lin.is_member(), "n={n} {s}: rewriter found {:?}", tr.outcome);
                }
            }
        }
    }
}
