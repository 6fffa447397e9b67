//! Affine charts of blowups of a ring with a derivation, transport of the
//! derivation to a chart, and ideals of fixed loci.

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, PresentedRing};
use crate::poly::{MonomialOrder, OrderKind, Polynomial, VarSet};
use crate::report::{Check, Report};

/// The ideal of the fixed locus: the relations together with the normal
/// forms of `D(g)` for every `g` in `gens`, which should generate the ring.
pub fn fixed_locus_ideal(d: &Derivation, gens: &[Polynomial]) -> Ideal {
    let ring = d.ring();
    let mut out: Vec<Polynomial> = ring.relations().generators().to_vec();
    out.extend(gens.iter().map(|g| d.apply(g)).filter(|p| !p.is_zero()));
    Ideal::with_order(ring.vars(), out, ring.order().clone()).expect("same ring")
}

/// The coordinates of a ring as polynomials.
pub fn coordinates(vars: &VarSet) -> Vec<Polynomial> {
    (0..vars.len()).map(|i| Polynomial::var(vars, i)).collect()
}

/// One affine chart `B[g_1/g_j, ..., g_s/g_j]` of the blowup of `B` along
/// `<g_1, ..., g_s>`, with the transported derivation.
#[derive(Clone, Debug)]
pub struct ChartBlowup {
    ring: PresentedRing,
    derivation: Derivation,
    denominator: Polynomial,
    /// For each center, the chart variable holding `g_i / g_j` (`None` for
    /// `i = j`, where the fraction is 1).
    fractions: Vec<Option<usize>>,
}

impl ChartBlowup {
    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// The denominator `g_j`, in the chart variables.
    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// `g_i / g_j` as an element of the chart.
    pub fn fraction(&self, i: usize) -> Polynomial {
        match self.fractions[i] {
            Some(k) => Polynomial::var(self.ring.vars(), k),
            None => Polynomial::one(self.ring.vars()),
        }
    }

    pub fn fixed_locus(&self) -> Ideal {
        fixed_locus_ideal(&self.derivation, &coordinates(self.ring.vars()))
    }
}

/// The chart of the blowup along `centers` where `centers[j]` is the
/// denominator. The chart ring has the old variables plus one variable
/// `w{i}` per other center, subject to `w{i} g_j = g_i`, saturated by `g_j`.
/// The derivation is transported by `D(w_i) = (D(g_i) - w_i D(g_j)) / g_j`;
/// if that quotient is not regular on the chart the center was not
/// invariant and [`Error::NotRegularOnChart`] is returned.
pub fn blowup_chart(d: &Derivation, centers: &[Polynomial], j: usize) -> Result<ChartBlowup> {
    let base = d.ring();
    if j >= centers.len() {
        return Err(Error::InvalidInput(format!("chart index {j} out of range")));
    }
    for g in centers {
        base.check_member(g)?;
    }
    let f = &centers[j];
    if base.is_zero(f) {
        return Err(Error::Degenerate("denominator is zero in the ring".into()));
    }
    let n = base.vars().len();
    let mut names = Vec::new();
    let mut fractions = Vec::new();
    for i in 0..centers.len() {
        if i == j {
            fractions.push(None);
        } else {
            let name = format!("w{i}");
            if base.vars().index_of(&name).is_some() {
                return Err(Error::InvalidInput(format!("variable name `{name}` already in use")));
            }
            fractions.push(Some(n + names.len()));
            names.push(name);
        }
    }
    let vars = base.vars().extended(names.iter().map(String::as_str))?;
    let lift = |p: &Polynomial| p.embed(&vars);
    let f_up = lift(f)?;
    let mut rels: Vec<Polynomial> = base
        .relations()
        .generators()
        .iter()
        .map(lift)
        .collect::<Result<_>>()?;
    for (i, slot) in fractions.iter().enumerate() {
        if let Some(k) = slot {
            rels.push(&(&Polynomial::var(&vars, *k) * &f_up) - &lift(&centers[i])?);
        }
    }
    let order = base.order().clone();
    let relations = Ideal::with_order(&vars, rels, order.clone())?.saturate(&f_up)?;
    let ring = PresentedRing::new(&vars, relations.groebner().polynomials().to_vec(), order)?;

    let mut images: Vec<Polynomial> = d.images().iter().map(lift).collect::<Result<_>>()?;
    let df = lift(&d.apply(f))?;
    for (i, slot) in fractions.iter().enumerate() {
        if let Some(k) = slot {
            let w = Polynomial::var(&vars, *k);
            let num = &lift(&d.apply(&centers[i]))? - &(&w * &df);
            let q = divide_in_chart(&ring, &num, &f_up).ok_or_else(|| {
                Error::NotRegularOnChart(format!("({num}) / ({f_up})"))
            })?;
            images.push(q);
        }
    }
    let derivation = Derivation::new(&ring, images)?;
    Ok(ChartBlowup {
        ring,
        derivation,
        denominator: f_up,
        fractions,
    })
}

/// The affine modification `B[g_1/f, ..., g_s/f]`: the chart with
/// denominator `f`, adding `f` to the centers if it is not among them.
pub fn affine_modification(d: &Derivation, f: &Polynomial, centers: &[Polynomial]) -> Result<ChartBlowup> {
    let mut all = centers.to_vec();
    let j = match all.iter().position(|g| g == f) {
        Some(j) => j,
        None => {
            all.push(f.clone());
            all.len() - 1
        }
    };
    blowup_chart(d, &all, j)
}

/// `num / f` in `ring`, where `f` is a nonzerodivisor; `None` if the
/// quotient is not a ring element.
fn divide_in_chart(ring: &PresentedRing, num: &Polynomial, f: &Polynomial) -> Option<Polynomial> {
    let vars = ring.vars();
    let n = vars.len();
    let ext = vars.extended(["_quot"]).ok()?;
    let t = Polynomial::var(&ext, n);
    let mut gens: Vec<Polynomial> = ring
        .relations()
        .generators()
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<_>>()
        .ok()?;
    let f_up = f.embed(&ext).ok()?;
    gens.push(&(&f_up * &t) - &num.embed(&ext).ok()?);
    let mut priority = vec![n];
    priority.extend(0..n);
    let elim = MonomialOrder::with_priority(OrderKind::Elimination { block: 1 }, priority);
    let ideal = Ideal::with_order(&ext, gens, elim.clone()).ok()?.saturate(&f_up).ok()?.reordered(elim);
    let r = ideal.normal_form(&t);
    if r.degree_in(n).unwrap_or(0) > 0 {
        return None;
    }
    Some(ring.normal_form(&r.embed(vars).ok()?))
}

/// The three-dimensional starting chart: `Q[xi, eta, zeta]` with
/// `D = eta d/d(xi)`.
pub fn linear_chart() -> Derivation {
    let ring = PresentedRing::parse(&["xi", "eta", "zeta"], &[]).expect("static ring");
    Derivation::from_strings(&ring, &[("xi", "eta")]).expect("no relations")
}

/// Fixed loci of the blowups of the linear chart along a point and two
/// lines inside `eta = 0`, after removing the strict transform of
/// `eta = 0`; also the chart of `Q[x,y,z]`, `x -> y^2`, along the origin.
pub fn verify_section7_cases() -> Result<Report> {
    let mut report = Report::new("section7");

    let ring = PresentedRing::parse(&["x", "y", "z"], &[]).expect("static ring");
    let d0 = Derivation::from_strings(&ring, &[("x", "y^2")])?;
    let coords = coordinates(ring.vars());
    let u1 = blowup_chart(&d0, &coords, 1)?;
    let cv = u1.ring().vars();
    let y = Polynomial::var(cv, 1);
    let dxi = u1.derivation().apply(&u1.fraction(0));
    report.push(Check::of("first_chart.D(xi)", dxi == y, dxi.to_string()));
    let dzeta = u1.derivation().apply(&u1.fraction(2));
    report.push(Check::of("first_chart.D(zeta)", dzeta.is_zero(), dzeta.to_string()));
    let e1 = ideal_with_relations(u1.ring(), vec![y.clone()])?;
    report.push(equality_check("first_chart.fixed_locus", &u1.fixed_locus(), &e1));

    let d = linear_chart();
    let v = coordinates(d.ring().vars());
    let (xi, eta, zeta) = (v[0].clone(), v[1].clone(), v[2].clone());

    // a point: every chart is free away from the strict transform of eta = 0
    let point = [xi.clone(), eta.clone(), zeta.clone()];
    for j in 0..3 {
        let chart = blowup_chart(&d, &point, j)?;
        let strict = chart.fraction(1);
        let off = chart.fixed_locus().saturate(&strict)?;
        report.push(Check::of(
            format!("case1.chart[{j}].free"),
            off.is_unit(),
            first_generator(&off),
        ));
    }

    // the xi-axis: the whole exceptional divisor is fixed
    let line = [eta.clone(), zeta.clone()];
    let chart = affine_modification(&d, &eta, &line)?;
    let exc = ideal_with_relations(chart.ring(), vec![chart.denominator().clone()])?;
    report.push(equality_check("case2a.fixed_fibers", &chart.fixed_locus(), &exc));

    // the zeta-axis: free
    let line = [xi, eta.clone()];
    let chart = affine_modification(&d, &eta, &line)?;
    let fixed = chart.fixed_locus();
    report.push(Check::of("case2b.free", fixed.is_unit(), first_generator(&fixed)));
    Ok(report)
}

fn ideal_with_relations(ring: &PresentedRing, mut gens: Vec<Polynomial>) -> Result<Ideal> {
    gens.extend(ring.relations().generators().iter().cloned());
    Ideal::with_order(ring.vars(), gens, ring.order().clone())
}

fn first_generator(i: &Ideal) -> String {
    i.groebner().polynomials().first().map(|p| p.to_string()).unwrap_or_default()
}

fn equality_check(id: &str, got: &Ideal, want: &Ideal) -> Check {
    let w = got
        .first_outside(want)
        .or_else(|| want.first_outside(got))
        .map(|p| p.to_string())
        .unwrap_or_default();
    Check::of(id, w.is_empty(), w)
}
