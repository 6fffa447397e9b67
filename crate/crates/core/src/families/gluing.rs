//! Symbolic checks of the chart data behind `P_n`: the Borel group law,
//! its two actions on the plane, the transition maps between the two
//! charts, and the `n+5` functions on them.

use crate::error::Result;
use crate::poly::{parse_polynomial, rat, Localized, Polynomial, VarSet};
use crate::report::{Check, Report};

fn vars(names: &[&str]) -> VarSet {
    VarSet::new(names.iter().copied()).expect("distinct names")
}

fn poly(s: &str, v: &VarSet) -> Polynomial {
    parse_polynomial(s, v).expect("static formula")
}

/// `(a,b).(c,d) = (a + b^2 c, bd)`.
pub fn borel_mul(a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial) -> (Polynomial, Polynomial) {
    (a + &(&b.pow(2) * c), b * d)
}

/// `(s,t) *_L (x,y) = (s t^n y^n + t^{n+2} x, t y)`.
pub fn left_action(n: u32, s: &Polynomial, t: &Polynomial, x: &Polynomial, y: &Polynomial) -> (Polynomial, Polynomial) {
    let a = &(&(s * &t.pow(n)) * &y.pow(n)) + &(&t.pow(n + 2) * x);
    (a, t * y)
}

/// `(x,y) *_R (s,t) = (t^n (x + y^{n+2} s), t y)`.
pub fn right_action(n: u32, x: &Polynomial, y: &Polynomial, s: &Polynomial, t: &Polynomial) -> (Polynomial, Polynomial) {
    let a = &t.pow(n) * &(x + &(&y.pow(n + 2) * s));
    (a, t * y)
}

/// The transition `(z,(u,v)) -> (1/z, (sign z^{n+1} v^n + z^{n+2} u, z v))`;
/// `sign = 1` maps the first chart to the second, `sign = -1` back.
pub fn transition(n: u32, sign: i64, z: &Localized, u: &Localized, v: &Localized) -> Result<[Localized; 3]> {
    let zi = z.inverse()?;
    let a = z.pow(n + 1).mul(&v.pow(n)).scale(&rat(sign));
    let b = z.pow(n + 2).mul(u);
    Ok([zi, a.add(&b), z.mul(v)])
}

/// The functions `f0, f1, g0, ..., g{n+1}, h` in chart coordinates
/// `(t, u, v)`: first on the chart over `x != 0`, then over `y != 0`.
pub fn chart_functions(n: u32) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let v = vars(&["t", "u", "v"]);
    let mut q0 = vec![poly("t*v", &v), poly("v", &v)];
    let mut q1 = vec![poly("v", &v), poly("t*v", &v)];
    for i in 0..=n + 1 {
        q0.push(poly(&format!("t^{}*u + t^{}*v^{n}", n + 2 - i, n + 1 - i), &v));
        q1.push(poly(&format!("t^{i}*u"), &v));
    }
    q0.push(poly("u", &v));
    q1.push(poly(&format!("t^{}*u - t^{}*v^{n}", n + 2, n + 1), &v));
    (q0, q1)
}

fn diff_check(id: String, lhs: &Polynomial, rhs: &Polynomial) -> Check {
    let d = lhs - rhs;
    Check::of(id, d.is_zero(), d.to_string())
}

/// Runs all chart identities for a given `n`.
pub fn gluing_checks(n: u32) -> Result<Report> {
    let mut report = Report::new("gluing");
    let tag = |s: &str| format!("{s}[n={n}]");

    // transitions are mutually inverse
    let zv = vars(&["z", "u", "v"]);
    let (z, u, v) = (Localized::var(&zv, 0), Localized::var(&zv, 1), Localized::var(&zv, 2));
    for (label, first, second) in [("inverse_01", 1, -1), ("inverse_10", -1, 1)] {
        let [a, b, c] = transition(n, first, &z, &u, &v)?;
        let back = transition(n, second, &a, &b, &c)?;
        let ok = back[0] == z && back[1] == u && back[2] == v;
        let witness = format!("({}, {}, {})", back[0], back[1], back[2]);
        report.push(Check::of(tag(label), ok, witness));
    }

    // the two actions commute and are actions
    let av = vars(&["s", "t", "s2", "t2", "x", "y"]);
    let p = |i| Polynomial::var(&av, i);
    let (s, t, s2, t2, x, y) = (p(0), p(1), p(2), p(3), p(4), p(5));
    let (rx, ry) = right_action(n, &x, &y, &s2, &t2);
    let (lhs_x, lhs_y) = left_action(n, &s, &t, &rx, &ry);
    let (lx, ly) = left_action(n, &s, &t, &x, &y);
    let (rhs_x, rhs_y) = right_action(n, &lx, &ly, &s2, &t2);
    report.push(diff_check(tag("commute.0"), &lhs_x, &rhs_x));
    report.push(diff_check(tag("commute.1"), &lhs_y, &rhs_y));

    let (ps, pt) = borel_mul(&s, &t, &s2, &t2);
    let (ax, ay) = left_action(n, &ps, &pt, &x, &y);
    let (ix, iy) = left_action(n, &s2, &t2, &x, &y);
    let (bx, by) = left_action(n, &s, &t, &ix, &iy);
    report.push(diff_check(tag("left_action.0"), &ax, &bx));
    report.push(diff_check(tag("left_action.1"), &ay, &by));
    let (ax, ay) = right_action(n, &x, &y, &ps, &pt);
    let (ix, iy) = right_action(n, &x, &y, &s, &t);
    let (bx, by) = right_action(n, &ix, &iy, &s2, &t2);
    report.push(diff_check(tag("right_action.0"), &ax, &bx));
    report.push(diff_check(tag("right_action.1"), &ay, &by));

    // group law
    let bv = vars(&["a", "b", "c", "d", "e", "f"]);
    let q = |i| Polynomial::var(&bv, i);
    let (ab0, ab1) = borel_mul(&q(0), &q(1), &q(2), &q(3));
    let (l0, l1) = borel_mul(&ab0, &ab1, &q(4), &q(5));
    let (cd0, cd1) = borel_mul(&q(2), &q(3), &q(4), &q(5));
    let (r0, r1) = borel_mul(&q(0), &q(1), &cd0, &cd1);
    report.push(diff_check("associative.0".into(), &l0, &r0));
    report.push(diff_check("associative.1".into(), &l1, &r1));
    let (e0, e1) = borel_mul(&Polynomial::zero(&bv), &Polynomial::one(&bv), &q(2), &q(3));
    report.push(diff_check("identity.0".into(), &e0, &q(2)));
    report.push(diff_check("identity.1".into(), &e1, &q(3)));

    // chart functions agree under the transition from the first chart
    let tv = vars(&["t", "u", "v"]);
    let (t, u, v) = (Localized::var(&tv, 0), Localized::var(&tv, 1), Localized::var(&tv, 2));
    let image = transition(n, 1, &t, &u, &v)?;
    let (q0, q1) = chart_functions(n);
    let names: Vec<String> = ["f0".to_string(), "f1".to_string()]
        .into_iter()
        .chain((0..=n + 1).map(|i| format!("g{i}")))
        .chain(std::iter::once("h".to_string()))
        .collect();
    for ((name, f0), f1) in names.iter().zip(&q0).zip(&q1) {
        let moved = Localized::substitute(f1, &image)?;
        let want = Localized::from_poly(f0.clone());
        let ok = moved == want;
        report.push(Check::of(tag(&format!("chart_function.{name}")), ok, format!("{moved} vs {want}")));
    }
    Ok(report)
}
