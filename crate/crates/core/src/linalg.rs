//! Exact sparse Gaussian elimination, treating polynomials as vectors in
//! the monomial basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Coeff, Monomial, Polynomial};

/// Data carried along with a row and transformed by the same operations.
pub trait Payload: Clone {
    /// `self += c * other`.
    fn add_scaled(&mut self, c: &Coeff, other: &Self);
    fn scale(&mut self, c: &Coeff);
}

impl Payload for () {
    fn add_scaled(&mut self, _: &Coeff, _: &Self) {}
    fn scale(&mut self, _: &Coeff) {}
}

impl Payload for Polynomial {
    fn add_scaled(&mut self, c: &Coeff, other: &Self) {
        let one = Monomial::one(self.vars().len());
        Polynomial::add_scaled(self, c, &one, other);
    }
    fn scale(&mut self, c: &Coeff) {
        *self = Polynomial::scale(self, c);
    }
}

/// Sparse coefficient vector indexed by candidate number.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination(pub BTreeMap<usize, Coeff>);

impl Combination {
    pub fn unit(i: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(i, Coeff::one());
        Combination(m)
    }
}

impl Payload for Combination {
    fn add_scaled(&mut self, c: &Coeff, other: &Self) {
        for (k, v) in &other.0 {
            let e = self.0.entry(*k).or_insert_with(Coeff::zero);
            *e += c * v;
            if e.is_zero() {
                self.0.remove(k);
            }
        }
    }
    fn scale(&mut self, c: &Coeff) {
        for v in self.0.values_mut() {
            *v *= c;
        }
    }
}

#[derive(Clone, Debug)]
struct Row<P> {
    vector: Polynomial,
    payload: P,
}

/// Row echelon form in which every row's pivot is its largest monomial
/// (storage order) with coefficient one. Rows are not back-substituted;
/// [`Echelon::reduce`] still yields a vector free of pivot monomials.
#[derive(Clone, Debug)]
pub struct Echelon<P: Payload = ()> {
    rows: Vec<Row<P>>,
    pivots: BTreeMap<Monomial, usize>,
}

impl<P: Payload> Default for Echelon<P> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<P: Payload> Echelon<P> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` (and its payload) until no pivot monomial remains.
    pub fn reduce(&self, v: &mut Polynomial, payload: &mut P) {
        let mut bound: Option<Monomial> = None;
        loop {
            let hit = v
                .terms_below(bound.as_ref())
                .find_map(|(m, c)| self.pivots.get(m).map(|&r| (m.clone(), c.clone(), r)));
            match hit {
                None => return,
                Some((m, c, r)) => {
                    let row = &self.rows[r];
                    let neg = -c;
                    let one = Monomial::one(m.len());
                    v.add_scaled(&neg, &one, &row.vector);
                    payload.add_scaled(&neg, &row.payload);
                    bound = Some(m);
                }
            }
        }
    }

    /// Inserts `v`. Returns `None` if it was independent of the existing
    /// rows, or `Some(payload)` carrying the reduced payload of the
    /// dependent vector (that payload then describes a relation).
    pub fn insert(&mut self, mut v: Polynomial, mut payload: P) -> Option<P> {
        self.reduce(&mut v, &mut payload);
        let (pivot, lead) = match v.pivot() {
            None => return Some(payload),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        if !lead.is_one() {
            let inv = lead.recip();
            v = v.scale(&inv);
            payload.scale(&inv);
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(Row {
            vector: v,
            payload,
        });
        None
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Polynomial> {
        self.rows.iter().map(|r| &r.vector)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Polynomial, &P)> {
        self.rows.iter().map(|r| (&r.vector, &r.payload))
    }

    /// Whether `v` lies in the row span.
    pub fn spans(&self, v: &Polynomial) -> bool
    where
        P: Default,
    {
        let mut v = v.clone();
        let mut p = P::default();
        self.reduce(&mut v, &mut p);
        v.is_zero()
    }

    /// Fully reduced basis (reduced row echelon form), in storage order of
    /// pivots.
    pub fn reduced_basis(&self) -> Vec<(Polynomial, P)> {
        let mut order: Vec<(&Monomial, usize)> = self.pivots.iter().map(|(m, &r)| (m, r)).collect();
        order.sort();
        let mut done: Echelon<P> = Echelon::new();
        let mut out: Vec<(Polynomial, P)> = Vec::new();
        // ascending pivots: each row only needs the smaller pivots cleared
        for (_, r) in order {
            let mut v = self.rows[r].vector.clone();
            let mut p = self.rows[r].payload.clone();
            done.reduce(&mut v, &mut p);
            let (piv, lead) = {
                let (m, c) = v.pivot().expect("independent rows");
                (m.clone(), c.clone())
            };
            if !lead.is_one() {
                let inv = lead.recip();
                v = v.scale(&inv);
                p.scale(&inv);
            }
            done.pivots.insert(piv, done.rows.len());
            done.rows.push(Row {
                vector: v.clone(),
                payload: p.clone(),
            });
            out.push((v, p));
        }
        out
    }
}

/// Row-reduced basis of the span of `vectors`.
pub fn span_basis<I: IntoIterator<Item = Polynomial>>(vectors: I) -> Vec<Polynomial> {
    let mut e: Echelon<()> = Echelon::new();
    for v in vectors {
        e.insert(v, ());
    }
    e.reduced_basis().into_iter().map(|(v, _)| v).collect()
}

/// Expresses `target` as a combination of `vectors`, if possible.
pub fn solve(vectors: &[Polynomial], target: &Polynomial) -> Option<Vec<Coeff>> {
    let mut e: Echelon<Combination> = Echelon::new();
    for (i, v) in vectors.iter().enumerate() {
        e.insert(v.clone(), Combination::unit(i));
    }
    let mut t = target.clone();
    let mut comb = Combination::default();
    e.reduce(&mut t, &mut comb);
    if !t.is_zero() {
        return None;
    }
    // target - sum(comb_i * vectors_i) reduced to zero, so target = -comb
    let mut out = vec![Coeff::zero(); vectors.len()];
    for (i, c) in comb.0 {
        out[i] = -c;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat, VarSet};

    fn r() -> VarSet {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &r()).unwrap()
    }

    #[test]
    fn rank_of_dependent_family() {
        let basis = span_basis(vec![p("x + y"), p("y + z"), p("x - z"), p("x^2")]);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn dependency_payload_is_a_relation() {
        let mut e: Echelon<Combination> = Echelon::new();
        assert!(e.insert(p("x + y"), Combination::unit(0)).is_none());
        assert!(e.insert(p("y + z"), Combination::unit(1)).is_none());
        let rel = e.insert(p("x - z"), Combination::unit(2)).unwrap();
        // (x - z) - (x + y) + (y + z) = 0
        let mut expected = BTreeMap::new();
        expected.insert(0, rat(-1));
        expected.insert(1, rat(1));
        expected.insert(2, rat(1));
        assert_eq!(rel.0, expected);
    }

    #[test]
    fn solve_recovers_coefficients() {
        let vs = vec![p("x + y"), p("y + z"), p("x^2")];
        let t = p("2x + 5y + 3z - x^2");
        let c = solve(&vs, &t).unwrap();
        assert_eq!(c, vec![rat(2), rat(3), rat(-1)]);
        assert!(solve(&vs, &p("x")).is_none());
    }

    #[test]
    fn reduced_basis_has_clean_pivots() {
        let basis = span_basis(vec![p("x + y + z"), p("y + z"), p("z")]);
        let mut sorted: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
        sorted.sort();
        assert_eq!(sorted, vec!["x", "y", "z"]);
    }
}
