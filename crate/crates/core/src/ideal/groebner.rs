//! Buchberger completion and multivariate division.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Zero};

use crate::poly::{Coeff, Monomial, MonomialOrder, OrderKind, Polynomial, VarSet};

/// Sort key whose plain lexicographic comparison agrees with a monomial order.
pub(crate) type Key = Box<[i64]>;

pub(crate) fn order_key(order: &MonomialOrder, m: &Monomial) -> Key {
    let n = m.len();
    let pr: Vec<usize> = if order.priority().is_empty() {
        (0..n).collect()
    } else {
        order.priority().to_vec()
    };
    let e = |i: usize| m.exp(pr[i]) as i64;
    let mut k = Vec::with_capacity(n + 2);
    match order.kind() {
        OrderKind::Lex => k.extend((0..n).map(e)),
        OrderKind::DegLex => {
            k.push(m.degree() as i64);
            k.extend((0..n).map(e));
        }
        OrderKind::DegRevLex => {
            k.push(m.degree() as i64);
            k.extend((0..n).rev().map(|i| -e(i)));
        }
        OrderKind::Elimination { block } => {
            let block = block.min(n);
            k.push((0..block).map(e).sum());
            k.extend((0..block).rev().map(|i| -e(i)));
            k.push((block..n).map(e).sum());
            k.extend((block..n).rev().map(|i| -e(i)));
        }
    }
    k.into_boxed_slice()
}

/// A polynomial with its terms sorted descending in a fixed order.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    pub terms: Vec<(Key, Monomial, Coeff)>,
}

impl Sorted {
    pub fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p
            .terms()
            .map(|(m, c)| (order_key(order, m), m.clone(), c.clone()))
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Sorted { terms }
    }

    pub fn to_poly(&self, vars: &VarSet) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        for (_, m, c) in &self.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn lead(&self) -> &Monomial {
        &self.terms[0].1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, _, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.recip();
                for t in &mut self.terms {
                    t.2 *= &inv;
                }
            }
        }
    }
}

/// Working dividend keyed by order key so the largest term is cheap to find.
struct Dividend {
    terms: BTreeMap<Key, (Monomial, Coeff)>,
}

impl Dividend {
    fn new(s: Sorted) -> Self {
        Dividend {
            terms: s.terms.into_iter().map(|(k, m, c)| (k, (m, c))).collect(),
        }
    }

    fn sub_multiple(&mut self, c: &Coeff, m: &Monomial, g: &Sorted, order: &MonomialOrder) {
        for (_, gm, gc) in &g.terms {
            let prod = m.mul(gm);
            let key = order_key(order, &prod);
            let delta = c * gc;
            match self.terms.get_mut(&key) {
                Some(entry) => {
                    entry.1 -= delta;
                    if entry.1.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, (prod, -delta));
                }
            }
        }
    }
}

/// Fully reduces `f` modulo `basis` (all monic). Returns the remainder.
pub(crate) fn reduce_full(f: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut div = Dividend::new(f);
    let mut rem = Vec::new();
    while let Some((key, (m, c))) = div.terms.pop_last() {
        match basis.iter().find(|g| g.lead().divides(&m)) {
            Some(g) => {
                let q = g.lead().quotient_of(&m).unwrap();
                // g is monic; re-insert the popped term so it cancels
                div.terms.insert(key, (m, c.clone()));
                div.sub_multiple(&c, &q, g, order);
            }
            None => rem.push((key, m, c)),
        }
    }
    Sorted { terms: rem }
}

fn spoly(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let l = f.lead().lcm(g.lead());
    let a = f.lead().quotient_of(&l).unwrap();
    let b = g.lead().quotient_of(&l).unwrap();
    let mut div = Dividend {
        terms: BTreeMap::new(),
    };
    div.sub_multiple(&-Coeff::one(), &a, f, order);
    div.sub_multiple(&Coeff::one(), &b, g, order);
    let mut terms: Vec<_> = div.terms.into_iter().map(|(k, (m, c))| (k, m, c)).collect();
    terms.reverse();
    Sorted { terms }
}

/// Computes the reduced Gröbner basis of `gens`; the result is monic and
/// sorted ascending by leading monomial.
pub(crate) fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Sorted> {
    let mut basis: Vec<Sorted> = Vec::new();
    let mut input: Vec<Sorted> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, order))
        .collect();
    input.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));

    // pairs keyed by (lcm key, i, j) so the smallest lcm is processed first
    let mut queue: BTreeSet<(Key, usize, usize)> = BTreeSet::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut active: Vec<bool> = Vec::new();

    let add = |mut h: Sorted,
                   basis: &mut Vec<Sorted>,
                   active: &mut Vec<bool>,
                   queue: &mut BTreeSet<(Key, usize, usize)>| {
        h.make_monic();
        let idx = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if !active[i] {
                continue;
            }
            let l = g.lead().lcm(h.lead());
            queue.insert((order_key(order, &l), i, idx));
        }
        for (i, g) in basis.iter().enumerate() {
            if active[i] && h.lead().divides(g.lead()) {
                active[i] = false;
            }
        }
        basis.push(h);
        active.push(true);
    };

    for g in input {
        let r = reduce_full(g, &basis, order);
        if !r.is_zero() {
            add(r, &mut basis, &mut active, &mut queue);
        }
    }

    while let Some((_, i, j)) = queue.pop_first() {
        done.insert((i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lead().is_coprime(fj.lead()) {
            continue;
        }
        let l = fi.lead().lcm(fj.lead());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(fi, fj, order);
        let r = reduce_full(s, &basis, order);
        if !r.is_zero() {
            add(r, &mut basis, &mut active, &mut queue);
        }
    }

    // minimalize, then interreduce
    let mut minimal: Vec<Sorted> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i
                && h.lead().divides(g.lead())
                && (h.lead() != g.lead() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let head = minimal[i].terms[0].clone();
        let tail = Sorted {
            terms: minimal[i].terms[1..].to_vec(),
        };
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce_full(tail, &others, order);
        r.terms.insert(0, head);
        reduced.push(r);
    }
    reduced
}
