//! Finitely generated subalgebras with a derivation: truncated spans,
//! filtration subspaces and the ideals `m_nu = D^nu(B_{<= nu})`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::derivation::{Derivation, Grading, Homogeneity, Nilpotency};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, PresentedRing};
use crate::linalg::{Combination, Echelon};
use crate::poly::{monomials_up_to, Coeff, Monomial, Polynomial, VarSet};
use crate::sequence::IdealSequence;

/// Bounds for the truncated computations: word length `L`, ambient degree
/// `d`, and the degree `d_out` up to which ideal generators are kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TruncationParams {
    pub max_len: u32,
    pub max_degree: u32,
    pub out_degree: u32,
}

impl TruncationParams {
    pub fn new(max_len: u32, max_degree: u32, out_degree: u32) -> Result<Self> {
        if max_len == 0 || max_degree == 0 || out_degree == 0 {
            return Err(Error::InvalidInput("truncation parameters must be positive".into()));
        }
        Ok(TruncationParams {
            max_len,
            max_degree,
            out_degree,
        })
    }

    /// `d_out = d`.
    pub fn uniform(max_len: u32, max_degree: u32) -> Result<Self> {
        Self::new(max_len, max_degree, max_degree)
    }

    /// Multiplies every bound by `factor`, rounding up.
    pub fn scaled(&self, factor: f64) -> Self {
        let s = |x: u32| ((x as f64 * factor).ceil() as u32).max(1);
        TruncationParams {
            max_len: s(self.max_len),
            max_degree: s(self.max_degree),
            out_degree: s(self.out_degree),
        }
    }
}

impl fmt::Display for TruncationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L={} d={} d_out={}", self.max_len, self.max_degree, self.out_degree)
    }
}

/// A spanning element `base * word` of a truncated span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// Monomial in the base variables (ambient exponent vector).
    pub base: Monomial,
    /// Generator indices, with repetition, ascending.
    pub word: Vec<usize>,
    pub value: Polynomial,
}

/// An exact linear combination of candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub terms: Vec<(Coeff, Candidate)>,
}

impl Witness {
    pub fn expand(&self, vars: &VarSet) -> Polynomial {
        let mut acc = Polynomial::zero(vars);
        for (c, cand) in &self.terms {
            acc = &acc + &cand.value.scale(c);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(Witness),
    /// Not in the truncated span; this is not a proof of non-membership.
    NotFoundWithinBounds,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// An ideal computed at a recorded truncation. It is contained in the true
/// `m_nu`; equality is only certified up to the truncation.
#[derive(Clone, Debug)]
pub struct TruncatedIdeal {
    pub nu: u32,
    pub params: TruncationParams,
    pub ideal: Ideal,
    /// Number of independent elements `D^nu(v)` found before simplification.
    pub raw_generators: usize,
}

#[derive(Clone, Debug)]
pub struct FilteredSubalgebra {
    derivation: Derivation,
    base: VarSet,
    base_idx: Vec<usize>,
    generators: Vec<Polynomial>,
    degrees: Vec<u32>,
    grading: Option<Grading>,
}

impl FilteredSubalgebra {
    /// `base_names` are the derivation-invariant variables generating the
    /// base ring. Zero generators are dropped.
    pub fn new(derivation: Derivation, base_names: &[&str], generators: Vec<Polynomial>) -> Result<Self> {
        let ring = derivation.ring();
        let mut base_idx = Vec::new();
        for name in base_names {
            let i = ring.vars().index(name)?;
            if !derivation.image(i).is_zero() {
                return Err(Error::InvalidInput(format!("base variable `{name}` is not invariant")));
            }
            base_idx.push(i);
        }
        let base = VarSet::new(base_names.iter().copied())?;
        let mut gens = Vec::new();
        let mut degrees = Vec::new();
        for g in generators {
            ring.check_member(&g)?;
            let g = ring.normal_form(&g);
            if g.is_zero() {
                continue;
            }
            let bound = derivation.default_bound(&g);
            if derivation.nilpotency_degree(&g, Some(bound))? == Nilpotency::Unbounded {
                return Err(Error::Unbounded(bound));
            }
            degrees.push(g.total_degree().unwrap_or(0));
            gens.push(g);
        }
        Ok(FilteredSubalgebra {
            derivation,
            base,
            base_idx,
            generators: gens,
            degrees,
            grading: None,
        })
    }

    /// Attaches a grading for which the relations and the derivation are
    /// homogeneous; computations are then split by weight.
    pub fn with_grading(mut self, grading: Grading) -> Result<Self> {
        grading.validate(self.ring())?;
        if self.derivation.homogeneity_degree(&grading) == Homogeneity::NotHomogeneous {
            return Err(Error::InvalidInput("derivation is not homogeneous".into()));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn ring(&self) -> &PresentedRing {
        self.derivation.ring()
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn base_vars(&self) -> &VarSet {
        &self.base
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    fn base_monomials(&self, max_degree: u32) -> Vec<Monomial> {
        let n = self.ring().vars().len();
        monomials_up_to(self.base_idx.len(), max_degree)
            .into_iter()
            .map(|m| {
                let mut exps = vec![0u32; n];
                for (k, &i) in self.base_idx.iter().enumerate() {
                    exps[i] = m.exp(k);
                }
                Monomial::new(exps)
            })
            .collect()
    }

    /// Generator words of length `<= L` and formal degree `<= d`, with their
    /// normal-form values.
    fn words(&self, t: &TruncationParams) -> Vec<(Vec<usize>, u32, Polynomial)> {
        let ring = self.ring();
        let mut out = vec![(Vec::new(), 0u32, Polynomial::one(ring.vars()))];
        let mut frontier = out.clone();
        for _ in 0..t.max_len {
            let mut next = Vec::new();
            for (word, deg, value) in &frontier {
                let start = word.last().copied().unwrap_or(0);
                for g in start..self.generators.len() {
                    let nd = deg + self.degrees[g];
                    if nd > t.max_degree {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(g);
                    next.push((w, nd, ring.mul(value, &self.generators[g])));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// All products `m * w` within the truncation, deduplicated by value and
    /// sorted by (total degree, leading monomial).
    pub fn candidates(&self, t: &TruncationParams) -> Vec<Candidate> {
        let ring = self.ring();
        let words = self.words(t);
        let monos = self.base_monomials(t.max_degree);
        let mut all: Vec<Candidate> = words
            .par_iter()
            .flat_map_iter(|(word, deg, value)| {
                let room = t.max_degree - deg;
                monos
                    .iter()
                    .filter(move |m| m.degree() <= room)
                    .map(move |m| Candidate {
                        base: m.clone(),
                        word: word.clone(),
                        value: ring.normal_form(&value.mul_monomial(m)),
                    })
                    .collect::<Vec<_>>()
            })
            .filter(|c| !c.value.is_zero())
            .collect();
        let order = ring.order().clone();
        all.sort_by(|a, b| {
            let da = a.value.total_degree();
            let db = b.value.total_degree();
            da.cmp(&db).then_with(|| {
                let la = a.value.leading_monomial(&order).unwrap();
                let lb = b.value.leading_monomial(&order).unwrap();
                order.cmp(la, lb)
            })
        });
        let mut seen = HashSet::new();
        all.retain(|c| seen.insert(c.value.clone()));
        all
    }

    /// A basis of the truncated span, sorted by (total degree, leading
    /// monomial).
    pub fn truncated_span(&self, t: &TruncationParams) -> Vec<Polynomial> {
        let mut e: Echelon<()> = Echelon::new();
        for c in self.candidates(t) {
            e.insert(c.value, ());
        }
        let order = self.ring().order().clone();
        let mut basis: Vec<Polynomial> = e.reduced_basis().into_iter().map(|(v, _)| v).collect();
        basis.sort_by(|a, b| {
            a.total_degree().cmp(&b.total_degree()).then_with(|| {
                order.cmp(
                    a.leading_monomial(&order).unwrap(),
                    b.leading_monomial(&order).unwrap(),
                )
            })
        });
        basis
    }

    /// Groups candidate indices by weight when a grading is attached and all
    /// candidates are homogeneous; otherwise a single group.
    fn blocks(&self, cands: &[Candidate]) -> Vec<Vec<usize>> {
        if let Some(g) = &self.grading {
            let weights: Option<Vec<Vec<i64>>> =
                cands.iter().map(|c| g.homogeneous_weight(&c.value)).collect();
            if let Some(weights) = weights {
                let mut groups: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
                for (i, w) in weights.into_iter().enumerate() {
                    groups.entry(w).or_default().push(i);
                }
                return groups.into_values().collect();
            }
        }
        vec![(0..cands.len()).collect()]
    }

    /// A basis of the elements of the truncated span killed by `D^(nu+1)`.
    pub fn filtration_subspace(&self, nu: u32, t: &TruncationParams) -> Vec<Polynomial> {
        let cands = self.candidates(t);
        let blocks = self.blocks(&cands);
        let d = &self.derivation;
        let vectors: Vec<Polynomial> = blocks
            .par_iter()
            .flat_map_iter(|block| {
                let mut e: Echelon<Combination> = Echelon::new();
                let mut kernel = Vec::new();
                for &i in block {
                    let key = d.iterate(&cands[i].value, nu + 1);
                    if let Some(rel) = e.insert(key, Combination::unit(i)) {
                        let mut v = Polynomial::zero(self.ring().vars());
                        for (j, c) in rel.0 {
                            v = &v + &cands[j].value.scale(&c);
                        }
                        kernel.push(v);
                    }
                }
                kernel
            })
            .collect();
        crate::linalg::span_basis(vectors)
    }

    /// The ideal of the base ring generated by `D^nu` of the truncated
    /// filtration subspace of degree `nu`.
    pub fn compute_m_nu(&self, nu: u32, t: &TruncationParams) -> Result<TruncatedIdeal> {
        if nu == 0 {
            return Err(Error::InvalidInput("nu must be positive".into()));
        }
        let cands = self.candidates(t);
        let blocks = self.blocks(&cands);
        let d = &self.derivation;
        let images: Vec<Polynomial> = blocks
            .par_iter()
            .flat_map_iter(|block| {
                let mut e: Echelon<Polynomial> = Echelon::new();
                let mut out = Vec::new();
                for &i in block {
                    let top = d.iterate(&cands[i].value, nu);
                    if top.is_zero() {
                        continue;
                    }
                    let key = d.apply(&top);
                    if key.is_zero() {
                        out.push(top);
                    } else if let Some(payload) = e.insert(key, top) {
                        if !payload.is_zero() {
                            out.push(payload);
                        }
                    }
                }
                out
            })
            .collect();
        let mut gens = Vec::new();
        for p in images {
            let q = p.embed(&self.base).map_err(|_| {
                Error::InvalidInput(format!("`{p}` does not lie in the base ring"))
            })?;
            if q.total_degree().unwrap_or(0) <= t.out_degree {
                gens.push(q);
            }
        }
        let raw = Ideal::from_span(&self.base, gens)?;
        let raw_generators = raw.generators().len();
        let ideal = simplify(&raw);
        Ok(TruncatedIdeal {
            nu,
            params: *t,
            ideal,
            raw_generators,
        })
    }

    /// `m_1, ..., m_{nu_max}` computed in parallel at a truncation chosen per
    /// `nu` by `params`.
    pub fn ideal_sequence<F>(&self, nu_max: u32, params: F) -> Result<IdealSequence>
    where
        F: Fn(u32) -> TruncationParams + Sync,
    {
        let ideals = (1..=nu_max)
            .into_par_iter()
            .map(|nu| self.compute_m_nu(nu, &params(nu)).map(|t| t.ideal))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealSequence::new(&self.base, ideals))
    }

    /// Searches for `f` in the truncated span.
    pub fn subalgebra_contains(&self, f: &Polynomial, t: &TruncationParams) -> Result<Membership> {
        let ring = self.ring();
        ring.check_member(f)?;
        let f = ring.normal_form(f);
        if f.is_zero() {
            return Ok(Membership::Member(Witness { terms: Vec::new() }));
        }
        let cands = self.candidates(t);
        // with a grading, each homogeneous component is matched separately
        let parts: Vec<(Vec<usize>, Polynomial)> = match &self.grading {
            Some(g) => {
                let weights: Option<Vec<Vec<i64>>> =
                    cands.iter().map(|c| g.homogeneous_weight(&c.value)).collect();
                match weights {
                    Some(ws) => g
                        .components(&f)
                        .into_iter()
                        .map(|(w, part)| {
                            let idx = (0..cands.len()).filter(|&i| ws[i] == w).collect();
                            (idx, part)
                        })
                        .collect(),
                    None => vec![((0..cands.len()).collect(), f.clone())],
                }
            }
            None => vec![((0..cands.len()).collect(), f.clone())],
        };
        let mut terms: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (idx, part) in parts {
            let vectors: Vec<Polynomial> = idx.iter().map(|&i| cands[i].value.clone()).collect();
            match crate::linalg::solve(&vectors, &part) {
                None => return Ok(Membership::NotFoundWithinBounds),
                Some(coeffs) => {
                    for (k, c) in coeffs.into_iter().enumerate() {
                        if !c.is_zero() {
                            *terms.entry(idx[k]).or_insert_with(Coeff::zero) += c;
                        }
                    }
                }
            }
        }
        let witness = Witness {
            terms: terms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c, cands[i].clone()))
                .collect(),
        };
        debug_assert_eq!(witness.expand(ring.vars()), f);
        Ok(Membership::Member(witness))
    }
}

/// The same ideal generated by its reduced Gröbner basis.
pub fn simplify(i: &Ideal) -> Ideal {
    Ideal::with_order(i.vars(), i.groebner().polynomials().to_vec(), i.order().clone())
        .expect("same ring")
}
