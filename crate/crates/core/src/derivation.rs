//! Derivations of presented rings and integer gradings.

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::PresentedRing;
use crate::poly::{parse_polynomial, rat, Monomial, Polynomial};

/// A derivation given by the images of the ring variables.
#[derive(Clone, Debug)]
pub struct Derivation {
    ring: PresentedRing,
    images: Vec<Polynomial>,
}

/// Filtration degree of an element: the least `nu` with `D^(nu+1) f = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Nilpotency {
    Finite(u32),
    Unbounded,
}

impl Derivation {
    /// Fails with [`Error::RelationNotRespected`] if some relation is not
    /// mapped into the relation ideal.
    pub fn new(ring: &PresentedRing, images: Vec<Polynomial>) -> Result<Self> {
        let vars = ring.vars();
        if images.len() != vars.len() {
            return Err(Error::MissingImage(
                vars.names().get(images.len()).cloned().unwrap_or_default(),
            ));
        }
        for img in &images {
            ring.check_member(img)?;
        }
        let d = Derivation {
            ring: ring.clone(),
            images: images.iter().map(|p| ring.normal_form(p)).collect(),
        };
        for rel in ring.relations().generators() {
            let residue = ring.normal_form(&d.apply_raw(rel));
            if !residue.is_zero() {
                return Err(Error::RelationNotRespected {
                    relation: rel.to_string(),
                    residue: residue.to_string(),
                });
            }
        }
        Ok(d)
    }

    /// Builds a derivation from `(variable, image)` strings; unnamed
    /// variables map to zero.
    pub fn from_strings(ring: &PresentedRing, images: &[(&str, &str)]) -> Result<Self> {
        let vars = ring.vars();
        let mut out = vec![Polynomial::zero(vars); vars.len()];
        for (name, img) in images {
            out[vars.index(name)?] = parse_polynomial(img, vars)?;
        }
        Self::new(ring, out)
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, var: usize) -> &Polynomial {
        &self.images[var]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// Leibniz extension without reduction.
    pub fn apply_raw(&self, f: &Polynomial) -> Polynomial {
        let vars = f.vars();
        let mut out = Polynomial::zero(vars);
        for (m, c) in f.terms() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 || self.images[i].is_zero() {
                    continue;
                }
                let mut exps = m.exps().to_vec();
                exps[i] -= 1;
                let coeff = c * rat(e as i64);
                out.add_scaled(&coeff, &Monomial::new(exps), &self.images[i]);
            }
        }
        out
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.ring.normal_form(&self.apply_raw(f))
    }

    /// `D^k f` in normal form.
    pub fn iterate(&self, f: &Polynomial, k: u32) -> Polynomial {
        let mut g = self.ring.normal_form(f);
        for _ in 0..k {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g);
        }
        g
    }

    pub fn default_bound(&self, f: &Polynomial) -> usize {
        2 * self.ring.normal_form(f).total_degree().unwrap_or(0) as usize + 4
    }

    pub fn nilpotency_degree(&self, f: &Polynomial, bound: Option<usize>) -> Result<Nilpotency> {
        let mut g = self.ring.normal_form(f);
        if g.is_zero() {
            return Err(Error::ZeroElement);
        }
        let bound = bound.unwrap_or_else(|| self.default_bound(&g));
        for k in 0..=bound {
            let next = self.apply(&g);
            if next.is_zero() {
                return Ok(Nilpotency::Finite(k as u32));
            }
            g = next;
        }
        Ok(Nilpotency::Unbounded)
    }

    /// `(nu, D^nu f / nu!)` for the filtration degree `nu` of `f`.
    pub fn graded_leading_term(&self, f: &Polynomial) -> Result<(u32, Polynomial)> {
        let bound = self.default_bound(f);
        match self.nilpotency_degree(f, Some(bound))? {
            Nilpotency::Unbounded => Err(Error::Unbounded(bound)),
            Nilpotency::Finite(nu) => {
                let top = self.iterate(f, nu);
                let mut fact = crate::poly::Coeff::one();
                for k in 1..=nu {
                    fact *= rat(k as i64);
                }
                Ok((nu, top.scale(&fact.recip())))
            }
        }
    }

    /// The shift `d` with `weight(D x_i) = weight(x_i) + d` for every
    /// variable whose image is nonzero.
    pub fn homogeneity_degree(&self, grading: &Grading) -> Homogeneity {
        let mut found: Option<Vec<i64>> = None;
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let w = match grading.homogeneous_weight(img) {
                Some(w) => w,
                None => return Homogeneity::NotHomogeneous,
            };
            let shift: Vec<i64> = w
                .iter()
                .zip(grading.var_weight(i))
                .map(|(a, b)| a - b)
                .collect();
            match &found {
                None => found = Some(shift),
                Some(s) if *s == shift => {}
                Some(_) => return Homogeneity::NotHomogeneous,
            }
        }
        match found {
            None => Homogeneity::Trivial,
            Some(s) => Homogeneity::Degree(s),
        }
    }
}

/// Result of [`Derivation::homogeneity_degree`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Homogeneity {
    Degree(Vec<i64>),
    /// The zero derivation is homogeneous of every degree.
    Trivial,
    NotHomogeneous,
}

impl Homogeneity {
    /// The degree of a one-dimensional grading.
    pub fn scalar(&self) -> Option<i64> {
        match self {
            Homogeneity::Degree(d) if d.len() == 1 => Some(d[0]),
            _ => None,
        }
    }
}

/// A grading by `Z^k`: one weight vector per ring variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<Vec<i64>>,
}

impl Grading {
    /// A `Z`-grading.
    pub fn new(weights: Vec<i64>) -> Self {
        Grading {
            weights: weights.into_iter().map(|w| vec![w]).collect(),
        }
    }

    pub fn multi(weights: Vec<Vec<i64>>) -> Result<Self> {
        let k = weights.first().map_or(0, Vec::len);
        if weights.iter().any(|w| w.len() != k) {
            return Err(Error::InvalidInput("weight vectors of different lengths".into()));
        }
        Ok(Grading { weights })
    }

    /// Checks that the grading fits `ring` and all relations are homogeneous.
    pub fn validate(&self, ring: &PresentedRing) -> Result<()> {
        if self.weights.len() != ring.vars().len() {
            return Err(Error::InvalidInput("one weight per variable expected".into()));
        }
        for rel in ring.relations().generators() {
            if self.homogeneous_weight(rel).is_none() {
                return Err(Error::InvalidInput(format!("relation `{rel}` is not homogeneous")));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    pub fn var_weight(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }

    pub fn weight(&self, m: &Monomial) -> Vec<i64> {
        let mut w = vec![0i64; self.dim()];
        for (i, &e) in m.exps().iter().enumerate() {
            for (acc, wi) in w.iter_mut().zip(&self.weights[i]) {
                *acc += wi * e as i64;
            }
        }
        w
    }

    /// The common weight of all terms, or `None` for mixed or zero input.
    pub fn homogeneous_weight(&self, f: &Polynomial) -> Option<Vec<i64>> {
        let mut it = f.monomials().map(|m| self.weight(m));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Splits `f` into homogeneous components, sorted by weight.
    pub fn components(&self, f: &Polynomial) -> Vec<(Vec<i64>, Polynomial)> {
        let mut parts: std::collections::BTreeMap<Vec<i64>, Polynomial> = Default::default();
        for (m, c) in f.terms() {
            parts
                .entry(self.weight(m))
                .or_insert_with(|| Polynomial::zero(f.vars()))
                .add_term(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }
}
