use crate::derivation::{Derivation, Grading};
use crate::filtered::FilteredSubalgebra;
use crate::ideal::PresentedRing;
use crate::poly::{Polynomial, VarSet};

/// `Q[x,y,u,v]/(xv - yu - 1)` with the derivation `u -> x`, `v -> y`.
#[derive(Clone, Debug)]
pub struct Sl2Ring {
    ring: PresentedRing,
    derivation: Derivation,
}

impl Default for Sl2Ring {
    fn default() -> Self {
        Self::new()
    }
}

impl Sl2Ring {
    pub fn new() -> Self {
        let ring = PresentedRing::parse(&["x", "y", "u", "v"], &["x*v - y*u - 1"]).expect("static ring");
        let derivation = Derivation::from_strings(&ring, &[("u", "x"), ("v", "y")]).expect("respects relation");
        Sl2Ring { ring, derivation }
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn vars(&self) -> &VarSet {
        self.ring.vars()
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn element(&self, s: &str) -> Polynomial {
        self.ring.element(s).expect("valid element")
    }

    /// The Z^2-grading `x:(1,0) y:(0,1) u:(0,-1) v:(-1,0)`. The relation is
    /// homogeneous and the derivation has degree `(1,1)`.
    pub fn bigrading() -> Grading {
        Grading::multi(vec![vec![1, 0], vec![0, 1], vec![0, -1], vec![-1, 0]]).expect("uniform length")
    }

    /// The Z-grading `(p, q, -q, -p)`.
    pub fn weight_grading(p: i64, q: i64) -> Grading {
        Grading::new(vec![p, q, -q, -p])
    }

    /// The whole ring as a subalgebra over `Q[x,y]`, generated by `u, v`.
    pub fn subalgebra(&self) -> FilteredSubalgebra {
        self.subalgebra_with(vec![self.element("u"), self.element("v")])
    }

    /// The subalgebra over `Q[x,y]` generated by `gens`, split by the bigrading.
    pub fn subalgebra_with(&self, gens: Vec<Polynomial>) -> FilteredSubalgebra {
        FilteredSubalgebra::new(self.derivation.clone(), &["x", "y"], gens)
            .and_then(|b| b.with_grading(Self::bigrading()))
            .expect("generators lie in the ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::Homogeneity;

    #[test]
    fn derivation_kills_relation() {
        let s = Sl2Ring::new();
        let rel = s.ring().relations().generators()[0].clone();
        assert!(s.ring().is_zero(&s.derivation().apply_raw(&rel)));
    }

    #[test]
    fn bigrading_degree() {
        let s = Sl2Ring::new();
        assert_eq!(s.derivation().homogeneity_degree(&Sl2Ring::bigrading()), Homogeneity::Degree(vec![1, 1]));
        assert_eq!(s.derivation().homogeneity_degree(&Sl2Ring::weight_grading(3, 2)).scalar(), Some(5));
    }

    #[test]
    fn normal_form_of_relation_terms() {
        let s = Sl2Ring::new();
        assert_eq!(s.element("x*v - y*u"), s.element("1"));
        assert!(s.element("x^2*(u*y + 1 - x*v)").is_zero());
    }
}
