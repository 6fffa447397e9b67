use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, MonomialOrder, Polynomial, VarSet};

use super::Ideal;

/// A polynomial ring modulo a relation ideal. Elements are represented by
/// their normal forms.
#[derive(Clone, Debug)]
pub struct PresentedRing {
    vars: VarSet,
    relations: Arc<Ideal>,
}

impl PresentedRing {
    pub fn new(vars: &VarSet, relations: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let ideal = Ideal::with_order(vars, relations, order)?;
        ideal.groebner();
        Ok(PresentedRing {
            vars: vars.clone(),
            relations: Arc::new(ideal),
        })
    }

    /// A polynomial ring with no relations under degrevlex.
    pub fn polynomial(vars: &VarSet) -> Self {
        Self::new(vars, Vec::new(), MonomialOrder::degrevlex()).expect("no relations")
    }

    /// Convenience constructor from variable names and relation strings.
    pub fn parse(names: &[&str], relations: &[&str]) -> Result<Self> {
        let vars = VarSet::new(names.iter().copied())?;
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(r, &vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&vars, rels, MonomialOrder::degrevlex())
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn order(&self) -> &MonomialOrder {
        self.relations.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.relations.is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.relations.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.relations.contains(f)
    }

    pub fn equal(&self, a: &Polynomial, b: &Polynomial) -> bool {
        self.is_zero(&(a - b))
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.normal_form(&(a * b))
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var_named(&self.vars, name)
    }

    /// Parses and reduces an element.
    pub fn element(&self, s: &str) -> Result<Polynomial> {
        Ok(self.normal_form(&parse_polynomial(s, &self.vars)?))
    }

    pub fn check_member(&self, f: &Polynomial) -> Result<()> {
        if f.vars() != &self.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: f.vars().to_string(),
            });
        }
        Ok(())
    }
}
