use serde::Serialize;

use super::{Monomial, Polynomial, VarSet};
use crate::error::{Error, Result};

/// The pair (u-exponent, v-exponent) of a term in t, v, u, ordered
/// lexicographically, with `Bottom` below every pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BiDegree {
    Bottom,
    Pair(u32, u32),
}

impl std::fmt::Display for BiDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BiDegree::Bottom => f.write_str("bottom"),
            BiDegree::Pair(k, j) => write!(f, "({k}, {j})"),
        }
    }
}

/// Positions of t, v, u in a variable set; absent names are `None`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TvuIndex {
    pub t: Option<usize>,
    pub v: Option<usize>,
    pub u: Option<usize>,
}

impl TvuIndex {
    pub fn of(vars: &VarSet) -> Self {
        TvuIndex {
            t: vars.index_of("t"),
            v: vars.index_of("v"),
            u: vars.index_of("u"),
        }
    }

    fn get(m: &Monomial, i: Option<usize>) -> u32 {
        i.map_or(0, |i| m.exp(i))
    }

    /// Exponents `(i, j, k)` of t, v, u in `m`.
    pub fn exps(&self, m: &Monomial) -> (u32, u32, u32) {
        (
            Self::get(m, self.t),
            Self::get(m, self.v),
            Self::get(m, self.u),
        )
    }
}

/// Maximal bidegree over the terms of `f`, which may only involve t, v, u.
pub fn bidegree(f: &Polynomial) -> Result<BiDegree> {
    let vars = f.vars();
    let idx = TvuIndex::of(vars);
    for i in f.support_vars() {
        if Some(i) != idx.t && Some(i) != idx.v && Some(i) != idx.u {
            return Err(Error::ExtraneousVariable(vars.name(i).to_string()));
        }
    }
    Ok(f
        .monomials()
        .map(|m| {
            let (_, j, k) = idx.exps(m);
            BiDegree::Pair(k, j)
        })
        .max()
        .unwrap_or(BiDegree::Bottom))
}
