use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarSet};

use super::Ideal;

pub fn monomial_ideal(vars: &VarSet, monos: impl IntoIterator<Item = Monomial>) -> Ideal {
    let gens = monos.into_iter().map(|m| Polynomial::monomial(vars, m)).collect();
    Ideal::new(vars, gens).expect("same ring")
}

/// `⟨x, y, ...⟩^k`, generated by all monomials of degree `k`.
pub fn maximal_ideal_power(vars: &VarSet, k: u32) -> Ideal {
    let n = vars.len();
    let monos = crate::poly::monomials_up_to(n, k)
        .into_iter()
        .filter(|m| m.degree() == k);
    monomial_ideal(vars, monos)
}

/// The ideal spanned by `x^a y^b` with `p a + q b >= (p + q) nu` in the
/// two-variable ring `vars`, given by its minimal monomials.
pub fn weighted_monomial_ideal(vars: &VarSet, p: u32, q: u32, nu: u32) -> Result<Ideal> {
    if vars.len() != 2 {
        return Err(Error::InvalidInput("weighted monomial ideals live in two variables".into()));
    }
    if p == 0 || q == 0 {
        return Err(Error::InvalidInput("weights must be positive".into()));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidInput(format!("gcd({p}, {q}) != 1")));
    }
    let target = (p as u64 + q as u64) * nu as u64;
    let alpha_min = |beta: u64| -> u64 {
        let rest = target.saturating_sub(q as u64 * beta);
        rest.div_ceil(p as u64)
    };
    let beta_max = target.div_ceil(q as u64);
    let mut monos = Vec::new();
    let mut prev: Option<u64> = None;
    for beta in 0..=beta_max {
        let a = alpha_min(beta);
        if prev.is_none_or(|pa| a < pa) {
            monos.push(Monomial::new(vec![a as u32, beta as u32]));
        }
        prev = Some(a);
        if a == 0 {
            break;
        }
    }
    Ok(monomial_ideal(vars, monos))
}
