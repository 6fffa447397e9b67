//! Monomial orders.
//!
//! An order is a kind plus a variable priority list (highest priority
//! first). The empty priority list means declaration order.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::Serialize;

use super::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
    /// Block order: the first `block` priority variables are compared by
    /// degree then reverse lexicographically, and dominate the rest, which
    /// are compared by degrevlex. Used to eliminate auxiliary variables.
    Elimination { block: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Arc<[usize]>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder {
            kind,
            priority: Arc::from(Vec::new()),
        }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn deglex() -> Self {
        Self::new(OrderKind::DegLex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    /// `priority` lists variable indices from highest to lowest. It must be a
    /// permutation of `0..n` for the ring the order is used on.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        MonomialOrder {
            kind,
            priority: Arc::from(priority),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    fn index(&self, i: usize) -> usize {
        if self.priority.is_empty() {
            i
        } else {
            self.priority[i]
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.exps.len();
        debug_assert_eq!(n, b.exps.len());
        match self.kind {
            OrderKind::Lex => self.lex_range(a, b, 0, n),
            OrderKind::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.lex_range(a, b, 0, n)),
            OrderKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex_range(a, b, 0, n)),
            OrderKind::Elimination { block } => {
                let block = block.min(n);
                self.partial_degree(a, 0, block)
                    .cmp(&self.partial_degree(b, 0, block))
                    .then_with(|| self.revlex_range(a, b, 0, block))
                    .then_with(|| {
                        self.partial_degree(a, block, n)
                            .cmp(&self.partial_degree(b, block, n))
                    })
                    .then_with(|| self.revlex_range(a, b, block, n))
            }
        }
    }

    fn partial_degree(&self, m: &Monomial, lo: usize, hi: usize) -> u64 {
        (lo..hi).map(|i| m.exps[self.index(i)] as u64).sum()
    }

    fn lex_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        for i in lo..hi {
            let v = self.index(i);
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn revlex_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        for i in (lo..hi).rev() {
            let v = self.index(i);
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::degrevlex()
    }
}
