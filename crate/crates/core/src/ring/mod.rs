//! Monomials, local orderings, sparse polynomials and ideal presentations.

mod ideal;
mod monomial;
mod order;
mod parse;
mod poly;

use std::cmp::Ordering;
use std::sync::Arc;

use thiserror::Error;

pub use ideal::{jacobian_ideal, IdealPresentation};
pub use monomial::{Monomial, MonomialDisplay, MAX_EXPONENT, MAX_VARS};
pub use order::OrderSpec;
pub use parse::{parse_polynomial, ParseError};
pub use poly::Polynomial;

use crate::coeff::Coefficient;
use crate::corner::TruncationBound;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("monomial lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ring needs between 1 and {MAX_VARS} variables, got {0}")]
    VariableCount(usize),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("ws weights must match the {0} variables")]
    WeightCount(usize),
    #[error("polynomials belong to different rings")]
    RingMismatch,
}

/// Variables together with a local ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    order: OrderSpec,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, order: OrderSpec) -> Result<Arc<PolyRing>, RingError> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(RingError::VariableCount(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateName(v.clone()));
            }
        }
        if let Some(w) = order.weights() {
            if w.len() != vars.len() {
                return Err(RingError::WeightCount(vars.len()));
            }
        }
        Ok(Arc::new(PolyRing { vars, order }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub fn compare_monomials(a: &Monomial, b: &Monomial, ord: &OrderSpec) -> Result<Ordering, RingError> {
    if a.nvars() != b.nvars() {
        return Err(RingError::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(ord.compare(a, b))
}

/// Drops every term the bound rejects.
pub fn truncate_poly<C: Coefficient>(f: &Polynomial<C>, bound: &TruncationBound) -> Polynomial<C> {
    let order = f.ring().order().clone();
    f.truncated(|m| bound.keeps(m, &order))
}
