//! Staircases of leading ideals, highest corners and truncation bounds.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::ring::{Monomial, OrderSpec, Polynomial};
use crate::corpus::monomials_of_degree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CornerError {
    #[error("the leading ideal is not zero-dimensional")]
    NotFinite,
}

/// Minimal monomial generators of a leading ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    gens: Vec<Monomial>,
    nvars: usize,
    order: OrderSpec,
}

impl Staircase {
    /// Minimalizes `monos`; the result is sorted descending under `order`.
    pub fn new(monos: &[Monomial], nvars: usize, order: &OrderSpec) -> Staircase {
        let mut sorted: Vec<Monomial> = monos.to_vec();
        // Lower total degree first, so divisors are seen before multiples.
        sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.compare(b, a)));
        sorted.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for m in sorted {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_by(|a, b| order.compare(b, a));
        Staircase {
            gens,
            nvars,
            order: order.clone(),
        }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn is_whole_ring(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    /// Whether `m` lies in the monomial ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Exponent of the smallest pure power of `x_i` in the ideal.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.degree() == g.exponent(i))
            .map(|g| g.exponent(i))
            .min()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.is_whole_ring() || (0..self.nvars).all(|i| self.pure_power(i).is_some())
    }

    /// All standard monomials, or `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let mut out = Vec::new();
        if self.is_whole_ring() {
            return Some(out);
        }
        // Depth-first walk of the order ideal; each monomial is reached
        // exactly once by only raising variables at or after the last one.
        let mut stack = vec![(Monomial::one(self.nvars), 0usize)];
        while let Some((m, from)) = stack.pop() {
            out.push(m);
            for i in from..self.nvars {
                let next = m.times_var(i);
                if !self.contains(&next) {
                    stack.push((next, i));
                }
            }
        }
        Some(out)
    }

    /// Number of standard monomials; `None` means infinite.
    pub fn vdim(&self) -> Option<u64> {
        if !self.is_zero_dimensional() {
            return None;
        }
        self.standard_monomials().map(|v| v.len() as u64)
    }

    /// The order-smallest standard monomial among those accepted by `keep`,
    /// where `keep` is closed downwards and accepts only monomials of
    /// ordering degree at most `top` (when given). `None` when no such
    /// monomial exists or the search would be unbounded.
    pub fn lowest_standard(&self, keep: impl Fn(&Monomial) -> bool, top: Option<u64>) -> Option<Monomial> {
        if self.is_whole_ring() {
            return None;
        }
        let top = match (top, self.is_zero_dimensional()) {
            (Some(t), _) => t,
            (None, true) => match &self.order {
                OrderSpec::NegWeightedRevLex(_) => {
                    return self.standard_monomials()?.into_iter().min_by(|a, b| self.order.compare(a, b))
                }
                _ => (0..self.nvars).map(|i| self.pure_power(i).expect("zero-dimensional") as u64 - 1).sum(),
            },
            (None, false) => return None,
        };
        if let OrderSpec::NegWeightedRevLex(_) = self.order {
            let mut best: Option<Monomial> = None;
            let mut stack = vec![(Monomial::one(self.nvars), 0usize)];
            while let Some((m, from)) = stack.pop() {
                if best.is_none_or(|b| self.order.compare(&m, &b) == Ordering::Less) {
                    best = Some(m);
                }
                for i in from..self.nvars {
                    let next = m.times_var(i);
                    if self.order.degree(&next) <= top && keep(&next) && !self.contains(&next) {
                        stack.push((next, i));
                    }
                }
            }
            return best.filter(|b| keep(b));
        }
        // Degree orderings: the answer sits in the highest degree that has
        // any standard monomial.
        for d in (0..=top).rev() {
            let best = monomials_of_degree(self.nvars, d as u32)
                .into_iter()
                .filter(|m| keep(m) && !self.contains(m))
                .min_by(|a, b| self.order.compare(a, b));
            if best.is_some() {
                return best;
            }
        }
        None
    }

    /// The order-smallest standard monomial.
    pub fn highest_corner(&self) -> Result<HighestCorner, CornerError> {
        let std = self.standard_monomials().ok_or(CornerError::NotFinite)?;
        Ok(std
            .into_iter()
            .min_by(|a, b| self.order.compare(a, b))
            .map(HighestCorner::Monomial)
            .unwrap_or(HighestCorner::WholeRing))
    }

    /// Cutoff justified by the highest corner.
    ///
    /// `ds` drops monomials below `x_n * HC` (with `x_n` the order-smallest
    /// variable). `Ds` drops degree above `deg(HC) + 1`. `ws` drops weighted
    /// degree above the largest weighted degree of a standard monomial plus
    /// the largest weight.
    pub fn truncation_bound(&self, hc: &HighestCorner) -> TruncationBound {
        let m = match hc {
            HighestCorner::WholeRing => return TruncationBound::NoBound,
            HighestCorner::Monomial(m) => m,
        };
        match &self.order {
            OrderSpec::NegDegRevLex => {
                let n = self.order.smallest_var(self.nvars);
                TruncationBound::MonomialBound(m.times_var(n))
            }
            OrderSpec::NegDegLex => TruncationBound::DegreeBound(m.degree() as u64 + 1),
            OrderSpec::NegWeightedRevLex(w) => {
                let top = self
                    .standard_monomials()
                    .expect("corner implies finite")
                    .iter()
                    .map(|s| self.order.degree(s))
                    .max()
                    .unwrap_or(0);
                let wmax = *w.iter().max().expect("nonempty weights") as u64;
                TruncationBound::DegreeBound(top + wmax)
            }
        }
    }

    /// Displays the generators with variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Staircase, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, g) in self.0.gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", g.display(self.1))?;
                }
                Ok(())
            }
        }
        D(self, names)
    }
}

/// Staircase of the leading monomials of `basis`.
pub fn leading_ideal<C: Coefficient>(basis: &[Polynomial<C>]) -> Staircase {
    let ring = basis.first().expect("nonempty basis").ring();
    let lms: Vec<Monomial> = basis.iter().filter(|g| !g.is_zero()).map(|g| *g.lm()).collect();
    Staircase::new(&lms, ring.nvars(), ring.order())
}

/// Smallest monomial outside a zero-dimensional leading ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HighestCorner {
    Monomial(Monomial),
    /// The ideal contains a unit; no corner exists.
    WholeRing,
}

impl HighestCorner {
    pub fn monomial(&self) -> Option<&Monomial> {
        match self {
            HighestCorner::Monomial(m) => Some(m),
            HighestCorner::WholeRing => None,
        }
    }

    pub fn display(&self, names: &[String]) -> String {
        match self {
            HighestCorner::Monomial(m) => m.display(names).to_string(),
            HighestCorner::WholeRing => "none".to_string(),
        }
    }
}

/// Which terms survive truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncationBound {
    NoBound,
    /// Keep terms whose (weighted, for `ws`) degree is at most `d`.
    DegreeBound(u64),
    /// Keep terms not strictly smaller than the monomial.
    MonomialBound(Monomial),
}

impl TruncationBound {
    pub fn keeps(&self, m: &Monomial, order: &OrderSpec) -> bool {
        match self {
            TruncationBound::NoBound => true,
            TruncationBound::DegreeBound(d) => order.degree(m) <= *d,
            TruncationBound::MonomialBound(n) => order.compare(m, n) != Ordering::Less,
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, TruncationBound::NoBound)
    }

    pub fn display(&self, names: &[String]) -> String {
        match self {
            TruncationBound::NoBound => "none".to_string(),
            TruncationBound::DegreeBound(d) => format!("degree <= {d}"),
            TruncationBound::MonomialBound(m) => format!("monomials >= {}", m.display(names)),
        }
    }
}
