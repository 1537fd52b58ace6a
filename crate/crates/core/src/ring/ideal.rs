use std::sync::Arc;

use super::{PolyRing, Polynomial};
use crate::coeff::{DomainSpec, Scalar};

/// A finite generator set over a fixed domain and ring. Zero generators are
/// removed on construction.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    domain: DomainSpec,
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial<Scalar>>,
}

impl IdealPresentation {
    pub fn new(domain: DomainSpec, ring: Arc<PolyRing>, generators: Vec<Polynomial<Scalar>>) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .inspect(|g| assert!(**g.ring() == *ring, "generator from a different ring"))
            .collect();
        IdealPresentation {
            domain,
            ring,
            generators,
        }
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<Scalar>] {
        &self.generators
    }

    /// Same ideal with the generators listed in another order.
    pub fn with_generators(&self, generators: Vec<Polynomial<Scalar>>) -> Self {
        Self::new(self.domain.clone(), self.ring.clone(), generators)
    }
}

/// `<dF/dx_1, ..., dF/dx_n>`, plus `F` itself when `include_f` is set.
pub fn jacobian_ideal(f: &Polynomial<Scalar>, domain: &DomainSpec, include_f: bool) -> IdealPresentation {
    assert!(!f.is_zero(), "jacobian of the zero polynomial");
    let ring = f.ring().clone();
    let mut gens: Vec<Polynomial<Scalar>> = (0..ring.nvars()).map(|i| f.derivative(i)).collect();
    if include_f {
        gens.push(f.clone());
    }
    IdealPresentation::new(domain.clone(), ring, gens)
}
