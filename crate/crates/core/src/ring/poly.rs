use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{Monomial, PolyRing};
use crate::coeff::Coefficient;

/// Sparse polynomial with terms strictly descending under the ring's
/// ordering and no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<C> {
    ring: Arc<PolyRing>,
    monos: Vec<Monomial>,
    coeffs: Vec<C>,
}

impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.monos == other.monos && self.coeffs == other.coeffs && self.ring == other.ring
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            monos: Vec::new(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: C) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.monos.push(m);
            p.coeffs.push(c);
        }
        p
    }

    /// Sorts and merges arbitrary terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, C)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            match p.monos.last() {
                Some(last) if *last == m => {
                    let merged = p.coeffs.last().expect("paired").add(&c);
                    *p.coeffs.last_mut().expect("paired") = merged;
                }
                _ => {
                    p.monos.push(m);
                    p.coeffs.push(c);
                }
            }
        }
        p.drop_zeros();
        p
    }

    fn drop_zeros(&mut self) {
        if self.coeffs.iter().all(|c| !c.is_zero()) {
            return;
        }
        let mut monos = Vec::with_capacity(self.monos.len());
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (m, c) in self.monos.drain(..).zip(self.coeffs.drain(..)) {
            if !c.is_zero() {
                monos.push(m);
                coeffs.push(c);
            }
        }
        self.monos = monos;
        self.coeffs = coeffs;
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.monos.iter().zip(&self.coeffs)
    }

    /// Leading monomial. Panics on the zero polynomial.
    pub fn lm(&self) -> &Monomial {
        self.monos.first().expect("zero polynomial has no leading monomial")
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lc(&self) -> &C {
        self.coeffs.first().expect("zero polynomial has no leading coefficient")
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.monos.first()
    }

    /// Maximal total degree over all terms; 0 for the zero polynomial.
    pub fn deg(&self) -> u32 {
        self.monos.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// `deg(f) - deg(LM(f))`.
    pub fn ecart(&self) -> u32 {
        match self.monos.first() {
            Some(lm) => self.deg() - lm.degree(),
            None => 0,
        }
    }

    /// Same monomials with replaced coefficients; zero coefficients are dropped.
    pub fn with_coeffs<D: Coefficient>(&self, coeffs: Vec<D>) -> Polynomial<D> {
        assert_eq!(coeffs.len(), self.monos.len());
        let mut p = Polynomial {
            ring: self.ring.clone(),
            monos: self.monos.clone(),
            coeffs,
        };
        p.drop_zeros();
        p
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        self.with_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map_coeffs<D: Coefficient, E>(
        &self,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<Polynomial<D>, E> {
        let coeffs: Result<Vec<D>, E> = self.coeffs.iter().map(f).collect();
        Ok(self.with_coeffs(coeffs?))
    }

    /// Moves the polynomial into another ring with the same variables.
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Self::from_terms(ring, self.monos.iter().cloned().zip(self.coeffs.iter().cloned()).collect())
    }

    fn merge(&self, rhs: &Self, negate: bool) -> Self {
        let order = self.ring.order();
        let mut out = Self::zero(&self.ring);
        out.monos.reserve(self.len() + rhs.len());
        out.coeffs.reserve(self.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < rhs.len() {
            match order.compare(&self.monos[i], &rhs.monos[j]) {
                Ordering::Greater => {
                    out.monos.push(self.monos[i]);
                    out.coeffs.push(self.coeffs[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.monos.push(rhs.monos[j]);
                    out.coeffs.push(if negate { rhs.coeffs[j].neg() } else { rhs.coeffs[j].clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        self.coeffs[i].sub(&rhs.coeffs[j])
                    } else {
                        self.coeffs[i].add(&rhs.coeffs[j])
                    };
                    if !c.is_zero() {
                        out.monos.push(self.monos[i]);
                        out.coeffs.push(c);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.monos.extend_from_slice(&self.monos[i..]);
        out.coeffs.extend_from_slice(&self.coeffs[i..]);
        out.monos.extend_from_slice(&rhs.monos[j..]);
        for c in &rhs.coeffs[j..] {
            out.coeffs.push(if negate { c.neg() } else { c.clone() });
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = self.clone();
        if !c.is_one() {
            for x in out.coeffs.iter_mut() {
                *x = x.mul(c);
            }
            out.drop_zeros();
        }
        out
    }

    /// `t * self` for the term `t = c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        let mut out = self.scale(c);
        for x in out.monos.iter_mut() {
            *x = x.mul(m);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.len() * rhs.len());
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                terms.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let one = match self.coeffs.first() {
            Some(c) => Self::constant(&self.ring, c.one_like()),
            None => return if e == 0 { panic!("0^0") } else { self.clone() },
        };
        let mut base = self.clone();
        let mut acc = one;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Computes `a*self - b*shift*g`, keeping only monomials accepted by
    /// `keep`. `keep` must be closed downwards under the ordering (if it
    /// rejects `m` it rejects everything smaller), which lets the merge stop
    /// at the first rejected monomial.
    pub fn sub_scaled_shifted(
        &self,
        a: &C,
        b: &C,
        shift: &Monomial,
        g: &Self,
        keep: &impl Fn(&Monomial) -> bool,
    ) -> Self {
        let order = self.ring.order();
        let scale_self = !a.is_one();
        let mut out = Self::zero(&self.ring);
        out.monos.reserve(self.len() + g.len());
        out.coeffs.reserve(self.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut gm = g.monos.first().map(|m| m.mul(shift));
        loop {
            let take = match (self.monos.get(i), gm.as_ref()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.compare(x, y),
            };
            let (m, c) = match take {
                Ordering::Greater => {
                    let m = self.monos[i];
                    let c = if scale_self { self.coeffs[i].mul(a) } else { self.coeffs[i].clone() };
                    i += 1;
                    (m, c)
                }
                Ordering::Less => {
                    let m = gm.expect("present");
                    let c = g.coeffs[j].mul(b).neg();
                    j += 1;
                    gm = g.monos.get(j).map(|x| x.mul(shift));
                    (m, c)
                }
                Ordering::Equal => {
                    let m = self.monos[i];
                    let lhs = if scale_self { self.coeffs[i].mul(a) } else { self.coeffs[i].clone() };
                    let c = lhs.sub(&g.coeffs[j].mul(b));
                    i += 1;
                    j += 1;
                    gm = g.monos.get(j).map(|x| x.mul(shift));
                    (m, c)
                }
            };
            if !keep(&m) {
                break;
            }
            if !c.is_zero() {
                out.monos.push(m);
                out.coeffs.push(c);
            }
        }
        out
    }

    /// Keeps the leading run of terms accepted by a downward-closed predicate.
    pub fn truncated(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        let cut = self.monos.iter().position(|m| !keep(m)).unwrap_or(self.len());
        if cut == self.len() {
            return self.clone();
        }
        Polynomial {
            ring: self.ring.clone(),
            monos: self.monos[..cut].to_vec(),
            coeffs: self.coeffs[..cut].to_vec(),
        }
    }

    /// Removes every term rejected by `keep` (no closure requirement).
    pub fn filtered(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in self.terms() {
            if keep(m) {
                out.monos.push(*m);
                out.coeffs.push(c.clone());
            }
        }
        out
    }

    /// Divides out the content / makes monic, depending on the domain.
    pub fn normalize(&mut self) {
        C::normalize(&mut self.coeffs);
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Self {
        let mut terms = Vec::new();
        for (m, c) in self.terms() {
            let e = m.exponent(index);
            if e > 0 {
                let mut exps: Vec<u32> = m.exponents().iter().map(|&x| x as u32).collect();
                exps[index] -= 1;
                let dm = Monomial::from_exponents(&exps).expect("smaller exponents");
                terms.push((dm, c.mul(&c.int_like(e as i64))));
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    /// Converts every coefficient into the fraction field.
    pub fn to_field(&self) -> Polynomial<C::Field> {
        self.map_coeffs(|c| c.to_field())
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ring.vars();
        for (i, (m, c)) in self.terms().enumerate() {
            let mono = m.display(names);
            let atomic = c.is_atomic();
            let neg = atomic && c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = if neg { c.neg() } else { c.clone() };
            if m.is_one() {
                if atomic {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if atomic {
                write!(f, "{mag}*{mono}")?;
            } else {
                write!(f, "({mag})*{mono}")?;
            }
        }
        Ok(())
    }
}
