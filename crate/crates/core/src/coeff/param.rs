//! Polynomials in the parameters `t_1, ..., t_s` over `Z` or `F_p`.
//!
//! These are the coefficient ring `A = Z[t]` (resp. `F_p[t]`) of the basis
//! engine when the ground field is a rational function field. The gcd is
//! recursive: content and primitive part over the remaining parameters,
//! and a primitive pseudo-remainder sequence in the current one.

use std::fmt;
use std::sync::Arc;

use super::{Coefficient, Fp, RatFunc};

/// Base ring of parameter polynomials: a gcd domain with a distinguished
/// unit normal form.
pub trait GcdBase: Coefficient {
    fn gcd(&self, rhs: &Self) -> Self;
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Unit `u` such that `u * self` is in normal form (positive, resp. one).
    fn unit_normal(&self) -> Self;
    /// Image modulo a prime, for rings where gcds can grow coefficients.
    fn image_mod(&self, _p: u32) -> Option<Fp> {
        None
    }
}

/// Prime used to detect parameter-free gcds cheaply.
const CHECK_PRIME: u32 = 2_147_483_629;

impl GcdBase for Fp {
    fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() && rhs.is_zero() {
            self.zero_like()
        } else {
            self.one_like()
        }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|r| self.mul(&r))
    }
    fn unit_normal(&self) -> Self {
        self.inverse().unwrap_or_else(|| self.one_like())
    }
}

/// Parameter names together with the unit of the base ring.
#[derive(Debug, PartialEq)]
pub struct ParamSpace<B> {
    pub names: Vec<String>,
    pub one: B,
}

impl<B: GcdBase> ParamSpace<B> {
    pub fn new(names: Vec<String>, one: B) -> Arc<Self> {
        Arc::new(ParamSpace { names, one })
    }
}

/// Sparse polynomial in the parameters; terms in descending lex order.
#[derive(Clone)]
pub struct ParamPoly<B> {
    space: Arc<ParamSpace<B>>,
    /// Flattened exponent vectors, `nparams` entries per term.
    exps: Vec<u32>,
    coeffs: Vec<B>,
}

impl<B: GcdBase> PartialEq for ParamPoly<B> {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps && self.coeffs == other.coeffs
    }
}

impl<B: GcdBase> fmt::Debug for ParamPoly<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl<B: GcdBase> ParamPoly<B> {
    pub fn zero(space: &Arc<ParamSpace<B>>) -> Self {
        ParamPoly {
            space: space.clone(),
            exps: Vec::new(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(space: &Arc<ParamSpace<B>>, c: B) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.exps = vec![0; space.names.len()];
            p.coeffs.push(c);
        }
        p
    }

    /// The parameter `t_index`.
    pub fn param(space: &Arc<ParamSpace<B>>, index: usize) -> Self {
        let mut exps = vec![0; space.names.len()];
        exps[index] = 1;
        ParamPoly {
            space: space.clone(),
            exps,
            coeffs: vec![space.one.clone()],
        }
    }

    pub fn space(&self) -> &Arc<ParamSpace<B>> {
        &self.space
    }

    fn nparams(&self) -> usize {
        self.space.names.len()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &B)> {
        let s = self.nparams();
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (&self.exps[i * s..(i + 1) * s], c))
    }

    fn exp(&self, i: usize) -> &[u32] {
        let s = self.nparams();
        &self.exps[i * s..(i + 1) * s]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.exp(0).iter().all(|&e| e == 0))
    }

    /// The constant term value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<B> {
        if self.coeffs.is_empty() {
            Some(self.space.one.zero_like())
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Leading coefficient in lex order.
    pub fn lead_coeff(&self) -> Option<&B> {
        self.coeffs.first()
    }

    fn from_unsorted(space: &Arc<ParamSpace<B>>, mut terms: Vec<(Vec<u32>, B)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out = Self::zero(space);
        for (e, c) in terms {
            let n = out.coeffs.len();
            if n > 0 && out.exp(n - 1) == e.as_slice() {
                let merged = out.coeffs[n - 1].add(&c);
                out.coeffs[n - 1] = merged;
            } else {
                out.exps.extend_from_slice(&e);
                out.coeffs.push(c);
            }
        }
        out.drop_zeros();
        out
    }

    fn drop_zeros(&mut self) {
        if self.coeffs.iter().all(|c| !c.is_zero()) {
            return;
        }
        let s = self.nparams();
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.drain(..).enumerate() {
            if !c.is_zero() {
                exps.extend_from_slice(&self.exps[i * s..(i + 1) * s]);
                coeffs.push(c);
            }
        }
        self.exps = exps;
        self.coeffs = coeffs;
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let s = self.nparams();
        let mut out = Self::zero(&self.space);
        out.exps.reserve(self.exps.len() + rhs.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.coeffs.len() || j < rhs.coeffs.len() {
            let ord = if i == self.coeffs.len() {
                std::cmp::Ordering::Less
            } else if j == rhs.coeffs.len() {
                std::cmp::Ordering::Greater
            } else {
                self.exp(i).cmp(rhs.exp(j))
            };
            let rc = |j: usize| {
                if negate_rhs {
                    rhs.coeffs[j].neg()
                } else {
                    rhs.coeffs[j].clone()
                }
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.exps.extend_from_slice(self.exp(i));
                    out.coeffs.push(self.coeffs[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.exps.extend_from_slice(rhs.exp(j));
                    out.coeffs.push(rc(j));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_rhs {
                        self.coeffs[i].sub(&rhs.coeffs[j])
                    } else {
                        self.coeffs[i].add(&rhs.coeffs[j])
                    };
                    if !c.is_zero() {
                        out.exps.extend_from_slice(self.exp(i));
                        out.coeffs.push(c);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        debug_assert_eq!(out.exps.len(), out.coeffs.len() * s);
        out
    }

    pub fn scale(&self, c: &B) -> Self {
        if c.is_zero() {
            return Self::zero(&self.space);
        }
        let mut out = self.clone();
        for x in out.coeffs.iter_mut() {
            *x = x.mul(c);
        }
        out.drop_zeros();
        out
    }

    fn mul_poly(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(&self.space);
        }
        if rhs.is_constant() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.is_constant() {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut terms = Vec::with_capacity(self.coeffs.len() * rhs.coeffs.len());
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((e, ca.mul(cb)));
            }
        }
        Self::from_unsorted(&self.space, terms)
    }

    /// Exact quotient, or `None` when `rhs` does not divide `self`.
    pub fn div_exact_poly(&self, rhs: &Self) -> Option<Self> {
        if rhs.coeffs.is_empty() {
            return None;
        }
        if rhs.is_constant() {
            let c = &rhs.coeffs[0];
            let mut out = self.clone();
            for x in out.coeffs.iter_mut() {
                *x = x.div_exact(c)?;
            }
            return Some(out);
        }
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        let lead_e = rhs.exp(0).to_vec();
        let lead_c = rhs.coeffs[0].clone();
        while !rem.coeffs.is_empty() {
            let e = rem.exp(0);
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = rem.coeffs[0].div_exact(&lead_c)?;
            let mut t = Self::zero(&self.space);
            t.exps = qe.clone();
            t.coeffs.push(qc.clone());
            rem = rem.merge(&t.mul_poly(rhs), true);
            quot_terms.push((qe, qc));
        }
        Some(Self::from_unsorted(&self.space, quot_terms))
    }

    /// Multiplies by the unit that puts the leading coefficient in normal form.
    pub fn unit_normalized(&self) -> Self {
        match self.coeffs.first() {
            Some(lc) => {
                let u = lc.unit_normal();
                if u.is_one() {
                    self.clone()
                } else {
                    self.scale(&u)
                }
            }
            None => self.clone(),
        }
    }

    fn is_unit(&self) -> bool {
        self.is_constant() && !self.coeffs.is_empty() && {
            let c = &self.coeffs[0];
            c.mul(&c.unit_normal()).is_one()
        }
    }

    fn degree_in(&self, k: usize) -> u32 {
        self.terms().map(|(e, _)| e[k]).max().unwrap_or(0)
    }

    fn to_univariate(&self, k: usize) -> Vec<Self> {
        let d = self.degree_in(k) as usize;
        let mut buckets: Vec<Vec<(Vec<u32>, B)>> = vec![Vec::new(); d + 1];
        for (e, c) in self.terms() {
            let mut e2 = e.to_vec();
            let deg = e2[k] as usize;
            e2[k] = 0;
            buckets[deg].push((e2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| Self::from_unsorted(&self.space, t))
            .collect()
    }

    fn from_univariate(space: &Arc<ParamSpace<B>>, coeffs: &[Self], k: usize) -> Self {
        let mut terms = Vec::new();
        for (deg, c) in coeffs.iter().enumerate() {
            for (e, x) in c.terms() {
                let mut e2 = e.to_vec();
                e2[k] += deg as u32;
                terms.push((e2, x.clone()));
            }
        }
        Self::from_unsorted(space, terms)
    }

    /// Normalized greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() {
            return rhs.unit_normalized();
        }
        if rhs.coeffs.is_empty() {
            return self.unit_normalized();
        }
        if gcd_is_constant(&[self, rhs]) {
            return Self::constant(&self.space, base_content(&[self, rhs]));
        }
        gcd_rec(self, rhs, 0).unit_normalized()
    }

    /// Evaluates at a point of the base ring.
    pub fn eval(&self, point: &[B]) -> B {
        let mut acc = self.space.one.zero_like();
        for (e, c) in self.terms() {
            let mut t = c.clone();
            for (base, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t.mul(base);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Applies a ring map to the base coefficients.
    pub fn map_base<C: GcdBase>(&self, space: &Arc<ParamSpace<C>>, f: impl Fn(&B) -> C) -> ParamPoly<C> {
        let mut out = ParamPoly::zero(space);
        out.exps = self.exps.clone();
        out.coeffs = self.coeffs.iter().map(f).collect();
        out.drop_zeros();
        out
    }

    /// Divides a list of parameter polynomials by their common content and
    /// normalizes the first one's leading coefficient.
    pub fn normalize_list(coeffs: &mut [Self]) {
        let Some(first) = coeffs.first() else { return };
        let refs: Vec<&Self> = coeffs.iter().collect();
        let mut g = if gcd_is_constant(&refs) {
            Self::constant(&first.space, base_content(&refs))
        } else {
            let mut g = first.unit_normalized();
            for c in coeffs.iter().skip(1) {
                if g.is_unit() {
                    break;
                }
                g = g.gcd(c);
            }
            g
        };
        if g.coeffs.is_empty() {
            g = first.one_like();
        }
        if !g.is_one() {
            for c in coeffs.iter_mut() {
                *c = c.div_exact_poly(&g).expect("content divides");
            }
        }
        let u = coeffs[0].lead_coeff().map(|c| c.unit_normal());
        if let Some(u) = u.filter(|u| !u.is_one()) {
            for c in coeffs.iter_mut() {
                *c = c.scale(&u);
            }
        }
    }
}

/// Whether the gcd of `polys` is certainly a constant. The images modulo a
/// prime are combined starting from one whose leading coefficient survives,
/// so the true gcd keeps its leading monomial modulo the prime and divides
/// the modular gcd.
fn gcd_is_constant<B: GcdBase>(polys: &[&ParamPoly<B>]) -> bool {
    let Some(first) = polys.first() else { return false };
    if first.space.one.image_mod(CHECK_PRIME).is_none() {
        return false;
    }
    let space = ParamSpace::new(first.space.names.clone(), Fp::new(1, CHECK_PRIME));
    let image = |f: &ParamPoly<B>| f.map_base(&space, |c| c.image_mod(CHECK_PRIME).expect("has images"));
    let anchor = polys
        .iter()
        .position(|f| f.coeffs.first().is_some_and(|c| !c.image_mod(CHECK_PRIME).expect("has images").is_zero()));
    let Some(anchor) = anchor else { return false };
    let mut g = image(polys[anchor]);
    if g.is_constant() {
        return true;
    }
    for (i, f) in polys.iter().enumerate() {
        if i == anchor {
            continue;
        }
        g = g.gcd(&image(f));
        if g.is_constant() {
            return true;
        }
    }
    false
}

/// Normalized gcd of every base-ring coefficient of `polys`.
fn base_content<B: GcdBase>(polys: &[&ParamPoly<B>]) -> B {
    let one = polys[0].space.one.clone();
    let mut g: Option<B> = None;
    for c in polys.iter().flat_map(|f| f.coeffs.iter()) {
        let next = match g {
            None => c.clone(),
            Some(x) => x.gcd(c),
        };
        if next.is_one() {
            return next;
        }
        g = Some(next);
    }
    match g {
        Some(x) => x.mul(&x.unit_normal()),
        None => one.zero_like(),
    }
}

fn content<B: GcdBase>(coeffs: &[ParamPoly<B>], k: usize) -> ParamPoly<B> {
    let mut it = coeffs.iter().filter(|c| !c.coeffs.is_empty());
    let Some(first) = it.next() else {
        return ParamPoly::zero(coeffs.first().map(|c| &c.space).expect("nonempty"));
    };
    let mut g = first.unit_normalized();
    for c in it {
        if g.is_unit() {
            break;
        }
        g = gcd_rec(&g, c, k).unit_normalized();
    }
    g
}

fn trim<B: GcdBase>(v: &mut Vec<ParamPoly<B>>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.coeffs.is_empty()) {
        v.pop();
    }
}

fn prem<B: GcdBase>(p: &[ParamPoly<B>], q: &[ParamPoly<B>]) -> Vec<ParamPoly<B>> {
    let dq = q.len() - 1;
    let lq = &q[dq];
    let mut r = p.to_vec();
    trim(&mut r);
    while r.len() > dq && !(r.len() == 1 && r[0].coeffs.is_empty()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul_poly(lq);
        }
        for (i, qc) in q.iter().enumerate() {
            let idx = i + dr - dq;
            r[idx] = r[idx].merge(&lr.mul_poly(qc), true);
        }
        debug_assert!(r[dr].coeffs.is_empty());
        r.pop();
        if r.is_empty() {
            r.push(ParamPoly::zero(&lq.space));
        }
        trim(&mut r);
    }
    r
}

fn gcd_rec<B: GcdBase>(a: &ParamPoly<B>, b: &ParamPoly<B>, k: usize) -> ParamPoly<B> {
    let space = a.space.clone();
    if a.coeffs.is_empty() {
        return b.clone();
    }
    if b.coeffs.is_empty() {
        return a.clone();
    }
    let s = a.nparams();
    if k >= s || (a.is_constant() && b.is_constant()) {
        if a.is_constant() && b.is_constant() {
            return ParamPoly::constant(&space, a.coeffs[0].gcd(&b.coeffs[0]));
        }
        unreachable!("variables beyond the last parameter");
    }
    if a.degree_in(k) == 0 && b.degree_in(k) == 0 {
        return gcd_rec(a, b, k + 1);
    }
    let ua = a.to_univariate(k);
    let ub = b.to_univariate(k);
    let ca = content(&ua, k + 1);
    let cb = content(&ub, k + 1);
    let c = gcd_rec(&ca, &cb, k + 1);
    let prim = |u: &[ParamPoly<B>], cu: &ParamPoly<B>| -> Vec<ParamPoly<B>> {
        u.iter()
            .map(|x| x.div_exact_poly(cu).expect("content divides"))
            .collect()
    };
    let mut p = prim(&ua, &ca);
    let mut q = prim(&ub, &cb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() == 1 {
            break vec![ParamPoly::constant(&space, space.one.clone())];
        }
        let r = prem(&p, &q);
        if r.iter().all(|c| c.coeffs.is_empty()) {
            break q;
        }
        let cr = content(&r, k + 1);
        let rp = prim(&r, &cr);
        p = q;
        q = rp;
    };
    ParamPoly::from_univariate(&space, &g, k).mul_poly(&c)
}

impl<B: GcdBase> fmt::Display for ParamPoly<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.space.names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if i > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<B: GcdBase> Coefficient for ParamPoly<B> {
    type Field = RatFunc<B>;
    const NORMALIZE_EACH_STEP: bool = true;

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.is_constant() && self.coeffs.first().is_some_and(|c| c.is_one())
    }
    fn zero_like(&self) -> Self {
        Self::zero(&self.space)
    }
    fn one_like(&self) -> Self {
        Self::constant(&self.space, self.space.one.clone())
    }
    fn int_like(&self, v: i64) -> Self {
        Self::constant(&self.space, self.space.one.int_like(v))
    }
    fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }
    fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.neg();
        }
        out
    }
    fn cancel(x: &Self, y: &Self) -> (Self, Self) {
        let g = x.gcd(y);
        let a = y.div_exact_poly(&g).expect("gcd divides");
        let b = x.div_exact_poly(&g).expect("gcd divides");
        match a.lead_coeff().map(|c| c.unit_normal()) {
            Some(u) if !u.is_one() => (a.scale(&u), b.scale(&u)),
            _ => (a, b),
        }
    }
    fn normalize(coeffs: &mut [Self]) {
        Self::normalize_list(coeffs);
    }
    fn to_field(&self) -> RatFunc<B> {
        RatFunc::from_poly(self.clone())
    }
    fn is_atomic(&self) -> bool {
        self.is_constant() && self.coeffs.first().is_none_or(|c| c.is_atomic())
    }
    fn is_negative(&self) -> bool {
        self.is_constant() && self.coeffs.first().is_some_and(|c| c.is_negative())
    }
    fn size(&self) -> u64 {
        self.coeffs.iter().map(|c| c.size()).sum()
    }
}
