//! S-polynomials, Mora's weak normal form and the standard basis loop.

use std::cmp::Ordering;
use std::time::Instant;

use thiserror::Error;

use crate::coeff::{Coefficient, Field};
use crate::corner::{leading_ideal, Staircase, TruncationBound};
use crate::ring::{Monomial, OrderSpec, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoraError {
    #[error("computation exceeded its deadline")]
    Timeout,
    #[error("tail reduction needs a zero-dimensional leading ideal")]
    NonFinite,
}

/// Options for [`standard_basis`].
#[derive(Clone, Debug)]
pub struct StdOptions {
    pub bound: TruncationBound,
    /// Once the partial leading ideal is zero-dimensional, discard terms
    /// below `x_i * c` for its corner `c` (all such terms lie in the ideal).
    pub dynamic_corner: bool,
    pub deadline: Option<Instant>,
}

impl Default for StdOptions {
    fn default() -> Self {
        StdOptions {
            bound: TruncationBound::NoBound,
            dynamic_corner: false,
            deadline: None,
        }
    }
}

impl StdOptions {
    pub fn with_bound(bound: TruncationBound) -> Self {
        StdOptions {
            bound,
            ..Default::default()
        }
    }
}

/// Static bound plus an optional moving floor; both closed downwards.
#[derive(Clone, Debug)]
pub(crate) struct Cutoff {
    order: OrderSpec,
    bound: TruncationBound,
    floor: Option<Monomial>,
}

impl Cutoff {
    pub(crate) fn new(order: &OrderSpec, bound: &TruncationBound) -> Self {
        Cutoff {
            order: order.clone(),
            bound: bound.clone(),
            floor: None,
        }
    }

    pub(crate) fn keeps(&self, m: &Monomial) -> bool {
        self.bound.keeps(m, &self.order)
            && self
                .floor
                .as_ref()
                .is_none_or(|f| self.order.compare(m, f) != Ordering::Less)
    }

    /// Whether only finitely many monomials survive. Plain reduction then
    /// terminates, so the ecart bookkeeping of Mora's normal form is unneeded.
    fn is_finite(&self) -> bool {
        self.floor.is_some() || !self.bound.is_none()
    }

    fn apply<C: Coefficient>(&self, f: &Polynomial<C>) -> Polynomial<C> {
        f.truncated(|m| self.keeps(m))
    }
}

fn tidy<C: Coefficient>(mut f: Polynomial<C>) -> Polynomial<C> {
    if C::NORMALIZE_EACH_STEP {
        f.normalize();
    }
    f
}

/// `(m/LM f)*f - (LC f/LC g)*(m/LM g)*g` with `m = lcm(LM f, LM g)`,
/// computed fraction-free (both sides scaled by a common nonzero factor).
pub fn spoly<C: Coefficient>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    spoly_cut(f, g, &|_| true)
}

fn spoly_cut<C: Coefficient>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    keep: &impl Fn(&Monomial) -> bool,
) -> Polynomial<C> {
    let m = f.lm().lcm(g.lm());
    let sf = m.div(f.lm()).expect("lcm is a multiple");
    let sg = m.div(g.lm()).expect("lcm is a multiple");
    let (a, b) = C::cancel(f.lc(), g.lc());
    let one = a.one_like();
    let fs = if sf.is_one() { f.clone() } else { f.mul_term(&sf, &one) };
    fs.sub_scaled_shifted(&a, &b, &sg, g, keep)
}

/// One reduction step of `h` by `g`, where `LM g` divides `LM h`.
fn reduce_step<C: Coefficient>(
    h: &Polynomial<C>,
    g: &Polynomial<C>,
    keep: &impl Fn(&Monomial) -> bool,
) -> Polynomial<C> {
    let shift = h.lm().div(g.lm()).expect("divisor");
    let (a, b) = C::cancel(h.lc(), g.lc());
    h.sub_scaled_shifted(&a, &b, &shift, g, keep)
}

/// Mora's weak normal form of `f` with respect to `basis`, truncating by
/// `bound` after every step.
pub fn mora_weak_nf<C: Coefficient>(
    f: &Polynomial<C>,
    basis: &[Polynomial<C>],
    bound: &TruncationBound,
) -> Polynomial<C> {
    let order = f.ring().order().clone();
    let cut = Cutoff::new(&order, bound);
    let pool: Vec<(Polynomial<C>, u32)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.clone(), g.ecart()))
        .collect();
    let refs: Vec<(&Polynomial<C>, u32)> = pool.iter().map(|(g, e)| (g, *e)).collect();
    weak_nf(cut.apply(f), &refs, &cut, None).expect("no deadline")
}

fn weak_nf<C: Coefficient>(
    f: Polynomial<C>,
    basis: &[(&Polynomial<C>, u32)],
    cut: &Cutoff,
    deadline: Option<Instant>,
) -> Result<Polynomial<C>, MoraError> {
    let order = &cut.order;
    let keep = |m: &Monomial| cut.keeps(m);
    let finite = cut.is_finite();
    let mut h = tidy(f);
    let mut extra: Vec<(Polynomial<C>, u32)> = Vec::new();
    while !h.is_zero() {
        if let Some(d) = deadline {
            if Instant::now() >= d {
                return Err(MoraError::Timeout);
            }
        }
        let lm = *h.lm();
        // Minimal ecart, or under a finite cutoff the smallest leading
        // coefficient; then fewer terms, then smaller leading monomial.
        let rank = |g: &Polynomial<C>, e: u32| {
            if finite {
                (0, g.lc().size(), g.len())
            } else {
                (e as u64, 0, g.len())
            }
        };
        let mut best: Option<(&Polynomial<C>, u32)> = None;
        for (g, e) in basis.iter().copied().chain(extra.iter().map(|(g, e)| (g, *e))) {
            if !g.lm().divides(&lm) {
                continue;
            }
            let better = match best {
                None => true,
                Some((b, be)) => match rank(g, e).cmp(&rank(b, be)) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => order.compare(g.lm(), b.lm()) == Ordering::Less,
                },
            };
            if better {
                best = Some((g, e));
            }
        }
        let Some((g, ge)) = best else {
            break;
        };
        let next = tidy(reduce_step(&h, g, &keep));
        if !finite {
            let he = h.ecart();
            if ge > he {
                extra.push((h, he));
            }
        }
        h = next;
    }
    Ok(h)
}

/// Reduces every non-leading term of `h` that some reducer's leading monomial
/// divides. Terminates because `keep` admits only finitely many monomials
/// below the leading one.
fn reduce_tail<C: Coefficient>(
    mut h: Polynomial<C>,
    reducers: &[&Polynomial<C>],
    keep: &impl Fn(&Monomial) -> bool,
    deadline: Option<Instant>,
) -> Result<Polynomial<C>, MoraError> {
    let mut k = 1;
    while k < h.len() {
        if let Some(d) = deadline {
            if Instant::now() >= d {
                return Err(MoraError::Timeout);
            }
        }
        let m = h.monomials()[k];
        let Some(g) = reducers
            .iter()
            .filter(|g| g.lm().divides(&m))
            .min_by_key(|g| (g.lc().size(), g.len()))
        else {
            k += 1;
            continue;
        };
        let shift = m.div(g.lm()).expect("divisor");
        let (a, b) = C::cancel(&h.coeffs()[k], g.lc());
        h = tidy(h.sub_scaled_shifted(&a, &b, &shift, g, keep));
    }
    Ok(h)
}

/// A standard basis together with how it was produced.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardBasis<F: Coefficient> {
    pub elements: Vec<Polynomial<F>>,
    pub minimal: bool,
    pub reduced: bool,
    pub bound: TruncationBound,
}

impl<F: Field> StandardBasis<F> {
    pub fn staircase(&self) -> Option<Staircase> {
        (!self.elements.is_empty()).then(|| leading_ideal(&self.elements))
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    /// Degree of the lcm plus the larger ecart of the two elements.
    sugar: u64,
}

/// Computes a minimal (not yet tail-reduced) standard basis over the
/// coefficient ring `C`. Elements are content-free and sorted descending by
/// leading monomial.
pub fn standard_basis_raw<C: Coefficient>(
    gens: &[Polynomial<C>],
    opts: &StdOptions,
) -> Result<Vec<Polynomial<C>>, MoraError> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let order = ring.order().clone();
    let nvars = ring.nvars();
    let mut cut = Cutoff::new(&order, &opts.bound);
    let mut corner_top: Option<u64> = None;

    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut ecarts: Vec<u32> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut pending: Vec<Polynomial<C>> = gens
        .iter()
        .map(|g| tidy(cut.apply(g)))
        .filter(|g| !g.is_zero())
        .collect();
    // The generators' own leading monomials may already pin down a corner;
    // without it, reducing one generator by the others can run unbounded.
    if opts.dynamic_corner {
        let lms: Vec<Monomial> = pending.iter().map(|g| *g.lm()).collect();
        if raise_floor(&mut cut, &mut corner_top, &lms, nvars, &opts.bound) {
            pending = pending.iter().map(|g| tidy(cut.apply(g))).filter(|g| !g.is_zero()).collect();
        }
    }
    // Seed in descending order so the first elements are the most useful reducers.
    pending.sort_by(|a, b| order.compare(b.lm(), a.lm()));

    let mut queue = pending.into_iter();
    loop {
        let h = if let Some(g) = queue.next() {
            let refs: Vec<(&Polynomial<C>, u32)> = basis
                .iter()
                .zip(&ecarts)
                .zip(&alive)
                .filter(|(_, &a)| a)
                .map(|((g, &e), _)| (g, e))
                .collect();
            weak_nf(g, &refs, &cut, opts.deadline)?
        } else {
            let Some(k) = select_pair(&pairs, &order) else {
                break;
            };
            let p = pairs.swap_remove(k);
            if !alive[p.i] || !alive[p.j] {
                continue;
            }
            let s = tidy(spoly_cut(&basis[p.i], &basis[p.j], &|m: &Monomial| cut.keeps(m)));
            if s.is_zero() {
                continue;
            }
            let refs: Vec<(&Polynomial<C>, u32)> = basis
                .iter()
                .zip(&ecarts)
                .zip(&alive)
                .filter(|(_, &a)| a)
                .map(|((g, &e), _)| (g, e))
                .collect();
            weak_nf(s, &refs, &cut, opts.deadline)?
        };
        if h.is_zero() {
            continue;
        }
        update_pairs(&mut pairs, &basis, &ecarts, &alive, &h);
        ecarts.push(h.ecart());
        basis.push(h);
        alive.push(true);

        if opts.dynamic_corner {
            let lms: Vec<Monomial> = basis
                .iter()
                .zip(&alive)
                .filter(|(_, &a)| a)
                .map(|(g, _)| *g.lm())
                .collect();
            if raise_floor(&mut cut, &mut corner_top, &lms, nvars, &opts.bound) {
                for (k, g) in basis.iter_mut().enumerate() {
                    if !alive[k] {
                        continue;
                    }
                    let trimmed = cut.apply(g);
                    if trimmed.is_zero() {
                        alive[k] = false;
                    } else if trimmed.len() != g.len() {
                        ecarts[k] = trimmed.ecart();
                        *g = trimmed;
                    }
                }
                pairs.retain(|p| alive[p.i] && alive[p.j]);
            }
        }
    }

    let mut out: Vec<Polynomial<C>> = basis
        .into_iter()
        .zip(alive)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    out.sort_by(|a, b| a.lm().degree().cmp(&b.lm().degree()).then_with(|| order.compare(b.lm(), a.lm())));
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for g in out {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    minimal.sort_by(|a, b| order.compare(b.lm(), a.lm()));
    Ok(minimal)
}

/// Raises the cutoff floor to `min_i x_i * c`, with `c` the lowest standard
/// monomial of the monomial ideal spanned by `lms` (leading monomials of
/// ideal elements). Every term below lies in the ideal. Returns whether the
/// floor moved.
fn raise_floor(
    cut: &mut Cutoff,
    corner_top: &mut Option<u64>,
    lms: &[Monomial],
    nvars: usize,
    bound: &TruncationBound,
) -> bool {
    let order = cut.order.clone();
    let st = Staircase::new(lms, nvars, &order);
    // The corner only rises as the basis grows, so its degree caps the
    // next search.
    let top = corner_top.or(match bound {
        TruncationBound::NoBound => None,
        TruncationBound::DegreeBound(d) => Some(*d),
        TruncationBound::MonomialBound(n) => Some(order.degree(n)),
    });
    let Some(c) = st.lowest_standard(|m| bound.keeps(m, &order), top) else {
        return false;
    };
    *corner_top = Some(order.degree(&c));
    let floor = (0..nvars)
        .map(|i| c.times_var(i))
        .min_by(|a, b| order.compare(a, b))
        .expect("at least one variable");
    let raise = cut
        .floor
        .is_none_or(|f| order.compare(&floor, &f) == Ordering::Greater);
    if raise {
        cut.floor = Some(floor);
    }
    raise
}

/// Largest degree tried by [`standard_basis_by_degree`] before it gives up
/// on the guessing and runs the plain computation.
pub const DEGREE_GUESS_LIMIT: u64 = 512;

/// Standard basis of a zero-dimensional ideal over a field, found by
/// computing modulo all monomials of degree at least `D` for growing `D`.
///
/// Once every standard monomial of the truncated result has degree at most
/// `D - 1 - w` (with `w` the largest variable weight), Nakayama's lemma puts
/// every monomial of degree `D - w` in the ideal, so the truncated result is
/// a standard basis of the ideal itself. Ideals that are not zero-dimensional
/// are caught by the plain computation, which is retried with a growing
/// time budget between guesses and runs unbudgeted once `D` passes
/// [`DEGREE_GUESS_LIMIT`]. `opts.bound` only applies to the plain runs.
pub fn standard_basis_by_degree<C: Coefficient>(
    gens: &[Polynomial<C>],
    opts: &StdOptions,
) -> Result<Vec<Polynomial<C>>, MoraError> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(Vec::new());
    };
    let order = first.ring().order().clone();
    let wmax = order.weights().and_then(|w| w.iter().max().copied()).unwrap_or(1) as u64;
    let top_gen = gens
        .iter()
        .flat_map(|g| g.monomials().iter().map(|m| order.degree(m)))
        .max()
        .unwrap_or(0);
    let mut d = (2 * top_gen + 2 * wmax).max(16);
    let started = Instant::now();
    while d <= DEGREE_GUESS_LIMIT {
        let run = StdOptions {
            bound: TruncationBound::DegreeBound(d - 1),
            dynamic_corner: true,
            deadline: opts.deadline,
        };
        let basis = standard_basis_raw(gens, &run)?;
        if basis.is_empty() {
            return Ok(basis);
        }
        let st = leading_ideal(&basis);
        if st.is_whole_ring() {
            return Ok(basis);
        }
        let closed = st
            .lowest_standard(|m| order.degree(m) < d, Some(d - 1))
            .is_none_or(|c| order.degree(&c) + wmax < d);
        if closed {
            return Ok(basis);
        }
        // Not closed yet: the ideal may not be zero-dimensional, which the
        // plain computation usually settles quickly. Give it as much time
        // as the guessing has used so far; either route yields a standard
        // basis, so only the running time depends on which one finishes.
        let budget = Instant::now() + started.elapsed();
        let plain = StdOptions {
            bound: opts.bound.clone(),
            dynamic_corner: true,
            deadline: Some(opts.deadline.map_or(budget, |u| u.min(budget))),
        };
        match standard_basis_raw(gens, &plain) {
            Ok(basis) => return Ok(basis),
            Err(MoraError::Timeout) if opts.deadline.is_none_or(|u| Instant::now() < u) => {}
            Err(e) => return Err(e),
        }
        d *= 2;
    }
    standard_basis_raw(gens, opts)
}

/// Lowest sugar first, then lowest lcm degree; ties go to the larger lcm,
/// then to older pairs.
fn select_pair(pairs: &[Pair], order: &OrderSpec) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        let better = match best {
            None => true,
            Some(b) => {
                let q = &pairs[b];
                match (p.sugar, p.lcm.degree()).cmp(&(q.sugar, q.lcm.degree())) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => match order.compare(&p.lcm, &q.lcm) {
                        Ordering::Greater => true,
                        Ordering::Less => false,
                        Ordering::Equal => (p.j, p.i) < (q.j, q.i),
                    },
                }
            }
        };
        if better {
            best = Some(k);
        }
    }
    best
}

/// Gebauer–Möller update for a new element `h` (index `basis.len()`),
/// without the product criterion.
fn update_pairs<C: Coefficient>(
    pairs: &mut Vec<Pair>,
    basis: &[Polynomial<C>],
    ecarts: &[u32],
    alive: &[bool],
    h: &Polynomial<C>,
) {
    let he = h.ecart();
    let t = *h.lm();
    let new = basis.len();
    // Old pairs whose lcm is strictly divisible by t in the chain sense.
    pairs.retain(|p| {
        let li = basis[p.i].lm().lcm(&t);
        let lj = basis[p.j].lm().lcm(&t);
        !(t.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    let cands: Vec<Pair> = (0..new)
        .filter(|&i| alive[i])
        .map(|i| Pair {
            i,
            j: new,
            lcm: basis[i].lm().lcm(&t),
            sugar: basis[i].lm().lcm(&t).degree() as u64 + ecarts[i].max(he) as u64,
        })
        .collect();
    // Drop candidates whose lcm is a proper multiple of another's, and keep
    // one representative per lcm.
    let mut kept: Vec<Pair> = Vec::new();
    for (k, c) in cands.iter().enumerate() {
        let dominated = cands
            .iter()
            .any(|d| d.lcm != c.lcm && d.lcm.divides(&c.lcm));
        let duplicate = cands[..k].iter().any(|d| d.lcm == c.lcm);
        if !dominated && !duplicate {
            kept.push(Pair {
                i: c.i,
                j: c.j,
                lcm: c.lcm,
                sugar: c.sugar,
            });
        }
    }
    pairs.extend(kept);
}

/// Turns a minimal standard basis of a zero-dimensional ideal into the
/// reduced one: tails cut below the highest corner, fully tail-reduced,
/// leading coefficients one.
pub fn reduce_basis<C: Coefficient>(
    basis: &[Polynomial<C>],
    deadline: Option<Instant>,
) -> Result<Vec<Polynomial<C::Field>>, MoraError> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let ring = basis[0].ring().clone();
    let order = ring.order().clone();
    let st = leading_ideal(basis);
    let hc = st.highest_corner().map_err(|_| MoraError::NonFinite)?;
    let Some(&hc) = hc.monomial() else {
        let one = basis[0].lc().to_field().one_like();
        return Ok(vec![Polynomial::constant(&ring, one)]);
    };
    let keep = |m: &Monomial| order.compare(m, &hc) != Ordering::Less;

    // Minimal: one element per staircase generator.
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for gen in st.generators() {
        let g = basis.iter().find(|g| g.lm() == gen).expect("generator comes from basis");
        // A leading monomial below the corner lies in the ideal by itself.
        let trimmed = if keep(g.lm()) {
            g.truncated(keep)
        } else {
            Polynomial::term(&ring, *g.lm(), g.lc().clone())
        };
        minimal.push(tidy(trimmed));
    }

    // Over the fraction field with monic reducers a step only touches the
    // reducer's terms. Reduced forms are unique, so each element is replaced
    // as soon as it is done: smallest leading monomials first, as their
    // tails are shortest.
    let mut out: Vec<Polynomial<C::Field>> = minimal
        .iter()
        .map(|p| {
            let mut f = p.to_field();
            f.normalize();
            f
        })
        .collect();
    out.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    for k in 0..out.len() {
        let g = out[k].clone();
        let refs: Vec<&Polynomial<C::Field>> = out.iter().collect();
        out[k] = reduce_tail(g, &refs, &keep, deadline)?;
    }
    out.sort_by(|a, b| order.compare(b.lm(), a.lm()));
    Ok(out)
}

/// Standard basis over `C`, reduced when the leading ideal is
/// zero-dimensional and otherwise minimal with monic leading coefficients.
pub fn standard_basis<C: Coefficient>(
    gens: &[Polynomial<C>],
    opts: &StdOptions,
) -> Result<StandardBasis<C::Field>, MoraError> {
    let raw = standard_basis_raw(gens, opts)?;
    let zero_dim = !raw.is_empty() && leading_ideal(&raw).is_zero_dimensional();
    if zero_dim {
        let elements = reduce_basis(&raw, opts.deadline)?;
        return Ok(StandardBasis {
            elements,
            minimal: true,
            reduced: true,
            bound: opts.bound.clone(),
        });
    }
    let elements = raw
        .iter()
        .map(|g| {
            let mut f = g.to_field();
            f.normalize();
            f
        })
        .collect();
    Ok(StandardBasis {
        elements,
        minimal: true,
        reduced: false,
        bound: opts.bound.clone(),
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::coeff::{DomainSpec, Fp, Scalar};
    use crate::ring::{parse_polynomial, PolyRing};

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), OrderSpec::NegDegRevLex).unwrap()
    }

    fn zz(text: &str, r: &Arc<PolyRing>) -> Polynomial<BigInt> {
        parse_polynomial(text, r, &DomainSpec::rationals())
            .unwrap()
            .map_coeffs(|c| c.as_integer().expect("integer coefficients"))
    }

    fn qq(text: &str, r: &Arc<PolyRing>) -> Polynomial<BigRational> {
        parse_polynomial(text, r, &DomainSpec::rationals()).unwrap().map_coeffs(|c| match c {
            Scalar::Rational(q) => q.clone(),
            other => panic!("unexpected {other}"),
        })
    }

    fn fp(text: &str, r: &Arc<PolyRing>, p: u32) -> Polynomial<Fp> {
        parse_polynomial(text, r, &DomainSpec::prime_field(p).unwrap())
            .unwrap()
            .map_coeffs(|c| match c {
                Scalar::Modular(x) => *x,
                other => panic!("unexpected {other}"),
            })
    }

    fn strings<C: Coefficient>(basis: &[Polynomial<C>]) -> Vec<String> {
        basis.iter().map(|g| g.to_string()).collect()
    }

    fn reduced<C: Coefficient>(gens: &[Polynomial<C>]) -> Vec<String> {
        let raw = standard_basis_raw(gens, &StdOptions::default()).unwrap();
        strings(&reduce_basis(&raw, None).unwrap())
    }

    #[test]
    fn spoly_cancels_leading_terms() {
        let r = ring(&["x", "y"]);
        let s = spoly(&zz("x+y2", &r), &zz("y+x2", &r));
        assert_eq!(s.to_string(), "-x^3+y^3");
        let s = spoly(&zz("2x+y2", &r), &zz("3x", &r));
        assert_eq!(s.to_string(), "3*y^2");
    }

    #[test]
    fn weak_normal_form_uses_units() {
        // x = (1-x)^{-1} (x - x^2) in the local ring.
        let r = ring(&["x"]);
        let nf = mora_weak_nf(&qq("x", &r), &[qq("x-x2", &r)], &TruncationBound::NoBound);
        assert!(nf.is_zero());
        let nf = mora_weak_nf(&qq("1+x", &r), &[qq("x-x2", &r)], &TruncationBound::NoBound);
        assert_eq!(nf.lm().degree(), 0);
    }

    #[test]
    fn weak_normal_form_respects_bound() {
        let r = ring(&["x", "y"]);
        let bound = TruncationBound::DegreeBound(2);
        let nf = mora_weak_nf(&qq("y+x3+y4", &r), &[qq("x2", &r)], &bound);
        assert_eq!(nf.to_string(), "y");
    }

    #[test]
    fn bad_prime_changes_the_basis() {
        let r = ring(&["x", "y"]);
        assert_eq!(reduced(&[zz("5x-x2", &r), zz("y", &r)]), ["x", "y"]);
        assert_eq!(reduced(&[fp("5x-x2", &r, 5), fp("y", &r, 5)]), ["y", "x^2"]);
        assert_eq!(reduced(&[fp("5x-x2", &r, 7), fp("y", &r, 7)]), ["x", "y"]);
    }

    #[test]
    fn simple_singularities() {
        // A_k: x^2 + y^(k+1) has Milnor number k.
        let r = ring(&["x", "y"]);
        for k in 1..8u32 {
            let f = qq(&format!("x2+y{}", k + 1), &r);
            let st = leading_ideal(&standard_basis_raw(&[f.derivative(0), f.derivative(1)], &StdOptions::default()).unwrap());
            assert_eq!(st.vdim(), Some(k as u64));
        }
        // E_6: x^3 + y^4.
        let f = qq("x3+y4", &r);
        let raw = standard_basis_raw(&[f.derivative(0), f.derivative(1)], &StdOptions::default()).unwrap();
        assert_eq!(leading_ideal(&raw).vdim(), Some(6));
    }

    #[test]
    fn local_ordering_sees_only_the_origin() {
        // x^2 - x^3 = x^2 (1 - x): the factor 1 - x is a unit.
        let r = ring(&["x", "y"]);
        assert_eq!(reduced(&[qq("x2-x3", &r), qq("y-x", &r)]), ["x-y", "y^2"]);
    }

    #[test]
    fn reduced_basis_is_unique() {
        let r = ring(&["x", "y", "z"]);
        let a = [zz("x2+y3z", &r), zz("y2+xz2", &r), zz("z3+x3", &r)];
        let b = [zz("-2z3-2x3", &r), zz("3x2+3y3z", &r), zz("y2+xz2+x2+y3z", &r)];
        assert_eq!(reduced(&a), reduced(&b));
    }

    #[test]
    fn product_of_buchberger_pairs_reduces_to_zero() {
        let r = ring(&["x", "y", "z"]);
        let gens = [qq("x2+y3", &r), qq("y2-xz+x4", &r), qq("z2+x3y", &r)];
        let raw = standard_basis_raw(&gens, &StdOptions::default()).unwrap();
        let basis = reduce_basis(&raw, None).unwrap();
        for i in 0..basis.len() {
            for j in 0..i {
                let s = spoly(&basis[i], &basis[j]);
                assert!(mora_weak_nf(&s, &basis, &TruncationBound::NoBound).is_zero());
            }
        }
        for g in &gens {
            assert!(mora_weak_nf(g, &basis, &TruncationBound::NoBound).is_zero());
        }
    }

    #[test]
    fn degree_guessing_matches_the_plain_loop() {
        let r = ring(&["x", "y", "z"]);
        for text in ["x3+y4+z5+xyz", "x2y2+z5+x6+y7", "x4+y4+z4+x2y2z"] {
            let f = fp(text, &r, 32003);
            let gens: Vec<_> = (0..3).map(|i| f.derivative(i)).chain([f.clone()]).collect();
            let plain = standard_basis_raw(&gens, &StdOptions::default()).unwrap();
            let guessed = standard_basis_by_degree(&gens, &StdOptions::default()).unwrap();
            assert_eq!(leading_ideal(&plain).generators(), leading_ideal(&guessed).generators());
            assert_eq!(strings(&reduce_basis(&plain, None).unwrap()), strings(&reduce_basis(&guessed, None).unwrap()));
        }
    }

    #[test]
    fn positive_dimensional_ideals_are_minimal_only() {
        let r = ring(&["x", "y"]);
        let sb = standard_basis(&[qq("x2+xy", &r)], &StdOptions::default()).unwrap();
        assert!(!sb.reduced);
        assert!(!sb.staircase().unwrap().is_zero_dimensional());
        let raw = standard_basis_raw(&[qq("x2", &r)], &StdOptions::default()).unwrap();
        assert_eq!(reduce_basis(&raw, None).unwrap_err(), MoraError::NonFinite);
    }

    #[test]
    fn deadline_is_honoured() {
        let r = ring(&["x", "y", "z"]);
        let f = zz("x3y3+x5y2+2x2y5+x2y2z3+xy7+z9+y13+x25", &r);
        let gens: Vec<_> = (0..3).map(|i| f.derivative(i)).collect();
        let opts = StdOptions {
            deadline: Some(Instant::now()),
            ..Default::default()
        };
        assert_eq!(standard_basis_raw(&gens, &opts).unwrap_err(), MoraError::Timeout);
    }
}

