//! Built-in benchmark ideals and a seeded generator of small
//! zero-dimensional test ideals.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{DomainSpec, Scalar};
use crate::ring::{jacobian_ideal, parse_polynomial, IdealPresentation, Monomial, OrderSpec, PolyRing, Polynomial};

/// Identifiers of the built-in examples.
pub const EXAMPLE_IDS: [u32; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

/// Default seed for the generated examples.
pub const DEFAULT_SEED: u64 = 100;

/// A built-in example ideal.
#[derive(Clone, Debug)]
pub struct Example {
    pub id: u32,
    pub summary: &'static str,
    pub ideal: IdealPresentation,
    /// The hypersurface the ideal is derived from, if any.
    pub poly: Option<Polynomial<Scalar>>,
    /// Equivalent session text.
    pub session: String,
}

struct Spec {
    params: &'static [&'static str],
    vars: &'static [&'static str],
    poly: &'static str,
    with_f: bool,
    summary: &'static str,
}

fn spec(id: u32) -> Option<Spec> {
    let xyz: &[&str] = &["x", "y", "z"];
    Some(match id {
        1 => Spec {
            params: &[],
            vars: xyz,
            poly: "x3y3+x5y2+2x2y5+x2y2z3+xy7+z9+y13+x25",
            with_f: true,
            summary: "Tjurina ideal of a space-curve-like surface singularity",
        },
        2 => Spec {
            params: &[],
            vars: xyz,
            poly: "xyz*(x+y+z)^2+(x+y+z)^3+x15+y15+z15",
            with_f: false,
            summary: "Jacobian ideal, non-degenerate cubic plus high powers",
        },
        3 => Spec {
            params: &[],
            vars: xyz,
            poly: "x8y6+x10y5+x8y7+2x7y8+x7y6z2+x16+x6y10+y18+z20",
            with_f: false,
            summary: "Jacobian ideal of a degenerate surface singularity",
        },
        5 => Spec {
            params: &["t"],
            vars: xyz,
            poly: "y10+(t2)*x7y7+x15+x9y6+(2t)*x6y9+x6y6z3+x5y11+z21",
            with_f: false,
            summary: "Jacobian ideal with parameter t",
        },
        6 => Spec {
            params: &["t"],
            vars: xyz,
            poly: "xyz*(x+y+z)^2+(x+y+z)^3+t*(x15+y15+z15)",
            with_f: false,
            summary: "Jacobian ideal of example 2 with parameter t",
        },
        7 => Spec {
            params: &["t"],
            vars: xyz,
            poly: "x8y6+x10y5+x8y7+2x7y8+x7y6z2+x16+x6y10+t*y18+t2*z20",
            with_f: false,
            summary: "Jacobian ideal of example 3 with parameter t",
        },
        _ => return None,
    })
}

/// Builds example `id`; `seed` only affects the generated examples 4 and 8.
pub fn example(id: u32, seed: u64) -> Option<Example> {
    match id {
        4 => return Some(random_combination_example(4, seed, false)),
        8 => return Some(random_combination_example(8, seed, true)),
        _ => {}
    }
    let s = spec(id)?;
    let domain = DomainSpec::new(0, s.params.iter().map(|p| p.to_string()).collect()).expect("valid domain");
    let ring = PolyRing::new(s.vars.iter().map(|v| v.to_string()).collect(), OrderSpec::NegDegRevLex)
        .expect("valid ring");
    let f = parse_polynomial(s.poly, &ring, &domain).expect("built-in polynomial parses");
    let ideal = jacobian_ideal(&f, &domain, s.with_f);
    let ring_line = if s.params.is_empty() {
        format!("ring R = 0,({}),ds;", s.vars.join(","))
    } else {
        format!("ring R = (0,{}),({}),ds;", s.params.join(","), s.vars.join(","))
    };
    let ideal_line = if s.with_f { "ideal I = jacob(F),F;" } else { "ideal I = jacob(F);" };
    let session = format!("{ring_line}\npoly F = {};\n{ideal_line}\n", s.poly);
    Some(Example {
        id,
        summary: s.summary,
        ideal,
        poly: Some(f),
        session,
    })
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(Monomial::from_exponents(e).expect("small exponents"));
            return;
        }
        for k in (0..=left).rev() {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
    }
    rec(0, d, &mut e, &mut out);
    out
}

fn nonzero_coefficient(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// Five random combinations of the monomials of degree 5, 7 and 10 (or
/// 5, 7 and `t` times degree 9) in four variables, coefficients in
/// `[-99, 99] \ {0}`.
fn random_combination_example(id: u32, seed: u64, with_param: bool) -> Example {
    let params: Vec<String> = if with_param { vec!["t".into()] } else { Vec::new() };
    let domain = DomainSpec::new(0, params).expect("valid domain");
    let vars: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
    let ring = PolyRing::new(vars.clone(), OrderSpec::NegDegRevLex).expect("valid ring");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = if with_param { 9 } else { 10 };
    let mut pieces: Vec<(Monomial, bool)> = Vec::new();
    for d in [5, 7] {
        pieces.extend(monomials_of_degree(4, d).into_iter().map(|m| (m, false)));
    }
    pieces.extend(monomials_of_degree(4, top).into_iter().map(|m| (m, with_param)));
    let t = if with_param { Some(domain.parameter(0)) } else { None };
    let mut gens = Vec::new();
    for _ in 0..5 {
        let terms: Vec<(Monomial, Scalar)> = pieces
            .iter()
            .map(|(m, scaled)| {
                let c = domain.from_i64(nonzero_coefficient(&mut rng, 99));
                let c = match (&t, scaled) {
                    (Some(t), true) => crate::coeff::Coefficient::mul(&c, t),
                    _ => c,
                };
                (*m, c)
            })
            .collect();
        gens.push(Polynomial::from_terms(&ring, terms));
    }
    let ring_line = if with_param {
        "ring R = (0,t),(x,y,z,w),ds;"
    } else {
        "ring R = 0,(x,y,z,w),ds;"
    };
    let mut session = format!("{ring_line}\n");
    let names: Vec<String> = (1..=gens.len()).map(|i| format!("g{i}")).collect();
    for (n, g) in names.iter().zip(&gens) {
        session.push_str(&format!("poly {n} = {g};\n"));
    }
    session.push_str(&format!("ideal I = {};\n", names.join(",")));
    let summary = if with_param {
        "five random combinations of degree 5, 7 and t*degree 9 monomials"
    } else {
        "five random combinations of degree 5, 7 and 10 monomials"
    };
    Example {
        id,
        summary,
        ideal: IdealPresentation::new(domain, ring, gens),
        poly: None,
        session,
    }
}

/// Kinds of generated test ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// `x_i^{a_i}` plus random terms of higher degree, plus one extra
    /// combination of the others.
    PurePowers,
    /// Jacobian of `sum x_i^{b_i}` plus random terms above the Newton
    /// diagonal; the Milnor number is `prod (b_i - 1)`.
    SemiQuasiHomogeneous,
}

/// A generated zero-dimensional ideal with a known upper bound on its
/// dimension.
#[derive(Clone, Debug)]
pub struct RandomIdeal {
    pub kind: RandomKind,
    pub ideal: IdealPresentation,
    /// Exact dimension when known in closed form.
    pub expected_vdim: Option<u64>,
    /// Upper bound on the dimension.
    pub vdim_bound: u64,
}

fn random_scalar(rng: &mut ChaCha8Rng, domain: &DomainSpec) -> Scalar {
    let num = nonzero_coefficient(rng, 9);
    // Occasionally a proper fraction, to exercise denominator clearing.
    let den = if rng.gen_bool(0.2) { rng.gen_range(2..=5) } else { 1 };
    match domain.characteristic() {
        0 => Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))),
        _ => domain.from_i64(num),
    }
}

/// Generates test ideal number `index` in 2 or 3 variables over `Q` with
/// generator degrees at most 6 and dimension at most 60.
pub fn random_ideal(seed: u64, index: u64) -> RandomIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0xA24B_AED4_963E_E407));
    let n = rng.gen_range(2..=3usize);
    let names = ["x", "y", "z"];
    let vars: Vec<String> = names[..n].iter().map(|s| s.to_string()).collect();
    let ring = PolyRing::new(vars, OrderSpec::NegDegRevLex).expect("valid ring");
    let domain = DomainSpec::rationals();
    let kind = if index.is_multiple_of(2) { RandomKind::PurePowers } else { RandomKind::SemiQuasiHomogeneous };
    match kind {
        RandomKind::PurePowers => {
            let a: Vec<u32> = loop {
                let a: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=if n == 2 { 6 } else { 4 })).collect();
                if a.iter().product::<u32>() <= 60 {
                    break a;
                }
            };
            let mut gens = Vec::new();
            for (i, &ai) in a.iter().enumerate() {
                let mut exps = vec![0u32; n];
                exps[i] = ai;
                let mut terms = vec![(Monomial::from_exponents(&exps).expect("small"), random_scalar(&mut rng, &domain))];
                let extra = rng.gen_range(1..=4);
                for _ in 0..extra {
                    let d = rng.gen_range((ai + 1).min(6)..=6);
                    if d <= ai {
                        continue;
                    }
                    let pool = monomials_of_degree(n, d);
                    let m = pool[rng.gen_range(0..pool.len())];
                    terms.push((m, random_scalar(&mut rng, &domain)));
                }
                gens.push(Polynomial::from_terms(&ring, terms));
            }
            // A redundant generator: a combination of the others with
            // monomial multipliers, truncated at degree 6.
            let mut combo = Polynomial::zero(&ring);
            for g in &gens {
                let pool = monomials_of_degree(n, rng.gen_range(0..=2));
                let m = pool[rng.gen_range(0..pool.len())];
                combo = combo.add(&g.mul_term(&m, &random_scalar(&mut rng, &domain)));
            }
            let combo = combo.filtered(|m| m.degree() <= 6);
            gens.push(combo);
            RandomIdeal {
                kind,
                ideal: IdealPresentation::new(domain, ring, gens),
                expected_vdim: None,
                vdim_bound: a.iter().map(|&x| x as u64).product(),
            }
        }
        RandomKind::SemiQuasiHomogeneous => {
            let b: Vec<u32> = loop {
                let b: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=7)).collect();
                if b.iter().map(|&x| x - 1).product::<u32>() <= 60 {
                    break b;
                }
            };
            let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
            for (i, &bi) in b.iter().enumerate() {
                let mut exps = vec![0u32; n];
                exps[i] = bi;
                terms.push((Monomial::from_exponents(&exps).expect("small"), random_scalar(&mut rng, &domain)));
            }
            // Terms strictly above the Newton diagonal keep the Milnor number.
            let mut above: Vec<Monomial> = Vec::new();
            for d in 2..=7 {
                for m in monomials_of_degree(n, d) {
                    let w: f64 = m.exponents().iter().zip(&b).map(|(&e, &bi)| e as f64 / bi as f64).sum();
                    if w > 1.0 + 1e-9 {
                        above.push(m);
                    }
                }
            }
            let extra = rng.gen_range(1..=4);
            for _ in 0..extra {
                if above.is_empty() {
                    break;
                }
                let m = above[rng.gen_range(0..above.len())];
                terms.push((m, random_scalar(&mut rng, &domain)));
            }
            let f = Polynomial::from_terms(&ring, terms);
            let mu: u64 = b.iter().map(|&x| x as u64 - 1).product();
            RandomIdeal {
                kind,
                ideal: jacobian_ideal(&f, &domain, false),
                expected_vdim: Some(mu),
                vdim_bound: mu,
            }
        }
    }
}
