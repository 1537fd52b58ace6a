use std::cmp::Ordering;
use std::sync::Arc;

use hcstd::coeff::{scalar_arith, specialize_scalar, ArithOp, Coefficient, DomainSpec, Field, Fp, Scalar};
use hcstd::corner::{leading_ideal, TruncationBound};
use hcstd::mora::{standard_basis_raw, StdOptions};
use hcstd::ring::{parse_polynomial, truncate_poly, Monomial, OrderSpec, PolyRing, Polynomial};
use hcstd::semistd::SpecializationPoint;
use proptest::prelude::*;

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e).unwrap()
}

fn exps(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..6, n)
}

fn orders() -> impl Strategy<Value = OrderSpec> {
    prop_oneof![
        Just(OrderSpec::NegDegRevLex),
        Just(OrderSpec::NegDegLex),
        prop::collection::vec(1u32..4, 3).prop_map(OrderSpec::NegWeightedRevLex),
    ]
}

/// The ds comparison written out from its definition.
fn ds_by_definition(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return db.cmp(&da);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // The last differing entry of a - b negative means a is larger.
            return if a[i] < b[i] { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

proptest! {
    #[test]
    fn orderings_are_local_total_and_multiplicative(
        ord in orders(), a in exps(3), b in exps(3), c in exps(3), i in 0usize..3
    ) {
        let (a, b, c) = (mono(&a), mono(&b), mono(&c));
        prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
        prop_assert_eq!(ord.compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), ord.compare(&a, &b));
        prop_assert_eq!(ord.compare(&a, &a.times_var(i)), Ordering::Greater);
        if ord.compare(&a, &b) == Ordering::Greater && ord.compare(&b, &c) == Ordering::Greater {
            prop_assert_eq!(ord.compare(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn ds_matches_its_definition(a in exps(4), b in exps(4)) {
        prop_assert_eq!(OrderSpec::NegDegRevLex.compare(&mono(&a), &mono(&b)), ds_by_definition(&a, &b));
    }
}

const PRIMES: [u32; 5] = [2, 5, 101, 32003, 2147483629];

fn fp() -> impl Strategy<Value = Fp> {
    (0usize..PRIMES.len(), any::<i64>()).prop_map(|(i, v)| Fp::new(v, PRIMES[i]))
}

proptest! {
    #[test]
    fn prime_field_axioms(x in fp(), y in any::<i64>(), z in any::<i64>()) {
        let p = x.modulus();
        let (y, z) = (Fp::new(y, p), Fp::new(z, p));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert!(x.add(&x.neg()).is_zero());
        match x.inv() {
            Some(inv) => prop_assert!(x.mul(&inv).is_one()),
            None => prop_assert!(x.is_zero()),
        }
        if !y.is_zero() {
            let (a, b) = Fp::cancel(&x.add(&y.mul(&y)).add(&x.one_like()), &y);
            prop_assert!(!a.is_zero());
            prop_assert_eq!(a.mul(&x.add(&y.mul(&y)).add(&x.one_like())), b.mul(&y));
        }
    }
}

fn qt() -> DomainSpec {
    DomainSpec::new(0, vec!["t".into()]).unwrap()
}

/// `(a0 + a1 t + a2 t^2) / (b0 + b1 t)` in `Q(t)`, or a rational number.
fn function(d: DomainSpec) -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-9i64..10, 3), prop::collection::vec(-9i64..10, 2)).prop_filter_map(
        "nonzero denominator",
        move |(a, b)| {
            let t = if d.has_parameters() { d.parameter(0) } else { d.from_i64(3) };
            let poly = |cs: &[i64]| {
                cs.iter().rev().fold(d.zero(), |acc, &c| {
                    scalar_arith(&scalar_arith(&acc, &t, ArithOp::Mul).unwrap(), &d.from_i64(c), ArithOp::Add).unwrap()
                })
            };
            scalar_arith(&poly(&a), &poly(&b), ArithOp::Div).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn function_field_axioms(x in function(qt()), y in function(qt()), z in function(qt())) {
        let op = |a: &Scalar, b: &Scalar, o| scalar_arith(a, b, o).unwrap();
        prop_assert_eq!(op(&x, &y, ArithOp::Add), op(&y, &x, ArithOp::Add));
        prop_assert_eq!(op(&op(&x, &y, ArithOp::Mul), &z, ArithOp::Mul), op(&x, &op(&y, &z, ArithOp::Mul), ArithOp::Mul));
        prop_assert_eq!(
            op(&x, &op(&y, &z, ArithOp::Add), ArithOp::Mul),
            op(&op(&x, &y, ArithOp::Mul), &op(&x, &z, ArithOp::Mul), ArithOp::Add)
        );
        prop_assert!(op(&x, &x, ArithOp::Sub).is_zero());
        match scalar_arith(&y, &x, ArithOp::Div) {
            Ok(q) => prop_assert_eq!(op(&q, &x, ArithOp::Mul), y.clone()),
            Err(_) => prop_assert!(x.is_zero()),
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(
        x in function(qt()), y in function(qt()), v in -20i64..20, pi in 0usize..PRIMES.len()
    ) {
        for pt in [SpecializationPoint::new(None, Some(vec![v])), SpecializationPoint::new(Some(PRIMES[pi]), Some(vec![v]))] {
            for o in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul] {
                let (Ok(sx), Ok(sy)) = (specialize_scalar(&x, &pt), specialize_scalar(&y, &pt)) else { continue };
                let whole = scalar_arith(&x, &y, o).unwrap();
                let image = specialize_scalar(&whole, &pt);
                // A cancelled denominator can make the image defined when
                // the parts are not; the converse cannot happen.
                prop_assert_eq!(image.unwrap(), scalar_arith(&sx, &sy, o).unwrap());
            }
        }
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in function(DomainSpec::rationals()), b in function(DomainSpec::rationals()), pi in 0usize..PRIMES.len()) {
        let pt = SpecializationPoint::prime(PRIMES[pi]);
        if let (Ok(sa), Ok(sb)) = (specialize_scalar(&a, &pt), specialize_scalar(&b, &pt)) {
            let prod = scalar_arith(&a, &b, ArithOp::Mul).unwrap();
            prop_assert_eq!(specialize_scalar(&prod, &pt).unwrap(), scalar_arith(&sa, &sb, ArithOp::Mul).unwrap());
        }
    }
}

fn ring3(order: OrderSpec) -> Arc<PolyRing> {
    PolyRing::new(vec!["x".into(), "y".into(), "z".into()], order).unwrap()
}

fn poly(ring: Arc<PolyRing>, d: DomainSpec) -> impl Strategy<Value = Polynomial<Scalar>> {
    prop::collection::vec((exps(3), function(d)), 0..8).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(e, c)| (mono(&e), c)).collect();
        Polynomial::from_terms(&ring, terms)
    })
}

fn bounds() -> impl Strategy<Value = TruncationBound> {
    prop_oneof![
        Just(TruncationBound::NoBound),
        (0u64..12).prop_map(TruncationBound::DegreeBound),
        exps(3).prop_map(|e| TruncationBound::MonomialBound(mono(&e))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn truncation_is_idempotent_and_additive(
        f in poly(ring3(OrderSpec::NegDegRevLex), DomainSpec::rationals()),
        g in poly(ring3(OrderSpec::NegDegRevLex), DomainSpec::rationals()),
        b in bounds()
    ) {
        let tf = truncate_poly(&f, &b);
        prop_assert_eq!(truncate_poly(&tf, &b), tf.clone());
        prop_assert_eq!(truncate_poly(&f.add(&g), &b), tf.add(&truncate_poly(&g, &b)));
        let order = f.ring().order().clone();
        prop_assert!(tf.monomials().iter().all(|m| b.keeps(m, &order)));
    }

    #[test]
    fn printed_polynomials_parse_back(
        f in poly(ring3(OrderSpec::NegDegRevLex), DomainSpec::rationals()),
        g in poly(ring3(OrderSpec::NegDegLex), qt()),
        h in poly(ring3(OrderSpec::NegDegRevLex), DomainSpec::prime_field(32003).unwrap()),
    ) {
        let back = |p: &Polynomial<Scalar>, d: &DomainSpec| parse_polynomial(&p.to_string(), p.ring(), d).unwrap();
        prop_assert_eq!(back(&f, &DomainSpec::rationals()), f.clone());
        prop_assert_eq!(back(&g, &qt()), g.clone());
        let fp = DomainSpec::prime_field(32003).unwrap();
        prop_assert_eq!(back(&h, &fp), h.clone());
    }
}

/// Pure powers plus random higher terms over `F_32003`: zero-dimensional.
fn zero_dim_gens() -> impl Strategy<Value = Vec<Polynomial<Fp>>> {
    let ring = ring3(OrderSpec::NegDegRevLex);
    (prop::collection::vec(2u32..5, 3), prop::collection::vec((exps(3), 1i64..32003), 3..9)).prop_map(
        move |(a, extra)| {
            let p = 32003;
            let mut gens: Vec<Vec<(Monomial, Fp)>> = (0..3)
                .map(|i| {
                    let mut e = vec![0u32; 3];
                    e[i] = a[i];
                    vec![(mono(&e), Fp::new(1, p))]
                })
                .collect();
            for (k, (e, c)) in extra.into_iter().enumerate() {
                let m = mono(&e);
                let i = k % 3;
                if m.degree() > gens[i][0].0.degree() {
                    gens[i].push((m, Fp::new(c, p)));
                }
            }
            gens.into_iter().map(|t| Polynomial::from_terms(&ring, t)).collect()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn leading_ideal_ignores_generator_order_and_scaling(
        gens in zero_dim_gens(), perm in any::<u64>(), scale in prop::collection::vec(1i64..32003, 3)
    ) {
        let opts = StdOptions { dynamic_corner: true, ..StdOptions::default() };
        let base = leading_ideal(&standard_basis_raw(&gens, &opts).unwrap());
        let mut other: Vec<Polynomial<Fp>> = gens
            .iter()
            .zip(&scale)
            .map(|(g, &s)| g.scale(&Fp::new(s, 32003)))
            .collect();
        other.rotate_left((perm % 3) as usize);
        if perm % 2 == 1 {
            other.swap(0, 1);
        }
        let again = leading_ideal(&standard_basis_raw(&other, &opts).unwrap());
        prop_assert_eq!(base.generators(), again.generators());
        prop_assert!(base.is_zero_dimensional());
    }
}
