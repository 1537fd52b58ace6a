use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SemiStdError;
use crate::coeff::{is_prime, DomainSpec, MAX_PRIME};

/// Primes tried first, in order, before switching to seeded random primes.
pub const PRIME_SCHEDULE: [u32; 6] = [32003, 320039, 1000003, 2147483629, 7, 65537];

/// Random parameter points are drawn from `[-POINT_RANGE, POINT_RANGE]^s`.
pub const POINT_RANGE: i64 = 50;

/// A prime ideal of the coefficient ring: reduction modulo `prime`,
/// substitution of `point` for the parameters, or both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecializationPoint {
    pub prime: Option<u32>,
    pub point: Option<Vec<i64>>,
    pub attempt: usize,
}

impl SpecializationPoint {
    pub fn new(prime: Option<u32>, point: Option<Vec<i64>>) -> Self {
        SpecializationPoint {
            prime,
            point,
            attempt: 0,
        }
    }

    pub fn prime(p: u32) -> Self {
        Self::new(Some(p), None)
    }

    fn same_place(&self, other: &SpecializationPoint) -> bool {
        self.prime == other.prime && self.point == other.point
    }
}

impl fmt::Display for SpecializationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(p) = self.prime {
            parts.push(format!("p={p}"));
        }
        if let Some(pt) = &self.point {
            let vals: Vec<String> = pt.iter().map(|v| v.to_string()).collect();
            parts.push(format!("point=({})", vals.join(",")));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// User-supplied choices that take precedence over the schedule.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointOverride {
    /// Attempt `i` uses `primes[i]` when present.
    pub primes: Vec<u32>,
    /// Parameter values for attempt 0.
    pub point: Option<Vec<i64>>,
}

impl PointOverride {
    pub fn validate(&self, domain: &DomainSpec) -> Result<(), SemiStdError> {
        for &p in &self.primes {
            if !is_prime(p as u64) || p as u64 >= MAX_PRIME {
                return Err(SemiStdError::Config(format!("{p} is not a prime below 2^31")));
            }
            if domain.characteristic() != 0 {
                return Err(SemiStdError::Config(
                    "a prime can only be chosen in characteristic 0".into(),
                ));
            }
        }
        if let Some(pt) = &self.point {
            if pt.len() != domain.parameters().len() {
                return Err(SemiStdError::Config(format!(
                    "point has {} values but there are {} parameters",
                    pt.len(),
                    domain.parameters().len()
                )));
            }
        }
        Ok(())
    }
}

fn rng_for(seed: u64, attempt: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ attempt as u64)
}

/// The first `count` specialization points, deterministic in `seed`.
/// No point repeats an earlier one.
pub fn specialization_sequence(
    domain: &DomainSpec,
    count: usize,
    seed: u64,
    user: &PointOverride,
) -> Vec<SpecializationPoint> {
    let needs_prime = domain.characteristic() == 0;
    let s = domain.parameters().len();
    let mut out: Vec<SpecializationPoint> = Vec::with_capacity(count);
    for attempt in 0..count {
        let mut rng = rng_for(seed, attempt);
        let mut prime = if !needs_prime {
            None
        } else if let Some(&p) = user.primes.get(attempt) {
            Some(p)
        } else {
            let used: Vec<u32> = out.iter().filter_map(|p| p.prime).collect();
            let fresh = PRIME_SCHEDULE.iter().copied().find(|p| !used.contains(p));
            Some(fresh.unwrap_or_else(|| loop {
                let c = rng.gen_range((1u32 << 20)..(MAX_PRIME as u32));
                if is_prime(c as u64) && !used.contains(&c) {
                    break c;
                }
            }))
        };
        let point = if s == 0 {
            None
        } else if attempt == 0 {
            Some(user.point.clone().unwrap_or_else(|| vec![1; s]))
        } else if needs_prime {
            // A fresh prime already makes the place new.
            Some(random_point(&mut rng, s))
        } else {
            // Bounded so a tiny point box cannot loop forever.
            let mut pt = random_point(&mut rng, s);
            for _ in 0..10_000 {
                if !out.iter().any(|o| o.point.as_ref() == Some(&pt)) {
                    break;
                }
                pt = random_point(&mut rng, s);
            }
            Some(pt)
        };
        let mut sp = SpecializationPoint {
            prime: prime.take(),
            point,
            attempt,
        };
        while needs_prime && out.iter().any(|o| o.same_place(&sp)) {
            // Only reachable with repeated user primes; draw a new prime.
            let c = rng.gen_range((1u32 << 20)..(MAX_PRIME as u32));
            if is_prime(c as u64) {
                sp.prime = Some(c);
            }
        }
        out.push(sp);
    }
    out
}

fn random_point(rng: &mut ChaCha8Rng, s: usize) -> Vec<i64> {
    (0..s).map(|_| rng.gen_range(-POINT_RANGE..=POINT_RANGE)).collect()
}

/// The specialization point for `attempt`.
pub fn choose_specialization(
    domain: &DomainSpec,
    attempt: usize,
    seed: u64,
    user: &PointOverride,
    max_retries: usize,
) -> Result<SpecializationPoint, SemiStdError> {
    if attempt > max_retries {
        return Err(SemiStdError::ExhaustedRetries(max_retries));
    }
    let mut seq = specialization_sequence(domain, attempt + 1, seed, user);
    Ok(seq.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let q = DomainSpec::rationals();
        let none = PointOverride::default();
        let p0 = choose_specialization(&q, 0, 100, &none, 5).unwrap();
        assert_eq!(p0.prime, Some(32003));
        assert_eq!(p0.point, None);
        let p1 = choose_specialization(&q, 1, 100, &none, 5).unwrap();
        assert_ne!(p1.prime, Some(32003));
        assert!(PRIME_SCHEDULE.contains(&p1.prime.unwrap()));

        let fpt = DomainSpec::new(32003, vec!["t".into()]).unwrap();
        let t0 = choose_specialization(&fpt, 0, 100, &none, 5).unwrap();
        assert_eq!(t0.prime, None);
        assert_eq!(t0.point, Some(vec![1]));
    }

    #[test]
    fn no_repeats_and_determinism() {
        let d = DomainSpec::new(0, vec!["s".into(), "t".into()]).unwrap();
        let user = PointOverride::default();
        let a = specialization_sequence(&d, 12, 7, &user);
        let b = specialization_sequence(&d, 12, 7, &user);
        assert_eq!(a, b);
        for (i, x) in a.iter().enumerate() {
            assert_eq!(x.attempt, i);
            assert!(is_prime(x.prime.unwrap() as u64));
            for y in &a[..i] {
                assert!(!x.same_place(y));
            }
        }
        let fp = DomainSpec::new(5, vec!["t".into()]).unwrap();
        let pts = specialization_sequence(&fp, 30, 1, &user);
        for (i, x) in pts.iter().enumerate() {
            for y in &pts[..i] {
                assert_ne!(x.point, y.point);
            }
        }
    }

    #[test]
    fn overrides() {
        let q = DomainSpec::rationals();
        let user = PointOverride {
            primes: vec![5, 7],
            point: None,
        };
        let seq = specialization_sequence(&q, 3, 0, &user);
        assert_eq!(seq[0].prime, Some(5));
        assert_eq!(seq[1].prime, Some(7));
        assert_eq!(seq[2].prime, Some(32003));
        assert!(choose_specialization(&q, 6, 0, &user, 5).is_err());
        let bad = PointOverride {
            primes: vec![9],
            point: None,
        };
        assert!(bad.validate(&q).is_err());
    }
}
