use std::fmt;

use super::{Coefficient, Field};

/// Largest admissible characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// Deterministic Miller-Rabin with bases 2, 3, 5, 7; exact for `n < 3_215_031_751`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Residue modulo a prime `p < 2^31`, stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    /// Reduces a signed integer modulo `p`. The caller guarantees `p` is prime.
    pub fn new(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        Fp {
            value: value.rem_euclid(m) as u32,
            modulus,
        }
    }

    pub fn from_u64(value: u64, modulus: u32) -> Self {
        Fp {
            value: (value % modulus as u64) as u32,
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    fn same(self, rhs: Fp) -> u64 {
        debug_assert_eq!(self.modulus, rhs.modulus, "mixed prime fields");
        self.modulus as u64
    }

    pub fn inverse(self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Fp::new(t0, self.modulus))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl Coefficient for Fp {
    type Field = Fp;
    const NORMALIZE_EACH_STEP: bool = false;

    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus)
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.modulus)
    }
    fn int_like(&self, v: i64) -> Self {
        Fp::new(v, self.modulus)
    }
    fn add(&self, rhs: &Self) -> Self {
        let p = self.same(*rhs);
        let s = self.value as u64 + rhs.value as u64;
        Fp {
            value: if s >= p { (s - p) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let p = self.same(*rhs);
        let s = self.value as u64 + p - rhs.value as u64;
        Fp {
            value: if s >= p { (s - p) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let p = self.same(*rhs);
        Fp {
            value: ((self.value as u64 * rhs.value as u64) % p) as u32,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }
    fn cancel(x: &Self, y: &Self) -> (Self, Self) {
        (x.one_like(), x.mul(&y.inverse().expect("nonzero divisor")))
    }
    fn normalize(coeffs: &mut [Self]) {
        super::make_monic(coeffs);
    }
    fn to_field(&self) -> Fp {
        *self
    }
    fn is_negative(&self) -> bool {
        self.symmetric() < 0
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        for p in [32003, 320039, 1000003, 2147483629, 65537] {
            assert!(is_prime(p), "{p}");
        }
        assert!(!is_prime(561));
        assert!(!is_prime(1 << 31));
    }

    #[test]
    fn arithmetic_mod_five() {
        let a = Fp::new(3, 5);
        let b = Fp::new(4, 5);
        assert_eq!(a.mul(&b), Fp::new(2, 5));
        assert_eq!(a.add(&b), Fp::new(2, 5));
        assert_eq!(a.sub(&b), Fp::new(4, 5));
        assert_eq!(b.inverse().unwrap().mul(&b), Fp::new(1, 5));
        assert_eq!(Fp::new(0, 5).inverse(), None);
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        let p = 2147483629u32;
        let a = Fp::new(p as i64 - 1, p);
        assert_eq!(a.mul(&a), Fp::new(1, p));
        assert_eq!(a.add(&a), Fp::new(-2, p));
        assert_eq!(a.inverse().unwrap(), a);
    }
}
