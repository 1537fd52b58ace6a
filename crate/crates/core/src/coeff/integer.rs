use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::reduce_mod;
use super::{Coefficient, Field, Fp, GcdBase};

impl Coefficient for BigInt {
    type Field = BigRational;
    const NORMALIZE_EACH_STEP: bool = true;

    fn size(&self) -> u64 {
        self.bits()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn int_like(&self, v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cancel(x: &Self, y: &Self) -> (Self, Self) {
        let g = Integer::gcd(x, y);
        let (mut a, mut b) = (y / &g, x / &g);
        if Signed::is_negative(&a) {
            a = -a;
            b = -b;
        }
        (a, b)
    }
    fn normalize(coeffs: &mut [Self]) {
        let Some(first) = coeffs.first() else { return };
        let mut g = first.abs();
        for c in coeffs.iter().skip(1) {
            if One::is_one(&g) {
                break;
            }
            g = Integer::gcd(&g, c);
        }
        let flip = Signed::is_negative(first);
        if One::is_one(&g) && !flip {
            return;
        }
        if flip {
            g = -g;
        }
        for c in coeffs.iter_mut() {
            *c = &*c / &g;
        }
    }
    fn to_field(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl GcdBase for BigInt {
    fn image_mod(&self, p: u32) -> Option<Fp> {
        Some(reduce_mod(self, p))
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn unit_normal(&self) -> Self {
        if Signed::is_negative(self) {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

impl Coefficient for BigRational {
    type Field = BigRational;
    const NORMALIZE_EACH_STEP: bool = false;

    fn size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn int_like(&self, v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cancel(x: &Self, y: &Self) -> (Self, Self) {
        (BigRational::one(), x / y)
    }
    fn normalize(coeffs: &mut [Self]) {
        super::make_monic(coeffs);
    }
    fn to_field(&self) -> BigRational {
        self.clone()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
