use std::fmt;
use std::sync::Arc;

use super::{Coefficient, Field, GcdBase, ParamPoly, ParamSpace};

/// Quotient of parameter polynomials, kept gcd-reduced with a normalized
/// denominator. Over `Z` the pair is jointly content-free.
#[derive(Clone, PartialEq)]
pub struct RatFunc<B: GcdBase> {
    num: ParamPoly<B>,
    den: ParamPoly<B>,
}

impl<B: GcdBase> RatFunc<B> {
    /// Builds `num / den`; `None` when `den` is zero.
    pub fn new(num: ParamPoly<B>, den: ParamPoly<B>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            let one = den.one_like();
            return Some(RatFunc { num, den: one });
        }
        if den.is_one() {
            return Some(RatFunc { num, den });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact_poly(&g).expect("gcd divides"),
                den.div_exact_poly(&g).expect("gcd divides"),
            )
        };
        let u = den.lead_coeff().expect("nonzero").unit_normal();
        if !u.is_one() {
            num = num.scale(&u);
            den = den.scale(&u);
        }
        Some(RatFunc { num, den })
    }

    pub fn from_poly(num: ParamPoly<B>) -> Self {
        let den = num.one_like();
        RatFunc { num, den }
    }

    pub fn constant(space: &Arc<ParamSpace<B>>, c: B) -> Self {
        Self::from_poly(ParamPoly::constant(space, c))
    }

    pub fn numer(&self) -> &ParamPoly<B> {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly<B> {
        &self.den
    }

    pub fn space(&self) -> &Arc<ParamSpace<B>> {
        self.num.space()
    }
}

impl<B: GcdBase> fmt::Debug for RatFunc<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl<B: GcdBase> fmt::Display for RatFunc<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let den = self.den.to_string();
        if den.contains(['*', '+', '-', '/']) {
            write!(f, "/({den})")
        } else {
            write!(f, "/{den}")
        }
    }
}

impl<B: GcdBase> Coefficient for RatFunc<B> {
    type Field = RatFunc<B>;
    const NORMALIZE_EACH_STEP: bool = false;

    fn size(&self) -> u64 {
        self.numer().size() + self.denom().size()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn zero_like(&self) -> Self {
        Self::from_poly(self.num.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::from_poly(self.num.one_like())
    }
    fn int_like(&self, v: i64) -> Self {
        Self::from_poly(self.num.int_like(v))
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero");
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::new(num, self.den.mul(&rhs.den)).expect("nonzero")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn cancel(x: &Self, y: &Self) -> (Self, Self) {
        (x.one_like(), x.div(y).expect("nonzero divisor"))
    }
    fn normalize(coeffs: &mut [Self]) {
        super::make_monic(coeffs);
    }
    fn to_field(&self) -> Self {
        self.clone()
    }
    fn is_atomic(&self) -> bool {
        self.num.is_atomic() && self.den.is_constant()
    }
    fn is_negative(&self) -> bool {
        self.is_atomic() && self.num.is_negative()
    }
}

impl<B: GcdBase> Field for RatFunc<B> {
    fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    #[test]
    fn fraction_cancellation() {
        let sp = ParamSpace::new(vec!["t".into()], BigInt::from(1));
        let t = ParamPoly::param(&sp, 0);
        let one = t.one_like();
        let a = RatFunc::new(t.clone(), t.add(&one)).unwrap();
        let b = RatFunc::new(t.add(&one), t.clone()).unwrap();
        assert!(a.mul(&b).is_one());
        assert_eq!(a.to_string(), "t/(t+1)");
    }

    #[test]
    fn normalized_denominator_and_content() {
        let sp = ParamSpace::new(vec!["t".into()], BigInt::from(1));
        let t = ParamPoly::param(&sp, 0);
        let k = |v: i64| ParamPoly::constant(&sp, BigInt::from(v));
        // (2t) / (-4t^2) = -1/(2t)
        let r = RatFunc::new(t.mul(&k(2)), t.mul(&t).mul(&k(-4))).unwrap();
        assert_eq!(r.numer(), &k(-1));
        assert_eq!(r.denom(), &t.mul(&k(2)));
        assert_eq!(r.to_string(), "-1/(2*t)");
        // 1/2 is atomic
        let h = RatFunc::new(k(1), k(2)).unwrap();
        assert!(h.is_atomic());
        assert_eq!(h.to_string(), "1/2");
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let sp = ParamSpace::new(vec!["t".into()], BigInt::from(1));
        let t = ParamPoly::param(&sp, 0);
        assert!(RatFunc::new(t.clone(), t.zero_like()).is_none());
        assert!(RatFunc::from_poly(t.zero_like()).inv().is_none());
    }
}
