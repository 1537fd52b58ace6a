//! Exact coefficient domains.
//!
//! The basis engine never divides in the hot loop. It works over a
//! coefficient *ring* `A` (integers, parameter polynomials, or a prime
//! field) and cancels leading terms fraction-free, keeping polynomials
//! content-free. [`Coefficient::Field`] names the fraction field that
//! final, monic output lives in.

mod fp;
mod integer;
mod param;
mod ratfunc;
mod scalar;

use std::fmt;

pub use fp::{is_prime, Fp, MAX_PRIME};
pub use param::{GcdBase, ParamPoly, ParamSpace};
pub use ratfunc::RatFunc;
pub use scalar::{
    clear_denominators, scalar_arith, specialize_scalar, ArithOp, CoeffError, DomainSpec, Scalar,
};

/// An element of an exact integral domain usable as a polynomial coefficient.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Fraction field of the domain.
    type Field: Field;

    /// Whether polynomials should have their content divided out after
    /// every reduction step. True for domains where coefficients grow.
    const NORMALIZE_EACH_STEP: bool;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, v: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// For nonzero `x`, `y` returns `(a, b)` with `a*x == b*y` and `a != 0`,
    /// keeping both factors as small as the domain allows.
    fn cancel(x: &Self, y: &Self) -> (Self, Self);

    /// Rescales a coefficient list (leading coefficient first) by a unit of
    /// the fraction field so that it is content-free with normalized
    /// leading coefficient.
    fn normalize(coeffs: &mut [Self]);

    fn to_field(&self) -> Self::Field;

    /// True when the printed form is a plain (possibly signed) number.
    fn is_atomic(&self) -> bool {
        true
    }

    /// True when the printed form starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }

    /// Rough storage size, used to prefer reducers with small coefficients.
    fn size(&self) -> u64 {
        1
    }
}

/// A coefficient domain that is a field.
pub trait Field: Coefficient<Field = Self> {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

/// Makes a coefficient list monic over a field.
pub(crate) fn make_monic<F: Field>(coeffs: &mut [F]) {
    let Some(lc) = coeffs.first() else { return };
    if lc.is_one() {
        return;
    }
    let inv = lc.inv().expect("leading coefficient is nonzero");
    for c in coeffs.iter_mut() {
        *c = c.mul(&inv);
    }
}
