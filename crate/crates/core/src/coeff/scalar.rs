//! Runtime-typed coefficients: the ground field `K = Quot(A)` chosen by a
//! session, and the specialization maps `A -> k(p)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{is_prime, Coefficient, Field, Fp, ParamPoly, ParamSpace, RatFunc, MAX_PRIME};
use crate::ring::Polynomial;
use crate::semistd::SpecializationPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u64),
    #[error("duplicate parameter name `{0}`")]
    DuplicateParameter(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different coefficient domains")]
    MixedDomain,
    #[error("specialization failed: {0}")]
    SpecializationFailure(String),
}

/// Characteristic and parameter names of the ground field.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainSpec {
    characteristic: u32,
    parameters: Vec<String>,
    int_space: Arc<ParamSpace<BigInt>>,
    mod_space: Option<Arc<ParamSpace<Fp>>>,
}

impl DomainSpec {
    pub fn new(characteristic: u64, parameters: Vec<String>) -> Result<Self, CoeffError> {
        if characteristic != 0 && (characteristic >= MAX_PRIME || !is_prime(characteristic)) {
            return Err(CoeffError::BadCharacteristic(characteristic));
        }
        for (i, p) in parameters.iter().enumerate() {
            if parameters[..i].contains(p) {
                return Err(CoeffError::DuplicateParameter(p.clone()));
            }
        }
        let characteristic = characteristic as u32;
        let int_space = ParamSpace::new(parameters.clone(), BigInt::one());
        let mod_space =
            (characteristic != 0).then(|| ParamSpace::new(parameters.clone(), Fp::new(1, characteristic)));
        Ok(DomainSpec {
            characteristic,
            parameters,
            int_space,
            mod_space,
        })
    }

    pub fn rationals() -> Self {
        Self::new(0, Vec::new()).expect("valid")
    }

    pub fn prime_field(p: u32) -> Result<Self, CoeffError> {
        Self::new(p as u64, Vec::new())
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn has_parameters(&self) -> bool {
        !self.parameters.is_empty()
    }

    pub fn int_space(&self) -> &Arc<ParamSpace<BigInt>> {
        &self.int_space
    }

    pub fn mod_space(&self) -> Option<&Arc<ParamSpace<Fp>>> {
        self.mod_space.as_ref()
    }

    pub fn from_bigint(&self, v: BigInt) -> Scalar {
        match (self.characteristic, self.has_parameters()) {
            (0, false) => Scalar::Rational(BigRational::from_integer(v)),
            (0, true) => Scalar::Function(RatFunc::constant(&self.int_space, v)),
            (p, false) => Scalar::Modular(reduce_mod(&v, p)),
            (p, true) => Scalar::ModFunction(RatFunc::constant(
                self.mod_space.as_ref().expect("prime field"),
                reduce_mod(&v, p),
            )),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(BigInt::from(v))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// The parameter with the given index as a scalar.
    pub fn parameter(&self, index: usize) -> Scalar {
        match self.characteristic {
            0 => Scalar::Function(RatFunc::from_poly(ParamPoly::param(&self.int_space, index))),
            _ => Scalar::ModFunction(RatFunc::from_poly(ParamPoly::param(
                self.mod_space.as_ref().expect("prime field"),
                index,
            ))),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (s, self.characteristic, self.has_parameters()) {
            (Scalar::Rational(_), 0, false) => true,
            (Scalar::Modular(x), p, false) => x.modulus() == p,
            (Scalar::Function(f), 0, true) => f.space().names == self.parameters,
            (Scalar::ModFunction(f), p, true) => {
                f.space().names == self.parameters && f.space().one.modulus() == p
            }
            _ => false,
        }
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parameters.is_empty() {
            write!(f, "{}", self.characteristic)
        } else {
            write!(f, "({},{})", self.characteristic, self.parameters.join(","))
        }
    }
}

pub(crate) fn reduce_mod(v: &BigInt, p: u32) -> Fp {
    let r = v.mod_floor(&BigInt::from(p));
    Fp::new(i64::try_from(r).expect("residue fits"), p)
}

/// An element of one of the supported ground fields.
#[derive(Clone, PartialEq)]
pub enum Scalar {
    /// An element of `Q`.
    Rational(BigRational),
    /// An element of `F_p`.
    Modular(Fp),
    /// An element of `Q(t_1, ..., t_s)`.
    Function(RatFunc<BigInt>),
    /// An element of `F_p(t_1, ..., t_s)`.
    ModFunction(RatFunc<Fp>),
}

impl Scalar {
    pub fn same_domain(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Modular(a), Scalar::Modular(b)) => a.modulus() == b.modulus(),
            (Scalar::Function(a), Scalar::Function(b)) => a.space().names == b.space().names,
            (Scalar::ModFunction(a), Scalar::ModFunction(b)) => {
                a.space().names == b.space().names && a.space().one.modulus() == b.space().one.modulus()
            }
            _ => false,
        }
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Function(f) if f.denom().is_one() => f.numer().as_constant(),
            _ => None,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "Rational({q})"),
            Scalar::Modular(x) => write!(f, "{x:?}"),
            Scalar::Function(r) => write!(f, "{r:?}"),
            Scalar::ModFunction(r) => write!(f, "{r:?} mod {}", r.space().one.modulus()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular(x) => write!(f, "{x}"),
            Scalar::Function(r) => write!(f, "{r}"),
            Scalar::ModFunction(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! dispatch2 {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (Scalar::Rational($x), Scalar::Rational($y)) => Scalar::Rational($body),
            (Scalar::Modular($x), Scalar::Modular($y)) => Scalar::Modular($body),
            (Scalar::Function($x), Scalar::Function($y)) => Scalar::Function($body),
            (Scalar::ModFunction($x), Scalar::ModFunction($y)) => Scalar::ModFunction($body),
            _ => panic!("mixed coefficient domains"),
        }
    };
}

macro_rules! dispatch1 {
    ($a:expr, |$x:ident| $body:expr) => {
        match $a {
            Scalar::Rational($x) => Scalar::Rational($body),
            Scalar::Modular($x) => Scalar::Modular($body),
            Scalar::Function($x) => Scalar::Function($body),
            Scalar::ModFunction($x) => Scalar::ModFunction($body),
        }
    };
}

macro_rules! query {
    ($a:expr, |$x:ident| $body:expr) => {
        match $a {
            Scalar::Rational($x) => $body,
            Scalar::Modular($x) => $body,
            Scalar::Function($x) => $body,
            Scalar::ModFunction($x) => $body,
        }
    };
}

/// Mixing domains inside one polynomial is a construction bug; the checked
/// entry point for user-facing arithmetic is [`scalar_arith`].
impl Coefficient for Scalar {
    type Field = Scalar;
    const NORMALIZE_EACH_STEP: bool = false;

    fn is_zero(&self) -> bool {
        query!(self, |x| Coefficient::is_zero(x))
    }
    fn is_one(&self) -> bool {
        query!(self, |x| Coefficient::is_one(x))
    }
    fn zero_like(&self) -> Self {
        dispatch1!(self, |x| x.zero_like())
    }
    fn one_like(&self) -> Self {
        dispatch1!(self, |x| x.one_like())
    }
    fn int_like(&self, v: i64) -> Self {
        dispatch1!(self, |x| x.int_like(v))
    }
    fn add(&self, rhs: &Self) -> Self {
        dispatch2!(self, rhs, |x, y| x.add(y))
    }
    fn sub(&self, rhs: &Self) -> Self {
        dispatch2!(self, rhs, |x, y| x.sub(y))
    }
    fn mul(&self, rhs: &Self) -> Self {
        dispatch2!(self, rhs, |x, y| x.mul(y))
    }
    fn neg(&self) -> Self {
        dispatch1!(self, |x| x.neg())
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
        query!(self, |x| x.is_atomic())
    }
    fn is_negative(&self) -> bool {
        query!(self, |x| x.is_negative())
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(x) => x.inv().map(Scalar::Rational),
            Scalar::Modular(x) => x.inv().map(Scalar::Modular),
            Scalar::Function(x) => x.inv().map(Scalar::Function),
            Scalar::ModFunction(x) => x.inv().map(Scalar::ModFunction),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic on scalars.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, CoeffError> {
    if !a.same_domain(b) {
        return Err(CoeffError::MixedDomain);
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b).ok_or(CoeffError::DivisionByZero)?,
    })
}

/// Scales each polynomial by a nonzero element of `K` so that its
/// coefficients lie in `A` with no common factor. Zero polynomials are dropped.
pub fn clear_denominators(polys: &[Polynomial<Scalar>]) -> Vec<Polynomial<Scalar>> {
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(clear_one)
        .collect()
}

fn clear_one(p: &Polynomial<Scalar>) -> Polynomial<Scalar> {
    match p.coeffs()[0] {
        Scalar::Rational(_) => {
            let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| match c {
                Scalar::Rational(q) => acc.lcm(q.denom()),
                _ => unreachable!("uniform domain"),
            });
            let mut ints: Vec<BigInt> = p
                .coeffs()
                .iter()
                .map(|c| match c {
                    Scalar::Rational(q) => (q * BigRational::from_integer(l.clone())).to_integer(),
                    _ => unreachable!(),
                })
                .collect();
            BigInt::normalize(&mut ints);
            p.with_coeffs(ints.into_iter().map(|i| Scalar::Rational(BigRational::from_integer(i))).collect())
        }
        Scalar::Function(_) => {
            let fs: Vec<&RatFunc<BigInt>> = p
                .coeffs()
                .iter()
                .map(|c| match c {
                    Scalar::Function(f) => f,
                    _ => unreachable!("uniform domain"),
                })
                .collect();
            let nums = clear_function_denominators(&fs);
            p.with_coeffs(nums.into_iter().map(|n| Scalar::Function(RatFunc::from_poly(n))).collect())
        }
        Scalar::ModFunction(_) => {
            let fs: Vec<&RatFunc<Fp>> = p
                .coeffs()
                .iter()
                .map(|c| match c {
                    Scalar::ModFunction(f) => f,
                    _ => unreachable!("uniform domain"),
                })
                .collect();
            let nums = clear_function_denominators(&fs);
            p.with_coeffs(nums.into_iter().map(|n| Scalar::ModFunction(RatFunc::from_poly(n))).collect())
        }
        Scalar::Modular(_) => {
            let mut c = p.coeffs().to_vec();
            Scalar::normalize(&mut c);
            p.with_coeffs(c)
        }
    }
}

fn clear_function_denominators<B: super::GcdBase>(fs: &[&RatFunc<B>]) -> Vec<ParamPoly<B>> {
    let mut l = fs[0].denom().clone();
    for f in &fs[1..] {
        let g = l.gcd(f.denom());
        l = l.mul(&f.denom().div_exact_poly(&g).expect("gcd divides"));
    }
    let mut nums: Vec<ParamPoly<B>> = fs
        .iter()
        .map(|f| {
            f.numer()
                .mul(&l.div_exact_poly(f.denom()).expect("lcm is a multiple"))
        })
        .collect();
    ParamPoly::normalize_list(&mut nums);
    nums
}

/// Image of `s` under `A -> k(p)`: reduction modulo the prime, substitution
/// of the parameter point, or both.
pub fn specialize_scalar(s: &Scalar, pt: &SpecializationPoint) -> Result<Scalar, CoeffError> {
    let fail = |what: &str| CoeffError::SpecializationFailure(what.to_string());
    match s {
        Scalar::Rational(q) => match pt.prime {
            Some(p) => {
                let den = reduce_mod(q.denom(), p);
                let inv = den.inverse().ok_or_else(|| fail("denominator vanishes modulo p"))?;
                Ok(Scalar::Modular(reduce_mod(q.numer(), p).mul(&inv)))
            }
            None => Ok(s.clone()),
        },
        Scalar::Modular(_) => Ok(s.clone()),
        Scalar::Function(f) => {
            let point = pt.point.as_ref().ok_or_else(|| fail("parameter point missing"))?;
            if point.len() != f.space().names.len() {
                return Err(fail("parameter point has wrong length"));
            }
            let at: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
            let num = f.numer().eval(&at);
            let den = f.denom().eval(&at);
            match pt.prime {
                Some(p) => {
                    let inv = reduce_mod(&den, p)
                        .inverse()
                        .ok_or_else(|| fail("denominator vanishes at the point"))?;
                    Ok(Scalar::Modular(reduce_mod(&num, p).mul(&inv)))
                }
                None => {
                    if Zero::is_zero(&den) {
                        return Err(fail("denominator vanishes at the point"));
                    }
                    Ok(Scalar::Rational(BigRational::new(num, den)))
                }
            }
        }
        Scalar::ModFunction(f) => {
            let point = pt.point.as_ref().ok_or_else(|| fail("parameter point missing"))?;
            if point.len() != f.space().names.len() {
                return Err(fail("parameter point has wrong length"));
            }
            let p = f.space().one.modulus();
            let at: Vec<Fp> = point.iter().map(|&v| Fp::new(v, p)).collect();
            let inv = f
                .denom()
                .eval(&at)
                .inverse()
                .ok_or_else(|| fail("denominator vanishes at the point"))?;
            Ok(Scalar::Modular(f.numer().eval(&at).mul(&inv)))
        }
    }
}
