use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::laurent::{fmt_rational, LaurentPoly};
use super::monomial::Var;
use super::ratfunc::RationalFunction;
use super::{CoeffError, Result};

/// An element of `Z/pZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        let v = value.rem_euclid(p as i64) as u64;
        Fp { value: v, p }
    }

    pub fn from_bigint(value: &BigInt, p: u64) -> Self {
        let r = value.mod_floor(&BigInt::from(p));
        Fp {
            value: r.to_u64().expect("reduced residue fits"),
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn add(self, o: Fp) -> Fp {
        Fp {
            value: ((self.value as u128 + o.value as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }

    fn mul(self, o: Fp) -> Fp {
        Fp {
            value: ((self.value as u128 * o.value as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }

    fn neg(self) -> Fp {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut acc = Fp {
            value: 1 % self.p,
            p: self.p,
        };
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Result<Fp> {
        if self.value == 0 {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(self.pow(self.p - 2))
    }
}

/// Which exact field a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldContext {
    /// Rational functions in the variable alphabet over `Q`.
    RationalFunctions,
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldContext {
    pub fn prime(p: u64) -> Result<Self> {
        // keeps products below 2^64 after widening to u128
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(FieldContext::PrimeField(p))
    }

    pub fn name(&self) -> String {
        match self {
            FieldContext::RationalFunctions => "Q(vars)".into(),
            FieldContext::Rationals => "Q".into(),
            FieldContext::PrimeField(p) => format!("F_{p}"),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldContext::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> Scalar {
        match self {
            FieldContext::RationalFunctions => Scalar::Rf(RationalFunction::from_int(c)),
            FieldContext::Rationals => Scalar::Q(BigRational::from_integer(c.into())),
            FieldContext::PrimeField(p) => Scalar::Fp(Fp::new(c, *p)),
        }
    }

    pub fn from_rational(&self, c: &BigRational) -> Result<Scalar> {
        Ok(match self {
            FieldContext::RationalFunctions => Scalar::Rf(RationalFunction::from_laurent(
                LaurentPoly::constant(c.clone()),
            )),
            FieldContext::Rationals => Scalar::Q(c.clone()),
            FieldContext::PrimeField(p) => {
                let den = Fp::from_bigint(c.denom(), *p);
                let inv = den
                    .inv()
                    .map_err(|_| CoeffError::NotRepresentable(fmt_rational(c), self.name()))?;
                Scalar::Fp(Fp::from_bigint(c.numer(), *p).mul(inv))
            }
        })
    }

    /// The formal variable `v`; only the rational function field has variables.
    pub fn var(&self, v: Var) -> Result<Scalar> {
        match self {
            FieldContext::RationalFunctions => Ok(Scalar::Rf(RationalFunction::from_laurent(
                LaurentPoly::var(v),
            ))),
            _ => Err(CoeffError::NotRepresentable(v.to_string(), self.name())),
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        x.context() == *self
    }
}

/// An element of the active exact field, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rf(RationalFunction),
    Q(BigRational),
    Fp(Fp),
}

impl Scalar {
    pub fn context(&self) -> FieldContext {
        match self {
            Scalar::Rf(_) => FieldContext::RationalFunctions,
            Scalar::Q(_) => FieldContext::Rationals,
            Scalar::Fp(x) => FieldContext::PrimeField(x.p),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Scalar {
        Scalar::Rf(RationalFunction::from_laurent(p))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rf(x) => x.is_zero(),
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rf(x) => x.is_one(),
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(x) => x.value == 1,
        }
    }

    /// True for cheap units: nonzero constants and single-term Laurent monomials.
    pub fn is_monomial_unit(&self) -> bool {
        match self {
            Scalar::Rf(x) => x.as_laurent().is_some_and(|p| p.len() == 1),
            _ => !self.is_zero(),
        }
    }

    pub fn as_rational_function(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Rf(x) => Some(x),
            _ => None,
        }
    }

    /// The value as a rational number, if it is a constant of characteristic 0.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rf(x) => x.as_constant(),
            Scalar::Q(x) => Some(x.clone()),
            Scalar::Fp(_) => None,
        }
    }

    fn mismatch(&self, other: &Scalar) -> CoeffError {
        CoeffError::ContextMismatch(self.context().name(), other.context().name())
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (self, rhs) {
            (Scalar::Rf(a), Scalar::Rf(b)) => Scalar::Rf(a.add(b)),
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) if a.p == b.p => Scalar::Fp(a.add(*b)),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_add(&rhs.neg_ref())
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (self, rhs) {
            (Scalar::Rf(a), Scalar::Rf(b)) => Scalar::Rf(a.mul(b)),
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) if a.p == b.p => Scalar::Fp(a.mul(*b)),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if self.context() != rhs.context() {
            return Err(self.mismatch(rhs));
        }
        self.try_mul(&rhs.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rf(a) => Scalar::Rf(a.neg()),
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        Ok(match self {
            Scalar::Rf(a) => Scalar::Rf(a.inv()?),
            Scalar::Q(a) => {
                if a.is_zero() {
                    return Err(CoeffError::DivisionByZero);
                }
                Scalar::Q(a.recip())
            }
            Scalar::Fp(a) => Scalar::Fp(a.inv()?),
        })
    }

    pub fn pow(&self, k: i32) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(match base {
            Scalar::Rf(a) => Scalar::Rf(a.pow(e as i32)?),
            Scalar::Q(a) => Scalar::Q(num_traits::pow(a, e as usize)),
            Scalar::Fp(a) => Scalar::Fp(a.pow(e as u64)),
        })
    }

    /// Image under the ring homomorphism sending each assigned variable to its
    /// value in `target` and constants to their images in `target`.
    pub fn specialize(&self, assignment: &[(Var, Scalar)], target: FieldContext) -> Result<Scalar> {
        for (_, img) in assignment {
            if img.context() != target {
                return Err(CoeffError::ContextMismatch(
                    img.context().name(),
                    target.name(),
                ));
            }
        }
        match self {
            Scalar::Rf(x) => {
                let num = eval_laurent(x.numer(), assignment, target)?;
                let den = eval_laurent(x.denom(), assignment, target)?;
                if den.is_zero() {
                    return Err(CoeffError::VanishingDenominator);
                }
                num.try_div(&den)
            }
            Scalar::Q(c) => target.from_rational(c),
            Scalar::Fp(a) => match target {
                FieldContext::PrimeField(p) if p == a.p => Ok(self.clone()),
                _ => Err(CoeffError::NotRepresentable(
                    self.to_string(),
                    target.name(),
                )),
            },
        }
    }
}

fn eval_laurent(
    p: &LaurentPoly,
    assignment: &[(Var, Scalar)],
    target: FieldContext,
) -> Result<Scalar> {
    let lookup = |v: Var| {
        assignment
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, s)| s)
            .ok_or(CoeffError::UnassignedVariable(v))
    };
    let mut acc = target.zero();
    for (m, c) in p.terms() {
        let mut t = target.from_rational(c)?;
        for v in m.vars() {
            let img = lookup(v)?;
            let e = m.exp(v);
            if e < 0 && img.is_zero() {
                return Err(CoeffError::VanishingDenominator);
            }
            t = t.try_mul(&img.pow(e)?)?;
        }
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rf(x) => write!(f, "{x}"),
            Scalar::Q(x) => f.write_str(&fmt_rational(x)),
            Scalar::Fp(x) => write!(f, "{}", x.value),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The quantum characteristic of a parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuantumE {
    Finite(u64),
    Infinite,
}

impl fmt::Display for QuantumE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuantumE::Finite(e) => write!(f, "{e}"),
            QuantumE::Infinite => f.write_str("inf"),
        }
    }
}

/// Smallest `e >= 1` with `1 + q + ... + q^(e-1) = 0`.
///
/// In characteristic zero the only rational root of unity other than `1` is
/// `-1`, so the answer is `2` for `q = -1` and infinite otherwise. Over `F_p`
/// the partial sums are periodic with period dividing `p * ord(q)`.
pub fn quantum_e(q: &Scalar) -> QuantumE {
    match q {
        Scalar::Fp(x) => {
            let p = x.p;
            let one = Fp::new(1, p);
            let mut sum = Fp::new(0, p);
            let mut power = one;
            for e in 1..=p.saturating_mul(p) {
                sum = sum.add(power);
                if sum.value == 0 {
                    return QuantumE::Finite(e);
                }
                power = power.mul(*x);
            }
            QuantumE::Infinite
        }
        _ => match q.as_rational() {
            Some(c) if c == -BigRational::one() => QuantumE::Finite(2),
            _ => QuantumE::Infinite,
        },
    }
}
