use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ipoly::{self, Exps, IntPoly};
use super::laurent::LaurentPoly;
use super::monomial::{Monomial, NVARS};
use super::{CoeffError, Result};

/// A quotient of Laurent polynomials in canonical form.
///
/// Invariants: the denominator is an ordinary polynomial with no monomial
/// factor, integer coefficients of content 1 and a positive graded-lex leading
/// coefficient; numerator and denominator are coprime. Any monomial or rational
/// scaling lives in the numerator. Two equal values therefore have identical
/// fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Splits `p` as `shift * content * prim` with `prim` an ordinary primitive
/// integer polynomial not divisible by any variable.
fn split(p: &LaurentPoly) -> (Monomial, BigRational, IntPoly) {
    let shift = p.min_exponents();
    let lcm = p.denominator_lcm();
    let ip = IntPoly::from_terms(p.terms().map(|(m, c)| {
        let mut e: Exps = [0; NVARS];
        for (x, (a, b)) in e.iter_mut().zip(m.0.iter().zip(shift.0)) {
            *x = (a - b) as u32;
        }
        (e, (c * BigRational::from_integer(lcm.clone())).to_integer())
    }));
    let g = ip.int_content();
    let prim = ip.div_int(&g);
    (shift, BigRational::new(g, lcm), prim)
}

fn join(shift: &Monomial, content: &BigRational, prim: &IntPoly) -> LaurentPoly {
    LaurentPoly::from_terms(prim.terms().map(|(e, c)| {
        let mut m = [0i32; NVARS];
        for (x, (a, b)) in m.iter_mut().zip(e.iter().zip(shift.0)) {
            *x = *a as i32 + b;
        }
        (Monomial(m), content * BigRational::from_integer(c.clone()))
    }))
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Brings `num / den` to canonical form.
    pub fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_one() {
            return Ok(Self::from_laurent(num));
        }
        if let Some((m, c)) = den.as_monomial() {
            let num = num.shift(&m.inv()).scale(&c.recip());
            return Ok(Self::from_laurent(num));
        }
        let (sd, cd, pd) = split(&den);
        let (sn, cn, pn) = split(&num);
        let (pn, pd) = if pn.is_constant() {
            (pn, pd)
        } else {
            let g = ipoly::gcd(&pn, &pd);
            (
                pn.exact_div(&g).expect("gcd divides"),
                pd.exact_div(&g).expect("gcd divides"),
            )
        };
        let shift = sn.mul(&sd.inv());
        let mut num = join(&shift, &(cn / cd), &pn);
        let mut den = join(&Monomial::ONE, &BigRational::one(), &pd);
        if !den.leading_coeff_positive() {
            num = -num;
            den = -den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_laurent().and_then(|p| p.as_constant())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Self::from_laurent(num);
            }
            return Self::canonicalize(num, self.den.clone()).expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::canonicalize(num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(&self.num * &rhs.num);
        }
        Self::canonicalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Self::canonicalize(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        if base.den.is_one() {
            return Ok(Self::from_laurent(base.num.pow(e)));
        }
        // coprime stays coprime under powers
        let mut num = base.num.pow(e);
        let mut den = base.den.pow(e);
        if !den.leading_coeff_positive() {
            num = -num;
            den = -den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_laurent(LaurentPoly::constant(BigRational::from_integer(c)))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl std::ops::Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Var;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }
    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::from_int(k)
    }

    #[test]
    fn cancels_common_factor() {
        let q = v(Var::Q);
        let r = RationalFunction::canonicalize(&q.pow(2) - &c(1), &q - &c(1)).unwrap();
        assert_eq!(r, RationalFunction::from_laurent(&q + &c(1)));
    }

    #[test]
    fn factors_out_laurent_and_polynomial_parts() {
        let (q1, q2) = (v(Var::Q1), v(Var::Q2));
        let num = &(&q1 * &q2) + &(&q1.pow(2) * &q2);
        let r = RationalFunction::canonicalize(num, &c(1) + &q1).unwrap();
        assert_eq!(r, RationalFunction::from_laurent(&q1 * &q2));
        assert!(r.denom().is_one());
    }

    #[test]
    fn zero_numerator() {
        let q = v(Var::Q);
        let r = RationalFunction::canonicalize(LaurentPoly::zero(), &q - &c(1)).unwrap();
        assert!(r.is_zero());
        assert!(r.denom().is_one());
    }

    #[test]
    fn sign_normalization() {
        let q = v(Var::Q);
        let r = RationalFunction::canonicalize(&q - &c(1), &c(1) - &q).unwrap();
        assert_eq!(r, RationalFunction::from_int(-1));
        let r = RationalFunction::canonicalize(c(1), &c(1) - &q).unwrap();
        assert_eq!(r.to_string(), "-1 / (q-1)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::canonicalize(c(1), LaurentPoly::zero()),
            Err(CoeffError::ZeroDenominator)
        );
    }

    #[test]
    fn idempotent_and_representation_independent() {
        let (q1, q2) = (v(Var::Q1), v(Var::Q2));
        let num = &q1 + &c(2);
        let den = &q1 - &q2;
        let r = RationalFunction::canonicalize(num.clone(), den.clone()).unwrap();
        let k = &(&q2.pow(2) + &c(3))
            * &LaurentPoly::term(
                Monomial::var_pow(Var::Q1, -1),
                BigRational::new(5.into(), 7.into()),
            );
        let r2 = RationalFunction::canonicalize(&num * &k, &den * &k).unwrap();
        assert_eq!(r, r2);
        let again = RationalFunction::canonicalize(r.numer().clone(), r.denom().clone()).unwrap();
        assert_eq!(r, again);
    }
}
