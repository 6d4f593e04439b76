use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::coefficients::{Scalar, Var};

use super::InvariantError;

/// A Laurent polynomial in `s = t^(1/2)` with integer coefficients, tagged
/// with the number of link components it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesPolynomial {
    terms: BTreeMap<i32, BigInt>,
    components: usize,
}

impl JonesPolynomial {
    pub fn one() -> Self {
        Self::from_s_terms([(0, 1)], 1)
    }

    pub fn from_s_terms(terms: impl IntoIterator<Item = (i32, i64)>, components: usize) -> Self {
        let mut out = JonesPolynomial {
            terms: BTreeMap::new(),
            components,
        };
        for (e, c) in terms {
            out.add_term(e, BigInt::from(c));
        }
        out
    }

    pub(crate) fn from_big_terms(terms: BTreeMap<i32, BigInt>, components: usize) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        JonesPolynomial { terms, components }
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Reads a scalar that must be a Laurent polynomial in `s` alone with
    /// integer coefficients.
    pub fn from_scalar(v: &Scalar, components: usize) -> Result<Self, InvariantError> {
        let bad = || InvariantError::NotLaurent(v.to_string());
        let p = v
            .as_rational_function()
            .and_then(|r| r.as_laurent())
            .ok_or_else(bad)?;
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.vars().any(|x| x != Var::S) || !c.is_integer() {
                return Err(bad());
            }
            terms.insert(m.exp(Var::S), c.to_integer());
        }
        Ok(Self::from_big_terms(terms, components))
    }

    /// Coefficients keyed by the exponent of `s`.
    pub fn s_terms(&self) -> &BTreeMap<i32, BigInt> {
        &self.terms
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// True when only even powers of `s` occur, so the value is a Laurent
    /// polynomial in `t`.
    pub fn in_t(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn mul(&self, other: &JonesPolynomial) -> JonesPolynomial {
        let mut out = JonesPolynomial {
            terms: BTreeMap::new(),
            components: self.components + other.components - 1,
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// `(variable, exponent -> coefficient)` in the variable used for display.
    fn display_terms(&self) -> (&'static str, Vec<(i32, &BigInt)>) {
        let t = self.in_t();
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (if t { e / 2 } else { *e }, c))
            .collect();
        (if t { "t" } else { "s" }, terms)
    }
}

impl fmt::Display for JonesPolynomial {
    /// Descending powers of `t` when possible, otherwise of `s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (var, terms) = self.display_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str(var)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for JonesPolynomial {
    /// `{"variable": "t", "coefficients": {"4": "-1", ...}, "components": 1}`
    /// with exponents in descending order.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (var, terms) = self.display_terms();
        let mut st = s.serialize_struct("JonesPolynomial", 3)?;
        st.serialize_field("variable", var)?;
        st.serialize_field("coefficients", &OrderedTerms(terms))?;
        st.serialize_field("components", &self.components)?;
        st.end()
    }
}

struct OrderedTerms<'a>(Vec<(i32, &'a BigInt)>);

impl Serialize for OrderedTerms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (e, c) in &self.0 {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let trefoil = JonesPolynomial::from_s_terms([(8, -1), (6, 1), (2, 1)], 1);
        assert_eq!(trefoil.to_string(), "-t^4+t^3+t");
        let hopf = JonesPolynomial::from_s_terms([(-1, -1), (-5, -1)], 2);
        assert_eq!(hopf.to_string(), "-s^-1-s^-5");
        let odd = JonesPolynomial::from_s_terms([(0, 3), (-2, -2)], 1);
        assert_eq!(odd.to_string(), "3-2*t^-1");
        assert_eq!(JonesPolynomial::from_s_terms([], 1).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let trefoil = JonesPolynomial::from_s_terms([(8, -1), (6, 1), (2, 1)], 1);
        let json = serde_json::to_string(&trefoil).unwrap();
        assert_eq!(
            json,
            r#"{"variable":"t","coefficients":{"4":"-1","3":"1","1":"1"},"components":1}"#
        );
    }
}
