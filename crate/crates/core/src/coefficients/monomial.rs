use std::cmp::Ordering;
use std::fmt;

/// Number of formal variables in the ambient alphabet.
pub const NVARS: usize = 5;

/// The fixed, ordered variable alphabet.
///
/// `Q1`, `Q2` are the two Hecke parameters, `Q` the one-parameter variable used
/// for Specht modules, `S` the square root of the Jones variable `t` and `A` the
/// Kauffman bracket variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q1,
    Q2,
    Q,
    S,
    A,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q1, Var::Q2, Var::Q, Var::S, Var::A];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q1 => "q1",
            Var::Q2 => "q2",
            Var::Q => "q",
            Var::S => "s",
            Var::A => "A",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A Laurent monomial, one signed exponent per variable of the alphabet.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors lexicographically with `q1 > q2 > q > s > A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial(exps)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0) {
            *e += o;
        }
        Monomial(exps)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.map(|e| -e))
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0) {
            *e = (*e).min(o);
        }
        Monomial(exps)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        Var::ALL.into_iter().filter(|v| self.exp(*v) != 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.exp(v) {
                1 => write!(f, "{v}")?,
                e => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}
