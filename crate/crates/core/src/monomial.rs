//! Monomials in the free commutative monoid on `x1, ..., xn` and the term
//! orderings used to sort them.
//!
//! Variables are indexed from zero in the API and printed from one, so
//! variable `0` renders as `x1`. Every ordering ranks the variables as
//! `xn > ... > x2 > x1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gf2::BitVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("exponent overflow on x{var}")]
    Overflow { var: usize },
    #[error("variable x{var} out of range for {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("cannot parse monomial {0:?}")]
    Parse(String),
}

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    /// The empty word `1` over `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Result<Self, MonomialError> {
        Self::one(nvars).mul_var(i)
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        Self { exps }
    }

    /// The squarefree monomial whose support is the support of `v`.
    pub fn from_support(v: &BitVector) -> Self {
        let mut m = Self::one(v.len());
        for i in v.support() {
            m.exps[i] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Number of distinct variables that occur.
    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Result<Monomial, MonomialError> {
        if i >= self.exps.len() {
            return Err(MonomialError::VariableOutOfRange {
                var: i + 1,
                nvars: self.exps.len(),
            });
        }
        let mut out = self.clone();
        out.exps[i] = out.exps[i]
            .checked_add(1)
            .ok_or(MonomialError::Overflow { var: i + 1 })?;
        Ok(out)
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if i >= self.exps.len() || self.exps[i] == 0 {
            return None;
        }
        let mut out = self.clone();
        out.exps[i] -= 1;
        Some(out)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_vars(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .enumerate()
            .map(|(i, (a, b))| {
                a.checked_add(*b)
                    .ok_or(MonomialError::Overflow { var: i + 1 })
            })
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exps })
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// The predecessors `self / x_i` for each variable in the support, paired
    /// with `i` and listed by increasing variable index. Empty for `1`.
    pub fn predecessors(&self) -> Vec<(usize, Monomial)> {
        self.support()
            .map(|i| (i, self.div_var(i).expect("variable in support")))
            .collect()
    }

    /// Every divisor of `self`, including `1` and `self`.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.nvars())];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = out.len();
            for p in 1..=e {
                for j in 0..base {
                    let mut d = out[j].clone();
                    d.exps[i] = p;
                    out.push(d);
                }
            }
        }
        out
    }

    /// Exponents reduced mod 2.
    pub fn psi(&self) -> BitVector {
        let mut v = BitVector::zeros(self.exps.len());
        for (i, &e) in self.exps.iter().enumerate() {
            if e % 2 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    fn check_vars(&self, other: &Monomial) -> Result<(), MonomialError> {
        if self.exps.len() != other.exps.len() {
            return Err(MonomialError::VariableCountMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    /// Parses the canonical text form (`1`, `x3`, `x1*x2`, `x1^2`) over
    /// `nvars` variables. Factors may repeat and appear in any order.
    pub fn parse(s: &str, nvars: usize) -> Result<Monomial, MonomialError> {
        let s = s.trim();
        let mut m = Monomial::one(nvars);
        if s == "1" {
            return Ok(m);
        }
        let bad = || MonomialError::Parse(s.to_string());
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (idx, pow) = match rest.split_once('^') {
                Some((i, p)) => (i, p.parse::<u8>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || idx > nvars {
                return Err(MonomialError::VariableOutOfRange { var: idx, nvars });
            }
            m.exps[idx - 1] = m.exps[idx - 1]
                .checked_add(pow)
                .ok_or(MonomialError::Overflow { var: idx })?;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An admissible term ordering with `xn > ... > x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrdering {
    /// Total degree, ties broken by the reverse lexicographic rule: the
    /// monomial with the smaller exponent on the lowest-indexed differing
    /// variable is the larger one.
    #[default]
    DegRevLex,
    /// Total degree, ties broken lexicographically from `xn` down.
    DegLex,
    /// Pure lexicographic from `xn` down. Not degree compatible.
    Lex,
}

impl TermOrdering {
    pub fn is_degree_compatible(self) -> bool {
        matches!(self, TermOrdering::DegRevLex | TermOrdering::DegLex)
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrdering::DegRevLex => "degrevlex",
            TermOrdering::DegLex => "deglex",
            TermOrdering::Lex => "lex",
        }
    }

    /// Compares two monomials over the same variables.
    ///
    /// Panics if the variable counts differ.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(
            a.nvars(),
            b.nvars(),
            "comparing monomials over different variables"
        );
        match self {
            TermOrdering::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
            TermOrdering::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_high_first(a, b)),
            TermOrdering::Lex => lex_high_first(a, b),
        }
    }
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps
        .iter()
        .zip(&b.exps)
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
}

fn lex_high_first(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps
        .iter()
        .zip(&b.exps)
        .rev()
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| x.cmp(y))
}

impl fmt::Display for TermOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrdering {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrevlex" => Ok(TermOrdering::DegRevLex),
            "deglex" => Ok(TermOrdering::DegLex),
            "lex" => Ok(TermOrdering::Lex),
            other => Err(format!("unknown term ordering {other:?}")),
        }
    }
}
