use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent vector over a₁, a₂, …; trailing zeros are trimmed so equal
/// monomials compare equal regardless of how many variables were in play.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The monomial `a_{var+1}^exp`.
    pub fn var(var: usize, exp: u32) -> Self {
        let mut v = vec![0; var + 1];
        v[var] = exp;
        Monomial::from_exponents(v)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let exps = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
            .collect();
        Monomial(exps)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic with a₁ > a₂ > ….
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                if a != b {
                    return a.cmp(&b);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Values for the variables of a [`MultiPoly`]; index 0 is a₁.
pub trait Assignment {
    fn value(&self, var: usize) -> Option<&Rational>;
}

impl Assignment for [Rational] {
    fn value(&self, var: usize) -> Option<&Rational> {
        self.get(var)
    }
}

impl Assignment for Vec<Rational> {
    fn value(&self, var: usize) -> Option<&Rational> {
        self.get(var)
    }
}

impl Assignment for [Option<Rational>] {
    fn value(&self, var: usize) -> Option<&Rational> {
        self.get(var).and_then(Option::as_ref)
    }
}

impl Assignment for Vec<Option<Rational>> {
    fn value(&self, var: usize) -> Option<&Rational> {
        self.get(var).and_then(Option::as_ref)
    }
}

impl Assignment for BTreeMap<usize, Rational> {
    fn value(&self, var: usize) -> Option<&Rational> {
        self.get(&var)
    }
}

/// Sparse polynomial with integer coefficients. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    /// The variable a_{var+1}.
    pub fn var(var: usize) -> Self {
        Self::term(BigInt::one(), Monomial::var(var, 1))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    /// `a_i - a_j`, the building block of every Vandermonde factor.
    pub fn difference(i: usize, j: usize) -> Self {
        &Self::var(i) - &Self::var(j)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = BTreeMap::new();
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen.insert(i, ());
                }
            }
        }
        seen.into_keys().collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    pub fn evaluate<A: Assignment + ?Sized>(&self, at: &A) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = at.value(var).ok_or(Error::UnboundVariable(var))?;
                t *= num_traits::pow(v.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Product of a list of factors.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a MultiPoly>) -> Self {
        factors.into_iter().fold(MultiPoly::one(), |acc, f| &acc * f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    /// `+1*a1^2*a2 -1*a1*a2^2`: descending graded-lex, explicit signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", c.abs())?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*a{}", i + 1)?,
                    _ => write!(f, "*a{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}
