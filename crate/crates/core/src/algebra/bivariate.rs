use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Polynomial in x, y with rational coefficients, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    pub fn term(c: Rational, dx: u32, dy: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term((dx, dy), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rational {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    fn add_term(&mut self, e: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Leading term in lex order with x > y, which is the map's last key.
    fn leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = BiPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(BiPoly::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, ((dx, dy), c)| {
            acc + c * num_traits::pow(x.clone(), *dx as usize) * num_traits::pow(y.clone(), *dy as usize)
        })
    }

    /// Division by a single divisor; returns `(quotient, remainder)` with
    /// `self = quotient * g + remainder`. For one divisor the remainder is
    /// zero exactly when `g` divides `self`.
    pub fn div_rem(&self, g: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        let (lg_exp, lg_coeff) = g.leading().ok_or(Error::ZeroDivisor)?;
        let lg_coeff = lg_coeff.clone();
        let mut p = self.clone();
        let mut q = BiPoly::zero();
        let mut r = BiPoly::zero();
        while let Some((lp_exp, lp_coeff)) = p.leading() {
            let lp_coeff = lp_coeff.clone();
            if lp_exp.0 >= lg_exp.0 && lp_exp.1 >= lg_exp.1 {
                let t = BiPoly::term(&lp_coeff / &lg_coeff, lp_exp.0 - lg_exp.0, lp_exp.1 - lg_exp.1);
                p = &p - &(&t * g);
                q = &q + &t;
            } else {
                r.add_term(lp_exp, lp_coeff.clone());
                p.terms.remove(&lp_exp);
            }
        }
        Ok((q, r))
    }
}

/// `Some(cofactor)` with `p = cofactor * g` when `g` divides `p`.
pub fn divides(g: &BiPoly, p: &BiPoly) -> Result<Option<BiPoly>> {
    let (q, r) = p.div_rem(g)?;
    Ok(r.is_zero().then_some(q))
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &rhs.terms {
                out.add_term((a + d, b + e), c * f);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((dx, dy), c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let monomial = match (dx, dy) {
                (0, 0) => String::new(),
                _ => {
                    let part = |v: &str, d: u32| match d {
                        0 => String::new(),
                        1 => v.to_string(),
                        _ => format!("{v}^{d}"),
                    };
                    format!("{}{}", part("x", *dx), part("y", *dy))
                }
            };
            if monomial.is_empty() {
                write!(f, "{}", rational::format(&mag))?;
            } else if mag.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{}{monomial}", rational::format(&mag))?;
            }
        }
        Ok(())
    }
}

/// `c_xx·x² + c_xy·xy + c_yy·y² + c_x·x + c_y·y + c_1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quadratic {
    pub c_xx: Rational,
    pub c_xy: Rational,
    pub c_yy: Rational,
    pub c_x: Rational,
    pub c_y: Rational,
    pub c_1: Rational,
}

impl Quadratic {
    pub fn zero() -> Self {
        Quadratic::default()
    }

    /// Expands `(x + a·y + b)²`.
    pub fn square_of_line(a: &Rational, b: &Rational) -> Self {
        let two = rational::int(2);
        Quadratic {
            c_xx: Rational::one(),
            c_xy: &two * a,
            c_yy: a * a,
            c_x: &two * b,
            c_y: &two * a * b,
            c_1: b * b,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.to_poly().is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Quadratic {
            c_xx: &self.c_xx * c,
            c_xy: &self.c_xy * c,
            c_yy: &self.c_yy * c,
            c_x: &self.c_x * c,
            c_y: &self.c_y * c,
            c_1: &self.c_1 * c,
        }
    }

    pub fn add(&self, o: &Quadratic) -> Self {
        Quadratic {
            c_xx: &self.c_xx + &o.c_xx,
            c_xy: &self.c_xy + &o.c_xy,
            c_yy: &self.c_yy + &o.c_yy,
            c_x: &self.c_x + &o.c_x,
            c_y: &self.c_y + &o.c_y,
            c_1: &self.c_1 + &o.c_1,
        }
    }

    pub fn sub(&self, o: &Quadratic) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn to_poly(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term((2, 0), self.c_xx.clone());
        p.add_term((1, 1), self.c_xy.clone());
        p.add_term((0, 2), self.c_yy.clone());
        p.add_term((1, 0), self.c_x.clone());
        p.add_term((0, 1), self.c_y.clone());
        p.add_term((0, 0), self.c_1.clone());
        p
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}
