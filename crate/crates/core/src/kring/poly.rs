use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::chamber_ring::{ChamberRingElement, LineValue};
use crate::arrangement::{Sign, SignVector};
use crate::error::{Error, Result};

/// Exponents of `e_1 … e_n` followed by the exponent of `x`.
///
/// Ordered by total degree, then so that earlier variables come first
/// (`e1e2 < e1e3 < e2e3 < x·e3` among quadratics).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn x_exponent(&self) -> u32 {
        *self.0.last().expect("x slot")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len() - 1;
        let mut factors = Vec::new();
        let x = self.x_exponent();
        if x == 1 {
            factors.push("x".to_string());
        } else if x > 1 {
            factors.push(format!("x^{x}"));
        }
        for (i, &k) in self.0[..n].iter().enumerate() {
            match k {
                0 => {}
                1 => factors.push(format!("e{}", i + 1)),
                _ => factors.push(format!("e{}^{k}", i + 1)),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// A polynomial in `Z[e_1, …, e_n, x]` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreePoly {
    vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl FreePoly {
    pub fn zero(vars: usize) -> Self {
        FreePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: impl Into<BigInt>) -> Self {
        Self::zero(vars).with_term(Monomial(vec![0; vars + 1]), c.into())
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, 1)
    }

    pub fn x(vars: usize) -> Self {
        let mut m = vec![0; vars + 1];
        m[vars] = 1;
        Self::zero(vars).with_term(Monomial(m), BigInt::one())
    }

    pub fn e(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let mut m = vec![0; vars + 1];
        m[i] = 1;
        Self::zero(vars).with_term(Monomial(m), BigInt::one())
    }

    fn with_term(mut self, m: Monomial, c: BigInt) -> Self {
        self.add_term(m, c);
        self
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn product<'a>(vars: usize, factors: impl IntoIterator<Item = &'a FreePoly>) -> FreePoly {
        factors
            .into_iter()
            .fold(FreePoly::one(vars), |acc, f| &acc * f)
    }

    /// Exact division by `x`; fails if some monomial has no factor of `x`.
    pub fn divide_by_x(&self) -> Result<FreePoly> {
        let mut out = FreePoly::zero(self.vars);
        for (m, c) in &self.terms {
            if m.x_exponent() == 0 {
                return Err(Error::DivisionFailure(m.to_string()));
            }
            let mut exps = m.0.clone();
            exps[self.vars] -= 1;
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Image in the chamber ring under `e_i ↦ h(e_i)`, `x ↦ x`, for chambers
    /// with the given sign vectors.
    pub fn evaluate(&self, chambers: &[SignVector]) -> ChamberRingElement {
        let values = chambers
            .iter()
            .map(|sign| {
                let mut total = LineValue::zero();
                for (m, c) in &self.terms {
                    let killed = m.0[..self.vars]
                        .iter()
                        .enumerate()
                        .any(|(i, &k)| k > 0 && sign.get(i) != Sign::Pos);
                    if !killed {
                        total = &total + &LineValue::x_pow(m.degree()).scale(c);
                    }
                }
                total
            })
            .collect();
        ChamberRingElement { values }
    }
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        FreePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self + &(-rhs)
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = FreePoly::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let exps = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let is_unit = m.degree() == 0;
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if is_unit {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_and_display() {
        let n = 3;
        let (e0, e1, e2, x) = (FreePoly::e(n, 0), FreePoly::e(n, 1), FreePoly::e(n, 2), FreePoly::x(n));
        let lhs = FreePoly::product(n, [&e0, &e1, &(&e2 - &x)]);
        let rhs = FreePoly::product(n, [&(&e0 - &x), &(&e1 - &x), &e2]);
        let quotient = (&lhs - &rhs).divide_by_x().unwrap();
        assert_eq!(quotient.to_string(), "-e1*e2 + e1*e3 + e2*e3 - x*e3");
        assert!(matches!(e0.divide_by_x(), Err(Error::DivisionFailure(_))));
        assert_eq!((&x * &(&FreePoly::constant(n, 2) - &x)).to_string(), "2*x - x^2");
    }

    #[test]
    fn evaluation_collapses_powers_of_x() {
        let n = 2;
        let p = &(&FreePoly::e(n, 0) * &FreePoly::e(n, 1)) * &FreePoly::x(n);
        let signs = vec![SignVector::parse("++").unwrap(), SignVector::parse("+-").unwrap()];
        let v = p.evaluate(&signs);
        assert_eq!(v.values, vec![LineValue::new(0, 4), LineValue::zero()]);
    }
}
