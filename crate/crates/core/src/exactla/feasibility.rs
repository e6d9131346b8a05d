use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{dot, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Greater,
    Less,
    Equal,
}

/// The constraint `coeffs · p + constant  <relation>  0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub relation: Relation,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, relation: Relation) -> Self {
        LinearConstraint {
            coeffs,
            constant,
            relation,
        }
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        let value = dot(&self.coeffs, point) + &self.constant;
        match self.relation {
            Relation::Greater => value.is_positive(),
            Relation::Less => value.is_negative(),
            Relation::Equal => value.is_zero(),
        }
    }
}

/// Normalized inequality `coeffs · p + constant > 0` (strict) or `>= 0`.
///
/// Coefficients are a primitive integer vector; the ordering is only used for
/// deduplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    coeffs: Vec<BigInt>,
    constant: BigInt,
    strict: bool,
}

impl Row {
    fn from_rational(coeffs: &[Rational], constant: &Rational, strict: bool) -> Row {
        let lcm = coeffs
            .iter()
            .chain(std::iter::once(constant))
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scale = |v: &Rational| v.numer() * (&lcm / v.denom());
        Row::primitive(coeffs.iter().map(scale).collect(), scale(constant), strict)
    }

    fn primitive(coeffs: Vec<BigInt>, constant: BigInt, strict: bool) -> Row {
        let gcd = coeffs
            .iter()
            .chain(std::iter::once(&constant))
            .fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if gcd.is_zero() || gcd.is_one() {
            return Row {
                coeffs,
                constant,
                strict,
            };
        }
        Row {
            coeffs: coeffs.into_iter().map(|c| c / &gcd).collect(),
            constant: constant / &gcd,
            strict,
        }
    }

    /// Truth value of a row with no variables left.
    fn holds_trivially(&self) -> Option<bool> {
        if self.coeffs.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        })
    }
}

/// Decides whether the system has an exact rational solution and returns one.
///
/// Strict relations are honored strictly. The algorithm is Fourier–Motzkin
/// elimination with per-round deduplication, followed by back-substitution
/// that picks a small (integral when possible) value for each coordinate.
pub fn strict_feasible(dim: usize, constraints: &[LinearConstraint]) -> Option<Vec<Rational>> {
    let mut rows = BTreeSet::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), dim, "constraint dimension mismatch");
        match c.relation {
            Relation::Greater => {
                rows.insert(Row::from_rational(&c.coeffs, &c.constant, true));
            }
            Relation::Less => {
                let neg: Vec<Rational> = c.coeffs.iter().map(|v| -v).collect();
                rows.insert(Row::from_rational(&neg, &-c.constant.clone(), true));
            }
            Relation::Equal => {
                let neg: Vec<Rational> = c.coeffs.iter().map(|v| -v).collect();
                rows.insert(Row::from_rational(&c.coeffs, &c.constant, false));
                rows.insert(Row::from_rational(&neg, &-c.constant.clone(), false));
            }
        }
    }

    // stages[k] involves only variables 0..k
    let mut stages: Vec<Vec<Row>> = vec![Vec::new(); dim + 1];
    let mut current: Vec<Row> = prune(rows)?;
    for var in (0..dim).rev() {
        stages[var + 1] = current.clone();
        let mut next = BTreeSet::new();
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        for row in current {
            if row.coeffs[var].is_positive() {
                lower.push(row);
            } else if row.coeffs[var].is_negative() {
                upper.push(row);
            } else {
                next.insert(row);
            }
        }
        for lo in &lower {
            for up in &upper {
                let a = &lo.coeffs[var];
                let b = -&up.coeffs[var];
                let coeffs: Vec<BigInt> = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(l, u)| &b * l + a * u)
                    .collect();
                let constant = &b * &lo.constant + a * &up.constant;
                next.insert(Row::primitive(coeffs, constant, lo.strict || up.strict));
            }
        }
        current = prune(next)?;
    }
    stages[0] = current;

    let mut point: Vec<Rational> = Vec::with_capacity(dim);
    for var in 0..dim {
        let value = choose_value(&stages[var + 1], var, &point)?;
        point.push(value);
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&point)));
    Some(point)
}

/// Drops trivially true rows; returns `None` on a contradictory one.
fn prune(rows: BTreeSet<Row>) -> Option<Vec<Row>> {
    let mut kept = Vec::with_capacity(rows.len());
    for row in rows {
        match row.holds_trivially() {
            Some(true) => {}
            Some(false) => return None,
            None => kept.push(row),
        }
    }
    Some(kept)
}

struct Bound {
    value: Rational,
    strict: bool,
}

fn choose_value(rows: &[Row], var: usize, fixed: &[Rational]) -> Option<Rational> {
    let mut lower: Option<Bound> = None;
    let mut upper: Option<Bound> = None;
    for row in rows {
        let coeff = Rational::from_integer(row.coeffs[var].clone());
        let rest = fixed
            .iter()
            .zip(&row.coeffs)
            .fold(Rational::from_integer(row.constant.clone()), |acc, (v, c)| {
                acc + v * Rational::from_integer(c.clone())
            });
        if coeff.is_zero() {
            continue;
        }
        let bound = -rest / &coeff;
        if coeff.is_positive() {
            let tighter = match &lower {
                None => true,
                Some(b) => bound > b.value || (bound == b.value && row.strict),
            };
            if tighter {
                lower = Some(Bound {
                    value: bound,
                    strict: row.strict,
                });
            }
        } else {
            let tighter = match &upper {
                None => true,
                Some(b) => bound < b.value || (bound == b.value && row.strict),
            };
            if tighter {
                upper = Some(Bound {
                    value: bound,
                    strict: row.strict,
                });
            }
        }
    }
    let admissible = |v: &Rational| {
        lower
            .as_ref()
            .is_none_or(|b| if b.strict { *v > b.value } else { *v >= b.value })
            && upper
                .as_ref()
                .is_none_or(|b| if b.strict { *v < b.value } else { *v <= b.value })
    };
    let candidate = match (&lower, &upper) {
        (None, None) => Rational::zero(),
        (Some(lo), _) => {
            if lo.strict {
                lo.value.floor() + Rational::one()
            } else {
                lo.value.ceil()
            }
        }
        (None, Some(up)) => {
            if up.strict {
                up.value.ceil() - Rational::one()
            } else {
                up.value.floor()
            }
        }
    };
    if admissible(&candidate) {
        return Some(candidate);
    }
    let (lo, up) = (lower.as_ref()?, upper.as_ref()?);
    if lo.value == up.value {
        return (!lo.strict && !up.strict).then(|| lo.value.clone());
    }
    let mid = (&lo.value + &up.value) / Rational::from_integer(BigInt::from(2));
    admissible(&mid).then_some(mid)
}
