//! Cooriented real hyperplane arrangements over the rationals.
//!
//! Hyperplanes are indexed `0..n` in input order; that order is significant
//! because broken circuits depend on it. Human-facing output numbers them
//! from 1.

mod chambers;
mod faces;
mod restrict;

pub use chambers::{
    enumerate_chambers, enumerate_chambers_with, ChamberStrategy, ChamberStrategyRegistry,
    ExhaustiveSigns, IncrementalInsertion,
};
pub use faces::{enumerate_faces, is_simple};
pub use restrict::{restrict, RestrictedIndex, Restriction};

use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    dot, primitive_integer_vector, rational_rank, rational_solve, LinearConstraint, Rational,
    RationalMatrix, Relation,
};

/// The affine functional `p ↦ normal · p + constant`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub normal: Vec<Rational>,
    pub constant: Rational,
}

impl AffineForm {
    pub fn new(normal: Vec<Rational>, constant: Rational) -> Self {
        AffineForm { normal, constant }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        dot(&self.normal, point) + &self.constant
    }

    pub fn negated(&self) -> Self {
        AffineForm {
            normal: self.normal.iter().map(|v| -v).collect(),
            constant: -self.constant.clone(),
        }
    }

    pub fn constraint(&self, relation: Relation) -> LinearConstraint {
        LinearConstraint::new(self.normal.clone(), self.constant.clone(), relation)
    }

    /// Primitive integer coefficients `(normal, constant)`; two forms define
    /// the same cooriented hyperplane iff these agree.
    pub fn primitive_key(&self) -> Vec<num_bigint::BigInt> {
        let mut all = self.normal.clone();
        all.push(self.constant.clone());
        primitive_integer_vector(&all)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        if value.is_positive() {
            Sign::Pos
        } else if value.is_negative() {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn relation(self) -> Relation {
        match self {
            Sign::Neg => Relation::Less,
            Sign::Zero => Relation::Equal,
            Sign::Pos => Relation::Greater,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// A sequence over `{-, 0, +}`, one entry per hyperplane. Ordered
/// lexicographically with `- < 0 < +`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn zeros(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] == Sign::Zero).collect()
    }

    pub fn is_full(&self) -> bool {
        self.0.iter().all(|&s| s != Sign::Zero)
    }

    pub fn with(&self, i: usize, sign: Sign) -> SignVector {
        let mut v = self.clone();
        v.0[i] = sign;
        v
    }

    /// True if `other` agrees with `self` wherever `self` is nonzero.
    pub fn is_refined_by(&self, other: &SignVector) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| *a == Sign::Zero || a == b)
    }

    pub fn parse(text: &str) -> Option<SignVector> {
        text.chars()
            .map(|c| match c {
                '-' => Some(Sign::Neg),
                '0' => Some(Sign::Zero),
                '+' => Some(Sign::Pos),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// A connected component of the real complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub index: usize,
    pub sign: SignVector,
    pub witness: Vec<Rational>,
}

/// A relatively open face of a simple arrangement together with the chambers
/// containing it in their closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub sign: SignVector,
    pub codim: usize,
    pub cofaces: Vec<usize>,
    pub witness: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    dim: usize,
    forms: Vec<AffineForm>,
}

impl Arrangement {
    pub fn new(dim: usize, forms: Vec<AffineForm>) -> Result<Self> {
        for form in &forms {
            if form.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: form.normal.len(),
                });
            }
            if form.normal.iter().all(Zero::is_zero) {
                return Err(Error::PreconditionFailed(
                    "hyperplane with zero normal vector".into(),
                ));
            }
        }
        Ok(Arrangement { dim, forms })
    }

    /// Builds an arrangement from integer rows `a_1 .. a_d c`.
    pub fn from_integer_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let forms = rows
            .iter()
            .map(|row| {
                if row.len() != dim + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: dim + 1,
                        found: row.len(),
                    });
                }
                Ok(AffineForm::new(
                    row[..dim].iter().map(|&v| crate::exactla::rat(v)).collect(),
                    crate::exactla::rat(row[dim]),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(dim, forms)
    }

    pub fn empty(dim: usize) -> Self {
        Arrangement {
            dim,
            forms: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &AffineForm {
        &self.forms[i]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })
        }
    }

    /// Whether all hyperplanes share a common point.
    pub fn is_central(&self) -> bool {
        self.forms.iter().all(|f| f.constant.is_zero())
            || self.flat_is_nonempty(&(0..self.len()).collect::<Vec<_>>())
    }

    pub fn sign_at(&self, point: &[Rational]) -> SignVector {
        SignVector(self.forms.iter().map(|f| Sign::of(&f.eval(point))).collect())
    }

    /// Constraints asserting that a point has the given (possibly partial)
    /// sign vector on the first `signs.len()` hyperplanes.
    pub fn sign_constraints(&self, signs: &[Sign]) -> Vec<LinearConstraint> {
        signs
            .iter()
            .enumerate()
            .map(|(i, s)| self.forms[i].constraint(s.relation()))
            .collect()
    }

    pub fn realize(&self, signs: &SignVector) -> Option<Vec<Rational>> {
        crate::exactla::strict_feasible(self.dim, &self.sign_constraints(&signs.0))
    }

    /// `None` if `∩_{i∈S} H_i` is empty, otherwise the rank of the stacked
    /// normals (the codimension of the flat).
    pub fn flat_rank(&self, subset: &[usize]) -> Option<usize> {
        let m = RationalMatrix::from_rows(
            self.dim,
            subset.iter().map(|&i| self.forms[i].normal.clone()).collect(),
        );
        let rhs: Vec<Rational> = subset.iter().map(|&i| -self.forms[i].constant.clone()).collect();
        rational_solve(&m, &rhs)?;
        Some(rational_rank(&m))
    }

    pub fn flat_is_nonempty(&self, subset: &[usize]) -> bool {
        self.flat_rank(subset).is_some()
    }

    /// Pairs of indices describing the same hyperplane (either coorientation).
    pub fn repeated_hyperplanes(&self) -> Vec<(usize, usize)> {
        let keys: Vec<_> = self.forms.iter().map(AffineForm::primitive_key).collect();
        let negated: Vec<_> = self.forms.iter().map(|f| f.negated().primitive_key()).collect();
        (0..self.len())
            .tuple_combinations()
            .filter(|&(i, j)| keys[i] == keys[j] || keys[i] == negated[j])
            .collect()
    }

    /// The arrangement with `ω_i` negated.
    pub fn reorient(&self, i: usize) -> Result<Arrangement> {
        self.check_index(i)?;
        let mut forms = self.forms.clone();
        forms[i] = forms[i].negated();
        Ok(Arrangement {
            dim: self.dim,
            forms,
        })
    }

    /// Reorients every hyperplane on whose positive side `base` lies, so that
    /// `base` becomes the all-minus chamber `Δ = ∩ H_i^-`.
    pub fn normalize_delta(&self, base: &SignVector) -> Result<Arrangement> {
        if base.len() != self.len() || !base.is_full() {
            return Err(Error::PreconditionFailed(format!(
                "{base} is not a full sign vector for {} hyperplanes",
                self.len()
            )));
        }
        if self.realize(base).is_none() {
            return Err(Error::PreconditionFailed(format!("{base} is not a chamber")));
        }
        let mut result = self.clone();
        for (i, s) in base.0.iter().enumerate() {
            if *s == Sign::Pos {
                result.forms[i] = result.forms[i].negated();
            }
        }
        Ok(result)
    }

    /// The arrangement without its last hyperplane.
    pub fn delete(&self) -> Result<Arrangement> {
        if self.is_empty() {
            return Err(Error::PreconditionFailed(
                "cannot delete from the empty arrangement".into(),
            ));
        }
        Ok(Arrangement {
            dim: self.dim,
            forms: self.forms[..self.len() - 1].to_vec(),
        })
    }

    /// The all-minus chamber `Δ`, if nonempty.
    pub fn delta_witness(&self) -> Option<Vec<Rational>> {
        self.realize(&SignVector(vec![Sign::Neg; self.len()]))
    }
}

/// Displays a set of 0-based indices with 1-based labels, e.g. `{1,3}`.
pub fn display_set(set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|i| (i + 1).to_string()).join(","))
}

pub fn display_point(point: &[Rational]) -> String {
    format!("({})", point.iter().map(|v| v.to_string()).join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn reorient_is_an_involution() {
        let a = catalog::generic_three_lines();
        for i in 0..a.len() {
            assert_eq!(a.reorient(i).unwrap().reorient(i).unwrap(), a);
        }
        assert!(a.reorient(3).is_err());
    }

    #[test]
    fn reorient_point_swaps_chambers() {
        let a = catalog::point();
        let flipped = a.reorient(0).unwrap();
        let before: Vec<_> = enumerate_chambers(&a).into_iter().map(|c| c.witness).collect();
        let after = enumerate_chambers(&flipped);
        assert_eq!(after[0].sign.to_string(), "-");
        assert_eq!(flipped.sign_at(&before[0]).to_string(), "+");
    }

    #[test]
    fn normalize_delta_examples() {
        let point = catalog::point();
        let minus = SignVector::parse("-").unwrap();
        assert_eq!(point.normalize_delta(&minus).unwrap(), point);
        let plus = SignVector::parse("+").unwrap();
        assert_eq!(point.normalize_delta(&plus).unwrap(), point.reorient(0).unwrap());

        let lines = catalog::generic_three_lines();
        let triangle = enumerate_chambers(&lines)
            .into_iter()
            .find(|c| c.sign.to_string() == "++-")
            .expect("bounded triangle");
        let normalized = lines.normalize_delta(&triangle.sign).unwrap();
        assert_eq!(normalized.sign_at(&triangle.witness).to_string(), "---");
        assert!(lines.normalize_delta(&SignVector::parse("--+").unwrap()).is_err());
    }

    #[test]
    fn zero_normal_is_rejected() {
        assert!(Arrangement::from_integer_rows(1, &[&[0, 5]]).is_err());
    }

    #[test]
    fn repeated_hyperplanes_are_flagged() {
        let a = Arrangement::from_integer_rows(1, &[&[1, 0], &[-2, 0], &[1, 1]]).unwrap();
        assert_eq!(a.repeated_hyperplanes(), vec![(0, 1)]);
    }
}
