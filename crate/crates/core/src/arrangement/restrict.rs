use num_traits::{One, Zero};

use super::{AffineForm, Arrangement};
use crate::error::{Error, Result};
use crate::exactla::{dot, Rational};

/// Where an original hyperplane `H_i` (`i < n`) went in the restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RestrictedIndex {
    pub target: usize,
    /// Whether the pulled-back coorientation agrees with the representative's.
    pub agrees: bool,
}

/// The restriction `A''` of an arrangement to its last hyperplane `H_n`,
/// along with the affine chart `u ↦ origin + Σ u_j directions_j` of `H_n`.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub arrangement: Arrangement,
    /// One entry per `i < n`; `None` when `H_i ∩ H_n` is empty or all of `H_n`.
    pub index_map: Vec<Option<RestrictedIndex>>,
    pub origin: Vec<Rational>,
    pub directions: Vec<Vec<Rational>>,
}

impl Restriction {
    /// Maps chart coordinates on `H_n` to a point of the ambient space.
    pub fn lift(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut point = self.origin.clone();
        for (u, dir) in coords.iter().zip(&self.directions) {
            for (p, t) in point.iter_mut().zip(dir) {
                *p += u * t;
            }
        }
        point
    }

    /// Original indices whose hyperplanes represent each new hyperplane.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.arrangement.len()];
        for (i, entry) in self.index_map.iter().enumerate() {
            if let Some(r) = entry {
                reps[r.target] = reps[r.target].min(i);
            }
        }
        reps
    }
}

/// Restricts to the last hyperplane using the chart pivoting on its first
/// nonzero normal coordinate.
pub fn restrict(arrangement: &Arrangement) -> Result<Restriction> {
    let last = arrangement.forms().last().ok_or_else(|| {
        Error::PreconditionFailed("cannot restrict the empty arrangement".into())
    })?;
    let pivot = last
        .normal
        .iter()
        .position(|v| !v.is_zero())
        .expect("nonzero normal");
    restrict_with_pivot(arrangement, pivot)
}

pub(crate) fn restrict_with_pivot(arrangement: &Arrangement, pivot: usize) -> Result<Restriction> {
    let n = arrangement.len();
    let d = arrangement.dim();
    let last = arrangement.form(n - 1);
    let lead = &last.normal[pivot];
    if lead.is_zero() {
        return Err(Error::PreconditionFailed(format!(
            "coordinate {pivot} cannot parametrize the last hyperplane"
        )));
    }
    let mut origin = vec![Rational::zero(); d];
    origin[pivot] = -&last.constant / lead;
    let directions: Vec<Vec<Rational>> = (0..d)
        .filter(|&j| j != pivot)
        .map(|j| {
            let mut t = vec![Rational::zero(); d];
            t[j] = Rational::one();
            t[pivot] = -&last.normal[j] / lead;
            t
        })
        .collect();

    let mut forms: Vec<AffineForm> = Vec::new();
    let mut keys: Vec<Vec<num_bigint::BigInt>> = Vec::new();
    let mut index_map = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let form = arrangement.form(i);
        let normal: Vec<Rational> = directions.iter().map(|t| dot(&form.normal, t)).collect();
        let constant = form.eval(&origin);
        if normal.iter().all(Zero::is_zero) {
            // parallel to H_n, or H_i = H_n
            index_map.push(None);
            continue;
        }
        let pulled = AffineForm::new(normal, constant);
        let key = pulled.primitive_key();
        let negated = pulled.negated().primitive_key();
        let entry = if let Some(t) = keys.iter().position(|k| *k == key) {
            RestrictedIndex {
                target: t,
                agrees: true,
            }
        } else if let Some(t) = keys.iter().position(|k| *k == negated) {
            RestrictedIndex {
                target: t,
                agrees: false,
            }
        } else {
            keys.push(key);
            forms.push(pulled);
            RestrictedIndex {
                target: forms.len() - 1,
                agrees: true,
            }
        };
        index_map.push(Some(entry));
    }
    Ok(Restriction {
        arrangement: Arrangement::new(d.saturating_sub(1), forms)?,
        index_map,
        origin,
        directions,
    })
}
