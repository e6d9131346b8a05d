//! Pointed oriented-matroid data of an arrangement: circuits with their sign
//! splits, broken circuits, nbc-sets, and minimal infeasible sign pairs.

use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::arrangement::{display_set, Arrangement};
use crate::error::{Error, Result};
use crate::exactla::{rational_kernel, strict_feasible, LinearConstraint, RationalMatrix, Relation};

/// A minimal index set whose hyperplanes meet in a nonempty flat of
/// codimension less than its size, split so that `∩_{S+} H^+ ∩ ∩_{S-} H^-`
/// is empty. The smallest index of the support is always in `plus`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Circuit {
    pub support: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}+ {}-",
            display_set(&self.support),
            display_set(&self.plus),
            display_set(&self.minus)
        )
    }
}

/// Disjoint index sets whose open half-space intersection is empty, and
/// minimal with that property.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignPair {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// The support's flat is nonempty of codimension less than its size, so
    /// the pair also indexes a family-5 relation.
    pub family5: bool,
}

impl SignPair {
    pub fn support(&self) -> Vec<usize> {
        self.plus.iter().chain(&self.minus).copied().sorted().collect()
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+ {}-", display_set(&self.plus), display_set(&self.minus))?;
        if self.family5 {
            write!(f, " (circuit)")?;
        }
        Ok(())
    }
}

pub(crate) fn half_spaces(
    arrangement: &Arrangement,
    plus: &[usize],
    minus: &[usize],
) -> Vec<LinearConstraint> {
    plus.iter()
        .map(|&i| arrangement.form(i).constraint(Relation::Greater))
        .chain(minus.iter().map(|&j| arrangement.form(j).constraint(Relation::Less)))
        .collect()
}

pub fn half_spaces_meet(arrangement: &Arrangement, plus: &[usize], minus: &[usize]) -> bool {
    strict_feasible(arrangement.dim(), &half_spaces(arrangement, plus, minus)).is_some()
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|i| big.contains(i))
}

/// All circuits, by increasing size then lexicographically.
pub fn circuits(arrangement: &Arrangement) -> Result<Vec<Circuit>> {
    let n = arrangement.len();
    let mut found: Vec<Circuit> = Vec::new();
    for size in 2..=n.min(arrangement.dim() + 1) {
        for subset in (0..n).combinations(size) {
            if found.iter().any(|c| is_subset(&c.support, &subset)) {
                continue;
            }
            match arrangement.flat_rank(&subset) {
                Some(rank) if rank < size => {}
                _ => continue,
            }
            found.push(split_circuit(arrangement, subset)?);
        }
    }
    Ok(found)
}

/// Splits a minimal dependent support by the sign of its affine dependence
/// `Σ λ_i ω_i = 0`, then checks the split geometrically.
fn split_circuit(arrangement: &Arrangement, support: Vec<usize>) -> Result<Circuit> {
    let d = arrangement.dim();
    let mut columns = RationalMatrix::zeros(d + 1, support.len());
    for (c, &i) in support.iter().enumerate() {
        let form = arrangement.form(i);
        for r in 0..d {
            columns.set(r, c, form.normal[r].clone());
        }
        columns.set(d, c, form.constant.clone());
    }
    let kernel = rational_kernel(&columns);
    if kernel.len() != 1 {
        return Err(Error::Internal(format!(
            "dependence space of {} has dimension {}",
            display_set(&support),
            kernel.len()
        )));
    }
    let mut lambda = kernel.into_iter().next().expect("one vector");
    if lambda.iter().any(Zero::is_zero) {
        return Err(Error::Internal(format!(
            "dependence of {} has a zero coefficient",
            display_set(&support)
        )));
    }
    if lambda[0].is_negative() {
        lambda.iter_mut().for_each(|v| *v = -v.clone());
    }
    let (plus, minus): (Vec<usize>, Vec<usize>) = support
        .iter()
        .zip(&lambda)
        .partition_map(|(&i, l)| {
            if l.is_positive() {
                itertools::Either::Left(i)
            } else {
                itertools::Either::Right(i)
            }
        });
    if half_spaces_meet(arrangement, &plus, &minus) || half_spaces_meet(arrangement, &minus, &plus)
    {
        return Err(Error::Internal(format!(
            "circuit {} has a nonempty half-space intersection",
            display_set(&support)
        )));
    }
    Ok(Circuit {
        support,
        plus,
        minus,
    })
}

/// Circuits with their smallest element removed.
pub fn broken_circuits(circuits: &[Circuit]) -> Vec<Vec<usize>> {
    circuits
        .iter()
        .map(|c| c.support[1..].to_vec())
        .sorted_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .dedup()
        .collect()
}

/// Index sets with nonempty flat containing no broken circuit, by size then
/// lexicographically. Includes the empty set.
pub fn nbc_sets(arrangement: &Arrangement, circuits: &[Circuit]) -> Vec<Vec<usize>> {
    let broken = broken_circuits(circuits);
    let mut all: Vec<Vec<usize>> = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for set in &layer {
            let start = set.last().map_or(0, |&m| m + 1);
            for j in start..arrangement.len() {
                let mut candidate = set.clone();
                candidate.push(j);
                if broken.iter().any(|b| is_subset(b, &candidate)) {
                    continue;
                }
                if arrangement.flat_is_nonempty(&candidate) {
                    next.push(candidate);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// All minimal disjoint sign pairs with empty half-space intersection, by
/// support size. By Helly's theorem supports never exceed `d + 1`.
pub fn minimal_infeasible_pairs(arrangement: &Arrangement) -> Vec<SignPair> {
    let n = arrangement.len();
    let mut found: Vec<SignPair> = Vec::new();
    for size in 2..=n.min(arrangement.dim() + 1) {
        let dependent = |s: &[usize]| matches!(arrangement.flat_rank(s), Some(r) if r < s.len());
        for support in (0..n).combinations(size) {
            let mut family5: Option<bool> = None;
            for mask in 0u32..1 << size {
                let (plus, minus): (Vec<usize>, Vec<usize>) = support
                    .iter()
                    .enumerate()
                    .partition_map(|(k, &i)| {
                        if mask >> k & 1 == 1 {
                            itertools::Either::Left(i)
                        } else {
                            itertools::Either::Right(i)
                        }
                    });
                let contains_known = found
                    .iter()
                    .any(|p| is_subset(&p.plus, &plus) && is_subset(&p.minus, &minus));
                if contains_known || half_spaces_meet(arrangement, &plus, &minus) {
                    continue;
                }
                let family5 = *family5.get_or_insert_with(|| dependent(&support));
                found.push(SignPair {
                    plus,
                    minus,
                    family5,
                });
            }
        }
    }
    found.sort_by(|a, b| {
        let (sa, sb) = (a.support(), b.support());
        sa.len()
            .cmp(&sb.len())
            .then_with(|| sa.cmp(&sb))
            .then_with(|| a.cmp(b))
    });
    found
}

/// Oriented-matroid data computed once per arrangement.
#[derive(Debug, Clone)]
pub struct MatroidData {
    pub circuits: Vec<Circuit>,
    pub broken_circuits: Vec<Vec<usize>>,
    pub nbc_sets: Vec<Vec<usize>>,
}

impl MatroidData {
    pub fn compute(arrangement: &Arrangement) -> Result<Self> {
        let circuits = circuits(arrangement)?;
        let broken_circuits = broken_circuits(&circuits);
        let nbc_sets = nbc_sets(arrangement, &circuits);
        Ok(MatroidData {
            circuits,
            broken_circuits,
            nbc_sets,
        })
    }
}
