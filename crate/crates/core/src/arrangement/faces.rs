use itertools::Itertools;

use super::{enumerate_chambers, Arrangement, Face, Sign, SignVector};
use crate::error::{Error, Result};
use crate::exactla::{strict_feasible, Rational};

/// Whether every nonempty flat `∩_{i∈S} H_i` has codimension `|S|`.
///
/// Subsets larger than `d + 1` need not be checked: a nonempty flat of such a
/// subset is already a nonempty flat of a `(d+1)`-subset of codimension at
/// most `d`.
pub fn is_simple(arrangement: &Arrangement) -> bool {
    simplicity_violation(arrangement).is_none()
}

pub(crate) fn simplicity_violation(arrangement: &Arrangement) -> Option<Vec<usize>> {
    let n = arrangement.len();
    for size in 2..=n.min(arrangement.dim() + 1) {
        for subset in (0..n).combinations(size) {
            if let Some(rank) = arrangement.flat_rank(&subset) {
                if rank < size {
                    return Some(subset);
                }
            }
        }
    }
    None
}

pub(crate) fn require_simple(arrangement: &Arrangement) -> Result<()> {
    match simplicity_violation(arrangement) {
        None => Ok(()),
        Some(subset) => Err(Error::NotSimple(format!(
            "hyperplanes {} meet in codimension less than {}",
            super::display_set(&subset),
            subset.len()
        ))),
    }
}

/// All faces of a simple arrangement, chambers included, sorted by sign
/// vector. `cofaces` index into [`enumerate_chambers`].
pub fn enumerate_faces(arrangement: &Arrangement) -> Result<Vec<Face>> {
    require_simple(arrangement)?;
    let chambers = enumerate_chambers(arrangement);
    let mut cells: Vec<(Vec<Sign>, Vec<Rational>)> =
        vec![(Vec::new(), vec![Rational::default(); arrangement.dim()])];
    for k in 0..arrangement.len() {
        let form = arrangement.form(k);
        let mut next = Vec::with_capacity(cells.len() * 3);
        for (signs, witness) in cells {
            let here = Sign::of(&form.eval(&witness));
            for side in [Sign::Neg, Sign::Zero, Sign::Pos] {
                let mut extended = signs.clone();
                extended.push(side);
                if side == here {
                    next.push((extended, witness.clone()));
                    continue;
                }
                let constraints = arrangement.sign_constraints(&extended);
                if let Some(point) = strict_feasible(arrangement.dim(), &constraints) {
                    next.push((extended, point));
                }
            }
        }
        cells = next;
    }
    cells.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(cells
        .into_iter()
        .map(|(signs, witness)| {
            let sign = SignVector(signs);
            let cofaces = chambers
                .iter()
                .filter(|c| sign.is_refined_by(&c.sign))
                .map(|c| c.index)
                .collect();
            Face {
                codim: sign.zeros().len(),
                sign,
                cofaces,
                witness,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&catalog::boolean(3)));
        assert!(is_simple(&catalog::generic_three_lines()));
        assert!(!is_simple(&catalog::concurrent_three_lines()));
        assert!(is_simple(&catalog::two_points()));
        assert!(!is_simple(&catalog::generic_central(2)));
    }

    #[test]
    fn point_faces() {
        let faces = enumerate_faces(&catalog::point()).unwrap();
        let labels: Vec<_> = faces.iter().map(|f| f.sign.to_string()).collect();
        assert_eq!(labels, vec!["-", "0", "+"]);
        assert_eq!(faces[1].cofaces, vec![0, 1]);
        assert_eq!(faces[1].codim, 1);
    }

    #[test]
    fn empty_and_two_points() {
        let faces = enumerate_faces(&Arrangement::empty(2)).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].cofaces, vec![0]);

        let faces = enumerate_faces(&catalog::two_points()).unwrap();
        assert_eq!(faces.len(), 5);
        let points: Vec<_> = faces.iter().filter(|f| f.codim == 1).collect();
        assert_eq!(points.len(), 2);
        assert!(points.iter().all(|f| f.cofaces.len() == 2));
    }

    #[test]
    fn non_simple_is_rejected() {
        assert!(matches!(
            enumerate_faces(&catalog::concurrent_three_lines()),
            Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn cofaces_form_subcubes() {
        for (name, a) in catalog::builtin_corpus() {
            if !is_simple(&a) {
                continue;
            }
            let chambers = enumerate_chambers(&a);
            for face in enumerate_faces(&a).unwrap() {
                assert_eq!(face.cofaces.len(), 1 << face.codim, "{name} {}", face.sign);
                assert_eq!(a.sign_at(&face.witness), face.sign);
                for &c in &face.cofaces {
                    assert!(face.sign.is_refined_by(&chambers[c].sign));
                    for z in face.sign.zeros() {
                        let s = chambers[c].sign.get(z).flipped();
                        let neighbor = chambers[c].sign.with(z, s);
                        assert!(face.cofaces.iter().any(|&d| chambers[d].sign == neighbor));
                    }
                }
            }
        }
    }
}
