//! Deletion-restriction sequences
//! `0 → P(A') → P(A) → P(A'') → Z → 0` and its counterpart on `B`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arrangement::{enumerate_chambers, restrict, Arrangement, Restriction, Sign, SignVector};
use crate::certificate::CertificateReport;
use crate::error::{Error, Result};
use crate::exactla::{hnf, left_kernel};
use crate::kring::{BasisMonomial, ChamberRingElement, KRing, LineValue, RingElement};
use crate::subring::{b_lattice, BLattice};

/// Integer matrices in the row convention: row `j` is the image of the
/// `j`-th domain basis vector.
pub type Matrix = Vec<Vec<BigInt>>;

#[derive(Debug, Clone)]
pub struct SequenceMaps {
    pub ring: KRing,
    pub deleted: KRing,
    pub restricted: KRing,
    pub restriction: Restriction,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub gamma: Matrix,
}

fn require_nonempty(arrangement: &Arrangement) -> Result<()> {
    if arrangement.is_empty() {
        return Err(Error::PreconditionFailed(
            "deletion-restriction needs at least one hyperplane".into(),
        ));
    }
    let n = arrangement.len() - 1;
    if let Some((i, _)) = arrangement
        .repeated_hyperplanes()
        .into_iter()
        .find(|&(_, j)| j == n)
    {
        return Err(Error::PreconditionFailed(format!(
            "H{} repeats H{}; deletion does not change the arrangement",
            n + 1,
            i + 1
        )));
    }
    Ok(())
}

pub fn build_p_sequence(arrangement: &Arrangement) -> Result<SequenceMaps> {
    require_nonempty(arrangement)?;
    let n = arrangement.len() - 1;
    let ring = KRing::new(arrangement)?;
    let deleted = KRing::new(&arrangement.delete()?)?;
    let restriction = restrict(arrangement)?;
    let restricted = KRing::new(&restriction.arrangement)?;

    let alpha = deleted
        .basis()
        .elements()
        .iter()
        .map(|m| {
            ring.to_basis(&ring.monomial_image(m))
                .map(|u| u.coords)
                .map_err(|_| Error::Internal(format!("{m} is not in P(A)")))
        })
        .collect::<Result<Matrix>>()?;

    let beta = ring
        .basis()
        .elements()
        .iter()
        .map(|m| match m {
            BasisMonomial::E(set) if set.contains(&n) => {
                beta_image(&restricted, &restriction, set, n).map(|u| u.coords)
            }
            _ => Ok(restricted.zero().coords),
        })
        .collect::<Result<Matrix>>()?;

    let gamma = (0..restricted.rank())
        .map(|k| vec![BigInt::from(u8::from(k == 1))])
        .collect();

    Ok(SequenceMaps {
        ring,
        deleted,
        restricted,
        restriction,
        alpha,
        beta,
        gamma,
    })
}

/// `e_A ↦ ∏_{i ∈ A∖{n}} e_i` restricted to `H_n`, over the nbc basis of `A''`.
fn beta_image(
    restricted: &KRing,
    restriction: &Restriction,
    set: &[usize],
    n: usize,
) -> Result<RingElement> {
    let mut targets = Vec::new();
    for &i in set.iter().filter(|&&i| i != n) {
        let entry = restriction.index_map[i].ok_or_else(|| {
            Error::RestrictionMismatch(format!(
                "H{} does not meet H{} transversally but e{} is a basis element",
                i + 1,
                n + 1,
                crate::arrangement::display_set(set)
            ))
        })?;
        targets.push(entry);
    }
    let values = restricted
        .chamber_signs()
        .iter()
        .map(|sign| {
            let positive = targets.iter().all(|t| (sign.get(t.target) == Sign::Pos) == t.agrees);
            if !positive {
                LineValue::zero()
            } else if targets.is_empty() {
                LineValue::one()
            } else {
                LineValue::x_pow(targets.len() as u32)
            }
        })
        .collect();
    restricted
        .to_basis(&ChamberRingElement { values })
        .map_err(|_| {
            Error::RestrictionMismatch(format!(
                "image of e{} is not integral over the nbc basis of A''",
                crate::arrangement::display_set(set)
            ))
        })
}

fn compose(lhs: &Matrix, rhs: &Matrix, cols: usize) -> Matrix {
    lhs.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); cols];
            for (c, r) in row.iter().zip(rhs) {
                if c.is_zero() {
                    continue;
                }
                for (o, v) in out.iter_mut().zip(r) {
                    *o += c * v;
                }
            }
            out
        })
        .collect()
}

/// Exactness of `0 → Z^{d0} → Z^{d1} → Z^{d2} → Z → 0` by lattice equality
/// at every node.
pub fn check_exact_sequence(
    report: &mut CertificateReport,
    names: [&str; 3],
    dims: [usize; 3],
    first: &Matrix,
    second: &Matrix,
    third: &Matrix,
) {
    let [f, g, h] = names;
    let [d0, d1, d2] = dims;

    let injective = left_kernel(d1, first).rank() == 0;
    report.check(
        format!("{f} injective"),
        injective,
        format!("left kernel of {d0}x{d1} matrix has rank {}", left_kernel(d1, first).rank()),
    );

    let zero = compose(first, second, d2).iter().flatten().all(Zero::is_zero);
    report.check(format!("{g}∘{f} = 0"), zero, "exact matrix product");

    let ker = left_kernel(d2, second);
    let im = hnf(d1, first);
    report.check(
        format!("ker {g} = im {f}"),
        ker == im,
        format!("ranks {} and {}", ker.rank(), im.rank()),
    );

    let zero = compose(second, third, 1).iter().flatten().all(Zero::is_zero);
    report.check(format!("{h}∘{g} = 0"), zero, "exact matrix product");

    let ker = left_kernel(1, third);
    let im = hnf(d2, second);
    report.check(
        format!("ker {h} = im {g}"),
        ker == im,
        format!("ranks {} and {}", ker.rank(), im.rank()),
    );

    let gcd = third
        .iter()
        .flatten()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    report.check(format!("{h} surjective"), gcd.is_one(), format!("gcd of entries {gcd}"));

    report.check(
        "rank additivity",
        d0 + d2 == d1 + 1,
        format!("{d0} + {d2} = {d1} + 1"),
    );
}

pub fn certify_exactness_p(arrangement: &Arrangement) -> Result<CertificateReport> {
    require_nonempty(arrangement)?;
    let mut report = CertificateReport::new("delres-p");
    let maps = match build_p_sequence(arrangement) {
        Ok(maps) => maps,
        Err(e @ Error::RestrictionMismatch(_)) => {
            report.check("construction", false, e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.note(format!(
        "ranks: P(A') {}, P(A) {}, P(A'') {}",
        maps.deleted.rank(),
        maps.ring.rank(),
        maps.restricted.rank()
    ));
    check_exact_sequence(
        &mut report,
        ["α", "β", "γ"],
        [maps.deleted.rank(), maps.ring.rank(), maps.restricted.rank()],
        &maps.alpha,
        &maps.beta,
        &maps.gamma,
    );
    Ok(report)
}

/// Reorients `H_i` (`i < n`) so that `H_n` crosses `∩_{i<n} H_i^-`.
pub fn normalize_for_restriction(arrangement: &Arrangement) -> Result<Arrangement> {
    require_nonempty(arrangement)?;
    let restriction = restrict(arrangement)?;
    let chamber = &enumerate_chambers(&restriction.arrangement)[0];
    let point = restriction.lift(&chamber.witness);
    let mut result = arrangement.clone();
    for i in 0..arrangement.len() - 1 {
        if Sign::of(&arrangement.form(i).eval(&point)) == Sign::Pos {
            result = result.reorient(i)?;
        }
    }
    Ok(result)
}

/// The maps `a`, `b`, `c` between the `B` lattices, at chamber level.
#[derive(Debug, Clone)]
pub struct BSequenceMaps {
    pub deleted: BLattice,
    pub full: BLattice,
    pub restricted: BLattice,
    pub restriction: Restriction,
    /// For each chamber of `A`, the chamber of `A'` containing it.
    pub merge: Vec<usize>,
    /// For each chamber `C''` of `A''`, the chambers `(C, D)` of `A` on the
    /// positive and negative side of `H_n` adjacent to it.
    pub pairs: Vec<(usize, usize)>,
    /// Index of `Δ ∩ H_n` among the chambers of `A''`.
    pub base: usize,
}

impl BSequenceMaps {
    pub fn apply_a(&self, v: &ChamberRingElement) -> ChamberRingElement {
        ChamberRingElement {
            values: self.merge.iter().map(|&c| v.values[c].clone()).collect(),
        }
    }

    pub fn apply_b(&self, v: &ChamberRingElement) -> Result<ChamberRingElement> {
        let mut ks = Vec::with_capacity(self.pairs.len());
        for (j, &(c, d)) in self.pairs.iter().enumerate() {
            if v.values[c].a != v.values[d].a {
                return Err(Error::DivisionFailure(format!(
                    "constant terms differ across H_n at chamber {j} of A''"
                )));
            }
            ks.push(&v.values[c].b - &v.values[d].b);
        }
        let k0 = ks[self.base].clone();
        let two = BigInt::from(2);
        let mut values = Vec::with_capacity(ks.len());
        for (j, k) in ks.iter().enumerate() {
            let diff = k - &k0;
            if !diff.is_multiple_of(&two) {
                return Err(Error::ParityFailure(format!(
                    "difference {k} at chamber {j} of A'' is not congruent to {k0} mod 2"
                )));
            }
            values.push(LineValue::new(k0.clone(), diff / &two));
        }
        Ok(ChamberRingElement { values })
    }

    pub fn apply_c(&self, v: &ChamberRingElement) -> BigInt {
        v.values[self.base].b.clone()
    }

    fn coordinates(lattice: &BLattice, v: &ChamberRingElement, what: &str) -> Result<Vec<BigInt>> {
        lattice
            .lattice
            .coordinates(&v.to_vector())
            .ok_or_else(|| Error::NotInImage(format!("{what} leaves the target lattice: {v}")))
    }

    pub fn a_matrix(&self) -> Result<Matrix> {
        self.deleted
            .lattice
            .basis()
            .iter()
            .map(|v| {
                let image = self.apply_a(&ChamberRingElement::from_vector(v));
                Self::coordinates(&self.full, &image, "a")
            })
            .collect()
    }

    pub fn b_matrix(&self) -> Result<Matrix> {
        self.full
            .lattice
            .basis()
            .iter()
            .map(|v| {
                let image = self.apply_b(&ChamberRingElement::from_vector(v))?;
                Self::coordinates(&self.restricted, &image, "b")
            })
            .collect()
    }

    pub fn c_matrix(&self) -> Matrix {
        self.restricted
            .lattice
            .basis()
            .iter()
            .map(|v| vec![self.apply_c(&ChamberRingElement::from_vector(v))])
            .collect()
    }
}

/// Requires `A` simple and `H_n ∩ ∩_{i<n} H_i^-` nonempty.
pub fn build_b_sequence(arrangement: &Arrangement) -> Result<BSequenceMaps> {
    require_nonempty(arrangement)?;
    let n = arrangement.len() - 1;
    let full = b_lattice(arrangement)?;
    let deleted_arrangement = arrangement.delete()?;
    let deleted = b_lattice(&deleted_arrangement)?;
    let restriction = restrict(arrangement)?;
    let restricted = b_lattice(&restriction.arrangement)?;

    if arrangement.delta_witness().is_none() {
        return Err(Error::PreconditionFailed("Δ is empty".into()));
    }
    let mut on_h = vec![Sign::Neg; n];
    on_h.push(Sign::Zero);
    if arrangement.realize(&SignVector(on_h)).is_none() {
        return Err(Error::PreconditionFailed(format!(
            "H{} does not cross the all-minus chamber of the other hyperplanes",
            n + 1
        )));
    }

    let chambers = enumerate_chambers(arrangement);
    let lookup: HashMap<&SignVector, usize> =
        chambers.iter().map(|c| (&c.sign, c.index)).collect();
    let deleted_chambers = enumerate_chambers(&deleted_arrangement);
    let deleted_lookup: HashMap<&SignVector, usize> =
        deleted_chambers.iter().map(|c| (&c.sign, c.index)).collect();
    let merge = chambers
        .iter()
        .map(|c| {
            let head = SignVector(c.sign.0[..n].to_vec());
            deleted_lookup
                .get(&head)
                .copied()
                .ok_or_else(|| Error::Internal(format!("{head} is not a chamber of A'")))
        })
        .collect::<Result<Vec<_>>>()?;

    let restricted_chambers = enumerate_chambers(&restriction.arrangement);
    let mut pairs = Vec::with_capacity(restricted_chambers.len());
    let mut base = None;
    for chamber in &restricted_chambers {
        let point = restriction.lift(&chamber.witness);
        let head = arrangement.sign_at(&point).0[..n].to_vec();
        if head.iter().all(|&s| s == Sign::Neg) {
            base = Some(chamber.index);
        }
        let side = |s: Sign| {
            let mut signs = head.clone();
            signs.push(s);
            let signs = SignVector(signs);
            lookup
                .get(&signs)
                .copied()
                .ok_or_else(|| Error::NotSimple(format!("{signs} is not a chamber next to H_n")))
        };
        pairs.push((side(Sign::Pos)?, side(Sign::Neg)?));
    }
    let base = base.ok_or_else(|| {
        Error::PreconditionFailed("Δ ∩ H_n is not a chamber of A''".into())
    })?;

    Ok(BSequenceMaps {
        deleted,
        full,
        restricted,
        restriction,
        merge,
        pairs,
        base,
    })
}

/// Exactness of the `B` sequence, plus commutation with `h` against the `P`
/// sequence.
pub fn certify_exactness_b(arrangement: &Arrangement) -> Result<CertificateReport> {
    let maps = build_b_sequence(arrangement)?;
    let mut report = CertificateReport::new("delres-b");
    let dims = [maps.deleted.rank(), maps.full.rank(), maps.restricted.rank()];
    report.note(format!(
        "ranks: B(A') {}, B(A) {}, B(A'') {}",
        dims[0], dims[1], dims[2]
    ));

    let a = maps.a_matrix();
    let b = maps.b_matrix();
    let (a, b) = match (a, b) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            for (name, result) in [("a", a.err()), ("b", b.err())] {
                if let Some(e) = result {
                    report.check(format!("{name} well defined"), false, e.to_string());
                }
            }
            return Ok(report);
        }
    };
    report.check("a, b well defined", true, "images land in the target lattices");
    let c = maps.c_matrix();
    check_exact_sequence(&mut report, ["a", "b", "c"], dims, &a, &b, &c);

    match build_p_sequence(arrangement) {
        Ok(p) => commutation_checks(&mut report, &maps, &p),
        Err(e) => report.check("commutation", false, format!("P sequence unavailable: {e}")),
    }
    Ok(report)
}

fn commutation_checks(report: &mut CertificateReport, maps: &BSequenceMaps, p: &SequenceMaps) {
    let alpha_ok = p.alpha.iter().enumerate().all(|(j, row)| {
        p.ring.image_of(&RingElement::new(row.clone())) == maps.apply_a(p.deleted.h_image(j))
    });
    report.check("h∘α = a∘h", alpha_ok, format!("{} basis elements", p.deleted.rank()));

    let beta_ok = p.beta.iter().enumerate().all(|(j, row)| {
        maps.apply_b(p.ring.h_image(j))
            .is_ok_and(|v| v == p.restricted.image_of(&RingElement::new(row.clone())))
    });
    report.check("h∘β = b∘h", beta_ok, format!("{} basis elements", p.ring.rank()));

    let gamma_ok = p
        .gamma
        .iter()
        .enumerate()
        .all(|(j, row)| maps.apply_c(p.restricted.h_image(j)) == row[0]);
    report.check("γ = c∘h", gamma_ok, format!("{} basis elements", p.restricted.rank()));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::int;

    #[test]
    fn point_p_sequence() {
        let maps = build_p_sequence(&catalog::point()).unwrap();
        assert_eq!(maps.deleted.rank(), 2);
        assert_eq!(maps.ring.rank(), 3);
        assert_eq!(maps.restricted.rank(), 2);
        assert_eq!(maps.alpha, vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        assert_eq!(
            maps.beta,
            vec![vec![int(0), int(0)], vec![int(0), int(0)], vec![int(1), int(0)]]
        );
        assert_eq!(maps.gamma, vec![vec![int(0)], vec![int(1)]]);
        assert!(certify_exactness_p(&catalog::point()).unwrap().passed());
    }

    #[test]
    fn p_sequence_examples() {
        let maps = build_p_sequence(&catalog::two_points()).unwrap();
        assert_eq!((maps.deleted.rank(), maps.ring.rank(), maps.restricted.rank()), (3, 4, 2));
        for a in [
            catalog::generic_three_lines(),
            catalog::concurrent_three_lines(),
            catalog::boolean(3),
            catalog::generic_central(3),
        ] {
            let report = certify_exactness_p(&a).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn b_sequence_examples() {
        let a = normalize_for_restriction(&catalog::generic_three_lines()).unwrap();
        let report = certify_exactness_b(&a).unwrap();
        assert!(report.passed(), "{report}");
        let report = certify_exactness_b(&catalog::point()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(matches!(
            certify_exactness_b(&catalog::two_points()),
            Err(Error::PreconditionFailed(_))
        ));
        let fixed = normalize_for_restriction(&catalog::two_points()).unwrap();
        assert!(certify_exactness_b(&fixed).unwrap().passed());
        assert!(matches!(
            certify_exactness_b(&catalog::concurrent_three_lines()),
            Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn repeated_last_hyperplane_is_rejected() {
        let a = Arrangement::from_integer_rows(1, &[&[1, 0], &[1, -1], &[-2, 0]]).unwrap();
        assert!(matches!(certify_exactness_p(&a), Err(Error::PreconditionFailed(_))));
        let moved = Arrangement::from_integer_rows(1, &[&[1, 0], &[-2, 0], &[1, -1]]).unwrap();
        assert!(certify_exactness_p(&moved).unwrap().passed());
    }

    #[test]
    fn b_of_h_en_is_one() {
        let a = normalize_for_restriction(&catalog::boolean(2)).unwrap();
        let maps = build_b_sequence(&a).unwrap();
        let ring = KRing::new(&a).unwrap();
        let image = maps.apply_b(&ring.generator_image(1)).unwrap();
        assert_eq!(image, ChamberRingElement::one(image.len()));
    }
}
