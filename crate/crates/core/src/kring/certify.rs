use std::collections::BTreeMap;

use super::chamber_ring::LineValue;
use super::ideal::ideal_generators;
use super::KRing;
use crate::arrangement::{Arrangement, Sign};
use crate::certificate::CertificateReport;
use crate::error::{Error, Result};

/// Checks, on this instance, that `P(A)` embeds in the chamber ring as a
/// ring: every generator of `I_A` vanishes there, the `R + 1` basis images
/// are independent, and every product of basis elements has integer
/// coordinates. On failure the check is repeated after reorienting so that
/// `Δ` is nonempty, and both outcomes are reported.
pub fn certify_theorem_pl(arrangement: &Arrangement) -> Result<CertificateReport> {
    let mut report = certify_pl_as_given(arrangement)?;
    if !report.passed() && !arrangement.is_empty() {
        let ring = KRing::new(arrangement)?;
        let base = ring.chambers()[0].sign.clone();
        let normalized = arrangement.normalize_delta(&base)?;
        report.normalized_retry = Some(Box::new(certify_pl_as_given(&normalized)?));
    }
    Ok(report)
}

fn certify_pl_as_given(arrangement: &Arrangement) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("pl");
    let ring = KRing::new(arrangement)?;
    let r = ring.chamber_count();

    report.check(
        "basis size",
        ring.rank() == r + 1,
        format!("{} basis elements, {} chambers", ring.rank(), r),
    );

    let generators = ideal_generators(arrangement)?;
    let mut per_family: BTreeMap<u8, usize> = BTreeMap::new();
    let mut offending = Vec::new();
    for g in &generators {
        *per_family.entry(g.family).or_default() += 1;
        if !ring.evaluate(&g.poly).is_zero() {
            offending.push(g.to_string());
        }
    }
    let counts = per_family
        .iter()
        .map(|(f, k)| format!("family {f}: {k}"))
        .collect::<Vec<_>>()
        .join(", ");
    report.check(
        "kernel containment",
        offending.is_empty(),
        if offending.is_empty() {
            format!("{} generators vanish ({counts})", generators.len())
        } else {
            format!("nonzero image: {}", offending.join("; "))
        },
    );

    let lattice_rank = ring.image_lattice().rank();
    report.check(
        "injectivity",
        lattice_rank == r + 1,
        format!("basis image lattice has rank {lattice_rank} in Z^{}", 2 * r),
    );

    let mut products = 0usize;
    let mut failure = None;
    'outer: for j in 0..ring.rank() {
        for k in j..ring.rank() {
            let product = ring.h_image(j) * ring.h_image(k);
            products += 1;
            if ring.to_basis(&product).is_err() {
                failure = Some(format!(
                    "{} * {} is not integral over the basis",
                    ring.basis().elements()[j],
                    ring.basis().elements()[k]
                ));
                break 'outer;
            }
        }
    }
    report.check(
        "closure",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{products} basis products re-expressed over Z")),
    );
    Ok(report)
}

/// For a central arrangement, checks chamber by chamber that
/// `η_0 + η_i - η_0 η_i` restricts to `x` where `ω_0` and `ω_i` have opposite
/// signs and to `0` elsewhere.
pub fn certify_decone_identity(arrangement: &Arrangement, base: usize) -> Result<CertificateReport> {
    if !arrangement.is_central() {
        return Err(Error::PreconditionFailed(
            "decone identity needs a central arrangement".into(),
        ));
    }
    arrangement.check_index(base)?;
    let ring = KRing::new(arrangement)?;
    let eta0 = ring.generator_image(base);
    let mut report = CertificateReport::new("decone");
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for i in (0..arrangement.len()).filter(|&i| i != base) {
        let eta = ring.generator_image(i);
        let value = &(&eta0 + &eta) - &(&eta0 * &eta);
        for (k, sign) in ring.chamber_signs().iter().enumerate() {
            let opposite = (sign.get(base) == Sign::Pos) != (sign.get(i) == Sign::Pos);
            let expected = if opposite {
                LineValue::x()
            } else {
                LineValue::zero()
            };
            checked += 1;
            if value.values[k] != expected {
                failures.push(format!(
                    "chamber {sign}, i={}: got {}, expected {expected}",
                    i + 1,
                    value.values[k]
                ));
            }
        }
    }
    report.check(
        "opposite-sign rule",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{checked} chamber/hyperplane pairs")
        } else {
            failures.join("; ")
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn pl_examples() {
        let report = certify_theorem_pl(&catalog::point()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checks[2].detail.contains("rank 3"));
        let report = certify_theorem_pl(&catalog::generic_three_lines()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checks[2].detail.contains("rank 8"));
        let report = certify_theorem_pl(&catalog::concurrent_three_lines()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checks[2].detail.contains("rank 7"));
        assert!(report.normalized_retry.is_none());
    }

    #[test]
    fn decone_examples() {
        let a = catalog::two_central_lines();
        let ring = KRing::new(&a).unwrap();
        let eta0 = ring.generator_image(0);
        let eta1 = ring.generator_image(1);
        let value = &(&eta0 + &eta1) - &(&eta0 * &eta1);
        let at = |s: &str| {
            let k = ring.chamber_index(&crate::arrangement::SignVector::parse(s).unwrap()).unwrap();
            value.values[k].clone()
        };
        assert_eq!(at("+-"), LineValue::x());
        assert_eq!(at("++"), LineValue::zero());
        assert_eq!(at("--"), LineValue::zero());
        assert!(certify_decone_identity(&a, 0).unwrap().passed());
        assert!(matches!(
            certify_decone_identity(&catalog::two_points(), 0),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
