//! Dimension counts for the rational equivariant K- and KO-rings.

use std::fmt;

use crate::arrangement::{enumerate_chambers, Arrangement};
use crate::error::{Error, Result};
use crate::ormatroid::MatroidData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    /// `b[k]` = number of nbc-sets of size `k`.
    pub b: Vec<usize>,
    pub chambers: usize,
}

impl BettiProfile {
    pub fn total(&self) -> usize {
        self.b.iter().sum()
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(ToString::to_string).collect();
        write!(f, "b = ({}), R = {}", b.join(","), self.chambers)
    }
}

pub fn betti(arrangement: &Arrangement) -> Result<BettiProfile> {
    let matroid = MatroidData::compute(arrangement)?;
    let mut b = Vec::new();
    for set in &matroid.nbc_sets {
        if b.len() <= set.len() {
            b.resize(set.len() + 1, 0);
        }
        b[set.len()] += 1;
    }
    let profile = BettiProfile {
        b,
        chambers: enumerate_chambers(arrangement).len(),
    };
    if profile.total() != profile.chambers {
        return Err(Error::Internal(format!(
            "nbc count {} differs from chamber count {}",
            profile.total(),
            profile.chambers
        )));
    }
    Ok(profile)
}

/// One row of the degree table: OS degree `k` sits in cohomological degree
/// `k`, is invariant under conjugation iff `k` is even, and survives in KO
/// iff `k` is divisible by 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub betti: usize,
    pub in_k: bool,
    pub in_ko: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KDimensions {
    pub profile: BettiProfile,
    pub dim_k: usize,
    pub dim_ko: usize,
    pub dim_line_q: usize,
    pub gap: usize,
    pub degrees: Vec<DegreeRow>,
    pub note: String,
}

pub fn k_dimensions(arrangement: &Arrangement) -> Result<KDimensions> {
    let profile = betti(arrangement)?;
    let r = profile.chambers;
    let degrees: Vec<DegreeRow> = profile
        .b
        .iter()
        .enumerate()
        .map(|(degree, &betti)| DegreeRow {
            degree,
            betti,
            in_k: degree % 2 == 0,
            in_ko: degree % 4 == 0,
        })
        .collect();
    let even: usize = degrees.iter().filter(|row| row.in_k).map(|row| row.betti).sum();
    let quarter: usize = degrees.iter().filter(|row| row.in_ko).map(|row| row.betti).sum();
    let dim_k = even + r;
    let dim_line_q = r + 1;
    Ok(KDimensions {
        dim_k,
        dim_ko: quarter + r,
        dim_line_q,
        gap: dim_k - dim_line_q,
        degrees,
        note: format!(
            "the KO count assumes the chamber factor contributes {r} over Q, as for K; \
             summing all even degrees instead gives {}",
            even + r
        ),
        profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn betti_examples() {
        assert_eq!(betti(&catalog::point()).unwrap().b, vec![1, 1]);
        let lines = betti(&catalog::generic_three_lines()).unwrap();
        assert_eq!((lines.b.clone(), lines.chambers), (vec![1, 3, 3], 7));
        let concurrent = betti(&catalog::concurrent_three_lines()).unwrap();
        assert_eq!((concurrent.b.clone(), concurrent.chambers), (vec![1, 3, 2], 6));
    }

    #[test]
    fn dimension_examples() {
        let d = k_dimensions(&catalog::point()).unwrap();
        assert_eq!((d.dim_k, d.dim_line_q, d.gap), (3, 3, 0));
        let d = k_dimensions(&catalog::generic_three_lines()).unwrap();
        assert_eq!((d.dim_k, d.dim_line_q, d.gap), (11, 8, 3));
        assert_eq!(d.dim_ko, 8);
        let d = k_dimensions(&Arrangement::empty(2)).unwrap();
        assert_eq!((d.dim_k, d.dim_line_q, d.gap), (2, 2, 0));
    }

    #[test]
    fn gap_vanishes_iff_no_even_classes_above_zero() {
        for (name, a) in catalog::builtin_corpus() {
            let d = k_dimensions(&a).unwrap();
            let even: usize = d.degrees.iter().filter(|r| r.in_k).map(|r| r.betti).sum();
            assert_eq!(d.gap == 0, even == 1, "{name}");
            assert!(d.dim_k >= d.dim_line_q);
        }
    }
}
