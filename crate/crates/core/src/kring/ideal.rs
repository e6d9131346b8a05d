use std::fmt;

use super::poly::FreePoly;
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::ormatroid::{minimal_infeasible_pairs, SignPair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorData {
    None,
    Index(usize),
    Pair(SignPair),
}

/// One generator of the relation ideal `I_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerator {
    pub family: u8,
    pub data: GeneratorData,
    pub poly: FreePoly,
}

impl fmt::Display for IdealGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {}", self.family)?;
        match &self.data {
            GeneratorData::None => {}
            GeneratorData::Index(i) => write!(f, " [i={}]", i + 1)?,
            GeneratorData::Pair(p) => write!(f, " [{p}]")?,
        }
        write!(f, ": {}", self.poly)
    }
}

/// `∏_{S+} e_i · ∏_{S-} (e_j - x)`.
pub fn family4_poly(vars: usize, plus: &[usize], minus: &[usize]) -> FreePoly {
    let x = FreePoly::x(vars);
    let factors: Vec<FreePoly> = plus
        .iter()
        .map(|&i| FreePoly::e(vars, i))
        .chain(minus.iter().map(|&j| &FreePoly::e(vars, j) - &x))
        .collect();
    FreePoly::product(vars, &factors)
}

/// The family-5 numerator
/// `∏_{S+} e_i ∏_{S-} (e_j - x) - ∏_{S+} (e_i - x) ∏_{S-} e_j`, before the
/// division by `x`.
pub fn family5_numerator(vars: usize, plus: &[usize], minus: &[usize]) -> FreePoly {
    &family4_poly(vars, plus, minus) - &family4_poly(vars, minus, plus)
}

/// Generators of `I_A`: the three fixed families, then family 4 for every
/// minimal infeasible sign pair and family 5 for those supported on a circuit.
pub fn ideal_generators(arrangement: &Arrangement) -> Result<Vec<IdealGenerator>> {
    let n = arrangement.len();
    let x = FreePoly::x(n);
    let two = FreePoly::constant(n, 2);
    let mut out = vec![IdealGenerator {
        family: 1,
        data: GeneratorData::None,
        poly: &x * &(&two - &x),
    }];
    for i in 0..n {
        let e = FreePoly::e(n, i);
        out.push(IdealGenerator {
            family: 2,
            data: GeneratorData::Index(i),
            poly: &e * &(&two - &e),
        });
    }
    for i in 0..n {
        let e = FreePoly::e(n, i);
        out.push(IdealGenerator {
            family: 3,
            data: GeneratorData::Index(i),
            poly: &e * &(&e - &x),
        });
    }
    let pairs = minimal_infeasible_pairs(arrangement);
    for pair in &pairs {
        out.push(IdealGenerator {
            family: 4,
            data: GeneratorData::Pair(pair.clone()),
            poly: family4_poly(n, &pair.plus, &pair.minus),
        });
    }
    for pair in pairs.iter().filter(|p| p.family5) {
        out.push(IdealGenerator {
            family: 5,
            data: GeneratorData::Pair(pair.clone()),
            poly: family5_numerator(n, &pair.plus, &pair.minus).divide_by_x()?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn point_generators() {
        let gens = ideal_generators(&catalog::point()).unwrap();
        let text: Vec<String> = gens.iter().map(|g| g.poly.to_string()).collect();
        assert_eq!(text, vec!["2*x - x^2", "2*e1 - e1^2", "e1^2 - x*e1"]);
    }

    #[test]
    fn two_points_family4() {
        let gens = ideal_generators(&catalog::two_points()).unwrap();
        let f4: Vec<_> = gens.iter().filter(|g| g.family == 4).collect();
        assert_eq!(f4.len(), 1);
        // e2 (e1 - x)
        let n = 2;
        let expected = &FreePoly::e(n, 1) * &(&FreePoly::e(n, 0) - &FreePoly::x(n));
        assert_eq!(f4[0].poly, expected);
        assert!(gens.iter().all(|g| g.family != 5));
    }

    #[test]
    fn concurrent_family5() {
        let gens = ideal_generators(&catalog::concurrent_three_lines()).unwrap();
        let f5: Vec<_> = gens.iter().filter(|g| g.family == 5).collect();
        let expected = "-e1*e2 + e1*e3 + e2*e3 - x*e3";
        let canonical = f5
            .iter()
            .find(|g| matches!(&g.data, GeneratorData::Pair(p) if p.plus == vec![0, 1]))
            .expect("canonical split present");
        assert_eq!(canonical.poly.to_string(), expected);
        // the swapped split gives the negative
        for g in &f5 {
            let s = g.poly.to_string();
            let negated = (-&g.poly).to_string();
            assert!(s == expected || negated == expected, "{g}");
        }
    }
}
