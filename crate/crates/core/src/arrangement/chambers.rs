use std::collections::BTreeMap;

use super::{Arrangement, Chamber, Sign, SignVector};
use crate::exactla::{strict_feasible, Rational};

/// A method of listing the realizable full sign vectors of an arrangement.
///
/// Implementations may return chambers in any order; callers receive them
/// sorted by sign vector.
pub trait ChamberStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn realize_all(&self, arrangement: &Arrangement) -> Vec<(SignVector, Vec<Rational>)>;
}

/// Inserts hyperplanes one at a time, splitting every current cell by the new
/// hyperplane and keeping each side that is still realizable.
#[derive(Debug, Default, Clone, Copy)]
pub struct IncrementalInsertion;

impl ChamberStrategy for IncrementalInsertion {
    fn name(&self) -> &'static str {
        "incremental"
    }

    fn realize_all(&self, arrangement: &Arrangement) -> Vec<(SignVector, Vec<Rational>)> {
        let mut cells: Vec<(Vec<Sign>, Vec<Rational>)> =
            vec![(Vec::new(), vec![Rational::default(); arrangement.dim()])];
        for k in 0..arrangement.len() {
            let form = arrangement.form(k);
            let mut next = Vec::with_capacity(cells.len() * 2);
            for (signs, witness) in cells {
                let here = Sign::of(&form.eval(&witness));
                for side in [Sign::Neg, Sign::Pos] {
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
        cells
            .into_iter()
            .map(|(signs, witness)| (SignVector(signs), witness))
            .collect()
    }
}

/// Tests every one of the `2^n` full sign vectors independently. Only
/// practical for small `n`; used as a cross-check.
#[derive(Debug, Default, Clone, Copy)]
pub struct ExhaustiveSigns;

impl ChamberStrategy for ExhaustiveSigns {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn realize_all(&self, arrangement: &Arrangement) -> Vec<(SignVector, Vec<Rational>)> {
        let n = arrangement.len();
        assert!(n < 24, "exhaustive enumeration over 2^{n} sign vectors");
        (0u32..1 << n)
            .filter_map(|mask| {
                let sign = SignVector(
                    (0..n)
                        .map(|i| if mask >> i & 1 == 1 { Sign::Pos } else { Sign::Neg })
                        .collect(),
                );
                arrangement.realize(&sign).map(|w| (sign, w))
            })
            .collect()
    }
}

/// Chamber strategies by name.
pub struct ChamberStrategyRegistry {
    strategies: BTreeMap<&'static str, Box<dyn ChamberStrategy>>,
}

impl ChamberStrategyRegistry {
    pub fn new() -> Self {
        ChamberStrategyRegistry {
            strategies: BTreeMap::new(),
        }
    }

    pub fn standard() -> Self {
        let mut registry = Self::new();
        registry.register(IncrementalInsertion);
        registry.register(ExhaustiveSigns);
        registry
    }

    pub fn register<S: ChamberStrategy + 'static>(&mut self, strategy: S) {
        self.strategies.insert(strategy.name(), Box::new(strategy));
    }

    pub fn get(&self, name: &str) -> Option<&dyn ChamberStrategy> {
        self.strategies.get(name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.keys().copied().collect()
    }
}

impl Default for ChamberStrategyRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

pub fn enumerate_chambers_with(
    arrangement: &Arrangement,
    strategy: &dyn ChamberStrategy,
) -> Vec<Chamber> {
    let mut found = strategy.realize_all(arrangement);
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
        .into_iter()
        .enumerate()
        .map(|(index, (sign, witness))| Chamber {
            index,
            sign,
            witness,
        })
        .collect()
}

/// All chambers, sorted lexicographically by sign vector, with exact
/// interior witnesses.
pub fn enumerate_chambers(arrangement: &Arrangement) -> Vec<Chamber> {
    enumerate_chambers_with(arrangement, &IncrementalInsertion)
}
