#![allow(dead_code)]

use arrkt::arrangement::Arrangement;
use arrkt::catalog;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random integer arrangement of `n` distinct hyperplanes in `R^d`,
/// coefficients in `[-3, 3]`, all through the origin when `central`.
pub fn random_arrangement(rng: &mut ChaCha8Rng, d: usize, n: usize, central: bool) -> Arrangement {
    // a line has only one point through the origin
    let central = central && d > 1;
    loop {
        let a = random_rows(rng, d, n, central);
        if a.repeated_hyperplanes().is_empty() {
            return a;
        }
    }
}

/// Like [`random_arrangement`] but repeats are allowed.
pub fn random_rows(rng: &mut ChaCha8Rng, d: usize, n: usize, central: bool) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| loop {
            let mut row: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
            if central {
                row[d] = 0;
            }
            if row[..d].iter().any(|&v| v != 0) {
                break row;
            }
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Arrangement::from_integer_rows(d, &refs).expect("nonzero normals")
}

pub fn random_corpus(seed: u64) -> Vec<(String, Arrangement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = [
        (1, 4, false),
        (2, 4, false),
        (2, 5, false),
        (2, 6, false),
        (2, 4, true),
        (3, 4, false),
        (3, 5, false),
        (3, 6, false),
        (3, 4, true),
        (3, 5, true),
        (2, 8, false),
        (3, 8, false),
    ];
    shapes
        .iter()
        .enumerate()
        .map(|(k, &(d, n, central))| {
            let a = random_arrangement(&mut rng, d, n, central);
            (format!("random-{k} (d={d}, n={n}{})", if central { ", central" } else { "" }), a)
        })
        .collect()
}

/// Every built-in example plus seeded random arrangements.
pub fn corpus() -> Vec<(String, Arrangement)> {
    let mut all = catalog::builtin_corpus();
    all.extend(random_corpus(0x5eed));
    all
}
