use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{primitive_integer_vector, Rational};

/// Dense matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows. `cols` is needed to describe a matrix with
    /// no rows; otherwise it must match every row length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows in RationalMatrix");
            entries.extend(row);
        }
        RationalMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        rational_rank(self)
    }

    /// Reduced row echelon form together with its pivot columns.
    fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.entries.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination on the
/// denominator-cleared rows.
pub fn rational_rank(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| primitive_integer_vector(m.row(r)))
        .collect();
    let cols = m.cols();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let lead = rows[r][col].clone();
            for c in 0..cols {
                let v = (&pivot * &rows[r][c] - &lead * &rows[rank][c]) / &prev;
                rows[r][c] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// A basis of the right kernel `{ v : M v = 0 }`, one vector per free column.
pub fn rational_kernel(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(r, f).clone();
            }
            v
        })
        .collect()
}

/// Some rational solution of `M v = rhs`, or `None` if the system is
/// inconsistent.
pub fn rational_solve(m: &RationalMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(rhs.len(), m.rows());
    let mut augmented = RationalMatrix::zeros(m.rows(), m.cols() + 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            augmented.set(r, c, m.get(r, c).clone());
        }
        augmented.set(r, m.cols(), rhs[r].clone());
    }
    let (reduced, pivots) = augmented.rref();
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut solution = vec![Rational::zero(); m.cols()];
    for (r, &p) in pivots.iter().enumerate() {
        solution[p] = reduced.get(r, m.cols()).clone();
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, rat_vec};

    fn matrix(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(cols, rows.iter().map(|r| rat_vec(r)).collect())
    }

    /// Rank as the size of the largest nonvanishing minor.
    fn rank_by_minors(m: &RationalMatrix) -> usize {
        fn det(m: &[Vec<Rational>]) -> Rational {
            if m.is_empty() {
                return Rational::one();
            }
            let mut total = Rational::zero();
            for (j, lead) in m[0].iter().enumerate() {
                let minor: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = lead * det(&minor);
                total = if j % 2 == 0 { total + term } else { total - term };
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == k)
                .map(|s| (0..n).filter(|i| s & (1 << i) != 0).collect())
                .collect()
        }
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<Rational>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect())
                        .collect();
                    if !det(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&RationalMatrix::identity(2)), 2);
        assert_eq!(rational_rank(&RationalMatrix::zeros(3, 4)), 0);
        let m = matrix(&[&[1, 0, 0], &[1, 0, -1], &[1, 0, -2]]);
        assert_eq!(rank_by_minors(&m), 2);
        assert_eq!(rational_rank(&m), 2);
    }

    #[test]
    fn rank_handles_fractions() {
        let m = RationalMatrix::from_rows(
            2,
            vec![
                vec![crate::exactla::ratio(1, 2), crate::exactla::ratio(1, 3)],
                vec![rat(3), rat(2)],
            ],
        );
        assert_eq!(rational_rank(&m), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let m = matrix(&[&[0, 1, 1], &[1, 0, 1]]);
        let kernel = rational_kernel(&m);
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0], rat_vec(&[-1, -1, 1]));
        let solution = rational_solve(&m, &rat_vec(&[2, 3])).unwrap();
        assert_eq!(
            (0..2)
                .map(|r| crate::exactla::dot(m.row(r), &solution))
                .collect::<Vec<_>>(),
            rat_vec(&[2, 3])
        );
        let parallel = matrix(&[&[1, 0], &[1, 0]]);
        assert!(rational_solve(&parallel, &rat_vec(&[0, 1])).is_none());
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_minors(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let m = RationalMatrix::from_rows(4, entries.chunks(4).map(rat_vec).collect());
            proptest::prop_assert_eq!(rational_rank(&m), rank_by_minors(&m));
            proptest::prop_assert_eq!(rational_kernel(&m).len(), 4 - rank_by_minors(&m));
        }
    }
}
