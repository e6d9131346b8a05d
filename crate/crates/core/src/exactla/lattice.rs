use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A subgroup of `Z^m` with a basis in canonical row Hermite normal form:
/// pivots strictly increase left to right, pivot entries are positive and
/// every entry above a pivot lies in `[0, pivot)`. Equal lattices therefore
/// have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut row = vec![BigInt::zero(); ambient];
                row[i] = BigInt::one();
                row
            })
            .collect();
        IntegerLattice {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Coordinates of `v` over the canonical basis, if `v` is a member.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        reduce(&self.basis, &self.pivots, v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerLattice(Z^{}; ", self.ambient)?;
        f.debug_list()
            .entries(self.basis.iter().map(|row| {
                row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            }))
            .finish()?;
        write!(f, ")")
    }
}

/// Expresses `v` over echelon rows, returning `None` if it is not in their span
/// over the integers.
fn reduce(rows: &[Vec<BigInt>], pivots: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coeffs = Vec::with_capacity(rows.len());
    for (row, &p) in rows.iter().zip(pivots) {
        if rest[..p].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, r) = rest[p].div_rem(&row[p]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for c in p..rest.len() {
                if !row[c].is_zero() {
                    rest[c] -= &q * &row[c];
                }
            }
        }
        coeffs.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coeffs)
}

/// Result of row-reducing a generator list `M` to Hermite form, `U·M = H`
/// with `U` unimodular.
#[derive(Debug, Clone)]
pub struct HermiteDecomposition {
    pub hermite: IntegerLattice,
    /// Rows of `U` producing the nonzero rows of `H`, in the same order.
    pub transform: Vec<Vec<BigInt>>,
    /// Rows of `U` producing zero rows: a basis of the left kernel of `M`.
    pub kernel: Vec<Vec<BigInt>>,
}

fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt], from: usize) {
    for c in from..target.len() {
        if !source[c].is_zero() {
            target[c] -= q * &source[c];
        }
    }
}

fn hermite_core(
    ambient: usize,
    generators: &[Vec<BigInt>],
    track: bool,
) -> (IntegerLattice, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let k = generators.len();
    let mut rows: Vec<Vec<BigInt>> = generators.to_vec();
    for r in &rows {
        assert_eq!(r.len(), ambient, "generator length mismatch");
    }
    let mut transform: Vec<Vec<BigInt>> = if track {
        (0..k)
            .map(|i| {
                let mut u = vec![BigInt::zero(); k];
                u[i] = BigInt::one();
                u
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ambient {
        if next == k {
            break;
        }
        loop {
            let best = (next..k)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(next, best);
            if track {
                transform.swap(next, best);
            }
            let mut done = true;
            for r in next + 1..k {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[next][col]);
                let (head, tail) = rows.split_at_mut(r);
                axpy(&mut tail[0], &q, &head[next], col);
                if track {
                    let (uh, ut) = transform.split_at_mut(r);
                    axpy(&mut ut[0], &q, &uh[next], 0);
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if next < k && !rows[next][col].is_zero() {
            if rows[next][col].is_negative() {
                rows[next].iter_mut().for_each(|v| *v = -&*v);
                if track {
                    transform[next].iter_mut().for_each(|v| *v = -&*v);
                }
            }
            for r in 0..next {
                let q = rows[r][col].div_floor(&rows[next][col]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(next);
                axpy(&mut head[r], &q, &tail[0], col);
                if track {
                    let (uh, ut) = transform.split_at_mut(next);
                    axpy(&mut uh[r], &q, &ut[0], 0);
                }
            }
            pivots.push(col);
            next += 1;
        }
    }
    let kernel = if track {
        transform.split_off(next)
    } else {
        Vec::new()
    };
    rows.truncate(next);
    (
        IntegerLattice {
            ambient,
            basis: rows,
            pivots,
        },
        transform,
        kernel,
    )
}

/// Canonical Hermite basis of the lattice generated by `vectors` in `Z^ambient`.
pub fn hnf(ambient: usize, vectors: &[Vec<BigInt>]) -> IntegerLattice {
    hermite_core(ambient, vectors, false).0
}

pub fn hermite_with_transform(ambient: usize, vectors: &[Vec<BigInt>]) -> HermiteDecomposition {
    let (hermite, transform, kernel) = hermite_core(ambient, vectors, true);
    HermiteDecomposition {
        hermite,
        transform,
        kernel,
    }
}

pub fn lattice_equal(lhs: &IntegerLattice, rhs: &IntegerLattice) -> bool {
    lhs == rhs
}

/// The lattice `{ y ∈ Z^k : y · M = 0 }` where `M` has the given `k` rows.
pub fn left_kernel(cols: usize, rows: &[Vec<BigInt>]) -> IntegerLattice {
    let decomposition = hermite_with_transform(cols, rows);
    hnf(rows.len(), &decomposition.kernel)
}

/// Repeated integer solves against a fixed generator list.
#[derive(Debug, Clone)]
pub struct LatticeSolver {
    generators: usize,
    decomposition: HermiteDecomposition,
}

impl LatticeSolver {
    pub fn new(ambient: usize, generators: &[Vec<BigInt>]) -> Self {
        LatticeSolver {
            generators: generators.len(),
            decomposition: hermite_with_transform(ambient, generators),
        }
    }

    pub fn lattice(&self) -> &IntegerLattice {
        &self.decomposition.hermite
    }

    /// Integer coefficients `z` with `Σ z_i · generator_i = v`. When the
    /// generators are independent the answer is unique.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.decomposition.hermite.coordinates(v)?;
        let mut z = vec![BigInt::zero(); self.generators];
        for (coeff, u) in y.iter().zip(&self.decomposition.transform) {
            if coeff.is_zero() {
                continue;
            }
            for (zi, ui) in z.iter_mut().zip(u) {
                *zi += coeff * ui;
            }
        }
        Some(z)
    }
}

/// An integer vector `z` with `M z = v`, where `M` is given by its rows.
pub fn integer_solve(matrix: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(matrix.len(), v.len(), "row count mismatch");
    let cols = matrix.first().map_or(0, Vec::len);
    let columns: Vec<Vec<BigInt>> = (0..cols)
        .map(|c| matrix.iter().map(|row| row[c].clone()).collect())
        .collect();
    LatticeSolver::new(v.len(), &columns).solve(v)
}
