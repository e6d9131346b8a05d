//! The lattice `B(A)` of chamber-ring elements that satisfy the face
//! conditions, for simple arrangements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{enumerate_chambers, enumerate_faces, Arrangement, Face, Sign, SignVector};
use crate::certificate::CertificateReport;
use crate::error::Result;
use crate::exactla::{hnf, left_kernel, IntegerLattice};
use crate::kring::{ChamberRingElement, KRing};

/// `ε_F(C)`: the product of the signs of `C` over the zero set of `F`.
pub fn epsilon(face: &SignVector, chamber: &SignVector) -> i8 {
    face.zeros()
        .into_iter()
        .map(|i| if chamber.get(i) == Sign::Neg { -1 } else { 1 })
        .product()
}

#[derive(Debug, Clone)]
pub struct FaceCondition {
    pub face: Face,
    /// `(chamber index, ε_F(C))` for every coface.
    pub epsilon: Vec<(usize, i8)>,
    pub codim: usize,
}

impl FaceCondition {
    /// `2^(codim-1)`, the modulus for the alternating sum of `x`-coefficients.
    pub fn modulus(&self) -> BigInt {
        BigInt::one() << (self.codim - 1)
    }

    /// Alternating sums of constant terms and of `x`-coefficients.
    pub fn sums(&self, v: &ChamberRingElement) -> (BigInt, BigInt) {
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        for &(c, e) in &self.epsilon {
            let value = &v.values[c];
            if e > 0 {
                a += &value.a;
                b += &value.b;
            } else {
                a -= &value.a;
                b -= &value.b;
            }
        }
        (a, b)
    }

    pub fn holds(&self, v: &ChamberRingElement) -> bool {
        let (a, b) = self.sums(v);
        a.is_zero() && b.is_multiple_of(&self.modulus())
    }
}

impl fmt::Display for FaceCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "face {} (codim {}):", self.face.sign, self.codim)?;
        for &(c, e) in &self.epsilon {
            write!(f, " {}C{}", if e > 0 { '+' } else { '-' }, c)?;
        }
        Ok(())
    }
}

/// One condition per face of positive codimension.
pub fn face_conditions(arrangement: &Arrangement) -> Result<Vec<FaceCondition>> {
    let chambers = enumerate_chambers(arrangement);
    Ok(enumerate_faces(arrangement)?
        .into_iter()
        .filter(|face| face.codim > 0)
        .map(|face| {
            let epsilon = face
                .cofaces
                .iter()
                .map(|&c| (c, epsilon(&face.sign, &chambers[c].sign)))
                .collect();
            FaceCondition {
                codim: face.codim,
                epsilon,
                face,
            }
        })
        .collect())
}

#[derive(Debug, Clone)]
pub struct BLattice {
    pub chambers: usize,
    pub conditions: Vec<FaceCondition>,
    /// Coordinates interleaved as `(a_C, b_C)` per chamber.
    pub lattice: IntegerLattice,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member,
    Violated {
        face: SignVector,
        constant_sum: BigInt,
        x_sum: BigInt,
        modulus: BigInt,
    },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Member => write!(f, "member"),
            Membership::Violated {
                face,
                constant_sum,
                x_sum,
                modulus,
            } => write!(
                f,
                "violated at face {face}: constant sum {constant_sum}, x sum {x_sum} (mod {modulus})"
            ),
        }
    }
}

impl BLattice {
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn membership(&self, v: &ChamberRingElement) -> Membership {
        for condition in &self.conditions {
            if !condition.holds(v) {
                let (constant_sum, x_sum) = condition.sums(v);
                return Membership::Violated {
                    face: condition.face.sign.clone(),
                    constant_sum,
                    x_sum,
                    modulus: condition.modulus(),
                };
            }
        }
        Membership::Member
    }
}

pub fn b_lattice(arrangement: &Arrangement) -> Result<BLattice> {
    let conditions = face_conditions(arrangement)?;
    let r = enumerate_chambers(arrangement).len();

    // constant terms: Σ ε a = 0 at every face
    let mut a_rows = vec![vec![BigInt::zero(); conditions.len()]; r];
    for (j, condition) in conditions.iter().enumerate() {
        for &(c, e) in &condition.epsilon {
            a_rows[c][j] = BigInt::from(e);
        }
    }
    let a_part = left_kernel(conditions.len(), &a_rows);

    // x-coefficients: Σ ε b - 2^(k-1) t = 0, one auxiliary t per congruence
    let congruences: Vec<&FaceCondition> = conditions.iter().filter(|c| c.codim > 1).collect();
    let m = congruences.len();
    let mut b_rows = vec![vec![BigInt::zero(); m]; r + m];
    for (j, condition) in congruences.iter().enumerate() {
        for &(c, e) in &condition.epsilon {
            b_rows[c][j] = BigInt::from(e);
        }
        b_rows[r + j][j] = -condition.modulus();
    }
    let b_full = left_kernel(m, &b_rows);
    let b_projected: Vec<Vec<BigInt>> = b_full.basis().iter().map(|v| v[..r].to_vec()).collect();
    let b_part = hnf(r, &b_projected);

    let mut generators = Vec::with_capacity(a_part.rank() + b_part.rank());
    for v in a_part.basis() {
        let mut w = vec![BigInt::zero(); 2 * r];
        for (c, value) in v.iter().enumerate() {
            w[2 * c] = value.clone();
        }
        generators.push(w);
    }
    for v in b_part.basis() {
        let mut w = vec![BigInt::zero(); 2 * r];
        for (c, value) in v.iter().enumerate() {
            w[2 * c + 1] = value.clone();
        }
        generators.push(w);
    }
    Ok(BLattice {
        chambers: r,
        conditions,
        lattice: hnf(2 * r, &generators),
    })
}

pub fn membership(arrangement: &Arrangement, v: &ChamberRingElement) -> Result<Membership> {
    let conditions = face_conditions(arrangement)?;
    let lattice = BLattice {
        chambers: v.len(),
        conditions,
        lattice: IntegerLattice::zero(0),
    };
    Ok(lattice.membership(v))
}

/// Checks that the basis images land in `B(A)`, that they span exactly
/// `B(A)`, and that `B(A)` is closed under multiplication. A failing run is
/// repeated with `Δ` made nonempty.
pub fn certify_pb(arrangement: &Arrangement) -> Result<CertificateReport> {
    let mut report = certify_pb_as_given(arrangement)?;
    if !report.passed() && !arrangement.is_empty() {
        let base = enumerate_chambers(arrangement)[0].sign.clone();
        let normalized = arrangement.normalize_delta(&base)?;
        report.normalized_retry = Some(Box::new(certify_pb_as_given(&normalized)?));
    }
    Ok(report)
}

fn certify_pb_as_given(arrangement: &Arrangement) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("pb");
    let b = b_lattice(arrangement)?;
    let ring = KRing::new(arrangement)?;

    let strays: Vec<String> = ring
        .h_images()
        .iter()
        .zip(ring.basis().elements())
        .filter_map(|(image, m)| match b.membership(image) {
            Membership::Member => None,
            violation => Some(format!("{m}: {violation}")),
        })
        .collect();
    report.check(
        "lands",
        strays.is_empty(),
        if strays.is_empty() {
            format!(
                "{} basis images satisfy {} face conditions",
                ring.rank(),
                b.conditions.len()
            )
        } else {
            strays.join("; ")
        },
    );

    let image = ring.image_lattice();
    report.check(
        "isomorphism",
        image == &b.lattice,
        format!("image rank {}, B(A) rank {}", image.rank(), b.rank()),
    );

    let basis: Vec<ChamberRingElement> = b
        .lattice
        .basis()
        .iter()
        .map(|v| ChamberRingElement::from_vector(v))
        .collect();
    let mut failure = None;
    let mut products = 0usize;
    'outer: for j in 0..basis.len() {
        for k in j..basis.len() {
            products += 1;
            let product = &basis[j] * &basis[k];
            if let Membership::Violated { face, .. } = b.membership(&product) {
                failure = Some(format!("product of lattice basis vectors {j}, {k} leaves B(A) at {face}"));
                break 'outer;
            }
        }
    }
    report.check(
        "closure",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{products} products of lattice basis vectors stay in B(A)")),
    );
    Ok(report)
}

/// Largest absolute coordinate of a lattice basis; used by reports.
pub fn height(lattice: &IntegerLattice) -> BigInt {
    lattice
        .basis()
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_default()
}
