//! The ring `P(A)` and its embedding into the chamber ring.
//!
//! Arithmetic happens on chamber-ring images: the embedding is injective, so
//! multiplying images pointwise and re-expressing the product over the nbc
//! basis images (an integer solve) computes the product in `P(A)`.

mod certify;
mod chamber_ring;
mod ideal;
mod poly;

pub use certify::{certify_decone_identity, certify_theorem_pl};
pub use chamber_ring::{ChamberRingElement, LineValue};
pub use ideal::{family4_poly, family5_numerator, ideal_generators, GeneratorData, IdealGenerator};
pub use poly::{FreePoly, Monomial};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::{display_set, enumerate_chambers, Arrangement, Chamber, Sign, SignVector};
use crate::error::{Error, Result};
use crate::exactla::{IntegerLattice, LatticeSolver};
use crate::ormatroid::MatroidData;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisMonomial {
    One,
    X,
    E(Vec<usize>),
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisMonomial::One => write!(f, "1"),
            BasisMonomial::X => write!(f, "x"),
            BasisMonomial::E(set) => write!(f, "e{}", display_set(set)),
        }
    }
}

/// The additive basis `1, x, e_A` (A a nonempty nbc-set, by size then
/// lexicographically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbcBasis {
    elements: Vec<BasisMonomial>,
}

impl NbcBasis {
    pub fn from_nbc_sets(nbc_sets: &[Vec<usize>]) -> Self {
        let mut elements = vec![BasisMonomial::One, BasisMonomial::X];
        elements.extend(
            nbc_sets
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| BasisMonomial::E(s.clone())),
        );
        NbcBasis { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisMonomial] {
        &self.elements
    }

    pub fn position(&self, m: &BasisMonomial) -> Option<usize> {
        self.elements.iter().position(|b| b == m)
    }

    pub fn position_of_set(&self, set: &[usize]) -> Option<usize> {
        if set.is_empty() {
            Some(0)
        } else {
            self.position(&BasisMonomial::E(set.to_vec()))
        }
    }
}

/// Integer coordinates over an [`NbcBasis`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub coords: Vec<BigInt>,
}

impl RingElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        RingElement { coords }
    }

    pub fn basis_vector(len: usize, k: usize) -> Self {
        let mut coords = vec![BigInt::zero(); len];
        coords[k] = BigInt::one();
        RingElement { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale_by(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        RingElement::new(self.coords.iter().map(|c| c * &k).collect())
    }

    pub fn add(&self, other: &RingElement) -> Self {
        RingElement::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RingElement) -> Self {
        RingElement::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn render(&self, basis: &NbcBasis) -> String {
        let mut out = String::new();
        for (c, b) in self.coords.iter().zip(basis.elements()) {
            if c.is_zero() {
                continue;
            }
            let negative = *c < BigInt::zero();
            let magnitude = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            match (magnitude.is_one(), b) {
                (true, _) => out.push_str(&b.to_string()),
                (false, BasisMonomial::One) => out.push_str(&magnitude.to_string()),
                (false, _) => out.push_str(&format!("{magnitude}*{b}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `P(A)` realized inside the chamber ring of `A`.
#[derive(Debug, Clone)]
pub struct KRing {
    arrangement: Arrangement,
    chambers: Vec<Chamber>,
    chamber_signs: Vec<SignVector>,
    chamber_lookup: HashMap<SignVector, usize>,
    matroid: MatroidData,
    basis: NbcBasis,
    images: Vec<ChamberRingElement>,
    solver: LatticeSolver,
}

impl KRing {
    pub fn new(arrangement: &Arrangement) -> Result<Self> {
        let chambers = enumerate_chambers(arrangement);
        let matroid = MatroidData::compute(arrangement)?;
        let basis = NbcBasis::from_nbc_sets(&matroid.nbc_sets);
        let chamber_signs: Vec<SignVector> = chambers.iter().map(|c| c.sign.clone()).collect();
        let chamber_lookup = chamber_signs
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), k))
            .collect();
        let images: Vec<ChamberRingElement> = basis
            .elements()
            .iter()
            .map(|m| basis_image(&chamber_signs, m))
            .collect();
        let vectors: Vec<Vec<BigInt>> = images.iter().map(ChamberRingElement::to_vector).collect();
        let solver = LatticeSolver::new(2 * chambers.len(), &vectors);
        Ok(KRing {
            arrangement: arrangement.clone(),
            chambers,
            chamber_signs,
            chamber_lookup,
            matroid,
            basis,
            images,
            solver,
        })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber_signs(&self) -> &[SignVector] {
        &self.chamber_signs
    }

    pub fn chamber_index(&self, sign: &SignVector) -> Option<usize> {
        self.chamber_lookup.get(sign).copied()
    }

    pub fn chamber_count(&self) -> usize {
        self.chambers.len()
    }

    pub fn matroid(&self) -> &MatroidData {
        &self.matroid
    }

    pub fn basis(&self) -> &NbcBasis {
        &self.basis
    }

    /// Rank of `P(A)` as a free abelian group.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_element(&self, k: usize) -> RingElement {
        RingElement::basis_vector(self.rank(), k)
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![BigInt::zero(); self.rank()])
    }

    pub fn one(&self) -> RingElement {
        self.basis_element(0)
    }

    pub fn x(&self) -> RingElement {
        self.basis_element(1)
    }

    /// `h` of the `k`-th basis monomial.
    pub fn h_image(&self, k: usize) -> &ChamberRingElement {
        &self.images[k]
    }

    pub fn h_images(&self) -> &[ChamberRingElement] {
        &self.images
    }

    /// `h` of an arbitrary monomial `1`, `x` or `e_A`, nbc or not.
    pub fn monomial_image(&self, m: &BasisMonomial) -> ChamberRingElement {
        basis_image(&self.chamber_signs, m)
    }

    /// `h(e_i)`: `x` on chambers in `H_i^+`, zero elsewhere.
    pub fn generator_image(&self, i: usize) -> ChamberRingElement {
        basis_image(&self.chamber_signs, &BasisMonomial::E(vec![i]))
    }

    /// The lattice spanned by the basis images inside `Z^{2R}`.
    pub fn image_lattice(&self) -> &IntegerLattice {
        self.solver.lattice()
    }

    pub fn image_of(&self, u: &RingElement) -> ChamberRingElement {
        assert_eq!(u.coords.len(), self.rank(), "coordinate length mismatch");
        let mut total = ChamberRingElement::zero(self.chamber_count());
        for (c, image) in u.coords.iter().zip(&self.images) {
            if !c.is_zero() {
                total = &total + &image.scale(c);
            }
        }
        total
    }

    pub fn evaluate(&self, poly: &FreePoly) -> ChamberRingElement {
        poly.evaluate(&self.chamber_signs)
    }

    /// Re-expresses a chamber-ring element over the nbc basis.
    pub fn to_basis(&self, v: &ChamberRingElement) -> Result<RingElement> {
        if v.len() != self.chamber_count() {
            return Err(Error::DimensionMismatch {
                expected: self.chamber_count(),
                found: v.len(),
            });
        }
        self.solver
            .solve(&v.to_vector())
            .map(RingElement::new)
            .ok_or_else(|| Error::NotInImage(v.to_string()))
    }

    pub fn multiply(&self, u: &RingElement, w: &RingElement) -> Result<RingElement> {
        self.to_basis(&(&self.image_of(u) * &self.image_of(w)))
    }

    /// Products of basis elements: `table[j][k] = b_j · b_k`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<RingElement>>> {
        let r = self.rank();
        let mut table = vec![vec![self.zero(); r]; r];
        for j in 0..r {
            for k in j..r {
                let product = self.to_basis(&(&self.images[j] * &self.images[k]))?;
                table[k][j] = product.clone();
                table[j][k] = product;
            }
        }
        Ok(table)
    }

    /// The ring for `A` with `ω_i` negated.
    pub fn reoriented(&self, i: usize) -> Result<KRing> {
        KRing::new(&self.arrangement.reorient(i)?)
    }

    /// Transports `u` along `P(A) → P(A^i)`, `e_i ↦ x - e_i`. On chambers the
    /// map is relabeling by flipping coordinate `i`, because
    /// `h_{C'}(x - e_i') = h_C(e_i)`.
    pub fn reorient_iso(&self, target: &KRing, i: usize, u: &RingElement) -> Result<RingElement> {
        self.arrangement.check_index(i)?;
        let source = self.image_of(u);
        let moved = self.transport_image(target, i, &source)?;
        target.to_basis(&moved)
    }

    /// Chamber-ring relabeling used by [`KRing::reorient_iso`].
    pub fn transport_image(
        &self,
        target: &KRing,
        i: usize,
        v: &ChamberRingElement,
    ) -> Result<ChamberRingElement> {
        if target.chamber_count() != self.chamber_count() {
            return Err(Error::Internal("reoriented chamber count differs".into()));
        }
        let mut values = vec![LineValue::zero(); target.chamber_count()];
        for (k, sign) in self.chamber_signs.iter().enumerate() {
            let flipped = sign.with(i, sign.get(i).flipped());
            let t = target
                .chamber_index(&flipped)
                .ok_or_else(|| Error::Internal(format!("no chamber {flipped} after reorienting")))?;
            values[t] = v.values[k].clone();
        }
        Ok(ChamberRingElement { values })
    }
}

/// `h(1) = 1`, `h(x) = x`, and `h(e_A) = x^{|A|} = 2^{|A|-1} x` on chambers
/// positive on all of `A`, zero elsewhere.
fn basis_image(chambers: &[SignVector], m: &BasisMonomial) -> ChamberRingElement {
    let values = chambers
        .iter()
        .map(|sign| match m {
            BasisMonomial::One => LineValue::one(),
            BasisMonomial::X => LineValue::x(),
            BasisMonomial::E(set) => {
                if set.iter().all(|&i| sign.get(i) == Sign::Pos) {
                    LineValue::x_pow(set.len() as u32)
                } else {
                    LineValue::zero()
                }
            }
        })
        .collect();
    ChamberRingElement { values }
}
