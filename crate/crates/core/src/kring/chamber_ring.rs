use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An element `a + b·x` of `Z[x]/x(2-x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LineValue {
    pub a: BigInt,
    pub b: BigInt,
}

impl LineValue {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        LineValue {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        LineValue::default()
    }

    pub fn one() -> Self {
        LineValue::new(1, 0)
    }

    pub fn x() -> Self {
        LineValue::new(0, 1)
    }

    /// `x^k`, collapsed with `x^k = 2^(k-1) x` for `k ≥ 1`.
    pub fn x_pow(k: u32) -> Self {
        if k == 0 {
            LineValue::one()
        } else {
            LineValue::new(0, BigInt::one() << (k - 1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LineValue {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl Add for &LineValue {
    type Output = LineValue;
    fn add(self, rhs: &LineValue) -> LineValue {
        LineValue {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &LineValue {
    type Output = LineValue;
    fn sub(self, rhs: &LineValue) -> LineValue {
        LineValue {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &LineValue {
    type Output = LineValue;
    fn neg(self) -> LineValue {
        LineValue {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul for &LineValue {
    type Output = LineValue;
    /// `(a + bx)(c + dx) = ac + (ad + bc + 2bd)x`, since `x² = 2x`.
    fn mul(self, rhs: &LineValue) -> LineValue {
        LineValue {
            a: &self.a * &rhs.a,
            b: &self.a * &rhs.b + &self.b * &rhs.a + ((&self.b * &rhs.b) << 1),
        }
    }
}

impl fmt::Display for LineValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}x", self.b),
            (false, false) => {
                if self.b < BigInt::zero() {
                    write!(f, "{} - {}x", self.a, -&self.b)
                } else {
                    write!(f, "{} + {}x", self.a, self.b)
                }
            }
        }
    }
}

/// An element of `⊕_C Z[x]/x(2-x)`, one value per chamber in canonical
/// chamber order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChamberRingElement {
    pub values: Vec<LineValue>,
}

impl ChamberRingElement {
    pub fn constant(chambers: usize, value: LineValue) -> Self {
        ChamberRingElement {
            values: vec![value; chambers],
        }
    }

    pub fn zero(chambers: usize) -> Self {
        Self::constant(chambers, LineValue::zero())
    }

    pub fn one(chambers: usize) -> Self {
        Self::constant(chambers, LineValue::one())
    }

    pub fn x(chambers: usize) -> Self {
        Self::constant(chambers, LineValue::x())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(LineValue::is_zero)
    }

    /// Coordinates `(a_0, b_0, a_1, b_1, …)` in `Z^{2R}`.
    pub fn to_vector(&self) -> Vec<BigInt> {
        self.values
            .iter()
            .flat_map(|v| [v.a.clone(), v.b.clone()])
            .collect()
    }

    pub fn from_vector(coords: &[BigInt]) -> Self {
        assert!(coords.len().is_multiple_of(2), "odd coordinate count");
        ChamberRingElement {
            values: coords
                .chunks(2)
                .map(|p| LineValue::new(p[0].clone(), p[1].clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ChamberRingElement {
            values: self.values.iter().map(|v| v.scale(k)).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&LineValue, &LineValue) -> LineValue) -> Self {
        assert_eq!(self.len(), rhs.len(), "chamber count mismatch");
        ChamberRingElement {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &ChamberRingElement {
    type Output = ChamberRingElement;
    fn add(self, rhs: &ChamberRingElement) -> ChamberRingElement {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ChamberRingElement {
    type Output = ChamberRingElement;
    fn sub(self, rhs: &ChamberRingElement) -> ChamberRingElement {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &ChamberRingElement {
    type Output = ChamberRingElement;
    fn mul(self, rhs: &ChamberRingElement) -> ChamberRingElement {
        self.zip_with(rhs, |a, b| a * b)
    }
}

impl Neg for &ChamberRingElement {
    type Output = ChamberRingElement;
    fn neg(self) -> ChamberRingElement {
        ChamberRingElement {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Display for ChamberRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
