use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{int, ExactRational};
use crate::error::{domain, Error, Result};

/// `E[q]: y² = x³ − q²x` with `q > 0` rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveE {
    q: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: ExactRational, y: ExactRational },
}

impl CurvePoint {
    pub fn affine(x: ExactRational, y: ExactRational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn x(&self) -> Option<&ExactRational> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&ExactRational> {
        match self {
            CurvePoint::Affine { y, .. } => Some(y),
            CurvePoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("inf"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl CurveE {
    pub fn new(q: ExactRational) -> Result<Self> {
        if !q.is_positive() {
            return Err(domain(format!("curve label must be positive, got {q}")));
        }
        Ok(CurveE { q })
    }

    pub fn from_int(n: u64) -> Result<Self> {
        Self::new(int(n as i64))
    }

    pub fn q(&self) -> &ExactRational {
        &self.q
    }

    /// Coefficient of `x` in the Weierstrass equation, `−q²`.
    pub fn a4(&self) -> ExactRational {
        -(&self.q * &self.q)
    }

    /// `x³ − q²x`.
    pub fn rhs(&self, x: &ExactRational) -> ExactRational {
        x * x * x + self.a4() * x
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    /// Checked constructor for affine points of this curve.
    pub fn point(&self, x: ExactRational, y: ExactRational) -> Result<CurvePoint> {
        let p = CurvePoint::affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), -y),
        }
    }

    /// Chord-and-tangent addition with `∞` as identity.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        debug_assert!(self.contains(p) && self.contains(q));
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            // vertical chord, or tangent at a 2-torsion point
            if (y1 + y2).is_zero() {
                return CurvePoint::Infinity;
            }
            (int(3) * x1 * x1 + self.a4()) / (int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        CurvePoint::affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        self.add(p, p)
    }

    /// `k·P` by double-and-add; negative `k` multiplies `−P`.
    pub fn multiple(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if k < 0 { self.negate(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.double(&base);
            k >>= 1;
        }
        acc
    }
}
