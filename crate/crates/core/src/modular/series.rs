//! Truncated Laurent series in `q` with exact rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::ExactRational;
use crate::error::{Error, Result};

/// `Σ_{k=lowest}^{cutoff} c_k q^k + O(q^{cutoff+1})`.
///
/// Coefficients above `cutoff` are unknown and never read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedQSeries {
    lowest: i64,
    cutoff: i64,
    coeffs: Vec<ExactRational>,
}

impl TruncatedQSeries {
    /// Series with the given coefficients starting at `q^lowest`; the cutoff is
    /// the exponent of the last coefficient.
    pub fn new(lowest: i64, coeffs: Vec<ExactRational>) -> Self {
        let cutoff = lowest + coeffs.len() as i64 - 1;
        TruncatedQSeries { lowest, cutoff, coeffs }
    }

    pub fn from_integers(lowest: i64, coeffs: &[i64]) -> Self {
        Self::new(
            lowest,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    pub fn zero(cutoff: i64) -> Self {
        Self::new(0, vec![BigRational::zero(); (cutoff + 1).max(0) as usize])
    }

    pub fn one(cutoff: i64) -> Self {
        let mut s = Self::zero(cutoff);
        if let Some(c) = s.coeffs.first_mut() {
            *c = BigRational::one();
        }
        s
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    /// Highest exponent whose coefficient is known.
    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; `None` above the cutoff.
    pub fn coeff(&self, k: i64) -> Option<ExactRational> {
        if k > self.cutoff {
            None
        } else if k < self.lowest {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[(k - self.lowest) as usize].clone())
        }
    }

    fn with_range(lowest: i64, cutoff: i64, f: impl Fn(i64) -> ExactRational) -> Self {
        let coeffs = (lowest..=cutoff).map(f).collect();
        TruncatedQSeries { lowest, cutoff, coeffs }
    }

    /// Drops everything above `cutoff`.
    pub fn truncate(&self, cutoff: i64) -> Self {
        let cutoff = cutoff.min(self.cutoff);
        Self::with_range(self.lowest, cutoff, |k| self.coeff(k).expect("below cutoff"))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::with_range(self.lowest, self.cutoff, |k| self.coeff(k).unwrap() * c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedQSeries {
            lowest: self.lowest + k,
            cutoff: self.cutoff + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exponent of the first non-zero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.lowest + i as i64)
    }

    /// Multiplicative inverse of `q^v·u(q)` with `u(0) ≠ 0`.
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::Domain("cannot invert a series with no known non-zero coefficient".into()))?;
        // u has relative precision cutoff − v
        let prec = self.cutoff - v;
        let u: Vec<ExactRational> = (v..=self.cutoff).map(|k| self.coeff(k).unwrap()).collect();
        let inv0 = u[0].recip();
        let mut w: Vec<ExactRational> = Vec::with_capacity(prec as usize + 1);
        w.push(inv0.clone());
        for m in 1..=prec as usize {
            let s = (1..=m).fold(BigRational::zero(), |acc, i| acc + &u[i] * &w[m - i]);
            w.push(-s * &inv0);
        }
        Ok(TruncatedQSeries {
            lowest: -v,
            cutoff: prec - v,
            coeffs: w,
        })
    }

    /// `self^e`; `e = 0` gives `1` at the relative precision of `self`.
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one(self.cutoff - self.lowest);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TruncatedQSeries {
    type Output = TruncatedQSeries;

    fn add(self, rhs: &TruncatedQSeries) -> TruncatedQSeries {
        let lo = self.lowest.min(rhs.lowest);
        let hi = self.cutoff.min(rhs.cutoff);
        TruncatedQSeries::with_range(lo, hi, |k| self.coeff(k).unwrap() + rhs.coeff(k).unwrap())
    }
}

impl Neg for &TruncatedQSeries {
    type Output = TruncatedQSeries;

    fn neg(self) -> TruncatedQSeries {
        TruncatedQSeries {
            lowest: self.lowest,
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &TruncatedQSeries {
    type Output = TruncatedQSeries;

    fn sub(self, rhs: &TruncatedQSeries) -> TruncatedQSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedQSeries {
    type Output = TruncatedQSeries;

    fn mul(self, rhs: &TruncatedQSeries) -> TruncatedQSeries {
        let lo = self.lowest + rhs.lowest;
        let hi = (self.cutoff + rhs.lowest).min(rhs.cutoff + self.lowest);
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= coeffs.len() {
                    break;
                }
                coeffs[k] += a * b;
            }
        }
        TruncatedQSeries { lowest: lo, cutoff: hi, coeffs }
    }
}
