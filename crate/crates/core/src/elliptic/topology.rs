//! Connected components of the real locus of `E[q]` and the scaling maps
//! between curves `E[n] → E[n′]`.

use num_traits::{ToPrimitive, Zero};

use super::point::{CurveE, CurvePoint};
use crate::arith::{int, rational_sqrt, squarefree_part, ExactRational};
use crate::error::{domain, Error, Result};

/// The bounded oval (`−q ≤ x ≤ 0`) or the unbounded branch (`x ≥ q`).
/// `∞` sits on the branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentTag {
    Oval,
    Branch,
}

pub fn component(curve: &CurveE, p: &CurvePoint) -> Result<ComponentTag> {
    if !curve.contains(p) {
        return Err(Error::NotOnCurve);
    }
    Ok(match p {
        CurvePoint::Infinity => ComponentTag::Branch,
        CurvePoint::Affine { x, .. } if x >= curve.q() => ComponentTag::Branch,
        CurvePoint::Affine { .. } => ComponentTag::Oval,
    })
}

/// Two points are bordant when they lie on the same component.
pub fn bordant(curve: &CurveE, p: &CurvePoint, q: &CurvePoint) -> Result<bool> {
    Ok(component(curve, p)? == component(curve, q)?)
}

/// `(x, y) ↦ (s²x, s³y)`, mapping `E[q]` onto `E[s²q]`.
pub fn conform_image(curve: &CurveE, s: &ExactRational, p: &CurvePoint) -> Result<CurvePoint> {
    if s.is_zero() {
        return Err(domain("scale factor must be non-zero"));
    }
    if !curve.contains(p) {
        return Err(Error::NotOnCurve);
    }
    Ok(match p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::affine(s * s * x, s * s * s * y),
    })
}

impl CurveE {
    /// `E[s²q]`.
    pub fn scaled(&self, s: &ExactRational) -> Result<CurveE> {
        if s.is_zero() {
            return Err(domain("scale factor must be non-zero"));
        }
        CurveE::new(s * s * self.q())
    }
}

/// `n′/n` is the square of a rational.
pub fn is_square_scaling(n: u64, n_prime: u64) -> Result<bool> {
    Ok(squarefree_part(n)? == squarefree_part(n_prime)?)
}

/// Relative on-curve tolerance for floating images of [`flow_map`].
pub const FLOW_TOLERANCE: f64 = 1e-12;

/// Image of a point under the scaling flow at time `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowImage {
    /// `n_λ = n + λ(n′ − n)`.
    pub n_lambda: f64,
    /// Floating image; `None` for `∞`.
    pub approx: Option<(f64, f64)>,
    /// Present exactly when `n_λ/n` is the square of a rational.
    pub exact: Option<CurvePoint>,
    /// `|y² − (x³ − n_λ²x)|` relative to the largest term.
    pub residual: f64,
}

impl FlowImage {
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

/// `(x, y) ↦ (r·x, r^{3/2}·y)` with `r = n_λ/n`, landing on `E[n_λ]`.
pub fn flow_map(n: u64, n_target: u64, lambda: f64, p: &CurvePoint) -> Result<FlowImage> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(domain(format!("λ must lie in [0, 1], got {lambda}")));
    }
    let curve = CurveE::from_int(n)?;
    if n_target == 0 {
        return Err(Error::Zero);
    }
    if !curve.contains(p) {
        return Err(Error::NotOnCurve);
    }
    let (nf, tf) = (n as f64, n_target as f64);
    let n_lambda = nf + lambda * (tf - nf);

    let exact = if n_lambda.fract() == 0.0 {
        let ratio = int(n_lambda as i64) / int(n as i64);
        match rational_sqrt(&ratio) {
            Some(s) => Some(conform_image(&curve, &s, p)?),
            None => None,
        }
    } else {
        None
    };

    let (approx, residual) = match p {
        CurvePoint::Infinity => (None, 0.0),
        CurvePoint::Affine { x, y } => {
            let r = n_lambda / nf;
            let xf = x.to_f64().unwrap_or(f64::NAN) * r;
            let yf = y.to_f64().unwrap_or(f64::NAN) * r.powf(1.5);
            let lhs = yf * yf;
            let cube = xf * xf * xf;
            let lin = n_lambda * n_lambda * xf;
            let scale = lhs.abs().max(cube.abs()).max(lin.abs()).max(f64::MIN_POSITIVE);
            (Some((xf, yf)), (lhs - (cube - lin)).abs() / scale)
        }
    };

    Ok(FlowImage {
        n_lambda,
        approx,
        exact,
        residual,
    })
}
