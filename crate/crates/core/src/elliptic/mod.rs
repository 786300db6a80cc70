//! The curves `E[q]: y² = x³ − q²x` over the rationals.
//!
//! Points with `y ≠ 0` correspond one-to-one with rational right triangles of
//! area `q`; the remaining points `∞, (0,0), (±q,0)` form the torsion
//! subgroup when `q` is an integer.

mod bijection;
mod invariants;
mod point;
mod topology;
mod torsion;

pub use bijection::{orbit8, point_from_triangle, triangle_from_point};
pub use invariants::{curve_invariants, weierstrass_invariants, WeierstrassInvariants};
pub use point::{CurveE, CurvePoint};
pub use topology::{
    bordant, component, conform_image, flow_map, is_square_scaling, ComponentTag, FlowImage,
    FLOW_TOLERANCE,
};
pub use torsion::{is_torsion, torsion_points};

use crate::error::{Error, Result};

/// `2·seed, 3·seed, …, (count+1)·seed`.
pub fn generate_points(curve: &CurveE, seed: &CurvePoint, count: usize) -> Result<Vec<CurvePoint>> {
    match seed {
        CurvePoint::Affine { y, .. } if !num_traits::Zero::is_zero(y) => {}
        _ => return Err(Error::Degenerate("seed must be affine with y ≠ 0".into())),
    }
    if !curve.contains(seed) {
        return Err(Error::NotOnCurve);
    }
    let mut out = Vec::with_capacity(count);
    let mut acc = seed.clone();
    for _ in 0..count {
        acc = curve.add(&acc, seed);
        out.push(acc.clone());
    }
    Ok(out)
}
