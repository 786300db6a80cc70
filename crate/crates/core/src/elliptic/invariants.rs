use num_traits::Zero;

use crate::arith::{int, ExactRational};
use crate::error::{Error, Result};

/// Invariants of `y² + a1xy + a3y = x³ + a2x² + a4x + a6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassInvariants {
    pub b2: ExactRational,
    pub b4: ExactRational,
    pub b6: ExactRational,
    pub b8: ExactRational,
    pub c4: ExactRational,
    pub c6: ExactRational,
    pub disc: ExactRational,
    pub j: ExactRational,
}

impl WeierstrassInvariants {
    /// `1728·c4³ / (c4³ − c6²)`, the characteristic-zero form of `j`.
    pub fn j_from_c4_c6(&self) -> ExactRational {
        let c4_3 = &self.c4 * &self.c4 * &self.c4;
        int(1728) * &c4_3 / (&c4_3 - &self.c6 * &self.c6)
    }
}

pub fn weierstrass_invariants(
    a1: &ExactRational,
    a2: &ExactRational,
    a3: &ExactRational,
    a4: &ExactRational,
    a6: &ExactRational,
) -> Result<WeierstrassInvariants> {
    let b2 = a1 * a1 + int(4) * a2;
    let b4 = a1 * a3 + int(2) * a4;
    let b6 = a3 * a3 + int(4) * a6;
    let b8 = a1 * a1 * a6 - a1 * a3 * a4 + a2 * a3 * a3 + int(4) * a2 * a6 - a4 * a4;
    let c4 = &b2 * &b2 - int(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + int(36) * &b2 * &b4 - int(216) * &b6;
    let disc = -(&b2 * &b2 * &b8) + int(9) * &b2 * &b4 * &b6 - int(8) * &b4 * &b4 * &b4 - int(27) * &b6 * &b6;
    if disc.is_zero() {
        return Err(Error::Singular);
    }
    let j = &c4 * &c4 * &c4 / &disc;
    Ok(WeierstrassInvariants { b2, b4, b6, b8, c4, c6, disc, j })
}

/// Invariants of `E[q]` (`a4 = −q²`, all others zero).
pub fn curve_invariants(q: &ExactRational) -> Result<WeierstrassInvariants> {
    let z = ExactRational::zero();
    weierstrass_invariants(&z, &z, &z, &-(q * q), &z)
}
