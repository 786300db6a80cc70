use num_traits::Zero;

use super::point::{CurveE, CurvePoint};
use crate::arith::int;
use crate::error::{domain, Error, Result};
use crate::triangles::RationalTriangle;

/// `x = q(a+c)/b`, `y = 2q²(a+c)/b²` on `E[q]`.
///
/// Signed triangles are accepted; the orbit construction relies on it.
pub fn point_from_triangle(t: &RationalTriangle) -> Result<CurvePoint> {
    if t.b.is_zero() {
        return Err(Error::Degenerate("leg b is zero".into()));
    }
    if !t.area_is_consistent() {
        return Err(domain("not a right triangle of area q"));
    }
    let s = &t.a + &t.c;
    let x = &t.q * &s / &t.b;
    let y = int(2) * &t.q * &t.q * s / (&t.b * &t.b);
    Ok(CurvePoint::affine(x, y))
}

/// `a = (x²−q²)/y`, `b = 2qx/y`, `c = (x²+q²)/y`.
pub fn triangle_from_point(curve: &CurveE, p: &CurvePoint) -> Result<RationalTriangle> {
    let (x, y) = match p {
        CurvePoint::Infinity => return Err(Error::Degenerate("point at infinity carries no triangle".into())),
        CurvePoint::Affine { x, y } => (x, y),
    };
    if y.is_zero() {
        return Err(Error::Degenerate("torsion point with y = 0 carries no triangle".into()));
    }
    if !curve.contains(p) {
        return Err(Error::NotOnCurve);
    }
    let q = curve.q();
    let x2 = x * x;
    let q2 = q * q;
    Ok(RationalTriangle {
        q: q.clone(),
        a: (&x2 - &q2) / y,
        b: int(2) * q * x / y,
        c: (x2 + q2) / y,
    })
}

/// The eight points obtained from the sign/leg symmetries of a triangle, in
/// the order `(a,b,c), (−a,−b,−c), (a,b,−c), (−a,−b,c), (b,a,−c), (−b,−a,c),
/// (b,a,c), (−b,−a,−c)`.
pub fn orbit8(t: &RationalTriangle) -> Result<Vec<CurvePoint>> {
    if !t.is_positive() {
        return Err(domain("orbit requires a positive triangle"));
    }
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let signed = [
        (a.clone(), b.clone(), c.clone()),
        (-a, -b, -c),
        (a.clone(), b.clone(), -c),
        (-a, -b, c.clone()),
        (b.clone(), a.clone(), -c),
        (-b, -a, c.clone()),
        (b.clone(), a.clone(), c.clone()),
        (-b, -a, -c),
    ];
    signed
        .into_iter()
        .map(|(a, b, c)| {
            point_from_triangle(&RationalTriangle {
                q: t.q.clone(),
                a,
                b,
                c,
            })
        })
        .collect()
}
