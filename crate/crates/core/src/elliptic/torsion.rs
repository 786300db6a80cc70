//! Nagell–Lutz search for the torsion points of `E[n]`, `n` a positive integer.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::point::{CurveE, CurvePoint};
use crate::arith::{factorize, is_integer, ExactRational};
use crate::error::Result;

/// Largest possible order of a rational torsion point (Mazur).
const MAX_TORSION_ORDER: i64 = 12;

/// Finite order, decided by the Nagell–Lutz integrality test on the multiples
/// `2P, …, 12P`.
pub fn is_torsion(curve: &CurveE, p: &CurvePoint) -> bool {
    let mut acc = p.clone();
    for _ in 1..MAX_TORSION_ORDER {
        match &acc {
            CurvePoint::Infinity => return true,
            CurvePoint::Affine { x, y } => {
                if !is_integer(x) || !is_integer(y) {
                    return false;
                }
            }
        }
        acc = curve.add(&acc, p);
    }
    acc.is_infinity()
}

fn divisors_from(factors: &[(u64, u32)]) -> Vec<u128> {
    let mut out = vec![1u128];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &d in &out {
            let mut pk = 1u128;
            for _ in 0..=e {
                next.push(d * pk);
                pk *= p as u128;
            }
        }
        out = next;
    }
    out
}

fn as_rational(v: i128) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Torsion points of `E[n]`, sorted with `∞` first and then by `x`.
///
/// Candidates are integer points with `y = 0` or `y² | 4n⁶` (the discriminant
/// of `x³ − n²x`); each is kept only if it lies on the curve and has finite
/// order.
pub fn torsion_points(n: u64) -> Result<Vec<CurvePoint>> {
    let curve = CurveE::from_int(n)?;
    let nf = factorize(n)?.factors;

    // 4n⁶ = 2² ∏ p^{6e}; y ranges over ∏ p^{f} with 2f ≤ exponent.
    let mut disc_factors: Vec<(u64, u32)> = nf.iter().map(|&(p, e)| (p, 6 * e)).collect();
    match disc_factors.iter_mut().find(|(p, _)| *p == 2) {
        Some(two) => two.1 += 2,
        None => disc_factors.insert(0, (2, 2)),
    }
    let y_factors: Vec<(u64, u32)> = disc_factors.iter().map(|&(p, e)| (p, e / 2)).collect();

    let n_i = n as i128;
    let on_curve = |x: i128, y: i128| {
        let small = x
            .checked_mul(x)
            .and_then(|x2| x2.checked_mul(x))
            .zip(n_i.checked_mul(n_i).and_then(|n2| n2.checked_mul(x)))
            .and_then(|(x3, n2x)| x3.checked_sub(n2x))
            .zip(y.checked_mul(y));
        match small {
            Some((lhs, rhs)) => lhs == rhs,
            None => {
                let (x, y, n) = (BigInt::from(x), BigInt::from(y), BigInt::from(n_i));
                &x * &x * &x - &n * &n * &x == &y * &y
            }
        }
    };

    let mut found: Vec<(i128, i128)> = Vec::new();
    // y = 0: x(x² − n²) = 0, so x = 0 or x = ±d with d | n².
    let n2_factors: Vec<(u64, u32)> = nf.iter().map(|&(p, e)| (p, 2 * e)).collect();
    let mut xs = vec![0i128];
    for d in divisors_from(&n2_factors) {
        xs.push(d as i128);
        xs.push(-(d as i128));
    }
    for x in xs {
        if on_curve(x, 0) {
            found.push((x, 0));
        }
    }
    // y ≠ 0: any integer root x of x³ − n²x − y² divides y².
    for y in divisors_from(&y_factors) {
        let y = y as i128;
        let y2_factors: Vec<(u64, u32)> = factorize(y as u64)?.factors.into_iter().map(|(p, e)| (p, 2 * e)).collect();
        for d in divisors_from(&y2_factors) {
            for x in [d as i128, -(d as i128)] {
                if on_curve(x, y) {
                    found.push((x, y));
                    found.push((x, -y));
                }
            }
        }
    }

    let mut points = vec![CurvePoint::Infinity];
    found.sort();
    found.dedup();
    for (x, y) in found {
        let p = CurvePoint::affine(as_rational(x), as_rational(y));
        if is_torsion(&curve, &p) {
            points.push(p);
        }
    }
    Ok(points)
}
