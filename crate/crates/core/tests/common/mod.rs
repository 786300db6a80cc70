//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's series or Tunnell code.

#![allow(dead_code)]

use congruent::elliptic::{orbit8, CurveE, CurvePoint};
use congruent::triangles::RationalTriangle;
use congruent::arith::{int, rat};

/// `τ(1..=count)` from `q ∏_{k≥1} (1 − q^k)^24`.
pub fn tau_oracle(count: usize) -> Vec<i128> {
    // P = ∏ (1 − q^k)^24 modulo q^count
    let mut p = vec![0i128; count];
    p[0] = 1;
    for k in 1..count {
        for _ in 0..24 {
            for i in (k..count).rev() {
                p[i] -= p[i - k];
            }
        }
    }
    p
}

fn sigma3(n: u64) -> i128 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| (d * d * d) as i128).sum()
}

/// Coefficients of `j` at `q^{-1}, q^0, …, q^cutoff`, by long division of
/// `E₄³` by `Δ/q`.
pub fn j_oracle(cutoff: usize) -> Vec<i128> {
    let len = cutoff + 2;
    let e4: Vec<i128> = (0..len)
        .map(|n| if n == 0 { 1 } else { 240 * sigma3(n as u64) })
        .collect();
    let mut e4_sq = vec![0i128; len];
    for i in 0..len {
        for j in 0..len - i {
            e4_sq[i + j] += e4[i] * e4[j];
        }
    }
    let mut e4_cube = vec![0i128; len];
    for i in 0..len {
        for j in 0..len - i {
            e4_cube[i + j] += e4_sq[i] * e4[j];
        }
    }
    // Δ/q = Σ τ(k+1) q^k, leading coefficient 1
    let d = tau_oracle(len);
    let mut quot = vec![0i128; len];
    for m in 0..len {
        let s: i128 = (1..=m).map(|i| d[i] * quot[m - i]).sum();
        quot[m] = e4_cube[m] - s;
    }
    quot
}

pub fn triangle_5() -> RationalTriangle {
    RationalTriangle::new(int(5), rat(3, 2), rat(20, 3), rat(41, 6)).unwrap()
}

pub fn triangle_6() -> RationalTriangle {
    RationalTriangle::new(int(6), int(3), int(4), int(5)).unwrap()
}

pub fn triangle_7() -> RationalTriangle {
    RationalTriangle::new(int(7), rat(35, 12), rat(24, 5), rat(337, 60)).unwrap()
}

/// Orbit points of the sample triangle of area `q`, plus the pairwise sums of
/// the first few.
pub fn point_pool(q: u64) -> (CurveE, Vec<CurvePoint>) {
    let t = match q {
        5 => triangle_5(),
        6 => triangle_6(),
        7 => triangle_7(),
        _ => panic!("no sample triangle for {q}"),
    };
    let curve = CurveE::from_int(q).unwrap();
    let orbit = orbit8(&t).unwrap();
    let mut pool = orbit.clone();
    for i in 0..3 {
        for j in i..3 {
            pool.push(curve.add(&orbit[2 * i], &orbit[2 * j]));
        }
    }
    pool.push(CurvePoint::Infinity);
    pool.push(CurvePoint::affine(int(0), int(0)));
    (curve, pool)
}
