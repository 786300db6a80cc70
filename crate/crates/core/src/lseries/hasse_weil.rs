//! Local data of `E[n]` mod `p` and truncated Euler products for `L(E, s)`.
//!
//! `a_p = p + 1 − #E(𝔽_p)`. Primes dividing `2n` are treated as bad and
//! contribute a factor of 1; no conductor analysis is attempted.

use crate::arith::{is_prime, primes_up_to};
use crate::error::{domain, Error, Result};

use super::zeta::zeta_partial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reduction {
    Good,
    Bad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalFactorData {
    pub p: u64,
    pub n: u64,
    /// Affine solutions plus the point at infinity.
    pub point_count: u64,
    pub a_p: i64,
    pub reduction: Reduction,
}

impl LocalFactorData {
    /// `1 − a_p p^{−s} + p^{1−2s}` for good primes, `1` for bad ones.
    pub fn euler_factor_inverse(&self, s: f64) -> f64 {
        match self.reduction {
            Reduction::Bad => 1.0,
            Reduction::Good => {
                let p = self.p as f64;
                1.0 - self.a_p as f64 * p.powf(-s) + p.powf(1.0 - 2.0 * s)
            }
        }
    }
}

/// Counts `y² = x³ − n²x` over `𝔽_p` by tabulating squares.
pub fn count_points_mod_p(n: u64, p: u64) -> Result<LocalFactorData> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    let mut square_roots = vec![0u64; p as usize];
    for y in 0..p {
        square_roots[(y * y % p) as usize] += 1;
    }
    let n2 = (n % p) * (n % p) % p;
    let mut affine = 0;
    for x in 0..p {
        let rhs = (x * x % p * x % p + p - n2 * x % p) % p;
        affine += square_roots[rhs as usize];
    }
    let point_count = affine + 1;
    let reduction = if (2 * n).is_multiple_of(p) { Reduction::Bad } else { Reduction::Good };
    Ok(LocalFactorData {
        p,
        n,
        point_count,
        a_p: p as i64 + 1 - point_count as i64,
        reduction,
    })
}

/// Value of a truncated Euler product; `heuristic` marks `s ≤ 3/2`, where the
/// product is not known to converge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedL {
    pub value: f64,
    pub heuristic: bool,
}

/// `∏_{good p ≤ prime_bound} (1 − a_p p^{−s} + p^{1−2s})^{−1}`.
pub fn l_curve_truncated(n: u64, s: f64, prime_bound: u64) -> Result<TruncatedL> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut value = 1.0;
    for p in primes_up_to(prime_bound) {
        let local = count_points_mod_p(n, p)?;
        value /= local.euler_factor_inverse(s);
    }
    Ok(TruncatedL {
        value,
        heuristic: s <= 1.5,
    })
}

/// `ζ(s) ζ(s−1) / L(E, s)` from partial sums and a truncated product.
pub fn z_hasse_weil(n: u64, s: f64, terms: u64, prime_bound: u64) -> Result<f64> {
    if s <= 2.0 {
        return Err(domain(format!("need s > 2 so that ζ(s−1) converges, got {s}")));
    }
    let l = l_curve_truncated(n, s, prime_bound)?;
    Ok(zeta_partial(s, terms)? * zeta_partial(s - 1.0, terms)? / l.value)
}
