//! q-expansions of `E_k`, the discriminant `Δ` and Klein's `j`.

use num_rational::BigRational;

use super::series::TruncatedQSeries;
use crate::arith::{bernoulli, divisor_power_sum, int, ExactRational};
use crate::error::{domain, Result};

/// `c_k = −2k/B_k`, so that `E_k = 1 + c_k Σ σ_{k−1}(n) qⁿ`.
pub fn eisenstein_constant(k: u32) -> Result<ExactRational> {
    if k < 4 || k % 2 == 1 {
        return Err(domain(format!("Eisenstein series needs even k ≥ 4, got {k}")));
    }
    Ok(int(-2 * k as i64) / bernoulli(k as usize))
}

/// `E_k` through `q^cutoff`.
pub fn eisenstein_qexp(k: u32, cutoff: u64) -> Result<TruncatedQSeries> {
    let ck = eisenstein_constant(k)?;
    let mut coeffs = Vec::with_capacity(cutoff as usize + 1);
    coeffs.push(int(1));
    for n in 1..=cutoff {
        coeffs.push(&ck * BigRational::from_integer(divisor_power_sum(k - 1, n)?));
    }
    Ok(TruncatedQSeries::new(0, coeffs))
}

/// `(E₄³ − E₆²)/1728 = Σ τ(n) qⁿ` through `q^cutoff`.
///
/// This is `Δ/(2π)¹²`; the transcendental factor is left out so every
/// coefficient is an integer.
pub fn delta_qexp(cutoff: u64) -> Result<TruncatedQSeries> {
    if cutoff < 1 {
        return Err(domain("Δ needs cutoff ≥ 1"));
    }
    let e4 = eisenstein_qexp(4, cutoff)?;
    let e6 = eisenstein_qexp(6, cutoff)?;
    Ok((&e4.pow(3) - &e6.pow(2)).scale(&(int(1) / int(1728))))
}

/// Ramanujan's `τ(1..=count)`.
pub fn ramanujan_tau(count: u64) -> Result<Vec<ExactRational>> {
    let d = delta_qexp(count.max(1))?;
    Ok((1..=count as i64).map(|n| d.coeff(n).expect("within cutoff")).collect())
}

/// `j = 1728 E₄³/(E₄³ − E₆²)` from `q⁻¹` through `q^cutoff`.
pub fn j_qexp(cutoff: u64) -> Result<TruncatedQSeries> {
    // 1/Δ loses two orders of precision (valuation 1)
    let inner = cutoff + 2;
    let e4_cubed = eisenstein_qexp(4, inner)?.pow(3);
    let delta = delta_qexp(inner)?;
    Ok((&e4_cubed * &delta.inverse()?).truncate(cutoff as i64))
}
