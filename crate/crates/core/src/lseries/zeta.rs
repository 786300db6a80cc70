use num_complex::Complex64;

use super::characters::DirichletCharacter;
use crate::arith::primes_up_to;
use crate::error::{domain, Result};

fn check_s(s: f64) -> Result<()> {
    if s.is_nan() || s <= 1.0 {
        return Err(domain(format!("need s > 1 for convergence, got {s}")));
    }
    Ok(())
}

/// `Σ_{n ≤ terms} n^{−s}`, summed smallest terms first.
pub fn zeta_partial(s: f64, terms: u64) -> Result<f64> {
    check_s(s)?;
    Ok((1..=terms).rev().map(|n| (n as f64).powf(-s)).sum())
}

/// `∏_{p ≤ prime_bound} (1 − p^{−s})^{−1}`.
pub fn zeta_euler(s: f64, prime_bound: u64) -> Result<f64> {
    check_s(s)?;
    Ok(primes_up_to(prime_bound)
        .into_iter()
        .map(|p| 1.0 / (1.0 - (p as f64).powf(-s)))
        .product())
}

/// `terms^{1−s}/(s−1)`, the integral bound on `Σ_{n > terms} n^{−s}`.
pub fn tail_bound(s: f64, terms: u64) -> f64 {
    (terms as f64).powf(1.0 - s) / (s - 1.0)
}

/// `Σ_{n ≤ terms} χ(n) n^{−s}`.
pub fn l_chi(s: f64, chi: &DirichletCharacter, terms: u64) -> Result<Complex64> {
    check_s(s)?;
    Ok((1..=terms)
        .rev()
        .map(|n| chi.eval(n as i64) * (n as f64).powf(-s))
        .sum())
}

/// `∏_{p ≤ prime_bound} (1 − χ(p) p^{−s})^{−1}`.
pub fn l_chi_euler(s: f64, chi: &DirichletCharacter, prime_bound: u64) -> Result<Complex64> {
    check_s(s)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(primes_up_to(prime_bound)
        .into_iter()
        .map(|p| one / (one - chi.eval(p as i64) * (p as f64).powf(-s)))
        .product())
}
