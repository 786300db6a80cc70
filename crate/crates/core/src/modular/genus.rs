//! Indices and measures of congruence subgroups, and genus formulas for the
//! modular curves `X(N)`.

use num_rational::Ratio;

use crate::arith::{factorize, is_prime, totient};
use crate::error::{domain, Error, Result};

fn check_level(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Zero)
    } else {
        Ok(())
    }
}

fn check_half(n: u64) -> Result<()> {
    check_level(n)?;
    if n < 3 {
        return Err(domain(format!("measure formula requires N ≥ 3, got {n}")));
    }
    Ok(())
}

/// `ψ(N) = N ∏_{p|N} (1 + 1/p) = [Γ(1) : Γ₀(N)]`.
pub fn psi(n: u64) -> Result<u64> {
    check_level(n)?;
    let f = factorize(n)?;
    Ok(f.factors.iter().fold(n, |acc, &(p, _)| acc / p * (p + 1)))
}

/// `φ(N) = [Γ₀(N) : Γ₁(N)]`.
pub fn phi(n: u64) -> Result<u64> {
    totient(n)
}

/// `[Γ(1) : Γ(N)] = N³ ∏_{p|N} (1 − p⁻²) = #SL₂(ℤ/N)`.
pub fn gamma_index(n: u64) -> Result<u64> {
    check_level(n)?;
    let f = factorize(n)?;
    Ok(f.factors.iter().fold(n * n * n, |acc, &(p, _)| acc / (p * p) * (p * p - 1)))
}

/// `μ(Γ₀(N)) = ψ(N)`.
pub fn mu_gamma0(n: u64) -> Result<u64> {
    psi(n)
}

/// `μ(Γ₁(N)) = ½ φ(N) ψ(N)` for `N ≥ 3`.
pub fn mu_gamma1(n: u64) -> Result<u64> {
    check_half(n)?;
    Ok(phi(n)? * psi(n)? / 2)
}

/// `μ(Γ(N)) = ½ N φ(N) ψ(N)` for `N ≥ 3`.
pub fn mu_gamma_n(n: u64) -> Result<u64> {
    check_half(n)?;
    Ok(n * phi(n)? * psi(n)? / 2)
}

fn integral(g: Ratio<i128>, what: &str) -> Result<i64> {
    if !g.is_integer() {
        return Err(domain(format!("{what} evaluated to non-integer {g}")));
    }
    Ok(g.to_integer() as i64)
}

/// Genus of `X(N)`: 0 for `N ≤ 2`, else `1 + N²(N−6)/24 ∏_{p|N}(1 − p⁻²)`.
pub fn genus_principal(n: u64) -> Result<u64> {
    check_level(n)?;
    if n <= 2 {
        return Ok(0);
    }
    let f = factorize(n)?;
    let nn = n as i128;
    let mut g = Ratio::from_integer(nn * nn * (nn - 6)) / Ratio::from_integer(24);
    for &(p, _) in &f.factors {
        let p2 = (p * p) as i128;
        g *= Ratio::new(p2 - 1, p2);
    }
    let g = integral(g + Ratio::from_integer(1), "genus of X(N)")?;
    u64::try_from(g).map_err(|_| domain("negative genus"))
}

/// `(p+2)(p−3)(p−5)/24` for primes `p ≥ 5`.
pub fn genus_prime(p: u64) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return Err(domain(format!("prime-level genus formula needs a prime p ≥ 5, got {p}")));
    }
    let g = Ratio::new((p as i128 + 2) * (p as i128 - 3) * (p as i128 - 5), 24);
    Ok(integral(g, "prime-level genus")? as u64)
}

/// Covering degree and ramification data of `X_Γ → X(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusInput {
    pub d: u64,
    pub e2: u64,
    pub e3: u64,
    pub e_inf: u64,
}

impl GenusInput {
    pub fn new(d: u64, e2: u64, e3: u64, e_inf: u64) -> Result<Self> {
        if d == 0 {
            return Err(domain("covering degree must be ≥ 1"));
        }
        if e2 > d || e3 > d {
            return Err(domain("elliptic point counts cannot exceed the degree"));
        }
        if e_inf == 0 {
            return Err(domain("need at least one cusp"));
        }
        Ok(GenusInput { d, e2, e3, e_inf })
    }

    /// Total ramification `½(d − e₂) + ⅔(d − e₃) + (d − e∞)`.
    pub fn total_ramification(&self) -> Ratio<i128> {
        let (d, e2, e3, ei) = (self.d as i128, self.e2 as i128, self.e3 as i128, self.e_inf as i128);
        Ratio::new(d - e2, 2) + Ratio::new(2 * (d - e3), 3) + Ratio::from_integer(d - ei)
    }
}

/// `1 + d/12 − e₂/4 − e₃/3 − e∞/2`, exactly.
pub fn genus_general_exact(g: &GenusInput) -> Ratio<i128> {
    Ratio::from_integer(1) + Ratio::new(g.d as i128, 12)
        - Ratio::new(g.e2 as i128, 4)
        - Ratio::new(g.e3 as i128, 3)
        - Ratio::new(g.e_inf as i128, 2)
}

/// As [`genus_general_exact`], rejecting inconsistent data that gives a
/// non-integral (or negative) genus.
pub fn genus_general(g: &GenusInput) -> Result<i64> {
    let v = integral(genus_general_exact(g), "genus formula")?;
    if v < 0 {
        return Err(domain(format!("genus formula gave negative value {v}")));
    }
    Ok(v)
}

/// `2g_cover − 2 = (2g_base − 2)·degree + b`.
pub fn riemann_hurwitz_check(g_cover: u64, g_base: u64, degree: u64, total_ramification: u64) -> bool {
    let lhs = 2 * g_cover as i128 - 2;
    let rhs = (2 * g_base as i128 - 2) * degree as i128 + total_ramification as i128;
    lhs == rhs
}
