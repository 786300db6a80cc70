//! Exact integer and rational primitives.
//!
//! Everything here works on machine integers up to `u64` (factorization by
//! trial division) or on arbitrary-precision rationals. Rationals are
//! `num_rational::BigRational`, which is always reduced with a positive
//! denominator, so `==` is structural equality on canonical forms.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms.
pub type ExactRational = BigRational;

/// Builds `num/den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer `n` as an exact rational.
pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"a"` or `"a/b"` (whitespace tolerated, `b != 0`).
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Always writes `num/den`, including a `/1` for integers.
pub fn to_num_den(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Square root of a non-negative rational if it is the square of a rational.
pub fn rational_sqrt(q: &ExactRational) -> Option<ExactRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

pub fn is_integer(q: &ExactRational) -> bool {
    q.denom().is_one()
}

/// Prime factorization `value = ∏ p^e`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Recomputes the product of the prime powers.
    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// `input = squarefree_part * square_root_part^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareFreeSplit {
    pub input: u64,
    pub squarefree_part: u64,
    pub square_root_part: u64,
}

const SMALL_PRIME_LIMIT: u64 = 1 << 16;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(SMALL_PRIME_LIMIT))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in small_primes() {
        if p * p > n {
            return true;
        }
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = SMALL_PRIME_LIMIT + 1;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Deterministic trial division; `n = 1` yields an empty factor list.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        push(&mut rest, p);
    }
    // Past the table: odd candidates only.
    let mut d = SMALL_PRIME_LIMIT + 1;
    while rest > 1 && d.saturating_mul(d) <= rest {
        push(&mut rest, d);
        d += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { value: n, factors })
}

/// Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

pub fn is_squarefree(n: u64) -> bool {
    matches!(mobius(n), Ok(m) if m != 0)
}

pub fn squarefree_split(m: u64) -> Result<SquareFreeSplit> {
    let f = factorize(m)?;
    let mut sf = 1;
    let mut root = 1;
    for &(p, e) in &f.factors {
        if e % 2 == 1 {
            sf *= p;
        }
        root *= p.pow(e / 2);
    }
    Ok(SquareFreeSplit {
        input: m,
        squarefree_part: sf,
        square_root_part: root,
    })
}

pub fn squarefree_part(m: u64) -> Result<u64> {
    squarefree_split(m).map(|s| s.squarefree_part)
}

/// Euler's totient.
pub fn totient(k: u64) -> Result<u64> {
    let f = factorize(k)?;
    Ok(f
        .factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

/// `σ_k(n) = Σ_{d | n} d^k`.
pub fn divisor_power_sum(k: u32, n: u64) -> Result<BigInt> {
    let f = factorize(n)?;
    // Multiplicative: σ_k(p^e) = 1 + p^k + ... + p^{ek}.
    let mut total = BigInt::one();
    for &(p, e) in &f.factors {
        let pk = num_traits::pow(BigInt::from(p), k as usize);
        let mut term = BigInt::one();
        let mut local = BigInt::one();
        for _ in 0..e {
            term *= &pk;
            local += &term;
        }
        total *= local;
    }
    Ok(total)
}

fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 0..m {
        let next = &row[i] * BigInt::from(m - i) / BigInt::from(i + 1);
        row.push(next);
    }
    row
}

/// Bernoulli numbers `B_0..=B_k` with `B_1 = -1/2`, from
/// `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(k: usize) -> Vec<ExactRational> {
    let mut b: Vec<ExactRational> = Vec::with_capacity(k + 1);
    b.push(BigRational::one());
    for m in 1..=k {
        if m >= 3 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        let row = binomial_row(m + 1);
        let s = (0..m).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::from_integer(row[j].clone()) * &b[j]
        });
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli(k: usize) -> ExactRational {
    bernoulli_table(k).pop().unwrap_or_else(BigRational::one)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
