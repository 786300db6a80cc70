//! Tunnell's ternary-form counts, the `L•` map and the three-valued classifier.
//!
//! `L•(n) = 2A − B` for odd `n` and `2C − D` for even `n`. A non-zero value
//! proves `n` is not congruent. A zero value together with an explicit
//! triangle proves that it is. A zero value with no triangle found is only
//! congruent if BSD holds, and it is reported as such.

use rayon::prelude::*;

use crate::arith::is_squarefree;
use crate::error::{Error, Result};
use crate::triangles::{witness_search, Witness, WitnessIndex};

/// Coefficients `(x, y, z)` of the four forms.
pub const FORM_A: [u64; 3] = [2, 1, 32];
pub const FORM_B: [u64; 3] = [2, 1, 8];
pub const FORM_C: [u64; 3] = [8, 2, 64];
pub const FORM_D: [u64; 3] = [8, 2, 16];

fn isqrt(v: u64) -> u64 {
    num_integer::Roots::sqrt(&v)
}

/// `#{(x, y, z) ∈ ℤ³ : c₀x² + c₁y² + c₂z² = n}`, signs and zeros included.
pub fn count_ternary(n: u64, coeffs: [u64; 3]) -> u64 {
    let [cx, cy, cz] = coeffs;
    let mut count = 0;
    for x in 0..=isqrt(n / cx) {
        let rx = n - cx * x * x;
        for z in 0..=isqrt(rx / cz) {
            let rz = rx - cz * z * z;
            if !rz.is_multiple_of(cy) {
                continue;
            }
            let y2 = rz / cy;
            let y = isqrt(y2);
            if y * y != y2 {
                continue;
            }
            let mult = |v: u64| if v == 0 { 1 } else { 2 };
            count += mult(x) * mult(y) * mult(z);
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TunnellCounts {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl TunnellCounts {
    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// `2A − B` for odd `n`, `2C − D` for even `n`.
    pub fn l_bullet(&self) -> i64 {
        if self.is_odd() {
            2 * self.a as i64 - self.b as i64
        } else {
            2 * self.c as i64 - self.d as i64
        }
    }
}

fn check_squarefree(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_squarefree(n) {
        return Err(Error::NotSquareFree(n));
    }
    Ok(())
}

pub fn tunnell_counts(n: u64) -> Result<TunnellCounts> {
    check_squarefree(n)?;
    Ok(TunnellCounts {
        n,
        a: count_ternary(n, FORM_A),
        b: count_ternary(n, FORM_B),
        c: count_ternary(n, FORM_C),
        d: count_ternary(n, FORM_D),
    })
}

pub fn l_bullet(n: u64) -> Result<i64> {
    tunnell_counts(n).map(|c| c.l_bullet())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CongruenceStatus {
    NotCongruent,
    CongruentWitnessed(Witness),
    /// `L• = 0` but no triangle within the search bound; congruent if BSD holds.
    TunnellPositiveUnverified,
}

impl CongruenceStatus {
    pub fn code(&self) -> &'static str {
        match self {
            CongruenceStatus::NotCongruent => "not_congruent",
            CongruenceStatus::CongruentWitnessed(_) => "congruent_witnessed",
            CongruenceStatus::TunnellPositiveUnverified => "tunnell_positive_unverified",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            CongruenceStatus::NotCongruent => "not congruent",
            CongruenceStatus::CongruentWitnessed(_) => "congruent (witnessed)",
            CongruenceStatus::TunnellPositiveUnverified => "congruent if BSD",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CongruenceStatus::CongruentWitnessed(w) => Some(w),
            _ => None,
        }
    }
}

fn status_from(l: i64, witness: impl FnOnce() -> Result<Option<Witness>>) -> Result<CongruenceStatus> {
    if l != 0 {
        return Ok(CongruenceStatus::NotCongruent);
    }
    Ok(match witness()? {
        Some(w) => CongruenceStatus::CongruentWitnessed(w),
        None => CongruenceStatus::TunnellPositiveUnverified,
    })
}

pub fn classify(n: u64, witness_bound: u64) -> Result<CongruenceStatus> {
    let l = l_bullet(n)?;
    status_from(l, || witness_search(n, witness_bound))
}

/// One row of the classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelRow {
    pub counts: TunnellCounts,
    pub l_bullet: i64,
    pub status: CongruenceStatus,
}

impl KernelRow {
    pub fn n(&self) -> u64 {
        self.counts.n
    }
}

/// Classifies every square-free `n ≤ limit`, rows ascending in `n`.
pub fn kernel_scan(limit: u64, witness_bound: u64) -> Result<Vec<KernelRow>> {
    if limit < 5 {
        return Err(crate::error::domain(format!("table limit must be ≥ 5, got {limit}")));
    }
    let index = WitnessIndex::build(witness_bound);
    let ns: Vec<u64> = (1..=limit).filter(|&n| is_squarefree(n)).collect();
    ns.par_iter()
        .map(|&n| {
            let counts = tunnell_counts(n)?;
            let l = counts.l_bullet();
            let status = status_from(l, || Ok(index.get(n)))?;
            Ok(KernelRow {
                counts,
                l_bullet: l,
                status,
            })
        })
        .collect()
}
