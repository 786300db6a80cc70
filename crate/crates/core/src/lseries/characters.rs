//! Dirichlet characters, built from a cyclic decomposition of `(ℤ/κ)^×`.
//!
//! Character values are kept as exact fractions of a full turn and turned
//! into complex numbers only on evaluation.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{factorize, gcd, totient};
use crate::error::{Error, Result};

/// Exact character value: `0` or `e^{2πi·turn}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharValue {
    Zero,
    Root(Ratio<u64>),
}

impl CharValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::new(0.0, 0.0),
            CharValue::Root(t) => {
                // snap quarter turns so ±1, ±i come out exact
                let quarter = t * Ratio::from_integer(4u64);
                if quarter.is_integer() {
                    return match quarter.to_integer() % 4 {
                        0 => Complex64::new(1.0, 0.0),
                        1 => Complex64::new(0.0, 1.0),
                        2 => Complex64::new(-1.0, 0.0),
                        _ => Complex64::new(0.0, -1.0),
                    };
                }
                Complex64::from_polar(1.0, TAU * t.to_f64().unwrap_or(0.0))
            }
        }
    }
}

/// `(ℤ/κ)^×` as a product of cyclic groups `⟨g_i⟩` of order `o_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    pub modulus: u64,
    pub generators: Vec<(u64, u64)>,
}

fn mult_order(g: u64, m: u64) -> u64 {
    let mut acc = g % m;
    let mut k = 1;
    while acc != 1 % m {
        acc = acc * g % m;
        k += 1;
    }
    k
}

/// Smallest residue mod `κ` that is `≡ 1` off the `part` component and whose
/// reduction mod `part` satisfies `want`.
fn lift(kappa: u64, part: u64, want: impl Fn(u64) -> bool) -> u64 {
    let rest = kappa / part;
    (1..kappa.max(2))
        .find(|&r| r % rest == 1 % rest && gcd(r % part, part) == 1 && want(r % part))
        .expect("generator exists")
}

impl UnitGroup {
    pub fn new(kappa: u64) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::Zero);
        }
        let mut generators = Vec::new();
        for (p, e) in factorize(kappa)?.factors {
            let pe = p.pow(e);
            if p == 2 {
                if e >= 2 {
                    generators.push((lift(kappa, pe, |r| r == pe - 1), 2));
                }
                if e >= 3 {
                    generators.push((lift(kappa, pe, |r| r == 5), pe / 4));
                }
            } else {
                let order = (p - 1) * p.pow(e - 1);
                generators.push((lift(kappa, pe, |r| mult_order(r, pe) == order), order));
            }
        }
        Ok(UnitGroup { modulus: kappa, generators })
    }

    pub fn order(&self) -> u64 {
        self.generators.iter().map(|&(_, o)| o).product()
    }

    /// Exponent vectors of every unit with respect to the generators.
    fn log_table(&self) -> HashMap<u64, Vec<u64>> {
        let m = self.modulus;
        let mut table = HashMap::new();
        let mut exps = vec![0u64; self.generators.len()];
        loop {
            let value = self
                .generators
                .iter()
                .zip(&exps)
                .fold(1 % m, |acc, (&(g, _), &k)| acc * pow_mod(g, k, m) % m);
            table.insert(value, exps.clone());
            // odometer increment
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return table;
                }
                exps[i] += 1;
                if exps[i] < self.generators[i].1 {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[derive(Debug)]
struct CharacterTable {
    group: UnitGroup,
    logs: HashMap<u64, Vec<u64>>,
}

/// A character mod `κ`, fixed by the images of the unit-group generators.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    table: Arc<CharacterTable>,
    /// `χ(g_i) = e^{2πi·images[i]}`.
    pub generator_images: Vec<Ratio<u64>>,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.generator_images == other.generator_images
    }
}

impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.table.group.modulus
    }

    pub fn group(&self) -> &UnitGroup {
        &self.table.group
    }

    pub fn is_principal(&self) -> bool {
        self.generator_images.iter().all(|t| t.is_zero())
    }

    /// Exact value at any integer, by periodicity.
    pub fn value(&self, n: i64) -> CharValue {
        let m = self.modulus();
        let r = n.rem_euclid(m as i64) as u64;
        match self.table.logs.get(&(r % m)) {
            None => CharValue::Zero,
            Some(exps) => {
                let turn = exps
                    .iter()
                    .zip(&self.generator_images)
                    .fold(Ratio::zero(), |acc: Ratio<u64>, (&k, t)| acc + *t * Ratio::from_integer(k));
                CharValue::Root(turn.fract())
            }
        }
    }

    pub fn eval(&self, n: i64) -> Complex64 {
        self.value(n).to_complex()
    }

    /// Values at `0, 1, …, κ−1`.
    pub fn values(&self) -> Vec<CharValue> {
        (0..self.modulus() as i64).map(|n| self.value(n)).collect()
    }
}

/// All `φ(κ)` characters mod `κ`, principal first, then lexicographic in the
/// generator exponents.
pub fn characters(kappa: u64) -> Result<Vec<DirichletCharacter>> {
    let group = UnitGroup::new(kappa)?;
    debug_assert_eq!(group.order(), totient(kappa)?);
    let orders: Vec<u64> = group.generators.iter().map(|&(_, o)| o).collect();
    let logs = group.log_table();
    let table = Arc::new(CharacterTable { group, logs });

    let mut out = Vec::new();
    let mut ks = vec![0u64; orders.len()];
    loop {
        out.push(DirichletCharacter {
            table: Arc::clone(&table),
            generator_images: ks.iter().zip(&orders).map(|(&k, &o)| Ratio::new(k, o)).collect(),
        });
        // lexicographic: last generator varies slowest
        let mut i = 0;
        loop {
            if i == ks.len() {
                return Ok(out);
            }
            ks[i] += 1;
            if ks[i] < orders[i] {
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

/// `Σ_{a mod κ} χ(a)`: `φ(κ)` for the principal character, `0` otherwise.
pub fn orthogonality_sum(chi: &DirichletCharacter) -> Complex64 {
    (0..chi.modulus() as i64).map(|a| chi.eval(a)).sum()
}
