//! Rational right triangles, the Pythagorean parametrization and the
//! witness search for congruent numbers.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{factorize, gcd, int, is_squarefree, ExactRational};
use crate::error::{domain, Error, Result};

/// A signed rational right triangle `[q | a, b, c]`: `a² + b² = c²`, `ab = 2q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalTriangle {
    pub q: ExactRational,
    pub a: ExactRational,
    pub b: ExactRational,
    pub c: ExactRational,
}

impl RationalTriangle {
    /// Builds a triangle from its sides; the area label is `ab/2`.
    pub fn from_sides(a: ExactRational, b: ExactRational, c: ExactRational) -> Result<Self> {
        if &a * &a + &b * &b != &c * &c {
            return Err(domain("sides do not satisfy a² + b² = c²"));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::Degenerate("zero leg".into()));
        }
        let q = &a * &b / int(2);
        Ok(RationalTriangle { q, a, b, c })
    }

    /// Builds `[q | a, b, c]`, checking both defining identities.
    pub fn new(q: ExactRational, a: ExactRational, b: ExactRational, c: ExactRational) -> Result<Self> {
        let t = Self::from_sides(a, b, c)?;
        if t.q != q {
            return Err(domain(format!("area label {q} does not equal ab/2 = {}", t.q)));
        }
        Ok(t)
    }

    pub fn is_positive(&self) -> bool {
        self.a.is_positive() && self.b.is_positive() && self.c.is_positive()
    }

    /// Same triangle with the legs exchanged.
    pub fn swapped(&self) -> Self {
        RationalTriangle {
            q: self.q.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
        }
    }

    /// Equal up to exchanging the legs.
    pub fn same_up_to_legs(&self, other: &Self) -> bool {
        self == other || &self.swapped() == other
    }

    pub fn area_is_consistent(&self) -> bool {
        &self.a * &self.a + &self.b * &self.b == &self.c * &self.c
            && &self.a * &self.b == &self.q * int(2)
    }
}

impl fmt::Display for RationalTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{},{},{}]", self.q, self.a, self.b, self.c)
    }
}

/// Integer triple `(s(κ²−l²), 2sκl, s(κ²+l²))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PythTriple {
    pub kappa: u64,
    pub l: u64,
    pub s: u64,
    pub legs: (u64, u64),
    pub hyp: u64,
    pub area: u64,
}

fn check_pair(kappa: u64, l: u64) -> Result<()> {
    if l == 0 || kappa <= l {
        return Err(domain(format!("need κ > l > 0, got ({kappa}, {l})")));
    }
    if (kappa - l).is_multiple_of(2) {
        return Err(domain(format!("κ − l must be odd, got ({kappa}, {l})")));
    }
    if gcd(kappa, l) != 1 {
        return Err(domain(format!("κ and l must be coprime, got ({kappa}, {l})")));
    }
    Ok(())
}

fn is_admissible(kappa: u64, l: u64) -> bool {
    check_pair(kappa, l).is_ok()
}

/// The triple with parameters `(κ, l, s)`.
pub fn pythagorean(kappa: u64, l: u64, s: u64) -> Result<PythTriple> {
    check_pair(kappa, l)?;
    if s == 0 {
        return Err(domain("scale s must be ≥ 1"));
    }
    let overflow = || domain(format!("triple ({kappa}, {l}, {s}) overflows u64"));
    let k2 = kappa.checked_mul(kappa).ok_or_else(overflow)?;
    let l2 = l * l;
    let odd = (k2 - l2).checked_mul(s).ok_or_else(overflow)?;
    let even = (2 * kappa).checked_mul(l).and_then(|v| v.checked_mul(s)).ok_or_else(overflow)?;
    let hyp = (k2 + l2).checked_mul(s).ok_or_else(overflow)?;
    let area = (k2 - l2)
        .checked_mul(kappa)
        .and_then(|v| v.checked_mul(l))
        .and_then(|v| v.checked_mul(s))
        .and_then(|v| v.checked_mul(s))
        .ok_or_else(overflow)?;
    Ok(PythTriple {
        kappa,
        l,
        s,
        legs: (odd, even),
        hyp,
        area,
    })
}

/// All admissible `(κ, l)` with `κ ≤ kappa_max`, in `(κ, l)` lexicographic order.
pub fn admissible_pairs(kappa_max: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=kappa_max).flat_map(|k| (1..k).filter(move |&l| is_admissible(k, l)).map(move |l| (k, l)))
}

/// Primitive triples with area at most `area_bound`, ordered by `(κ, l)`.
#[derive(Debug, Clone)]
pub struct PythagoreanIter {
    bound: u64,
    kappa: u64,
    l: u64,
}

impl Iterator for PythagoreanIter {
    type Item = PythTriple;

    fn next(&mut self) -> Option<PythTriple> {
        loop {
            // (κ²−l²)·l is concave in l, so l = 1 gives the smallest area for κ.
            let min_area = (self.kappa as u128 * self.kappa as u128 - 1) * self.kappa as u128;
            if min_area > self.bound as u128 {
                return None;
            }
            self.l += 1;
            if self.l >= self.kappa {
                self.kappa += 1;
                self.l = 0;
                continue;
            }
            if !is_admissible(self.kappa, self.l) {
                continue;
            }
            match pythagorean(self.kappa, self.l, 1) {
                Ok(t) if t.area <= self.bound => return Some(t),
                _ => continue,
            }
        }
    }
}

pub fn enumerate_pythagorean(area_bound: u64) -> PythagoreanIter {
    PythagoreanIter {
        bound: area_bound,
        kappa: 2,
        l: 0,
    }
}

/// A triple reduced to its square-free class: `area = m²·n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleClass {
    pub n: u64,
    pub m: u64,
    pub triangle: RationalTriangle,
}

/// Square-free part of `∏ parts` without forming the product.
fn squarefree_of_product(parts: &[u64]) -> (u64, u64) {
    let mut exps: HashMap<u64, u32> = HashMap::new();
    for &p in parts {
        for (prime, e) in factorize(p).expect("non-zero part").factors {
            *exps.entry(prime).or_default() += e;
        }
    }
    let mut n = 1u64;
    let mut m = 1u64;
    for (p, e) in exps {
        if e % 2 == 1 {
            n *= p;
        }
        m *= p.pow(e / 2);
    }
    (n, m)
}

fn class_parts(t: &PythTriple) -> [u64; 6] {
    [t.kappa - t.l, t.kappa + t.l, t.kappa, t.l, t.s, t.s]
}

/// `[n | leg₁/m, leg₂/m, hyp/m]` with `n` the square-free part of the area.
pub fn class_of(triple: &PythTriple) -> TriangleClass {
    let (n, m) = squarefree_of_product(&class_parts(triple));
    let m_r = int(m as i64);
    let side = |v: u64| BigRational::from_integer(v.into()) / &m_r;
    let triangle = RationalTriangle {
        q: int(n as i64),
        a: side(triple.legs.0),
        b: side(triple.legs.1),
        c: side(triple.hyp),
    };
    TriangleClass { n, m, triangle }
}

/// A triangle found for `n`, with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kappa: u64,
    pub l: u64,
    pub m: u64,
    pub triangle: RationalTriangle,
}

/// Scans `(κ, l)` with `κ ≤ kappa_bound` for a triple whose area has square-free
/// part `n`. `None` means nothing was found within the bound, not that `n` is
/// non-congruent.
pub fn witness_search(n: u64, kappa_bound: u64) -> Result<Option<Witness>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_squarefree(n) {
        return Err(Error::NotSquareFree(n));
    }
    for (k, l) in admissible_pairs(kappa_bound) {
        let (sf, _) = squarefree_of_product(&[k - l, k + l, k, l]);
        if sf == n {
            let triple = pythagorean(k, l, 1)?;
            let class = class_of(&triple);
            return Ok(Some(Witness {
                kappa: k,
                l,
                m: class.m,
                triangle: class.triangle,
            }));
        }
    }
    Ok(None)
}

/// First witness for every square-free class reachable with `κ ≤ kappa_bound`.
///
/// Equivalent to calling [`witness_search`] for every `n`, but one pass.
#[derive(Debug, Clone)]
pub struct WitnessIndex {
    kappa_bound: u64,
    first: HashMap<u64, (u64, u64)>,
}

impl WitnessIndex {
    pub fn build(kappa_bound: u64) -> Self {
        let mut first = HashMap::new();
        for (k, l) in admissible_pairs(kappa_bound) {
            let (sf, _) = squarefree_of_product(&[k - l, k + l, k, l]);
            first.entry(sf).or_insert((k, l));
        }
        WitnessIndex { kappa_bound, first }
    }

    pub fn kappa_bound(&self) -> u64 {
        self.kappa_bound
    }

    pub fn get(&self, n: u64) -> Option<Witness> {
        let &(kappa, l) = self.first.get(&n)?;
        let class = class_of(&pythagorean(kappa, l, 1).ok()?);
        Some(Witness {
            kappa,
            l,
            m: class.m,
            triangle: class.triangle,
        })
    }
}

/// `r < s < t` with `t² − r² = 2n` and `t² + r² = 2s²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RstWitness {
    pub r: ExactRational,
    pub s: ExactRational,
    pub t: ExactRational,
    pub n: u64,
}

impl RstWitness {
    pub fn new(r: ExactRational, s: ExactRational, t: ExactRational, n: u64) -> Result<Self> {
        if !(r.is_positive() && r < s && s < t) {
            return Err(domain("need 0 < r < s < t"));
        }
        let two = int(2);
        if &t * &t - &r * &r != &two * int(n as i64) || &t * &t + &r * &r != &two * &s * &s {
            return Err(domain("r, s, t do not satisfy t²−r²=2n, t²+r²=2s²"));
        }
        Ok(RstWitness { r, s, t, n })
    }
}

/// `r = |a−b|/2`, `s = c/2`, `t = (a+b)/2`.
pub fn rst_from_triangle(tri: &RationalTriangle) -> Result<RstWitness> {
    if !tri.is_positive() {
        return Err(domain("triangle must have positive sides"));
    }
    if !crate::arith::is_integer(&tri.q) {
        return Err(domain(format!("area {} is not an integer", tri.q)));
    }
    if tri.a == tri.b {
        return Err(Error::Degenerate("isosceles triangle gives r = 0".into()));
    }
    let n: u64 = tri
        .q
        .to_integer()
        .try_into()
        .map_err(|_| domain("area does not fit in u64"))?;
    let two = int(2);
    RstWitness::new(
        (&tri.a - &tri.b).abs() / &two,
        &tri.c / &two,
        (&tri.a + &tri.b) / &two,
        n,
    )
}

/// `a = r + t`, `b = t − r`, `c = 2s`.
pub fn triangle_from_rst(w: &RstWitness) -> RationalTriangle {
    RationalTriangle {
        q: int(w.n as i64),
        a: &w.r + &w.t,
        b: &w.t - &w.r,
        c: &w.s * int(2),
    }
}

/// `[s²q | sa, sb, sc]`.
pub fn scale_triangle(tri: &RationalTriangle, s: &ExactRational) -> Result<RationalTriangle> {
    if s.is_zero() {
        return Err(domain("scale factor must be non-zero"));
    }
    Ok(RationalTriangle {
        q: &tri.q * s * s,
        a: &tri.a * s,
        b: &tri.b * s,
        c: &tri.c * s,
    })
}
