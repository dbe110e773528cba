//! Degree sequences, Herzog–Kühl residuals and primitive integral points.
//!
//! A pure ray is indexed by a strictly increasing degree sequence
//! `(d_0, …, d_n)`. A nonnegative integer vector `β` lies on it when
//! `Σ_i (-1)^i β_i d_i^m = 0` for `m = 0, …, n-1`. Up to scaling the unique
//! solution is `β_i ∝ Π_{j≠i} 1/|d_i - d_j|`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactcore::{solve_linear_exact, BigRat};
use crate::{Error, Result};

/// Strictly increasing integer tuple `(d_0, …, d_n)` with `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::SequenceTooShort);
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(DegreeSequence(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of entries, `n + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The projective dimension `n`, i.e. the number of HK equations.
    pub fn codim(&self) -> usize {
        self.0.len() - 1
    }

    /// Shifts so that `d_0 = 0`.
    pub fn canonical(&self) -> DegreeSequence {
        let d0 = self.0[0];
        DegreeSequence(self.0.iter().map(|d| d - d0).collect())
    }

    pub fn shifted(&self, c: i64) -> DegreeSequence {
        DegreeSequence(self.0.iter().map(|d| d + c).collect())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Nonnegative Betti numbers `(β_0, …, β_n)` of a pure table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BettiPoint(Vec<BigInt>);

impl BettiPoint {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.iter().any(Signed::is_negative) {
            return Err(Error::NegativeBetti);
        }
        Ok(BettiPoint(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        BettiPoint(entries.iter().map(|&b| BigInt::from(b)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.0.get(i)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, b| g.gcd(b))
    }
}

impl fmt::Display for BettiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

fn check_lengths(d: &DegreeSequence, beta: &BettiPoint) -> Result<()> {
    if d.len() != beta.len() {
        return Err(Error::LengthMismatch { expected: d.len(), found: beta.len() });
    }
    Ok(())
}

/// `Σ_i (-1)^i β_i d_i^m` for `m = 0, …, n-1`.
pub fn hk_residual(d: &DegreeSequence, beta: &BettiPoint) -> Result<Vec<BigInt>> {
    check_lengths(d, beta)?;
    let n = d.codim();
    let mut out = Vec::with_capacity(n);
    let mut powers: Vec<BigInt> = beta
        .entries()
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b })
        .collect();
    for _ in 0..n {
        out.push(powers.iter().sum());
        for (p, &di) in powers.iter_mut().zip(d.entries()) {
            *p *= di;
        }
    }
    Ok(out)
}

pub fn is_on_ray(d: &DegreeSequence, beta: &BettiPoint) -> Result<bool> {
    Ok(hk_residual(d, beta)?.iter().all(Zero::is_zero))
}

/// Scales a vector of positive rationals to coprime positive integers.
fn primitive_from_rationals(values: &[BigRat]) -> BettiPoint {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let ints: Vec<BigInt> = values.iter().map(|v| (v * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, b| g.gcd(b));
    let g = if g.is_zero() { BigInt::one() } else { g };
    BettiPoint(ints.into_iter().map(|b| b / &g).collect())
}

/// Primitive point from the closed form `β_i ∝ Π_{j≠i} |d_i - d_j|^{-1}`:
/// clear denominators with their lcm, then divide by the gcd.
pub fn primitive_point_products(d: &DegreeSequence) -> BettiPoint {
    let e = d.entries();
    let values: Vec<BigRat> = (0..e.len())
        .map(|i| {
            let prod = e
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(BigInt::one(), |acc, (_, &dj)| acc * BigInt::from((e[i] - dj).abs()));
            BigRat::new(BigInt::one(), prod)
        })
        .collect();
    primitive_from_rationals(&values)
}

/// Primitive point from an exact solve of the HK system with `β_0 = 1`.
///
/// Unknowns are `β_1, …, β_n`; equation `m` reads
/// `Σ_{i≥1} (-1)^i d_i^m β_i = -d_0^m`.
pub fn primitive_point_solve(d: &DegreeSequence) -> Result<BettiPoint> {
    let e = d.entries();
    let n = d.codim();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for m in 0..n as u32 {
        let row: Vec<BigRat> = (1..=n)
            .map(|i| {
                let v = BigInt::from(e[i]).pow(m);
                BigRat::from_integer(if i % 2 == 0 { v } else { -v })
            })
            .collect();
        a.push(row);
        b.push(BigRat::from_integer(-BigInt::from(e[0]).pow(m)));
    }
    let sol = solve_linear_exact(&a, &b).map_err(|err| match err {
        Error::SingularSystem => Error::ContractViolation(alloc::format!(
            "HK system for {d} is singular"
        )),
        other => other,
    })?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(BigRat::one());
    values.extend(sol);
    if values.iter().any(|v| !v.is_positive()) {
        return Err(Error::ContractViolation(alloc::format!(
            "HK solution for {d} has a non-positive entry"
        )));
    }
    Ok(primitive_from_rationals(&values))
}

/// Entrywise `k·β` for `k ≥ 1`.
pub fn scale_point(beta: &BettiPoint, k: u64) -> Result<BettiPoint> {
    if k == 0 {
        return Err(Error::InvalidParameter("scale factor must be at least 1".into()));
    }
    let k = BigInt::from(k);
    Ok(BettiPoint(beta.entries().iter().map(|b| b * &k).collect()))
}
