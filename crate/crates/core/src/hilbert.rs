//! Alternating Betti polynomials, PBW Hilbert series and divisibility.
//!
//! For a positively graded Lie algebra with `h_i = dim g_i`, the enveloping
//! algebra has Hilbert series `Π_i (1 - t^i)^(-h_i)`. A finite length module
//! with pure Betti numbers `β` in degrees `d` has Hilbert series
//! `p(t)·Π_i (1 - t^i)^(-h_i)` with `p(t) = Σ_i (-1)^i β_i t^(d_i)`, so `p`
//! must be divisible by `Π_i (1 - t^i)^(h_i)` over the integers.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactcore::IntPoly;
use crate::pureray::{BettiPoint, DegreeSequence};
use crate::{Error, Result};

/// `(h_1, …, h_k)` with positive total and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DimensionVector(Vec<u32>);

impl DimensionVector {
    pub fn new(mut entries: Vec<u32>) -> Result<Self> {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        if entries.is_empty() {
            return Err(Error::EmptyDimensionVector);
        }
        Ok(DimensionVector(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `h_i` for `i ≥ 1`; zero past the end.
    pub fn dim(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.0.len()
    }

    /// Concentrated in degree 1, i.e. the vector `(n)`.
    pub fn is_abelian(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str(")")
    }
}

/// A numerator over the PBW denominator `Π_i (1 - t^i)^(h_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertDatum {
    pub numerator: IntPoly,
    pub denominator_dims: DimensionVector,
}

/// `Σ_i (-1)^i β_i t^(d_i)`. Degrees must be nonnegative.
pub fn alternating_betti_poly(d: &DegreeSequence, beta: &BettiPoint) -> Result<IntPoly> {
    if d.len() != beta.len() {
        return Err(Error::LengthMismatch { expected: d.len(), found: beta.len() });
    }
    if d.entries()[0] < 0 {
        return Err(Error::InvalidParameter(
            "alternating Betti polynomial needs nonnegative degrees; shift to d_0 = 0".into(),
        ));
    }
    Ok(IntPoly::from_terms(
        d.entries()
            .iter()
            .zip(beta.entries())
            .enumerate()
            .map(|(i, (&di, b))| (di as usize, if i % 2 == 0 { b.clone() } else { -b })),
    ))
}

/// `1 - t^i`
pub fn one_minus_t_pow(i: usize) -> IntPoly {
    IntPoly::from_terms([(0, 1i64), (i, -1)])
}

/// `1 + t + … + t^(i-1)`
pub fn geometric_factor(i: usize) -> IntPoly {
    IntPoly::from_terms((0..i).map(|e| (e, 1i64)))
}

/// Expanded `Π_i (1 - t^i)^(h_i)`.
pub fn denominator_poly(h: &DimensionVector) -> IntPoly {
    h.entries()
        .iter()
        .enumerate()
        .fold(IntPoly::one(), |acc, (k, &hi)| &acc * &one_minus_t_pow(k + 1).pow(hi))
}

/// Coefficients `c_0, …, c_N` of `Π_i (1 - t^i)^(-h_i)`.
///
/// Each factor `1/(1 - t^i)` is applied as a running sum with stride `i`.
pub fn pbw_series_coeffs(h: &DimensionVector, n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::from(1);
    for (k, &hi) in h.entries().iter().enumerate() {
        let stride = k + 1;
        for _ in 0..hi {
            for d in stride..=n {
                let prev = c[d - stride].clone();
                c[d] += prev;
            }
        }
    }
    c
}

/// The single factor a non-divisibility witness is reported against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessFactor {
    /// `(1 - t)^e`, collecting the `(1 - t)` part of every `1 - t^i`.
    OneMinusT,
    /// `(1 + t + … + t^(i-1))^e` for `i ≥ 2`.
    Geometric(usize),
}

impl WitnessFactor {
    pub fn poly(&self) -> IntPoly {
        match self {
            WitnessFactor::OneMinusT => one_minus_t_pow(1),
            WitnessFactor::Geometric(i) => geometric_factor(*i),
        }
    }

    pub fn label(&self) -> String {
        self.poly().to_text()
    }
}

/// Human-readable reason a polynomial is not divisible: the first factor in
/// the order `(1-t)^s, (1+t)^(h_2), (1+t+t^2)^(h_3), …` whose power leaves a
/// nonzero remainder.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorWitness {
    pub factor: WitnessFactor,
    pub exponent: u32,
    pub remainder: IntPoly,
}

impl FactorWitness {
    /// The remainder as an integer when it is a constant.
    pub fn constant_remainder(&self) -> Option<BigInt> {
        match self.remainder.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.remainder.coeff(0)),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DivisionVerdict {
    Divisible {
        quotient: IntPoly,
    },
    NotDivisible {
        /// Remainder against the fully expanded denominator; authoritative.
        remainder: IntPoly,
        /// Advisory single-factor witness, when one exists.
        witness: Option<FactorWitness>,
    },
}

impl DivisionVerdict {
    pub fn is_divisible(&self) -> bool {
        matches!(self, DivisionVerdict::Divisible { .. })
    }

    pub fn quotient(&self) -> Option<&IntPoly> {
        match self {
            DivisionVerdict::Divisible { quotient } => Some(quotient),
            DivisionVerdict::NotDivisible { .. } => None,
        }
    }
}

fn factor_witness(p: &IntPoly, h: &DimensionVector) -> Option<FactorWitness> {
    let mut candidates = vec![(WitnessFactor::OneMinusT, h.total())];
    for i in 2..=h.max_degree() {
        let e = h.dim(i);
        if e > 0 {
            candidates.push((WitnessFactor::Geometric(i), e));
        }
    }
    candidates.into_iter().find_map(|(factor, exponent)| {
        let (_, remainder) = p
            .divrem(&factor.poly().pow(exponent))
            .expect("factor powers are monic up to sign");
        (!remainder.is_zero()).then_some(FactorWitness { factor, exponent, remainder })
    })
}

/// Decides whether `Π_i (1 - t^i)^(h_i)` divides `p` over the integers.
pub fn divides(p: &IntPoly, h: &DimensionVector) -> DivisionVerdict {
    let den = denominator_poly(h);
    let (quotient, remainder) = p.divrem(&den).expect("denominator is monic up to sign");
    if remainder.is_zero() {
        DivisionVerdict::Divisible { quotient }
    } else {
        DivisionVerdict::NotDivisible { remainder, witness: factor_witness(p, h) }
    }
}

/// Whether the exact quotient `p / Π(1 - t^i)^(h_i)` has only nonnegative
/// coefficients. Calling this on a non-divisible pair is a contract violation.
pub fn quotient_nonnegative(p: &IntPoly, h: &DimensionVector) -> Result<bool> {
    match divides(p, h) {
        DivisionVerdict::Divisible { quotient } => {
            Ok(quotient.coeffs().iter().all(|c| !c.is_negative()))
        }
        DivisionVerdict::NotDivisible { .. } => Err(Error::ContractViolation(format!(
            "{p} is not divisible by the PBW denominator of {h}"
        ))),
    }
}
