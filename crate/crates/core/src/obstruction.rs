//! Realizability verdicts for points on pure rays.
//!
//! Only necessary conditions are implemented, so a verdict is either
//! [`Status::NotRealizable`] (every case eliminated, each with a witness) or
//! [`Status::Undecided`]. Nothing here ever claims a point is realizable.
//!
//! Two mechanisms come from the theory:
//!
//! - Krull: a module with `β_0 = 1` is cyclic, `R/I` with `I` generated by
//!   `β_1` elements, and `ht(I) ≤ β_1`; finite length over `n` variables
//!   therefore needs `β_1 ≥ n`.
//! - PBW divisibility: over `U(g)` with dimension vector `h` the alternating
//!   Betti polynomial must be divisible by `Π_i (1 - t^i)^(h_i)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactcore::{BigRat, IntPoly};
use crate::hilbert::{
    alternating_betti_poly, divides, geometric_factor, one_minus_t_pow, DimensionVector,
    DivisionVerdict, FactorWitness, WitnessFactor,
};
use crate::pureray::{
    hk_residual, is_on_ray, primitive_point_products, primitive_point_solve, BettiPoint,
    DegreeSequence,
};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Status {
    NotRealizable,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NotRealizable => "NOT_REALIZABLE",
            Status::Undecided => "UNDECIDED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The ring a realization is sought over.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Case {
    /// `k[x_1, …, x_n]` with standard grading.
    PolynomialRing { n_vars: u32 },
    /// `U(g)` for a graded Lie algebra with the given dimension vector.
    Lie(DimensionVector),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Mechanism {
    Divisibility {
        remainder: IntPoly,
        witness: Option<FactorWitness>,
    },
    Krull {
        beta0: BigInt,
        beta1: BigInt,
        n_vars: u32,
    },
    /// Optional check: the would-be Hilbert numerator has a negative
    /// coefficient.
    NegativeQuotient { quotient: IntPoly },
    /// Optional check: no Lie algebra generated in degree 1 has this
    /// dimension vector.
    LieConstraint { reason: &'static str },
}

impl Mechanism {
    pub fn kind(&self) -> &'static str {
        match self {
            Mechanism::Divisibility { .. } => "DIVISIBILITY",
            Mechanism::Krull { .. } => "KRULL",
            Mechanism::NegativeQuotient { .. } => "NEGATIVE_QUOTIENT",
            Mechanism::LieConstraint { .. } => "LIE_CONSTRAINT",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Eliminated(Mechanism),
    /// No obstruction fired. For divisible Lie cases the exact quotient is kept.
    Survives { quotient: Option<IntPoly> },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseRecord {
    pub case: Case,
    pub outcome: Outcome,
}

impl CaseRecord {
    pub fn mechanism(&self) -> Option<&Mechanism> {
        match &self.outcome {
            Outcome::Eliminated(m) => Some(m),
            Outcome::Survives { .. } => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub status: Status,
    pub records: Vec<CaseRecord>,
}

impl Verdict {
    fn from_records(records: Vec<CaseRecord>) -> Self {
        let all = !records.is_empty() && records.iter().all(|r| r.mechanism().is_some());
        let status = if all { Status::NotRealizable } else { Status::Undecided };
        Verdict { status, records }
    }

    pub fn eliminations(&self) -> impl Iterator<Item = (&Case, &Mechanism)> + '_ {
        self.records
            .iter()
            .filter_map(|r| r.mechanism().map(|m| (&r.case, m)))
    }

    pub fn survivors(&self) -> impl Iterator<Item = &Case> + '_ {
        self.records
            .iter()
            .filter(|r| r.mechanism().is_none())
            .map(|r| &r.case)
    }

    pub fn record_for(&self, case: &Case) -> Option<&CaseRecord> {
        self.records.iter().find(|r| &r.case == case)
    }
}

/// True when `β_0 = 1` and `β_1 < n_vars`. False means no conclusion.
pub fn krull_cyclic_obstruction(n_vars: u32, beta: &BettiPoint) -> bool {
    match (beta.get(0), beta.get(1)) {
        (Some(b0), Some(b1)) => b0.is_one() && *b1 < BigInt::from(n_vars),
        _ => false,
    }
}

fn krull_mechanism(n_vars: u32, beta: &BettiPoint) -> Option<Mechanism> {
    krull_cyclic_obstruction(n_vars, beta).then(|| Mechanism::Krull {
        beta0: beta.entries()[0].clone(),
        beta1: beta.entries()[1].clone(),
        n_vars,
    })
}

/// Verdict over the polynomial ring in `n_vars` variables.
pub fn krull_verdict(n_vars: u32, beta: &BettiPoint) -> Verdict {
    let outcome = match krull_mechanism(n_vars, beta) {
        Some(m) => Outcome::Eliminated(m),
        None => Outcome::Survives { quotient: None },
    };
    Verdict::from_records(vec![CaseRecord { case: Case::PolynomialRing { n_vars }, outcome }])
}

/// All compositions of `n` (every part ≥ 1), largest first part first:
/// for `n = 4` that is `(4), (3,1), (2,2), (2,1,1), (1,3), …, (1,1,1,1)`.
pub fn enumerate_dim_vectors(n: u32) -> Vec<DimensionVector> {
    fn rec(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<DimensionVector>) {
        if remaining == 0 {
            out.push(DimensionVector::new(prefix.clone()).expect("positive composition"));
            return;
        }
        for first in (1..=remaining).rev() {
            prefix.push(first);
            rec(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Necessary conditions for `h` to come from a Lie algebra generated in
/// degree 1: `g_{i+1} = [g_1, g_i]`, so `h_{i+1} ≤ h_1·h_i`, and
/// `g_2` is spanned by brackets of pairs, so `h_2 ≤ h_1(h_1 - 1)/2`.
pub fn lie_constraint_violation(h: &DimensionVector) -> Option<&'static str> {
    let e = h.entries();
    let h1 = u64::from(e[0]);
    if e.len() > 1 && h1 == 1 {
        return Some("h_1 = 1 forces the algebra to be abelian");
    }
    if e.len() > 1 && u64::from(e[1]) > h1 * (h1.saturating_sub(1)) / 2 {
        return Some("h_2 exceeds h_1(h_1-1)/2");
    }
    if e.windows(2).any(|w| u64::from(w[1]) > h1 * u64::from(w[0])) {
        return Some("h_(i+1) exceeds h_1 * h_i");
    }
    None
}

/// Optional extra elimination mechanisms. Both are off by default, which
/// reproduces the textbook elimination counts exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct LieOptions {
    pub prune_lie_constraints: bool,
    pub nonnegative_quotient: bool,
}

/// Runs the Lie obstructions against an explicit list of dimension vectors.
pub fn lie_verdict_for(
    d: &DegreeSequence,
    beta: &BettiPoint,
    vectors: &[DimensionVector],
    options: LieOptions,
) -> Result<Verdict> {
    if !is_on_ray(d, beta)? {
        return Err(Error::NotOnRay);
    }
    // divisibility by a denominator coprime to t ignores the shift t^(d_0)
    let p = alternating_betti_poly(&d.canonical(), beta)?;
    let records = vectors
        .iter()
        .map(|h| {
            let outcome = lie_case(&p, beta, h, options);
            CaseRecord { case: Case::Lie(h.clone()), outcome }
        })
        .collect();
    Ok(Verdict::from_records(records))
}

fn lie_case(p: &IntPoly, beta: &BettiPoint, h: &DimensionVector, options: LieOptions) -> Outcome {
    if options.prune_lie_constraints {
        if let Some(reason) = lie_constraint_violation(h) {
            return Outcome::Eliminated(Mechanism::LieConstraint { reason });
        }
    }
    match divides(p, h) {
        DivisionVerdict::NotDivisible { remainder, witness } => {
            Outcome::Eliminated(Mechanism::Divisibility { remainder, witness })
        }
        DivisionVerdict::Divisible { quotient } => {
            if h.is_abelian() {
                if let Some(m) = krull_mechanism(h.total(), beta) {
                    return Outcome::Eliminated(m);
                }
            }
            if options.nonnegative_quotient && quotient.coeffs().iter().any(Signed::is_negative) {
                return Outcome::Eliminated(Mechanism::NegativeQuotient { quotient });
            }
            Outcome::Survives { quotient: Some(quotient) }
        }
    }
}

/// Verdict over every `n`-dimensional graded Lie algebra generated in degree 1.
pub fn lie_verdict(
    d: &DegreeSequence,
    beta: &BettiPoint,
    n: u32,
    options: LieOptions,
) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidParameter("Lie algebra dimension must be positive".into()));
    }
    lie_verdict_for(d, beta, &enumerate_dim_vectors(n), options)
}

fn fail(msg: alloc::string::String) -> Error {
    Error::VerificationFailed(msg)
}

fn ensure(cond: bool, msg: impl FnOnce() -> alloc::string::String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// Both halves of the codimension-3 counterexample.
#[derive(Clone, Debug)]
pub struct Bs61Certificate {
    pub degrees: DegreeSequence,
    pub point: BettiPoint,
    pub residuals: Vec<BigInt>,
    pub polynomial: IntPoly,
    /// `P(-1)`
    pub value_at_minus_one: BigInt,
    /// Over `k[x,y,z]`.
    pub polynomial_ring: Verdict,
    /// Over `U(h)` for the Heisenberg algebra, dimension vector `(2,1)`.
    pub heisenberg: Verdict,
}

pub fn verify_bs61() -> Result<Bs61Certificate> {
    let degrees = DegreeSequence::new(vec![0, 6, 20, 21])?;
    let point = primitive_point_products(&degrees);
    ensure(point == BettiPoint::from_u64s(&[1, 2, 9, 8]), || {
        format!("primitive point {point} differs from (1,2,9,8)")
    })?;
    let solved = primitive_point_solve(&degrees)?;
    ensure(solved == point, || format!("linear solve gave {solved}, products gave {point}"))?;
    let residuals = hk_residual(&degrees, &point)?;
    ensure(residuals.iter().all(Zero::is_zero), || "nonzero HK residual".into())?;

    let polynomial_ring = krull_verdict(3, &point);
    ensure(polynomial_ring.status == Status::NotRealizable, || {
        "Krull obstruction did not fire over k[x,y,z]".into()
    })?;

    let heisenberg_h = DimensionVector::new(vec![2, 1])?;
    let heisenberg = lie_verdict_for(&degrees, &point, &[heisenberg_h], LieOptions::default())?;
    let polynomial = alternating_betti_poly(&degrees, &point)?;
    let value_at_minus_one = polynomial.eval_int(&BigInt::from(-1));
    ensure(value_at_minus_one == BigInt::from(16), || {
        format!("P(-1) = {value_at_minus_one}, expected 16")
    })?;
    let witnessed = heisenberg.records.first().and_then(CaseRecord::mechanism).and_then(|m| match m {
        Mechanism::Divisibility { witness: Some(w), .. } => Some(w),
        _ => None,
    });
    let w = witnessed.ok_or_else(|| fail("Heisenberg case not eliminated by divisibility".into()))?;
    ensure(
        w.factor == WitnessFactor::Geometric(2)
            && w.exponent == 1
            && w.constant_remainder() == Some(BigInt::from(16)),
        || format!("unexpected witness {w:?}"),
    )?;
    Ok(Bs61Certificate {
        degrees,
        point,
        residuals,
        polynomial,
        value_at_minus_one,
        polynomial_ring,
        heisenberg,
    })
}

/// The codimension-4 counterexample over all 4-dimensional Lie algebras.
#[derive(Clone, Debug)]
pub struct Bs62Certificate {
    pub degrees: DegreeSequence,
    pub point: BettiPoint,
    pub polynomial: IntPoly,
    pub verdict: Verdict,
    /// `p(t) / (1-t)^4`
    pub quotient: IntPoly,
    /// `q(-1)`
    pub quotient_at_minus_one: BigInt,
    /// `q mod (1 + t + t^2)`
    pub quotient_mod_geometric3: IntPoly,
}

pub fn verify_bs62() -> Result<Bs62Certificate> {
    let degrees = DegreeSequence::new(vec![0, 1, 4, 5, 6])?;
    let point = primitive_point_solve(&degrees)?;
    ensure(point == BettiPoint::from_u64s(&[1, 2, 5, 6, 2]), || {
        format!("primitive point {point} differs from (1,2,5,6,2)")
    })?;
    ensure(primitive_point_products(&degrees) == point, || {
        "product formula disagrees with the linear solve".into()
    })?;
    let polynomial = alternating_betti_poly(&degrees, &point)?;
    let verdict = lie_verdict(&degrees, &point, 4, LieOptions::default())?;
    ensure(verdict.status == Status::NotRealizable, || "a dimension vector survived".into())?;
    ensure(verdict.records.len() == 8, || format!("{} records, expected 8", verdict.records.len()))?;
    let krull = verdict.eliminations().filter(|(_, m)| m.kind() == "KRULL").count();
    let div = verdict.eliminations().filter(|(_, m)| m.kind() == "DIVISIBILITY").count();
    ensure(krull == 1 && div == 7, || format!("{div} divisibility and {krull} Krull records"))?;
    ensure(
        matches!(verdict.records[0].case, Case::Lie(ref h) if h.is_abelian())
            && verdict.records[0].mechanism().map(Mechanism::kind) == Some("KRULL"),
        || "abelian case was not eliminated by Krull".into(),
    )?;

    let (quotient, rem) = polynomial.divrem(&one_minus_t_pow(1).pow(4))?;
    ensure(rem.is_zero(), || "(1-t)^4 does not divide p".into())?;
    ensure(quotient == IntPoly::from_i64s(&[1, 2, 2]), || {
        format!("quotient {quotient}, expected 1 + 2t + 2t^2")
    })?;
    let quotient_at_minus_one = quotient.eval_int(&BigInt::from(-1));
    ensure(quotient_at_minus_one.is_one(), || format!("q(-1) = {quotient_at_minus_one}"))?;
    let (_, quotient_mod_geometric3) = quotient.divrem(&geometric_factor(3))?;
    ensure(quotient_mod_geometric3 == IntPoly::constant(BigInt::from(-1)), || {
        format!("q mod 1+t+t^2 = {quotient_mod_geometric3}")
    })?;
    // deg q = 2 rules out every 1 + … + t^(i-1) with i ≥ 4
    ensure(quotient.degree() == Some(2), || "unexpected quotient degree".into())?;
    ensure(
        polynomial.eval(&BigRat::one()).is_zero(),
        || "p(1) must vanish on the ray".into(),
    )?;
    Ok(Bs62Certificate {
        degrees,
        point,
        polynomial,
        verdict,
        quotient,
        quotient_at_minus_one,
        quotient_mod_geometric3,
    })
}

/// One obstruction family a search should try.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Target {
    Krull { n_vars: u32 },
    Lie { dim: u32 },
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Krull { n_vars } => write!(f, "krull:{n_vars}"),
            Target::Lie { dim } => write!(f, "lie:{dim}"),
        }
    }
}

pub const MAX_LIE_DIM: u32 = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchParams {
    pub n: usize,
    pub d_max: i64,
    pub targets: Vec<Target>,
    pub options: LieOptions,
}

impl SearchParams {
    /// Krull over `n` variables and Lie algebras of dimension `n`.
    pub fn standard(n: usize, d_max: i64) -> Self {
        let k = n as u32;
        SearchParams {
            n,
            d_max,
            targets: vec![Target::Krull { n_vars: k }, Target::Lie { dim: k }],
            options: LieOptions::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=6).contains(&self.n) {
            return Err(Error::InvalidParameter(format!("n = {} outside 2..=6", self.n)));
        }
        if self.d_max > 64 || self.d_max < self.n as i64 {
            return Err(Error::InvalidParameter(format!(
                "d_max = {} outside {}..=64",
                self.d_max, self.n
            )));
        }
        if self.targets.is_empty() {
            return Err(Error::InvalidParameter("no obstruction targets".into()));
        }
        for t in &self.targets {
            match *t {
                Target::Krull { n_vars } if n_vars == 0 => {
                    return Err(Error::InvalidParameter("Krull target needs n_vars ≥ 1".into()))
                }
                Target::Lie { dim } if dim == 0 || dim > MAX_LIE_DIM => {
                    return Err(Error::InvalidParameter(format!(
                        "Lie dimension {dim} outside 1..={MAX_LIE_DIM}"
                    )))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// A degree sequence whose primitive point every requested target rules out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchFinding {
    pub degrees: DegreeSequence,
    pub point: BettiPoint,
    pub verdicts: Vec<(Target, Verdict)>,
}

/// Runs every target on the primitive point of `d`; returns a finding only
/// when all of them report [`Status::NotRealizable`].
pub fn evaluate_sequence(
    d: &DegreeSequence,
    targets: &[Target],
    options: LieOptions,
) -> Result<Option<SearchFinding>> {
    let point = primitive_point_products(d);
    let mut verdicts = Vec::with_capacity(targets.len());
    for &target in targets {
        let verdict = match target {
            Target::Krull { n_vars } => krull_verdict(n_vars, &point),
            Target::Lie { dim } => lie_verdict(d, &point, dim, options)?,
        };
        if verdict.status != Status::NotRealizable {
            return Ok(None);
        }
        verdicts.push((target, verdict));
    }
    Ok(Some(SearchFinding { degrees: d.clone(), point, verdicts }))
}

/// Canonical sequences `0 = d_0 < d_1 < … < d_n ≤ d_max` in lexicographic
/// order, optionally pinned to a fixed `d_1`.
#[derive(Clone, Debug)]
pub struct CanonicalSequences {
    d_max: i64,
    prefix_len: usize,
    current: Option<Vec<i64>>,
}

impl CanonicalSequences {
    pub fn new(n: usize, d_max: i64) -> Self {
        let start: Vec<i64> = (0..=n as i64).collect();
        let current = (n >= 1 && d_max >= n as i64).then_some(start);
        CanonicalSequences { d_max, prefix_len: 1, current }
    }

    /// Only the sequences with the given `d_1`.
    pub fn with_first_step(n: usize, d_max: i64, d1: i64) -> Self {
        let ok = n >= 1 && d1 >= 1 && d1 + (n as i64 - 1) <= d_max;
        let current = ok.then(|| {
            let mut v = vec![0, d1];
            v.extend((1..n as i64).map(|k| d1 + k));
            v
        });
        CanonicalSequences { d_max, prefix_len: 2, current }
    }
}

impl Iterator for CanonicalSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        let cur = self.current.take()?;
        let out = DegreeSequence::new(cur.clone()).expect("strictly increasing by construction");
        let len = cur.len();
        let mut next = cur;
        let mut i = len;
        while i > self.prefix_len {
            i -= 1;
            let cap = self.d_max - (len - 1 - i) as i64;
            if next[i] < cap {
                next[i] += 1;
                for j in i + 1..len {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Sequential reference search; findings come out in lexicographic order of
/// the degree sequence.
pub fn search_counterexamples(params: &SearchParams) -> Result<Vec<SearchFinding>> {
    params.validate()?;
    let mut out = Vec::new();
    for d in CanonicalSequences::new(params.n, params.d_max) {
        if let Some(f) = evaluate_sequence(&d, &params.targets, params.options)? {
            out.push(f);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[i64]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    fn dv(h: &[u32]) -> DimensionVector {
        DimensionVector::new(h.to_vec()).unwrap()
    }

    #[test]
    fn krull_examples() {
        assert!(krull_cyclic_obstruction(3, &BettiPoint::from_u64s(&[1, 2, 9, 8])));
        assert!(krull_cyclic_obstruction(4, &BettiPoint::from_u64s(&[1, 2, 5, 6, 2])));
        assert!(!krull_cyclic_obstruction(3, &BettiPoint::from_u64s(&[1, 3, 3, 1])));
        assert!(!krull_cyclic_obstruction(3, &BettiPoint::from_u64s(&[2, 4, 18, 16])));
    }

    #[test]
    fn compositions_of_four() {
        let got: Vec<Vec<u32>> = enumerate_dim_vectors(4).iter().map(|h| h.entries().to_vec()).collect();
        let want: Vec<Vec<u32>> = vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 3],
            vec![1, 2, 1],
            vec![1, 1, 2],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(got, want);
        assert_eq!(enumerate_dim_vectors(1), vec![dv(&[1])]);
        assert!(enumerate_dim_vectors(3).contains(&dv(&[2, 1])));
    }

    #[test]
    fn bs62_lie_verdict() {
        let v = lie_verdict(&seq(&[0, 1, 4, 5, 6]), &BettiPoint::from_u64s(&[1, 2, 5, 6, 2]), 4, LieOptions::default())
            .unwrap();
        assert_eq!(v.status, Status::NotRealizable);
        let kinds: Vec<&str> = v.eliminations().map(|(_, m)| m.kind()).collect();
        assert_eq!(kinds.len(), 8);
        assert_eq!(kinds[0], "KRULL");
        assert!(kinds[1..].iter().all(|&k| k == "DIVISIBILITY"));
    }

    #[test]
    fn heisenberg_only() {
        let v = lie_verdict_for(
            &seq(&[0, 6, 20, 21]),
            &BettiPoint::from_u64s(&[1, 2, 9, 8]),
            &[dv(&[2, 1])],
            LieOptions::default(),
        )
        .unwrap();
        assert_eq!(v.status, Status::NotRealizable);
        let Some(Mechanism::Divisibility { witness: Some(w), .. }) = v.records[0].mechanism() else {
            panic!("expected divisibility witness");
        };
        assert_eq!(w.constant_remainder(), Some(BigInt::from(16)));
        assert_eq!(w.factor.label(), "1 + t");
    }

    #[test]
    fn koszul_in_two_variables_is_undecided() {
        let v = lie_verdict(&seq(&[0, 1, 2]), &BettiPoint::from_u64s(&[1, 2, 1]), 2, LieOptions::default()).unwrap();
        assert_eq!(v.status, Status::Undecided);
        let abelian = v.record_for(&Case::Lie(dv(&[2]))).unwrap();
        assert_eq!(abelian.outcome, Outcome::Survives { quotient: Some(IntPoly::one()) });
        // (1,1) has denominator (1-t)(1-t^2), which needs 1+t | (1-t)^2
        assert!(v.record_for(&Case::Lie(dv(&[1, 1]))).unwrap().mechanism().is_some());
    }

    #[test]
    fn off_ray_points_are_rejected() {
        let err = lie_verdict(&seq(&[0, 1]), &BettiPoint::from_u64s(&[1, 2]), 1, LieOptions::default()).unwrap_err();
        assert_eq!(err, Error::NotOnRay);
    }

    #[test]
    fn certificates_reproduce() {
        let c = verify_bs61().unwrap();
        assert_eq!(c.point, BettiPoint::from_u64s(&[1, 2, 9, 8]));
        assert_eq!(c.value_at_minus_one, BigInt::from(16));
        let c = verify_bs62().unwrap();
        assert_eq!(c.quotient.to_text(), "1 + 2t + 2t^2");
        assert_eq!(c.verdict.records.len(), 8);
    }

    #[test]
    fn lie_pruning_flags() {
        assert!(lie_constraint_violation(&dv(&[1, 3])).is_some());
        assert!(lie_constraint_violation(&dv(&[2, 2])).is_some());
        assert!(lie_constraint_violation(&dv(&[2, 1])).is_none());
        assert!(lie_constraint_violation(&dv(&[2, 1, 2])).is_none());
        assert!(lie_constraint_violation(&dv(&[3, 3, 10])).is_some());
        let opts = LieOptions { prune_lie_constraints: true, nonnegative_quotient: false };
        let v = lie_verdict(&seq(&[0, 1, 4, 5, 6]), &BettiPoint::from_u64s(&[1, 2, 5, 6, 2]), 4, opts).unwrap();
        assert!(v.eliminations().any(|(_, m)| m.kind() == "LIE_CONSTRAINT"));
        assert_eq!(v.status, Status::NotRealizable);
    }

    #[test]
    fn negative_quotient_flag() {
        // p = (1-t)^3 and h = (2) leaves the quotient 1 - t
        let d = seq(&[0, 1, 2, 3]);
        let b = BettiPoint::from_u64s(&[1, 3, 3, 1]);
        let h = [dv(&[2])];
        let plain = lie_verdict_for(&d, &b, &h, LieOptions::default()).unwrap();
        assert_eq!(plain.status, Status::Undecided);
        let opts = LieOptions { prune_lie_constraints: false, nonnegative_quotient: true };
        let strict = lie_verdict_for(&d, &b, &h, opts).unwrap();
        assert_eq!(strict.status, Status::NotRealizable);
        assert_eq!(strict.records[0].mechanism().unwrap().kind(), "NEGATIVE_QUOTIENT");
    }

    #[test]
    fn sequence_enumeration() {
        let all: Vec<Vec<i64>> = CanonicalSequences::new(2, 4).map(|d| d.entries().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 1, 4],
                vec![0, 2, 3],
                vec![0, 2, 4],
                vec![0, 3, 4]
            ]
        );
        let pinned: Vec<Vec<i64>> =
            CanonicalSequences::with_first_step(2, 4, 2).map(|d| d.entries().to_vec()).collect();
        assert_eq!(pinned, vec![vec![0, 2, 3], vec![0, 2, 4]]);
        assert_eq!(CanonicalSequences::with_first_step(2, 4, 4).count(), 0);
        assert_eq!(CanonicalSequences::new(3, 21).count(), 1330);
    }

    #[test]
    fn search_param_validation() {
        assert!(SearchParams::standard(1, 10).validate().is_err());
        assert!(SearchParams::standard(7, 10).validate().is_err());
        assert!(SearchParams::standard(3, 65).validate().is_err());
        assert!(SearchParams::standard(3, 2).validate().is_err());
        let mut p = SearchParams::standard(3, 10);
        p.targets.clear();
        assert!(p.validate().is_err());
    }
}
