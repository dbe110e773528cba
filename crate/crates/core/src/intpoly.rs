//! Valuations on `F2(t)` and certificates for integer-valued polynomials over
//! the local domain `D = F2 + M`.
//!
//! Setting: `T` is `F2[t]` localized at the complement of `(t) ∪ (t+1)`,
//! with maximal ideals `N0 = tT` and `N1 = (t+1)T`. With `m = t(t+1)`,
//! `M = mT = N0·N1` and `D = F2 + M`. Membership is decided from the two
//! valuations `v0` (order at `t`) and `v1` (order at `t+1`):
//!
//! - `f ∈ T` iff `v0(f) ≥ 0` and `v1(f) ≥ 0`;
//! - `f ∈ M^k` iff both valuations are at least `k`;
//! - `f ∈ D` iff `f ∈ T` and `f(0) = f(1)` in `F2`.
//!
//! The polynomials `q(X) = (X^2 + X)/m` and `g = q^2 + q` and the elements
//! `u_n = t(t+1)^(n+1)` drive the certificates below.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use crate::exactcore::BinPoly;
use crate::{Error, Result};

/// Reduced fraction of `F2[t]` polynomials with nonzero denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc2 {
    num: BinPoly,
    den: BinPoly,
}

impl RatFunc2 {
    pub fn new(num: BinPoly, den: BinPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g).expect("gcd is nonzero");
        let (den, _) = den.divrem(&g).expect("gcd is nonzero");
        Ok(RatFunc2 { num, den })
    }

    pub fn from_poly(p: BinPoly) -> Self {
        RatFunc2 { num: p, den: BinPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(BinPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BinPoly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(BinPoly::t())
    }

    /// `m = t(t+1)`
    pub fn m() -> Self {
        Self::from_poly(&BinPoly::t() * &BinPoly::t_plus_one())
    }

    pub fn num(&self) -> &BinPoly {
        &self.num
    }

    pub fn den(&self) -> &BinPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc2) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc2 { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn valuation(&self, place: Place) -> Valuation {
        valuation(self, place)
    }

    pub fn to_text(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc2({self})")
    }
}

impl<'a> Add<&'a RatFunc2> for &'a RatFunc2 {
    type Output = RatFunc2;
    fn add(self, rhs: &RatFunc2) -> RatFunc2 {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc2::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl<'a> Mul<&'a RatFunc2> for &'a RatFunc2 {
    type Output = RatFunc2;
    fn mul(self, rhs: &RatFunc2) -> RatFunc2 {
        RatFunc2::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

/// The two places of `F2(t)` that matter here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    /// `t = 0`, valuation `v0`.
    Zero,
    /// `t = 1`, valuation `v1`.
    One,
}

impl Place {
    fn uniformizer(self) -> BinPoly {
        match self {
            Place::Zero => BinPoly::t(),
            Place::One => BinPoly::t_plus_one(),
        }
    }
}

/// Order of vanishing; `Infinity` for the zero function. `Finite` values
/// order below `Infinity`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn at_least(self, k: i64) -> bool {
        self >= Valuation::Finite(k)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Multiplicity of the place's irreducible in the numerator minus that in
/// the denominator.
pub fn valuation(f: &RatFunc2, place: Place) -> Valuation {
    if f.is_zero() {
        return Valuation::Infinity;
    }
    let p = place.uniformizer();
    let (a, _) = f.num.split_power(&p);
    let (b, _) = f.den.split_power(&p);
    Valuation::Finite(i64::from(a) - i64::from(b))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct MembershipFlags {
    pub in_t: bool,
    pub in_m: bool,
    pub in_m2: bool,
    pub in_d: bool,
}

pub fn membership(f: &RatFunc2) -> MembershipFlags {
    let v0 = valuation(f, Place::Zero);
    let v1 = valuation(f, Place::One);
    let in_t = v0.at_least(0) && v1.at_least(0);
    // inside T the reduced denominator is a unit at both places, so the
    // residues are the numerator's values
    let in_d = in_t && f.num.eval_zero() == f.num.eval_one();
    MembershipFlags {
        in_t,
        in_m: v0.at_least(1) && v1.at_least(1),
        in_m2: v0.at_least(2) && v1.at_least(2),
        in_d,
    }
}

/// Polynomial in `X` with coefficients in `K = F2(t)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KPoly {
    coeffs: Vec<RatFunc2>,
}

impl KPoly {
    pub fn new(coeffs: Vec<RatFunc2>) -> Self {
        let mut p = KPoly { coeffs };
        while p.coeffs.last().is_some_and(RatFunc2::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RatFunc2) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(RatFunc2::one())
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::new(vec![RatFunc2::zero(), RatFunc2::one()])
    }

    /// `q(X) = (X^2 + X)/m`
    pub fn q() -> Self {
        let inv_m = RatFunc2::m().inv().expect("m is nonzero");
        Self::new(vec![RatFunc2::zero(), inv_m.clone(), inv_m])
    }

    /// `g(X) = q(X)^2 + q(X)`
    pub fn g() -> Self {
        let q = Self::q();
        &(&q * &q) + &q
    }

    pub fn coeffs(&self) -> &[RatFunc2] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> RatFunc2 {
        self.coeffs.get(r).cloned().unwrap_or_else(RatFunc2::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &RatFunc2) -> RatFunc2 {
        self.coeffs
            .iter()
            .rev()
            .fold(RatFunc2::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if c.den().is_one() && c.num().support().len() == 1 {
                format!("{c}")
            } else {
                format!("[{c}]")
            };
            match (r, c == &RatFunc2::one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{coeff}*X")?,
                (_, true) => write!(f, "X^{r}")?,
                (_, false) => write!(f, "{coeff}*X^{r}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KPoly({self})")
    }
}

impl<'a> Add<&'a KPoly> for &'a KPoly {
    type Output = KPoly;
    fn add(self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        KPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a KPoly> for &'a KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![RatFunc2::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPoly::new(out)
    }
}

/// `u_n = t(t+1)^(n+1) = m(t+1)^n`
pub fn u_n(n: u32) -> RatFunc2 {
    RatFunc2::from_poly(&BinPoly::t() * &BinPoly::t_plus_one().pow(n + 1))
}

pub fn eval_kpoly(p: &KPoly, x: &RatFunc2) -> RatFunc2 {
    p.eval(x)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step2Certificate {
    pub n: u32,
    pub u: RatFunc2,
    pub w: RatFunc2,
    pub q_value: RatFunc2,
    pub g_value: RatFunc2,
    pub q_v0: Valuation,
    pub q_membership: MembershipFlags,
    pub g_membership: MembershipFlags,
    /// `q(u_n^2) = m·w^2 + m^3·w^4` with `w = (t+1)^n`.
    pub decomposition_holds: bool,
}

/// Evaluates `q` and `g` at `u_n^2` and checks `v0(q(u_n^2)) = 1` and
/// `g(u_n^2) ∈ M \ M^2`.
pub fn certificate_step2(n: u32) -> Result<Step2Certificate> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let u = u_n(n);
    let u2 = u.pow(2);
    let q_value = KPoly::q().eval(&u2);
    let g_value = KPoly::g().eval(&u2);
    let m = RatFunc2::m();
    let w = RatFunc2::from_poly(BinPoly::t_plus_one().pow(n));
    let expected = &(&m * &w.pow(2)) + &(&m.pow(3) * &w.pow(4));
    let cert = Step2Certificate {
        n,
        q_v0: valuation(&q_value, Place::Zero),
        q_membership: membership(&q_value),
        g_membership: membership(&g_value),
        decomposition_holds: q_value == expected,
        u,
        w,
        q_value,
        g_value,
    };
    let ok = cert.q_v0 == Valuation::Finite(1)
        && cert.q_membership.in_m
        && !cert.q_membership.in_m2
        && cert.g_membership.in_m
        && !cert.g_membership.in_m2
        && cert.decomposition_holds;
    if !ok {
        return Err(Error::VerificationFailed(format!("step-2 certificate failed at n = {n}: {cert:?}")));
    }
    Ok(cert)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step3Record {
    pub difference: RatFunc2,
    pub v0: Valuation,
    pub v1: Valuation,
    /// `v1 ≥ 1`: guaranteed by the choice of `n` for any `h ∈ K[X]`.
    pub in_n1: bool,
    /// `v0 ≥ 1` and `v1 ≥ 1`: guaranteed only for `h ∈ Int(D)`.
    pub in_m: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step3Certificate {
    pub n: u32,
    pub records: Vec<Step3Record>,
}

impl Step3Certificate {
    pub fn all_in_n1(&self) -> bool {
        self.records.iter().all(|r| r.in_n1)
    }

    pub fn all_in_m(&self) -> bool {
        self.records.iter().all(|r| r.in_m)
    }
}

/// `max(1, 1 - min v1(c_{h,r}))` over all `h` and all nonzero coefficients
/// of positive degree.
pub fn step3_bound(hs: &[KPoly]) -> u32 {
    let min_v1 = hs
        .iter()
        .flat_map(|h| h.coeffs().iter().skip(1))
        .filter_map(|c| valuation(c, Place::One).finite())
        .min();
    match min_v1 {
        Some(v) => (1 - v).max(1) as u32,
        None => 1,
    }
}

/// Checks `h(u_n) - h(0)` for every `h` at a given `n`.
pub fn certificate_step3_at(hs: &[KPoly], n: u32) -> Step3Certificate {
    let u = u_n(n);
    let records = hs
        .iter()
        .map(|h| {
            let difference = &h.eval(&u) + &h.coeff(0); // minus is plus in characteristic 2
            let v0 = valuation(&difference, Place::Zero);
            let v1 = valuation(&difference, Place::One);
            Step3Record {
                in_n1: v1.at_least(1),
                in_m: v0.at_least(1) && v1.at_least(1),
                difference,
                v0,
                v1,
            }
        })
        .collect();
    Step3Certificate { n, records }
}

/// Picks `n` from the coefficient valuations and checks the differences.
pub fn certificate_step3(hs: &[KPoly]) -> Step3Certificate {
    certificate_step3_at(hs, step3_bound(hs))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RectangleDefect {
    pub n: u32,
    pub u: RatFunc2,
    /// `Σ_i (f_i(u) - f_i(0))(h_i(u) - h_i(0))`
    pub value: RatFunc2,
    pub value_in_m2: bool,
    /// `g(u^2)`, the value `P(u,u) - P(u,0) - P(0,u) + P(0,0)` would take if
    /// the decomposition represented `g(XY)`.
    pub comparison: RatFunc2,
    pub comparison_in_m2: bool,
}

/// Second mixed difference of `P(X,Y) = Σ f_i(X) h_i(Y)` at `u = u_n`.
pub fn rectangle_defect(decomp: &[(KPoly, KPoly)], n: u32) -> Result<RectangleDefect> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let u = u_n(n);
    let value = decomp.iter().fold(RatFunc2::zero(), |acc, (f, h)| {
        let df = &f.eval(&u) + &f.coeff(0);
        let dh = &h.eval(&u) + &h.coeff(0);
        &acc + &(&df * &dh)
    });
    let comparison = KPoly::g().eval(&u.pow(2));
    Ok(RectangleDefect {
        n,
        value_in_m2: membership(&value).in_m2,
        comparison_in_m2: membership(&comparison).in_m2,
        u,
        value,
        comparison,
    })
}

/// Polynomials of degree ≤ 4 with value 1 at both `t = 0` and `t = 1`,
/// used as denominators for the sampled elements of `D`.
fn unit_denominators() -> Vec<BinPoly> {
    (1u64..32)
        .map(BinPoly::from_u64)
        .filter(|p| p.eval_zero() && p.eval_one())
        .collect()
}

/// Deterministic sample `c + m·a/b` of elements of `D`, where `c ∈ {0, 1}`,
/// `deg a ≤ 4` and `b` runs over small polynomials that are units in `T`.
pub fn sample_d_elements() -> Vec<RatFunc2> {
    let m = RatFunc2::m();
    let dens = unit_denominators();
    let mut out = BTreeSet::new();
    for c in [RatFunc2::zero(), RatFunc2::one()] {
        for a in 0u64..32 {
            for b in &dens {
                let r = RatFunc2::new(BinPoly::from_u64(a), b.clone()).expect("nonzero denominator");
                out.insert(&c + &(&m * &r));
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SampledIntCheck {
    pub samples: usize,
    /// Samples recognized as members of `D`.
    pub in_d: usize,
    /// Samples with `g(x) ∈ M`.
    pub g_in_m: usize,
    /// Samples with `x^2 + x ∈ mT`.
    pub square_plus_x_in_m: usize,
}

impl SampledIntCheck {
    pub fn passed(&self) -> bool {
        self.in_d == self.samples
            && self.g_in_m == self.samples
            && self.square_plus_x_in_m == self.samples
    }
}

/// Sampled form of `g ∈ Int(D)` with `g(D) ⊆ M`.
pub fn sampled_int_check(samples: &[RatFunc2]) -> SampledIntCheck {
    let g = KPoly::g();
    let sq = &(&KPoly::x() * &KPoly::x()) + &KPoly::x();
    let count = |pred: &dyn Fn(&RatFunc2) -> bool| samples.iter().filter(|x| pred(x)).count();
    SampledIntCheck {
        samples: samples.len(),
        in_d: count(&|x| membership(x).in_d),
        g_in_m: count(&|x| membership(&g.eval(x)).in_m),
        square_plus_x_in_m: count(&|x| membership(&sq.eval(x)).in_m),
    }
}
