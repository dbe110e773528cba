//! Reference computations written without the library's algorithms, and the
//! property checks built on them. Shared by the core suites and the CLI
//! acceptance suite.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use purecone_core::exactcore::{GF2Poly, IntPoly, Monomial};
use purecone_core::groupring::{
    ann_syzygy_correspondence, build_f, gr_mul, top_identity_check, GroupRingElement, Subset,
};
use purecone_core::hilbert::{denominator_poly, divides, pbw_series_coeffs, DimensionVector};
use purecone_core::pureray::{
    hk_residual, primitive_point_products, primitive_point_solve, BettiPoint, DegreeSequence,
};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- pure rays

/// `Σ_i (-1)^i β_i d_i^m` by direct powering, for `m = 0 .. len-2`.
pub fn residuals_direct(d: &[i64], beta: &[BigInt]) -> Vec<BigInt> {
    (0..d.len() - 1)
        .map(|m| {
            d.iter().zip(beta).enumerate().fold(BigInt::zero(), |acc, (i, (&di, b))| {
                let term = b * BigInt::from(di).pow(m as u32);
                if i % 2 == 0 { acc + term } else { acc - term }
            })
        })
        .collect()
}

pub fn gcd_euclid(values: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        let (mut a, mut b) = (g, v.abs());
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        g = a;
    }
    g
}

/// Primitive point, both routes agree, residuals vanish, gcd 1, and the
/// point does not move under translation of the degrees.
pub fn check_pureray(d: &[i64]) -> Check {
    let seq = DegreeSequence::new(d.to_vec()).map_err(|e| format!("{d:?}: {e}"))?;
    let p = primitive_point_products(&seq);
    let s = primitive_point_solve(&seq).map_err(|e| format!("{d:?}: {e}"))?;
    ensure!(p == s, "{d:?}: products {p} vs solve {s}");
    ensure!(p.entries().iter().all(|b| b.is_positive()), "{d:?}: non-positive entry in {p}");
    let direct = residuals_direct(d, p.entries());
    ensure!(direct.iter().all(Zero::is_zero), "{d:?}: residuals {direct:?}");
    let lib = hk_residual(&seq, &p).map_err(|e| e.to_string())?;
    ensure!(lib == direct, "{d:?}: library residuals {lib:?} vs {direct:?}");
    ensure!(gcd_euclid(p.entries()) == BigInt::from(1), "{d:?}: {p} is not primitive");
    for c in [-13, -1, 1, 7, 100] {
        let shifted = seq.shifted(c);
        ensure!(
            primitive_point_products(&shifted) == p,
            "{d:?}: point changes under shift by {c}"
        );
    }
    Ok(())
}

/// Sorted distinct degrees `0 = d_0 < … ` from arbitrary gaps.
pub fn sequence_from_gaps(gaps: &[i64]) -> Vec<i64> {
    let mut d = vec![0];
    for g in gaps {
        let last = *d.last().unwrap();
        d.push(last + g);
    }
    d
}

// ----------------------------------------------------------------- Hilbert

/// Number of monomials of each weighted degree `0..=n` in `h_i` variables of
/// degree `i`, by explicit enumeration of exponent vectors.
pub fn pbw_bruteforce(h: &[u32], n: usize) -> Vec<u64> {
    let weights: Vec<usize> = h
        .iter()
        .enumerate()
        .flat_map(|(i, &hi)| std::iter::repeat(i + 1).take(hi as usize))
        .collect();
    let mut counts = vec![0u64; n + 1];
    fn rec(weights: &[usize], deg: usize, n: usize, counts: &mut [u64]) {
        match weights.split_first() {
            None => counts[deg] += 1,
            Some((&w, rest)) => {
                let mut d = deg;
                while d <= n {
                    rec(rest, d, n, counts);
                    d += w;
                }
            }
        }
    }
    rec(&weights, 0, n, &mut counts);
    counts
}

/// `Π_i (1 - t^i)^(h_i)` by repeated multiplication of small integer vectors.
pub fn denominator_direct(h: &[u32]) -> Vec<i128> {
    let mut out = vec![1i128];
    for (i, &hi) in h.iter().enumerate() {
        for _ in 0..hi {
            let mut next = vec![0i128; out.len() + i + 1];
            for (k, &c) in out.iter().enumerate() {
                next[k] += c;
                next[k + i + 1] -= c;
            }
            out = next;
        }
    }
    out
}

fn small(c: &BigInt) -> i128 {
    i128::try_from(c).expect("test polynomials have small coefficients")
}

/// Denominator times series is `1 + O(t^(n+1))`, and the series matches
/// monomial enumeration.
pub fn check_series(h: &[u32], n: usize) -> Check {
    let dv = DimensionVector::new(h.to_vec()).map_err(|e| e.to_string())?;
    let series: Vec<i128> = pbw_series_coeffs(&dv, n).iter().map(small).collect();
    let brute = pbw_bruteforce(h, n);
    ensure!(
        series.iter().zip(&brute).all(|(a, &b)| *a == b as i128) && series.len() == brute.len(),
        "h = {h:?}, N = {n}: series {series:?} vs enumeration {brute:?}"
    );
    let den = denominator_direct(h);
    let lib_den: Vec<i128> = denominator_poly(&dv).coeffs().iter().map(small).collect();
    ensure!(lib_den == den, "h = {h:?}: denominator {lib_den:?} vs {den:?}");
    for k in 0..=n {
        let c: i128 = (0..=k.min(den.len() - 1)).map(|j| den[j] * series[k - j]).sum();
        ensure!(c == i128::from(k == 0), "h = {h:?}: coefficient {k} of den*series is {c}");
    }
    Ok(())
}

/// Remainder of `p` modulo a polynomial with leading coefficient ±1.
pub fn remainder_direct(p: &[i128], den: &[i128]) -> Vec<i128> {
    let mut r = p.to_vec();
    let lead = *den.last().unwrap();
    assert!(lead == 1 || lead == -1);
    while r.len() >= den.len() {
        let c = *r.last().unwrap() * lead;
        let shift = r.len() - den.len();
        for (k, &dk) in den.iter().enumerate() {
            r[shift + k] -= c * dk;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn to_intpoly(c: &[i128]) -> IntPoly {
    IntPoly::from_terms(c.iter().enumerate().map(|(i, &x)| (i, BigInt::from(x))))
}

fn from_intpoly(p: &IntPoly) -> Vec<i128> {
    p.coeffs().iter().map(small).collect()
}

/// `divides` agrees with direct long division; a quotient times the
/// denominator gives back `p`.
pub fn check_divides(p: &[i64], h: &[u32], premultiply: bool) -> Check {
    let dv = DimensionVector::new(h.to_vec()).map_err(|e| e.to_string())?;
    let den = denominator_direct(h);
    let mut pc: Vec<i128> = p.iter().map(|&x| x as i128).collect();
    if premultiply {
        let mut prod = vec![0i128; pc.len() + den.len() - 1];
        for (i, a) in pc.iter().enumerate() {
            for (j, b) in den.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        pc = prod;
    }
    let poly = to_intpoly(&pc);
    let expected_rem = remainder_direct(&from_intpoly(&poly), &den);
    match divides(&poly, &dv) {
        purecone_core::hilbert::DivisionVerdict::Divisible { quotient } => {
            ensure!(expected_rem.is_empty(), "h = {h:?}: reported divisible, remainder {expected_rem:?}");
            ensure!(&quotient * &denominator_poly(&dv) == poly, "h = {h:?}: quotient does not round-trip");
        }
        purecone_core::hilbert::DivisionVerdict::NotDivisible { remainder, .. } => {
            ensure!(!expected_rem.is_empty(), "h = {h:?}: reported not divisible for a multiple");
            ensure!(from_intpoly(&remainder) == expected_rem, "h = {h:?}: remainder mismatch");
        }
    }
    if premultiply {
        ensure!(divides(&poly, &dv).is_divisible(), "h = {h:?}: multiple of the denominator rejected");
    }
    Ok(())
}

/// All `h` with `Σ h_i ≤ total` and no trailing zero, as plain vectors.
pub fn dim_vectors_up_to(total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<u32>, left: u32, maxlen: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.last().is_some_and(|&x| x > 0) {
            out.push(prefix.clone());
        }
        if prefix.len() == maxlen {
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            rec(prefix, left - x, maxlen, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), total, total as usize + 1, &mut out);
    out
}

// -------------------------------------------------------------- group ring

/// Polynomial over GF(2) in two variables as a set of exponent pairs.
pub type Poly2 = BTreeSet<(u32, u32)>;

pub const DEG2_MONOMIALS: [(u32, u32); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

pub fn poly2_from_mask(mask: u8) -> Poly2 {
    DEG2_MONOMIALS
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &m)| m)
        .collect()
}

pub fn poly2_mul(a: &Poly2, b: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for &(i, j) in a {
        for &(k, l) in b {
            let m = (i + k, j + l);
            if !out.remove(&m) {
                out.insert(m);
            }
        }
    }
    out
}

fn poly2_xor(a: &mut Poly2, b: &Poly2) {
    for m in b {
        if !a.remove(m) {
            a.insert(*m);
        }
    }
}

pub fn to_gf2(p: &Poly2) -> GF2Poly {
    GF2Poly::from_monomials(2, p.iter().map(|&(i, j)| Monomial::from_exponents(vec![i, j])))
        .expect("two variables")
}

pub fn from_gf2(p: &GF2Poly) -> Poly2 {
    p.terms().map(|m| (m.exponents()[0], m.exponents()[1])).collect()
}

/// Rank over GF(2) of sparse vectors with ordered coordinates.
pub fn rank_sparse<K: Ord + Clone>(vectors: impl IntoIterator<Item = BTreeSet<K>>) -> usize {
    let mut basis: BTreeMap<K, BTreeSet<K>> = BTreeMap::new();
    for mut v in vectors {
        while let Some(p) = v.iter().next_back().cloned() {
            match basis.get(&p) {
                Some(b) => {
                    for k in b {
                        if !v.remove(k) {
                            v.insert(k.clone());
                        }
                    }
                }
                None => {
                    basis.insert(p, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn monomials2(bound: u32) -> Vec<(u32, u32)> {
    (0..=bound).flat_map(|t| (0..=t).map(move |i| (i, t - i))).collect()
}

/// `dim {ξ : deg ξ_i ≤ bound, Σ a_i ξ_i = 0}` as unknowns minus rank.
pub fn syzygy_dim_direct(a: &[Poly2], bound: u32) -> usize {
    let monos = monomials2(bound);
    let columns = a.iter().flat_map(|ai| {
        monos.iter().map(move |&m| poly2_mul(ai, &BTreeSet::from([m])))
    });
    a.len() * monos.len() - rank_sparse(columns)
}

/// Element of the ε-basis group ring: subset mask to coefficient.
pub type Elem = BTreeMap<u32, Poly2>;

/// Multiplication from the defining rule `ε_i^2 = 0`.
pub fn elem_mul(u: &Elem, v: &Elem) -> Elem {
    let mut out = Elem::new();
    for (&s, a) in u {
        for (&t, b) in v {
            if s & t == 0 {
                poly2_xor(out.entry(s | t).or_default(), &poly2_mul(a, b));
            }
        }
    }
    out.retain(|_, c| !c.is_empty());
    out
}

/// `dim` of the truncated degree `m-1` part of `Ann(f)`, computed by
/// multiplying every basis element of that part with `f` and taking the
/// kernel dimension of the resulting map.
pub fn ann_dim_direct(a: &[Poly2], bound: u32) -> usize {
    let m = a.len() as u32;
    let f: Elem = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(i, c)| (1u32 << i, c.clone()))
        .collect();
    let subsets: Vec<u32> = (0u32..1 << m).filter(|s| s.count_ones() == m - 1).collect();
    let monos = monomials2(bound);
    let mut images = Vec::new();
    for &s in &subsets {
        for &mono in &monos {
            let basis: Elem = BTreeMap::from([(s, BTreeSet::from([mono]))]);
            let prod = elem_mul(&basis, &f);
            images.push(
                prod.into_iter()
                    .flat_map(|(mask, c)| c.into_iter().map(move |(i, j)| (mask, i, j)))
                    .collect::<BTreeSet<_>>(),
            );
        }
    }
    subsets.len() * monos.len() - rank_sparse(images)
}

fn elem_to_lib(m: usize, e: &Elem) -> GroupRingElement {
    let mut out = GroupRingElement::zero(m, 2);
    for (&s, c) in e {
        out.add_term(Subset::from_mask(s), &to_gf2(c)).expect("same context");
    }
    out
}

fn elem_from_lib(e: &GroupRingElement) -> Elem {
    e.terms().map(|(s, c)| (s.mask(), from_gf2(c))).filter(|(_, c)| !c.is_empty()).collect()
}

/// Random-looking element from coefficient masks, cycling through them.
pub fn elem_from_masks(m: usize, masks: &[u8], only_size: Option<u32>) -> Elem {
    (0u32..1 << m)
        .filter(|s| only_size.is_none_or(|r| s.count_ones() == r))
        .enumerate()
        .map(|(k, s)| (s, poly2_from_mask(masks[k % masks.len()])))
        .filter(|(_, c)| !c.is_empty())
        .collect()
}

/// ε-square vanishing, grading, multiplication against the reference rule,
/// the top identity and the syzygy/annihilator dimension match.
pub fn check_groupring(gen_masks: &[u8], aux_masks: &[u8], max_bound: u32) -> Check {
    let m = gen_masks.len();
    let a2: Vec<Poly2> = gen_masks.iter().map(|&x| poly2_from_mask(x)).collect();
    let a: Vec<GF2Poly> = a2.iter().map(to_gf2).collect();
    for i in 0..m {
        let e = GroupRingElement::epsilon(m, 2, i);
        ensure!(gr_mul(&e, &e).map_err(|e| e.to_string())?.is_zero(), "epsilon_{i}^2 != 0");
    }
    for r in 0..=m as u32 {
        for s in 0..=m as u32 - r {
            let u = elem_from_masks(m, aux_masks, Some(r));
            let v = elem_from_masks(m, &aux_masks[1..], Some(s));
            let lib = gr_mul(&elem_to_lib(m, &u), &elem_to_lib(m, &v)).map_err(|e| e.to_string())?;
            ensure!(
                lib.homogeneous_degree().is_none_or(|d| d == (r + s) as usize),
                "B_{r} * B_{s} left degree {}",
                r + s
            );
            ensure!(elem_from_lib(&lib) == elem_mul(&u, &v), "product mismatch in B_{r} * B_{s}");
        }
    }
    let whole_u = elem_from_masks(m, aux_masks, None);
    let f = build_f(&a).map_err(|e| e.to_string())?;
    ensure!(
        elem_from_lib(&gr_mul(&elem_to_lib(m, &whole_u), &f).map_err(|e| e.to_string())?)
            == elem_mul(&whole_u, &elem_from_lib(&f)),
        "mixed-degree product mismatch"
    );
    let xi: Vec<GF2Poly> = (0..m).map(|i| to_gf2(&poly2_from_mask(aux_masks[i % aux_masks.len()]))).collect();
    let top = top_identity_check(&a, &xi).map_err(|e| e.to_string())?;
    ensure!(top.equal, "top identity fails for a = {gen_masks:?}, xi masks {aux_masks:?}");
    for bound in 0..=max_bound {
        let syz = syzygy_dim_direct(&a2, bound);
        let ann = ann_dim_direct(&a2, bound);
        let c = ann_syzygy_correspondence(&a, bound).map_err(|e| format!("a = {gen_masks:?}: {e}"))?;
        ensure!(
            c.syzygy_dim == syz && c.ann_dim == ann && syz == ann && c.holds(),
            "a = {gen_masks:?}, bound {bound}: library ({}, {}) vs direct ({syz}, {ann})",
            c.syzygy_dim,
            c.ann_dim
        );
    }
    Ok(())
}

pub fn point(entries: &[u64]) -> BettiPoint {
    BettiPoint::from_u64s(entries)
}
