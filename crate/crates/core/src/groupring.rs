//! The group ring `B = A[(Z/2Z)^m]` over a GF(2) polynomial base ring `A`.
//!
//! With generators `g_i` put `ε_i = g_i + 1`. In characteristic 2,
//! `ε_i^2 = g_i^2 + 1 = 0`, so the square-free monomials `ε_T` for
//! `T ⊆ {1, …, m}` form an `A`-basis and `ε_S·ε_T = ε_{S∪T}` when `S ∩ T = ∅`
//! and `0` otherwise. Grading by `|T|` makes `B = ⊕_r B_r`.
//!
//! For `f = Σ a_i ε_i`, `v_i = Π_{j≠i} ε_j` and `w = ε_1⋯ε_m`:
//! `f·Σ ξ_i v_i = (Σ a_i ξ_i)·w`, so the degree `m-1` part of `Ann_B(f)` is
//! the syzygy module of `(a_1, …, a_m)`. Membership is checked here on the
//! finite-dimensional slices where coefficient degrees are bounded.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::exactcore::{gf2_kernel, monomials_up_to, BitMatrix, BitVector, GF2Poly, Monomial};
use crate::{Error, Result};

/// Largest supported number of group generators.
pub const MAX_GENERATORS: usize = 16;

/// A subset of `{1, …, m}` stored as a bit mask (bit `i` is element `i+1`).
///
/// Ordered by size, then lexicographically by sorted elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    /// From 1-based elements.
    pub fn from_elements(elems: &[usize]) -> Self {
        Subset(elems.iter().fold(0, |m, &e| m | 1 << (e - 1)))
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn full(m: usize) -> Self {
        Subset(if m == 32 { u32::MAX } else { (1u32 << m) - 1 })
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    /// 1-based elements, ascending.
    pub fn elements(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// All subsets of `{1, …, m}` of size `r`, in subset order.
    pub fn of_size(m: usize, r: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..1u32 << m)
            .filter(|s| s.count_ones() as usize == r)
            .map(Subset)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the smallest differing element belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, e) in self.elements().into_iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "e{e}")?;
        }
        Ok(())
    }
}

/// Element of `A[(Z/2Z)^m]` in the ε-basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupRingElement {
    m: usize,
    nvars: usize,
    coeffs: BTreeMap<Subset, GF2Poly>,
}

impl GroupRingElement {
    pub fn zero(m: usize, nvars: usize) -> Self {
        GroupRingElement { m, nvars, coeffs: BTreeMap::new() }
    }

    /// `c·ε_T`
    pub fn term(m: usize, subset: Subset, coeff: GF2Poly) -> Result<Self> {
        let mut out = Self::zero(m, coeff.nvars());
        out.add_term(subset, &coeff)?;
        Ok(out)
    }

    /// `ε_i` for a 0-based generator index.
    pub fn epsilon(m: usize, nvars: usize, i: usize) -> Self {
        Self::term(m, Subset::singleton(i), GF2Poly::one(nvars)).expect("index within m")
    }

    /// `v_i = Π_{j≠i} ε_j` (0-based `i`).
    pub fn v(m: usize, nvars: usize, i: usize) -> Self {
        Self::term(m, Subset::full(m).without(i), GF2Poly::one(nvars)).expect("index within m")
    }

    /// `w = ε_1 ⋯ ε_m`
    pub fn w(m: usize, nvars: usize) -> Self {
        Self::term(m, Subset::full(m), GF2Poly::one(nvars)).expect("full subset")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, subset: Subset) -> GF2Poly {
        self.coeffs.get(&subset).cloned().unwrap_or_else(|| GF2Poly::zero(self.nvars))
    }

    /// Nonzero terms in subset order.
    pub fn terms(&self) -> impl Iterator<Item = (Subset, &GF2Poly)> + '_ {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    pub fn add_term(&mut self, subset: Subset, coeff: &GF2Poly) -> Result<()> {
        if coeff.nvars() != self.nvars {
            return Err(Error::ContextMismatch);
        }
        if subset.mask() >> self.m != 0 {
            return Err(Error::InvalidParameter(format!("{subset} is not a subset of 1..={}", self.m)));
        }
        let sum = match self.coeffs.remove(&subset) {
            Some(old) => old.checked_add(coeff)?,
            None => coeff.clone(),
        };
        if !sum.is_zero() {
            self.coeffs.insert(subset, sum);
        }
        Ok(())
    }

    fn check_context(&self, other: &GroupRingElement) -> Result<()> {
        if self.m != other.m || self.nvars != other.nvars {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GF2Poly) -> Result<GroupRingElement> {
        let mut out = Self::zero(self.m, self.nvars);
        for (s, a) in self.terms() {
            out.add_term(s, &a.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// Restriction to subsets of size `r`.
    pub fn component(&self, r: usize) -> GradedComponent {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(s, _)| s.len() == r)
            .map(|(s, c)| (*s, c.clone()))
            .collect();
        GradedComponent { r, element: GroupRingElement { m: self.m, nvars: self.nvars, coeffs } }
    }

    /// `Some(r)` when every term has grading degree `r`; zero is homogeneous
    /// of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.coeffs.keys().map(|s| s.len());
        let first = it.next()?;
        it.all(|r| r == first).then_some(first)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, c)| {
                let coeff = c.format_with(names);
                if s.is_empty() {
                    format!("({coeff})")
                } else if c.is_one() {
                    format!("{s}")
                } else {
                    format!("({coeff})*{s}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// The degree `r` part `B_r` of an element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedComponent {
    r: usize,
    element: GroupRingElement,
}

impl GradedComponent {
    pub fn new(r: usize, element: GroupRingElement) -> Result<Self> {
        if element.terms().any(|(s, _)| s.len() != r) {
            return Err(Error::InvalidParameter(format!("element is not homogeneous of degree {r}")));
        }
        Ok(GradedComponent { r, element })
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn element(&self) -> &GroupRingElement {
        &self.element
    }

    pub fn into_element(self) -> GroupRingElement {
        self.element
    }
}

/// Product in `B`: `ε_S·ε_T = ε_{S∪T}` for disjoint `S, T`, else `0`.
pub fn gr_mul(u: &GroupRingElement, v: &GroupRingElement) -> Result<GroupRingElement> {
    u.check_context(v)?;
    let mut out = GroupRingElement::zero(u.m, u.nvars);
    for (s, a) in u.terms() {
        for (t, b) in v.terms() {
            if s.is_disjoint(t) {
                out.add_term(s.union(t), &a.checked_mul(b)?)?;
            }
        }
    }
    Ok(out)
}

fn check_generators(a: &[GF2Poly]) -> Result<usize> {
    let first = a.first().ok_or_else(|| Error::InvalidParameter("need at least one generator".into()))?;
    if a.len() > MAX_GENERATORS {
        return Err(Error::InvalidParameter(format!("at most {MAX_GENERATORS} generators supported")));
    }
    if a.iter().any(|p| p.nvars() != first.nvars()) {
        return Err(Error::ContextMismatch);
    }
    Ok(first.nvars())
}

/// `f = Σ a_i ε_i ∈ B_1`, with `m = a.len()`.
pub fn build_f(a: &[GF2Poly]) -> Result<GroupRingElement> {
    let nvars = check_generators(a)?;
    let m = a.len();
    let mut f = GroupRingElement::zero(m, nvars);
    for (i, ai) in a.iter().enumerate() {
        f.add_term(Subset::singleton(i), ai)?;
    }
    Ok(f)
}

/// Both sides of `f·Σ ξ_i v_i = (Σ a_i ξ_i)·w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TopIdentity {
    pub lhs: GroupRingElement,
    pub rhs: GroupRingElement,
    pub equal: bool,
}

/// `Σ ξ_i v_i`
pub fn syzygy_image(xi: &[GF2Poly]) -> Result<GroupRingElement> {
    let nvars = check_generators(xi)?;
    let m = xi.len();
    let mut out = GroupRingElement::zero(m, nvars);
    for (i, x) in xi.iter().enumerate() {
        out.add_term(Subset::full(m).without(i), x)?;
    }
    Ok(out)
}

pub fn top_identity_check(a: &[GF2Poly], xi: &[GF2Poly]) -> Result<TopIdentity> {
    if a.len() != xi.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: xi.len() });
    }
    let nvars = check_generators(a)?;
    if check_generators(xi)? != nvars {
        return Err(Error::ContextMismatch);
    }
    let m = a.len();
    let f = build_f(a)?;
    let lhs = gr_mul(&f, &syzygy_image(xi)?)?;
    let mut pairing = GF2Poly::zero(nvars);
    for (ai, x) in a.iter().zip(xi) {
        pairing = pairing.checked_add(&ai.checked_mul(x)?)?;
    }
    let rhs = GroupRingElement::w(m, nvars).scale(&pairing)?;
    let equal = lhs == rhs;
    Ok(TopIdentity { lhs, rhs, equal })
}

/// Assigns consecutive row indices to keys as they are first seen.
struct RowIndex<K: Ord> {
    rows: BTreeMap<K, usize>,
}

impl<K: Ord> RowIndex<K> {
    fn new() -> Self {
        RowIndex { rows: BTreeMap::new() }
    }

    fn get(&mut self, key: K) -> usize {
        let next = self.rows.len();
        *self.rows.entry(key).or_insert(next)
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

fn matrix_from_columns(nrows: usize, columns: &[Vec<usize>]) -> BitMatrix {
    let mut m = BitMatrix::zeros(nrows, columns.len());
    for (c, rows) in columns.iter().enumerate() {
        for &r in rows {
            let cur = m.get(r, c);
            m.set(r, c, !cur);
        }
    }
    m
}

/// GF(2)-basis of `{ξ ∈ A^m : deg ξ_i ≤ deg_bound, Σ a_i ξ_i = 0}`.
///
/// Coordinates are `(i, monomial)` with `i` major and monomials in grlex
/// order; the basis order is that of [`gf2_kernel`].
pub fn syzygy_basis(a: &[GF2Poly], deg_bound: u32) -> Result<Vec<Vec<GF2Poly>>> {
    let nvars = check_generators(a)?;
    let monos = monomials_up_to(nvars, deg_bound);
    let mut index = RowIndex::new();
    let mut columns = Vec::with_capacity(a.len() * monos.len());
    for ai in a {
        for mono in &monos {
            let image = ai.mul_monomial(mono);
            columns.push(image.terms().map(|t| index.get(t.clone())).collect());
        }
    }
    let matrix = matrix_from_columns(index.len(), &columns);
    let kernel = gf2_kernel(&matrix);
    kernel
        .iter()
        .map(|v| {
            (0..a.len())
                .map(|i| {
                    let chosen = monos
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| v.get(i * monos.len() + j))
                        .map(|(_, m)| m.clone());
                    GF2Poly::from_monomials(nvars, chosen)
                })
                .collect()
        })
        .collect()
}

/// Coordinates of `B_r` truncated at coefficient degree `deg_bound`:
/// `(T, monomial)` with `T` major in subset order.
fn component_coordinates(m: usize, nvars: usize, r: usize, deg_bound: u32) -> Vec<(Subset, Monomial)> {
    let monos = monomials_up_to(nvars, deg_bound);
    Subset::of_size(m, r)
        .into_iter()
        .flat_map(|s| monos.iter().map(move |mono| (s, mono.clone())))
        .collect()
}

fn element_from_coords(
    m: usize,
    nvars: usize,
    coords: &[(Subset, Monomial)],
    v: &BitVector,
) -> Result<GroupRingElement> {
    let mut out = GroupRingElement::zero(m, nvars);
    for j in v.ones() {
        let (s, mono) = &coords[j];
        out.add_term(*s, &GF2Poly::from_monomial(mono.clone()))?;
    }
    Ok(out)
}

fn coords_of(element: &GroupRingElement, coords: &[(Subset, Monomial)]) -> Option<BitVector> {
    let mut v = BitVector::zeros(coords.len());
    let mut hits = 0;
    for (j, (s, mono)) in coords.iter().enumerate() {
        if element.coeff(*s).contains(mono) {
            v.set(j, true);
            hits += 1;
        }
    }
    let total: usize = element.terms().map(|(_, c)| c.terms().count()).sum();
    (hits == total).then_some(v)
}

/// GF(2)-basis of `{v ∈ B_r : coefficient degrees ≤ deg_bound, v·f = 0}`.
pub fn ann_component_basis(a: &[GF2Poly], r: usize, deg_bound: u32) -> Result<Vec<GroupRingElement>> {
    let nvars = check_generators(a)?;
    let m = a.len();
    if r > m {
        return Err(Error::InvalidParameter(format!("grading degree {r} exceeds m = {m}")));
    }
    let f = build_f(a)?;
    let coords = component_coordinates(m, nvars, r, deg_bound);
    let mut index = RowIndex::new();
    let mut columns = Vec::with_capacity(coords.len());
    for (s, mono) in &coords {
        let basis = GroupRingElement::term(m, *s, GF2Poly::from_monomial(mono.clone()))?;
        let image = gr_mul(&basis, &f)?;
        let mut rows = Vec::new();
        for (u, c) in image.terms() {
            for t in c.terms() {
                rows.push(index.get((u, t.clone())));
            }
        }
        columns.push(rows);
    }
    let matrix = matrix_from_columns(index.len(), &columns);
    gf2_kernel(&matrix)
        .iter()
        .map(|v| element_from_coords(m, nvars, &coords, v))
        .collect()
}

/// Outcome of matching truncated syzygies with the truncated degree `m-1`
/// annihilator component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Correspondence {
    pub m: usize,
    pub deg_bound: u32,
    pub syzygy_dim: usize,
    pub ann_dim: usize,
    /// Every `Σ ξ_i v_i` for a syzygy basis vector `ξ` annihilates `f`.
    pub images_annihilate: bool,
    /// ... and lies in the span of the computed annihilator basis.
    pub images_in_span: bool,
}

impl Correspondence {
    pub fn holds(&self) -> bool {
        self.syzygy_dim == self.ann_dim && self.images_annihilate && self.images_in_span
    }
}

/// Checks that `ξ ↦ Σ ξ_i v_i` identifies the truncated syzygies of `a`
/// with the truncated degree `m-1` part of `Ann_B(f)`. Any mismatch is an
/// implementation bug and reported as [`Error::VerificationFailed`].
pub fn ann_syzygy_correspondence(a: &[GF2Poly], deg_bound: u32) -> Result<Correspondence> {
    let nvars = check_generators(a)?;
    let m = a.len();
    let syz = syzygy_basis(a, deg_bound)?;
    let ann = ann_component_basis(a, m - 1, deg_bound)?;
    let f = build_f(a)?;
    let coords = component_coordinates(m, nvars, m - 1, deg_bound);

    let mut span = BitMatrix::zeros(0, coords.len());
    for e in &ann {
        span.push_row(coords_of(e, &coords).ok_or_else(|| {
            Error::VerificationFailed("annihilator basis element outside the truncation".into())
        })?);
    }
    let base_rank = span.rank();

    let mut images_annihilate = true;
    let mut images_in_span = true;
    for xi in &syz {
        let image = syzygy_image(xi)?;
        images_annihilate &= gr_mul(&image, &f)?.is_zero();
        match coords_of(&image, &coords) {
            Some(v) => {
                let mut extended = span.clone();
                extended.push_row(v);
                images_in_span &= extended.rank() == base_rank;
            }
            None => images_in_span = false,
        }
    }
    let report = Correspondence {
        m,
        deg_bound,
        syzygy_dim: syz.len(),
        ann_dim: ann.len(),
        images_annihilate,
        images_in_span,
    };
    if !report.holds() {
        return Err(Error::VerificationFailed(format!(
            "syzygy/annihilator mismatch: {report:?}"
        )));
    }
    Ok(report)
}
