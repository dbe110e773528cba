use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;
use core::ops::{Add, Mul};

use crate::{Error, Result};

/// Exponent vector of a monomial in a fixed, ordered list of variables.
///
/// Ordered graded-lexicographically: by total degree first, then by the
/// exponent of the first variable, then the second, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            let name = names.get(i).map(String::as_str).unwrap_or("?");
            out.push_str(name);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree at most `deg`, in
/// ascending graded-lexicographic order.
pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, remaining: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(remaining);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=remaining {
            prefix.push(e);
            rec(prefix, left - 1, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=deg {
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            continue;
        }
        let mut layer = Vec::new();
        rec(&mut Vec::new(), nvars, d, &mut layer);
        layer.sort();
        out.extend(layer);
    }
    out
}

/// Multivariate polynomial over GF(2), stored as its set of monomials.
///
/// Addition is symmetric difference of supports. All operands of a binary
/// operation must share the same number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GF2Poly {
    nvars: usize,
    terms: BTreeSet<Monomial>,
}

impl GF2Poly {
    pub fn zero(nvars: usize) -> Self {
        GF2Poly { nvars, terms: BTreeSet::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var(nvars, i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeSet::new();
        terms.insert(m);
        GF2Poly { nvars, terms }
    }

    /// Sums the given monomials; pairs cancel.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(nvars: usize, monos: I) -> Result<Self> {
        let mut p = GF2Poly::zero(nvars);
        for m in monos {
            if m.nvars() != nvars {
                return Err(Error::ContextMismatch);
            }
            p.toggle(m);
        }
        Ok(p)
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|m| m.total_degree() == 0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Monomials in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(Monomial::total_degree)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> GF2Poly {
        GF2Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &GF2Poly) -> Result<GF2Poly> {
        if self.nvars != rhs.nvars {
            return Err(Error::ContextMismatch);
        }
        Ok(GF2Poly {
            nvars: self.nvars,
            terms: self.terms.symmetric_difference(&rhs.terms).cloned().collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &GF2Poly) -> Result<GF2Poly> {
        if self.nvars != rhs.nvars {
            return Err(Error::ContextMismatch);
        }
        let mut out = GF2Poly::zero(self.nvars);
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.mul(b));
            }
        }
        Ok(out)
    }

    /// Text form with the highest term first, e.g. `x^2 + x*y + 1`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|m| m.format_with(names)).collect();
        parts.join(" + ")
    }
}

impl<'a> Add<&'a GF2Poly> for &'a GF2Poly {
    type Output = GF2Poly;
    /// Panics when the variable counts differ; use [`GF2Poly::checked_add`]
    /// for untrusted operands.
    fn add(self, rhs: &GF2Poly) -> GF2Poly {
        self.checked_add(rhs).expect("GF2Poly operands from different rings")
    }
}

impl<'a> Mul<&'a GF2Poly> for &'a GF2Poly {
    type Output = GF2Poly;
    fn mul(self, rhs: &GF2Poly) -> GF2Poly {
        self.checked_mul(rhs).expect("GF2Poly operands from different rings")
    }
}
