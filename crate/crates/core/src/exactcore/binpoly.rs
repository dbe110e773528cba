use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

/// Univariate polynomial over GF(2) packed into 64-bit words.
///
/// Bit `i` of the packed representation is the coefficient of `t^i`. The word
/// vector carries no trailing zero words.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BinPoly {
    words: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        BinPoly { words: vec![1] }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        BinPoly { words: vec![2] }
    }

    /// `t + 1`
    pub fn t_plus_one() -> Self {
        BinPoly { words: vec![3] }
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = BinPoly::zero();
        p.flip(e);
        p
    }

    /// Coefficients listed lowest degree first.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut p = BinPoly::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b {
                p.flip(i);
            }
        }
        p
    }

    /// Builds a polynomial whose coefficients are the bits of `w`.
    pub fn from_u64(w: u64) -> Self {
        let mut p = BinPoly { words: vec![w] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.as_slice() == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, e: usize) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| (w >> (e % 64)) & 1 == 1)
    }

    fn flip(&mut self, e: usize) {
        let (w, b) = (e / 64, e % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << b;
        self.trim();
    }

    /// Exponents with coefficient 1, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Value at `t = 0`.
    pub fn eval_zero(&self) -> bool {
        self.coeff(0)
    }

    /// Value at `t = 1`: parity of the number of terms.
    pub fn eval_one(&self) -> bool {
        self.words.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 1
    }

    fn shl(&self, s: usize) -> BinPoly {
        if self.is_zero() {
            return BinPoly::zero();
        }
        let (ws, bs) = (s / 64, s % 64);
        let mut out = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] ^= w << bs;
            if bs != 0 {
                out[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = BinPoly { words: out };
        p.trim();
        p
    }

    fn xor_assign(&mut self, rhs: &BinPoly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }

    pub fn pow(&self, mut e: u32) -> BinPoly {
        let mut base = self.clone();
        let mut acc = BinPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, divisor: &BinPoly) -> Option<(BinPoly, BinPoly)> {
        let dd = divisor.degree()?;
        let mut rem = self.clone();
        let mut quot = BinPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            quot.flip(s);
            rem.xor_assign(&divisor.shl(s));
        }
        Some((quot, rem))
    }

    pub fn gcd(&self, other: &BinPoly) -> BinPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Splits off the largest power of `factor` dividing `self`, returning
    /// the exponent and the cofactor. `self` must be nonzero.
    pub fn split_power(&self, factor: &BinPoly) -> (u32, BinPoly) {
        debug_assert!(!self.is_zero());
        let mut e = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(factor).expect("nonzero factor");
            if !r.is_zero() {
                return (e, cur);
            }
            cur = q;
            e += 1;
        }
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.support();
        if s.is_empty() {
            return f.write_str("0");
        }
        for (k, e) in s.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl<'a> Add<&'a BinPoly> for &'a BinPoly {
    type Output = BinPoly;
    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl<'a> Mul<&'a BinPoly> for &'a BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        let mut out = BinPoly::zero();
        for e in self.support() {
            out.xor_assign(&rhs.shl(e));
        }
        out
    }
}
