use alloc::vec;
use alloc::vec::Vec;

/// Dense bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index out of range");
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index out of range");
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, rhs: &BitVector) {
        debug_assert_eq!(self.len, rhs.len);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, rhs: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&rhs.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { cols, rows: vec![BitVector::zeros(cols); rows] }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged GF(2) matrix");
        BitMatrix { cols, rows }
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| BitVector::from_bools(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols, "row length must match column count");
        self.rows.push(row);
    }

    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        out
    }

    /// Reduced row-echelon form together with the ascending pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            let Some(p) = (next..rows.len()).find(|&r| rows[r].get(c)) else {
                continue;
            };
            rows.swap(next, p);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        (BitMatrix { cols: self.cols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Basis of the right null space `{v : M·v = 0}`.
///
/// One vector per free column of the reduced row-echelon form, in ascending
/// free-column order; the vector has a 1 at its free column, zeros at the
/// other free columns, and the pivot entries that cancel it.
pub fn gf2_kernel(m: &BitMatrix) -> Vec<BitVector> {
    let (rref, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVector::zeros(m.cols);
            v.set(free, true);
            for (row, &p) in rref.rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_two_by_two() {
        let m = BitMatrix::from_bools(&[vec![true, true], vec![false, false]]);
        let k = gf2_kernel(&m);
        assert_eq!(k, vec![BitVector::from_bools(&[true, true])]);
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let m = BitMatrix::zeros(2, 2);
        let k = gf2_kernel(&m);
        assert_eq!(
            k,
            vec![BitVector::from_bools(&[true, false]), BitVector::from_bools(&[false, true])]
        );
    }

    #[test]
    fn no_rows() {
        let m = BitMatrix::zeros(0, 3);
        assert_eq!(gf2_kernel(&m).len(), 3);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = BitMatrix::from_bools(&[
            vec![true, false, true],
            vec![false, true, true],
            vec![true, true, false],
            vec![false, false, true],
        ]);
        assert_eq!(m.rank(), 3);
        assert!(gf2_kernel(&m).is_empty());
    }

    #[test]
    fn wide_matrix_spanning_words() {
        let mut m = BitMatrix::zeros(2, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 64, true);
        let k = gf2_kernel(&m);
        assert_eq!(k.len(), 128);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }
}
