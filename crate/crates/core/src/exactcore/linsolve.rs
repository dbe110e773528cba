use alloc::vec::Vec;

use num_traits::Zero;

use super::BigRat;
use crate::{Error, Result};

/// Solves `A·x = b` exactly by rational Gaussian elimination with partial
/// pivoting on the first nonzero entry.
///
/// `a` is row-major and must be square. A singular matrix yields
/// [`Error::SingularSystem`].
pub fn solve_linear_exact(a: &[Vec<BigRat>], b: &[BigRat]) -> Result<Vec<BigRat>> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: b.len() });
    }
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch { expected: n, found: row.len() });
    }
    let mut m: Vec<Vec<BigRat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        m.swap(col, pivot);
        let inv = BigRat::from_integer(1.into()) / &m[col][col];
        for v in m[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    Ok(m.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64) -> BigRat {
        BigRat::from_integer(n.into())
    }

    #[test]
    fn identity_returns_rhs() {
        let a = vec![vec![r(1), r(0)], vec![r(0), r(1)]];
        let b = vec![r(5), BigRat::new(3.into(), 7.into())];
        assert_eq!(solve_linear_exact(&a, &b).unwrap(), b);
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(solve_linear_exact(&a, &[r(1), r(2)]), Err(Error::SingularSystem));
    }

    #[test]
    fn needs_row_swap() {
        let a = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        assert_eq!(solve_linear_exact(&a, &[r(3), r(4)]).unwrap(), vec![r(4), r(3)]);
    }

    #[test]
    fn shape_errors() {
        let a = vec![vec![r(1), r(0)], vec![r(0)]];
        assert!(matches!(solve_linear_exact(&a, &[r(1), r(1)]), Err(Error::LengthMismatch { .. })));
        let a = vec![vec![r(1)]];
        assert!(matches!(solve_linear_exact(&a, &[r(1), r(1)]), Err(Error::LengthMismatch { .. })));
    }
}
