//! Dense exact-rational matrices: just enough elimination for ranks,
//! row-reduced forms, and left kernels.

use num::{BigRational, One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        RationalMatrix { rows: n_rows, cols: n_cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    if !self.get(r, k).is_zero() && !other.get(k, c).is_zero() {
                        acc += self.get(r, k) * other.get(k, c);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Reduced row-echelon form and the pivot column of each nonzero row.
    /// Pivoting picks the first nonzero entry, so the result is
    /// deterministic and exact.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pivot_row, c).clone();
                    m.set(row, c, b);
                    m.set(pivot_row, c, a);
                }
            }
            let inv = m.get(row, col).clone().recip();
            for c in 0..m.cols {
                let v = m.get(row, c).clone() * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c).clone() - &factor * m.get(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Row-reduced basis of `{ w : w . self = 0 }`, one row per kernel
    /// dimension; a `0 x rows` matrix when the left kernel is trivial.
    pub fn left_kernel_rref(&self) -> RationalMatrix {
        let (rref_t, pivots) = self.transpose().rref();
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rref_t.get(row, f).clone();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return RationalMatrix::zeros(0, n);
        }
        RationalMatrix::from_rows(basis).rref().0.trim_zero_rows()
    }

    fn trim_zero_rows(self) -> RationalMatrix {
        let keep: Vec<usize> =
            (0..self.rows).filter(|&r| self.row(r).iter().any(|v| !v.is_zero())).collect();
        let data = keep.iter().flat_map(|&r| self.row(r).to_vec()).collect();
        RationalMatrix { rows: keep.len(), cols: self.cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect(),
        )
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[&[1, -1], &[-1, 1]]);
        assert_eq!(a.rank(), 1);
        let (r, pivots) = a.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(*r.get(0, 0), rat(1));
        assert_eq!(*r.get(0, 1), rat(-1));
        assert!(r.get(1, 0).is_zero() && r.get(1, 1).is_zero());

        let b = m(&[&[1, 0], &[-1, 1], &[0, -1]]);
        assert_eq!(b.rank(), 2);
        assert_eq!(m(&[&[2, 4], &[1, 2]]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn left_kernel_examples() {
        // gamma of {B -> A, A+B -> 2B}: kernel spanned by (1, 1)
        let gamma = m(&[&[1, -1], &[-1, 1]]);
        let w = gamma.left_kernel_rref();
        assert_eq!(w.rows(), 1);
        assert_eq!(*w.get(0, 0), rat(1));
        assert_eq!(*w.get(0, 1), rat(1));
        assert!(w.mul(&gamma).is_zero());

        // full-rank rows: trivial kernel
        let full = m(&[&[1, 0], &[0, 1]]);
        assert_eq!(full.left_kernel_rref().rows(), 0);

        // zero row contributes a standard basis vector
        let deg = m(&[&[1, -1], &[0, 0]]);
        let w = deg.left_kernel_rref();
        assert_eq!(w.rows(), 1);
        assert_eq!(*w.get(0, 0), rat(0));
        assert_eq!(*w.get(0, 1), rat(1));
    }

    #[test]
    fn left_kernel_is_row_reduced() {
        let gamma = m(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]).transpose();
        let w = gamma.left_kernel_rref();
        assert_eq!(w.rows(), 1);
        // leading entry 1 in the first nonzero column
        assert_eq!(*w.get(0, 0), rat(1));
        assert!(w.mul(&gamma).is_zero());
    }
}
