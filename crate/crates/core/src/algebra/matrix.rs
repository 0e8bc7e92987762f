//! Dense matrices over `F_p`.
//!
//! Vectors are rows and linear maps act by right multiplication, so the
//! image of `v` under `g` is `v * g`.

use std::fmt;
use std::ops::Mul;

use super::field::PrimeField;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    /// Builds a matrix from row-major residues, which must already lie in `[0, p)`.
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.p()) {
            return Err(Error::EntryOutOfRange {
                value: bad as i64,
                p: field.p(),
            });
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Stacks residue vectors as rows.
    pub fn from_vectors(field: PrimeField, cols: usize, vectors: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols);
            data.extend_from_slice(v);
        }
        Self {
            field,
            rows: vectors.len(),
            cols,
            data,
        }
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: PrimeField, n: usize, value: u32) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = value % field.p();
        }
        m
    }

    pub fn diagonal(field: PrimeField, entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * n + i] = field.reduce(x);
        }
        m
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(field: PrimeField, blocks: &[&FpMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(field, n, n);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, b.cols, "blocks must be square");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(offset + i) * n + offset + j] = b.get(i, j);
                }
            }
            offset += b.rows;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.cols + j] = value % self.field.p();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Entries as nested integer rows (used for serialization).
    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as u64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.p(), rhs.p()));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.p() as u64;
        let mut out = vec![0u32; self.rows * rhs.cols];
        let mut acc = vec![0u64; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (slot, &b) in acc.iter_mut().zip(rrow) {
                    *slot += a * b as u64;
                }
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|a| *a %= p);
                }
            }
            for (j, a) in acc.iter().enumerate() {
                out[i * rhs.cols + j] = (a % p) as u32;
            }
        }
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        let p = self.p() as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let rrow = self.row(k);
            for (slot, &b) in acc.iter_mut().zip(rrow) {
                *slot += a as u64 * b as u64;
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    pub fn add(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        self.with_data(data)
    }

    /// `self - alpha * I`.
    pub fn minus_scalar(&self, alpha: u32) -> FpMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            let x = m.get(i, i);
            m.data[i * self.cols + i] = self.field.sub(x, alpha % self.p());
        }
        m
    }

    fn with_data(&self, data: Vec<u32>) -> FpMatrix {
        FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduced row-echelon form and rank. Zero rows are kept at the bottom.
    pub fn rref(&self) -> (FpMatrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place(self.cols);
        (m, rank)
    }

    /// Row-reduces in place using pivots among the first `pivot_cols`
    /// columns, returning the rank found there.
    pub(crate) fn rref_in_place(&mut self, pivot_cols: usize) -> usize {
        let f = self.field;
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..pivot_cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(self.data[rank * cols + c]).expect("pivot is non-zero");
            for j in c..cols {
                let x = self.data[rank * cols + j];
                self.data[rank * cols + j] = f.mul(x, inv);
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let factor = self.data[r * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, self.data[rank * cols + j]);
                    let x = self.data[r * cols + j];
                    self.data[r * cols + j] = f.sub(x, sub);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        if aug.rref_in_place(n) < n {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.data[i * 2 * n + n + j];
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> u32 {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| m[r * n + c] != 0) else {
                return 0;
            };
            if piv != c {
                for j in 0..n {
                    m.swap(piv * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[c * n + c];
            det = f.mul(det, pv);
            let inv = f.inv(pv).unwrap();
            for r in c + 1..n {
                let factor = f.mul(m[r * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let sub = f.mul(factor, m[c * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
        }
        det
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Permutation matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(field: PrimeField, perm: &[usize]) -> FpMatrix {
        let n = perm.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[i * n + j] = 1;
        }
        m
    }

    /// Reads a permutation back from a permutation matrix.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let mut perm = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let ones: Vec<usize> = (0..self.cols).filter(|&j| row[j] == 1).collect();
            if ones.len() != 1 || row.iter().filter(|&&x| x != 0).count() != 1 {
                return None;
            }
            perm.push(ones[0]);
        }
        Some(perm)
    }
}

impl Mul for &FpMatrix {
    type Output = FpMatrix;
    fn mul(self, rhs: &FpMatrix) -> FpMatrix {
        self.try_mul(rhs).expect("incompatible matrices")
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.p(), self.to_rows())
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Left kernel `{v : v * m = 0}` as an echelonized list of basis rows.
pub(crate) fn left_kernel_rows(m: &FpMatrix) -> Vec<Vec<u32>> {
    let n = m.rows;
    let width = m.cols + n;
    let mut aug = FpMatrix::zeros(m.field, n, width);
    for i in 0..n {
        for j in 0..m.cols {
            aug.data[i * width + j] = m.get(i, j);
        }
        aug.data[i * width + m.cols + i] = 1;
    }
    let rank = aug.rref_in_place(m.cols);
    (rank..n).map(|r| aug.row(r)[m.cols..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = f5();
        let id = FpMatrix::identity(f, 2);
        assert_eq!(id.rref(), (id.clone(), 2));

        let z = FpMatrix::zeros(f, 3, 3);
        assert_eq!(z.rref(), (z.clone(), 0));

        let m = FpMatrix::from_rows(f, &[[2, 4], [1, 2]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, FpMatrix::from_rows(f, &[[1, 2], [0, 0]]));
    }

    #[test]
    fn inverse_and_determinant() {
        let f = f5();
        let j = FpMatrix::from_rows(f, &[[0, 1], [4, 0]]);
        let inv = j.inverse().unwrap();
        assert!((&j * &inv).is_identity());
        assert_eq!(j.determinant(), 1);
        let singular = FpMatrix::from_rows(f, &[[1, 2], [2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), 0);
    }

    #[test]
    fn powers() {
        let f = f5();
        let g = FpMatrix::diagonal(f, &[2, 3]);
        assert!(g.pow(4).is_identity());
        assert!(!g.pow(2).is_identity());
        let j = FpMatrix::from_rows(f, &[[0, 1], [4, 0]]);
        assert_eq!(j.pow(2), FpMatrix::scalar(f, 2, 4));
    }

    #[test]
    fn permutation_round_trip() {
        let f = f5();
        let m = FpMatrix::permutation(f, &[2, 0, 1]);
        assert_eq!(m.as_permutation(), Some(vec![2, 0, 1]));
        assert_eq!(m.apply(&[1, 0, 0]), vec![0, 0, 1]);
    }

    #[test]
    fn out_of_range_entries_rejected() {
        assert!(matches!(
            FpMatrix::new(f5(), 1, 2, vec![1, 5]),
            Err(Error::EntryOutOfRange { value: 5, p: 5 })
        ));
        assert!(FpMatrix::new(f5(), 1, 2, vec![1]).is_err());
    }
}
