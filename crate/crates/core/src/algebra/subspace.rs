use std::fmt;

use super::field::PrimeField;
use super::matrix::{left_kernel_rows, FpMatrix};
use crate::error::{Error, Result};

/// A subspace of `F_p^n`, stored by its reduced row-echelon basis.
///
/// The echelon basis is unique, so two subspaces are equal exactly when
/// their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: FpMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: FpMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &FpMatrix) -> Self {
        let (r, rank) = m.rref();
        let rows: Vec<Vec<u32>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Self::from_echelon(m.field(), m.cols(), rows)
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        Self::row_space(&FpMatrix::from_vectors(field, ambient, vectors))
    }

    fn from_echelon(field: PrimeField, ambient: usize, rows: Vec<Vec<u32>>) -> Self {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("non-zero echelon row"))
            .collect();
        Self {
            ambient,
            basis: FpMatrix::from_vectors(field, ambient, &rows),
            pivots,
        }
    }

    /// Left kernel `{v : v * m = 0}`.
    pub fn kernel(m: &FpMatrix) -> Self {
        let rows = left_kernel_rows(m);
        Self::span(m.field(), m.rows(), &rows)
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let back = self.combine(&coords);
        (back == v).then_some(coords)
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim());
        if self.dim() == 0 {
            return vec![0; self.ambient];
        }
        self.basis.apply(coords)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field(), self.ambient);
        }
        let stacked = self.basis.vstack(&other.basis);
        let k = self.dim();
        let vectors: Vec<Vec<u32>> = left_kernel_rows(&stacked)
            .into_iter()
            .map(|rel| self.combine(&rel[..k]))
            .collect();
        Self::span(self.field(), self.ambient, &vectors)
    }

    /// Image `W * m` of the subspace under a linear map.
    pub fn image(&self, m: &FpMatrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient);
        if self.is_zero() {
            return Self::zero(self.field(), m.cols());
        }
        Self::row_space(&(&self.basis * m))
    }

    pub fn is_invariant_under(&self, m: &FpMatrix) -> bool {
        self.basis_vectors().iter().all(|v| self.contains(&m.apply(v)))
    }

    /// Matrix of the restriction of `m` to this (invariant) subspace, in
    /// echelon-basis coordinates.
    pub fn restrict_map(&self, m: &FpMatrix) -> Result<FpMatrix> {
        let rows: Option<Vec<Vec<u32>>> = self
            .basis_vectors()
            .iter()
            .map(|v| self.coordinates(&m.apply(v)))
            .collect();
        let rows = rows.ok_or(Error::NotInvariant)?;
        Ok(FpMatrix::from_vectors(self.field(), self.dim(), &rows))
    }

    /// Standard basis vectors completing the echelon basis to a basis of
    /// the ambient space.
    pub fn complement_basis(&self) -> Vec<Vec<u32>> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| {
                let mut e = vec![0; self.ambient];
                e[c] = 1;
                e
            })
            .collect()
    }

    /// Lifts a subspace given in this subspace's coordinates back to the ambient space.
    pub fn lift(&self, inner: &Subspace) -> Subspace {
        assert_eq!(inner.ambient, self.dim());
        let vectors: Vec<Vec<u32>> = inner.basis_vectors().iter().map(|c| self.combine(c)).collect();
        Self::span(self.field(), self.ambient, &vectors)
    }

    /// Expresses a subspace contained in `self` in `self`'s coordinates.
    pub fn relative(&self, inner: &Subspace) -> Option<Subspace> {
        let coords: Option<Vec<Vec<u32>>> = inner.basis_vectors().iter().map(|v| self.coordinates(v)).collect();
        Some(Self::span(self.field(), self.dim(), &coords?))
    }

    /// Number of vectors, `p^dim`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.field().p() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    /// All vectors of the subspace, ordered by their coordinates.
    pub fn vectors(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        super::vectors::all_vectors(self.field(), self.dim()).map(move |c| self.combine(&c))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F{}^{}: {})",
            self.dim(),
            self.field().p(),
            self.ambient,
            self.basis
        )
    }
}

/// Echelon accumulator used by spinning and Krylov-style iterations.
#[derive(Clone, Debug)]
pub(crate) struct EchelonBuilder {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub(crate) fn new(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the residual.
    pub(crate) fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let factor = v[c];
            if factor == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(factor, r));
            }
        }
        v
    }

    /// Inserts `v` if independent; returns whether it was new.
    pub(crate) fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[c]).unwrap();
        r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            let factor = row[c];
            if factor != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(c);
        true
    }

    pub(crate) fn into_subspace(self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.rows)
    }
}
