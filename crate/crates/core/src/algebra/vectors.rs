//! Enumeration of `F_p^n` in canonical (lexicographic) order.
//!
//! A vector is encoded as the base-`p` integer whose most significant
//! digit is the first coordinate, so code order equals lexicographic order.

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Default bound on `p^dim` for exhaustive vector scans.
pub const EXHAUSTIVE_CAP: u128 = 1_000_000;

pub fn space_size(field: PrimeField, dim: usize) -> u128 {
    (field.p() as u128).checked_pow(dim as u32).unwrap_or(u128::MAX)
}

/// Errors unless `p^dim` is within `cap`.
pub fn ensure_exhaustive(field: PrimeField, dim: usize, cap: u128) -> Result<u64> {
    let size = space_size(field, dim);
    if size > cap {
        return Err(Error::ScanTooLarge { size, cap });
    }
    Ok(size as u64)
}

pub fn encode(field: PrimeField, v: &[u32]) -> u64 {
    let p = field.p() as u64;
    v.iter().fold(0u64, |acc, &x| acc * p + x as u64)
}

pub fn decode(field: PrimeField, dim: usize, mut code: u64) -> Vec<u32> {
    let p = field.p() as u64;
    let mut v = vec![0u32; dim];
    for slot in v.iter_mut().rev() {
        *slot = (code % p) as u32;
        code /= p;
    }
    v
}

/// Every vector of `F_p^dim` in lexicographic order, starting at zero.
pub fn all_vectors(field: PrimeField, dim: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = space_size(field, dim).min(u64::MAX as u128) as u64;
    (0..total).map(move |c| decode(field, dim, c))
}

/// Normalizes a non-zero vector so its first non-zero coordinate is 1.
/// Returns the normalized vector and the scalar `c` with `v = c * normalized`.
pub fn normalize(field: PrimeField, v: &[u32]) -> Option<(Vec<u32>, u32)> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = field.inv(lead).unwrap();
    Some((v.iter().map(|&x| field.mul(x, inv)).collect(), lead))
}

pub fn is_normalized(v: &[u32]) -> bool {
    v.iter().find(|&&x| x != 0) == Some(&1)
}

/// One representative (leading coordinate 1) per line of `F_p^dim`, in
/// lexicographic order. Each is the lexicographically smallest vector on its line.
pub fn projective_points(field: PrimeField, dim: usize) -> impl Iterator<Item = Vec<u32>> {
    all_vectors(field, dim).filter(|v| is_normalized(v))
}

pub fn scale(field: PrimeField, v: &[u32], c: u32) -> Vec<u32> {
    v.iter().map(|&x| field.mul(x, c)).collect()
}

pub fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn unit_vector(dim: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; dim];
    e[i] = 1;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_order_is_lexicographic() {
        let f = PrimeField::new(3).unwrap();
        let all: Vec<Vec<u32>> = all_vectors(f, 2).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 9);
        for v in &all {
            assert_eq!(decode(f, 2, encode(f, v)), *v);
        }
    }

    #[test]
    fn projective_counts() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(projective_points(f, 2).count(), 6);
        assert_eq!(projective_points(f, 3).count(), 31);
    }

    #[test]
    fn exhaustive_cap() {
        let f = PrimeField::new(5).unwrap();
        assert!(ensure_exhaustive(f, 8, EXHAUSTIVE_CAP).is_ok());
        assert!(ensure_exhaustive(f, 9, EXHAUSTIVE_CAP).is_err());
    }
}
