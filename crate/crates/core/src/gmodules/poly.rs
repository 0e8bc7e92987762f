//! Dense univariate polynomials over `F_p`, coefficients low degree first.
//! Only what endomorphism splitting needs.

use crate::algebra::{FpMatrix, PrimeField};

pub(crate) type Poly = Vec<u32>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with the zero polynomial reported as `None`.
pub(crate) fn degree(a: &Poly) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn monic(f: PrimeField, a: Poly) -> Poly {
    let a = trim(a);
    match a.last() {
        Some(&lead) => {
            let inv = f.inv(lead).unwrap();
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
        None => a,
    }
}

pub(crate) fn mul(f: PrimeField, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a non-zero `m`.
pub(crate) fn rem(f: PrimeField, a: &Poly, m: &Poly) -> Poly {
    let dm = degree(m).expect("division by zero polynomial");
    let inv = f.inv(m[dm]).unwrap();
    let mut r = trim(a.clone());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], inv);
        for i in 0..=dm {
            r[dr - dm + i] = f.sub(r[dr - dm + i], f.mul(c, m[i]));
        }
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(f: PrimeField, a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

pub(crate) fn derivative(f: PrimeField, a: &Poly) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64 % f.p() as u64) as u32))
            .collect(),
    )
}

/// `base^e mod m`.
pub(crate) fn pow_mod(f: PrimeField, base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut acc = vec![1];
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    trim(acc)
}

/// `a(E)` by Horner's rule.
pub(crate) fn eval_matrix(f: PrimeField, a: &Poly, e: &FpMatrix) -> FpMatrix {
    let n = e.rows();
    let mut acc = FpMatrix::zeros(f, n, n);
    for &c in a.iter().rev() {
        acc = (&acc * e).add(&FpMatrix::scalar(f, n, c));
    }
    acc
}

/// Monic minimal polynomial of a square matrix.
pub(crate) fn minimal_polynomial(e: &FpMatrix) -> Poly {
    let f = e.field();
    let n = e.rows();
    let mut powers = vec![FpMatrix::identity(f, n)];
    loop {
        let next = powers.last().unwrap() * e;
        powers.push(next);
        let flat: Vec<Vec<u32>> = powers.iter().map(|m| m.data().to_vec()).collect();
        let stacked = FpMatrix::from_vectors(f, n * n, &flat);
        // the earlier powers are independent, so any relation involves the newest one
        let relations = crate::algebra::Subspace::kernel(&stacked);
        if let Some(rel) = relations.basis_vectors().first() {
            return monic(f, rel.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(5).unwrap();
        // (x - 1)(x - 2) = x^2 - 3x + 2
        let a = mul(f, &vec![4, 1], &vec![3, 1]);
        assert_eq!(a, vec![2, 2, 1]);
        assert_eq!(gcd(f, &a, &vec![4, 1]), vec![4, 1]);
        assert_eq!(derivative(f, &a), vec![2, 2]);
        assert_eq!(rem(f, &a, &vec![4, 1]), Vec::<u32>::new());
        // modulo x^2 - 2: x^4 = 4, so x^5 = 4x
        assert_eq!(pow_mod(f, &vec![0, 1], 5, &vec![3, 0, 1]), vec![0, 4]);
    }

    #[test]
    fn minimal_polynomials() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(minimal_polynomial(&FpMatrix::scalar(f, 3, 2)), vec![3, 1]);
        let j = FpMatrix::from_rows(f, &[[0, 1], [4, 0]]);
        assert_eq!(minimal_polynomial(&j), vec![1, 0, 1]);
        let m = minimal_polynomial(&j);
        assert!(eval_matrix(f, &m, &j).is_zero());
    }
}
