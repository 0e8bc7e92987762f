//! Bilinear forms `(v, w) = v B w^T` given by Gram matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{solve_linear, FpMatrix, Subspace};
use crate::error::{Error, Result};
use crate::gmodules::GModule;

/// Form spaces with at most this many elements are scanned exhaustively.
pub const FORM_SCAN_CAP: u128 = 100_000;
/// Random draws from a larger form space.
pub const FORM_RANDOM_DRAWS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: FpMatrix,
}

impl BilinearForm {
    pub fn new(gram: FpMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix is {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(Self { gram })
    }

    pub fn gram(&self) -> &FpMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, v: &[u32], w: &[u32]) -> u32 {
        let f = self.gram.field();
        let vb = self.gram.apply(v);
        vb.iter().zip(w).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    pub fn is_nonsingular(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Zero diagonal and `B^T = -B`; equivalent to `(v, v) = 0` for all `v`
    /// in odd characteristic.
    pub fn is_alternating(&self) -> bool {
        let f = self.gram.field();
        let n = self.dim();
        (0..n).all(|i| self.gram.get(i, i) == 0 && (0..n).all(|j| self.gram.get(i, j) == f.neg(self.gram.get(j, i))))
    }

    pub fn is_symplectic(&self) -> bool {
        self.is_nonsingular() && self.is_alternating()
    }

    /// `g B g^T = B` for every generator.
    pub fn is_invariant(&self, v: &GModule) -> bool {
        v.action().iter().all(|g| self.preserved_by(g))
    }

    /// `g B g^T = B` for every element.
    pub fn is_invariant_under_all(&self, v: &GModule) -> bool {
        v.element_actions().iter().all(|g| self.preserved_by(g))
    }

    fn preserved_by(&self, g: &FpMatrix) -> bool {
        &(&(g * &self.gram) * &g.transpose()) == &self.gram
    }
}

/// All invariant Gram matrices, flattened row-major into `F_p^(dim^2)`.
pub fn invariant_forms(v: &GModule) -> Subspace {
    let f = v.field();
    let d = v.dim();
    let n = d * d;
    let equations: Vec<FpMatrix> = v
        .action()
        .iter()
        .map(|g| {
            // (g B g^T)_{ab} = sum_{c,e} g_{ac} B_{ce} g_{be}
            let mut eq = FpMatrix::zeros(f, n, n);
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        for e in 0..d {
                            eq.set(a * d + b, c * d + e, f.mul(g.get(a, c), g.get(b, e)));
                        }
                    }
                }
            }
            eq.sub(&FpMatrix::identity(f, n))
        })
        .collect();
    solve_linear(f, n, &equations)
}

pub fn form_from_flat(space: &Subspace, dim: usize, flat: Vec<u32>) -> BilinearForm {
    BilinearForm {
        gram: FpMatrix::new(space.field(), dim, dim, flat).unwrap(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSearch {
    Found(BilinearForm),
    /// The whole invariant space was scanned.
    NoneExists,
    /// Sampling failed; nothing was proved.
    NotFound,
}

impl FormSearch {
    pub fn form(&self) -> Option<&BilinearForm> {
        match self {
            FormSearch::Found(b) => Some(b),
            _ => None,
        }
    }
}

/// A non-singular invariant form: the first one in coordinate order when
/// the invariant space is small enough to scan, otherwise a sampled one.
pub fn find_nonsingular_invariant(v: &GModule, seed: u64) -> FormSearch {
    let space = invariant_forms(v);
    let d = v.dim();
    if space.is_zero() && d > 0 {
        return FormSearch::NoneExists;
    }
    if space.size() <= FORM_SCAN_CAP {
        return space
            .vectors()
            .map(|flat| form_from_flat(&space, d, flat))
            .find(|b| b.is_nonsingular())
            .map_or(FormSearch::NoneExists, FormSearch::Found);
    }
    for flat in space.basis_vectors() {
        let b = form_from_flat(&space, d, flat);
        if b.is_nonsingular() {
            return FormSearch::Found(b);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = v.p();
    for _ in 0..FORM_RANDOM_DRAWS {
        let coords: Vec<u32> = (0..space.dim()).map(|_| rng.gen_range(0..p)).collect();
        let b = form_from_flat(&space, d, space.combine(&coords));
        if b.is_nonsingular() {
            return FormSearch::Found(b);
        }
    }
    FormSearch::NotFound
}

/// `{x in X : (x, y) = 0 for all y in Y}`.
pub fn left_radical(form: &BilinearForm, x: &Subspace, y: &Subspace) -> Subspace {
    annihilator(form.gram(), x, y)
}

/// `{x in X : (y, x) = 0 for all y in Y}`.
pub fn right_radical(form: &BilinearForm, x: &Subspace, y: &Subspace) -> Subspace {
    annihilator(&form.gram().transpose(), x, y)
}

fn annihilator(gram: &FpMatrix, x: &Subspace, y: &Subspace) -> Subspace {
    if x.is_zero() || y.is_zero() {
        return x.clone();
    }
    // coordinates c with (c X) B Y^T = 0
    let pairing = &(x.basis() * gram) * &y.basis().transpose();
    x.lift(&Subspace::kernel(&pairing))
}

/// `(l_W(W), r_W(W))`.
pub fn radicals(form: &BilinearForm, w: &Subspace) -> (Subspace, Subspace) {
    (left_radical(form, w, w), right_radical(form, w, w))
}

/// `W^perp` for an alternating form.
pub fn perp(form: &BilinearForm, w: &Subspace) -> Result<Subspace> {
    if !form.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let full = Subspace::full(form.gram().field(), form.dim());
    Ok(left_radical(form, &full, w))
}

/// Gram matrix of the form on `W`, in `W`'s echelon basis.
pub fn restrict_form(form: &BilinearForm, w: &Subspace) -> BilinearForm {
    let b = w.basis();
    BilinearForm {
        gram: &(b * form.gram()) * &b.transpose(),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::PrimeField;
    use crate::gmodules::tests::q8_module;
    use crate::groups::{FiniteGroup, DEFAULT_CAP};

    fn j(f: PrimeField) -> BilinearForm {
        BilinearForm::new(FpMatrix::from_rows(f, &[[0, 1], [4, 0]])).unwrap()
    }

    #[test]
    fn q8_forms() {
        let v = q8_module();
        let space = invariant_forms(&v);
        assert_eq!(space.dim(), 1);
        assert!(space.contains(&[0, 1, 4, 0]));
        let search = find_nonsingular_invariant(&v, 0);
        let b = search.form().unwrap();
        assert!(b.is_symplectic());
        assert!(b.is_invariant_under_all(&v));
    }

    #[test]
    fn no_invariant_forms() {
        let f = PrimeField::new(5).unwrap();
        let g = Arc::new(FiniteGroup::from_generators(vec![FpMatrix::from_rows(f, &[[2]])], DEFAULT_CAP).unwrap());
        let v = GModule::natural(g);
        assert!(invariant_forms(&v).is_zero());
        assert_eq!(find_nonsingular_invariant(&v, 0), FormSearch::NoneExists);
    }

    #[test]
    fn trivial_group_has_all_forms() {
        let f = PrimeField::new(5).unwrap();
        let v = GModule::natural(Arc::new(FiniteGroup::trivial(f, 3)));
        assert_eq!(invariant_forms(&v).dim(), 9);
    }

    #[test]
    fn perp_and_radicals() {
        let f = PrimeField::new(5).unwrap();
        let b = j(f);
        let line = Subspace::span(f, 2, &[vec![0, 1]]);
        assert_eq!(perp(&b, &line).unwrap(), line);
        assert!(perp(&b, &Subspace::zero(f, 2)).unwrap().is_full());
        let (l, r) = radicals(&b, &line);
        assert_eq!((l.clone(), r), (line.clone(), line));
        let full = Subspace::full(f, 2);
        let (l, r) = radicals(&b, &full);
        assert!(l.is_zero() && r.is_zero());
        let sym = BilinearForm::new(FpMatrix::identity(f, 2)).unwrap();
        assert!(matches!(perp(&sym, &full), Err(Error::NotAlternating)));
    }

    #[test]
    fn restriction() {
        let f = PrimeField::new(5).unwrap();
        let jj = BilinearForm::new(FpMatrix::block_diagonal(f, &[j(f).gram(), j(f).gram()])).unwrap();
        let first = Subspace::span(f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        assert_eq!(restrict_form(&jj, &first), j(f));
        assert_eq!(restrict_form(&jj, &Subspace::full(f, 4)), jj);
    }
}
