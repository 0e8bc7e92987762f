use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::intertwine::endomorphisms;
use super::poly::{self, Poly};
use super::GModule;
use crate::algebra::{vectors, FpMatrix, Subspace};
use crate::error::Result;

/// Random endomorphisms tried when the endomorphism ring is not commutative.
const RANDOM_ENDOMORPHISMS: usize = 256;
/// Random seeds spun when a module is too large to scan.
const RANDOM_SPINS: usize = 1_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    /// A proper non-zero submodule. The zero module carries the zero subspace.
    NotSimple(Subspace),
    /// No submodule found by sampling; not a proof.
    ProbablySimple,
}

/// Outcome of looking for a submodule through `End_G(V)`.
pub(crate) enum EndSplit {
    Split(Subspace),
    /// `End_G(V)` is commutative with a single primitive idempotent.
    Local,
    Unknown,
}

/// Simplicity test.
///
/// Kernels of singular endomorphisms are tried first. Failing that, a module
/// small enough to enumerate is certified by spinning every line; a larger
/// one is certified when `p` does not divide `|G|` and the endomorphism ring
/// is a field. Anything else falls back to sampled spinning.
pub fn is_simple(v: &GModule) -> Simplicity {
    if v.dim() == 0 {
        return Simplicity::NotSimple(Subspace::zero(v.field(), 0));
    }
    let split = endomorphism_split(v, 0);
    if let EndSplit::Split(w) = split {
        return Simplicity::NotSimple(w);
    }
    if let Ok(found) = exhaustive_simplicity(v) {
        return found.map_or(Simplicity::Simple, Simplicity::NotSimple);
    }
    if matches!(split, EndSplit::Local) && coprime_order(v) {
        return Simplicity::Simple;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let f = v.field();
    let seeds = (0..v.dim())
        .map(|i| vectors::unit_vector(v.dim(), i))
        .chain((0..RANDOM_SPINS).map(|_| (0..v.dim()).map(|_| rng.gen_range(0..f.p())).collect()));
    for s in seeds {
        let w = v.spin(&s);
        if !w.is_zero() && !w.is_full() {
            return Simplicity::NotSimple(w);
        }
    }
    Simplicity::ProbablySimple
}

/// Spins every line of `V`. `Ok(None)` certifies simplicity; errors when
/// `p^dim` exceeds the exhaustive cap.
pub fn exhaustive_simplicity(v: &GModule) -> Result<Option<Subspace>> {
    vectors::ensure_exhaustive(v.field(), v.dim(), vectors::EXHAUSTIVE_CAP)?;
    if v.dim() == 0 {
        return Ok(Some(Subspace::zero(v.field(), 0)));
    }
    for point in vectors::projective_points(v.field(), v.dim()) {
        let w = v.spin(&point);
        if !w.is_full() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub(crate) fn coprime_order(v: &GModule) -> bool {
    v.group().order() as u64 % v.p() as u64 != 0
}

/// Looks for a proper submodule as the kernel of an endomorphism.
pub(crate) fn endomorphism_split(v: &GModule, seed: u64) -> EndSplit {
    let ends = endomorphisms(v);
    if ends.len() <= 1 {
        return if v.dim() > 0 {
            EndSplit::Local
        } else {
            EndSplit::Unknown
        };
    }
    for e in &ends {
        if let Some(w) = split_by(e) {
            return EndSplit::Split(w);
        }
    }
    let commutative = ends
        .iter()
        .enumerate()
        .all(|(i, a)| ends[i + 1..].iter().all(|b| &(a * b) == &(b * a)));
    if commutative {
        // x -> x^p is linear on a commutative algebra; a fixed non-scalar H
        // satisfies H^p = H, so it is diagonalizable over F_p
        let space = Subspace::span(
            v.field(),
            v.dim() * v.dim(),
            &ends.iter().map(|m| m.data().to_vec()).collect::<Vec<_>>(),
        );
        let f = v.field();
        let k = ends.len();
        let mut frob = FpMatrix::zeros(f, k, k);
        for (i, e) in ends.iter().enumerate() {
            let image = e.pow(f.p() as u64);
            let coords = space
                .coordinates(image.data())
                .expect("endomorphism ring is closed under powers");
            for (j, c) in coords.into_iter().enumerate() {
                frob.set(i, j, c);
            }
        }
        let fixed = Subspace::kernel(&frob.minus_scalar(1));
        if fixed.dim() == 1 {
            return EndSplit::Local;
        }
        for coords in fixed.basis_vectors() {
            let h = FpMatrix::new(f, v.dim(), v.dim(), space.combine(&coords)).unwrap();
            if let Some(w) = split_by(&h) {
                return EndSplit::Split(w);
            }
        }
        return EndSplit::Unknown;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = v.field();
    for _ in 0..RANDOM_ENDOMORPHISMS {
        let mut e = FpMatrix::zeros(f, v.dim(), v.dim());
        for b in &ends {
            e = e.add(&b.scale(rng.gen_range(0..f.p())));
        }
        if let Some(w) = split_by(&e) {
            return EndSplit::Split(w);
        }
    }
    EndSplit::Unknown
}

/// A proper non-zero kernel of some polynomial in `e`, if `e`'s minimal
/// polynomial is reducible.
fn split_by(e: &FpMatrix) -> Option<Subspace> {
    let f = e.field();
    let m = poly::minimal_polynomial(e);
    if m.len() <= 2 {
        return None;
    }
    let proper = |k: Subspace| (!k.is_zero() && !k.is_full()).then_some(k);
    let dm = poly::derivative(f, &m);
    if dm.is_empty() {
        // m(x) = r(x)^p, so r(E) is non-zero and nilpotent
        let r: Poly = m.iter().step_by(f.p() as usize).copied().collect();
        return proper(Subspace::kernel(&poly::eval_matrix(f, &r, e)));
    }
    let g = poly::gcd(f, &m, &dm);
    if g.len() > 1 {
        return proper(Subspace::kernel(&poly::eval_matrix(f, &g, e)));
    }
    // square-free: the Berlekamp subalgebra of F_p[x]/(m)
    let n = m.len() - 1;
    let xp = poly::pow_mod(f, &vec![0, 1], f.p() as u64, &m);
    let mut q = FpMatrix::zeros(f, n, n);
    let mut row: Poly = vec![1];
    for i in 0..n {
        for (j, &c) in row.iter().enumerate() {
            q.set(i, j, c);
        }
        row = poly::rem(f, &poly::mul(f, &row, &xp), &m);
    }
    let fixed = Subspace::kernel(&q.minus_scalar(1));
    let h = fixed
        .basis_vectors()
        .into_iter()
        .map(poly::trim)
        .find(|h| h.len() > 1)?;
    let hm = poly::eval_matrix(f, &h, e);
    f.nonzero()
        .chain(std::iter::once(0))
        .find_map(|c| proper(Subspace::kernel(&hm.minus_scalar(c))))
}

/// A simple submodule of `V` contained in the submodule `W`, by repeated
/// splitting. Requires `p` coprime to `|G|` for the result to be certified.
pub(crate) fn simple_inside(v: &GModule, mut w: Subspace) -> Subspace {
    loop {
        let sub = v.submodule(&w).expect("invariant subspace");
        let inner = match endomorphism_split(&sub, w.dim() as u64) {
            EndSplit::Split(inner) => Some(inner),
            EndSplit::Local => None,
            EndSplit::Unknown => match exhaustive_simplicity(&sub) {
                Ok(found) => found,
                Err(_) => match is_simple(&sub) {
                    Simplicity::NotSimple(inner) => Some(inner),
                    _ => None,
                },
            },
        };
        match inner {
            Some(inner) => w = w.lift(&inner),
            None => return w,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::tests::q8_module;

    #[test]
    fn natural_q8_is_simple() {
        let v = q8_module();
        assert_eq!(is_simple(&v), Simplicity::Simple);
        assert_eq!(exhaustive_simplicity(&v).unwrap(), None);
    }

    #[test]
    fn trivial_module_splits() {
        let v = q8_module();
        let t = GModule::trivial(v.group().clone(), 2);
        assert!(matches!(is_simple(&t), Simplicity::NotSimple(w) if w.dim() == 1));
        let sum = v.direct_sum(&v).unwrap();
        match is_simple(&sum) {
            Simplicity::NotSimple(w) => assert!(sum.is_submodule(&w)),
            other => panic!("{other:?}"),
        }
    }
}
