use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_simple, GModule, Simplicity};
use crate::algebra::{solve_linear, FpMatrix, Subspace};
use crate::error::Result;

/// Hom spaces with at most this many elements are scanned exhaustively.
pub const ISO_SCAN_CAP: u128 = 100_000;
/// Random draws from a larger hom space before giving up.
pub const ISO_RANDOM_DRAWS: usize = 1_000;

/// `{T : rho1(g) T = T rho2(g)}`, as a subspace of row-major flattened
/// `dim1 x dim2` matrices. Such `T` are the module maps `v -> v T`.
pub fn intertwiners(v1: &GModule, v2: &GModule) -> Result<Subspace> {
    v1.same_group(v2)?;
    let f = v1.field();
    let (d1, d2) = (v1.dim(), v2.dim());
    let unknowns = d1 * d2;
    let mut equations = Vec::new();
    for (a, b) in v1.action().iter().zip(v2.action()) {
        let mut eq = FpMatrix::zeros(f, unknowns, unknowns);
        for r in 0..d1 {
            for c in 0..d2 {
                let row = r * d2 + c;
                for k in 0..d1 {
                    let x = eq.get(row, k * d2 + c);
                    eq.set(row, k * d2 + c, f.add(x, a.get(r, k)));
                }
                for k in 0..d2 {
                    let x = eq.get(row, r * d2 + k);
                    eq.set(row, r * d2 + k, f.sub(x, b.get(k, c)));
                }
            }
        }
        equations.push(eq);
    }
    Ok(solve_linear(f, unknowns, &equations))
}

/// Reshapes flattened intertwiners back into matrices.
pub(crate) fn as_matrices(space: &Subspace, rows: usize, cols: usize) -> Vec<FpMatrix> {
    space
        .basis_vectors()
        .into_iter()
        .map(|v| FpMatrix::new(space.field(), rows, cols, v).unwrap())
        .collect()
}

/// Basis of `End_G(V)`.
pub fn endomorphisms(v: &GModule) -> Vec<FpMatrix> {
    let space = intertwiners(v, v).expect("same module");
    as_matrices(&space, v.dim(), v.dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An invertible intertwiner.
    Isomorphic(FpMatrix),
    NotIsomorphic,
    /// Sampling found no invertible intertwiner; nothing was proved.
    Inconclusive,
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

pub fn are_isomorphic(v1: &GModule, v2: &GModule, seed: u64) -> Result<IsoVerdict> {
    v1.same_group(v2)?;
    if v1.dim() != v2.dim() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    let space = intertwiners(v1, v2)?;
    let d = v1.dim();
    if space.is_zero() {
        return Ok(if d == 0 {
            IsoVerdict::Isomorphic(FpMatrix::identity(v1.field(), 0))
        } else {
            IsoVerdict::NotIsomorphic
        });
    }
    let f = v1.field();
    let to_matrix = |flat: Vec<u32>| FpMatrix::new(f, d, d, flat).unwrap();
    let basis = space.basis_vectors();
    if let Some(t) = basis.iter().map(|b| to_matrix(b.clone())).find(|t| t.is_invertible()) {
        return Ok(IsoVerdict::Isomorphic(t));
    }
    if space.size() <= ISO_SCAN_CAP {
        return Ok(space
            .vectors()
            .map(to_matrix)
            .find(|t| t.is_invertible())
            .map_or(IsoVerdict::NotIsomorphic, IsoVerdict::Isomorphic));
    }
    // a non-zero map out of a simple module is injective
    if is_simple(v1) == Simplicity::Simple {
        return Ok(IsoVerdict::Isomorphic(to_matrix(basis[0].clone())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_DRAWS {
        let coords: Vec<u32> = (0..space.dim()).map(|_| rng.gen_range(0..f.p())).collect();
        let t = to_matrix(space.combine(&coords));
        if t.is_invertible() {
            return Ok(IsoVerdict::Isomorphic(t));
        }
    }
    Ok(IsoVerdict::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::tests::q8_module;

    #[test]
    fn self_intertwiners_contain_identity() {
        let v = q8_module();
        let ends = endomorphisms(&v);
        assert_eq!(ends.len(), 1);
        assert!(ends[0].is_identity() || ends[0].is_invertible());
        assert!(are_isomorphic(&v, &v, 0).unwrap().is_isomorphic());
    }

    #[test]
    fn natural_vs_trivial() {
        let v = q8_module();
        let t = GModule::trivial(v.group().clone(), 2);
        assert!(intertwiners(&v, &t).unwrap().is_zero());
        assert_eq!(are_isomorphic(&v, &t, 0).unwrap(), IsoVerdict::NotIsomorphic);
    }

    #[test]
    fn self_dual_q8() {
        let v = q8_module();
        let d = v.contragredient();
        match are_isomorphic(&v, &d, 0).unwrap() {
            IsoVerdict::Isomorphic(t) => {
                for (a, b) in v.action().iter().zip(d.action()) {
                    assert_eq!(&(a * &t), &(&t * b));
                }
            }
            other => panic!("expected isomorphic, got {other:?}"),
        }
    }
}
