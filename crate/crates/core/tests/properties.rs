use std::sync::Arc;

use proptest::prelude::*;

use evprop_core::algebra::{FpMatrix, PrimeField, Subspace};
use evprop_core::constructions::{q8_sl25, wreath};
use evprop_core::eigen::has_eigenvector_property;
use evprop_core::forms::{perp, BilinearForm};
use evprop_core::gmodules::{
    are_isomorphic, decompose_simple, induce, intertwiners, is_simple, maschke_complement, GModule, InductionData,
    Simplicity,
};
use evprop_core::groups::{all_subgroups, DEFAULT_CAP, SUBGROUP_CAP};

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn matrix(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> FpMatrix {
    let f = PrimeField::new(p).unwrap();
    FpMatrix::new(f, rows, cols, data.into_iter().map(|x| x % p).collect()).unwrap()
}

fn arb_matrix() -> impl Strategy<Value = FpMatrix> {
    (0..PRIMES.len(), 1..6usize, 1..6usize).prop_flat_map(|(i, r, c)| {
        proptest::collection::vec(0..PRIMES[i], r * c).prop_map(move |d| matrix(PRIMES[i], r, c, d))
    })
}

/// `Q8 + Q8 + trivial` over `F5`, a semisimple module with repeated and
/// distinct summands.
fn mixed_module() -> GModule {
    let q8 = q8_sl25();
    let triv = GModule::trivial(q8.group().clone(), 1);
    q8.direct_sum(&q8).unwrap().direct_sum(&triv).unwrap()
}

fn q8_wr_c2() -> GModule {
    wreath(q8_sl25().group(), 2, &[vec![1, 0]], DEFAULT_CAP)
        .unwrap()
        .module()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in arb_matrix()) {
        let kernel = Subspace::kernel(&m);
        prop_assert_eq!(m.rank() + kernel.dim(), m.rows());
        for x in kernel.basis_vectors() {
            prop_assert!(m.apply(&x).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn inverse_is_two_sided(n in 1..6usize, data in proptest::collection::vec(0..5u32, 36)) {
        let m = matrix(5, n, n, data[..n * n].to_vec());
        match m.inverse() {
            Some(inv) => {
                prop_assert!((&m * &inv).is_identity());
                prop_assert!((&inv * &m).is_identity());
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn subspace_dimension_formula(a in proptest::collection::vec(0..3u32, 15), b in proptest::collection::vec(0..3u32, 15)) {
        let f = PrimeField::new(3).unwrap();
        let u = Subspace::row_space(&FpMatrix::new(f, 3, 5, a).unwrap());
        let w = Subspace::row_space(&FpMatrix::new(f, 3, 5, b).unwrap());
        prop_assert_eq!(u.sum(&w).dim() + u.intersection(&w).dim(), u.dim() + w.dim());
    }

    #[test]
    fn maschke_complement_is_invariant(seed in proptest::collection::vec(0..5u32, 5)) {
        let v = mixed_module();
        let w = v.spin(&seed);
        let c = maschke_complement(&v, &w).unwrap();
        prop_assert!(v.is_submodule(&c));
        prop_assert!(w.intersection(&c).is_zero());
        prop_assert_eq!(w.dim() + c.dim(), v.dim());
    }

    #[test]
    fn decomposition_is_direct_into_simples(extra in 0..3usize) {
        let mut v = mixed_module();
        for _ in 0..extra {
            v = v.direct_sum(&q8_sl25()).unwrap();
        }
        let parts = decompose_simple(&v).unwrap();
        let total = parts.iter().fold(Subspace::zero(v.field(), v.dim()), |acc, w| acc.sum(w));
        prop_assert!(total.is_full());
        prop_assert_eq!(parts.iter().map(Subspace::dim).sum::<usize>(), v.dim());
        for w in &parts {
            prop_assert_eq!(is_simple(&v.submodule(w).unwrap()), Simplicity::Simple);
        }
    }

    #[test]
    fn induction_dimension_and_reciprocity(pick in 0..1000usize, natural in any::<bool>()) {
        let v = q8_wr_c2();
        let g = v.group().clone();
        let subs = all_subgroups(&g, SUBGROUP_CAP).unwrap();
        let h = Arc::new(subs[pick % subs.len()].clone());
        let res = v.restrict(h.clone()).unwrap();
        let w = if natural { res } else { GModule::trivial(h.clone(), 1) };
        let data = InductionData::new(g.clone(), h.clone()).unwrap();
        let ind = induce(&w, &data).unwrap();
        prop_assert_eq!(ind.dim(), data.index() * w.dim());
        prop_assert_eq!(data.index() * h.order(), g.order());
        // Hom_G(Ind W, V) = Hom_H(W, Res V)
        let lhs = intertwiners(&ind, &v).unwrap().dim();
        let rhs = intertwiners(&w, &v.restrict(h).unwrap()).unwrap().dim();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn perp_is_an_involution(k in 1..4usize, data in proptest::collection::vec(0..7u32, 36), rows in 0..7usize) {
        let f = PrimeField::new(7).unwrap();
        let n = 2 * k;
        // standard symplectic Gram matrix
        let mut gram = FpMatrix::zeros(f, n, n);
        for i in 0..k {
            gram.set(i, k + i, 1);
            gram.set(k + i, i, 6);
        }
        let b = BilinearForm::new(gram).unwrap();
        let r = rows.min(n);
        let w = Subspace::row_space(&FpMatrix::new(f, r, n, data[..r * n].to_vec()).unwrap());
        let wp = perp(&b, &w).unwrap();
        prop_assert_eq!(w.dim() + wp.dim(), n);
        prop_assert_eq!(perp(&b, &wp).unwrap(), w);
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(data in proptest::collection::vec(0..5u32, 16)) {
        let v = q8_wr_c2();
        let t = matrix(5, 4, 4, data);
        prop_assume!(t.is_invertible());
        let ti = t.inverse().unwrap();
        let action = v.action().iter().map(|g| &(&ti * g) * &t).collect();
        let u = GModule::new(v.group().clone(), 4, action).unwrap();
        prop_assert!(are_isomorphic(&v, &v, 0).unwrap().is_isomorphic());
        prop_assert!(are_isomorphic(&v, &u, 1).unwrap().is_isomorphic());
        prop_assert!(are_isomorphic(&u, &v, 2).unwrap().is_isomorphic());
    }

    #[test]
    fn derived_witnesses_recheck(x in proptest::collection::vec(0..5u32, 4), lambda in 1..5u32) {
        let v = q8_wr_c2();
        let report = has_eigenvector_property(&v).unwrap();
        prop_assert!(report.holds);
        let g = report.witness(&v, &x, lambda).unwrap();
        let f = v.field();
        let expected: Vec<u32> = x.iter().map(|&c| f.mul(c, lambda)).collect();
        prop_assert_eq!(v.action_of(g).apply(&x), expected);
    }
}
