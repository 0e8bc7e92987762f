//! Independent brute-force checks of values the library computes by
//! linear algebra or orbit arguments.

use std::sync::Arc;

use evprop_core::algebra::{vectors, FpMatrix, PrimeField};
use evprop_core::constructions::{cyclic4, f5, gl25, m_group, q8_sl25, quaternion, sylow2_gl25, wreath};
use evprop_core::eigen::{has_eigenvector_property, is_fixed_point_free};
use evprop_core::forms::{invariant_forms, BilinearForm};
use evprop_core::gmodules::{decompose_simple, GModule};
use evprop_core::groups::{conjugacy_classes, is_rational, FiniteGroup, DEFAULT_CAP};
use evprop_core::verify::regular_module;

fn naive_evp(v: &GModule) -> bool {
    let f = v.field();
    vectors::all_vectors(f, v.dim()).skip(1).all(|x| {
        f.nonzero().all(|l| {
            v.element_actions()
                .iter()
                .any(|g| g.apply(&x) == vectors::scale(f, &x, l))
        })
    })
}

fn naive_rational(g: &FiniteGroup) -> bool {
    (0..g.order()).all(|x| {
        let o = g.element_order(x);
        (1..o)
            .filter(|k| evprop_core::algebra::gcd(*k, o) == 1)
            .all(|k| (0..g.order()).any(|t| g.conjugate(x, t) == g.pow(x, k)))
    })
}

fn naive_class_count(g: &FiniteGroup) -> usize {
    let mut seen = vec![false; g.order()];
    let mut count = 0;
    for x in 0..g.order() {
        if !seen[x] {
            count += 1;
            for t in 0..g.order() {
                seen[g.conjugate(x, t)] = true;
            }
        }
    }
    count
}

#[test]
fn gram_scan_matches_solver() {
    let v = q8_sl25();
    let f = v.field();
    let invariant: Vec<Vec<u32>> = vectors::all_vectors(f, 4)
        .filter(|flat| {
            let b = BilinearForm::new(FpMatrix::new(f, 2, 2, flat.clone()).unwrap()).unwrap();
            b.is_invariant_under_all(&v)
        })
        .collect();
    assert_eq!(invariant.len(), 5);
    let space = invariant_forms(&v);
    assert_eq!(space.size(), 5);
    assert!(invariant.iter().all(|x| space.contains(x)));
    for flat in invariant.into_iter().skip(1) {
        let b = BilinearForm::new(FpMatrix::new(f, 2, 2, flat).unwrap()).unwrap();
        assert!(b.is_nonsingular() && b.is_alternating());
    }
}

/// `Q_{2^m} = <diag(z, z^-1), [[0, 1], [-1, 0]]>` over `F_17` with `z` of
/// order `2^(m-1)`.
fn quaternion_f17(m: u32) -> FiniteGroup {
    let f = PrimeField::new(17).unwrap();
    let z = f.pow(3, 16 >> (m - 1));
    assert_eq!(f.order(z).unwrap(), 1 << (m - 1));
    let a = FpMatrix::diagonal(f, &[z as i64, f.inv(z).unwrap() as i64]);
    let b = FpMatrix::from_rows(f, &[[0, 1], [16, 0]]);
    FiniteGroup::from_generators(vec![a, b], DEFAULT_CAP).unwrap()
}

#[test]
fn quaternion_histograms_agree_across_models() {
    for m in 3..=5 {
        let model = quaternion(m).unwrap();
        let other = quaternion_f17(m);
        assert_eq!(model.order(), 1 << m);
        assert_eq!(model.order_histogram(), other.order_histogram(), "m = {m}");
    }
}

#[test]
fn m_histogram() {
    // identity, 24 translations, 25 conjugates of -1, 150 of order 4
    assert_eq!(
        m_group().group.order_histogram(),
        vec![(1, 1), (2, 25), (4, 150), (5, 24)]
    );
}

#[test]
fn rationality_by_brute_force() {
    let q8 = q8_sl25();
    let cases = vec![
        q8.group().as_ref().clone(),
        cyclic4().group().as_ref().clone(),
        m_group().group,
        sylow2_gl25(),
        quaternion(4).unwrap(),
    ];
    for g in &cases {
        assert_eq!(is_rational(g).rational, naive_rational(g), "{g:?}");
    }
    assert!(naive_rational(&cases[0]));
    assert!(!naive_rational(&cases[1]));
    assert!(naive_rational(&cases[2]));
}

#[test]
fn class_counts_by_brute_force() {
    let q8 = q8_sl25();
    let wr = wreath(q8.group(), 2, &[vec![1, 0]], DEFAULT_CAP).unwrap();
    for g in [
        q8.group().as_ref().clone(),
        sylow2_gl25(),
        wr.group.as_ref().clone(),
        gl25(),
    ] {
        assert_eq!(conjugacy_classes(&g).len(), naive_class_count(&g));
    }
    assert_eq!(naive_class_count(q8.group()), 5);
    assert_eq!(naive_class_count(&gl25()), 24);
}

#[test]
fn eigenvector_property_by_brute_force() {
    let q8 = q8_sl25();
    let wr = wreath(q8.group(), 2, &[vec![1, 0]], DEFAULT_CAP).unwrap().module();
    let prod = wreath(q8.group(), 2, &[], DEFAULT_CAP).unwrap().module();
    let trivial = GModule::trivial(q8.group().clone(), 2);
    let expected = [true, true, true, false, false];
    for (v, want) in [q8, wr, prod, cyclic4(), trivial].iter().zip(expected) {
        assert_eq!(naive_evp(v), want);
        assert_eq!(has_eigenvector_property(v).unwrap().holds, want);
    }
}

#[test]
fn fixed_point_freeness_by_brute_force() {
    let q8 = q8_sl25();
    let wr = wreath(q8.group(), 2, &[vec![1, 0]], DEFAULT_CAP).unwrap().module();
    for v in [q8, wr, cyclic4()] {
        let f = v.field();
        let naive = v
            .element_actions()
            .iter()
            .skip(1)
            .all(|g| vectors::all_vectors(f, v.dim()).skip(1).all(|x| g.apply(&x) != x));
        assert_eq!(is_fixed_point_free(&v).fixed_point_free, naive);
    }
}

#[test]
fn regular_module_degrees() {
    // over F5 every simple Q8-module is absolutely simple: four linear
    // characters and one 2-dimensional module, which occurs twice
    let v = regular_module(q8_sl25().group().clone());
    let mut dims: Vec<usize> = decompose_simple(&v).unwrap().iter().map(|w| w.dim()).collect();
    dims.sort();
    assert_eq!(dims, [1, 1, 1, 1, 2, 2]);

    let q16 = regular_module(Arc::new(quaternion(4).unwrap()));
    let parts = decompose_simple(&q16).unwrap();
    let mut faithful: Vec<usize> = parts
        .iter()
        .filter(|w| q16.submodule(w).unwrap().is_faithful())
        .map(|w| w.dim())
        .collect();
    faithful.sort();
    assert_eq!(faithful, [4, 4]);
}

#[test]
fn sylow_and_gl25_orders() {
    assert_eq!(gl25().order(), 480);
    assert_eq!(sylow2_gl25().order(), 32);
    assert_eq!(f5().p(), 5);
}

#[test]
fn subgroups_of_the_sylow_by_brute_force() {
    use evprop_core::groups::{all_subgroups, SUBGROUP_CAP};
    use std::collections::BTreeSet;
    // a subgroup of order 2^k needs at most k generators, so proper
    // subgroups need at most 4 and the whole group is generated by 2
    let g = sylow2_gl25();
    let n = g.order();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                for d in c..n {
                    let mut members = g.closure_indices(&[a, b, c, d]);
                    members.sort();
                    found.insert(members);
                }
            }
        }
    }
    let listed: BTreeSet<Vec<usize>> = all_subgroups(&g, SUBGROUP_CAP)
        .unwrap()
        .iter()
        .map(|h| {
            let mut idx = h.indices_in(&g).unwrap();
            idx.sort();
            idx
        })
        .collect();
    assert_eq!(listed, found);
    assert_eq!(listed.len(), 34);
}
