//! Classification of natural modules of `Q8 wr K` recovers `K`.

use std::time::Instant;

use evprop_core::algebra::PrimeField;
use evprop_core::constructions::{q8_sl25, wreath};
use evprop_core::groups::{permutation_group, DEFAULT_CAP};
use evprop_core::verify::{classify_theorem_a, Verdict};

fn orbit_type(n: usize, perms: &[Vec<usize>]) -> Vec<usize> {
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] == x {
            x
        } else {
            let r = root(c, c[x]);
            c[x] = r;
            r
        }
    }
    for p in perms {
        for (i, &j) in p.iter().enumerate() {
            let (a, b) = (root(&mut comp, i), root(&mut comp, j));
            comp[a] = b;
        }
    }
    let mut sizes = vec![0; n];
    for i in 0..n {
        let r = root(&mut comp, i);
        sizes[r] += 1;
    }
    let mut out: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
    out.sort();
    out
}

fn roundtrip(n: usize, perms: &[Vec<usize>]) -> Verdict {
    let q8 = q8_sl25();
    let v = wreath(q8.group(), n, perms, DEFAULT_CAP).unwrap().module();
    let report = classify_theorem_a("wreath", &v, DEFAULT_CAP, 0).unwrap();
    if report.verdict == Verdict::Classified {
        let k = permutation_group(PrimeField::new(5).unwrap(), n, perms, DEFAULT_CAP).unwrap();
        assert_eq!(report.n, Some(n));
        assert_eq!(report.k_order, Some(k.order()), "{perms:?}");
        assert_eq!(report.block_orbits, orbit_type(n, perms), "{perms:?}");
    }
    report.verdict
}

#[test]
fn small_wreath_products() {
    let start = Instant::now();
    assert_eq!(roundtrip(1, &[]), Verdict::Classified);
    assert_eq!(roundtrip(2, &[]), Verdict::Classified);
    assert_eq!(roundtrip(2, &[vec![1, 0]]), Verdict::Classified);
    assert!(start.elapsed().as_secs() < 120);
}

#[test]
fn rational_tops_in_s4() {
    let tops: Vec<Vec<Vec<usize>>> = vec![
        vec![vec![1, 0, 2, 3]],
        vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]],
        vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
        vec![vec![1, 0, 2, 3], vec![2, 3, 0, 1]],
    ];
    for top in tops {
        assert_eq!(roundtrip(4, &top), Verdict::Classified, "{top:?}");
    }
}

#[test]
fn cyclic_top_is_not_rational() {
    // Q8 wr C4 fails rationality, so the hypotheses reject it
    assert_eq!(roundtrip(4, &[vec![1, 2, 3, 0]]), Verdict::HypothesisFailed);
}
