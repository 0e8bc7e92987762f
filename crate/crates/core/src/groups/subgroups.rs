use std::collections::HashSet;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Default bound on `|G|` for subgroup enumeration.
pub const SUBGROUP_CAP: usize = 256;

/// Every subgroup of `group`, ordered by (order, sorted element indices).
///
/// Starts from the cyclic subgroups and repeatedly adjoins one element to a
/// known subgroup until no new subgroup appears.
pub fn all_subgroups(group: &FiniteGroup, cap: usize) -> Result<Vec<FiniteGroup>> {
    let n = group.order();
    if n > cap {
        return Err(Error::GroupTooLarge { cap });
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| group.mul(a, b)).collect()).collect();
    let words = n.div_ceil(64);
    let to_bits = |members: &[usize]| {
        let mut bits = vec![0u64; words];
        for &m in members {
            bits[m / 64] |= 1 << (m % 64);
        }
        bits
    };
    let has = |bits: &[u64], i: usize| bits[i / 64] >> (i % 64) & 1 == 1;

    // closure of <gens> by right multiplication, which suffices in a finite group
    let closure = |gens: &[usize]| -> Vec<usize> {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &s in gens {
                let z = table[x][s];
                if !seen[z] {
                    seen[z] = true;
                    members.push(z);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        members
    };

    let mut known: HashSet<Vec<u64>> = HashSet::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut queue: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for g in 0..n {
        let cyc = closure(&[g]);
        if known.insert(to_bits(&cyc)) {
            found.push(cyc.clone());
            queue.push((cyc, vec![g]));
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let (h, gens) = queue[head].clone();
        let bits = to_bits(&h);
        for g in 0..n {
            if has(&bits, g) {
                continue;
            }
            let mut more = gens.clone();
            more.push(g);
            let bigger = closure(&more);
            if known.insert(to_bits(&bigger)) {
                found.push(bigger.clone());
                queue.push((bigger, more));
            }
        }
        head += 1;
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found.iter().map(|members| group.subgroup(members)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FpMatrix, PrimeField};
    use crate::groups::DEFAULT_CAP;

    #[test]
    fn small_lattices() {
        let f3 = PrimeField::new(3).unwrap();
        let c2 = FiniteGroup::from_generators(vec![FpMatrix::from_rows(f3, &[[2]])], DEFAULT_CAP).unwrap();
        assert_eq!(all_subgroups(&c2, SUBGROUP_CAP).unwrap().len(), 2);

        let f = PrimeField::new(5).unwrap();
        let q8 = FiniteGroup::from_generators(
            vec![
                FpMatrix::from_rows(f, &[[2, 0], [0, 3]]),
                FpMatrix::from_rows(f, &[[0, 1], [4, 0]]),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        let subs = all_subgroups(&q8, SUBGROUP_CAP).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn cap_enforced() {
        let f = PrimeField::new(5).unwrap();
        let c4 = FiniteGroup::from_generators(vec![FpMatrix::diagonal(f, &[2, 3])], DEFAULT_CAP).unwrap();
        assert!(all_subgroups(&c4, 3).is_err());
    }
}
