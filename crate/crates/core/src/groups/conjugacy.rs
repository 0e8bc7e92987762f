use serde::Serialize;

use super::FiniteGroup;
use crate::algebra::gcd;

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    /// First element (in group order) of each class.
    pub reps: Vec<usize>,
    /// Class id of every element, indexed by element index.
    pub class_of: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn members(&self, class: usize) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&i| self.class_of[i] == class)
            .collect()
    }
}

/// Orbits of conjugation, found by closing each class under conjugation by generators.
pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyClasses {
    let n = group.order();
    let gens = group.generators();
    let gen_inv: Vec<_> = gens.iter().map(|g| g.inverse().unwrap()).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(start);
        class_of[start] = id;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = group.element(queue[head]);
            for (g, gi) in gens.iter().zip(&gen_inv) {
                let y = &(gi * x) * g;
                let yi = group.index_of(&y).expect("conjugate lies in group");
                if class_of[yi] == usize::MAX {
                    class_of[yi] = id;
                    queue.push(yi);
                }
            }
            head += 1;
        }
        sizes.push(queue.len());
    }
    ConjugacyClasses { reps, class_of, sizes }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityCheck {
    pub rational: bool,
    /// `(element index, exponent k)` with `g^k` not conjugate to `g`.
    pub witness: Option<(usize, u64)>,
}

/// Every generator of every cyclic subgroup `<g>` is conjugate to `g`.
pub fn is_rational(group: &FiniteGroup) -> RationalityCheck {
    let classes = conjugacy_classes(group);
    rationality_from_classes(group, &classes)
}

pub(crate) fn rationality_from_classes(group: &FiniteGroup, classes: &ConjugacyClasses) -> RationalityCheck {
    for (c, &g) in classes.reps.iter().enumerate() {
        let order = group.element_order(g);
        let gm = group.element(g);
        let mut power = gm.clone();
        for k in 2..order {
            power = &power * gm;
            if gcd(k, order) != 1 {
                continue;
            }
            let idx = group.index_of(&power).unwrap();
            if classes.class_of[idx] != c {
                return RationalityCheck {
                    rational: false,
                    witness: Some((g, k)),
                };
            }
        }
    }
    RationalityCheck {
        rational: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FpMatrix, PrimeField};
    use crate::groups::DEFAULT_CAP;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn q8() -> FiniteGroup {
        let f = f5();
        FiniteGroup::from_generators(
            vec![
                FpMatrix::from_rows(f, &[[2, 0], [0, 3]]),
                FpMatrix::from_rows(f, &[[0, 1], [4, 0]]),
            ],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = FiniteGroup::from_generators(vec![FpMatrix::diagonal(f5(), &[2, 3])], DEFAULT_CAP).unwrap();
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.len(), 4);
        assert!(cc.sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn q8_has_five_classes() {
        let cc = conjugacy_classes(&q8());
        assert_eq!(cc.len(), 5);
        let mut sizes = cc.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn rationality_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let c2 = FiniteGroup::from_generators(vec![FpMatrix::from_rows(f3, &[[2]])], DEFAULT_CAP).unwrap();
        assert!(is_rational(&c2).rational);

        let f7 = PrimeField::new(7).unwrap();
        let c3 = FiniteGroup::from_generators(vec![FpMatrix::from_rows(f7, &[[2]])], DEFAULT_CAP).unwrap();
        let check = is_rational(&c3);
        assert!(!check.rational);
        let (g, k) = check.witness.unwrap();
        assert_eq!(c3.element_order(g), 3);
        assert_eq!(k, 2);

        assert!(is_rational(&q8()).rational);

        let c4 = FiniteGroup::from_generators(vec![FpMatrix::diagonal(f5(), &[2, 3])], DEFAULT_CAP).unwrap();
        assert!(!is_rational(&c4).rational);
    }
}
