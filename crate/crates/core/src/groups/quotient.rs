use super::FiniteGroup;
use crate::algebra::FpMatrix;
use crate::error::{Error, Result};

/// `N / C` realized as its regular permutation representation on the cosets of `C`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Coset id of every element of `N` (by `N`'s element index).
    pub coset_of: Vec<usize>,
    /// Quotient element index of every element of `N`.
    pub projection: Vec<usize>,
}

impl Quotient {
    /// Requires `C` normal in `N`; cosets are numbered in `N`'s element order.
    pub fn new(n: &FiniteGroup, c: &FiniteGroup, cap: usize) -> Result<Self> {
        if !c.is_subgroup_of(n) {
            return Err(Error::NotASubgroup);
        }
        for g in n.generators() {
            let gi = g.inverse().unwrap();
            if !c.generators().iter().all(|x| c.contains(&(&(&gi * x) * g))) {
                return Err(Error::NotNormal("C is not normalized by N".into()));
            }
        }
        let c_idx = c.indices_in(n)?;
        let mut coset_of = vec![usize::MAX; n.order()];
        let mut reps = Vec::new();
        for g in 0..n.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in &c_idx {
                coset_of[n.mul(x, g)] = id;
            }
        }
        let k = reps.len();
        if k > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        let perm_of = |g: usize| -> Vec<usize> { reps.iter().map(|&r| coset_of[n.mul(r, g)]).collect() };
        let gens: Vec<FpMatrix> = n
            .generator_indices()
            .iter()
            .map(|&g| FpMatrix::permutation(n.field(), &perm_of(g)))
            .collect();
        let group = FiniteGroup::generate(n.field(), k, gens, cap.max(k))?;
        let projection = (0..n.order())
            .map(|g| {
                group
                    .index_of(&FpMatrix::permutation(n.field(), &perm_of(g)))
                    .expect("image of N lies in the quotient")
            })
            .collect();
        Ok(Self {
            group,
            coset_of,
            projection,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::groups::{recognize, GroupName, DEFAULT_CAP};

    #[test]
    fn q8_mod_center_is_klein() {
        let f = PrimeField::new(5).unwrap();
        let q8 = FiniteGroup::from_generators(
            vec![
                FpMatrix::from_rows(f, &[[2, 0], [0, 3]]),
                FpMatrix::from_rows(f, &[[0, 1], [4, 0]]),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        let z = FiniteGroup::from_generators(vec![FpMatrix::scalar(f, 2, 4)], DEFAULT_CAP).unwrap();
        let q = Quotient::new(&q8, &z, DEFAULT_CAP).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(recognize(&q.group), GroupName::ElementaryAbelian { p: 2, rank: 2 });
        assert_eq!(q.projection[0], 0);
        let trivial = FiniteGroup::trivial(f, 2);
        let q = Quotient::new(&q8, &trivial, DEFAULT_CAP).unwrap();
        assert_eq!(recognize(&q.group), GroupName::Quaternion(8));
    }

    #[test]
    fn non_normal_rejected() {
        let f = PrimeField::new(5).unwrap();
        let g = FiniteGroup::from_generators(
            vec![
                FpMatrix::diagonal(f, &[2, 1]),
                FpMatrix::from_rows(f, &[[0, 1], [1, 0]]),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        let h = FiniteGroup::from_generators(vec![FpMatrix::diagonal(f, &[2, 1])], DEFAULT_CAP).unwrap();
        assert!(matches!(Quotient::new(&g, &h, DEFAULT_CAP), Err(Error::NotNormal(_))));
    }
}
