use std::sync::Arc;

use super::GModule;
use crate::algebra::FpMatrix;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// A subgroup `H` of `G` with a right transversal `t_1 = 1, ..., t_n`.
#[derive(Clone, Debug)]
pub struct InductionData {
    pub group: Arc<FiniteGroup>,
    pub subgroup: Arc<FiniteGroup>,
    /// Element indices in `G`.
    pub transversal: Vec<usize>,
    /// Right coset `H t_i` containing each element of `G`.
    pub coset_of: Vec<usize>,
}

impl InductionData {
    /// Transversal chosen greedily in `G`'s breadth-first element order.
    pub fn new(group: Arc<FiniteGroup>, subgroup: Arc<FiniteGroup>) -> Result<Self> {
        let h = subgroup.indices_in(&group)?;
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut transversal = Vec::new();
        for g in 0..group.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &x in &h {
                coset_of[group.mul(x, g)] = transversal.len();
            }
            transversal.push(g);
        }
        Ok(Self {
            group,
            subgroup,
            transversal,
            coset_of,
        })
    }

    /// Checks that the given elements represent every right coset exactly once.
    pub fn from_transversal(
        group: Arc<FiniteGroup>,
        subgroup: Arc<FiniteGroup>,
        transversal: Vec<usize>,
    ) -> Result<Self> {
        let h = subgroup.indices_in(&group)?;
        let mut coset_of = vec![usize::MAX; group.order()];
        for (i, &t) in transversal.iter().enumerate() {
            if t >= group.order() {
                return Err(Error::InvalidTransversal(format!("element {t} out of range")));
            }
            for &x in &h {
                let y = group.mul(x, t);
                if coset_of[y] != usize::MAX {
                    return Err(Error::InvalidTransversal(format!(
                        "representatives {} and {} share a coset",
                        coset_of[y] + 1,
                        i + 1
                    )));
                }
                coset_of[y] = i;
            }
        }
        if coset_of.contains(&usize::MAX) {
            return Err(Error::InvalidTransversal("some coset has no representative".into()));
        }
        Ok(Self {
            group,
            subgroup,
            transversal,
            coset_of,
        })
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    /// `sigma_g` with `t_i g` in `H t_{sigma_g(i)}`.
    pub fn permutation(&self, g: usize) -> Vec<usize> {
        self.transversal
            .iter()
            .map(|&t| self.coset_of[self.group.mul(t, g)])
            .collect()
    }

    /// `t_i g t_{sigma_g(i)}^{-1}`, an element of `H`, as an index in `G`.
    pub fn cocycle(&self, i: usize, g: usize) -> usize {
        let tg = self.group.mul(self.transversal[i], g);
        let j = self.coset_of[tg];
        self.group.mul(tg, self.group.inv(self.transversal[j]))
    }
}

/// `Ind_H^G(W)`: block `i` is `W t_i`, and `g` carries it to block
/// `sigma_g(i)` through `t_i g t_{sigma_g(i)}^{-1}`.
pub fn induce(w: &GModule, data: &InductionData) -> Result<GModule> {
    let h = &data.subgroup;
    if !w.group().same_elements(h) {
        return Err(Error::GroupMismatch);
    }
    let f = w.field();
    let n = data.index();
    let d = w.dim();
    let matrix_of = |g: usize| {
        let sigma = data.permutation(g);
        let mut m = FpMatrix::zeros(f, n * d, n * d);
        for (i, &j) in sigma.iter().enumerate() {
            let x = data.group.element(data.cocycle(i, g));
            let block = w.action_of(w.group().index_of(x).unwrap());
            for r in 0..d {
                for c in 0..d {
                    m.set(i * d + r, j * d + c, block.get(r, c));
                }
            }
        }
        m
    };
    let action = data.group.generator_indices().iter().map(|&g| matrix_of(g)).collect();
    GModule::new(data.group.clone(), n * d, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::tests::q8_module;

    #[test]
    fn induction_from_whole_group() {
        let v = q8_module();
        let data = InductionData::new(v.group().clone(), v.group().clone()).unwrap();
        assert_eq!(data.transversal, vec![0]);
        let ind = induce(&v, &data).unwrap();
        assert!(ind.same_action(&v));
    }

    #[test]
    fn transversal_validation() {
        let v = q8_module();
        let g = v.group().clone();
        let i = g.generator_indices()[0];
        let h = Arc::new(g.subgroup_generated(&[i]).unwrap());
        let data = InductionData::new(g.clone(), h.clone()).unwrap();
        assert_eq!(data.index(), 2);
        assert_eq!(data.transversal[0], 0);
        assert!(InductionData::from_transversal(g.clone(), h.clone(), vec![0, i]).is_err());
        assert!(InductionData::from_transversal(g.clone(), h.clone(), vec![0]).is_err());
        let res = v.restrict(h).unwrap();
        let ind = induce(&res, &data).unwrap();
        assert_eq!(ind.dim(), 4);
    }
}
