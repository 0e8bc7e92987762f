//! Finite-dimensional `F_p G`-modules in the row-vector convention: `G`
//! acts on the right, `v . g = v * rho(g)`.

mod decompose;
mod induction;
mod intertwine;
mod poly;
mod simple;

use std::sync::Arc;

pub use decompose::{decompose_simple, maschke_complement};
pub use induction::{induce, InductionData};
pub use intertwine::{are_isomorphic, endomorphisms, intertwiners, IsoVerdict, ISO_RANDOM_DRAWS, ISO_SCAN_CAP};
pub use simple::{exhaustive_simplicity, is_simple, Simplicity};

use crate::algebra::{EchelonBuilder, FpMatrix, PrimeField, Subspace};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Homomorphism};

#[derive(Clone, Debug)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    dim: usize,
    action: Vec<FpMatrix>,
    elements: Vec<FpMatrix>,
}

impl GModule {
    /// Module from one matrix per generator of `group`. The assignment must
    /// extend to a homomorphism, which is checked against the element table.
    pub fn new(group: Arc<FiniteGroup>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        if action.len() != group.generators().len() {
            return Err(Error::NotAModule(format!(
                "{} matrices for {} generators",
                action.len(),
                group.generators().len()
            )));
        }
        for (i, m) in action.iter().enumerate() {
            if m.field() != group.field() {
                return Err(Error::FieldMismatch(group.p(), m.p()));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {} is {}x{}, expected {dim}x{dim}",
                    i + 1,
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_invertible() {
                return Err(Error::NotInvertible {
                    index: i + 1,
                    p: group.p(),
                });
            }
        }
        let elements = group.extend(FpMatrix::identity(group.field(), dim), &action, |a, b| a * b);
        let hom = Homomorphism::from_element_images(&group, elements)?;
        if !hom.is_homomorphism() {
            return Err(Error::NotAModule(
                "generator matrices do not satisfy the group's relations".into(),
            ));
        }
        let elements = hom.images().to_vec();
        Ok(Self {
            group,
            dim,
            action,
            elements,
        })
    }

    /// The defining module of a matrix group.
    pub fn natural(group: Arc<FiniteGroup>) -> Self {
        let action = group.generators().to_vec();
        let elements = group.elements().to_vec();
        Self {
            dim: group.degree(),
            group,
            action,
            elements,
        }
    }

    pub fn trivial(group: Arc<FiniteGroup>, dim: usize) -> Self {
        let id = FpMatrix::identity(group.field(), dim);
        Self {
            action: vec![id.clone(); group.generators().len()],
            elements: vec![id; group.order()],
            dim,
            group,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.group.field()
    }

    pub fn p(&self) -> u32 {
        self.group.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrices of the generators.
    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }

    /// Matrix of the element with the given index.
    pub fn action_of(&self, element: usize) -> &FpMatrix {
        &self.elements[element]
    }

    pub fn element_actions(&self) -> &[FpMatrix] {
        &self.elements
    }

    /// Kernel of the action.
    pub fn kernel(&self) -> Result<FiniteGroup> {
        self.group.filter(|g| self.elements[g].is_identity())
    }

    pub fn is_faithful(&self) -> bool {
        self.elements.iter().skip(1).all(|m| !m.is_identity())
    }

    /// Smallest invariant subspace containing `seed`.
    pub fn spin(&self, seed: &[u32]) -> Subspace {
        self.spin_many(std::slice::from_ref(&seed.to_vec()))
    }

    /// Smallest invariant subspace containing all `seeds`.
    pub fn spin_many(&self, seeds: &[Vec<u32>]) -> Subspace {
        let mut span = EchelonBuilder::new(self.field(), self.dim);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for s in seeds {
            assert_eq!(s.len(), self.dim, "seed has wrong length");
            if span.insert(s) {
                queue.push(s.clone());
            }
        }
        let mut head = 0;
        while head < queue.len() && span.dim() < self.dim {
            let v = queue[head].clone();
            for m in &self.action {
                let w = m.apply(&v);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
            head += 1;
        }
        span.into_subspace()
    }

    pub fn is_submodule(&self, w: &Subspace) -> bool {
        w.ambient_dim() == self.dim && self.action.iter().all(|m| w.is_invariant_under(m))
    }

    /// The submodule `W`, written in the coordinates of `W`'s echelon basis.
    pub fn submodule(&self, w: &Subspace) -> Result<GModule> {
        if w.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subspace of a different space".into()));
        }
        let action = self
            .action
            .iter()
            .map(|m| w.restrict_map(m))
            .collect::<Result<Vec<_>>>()?;
        let elements = self
            .group
            .extend(FpMatrix::identity(self.field(), w.dim()), &action, |a, b| a * b);
        Ok(Self {
            group: self.group.clone(),
            dim: w.dim(),
            action,
            elements,
        })
    }

    /// Restriction to a subgroup whose elements lie in `G`.
    pub fn restrict(&self, sub: Arc<FiniteGroup>) -> Result<GModule> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(Error::NotASubgroup);
        }
        let action: Vec<FpMatrix> = sub
            .generators()
            .iter()
            .map(|h| self.elements[self.group.index_of(h).unwrap()].clone())
            .collect();
        let elements = sub
            .elements()
            .iter()
            .map(|h| self.elements[self.group.index_of(h).unwrap()].clone())
            .collect();
        Ok(Self {
            group: sub,
            dim: self.dim,
            action,
            elements,
        })
    }

    /// Dual module, acting by the transpose of the inverse.
    pub fn contragredient(&self) -> GModule {
        let dual = |m: &FpMatrix| m.inverse().unwrap().transpose();
        Self {
            group: self.group.clone(),
            dim: self.dim,
            action: self.action.iter().map(dual).collect(),
            elements: self.elements.iter().map(dual).collect(),
        }
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        self.same_group(other)?;
        let f = self.field();
        let join = |a: &FpMatrix, b: &FpMatrix| FpMatrix::block_diagonal(f, &[a, b]);
        Ok(Self {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            action: self.action.iter().zip(&other.action).map(|(a, b)| join(a, b)).collect(),
            elements: self
                .elements
                .iter()
                .zip(&other.elements)
                .map(|(a, b)| join(a, b))
                .collect(),
        })
    }

    /// `rho(G)` as a matrix group; by the first isomorphism theorem it is
    /// `G / ker(rho)`.
    pub fn image_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::generate(self.field(), self.dim, self.action.clone(), self.group.order())
    }

    /// The same space as a faithful module for `rho(G)`.
    pub fn faithful_quotient(&self) -> Result<GModule> {
        Ok(GModule::natural(Arc::new(self.image_group()?)))
    }

    /// Same action matrices on every generator of the same group.
    pub fn same_action(&self, other: &GModule) -> bool {
        self.same_group(other).is_ok() && self.action == other.action
    }

    pub(crate) fn same_group(&self, other: &GModule) -> Result<()> {
        let same = Arc::ptr_eq(&self.group, &other.group)
            || (self.group.generators() == other.group.generators() && self.group.order() == other.group.order());
        if same {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `G`-orbit of a vector, in breadth-first order.
    pub fn orbit(&self, v: &[u32]) -> Vec<Vec<u32>> {
        let mut seen = std::collections::HashSet::new();
        seen.insert(v.to_vec());
        let mut out = vec![v.to_vec()];
        let mut head = 0;
        while head < out.len() {
            let x = out[head].clone();
            for m in &self.action {
                let y = m.apply(&x);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
            head += 1;
        }
        out
    }

    /// `C_G(v)`, the stabilizer of a vector.
    pub fn vector_stabilizer(&self, v: &[u32]) -> Result<FiniteGroup> {
        self.group.filter(|g| self.elements[g].apply(v) == v)
    }

    /// `C_V(X) = {v : v x = v for x in X}` for element indices `X`.
    pub fn fixed_space(&self, xs: &[usize]) -> Subspace {
        // v (x - 1) = 0 for all x  iff  v [x_1 - 1 | x_2 - 1 | ...] = 0
        let mut stacked = FpMatrix::zeros(self.field(), 0, self.dim);
        for &x in xs {
            stacked = stacked.vstack(&self.elements[x].minus_scalar(1).transpose());
        }
        Subspace::kernel(&stacked.transpose())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::groups::DEFAULT_CAP;

    pub(crate) fn q8_module() -> GModule {
        let f = PrimeField::new(5).unwrap();
        let g = FiniteGroup::from_generators(
            vec![
                FpMatrix::from_rows(f, &[[2, 0], [0, 3]]),
                FpMatrix::from_rows(f, &[[0, 1], [4, 0]]),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        GModule::natural(Arc::new(g))
    }

    #[test]
    fn spin_examples() {
        let v = q8_module();
        assert!(v.spin(&[0, 0]).is_zero());
        assert!(v.spin(&[1, 0]).is_full());
    }

    #[test]
    fn relations_are_checked() {
        let v = q8_module();
        let f = v.field();
        let bad = vec![FpMatrix::identity(f, 1), FpMatrix::from_rows(f, &[[2]])];
        assert!(matches!(
            GModule::new(v.group().clone(), 1, bad),
            Err(Error::NotAModule(_))
        ));
        let sign = vec![FpMatrix::from_rows(f, &[[4]]), FpMatrix::identity(f, 1)];
        let m = GModule::new(v.group().clone(), 1, sign).unwrap();
        assert_eq!(m.kernel().unwrap().order(), 4);
        assert!(!m.is_faithful());
    }

    #[test]
    fn contragredient_is_an_involution() {
        let v = q8_module();
        let dd = v.contragredient().contragredient();
        assert!(dd.same_action(&v));
        assert!(v.is_faithful());
    }

    #[test]
    fn restrict_to_whole_group_is_identity() {
        let v = q8_module();
        let r = v.restrict(v.group().clone()).unwrap();
        assert!(r.same_action(&v));
    }

    #[test]
    fn fixed_space_of_identity_is_everything() {
        let v = q8_module();
        assert!(v.fixed_space(&[0]).is_full());
        assert!(v.fixed_space(&[1]).is_zero());
    }
}
