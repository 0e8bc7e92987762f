//! Finitely generated matrix groups over `F_p`.
//!
//! Every group is held as its full element list, enumerated breadth-first
//! from the identity by right multiplication with the generators. The
//! breadth-first tree doubles as a word for each element, which is how
//! homomorphisms and module actions are extended from generators.

mod conjugacy;
mod hom;
mod quotient;
mod recognize;
mod subgroups;

use std::collections::HashMap;
use std::sync::Arc;

pub use conjugacy::{conjugacy_classes, is_rational, ConjugacyClasses, RationalityCheck};
pub use hom::{core, Homomorphism};
pub use quotient::Quotient;
pub use recognize::{recognize, GroupName};
pub use subgroups::{all_subgroups, SUBGROUP_CAP};

use crate::algebra::{FpMatrix, PrimeField, Subspace};
use crate::error::{Error, Result};

/// Default closure cap.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone)]
pub struct FiniteGroup {
    field: PrimeField,
    degree: usize,
    generators: Vec<FpMatrix>,
    elements: Vec<FpMatrix>,
    index: HashMap<FpMatrix, usize>,
    /// `elements[i] = elements[parent] * generators[gen]` for `tree[i] = Some((parent, gen))`.
    tree: Vec<Option<(usize, usize)>>,
    generator_index: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators`, failing once more
    /// than `cap` elements appear.
    pub fn generate(field: PrimeField, degree: usize, generators: Vec<FpMatrix>, cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch(field.p(), g.p()));
            }
            if g.rows() != degree || g.cols() != degree {
                return Err(Error::DimensionMismatch(format!(
                    "generator {} is {}x{}, expected {degree}x{degree}",
                    i + 1,
                    g.rows(),
                    g.cols()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::NotInvertible {
                    index: i + 1,
                    p: field.p(),
                });
            }
        }
        let identity = FpMatrix::identity(field, degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0);
        let mut tree = vec![None];
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in generators.iter().enumerate() {
                let next = &elements[head] * g;
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    tree.push(Some((head, gi)));
                }
            }
            head += 1;
        }
        let generator_index = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            field,
            degree,
            generators,
            elements,
            index,
            tree,
            generator_index,
        })
    }

    /// Shorthand for [`FiniteGroup::generate`] with at least one generator.
    pub fn from_generators(generators: Vec<FpMatrix>, cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::DimensionMismatch("no generators; degree unknown".into()))?;
        let (field, degree) = (first.field(), first.rows());
        Self::generate(field, degree, generators, cap)
    }

    pub fn trivial(field: PrimeField, degree: usize) -> Self {
        Self::generate(field, degree, Vec::new(), 1).expect("trivial group")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[FpMatrix] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_index
    }

    pub fn elements(&self) -> &[FpMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &FpMatrix {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, m: &FpMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &FpMatrix) -> bool {
        self.index.contains_key(m)
    }

    /// Breadth-first parent pointer of an element.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.tree[i]
    }

    /// Generator word (indices into `generators`) evaluating to element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((parent, g)) = self.tree[i] {
            w.push(g);
            i = parent;
        }
        w.reverse();
        w
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = &self.elements[a] * &self.elements[b];
        self.index[&m]
    }

    pub fn inv(&self, a: usize) -> usize {
        let m = self.elements[a].inverse().expect("group elements are invertible");
        self.index[&m]
    }

    /// `a^-1 * x * a`.
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        let ai = self.elements[a].inverse().unwrap();
        let m = &(&ai * &self.elements[x]) * &self.elements[a];
        self.index[&m]
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        self.index[&self.elements[a].pow(e)]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        element_order(&self.elements[a])
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| &(a * b) == &(b * a)))
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order())
            .map(|i| self.element_order(i))
            .fold(1, |acc, o| acc / crate::algebra::gcd(acc, o) * o)
    }

    /// Number of elements of each order, sorted by order.
    pub fn order_histogram(&self) -> Vec<(u64, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for i in 0..self.order() {
            *counts.entry(self.element_order(i)).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Extends per-generator data to every element along the breadth-first tree.
    pub fn extend<T: Clone>(&self, identity: T, images: &[T], mul: impl Fn(&T, &T) -> T) -> Vec<T> {
        assert_eq!(images.len(), self.generators.len());
        let mut out: Vec<T> = Vec::with_capacity(self.order());
        out.push(identity);
        for i in 1..self.order() {
            let (parent, g) = self.tree[i].unwrap();
            let v = mul(&out[parent], &images[g]);
            out.push(v);
        }
        out
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.order() <= other.order()
            && other.order() % self.order() == 0
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// Same element set.
    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.generators.iter().all(|g| other.contains(g))
    }

    /// Sorted indices (in `parent`) of this subgroup's elements.
    pub fn indices_in(&self, parent: &FiniteGroup) -> Result<Vec<usize>> {
        let mut idx: Vec<usize> = self
            .elements
            .iter()
            .map(|m| parent.index_of(m).ok_or(Error::NotAnElement))
            .collect::<Result<_>>()?;
        idx.sort_unstable();
        Ok(idx)
    }

    /// Closure of a set of elements (by index) inside this group, returned
    /// as sorted indices.
    pub fn closure_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        members
    }

    /// Subgroup with exactly the given element set; generators are chosen
    /// greedily in the order given.
    pub fn subgroup(&self, members: &[usize]) -> Result<FiniteGroup> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::NotASubgroup);
        }
        let mut gens: Vec<usize> = Vec::new();
        let mut current = vec![0usize];
        for &m in members {
            if current.binary_search(&m).is_err() {
                gens.push(m);
                current = self.closure_indices(&gens);
                if current.len() > sorted.len() {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        if current != sorted {
            return Err(Error::NotASubgroup);
        }
        let matrices = gens.iter().map(|&i| self.elements[i].clone()).collect();
        FiniteGroup::generate(self.field, self.degree, matrices, sorted.len())
    }

    /// Subgroup generated by the given elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<FiniteGroup> {
        let matrices = gens.iter().map(|&i| self.elements[i].clone()).collect();
        FiniteGroup::generate(self.field, self.degree, matrices, self.order())
    }

    /// Subgroup of elements satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Result<FiniteGroup> {
        let members: Vec<usize> = (0..self.order()).filter(|&i| keep(i)).collect();
        self.subgroup(&members)
    }

    pub fn into_arc(self) -> Arc<FiniteGroup> {
        Arc::new(self)
    }

    /// `q` with `|G| = q^a`, if the order is a prime power greater than 1.
    pub fn prime_power_base(&self) -> Option<u64> {
        prime_power_base(self.order() as u64)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroup(order {}, degree {} over F{}, {} generators)",
            self.order(),
            self.degree,
            self.p(),
            self.generators.len()
        )
    }
}

pub fn element_order(g: &FpMatrix) -> u64 {
    let mut x = g.clone();
    let mut k = 1;
    while !x.is_identity() {
        x = &x * g;
        k += 1;
    }
    k
}

pub fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let q = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    while m % q == 0 {
        m /= q;
    }
    (m == 1).then_some(q)
}

/// `C_G(X)` for a set of element indices.
pub fn centralizer(group: &FiniteGroup, xs: &[usize]) -> Result<FiniteGroup> {
    group.filter(|g| {
        xs.iter().all(|&x| {
            let a = group.element(g);
            let b = group.element(x);
            &(a * b) == &(b * a)
        })
    })
}

/// `N_G(H)` for a subgroup `H` whose elements lie in `G`.
pub fn normalizer(group: &FiniteGroup, sub: &FiniteGroup) -> Result<FiniteGroup> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::NotASubgroup);
    }
    group.filter(|g| {
        let gm = group.element(g);
        let gi = gm.inverse().unwrap();
        sub.generators().iter().all(|h| sub.contains(&(&(&gi * h) * gm)))
    })
}

/// `N_G(W) = {g : W g = W}` for the linear action given per element.
pub fn setwise_stabilizer(group: &FiniteGroup, action: &[FpMatrix], w: &Subspace) -> Result<FiniteGroup> {
    assert_eq!(action.len(), group.order());
    group.filter(|g| w.is_invariant_under(&action[g]))
}

/// `C_G(A) = {g : a g = a for all a in A}` for the linear action given per element.
pub fn pointwise_stabilizer(group: &FiniteGroup, action: &[FpMatrix], vectors: &[Vec<u32>]) -> Result<FiniteGroup> {
    assert_eq!(action.len(), group.order());
    group.filter(|g| vectors.iter().all(|a| action[g].apply(a) == *a))
}

/// Permutation group on `n` points from image lists, as permutation matrices.
pub fn permutation_group(field: PrimeField, n: usize, perms: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::with_capacity(perms.len());
    for perm in perms {
        validate_permutation(perm, n)?;
        gens.push(FpMatrix::permutation(field, perm));
    }
    FiniteGroup::generate(field, n, gens, cap)
}

pub fn validate_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "{perm:?} has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n || seen[x] {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection")));
        }
        seen[x] = true;
    }
    Ok(())
}
