use super::FiniteGroup;
use crate::algebra::FpMatrix;
use crate::error::{Error, Result};

/// A map from an enumerated group into matrices, given on every element.
#[derive(Clone, Debug)]
pub struct Homomorphism<'a> {
    source: &'a FiniteGroup,
    images: Vec<FpMatrix>,
}

/// Groups up to this order are checked on the full multiplication table;
/// beyond it the generator criterion is used.
pub const FULL_TABLE_LIMIT: usize = 2048;

impl<'a> Homomorphism<'a> {
    /// Extends generator images along the breadth-first words. The result is
    /// only a homomorphism if the defining relations hold; see [`Self::is_homomorphism`].
    pub fn from_generator_images(source: &'a FiniteGroup, images: Vec<FpMatrix>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        let degree = images.first().map(|m| m.rows());
        let identity = match degree {
            Some(d) => FpMatrix::identity(images[0].field(), d),
            None => FpMatrix::identity(source.field(), 0),
        };
        let all = source.extend(identity, &images, |a, b| a * b);
        Ok(Self { source, images: all })
    }

    pub fn from_element_images(source: &'a FiniteGroup, images: Vec<FpMatrix>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} elements",
                images.len(),
                source.order()
            )));
        }
        Ok(Self { source, images })
    }

    pub fn source(&self) -> &FiniteGroup {
        self.source
    }

    pub fn image_of(&self, element: usize) -> &FpMatrix {
        &self.images[element]
    }

    pub fn images(&self) -> &[FpMatrix] {
        &self.images
    }

    /// Compares `phi(a) phi(b)` with `phi(ab)` for every pair of elements.
    pub fn verify_full_table(&self) -> bool {
        let g = self.source;
        if !self.images[0].is_identity() {
            return false;
        }
        (0..g.order()).all(|a| {
            (0..g.order()).all(|b| {
                let ab = g.mul(a, b);
                self.images[ab] == &self.images[a] * &self.images[b]
            })
        })
    }

    /// `phi(1) = 1` and `phi(a s) = phi(a) phi(s)` for every element `a` and
    /// generator `s`; by induction on word length this is equivalent to the
    /// full table.
    pub fn verify_generators(&self) -> bool {
        let g = self.source;
        if !self.images[0].is_identity() {
            return false;
        }
        let gens = g.generator_indices();
        (0..g.order()).all(|a| {
            gens.iter().all(|&s| {
                let as_ = g.mul(a, s);
                self.images[as_] == &self.images[a] * &self.images[s]
            })
        })
    }

    pub fn is_homomorphism(&self) -> bool {
        if self.source.order() <= FULL_TABLE_LIMIT {
            self.verify_full_table()
        } else {
            self.verify_generators()
        }
    }

    pub fn kernel(&self) -> Result<FiniteGroup> {
        self.source.filter(|g| self.images[g].is_identity())
    }

    pub fn image_order(&self) -> usize {
        let mut imgs: Vec<&FpMatrix> = self.images.iter().collect();
        imgs.sort();
        imgs.dedup();
        imgs.len()
    }
}

/// Normal core `∩_{g in G} g^-1 C g`, computed from the definition.
pub fn core(group: &FiniteGroup, sub: &FiniteGroup) -> Result<FiniteGroup> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::NotASubgroup);
    }
    let conjugators: Vec<(FpMatrix, FpMatrix)> = group
        .elements()
        .iter()
        .map(|g| (g.clone(), g.inverse().unwrap()))
        .collect();
    // c lies in every g^-1 C g iff g c g^-1 lies in C for every g
    group.filter(|x| {
        let c = group.element(x);
        sub.contains(c) && conjugators.iter().all(|(g, gi)| sub.contains(&(&(g * c) * gi)))
    })
}
