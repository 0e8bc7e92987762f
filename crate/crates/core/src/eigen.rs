//! Eigenspaces, the eigenvector property and fixed-point-freeness.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{vectors, FpMatrix, PrimeField, Subspace};
use crate::error::{Error, Result};
use crate::forms::{perp, BilinearForm};
use crate::gmodules::GModule;
use crate::groups::FiniteGroup;

/// `V_g(alpha) = {v : v g = alpha v}` for a matrix `g`.
pub fn eigenspace_of(g: &FpMatrix, alpha: u32) -> Result<Subspace> {
    if alpha % g.p() == 0 {
        return Err(Error::ZeroScalar);
    }
    Ok(Subspace::kernel(&g.minus_scalar(alpha)))
}

/// `V (g - alpha)` for a matrix `g`.
pub fn eigenimage_of(g: &FpMatrix, alpha: u32) -> Result<Subspace> {
    if alpha % g.p() == 0 {
        return Err(Error::ZeroScalar);
    }
    Ok(Subspace::row_space(&g.minus_scalar(alpha)))
}

/// Eigenspace of the element with index `g`.
pub fn eigenspace(v: &GModule, g: usize, alpha: u32) -> Result<Subspace> {
    eigenspace_of(v.action_of(g), alpha)
}

pub fn eigenimage(v: &GModule, g: usize, alpha: u32) -> Result<Subspace> {
    eigenimage_of(v.action_of(g), alpha)
}

/// Orbits of `G` on the lines of `V`, each represented by its
/// lexicographically least normalized vector.
#[derive(Clone, Debug)]
pub struct LineOrbits {
    field: PrimeField,
    dim: usize,
    pub reps: Vec<Vec<u32>>,
    pub sizes: Vec<usize>,
    /// Orbit id of each normalized vector, indexed by its code.
    orbit_of: Vec<u32>,
    /// Element carrying the orbit's representative line onto this line.
    transport: Vec<u32>,
}

const UNSEEN: u32 = u32::MAX;

impl LineOrbits {
    pub fn new(v: &GModule) -> Result<Self> {
        let f = v.field();
        let d = v.dim();
        let total = vectors::ensure_exhaustive(f, d, vectors::EXHAUSTIVE_CAP)? as usize;
        let group = v.group();
        let gens = group.generator_indices();
        let mut orbit_of = vec![UNSEEN; total];
        let mut transport = vec![UNSEEN; total];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for point in vectors::projective_points(f, d) {
            let code = vectors::encode(f, &point) as usize;
            if orbit_of[code] != UNSEEN {
                continue;
            }
            let id = reps.len() as u32;
            orbit_of[code] = id;
            transport[code] = 0;
            let mut queue = vec![point.clone()];
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head].clone();
                let tx = transport[vectors::encode(f, &x) as usize] as usize;
                for (m, &s) in v.action().iter().zip(gens) {
                    let (y, _) = vectors::normalize(f, &m.apply(&x)).unwrap();
                    let cy = vectors::encode(f, &y) as usize;
                    if orbit_of[cy] == UNSEEN {
                        orbit_of[cy] = id;
                        transport[cy] = group.mul(tx, s) as u32;
                        queue.push(y);
                    }
                }
                head += 1;
            }
            reps.push(point);
            sizes.push(queue.len());
        }
        Ok(Self {
            field: f,
            dim: d,
            reps,
            sizes,
            orbit_of,
            transport,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// `(orbit id, t, c)` with `rep * rho(t) = c * v`.
    pub fn locate(&self, v: &GModule, x: &[u32]) -> Option<(usize, usize, u32)> {
        assert_eq!(x.len(), self.dim);
        let (line, _) = vectors::normalize(self.field, x)?;
        let code = vectors::encode(self.field, &line) as usize;
        let id = self.orbit_of[code] as usize;
        let t = self.transport[code] as usize;
        let image = v.action_of(t).apply(&self.reps[id]);
        let k = x.iter().position(|&c| c != 0).unwrap();
        let c = self.field.mul(image[k], self.field.inv(x[k]).unwrap());
        Some((id, t, c))
    }
}

/// Outcome of the eigenvector-property scan.
#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub holds: bool,
    /// The primitive root used for witnesses.
    pub alpha: u32,
    /// One entry per line orbit on success: the orbit representative `v`
    /// and an element `g` with `v g = alpha v`.
    pub witnesses: Vec<(Vec<u32>, usize)>,
    /// First failing pair `(v, lambda)` in lexicographic order of `v`, then of `lambda`.
    pub failure: Option<(Vec<u32>, u32)>,
    pub orbit_count: usize,
    #[serde(skip)]
    orbits: Option<Arc<LineOrbits>>,
}

impl EigenReport {
    /// An element `g` with `x g = lambda x`, derived from the orbit witness.
    pub fn witness(&self, v: &GModule, x: &[u32], lambda: u32) -> Option<usize> {
        let f = v.field();
        let lambda = lambda % f.p();
        if lambda == 0 {
            return None;
        }
        if vectors::is_zero(x) || lambda == 1 {
            return Some(0);
        }
        if !self.holds {
            return None;
        }
        let orbits = self.orbits.as_ref()?;
        let (id, t, _) = orbits.locate(v, x)?;
        let g = self.witnesses[id].1;
        // x spans rep * t, so t^-1 g t scales x by alpha
        let group = v.group();
        let conj = group.mul(group.mul(group.inv(t), g), t);
        let k = discrete_log(f, self.alpha, lambda)?;
        Some(group.pow(conj, k))
    }
}

fn discrete_log(f: PrimeField, base: u32, target: u32) -> Option<u64> {
    let mut x = 1;
    for k in 0..f.p() as u64 {
        if x == target {
            return Some(k);
        }
        x = f.mul(x, base);
    }
    None
}

/// Exhaustive check that every non-zero `v` and non-zero `lambda` admit `g`
/// with `v g = lambda v`.
///
/// The scalars realized on a line form a subgroup of `F_p^x` and are
/// constant along orbits, so it suffices to realize a primitive root on one
/// vector per orbit.
pub fn has_eigenvector_property(v: &GModule) -> Result<EigenReport> {
    let f = v.field();
    let alpha = f.primitive_root();
    let orbits = LineOrbits::new(v)?;
    let mut witnesses = Vec::with_capacity(orbits.len());
    for rep in &orbits.reps {
        let target = vectors::scale(f, rep, alpha);
        let found = (0..v.group().order()).find(|&g| v.action_of(g).apply(rep) == target);
        match found {
            Some(g) => witnesses.push((rep.clone(), g)),
            None => {
                let realized: Vec<u32> = (0..v.group().order())
                    .filter_map(|g| {
                        let image = v.action_of(g).apply(rep);
                        let lead = rep.iter().position(|&c| c != 0).unwrap();
                        let c = image[lead];
                        (vectors::scale(f, rep, c) == image).then_some(c)
                    })
                    .collect();
                let lambda = (1..f.p()).find(|l| !realized.contains(l)).unwrap();
                return Ok(EigenReport {
                    holds: false,
                    alpha,
                    witnesses: Vec::new(),
                    failure: Some((rep.clone(), lambda)),
                    orbit_count: orbits.len(),
                    orbits: None,
                });
            }
        }
    }
    Ok(EigenReport {
        holds: true,
        alpha,
        witnesses,
        failure: None,
        orbit_count: orbits.len(),
        orbits: Some(Arc::new(orbits)),
    })
}

/// Pure recheck of every recorded witness.
pub fn verify_witnesses(v: &GModule, report: &EigenReport) -> bool {
    let f = v.field();
    report
        .witnesses
        .iter()
        .all(|(x, g)| v.action_of(*g).apply(x) == vectors::scale(f, x, report.alpha))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub fixed_point_free: bool,
    /// A non-identity element and a non-zero vector it fixes.
    pub witness: Option<(usize, Vec<u32>)>,
}

/// No non-identity element fixes a non-zero vector.
pub fn is_fixed_point_free(v: &GModule) -> FixedPointReport {
    for g in 1..v.group().order() {
        let fixed = Subspace::kernel(&v.action_of(g).minus_scalar(1));
        if let Some(x) = fixed.basis_vectors().pop() {
            return FixedPointReport {
                fixed_point_free: false,
                witness: Some((g, x)),
            };
        }
    }
    FixedPointReport {
        fixed_point_free: true,
        witness: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionFailure {
    NotPrimitive { alpha: u32 },
    NotFixedPointFree { element: usize },
    NoEigenvectorProperty { vector: Vec<u32>, lambda: u32 },
    OddDimension { dim: usize },
    Overlap { first: usize, second: usize },
    NotCovering { covered: u64, nonzero: u64 },
    CountBelowBound { n: usize, bound: u64 },
    InequalityFails { lhs: u64, rhs: u64 },
}

impl std::fmt::Display for PartitionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionFailure::NotPrimitive { alpha } => write!(f, "{alpha} does not generate the unit group"),
            PartitionFailure::NotFixedPointFree { element } => {
                write!(f, "element {element} fixes a non-zero vector")
            }
            PartitionFailure::NoEigenvectorProperty { vector, lambda } => {
                write!(f, "no element scales {vector:?} by {lambda}")
            }
            PartitionFailure::OddDimension { dim } => {
                write!(f, "dim V = {dim} is odd; the even-dimension count needs p >= 5")
            }
            PartitionFailure::Overlap { first, second } => {
                write!(f, "eigenspaces of elements {first} and {second} meet")
            }
            PartitionFailure::NotCovering { covered, nonzero } => {
                write!(f, "eigenspaces cover {covered} of {nonzero} non-zero vectors")
            }
            PartitionFailure::CountBelowBound { n, bound } => {
                write!(f, "n = {n} elements of order p - 1, below the bound {bound}")
            }
            PartitionFailure::InequalityFails { lhs, rhs } => {
                write!(f, "p^(2d) - 1 = {lhs} exceeds n (p^d - 1) = {rhs}")
            }
        }
    }
}

/// Partition of `V \ {0}` by the `alpha`-eigenspaces of the elements of
/// order `p - 1`, with the counting consequences.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub alpha: u32,
    /// Elements of order `p - 1`.
    pub elements: Vec<usize>,
    pub n: usize,
    pub eigenspace_dims: Vec<usize>,
    pub covered: u64,
    pub nonzero: u64,
    pub disjoint: bool,
    pub covers: bool,
    /// `d` with `dim V = 2d`, when the dimension is even.
    pub half_dim: Option<usize>,
    pub failures: Vec<PartitionFailure>,
}

impl PartitionReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn eigen_partition(v: &GModule, alpha: u32) -> Result<PartitionReport> {
    let f = v.field();
    let p = f.p() as u64;
    let alpha = alpha % f.p();
    if alpha == 0 {
        return Err(Error::ZeroScalar);
    }
    let group = v.group();
    let mut failures = Vec::new();
    if f.order(alpha)? != p - 1 {
        failures.push(PartitionFailure::NotPrimitive { alpha });
    }
    let fpf = is_fixed_point_free(v);
    if let Some((element, _)) = fpf.witness {
        failures.push(PartitionFailure::NotFixedPointFree { element });
    }
    let evp = has_eigenvector_property(v)?;
    if let Some((vector, lambda)) = evp.failure {
        failures.push(PartitionFailure::NoEigenvectorProperty { vector, lambda });
    }
    let elements = order_p_minus_one(group);
    let spaces: Vec<Subspace> = elements
        .iter()
        .map(|&s| eigenspace(v, s, alpha))
        .collect::<Result<_>>()?;
    let nonzero = (p as u128).pow(v.dim() as u32) as u64 - 1;
    let covered: u64 = spaces.iter().map(|s| s.size() as u64 - 1).sum();
    let mut disjoint = true;
    'outer: for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            if !spaces[i].intersection(&spaces[j]).is_zero() {
                failures.push(PartitionFailure::Overlap {
                    first: elements[i],
                    second: elements[j],
                });
                disjoint = false;
                break 'outer;
            }
        }
    }
    // disjoint sets whose sizes add up to the whole are a cover
    let covers = disjoint && covered == nonzero;
    if disjoint && !covers {
        failures.push(PartitionFailure::NotCovering { covered, nonzero });
    }
    let n = elements.len();
    let half_dim = (v.dim() % 2 == 0).then_some(v.dim() / 2);
    match half_dim {
        None => failures.push(PartitionFailure::OddDimension { dim: v.dim() }),
        Some(d) => {
            let pd = p.pow(d as u32);
            let lhs = pd * pd - 1;
            let rhs = n as u64 * (pd - 1);
            if lhs > rhs {
                failures.push(PartitionFailure::InequalityFails { lhs, rhs });
            }
            if (n as u64) < pd + 1 {
                failures.push(PartitionFailure::CountBelowBound { n, bound: pd + 1 });
            }
        }
    }
    Ok(PartitionReport {
        alpha,
        eigenspace_dims: spaces.iter().map(Subspace::dim).collect(),
        elements,
        n,
        covered,
        nonzero,
        disjoint,
        covers,
        half_dim,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpClaim {
    pub holds: bool,
    /// `V (s - alpha)`.
    pub image: Subspace,
    /// `V_{s^-1}(alpha)^perp`.
    pub perp: Subspace,
}

/// Compares `V (s - alpha)` with `V_{s^-1}(alpha)^perp`.
pub fn perp_claim_check(v: &GModule, form: &BilinearForm, s: usize, alpha: u32) -> Result<PerpClaim> {
    let image = eigenimage(v, s, alpha)?;
    let inverse_eigen = eigenspace(v, v.group().inv(s), alpha)?;
    let perp = perp(form, &inverse_eigen)?;
    Ok(PerpClaim {
        holds: image == perp,
        image,
        perp,
    })
}

/// Elements of order `p - 1`, the only ones whose eigenvalues can include a
/// primitive root.
pub fn order_p_minus_one(group: &FiniteGroup) -> Vec<usize> {
    let p = group.p() as u64;
    (0..group.order())
        .filter(|&g| group.element_order(g) == p - 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::tests::q8_module;
    use crate::groups::DEFAULT_CAP;

    #[test]
    fn diagonal_eigenspaces() {
        let f = PrimeField::new(5).unwrap();
        let g = FpMatrix::diagonal(f, &[2, 3]);
        assert_eq!(eigenspace_of(&g, 2).unwrap(), Subspace::span(f, 2, &[vec![1, 0]]));
        assert_eq!(eigenimage_of(&g, 2).unwrap(), Subspace::span(f, 2, &[vec![0, 1]]));
        assert!(matches!(eigenspace_of(&g, 5), Err(Error::ZeroScalar)));
        let id = FpMatrix::identity(f, 2);
        assert!(eigenspace_of(&id, 1).unwrap().is_full());
        assert!(eigenimage_of(&id, 1).unwrap().is_zero());
    }

    #[test]
    fn q8_has_the_property() {
        let v = q8_module();
        let report = has_eigenvector_property(&v).unwrap();
        assert!(report.holds);
        assert!(verify_witnesses(&v, &report));
        let f = v.field();
        for x in vectors::all_vectors(f, 2) {
            for lambda in 1..5 {
                let g = report.witness(&v, &x, lambda).unwrap();
                assert_eq!(v.action_of(g).apply(&x), vectors::scale(f, &x, lambda));
            }
        }
        assert!(is_fixed_point_free(&v).fixed_point_free);
    }

    #[test]
    fn trivial_module_fails_at_two() {
        let v = q8_module();
        let t = GModule::trivial(v.group().clone(), 2);
        let report = has_eigenvector_property(&t).unwrap();
        assert!(!report.holds);
        assert_eq!(report.failure, Some((vec![0, 1], 2)));
    }

    #[test]
    fn q8_partition_counts() {
        let v = q8_module();
        let r = eigen_partition(&v, 2).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        assert_eq!(r.n, 6);
        assert_eq!(r.covered, 24);
        assert!(r.eigenspace_dims.iter().all(|&d| d == 1));
    }

    #[test]
    fn cyclic_partition_fails_count() {
        let f = PrimeField::new(5).unwrap();
        let g = Arc::new(FiniteGroup::from_generators(vec![FpMatrix::diagonal(f, &[2, 3])], DEFAULT_CAP).unwrap());
        let v = GModule::natural(g);
        let r = eigen_partition(&v, 2).unwrap();
        assert_eq!(r.n, 2);
        assert!(r
            .failures
            .iter()
            .any(|x| matches!(x, PartitionFailure::CountBelowBound { n: 2, bound: 6 })));
    }
}
