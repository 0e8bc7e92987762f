//! Named groups and modules: quaternion groups, `Q_8 <= SL(2,5)`, semidirect
//! and wreath products, and the embedding of `G` into `(H/C) wr S_n`.

use std::sync::Arc;

use crate::algebra::{FpMatrix, PrimeField};
use crate::error::{Error, Result};
use crate::gmodules::{GModule, InductionData};
use crate::groups::{core, permutation_group, validate_permutation, FiniteGroup, Homomorphism, Quotient};

pub fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

/// `i = diag(2, 3)` and `j = [[0, 1], [4, 0]]` over `F_5`.
pub fn q8_generators() -> Vec<FpMatrix> {
    let f = f5();
    vec![
        FpMatrix::from_rows(f, &[[2, 0], [0, 3]]),
        FpMatrix::from_rows(f, &[[0, 1], [4, 0]]),
    ]
}

/// `Q_8` inside `SL(2,5)` with its natural module.
pub fn q8_sl25() -> GModule {
    let g = FiniteGroup::from_generators(q8_generators(), 8).expect("Q_8 has order 8");
    GModule::natural(Arc::new(g))
}

/// `Q_{2^m}`: the 2-dimensional model for `m = 3`, otherwise the right
/// regular representation on the normal forms `a^x b^y`, as permutation
/// matrices over `F_5`.
pub fn quaternion(m: u32) -> Result<FiniteGroup> {
    if m < 3 {
        return Err(Error::OutOfRange(format!("quaternion groups need m >= 3, got {m}")));
    }
    if m == 3 {
        return FiniteGroup::from_generators(q8_generators(), 8);
    }
    if m > 12 {
        return Err(Error::OutOfRange(format!(
            "m = {m} is beyond the regular-representation range"
        )));
    }
    let n = 1usize << (m - 1);
    let index = |x: usize, y: usize| y * n + x;
    let mut right_a = vec![0; 2 * n];
    let mut right_b = vec![0; 2 * n];
    for y in 0..2 {
        for x in 0..n {
            // a^x b a = a^(x-1) b  and  a^x b b = a^(x + n/2)
            right_a[index(x, y)] = if y == 0 {
                index((x + 1) % n, 0)
            } else {
                index((x + n - 1) % n, 1)
            };
            right_b[index(x, y)] = if y == 0 { index(x, 1) } else { index((x + n / 2) % n, 0) };
        }
    }
    permutation_group(f5(), 2 * n, &[right_a, right_b], 2 * n)
}

/// `V x| G` as affine matrices `[[rho(g), 0], [v, 1]]`, with the pieces needed
/// to certify its structure.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub group: FiniteGroup,
    /// Dimension of `V`.
    pub dim: usize,
    /// The normal subgroup of translations `[[1, 0], [v, 1]]`.
    pub translations: FiniteGroup,
    /// The complement `[[rho(g), 0], [0, 1]]` (with the faithful extra block
    /// when `rho` has a kernel).
    pub complement: FiniteGroup,
}

impl Semidirect {
    /// The translation part of an element.
    pub fn translation_of(&self, m: &FpMatrix) -> Vec<u32> {
        m.row(self.dim)[..self.dim].to_vec()
    }

    /// The linear part of an element.
    pub fn linear_of(&self, m: &FpMatrix) -> FpMatrix {
        let d = self.dim;
        let rows: Vec<Vec<u32>> = (0..d).map(|i| m.row(i)[..d].to_vec()).collect();
        FpMatrix::from_vectors(m.field(), d, &rows)
    }
}

fn affine(linear: &FpMatrix, translation: &[u32], extra: Option<&FpMatrix>) -> FpMatrix {
    let f = linear.field();
    let d = linear.rows();
    let e = extra.map_or(0, |x| x.rows());
    let mut m = FpMatrix::zeros(f, d + 1 + e, d + 1 + e);
    for i in 0..d {
        for j in 0..d {
            m.set(i, j, linear.get(i, j));
        }
    }
    for (j, &t) in translation.iter().enumerate() {
        m.set(d, j, t);
    }
    m.set(d, d, 1);
    if let Some(x) = extra {
        for i in 0..e {
            for j in 0..e {
                m.set(d + 1 + i, d + 1 + j, x.get(i, j));
            }
        }
    }
    m
}

/// `V x| G`. When `V` is not faithful the group's own matrices ride along in
/// an extra diagonal block so the complement is a copy of `G` itself.
pub fn semidirect(v: &GModule, cap: usize) -> Result<Semidirect> {
    let f = v.field();
    let d = v.dim();
    let group = v.group();
    let faithful = v.is_faithful();
    let extra_of = |g: &FpMatrix| (!faithful).then(|| g.clone());
    let zero = vec![0; d];
    let complement_gens: Vec<FpMatrix> = v
        .action()
        .iter()
        .zip(group.generators())
        .map(|(a, g)| affine(a, &zero, extra_of(g).as_ref()))
        .collect();
    let id_extra = (!faithful).then(|| FpMatrix::identity(f, group.degree()));
    let translation_gens: Vec<FpMatrix> = (0..d)
        .map(|i| {
            let mut e = zero.clone();
            e[i] = 1;
            affine(&FpMatrix::identity(f, d), &e, id_extra.as_ref())
        })
        .collect();
    let size = d + 1 + id_extra.as_ref().map_or(0, |x| x.rows());
    let mut gens = complement_gens.clone();
    gens.extend(translation_gens.iter().cloned());
    let whole = FiniteGroup::generate(f, size, gens, cap)?;
    let translations = FiniteGroup::generate(f, size, translation_gens, cap)?;
    let complement = FiniteGroup::generate(f, size, complement_gens, cap)?;
    Ok(Semidirect {
        group: whole,
        dim: d,
        translations,
        complement,
    })
}

/// `M = C_5^2 x| Q_8`, order 200.
pub fn m_group() -> Semidirect {
    semidirect(&q8_sl25(), 200).expect("M has order 200")
}

/// `B wr K` for a matrix group `B` of degree `d` and `K <= S_n` given by
/// image lists. Block `i` is carried to block `perm[i]`.
#[derive(Clone, Debug)]
pub struct Wreath {
    pub group: Arc<FiniteGroup>,
    pub blocks: usize,
    pub block_dim: usize,
    pub top: Vec<Vec<usize>>,
}

impl Wreath {
    pub fn module(&self) -> GModule {
        GModule::natural(self.group.clone())
    }
}

pub fn wreath(base: &FiniteGroup, n: usize, perms: &[Vec<usize>], cap: usize) -> Result<Wreath> {
    if n == 0 {
        return Err(Error::OutOfRange("a wreath product needs at least one block".into()));
    }
    for p in perms {
        validate_permutation(p, n)?;
    }
    let f = base.field();
    let d = base.degree();
    let id = FpMatrix::identity(f, d);
    let mut gens = Vec::new();
    for b in base.generators() {
        for i in 0..n {
            let blocks: Vec<&FpMatrix> = (0..n).map(|j| if i == j { b } else { &id }).collect();
            gens.push(FpMatrix::block_diagonal(f, &blocks));
        }
    }
    for p in perms {
        gens.push(block_permutation(f, p, d));
    }
    let group = FiniteGroup::generate(f, n * d, gens, cap)?;
    Ok(Wreath {
        group: Arc::new(group),
        blocks: n,
        block_dim: d,
        top: perms.to_vec(),
    })
}

/// Permutation of `n` blocks of size `d`, block `i` to block `perm[i]`.
pub fn block_permutation(f: PrimeField, perm: &[usize], d: usize) -> FpMatrix {
    let expanded: Vec<usize> = (0..perm.len() * d).map(|k| perm[k / d] * d + k % d).collect();
    FpMatrix::permutation(f, &expanded)
}

/// The map `g -> (t_i g t_{sigma_g(i)}^{-1} C)_i sigma_g` into
/// `(H/C) wr S_n`, realized on `n` blocks of the regular representation of
/// `H/C`, with the checks that make it an embedding modulo the core.
#[derive(Clone, Debug)]
pub struct InductionEmbedding {
    pub data: InductionData,
    pub quotient: Quotient,
    /// Image of every element of `G`.
    pub images: Vec<FpMatrix>,
    pub is_homomorphism: bool,
    pub kernel: FiniteGroup,
    pub core: FiniteGroup,
    pub kernel_is_core: bool,
}

impl InductionEmbedding {
    /// `sigma_g`.
    pub fn permutation(&self, g: usize) -> Vec<usize> {
        self.data.permutation(g)
    }

    /// The coset `t_i g t_{sigma_g(i)}^{-1} C`, as an element index of `H/C`.
    pub fn cocycle(&self, i: usize, g: usize) -> usize {
        let h_elem = self.data.group.element(self.data.cocycle(i, g));
        let h = self.data.subgroup.index_of(h_elem).unwrap();
        self.quotient.projection[h]
    }

    pub fn image_order(&self) -> usize {
        let mut imgs: Vec<&FpMatrix> = self.images.iter().collect();
        imgs.sort();
        imgs.dedup();
        imgs.len()
    }
}

pub fn induction_embedding(
    group: Arc<FiniteGroup>,
    sub: Arc<FiniteGroup>,
    c: &FiniteGroup,
    cap: usize,
) -> Result<InductionEmbedding> {
    let quotient = Quotient::new(&sub, c, cap)?;
    let data = InductionData::new(group.clone(), sub.clone())?;
    let f = group.field();
    let n = data.index();
    let q = quotient.order();
    let mut partial = InductionEmbedding {
        data,
        quotient,
        images: Vec::new(),
        is_homomorphism: false,
        kernel: FiniteGroup::trivial(f, group.degree()),
        core: FiniteGroup::trivial(f, group.degree()),
        kernel_is_core: false,
    };
    let mut images = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let sigma = partial.permutation(g);
        let mut m = FpMatrix::zeros(f, n * q, n * q);
        for (i, &j) in sigma.iter().enumerate() {
            let block = partial.quotient.group.element(partial.cocycle(i, g));
            for r in 0..q {
                for s in 0..q {
                    m.set(i * q + r, j * q + s, block.get(r, s));
                }
            }
        }
        images.push(m);
    }
    let hom = Homomorphism::from_element_images(&group, images)?;
    let is_homomorphism = hom.verify_full_table();
    let kernel = hom.kernel()?;
    let core = core(&group, c)?;
    let kernel_is_core = kernel.same_elements(&core);
    partial.images = hom.images().to_vec();
    partial.is_homomorphism = is_homomorphism;
    partial.kernel = kernel;
    partial.core = core;
    partial.kernel_is_core = kernel_is_core;
    Ok(partial)
}

/// Sign module of `C_2` over `F_3`.
pub fn f3_c2() -> GModule {
    let f = PrimeField::new(3).unwrap();
    let g = FiniteGroup::from_generators(vec![FpMatrix::from_rows(f, &[[2]])], 2).unwrap();
    GModule::natural(Arc::new(g))
}

/// `C_4 = <diag(2, 3)>` on `F_5^2`.
pub fn cyclic4() -> GModule {
    let g = FiniteGroup::from_generators(vec![FpMatrix::diagonal(f5(), &[2, 3])], 4).unwrap();
    GModule::natural(Arc::new(g))
}

/// Generators of the monomial Sylow 2-subgroup `C_4 wr C_2` of `GL(2,5)`.
pub fn sylow2_gl25_generators() -> Vec<FpMatrix> {
    let f = f5();
    vec![
        FpMatrix::diagonal(f, &[2, 1]),
        FpMatrix::from_rows(f, &[[0, 1], [1, 0]]),
    ]
}

pub fn sylow2_gl25() -> FiniteGroup {
    FiniteGroup::from_generators(sylow2_gl25_generators(), 32).unwrap()
}

pub fn gl25() -> FiniteGroup {
    let f = f5();
    FiniteGroup::from_generators(
        vec![
            FpMatrix::from_rows(f, &[[1, 1], [0, 1]]),
            FpMatrix::from_rows(f, &[[1, 0], [1, 1]]),
            FpMatrix::diagonal(f, &[2, 1]),
        ],
        480,
    )
    .unwrap()
}
