use std::sync::Arc;

use serde::Serialize;

use super::checks::{all_pass, m_certificate};
use super::drivers::prop34_case;
use super::{CaseReport, Certificate, Expect, Status};
use crate::algebra::{FpMatrix, Subspace};
use crate::constructions::semidirect;
use crate::eigen::has_eigenvector_property;
use crate::error::{Error, Result};
use crate::gmodules::{decompose_simple, GModule};
use crate::groups::{is_rational, permutation_group, recognize, FiniteGroup, GroupName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Classified,
    HypothesisFailed,
    /// Hypotheses hold but some certificate could not be produced.
    Inconclusive,
}

impl Verdict {
    pub fn status(self) -> Status {
        match self {
            Verdict::Classified => Status::Pass,
            Verdict::HypothesisFailed => Status::Fail,
            Verdict::Inconclusive => Status::Inconclusive,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub subject: String,
    pub verdict: Verdict,
    pub p: u32,
    pub dim: usize,
    pub group_order: usize,
    /// Number of blocks.
    pub n: Option<usize>,
    /// `|K|` for the permutation group `K` induced on the blocks.
    pub k_order: Option<usize>,
    /// Images of `G`'s generators on the blocks, identities dropped.
    pub k_generators: Vec<Vec<usize>>,
    /// Sizes of the orbits of `K` on blocks, ascending.
    pub block_orbits: Vec<usize>,
    pub hypotheses: Vec<Certificate>,
    pub certificates: Vec<Certificate>,
    /// The local analysis of each simple summand.
    pub factors: Vec<CaseReport>,
    pub diagnostics: Vec<String>,
}

struct Block {
    space: Subspace,
    orbit: usize,
    /// Element of `G` carrying the orbit's root block onto this one.
    transport: usize,
}

/// Decides whether `G` and `V` have the shape `Q8 wr K` and
/// `(C5^2 x| Q8) wr K`, producing explicit certificates for it.
pub fn classify_theorem_a(subject: &str, v: &GModule, cap: usize, seed: u64) -> Result<ClassificationReport> {
    let group = v.group();
    let p = v.p();
    let mut hyp = CaseReport::new(subject, Expect::Holds);
    hyp.hypothesis(
        "V is non-zero",
        Status::from_bool(v.dim() > 0),
        format!("dim V = {}", v.dim()),
    );
    hyp.hypothesis(
        "G is a 2-group",
        Status::from_bool(group.order().is_power_of_two()),
        format!("|G| = {}", group.order()),
    );
    let r = is_rational(group);
    let detail = match r.witness {
        Some((g, k)) => format!("element {g} is not conjugate to its power {k}"),
        None => "every element is conjugate to each generator of its cyclic subgroup".into(),
    };
    hyp.hypothesis("G is rational", Status::from_bool(r.rational), detail);
    let faithful = v.is_faithful();
    hyp.hypothesis(
        "V is faithful",
        Status::from_bool(faithful),
        "only the identity acts trivially",
    );
    hyp.hypothesis("p >= 5", Status::from_bool(p >= 5), format!("p = {p}"));
    match has_eigenvector_property(v) {
        Ok(e) => {
            let detail = match &e.failure {
                Some((x, lambda)) => format!("no element sends {x:?} to {lambda} times itself"),
                None => format!("witnessed on all {} line orbits", e.orbit_count),
            };
            hyp.hypothesis("eigenvector property", Status::from_bool(e.holds), detail);
        }
        Err(Error::ScanTooLarge { size, cap }) => {
            hyp.hypothesis(
                "eigenvector property",
                Status::Inconclusive,
                format!("{size} vectors exceed the scan cap {cap}"),
            );
        }
        Err(e) => return Err(e),
    }
    let mut report = ClassificationReport {
        subject: subject.into(),
        verdict: Verdict::Classified,
        p,
        dim: v.dim(),
        group_order: group.order(),
        n: None,
        k_order: None,
        k_generators: Vec::new(),
        block_orbits: Vec::new(),
        hypotheses: hyp.hypotheses.clone(),
        certificates: Vec::new(),
        factors: Vec::new(),
        diagnostics: Vec::new(),
    };
    let hyp = hyp.finish();
    if hyp.outcome != Status::Pass {
        report.verdict = if hyp.outcome == Status::Fail {
            Verdict::HypothesisFailed
        } else {
            Verdict::Inconclusive
        };
        for c in hyp.hypotheses.iter().filter(|c| c.status != Status::Pass) {
            report.diagnostics.push(format!("{}: {}", c.name, c.detail));
        }
        return Ok(report);
    }

    let mut certs = Vec::new();
    let parts = decompose_simple(v)?;
    let mut blocks: Vec<Block> = Vec::new();
    let mut orbit_groups: Vec<FiniteGroup> = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let sub = v.submodule(part)?;
        let image = sub.faithful_quotient()?;
        let label = format!("summand {} of dimension {}", i + 1, part.dim());
        let (case, data) = prop34_case(&label, &image, Expect::Holds, cap, seed)?;
        certs.push(Certificate::new(
            format!("{label}: local structure"),
            case.outcome,
            format!("{} certificates", case.hypotheses.len() + case.conclusions.len()),
        ));
        report.factors.push(case);
        let Some(data) = data else { continue };
        // the image module uses the coordinates of the summand's echelon basis
        let root = part.lift(&data.w);
        let orbit = orbit_groups.len();
        let start = blocks.len();
        blocks.push(Block {
            space: root,
            orbit,
            transport: group.identity(),
        });
        let mut head = start;
        while head < blocks.len() {
            for (k, &s) in group.generator_indices().iter().enumerate() {
                let image = blocks[head].space.image(&v.action()[k]);
                if !blocks[start..].iter().any(|b| b.space == image) {
                    let transport = group.mul(blocks[head].transport, s);
                    blocks.push(Block {
                        space: image,
                        orbit,
                        transport,
                    });
                }
            }
            head += 1;
        }
        orbit_groups.push(FiniteGroup::trivial(v.field(), 2));
        let n_i = blocks.len() - start;
        certs.push(Certificate::new(
            format!("{label}: dimension 2 n_i"),
            Status::from_bool(part.dim() == 2 * n_i),
            format!("n_i = [G : N] = {n_i}"),
        ));
    }
    let n = blocks.len();
    report.n = Some(n);

    let f = v.field();
    let dim_ok = blocks.iter().all(|b| b.space.dim() == 2);
    let total = blocks
        .iter()
        .fold(Subspace::zero(f, v.dim()), |acc, b| acc.sum(&b.space));
    let partition = dim_ok && total.is_full() && 2 * n == v.dim();
    certs.push(Certificate::new(
        "V is the direct sum of n blocks of dimension 2",
        Status::from_bool(partition),
        format!("n = {n}, dim V = {}", v.dim()),
    ));
    certs.push(Certificate::new("p = 5", Status::from_bool(p == 5), format!("p = {p}")));
    if !partition {
        return Ok(finish(report, certs));
    }

    // block permutations of the generators
    let mut perms = Vec::new();
    let mut permuted = true;
    for m in v.action() {
        let perm: Option<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let image = b.space.image(m);
                blocks.iter().position(|c| c.space == image)
            })
            .collect();
        match perm {
            Some(perm) => perms.push(perm),
            None => permuted = false,
        }
    }
    certs.push(Certificate::new(
        "G permutes the blocks",
        Status::from_bool(permuted),
        "each generator maps each block onto a block",
    ));
    if !permuted {
        return Ok(finish(report, certs));
    }
    let k_gens: Vec<Vec<usize>> = perms
        .iter()
        .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
        .cloned()
        .collect();
    let k = permutation_group(f, n, &k_gens, cap)?;
    report.k_order = Some(k.order());
    report.block_orbits = block_orbits(n, &k_gens);
    report.k_generators = k_gens;

    // frames: F_j = F_root rho(t_j)
    let frames: Vec<FpMatrix> = blocks
        .iter()
        .map(|b| {
            let root = blocks.iter().find(|r| r.orbit == b.orbit).unwrap();
            root.space.basis() * v.action_of(b.transport)
        })
        .collect();
    let frame = frames.iter().skip(1).fold(frames[0].clone(), |acc, x| acc.vstack(x));
    let frame_inv = frame.inverse().expect("blocks span V");
    let mut cocycles: Vec<Vec<FpMatrix>> = vec![Vec::new(); orbit_groups.len()];
    let mut monomial = true;
    for (m, perm) in v.action().iter().zip(&perms) {
        let conj = &(&frame * m) * &frame_inv;
        for (j, &target) in perm.iter().enumerate() {
            for col in 0..n {
                let block = sub_block(&conj, j, col);
                if col == target {
                    cocycles[blocks[j].orbit].push(block);
                } else if !block.is_zero() {
                    monomial = false;
                }
            }
        }
    }
    certs.push(Certificate::new(
        "in the transported frames G acts by block monomial matrices",
        Status::from_bool(monomial),
        "frame of each block is the root frame moved by a transport element",
    ));
    let mut q_ok = true;
    for (i, gens) in cocycles.iter_mut().enumerate() {
        gens.retain(|x| !x.is_identity());
        gens.sort();
        gens.dedup();
        let q = if gens.is_empty() {
            FiniteGroup::trivial(f, 2)
        } else {
            FiniteGroup::generate(f, 2, gens.clone(), cap)?
        };
        let name = recognize(&q);
        q_ok &= name == GroupName::Quaternion(8);
        certs.push(Certificate::new(
            format!("orbit {}: block matrices generate Q8", i + 1),
            Status::from_bool(name == GroupName::Quaternion(8)),
            format!("recognized {name}"),
        ));
        orbit_groups[i] = q;
    }
    let base_order = 8usize.checked_pow(n as u32);
    let order_ok = base_order.is_some_and(|b| b * k.order() == group.order());
    certs.push(Certificate::new(
        "|G| = 8^n |K|",
        Status::from_bool(order_ok && faithful),
        format!("|G| = {}, |K| = {}", group.order(), k.order()),
    ));
    certs.push(Certificate::new(
        "G is Q8 wr K",
        Status::from_bool(monomial && q_ok && order_ok),
        "G embeds in the block monomial group with blocks in Q8 and pattern in K, of the same order",
    ));

    let mut blockwise = true;
    for (i, q) in orbit_groups.iter().enumerate() {
        let qmod = GModule::natural(Arc::new(q.clone()));
        let mc = m_certificate(&semidirect(&qmod, cap)?);
        blockwise &= all_pass(&mc);
        certs.push(Certificate::new(
            format!("orbit {}: block translations x| Q8 is C5^2 x| Q8", i + 1),
            Status::from_bool(all_pass(&mc)),
            mc.iter()
                .map(|c| format!("{}: {}", c.name, c.status.label()))
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    let translations_normal = translations_normal(v);
    certs.push(Certificate::new(
        "translations form a normal C5^(2n) with complement G",
        Status::from_bool(translations_normal),
        "conjugating a translation by a generator gives the translation by its image",
    ));
    certs.push(Certificate::new(
        "V x| G is (C5^2 x| Q8) wr K",
        Status::from_bool(blockwise && translations_normal && monomial && q_ok && order_ok),
        "the frame change splits V x| G blockwise, with K permuting the factors",
    ));
    Ok(finish(report, certs))
}

fn finish(mut report: ClassificationReport, certs: Vec<Certificate>) -> ClassificationReport {
    let factors_ok = report.factors.iter().all(|c| c.outcome == Status::Pass);
    report.verdict = if all_pass(&certs) && factors_ok {
        Verdict::Classified
    } else {
        Verdict::Inconclusive
    };
    for c in certs.iter().filter(|c| c.status != Status::Pass) {
        report.diagnostics.push(format!("no certificate: {}", c.name));
    }
    report.certificates = certs;
    report
}

/// The 2x2 block `(i, j)`.
fn sub_block(m: &FpMatrix, i: usize, j: usize) -> FpMatrix {
    let rows: Vec<Vec<u32>> = (0..2).map(|r| m.row(2 * i + r)[2 * j..2 * j + 2].to_vec()).collect();
    FpMatrix::from_vectors(m.field(), 2, &rows)
}

fn block_orbits(n: usize, perms: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            for p in perms {
                let y = p[orbit[head]];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        sizes.push(orbit.len());
    }
    sizes.sort();
    sizes
}

/// `(0, g)^-1 (x, 1) (0, g) = (x g, 1)` checked on affine generator matrices.
fn translations_normal(v: &GModule) -> bool {
    let f = v.field();
    let d = v.dim();
    let affine = |lin: &FpMatrix, t: &[u32]| {
        let mut m = FpMatrix::zeros(f, d + 1, d + 1);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, lin.get(i, j));
            }
        }
        for (j, &x) in t.iter().enumerate() {
            m.set(d, j, x);
        }
        m.set(d, d, 1);
        m
    };
    let id = FpMatrix::identity(f, d);
    v.action().iter().all(|g| {
        let ga = affine(g, &vec![0; d]);
        let gi = ga.inverse().unwrap();
        (0..d).all(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            let conj = &(&gi * &affine(&id, &e)) * &ga;
            conj == affine(&id, &g.apply(&e))
        })
    })
}
