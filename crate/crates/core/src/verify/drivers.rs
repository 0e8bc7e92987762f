use std::sync::Arc;

use super::checks::{all_pass, m_certificate, regular_module};
use super::classify::classify_theorem_a;
use super::{CaseReport, DriverReport, Expect, Status};
use crate::algebra::{mult_order, vectors, FpMatrix, Subspace};
use crate::constructions::{cyclic4, f3_c2, induction_embedding, q8_sl25, quaternion, semidirect, sylow2_gl25, wreath};
use crate::eigen::{
    eigen_partition, eigenspace, has_eigenvector_property, is_fixed_point_free, perp_claim_check, verify_witnesses,
    EigenReport, PartitionFailure,
};
use crate::error::{Error, Result};
use crate::forms::{find_nonsingular_invariant, restrict_form, BilinearForm, FormSearch};
use crate::gmodules::{
    are_isomorphic, decompose_simple, induce, intertwiners, is_simple, GModule, InductionData, IsoVerdict, Simplicity,
};
use crate::groups::{
    all_subgroups, is_rational, normalizer, pointwise_stabilizer, recognize, setwise_stabilizer, FiniteGroup,
    GroupName, Quotient, DEFAULT_CAP, SUBGROUP_CAP,
};

/// The objects found by the point-centralizer analysis.
#[derive(Clone, Debug)]
pub struct Pipeline34Data {
    /// The vector whose centralizer was chosen.
    pub vector: Vec<u32>,
    /// A point centralizer of largest order.
    pub c: FiniteGroup,
    /// `C_V(C)`.
    pub w: Subspace,
    /// `N_G(W)`.
    pub n: FiniteGroup,
}

impl Pipeline34Data {
    pub fn quotient_order(&self) -> usize {
        self.n.order() / self.c.order()
    }
}

fn evp_hypothesis(case: &mut CaseReport, v: &GModule) -> Result<Option<EigenReport>> {
    match has_eigenvector_property(v) {
        Err(Error::ScanTooLarge { size, cap }) => {
            case.hypothesis(
                "eigenvector property",
                Status::Inconclusive,
                format!("{size} vectors exceed the scan cap {cap}"),
            );
            Ok(None)
        }
        Err(e) => Err(e),
        Ok(r) => {
            let detail = match &r.failure {
                Some((x, lambda)) => format!("no element sends {x:?} to {lambda} times itself"),
                None if verify_witnesses(v, &r) => format!("witnessed on all {} line orbits", r.orbit_count),
                None => "recorded witnesses failed the recheck".into(),
            };
            let ok = r.holds && verify_witnesses(v, &r);
            case.hypothesis("eigenvector property", Status::from_bool(ok), detail);
            Ok(Some(r))
        }
    }
}

fn form_hypothesis(case: &mut CaseReport, v: &GModule, seed: u64) -> Option<BilinearForm> {
    match find_nonsingular_invariant(v, seed) {
        FormSearch::Found(b) => {
            case.hypothesis(
                "non-singular invariant form",
                Status::Pass,
                format!("Gram {:?}", b.gram().to_rows()),
            );
            Some(b)
        }
        FormSearch::NoneExists => {
            case.hypothesis(
                "non-singular invariant form",
                Status::Fail,
                "every invariant form is singular",
            );
            None
        }
        FormSearch::NotFound => {
            case.hypothesis(
                "non-singular invariant form",
                Status::Inconclusive,
                "none found by sampling",
            );
            None
        }
    }
}

fn rational_hypothesis(case: &mut CaseReport, group: &FiniteGroup) -> bool {
    let r = is_rational(group);
    let detail = match r.witness {
        Some((g, k)) => format!("element {g} is not conjugate to its power {k}"),
        None => "every element is conjugate to each generator of its cyclic subgroup".into(),
    };
    case.hypothesis("group is rational", Status::from_bool(r.rational), detail)
}

fn exponent_of_two(n: usize) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// Symplecticity of an invariant form under the eigenvector property.
/// With `form = None` a non-singular invariant form is searched for.
pub fn remark21_case(
    subject: &str,
    v: &GModule,
    form: Option<BilinearForm>,
    expect: Expect,
    seed: u64,
) -> Result<CaseReport> {
    let mut case = CaseReport::new(subject, expect);
    let p = v.p();
    case.hypothesis("|F| > 3", Status::from_bool(p > 3), format!("|F| = {p}"));
    evp_hypothesis(&mut case, v)?;
    let form = match form {
        Some(b) => {
            let ok = b.dim() == v.dim() && b.is_invariant_under_all(v) && b.is_nonsingular();
            case.hypothesis(
                "non-singular invariant form",
                Status::from_bool(ok),
                format!("given Gram {:?}", b.gram().to_rows()),
            );
            Some(b)
        }
        None => form_hypothesis(&mut case, v, seed),
    };
    if let Some(b) = form {
        if case.hypotheses_hold() {
            // alpha = 2 has alpha^2 != 1 once |F| > 3
            case.conclusion(
                "form is alternating",
                Status::from_bool(b.is_alternating()),
                "zero diagonal and B^T = -B",
            );
        } else {
            case.diagnostic(format!("form alternating: {}", b.is_alternating()));
        }
    }
    Ok(case.finish())
}

pub fn remark21(seed: u64) -> Result<DriverReport> {
    let mut report = DriverReport::new("remark21");
    let q8 = q8_sl25();
    let f = q8.field();
    let j = BilinearForm::new(FpMatrix::from_rows(f, &[[0, 1], [4, 0]]))?;
    report.cases.push(remark21_case(
        "Q8 <= SL(2,5) with J",
        &q8,
        Some(j),
        Expect::Holds,
        seed,
    )?);
    let sign = f3_c2();
    let scalar = BilinearForm::new(FpMatrix::identity(sign.field(), 1))?;
    report.cases.push(remark21_case(
        "sign module of C2 over F3",
        &sign,
        Some(scalar),
        Expect::Rejected,
        seed,
    )?);
    let trivial = GModule::trivial(q8.group().clone(), 2);
    let id = BilinearForm::new(FpMatrix::identity(f, 2))?;
    report.cases.push(remark21_case(
        "trivial Q8 action on F5^2",
        &trivial,
        Some(id),
        Expect::Rejected,
        seed,
    )?);
    Ok(report.finish())
}

/// The lexicographically least non-zero vector whose stabilizer has
/// largest order, found through the orbits on vectors.
fn maximal_point_centralizer(v: &GModule) -> Result<Vec<u32>> {
    let f = v.field();
    let d = v.dim();
    let total = vectors::ensure_exhaustive(f, d, vectors::EXHAUSTIVE_CAP)? as usize;
    let mut seen = vec![false; total];
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut queue = Vec::new();
    for code in 1..total {
        if seen[code] {
            continue;
        }
        seen[code] = true;
        queue.clear();
        queue.push(code as u64);
        let mut head = 0;
        while head < queue.len() {
            let x = vectors::decode(f, d, queue[head]);
            for m in v.action() {
                let c = vectors::encode(f, &m.apply(&x));
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    queue.push(c);
                }
            }
            head += 1;
        }
        // smallest orbit = largest stabilizer; the first vector of an orbit
        // met in code order is its least element
        if best.as_ref().map_or(true, |(size, _)| queue.len() < *size) {
            best = Some((queue.len(), vectors::decode(f, d, code as u64)));
        }
    }
    Ok(best.expect("non-zero space").1)
}

/// Point-centralizer analysis: picks `C = C_G(v)` of largest order and
/// certifies the properties of `W = C_V(C)` and `N = N_G(W)`.
pub fn lemma22_pipeline(
    subject: &str,
    v: &GModule,
    expect: Expect,
    seed: u64,
) -> Result<(CaseReport, Option<Pipeline34Data>)> {
    let mut case = CaseReport::new(subject, expect);
    if !case.hypothesis(
        "V is non-zero",
        Status::from_bool(v.dim() > 0),
        format!("dim V = {}", v.dim()),
    ) {
        return Ok((case.finish(), None));
    }
    let group = v.group();
    let acts = v.element_actions();
    let vector = maximal_point_centralizer(v)?;
    let c = v.vector_stabilizer(&vector)?;
    let c_idx = c.indices_in(group)?;
    let w = v.fixed_space(&c_idx);
    let n = setwise_stabilizer(group, acts, &w)?;
    case.diagnostic(format!(
        "C = C_G({vector:?}) has order {}, dim W = {}, |N| = {}",
        c.order(),
        w.dim(),
        n.order()
    ));

    let cw = pointwise_stabilizer(group, acts, &w.basis_vectors())?;
    let mut each = true;
    if w.size() <= vectors::EXHAUSTIVE_CAP {
        for x in w.vectors().skip(1) {
            if !v.vector_stabilizer(&x)?.same_elements(&c) {
                each = false;
                break;
            }
        }
    } else {
        each = false;
    }
    case.conclusion(
        "C equals C_G(W) and C_G(w) for each non-zero w in W",
        Status::from_bool(cw.same_elements(&c) && each),
        format!("|C_G(W)| = {}", cw.order()),
    );
    let nc = normalizer(group, &c)?;
    case.conclusion(
        "N_G(W) equals N_G(C)",
        Status::from_bool(nc.same_elements(&n)),
        format!("|N_G(C)| = {}", nc.order()),
    );

    let n_arc = Arc::new(n.clone());
    let res = v.restrict(n_arc)?;
    let wmod = res.submodule(&w)?;
    match has_eigenvector_property(v) {
        Ok(r) if r.holds => {
            let rw = has_eigenvector_property(&wmod)?;
            case.conclusion(
                "W has the eigenvector property as an N-module",
                Status::from_bool(rw.holds && verify_witnesses(&wmod, &rw)),
                format!("{} line orbits of N on W", rw.orbit_count),
            );
        }
        Ok(_) => case.diagnostic("V lacks the eigenvector property; the transfer to W is not applicable"),
        Err(e) => case.diagnostic(format!("eigenvector property not decided: {e}")),
    }
    if group.order() % v.p() as usize == 0 {
        case.diagnostic("p divides |G|; the form restriction is not applicable");
    } else {
        match find_nonsingular_invariant(v, seed) {
            FormSearch::Found(b) => {
                let r = restrict_form(&b, &w);
                case.conclusion(
                    "restricted form is non-singular",
                    Status::from_bool(r.is_nonsingular()),
                    format!("Gram on W {:?}", r.gram().to_rows()),
                );
            }
            FormSearch::NoneExists => case.diagnostic("V has no non-singular invariant form; not applicable"),
            FormSearch::NotFound => case.diagnostic("no non-singular invariant form found by sampling"),
        }
    }
    let data = Pipeline34Data { vector, c, w, n };
    Ok((case.finish(), Some(data)))
}

pub fn lemma22(cap: usize, seed: u64) -> Result<DriverReport> {
    let mut report = DriverReport::new("lemma22");
    let q8 = q8_sl25();
    report
        .cases
        .push(lemma22_pipeline("natural Q8 module", &q8, Expect::Holds, seed)?.0);

    let wr = wreath(q8.group(), 2, &[vec![1, 0]], cap)?.module();
    let (mut case, data) = lemma22_pipeline("natural Q8 wr C2 module", &wr, Expect::Holds, seed)?;
    if let Some(d) = data {
        let sizes = (d.c.order(), d.w.dim(), d.n.order());
        case.conclusion(
            "|C| = 8, dim W = 2, |N| = 64",
            Status::from_bool(sizes == (8, 2, 64)),
            format!("(|C|, dim W, |N|) = {sizes:?}"),
        );
    }
    report.cases.push(case.finish());

    let zero = GModule::trivial(q8.group().clone(), 0);
    report
        .cases
        .push(lemma22_pipeline("zero module", &zero, Expect::Rejected, seed)?.0);
    Ok(report.finish())
}

/// Dimension of the faithful simple modules of `Q_{2^m}` over `F_5`
/// predicted by the residue degree of `xi + xi^-1` for `xi` of order `2^(m-1)`.
fn predicted_degree(m: u32) -> Result<u64> {
    Ok(2 * mult_order(5, 1 << (m - 1))?)
}

pub fn remark31_case(m: u32, cap: usize) -> Result<CaseReport> {
    let mut case = CaseReport::new(format!("regular F5 module of Q_{}", 1u64 << m), Expect::Holds);
    if !case.hypothesis(
        "3 <= m <= 4",
        Status::from_bool((3..=4).contains(&m)),
        format!("m = {m}"),
    ) {
        return Ok(case.finish());
    }
    let group = Arc::new(quaternion(m)?);
    if group.order() > cap {
        return Err(Error::GroupTooLarge { cap });
    }
    let reg = regular_module(group);
    let parts = decompose_simple(&reg)?;
    let mut dims = Vec::new();
    let mut faithful = Vec::new();
    let mut all_simple = true;
    for w in &parts {
        let sub = reg.submodule(w)?;
        all_simple &= is_simple(&sub) == Simplicity::Simple;
        dims.push(w.dim());
        if sub.is_faithful() {
            faithful.push(w.dim());
        }
    }
    let total: usize = dims.iter().sum();
    case.conclusion(
        "summands are simple and fill the regular module",
        Status::from_bool(all_simple && total == reg.dim()),
        format!("summand dimensions {dims:?}"),
    );
    let expected = 1usize << (m - 2);
    case.conclusion(
        "faithful simple summands have dimension 2^(m-2)",
        Status::from_bool(!faithful.is_empty() && faithful.iter().all(|&d| d == expected)),
        format!("faithful dimensions {faithful:?}, expected {expected}"),
    );
    let predicted = predicted_degree(m)?;
    case.conclusion(
        "2 ord(5 mod 2^(m-1)) = 2^(m-2)",
        Status::from_bool(predicted == expected as u64),
        format!("{predicted} vs {expected}"),
    );
    Ok(case.finish())
}

pub fn remark31(cap: usize, _seed: u64) -> Result<DriverReport> {
    let mut report = DriverReport::new("remark31");
    for m in [3, 4] {
        report.cases.push(remark31_case(m, cap)?);
    }
    let mut formula = CaseReport::new("degree formula for m = 3, 4, 5", Expect::Holds);
    for m in 3..=5u32 {
        let predicted = predicted_degree(m)?;
        formula.conclusion(
            &format!("m = {m}"),
            Status::from_bool(predicted == 1 << (m - 2)),
            format!("2 ord(5 mod {}) = {predicted}", 1u64 << (m - 1)),
        );
    }
    report.cases.push(formula.finish());
    Ok(report.finish())
}

/// The counting argument for a q-group `S` acting on `V` with the
/// eigenvector property, a non-singular invariant form and no fixed points.
pub fn prop32_case(subject: &str, v: &GModule, expect: Expect, seed: u64) -> Result<CaseReport> {
    let mut case = CaseReport::new(subject, expect);
    let s = v.group();
    let f = v.field();
    let p = v.p();
    let q = s.prime_power_base();
    let q_ok = q.is_some() && s.order() > 1;
    case.hypothesis(
        "S is a q-group",
        Status::from_bool(q_ok),
        format!("|S| = {}", s.order()),
    );
    let q = q.unwrap_or(0);
    case.hypothesis(
        "p differs from q",
        Status::from_bool(q_ok && q != p as u64),
        format!("p = {p}, q = {q}"),
    );
    if !case.hypothesis("p >= 5", Status::from_bool(p >= 5), format!("p = {p}")) {
        case.diagnostic(format!("p = {p} < 5"));
    }
    case.hypothesis(
        "V is non-zero",
        Status::from_bool(v.dim() > 0),
        format!("dim V = {}", v.dim()),
    );
    evp_hypothesis(&mut case, v)?;
    let form = form_hypothesis(&mut case, v, seed);
    let fpf = is_fixed_point_free(v);
    let detail = match &fpf.witness {
        Some((g, x)) => format!("element {g} fixes {x:?}"),
        None => "no non-identity element fixes a non-zero vector".into(),
    };
    case.hypothesis(
        "S acts fixed-point-freely",
        Status::from_bool(fpf.fixed_point_free),
        detail,
    );

    if !case.hypotheses_hold() {
        // computed for the record only; nothing here is claimed
        if v.dim() > 0 && p > 2 {
            if let Ok(part) = eigen_partition(v, f.primitive_root()) {
                for failure in &part.failures {
                    if matches!(
                        failure,
                        PartitionFailure::CountBelowBound { .. } | PartitionFailure::InequalityFails { .. }
                    ) {
                        case.diagnostic(format!("counting step: {failure}"));
                    }
                }
            }
        }
        return Ok(case.finish());
    }
    let form = form.expect("form hypothesis passed");
    case.conclusion(
        "form is alternating",
        Status::from_bool(form.is_alternating()),
        "zero diagonal and B^T = -B",
    );

    let mut perp_pairs = 0;
    let mut perp_ok = true;
    let mut sym_ok = true;
    for g in 0..s.order() {
        for alpha in f.nonzero() {
            perp_ok &= perp_claim_check(v, &form, g, alpha)?.holds;
            perp_pairs += 1;
            let a_inv = f.inv(alpha).unwrap();
            sym_ok &= eigenspace(v, g, alpha)?.dim() == eigenspace(v, g, a_inv)?.dim();
        }
    }
    case.conclusion(
        "V(s - a) = V_{s^-1}(a)^perp for all s, a",
        Status::from_bool(perp_ok),
        format!("{perp_pairs} pairs checked"),
    );
    case.conclusion(
        "dim V_s(a) = dim V_s(a^-1) for all s, a",
        Status::from_bool(sym_ok),
        format!("{perp_pairs} pairs checked"),
    );

    let alpha = f.primitive_root();
    let part = eigen_partition(v, alpha)?;
    case.conclusion(
        "non-zero vectors split into alpha-eigenspaces of order p-1 elements",
        Status::from_bool(part.disjoint && part.covers),
        format!(
            "{} eigenspaces cover {} of {} non-zero vectors",
            part.n, part.covered, part.nonzero
        ),
    );
    for failure in &part.failures {
        case.diagnostic(failure.to_string());
    }
    let n = part.n as u64;
    let Some(d) = part.half_dim else {
        case.conclusion("dim V is even", Status::Fail, format!("dim V = {}", v.dim()));
        return Ok(case.finish());
    };
    case.conclusion("dim V is even", Status::Pass, format!("dim V = 2d with d = {d}"));
    let pd = (p as u64).pow(d as u32);
    case.conclusion(
        "n >= p^d + 1",
        Status::from_bool(n >= pd + 1),
        format!("n = {n}, p^d + 1 = {}", pd + 1),
    );
    let pm1 = p as u64 - 1;
    let k = pm1.is_power_of_two().then(|| pm1.trailing_zeros());
    case.conclusion(
        "q = 2 and p - 1 = 2^k",
        Status::from_bool(q == 2 && k.is_some()),
        format!("q = {q}, p - 1 = {pm1}"),
    );
    let fermat = k.is_some_and(|k| k.is_power_of_two() && p != 3);
    case.conclusion(
        "p is a Fermat prime other than 3",
        Status::from_bool(fermat),
        format!("p = {p}"),
    );
    case.conclusion(
        "k = 2, so p = 5",
        Status::from_bool(k == Some(2) && p == 5),
        format!("k = {k:?}"),
    );

    let name = recognize(s);
    let m = match name {
        GroupName::Quaternion(order) => exponent_of_two(order),
        _ => None,
    };
    case.conclusion(
        "S is generalized quaternion",
        Status::from_bool(m.is_some()),
        format!("recognized {name}"),
    );
    let Some(m) = m else {
        return Ok(case.finish());
    };
    let n_formula = (1u64 << (m - 1)) + 2;
    case.conclusion(
        "n = 2^(m-1) + 2",
        Status::from_bool(n == n_formula),
        format!("n = {n}, m = {m}"),
    );
    let t = decompose_simple(v)?.len();
    case.conclusion(
        "dim V = 2^(m-2) t",
        Status::from_bool(v.dim() == (1 << (m - 2)) * t),
        format!("t = {t} simple summands"),
    );
    case.conclusion(
        "m = 3 and t = 1",
        Status::from_bool(m == 3 && t == 1),
        format!("m = {m}, t = {t}"),
    );
    case.conclusion(
        "S is Q8",
        Status::from_bool(name == GroupName::Quaternion(8)),
        format!("recognized {name}"),
    );
    let sd = semidirect(v, DEFAULT_CAP)?;
    let certs = m_certificate(&sd);
    let detail = certs
        .iter()
        .map(|c| format!("{}: {}", c.name, c.status.label()))
        .collect::<Vec<_>>()
        .join("; ");
    case.conclusion("V x| S is C5^2 x| Q8", Status::from_bool(all_pass(&certs)), detail);
    Ok(case.finish())
}

pub fn prop32(_cap: usize, seed: u64) -> Result<DriverReport> {
    let mut report = DriverReport::new("prop32");
    report
        .cases
        .push(prop32_case("Q8 <= SL(2,5)", &q8_sl25(), Expect::Holds, seed)?);
    report.cases.push(prop32_case(
        "sign module of C2 over F3",
        &f3_c2(),
        Expect::Rejected,
        seed,
    )?);
    report.cases.push(prop32_case(
        "C4 = <diag(2, 3)> on F5^2",
        &cyclic4(),
        Expect::Rejected,
        seed,
    )?);
    Ok(report.finish())
}

/// Local structure of a simple module of a rational 2-group with the
/// eigenvector property.
pub fn prop34_case(
    subject: &str,
    v: &GModule,
    expect: Expect,
    cap: usize,
    seed: u64,
) -> Result<(CaseReport, Option<Pipeline34Data>)> {
    let mut case = CaseReport::new(subject, expect);
    let group = v.group();
    let p = v.p();
    if !case.hypothesis(
        "V is non-zero",
        Status::from_bool(v.dim() > 0),
        format!("dim V = {}", v.dim()),
    ) {
        return Ok((case.finish(), None));
    }
    let simplicity = is_simple(v);
    let (status, detail) = match &simplicity {
        Simplicity::Simple => (Status::Pass, "certified simple".to_string()),
        Simplicity::NotSimple(w) => (Status::Fail, format!("invariant subspace of dimension {}", w.dim())),
        Simplicity::ProbablySimple => (Status::Inconclusive, "no submodule found by sampling".to_string()),
    };
    case.hypothesis("V is simple", status, detail);
    case.hypothesis(
        "G is a 2-group",
        Status::from_bool(group.order().is_power_of_two()),
        format!("|G| = {}", group.order()),
    );
    rational_hypothesis(&mut case, group);
    evp_hypothesis(&mut case, v)?;
    if !case.hypotheses_hold() {
        return Ok((case.finish(), None));
    }

    let (lemma, data) = lemma22_pipeline(subject, v, Expect::Holds, seed)?;
    for c in lemma.conclusions {
        case.conclusion(&format!("point centralizers: {}", c.name), c.status, c.detail);
    }
    case.diagnostics.extend(lemma.diagnostics);
    let data = data.expect("V is non-zero");
    let n_arc = Arc::new(data.n.clone());

    let quotient = Quotient::new(&data.n, &data.c, cap)?;
    let qname = recognize(&quotient.group);
    case.conclusion(
        "N/C is Q8",
        Status::from_bool(qname == GroupName::Quaternion(8)),
        format!("|N/C| = {}, recognized {qname}", quotient.order()),
    );

    let wmod = v.restrict(n_arc.clone())?.submodule(&data.w)?;
    let wbar = wmod.faithful_quotient()?;
    let same = wbar.group().order() == quotient.order();
    let sd = semidirect(&wbar, cap)?;
    let certs = m_certificate(&sd);
    let detail = certs
        .iter()
        .map(|c| format!("{}: {}", c.name, c.status.label()))
        .collect::<Vec<_>>()
        .join("; ");
    case.conclusion(
        "W x| N/C is C5^2 x| Q8",
        Status::from_bool(same && all_pass(&certs)),
        format!(
            "N acts on W through a group of order {}; {detail}",
            wbar.group().order()
        ),
    );

    let ind_data = InductionData::new(group.clone(), n_arc.clone())?;
    let ind = induce(&wmod, &ind_data)?;
    let (status, detail) = match are_isomorphic(v, &ind, seed)? {
        IsoVerdict::Isomorphic(_) => (Status::Pass, "invertible intertwiner found".to_string()),
        IsoVerdict::NotIsomorphic => (Status::Fail, "no invertible intertwiner exists".to_string()),
        IsoVerdict::Inconclusive => (
            Status::Inconclusive,
            "no invertible intertwiner found by sampling".to_string(),
        ),
    };
    case.conclusion(
        "V is induced from W",
        status,
        format!("[G : N] = {}; {detail}", ind_data.index()),
    );

    let hom_g = intertwiners(&ind, v)?.dim();
    let hom_n = intertwiners(&wmod, &v.restrict(n_arc)?)?.dim();
    case.conclusion(
        "Frobenius reciprocity",
        Status::from_bool(hom_g == hom_n),
        format!("dim Hom_G(Ind W, V) = {hom_g}, dim Hom_N(W, V) = {hom_n}"),
    );

    let line = Subspace::span(v.field(), v.dim(), std::slice::from_ref(&data.vector));
    let h = setwise_stabilizer(group, v.element_actions(), &line)?;
    let lhs = group.order() / data.c.order();
    let rhs = (p as usize - 1) * (group.order() / h.order());
    case.conclusion(
        "[G : C] = (p - 1)[G : H] for H the stabilizer of the line through v",
        Status::from_bool(lhs == rhs),
        format!("{lhs} vs {rhs}"),
    );
    case.conclusion("p = 5", Status::from_bool(p == 5), format!("p = {p}"));
    Ok((case.finish(), Some(data)))
}

pub fn prop34(cap: usize, seed: u64) -> Result<DriverReport> {
    let mut report = DriverReport::new("prop34");
    let q8 = q8_sl25();
    report
        .cases
        .push(prop34_case("natural Q8 module", &q8, Expect::Holds, cap, seed)?.0);
    let wr = wreath(q8.group(), 2, &[vec![1, 0]], cap)?.module();
    report
        .cases
        .push(prop34_case("natural Q8 wr C2 module", &wr, Expect::Holds, cap, seed)?.0);
    report
        .cases
        .push(prop34_case("C4 = <diag(2, 3)> on F5^2", &cyclic4(), Expect::Rejected, cap, seed)?.0);
    Ok(report.finish())
}

pub fn remark35(cap: usize) -> Result<DriverReport> {
    let mut report = DriverReport::new("remark35");
    let q8 = q8_sl25();
    let wr = wreath(q8.group(), 2, &[vec![1, 0]], cap)?;
    let g = wr.group.clone();
    let f = g.field();
    let id = FpMatrix::identity(f, 2);
    let base_gens: Vec<FpMatrix> = g.generators()[..4].to_vec();
    let base = Arc::new(FiniteGroup::from_generators(base_gens.clone(), cap)?);
    // C = the copy of Q8 on the second block
    let second: Vec<FpMatrix> = q8
        .group()
        .generators()
        .iter()
        .map(|x| FpMatrix::block_diagonal(f, &[&id, x]))
        .collect();
    let c = FiniteGroup::from_generators(second, cap)?;

    let mut cases = vec![(
        "G = Q8 wr C2, H = base, C = second factor",
        g.clone(),
        base.clone(),
        c.clone(),
    )];
    cases.push(("G = H = base, C = second factor", base.clone(), base.clone(), c.clone()));
    for (subject, g, h, c) in cases {
        let mut case = CaseReport::new(subject, Expect::Holds);
        let emb = induction_embedding(g.clone(), h.clone(), &c, cap)?;
        case.hypothesis(
            "C is normal in H",
            Status::Pass,
            format!("|H/C| = {}", emb.quotient.order()),
        );
        case.conclusion(
            "homomorphism on the full multiplication table",
            Status::from_bool(emb.is_homomorphism),
            format!("{} products checked", g.order() * g.order()),
        );
        case.conclusion(
            "kernel equals the core of C",
            Status::from_bool(emb.kernel_is_core),
            format!("|kernel| = {}, |core| = {}", emb.kernel.order(), emb.core.order()),
        );
        case.conclusion(
            "image order is [G : core]",
            Status::from_bool(emb.image_order() * emb.core.order() == g.order()),
            format!("image order {}", emb.image_order()),
        );
        report.cases.push(case.finish());
    }
    Ok(report.finish())
}

pub fn theorem_a(cap: usize, seed: u64) -> Result<DriverReport> {
    let mut report = DriverReport::new("theoremA");
    let q8 = q8_sl25();
    let mut inputs = vec![("Q8 <= SL(2,5)".to_string(), q8.clone())];
    inputs.push(("Q8 wr C2".into(), wreath(q8.group(), 2, &[vec![1, 0]], cap)?.module()));
    inputs.push((
        "Q8 x Q8 block diagonal".into(),
        wreath(q8.group(), 2, &[], cap)?.module(),
    ));
    for (subject, v) in inputs {
        let cls = classify_theorem_a(&subject, &v, cap, seed)?;
        let mut case = CaseReport::new(subject, Expect::Holds);
        case.conclusion(
            "classified",
            cls.verdict.status(),
            format!("n = {:?}, |K| = {:?}", cls.n, cls.k_order),
        );
        report.cases.push(case.finish());
        report.classifications.push(cls);
    }
    Ok(report.finish())
}

pub fn gl25scan(cap: usize) -> Result<DriverReport> {
    let mut report = DriverReport::new("gl25scan");
    let sylow = sylow2_gl25();
    let subgroups = all_subgroups(&sylow, SUBGROUP_CAP)?;
    let mut passing: Vec<FiniteGroup> = Vec::new();
    let mut summary = CaseReport::new(
        format!("{} subgroups of a Sylow 2-subgroup", subgroups.len()),
        Expect::Holds,
    );
    let mut cyclic_pass = 0;
    let mut trivial_lambda = None;
    for s in &subgroups {
        let v = GModule::natural(Arc::new(s.clone()));
        let rational = is_rational(s).rational;
        let evp = has_eigenvector_property(&v)?;
        if s.order() == 1 {
            trivial_lambda = evp.failure.as_ref().map(|(_, l)| *l);
        }
        if !(v.is_faithful() && rational && evp.holds) {
            continue;
        }
        if matches!(recognize(s), GroupName::Cyclic(_)) {
            cyclic_pass += 1;
        }
        passing.push(s.clone());
    }
    summary.conclusion(
        "some subgroup passes",
        Status::from_bool(!passing.is_empty()),
        format!("{} passing subgroups", passing.len()),
    );
    let mut all_m = true;
    for s in &passing {
        let v = GModule::natural(Arc::new(s.clone()));
        let name = recognize(s);
        let fpf = is_fixed_point_free(&v).fixed_point_free;
        let certs = m_certificate(&semidirect(&v, cap)?);
        all_m &= name == GroupName::Quaternion(8) && fpf && all_pass(&certs);
        summary.diagnostic(format!("passing subgroup of order {} recognized {name}", s.order()));
    }
    summary.conclusion(
        "every passing subgroup is Q8 acting fixed-point-freely with C5^2 x| Q8",
        Status::from_bool(all_m),
        "recognition, fixed points and the semidirect certificate",
    );
    summary.conclusion(
        "no cyclic subgroup passes",
        Status::from_bool(cyclic_pass == 0),
        format!("{cyclic_pass} cyclic"),
    );
    summary.conclusion(
        "the trivial subgroup fails at lambda = 2",
        Status::from_bool(trivial_lambda == Some(2)),
        trivial_lambda.map_or("every scalar is realized".into(), |l| {
            format!("first unrealized scalar {l}")
        }),
    );
    let q8 = q8_sl25();
    let contains_q8 = passing.iter().any(|s| {
        let conj = |x: &FpMatrix, t: &FpMatrix| &(&t.inverse().unwrap() * x) * t;
        sylow
            .elements()
            .iter()
            .chain(crate::constructions::gl25().elements())
            .any(|t| q8.group().elements().iter().all(|x| s.contains(&conj(x, t))))
    });
    summary.conclusion(
        "a conjugate of Q8 <= SL(2,5) passes",
        Status::from_bool(contains_q8),
        "conjugated by an element of GL(2,5)",
    );
    let closed = passing.iter().all(|s| {
        sylow.elements().iter().all(|t| {
            let ti = t.inverse().unwrap();
            let gens: Vec<FpMatrix> = s.generators().iter().map(|x| &(&ti * x) * t).collect();
            passing
                .iter()
                .any(|o| gens.iter().all(|g| o.contains(g)) && o.order() == s.order())
        })
    });
    summary.conclusion(
        "passing set is closed under conjugation in the Sylow subgroup",
        Status::from_bool(closed),
        "every conjugate lies in the set",
    );
    report.cases.push(summary.finish());
    Ok(report.finish())
}
