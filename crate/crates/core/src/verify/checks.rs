use std::sync::Arc;

use super::{Certificate, Status};
use crate::algebra::FpMatrix;
use crate::constructions::Semidirect;
use crate::gmodules::GModule;
use crate::groups::{recognize, FiniteGroup, GroupName};

/// Right regular permutation module of `G` over its field.
pub fn regular_module(group: Arc<FiniteGroup>) -> GModule {
    let f = group.field();
    let n = group.order();
    let action = group
        .generator_indices()
        .iter()
        .map(|&s| {
            let perm: Vec<usize> = (0..n).map(|x| group.mul(x, s)).collect();
            FpMatrix::permutation(f, &perm)
        })
        .collect();
    GModule::new(group, n, action).expect("regular action is a module")
}

/// Checks that `V x| Q` is the Frobenius group `C_5^2 x| Q_8`: order 200,
/// normal translation subgroup `C_5^2`, complement `Q_8`, and no non-trivial
/// element of the complement fixing a non-zero translation.
pub fn m_certificate(sd: &Semidirect) -> Vec<Certificate> {
    let mut out = Vec::new();
    let g = &sd.group;
    let t = &sd.translations;
    let c = &sd.complement;
    out.push(Certificate::new(
        "order 200",
        Status::from_bool(g.order() == 200),
        format!("|V x| G| = {}", g.order()),
    ));
    let normal = g.generators().iter().all(|x| {
        let xi = x.inverse().unwrap();
        t.generators().iter().all(|y| t.contains(&(&(&xi * y) * x)))
    });
    out.push(Certificate::new(
        "translations normal",
        Status::from_bool(normal && t.is_subgroup_of(g)),
        "conjugates of translation generators are translations",
    ));
    let tname = recognize(t);
    out.push(Certificate::new(
        "translations elementary abelian of rank 2",
        Status::from_bool(tname == GroupName::ElementaryAbelian { p: 5, rank: 2 }),
        format!("recognized {tname}"),
    ));
    let cname = recognize(c);
    let meet_trivial = c.elements().iter().skip(1).all(|x| !t.contains(x));
    out.push(Certificate::new(
        "complement quaternion of order 8",
        Status::from_bool(cname == GroupName::Quaternion(8) && meet_trivial && t.order() * c.order() == g.order()),
        format!("recognized {cname}; |T| |Q| = {}", t.order() * c.order()),
    ));
    // (0, c)^-1 (v, 1) (0, c) = (v c, 1), so c fixes no translation iff its
    // linear part has no eigenvalue 1
    let fpf = c
        .elements()
        .iter()
        .skip(1)
        .all(|x| sd.linear_of(x).minus_scalar(1).is_invertible());
    out.push(Certificate::new(
        "complement acts fixed-point-freely",
        Status::from_bool(fpf),
        "no non-identity complement element fixes a non-zero translation",
    ));
    out
}

pub(crate) fn all_pass(certs: &[Certificate]) -> bool {
    certs.iter().all(|c| c.status == Status::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{m_group, q8_sl25};
    use crate::gmodules::decompose_simple;

    #[test]
    fn m_passes() {
        assert!(all_pass(&m_certificate(&m_group())));
    }

    #[test]
    fn regular_q8_decomposes() {
        let v = regular_module(q8_sl25().group().clone());
        let parts = decompose_simple(&v).unwrap();
        let mut dims: Vec<usize> = parts.iter().map(|w| w.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 1, 1, 2, 2]);
    }
}
