use std::fmt;

use serde::Serialize;

use super::{prime_power_base, FiniteGroup};

/// Names of the few group families that need recognizing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupName {
    Cyclic(usize),
    /// Generalized quaternion group of the given order.
    Quaternion(usize),
    ElementaryAbelian {
        p: u64,
        rank: u32,
    },
    Unknown,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupName::Quaternion(n) => write!(f, "quaternion({n})"),
            GroupName::ElementaryAbelian { p, rank } => write!(f, "elementary_abelian({p}, {rank})"),
            GroupName::Unknown => write!(f, "unknown"),
        }
    }
}

/// Invariant-based recognition.
///
/// A non-abelian 2-group of order at least 8 with a unique involution is
/// generalized quaternion, so that test is a certificate, not a heuristic.
pub fn recognize(group: &FiniteGroup) -> GroupName {
    let n = group.order();
    let orders: Vec<u64> = (0..n).map(|i| group.element_order(i)).collect();
    if orders.iter().any(|&o| o as usize == n) {
        return GroupName::Cyclic(n);
    }
    let abelian = group.is_abelian();
    if n >= 8 && n.is_power_of_two() && !abelian && orders.iter().filter(|&&o| o == 2).count() == 1 {
        return GroupName::Quaternion(n);
    }
    if abelian {
        if let Some(q) = prime_power_base(n as u64) {
            if orders.iter().all(|&o| o == 1 || o == q) {
                let rank = (n as f64).log(q as f64).round() as u32;
                return GroupName::ElementaryAbelian { p: q, rank };
            }
        }
    }
    GroupName::Unknown
}
