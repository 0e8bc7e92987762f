use super::simple::{coprime_order, simple_inside};
use super::GModule;
use crate::algebra::{FpMatrix, Subspace};
use crate::error::{Error, Result};

/// Invariant complement of the submodule `W`, from the average of a
/// projection onto `W` over the group.
pub fn maschke_complement(v: &GModule, w: &Subspace) -> Result<Subspace> {
    if !coprime_order(v) {
        return Err(Error::MaschkeViolated {
            p: v.p(),
            order: v.group().order(),
        });
    }
    if !v.is_submodule(w) {
        return Err(Error::NotInvariant);
    }
    let f = v.field();
    let d = v.dim();
    if w.is_zero() {
        return Ok(Subspace::full(f, d));
    }
    if w.is_full() {
        return Ok(Subspace::zero(f, d));
    }
    // basis B = [W ; standard completion]; projection keeps the W-coordinates
    let mut rows = w.basis_vectors();
    rows.extend(w.complement_basis());
    let b = FpMatrix::from_vectors(f, d, &rows);
    let keep: Vec<i64> = (0..d).map(|i| i64::from(i < w.dim())).collect();
    let proj = &(&b.inverse().unwrap() * &FpMatrix::diagonal(f, &keep)) * &b;

    let group = v.group();
    let mut sum = FpMatrix::zeros(f, d, d);
    for g in 0..group.order() {
        let gi = group.inv(g);
        sum = sum.add(&(&(v.action_of(gi) * &proj) * v.action_of(g)));
    }
    let scale = f.inv((group.order() as u64 % f.p() as u64) as u32).unwrap();
    let averaged = sum.scale(scale);
    Ok(Subspace::kernel(&averaged))
}

/// Direct sum decomposition into simple submodules.
///
/// Each step spins the first non-zero vector (in lexicographic order) of the
/// current complement, descends to a simple submodule inside that spin, and
/// replaces the complement by a fresh Maschke complement of everything found
/// so far. The output is therefore a deterministic function of the module.
pub fn decompose_simple(v: &GModule) -> Result<Vec<Subspace>> {
    let f = v.field();
    let d = v.dim();
    if !coprime_order(v) {
        return Err(Error::MaschkeViolated {
            p: v.p(),
            order: v.group().order(),
        });
    }
    let mut found: Vec<Subspace> = Vec::new();
    let mut total = Subspace::zero(f, d);
    let mut remaining = Subspace::full(f, d);
    while !remaining.is_zero() {
        // the last echelon row is the lexicographically least non-zero vector
        let seed = remaining.basis_vectors().pop().unwrap();
        let s = simple_inside(v, v.spin(&seed));
        total = total.sum(&s);
        found.push(s);
        remaining = maschke_complement(v, &total)?;
    }
    Ok(found)
}
