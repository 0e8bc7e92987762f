//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod subspace;
pub mod vectors;

pub use field::{gcd, is_prime, mult_order, units_mod, FpScalar, PrimeField};
pub use matrix::FpMatrix;
pub(crate) use subspace::EchelonBuilder;
pub use subspace::Subspace;

/// Reduced row-echelon form and rank.
pub fn rref(m: &FpMatrix) -> (FpMatrix, usize) {
    m.rref()
}

/// `{v : v * m = 0}` for row vectors `v`.
pub fn kernel(m: &FpMatrix) -> Subspace {
    Subspace::kernel(m)
}

/// Solution space of the homogeneous system whose equations are the rows
/// of the given coefficient blocks. Each block has one column per unknown.
pub fn solve_linear(field: PrimeField, unknowns: usize, equations: &[FpMatrix]) -> Subspace {
    let rows: usize = equations.iter().map(|e| e.rows()).sum();
    if rows == 0 {
        return Subspace::full(field, unknowns);
    }
    let mut all = FpMatrix::zeros(field, 0, unknowns);
    for e in equations {
        assert_eq!(e.cols(), unknowns, "equation block has wrong width");
        all = all.vstack(e);
    }
    // x solves A x = 0 iff x^T lies in the left kernel of A^T
    Subspace::kernel(&all.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_linear_examples() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(solve_linear(f, 3, &[]).dim(), 3);
        let x_is_zero = FpMatrix::from_rows(f, &[[1]]);
        assert_eq!(solve_linear(f, 1, &[x_is_zero]).dim(), 0);
        let eq = FpMatrix::from_rows(f, &[[1, 1, 0]]);
        let sol = solve_linear(f, 3, &[eq]);
        assert_eq!(sol, Subspace::span(f, 3, &[vec![1, 4, 0], vec![0, 0, 1]]));
    }
}
