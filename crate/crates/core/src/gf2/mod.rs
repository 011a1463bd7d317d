//! Exact linear algebra over GF(2) and Z4.

mod matrix;
mod mod4;
mod vector;

pub use matrix::{BitMatrix, RowReducer, Rref};
pub use mod4::{solve_mod4, Mod4Solver, Mod4System};
pub use vector::BitVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Gf2Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("symplectic vectors must have even length, got {0}")]
    OddLength(usize),
}

/// `a_x·b_z + a_z·b_x (mod 2)` for vectors laid out as `(x | z)`.
///
/// Zero exactly when the corresponding Pauli operators commute.
pub fn symplectic_product(a: &BitVector, b: &BitVector) -> Result<bool, Gf2Error> {
    if a.len() != b.len() {
        return Err(Gf2Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if !a.len().is_multiple_of(2) {
        return Err(Gf2Error::OddLength(a.len()));
    }
    let n = a.len() / 2;
    let (ax, az) = (a.slice(0, n), a.slice(n, 2 * n));
    let (bx, bz) = (b.slice(0, n), b.slice(n, 2 * n));
    Ok(ax.dot(&bz) ^ az.dot(&bx))
}
