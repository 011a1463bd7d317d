//! Dense state vectors for small `n`, quadratic-form states, and the
//! diagonal-unitary relations between them.
//!
//! Basis state `|x⟩` sits at index `Σ x_i 2^i`.

mod form;

pub use form::QuadraticFormState;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::gf2::{BitMatrix, BitVector, Mod4Solver};
use crate::stabilizer::{PauliOperator, StabilizerError, StabilizerGroup};
use crate::text::ParseError;

/// Largest qubit count the dense oracle accepts.
pub const MAX_DENSE_QUBITS: usize = 20;
/// Largest subspace dimension [`dlc_feasible`] enumerates.
pub const MAX_DLC_DIM: usize = 20;
/// Tolerance for [`equal_up_to_global_phase`].
pub const PHASE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("{n} qubits exceeds the dense limit of {max}")]
    TooManyQubits { n: usize, max: usize },
    #[error("subspace dimension {dim} exceeds the limit of {max}")]
    DimensionCap { dim: usize, max: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("the two states are supported on different subspaces")]
    SubspaceMismatch,
    #[error("invalid quadratic form state: {0}")]
    InvalidForm(String),
    #[error(transparent)]
    Stabilizer(#[from] StabilizerError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn check_dense(n: usize) -> Result<(), OracleError> {
    if n > MAX_DENSE_QUBITS {
        Err(OracleError::TooManyQubits {
            n,
            max: MAX_DENSE_QUBITS,
        })
    } else {
        Ok(())
    }
}

fn index_of(x: &BitVector) -> usize {
    x.ones_iter().fold(0, |acc, i| acc | (1 << i))
}

/// State vector on `n ≤ 20` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

impl DenseState {
    /// Normalizes `amps`, which must have length `2^n` and nonzero norm.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self, OracleError> {
        check_dense(n)?;
        if amps.len() != 1 << n {
            return Err(OracleError::LengthMismatch {
                left: amps.len(),
                right: 1 << n,
            });
        }
        let norm = amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(OracleError::InvalidForm("zero vector".into()));
        }
        Ok(Self {
            n,
            amps: amps.into_iter().map(|a| a / norm).collect(),
        })
    }

    pub fn basis(n: usize, x: &BitVector) -> Result<Self, OracleError> {
        check_dense(n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[index_of(x)] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, x: &BitVector) -> Complex64 {
        self.amps[index_of(x)]
    }

    pub fn norm(&self) -> f64 {
        self.amps
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Applies a Pauli operator exactly.
    pub fn apply_pauli(&self, p: &PauliOperator) -> Self {
        let xm = index_of(p.x_part());
        let zm = index_of(p.z_part());
        let ys = (xm & zm).count_ones();
        // σ = i^{#Y} X^x Z^z per qubit, times the overall sign.
        let mut global = Complex64::i().powu(ys % 4);
        if p.is_negative() {
            global = -global;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (v, &a) in self.amps.iter().enumerate() {
            let s = if (zm & v).count_ones() % 2 == 1 {
                -global
            } else {
                global
            };
            out[v ^ xm] = s * a;
        }
        Self {
            n: self.n,
            amps: out,
        }
    }
}

/// `U = ⊗ diag(1, e^{iθ_j})`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalLocalUnitary {
    pub thetas: Vec<f64>,
}

impl DiagonalLocalUnitary {
    pub fn new(thetas: Vec<f64>) -> Self {
        Self { thetas }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![0.0; n])
    }

    /// Angles given as integer multiples of π/8.
    pub fn from_eighths(k: &[i64]) -> Self {
        Self::new(k.iter().map(|&k| k as f64 * PI / 8.0).collect())
    }

    /// The diagonal Clifford `⊗ diag(1, i^{a_j})`.
    pub fn from_z4(a: &[u8]) -> Self {
        Self::new(a.iter().map(|&a| f64::from(a) * PI / 2.0).collect())
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }
}

/// Normalized `Σ_{x∈S} (-1)^{q(x)} |x⟩`.
pub fn state_from_quadratic_form(q: &QuadraticFormState) -> Result<DenseState, OracleError> {
    let n = q.num_qubits();
    check_dense(n)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    let amp = 1.0 / ((1u64 << q.dim()) as f64).sqrt();
    for x in q.elements() {
        amps[index_of(&x)] = Complex64::new(if q.eval(&x) { -amp } else { amp }, 0.0);
    }
    Ok(DenseState { n, amps })
}

/// The unique +1 eigenstate of a full-rank stabilizer group.
pub fn state_from_stabilizer(s: &StabilizerGroup) -> Result<DenseState, OracleError> {
    let n = s.num_qubits();
    if !s.is_state() {
        return Err(StabilizerError::NotAState { n, k: s.rank() }.into());
    }
    check_dense(n)?;
    // The Z-only elements fix the support of the state: (-1)^{w·x} = sign.
    // Any x meeting those parity constraints has nonzero overlap.
    let xmat = BitMatrix::from_rows(
        s.generators().iter().map(|g| g.x_part().clone()).collect(),
        n,
    );
    let mut constraints = Vec::new();
    for c in xmat.transpose().nullspace().rows() {
        let g = s.product(c);
        let mut row = g.z_part().concat(&BitVector::zeros(1));
        row.set(n, g.is_negative());
        constraints.push(row);
    }
    let r = BitMatrix::from_rows(constraints, n + 1).rref();
    let mut x0 = BitVector::zeros(n);
    for (k, &p) in r.pivots.iter().enumerate() {
        assert!(p < n, "Z-only elements of a valid group are consistent");
        x0.set(p, r.reduced.row(k).get(n));
    }
    let mut psi = DenseState::basis(n, &x0)?;
    for g in s.generators() {
        let gpsi = psi.apply_pauli(g);
        for (a, b) in psi.amps.iter_mut().zip(&gpsi.amps) {
            *a = (*a + b) * 0.5;
        }
    }
    let norm = psi.norm();
    assert!(
        norm > 1e-12,
        "projection of a support basis state cannot vanish"
    );
    for a in psi.amps.iter_mut() {
        *a /= norm;
    }
    Ok(psi)
}

/// Stabilizer group of `Σ_{x∈S} (-1)^{q(x)} |x⟩`.
///
/// For `w ⊥ S` the state is fixed by `Z^w`; for each basis vector `b` of `S`
/// it is fixed by `(-1)^{q(b)} X^b Z^{Bb}` where `B` is the symmetric matrix
/// of `q`.
pub fn stabilizer_from_quadratic_form(q: &QuadraticFormState) -> StabilizerGroup {
    let n = q.num_qubits();
    let sym = q.symmetric_matrix();
    let mut gens = Vec::new();
    for b in q.subspace().rows() {
        let c = sym.mul_vec(b);
        // X^b Z^c = (-i)^{|b∧c|} times the Hermitian Pauli, and |b∧c| = bᵀBb is even.
        let overlap = (b & &c).weight();
        debug_assert_eq!(overlap % 2, 0);
        let negative = q.eval(b) ^ (overlap / 2 % 2 == 1);
        gens.push(PauliOperator::new(b.clone(), c, negative));
    }
    for w in q.subspace().nullspace().into_rows() {
        gens.push(PauliOperator::z_on(&w));
    }
    StabilizerGroup::new(n, gens).expect("standard-form generators are valid")
}

/// Multiplies `|x⟩` by `Π_j e^{iθ_j x_j}`.
pub fn apply_dlu(u: &DiagonalLocalUnitary, psi: &DenseState) -> Result<DenseState, OracleError> {
    if u.len() != psi.n {
        return Err(OracleError::LengthMismatch {
            left: u.len(),
            right: psi.n,
        });
    }
    let phases: Vec<Complex64> = u
        .thetas
        .iter()
        .map(|&t| Complex64::from_polar(1.0, t))
        .collect();
    let amps = psi
        .amps
        .iter()
        .enumerate()
        .map(|(v, &a)| {
            let mut m = a;
            let mut bits = v;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                m *= phases[j];
                bits &= bits - 1;
            }
            m
        })
        .collect();
    Ok(DenseState { n: psi.n, amps })
}

/// Whether `a = e^{iφ} b` for a real `φ`, within [`PHASE_TOLERANCE`].
pub fn equal_up_to_global_phase(a: &DenseState, b: &DenseState) -> bool {
    if a.n != b.n {
        return false;
    }
    let (na, nb) = (a.norm(), b.norm());
    let overlap = a.inner(b).norm();
    // |⟨a|b⟩| = ‖a‖‖b‖ exactly when the vectors are parallel.
    if (na * nb - overlap).abs() > PHASE_TOLERANCE {
        return false;
    }
    let Some(k) = (0..a.amps.len()).max_by(|&i, &j| a.amps[i].norm().total_cmp(&a.amps[j].norm()))
    else {
        return true;
    };
    if b.amps[k].norm() < PHASE_TOLERANCE {
        return false;
    }
    let phase = a.amps[k] / b.amps[k];
    a.amps
        .iter()
        .zip(&b.amps)
        .all(|(x, y)| (x - phase * y).norm() <= PHASE_TOLERANCE)
}

/// An assignment `a ∈ Z4^n` with `Σ_j a_j x_j ≡ 2q(x) (mod 4)` for every
/// `x ∈ S`, or `None` when none exists.
pub fn dlc_feasible(q: &QuadraticFormState) -> Result<Option<Vec<u8>>, OracleError> {
    if q.dim() > MAX_DLC_DIM {
        return Err(OracleError::DimensionCap {
            dim: q.dim(),
            max: MAX_DLC_DIM,
        });
    }
    let n = q.num_qubits();
    let mut solver = Mod4Solver::new(n);
    let mut coeffs = vec![0u8; n];
    for x in q.elements() {
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c = u8::from(x.get(j));
        }
        if !solver.add_equation(&coeffs, if q.eval(&x) { 2 } else { 0 }) {
            return Ok(None);
        }
    }
    Ok(solver.solution())
}

/// Whether `u` maps the state of `psi` to that of `psi_prime` up to phase.
pub fn verify_dlu_pair(
    psi: &QuadraticFormState,
    psi_prime: &QuadraticFormState,
    u: &DiagonalLocalUnitary,
) -> Result<bool, OracleError> {
    if !psi.same_subspace(psi_prime) {
        return Err(OracleError::SubspaceMismatch);
    }
    let image = apply_dlu(u, &state_from_quadratic_form(psi)?)?;
    Ok(equal_up_to_global_phase(
        &image,
        &state_from_quadratic_form(psi_prime)?,
    ))
}

/// Maps a pair `(q, q')` on a common subspace to `(0, q + q')`.
///
/// A diagonal unitary relates the first pair exactly when it relates the
/// second, so questions about arbitrary real standard forms reduce to pairs
/// whose first member has the zero form.
pub fn css_reduction(
    psi: &QuadraticFormState,
    psi_prime: &QuadraticFormState,
) -> Result<(QuadraticFormState, QuadraticFormState), OracleError> {
    if !psi.same_subspace(psi_prime) {
        return Err(OracleError::SubspaceMismatch);
    }
    let mut pairs = psi.pairs().to_vec();
    pairs.extend_from_slice(psi_prime.pairs());
    Ok((psi.with_pairs(&[])?, psi.with_pairs(&pairs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn qf(n: usize, rows: &[&str], pairs: &[(usize, usize)]) -> QuadraticFormState {
        let basis = if rows.is_empty() {
            BitMatrix::empty(n)
        } else {
            BitMatrix::from_strs(rows)
        };
        QuadraticFormState::new(n, &basis, pairs).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    fn group(gens: &[&str]) -> StabilizerGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| PauliOperator::parse(s).unwrap())
            .collect();
        StabilizerGroup::new(gens[0].num_qubits(), gens).unwrap()
    }

    fn edge() -> QuadraticFormState {
        qf(2, &["10", "01"], &[(0, 1)])
    }

    #[test]
    fn quadratic_form_states() {
        let bell = state_from_quadratic_form(&qf(2, &["11"], &[])).unwrap();
        let r = FRAC_1_SQRT_2;
        assert!(close(
            bell.amplitudes(),
            &[c(r, 0.), c(0., 0.), c(0., 0.), c(r, 0.)]
        ));
        let e = state_from_quadratic_form(&edge()).unwrap();
        assert!(close(
            e.amplitudes(),
            &[c(0.5, 0.), c(0.5, 0.), c(0.5, 0.), c(-0.5, 0.)]
        ));
        let zero = state_from_quadratic_form(&qf(3, &[], &[(0, 1)])).unwrap();
        assert_eq!(zero.amplitudes()[0], c(1., 0.));
    }

    #[test]
    fn stabilizer_states() {
        let z = state_from_stabilizer(&group(&["Z"])).unwrap();
        assert!(close(z.amplitudes(), &[c(1., 0.), c(0., 0.)]));
        let bell = state_from_stabilizer(&group(&["XX", "ZZ"])).unwrap();
        let want = state_from_quadratic_form(&qf(2, &["11"], &[])).unwrap();
        assert!(equal_up_to_global_phase(&bell, &want));
        let ghz = state_from_stabilizer(&group(&["XXX", "ZZI", "IZZ"])).unwrap();
        let r = FRAC_1_SQRT_2;
        let a = ghz.amplitudes();
        let phase = a[0] / r;
        assert!((a[7] - phase * r).norm() < 1e-12);
        assert!(a[1..7].iter().all(|x| x.norm() < 1e-12));
        let minus = state_from_stabilizer(&group(&["-X"])).unwrap();
        assert!((minus.amplitudes()[0] + minus.amplitudes()[1]).norm() < 1e-12);
    }

    #[test]
    fn stabilizers_of_forms() {
        assert_eq!(
            stabilizer_from_quadratic_form(&qf(2, &["11"], &[])).generators(),
            group(&["XX", "ZZ"]).generators()
        );
        assert_eq!(
            stabilizer_from_quadratic_form(&qf(1, &["1"], &[])).generators(),
            group(&["X"]).generators()
        );
        assert_eq!(
            stabilizer_from_quadratic_form(&edge()).generators(),
            group(&["XZ", "ZX"]).generators()
        );
    }

    #[test]
    fn stabilizer_signs_checked_by_oracle() {
        // S spanned by 111 and 011 with two terms: generators carry Y letters and signs.
        let q = qf(3, &["111", "011"], &[(0, 1), (1, 2)]);
        let s = stabilizer_from_quadratic_form(&q);
        let psi = state_from_quadratic_form(&q).unwrap();
        for g in s.generators() {
            assert!(
                close(psi.apply_pauli(g).amplitudes(), psi.amplitudes()),
                "{g}"
            );
        }
        assert!(equal_up_to_global_phase(
            &state_from_stabilizer(&s).unwrap(),
            &psi
        ));
    }

    #[test]
    fn dlu_application() {
        let plus = state_from_quadratic_form(&qf(1, &["1"], &[])).unwrap();
        let same = apply_dlu(&DiagonalLocalUnitary::identity(1), &plus).unwrap();
        assert!(close(same.amplitudes(), plus.amplitudes()));
        let minus = apply_dlu(&DiagonalLocalUnitary::new(vec![PI]), &plus).unwrap();
        let r = FRAC_1_SQRT_2;
        assert!(close(minus.amplitudes(), &[c(r, 0.), c(-r, 0.)]));

        let t = apply_dlu(
            &DiagonalLocalUnitary::from_eighths(&[2, 2]),
            &state_from_quadratic_form(&edge()).unwrap(),
        )
        .unwrap();
        let w = Complex64::from_polar(0.5, PI / 4.0);
        assert!(close(
            t.amplitudes(),
            &[c(0.5, 0.), w, w, -Complex64::from_polar(0.5, PI / 2.0)]
        ));
        assert!((t.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn global_phase_comparison() {
        let psi = state_from_quadratic_form(&edge()).unwrap();
        assert!(equal_up_to_global_phase(&psi, &psi));
        let neg =
            DenseState::from_amplitudes(2, psi.amplitudes().iter().map(|a| -a).collect()).unwrap();
        assert!(equal_up_to_global_phase(&psi, &neg));
        let bell = state_from_quadratic_form(&qf(2, &["11"], &[])).unwrap();
        assert!(!equal_up_to_global_phase(&psi, &bell));
    }

    #[test]
    fn dlc_examples() {
        assert_eq!(
            dlc_feasible(&qf(2, &["10", "01"], &[])).unwrap(),
            Some(vec![0, 0])
        );
        assert_eq!(dlc_feasible(&edge()).unwrap(), None);
        let a = dlc_feasible(&qf(2, &["11"], &[(0, 1)])).unwrap().unwrap();
        assert_eq!((a[0] + a[1]) % 4, 2);
    }

    #[test]
    fn dlu_pairs() {
        let zero = qf(2, &["10", "01"], &[]);
        assert!(verify_dlu_pair(&zero, &zero, &DiagonalLocalUnitary::identity(2)).unwrap());
        // diag(1, i) on both qubits of |++⟩ gives amplitudes 1, i, i, -1.
        assert!(
            !verify_dlu_pair(&zero, &edge(), &DiagonalLocalUnitary::from_eighths(&[4, 4])).unwrap()
        );
        assert!(
            !verify_dlu_pair(&zero, &edge(), &DiagonalLocalUnitary::from_eighths(&[8, 0])).unwrap()
        );
        let bell0 = qf(2, &["11"], &[]);
        let bell1 = qf(2, &["11"], &[(0, 1)]);
        assert!(
            verify_dlu_pair(&bell0, &bell1, &DiagonalLocalUnitary::from_eighths(&[4, 4])).unwrap()
        );
        assert!(
            !verify_dlu_pair(&bell0, &bell1, &DiagonalLocalUnitary::from_eighths(&[4, 3])).unwrap()
        );
        assert_eq!(
            verify_dlu_pair(&bell0, &zero, &DiagonalLocalUnitary::identity(2)),
            Err(OracleError::SubspaceMismatch)
        );
    }

    #[test]
    fn reduction_adds_forms() {
        let a = qf(3, &["100", "010", "001"], &[(0, 1), (1, 2)]);
        let b = a.with_pairs(&[(0, 1), (0, 2)]).unwrap();
        let (z, sum) = css_reduction(&a, &b).unwrap();
        assert!(z.pairs().is_empty());
        assert_eq!(sum.pairs(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn too_large() {
        let q = qf(21, &[], &[]);
        assert!(matches!(
            state_from_quadratic_form(&q),
            Err(OracleError::TooManyQubits { .. })
        ));
    }
}
