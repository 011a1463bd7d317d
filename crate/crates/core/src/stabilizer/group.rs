use std::fmt;

use super::{EnumCap, PauliOperator, StabilizerError};
use crate::gf2::{BitMatrix, BitVector, RowReducer};
use crate::text::{column_of, content_lines, ParseError};

/// Abelian group of Pauli operators given by independent commuting
/// generators, with `-I` excluded.
///
/// With `k = n` generators this is the stabilizer of a state; with `k < n`
/// it is the stabilizer of a code.
#[derive(Clone, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
}

/// X-only and Z-only bases of a CSS group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssSplit {
    pub x_part: Vec<PauliOperator>,
    pub z_part: Vec<PauliOperator>,
}

impl StabilizerGroup {
    /// Validates qubit counts, pairwise commutation and independence.
    ///
    /// Independence already rules out `-I`: the only product with an all-zero
    /// bit pattern is the empty one.
    pub fn new(n: usize, generators: Vec<PauliOperator>) -> Result<Self, StabilizerError> {
        for g in &generators {
            if g.num_qubits() != n {
                return Err(StabilizerError::LengthMismatch {
                    expected: n,
                    found: g.num_qubits(),
                });
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for (j, b) in generators.iter().enumerate().skip(i + 1) {
                if !a.commutes_with(b) {
                    return Err(StabilizerError::NonCommuting {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let mut reducer = RowReducer::new(2 * n);
        for (i, g) in generators.iter().enumerate() {
            if !reducer.insert(g.symplectic()) {
                return Err(StabilizerError::Dependent { index: i });
            }
        }
        Ok(Self { n, generators })
    }

    /// The trivial group on `n` qubits.
    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
        }
    }

    /// Graph state: `K_v = X_v ∏_{u ∈ N(v)} Z_u` for every vertex.
    pub fn graph_state(n: usize, edges: &[(usize, usize)]) -> Result<Self, StabilizerError> {
        let mut z = vec![BitVector::zeros(n); n];
        for &(u, v) in edges {
            assert!(
                u < n && v < n && u != v,
                "graph state edge ({u},{v}) invalid"
            );
            z[u].flip(v);
            z[v].flip(u);
        }
        let gens = z
            .into_iter()
            .enumerate()
            .map(|(v, zv)| PauliOperator::new(BitVector::unit(n, v), zv, false))
            .collect();
        Self::new(n, gens)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Number of independent generators `k`.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_state(&self) -> bool {
        self.generators.len() == self.n
    }

    /// Generators as rows `(x | z)`.
    pub fn symplectic_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(
            self.generators
                .iter()
                .map(PauliOperator::symplectic)
                .collect(),
            2 * self.n,
        )
    }

    pub fn element_count(&self) -> u128 {
        1u128 << self.generators.len()
    }

    /// All `2^k` elements in Gray-code order, signs tracked exactly.
    pub fn enumerate_elements(&self, cap: EnumCap) -> Result<Elements<'_>, StabilizerError> {
        cap.check(self.element_count())?;
        Ok(Elements {
            group: self,
            current: PauliOperator::identity(self.n),
            step: 0,
            total: self.element_count(),
        })
    }

    /// Coefficients `c` with `∏ g_i^{c_i}` matching `p`'s bit pattern, if any.
    pub fn decompose(&self, p: &PauliOperator) -> Option<BitVector> {
        let k = self.generators.len();
        // Augment each generator row with its own unit tag to recover the combination.
        let mut basis: Vec<(usize, BitVector)> = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let mut row = g.symplectic().concat(&BitVector::unit(k, i));
            for (piv, b) in &basis {
                if row.get(*piv) {
                    row ^= b;
                }
            }
            let piv = row.first_one().expect("generators are independent");
            basis.push((piv, row));
        }
        let mut target = p.symplectic().concat(&BitVector::zeros(k));
        for (piv, b) in &basis {
            if target.get(*piv) {
                target ^= b;
            }
        }
        let (bits, tag) = (
            target.slice(0, 2 * self.n),
            target.slice(2 * self.n, 2 * self.n + k),
        );
        bits.is_zero().then_some(tag)
    }

    /// Product of the generators selected by `c`.
    pub fn product(&self, c: &BitVector) -> PauliOperator {
        let mut acc = PauliOperator::identity(self.n);
        for i in c.ones_iter() {
            acc.mul_assign_commuting(&self.generators[i]);
        }
        acc
    }

    /// The group element with the same bit pattern as `p`, if one exists.
    pub fn element_with_pattern(&self, p: &PauliOperator) -> Option<PauliOperator> {
        self.decompose(p).map(|c| self.product(&c))
    }

    /// Membership including the sign.
    pub fn contains(&self, p: &PauliOperator) -> bool {
        self.element_with_pattern(p).is_some_and(|e| e == *p)
    }

    /// Basis of `S_ω = {g ∈ S : supp(g) ⊆ ω}`, by elimination on the
    /// coordinates outside `ω`.
    pub fn subgroup_supported_in(&self, omega: &BitVector) -> StabilizerGroup {
        assert_eq!(omega.len(), self.n);
        let outside: Vec<usize> = (0..self.n).filter(|&i| !omega.get(i)).collect();
        let k = self.generators.len();
        // Column j of `restricted` is generator j restricted to the outside coordinates.
        let mut restricted = BitMatrix::zeros(2 * outside.len(), k);
        for (j, g) in self.generators.iter().enumerate() {
            for (r, &q) in outside.iter().enumerate() {
                if g.x_part().get(q) {
                    restricted.set(r, j, true);
                }
                if g.z_part().get(q) {
                    restricted.set(outside.len() + r, j, true);
                }
            }
        }
        let combos = restricted.nullspace();
        Self {
            n: self.n,
            generators: combos.rows().iter().map(|c| self.product(c)).collect(),
        }
    }

    /// `A_ω`: number of elements whose support is exactly `ω`.
    pub fn count_support_eq(
        &self,
        omega: &BitVector,
        cap: EnumCap,
    ) -> Result<u64, StabilizerError> {
        let local = self.subgroup_supported_in(omega);
        let mut count = 0;
        for g in local.enumerate_elements(cap)? {
            if g.support() == *omega {
                count += 1;
            }
        }
        Ok(count)
    }

    /// `B_ω = |S_ω| = 2^{dim S_ω}`.
    pub fn count_support_in(&self, omega: &BitVector) -> u128 {
        self.subgroup_supported_in(omega).element_count()
    }

    /// Minimum weight of a non-identity element. `None` for the trivial group.
    pub fn distance(&self, cap: EnumCap) -> Result<Option<usize>, StabilizerError> {
        Ok(self
            .enumerate_elements(cap)?
            .filter(|g| !g.is_identity())
            .map(|g| g.weight())
            .min())
    }

    /// The X-only and Z-only sub-bases when they together span the group.
    pub fn css_split(&self) -> Option<CssSplit> {
        let k = self.generators.len();
        let zmat = BitMatrix::from_rows(
            self.generators.iter().map(|g| g.z_part().clone()).collect(),
            self.n,
        );
        let xmat = BitMatrix::from_rows(
            self.generators.iter().map(|g| g.x_part().clone()).collect(),
            self.n,
        );
        // Combinations whose Z part cancels are the X-only elements, and vice versa.
        let x_combos = zmat.transpose().nullspace();
        let z_combos = xmat.transpose().nullspace();
        if x_combos.nrows() + z_combos.nrows() != k {
            return None;
        }
        Some(CssSplit {
            x_part: x_combos.rows().iter().map(|c| self.product(c)).collect(),
            z_part: z_combos.rows().iter().map(|c| self.product(c)).collect(),
        })
    }

    pub fn is_css(&self) -> bool {
        self.css_split().is_some()
    }

    /// Adds generators, revalidating the whole set.
    pub fn extended(&self, extra: &[PauliOperator]) -> Result<Self, StabilizerError> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Self::new(self.n, gens)
    }

    /// Parses one generator per line.
    pub fn parse(text: &str) -> Result<Self, StabilizerError> {
        let lines = content_lines(text);
        let mut gens = Vec::new();
        let mut n = None;
        for (line_no, line) in lines {
            let body = line.trim();
            let col = column_of(line, body);
            let g = PauliOperator::parse(body)
                .map_err(|(off, msg)| ParseError::new(line_no, col + off, msg))?;
            match n {
                None => n = Some(g.num_qubits()),
                Some(n0) if n0 != g.num_qubits() => {
                    return Err(ParseError::new(
                        line_no,
                        col,
                        format!("expected {n0} qubits, found {}", g.num_qubits()),
                    )
                    .into())
                }
                _ => {}
            }
            gens.push(g);
        }
        let n = n.ok_or_else(|| ParseError::new(1, 1, "no generators"))?;
        Self::new(n, gens)
    }

    pub fn to_text(&self) -> String {
        self.generators.iter().map(|g| format!("{g}\n")).collect()
    }
}

impl fmt::Debug for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.generators).finish()
    }
}

/// Iterator returned by [`StabilizerGroup::enumerate_elements`].
pub struct Elements<'a> {
    group: &'a StabilizerGroup,
    current: PauliOperator,
    step: u128,
    total: u128,
}

impl Iterator for Elements<'_> {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let flip = self.step.trailing_zeros() as usize;
            self.current
                .mul_assign_commuting(&self.group.generators[flip]);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.step).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}
