use std::cmp::Ordering;
use std::fmt;

use super::StabilizerError;
use crate::gf2::BitVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Self::I,
            (true, false) => Self::X,
            (true, true) => Self::Y,
            (false, true) => Self::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Self::I => (false, false),
            Self::X => (true, false),
            Self::Y => (true, true),
            Self::Z => (false, true),
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Self::I),
            'X' => Some(Self::X),
            'Y' => Some(Self::Y),
            'Z' => Some(Self::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Self::I => 'I',
            Self::X => 'X',
            Self::Y => 'Y',
            Self::Z => 'Z',
        }
    }
}

/// Hermitian Pauli operator `±⊗σ(x_i, z_i)` with `σ(1,1) = Y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
    negative: bool,
}

impl PauliOperator {
    pub fn new(x: BitVector, z: BitVector, negative: bool) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts must have equal length");
        Self { x, z, negative }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(BitVector::zeros(n), BitVector::zeros(n), false)
    }

    /// X on every qubit of `support`.
    pub fn x_on(support: &BitVector) -> Self {
        Self::new(support.clone(), BitVector::zeros(support.len()), false)
    }

    /// Z on every qubit of `support`.
    pub fn z_on(support: &BitVector) -> Self {
        Self::new(BitVector::zeros(support.len()), support.clone(), false)
    }

    pub fn from_letters(letters: &[PauliLetter], negative: bool) -> Self {
        let mut x = BitVector::zeros(letters.len());
        let mut z = BitVector::zeros(letters.len());
        for (i, l) in letters.iter().enumerate() {
            let (xb, zb) = l.bits();
            x.set(i, xb);
            z.set(i, zb);
        }
        Self::new(x, z, negative)
    }

    /// Parses `[+|-|−]` followed by letters from `IXYZ`. On failure returns the
    /// 0-based character offset of the problem and a message.
    pub fn parse(s: &str) -> Result<Self, (usize, String)> {
        let mut chars = s.char_indices().peekable();
        let mut negative = false;
        let mut offset = 0;
        if let Some(&(_, c)) = chars.peek() {
            match c {
                '+' => {
                    chars.next();
                    offset = 1;
                }
                '-' | '−' => {
                    negative = true;
                    chars.next();
                    offset = 1;
                }
                _ => {}
            }
        }
        let mut letters = Vec::new();
        for (k, (_, c)) in chars.enumerate() {
            let l = PauliLetter::from_char(c)
                .ok_or_else(|| (offset + k, format!("unexpected character `{c}`")))?;
            letters.push(l);
        }
        if letters.is_empty() {
            return Err((offset, "empty Pauli string".to_string()));
        }
        Ok(Self::from_letters(&letters, negative))
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_part(&self) -> &BitVector {
        &self.x
    }

    pub fn z_part(&self) -> &BitVector {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn negated(&self) -> Self {
        Self::new(self.x.clone(), self.z.clone(), !self.negative)
    }

    pub fn letter(&self, i: usize) -> PauliLetter {
        PauliLetter::from_bits(self.x.get(i), self.z.get(i))
    }

    /// `(x | z)` as one vector of length `2n`.
    pub fn symplectic(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    pub fn from_symplectic(v: &BitVector, negative: bool) -> Self {
        assert!(v.len().is_multiple_of(2));
        let n = v.len() / 2;
        Self::new(v.slice(0, n), v.slice(n, 2 * n), negative)
    }

    /// Qubits acted on non-trivially, as a mask of length `n`.
    pub fn support(&self) -> BitVector {
        let mut s = self.x.clone();
        for (w, zw) in s.words_mut().iter_mut().zip(self.z.words()) {
            *w |= zw;
        }
        s
    }

    pub fn support_indices(&self) -> Vec<usize> {
        self.support().ones_iter().collect()
    }

    pub fn weight(&self) -> usize {
        self.support().weight()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_x_only(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_only(&self) -> bool {
        self.x.is_zero()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        !(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// Product `self · other`. Fails when the operators anticommute, since the
    /// result would carry a factor of ±i.
    pub fn mul(&self, other: &Self) -> Result<Self, StabilizerError> {
        assert_eq!(self.num_qubits(), other.num_qubits());
        let phase = self.product_phase(other);
        if phase % 2 == 1 {
            return Err(StabilizerError::Anticommuting {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(Self::new(
            &self.x ^ &other.x,
            &self.z ^ &other.z,
            phase == 2,
        ))
    }

    // Exponent e in `self·other = i^e ⊗σ(x1⊕x2, z1⊕z2)`, including both signs.
    // Per qubit, XY, YZ, ZX contribute +1 and XZ, YX, ZY contribute -1.
    fn product_phase(&self, other: &Self) -> u32 {
        let mut plus = 0u32;
        let mut minus = 0u32;
        for (((&x1, &z1), &x2), &z2) in self
            .x
            .words()
            .iter()
            .zip(self.z.words())
            .zip(other.x.words())
            .zip(other.z.words())
        {
            let (lx1, ly1, lz1) = (x1 & !z1, x1 & z1, !x1 & z1);
            let (lx2, ly2, lz2) = (x2 & !z2, x2 & z2, !x2 & z2);
            plus += ((lx1 & ly2) | (ly1 & lz2) | (lz1 & lx2)).count_ones();
            minus += ((lx1 & lz2) | (ly1 & lx2) | (lz1 & ly2)).count_ones();
        }
        let signs = 2 * (u32::from(self.negative) + u32::from(other.negative));
        (signs + plus + 3 * minus) % 4
    }

    /// Multiplies in place by an operator known to commute with `self`.
    pub(crate) fn mul_assign_commuting(&mut self, other: &Self) {
        let phase = self.product_phase(other);
        debug_assert_eq!(phase % 2, 0, "mul_assign_commuting on anticommuting pair");
        self.x ^= &other.x;
        self.z ^= &other.z;
        self.negative = phase == 2;
    }
}

// Canonical order: symplectic bit pattern `(x|z)` first, then sign.
impl Ord for PauliOperator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x
            .cmp(&other.x)
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.negative.cmp(&other.negative))
    }
}

impl PartialOrd for PauliOperator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for i in 0..self.num_qubits() {
            write!(f, "{}", self.letter(i).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        PauliOperator::parse(s).unwrap()
    }

    #[test]
    fn support_and_weight() {
        assert_eq!(p("XIZ").support_indices(), vec![0, 2]);
        assert_eq!(p("XIZ").weight(), 2);
        assert_eq!(p("IIII").weight(), 0);
        assert_eq!(p("YY").support_indices(), vec![0, 1]);
    }

    #[test]
    fn products_track_sign() {
        // XX·ZZ = (XZ)⊗(XZ) = (-iY)⊗(-iY) = -YY
        assert_eq!(p("XX").mul(&p("ZZ")).unwrap(), p("-YY"));
        assert_eq!(p("ZZ").mul(&p("XX")).unwrap(), p("-YY"));
        assert_eq!(p("-XI").mul(&p("XI")).unwrap(), p("-II"));
        assert_eq!(p("YZ").mul(&p("YZ")).unwrap(), p("II"));
        assert!(p("X").mul(&p("Z")).is_err());
    }

    #[test]
    fn parse_signs_and_errors() {
        assert!(p("-XY").is_negative());
        assert!(p("−XY").is_negative());
        assert!(!p("+XY").is_negative());
        assert_eq!(PauliOperator::parse("+XQ").unwrap_err().0, 2);
        assert!(PauliOperator::parse("+").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XYZI", "-ZZZ", "+I"] {
            assert_eq!(p(s).to_string(), s);
        }
    }
}
