//! CSS codes `C ⊂ D` with `|0̄⟩ = Σ_{c∈C} |c⟩` and `|1̄⟩ = Σ_{c∈D∖C} |c⟩`.

use std::f64::consts::PI;
use std::fmt;

use super::FactoryError;
use crate::gf2::{BitMatrix, BitVector};
use crate::stabilizer::EnumCap;
use crate::text::{column_of, content_lines, ParseError};

#[derive(Clone, PartialEq, Eq)]
pub struct CssCode {
    name: String,
    c: BitMatrix,
    d: BitMatrix,
    xe: BitVector,
    ze: BitVector,
}

/// Simplex code of length `2^r − 1`: column `j` is the binary expansion of `j`.
fn simplex(r: usize) -> BitMatrix {
    let m = (1 << r) - 1;
    let rows = (0..r)
        .map(|b| BitVector::from_indices(m, (1..=m).filter(|j| j >> b & 1 == 1).map(|j| j - 1)))
        .collect();
    BitMatrix::from_rows(rows, m)
}

/// Punctured Reed-Muller pair: `C` the simplex code, `D = C + ⟨1⟩`.
fn reed_muller(r: usize, name: &str) -> CssCode {
    let c = simplex(r);
    let m = c.ncols();
    let ones = BitVector::ones(m);
    let d = c.vstack(&BitMatrix::from_rows(vec![ones.clone()], m));
    let code =
        CssCode::new(name, &c, &d, ones, BitVector::ones(m)).expect("Reed-Muller pair is valid");
    debug_assert_eq!(code.distance(EnumCap::default()).ok(), Some(3));
    code
}

/// `[[15,1,3]]`.
pub fn rm15() -> CssCode {
    reed_muller(4, "rm15")
}

/// `[[31,1,3]]`.
pub fn rm31() -> CssCode {
    reed_muller(5, "rm31")
}

/// `[[2,1,1]]`: stabilizer `ZZ`, logical `X̄ = XX`, `Z̄ = ZI`.
pub fn rep2() -> CssCode {
    CssCode::new(
        "rep2",
        &BitMatrix::empty(2),
        &BitMatrix::from_strs(&["11"]),
        BitVector::ones(2),
        BitVector::unit(2, 0),
    )
    .expect("repetition code is valid")
}

/// Minimum weight over `span(basis) + offset`, skipping zero.
fn min_weight_coset(
    basis: &BitMatrix,
    offset: &BitVector,
    cap: EnumCap,
) -> Result<Option<usize>, FactoryError> {
    let k = basis.nrows();
    cap.check(1u128 << k)?;
    let mut cur = offset.clone();
    let mut best = (!cur.is_zero()).then(|| cur.weight());
    for i in 1u128..1 << k {
        cur ^= basis.row(i.trailing_zeros() as usize);
        if !cur.is_zero() {
            let w = cur.weight();
            best = Some(best.map_or(w, |b: usize| b.min(w)));
        }
    }
    Ok(best)
}

impl CssCode {
    pub fn new(
        name: &str,
        c: &BitMatrix,
        d: &BitMatrix,
        xe: BitVector,
        ze: BitVector,
    ) -> Result<Self, FactoryError> {
        let m = d.ncols();
        let bad = |msg: String| Err(FactoryError::InvalidCode(msg));
        if c.ncols() != m || xe.len() != m || ze.len() != m {
            return bad(format!("lengths differ from m = {m}"));
        }
        let (c, d) = (c.row_basis(), d.row_basis());
        if !c.rows().iter().all(|r| d.row_space_contains(r)) {
            return bad("C is not contained in D".into());
        }
        if d.nrows() != c.nrows() + 1 {
            return bad(format!(
                "dim D − dim C = {}, expected 1",
                d.nrows() as i64 - c.nrows() as i64
            ));
        }
        if !d.row_space_contains(&xe) || c.row_space_contains(&xe) {
            return bad("Xe must lie in D but not in C".into());
        }
        if c.rows().iter().any(|r| r.dot(&ze)) {
            return bad("Ze must be orthogonal to C".into());
        }
        if !xe.dot(&ze) {
            return bad("Xe · Ze must be 1".into());
        }
        Ok(Self {
            name: name.to_string(),
            c,
            d,
            xe,
            ze,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn length(&self) -> usize {
        self.d.ncols()
    }

    pub fn c(&self) -> &BitMatrix {
        &self.c
    }

    pub fn d(&self) -> &BitMatrix {
        &self.d
    }

    pub fn x_e(&self) -> &BitVector {
        &self.xe
    }

    pub fn z_e(&self) -> &BitVector {
        &self.ze
    }

    /// Number of logical qubits; always 1 for a valid code.
    pub fn k(&self) -> usize {
        self.d.nrows() - self.c.nrows()
    }

    /// `min(wt(D∖C), wt(C⊥∖D⊥))`.
    pub fn distance(&self, cap: EnumCap) -> Result<usize, FactoryError> {
        let dx = min_weight_coset(&self.c, &self.xe, cap)?.expect("coset of C avoids zero");
        Ok(dx.min(self.z_distance(cap)?))
    }

    /// Lightest `w` with `C·w = 0` and `Xe·w = 1`, i.e. in `C⊥ ∖ D⊥`, found by
    /// scanning supports of increasing size.
    fn z_distance(&self, cap: EnumCap) -> Result<usize, FactoryError> {
        let k = self.c.nrows();
        assert!(k < 64, "C too large for packed syndromes");
        let m = self.length();
        let cols: Vec<u64> = (0..m)
            .map(|p| {
                let c = (0..k)
                    .filter(|&r| self.c.get(r, p))
                    .fold(0u64, |acc, r| acc | 1 << r);
                c | u64::from(self.xe.get(p)) << k
            })
            .collect();
        let target = 1u64 << k;
        let mut visited: u128 = 0;
        for w in 1..=m {
            let mut idx: Vec<usize> = (0..w).collect();
            loop {
                visited += 1;
                cap.check(visited)?;
                if idx.iter().fold(0u64, |acc, &p| acc ^ cols[p]) == target {
                    return Ok(w);
                }
                let Some(pos) = (0..w).rev().find(|&t| idx[t] < m - w + t) else {
                    break;
                };
                idx[pos] += 1;
                for t in pos + 1..w {
                    idx[t] = idx[t - 1] + 1;
                }
            }
        }
        unreachable!("Ze itself has the target syndrome")
    }

    /// Weights of `C` and of `D ∖ C`.
    fn weights(&self, cap: EnumCap) -> Result<(Vec<usize>, Vec<usize>), FactoryError> {
        let k = self.c.nrows();
        cap.check(1u128 << (k + 1))?;
        let mut even = Vec::with_capacity(1 << k);
        let mut odd = Vec::with_capacity(1 << k);
        let mut cur = BitVector::zeros(self.length());
        for i in 0u128..1 << k {
            if i > 0 {
                cur ^= self.c.row(i.trailing_zeros() as usize);
            }
            even.push(cur.weight());
            odd.push((&cur ^ &self.xe).weight());
        }
        Ok((even, odd))
    }

    /// Logical action of `diag(1, e^{iπk/8})` on every qubit, exactly.
    pub fn transversal_diag_action(
        &self,
        eighths: i64,
        cap: EnumCap,
    ) -> Result<DiagAction, FactoryError> {
        let (even, odd) = self.weights(cap)?;
        let phase = |w: usize| (eighths * w as i64).rem_euclid(16);
        let constant = |ws: &[usize]| {
            let p0 = phase(ws[0]);
            ws.iter().all(|&w| phase(w) == p0).then_some(p0)
        };
        match (constant(&even), constant(&odd)) {
            (Some(a0), Some(a1)) => Ok(DiagAction::Eighths(normalize_eighths(a1 - a0))),
            _ => Ok(DiagAction::NotPreserved),
        }
    }

    /// Same for an arbitrary angle, comparing phases to within `1e-9`.
    pub fn transversal_diag_action_radians(
        &self,
        theta: f64,
        cap: EnumCap,
    ) -> Result<DiagAction, FactoryError> {
        let (even, odd) = self.weights(cap)?;
        let wrap = |x: f64| {
            let r = x.rem_euclid(2.0 * PI);
            if r > PI {
                r - 2.0 * PI
            } else {
                r
            }
        };
        let constant = |ws: &[usize]| {
            let p0 = theta * ws[0] as f64;
            ws.iter()
                .all(|&w| wrap(theta * w as f64 - p0).abs() < 1e-9)
                .then_some(p0)
        };
        match (constant(&even), constant(&odd)) {
            (Some(a0), Some(a1)) => Ok(DiagAction::Radians(wrap(a1 - a0))),
            _ => Ok(DiagAction::NotPreserved),
        }
    }

    /// Blocks `C:` and `D:` in matrix format, then `Xe:` and `Ze:` bit strings.
    /// An optional `name:` line comes first.
    pub fn parse(text: &str) -> Result<Self, FactoryError> {
        let lines = content_lines(text);
        let mut name = "code".to_string();
        let mut c = None;
        let mut d = None;
        let mut xe = None;
        let mut ze = None;
        let mut idx = 0;
        while idx < lines.len() {
            let (line_no, line) = lines[idx];
            let body = line.trim();
            let err = |msg: &str| ParseError::new(line_no, column_of(line, body), msg);
            let Some((key, rest)) = body.split_once(':') else {
                return Err(err("expected `C:`, `D:`, `Xe:`, `Ze:` or `name:`").into());
            };
            idx += 1;
            match key.trim() {
                "name" => name = rest.trim().to_string(),
                "C" | "D" => {
                    let (m, used) = BitMatrix::parse_lines(&lines[idx..])?;
                    idx += used;
                    if key.trim() == "C" {
                        c = Some(m)
                    } else {
                        d = Some(m)
                    }
                }
                "Xe" | "Ze" => {
                    let tok = rest.trim();
                    let v = BitVector::parse_bits(tok).map_err(|off| {
                        ParseError::new(line_no, column_of(line, tok) + off, "expected 0 or 1")
                    })?;
                    if key.trim() == "Xe" {
                        xe = Some(v)
                    } else {
                        ze = Some(v)
                    }
                }
                other => return Err(err(&format!("unknown key `{other}`")).into()),
            }
        }
        let last = lines.last().map_or(1, |l| l.0);
        let missing = |k: &str| ParseError::new(last, 1, format!("missing `{k}:`"));
        Self::new(
            &name,
            &c.ok_or_else(|| missing("C"))?,
            &d.ok_or_else(|| missing("D"))?,
            xe.ok_or_else(|| missing("Xe"))?,
            ze.ok_or_else(|| missing("Ze"))?,
        )
    }

    pub fn to_text(&self) -> String {
        format!(
            "name: {}\nC:\n{}D:\n{}Xe: {}\nZe: {}\n",
            self.name,
            self.c.to_text(),
            self.d.to_text(),
            self.xe,
            self.ze
        )
    }
}

impl fmt::Debug for CssCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CssCode({}, m={})", self.name, self.length())
    }
}

/// Representative of `k mod 16` in `(−8, 8]`.
pub(crate) fn normalize_eighths(k: i64) -> i64 {
    let r = k.rem_euclid(16);
    if r > 8 {
        r - 16
    } else {
        r
    }
}

/// Logical action `diag(1, e^{iφ})` up to global phase, or the codespace is
/// not preserved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiagAction {
    /// `φ = kπ/8` with `k ∈ (−8, 8]`.
    Eighths(i64),
    Radians(f64),
    NotPreserved,
}

impl DiagAction {
    pub fn is_non_clifford(&self) -> bool {
        match *self {
            Self::Eighths(k) => k % 4 != 0,
            Self::Radians(phi) => {
                let r = (phi / (PI / 2.0)).rem_euclid(1.0);
                r > 1e-9 && r < 1.0 - 1e-9
            }
            Self::NotPreserved => false,
        }
    }

    pub fn radians(&self) -> Option<f64> {
        match *self {
            Self::Eighths(k) => Some(k as f64 * PI / 8.0),
            Self::Radians(phi) => Some(phi),
            Self::NotPreserved => None,
        }
    }
}

impl fmt::Display for DiagAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Eighths(k) => write!(f, "LOGICAL phase={k}π/8"),
            Self::Radians(phi) => write!(f, "LOGICAL phase={phi:.9}"),
            Self::NotPreserved => f.write_str("NOT_PRESERVED"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{apply_dlu, equal_up_to_global_phase, DenseState, DiagonalLocalUnitary};
    use num_complex::Complex64;

    fn cap() -> EnumCap {
        EnumCap::default()
    }

    #[test]
    fn parameters() {
        for (code, m, d) in [(rep2(), 2, 1), (rm15(), 15, 3), (rm31(), 31, 3)] {
            assert_eq!(
                (code.length(), code.k(), code.distance(cap()).unwrap()),
                (m, 1, d)
            );
        }
    }

    #[test]
    fn transversal_phases() {
        assert_eq!(
            rep2().transversal_diag_action(1, cap()).unwrap(),
            DiagAction::Eighths(2)
        );
        assert_eq!(
            rm15().transversal_diag_action(2, cap()).unwrap(),
            DiagAction::Eighths(-2)
        );
        assert_eq!(
            rm31().transversal_diag_action(1, cap()).unwrap(),
            DiagAction::Eighths(-1)
        );
        assert_eq!(
            rm15().transversal_diag_action(1, cap()).unwrap(),
            DiagAction::NotPreserved
        );
        assert_eq!(
            rm15().transversal_diag_action_radians(0.3, cap()).unwrap(),
            DiagAction::NotPreserved
        );
        let t = rm15()
            .transversal_diag_action_radians(PI / 4.0, cap())
            .unwrap();
        assert!((t.radians().unwrap() + PI / 4.0).abs() < 1e-9 && t.is_non_clifford());
        assert!(!rm15()
            .transversal_diag_action(4, cap())
            .unwrap()
            .is_non_clifford());
    }

    /// `Σ_{c∈C} |c⟩ + e^{iφ} Σ_{c∈D∖C} |c⟩` against the dense image of `|0̄⟩ + |1̄⟩`.
    fn dense_check(code: &CssCode, eighths: i64) -> bool {
        let m = code.length();
        let phi = code
            .transversal_diag_action(eighths, cap())
            .unwrap()
            .radians()
            .unwrap();
        let mut plus = vec![Complex64::new(0.0, 0.0); 1 << m];
        let mut want = plus.clone();
        let (mut cur, k) = (BitVector::zeros(m), code.c().nrows());
        let index = |v: &BitVector| v.ones_iter().map(|i| 1usize << i).sum::<usize>();
        for i in 0u64..1 << k {
            if i > 0 {
                cur ^= code.c().row(i.trailing_zeros() as usize);
            }
            let odd = &cur ^ code.x_e();
            plus[index(&cur)] = Complex64::new(1.0, 0.0);
            plus[index(&odd)] = Complex64::new(1.0, 0.0);
            want[index(&cur)] = Complex64::new(1.0, 0.0);
            want[index(&odd)] = Complex64::from_polar(1.0, phi);
        }
        let u = DiagonalLocalUnitary::from_eighths(&vec![eighths; m]);
        let image = apply_dlu(&u, &DenseState::from_amplitudes(m, plus).unwrap()).unwrap();
        equal_up_to_global_phase(&image, &DenseState::from_amplitudes(m, want).unwrap())
    }

    #[test]
    fn dense_oracle_agrees() {
        assert!(dense_check(&rep2(), 1));
        assert!(dense_check(&rm15(), 2));
        assert!(dense_check(&rm15(), 6));
    }

    #[test]
    fn file_round_trip() {
        for code in [rep2(), rm15()] {
            assert_eq!(CssCode::parse(&code.to_text()).unwrap(), code);
        }
        let bad = "C:\n0 2\nD:\n1 2\n11\nXe: 11\nZe: 11\n";
        assert!(matches!(
            CssCode::parse(bad),
            Err(FactoryError::InvalidCode(_))
        ));
        let e = CssCode::parse("C:\n0 2\nD:\n1 2\n1x\n").unwrap_err();
        assert!(matches!(
            e,
            FactoryError::Parse(ParseError {
                line: 5,
                column: 2,
                ..
            })
        ));
    }
}
