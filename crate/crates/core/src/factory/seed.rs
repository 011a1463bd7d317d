//! Seed pairs `(S, 0)` and `(S, q)` related by a diagonal local unitary, and
//! their encoding through a CSS code.

use super::code::{normalize_eighths, CssCode, DiagAction};
use super::FactoryError;
use crate::gf2::{BitMatrix, BitVector};
use crate::oracle::{dlc_feasible, verify_dlu_pair, DiagonalLocalUnitary, QuadraticFormState};
use crate::stabilizer::EnumCap;
use crate::text::{column_of, content_lines, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleSeed {
    /// `S` and `q`; the partner state has the zero form on `S`.
    pub form: QuadraticFormState,
    /// Angles of the claimed unitary, in units of π/8.
    pub dlu: Vec<i64>,
    pub provenance: Vec<String>,
}

impl CounterexampleSeed {
    pub fn new(form: QuadraticFormState, dlu: Vec<i64>) -> Result<Self, FactoryError> {
        if dlu.len() != form.num_qubits() {
            return Err(FactoryError::InvalidSeed(format!(
                "{} angles for {} qubits",
                dlu.len(),
                form.num_qubits()
            )));
        }
        Ok(Self {
            form,
            dlu,
            provenance: Vec::new(),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.form.num_qubits()
    }

    pub fn zero_form(&self) -> QuadraticFormState {
        self.form
            .with_pairs(&[])
            .expect("subspace already validated")
    }

    pub fn unitary(&self) -> DiagonalLocalUnitary {
        DiagonalLocalUnitary::from_eighths(&self.dlu)
    }

    /// Dense check that the unitary maps `(S, 0)` to `(S, q)`.
    pub fn verify(&self) -> Result<bool, FactoryError> {
        Ok(verify_dlu_pair(
            &self.zero_form(),
            &self.form,
            &self.unitary(),
        )?)
    }

    /// Diagonal local Clifford solution for the pair, if any.
    pub fn dlc_assignment(&self) -> Result<Option<Vec<u8>>, FactoryError> {
        Ok(dlc_feasible(&self.form)?)
    }

    /// Quadratic-form text followed by `dlu:` and any `note:` lines.
    pub fn parse(text: &str) -> Result<Self, FactoryError> {
        let lines = content_lines(text);
        let (form, rest) = QuadraticFormState::parse_lines(&lines)?;
        let mut dlu = None;
        let mut provenance = Vec::new();
        for &(line_no, line) in rest {
            let body = line.trim();
            if let Some(tail) = body.strip_prefix("dlu:") {
                if dlu.is_some() {
                    return Err(ParseError::new(
                        line_no,
                        column_of(line, body),
                        "repeated `dlu:` line",
                    )
                    .into());
                }
                let mut angles = Vec::new();
                for tok in tail.split_whitespace() {
                    let k = tok.parse::<i64>().map_err(|_| {
                        ParseError::new(
                            line_no,
                            column_of(line, tok),
                            format!("expected an integer, got `{tok}`"),
                        )
                    })?;
                    angles.push(k);
                }
                if angles.len() != form.num_qubits() {
                    return Err(ParseError::new(
                        line_no,
                        column_of(line, body),
                        format!("{} angles for {} qubits", angles.len(), form.num_qubits()),
                    )
                    .into());
                }
                dlu = Some(angles);
            } else if let Some(tail) = body.strip_prefix("note:") {
                provenance.push(tail.trim().to_string());
            } else {
                return Err(ParseError::new(
                    line_no,
                    column_of(line, body),
                    "expected `dlu:` or `note:`",
                )
                .into());
            }
        }
        let last = lines.last().map_or(1, |l| l.0);
        let dlu = dlu.ok_or_else(|| ParseError::new(last, 1, "missing `dlu:` line"))?;
        let mut seed = Self::new(form, dlu)?;
        seed.provenance = provenance;
        Ok(seed)
    }

    pub fn to_text(&self) -> String {
        let mut out = self.form.to_text();
        let angles: Vec<String> = self.dlu.iter().map(i64::to_string).collect();
        out.push_str(&format!("dlu: {}\n", angles.join(" ")));
        for p in &self.provenance {
            out.push_str(&format!("note: {p}\n"));
        }
        out
    }
}

/// Smallest per-qubit angle (π/8 units, in `1..16`) whose transversal action
/// on `code` is the logical phase `target`. Clifford per-qubit angles are
/// skipped.
pub fn transversal_angle_for(
    code: &CssCode,
    target: i64,
    cap: EnumCap,
) -> Result<Option<i64>, FactoryError> {
    let want = normalize_eighths(target);
    for k in 1..16 {
        if k % 4 == 0 {
            continue;
        }
        if code.transversal_diag_action(k, cap)? == DiagAction::Eighths(want) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Encodes qubit `j` of the seed with `code`. The new qubit order is the old
/// qubits without `j`, then the `m` code qubits.
pub fn encode_pair(
    seed: &CounterexampleSeed,
    j: usize,
    code: &CssCode,
    cap: EnumCap,
) -> Result<CounterexampleSeed, FactoryError> {
    let n = seed.num_qubits();
    if j >= n {
        return Err(FactoryError::QubitOutOfRange { qubit: j, n });
    }
    let angle = transversal_angle_for(code, seed.dlu[j], cap)?.ok_or_else(|| {
        FactoryError::NoTransversal {
            code: code.name().to_string(),
            eighths: seed.dlu[j],
        }
    })?;
    let m = code.length();
    let total = n - 1 + m;
    let s = seed.form.subspace();
    let Some(pe) = s.rows().iter().position(|r| r.get(j)) else {
        return Err(FactoryError::ConstantQubit(j));
    };
    let e = s.row(pe).clone();

    let mut rows = Vec::new();
    for (k, r) in s.rows().iter().enumerate() {
        if k == pe {
            continue;
        }
        let s0 = if r.get(j) { r ^ &e } else { r.clone() };
        rows.push(s0.remove(j).concat(&BitVector::zeros(m)));
    }
    for c in code.c().rows() {
        rows.push(BitVector::zeros(n - 1).concat(c));
    }
    rows.push(e.remove(j).concat(code.x_e()));

    let old = |i: usize| if i > j { i - 1 } else { i };
    let mut pairs = Vec::new();
    for &(a, b) in seed.form.pairs() {
        match (a == j, b == j) {
            (false, false) => pairs.push((old(a), old(b))),
            _ => {
                let other = old(if a == j { b } else { a });
                pairs.extend(code.z_e().ones_iter().map(|t| (other, n - 1 + t)));
            }
        }
    }
    let form = QuadraticFormState::new(total, &BitMatrix::from_rows(rows, total), &pairs)?;

    let mut dlu: Vec<i64> = (0..n).filter(|&i| i != j).map(|i| seed.dlu[i]).collect();
    dlu.extend(std::iter::repeat_n(angle, m));
    let mut out = CounterexampleSeed::new(form, dlu)?;
    out.provenance = seed.provenance.clone();
    out.provenance.push(format!(
        "qubit {} encoded with {} at angle {angle}π/8",
        j + 1,
        code.name()
    ));
    Ok(out)
}

/// Folds a DLC assignment of an encoded pair back to the seed:
/// `C_i = c_i` off the encoded qubit and `C_j = Σ_t c_t (X_e)_t` on it.
pub fn pullback_dlc(assignment: &[u8], n: usize, j: usize, code: &CssCode) -> Vec<u8> {
    assert_eq!(assignment.len(), n - 1 + code.length(), "assignment length");
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = match i.cmp(&j) {
            std::cmp::Ordering::Less => assignment[i],
            std::cmp::Ordering::Greater => assignment[i - 1],
            std::cmp::Ordering::Equal => code
                .x_e()
                .ones_iter()
                .map(|t| assignment[n - 1 + t])
                .fold(0u8, |acc, a| (acc + a) % 4),
        };
        out.push(v);
    }
    out
}

/// Whether `Σ a_i x_i ≡ 2q(x) (mod 4)` on every `x ∈ S`.
pub fn is_dlc_solution(form: &QuadraticFormState, a: &[u8]) -> bool {
    a.len() == form.num_qubits()
        && form.elements().all(|x| {
            let lhs = x.ones_iter().map(|i| u32::from(a[i])).sum::<u32>() % 4;
            lhs == if form.eval(&x) { 2 } else { 0 }
        })
}

#[cfg(test)]
mod tests {
    use super::super::{rep2, rm15};
    use super::*;

    fn qf(n: usize, rows: &[&str], pairs: &[(usize, usize)]) -> QuadraticFormState {
        QuadraticFormState::new(n, &BitMatrix::from_strs(rows), pairs).unwrap()
    }

    /// `|000⟩ + |111⟩` against `|000⟩ − |111⟩`.
    fn ghz_seed() -> CounterexampleSeed {
        CounterexampleSeed::new(qf(3, &["111"], &[(0, 1)]), vec![1, 1, 6]).unwrap()
    }

    fn toy_seed() -> CounterexampleSeed {
        CounterexampleSeed::new(qf(2, &["10", "01"], &[(0, 1)]), vec![2, 2]).unwrap()
    }

    #[test]
    fn toy_encoding_shape() {
        let enc = encode_pair(&toy_seed(), 1, &rep2(), EnumCap::default()).unwrap();
        assert_eq!(enc.num_qubits(), 3);
        let want = qf(3, &["100", "011"], &[(0, 1)]);
        assert_eq!(enc.form, want);
        assert_eq!(enc.dlu, vec![2, 1, 1]);
        // The toy unitary is not a valid one, before or after encoding.
        assert!(!toy_seed().verify().unwrap());
        assert!(!enc.verify().unwrap());
    }

    #[test]
    fn encoding_preserves_dlu_equivalence() {
        let seed = ghz_seed();
        assert!(seed.verify().unwrap());
        let enc = encode_pair(&seed, 2, &rep2(), EnumCap::default()).unwrap();
        assert_eq!(enc.dlu, vec![1, 1, 3, 3]);
        assert!(enc.verify().unwrap());
        let enc15 = encode_pair(&seed, 2, &rm15(), EnumCap::default()).unwrap();
        assert_eq!(enc15.num_qubits(), 17);
        assert_eq!(enc15.dlu[2], 10);
        assert!(enc15.verify().unwrap());
        // rm15 only realizes even logical angles.
        assert!(matches!(
            encode_pair(&seed, 0, &rm15(), EnumCap::default()),
            Err(FactoryError::NoTransversal { .. })
        ));
        let identity = CounterexampleSeed::new(qf(2, &["11"], &[]), vec![0, 0]).unwrap();
        let enc = encode_pair(&identity, 0, &rep2(), EnumCap::default());
        assert!(matches!(enc, Err(FactoryError::NoTransversal { .. })));
    }

    #[test]
    fn pullback_solves_seed() {
        let seed = ghz_seed();
        let enc = encode_pair(&seed, 2, &rep2(), EnumCap::default()).unwrap();
        let a = enc.dlc_assignment().unwrap().expect("GHZ pair is DLC");
        assert!(is_dlc_solution(
            &seed.form,
            &pullback_dlc(&a, 3, 2, &rep2())
        ));
        let toy = toy_seed();
        assert_eq!(toy.dlc_assignment().unwrap(), None);
        let enc = encode_pair(&toy, 1, &rep2(), EnumCap::default()).unwrap();
        assert_eq!(enc.dlc_assignment().unwrap(), None);
    }

    #[test]
    fn constant_qubit_is_reported() {
        let seed = CounterexampleSeed::new(qf(2, &["10"], &[]), vec![2, 2]).unwrap();
        assert_eq!(
            encode_pair(&seed, 1, &rep2(), EnumCap::default()),
            Err(FactoryError::ConstantQubit(1))
        );
    }

    #[test]
    fn seed_text() {
        let mut s = ghz_seed();
        s.provenance.push("ghz".into());
        assert_eq!(CounterexampleSeed::parse(&s.to_text()).unwrap(), s);
        let e = CounterexampleSeed::parse("2\n11\nq: 1 2\ndlu: 1\n").unwrap_err();
        assert!(matches!(e, FactoryError::Parse(ParseError { line: 4, .. })));
    }
}
