use std::fmt;

use super::OracleError;
use crate::gf2::{BitMatrix, BitVector, RowReducer};
use crate::text::{column_of, content_lines, parse_usize, ParseError};

/// `Σ_{x ∈ S} (-1)^{q(x)} |x⟩` with `q(x) = Σ_{i<j} q_ij x_i x_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticFormState {
    n: usize,
    // rref basis of S
    subspace: BitMatrix,
    // sorted pairs (i, j) with i < j and q_ij = 1
    pairs: Vec<(usize, usize)>,
}

impl QuadraticFormState {
    /// `basis` rows must be independent; pairs are 0-based and may come in
    /// either order. A repeated pair cancels.
    pub fn new(n: usize, basis: &BitMatrix, pairs: &[(usize, usize)]) -> Result<Self, OracleError> {
        if basis.ncols() != n {
            return Err(OracleError::InvalidForm(format!(
                "basis has {} columns, expected {n}",
                basis.ncols()
            )));
        }
        let r = basis.rref();
        if r.rank != basis.nrows() {
            return Err(OracleError::InvalidForm("basis rows are dependent".into()));
        }
        let mut sorted = Vec::new();
        for &(a, b) in pairs {
            if a >= n || b >= n || a == b {
                return Err(OracleError::InvalidForm(format!(
                    "invalid quadratic term ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
            sorted.push((a.min(b), a.max(b)));
        }
        sorted.sort_unstable();
        // q_ij is a bit: keep only pairs listed an odd number of times.
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for p in sorted {
            if pairs.last() == Some(&p) {
                pairs.pop();
            } else {
                pairs.push(p);
            }
        }
        Ok(Self {
            n,
            subspace: BitMatrix::from_rows(r.reduced.rows()[..r.rank].to_vec(), n),
            pairs,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Reduced basis of `S`.
    pub fn subspace(&self) -> &BitMatrix {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.nrows()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Same subspace, different form.
    pub fn with_pairs(&self, pairs: &[(usize, usize)]) -> Result<Self, OracleError> {
        Self::new(self.n, &self.subspace, pairs)
    }

    pub fn same_subspace(&self, other: &Self) -> bool {
        self.n == other.n && self.subspace == other.subspace
    }

    pub fn eval(&self, x: &BitVector) -> bool {
        self.pairs
            .iter()
            .fold(false, |acc, &(i, j)| acc ^ (x.get(i) && x.get(j)))
    }

    /// Symmetric bilinear form `B(x, y) = q(x+y) - q(x) - q(y)` as a matrix.
    pub fn symmetric_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.n, self.n);
        for &(i, j) in &self.pairs {
            m.set(i, j, true);
            m.set(j, i, true);
        }
        m
    }

    pub fn contains(&self, x: &BitVector) -> bool {
        self.subspace.row_space_contains(x)
    }

    /// All `2^dim` elements of `S` in Gray-code order, starting at zero.
    pub fn elements(&self) -> impl Iterator<Item = BitVector> + '_ {
        let total: u64 = 1 << self.dim();
        let mut cur = BitVector::zeros(self.n);
        (0..total).map(move |step| {
            if step > 0 {
                cur ^= self.subspace.row(step.trailing_zeros() as usize);
            }
            cur.clone()
        })
    }

    /// Parses the line format: qubit count, basis rows, then `q:` pairs.
    pub fn parse(text: &str) -> Result<Self, OracleError> {
        let lines = content_lines(text);
        let (state, rest) = Self::parse_lines(&lines)?;
        if let Some((line_no, line)) = rest.first() {
            return Err(
                ParseError::new(*line_no, 1, format!("unexpected line `{}`", line.trim())).into(),
            );
        }
        Ok(state)
    }

    /// Parses the leading part of `lines`, returning the unconsumed tail
    /// (any line that is neither a basis row nor part of the `q:` block).
    pub(crate) fn parse_lines<'a>(
        lines: &'a [(usize, &'a str)],
    ) -> Result<(Self, &'a [(usize, &'a str)]), OracleError> {
        let Some(&(first_no, first)) = lines.first() else {
            return Err(ParseError::new(1, 1, "missing qubit count").into());
        };
        let n = parse_usize(first_no, first, first.trim())?;
        let mut rows = Vec::new();
        let mut idx = 1;
        while idx < lines.len() {
            let (line_no, line) = lines[idx];
            let body = line.trim();
            if body.contains(':') || body.contains(' ') {
                break;
            }
            let row = BitVector::parse_bits(body).map_err(|off| {
                ParseError::new(line_no, column_of(line, body) + off, "expected 0 or 1")
            })?;
            if row.len() != n {
                return Err(ParseError::new(
                    line_no,
                    column_of(line, body),
                    format!("basis row has length {}, expected {n}", row.len()),
                )
                .into());
            }
            rows.push(row);
            idx += 1;
        }

        let mut pairs = Vec::new();
        let mut in_q = false;
        while idx < lines.len() {
            let (line_no, line) = lines[idx];
            let body = line.trim();
            let tokens_src = if let Some(rest) = body.strip_prefix("q:") {
                in_q = true;
                rest
            } else if in_q && !body.contains(':') {
                body
            } else {
                break;
            };
            let tokens: Vec<&str> = tokens_src.split_whitespace().collect();
            if !tokens.len().is_multiple_of(2) {
                return Err(ParseError::new(
                    line_no,
                    column_of(line, body),
                    "quadratic terms must come in pairs `i j`",
                )
                .into());
            }
            for pair in tokens.chunks(2) {
                let a = parse_usize(line_no, line, pair[0])?;
                let b = parse_usize(line_no, line, pair[1])?;
                if a == 0 || b == 0 || a > n || b > n || a == b {
                    return Err(ParseError::new(
                        line_no,
                        column_of(line, pair[0]),
                        format!("invalid quadratic term `{a} {b}` for {n} qubits"),
                    )
                    .into());
                }
                pairs.push((a - 1, b - 1));
            }
            idx += 1;
        }

        let basis = BitMatrix::from_rows(rows, n);
        let mut reducer = RowReducer::new(n);
        for (k, row) in basis.rows().iter().enumerate() {
            if !reducer.insert(row.clone()) {
                let (line_no, _) = lines[1 + k];
                return Err(
                    ParseError::new(line_no, 1, "basis row is dependent on earlier rows").into(),
                );
            }
        }
        Ok((Self::new(n, &basis, &pairs)?, &lines[idx..]))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for r in self.subspace.rows() {
            out.push_str(&format!("{r}\n"));
        }
        out.push_str("q:");
        for &(i, j) in &self.pairs {
            out.push_str(&format!(" {} {}", i + 1, j + 1));
        }
        out.push('\n');
        out
    }
}

impl fmt::Debug for QuadraticFormState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadraticFormState")
            .field("n", &self.n)
            .field("subspace", &self.subspace.rows())
            .field("pairs", &self.pairs)
            .finish()
    }
}
