use std::fmt;

use super::BitVector;
use crate::text::{column_of, content_lines, parse_usize, ParseError};

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

/// Output of [`BitMatrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; zero rows collected at the bottom.
    pub reduced: BitMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    /// A matrix with no rows and `cols` columns.
    pub fn empty(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    /// Panics if the rows disagree on length.
    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {} != {cols}", r.len());
        }
        Self { rows, cols }
    }

    /// Convenience for tests and catalogs: each string is a row of `0`/`1`.
    pub fn from_strs(rows: &[&str]) -> Self {
        let parsed: Vec<BitVector> = rows
            .iter()
            .map(|r| BitVector::parse_bits(r).expect("row must be 0/1 characters"))
            .collect();
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(parsed, cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_bools(&self.rows.iter().map(|r| r.get(c)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones_iter() {
                out.rows[j].set(i, true);
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self {
            rows,
            cols: self.cols,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self {
            rows: self.rows.iter().map(|r| r.select(cols)).collect(),
            cols: cols.len(),
        }
    }

    pub fn remove_column(&self, c: usize) -> Self {
        Self {
            rows: self.rows.iter().map(|r| r.remove(c)).collect(),
            cols: self.cols - 1,
        }
    }

    /// `M x` for a column vector `x`.
    pub fn mul_vec(&self, x: &BitVector) -> BitVector {
        BitVector::from_bools(&self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>())
    }

    /// `self · otherᵀ`, i.e. all pairwise row inner products.
    pub fn mul_transpose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let rows = self
            .rows
            .iter()
            .map(|a| {
                BitVector::from_bools(&other.rows.iter().map(|b| a.dot(b)).collect::<Vec<_>>())
            })
            .collect();
        Self {
            rows,
            cols: other.rows.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    /// Reduced row-echelon form with lowest-index pivot selection.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    *row ^= &pivot_row;
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        Rref {
            reduced: Self {
                rows,
                cols: self.cols,
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the row space: the nonzero rows of the rref.
    pub fn row_basis(&self) -> Self {
        let Rref { reduced, rank, .. } = self.rref();
        Self {
            rows: reduced.rows.into_iter().take(rank).collect(),
            cols: self.cols,
        }
    }

    /// Basis (as rows) of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Self {
        let Rref {
            reduced,
            rank,
            pivots,
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::unit(self.cols, free);
            for (r, &p) in pivots.iter().enumerate() {
                if reduced.rows[r].get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        Self {
            rows: basis,
            cols: self.cols,
        }
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        RowReducer::from_rows(self.rows.iter().cloned(), self.cols).contains(v)
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space(&self, other: &Self) -> bool {
        self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    /// Parses the `rows cols` header followed by `rows` lines of `0`/`1`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines = content_lines(text);
        let (m, used) = Self::parse_lines(&lines)?;
        if let Some(&(line_no, line)) = lines.get(used) {
            return Err(ParseError::new(
                line_no,
                1,
                format!("unexpected trailing content `{}`", line.trim()),
            ));
        }
        Ok(m)
    }

    /// Parses a matrix block from the start of `lines`, returning it and the
    /// number of lines consumed.
    pub(crate) fn parse_lines(lines: &[(usize, &str)]) -> Result<(Self, usize), ParseError> {
        let Some(&(line_no, header)) = lines.first() else {
            return Err(ParseError::new(0, 1, "missing `rows cols` header"));
        };
        let tokens: Vec<&str> = header.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line_no, 1, "header must be `rows cols`"));
        }
        let nrows = parse_usize(line_no, header, tokens[0])?;
        let ncols = parse_usize(line_no, header, tokens[1])?;
        let mut rows = Vec::with_capacity(nrows);
        for k in 0..nrows {
            let Some(&(ln, line)) = lines.get(1 + k) else {
                return Err(ParseError::new(
                    line_no,
                    1,
                    format!("expected {nrows} rows, found {k}"),
                ));
            };
            let body = line.trim();
            let row = BitVector::parse_bits(body).map_err(|c| {
                ParseError::new(
                    ln,
                    column_of(line, body) + c,
                    "matrix rows may only contain `0` and `1`",
                )
            })?;
            if row.len() != ncols {
                return Err(ParseError::new(
                    ln,
                    column_of(line, body),
                    format!("ragged row: expected {ncols} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        Ok((Self { rows, cols: ncols }, 1 + nrows))
    }

    /// Text form accepted by [`BitMatrix::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows.len(), self.cols);
        for r in &self.rows {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows.len(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Incrementally maintained echelon basis. Used wherever rows arrive one at a
/// time and only independence or membership matters.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    // (pivot column, row) with each row reduced against all earlier pivots.
    basis: Vec<(usize, BitVector)>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            basis: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = BitVector>>(rows: I, cols: usize) -> Self {
        let mut r = Self::new(cols);
        for row in rows {
            r.insert(row);
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; the residue is zero iff `v` is in the span.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        for (p, row) in &self.basis {
            if v.get(*p) {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns true when it was independent of the current basis.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.cols);
        let r = self.reduce(&v);
        match r.first_one() {
            None => false,
            Some(p) => {
                self.basis.push((p, r));
                true
            }
        }
    }
}
