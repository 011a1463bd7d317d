//! Binary matroids: vector matroids of GF(2) matrices with labelled columns.

mod catalog;
mod minor;
mod screen;
mod surface;

pub use catalog::{
    cycle_matroid, fano, k33, k5, ExcludedMinor, COGRAPHIC_EXCLUDED, GRAPHIC_EXCLUDED,
};
pub use minor::{MinorWitness, MAX_ISO_SIZE, MAX_MINOR_SIZE};
pub use screen::{css_counterexample_screen, min_distance, Realization, ScreenOutcome};
pub use surface::{
    minor_closure_check, surface_code_matroid, surface_code_matroid_z, ClosureReport,
};

use std::fmt;

use crate::gf2::BitMatrix;
use crate::text::{column_of, content_lines, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("{labels} labels for {cols} columns")]
    LabelCount { labels: usize, cols: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("{size} elements exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("G·Hᵀ ≠ 0")]
    NotOrthogonal,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Stabilizer(#[from] crate::stabilizer::StabilizerError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Vector matroid of a GF(2) matrix. The representation is kept in reduced
/// row echelon form without zero rows, so two matroids on the same labels
/// are equal exactly when their representations are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    rep: BitMatrix,
    labels: Vec<String>,
}

impl BinaryMatroid {
    pub fn from_matrix(m: &BitMatrix, labels: Vec<String>) -> Result<Self, MatroidError> {
        if labels.len() != m.ncols() {
            return Err(MatroidError::LabelCount {
                labels: labels.len(),
                cols: m.ncols(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(MatroidError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self {
            rep: m.row_basis(),
            labels,
        })
    }

    /// Labels `1..=n`.
    pub fn from_matrix_unlabeled(m: &BitMatrix) -> Self {
        Self::from_matrix(m, (1..=m.ncols()).map(|i| i.to_string()).collect())
            .expect("default labels are distinct")
    }

    pub fn representation(&self) -> &BitMatrix {
        &self.rep
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rep.nrows()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, MatroidError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatroidError::UnknownElement(label.to_string()))
    }

    pub fn delete(&self, label: &str) -> Result<Self, MatroidError> {
        Ok(self.delete_index(self.index_of(label)?))
    }

    pub fn contract(&self, label: &str) -> Result<Self, MatroidError> {
        Ok(self.contract_index(self.index_of(label)?))
    }

    pub fn delete_index(&self, e: usize) -> Self {
        let mut labels = self.labels.clone();
        labels.remove(e);
        Self {
            rep: self.rep.remove_column(e).row_basis(),
            labels,
        }
    }

    /// Pivots on a row with a 1 in column `e`, then drops that row and the
    /// column. A loop is simply deleted.
    pub fn contract_index(&self, e: usize) -> Self {
        let rows = self.rep.rows();
        let Some(p) = rows.iter().position(|r| r.get(e)) else {
            return self.delete_index(e);
        };
        let pivot = rows[p].clone();
        let reduced: Vec<_> = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, r)| if r.get(e) { r ^ &pivot } else { r.clone() })
            .collect();
        let m = BitMatrix::from_rows(reduced, self.size()).remove_column(e);
        let mut labels = self.labels.clone();
        labels.remove(e);
        Self {
            rep: m.row_basis(),
            labels,
        }
    }

    /// Dual matroid: the null space of the representation.
    pub fn dual(&self) -> Self {
        Self {
            rep: self.rep.nullspace().row_basis(),
            labels: self.labels.clone(),
        }
    }

    /// Same matroid after permuting columns into `order` (a list of labels).
    pub fn reorder(&self, order: &[String]) -> Result<Self, MatroidError> {
        if order.len() != self.size() {
            return Err(MatroidError::GroundMismatch);
        }
        let idx = order
            .iter()
            .map(|l| self.index_of(l).map_err(|_| MatroidError::GroundMismatch))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_matrix(&self.rep.select_columns(&idx), order.to_vec())
    }

    /// Equality on a common ground set, aligning columns by label.
    pub fn equals(&self, other: &Self) -> Result<bool, MatroidError> {
        let aligned = other.reorder(&self.labels)?;
        Ok(self.rep == aligned.rep)
    }

    /// Circuits as sorted index lists, ordered by size then lexicographically.
    /// The null space is enumerated, so its dimension is capped.
    pub fn circuits(&self) -> Result<Vec<Vec<usize>>, MatroidError> {
        let nullity = self.size() - self.rank();
        if self.size() > 64 || nullity > minor::MAX_NULLITY {
            return Err(MatroidError::SizeCap {
                size: self.size(),
                cap: 64.min(self.rank() + minor::MAX_NULLITY),
            });
        }
        let mut out: Vec<Vec<usize>> = minor::circuit_masks(self)
            .into_iter()
            .map(|m| (0..self.size()).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Label-free isomorphism. Sizes above [`MAX_ISO_SIZE`] are refused.
    pub fn is_isomorphic(&self, other: &Self) -> Result<bool, MatroidError> {
        for m in [self, other] {
            if m.size() > MAX_ISO_SIZE {
                return Err(MatroidError::SizeCap {
                    size: m.size(),
                    cap: MAX_ISO_SIZE,
                });
            }
        }
        Ok(minor::isomorphic(self, other))
    }

    /// Lexicographically least `(deleted, contracted)` pair giving a minor
    /// isomorphic to `target`.
    pub fn find_minor(&self, target: &Self) -> Result<Option<MinorWitness>, MatroidError> {
        if self.size() > MAX_MINOR_SIZE {
            return Err(MatroidError::SizeCap {
                size: self.size(),
                cap: MAX_MINOR_SIZE,
            });
        }
        Ok(minor::find_minor(self, target))
    }

    pub fn has_minor(&self, target: &Self) -> Result<bool, MatroidError> {
        Ok(self.find_minor(target)?.is_some())
    }

    /// First excluded minor for graphicness found in `self`, if any.
    pub fn graphic_obstruction(
        &self,
    ) -> Result<Option<(ExcludedMinor, MinorWitness)>, MatroidError> {
        catalog::first_excluded(self, GRAPHIC_EXCLUDED)
    }

    pub fn cographic_obstruction(
        &self,
    ) -> Result<Option<(ExcludedMinor, MinorWitness)>, MatroidError> {
        catalog::first_excluded(self, COGRAPHIC_EXCLUDED)
    }

    pub fn is_graphic(&self) -> Result<bool, MatroidError> {
        Ok(self.graphic_obstruction()?.is_none())
    }

    pub fn is_cographic(&self) -> Result<bool, MatroidError> {
        Ok(self.cographic_obstruction()?.is_none())
    }

    /// Matrix text followed by a `labels:` line. Without that line the
    /// labels default to `1..=n`.
    pub fn parse(text: &str) -> Result<Self, MatroidError> {
        let lines = content_lines(text);
        let (m, used) = BitMatrix::parse_lines(&lines)?;
        let rest = &lines[used..];
        match rest {
            [] => Ok(Self::from_matrix_unlabeled(&m)),
            [(line_no, line)] => {
                let body = line.trim();
                let Some(tail) = body.strip_prefix("labels:") else {
                    return Err(ParseError::new(
                        *line_no,
                        column_of(line, body),
                        "expected `labels:`",
                    )
                    .into());
                };
                let labels: Vec<String> = tail.split_whitespace().map(str::to_string).collect();
                if labels.len() != m.ncols() {
                    return Err(ParseError::new(
                        *line_no,
                        column_of(line, body),
                        format!("{} labels for {} columns", labels.len(), m.ncols()),
                    )
                    .into());
                }
                Self::from_matrix(&m, labels)
            }
            [_, (line_no, line), ..] => {
                Err(
                    ParseError::new(*line_no, column_of(line, line.trim()), "unexpected line")
                        .into(),
                )
            }
        }
    }

    pub fn to_text(&self) -> String {
        format!("{}labels: {}\n", self.rep.to_text(), self.labels.join(" "))
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BinaryMatroid(rank {}, {:?}, {:?})",
            self.rank(),
            self.labels,
            self.rep
        )
    }
}
