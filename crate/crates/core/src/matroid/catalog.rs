//! Named small matroids and the excluded-minor lists.

use std::fmt;

use super::{BinaryMatroid, MatroidError, MinorWitness};
use crate::gf2::{BitMatrix, BitVector};

/// Cycle matroid of a multigraph on `num_vertices` vertices; loops give
/// zero columns. Labels are `1..=m` in edge order.
pub fn cycle_matroid(num_vertices: usize, edges: &[(usize, usize)]) -> BinaryMatroid {
    let mut rows = vec![BitVector::zeros(edges.len()); num_vertices];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u != v {
            rows[u].set(e, true);
            rows[v].set(e, true);
        }
    }
    BinaryMatroid::from_matrix_unlabeled(&BitMatrix::from_rows(rows, edges.len()))
}

/// Fano matroid: column `j` is the binary expansion of `j`, `j = 1..=7`.
pub fn fano() -> BinaryMatroid {
    let rows = (0..3)
        .map(|r| BitVector::from_indices(7, (1..=7).filter(|j| j >> r & 1 == 1).map(|j| j - 1)))
        .collect();
    BinaryMatroid::from_matrix_unlabeled(&BitMatrix::from_rows(rows, 7))
}

/// `M(K5)`.
pub fn k5() -> BinaryMatroid {
    let edges: Vec<_> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    cycle_matroid(5, &edges)
}

/// `M(K3,3)`.
pub fn k33() -> BinaryMatroid {
    let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    cycle_matroid(6, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcludedMinor {
    F7,
    F7Dual,
    K5,
    K5Dual,
    K33,
    K33Dual,
}

pub const GRAPHIC_EXCLUDED: &[ExcludedMinor] = &[
    ExcludedMinor::F7,
    ExcludedMinor::F7Dual,
    ExcludedMinor::K5Dual,
    ExcludedMinor::K33Dual,
];

pub const COGRAPHIC_EXCLUDED: &[ExcludedMinor] = &[
    ExcludedMinor::F7,
    ExcludedMinor::F7Dual,
    ExcludedMinor::K5,
    ExcludedMinor::K33,
];

impl ExcludedMinor {
    pub fn matroid(self) -> BinaryMatroid {
        match self {
            Self::F7 => fano(),
            Self::F7Dual => fano().dual(),
            Self::K5 => k5(),
            Self::K5Dual => k5().dual(),
            Self::K33 => k33(),
            Self::K33Dual => k33().dual(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::F7 => "F7",
            Self::F7Dual => "F7*",
            Self::K5 => "M(K5)",
            Self::K5Dual => "M*(K5)",
            Self::K33 => "M(K3,3)",
            Self::K33Dual => "M*(K3,3)",
        }
    }
}

impl fmt::Display for ExcludedMinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(super) fn first_excluded(
    m: &BinaryMatroid,
    list: &[ExcludedMinor],
) -> Result<Option<(ExcludedMinor, MinorWitness)>, MatroidError> {
    for &x in list {
        if let Some(w) = m.find_minor(&x.matroid())? {
            return Ok(Some((x, w)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shapes() {
        let shapes: Vec<(usize, usize)> = [
            ExcludedMinor::F7,
            ExcludedMinor::F7Dual,
            ExcludedMinor::K5,
            ExcludedMinor::K5Dual,
            ExcludedMinor::K33,
            ExcludedMinor::K33Dual,
        ]
        .iter()
        .map(|x| (x.matroid().rank(), x.matroid().size()))
        .collect();
        assert_eq!(
            shapes,
            vec![(3, 7), (4, 7), (4, 10), (6, 10), (5, 9), (4, 9)]
        );
        assert_eq!(
            fano()
                .circuits()
                .unwrap()
                .iter()
                .filter(|c| c.len() == 3)
                .count(),
            7
        );
    }

    #[test]
    fn graphic_screens() {
        let f = fano();
        assert!(!f.is_graphic().unwrap() && !f.is_cographic().unwrap());
        let k5d = k5().dual();
        assert!(!k5d.is_graphic().unwrap());
        assert!(k5d.is_cographic().unwrap());
        assert!(k33().is_graphic().unwrap() && !k33().is_cographic().unwrap());
        let (x, _) = k33().dual().graphic_obstruction().unwrap().unwrap();
        assert_eq!(x, ExcludedMinor::K33Dual);
    }

    #[test]
    fn petersen_is_graphic() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        let p = cycle_matroid(10, &edges);
        assert_eq!((p.size(), p.rank()), (15, 9));
        assert!(p.is_graphic().unwrap());
    }
}
