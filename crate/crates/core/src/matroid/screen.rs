//! Screening CSS states `S = [G 0; 0 H]` by graphicness of the matroid of `G`.

use std::fmt;

use super::{BinaryMatroid, ExcludedMinor, MatroidError, MinorWitness};
use crate::gf2::{BitMatrix, BitVector};
use crate::stabilizer::EnumCap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realization {
    Graphic,
    Cographic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScreenOutcome {
    RuledOut(Realization),
    /// Neither graphic nor cographic; the obstructions found for each.
    Inconclusive {
        graphic: (ExcludedMinor, MinorWitness),
        cographic: (ExcludedMinor, MinorWitness),
    },
}

impl fmt::Display for ScreenOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RuledOut(Realization::Graphic) => f.write_str("RULED_OUT graphic"),
            Self::RuledOut(Realization::Cographic) => f.write_str("RULED_OUT cographic"),
            Self::Inconclusive { .. } => f.write_str("INCONCLUSIVE"),
        }
    }
}

/// Minimum nonzero weight in the row space, `None` for the zero code.
pub fn min_distance(m: &BitMatrix, cap: EnumCap) -> Result<Option<usize>, MatroidError> {
    let basis = m.row_basis();
    let k = basis.nrows();
    cap.check(1u128 << k)?;
    let mut cur = BitVector::zeros(m.ncols());
    let mut best = None;
    for i in 1u128..1 << k {
        cur ^= basis.row(i.trailing_zeros() as usize);
        let w = cur.weight();
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    Ok(best)
}

/// Rules out CSS states whose code matroid is graphic or cographic, given a
/// generator matrix `G` and parity-check matrix `H` with `d, d⊥ ≥ 3`.
pub fn css_counterexample_screen(
    g: &BitMatrix,
    h: &BitMatrix,
    cap: EnumCap,
) -> Result<ScreenOutcome, MatroidError> {
    if g.ncols() != h.ncols() {
        return Err(MatroidError::Hypothesis(format!(
            "G has {} columns, H has {}",
            g.ncols(),
            h.ncols()
        )));
    }
    if !g.mul_transpose(h).is_zero() {
        return Err(MatroidError::NotOrthogonal);
    }
    let n = g.ncols();
    if g.rank() + h.rank() != n {
        return Err(MatroidError::Hypothesis(format!(
            "rank(G) + rank(H) = {} but n = {n}",
            g.rank() + h.rank()
        )));
    }
    for (name, m) in [("d", g), ("dual distance", h)] {
        if let Some(d) = min_distance(m, cap)? {
            if d < 3 {
                return Err(MatroidError::Hypothesis(format!("{name} = {d} < 3")));
            }
        }
    }
    let mg = BinaryMatroid::from_matrix_unlabeled(g);
    let Some(graphic) = mg.graphic_obstruction()? else {
        return Ok(ScreenOutcome::RuledOut(Realization::Graphic));
    };
    let Some(cographic) = mg.cographic_obstruction()? else {
        return Ok(ScreenOutcome::RuledOut(Realization::Cographic));
    };
    Ok(ScreenOutcome::Inconclusive { graphic, cographic })
}

#[cfg(test)]
mod tests {
    use super::super::{cycle_matroid, fano, k33};
    use super::*;

    fn hamming() -> (BitMatrix, BitMatrix) {
        let h = fano().representation().clone();
        (h.nullspace(), h)
    }

    #[test]
    fn hamming_is_inconclusive() {
        let (g, h) = hamming();
        let out = css_counterexample_screen(&g, &h, EnumCap::default()).unwrap();
        assert_eq!(out.to_string(), "INCONCLUSIVE");
        assert!(BinaryMatroid::from_matrix_unlabeled(&h)
            .equals(&fano())
            .unwrap());
        assert!(BinaryMatroid::from_matrix_unlabeled(&g)
            .equals(&fano().dual())
            .unwrap());
    }

    #[test]
    fn cut_flow_pair_is_ruled_out() {
        let m = k33();
        let g = m.representation().clone();
        let h = g.nullspace();
        let out = css_counterexample_screen(&g, &h, EnumCap::default()).unwrap();
        assert_eq!(out, ScreenOutcome::RuledOut(Realization::Graphic));
        let swapped = css_counterexample_screen(&h, &g, EnumCap::default()).unwrap();
        assert_eq!(swapped.to_string(), "RULED_OUT cographic");
    }

    #[test]
    fn hypothesis_errors() {
        let c4 = cycle_matroid(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let g = c4.representation().clone();
        let h = g.nullspace();
        // A 4-cycle has 2-edge cuts.
        assert!(matches!(
            css_counterexample_screen(&g, &h, EnumCap::default()),
            Err(MatroidError::Hypothesis(m)) if m.starts_with("d = 2")
        ));
        let (g, _) = hamming();
        assert_eq!(
            css_counterexample_screen(&g, &g, EnumCap::default()),
            Err(MatroidError::NotOrthogonal)
        );
    }
}
