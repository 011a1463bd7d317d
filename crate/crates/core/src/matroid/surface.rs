//! Matroids of CSS surface-code states.

use super::{BinaryMatroid, MatroidError};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::EmbeddedGraph;

fn chosen_classes(classes: &[BitVector], chosen: &[usize]) -> Result<Vec<BitVector>, MatroidError> {
    let mut out = Vec::with_capacity(chosen.len());
    for (k, &i) in chosen.iter().enumerate() {
        if i >= classes.len() {
            return Err(MatroidError::InvalidCocycle(format!(
                "class {i} requested but the graph has {}",
                classes.len()
            )));
        }
        if chosen[..k].contains(&i) {
            return Err(MatroidError::InvalidCocycle(format!(
                "class {i} chosen twice"
            )));
        }
        out.push(classes[i].clone());
    }
    Ok(out)
}

/// Vector matroid of `S_X`: the chosen nontrivial cocycles (indices into
/// the homology basis) stacked on the vertex-edge incidence matrix.
pub fn surface_code_matroid(
    g: &EmbeddedGraph,
    chosen: &[usize],
) -> Result<BinaryMatroid, MatroidError> {
    let hom = g.homology()?;
    let cocycles = chosen_classes(&hom.x_classes, chosen)?;
    with_cocycles(
        &g.incidence_matrix(),
        &g.face_matrix(),
        cocycles,
        g.edge_labels(),
    )
}

/// Vector matroid of `S_Z`: face boundaries plus the cycles paired with
/// the unchosen cocycles.
pub fn surface_code_matroid_z(
    g: &EmbeddedGraph,
    chosen: &[usize],
) -> Result<BinaryMatroid, MatroidError> {
    let hom = g.homology()?;
    chosen_classes(&hom.x_classes, chosen)?;
    let mut m = g.face_matrix();
    for (j, z) in hom.z_classes.into_iter().enumerate() {
        if !chosen.contains(&j) {
            m.push_row(z);
        }
    }
    BinaryMatroid::from_matrix(&m, g.edge_labels().to_vec())
}

/// Stacks `cocycles` on `incidence` after checking each is orthogonal to
/// every face (region) boundary.
fn with_cocycles(
    incidence: &BitMatrix,
    regions: &BitMatrix,
    cocycles: Vec<BitVector>,
    labels: &[String],
) -> Result<BinaryMatroid, MatroidError> {
    let mut m = incidence.clone();
    for c in cocycles {
        if let Some(f) = regions.rows().iter().position(|r| r.dot(&c)) {
            return Err(MatroidError::InvalidCocycle(format!(
                "{c} meets face {} oddly",
                f + 1
            )));
        }
        m.push_row(c);
    }
    BinaryMatroid::from_matrix(&m, labels.to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    /// `M \ e` equals the matroid built from the graph `Γ \ e`.
    pub deletion: bool,
    /// `M / e` equals the matroid built from the graph `Γ / e`.
    pub contraction: bool,
    /// Both sides of `e` lie on one face, so `Γ \ e` was kept on the
    /// original surface with that face as a single region.
    pub kept_surface: bool,
    pub failures: Vec<String>,
}

impl ClosureReport {
    pub fn holds(&self) -> bool {
        self.deletion && self.contraction
    }
}

/// Boundaries of the regions of `Γ \ e` on the surface of `Γ`, and whether
/// they differ from the faces of the cellular `Γ \ e`.
fn deletion_regions(g: &EmbeddedGraph, e: usize, deleted: &EmbeddedGraph) -> (BitMatrix, bool) {
    let (f1, f2) = (g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1));
    if f1 != f2 {
        return (deleted.face_matrix(), false);
    }
    let rows = (0..g.num_faces())
        .map(|f| g.face_boundary(f).remove(e))
        .collect();
    (BitMatrix::from_rows(rows, g.num_edges() - 1), true)
}

/// Checks `M(ψ_Γ) \ e = M(ψ_{Γ\e})` and `M(ψ_Γ) / e = M(ψ_{Γ/e})` by
/// building each side separately: matroid minors on one side, graph minors
/// with re-routed cocycles on the other.
///
/// Cocycles through a non-loop `e = uv` are re-routed by adding the star of
/// `u`. For a loop, contraction follows the matroid convention `Γ/e = Γ\e`;
/// one cocycle through `e` is used as the pivot and added to the others
/// through `e`.
pub fn minor_closure_check(
    g: &EmbeddedGraph,
    e: usize,
    chosen: &[usize],
) -> Result<ClosureReport, MatroidError> {
    if e >= g.num_edges() {
        return Err(MatroidError::UnknownElement(format!("edge index {e}")));
    }
    if g.num_edges() < 2 {
        return Err(MatroidError::Hypothesis(
            "cannot remove the last edge".into(),
        ));
    }
    let hom = g.homology()?;
    let cocycles = chosen_classes(&hom.x_classes, chosen)?;
    let m = with_cocycles(
        &g.incidence_matrix(),
        &g.face_matrix(),
        cocycles.clone(),
        g.edge_labels(),
    )?;
    let label = g.edge_label(e);
    let mut failures = Vec::new();

    let deleted = g.delete_edge(e)?;
    let (regions, kept_surface) = deletion_regions(g, e, &deleted);
    let side = |rows: Vec<BitVector>,
                graph: &EmbeddedGraph,
                regions: &BitMatrix,
                left: BinaryMatroid,
                what: &str,
                failures: &mut Vec<String>|
     -> Result<bool, MatroidError> {
        match with_cocycles(
            &graph.incidence_matrix(),
            regions,
            rows,
            graph.edge_labels(),
        ) {
            Ok(right) => {
                let same = left.equals(&right)?;
                if !same {
                    failures.push(format!("{what}: matroids differ"));
                }
                Ok(same)
            }
            Err(MatroidError::InvalidCocycle(msg)) => {
                failures.push(format!("{what}: {msg}"));
                Ok(false)
            }
            Err(other) => Err(other),
        }
    };

    let restricted: Vec<BitVector> = cocycles.iter().map(|c| c.remove(e)).collect();
    let deletion = side(
        restricted,
        &deleted,
        &regions,
        m.delete(label)?,
        "deletion",
        &mut failures,
    )?;

    let contraction = if g.is_loop(e) {
        let mut rows = cocycles.clone();
        if let Some(p) = rows.iter().position(|c| c.get(e)) {
            let pivot = rows.remove(p);
            for c in rows.iter_mut().filter(|c| c.get(e)) {
                *c ^= &pivot;
            }
        }
        let rows = rows.iter().map(|c| c.remove(e)).collect();
        side(
            rows,
            &deleted,
            &regions,
            m.contract(label)?,
            "contraction",
            &mut failures,
        )?
    } else {
        let star_u = g.star(g.ends(e).0);
        let rows = cocycles
            .iter()
            .map(|c| if c.get(e) { c ^ &star_u } else { c.clone() })
            .map(|c| c.remove(e))
            .collect();
        let contracted = g.contract_edge(e)?;
        side(
            rows,
            &contracted,
            &contracted.face_matrix(),
            m.contract(label)?,
            "contraction",
            &mut failures,
        )?
    };

    Ok(ClosureReport {
        deletion,
        contraction,
        kept_surface,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bouquet, theta, toric_grid, triangle};

    #[test]
    fn empty_choice_is_cycle_matroid() {
        for g in [triangle(), theta(), toric_grid(3, 3)] {
            let m = surface_code_matroid(&g, &[]).unwrap();
            let inc = BinaryMatroid::from_matrix(&g.incidence_matrix(), g.edge_labels().to_vec())
                .unwrap();
            assert!(m.equals(&inc).unwrap());
        }
        let t = surface_code_matroid(&triangle(), &[]).unwrap();
        assert!(t
            .is_isomorphic(&super::super::cycle_matroid(3, &[(0, 1), (1, 2), (2, 0)]))
            .unwrap());
    }

    #[test]
    fn toric_matroid_and_dual() {
        let g = toric_grid(3, 3);
        let m = surface_code_matroid(&g, &[0, 1]).unwrap();
        assert_eq!((m.rank(), m.size()), (10, 18));
        for chosen in [&[][..], &[0], &[1], &[0, 1]] {
            let x = surface_code_matroid(&g, chosen).unwrap();
            let z = surface_code_matroid_z(&g, chosen).unwrap();
            assert!(x.dual().equals(&z).unwrap());
        }
        assert!(matches!(
            surface_code_matroid(&g, &[2]),
            Err(MatroidError::InvalidCocycle(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let t = triangle();
        for e in 0..3 {
            assert!(minor_closure_check(&t, e, &[]).unwrap().holds());
        }
        let g = toric_grid(3, 3);
        for e in 0..g.num_edges() {
            let r = minor_closure_check(&g, e, &[0, 1]).unwrap();
            assert!(r.holds(), "edge {e}: {:?}", r.failures);
            assert!(!r.kept_surface);
        }
    }

    #[test]
    fn loops_on_the_torus() {
        // One vertex, two loops, one face: deleting either loop would split
        // the face on the sphere, so the torus is kept.
        let g = bouquet(2, true);
        for chosen in [&[][..], &[0], &[1], &[0, 1]] {
            for e in 0..2 {
                let r = minor_closure_check(&g, e, chosen).unwrap();
                assert!(r.holds(), "{chosen:?} {e}: {:?}", r.failures);
                assert!(r.kept_surface);
            }
        }
    }
}
