//! Exact isomorphism of embedded graphs by dart-map propagation.
//!
//! An isomorphism is a bijection `ψ` on darts commuting with `α` and with `σ`
//! (or with `σ⁻¹`, for an orientation-reversing map). Within a connected
//! component one dart's image determines everything, so each component costs
//! at most `2 · #darts` propagation attempts.

use super::EmbeddedGraph;

struct Darts {
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    // component id per dart
    comp: Vec<usize>,
    comps: Vec<Vec<usize>>,
    isolated: usize,
}

fn darts(g: &EmbeddedGraph) -> Darts {
    let n = 2 * g.num_edges();
    let sigma: Vec<usize> = (0..n).map(|h| g.sigma(h)).collect();
    let mut sigma_inv = vec![0; n];
    for (h, &s) in sigma.iter().enumerate() {
        sigma_inv[s] = h;
    }
    let vcomp = g.components();
    let mut ids: Vec<usize> = Vec::new();
    let mut comp = vec![0; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for h in 0..n {
        let c = vcomp[g.ends(h / 2).0];
        let k = match ids.iter().position(|&x| x == c) {
            Some(k) => k,
            None => {
                ids.push(c);
                comps.push(Vec::new());
                ids.len() - 1
            }
        };
        comp[h] = k;
        comps[k].push(h);
    }
    let isolated = (0..g.num_vertices())
        .filter(|&v| g.rotation(v).is_empty())
        .count();
    Darts {
        sigma,
        sigma_inv,
        comp,
        comps,
        isolated,
    }
}

pub(super) fn isomorphic(a: &EmbeddedGraph, b: &EmbeddedGraph, labeled: bool) -> bool {
    if a.num_vertices() != b.num_vertices()
        || a.num_edges() != b.num_edges()
        || a.num_faces() != b.num_faces()
    {
        return false;
    }
    // Edge of `a` -> required edge of `b`.
    let label_map: Option<Vec<usize>> = if labeled {
        let mut m = Vec::with_capacity(a.num_edges());
        for l in a.edge_labels() {
            match b.edge_index(l) {
                Ok(e) => m.push(e),
                Err(_) => return false,
            }
        }
        Some(m)
    } else {
        None
    };
    let da = darts(a);
    let db = darts(b);
    if da.isolated != db.isolated || da.comps.len() != db.comps.len() {
        return false;
    }
    let mut used = vec![false; db.comps.len()];
    let mut map = vec![usize::MAX; 2 * a.num_edges()];
    let mut inv = vec![usize::MAX; 2 * b.num_edges()];
    match_components(
        &da,
        &db,
        label_map.as_deref(),
        0,
        &mut used,
        &mut map,
        &mut inv,
    )
}

fn match_components(
    da: &Darts,
    db: &Darts,
    label_map: Option<&[usize]>,
    k: usize,
    used: &mut [bool],
    map: &mut [usize],
    inv: &mut [usize],
) -> bool {
    if k == da.comps.len() {
        return true;
    }
    let root = da.comps[k][0];
    let candidates: Vec<usize> = match label_map {
        Some(lm) => vec![2 * lm[root / 2], 2 * lm[root / 2] + 1],
        None => (0..db.sigma.len()).collect(),
    };
    for target in candidates {
        let c = db.comp[target];
        if used[c] || db.comps[c].len() != da.comps[k].len() {
            continue;
        }
        for reversed in [false, true] {
            if propagate(da, db, label_map, root, target, reversed, map, inv) {
                used[c] = true;
                if match_components(da, db, label_map, k + 1, used, map, inv) {
                    return true;
                }
                used[c] = false;
            }
            for &h in &da.comps[k] {
                if map[h] != usize::MAX {
                    inv[map[h]] = usize::MAX;
                    map[h] = usize::MAX;
                }
            }
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn propagate(
    da: &Darts,
    db: &Darts,
    label_map: Option<&[usize]>,
    root: usize,
    target: usize,
    reversed: bool,
    map: &mut [usize],
    inv: &mut [usize],
) -> bool {
    let mut stack = vec![(root, target)];
    while let Some((h, t)) = stack.pop() {
        if map[h] != usize::MAX || inv[t] != usize::MAX {
            if map[h] == t {
                continue;
            }
            return false;
        }
        if let Some(lm) = label_map {
            if lm[h / 2] != t / 2 {
                return false;
            }
        }
        map[h] = t;
        inv[t] = h;
        stack.push((h ^ 1, t ^ 1));
        let next_t = if reversed {
            db.sigma_inv[t]
        } else {
            db.sigma[t]
        };
        stack.push((da.sigma[h], next_t));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::{bouquet, cycle, theta, toric_grid, triangle};

    #[test]
    fn distinguishes_embeddings() {
        assert!(triangle().is_isomorphic(&cycle(3)));
        assert!(!triangle().is_isomorphic(&theta()));
        // Same abstract graph, different surfaces.
        assert!(!bouquet(2, true).is_isomorphic(&bouquet(2, false)));
        assert!(toric_grid(3, 3).is_isomorphic_labeled(&toric_grid(3, 3)));
        assert!(!toric_grid(3, 3).is_isomorphic(&toric_grid(2, 3)));
    }

    #[test]
    fn labels_matter_when_asked() {
        let t = triangle();
        let rotated = t.delete_edge(0).unwrap();
        let other = t.delete_edge(1).unwrap();
        assert!(rotated.is_isomorphic(&other));
        assert!(!rotated.is_isomorphic_labeled(&other));
    }
}
