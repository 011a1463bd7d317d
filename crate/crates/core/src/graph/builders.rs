use super::EmbeddedGraph;

/// Cycle on `n ≥ 1` vertices embedded in the plane.
pub fn cycle(n: usize) -> EmbeddedGraph {
    assert!(n >= 1);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotation = (0..n)
        .map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1])
        .collect();
    EmbeddedGraph::from_rotations(n, &edges, rotation).expect("cycle is well formed")
}

pub fn triangle() -> EmbeddedGraph {
    cycle(3)
}

/// Two vertices joined by three parallel edges, planar.
pub fn theta() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(
        2,
        &[(0, 1), (0, 1), (0, 1)],
        vec![vec![0, 2, 4], vec![1, 5, 3]],
    )
    .expect("theta is well formed")
}

/// One vertex with `k` loops. Interleaved rotations `a b … a' b' …` put the
/// loops on a handle; otherwise they are nested in the plane.
pub fn bouquet(k: usize, interleaved: bool) -> EmbeddedGraph {
    let rotation = if interleaved {
        (0..k)
            .map(|i| 2 * i)
            .chain((0..k).map(|i| 2 * i + 1))
            .collect()
    } else {
        (0..2 * k).collect()
    };
    EmbeddedGraph::from_rotations(1, &vec![(0, 0); k], vec![rotation])
        .expect("bouquet is well formed")
}

/// `rows × cols` square grid on the torus, edges `h{i}_{j}` (east) and
/// `v{i}_{j}` (south) leaving vertex `p{i}_{j}`, listed row by row.
pub fn toric_grid(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 1 && cols >= 1);
    let vid = |i: usize, j: usize| i * cols + j;
    let h = |i: usize, j: usize| 2 * vid(i, j);
    let v = |i: usize, j: usize| 2 * vid(i, j) + 1;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            vertices.push(format!("p{i}_{j}"));
            edges.push((format!("h{i}_{j}"), vid(i, j), vid(i, (j + 1) % cols)));
            edges.push((format!("v{i}_{j}"), vid(i, j), vid((i + 1) % rows, j)));
        }
    }
    // Counterclockwise: east, north, west, south.
    let mut rotation = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let up = (i + rows - 1) % rows;
            let left = (j + cols - 1) % cols;
            rotation.push(vec![
                2 * h(i, j),
                2 * v(up, j) + 1,
                2 * h(i, left) + 1,
                2 * v(i, j),
            ]);
        }
    }
    EmbeddedGraph::new(vertices, edges, rotation).expect("toric grid is well formed")
}
