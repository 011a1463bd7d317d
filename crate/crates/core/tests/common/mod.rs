#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use stablulc_core::graph::EmbeddedGraph;

/// Connected multigraph with `num_edges` edges (loops and parallel edges
/// allowed) and a uniformly random rotation at each vertex.
pub fn random_embedded_graph<R: Rng>(rng: &mut R, num_edges: usize) -> EmbeddedGraph {
    assert!(num_edges >= 1);
    let nv = rng.gen_range(1..=num_edges + 1);
    let mut edges = Vec::with_capacity(num_edges);
    for v in 1..nv {
        edges.push((rng.gen_range(0..v), v));
    }
    while edges.len() < num_edges {
        edges.push((rng.gen_range(0..nv), rng.gen_range(0..nv)));
    }
    edges.shuffle(rng);
    let mut rotations = darts_at(nv, &edges);
    for rot in &mut rotations {
        rot.shuffle(rng);
    }
    EmbeddedGraph::from_rotations(nv, &edges, rotations).expect("valid rotation system")
}

fn darts_at(nv: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut rot = vec![Vec::new(); nv];
    for (e, &(u, v)) in edges.iter().enumerate() {
        rot[u].push(2 * e);
        rot[v].push(2 * e + 1);
    }
    rot
}

/// Every connected embedded multigraph with exactly `num_edges` edges, up to
/// relabelling of vertices and of edges (duplicates up to isomorphism are
/// kept). Each vertex rotation is enumerated with its first dart fixed.
pub fn all_embedded_graphs(num_edges: usize) -> Vec<EmbeddedGraph> {
    let mut out = Vec::new();
    for nv in 1..=num_edges + 1 {
        let pairs: Vec<(usize, usize)> =
            (0..nv).flat_map(|u| (u..nv).map(move |v| (u, v))).collect();
        let mut multiset = Vec::new();
        edge_multisets(&pairs, 0, num_edges, &mut multiset, &mut |edges| {
            if !connected(nv, edges) {
                return;
            }
            let base = darts_at(nv, edges);
            for_each_rotation(&base, 0, &mut base.clone(), &mut |rot| {
                out.push(
                    EmbeddedGraph::from_rotations(nv, edges, rot.to_vec())
                        .expect("valid rotation system"),
                );
            });
        });
    }
    out
}

fn edge_multisets(
    pairs: &[(usize, usize)],
    from: usize,
    left: usize,
    cur: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]),
) {
    if left == 0 {
        f(cur);
        return;
    }
    for i in from..pairs.len() {
        cur.push(pairs[i]);
        edge_multisets(pairs, i, left - 1, cur, f);
        cur.pop();
    }
}

fn connected(nv: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..nv).all(|v| find(&mut parent, v) == root)
}

fn for_each_rotation(
    base: &[Vec<usize>],
    v: usize,
    cur: &mut Vec<Vec<usize>>,
    f: &mut impl FnMut(&[Vec<usize>]),
) {
    if v == base.len() {
        f(cur);
        return;
    }
    if base[v].len() <= 2 {
        cur[v] = base[v].clone();
        for_each_rotation(base, v + 1, cur, f);
        return;
    }
    let mut rest = base[v][1..].to_vec();
    permutations(&mut rest, 0, &mut |perm| {
        let mut rot = vec![base[v][0]];
        rot.extend_from_slice(perm);
        cur[v] = rot;
        for_each_rotation(base, v + 1, cur, f);
    });
}

fn permutations(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Subsets of `0..k` as index lists, in binary counting order.
pub fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << k)
        .map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}
