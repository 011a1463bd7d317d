//! Multigraphs embedded in orientable surfaces, given by rotation systems.
//!
//! Edge `e` owns the half-edges (darts) `2e` and `2e + 1`, attached to
//! `ends(e).0` and `ends(e).1`. The rotation at a vertex lists its darts in
//! cyclic order. Faces are the orbits of `φ(h) = σ(α(h))`, where `α` swaps the
//! two darts of an edge and `σ` steps to the next dart around the vertex.
//! A vertex with no darts is counted as a face of its own (an isolated point
//! on a sphere).

mod builders;
mod iso;
mod text;

use std::collections::VecDeque;

use crate::gf2::{BitMatrix, BitVector, RowReducer};
use crate::text::ParseError;

pub use builders::{bouquet, cycle, theta, toric_grid, triangle};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("malformed rotation system: {0}")]
    Malformed(String),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Clone)]
pub struct EmbeddedGraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    ends: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    // Faces as φ-orbits; isolated vertices add empty faces at the end.
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
}

/// Nontrivial homology classes paired so that `x[i]·z[j] = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    /// Edge sets orthogonal to every face boundary, not in the cut space.
    pub x_classes: Vec<BitVector>,
    /// Cycles not in the span of face boundaries.
    pub z_classes: Vec<BitVector>,
}

impl Homology {
    pub fn len(&self) -> usize {
        self.x_classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x_classes.is_empty()
    }
}

impl EmbeddedGraph {
    /// Builds a graph from labels, edge ends and per-vertex rotations of darts.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, usize, usize)>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        let nv = vertices.len();
        if rotation.len() != nv {
            return Err(GraphError::Malformed(format!(
                "{} rotations for {nv} vertices",
                rotation.len()
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(GraphError::Malformed(format!("duplicate vertex `{v}`")));
            }
        }
        let mut labels = Vec::with_capacity(edges.len());
        let mut ends = Vec::with_capacity(edges.len());
        for (label, u, v) in edges {
            if u >= nv || v >= nv {
                return Err(GraphError::Malformed(format!(
                    "edge `{label}` has an unknown end"
                )));
            }
            if labels.contains(&label) {
                return Err(GraphError::Malformed(format!("duplicate edge `{label}`")));
            }
            labels.push(label);
            ends.push([u, v]);
        }
        let ndarts = 2 * ends.len();
        let mut seen = vec![false; ndarts];
        for (v, rot) in rotation.iter().enumerate() {
            for &h in rot {
                if h >= ndarts {
                    return Err(GraphError::Malformed(format!("dart {h} out of range")));
                }
                if seen[h] {
                    return Err(GraphError::Malformed(format!(
                        "half-edge {}.{} appears twice",
                        labels[h / 2],
                        h % 2
                    )));
                }
                seen[h] = true;
                if ends[h / 2][h % 2] != v {
                    return Err(GraphError::Malformed(format!(
                        "half-edge {}.{} listed at `{}` but attached to `{}`",
                        labels[h / 2],
                        h % 2,
                        vertices[v],
                        vertices[ends[h / 2][h % 2]]
                    )));
                }
            }
        }
        if let Some(h) = seen.iter().position(|s| !s) {
            return Err(GraphError::Malformed(format!(
                "half-edge {}.{} missing from the rotations",
                labels[h / 2],
                h % 2
            )));
        }
        Ok(Self::assemble(vertices, labels, ends, rotation))
    }

    // Trusted constructor: the invariants hold by construction.
    fn assemble(
        vertices: Vec<String>,
        edges: Vec<String>,
        ends: Vec<[usize; 2]>,
        rotation: Vec<Vec<usize>>,
    ) -> Self {
        let ndarts = 2 * edges.len();
        let mut sigma = vec![0; ndarts];
        for rot in &rotation {
            for (k, &h) in rot.iter().enumerate() {
                sigma[h] = rot[(k + 1) % rot.len()];
            }
        }
        let mut face_of = vec![usize::MAX; ndarts];
        let mut faces = Vec::new();
        for start in 0..ndarts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = faces.len();
                walk.push(h);
                h = sigma[h ^ 1];
                if h == start {
                    break;
                }
            }
            faces.push(walk);
        }
        for rot in &rotation {
            if rot.is_empty() {
                faces.push(Vec::new());
            }
        }
        Self {
            vertices,
            edges,
            ends,
            rotation,
            sigma,
            faces,
            face_of,
        }
    }

    /// Default labels `v1..vn`, `e1..em`.
    pub fn from_rotations(
        num_vertices: usize,
        edges: &[(usize, usize)],
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        Self::new(
            (1..=num_vertices).map(|i| format!("v{i}")).collect(),
            edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (format!("e{}", i + 1), u, v))
                .collect(),
            rotation,
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edges
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.edges[e]
    }

    pub fn edge_index(&self, label: &str) -> Result<usize, GraphError> {
        self.edges
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GraphError::UnknownEdge(label.to_string()))
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize, GraphError> {
        self.vertices
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    /// End vertices of `e`: the vertex of dart `2e`, then of dart `2e + 1`.
    pub fn ends(&self, e: usize) -> (usize, usize) {
        (self.ends[e][0], self.ends[e][1])
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.ends[e][0] == self.ends[e][1]
    }

    pub fn has_loop(&self) -> bool {
        (0..self.num_edges()).any(|e| self.is_loop(e))
    }

    pub(crate) fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }

    /// Faces as dart walks.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of_dart(&self, h: usize) -> usize {
        self.face_of[h]
    }

    /// Edges met along the boundary walk of face `f`, in order.
    pub fn face_walk_edges(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|h| h / 2).collect()
    }

    /// Edges incident to `v` an odd number of times (loops cancel).
    pub fn star(&self, v: usize) -> BitVector {
        let mut s = BitVector::zeros(self.num_edges());
        for &h in &self.rotation[v] {
            s.flip(h / 2);
        }
        s
    }

    /// Edges met an odd number of times around face `f`.
    pub fn face_boundary(&self, f: usize) -> BitVector {
        let mut s = BitVector::zeros(self.num_edges());
        for &h in &self.faces[f] {
            s.flip(h / 2);
        }
        s
    }

    /// Vertex-edge incidence matrix over GF(2).
    pub fn incidence_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(
            (0..self.num_vertices()).map(|v| self.star(v)).collect(),
            self.num_edges(),
        )
    }

    /// Face-edge incidence matrix over GF(2).
    pub fn face_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(
            (0..self.num_faces())
                .map(|f| self.face_boundary(f))
                .collect(),
            self.num_edges(),
        )
    }

    pub fn cut_space(&self) -> BitMatrix {
        self.incidence_matrix().row_basis()
    }

    pub fn cycle_space(&self) -> BitMatrix {
        self.incidence_matrix().nullspace()
    }

    /// Connected component index per vertex, numbered by first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.num_vertices()];
        let mut next = 0;
        for s in 0..self.num_vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = next;
            while let Some(v) = stack.pop() {
                for &h in &self.rotation[v] {
                    let w = self.ends[h / 2][1 - h % 2];
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn num_components(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Sum of the genera of the components, from `V - E + F = 2c - 2g`.
    pub fn total_genus(&self) -> usize {
        let twice = 2 * self.num_components() as i64 - self.euler_characteristic();
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as usize
    }

    /// Genus of the embedding surface of a connected graph.
    pub fn genus(&self) -> Result<usize, GraphError> {
        let c = self.num_components();
        if c != 1 {
            return Err(GraphError::Disconnected(c));
        }
        Ok(self.total_genus())
    }

    /// Deleting `e` increases the number of components.
    pub fn is_bridge(&self, e: usize) -> bool {
        !self.is_loop(e)
            && self
                .distance_avoiding(self.ends[e][0], self.ends[e][1], e)
                .is_none()
    }

    /// Dual graph: one vertex per face, same edge labels. Darts keep their
    /// indices and the dual rotation at a face is its boundary walk, so the
    /// dual of the dual reproduces the original rotations.
    pub fn dual(&self) -> Self {
        let vertices = (1..=self.num_faces()).map(|f| format!("f{f}")).collect();
        let ends = (0..self.num_edges())
            .map(|e| [self.face_of[2 * e], self.face_of[2 * e + 1]])
            .collect();
        Self::assemble(vertices, self.edges.clone(), ends, self.faces.clone())
    }

    /// `Γ \ e`.
    pub fn delete_edge(&self, e: usize) -> Result<Self, GraphError> {
        self.check_edge(e)?;
        let renumber = |h: usize| if h / 2 > e { h - 2 } else { h };
        let rotation = self
            .rotation
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|&&h| h / 2 != e)
                    .map(|&h| renumber(h))
                    .collect()
            })
            .collect();
        let mut edges = self.edges.clone();
        edges.remove(e);
        let mut ends = self.ends.clone();
        ends.remove(e);
        Ok(Self::assemble(self.vertices.clone(), edges, ends, rotation))
    }

    /// `Γ / e` as a ribbon-graph contraction.
    ///
    /// A non-loop merges its two ends, splicing the rotations. A loop at `v`
    /// with rotation `(h0 A h1 B)` pinches `v` into two vertices with
    /// rotations `A` and `B`; this is the operation dual to deleting the
    /// edge, so `(Γ/e)* = Γ*\e` holds on every surface.
    pub fn contract_edge(&self, e: usize) -> Result<Self, GraphError> {
        self.check_edge(e)?;
        let (a, b) = (2 * e, 2 * e + 1);
        let (u, v) = (self.ends[e][0], self.ends[e][1]);
        let after = |rot: &[usize], h: usize| -> Vec<usize> {
            let k = rot
                .iter()
                .position(|&x| x == h)
                .expect("dart at its vertex");
            rot[k + 1..].iter().chain(&rot[..k]).copied().collect()
        };

        let mut vertices = self.vertices.clone();
        let mut ends = self.ends.clone();
        let mut rotation = self.rotation.clone();
        if u == v {
            let rest = after(&self.rotation[u], a);
            let k = rest
                .iter()
                .position(|&x| x == b)
                .expect("loop has both darts at v");
            let (part_a, part_b) = (rest[..k].to_vec(), rest[k + 1..].to_vec());
            let new_v = vertices.len();
            let mut label = format!("{}.{}", self.vertices[u], self.edges[e]);
            while vertices.contains(&label) {
                label.push('\'');
            }
            vertices.push(label);
            for &h in &part_b {
                ends[h / 2][h % 2] = new_v;
            }
            rotation[u] = part_a;
            rotation.push(part_b);
        } else {
            let mut merged = after(&self.rotation[u], a);
            merged.extend(after(&self.rotation[v], b));
            let (keep, gone) = (u.min(v), u.max(v));
            rotation[keep] = merged;
            rotation.remove(gone);
            vertices.remove(gone);
            for end in ends.iter_mut().flatten() {
                if *end == gone {
                    *end = keep;
                } else if *end > gone {
                    *end -= 1;
                }
            }
        }
        ends.remove(e);
        let renumber = |h: usize| if h / 2 > e { h - 2 } else { h };
        let rotation = rotation
            .into_iter()
            .map(|rot| {
                rot.into_iter()
                    .filter(|&h| h / 2 != e)
                    .map(renumber)
                    .collect()
            })
            .collect();
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Self::assemble(vertices, edges, ends, rotation))
    }

    /// Adds a parallel copy of `e` running alongside it, bounding a new
    /// two-sided face.
    pub fn with_parallel_edge(&self, e: usize, label: &str) -> Result<Self, GraphError> {
        self.check_edge(e)?;
        if self.edges.iter().any(|l| l == label) {
            return Err(GraphError::Malformed(format!("duplicate edge `{label}`")));
        }
        let ne = self.num_edges();
        let (a2, b2) = (2 * ne, 2 * ne + 1);
        let mut rotation = self.rotation.clone();
        let (u, v) = (self.ends[e][0], self.ends[e][1]);
        let pos = rotation[u].iter().position(|&h| h == 2 * e).unwrap();
        rotation[u].insert(pos + 1, a2);
        let pos = rotation[v].iter().position(|&h| h == 2 * e + 1).unwrap();
        rotation[v].insert(pos, b2);
        let mut edges = self.edges.clone();
        edges.push(label.to_string());
        let mut ends = self.ends.clone();
        ends.push([u, v]);
        Ok(Self::assemble(self.vertices.clone(), edges, ends, rotation))
    }

    fn check_edge(&self, e: usize) -> Result<(), GraphError> {
        if e >= self.num_edges() {
            Err(GraphError::UnknownEdge(format!("#{e}")))
        } else {
            Ok(())
        }
    }

    // BFS distance from s to t without using edge `skip`.
    fn distance_avoiding(&self, s: usize, t: usize, skip: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                return Some(dist[v]);
            }
            for &h in &self.rotation[v] {
                if h / 2 == skip {
                    continue;
                }
                let w = self.ends[h / 2][1 - h % 2];
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Length of a shortest cycle; `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        (0..self.num_edges())
            .filter_map(|e| {
                if self.is_loop(e) {
                    Some(1)
                } else {
                    self.distance_avoiding(self.ends[e][0], self.ends[e][1], e)
                        .map(|d| d + 1)
                }
            })
            .min()
    }

    /// Length of a shortest cycle of the dual graph. On the sphere these are
    /// exactly the minimal cuts; on higher genus they also include
    /// homologically nontrivial cocycles. A bridge gives 1.
    pub fn cogirth(&self) -> Option<usize> {
        self.dual().girth()
    }

    pub fn girth_and_cogirth(&self) -> (Option<usize>, Option<usize>) {
        (self.girth(), self.cogirth())
    }

    /// Homology classes of cycles and cocycles, in symplectic pairs.
    pub fn homology(&self) -> Result<Homology, GraphError> {
        let c = self.num_components();
        if c != 1 {
            return Err(GraphError::Disconnected(c));
        }
        let m = self.num_edges();
        let extend = |trivial: BitMatrix, space: BitMatrix| -> Vec<BitVector> {
            let mut r = RowReducer::from_rows(trivial.into_rows(), m);
            space
                .into_rows()
                .into_iter()
                .filter(|v| r.insert(v.clone()))
                .collect()
        };
        let z = extend(self.face_matrix(), self.cycle_space());
        let x = extend(self.incidence_matrix(), self.face_matrix().nullspace());
        assert_eq!(x.len(), z.len(), "homology ranks agree");
        let k = x.len();
        // Gram matrix G_ij = x_i·z_j is invertible; replace x by G⁻¹x.
        let mut aug = BitMatrix::zeros(k, 2 * k);
        for i in 0..k {
            for j in 0..k {
                aug.set(i, j, x[i].dot(&z[j]));
            }
            aug.set(i, k + i, true);
        }
        let r = aug.rref();
        assert_eq!(
            &r.pivots[..],
            &(0..k).collect::<Vec<_>>()[..],
            "pairing is nondegenerate"
        );
        let x_classes = (0..k)
            .map(|i| {
                let mut acc = BitVector::zeros(m);
                for t in 0..k {
                    if r.reduced.get(i, k + t) {
                        acc ^= &x[t];
                    }
                }
                acc
            })
            .collect();
        Ok(Homology {
            x_classes,
            z_classes: z,
        })
    }

    /// Label-preserving isomorphism of embedded graphs (orientation may be
    /// reversed per component). Vertex labels are ignored.
    pub fn is_isomorphic_labeled(&self, other: &Self) -> bool {
        iso::isomorphic(self, other, true)
    }

    /// Isomorphism of embedded graphs ignoring all labels.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        iso::isomorphic(self, other, false)
    }
}

impl std::fmt::Debug for EmbeddedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}
