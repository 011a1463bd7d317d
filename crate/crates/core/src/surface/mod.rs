//! Surface codes and surface-code states on embedded graphs, with LU = LC
//! certificates built from minimal support elements.
//!
//! Qubits are edges. `A_v` is X on the edges at `v`, `B_f` is Z on the
//! boundary of `f`.

mod grid;

pub use grid::{
    grid_cluster_state, grid_edges, grid_minimality_certificate, has_no_short_cycles, GridFailure,
    GridOutcome,
};

use std::fmt;

use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{EmbeddedGraph, GraphError, Homology};
use crate::stabilizer::{
    msc_certificate_from_report, EnumCap, MscOutcome, PauliOperator, StabilizerError,
    StabilizerGroup,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Stabilizer(#[from] StabilizerError),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("logical split l = {l} out of range for k = {k}")]
    LogicalChoice { l: usize, k: usize },
    #[error("no minimal decomposition of {0}")]
    Decomposition(String),
}

#[derive(Debug, Clone)]
pub struct SurfaceCode {
    graph: EmbeddedGraph,
    site_ops: Vec<PauliOperator>,
    face_ops: Vec<PauliOperator>,
    stabilizer: StabilizerGroup,
    logical_x: Vec<PauliOperator>,
    logical_z: Vec<PauliOperator>,
}

impl SurfaceCode {
    /// Stabilizer generated by all `A_v` and `B_f`, with dependent operators
    /// dropped greedily (sites first, each list in index order, so the last
    /// vertex and face of each component go). Logicals come from homology.
    pub fn build(graph: &EmbeddedGraph) -> Result<Self, SurfaceError> {
        let n = graph.num_edges();
        let site_ops: Vec<PauliOperator> = (0..graph.num_vertices())
            .map(|v| PauliOperator::x_on(&graph.star(v)))
            .collect();
        let face_ops: Vec<PauliOperator> = (0..graph.num_faces())
            .map(|f| PauliOperator::z_on(&graph.face_boundary(f)))
            .collect();
        let mut reducer = crate::gf2::RowReducer::new(2 * n);
        let gens: Vec<PauliOperator> = site_ops
            .iter()
            .chain(&face_ops)
            .filter(|g| reducer.insert(g.symplectic()))
            .cloned()
            .collect();
        let stabilizer = StabilizerGroup::new(n, gens)?;
        let homology: Homology = graph.homology()?;
        let logical_x: Vec<PauliOperator> =
            homology.x_classes.iter().map(PauliOperator::x_on).collect();
        let logical_z: Vec<PauliOperator> =
            homology.z_classes.iter().map(PauliOperator::z_on).collect();
        assert_eq!(stabilizer.rank() + logical_x.len(), n, "k = n - rank");
        Ok(Self {
            graph: graph.clone(),
            site_ops,
            face_ops,
            stabilizer,
            logical_x,
            logical_z,
        })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn num_qubits(&self) -> usize {
        self.graph.num_edges()
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.logical_x.len()
    }

    pub fn stabilizer(&self) -> &StabilizerGroup {
        &self.stabilizer
    }

    /// Every `A_v`, including dependent ones.
    pub fn site_operators(&self) -> &[PauliOperator] {
        &self.site_ops
    }

    /// Every `B_f`, including dependent ones.
    pub fn face_operators(&self) -> &[PauliOperator] {
        &self.face_ops
    }

    pub fn logical_x(&self) -> &[PauliOperator] {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &[PauliOperator] {
        &self.logical_z
    }

    pub fn has_loops(&self) -> bool {
        self.graph.has_loop()
    }

    /// The state stabilized by the code together with `X̄_1..X̄_l` and
    /// `Z̄_{l+1}..Z̄_k`.
    pub fn state(&self, l: usize) -> Result<SurfaceCodeState, SurfaceError> {
        let k = self.k();
        if l > k {
            return Err(SurfaceError::LogicalChoice { l, k });
        }
        let extra: Vec<PauliOperator> = self.logical_x[..l]
            .iter()
            .chain(&self.logical_z[l..])
            .cloned()
            .collect();
        let stabilizer = self.stabilizer.extended(&extra)?;
        Ok(SurfaceCodeState {
            code: self.clone(),
            l,
            stabilizer,
        })
    }

    /// Checks that Z-only elements commuting with the code are cycles and
    /// X-only ones are cycles of the dual graph. Returns the first offending
    /// support, if any.
    pub fn z_only_centralizer_check(&self) -> Result<Option<BitVector>, SurfaceError> {
        check_no_loops_or_coloops(&self.graph)?;
        let n = self.num_qubits();
        let xs = BitMatrix::from_rows(
            self.stabilizer
                .generators()
                .iter()
                .map(|g| g.x_part().clone())
                .collect(),
            n,
        );
        let zs = BitMatrix::from_rows(
            self.stabilizer
                .generators()
                .iter()
                .map(|g| g.z_part().clone())
                .collect(),
            n,
        );
        let cycles = self.graph.cycle_space();
        for c in xs.nullspace().rows() {
            if !cycles.row_space_contains(c) {
                return Ok(Some(c.clone()));
            }
        }
        let cocycles = self.graph.dual().cycle_space();
        for c in zs.nullspace().rows() {
            if !cocycles.row_space_contains(c) {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }

    /// Ingredients of the local condition on transversal logical gates for
    /// the code stabilizer restricted to `omega`.
    pub fn transversal_precondition_report(
        &self,
        omega: &BitVector,
        cap: EnumCap,
    ) -> Result<OmegaReport, SurfaceError> {
        let s = &self.stabilizer;
        let local = s.subgroup_supported_in(omega);
        let a_omega = s.count_support_eq(omega, cap)?;
        let minimal = a_omega > 0 && {
            let g = local
                .enumerate_elements(cap)?
                .find(|g| g.support() == *omega)
                .expect("A_ω > 0");
            s.is_minimal_element(&g, cap)?
        };
        let fixed = minimal && a_omega == 1;
        let fixed_element = if fixed {
            local
                .enumerate_elements(cap)?
                .find(|g| g.support() == *omega)
        } else {
            None
        };
        Ok(OmegaReport {
            b_omega: local.element_count(),
            dim: local.rank(),
            a_omega,
            minimal_support: minimal,
            fixed_element,
        })
    }

    /// Which qubits must carry a Clifford in any transversal logical gate:
    /// those inside both an X-only and a Z-only minimal element that is the
    /// unique element with its support.
    pub fn transversal_certificate(
        &self,
        cap: EnumCap,
    ) -> Result<TransversalCertificate, SurfaceError> {
        let decomps = minimal_decompositions(self, &self.stabilizer, cap)?;
        let n = self.num_qubits();
        let mut x_fixed = BitVector::zeros(n);
        let mut z_fixed = BitVector::zeros(n);
        for d in &decomps {
            for (part, &count) in d.parts.iter().zip(&d.uniqueness_counts) {
                if count != 1 {
                    continue;
                }
                let target = if part.is_x_only() {
                    &mut x_fixed
                } else {
                    &mut z_fixed
                };
                for q in part.support().ones_iter() {
                    target.set(q, true);
                }
            }
        }
        let forced = &x_fixed & &z_fixed;
        Ok(TransversalCertificate {
            num_qubits: n,
            forced_clifford: forced,
        })
    }
}

/// Data about one support set `ω` in the code stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaReport {
    /// `B_ω = |S_ω|`.
    pub b_omega: u128,
    pub dim: usize,
    /// `A_ω`, elements with support exactly `ω`.
    pub a_omega: u64,
    /// `ω` is the support of a minimal element.
    pub minimal_support: bool,
    /// When `ω` is a minimal support with `A_ω = 1`, the element every
    /// transversal logical gate must conjugate to itself.
    pub fixed_element: Option<PauliOperator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalCertificate {
    pub num_qubits: usize,
    pub forced_clifford: BitVector,
}

impl TransversalCertificate {
    pub fn all_forced(&self) -> bool {
        self.forced_clifford.weight() == self.num_qubits
    }

    pub fn conclusion(&self) -> &'static str {
        if self.all_forced() {
            "no non-Clifford transversal gate"
        } else {
            "inconclusive"
        }
    }
}

#[derive(Debug, Clone)]
pub struct SurfaceCodeState {
    code: SurfaceCode,
    l: usize,
    stabilizer: StabilizerGroup,
}

impl SurfaceCodeState {
    pub fn code(&self) -> &SurfaceCode {
        &self.code
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn stabilizer(&self) -> &StabilizerGroup {
        &self.stabilizer
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Site(usize),
    Face(usize),
}

/// A site or face operator written as a product of minimal elements with
/// disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalDecomposition {
    pub kind: OperatorKind,
    pub operator: PauliOperator,
    pub parts: Vec<PauliOperator>,
    /// `A_{supp(part)}` for each part.
    pub uniqueness_counts: Vec<u64>,
}

fn check_no_loops_or_coloops(g: &EmbeddedGraph) -> Result<(), SurfaceError> {
    if let Some(e) = (0..g.num_edges()).find(|&e| g.is_loop(e)) {
        return Err(SurfaceError::Hypothesis(format!(
            "edge {} is a loop",
            g.edge_label(e)
        )));
    }
    if let Some(e) = (0..g.num_edges()).find(|&e| g.dual().is_loop(e)) {
        return Err(SurfaceError::Hypothesis(format!(
            "edge {} is a coloop",
            g.edge_label(e)
        )));
    }
    Ok(())
}

fn check_short_cycles(g: &EmbeddedGraph) -> Result<(), String> {
    if !g.is_connected() {
        return Err(format!("graph has {} components", g.num_components()));
    }
    let (girth, cogirth) = g.girth_and_cogirth();
    if let Some(l) = girth.filter(|&l| l <= 2) {
        return Err(format!("cycle of length {l}"));
    }
    if let Some(l) = cogirth.filter(|&l| l <= 2) {
        return Err(format!("cocycle of length {l}"));
    }
    Ok(())
}

/// Peels each `A_v` and `B_f` into minimal elements of `s`: repeatedly take
/// the lightest X-only (sites) or Z-only (faces) minimal element inside the
/// remaining support and divide it out.
pub fn minimal_decompositions(
    code: &SurfaceCode,
    s: &StabilizerGroup,
    cap: EnumCap,
) -> Result<Vec<MinimalDecomposition>, SurfaceError> {
    check_short_cycles(code.graph()).map_err(SurfaceError::Hypothesis)?;
    let sites = code
        .site_ops
        .iter()
        .enumerate()
        .map(|(v, g)| (OperatorKind::Site(v), g));
    let faces = code
        .face_ops
        .iter()
        .enumerate()
        .map(|(f, g)| (OperatorKind::Face(f), g));
    let mut out = Vec::new();
    for (kind, op) in sites.chain(faces) {
        if op.is_identity() {
            continue;
        }
        let want_x = matches!(kind, OperatorKind::Site(_));
        let mut remaining = op.clone();
        let mut parts = Vec::new();
        while !remaining.is_identity() {
            let omega = remaining.support();
            let local: Vec<PauliOperator> = s
                .subgroup_supported_in(&omega)
                .enumerate_elements(cap)?
                .collect();
            let is_minimal = |g: &PauliOperator| {
                let sg = g.support();
                !local.iter().any(|h| {
                    !h.is_identity() && h.weight() < sg.weight() && h.support().is_subset_of(&sg)
                })
            };
            let best = local
                .iter()
                .filter(|g| !g.is_identity() && if want_x { g.is_x_only() } else { g.is_z_only() })
                .filter(|g| is_minimal(g))
                .min_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)))
                .cloned()
                .ok_or_else(|| SurfaceError::Decomposition(op.to_string()))?;
            remaining = remaining.mul(&best)?;
            parts.push(best);
        }
        let uniqueness_counts = parts
            .iter()
            .map(|p| s.count_support_eq(&p.support(), cap))
            .collect::<Result<_, _>>()?;
        out.push(MinimalDecomposition {
            kind,
            operator: op.clone(),
            parts,
            uniqueness_counts,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceOutcome {
    Certified { details: String },
    HypothesisFailed(String),
    Inconclusive(String),
}

impl SurfaceOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }
}

impl fmt::Display for SurfaceOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Certified { details } => {
                write!(f, "CERTIFIED theorem=surfaceCode details={details}")
            }
            Self::HypothesisFailed(r) => write!(f, "HYPOTHESIS_FAILED reason={r}"),
            Self::Inconclusive(r) => write!(f, "INCONCLUSIVE reason={r}"),
        }
    }
}

/// LU = LC certificate for a surface-code state. The graph hypothesis
/// (connected, no cycles or cocycles of length at most 2) is checked first;
/// the minimal support condition is then re-verified from the minimal
/// decompositions, each part checked for membership and minimality.
pub fn lulc_certificate(
    state: &SurfaceCodeState,
    cap: EnumCap,
) -> Result<SurfaceOutcome, SurfaceError> {
    let g = state.code.graph();
    if let Err(reason) = check_short_cycles(g) {
        return Ok(SurfaceOutcome::HypothesisFailed(reason.replace(' ', "-")));
    }
    let decomps = minimal_decompositions(&state.code, &state.stabilizer, cap)?;
    let mut candidates: Vec<PauliOperator> = decomps
        .iter()
        .flat_map(|d| d.parts.iter().cloned())
        .collect();
    candidates.sort();
    candidates.dedup();
    let report = state
        .stabilizer
        .minimal_elements_from_candidates(&candidates, cap)?;
    match msc_certificate_from_report(&state.stabilizer, &report) {
        MscOutcome::Certified { hypothesis } => Ok(SurfaceOutcome::Certified {
            details: format!(
                "n={},k={},l={},minimal-elements={},msc={hypothesis}",
                state.code.num_qubits(),
                state.code.k(),
                state.l,
                report.elements.len()
            ),
        }),
        MscOutcome::Inconclusive(why) => Ok(SurfaceOutcome::Inconclusive(
            why.to_string().replace(' ', ","),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{theta, toric_grid, triangle};

    #[test]
    fn code_parameters() {
        let t = SurfaceCode::build(&triangle()).unwrap();
        assert_eq!((t.num_qubits(), t.k(), t.stabilizer().rank()), (3, 0, 3));
        let th = SurfaceCode::build(&theta()).unwrap();
        assert_eq!((th.num_qubits(), th.k()), (3, 0));
        let tor = SurfaceCode::build(&toric_grid(3, 3)).unwrap();
        assert_eq!(
            (tor.num_qubits(), tor.k(), tor.stabilizer().rank()),
            (18, 2, 16)
        );
    }

    #[test]
    fn states() {
        let tor = SurfaceCode::build(&toric_grid(3, 3)).unwrap();
        for l in 0..=2 {
            let s = tor.state(l).unwrap();
            assert!(s.stabilizer().is_state());
            assert!(s.stabilizer().is_css());
        }
        assert_eq!(
            tor.state(3).err(),
            Some(SurfaceError::LogicalChoice { l: 3, k: 2 })
        );
        let t = SurfaceCode::build(&triangle()).unwrap();
        assert!(t.state(0).unwrap().stabilizer().is_state());
    }

    #[test]
    fn centralizer_checks() {
        assert_eq!(
            SurfaceCode::build(&toric_grid(3, 3))
                .unwrap()
                .z_only_centralizer_check(),
            Ok(None)
        );
        assert_eq!(
            SurfaceCode::build(&triangle())
                .unwrap()
                .z_only_centralizer_check(),
            Ok(None)
        );
        let path =
            EmbeddedGraph::from_rotations(3, &[(0, 1), (1, 2)], vec![vec![0], vec![1, 2], vec![3]])
                .unwrap();
        assert!(matches!(
            SurfaceCode::build(&path)
                .unwrap()
                .z_only_centralizer_check(),
            Err(SurfaceError::Hypothesis(_))
        ));
    }

    #[test]
    fn toric_decompositions() {
        let tor = SurfaceCode::build(&toric_grid(3, 3)).unwrap();
        let state = tor.state(0).unwrap();
        let d = minimal_decompositions(&tor, state.stabilizer(), EnumCap::default()).unwrap();
        assert_eq!(d.len(), 18);
        for dec in &d {
            if let OperatorKind::Site(_) = dec.kind {
                assert_eq!(dec.parts, vec![dec.operator.clone()]);
            }
            assert!(dec.uniqueness_counts.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn triangle_has_short_cocycles() {
        let t = SurfaceCode::build(&triangle()).unwrap();
        let state = t.state(0).unwrap();
        // XXI sits inside ZZZ, so the face operator is not minimal either.
        assert!(!state
            .stabilizer()
            .is_minimal_element(&t.face_operators()[0], EnumCap::default())
            .unwrap());
        assert!(matches!(
            minimal_decompositions(&t, state.stabilizer(), EnumCap::default()),
            Err(SurfaceError::Hypothesis(_))
        ));
    }

    #[test]
    fn certificates() {
        let tor = SurfaceCode::build(&toric_grid(3, 3)).unwrap();
        for l in 0..=2 {
            let out = lulc_certificate(&tor.state(l).unwrap(), EnumCap::default()).unwrap();
            assert!(out.is_certified(), "{out}");
        }
        let doubled =
            SurfaceCode::build(&toric_grid(3, 3).with_parallel_edge(0, "d").unwrap()).unwrap();
        let out = lulc_certificate(&doubled.state(0).unwrap(), EnumCap::default()).unwrap();
        assert_eq!(
            out,
            SurfaceOutcome::HypothesisFailed("cycle-of-length-2".into())
        );
    }

    #[test]
    fn transversal_reports() {
        let tor = SurfaceCode::build(&toric_grid(3, 3)).unwrap();
        let cap = EnumCap::default();
        let star = tor.graph().star(0);
        let r = tor.transversal_precondition_report(&star, cap).unwrap();
        assert_eq!((r.b_omega, r.a_omega), (2, 1));
        assert_eq!(r.fixed_element.as_ref(), Some(&tor.site_operators()[0]));
        let empty = tor
            .transversal_precondition_report(&BitVector::zeros(18), cap)
            .unwrap();
        assert_eq!((empty.b_omega, empty.fixed_element), (1, None));
        let cert = tor.transversal_certificate(cap).unwrap();
        assert!(cert.all_forced());
        assert_eq!(cert.conclusion(), "no non-Clifford transversal gate");
    }
}
