use std::collections::BTreeMap;
use std::fmt;

use super::{EnumCap, PauliLetter, PauliOperator, StabilizerError, StabilizerGroup};
use crate::gf2::{BitVector, RowReducer};

/// Hypothesis variant under which an MSC certificate is issued.
pub const MSC_HYPOTHESIS: &str = "bell-pair-free";

/// Minimal support elements of a stabilizer group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalElementReport {
    pub num_qubits: usize,
    /// Sorted by symplectic pattern, then sign.
    pub elements: Vec<PauliOperator>,
    /// Distinct supports, sorted by weight then lexicographically.
    pub supports: Vec<BitVector>,
    /// `covered_letters[i]` lists the letters occurring at qubit `i` in the
    /// group generated by `elements`.
    pub covered_letters: Vec<Vec<PauliLetter>>,
    /// True when `elements` is every minimal element; false when the report
    /// was built from verified candidates and may be a subset.
    pub complete: bool,
}

impl MinimalElementReport {
    fn build(n: usize, mut elements: Vec<PauliOperator>, complete: bool) -> Self {
        elements.sort();
        elements.dedup();
        let mut supports: Vec<BitVector> = elements.iter().map(PauliOperator::support).collect();
        supports.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        supports.dedup();
        let covered_letters = (0..n).map(|i| letters_in_span(&elements, i)).collect();
        Self {
            num_qubits: n,
            elements,
            supports,
            covered_letters,
            complete,
        }
    }

    /// Report over elements the caller has already shown to be minimal.
    pub(crate) fn from_verified(n: usize, elements: Vec<PauliOperator>) -> Self {
        Self::build(n, elements, false)
    }

    /// First qubit (and letter) not covered.
    pub fn first_missing_letter(&self) -> Option<(usize, PauliLetter)> {
        for (i, letters) in self.covered_letters.iter().enumerate() {
            for l in [PauliLetter::X, PauliLetter::Y, PauliLetter::Z] {
                if !letters.contains(&l) {
                    return Some((i, l));
                }
            }
        }
        None
    }

    /// Union of all listed supports.
    pub fn support_union(&self) -> BitVector {
        let mut u = BitVector::zeros(self.num_qubits);
        for s in &self.supports {
            for i in s.ones_iter() {
                u.set(i, true);
            }
        }
        u
    }
}

// The letters at qubit i across a group are the non-zero vectors in the span
// of the generators' (x_i, z_i) projections.
fn letters_in_span(gens: &[PauliOperator], i: usize) -> Vec<PauliLetter> {
    let mut r = RowReducer::new(2);
    for g in gens {
        r.insert(BitVector::from_bools(&[
            g.x_part().get(i),
            g.z_part().get(i),
        ]));
    }
    let mut out = Vec::new();
    for l in [PauliLetter::X, PauliLetter::Y, PauliLetter::Z] {
        let (x, z) = l.bits();
        if r.contains(&BitVector::from_bools(&[x, z])) {
            out.push(l);
        }
    }
    out
}

impl StabilizerGroup {
    /// Whether `g`, a non-identity element, has minimal support: no other
    /// non-identity element is supported strictly inside `supp(g)`.
    pub fn is_minimal_element(
        &self,
        g: &PauliOperator,
        cap: EnumCap,
    ) -> Result<bool, StabilizerError> {
        if g.is_identity() {
            return Ok(false);
        }
        let supp = g.support();
        let local = self.subgroup_supported_in(&supp);
        for h in local.enumerate_elements(cap)? {
            if !h.is_identity() && h.weight() < supp.weight() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact minimal elements by full enumeration under `cap`.
    pub fn minimal_elements(&self, cap: EnumCap) -> Result<MinimalElementReport, StabilizerError> {
        let mut by_support: BTreeMap<BitVector, Vec<PauliOperator>> = BTreeMap::new();
        for g in self.enumerate_elements(cap)? {
            if !g.is_identity() {
                by_support.entry(g.support()).or_default().push(g);
            }
        }
        let mut supports: Vec<&BitVector> = by_support.keys().collect();
        supports.sort_by_key(|s| s.weight());
        let mut minimal: Vec<&BitVector> = Vec::new();
        for s in supports {
            // Anything strictly inside s is lighter, so it was decided already.
            if !minimal
                .iter()
                .any(|m| m.weight() < s.weight() && m.is_subset_of(s))
            {
                minimal.push(s);
            }
        }
        let elements = minimal
            .into_iter()
            .flat_map(|s| by_support[s].iter().cloned())
            .collect();
        Ok(MinimalElementReport::build(
            self.num_qubits(),
            elements,
            true,
        ))
    }

    /// Report from caller-supplied candidates, each verified to be a group
    /// member with minimal support. Covers the cases where full enumeration
    /// is out of reach but the structure supplies minimal elements.
    pub fn minimal_elements_from_candidates(
        &self,
        candidates: &[PauliOperator],
        cap: EnumCap,
    ) -> Result<MinimalElementReport, StabilizerError> {
        for g in candidates {
            if !self.contains(g) {
                return Err(StabilizerError::NotAMember(g.to_string()));
            }
            if !self.is_minimal_element(g, cap)? {
                return Err(StabilizerError::NotMinimal(g.to_string()));
            }
        }
        Ok(MinimalElementReport::build(
            self.num_qubits(),
            candidates.to_vec(),
            false,
        ))
    }

    /// First pair `{i, j}` (lexicographic) whose local subgroup has rank 2.
    pub fn bell_pair(&self) -> Option<BellPair> {
        let n = self.num_qubits();
        for i in 0..n {
            for j in i + 1..n {
                let w = BitVector::from_indices(n, [i, j]);
                if self.subgroup_supported_in(&w).rank() == 2 {
                    return Some(BellPair(i, j));
                }
            }
        }
        None
    }

    pub fn is_bell_pair_free(&self) -> bool {
        self.bell_pair().is_none()
    }
}

/// A qubit pair (0-based) carrying a full two-qubit stabilizer factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BellPair(pub usize, pub usize);

impl fmt::Display for BellPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0 + 1, self.1 + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MscInconclusive {
    BellPair(BellPair),
    MissingLetter { qubit: usize, letter: PauliLetter },
}

impl fmt::Display for MscInconclusive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BellPair(b) => write!(f, "bell-pair qubits={b}"),
            Self::MissingLetter { qubit, letter } => write!(
                f,
                "missing-letter qubit={} letter={}",
                qubit + 1,
                letter.as_char()
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MscOutcome {
    /// LU = LC holds. `hypothesis` names the variant of the entanglement
    /// hypothesis that was checked.
    Certified { hypothesis: &'static str },
    /// No conclusion either way.
    Inconclusive(MscInconclusive),
}

impl MscOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }
}

/// Minimal support condition with exact enumeration of minimal elements.
pub fn msc_certificate(s: &StabilizerGroup, cap: EnumCap) -> Result<MscOutcome, StabilizerError> {
    if let Some(b) = s.bell_pair() {
        return Ok(MscOutcome::Inconclusive(MscInconclusive::BellPair(b)));
    }
    let report = s.minimal_elements(cap)?;
    Ok(msc_certificate_from_report(s, &report))
}

/// Minimal support condition from an existing report (possibly a verified
/// subset of the minimal elements; a subset can only under-report letters).
pub fn msc_certificate_from_report(
    s: &StabilizerGroup,
    report: &MinimalElementReport,
) -> MscOutcome {
    if let Some(b) = s.bell_pair() {
        return MscOutcome::Inconclusive(MscInconclusive::BellPair(b));
    }
    match report.first_missing_letter() {
        Some((qubit, letter)) => {
            MscOutcome::Inconclusive(MscInconclusive::MissingLetter { qubit, letter })
        }
        None => MscOutcome::Certified {
            hypothesis: MSC_HYPOTHESIS,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        PauliOperator::parse(s).unwrap()
    }

    fn group(gens: &[&str]) -> StabilizerGroup {
        let gens: Vec<_> = gens.iter().map(|s| p(s)).collect();
        StabilizerGroup::new(gens[0].num_qubits(), gens).unwrap()
    }

    // Minimal elements straight from the definition, over all pairs of elements.
    fn brute_minimal(s: &StabilizerGroup) -> Vec<PauliOperator> {
        let all: Vec<_> = s.enumerate_elements(EnumCap::default()).unwrap().collect();
        let mut out: Vec<_> = all
            .iter()
            .filter(|g| !g.is_identity())
            .filter(|g| {
                let sg = g.support();
                !all.iter().any(|h| {
                    let sh = h.support();
                    !h.is_identity() && sh.is_subset_of(&sg) && sh != sg
                })
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn ghz_minimal_elements() {
        let s = group(&["XXX", "ZZI", "IZZ"]);
        let r = s.minimal_elements(EnumCap::default()).unwrap();
        let mut want = vec![p("ZZI"), p("IZZ"), p("ZIZ")];
        want.sort();
        assert_eq!(r.elements, want);
        assert_eq!(r.elements, brute_minimal(&s));
        assert!(r.covered_letters.iter().all(|l| l == &[PauliLetter::Z]));
    }

    #[test]
    fn bell_and_single_qubit() {
        let s = group(&["XX", "ZZ"]);
        let r = s.minimal_elements(EnumCap::default()).unwrap();
        assert_eq!(r.elements.len(), 3);
        assert!(r.elements.contains(&p("-YY")));
        assert_eq!(r.supports.len(), 1);
        let r = group(&["Z"]).minimal_elements(EnumCap::default()).unwrap();
        assert_eq!(r.elements, vec![p("Z")]);
    }

    #[test]
    fn matches_brute_force_on_graph_states() {
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (4, vec![(0, 1), (1, 2), (2, 3)]),
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            (6, vec![(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 3)]),
        ];
        for (n, edges) in cases {
            let s = StabilizerGroup::graph_state(n, &edges).unwrap();
            let r = s.minimal_elements(EnumCap::default()).unwrap();
            assert_eq!(r.elements, brute_minimal(&s));
            for g in &r.elements {
                assert!(s.is_minimal_element(g, EnumCap::default()).unwrap());
            }
        }
    }

    #[test]
    fn bell_pair_detection() {
        assert_eq!(group(&["XX", "ZZ"]).bell_pair(), Some(BellPair(0, 1)));
        assert!(group(&["XXX", "ZZI", "IZZ"]).is_bell_pair_free());
        assert_eq!(
            group(&["XXI", "ZZI", "IIZ"]).bell_pair(),
            Some(BellPair(0, 1))
        );
    }

    #[test]
    fn msc_outcomes() {
        let cap = EnumCap::default();
        let ghz = group(&["XXX", "ZZI", "IZZ"]);
        assert!(matches!(
            msc_certificate(&ghz, cap).unwrap(),
            MscOutcome::Inconclusive(MscInconclusive::MissingLetter {
                letter: PauliLetter::X,
                ..
            })
        ));
        assert_eq!(
            msc_certificate(&group(&["XX", "ZZ"]), cap).unwrap(),
            MscOutcome::Inconclusive(MscInconclusive::BellPair(BellPair(0, 1)))
        );
    }

    #[test]
    fn candidates_are_verified() {
        let s = group(&["XXX", "ZZI", "IZZ"]);
        let cap = EnumCap::default();
        assert!(s.minimal_elements_from_candidates(&[p("ZZI")], cap).is_ok());
        assert!(matches!(
            s.minimal_elements_from_candidates(&[p("XXX")], cap),
            Err(StabilizerError::NotMinimal(_))
        ));
        assert!(matches!(
            s.minimal_elements_from_candidates(&[p("-ZZI")], cap),
            Err(StabilizerError::NotAMember(_))
        ));
    }
}
