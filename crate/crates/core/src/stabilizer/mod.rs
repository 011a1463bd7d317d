//! Pauli operators and stabilizer groups in the symplectic representation.

mod group;
mod minimal;
mod pauli;

pub use group::{CssSplit, Elements, StabilizerGroup};
pub use minimal::{
    msc_certificate, msc_certificate_from_report, BellPair, MinimalElementReport, MscInconclusive,
    MscOutcome, MSC_HYPOTHESIS,
};
pub use pauli::{PauliLetter, PauliOperator};

use crate::text::ParseError;

/// Environment variable overriding [`EnumCap::default`].
pub const ENUM_CAP_ENV: &str = "STABLULC_ENUM_CAP";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabilizerError {
    #[error("generator acts on {found} qubits, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("generators {first} and {second} anticommute")]
    NonCommuting { first: usize, second: usize },
    #[error("{left} and {right} anticommute; their product is not Hermitian")]
    Anticommuting { left: String, right: String },
    #[error("generator {index} is dependent on the previous ones")]
    Dependent { index: usize },
    #[error("enumeration of {requested} elements exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },
    #[error("{0} is not an element of the group")]
    NotAMember(String),
    #[error("{0} does not have minimal support")]
    NotMinimal(String),
    #[error("expected a state (k = n), got k = {k} on n = {n} qubits")]
    NotAState { n: usize, k: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Upper bound on the number of group elements any single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap(pub u128);

impl Default for EnumCap {
    fn default() -> Self {
        Self(1 << 20)
    }
}

impl EnumCap {
    /// Reads [`ENUM_CAP_ENV`], falling back to the default when unset.
    /// Malformed values are reported rather than ignored.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(ENUM_CAP_ENV) {
            Ok(v) => {
                v.trim().parse::<u128>().map(Self).map_err(|_| {
                    format!("{ENUM_CAP_ENV} must be a non-negative integer, got `{v}`")
                })
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check(self, requested: u128) -> Result<(), StabilizerError> {
        if requested > self.0 {
            Err(StabilizerError::CapExceeded {
                requested,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVector;

    fn p(s: &str) -> PauliOperator {
        PauliOperator::parse(s).unwrap()
    }

    fn group(gens: &[&str]) -> StabilizerGroup {
        let gens: Vec<_> = gens.iter().map(|s| p(s)).collect();
        StabilizerGroup::new(gens[0].num_qubits(), gens).unwrap()
    }

    fn ghz3() -> StabilizerGroup {
        group(&["XXX", "ZZI", "IZZ"])
    }

    fn bell() -> StabilizerGroup {
        group(&["XX", "ZZ"])
    }

    fn omega(n: usize, ones: &[usize]) -> BitVector {
        BitVector::from_indices(n, ones.iter().copied())
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("XI"), p("ZI")]),
            Err(StabilizerError::NonCommuting {
                first: 0,
                second: 1
            })
        ));
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("XX"), p("-XX")]),
            Err(StabilizerError::Dependent { index: 1 })
        ));
        assert!(matches!(
            StabilizerGroup::new(2, vec![p("XXX")]),
            Err(StabilizerError::LengthMismatch { .. })
        ));
        assert!(matches!(
            StabilizerGroup::new(1, vec![p("-I")]),
            Err(StabilizerError::Dependent { index: 0 })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let z: Vec<_> = group(&["Z"])
            .enumerate_elements(EnumCap::default())
            .unwrap()
            .collect();
        assert_eq!(z, vec![p("I"), p("Z")]);

        let mut b: Vec<_> = bell()
            .enumerate_elements(EnumCap::default())
            .unwrap()
            .collect();
        b.sort();
        let mut want = vec![p("II"), p("XX"), p("ZZ"), p("-YY")];
        want.sort();
        assert_eq!(b, want);

        let g: Vec<_> = ghz3()
            .enumerate_elements(EnumCap::default())
            .unwrap()
            .collect();
        assert_eq!(g.len(), 8);
        assert!(g.contains(&p("ZIZ")));
    }

    #[test]
    fn cap_is_enforced() {
        let err = ghz3().enumerate_elements(EnumCap(7)).err().unwrap();
        assert_eq!(
            err,
            StabilizerError::CapExceeded {
                requested: 8,
                cap: 7
            }
        );
    }

    #[test]
    fn supported_subgroups() {
        let s = ghz3().subgroup_supported_in(&omega(3, &[0, 1]));
        assert_eq!(s.generators(), &[p("ZZI")]);
        let full = ghz3().subgroup_supported_in(&BitVector::ones(3));
        assert_eq!(full.rank(), 3);
        assert_eq!(bell().subgroup_supported_in(&omega(2, &[0])).rank(), 0);
    }

    #[test]
    fn distances() {
        let cap = EnumCap::default();
        assert_eq!(ghz3().distance(cap).unwrap(), Some(2));
        assert_eq!(group(&["Z"]).distance(cap).unwrap(), Some(1));
        let ring =
            StabilizerGroup::graph_state(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let brute = ring
            .enumerate_elements(cap)
            .unwrap()
            .filter(|g| !g.is_identity())
            .map(|g| g.weight())
            .min();
        assert_eq!(ring.distance(cap).unwrap(), brute);
        assert_eq!(brute, Some(3));
    }

    #[test]
    fn css_splits() {
        let split = bell().css_split().unwrap();
        assert_eq!(split.x_part, vec![p("XX")]);
        assert_eq!(split.z_part, vec![p("ZZ")]);
        assert!(!group(&["Y"]).is_css());
        let split = ghz3().css_split().unwrap();
        assert_eq!(split.x_part.len(), 1);
        assert_eq!(split.x_part[0].x_part(), &BitVector::ones(3));
        assert_eq!(split.z_part.len(), 2);
    }

    #[test]
    fn support_counts() {
        let cap = EnumCap::default();
        assert_eq!(bell().count_support_eq(&omega(2, &[0, 1]), cap).unwrap(), 3);
        assert_eq!(ghz3().count_support_eq(&omega(3, &[0, 1]), cap).unwrap(), 1);
        assert_eq!(ghz3().count_support_eq(&omega(3, &[]), cap).unwrap(), 1);
        assert_eq!(bell().count_support_in(&omega(2, &[0, 1])), 4);
        assert_eq!(ghz3().count_support_in(&omega(3, &[0])), 1);
        assert_eq!(ghz3().count_support_in(&BitVector::ones(3)), 8);
    }

    #[test]
    fn membership_tracks_sign() {
        assert!(bell().contains(&p("-YY")));
        assert!(!bell().contains(&p("YY")));
        assert!(!bell().contains(&p("XI")));
    }

    #[test]
    fn parse_text() {
        let g = StabilizerGroup::parse("# ghz\n+XXX\nZZI\n\n−IZZ\n").unwrap();
        assert_eq!(g.generators()[2], p("-IZZ"));
        match StabilizerGroup::parse("XX\nZZZ\n") {
            Err(StabilizerError::Parse(e)) => assert_eq!((e.line, e.column), (2, 1)),
            other => panic!("unexpected {other:?}"),
        }
        match StabilizerGroup::parse("XX\n  ZQ\n") {
            Err(StabilizerError::Parse(e)) => assert_eq!((e.line, e.column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
