//! Lengths `27 + 14i + 30j + t` reachable by repeated encoding of a
//! 27-qubit seed with rm15 (`i`), rm31 (`j`) and rep2 (`t`).

use std::fmt;

pub const BASE_LENGTH: usize = 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceClass {
    /// rep2 was used.
    Two,
    AtLeastThree,
}

impl fmt::Display for DistanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Two => f.write_str("distance=2"),
            Self::AtLeastThree => f.write_str("distance>=3"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthPlan {
    pub i: usize,
    pub j: usize,
    pub t: usize,
    pub n: usize,
}

impl LengthPlan {
    pub fn distance_class(&self) -> DistanceClass {
        if self.t > 0 {
            DistanceClass::Two
        } else {
            DistanceClass::AtLeastThree
        }
    }

    pub fn encodings(&self) -> usize {
        self.i + self.j + self.t
    }
}

impl fmt::Display for LengthPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} (i={},j={},t={}) {}",
            self.n,
            self.i,
            self.j,
            self.t,
            self.distance_class()
        )
    }
}

/// Plan with the fewest encodings, preferring fewer rep2 uses and then
/// fewer rm31 uses on ties. `None` below the base length.
pub fn length_plan(n: usize) -> Option<LengthPlan> {
    plan(n, true)
}

/// Same without rep2, so only distance-3 codes are used.
pub fn length_plan_rm(n: usize) -> Option<LengthPlan> {
    plan(n, false)
}

fn plan(n: usize, allow_rep: bool) -> Option<LengthPlan> {
    let rest = n.checked_sub(BASE_LENGTH)?;
    let mut best: Option<LengthPlan> = None;
    for j in 0..=rest / 30 {
        for i in 0..=(rest - 30 * j) / 14 {
            let t = rest - 30 * j - 14 * i;
            if t > 0 && !allow_rep {
                continue;
            }
            let p = LengthPlan { i, j, t, n };
            let key = |p: &LengthPlan| (p.encodings(), p.t, p.j);
            if best.as_ref().is_none_or(|b| key(&p) < key(b)) {
                best = Some(p);
            }
        }
    }
    best
}

/// Every reachable length up to `max_n` with its plan.
pub fn enumerate_lengths(max_n: usize) -> Vec<LengthPlan> {
    (BASE_LENGTH..=max_n).filter_map(length_plan).collect()
}

/// Lengths reachable with rm15 and rm31 alone.
pub fn enumerate_rm_lengths(max_n: usize) -> Vec<LengthPlan> {
    (BASE_LENGTH..=max_n).filter_map(length_plan_rm).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary_lengths() {
        let p = length_plan(41).unwrap();
        assert_eq!(
            (p.i, p.j, p.t, p.distance_class()),
            (1, 0, 0, DistanceClass::AtLeastThree)
        );
        assert_eq!(length_plan(57).map(|p| (p.i, p.j, p.t)), Some((0, 1, 0)));
        let p = length_plan(28).unwrap();
        assert_eq!((p.t, p.distance_class()), (1, DistanceClass::Two));
        assert_eq!(length_plan_rm(31), None);
        assert_eq!(length_plan(26), None);
        assert_eq!(p.to_string(), "n=28 (i=0,j=0,t=1) distance=2");
    }

    #[test]
    fn odd_lengths_from_195() {
        assert!((195..=500).step_by(2).all(|n| length_plan_rm(n).is_some()));
        assert_eq!(length_plan_rm(193), None);
        let largest_gap = (BASE_LENGTH..=500)
            .filter(|&n| n % 2 == 1 && length_plan_rm(n).is_none())
            .max();
        assert_eq!(largest_gap, Some(193));
    }

    #[test]
    fn matches_triple_scan() {
        let max_n = 300;
        let mut reach = vec![false; max_n + 1];
        for i in 0..=max_n / 14 {
            for j in 0..=max_n / 30 {
                let n = BASE_LENGTH + 14 * i + 30 * j;
                if n <= max_n {
                    reach[n] = true;
                }
            }
        }
        let listed: Vec<usize> = enumerate_rm_lengths(max_n).iter().map(|p| p.n).collect();
        let scanned: Vec<usize> = (0..=max_n).filter(|&n| reach[n]).collect();
        assert_eq!(listed, scanned);
        assert_eq!(enumerate_lengths(max_n).len(), max_n - BASE_LENGTH + 1);
    }
}
