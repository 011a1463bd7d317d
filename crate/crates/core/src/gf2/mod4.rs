//! Linear systems over the integers mod 4.
//!
//! Z4 is not a field, so plain Gaussian elimination does not apply. The
//! solver pivots only on units (odd coefficients). Once no unit is left in a
//! row, every coefficient is 0 or 2 and the equation `2·(h·a) ≡ t` constrains
//! only the parities of the unknowns, which is a GF(2) system. Both steps are
//! invertible row operations, so the reduction is complete: infeasibility is
//! exact, never a search cutoff.

use super::{BitVector, RowReducer};

/// `Σ_j coeffs[r][j]·a_j ≡ targets[r] (mod 4)` for every row `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod4System {
    nvars: usize,
    coeffs: Vec<Vec<u8>>,
    targets: Vec<u8>,
}

impl Mod4System {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            coeffs: Vec::new(),
            targets: Vec::new(),
        }
    }

    /// Adds one equation; entries are reduced mod 4.
    pub fn push(&mut self, coeffs: &[u8], target: u8) {
        assert_eq!(coeffs.len(), self.nvars, "equation has wrong arity");
        self.coeffs.push(coeffs.iter().map(|c| c % 4).collect());
        self.targets.push(target % 4);
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn equations(&self) -> impl Iterator<Item = (&[u8], u8)> {
        self.coeffs
            .iter()
            .map(Vec::as_slice)
            .zip(self.targets.iter().copied())
    }

    /// Whether `a` satisfies every equation.
    pub fn is_satisfied_by(&self, a: &[u8]) -> bool {
        self.equations().all(|(row, t)| eval(row, a) == t)
    }
}

/// Solves the system, returning one assignment in `{0,1,2,3}^n` or `None`
/// when no assignment exists.
pub fn solve_mod4(sys: &Mod4System) -> Option<Vec<u8>> {
    let mut solver = Mod4Solver::new(sys.nvars);
    for (row, t) in sys.equations() {
        if !solver.add_equation(row, t) {
            return None;
        }
    }
    solver.solution()
}

fn eval(row: &[u8], a: &[u8]) -> u8 {
    row.iter()
        .zip(a)
        .fold(0u32, |acc, (&c, &x)| acc + u32::from(c) * u32::from(x)) as u8
        % 4
}

#[derive(Debug, Clone)]
struct UnitPivot {
    col: usize,
    row: Vec<u8>,
    target: u8,
}

/// Streaming form of [`solve_mod4`]: equations are folded in one at a time,
/// so memory stays O(n²) however many equations arrive.
#[derive(Debug, Clone)]
pub struct Mod4Solver {
    nvars: usize,
    // In insertion order. Each row is zero on the columns of earlier pivots.
    pivots: Vec<UnitPivot>,
    is_pivot: Vec<bool>,
    // Halved even rows `(h, t)` meaning `h·a ≡ t (mod 2)`; zero on pivot columns.
    // Stored with the target as an extra trailing coordinate.
    parity: Vec<BitVector>,
    infeasible: bool,
}

impl Mod4Solver {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            pivots: Vec::new(),
            is_pivot: vec![false; nvars],
            parity: Vec::new(),
            infeasible: false,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        self.infeasible
    }

    /// Folds in one equation. Returns false once the system is known infeasible.
    pub fn add_equation(&mut self, coeffs: &[u8], target: u8) -> bool {
        assert_eq!(coeffs.len(), self.nvars, "equation has wrong arity");
        if self.infeasible {
            return false;
        }
        let mut row: Vec<u8> = coeffs.iter().map(|c| c % 4).collect();
        let mut t = target % 4;
        for p in &self.pivots {
            let c = row[p.col];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&p.row) {
                    *x = (*x + 4 * 4 - c * y) % 4;
                }
                t = (t + 16 - c * p.target) % 4;
            }
        }

        if let Some(col) = row.iter().position(|c| c % 2 == 1) {
            // 1 and 3 are their own inverses mod 4.
            let inv = row[col];
            for x in row.iter_mut() {
                *x = (*x * inv) % 4;
            }
            t = (t * inv) % 4;
            let pivot = UnitPivot {
                col,
                row,
                target: t,
            };
            self.absorb_pivot_into_parity(&pivot);
            self.is_pivot[col] = true;
            self.pivots.push(pivot);
            return !self.infeasible;
        }

        if t % 2 == 1 {
            self.infeasible = true;
            return false;
        }
        let mut h = BitVector::zeros(self.nvars + 1);
        for (j, &c) in row.iter().enumerate() {
            if c == 2 {
                h.set(j, true);
            }
        }
        if t == 2 {
            h.set(self.nvars, true);
        }
        self.insert_parity(h);
        !self.infeasible
    }

    fn insert_parity(&mut self, h: BitVector) {
        let mut reducer = RowReducer::new(self.nvars + 1);
        for r in &self.parity {
            reducer.insert(r.clone());
        }
        let residue = reducer.reduce(&h);
        match residue.first_one() {
            None => {}
            Some(p) if p == self.nvars => self.infeasible = true,
            Some(_) => self.parity.push(residue),
        }
    }

    // Subtract 2·pivot from every stored even row that has a 2 in the pivot column.
    fn absorb_pivot_into_parity(&mut self, pivot: &UnitPivot) {
        let mut mask = BitVector::zeros(self.nvars + 1);
        for (j, &c) in pivot.row.iter().enumerate() {
            if c % 2 == 1 {
                mask.set(j, true);
            }
        }
        if pivot.target % 2 == 1 {
            mask.set(self.nvars, true);
        }
        let old = std::mem::take(&mut self.parity);
        for mut h in old {
            if h.get(pivot.col) {
                h ^= &mask;
            }
            self.insert_parity(h);
            if self.infeasible {
                return;
            }
        }
    }

    /// One satisfying assignment, or `None` if infeasible.
    pub fn solution(&self) -> Option<Vec<u8>> {
        if self.infeasible {
            return None;
        }
        let n = self.nvars;
        let mut a = vec![0u8; n];

        // Parity constraints touch only free columns; solve them by back substitution
        // on an rref of the stored rows.
        let m = super::BitMatrix::from_rows(self.parity.clone(), n + 1);
        let r = m.rref();
        for (k, &p) in r.pivots.iter().enumerate() {
            if p == n {
                return None;
            }
            let row = r.reduced.row(k);
            // Free parity variables are 0, so the pivot variable equals the target bit.
            a[p] = u8::from(row.get(n));
        }

        for p in self.pivots.iter().rev() {
            let mut acc = u32::from(p.target);
            for (j, &c) in p.row.iter().enumerate() {
                if j != p.col && c != 0 {
                    acc += 4 * 4 - u32::from(c) * u32::from(a[j]);
                }
            }
            a[p.col] = (acc % 4) as u8;
        }
        Some(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(sys: &Mod4System) -> Option<Vec<u8>> {
        let n = sys.nvars();
        let mut a = vec![0u8; n];
        for code in 0..4usize.pow(n as u32) {
            let mut c = code;
            for x in a.iter_mut() {
                *x = (c % 4) as u8;
                c /= 4;
            }
            if sys.is_satisfied_by(&a) {
                return Some(a);
            }
        }
        None
    }

    #[test]
    fn single_equation() {
        let mut s = Mod4System::new(1);
        s.push(&[1], 2);
        assert_eq!(solve_mod4(&s), Some(vec![2]));
    }

    #[test]
    fn forced_infeasible() {
        let mut s = Mod4System::new(2);
        s.push(&[1, 0], 0);
        s.push(&[0, 1], 0);
        s.push(&[1, 1], 2);
        assert_eq!(brute_force(&s), None);
        assert_eq!(solve_mod4(&s), None);
    }

    #[test]
    fn sum_equals_two() {
        let mut s = Mod4System::new(2);
        s.push(&[1, 1], 2);
        let a = solve_mod4(&s).unwrap();
        assert!(s.is_satisfied_by(&a));
        // (1,1) is among the brute-force solutions.
        assert!(s.is_satisfied_by(&[1, 1]));
    }

    #[test]
    fn even_coefficients_only() {
        let mut s = Mod4System::new(2);
        s.push(&[2, 2], 2);
        s.push(&[2, 0], 0);
        let a = solve_mod4(&s).unwrap();
        assert!(s.is_satisfied_by(&a));
        let mut s = Mod4System::new(1);
        s.push(&[2], 1);
        assert_eq!(solve_mod4(&s), None);
    }

    #[test]
    fn pivot_after_parity_rows() {
        // Parity row arrives first, then a unit pivot touching the same column.
        let mut s = Mod4System::new(3);
        s.push(&[2, 2, 0], 2);
        s.push(&[1, 1, 1], 3);
        s.push(&[0, 1, 1], 1);
        assert_eq!(solve_mod4(&s).is_some(), brute_force(&s).is_some());
        if let Some(a) = solve_mod4(&s) {
            assert!(s.is_satisfied_by(&a));
        }
    }
}
