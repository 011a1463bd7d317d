//! Circuit enumeration, isomorphism and minor search on small matroids.
//! Columns are packed into `u64` words, so ranks and sizes stay below 64.

use std::collections::HashSet;

use super::BinaryMatroid;

pub const MAX_ISO_SIZE: usize = 12;
pub const MAX_MINOR_SIZE: usize = 15;
/// Largest null-space dimension whose span is enumerated for circuits.
pub(crate) const MAX_NULLITY: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub deleted: Vec<String>,
    pub contracted: Vec<String>,
}

pub(crate) fn columns(m: &BinaryMatroid) -> Vec<u64> {
    let rep = m.representation();
    assert!(
        rep.nrows() <= 64 && m.size() <= 64,
        "matroid too large for packed columns"
    );
    (0..m.size())
        .map(|c| {
            (0..rep.nrows())
                .filter(|&r| rep.get(r, c))
                .fold(0u64, |acc, r| acc | 1 << r)
        })
        .collect()
}

/// XOR basis keyed by leading bit.
#[derive(Clone)]
struct Basis {
    piv: [u64; 64],
    rank: usize,
}

impl Basis {
    fn new() -> Self {
        Self {
            piv: [0; 64],
            rank: 0,
        }
    }

    fn reduce(&self, mut v: u64) -> u64 {
        while v != 0 {
            let p = 63 - v.leading_zeros() as usize;
            if self.piv[p] == 0 {
                break;
            }
            v ^= self.piv[p];
        }
        v
    }

    fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        self.piv[63 - v.leading_zeros() as usize] = v;
        self.rank += 1;
        true
    }

    /// Fully reduced form, so equal cosets give equal words.
    fn normal(&self, mut v: u64) -> u64 {
        for p in (0..64).rev() {
            if v >> p & 1 == 1 && self.piv[p] != 0 {
                v ^= self.piv[p];
            }
        }
        v
    }
}

fn rank_of(cols: &[u64], set: impl Iterator<Item = usize>) -> usize {
    let mut b = Basis::new();
    for i in set {
        b.insert(cols[i]);
    }
    b.rank
}

/// Null-space basis of the column list, as subsets of column positions.
fn null_basis(cols: &[u64]) -> Vec<u64> {
    let mut piv: [(u64, u64); 64] = [(0, 0); 64];
    let mut out = Vec::new();
    for (j, &col) in cols.iter().enumerate() {
        let (mut v, mut c) = (col, 1u64 << j);
        loop {
            if v == 0 {
                out.push(c);
                break;
            }
            let p = 63 - v.leading_zeros() as usize;
            if piv[p].0 == 0 {
                piv[p] = (v, c);
                break;
            }
            v ^= piv[p].0;
            c ^= piv[p].1;
        }
    }
    out
}

/// Minimal nonzero supports in the span of the null space.
pub(crate) fn circuits_of(cols: &[u64]) -> Vec<u64> {
    let basis = null_basis(cols);
    assert!(
        basis.len() <= MAX_NULLITY,
        "null space too large to enumerate"
    );
    let mut all = Vec::with_capacity(1 << basis.len());
    let mut cur = 0u64;
    for i in 1u64..1 << basis.len() {
        cur ^= basis[i.trailing_zeros() as usize];
        all.push(cur);
    }
    all.sort_by_key(|v| (v.count_ones(), *v));
    let mut circuits: Vec<u64> = Vec::new();
    for v in all {
        if !circuits.iter().any(|&c| c & !v == 0) {
            circuits.push(v);
        }
    }
    circuits
}

pub(crate) fn circuit_masks(m: &BinaryMatroid) -> Vec<u64> {
    circuits_of(&columns(m))
}

/// Circuit data in a form cheap to compare.
struct Profile {
    size: usize,
    rank: usize,
    circuits: Vec<u64>,
    set: HashSet<u64>,
    // Per element, number of circuits through it of each size.
    sig: Vec<Vec<u16>>,
    sig_sorted: Vec<Vec<u16>>,
}

impl Profile {
    fn new(cols: &[u64], rank: usize) -> Self {
        let size = cols.len();
        let circuits = circuits_of(cols);
        let mut sig = vec![vec![0u16; size + 1]; size];
        for &c in &circuits {
            let w = c.count_ones() as usize;
            for (i, s) in sig.iter_mut().enumerate() {
                if c >> i & 1 == 1 {
                    s[w] += 1;
                }
            }
        }
        let mut sig_sorted = sig.clone();
        sig_sorted.sort();
        Self {
            size,
            rank,
            set: circuits.iter().copied().collect(),
            circuits,
            sig,
            sig_sorted,
        }
    }

    fn from_matroid(m: &BinaryMatroid) -> Self {
        Self::new(&columns(m), m.rank())
    }
}

fn profiles_isomorphic(a: &Profile, b: &Profile) -> bool {
    if a.size != b.size
        || a.rank != b.rank
        || a.circuits.len() != b.circuits.len()
        || a.sig_sorted != b.sig_sorted
    {
        return false;
    }
    // Circuits of `a` grouped by their largest element, checked once complete.
    let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); a.size];
    for &c in &a.circuits {
        by_max[63 - c.leading_zeros() as usize].push(c);
    }
    let mut map = vec![0usize; a.size];
    let mut used = vec![false; b.size];
    extend(a, b, &by_max, 0, &mut map, &mut used)
}

fn extend(
    a: &Profile,
    b: &Profile,
    by_max: &[Vec<u64>],
    i: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == a.size {
        return true;
    }
    for j in 0..b.size {
        if used[j] || a.sig[i] != b.sig[j] {
            continue;
        }
        map[i] = j;
        let ok = by_max[i].iter().all(|&c| {
            let img = (0..=i)
                .filter(|&k| c >> k & 1 == 1)
                .fold(0u64, |acc, k| acc | 1 << map[k]);
            b.set.contains(&img)
        });
        if ok {
            used[j] = true;
            if extend(a, b, by_max, i + 1, map, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}

pub(crate) fn isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> bool {
    a.size() == b.size()
        && a.rank() == b.rank()
        && profiles_isomorphic(&Profile::from_matroid(a), &Profile::from_matroid(b))
}

/// Lexicographically ordered `k`-subsets of `items`.
fn combinations(items: &[usize], k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if go(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, k, 0, &mut Vec::with_capacity(k), &mut f)
}

/// Searches `m \ D / C ≅ target` with `C` independent and `D` not lowering
/// the rank, so `|C| = r(m) − r(target)`. Candidates are visited with `D`
/// then `C` in lexicographic order of column positions; the first hit is
/// returned.
pub(crate) fn find_minor(m: &BinaryMatroid, target: &BinaryMatroid) -> Option<MinorWitness> {
    let (s, st) = (m.size(), target.size());
    let (rm, rt) = (m.rank(), target.rank());
    if st > s || rt > rm || st - rt > s - rm {
        return None;
    }
    let k = rm - rt;
    let d = s - st - k;
    let cols = columns(m);
    let tp = Profile::from_matroid(target);
    let all: Vec<usize> = (0..s).collect();
    let mut found = None;
    combinations(&all, d, |del| {
        let kept: Vec<usize> = all.iter().copied().filter(|i| !del.contains(i)).collect();
        if rank_of(&cols, kept.iter().copied()) != rm {
            return false;
        }
        combinations(&kept, k, |con| {
            let mut b = Basis::new();
            if !con.iter().all(|&i| b.insert(cols[i])) {
                return false;
            }
            let rest: Vec<u64> = kept
                .iter()
                .filter(|i| !con.contains(i))
                .map(|&i| b.normal(cols[i]))
                .collect();
            if profiles_isomorphic(&Profile::new(&rest, rt), &tp) {
                let name = |ix: &[usize]| ix.iter().map(|&i| m.labels()[i].clone()).collect();
                found = Some(MinorWitness {
                    deleted: name(del),
                    contracted: name(con),
                });
                return true;
            }
            false
        })
    });
    found
}
