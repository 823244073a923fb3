//! Integer partitions: the index set for symmetric function bases.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

/// A partition: weakly decreasing list of positive integers. The empty
/// partition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition);
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    /// Sort the entries and drop zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max = self.0[0] as usize;
        let mut cols = vec![0u32; max];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Multiset union of parts (the product rule for power sums).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Arm length of the cell `(row, col)` (0-based).
    pub fn arm(&self, row: usize, col: usize) -> u32 {
        self.0[row] - col as u32 - 1
    }

    /// Leg length of the cell `(row, col)` (0-based).
    pub fn leg(&self, row: usize, col: usize) -> u32 {
        let mut leg = 0;
        for r in row + 1..self.0.len() {
            if self.0[r] as usize > col {
                leg += 1;
            }
        }
        leg
    }

    /// Multiplicities `m_i` of each part value, as (value, count) pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// `z_lambda = prod_i i^{m_i} m_i!` where `m_i` is the multiplicity of `i`.
pub fn z_factor(p: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (value, count) in p.multiplicities() {
        for _ in 0..count {
            z *= BigInt::from(value);
        }
        for f in 1..=count {
            z *= BigInt::from(f);
        }
    }
    z
}

/// Dominance order: true iff every partial sum of `a` is at most the
/// corresponding partial sum of `b`. Both partitions must have equal size.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    let n = a.len().max(b.len());
    let mut sa = 0u32;
    let mut sb = 0u32;
    for i in 0..n {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n` in descending lexicographic order, `(n)` first.
/// Descending lex refines reverse dominance, so consuming the list in order
/// visits every partition after all partitions that dominate it.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_of_max_len(n: u32, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// The set of partitions obtained from `lam` by adding a horizontal strip of
/// `r` cells (no two added cells in the same column).
pub fn horizontal_strips(lam: &Partition, r: u32) -> Vec<Partition> {
    // nu runs over partitions with lam ⊆ nu, |nu| = |lam| + r and
    // nu_{i+1} <= lam_i for all i.
    let mut out = Vec::new();
    let rows = lam.len() + 1;
    let mut nu = vec![0u32; rows];
    fn rec(
        lam: &Partition,
        row: usize,
        rows: usize,
        left: u32,
        prev: u32,
        nu: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::from_unsorted(nu.clone()));
            }
            return;
        }
        let lo = lam.part(row);
        // strip condition: nu_row <= lam_{row-1}; prev carries that bound
        let hi = (lo + left).min(prev);
        for v in lo..=hi {
            nu[row] = v;
            rec(lam, row + 1, rows, left - (v - lo), lam.part(row), nu, out);
            nu[row] = 0;
        }
    }
    rec(lam, 0, rows, r, u32::MAX, &mut nu, &mut out);
    out.sort();
    out.dedup();
    out
}

#[macro_export]
macro_rules! ptn {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(ptn![3, 1].conjugate(), ptn![2, 1, 1]);
        assert_eq!(ptn![].conjugate(), ptn![]);
        assert_eq!(ptn![2, 2].conjugate(), ptn![2, 2]);
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(z_factor(&ptn![1]), BigInt::from(1));
        assert_eq!(z_factor(&ptn![2, 1]), BigInt::from(2));
        // 2^2 * 2! * 1^2 * 2! = 16
        assert_eq!(z_factor(&ptn![2, 2, 1, 1]), BigInt::from(16));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&ptn![2, 2], &ptn![3, 1]).unwrap());
        assert!(!dominance_leq(&ptn![3, 1], &ptn![2, 2]).unwrap());
        assert!(dominance_leq(&ptn![2, 1, 1], &ptn![2, 1, 1]).unwrap());
        assert!(dominance_leq(&ptn![1], &ptn![2]).is_err());
    }

    #[test]
    fn partitions_descending_lex() {
        let ps = partitions_of(4);
        let expect = vec![
            ptn![4],
            ptn![3, 1],
            ptn![2, 2],
            ptn![2, 1, 1],
            ptn![1, 1, 1, 1],
        ];
        assert_eq!(ps, expect);
        assert_eq!(partitions_of(0), vec![ptn![]]);
        assert_eq!(partitions_of(12).len(), 77);
    }

    #[test]
    fn strips() {
        let s = horizontal_strips(&ptn![2, 1], 2);
        let expect = vec![ptn![2, 2, 1], ptn![3, 1, 1], ptn![3, 2], ptn![4, 1]];
        assert_eq!(s, expect);
        assert_eq!(horizontal_strips(&ptn![], 3), vec![ptn![3]]);
    }

    proptest! {
        #[test]
        fn conjugate_involutive(parts in proptest::collection::vec(1u32..8, 0..6)) {
            let p = Partition::from_unsorted(parts);
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().size(), p.size());
        }

        #[test]
        fn dominance_reflexive_on_all(n in 0u32..9) {
            for p in partitions_of(n) {
                prop_assert!(dominance_leq(&p, &p).unwrap());
            }
        }
    }
}
