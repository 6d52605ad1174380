use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::SymError;

/// Largest n accepted by the enumeration routines.
pub const MAX_N: usize = 25;

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Cycle types of permutations share the partition carrier.
pub type CycleType = Partition;

impl Partition {
    /// Validates that `parts` is weakly decreasing with every part positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, SymError> {
        if parts.is_empty() {
            return Err(SymError::Parameter("a partition needs at least one part".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(SymError::Parameter(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::Parameter(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition (used for cycle types).
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, SymError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn one_row(n: usize) -> Self {
        Partition { parts: vec![n as u32] }
    }

    pub fn one_column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The two-row partition `[n-i, i]` (or `[n]` when `i == 0`).
    pub fn two_row(n: usize, i: usize) -> Result<Self, SymError> {
        if 2 * i > n {
            return Err(SymError::Parameter(format!("[{}, {i}] is not a partition", n as i64 - i as i64)));
        }
        if i == 0 {
            Ok(Self::one_row(n))
        } else {
            Self::new(vec![(n - i) as u32, i as u32])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.n() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = SymError;
    fn try_from(parts: Vec<u32>) -> Result<Self, SymError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Exponent notation, e.g. `[5,1^3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{p}^{}", j - i)?;
            } else {
                write!(f, "{p}")?;
            }
            i = j;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = SymError;

    /// Accepts `[5,1^3]`, `5,1,1,1` or `5 1 1 1`.
    fn from_str(s: &str) -> Result<Self, SymError> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let bad = || SymError::Parameter(format!("cannot parse partition {s:?}"));
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let base: u32 = base.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

fn check_n(n: usize) -> Result<(), SymError> {
    if n == 0 || n > MAX_N {
        return Err(SymError::Parameter(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>, SymError> {
    check_n(n)?;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n as u32, n as u32, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// True iff every prefix sum of `lam` is at least the matching prefix sum of `mu`.
pub fn dominates(lam: &Partition, mu: &Partition) -> Result<bool, SymError> {
    if lam.n() != mu.n() {
        return Err(SymError::Parameter(format!("{lam} and {mu} partition different integers")));
    }
    let len = lam.len().max(mu.len());
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..len {
        a += lam.parts.get(i).copied().unwrap_or(0);
        b += mu.parts.get(i).copied().unwrap_or(0);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// p(n) through Euler's pentagonal number recurrence.
    fn pentagonal(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got = partitions_of(4).unwrap();
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        for n in 1..=MAX_N {
            assert_eq!(partitions_of(n).unwrap().len() as u64, pentagonal(n), "n = {n}");
        }
        assert_eq!(partitions_of(8).unwrap().len(), 22);
        assert_eq!(partitions_of(1).unwrap(), vec![p(&[1])]);
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        let all = partitions_of(10).unwrap();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn out_of_range_n() {
        assert!(partitions_of(0).is_err());
        assert!(partitions_of(26).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[4, 1]), &p(&[3, 2])).unwrap());
        assert!(!dominates(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap());
        assert!(!dominates(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
        for mu in partitions_of(6).unwrap() {
            assert!(dominates(&Partition::one_row(6), &mu).unwrap());
        }
        assert!(dominates(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=10 {
            let all = partitions_of(n).unwrap();
            for a in &all {
                assert!(dominates(a, a).unwrap());
                for b in &all {
                    let ab = dominates(a, b).unwrap();
                    if ab && dominates(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let lam = p(&[5, 1, 1, 1]);
        assert_eq!(lam.to_string(), "[5,1^3]");
        assert_eq!("[5,1^3]".parse::<Partition>().unwrap(), lam);
        assert_eq!("5, 1, 1, 1".parse::<Partition>().unwrap(), lam);
        assert_eq!("[2^3]".parse::<Partition>().unwrap(), p(&[2, 2, 2]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[x]".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_and_sign() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).sign(), -1);
        assert_eq!(p(&[3, 1]).sign(), 1);
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p(&[3, 2, 1]));
    }
}
