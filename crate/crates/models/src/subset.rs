use std::fmt;

use group_engine::Perm;

/// A subset of `{0, .., n-1}` as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset(pub u32);

impl KSubset {
    pub fn from_elements(e: &[usize]) -> KSubset {
        KSubset(e.iter().map(|&i| 1u32 << i).sum())
    }

    /// `{0, .., k-1}`.
    pub fn initial(k: usize) -> KSubset {
        KSubset(((1u64 << k) - 1) as u32)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len());
        let mut m = self.0;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        v
    }

    pub fn complement(self, n: usize) -> KSubset {
        KSubset(!self.0 & (((1u64 << n) - 1) as u32))
    }

    pub fn meet(self, other: KSubset) -> KSubset {
        KSubset(self.0 & other.0)
    }

    pub fn minus(self, other: KSubset) -> KSubset {
        KSubset(self.0 & !other.0)
    }

    pub fn image(self, g: &Perm) -> KSubset {
        KSubset(self.elements().into_iter().map(|i| 1u32 << g.apply(i)).sum())
    }

    /// Images of the sorted elements, in order.
    pub fn image_tuple(self, g: &Perm) -> Vec<usize> {
        self.elements().into_iter().map(|i| g.apply(i)).collect()
    }

    /// All k-subsets of `{0, .., n-1}` in increasing mask order.
    pub fn all(n: usize, k: usize) -> Vec<KSubset> {
        if k > n {
            return Vec::new();
        }
        if k == 0 {
            return vec![KSubset(0)];
        }
        let limit = 1u64 << n;
        let mut out = Vec::new();
        let mut m = (1u64 << k) - 1;
        while m < limit {
            out.push(KSubset(m as u32));
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
        out
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elements().iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

/// Sorted pieces of a pair of k-subsets `(a, b)`: `C = a∩b`, `U = a∖b`,
/// `W = b∖a` and `E` the points in neither.
pub(crate) struct PairSplit {
    pub c: Vec<usize>,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub e: Vec<usize>,
}

impl PairSplit {
    pub fn new(n: usize, a: KSubset, b: KSubset) -> PairSplit {
        PairSplit {
            c: a.meet(b).elements(),
            u: a.minus(b).elements(),
            w: b.minus(a).elements(),
            e: KSubset(a.0 | b.0).complement(n).elements(),
        }
    }

    /// Number of points of `a` missing from `b`.
    pub fn distance(&self) -> usize {
        self.u.len()
    }
}

pub(crate) fn concat_sign(head: &[usize], tail: &[usize]) -> crate::Sign {
    let mut t = head.to_vec();
    t.extend_from_slice(tail);
    crate::sign::tuple_sign(&t)
}

pub(crate) fn parity_sign(i: usize) -> crate::Sign {
    crate::Sign::from_parity(i % 2 == 1)
}
