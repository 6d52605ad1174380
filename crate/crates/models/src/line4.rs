use std::fmt;
use std::sync::Arc;

use group_engine::{BlockFactor, BlockProduct, GroupError, ObjectModel, Perm, PermGroup, DEFAULT_STREAM_BUDGET};

use crate::sign::tuple_sign;
use crate::subset::{concat_sign, parity_sign, PairSplit};
use crate::{KSubset, ModelError, Sign};

/// A k-subset with independent parity classes on itself and on its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedComplementPair {
    pub base: KSubset,
    pub sign_set: Sign,
    pub sign_complement: Sign,
}

impl fmt::Display for SignedComplementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{}, c{})", self.base, self.sign_set, self.sign_complement)
    }
}

/// Stabilizer Alt(k) x Alt(n-k).
#[derive(Debug, Clone)]
pub struct Line4 {
    pub n: usize,
    pub k: usize,
}

impl Line4 {
    pub fn new(n: usize, k: usize) -> Result<Self, ModelError> {
        if k < 3 || 2 * k + 2 > n || n > 25 {
            return Err(ModelError::Exclusion(format!("line4 needs k >= 3 and 2k <= n-2, got n = {n}, k = {k}")));
        }
        Ok(Line4 { n, k })
    }

    pub fn in_canonical_coclique(&self, x: &SignedComplementPair) -> bool {
        x.base.contains(self.n - 1)
    }

    /// Relative signs on the set part and on the complement part.
    pub fn relative_signs(&self, x: &SignedComplementPair, y: &SignedComplementPair) -> (usize, Sign, Sign) {
        let s = PairSplit::new(self.n, x.base, y.base);
        let r1 = x.sign_set * concat_sign(&s.c, &s.u) * y.sign_set * concat_sign(&s.c, &s.w);
        let r2 = x.sign_complement * concat_sign(&s.e, &s.w) * y.sign_complement * concat_sign(&s.e, &s.u);
        (s.distance(), r1, r2)
    }
}

impl ObjectModel for Line4 {
    type Point = SignedComplementPair;

    fn name(&self) -> String {
        format!("line4(n={}, k={})", self.n, self.k)
    }

    fn degree(&self) -> usize {
        self.n
    }

    fn base_point(&self) -> SignedComplementPair {
        SignedComplementPair { base: KSubset::initial(self.k), sign_set: Sign::Plus, sign_complement: Sign::Plus }
    }

    fn act(&self, g: &Perm, x: &SignedComplementPair) -> SignedComplementPair {
        SignedComplementPair {
            base: x.base.image(g),
            sign_set: x.sign_set * tuple_sign(&x.base.image_tuple(g)),
            sign_complement: x.sign_complement * tuple_sign(&x.base.complement(self.n).image_tuple(g)),
        }
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let f = vec![BlockFactor::alt(0..self.k), BlockFactor::alt(self.k..self.n)];
        Ok(Arc::new(BlockProduct::new(self.n, f, false, DEFAULT_STREAM_BUDGET)?))
    }

    fn classify(&self, x: &SignedComplementPair, y: &SignedComplementPair) -> Option<String> {
        let (i, r1, r2) = self.relative_signs(x, y);
        if i <= 1 {
            Some(format!("O{i}{r1}{r2}"))
        } else {
            Some(format!("O{i}{}", r1 * r2 * parity_sign(i)))
        }
    }

    fn describe(&self, x: &SignedComplementPair) -> String {
        x.to_string()
    }
}
