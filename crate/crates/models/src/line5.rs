use std::fmt;
use std::sync::Arc;

use group_engine::{BlockFactor, BlockProduct, GroupError, ObjectModel, Perm, PermGroup, DEFAULT_STREAM_BUDGET};

use crate::sign::tuple_sign;
use crate::subset::{concat_sign, parity_sign, PairSplit};
use crate::{KSubset, ModelError, Sign};

/// The ordered pair `(S, complement of S)` with one joint parity sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairedSignObject {
    pub base: KSubset,
    pub sign: Sign,
}

impl fmt::Display for PairedSignObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, c){}", self.base, self.sign)
    }
}

/// Stabilizer (Sym(k) x Sym(n-k)) ∩ Alt(n).
#[derive(Debug, Clone)]
pub struct Line5 {
    pub n: usize,
    pub k: usize,
}

impl Line5 {
    pub fn new(n: usize, k: usize) -> Result<Self, ModelError> {
        if k < 1 || 2 * k > n || n > 25 {
            return Err(ModelError::Exclusion(format!("line5 needs 1 <= k and 2k <= n, got n = {n}, k = {k}")));
        }
        if n < 4 {
            return Err(ModelError::Exclusion(format!("line5 needs n >= 4, got n = {n} (Alt(n) is too small)")));
        }
        if (n, k) == (4, 2) {
            return Err(ModelError::Exclusion("line5 needs (n, k) != (4, 2) (not a Gelfand pair)".into()));
        }
        Ok(Line5 { n, k })
    }

    pub fn in_canonical_coclique(&self, x: &PairedSignObject) -> bool {
        x.base.contains(self.n - 1)
    }

    /// Distance and raw relative sign of a pair.
    pub fn relative_sign(&self, x: &PairedSignObject, y: &PairedSignObject) -> (usize, Sign) {
        let s = PairSplit::new(self.n, x.base, y.base);
        let ex = x.sign * concat_sign(&s.c, &s.u) * concat_sign(&s.e, &s.w);
        let ey = y.sign * concat_sign(&s.c, &s.w) * concat_sign(&s.e, &s.u);
        (s.distance(), ex * ey)
    }
}

impl ObjectModel for Line5 {
    type Point = PairedSignObject;

    fn name(&self) -> String {
        format!("line5(n={}, k={})", self.n, self.k)
    }

    fn degree(&self) -> usize {
        self.n
    }

    fn base_point(&self) -> PairedSignObject {
        PairedSignObject { base: KSubset::initial(self.k), sign: Sign::Plus }
    }

    fn act(&self, g: &Perm, x: &PairedSignObject) -> PairedSignObject {
        let a = tuple_sign(&x.base.image_tuple(g));
        let b = tuple_sign(&x.base.complement(self.n).image_tuple(g));
        PairedSignObject { base: x.base.image(g), sign: x.sign * a * b }
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let f = vec![BlockFactor::sym(0..self.k), BlockFactor::sym(self.k..self.n)];
        Ok(Arc::new(BlockProduct::new(self.n, f, true, DEFAULT_STREAM_BUDGET)?))
    }

    fn classify(&self, x: &PairedSignObject, y: &PairedSignObject) -> Option<String> {
        let (i, r) = self.relative_sign(x, y);
        Some(format!("O{i}{}", r * parity_sign(i)))
    }

    fn describe(&self, x: &PairedSignObject) -> String {
        x.to_string()
    }
}
