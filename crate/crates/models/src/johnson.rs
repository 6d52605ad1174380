use std::sync::Arc;

use group_engine::{BlockFactor, BlockProduct, GroupError, ObjectModel, Perm, PermGroup, DEFAULT_STREAM_BUDGET};

use crate::{KSubset, ModelError};

/// Sym(n) on k-subsets; stabilizer Sym(k) x Sym(n-k).
#[derive(Debug, Clone)]
pub struct Johnson {
    pub n: usize,
    pub k: usize,
}

impl Johnson {
    pub fn new(n: usize, k: usize) -> Result<Self, ModelError> {
        if k < 1 || 2 * k > n || n > 25 {
            return Err(ModelError::Exclusion(format!("johnson needs 1 <= k and 2k <= n <= 25, got n = {n}, k = {k}")));
        }
        Ok(Johnson { n, k })
    }

    /// The star of k-subsets through the last point.
    pub fn in_canonical_coclique(&self, x: &KSubset) -> bool {
        x.contains(self.n - 1)
    }
}

impl ObjectModel for Johnson {
    type Point = KSubset;

    fn name(&self) -> String {
        format!("johnson(n={}, k={})", self.n, self.k)
    }

    fn degree(&self) -> usize {
        self.n
    }

    fn base_point(&self) -> KSubset {
        KSubset::initial(self.k)
    }

    fn act(&self, g: &Perm, x: &KSubset) -> KSubset {
        x.image(g)
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let f = vec![BlockFactor::sym(0..self.k), BlockFactor::sym(self.k..self.n)];
        Ok(Arc::new(BlockProduct::new(self.n, f, false, DEFAULT_STREAM_BUDGET)?))
    }

    fn classify(&self, x: &KSubset, y: &KSubset) -> Option<String> {
        Some(format!("O{}", self.k - x.meet(*y).len()))
    }

    fn describe(&self, x: &KSubset) -> String {
        x.to_string()
    }
}
