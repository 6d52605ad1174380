use std::sync::Arc;

use group_engine::{generate_group, GroupError, ObjectModel, Perm, PermGroup, DEFAULT_GROUP_BUDGET};

use crate::{KSubset, ModelError};

/// Partitions of `[2k]` into two blocks of size k, keyed by the block holding
/// the first point. Stabilizer Sym(k) wr Sym(2).
#[derive(Debug, Clone)]
pub struct UniformPartitions {
    pub k: usize,
}

impl UniformPartitions {
    pub fn new(k: usize) -> Result<Self, ModelError> {
        if !(2..=12).contains(&k) {
            return Err(ModelError::Exclusion(format!("uniform2 needs 2 <= k <= 12, got k = {k}")));
        }
        Ok(UniformPartitions { k })
    }

    /// Partitions with the last two points in the same block.
    pub fn in_canonical_coclique(&self, x: &KSubset) -> bool {
        let n = 2 * self.k;
        x.contains(n - 2) == x.contains(n - 1)
    }

    fn canonical(&self, block: KSubset) -> KSubset {
        if block.contains(0) {
            block
        } else {
            block.complement(2 * self.k)
        }
    }
}

impl ObjectModel for UniformPartitions {
    type Point = KSubset;

    fn name(&self) -> String {
        format!("uniform2(k={})", self.k)
    }

    fn degree(&self) -> usize {
        2 * self.k
    }

    fn base_point(&self) -> KSubset {
        KSubset::initial(self.k)
    }

    fn act(&self, g: &Perm, x: &KSubset) -> KSubset {
        self.canonical(x.image(g))
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let (k, n) = (self.k, 2 * self.k);
        let swap: Vec<Vec<usize>> = (0..k).map(|i| vec![i, i + k]).collect();
        let mut gens = vec![Perm::from_cycles(n, &swap)?];
        if k >= 2 {
            gens.push(Perm::transposition(n, 0, 1));
            gens.push(Perm::cycle(n, &(0..k).collect::<Vec<_>>()));
        }
        Ok(Arc::new(generate_group(n, gens, DEFAULT_GROUP_BUDGET)?))
    }

    fn classify(&self, x: &KSubset, y: &KSubset) -> Option<String> {
        let m = x.meet(*y).len();
        Some(format!("O{}", self.k - m.max(self.k - m)))
    }

    fn describe(&self, x: &KSubset) -> String {
        format!("{}|{}", x, x.complement(2 * self.k))
    }
}
