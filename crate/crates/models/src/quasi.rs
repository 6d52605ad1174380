use std::fmt;
use std::sync::Arc;

use group_engine::{BlockFactor, BlockProduct, GroupError, ObjectModel, Perm, PermGroup, DEFAULT_STREAM_BUDGET};

use crate::sign::tuple_sign;
use crate::subset::{concat_sign, PairSplit};
use crate::{KSubset, ModelError, Sign};

/// A k-subset with a parity class of its orderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiKSubset {
    pub base: KSubset,
    pub sign: Sign,
}

impl fmt::Display for QuasiKSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, self.sign)
    }
}

/// Quasi k-subsets. With `on_complement` the sign records the ordering class
/// of the complement instead (stabilizer Sym(k) x Alt(n-k)).
#[derive(Debug, Clone)]
pub struct QuasiJohnson {
    pub n: usize,
    pub k: usize,
    pub on_complement: bool,
}

impl QuasiJohnson {
    /// Stabilizer Alt(k) x Sym(n-k).
    pub fn line2(n: usize, k: usize) -> Result<Self, ModelError> {
        if 2 * k > n || n > 25 {
            return Err(ModelError::Exclusion(format!("quasi-johnson needs 2k <= n <= 25, got n = {n}, k = {k}")));
        }
        if k == 2 {
            return Err(ModelError::Exclusion("quasi-johnson needs k != 2 (not a Gelfand pair)".into()));
        }
        if k < 3 {
            return Err(ModelError::Exclusion("quasi-johnson needs k >= 3 (k = 1 gives an intransitive action)".into()));
        }
        Ok(QuasiJohnson { n, k, on_complement: false })
    }

    /// Stabilizer Sym(k) x Alt(n-k).
    pub fn line3(n: usize, k: usize) -> Result<Self, ModelError> {
        if k < 1 || 2 * k > n || n > 25 {
            return Err(ModelError::Exclusion(format!("line3 needs 1 <= k and 2k <= n <= 25, got n = {n}, k = {k}")));
        }
        if k + 2 == n {
            return Err(ModelError::Exclusion("line3 needs k != n-2 (not a Gelfand pair)".into()));
        }
        if n - k < 2 {
            return Err(ModelError::Exclusion("line3 needs n-k >= 2 (otherwise intransitive)".into()));
        }
        Ok(QuasiJohnson { n, k, on_complement: true })
    }

    /// Any k >= 2 with 2k <= n, without the Gelfand exclusions.
    pub fn unchecked(n: usize, k: usize) -> Result<Self, ModelError> {
        if k < 2 || 2 * k > n || n > 25 {
            return Err(ModelError::Parameter(format!("quasi k-subsets need 2 <= k and 2k <= n, got n = {n}, k = {k}")));
        }
        Ok(QuasiJohnson { n, k, on_complement: false })
    }

    pub fn in_canonical_coclique(&self, x: &QuasiKSubset) -> bool {
        x.base.contains(self.n - 1)
    }

    /// `ε(x)` relative to the ordering `head ++ tail` of the signed part.
    fn relative(&self, x: &QuasiKSubset, head: &[usize], tail: &[usize]) -> Sign {
        x.sign * concat_sign(head, tail)
    }
}

impl ObjectModel for QuasiJohnson {
    type Point = QuasiKSubset;

    fn name(&self) -> String {
        let line = if self.on_complement { "line3" } else { "quasi-johnson" };
        format!("{line}(n={}, k={})", self.n, self.k)
    }

    fn degree(&self) -> usize {
        self.n
    }

    fn base_point(&self) -> QuasiKSubset {
        QuasiKSubset { base: KSubset::initial(self.k), sign: Sign::Plus }
    }

    fn act(&self, g: &Perm, x: &QuasiKSubset) -> QuasiKSubset {
        let signed = if self.on_complement { x.base.complement(self.n) } else { x.base };
        QuasiKSubset { base: x.base.image(g), sign: x.sign * tuple_sign(&signed.image_tuple(g)) }
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let (a, b) = (0..self.k, self.k..self.n);
        let f = if self.on_complement {
            vec![BlockFactor::sym(a), BlockFactor::alt(b)]
        } else {
            vec![BlockFactor::alt(a), BlockFactor::sym(b)]
        };
        Ok(Arc::new(BlockProduct::new(self.n, f, false, DEFAULT_STREAM_BUDGET)?))
    }

    fn classify(&self, x: &QuasiKSubset, y: &QuasiKSubset) -> Option<String> {
        let s = PairSplit::new(self.n, x.base, y.base);
        let i = s.distance();
        if i >= 2 {
            return Some(format!("O{i}"));
        }
        let r = if self.on_complement {
            self.relative(x, &s.e, &s.w) * self.relative(y, &s.e, &s.u)
        } else {
            self.relative(x, &s.c, &s.u) * self.relative(y, &s.c, &s.w)
        };
        Some(format!("O{i}{r}"))
    }

    fn describe(&self, x: &QuasiKSubset) -> String {
        x.to_string()
    }
}

/// The quasi-Kneser graph: quasi k-subsets, adjacent when the underlying sets
/// are disjoint. Defined for every `2 <= k`, `2k <= n`.
pub fn quasi_kneser_graph(n: usize, k: usize) -> Result<(Vec<QuasiKSubset>, Vec<Vec<usize>>), ModelError> {
    QuasiJohnson::unchecked(n, k)?;
    let vertices: Vec<QuasiKSubset> = KSubset::all(n, k)
        .into_iter()
        .flat_map(|b| [Sign::Plus, Sign::Minus].map(|sign| QuasiKSubset { base: b, sign }))
        .collect();
    let adjacency = vertices
        .iter()
        .map(|x| {
            (0..vertices.len())
                .filter(|&j| x.base.meet(vertices[j].base).is_empty())
                .collect()
        })
        .collect();
    Ok((vertices, adjacency))
}
