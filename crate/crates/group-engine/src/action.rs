use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::group::PermGroup;
use crate::perm::Perm;
use crate::GroupError;

/// A family of combinatorial objects acted on by Sym(n).
pub trait ObjectModel: Send + Sync {
    type Point: Clone + Eq + Hash + Send + Sync + Debug;

    fn name(&self) -> String;
    fn degree(&self) -> usize;
    fn base_point(&self) -> Self::Point;
    fn act(&self, g: &Perm, x: &Self::Point) -> Self::Point;
    /// The stabilizer of the base point, with analytic generators.
    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError>;
    /// Orbital label of `(x, y)` from a closed-form invariant, if the family has one.
    fn classify(&self, _x: &Self::Point, _y: &Self::Point) -> Option<String> {
        None
    }
    fn describe(&self, x: &Self::Point) -> String;
}

/// Object-safe view of a transitive action of Sym(n) on an indexed domain.
/// Point 0 is the base point.
pub trait Action: Send + Sync {
    fn name(&self) -> String;
    fn degree(&self) -> usize;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn act(&self, g: &Perm, x: usize) -> usize;
    fn point_label(&self, x: usize) -> String;
    fn stabilizer(&self) -> Arc<dyn PermGroup>;
    fn classify(&self, x: usize, y: usize) -> Option<String>;
    /// A permutation sending the base point to `x`.
    fn transversal(&self, x: usize) -> &Perm;
    fn transversal_inv(&self, x: usize) -> &Perm;
}

/// Explicit domain of an [`ObjectModel`], grown from the base point under the
/// generators `(1 2)` and `(1 2 .. n)` of Sym(n).
pub struct ExplicitAction<M: ObjectModel> {
    model: M,
    points: Vec<M::Point>,
    index: HashMap<M::Point, usize>,
    transversal: Vec<Perm>,
    transversal_inv: Vec<Perm>,
    stabilizer: Arc<dyn PermGroup>,
}

impl<M: ObjectModel> ExplicitAction<M> {
    pub fn new(model: M, max_domain: usize) -> Result<Self, GroupError> {
        let n = model.degree();
        let gens = if n >= 2 {
            vec![Perm::transposition(n, 0, 1), Perm::cycle(n, &(0..n).collect::<Vec<_>>())]
        } else {
            vec![]
        };
        let base = model.base_point();
        let mut points = vec![base.clone()];
        let mut index = HashMap::from([(base, 0usize)]);
        let mut transversal = vec![Perm::identity(n)];
        let mut next = 0;
        while next < points.len() {
            for s in &gens {
                let y = model.act(s, &points[next]);
                if !index.contains_key(&y) {
                    if points.len() >= max_domain {
                        return Err(GroupError::Budget { what: format!("domain of {}", model.name()), cap: max_domain as u64 });
                    }
                    index.insert(y.clone(), points.len());
                    points.push(y);
                    transversal.push(s.compose(&transversal[next]));
                }
            }
            next += 1;
        }
        let transversal_inv = transversal.iter().map(Perm::inverse).collect();
        let stabilizer = model.stabilizer()?;
        Ok(ExplicitAction { model, points, index, transversal, transversal_inv, stabilizer })
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    pub fn point(&self, x: usize) -> &M::Point {
        &self.points[x]
    }

    pub fn points(&self) -> &[M::Point] {
        &self.points
    }

    pub fn index_of(&self, p: &M::Point) -> Option<usize> {
        self.index.get(p).copied()
    }
}

impl<M: ObjectModel> Action for ExplicitAction<M> {
    fn name(&self) -> String {
        self.model.name()
    }

    fn degree(&self) -> usize {
        self.model.degree()
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn act(&self, g: &Perm, x: usize) -> usize {
        let y = self.model.act(g, &self.points[x]);
        *self.index.get(&y).expect("the domain is closed under Sym(n)")
    }

    fn point_label(&self, x: usize) -> String {
        self.model.describe(&self.points[x])
    }

    fn stabilizer(&self) -> Arc<dyn PermGroup> {
        Arc::clone(&self.stabilizer)
    }

    fn classify(&self, x: usize, y: usize) -> Option<String> {
        self.model.classify(&self.points[x], &self.points[y])
    }

    fn transversal(&self, x: usize) -> &Perm {
        &self.transversal[x]
    }

    fn transversal_inv(&self, x: usize) -> &Perm {
        &self.transversal_inv[x]
    }
}
