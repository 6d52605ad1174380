use std::collections::{BTreeMap, HashMap};

use indexmap::IndexSet;
use num_traits::ToPrimitive;
use sym_core::{conjugacy_classes, CycleType, Partition};

use crate::par;
use crate::perm::{CycleKey, Perm};
use crate::GroupError;

/// Cap on the number of elements stored by closure enumeration.
pub const DEFAULT_GROUP_BUDGET: u64 = 10_000_000;
/// Cap on the number of elements visited when streaming a block product.
pub const DEFAULT_STREAM_BUDGET: u64 = 100_000_000;

/// A finite permutation group whose elements can be summed over.
pub trait PermGroup: Send + Sync {
    fn degree(&self) -> usize;
    fn order(&self) -> u64;
    fn generators(&self) -> &[Perm];
    /// Number of elements of each cycle type.
    fn class_counts(&self) -> &BTreeMap<CycleType, u64>;
    fn contains(&self, g: &Perm) -> bool;
    /// Number of elements of each cycle type in the coset `x H`.
    fn coset_histogram(&self, x: &Perm) -> BTreeMap<CycleType, u64>;
    fn describe(&self) -> String;
}

fn decode(hist: HashMap<CycleKey, u64>) -> BTreeMap<CycleType, u64> {
    hist.into_iter().map(|(k, v)| (k.to_partition(), v)).collect()
}

fn merge(mut a: HashMap<CycleKey, u64>, b: HashMap<CycleKey, u64>) -> HashMap<CycleKey, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// A group given by generators and enumerated completely by breadth-first closure.
#[derive(Debug, Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: IndexSet<Perm>,
    class_counts: BTreeMap<CycleType, u64>,
}

/// Enumerates `<generators>` by closure under left multiplication, failing once
/// more than `budget` elements have been found.
pub fn generate_group(n: usize, generators: Vec<Perm>, budget: u64) -> Result<GeneratedGroup, GroupError> {
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(GroupError::Parameter(format!("generator {g} has degree {} but n = {n}", g.degree())));
    }
    let mut elements = IndexSet::new();
    elements.insert(Perm::identity(n));
    let mut next = 0;
    while next < elements.len() {
        let g = elements[next].clone();
        for s in &generators {
            if elements.insert(s.compose(&g)) && elements.len() as u64 > budget {
                return Err(GroupError::Budget { what: "group order".into(), cap: budget });
            }
        }
        next += 1;
    }
    let mut counts: HashMap<CycleKey, u64> = HashMap::new();
    for g in &elements {
        *counts.entry(g.cycle_key()).or_insert(0) += 1;
    }
    Ok(GeneratedGroup { degree: n, generators, elements, class_counts: decode(counts) })
}

impl GeneratedGroup {
    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.elements.iter()
    }

    /// Orbit of `point` under the group.
    pub fn orbit_of_point(&self, point: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements.iter().map(|g| g.apply(point)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of_point(0).len() == self.degree
    }
}

impl PermGroup for GeneratedGroup {
    fn degree(&self) -> usize {
        self.degree
    }

    fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    fn generators(&self) -> &[Perm] {
        &self.generators
    }

    fn class_counts(&self) -> &BTreeMap<CycleType, u64> {
        &self.class_counts
    }

    fn contains(&self, g: &Perm) -> bool {
        self.elements.contains(g)
    }

    fn coset_histogram(&self, x: &Perm) -> BTreeMap<CycleType, u64> {
        let elems: Vec<&Perm> = self.elements.iter().collect();
        let xi = x.images();
        let hist = par::fold_reduce(
            &elems,
            HashMap::new,
            |mut acc, h| {
                let mut y = [0u8; 32];
                for (j, &hj) in h.images().iter().enumerate() {
                    y[j] = xi[hj as usize];
                }
                *acc.entry(CycleKey::of_images(&y[..self.degree])).or_insert(0) += 1;
                acc
            },
            merge,
        );
        decode(hist)
    }

    fn describe(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("<{}> of order {}", gens.join(", "), self.order())
    }
}

/// One factor of a [`BlockProduct`]: Sym or Alt on a block of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFactor {
    pub points: Vec<usize>,
    pub alternating: bool,
}

impl BlockFactor {
    pub fn sym(points: impl IntoIterator<Item = usize>) -> Self {
        BlockFactor { points: points.into_iter().collect(), alternating: false }
    }

    pub fn alt(points: impl IntoIterator<Item = usize>) -> Self {
        BlockFactor { points: points.into_iter().collect(), alternating: true }
    }
}

/// A direct product of symmetric and alternating groups on disjoint blocks,
/// optionally intersected with Alt(n). Class counts are computed analytically
/// and coset sums stream the elements without storing them.
#[derive(Debug, Clone)]
pub struct BlockProduct {
    degree: usize,
    factors: Vec<BlockFactor>,
    even_only: bool,
    generators: Vec<Perm>,
    class_counts: BTreeMap<CycleType, u64>,
    order: u64,
}

impl BlockProduct {
    pub fn new(degree: usize, factors: Vec<BlockFactor>, even_only: bool, budget: u64) -> Result<Self, GroupError> {
        let mut used = vec![false; degree];
        for f in &factors {
            for &p in &f.points {
                if p >= degree || std::mem::replace(&mut used[p], true) {
                    return Err(GroupError::Parameter(format!("block point {} repeated or out of range", p + 1)));
                }
            }
        }
        let mut combos: BTreeMap<Vec<u32>, u64> = BTreeMap::from([(vec![1u32; degree - factors.iter().map(|f| f.points.len()).sum::<usize>()], 1)]);
        for f in factors.iter().filter(|f| !f.points.is_empty()) {
            let classes = conjugacy_classes(f.points.len())?;
            let mut next = BTreeMap::new();
            for (parts, count) in &combos {
                for (mu, size) in &classes {
                    if f.alternating && mu.sign() < 0 {
                        continue;
                    }
                    let size = size
                        .to_u64()
                        .ok_or_else(|| GroupError::Budget { what: "block factor order".into(), cap: u64::MAX })?;
                    let mut merged = parts.clone();
                    merged.extend_from_slice(mu.parts());
                    merged.sort_unstable_by(|a, b| b.cmp(a));
                    let c = count
                        .checked_mul(size)
                        .ok_or_else(|| GroupError::Budget { what: "block product order".into(), cap: u64::MAX })?;
                    *next.entry(merged).or_insert(0u64) += c;
                }
            }
            combos = next;
        }
        let class_counts: BTreeMap<CycleType, u64> = combos
            .into_iter()
            .map(|(parts, c)| (Partition::new(parts).expect("merged cycle type"), c))
            .filter(|(mu, _)| !even_only || mu.sign() > 0)
            .collect();
        let order: u64 = class_counts.values().sum();
        if order > budget {
            return Err(GroupError::Budget { what: format!("stabilizer order {order}"), cap: budget });
        }
        let generators = Self::make_generators(degree, &factors, even_only);
        Ok(BlockProduct { degree, factors, even_only, generators, class_counts, order })
    }

    fn make_generators(n: usize, factors: &[BlockFactor], even_only: bool) -> Vec<Perm> {
        let mut gens = Vec::new();
        let mut transpositions = Vec::new();
        for f in factors {
            let p = &f.points;
            if f.alternating || even_only {
                for j in 2..p.len() {
                    gens.push(Perm::cycle(n, &[p[0], p[1], p[j]]));
                }
            } else if p.len() >= 2 {
                gens.push(Perm::transposition(n, p[0], p[1]));
                if p.len() >= 3 {
                    gens.push(Perm::cycle(n, p));
                }
            }
            if !f.alternating && p.len() >= 2 {
                transpositions.push(Perm::transposition(n, p[0], p[1]));
            }
        }
        if even_only {
            for t in transpositions.iter().skip(1) {
                gens.push(transpositions[0].compose(t));
            }
        }
        gens
    }

    pub fn factors(&self) -> &[BlockFactor] {
        &self.factors
    }
}

struct Walker<'a> {
    blocks: &'a [Vec<u8>],
    alternating: &'a [bool],
    even_only: bool,
    x: &'a [u8],
    h: [u8; 32],
    arrs: Vec<Vec<u8>>,
    hist: HashMap<CycleKey, u64>,
}

impl Walker<'_> {
    fn swap(&mut self, f: usize, a: usize, b: usize) {
        self.arrs[f].swap(a, b);
        self.h[self.blocks[f][a] as usize] = self.arrs[f][a];
        self.h[self.blocks[f][b] as usize] = self.arrs[f][b];
    }

    fn go(&mut self, f: usize, pos: usize, fpar: bool, tpar: bool) {
        if f == self.blocks.len() {
            if self.even_only && tpar {
                return;
            }
            let n = self.x.len();
            let mut y = [0u8; 32];
            for j in 0..n {
                y[j] = self.x[self.h[j] as usize];
            }
            *self.hist.entry(CycleKey::of_images(&y[..n])).or_insert(0) += 1;
            return;
        }
        let m = self.blocks[f].len();
        if pos + 1 >= m {
            if self.alternating[f] && fpar {
                return;
            }
            self.go(f + 1, 0, false, tpar ^ fpar);
            return;
        }
        for i in pos..m {
            self.swap(f, pos, i);
            self.go(f, pos + 1, fpar ^ (i != pos), tpar);
            self.swap(f, pos, i);
        }
    }
}

impl PermGroup for BlockProduct {
    fn degree(&self) -> usize {
        self.degree
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn generators(&self) -> &[Perm] {
        &self.generators
    }

    fn class_counts(&self) -> &BTreeMap<CycleType, u64> {
        &self.class_counts
    }

    fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let mut owner = vec![usize::MAX; self.degree];
        for (i, f) in self.factors.iter().enumerate() {
            for &p in &f.points {
                owner[p] = i;
            }
        }
        if (0..self.degree).any(|p| owner[g.apply(p)] != owner[p] || (owner[p] == usize::MAX && g.apply(p) != p)) {
            return false;
        }
        for (i, f) in self.factors.iter().enumerate() {
            if !f.alternating {
                continue;
            }
            let odd = g.cycles().iter().filter(|c| owner[c[0]] == i && c.len() % 2 == 0).count() % 2 == 1;
            if odd {
                return false;
            }
        }
        !self.even_only || g.sign() > 0
    }

    fn coset_histogram(&self, x: &Perm) -> BTreeMap<CycleType, u64> {
        let mut order: Vec<usize> = (0..self.factors.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.factors[i].points.len()));
        let blocks: Vec<Vec<u8>> = order.iter().map(|&i| self.factors[i].points.iter().map(|&p| p as u8).collect()).collect();
        let alternating: Vec<bool> = order.iter().map(|&i| self.factors[i].alternating).collect();
        let m0 = blocks.first().map_or(0, |b| b.len());
        let depth = m0.saturating_sub(1).min(2);
        let mut tasks: Vec<Vec<usize>> = vec![vec![]];
        for pos in 0..depth {
            tasks = tasks
                .into_iter()
                .flat_map(|t| {
                    (pos..m0).map(move |c| {
                        let mut t = t.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        let mut identity = [0u8; 32];
        for (j, v) in identity.iter_mut().enumerate() {
            *v = j as u8;
        }
        let hist = par::fold_reduce(
            &tasks,
            HashMap::new,
            |acc, task| {
                let mut w = Walker {
                    blocks: &blocks,
                    alternating: &alternating,
                    even_only: self.even_only,
                    x: x.images(),
                    h: identity,
                    arrs: blocks.clone(),
                    hist: acc,
                };
                let mut parity = false;
                for (pos, &c) in task.iter().enumerate() {
                    w.swap(0, pos, c);
                    parity ^= c != pos;
                }
                w.go(0, task.len(), parity, false);
                w.hist
            },
            merge,
        );
        decode(hist)
    }

    fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .filter(|f| f.points.len() > 1)
            .map(|f| format!("{}({})", if f.alternating { "Alt" } else { "Sym" }, f.points.len()))
            .collect();
        if parts.is_empty() {
            parts.push("1".into());
        }
        let core = parts.join(" x ");
        if self.even_only {
            format!("({core}) ∩ Alt({}) of order {}", self.degree, self.order)
        } else {
            format!("{core} of order {}", self.order)
        }
    }
}
