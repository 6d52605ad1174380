use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use sym_core::{conjugacy_classes, factorial, mn_character, partitions_of, CycleType, Partition};

use crate::action::Action;
use crate::group::PermGroup;
use crate::par;
use crate::perm::Perm;
use crate::GroupError;

/// Multiplicities of the irreducible constituents, in reverse-lex order of λ.
pub type Decomposition = Vec<(Partition, u64)>;

/// Number of domain points fixed by each conjugacy class of Sym(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixTable {
    pub degree: usize,
    pub fix: BTreeMap<CycleType, u64>,
}

pub fn fix_table(action: &dyn Action) -> Result<FixTable, GroupError> {
    let n = action.degree();
    let classes = conjugacy_classes(n)?;
    let reversal = Perm::from_images((0..n as u8).rev().collect())?;
    let counted = par::map(&classes, |(mu, _)| {
        let count = |g: &Perm| (0..action.len()).filter(|&x| action.act(g, x) == x).count() as u64;
        let rep = Perm::class_representative(mu);
        let other = reversal.compose(&rep).compose(&reversal);
        let a = count(&rep);
        if other != rep && count(&other) != a {
            return Err(GroupError::Consistency(format!("fix count differs between two elements of class {mu}")));
        }
        Ok((mu.clone(), a))
    });
    let fix: BTreeMap<CycleType, u64> = counted.into_iter().collect::<Result<_, _>>()?;
    if fix[&Partition::one_column(n)] != action.len() as u64 {
        return Err(GroupError::Consistency("identity does not fix every point".into()));
    }
    let orbits: BigInt = classes.iter().map(|(mu, size)| size * fix[mu]).sum::<BigInt>() / factorial(n);
    if orbits != BigInt::from(1) {
        return Err(GroupError::Contract(format!("{} is not transitive ({orbits} orbits)", action.name())));
    }
    Ok(FixTable { degree: n, fix })
}

/// Number of orbitals, `(1/n!) Σ_g fix(g)^2`.
pub fn rank(table: &FixTable) -> Result<u64, GroupError> {
    let n = table.degree;
    let total: BigInt = conjugacy_classes(n)?
        .iter()
        .map(|(mu, size)| size * table.fix[mu] * table.fix[mu])
        .sum();
    let nf = factorial(n);
    if !(&total % &nf).is_zero() {
        return Err(GroupError::Consistency("rank is not an integer".into()));
    }
    (total / nf).to_u64().ok_or_else(|| GroupError::Consistency("rank overflow".into()))
}

fn finish_decomposition(raw: Vec<(Partition, BigInt, BigInt)>) -> Result<Decomposition, GroupError> {
    let mut out = Vec::new();
    for (lam, num, den) in raw {
        if !(&num % &den).is_zero() || num < BigInt::zero() {
            return Err(GroupError::Consistency(format!("multiplicity of {lam} is {num}/{den}")));
        }
        let m = (num / den).to_u64().expect("small multiplicity");
        if m > 0 {
            out.push((lam, m));
        }
    }
    Ok(out)
}

/// `1_H^G` decomposed by Frobenius reciprocity: `m_λ = (1/|H|) Σ_h χ^λ(h)`.
pub fn decompose_permchar(h: &dyn PermGroup) -> Result<Decomposition, GroupError> {
    let lams = partitions_of(h.degree())?;
    let counts = h.class_counts();
    let raw = par::map(&lams, |lam| {
        let num: BigInt = counts
            .iter()
            .map(|(mu, &c)| mn_character(lam, mu).expect("same degree") * c)
            .sum();
        (lam.clone(), num, BigInt::from(h.order()))
    });
    finish_decomposition(raw)
}

/// The same decomposition through `<fix, χ^λ>` over Sym(n).
pub fn decompose_via_fix(table: &FixTable) -> Result<Decomposition, GroupError> {
    let n = table.degree;
    let classes = conjugacy_classes(n)?;
    let lams = partitions_of(n)?;
    let nf = factorial(n);
    let raw = par::map(&lams, |lam| {
        let num: BigInt = classes
            .iter()
            .map(|(mu, size)| mn_character(lam, mu).expect("same degree") * size * table.fix[mu])
            .sum();
        (lam.clone(), num, nf.clone())
    });
    finish_decomposition(raw)
}

pub fn is_multiplicity_free(d: &Decomposition) -> bool {
    d.iter().all(|(_, m)| *m <= 1)
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.components -= 1;
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        by_root.into_values().collect()
    }
}

/// Orbits of `<gens>` on the domain, each sorted, ordered by smallest point.
pub fn suborbits_under(action: &dyn Action, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(action.len());
    for g in gens {
        let images = par::map_range(action.len(), |x| action.act(g, x));
        for (x, y) in images.into_iter().enumerate() {
            uf.union(x, y);
        }
    }
    uf.classes()
}

/// Schreier generators `t_{s x}^{-1} s t_x` of the base stabilizer, added until
/// the stabilizer has `target` orbits (or the supply is exhausted).
pub fn schreier_generators(action: &dyn Action, target: usize) -> Vec<Perm> {
    let n = action.degree();
    let mut uf = UnionFind::new(action.len());
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let gens = [Perm::transposition(n, 0, 1), Perm::cycle(n, &(0..n).collect::<Vec<_>>())];
    let mut seen = HashSet::new();
    for x in 0..action.len() {
        for s in &gens {
            if uf.components <= target {
                return out;
            }
            let sx = action.act(s, x);
            let g = action.transversal_inv(sx).compose(s).compose(action.transversal(x));
            if g.is_identity() || !seen.insert(g.clone()) {
                continue;
            }
            let before = uf.components;
            for y in 0..action.len() {
                uf.union(y, action.act(&g, y));
            }
            if uf.components < before {
                out.push(g);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbital {
    pub index: usize,
    pub label: String,
    pub valency: usize,
    /// `(base, y)` with `y` the smallest point of the suborbit.
    pub representative: (usize, usize),
    /// Index of the transposed orbital.
    pub paired: usize,
}

impl Orbital {
    pub fn self_paired(&self) -> bool {
        self.paired == self.index
    }
}

/// Suborbits of the base stabilizer and the orbitals they determine.
#[derive(Debug, Clone)]
pub struct OrbitalStructure {
    pub suborbit_of: Vec<usize>,
    pub suborbits: Vec<Vec<usize>>,
    pub orbitals: Vec<Orbital>,
    pub fix: FixTable,
}

impl OrbitalStructure {
    pub fn rank(&self) -> usize {
        self.orbitals.len()
    }

    /// The orbital containing the pair `(x, y)`.
    pub fn orbital_of(&self, action: &dyn Action, x: usize, y: usize) -> usize {
        self.suborbit_of[action.act(action.transversal_inv(x), y)]
    }

    /// Out-neighbours of `x` in orbital `i`, sorted.
    pub fn neighbours(&self, action: &dyn Action, x: usize, i: usize) -> Vec<usize> {
        let t = action.transversal(x);
        let mut v: Vec<usize> = self.suborbits[i].iter().map(|&y| action.act(t, y)).collect();
        v.sort_unstable();
        v
    }
}

/// Orbitals of a transitive action from the analytic stabilizer generators,
/// ordered by (valency, smallest suborbit point) and checked against the rank.
pub fn orbitals(action: &dyn Action) -> Result<OrbitalStructure, GroupError> {
    let n = action.degree();
    let h = action.stabilizer();
    for g in h.generators() {
        if action.act(g, 0) != 0 {
            return Err(GroupError::Contract(format!("stabilizer generator {g} moves the base point")));
        }
    }
    if BigInt::from(h.order()) * action.len() != factorial(n) {
        return Err(GroupError::Contract(format!(
            "|H| = {} times |Ω| = {} is not {n}!",
            h.order(),
            action.len()
        )));
    }
    let fix = fix_table(action)?;
    let r = rank(&fix)? as usize;
    let mut suborbits = suborbits_under(action, h.generators());
    if suborbits.len() != r {
        return Err(GroupError::Consistency(format!(
            "{} suborbits found but the rank is {r}",
            suborbits.len()
        )));
    }
    suborbits.sort_by_key(|s| (s.len(), s[0]));
    let mut suborbit_of = vec![0; action.len()];
    for (i, s) in suborbits.iter().enumerate() {
        for &x in s {
            suborbit_of[x] = i;
        }
    }
    let mut orbitals = Vec::with_capacity(r);
    let mut labels = HashSet::new();
    for (i, s) in suborbits.iter().enumerate() {
        let y = s[0];
        let paired = suborbit_of[action.act(action.transversal_inv(y), 0)];
        let label = match action.classify(0, y) {
            Some(l) => {
                if !labels.insert(l.clone()) {
                    return Err(GroupError::Consistency(format!("label {l} names two orbitals")));
                }
                l
            }
            None => format!("O{i}"),
        };
        orbitals.push(Orbital { index: i, label, valency: s.len(), representative: (0, y), paired });
    }
    Ok(OrbitalStructure { suborbit_of, suborbits, orbitals, fix })
}
