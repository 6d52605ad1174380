use std::fmt;
use std::sync::Arc;

use group_engine::{generate_group, GroupError, ObjectModel, Perm, PermGroup, DEFAULT_GROUP_BUDGET};
use sym_core::Partition;

use crate::ModelError;

/// A matching stored as its partner map; a singleton is its own partner.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(pub Vec<u8>);

impl Matching {
    /// Blocks sorted by their smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.0.len())
            .filter(|&a| self.0[a] as usize >= a)
            .map(|a| {
                let b = self.0[a] as usize;
                if a == b {
                    vec![a]
                } else {
                    vec![a, b]
                }
            })
            .collect()
    }

    pub fn singleton(&self) -> Option<usize> {
        (0..self.0.len()).find(|&a| self.0[a] as usize == a)
    }

    pub fn partner(&self, a: usize) -> usize {
        self.0[a] as usize
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            let e: Vec<String> = b.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "{{{}}}", e.join(","))?;
        }
        Ok(())
    }
}

/// Perfect matchings of `[2k]`, or with `quasi` the matchings of `[2k+1]`
/// with one singleton. Stabilizer Sym(2) wr Sym(k) (fixing the extra point).
#[derive(Debug, Clone)]
pub struct Matchings {
    pub k: usize,
    pub quasi: bool,
}

impl Matchings {
    pub fn perfect(k: usize) -> Result<Self, ModelError> {
        if !(2..=12).contains(&k) {
            return Err(ModelError::Exclusion(format!("pm needs 2 <= k <= 12, got k = {k}")));
        }
        Ok(Matchings { k, quasi: false })
    }

    pub fn quasi_perfect(k: usize) -> Result<Self, ModelError> {
        if !(1..=12).contains(&k) {
            return Err(ModelError::Exclusion(format!("qpm needs 1 <= k <= 12, got k = {k}")));
        }
        Ok(Matchings { k, quasi: true })
    }

    /// Perfect matchings containing the last pair, or quasi-perfect matchings
    /// whose singleton is the last point.
    pub fn in_canonical_coclique(&self, x: &Matching) -> bool {
        let n = self.degree();
        if self.quasi {
            x.partner(n - 1) == n - 1
        } else {
            x.partner(n - 2) == n - 1
        }
    }

    /// Multiset of component sizes of the union of two matchings: cycles count
    /// their vertices (a shared pair is a 2-cycle), the path between the two
    /// singletons counts its vertices, and a shared singleton counts 1.
    pub fn union_type(&self, x: &Matching, y: &Matching) -> Partition {
        let n = x.0.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        if let Some(start) = x.singleton() {
            let (mut cur, mut count, mut use_y) = (start, 1u32, true);
            seen[cur] = true;
            loop {
                let next = if use_y { y.partner(cur) } else { x.partner(cur) };
                if next == cur {
                    break;
                }
                cur = next;
                seen[cur] = true;
                count += 1;
                use_y = !use_y;
            }
            parts.push(count);
        }
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let (mut cur, mut count, mut use_x) = (v, 0u32, true);
            loop {
                seen[cur] = true;
                count += 1;
                cur = if use_x { x.partner(cur) } else { y.partner(cur) };
                use_x = !use_x;
                if cur == v && use_x {
                    break;
                }
            }
            parts.push(count);
        }
        Partition::from_unsorted(parts).expect("component sizes are positive")
    }

    /// All matchings of the family, in lexicographic order of partner maps.
    pub fn enumerate(&self) -> Vec<Matching> {
        let n = self.degree();
        let mut out = Vec::new();
        let mut partner = vec![u8::MAX; n];
        fn rec(partner: &mut Vec<u8>, singles_left: usize, out: &mut Vec<Matching>) {
            let Some(a) = partner.iter().position(|&p| p == u8::MAX) else {
                out.push(Matching(partner.clone()));
                return;
            };
            if singles_left > 0 {
                partner[a] = a as u8;
                rec(partner, singles_left - 1, out);
                partner[a] = u8::MAX;
            }
            for b in a + 1..partner.len() {
                if partner[b] == u8::MAX {
                    partner[a] = b as u8;
                    partner[b] = a as u8;
                    rec(partner, singles_left, out);
                    partner[a] = u8::MAX;
                    partner[b] = u8::MAX;
                }
            }
        }
        rec(&mut partner, usize::from(self.quasi), &mut out);
        out.sort();
        out
    }
}

/// The map from quasi-perfect matchings of `[2k+1]` to perfect matchings of
/// `[2k+2]` that pairs the singleton with the new point.
pub fn phi(x: &Matching) -> Matching {
    let n = x.0.len();
    let mut p = x.0.clone();
    p.push(u8::MAX);
    if let Some(s) = x.singleton() {
        p[s] = n as u8;
        p[n] = s as u8;
    }
    Matching(p)
}

impl ObjectModel for Matchings {
    type Point = Matching;

    fn name(&self) -> String {
        format!("{}(k={})", if self.quasi { "qpm" } else { "pm" }, self.k)
    }

    fn degree(&self) -> usize {
        2 * self.k + usize::from(self.quasi)
    }

    fn base_point(&self) -> Matching {
        let mut p: Vec<u8> = (0..2 * self.k as u8).map(|a| a ^ 1).collect();
        if self.quasi {
            p.push(2 * self.k as u8);
        }
        Matching(p)
    }

    fn act(&self, g: &Perm, x: &Matching) -> Matching {
        let mut p = vec![0u8; x.0.len()];
        for (a, &b) in x.0.iter().enumerate() {
            p[g.apply(a)] = g.apply(b as usize) as u8;
        }
        Matching(p)
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let (k, n) = (self.k, self.degree());
        let mut gens = vec![Perm::transposition(n, 0, 1)];
        if k >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 2], vec![1, 3]])?);
        }
        if k >= 3 {
            let evens: Vec<usize> = (0..k).map(|i| 2 * i).collect();
            let odds: Vec<usize> = (0..k).map(|i| 2 * i + 1).collect();
            gens.push(Perm::from_cycles(n, &[evens, odds])?);
        }
        Ok(Arc::new(generate_group(n, gens, DEFAULT_GROUP_BUDGET)?))
    }

    fn classify(&self, x: &Matching, y: &Matching) -> Option<String> {
        Some(format!("O{}", self.union_type(x, y)))
    }

    fn describe(&self, x: &Matching) -> String {
        x.to_string()
    }
}
