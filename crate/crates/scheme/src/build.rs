use std::sync::Arc;

use group_engine::{decompose_via_fix, is_multiplicity_free, orbitals, par, Action, OrbitalStructure};
use models::Family;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sym_core::Partition;

use crate::{ModuleRecord, OrbitalRecord, Scheme, SchemeError, SCHEME_FORMAT_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verify {
    /// Constancy of intersection numbers on 3 random pairs per orbital.
    Fast,
    /// Constancy on a pair through every point and exhaustive transpose closure.
    Full,
}

#[derive(Debug, Clone)]
pub struct BuildOptions {
    pub max_domain: usize,
    /// Intersection numbers are tabulated only up to this domain size and rank.
    pub intersection_domain: usize,
    pub intersection_rank: usize,
    pub verify: Verify,
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_domain: 200_000, intersection_domain: 20_000, intersection_rank: 20, verify: Verify::Fast, seed: 1 }
    }
}

/// Outcome of the commutativity test with both certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Commutativity {
    pub commutative: bool,
    pub multiplicity_free: bool,
    /// A triple with `p[i][j][l] != p[j][i][l]`, if any.
    pub witness: Option<(usize, usize, usize)>,
}

/// An orbital scheme bound to its explicit action.
pub struct OrbitalScheme {
    action: Arc<dyn Action>,
    structure: OrbitalStructure,
    modules: Vec<(Partition, u64)>,
    id: String,
}

impl OrbitalScheme {
    pub fn build(action: Arc<dyn Action>, max_domain: usize) -> Result<Self, SchemeError> {
        if action.len() > max_domain {
            return Err(SchemeError::Budget { what: format!("domain of {}", action.name()), cap: max_domain as u64 });
        }
        let structure = orbitals(action.as_ref())?;
        let modules = decompose_via_fix(&structure.fix)?;
        let id = action.name();
        let s = OrbitalScheme { action, structure, modules, id };
        s.check_basic_axioms()?;
        Ok(s)
    }

    pub fn from_family(family: &Family, max_domain: usize) -> Result<Self, SchemeError> {
        let built = family.build(max_domain)?;
        let mut s = Self::build(built.action, max_domain)?;
        s.id = family.to_string();
        Ok(s)
    }

    pub fn set_id(&mut self, id: String) {
        self.id = id;
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn action(&self) -> &Arc<dyn Action> {
        &self.action
    }

    pub fn structure(&self) -> &OrbitalStructure {
        &self.structure
    }

    pub fn rank(&self) -> usize {
        self.structure.rank()
    }

    pub fn len(&self) -> usize {
        self.action.len()
    }

    pub fn is_empty(&self) -> bool {
        self.action.is_empty()
    }

    /// Λ with multiplicities, from the permutation character.
    pub fn modules(&self) -> &[(Partition, u64)] {
        &self.modules
    }

    pub fn valency(&self, i: usize) -> usize {
        self.structure.orbitals[i].valency
    }

    pub fn label(&self, i: usize) -> &str {
        &self.structure.orbitals[i].label
    }

    pub fn orbital_by_label(&self, label: &str) -> Option<usize> {
        self.structure.orbitals.iter().position(|o| o.label == label)
    }

    pub fn orbital_of(&self, x: usize, y: usize) -> usize {
        self.structure.orbital_of(self.action.as_ref(), x, y)
    }

    pub fn neighbours(&self, x: usize, i: usize) -> Vec<usize> {
        self.structure.neighbours(self.action.as_ref(), x, i)
    }

    /// Sorted adjacency lists of the union of the given orbital digraphs.
    pub fn graph(&self, orbitals: &[usize]) -> Vec<Vec<usize>> {
        par::map_range(self.len(), |x| {
            let mut v: Vec<usize> = orbitals.iter().flat_map(|&i| self.neighbours(x, i)).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
    }

    fn check_basic_axioms(&self) -> Result<(), SchemeError> {
        let o = &self.structure.orbitals;
        if o[0].valency != 1 || o[0].representative != (0, 0) {
            return Err(SchemeError::Axiom { axiom: "(i)", witness: format!("orbital 0 is {:?}", o[0]) });
        }
        if let Some(d) = o.iter().skip(1).find(|d| d.representative.1 == d.representative.0) {
            return Err(SchemeError::Axiom { axiom: "(i)", witness: format!("orbital {} contains a diagonal pair", d.index) });
        }
        let total: usize = o.iter().map(|d| d.valency).sum();
        if total != self.len() {
            return Err(SchemeError::Axiom { axiom: "(ii)", witness: format!("valencies sum to {total}, not {}", self.len()) });
        }
        for d in o {
            if o[d.paired].paired != d.index || o[d.paired].valency != d.valency {
                return Err(SchemeError::Axiom {
                    axiom: "(iii)",
                    witness: format!("orbital {} pairs with {} which pairs back with {}", d.index, d.paired, o[d.paired].paired),
                });
            }
        }
        Ok(())
    }

    /// `p_{ij}^l` at the stored representative of orbital `l`.
    pub fn intersection_number(&self, i: usize, j: usize, l: usize) -> u64 {
        let (x, y) = self.structure.orbitals[l].representative;
        self.count_at(x, y)[i * self.rank() + j]
    }

    /// All `p_{ij}^l` through `(x, y)`, flattened by `i * rank + j`.
    fn count_at(&self, x: usize, y: usize) -> Vec<u64> {
        let r = self.rank();
        let mut c = vec![0u64; r * r];
        for z in 0..self.len() {
            c[self.orbital_of(x, z) * r + self.orbital_of(z, y)] += 1;
        }
        c
    }

    /// Full table `p[i][j][l]` with constancy checked on further pairs of each orbital.
    pub fn intersection_numbers(&self, opts: &BuildOptions) -> Result<Vec<Vec<Vec<u64>>>, SchemeError> {
        let (n, r) = (self.len(), self.rank());
        if n > opts.intersection_domain || r > opts.intersection_rank {
            return Err(SchemeError::Budget {
                what: format!("intersection numbers for domain {n} and rank {r}"),
                cap: opts.intersection_domain as u64,
            });
        }
        let per_l: Vec<Result<Vec<u64>, SchemeError>> = par::map_range(r, |l| {
            let (x0, y0) = self.structure.orbitals[l].representative;
            let reference = self.count_at(x0, y0);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (l as u64).wrapping_mul(0x9e37_79b9));
            let pairs: Vec<(usize, usize)> = match opts.verify {
                Verify::Fast => (0..3)
                    .map(|_| {
                        let x = rng.gen_range(0..n);
                        let nb = self.neighbours(x, l);
                        (x, nb[rng.gen_range(0..nb.len())])
                    })
                    .collect(),
                Verify::Full => (0..n)
                    .map(|x| {
                        let nb = self.neighbours(x, l);
                        (x, nb[rng.gen_range(0..nb.len())])
                    })
                    .collect(),
            };
            for (x, y) in pairs {
                if self.orbital_of(x, y) != l {
                    return Err(SchemeError::Consistency(format!("neighbour {y} of {x} in orbital {l} classified elsewhere")));
                }
                if self.count_at(x, y) != reference {
                    return Err(SchemeError::Axiom {
                        axiom: "(iv)",
                        witness: format!("intersection numbers differ at ({x}, {y}) and ({x0}, {y0}) in orbital {l}"),
                    });
                }
            }
            Ok(reference)
        });
        let per_l: Vec<Vec<u64>> = per_l.into_iter().collect::<Result<_, _>>()?;
        let p: Vec<Vec<Vec<u64>>> = (0..r).map(|i| (0..r).map(|j| (0..r).map(|l| per_l[l][i * r + j]).collect()).collect()).collect();
        let k: Vec<u64> = (0..r).map(|i| self.valency(i) as u64).collect();
        for i in 0..r {
            for j in 0..r {
                let s: u64 = (0..r).map(|l| p[i][j][l] * k[l]).sum();
                if s != k[i] * k[j] {
                    return Err(SchemeError::Axiom { axiom: "(iv)", witness: format!("counting identity fails at ({i}, {j})") });
                }
            }
        }
        Ok(p)
    }

    /// Checks that the transpose of every pair lies in the paired orbital:
    /// exhaustively under [`Verify::Full`], on pairs through the base otherwise.
    pub fn check_transpose_closure(&self, verify: Verify) -> Result<(), SchemeError> {
        let n = self.len();
        let rows = if verify == Verify::Full { n } else { 1 };
        let bad = par::map_range(rows, |x| {
            (0..n).find_map(|y| {
                let i = self.orbital_of(x, y);
                let back = self.orbital_of(y, x);
                (back != self.structure.orbitals[i].paired).then_some((x, y, i, back))
            })
        });
        match bad.into_iter().flatten().next() {
            Some((x, y, i, back)) => Err(SchemeError::Axiom {
                axiom: "(iii)",
                witness: format!("({x}, {y}) in orbital {i} but its transpose is in orbital {back}"),
            }),
            None => Ok(()),
        }
    }

    /// Compares `p_{ij}^l = p_{ji}^l` with multiplicity-freeness of the permutation character.
    pub fn check_commutative(&self, p: &[Vec<Vec<u64>>]) -> Result<Commutativity, SchemeError> {
        let r = self.rank();
        let witness = (0..r)
            .flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |l| (i, j, l))))
            .find(|&(i, j, l)| p[i][j][l] != p[j][i][l]);
        let mf = is_multiplicity_free(&self.modules);
        let c = Commutativity { commutative: witness.is_none(), multiplicity_free: mf, witness };
        if c.commutative != mf {
            return Err(SchemeError::Consistency(format!(
                "intersection numbers say commutative = {}, the permutation character says multiplicity-free = {mf}",
                c.commutative
            )));
        }
        Ok(c)
    }

    /// Serializable document; intersection numbers are included when within budget.
    pub fn document(&self, opts: &BuildOptions) -> Result<Scheme, SchemeError> {
        let within = self.len() <= opts.intersection_domain && self.rank() <= opts.intersection_rank;
        let (p, commutative) = if within {
            let p = self.intersection_numbers(opts)?;
            let c = self.check_commutative(&p)?;
            (Some(p), Some(c.commutative))
        } else {
            (None, None)
        };
        self.check_transpose_closure(opts.verify)?;
        let doc = Scheme {
            format_version: SCHEME_FORMAT_VERSION,
            id: self.id.clone(),
            degree: self.action.degree(),
            domain_size: self.len(),
            stabilizer_order: self.action.stabilizer().order(),
            rank: self.rank(),
            orbitals: self
                .structure
                .orbitals
                .iter()
                .map(|o| OrbitalRecord {
                    index: o.index,
                    label: o.label.clone(),
                    valency: o.valency,
                    self_paired: o.self_paired(),
                    paired: o.paired,
                    representative: o.representative,
                })
                .collect(),
            modules: self.modules.iter().map(|(p, m)| ModuleRecord { partition: p.clone(), multiplicity: *m }).collect(),
            multiplicity_free: is_multiplicity_free(&self.modules),
            commutative,
            intersection_numbers: p,
        };
        doc.check_invariants()?;
        Ok(doc)
    }
}
