use std::collections::BTreeMap;

use group_engine::par;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use scheme::OrbitalScheme;
use serde::Serialize;
use sym_core::{dim_specht, mn_character, CycleType, Partition};

use crate::{Q, Spectrum, SpectraError};

/// Cycle-type histograms of the cosets `x_i H`, one per orbital.
pub struct CharacterSums<'a> {
    scheme: &'a OrbitalScheme,
    histograms: Vec<BTreeMap<CycleType, u64>>,
}

impl<'a> CharacterSums<'a> {
    /// With `second_representative`, each histogram is recomputed from another
    /// coset representative of the same orbital and compared.
    pub fn new(scheme: &'a OrbitalScheme, second_representative: bool) -> Result<Self, SpectraError> {
        let a = scheme.action();
        let h = a.stabilizer();
        let s = scheme.structure();
        let hist: Vec<Result<BTreeMap<CycleType, u64>, SpectraError>> = par::map_range(scheme.rank(), |i| {
            let sub = &s.suborbits[i];
            let first = h.coset_histogram(a.transversal(sub[0]));
            if second_representative && sub.len() > 1 {
                let other = h.coset_histogram(a.transversal(sub[sub.len() - 1]));
                if other != first {
                    return Err(SpectraError::Consistency(format!("coset histograms of orbital {i} depend on the representative")));
                }
            }
            Ok(first)
        });
        let histograms = hist.into_iter().collect::<Result<_, _>>()?;
        Ok(CharacterSums { scheme, histograms })
    }

    pub fn scheme(&self) -> &OrbitalScheme {
        self.scheme
    }

    /// `(k_i / |H|) Σ_h χ^λ(x_i h)`.
    pub fn eigenvalue(&self, i: usize, lam: &Partition) -> Result<Q, SpectraError> {
        let n = self.scheme.action().degree();
        if lam.n() != n {
            return Err(SpectraError::Parameter(format!("{lam} is not a partition of {n}")));
        }
        if i >= self.scheme.rank() {
            return Err(SpectraError::Parameter(format!("orbital {i} out of range")));
        }
        let sum: BigInt = self.histograms[i]
            .iter()
            .map(|(mu, &c)| mn_character(lam, mu).expect("same degree") * c)
            .sum();
        let k = self.scheme.valency(i) as i64;
        let order = self.scheme.action().stabilizer().order();
        Ok(Q::new(sum * k, BigInt::from(order)))
    }

    /// Eigenvalue on the λ-module of the union of several orbital graphs.
    pub fn eigenvalue_of_union(&self, orbitals: &[usize], lam: &Partition) -> Result<Q, SpectraError> {
        let mut t = Q::zero();
        for &i in orbitals {
            t = Q(t.0 + self.eigenvalue(i, lam)?.0);
        }
        Ok(t)
    }
}

/// Rows indexed by Λ, columns by orbitals, entries `ξ_λ(X_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeEigenmatrix {
    pub partitions: Vec<Partition>,
    pub multiplicities: Vec<u64>,
    pub labels: Vec<String>,
    pub valencies: Vec<u64>,
    pub entries: Vec<Vec<Q>>,
}

impl SchemeEigenmatrix {
    pub fn build(sums: &CharacterSums<'_>) -> Result<Self, SpectraError> {
        let s = sums.scheme();
        let modules = s.modules();
        if modules.iter().any(|(_, m)| *m != 1) {
            return Err(SpectraError::Contract("the permutation character is not multiplicity-free".into()));
        }
        let partitions: Vec<Partition> = modules.iter().map(|(p, _)| p.clone()).collect();
        let r = s.rank();
        let cells = par::map_range(partitions.len() * r, |c| sums.eigenvalue(c % r, &partitions[c / r]));
        let mut entries = vec![Vec::with_capacity(r); partitions.len()];
        for (c, e) in cells.into_iter().enumerate() {
            entries[c / r].push(e?);
        }
        let m = SchemeEigenmatrix {
            multiplicities: partitions.iter().map(|p| dim_specht(p).to_u64().expect("dimension fits")).collect(),
            partitions,
            labels: (0..r).map(|i| s.label(i).to_string()).collect(),
            valencies: (0..r).map(|i| s.valency(i) as u64).collect(),
            entries,
        };
        m.check_invariants(s.len())?;
        Ok(m)
    }

    /// Trivial row equals the valencies, traces vanish and dimensions sum to `|Ω|`.
    pub fn check_invariants(&self, domain: usize) -> Result<(), SpectraError> {
        let total: u64 = self.multiplicities.iter().sum();
        if total != domain as u64 {
            return Err(SpectraError::Consistency(format!("dimensions sum to {total}, domain has {domain}")));
        }
        let n = self.partitions.first().map_or(0, Partition::n);
        let triv = self
            .partitions
            .iter()
            .position(|p| *p == Partition::one_row(n))
            .ok_or_else(|| SpectraError::Consistency("the trivial module is missing".into()))?;
        for (i, k) in self.valencies.iter().enumerate() {
            if self.entries[triv][i] != Q::int(*k as i64) {
                return Err(SpectraError::Consistency(format!("trivial row at {} is not the valency", self.labels[i])));
            }
            let trace: num_rational::BigRational =
                self.entries.iter().zip(&self.multiplicities).map(|(row, &d)| row[i].0.clone() * BigInt::from(d)).sum();
            let want = if i == 0 { domain as i64 } else { 0 };
            if trace != BigInt::from(want).into() {
                return Err(SpectraError::Consistency(format!("trace of {} is {trace}, not {want}", self.labels[i])));
            }
        }
        Ok(())
    }

    pub fn row_of(&self, lam: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lam)
    }

    /// Spectrum of the union of the given orbitals, multiplicities from dimensions.
    pub fn spectrum(&self, orbitals: &[usize]) -> Spectrum {
        let mut s = Spectrum::new();
        for (row, &d) in self.entries.iter().zip(&self.multiplicities) {
            let v = orbitals.iter().fold(Q::zero(), |acc, &i| Q(acc.0 + row[i].0.clone()));
            *s.entry(v).or_insert(0) += d;
        }
        s
    }

    /// Least eigenvalue of the union and the modules affording it.
    pub fn least(&self, orbitals: &[usize]) -> (Q, Vec<Partition>) {
        let values: Vec<Q> = self
            .entries
            .iter()
            .map(|row| orbitals.iter().fold(Q::zero(), |acc, &i| Q(acc.0 + row[i].0.clone())))
            .collect();
        let min = values.iter().min().cloned().unwrap_or_else(Q::zero);
        let afford = self.partitions.iter().zip(&values).filter(|(_, v)| **v == min).map(|(p, _)| p.clone()).collect();
        (min, afford)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("partition,dimension,{}\n", self.labels.join(","));
        for ((p, d), row) in self.partitions.iter().zip(&self.multiplicities).zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            out.push_str(&format!("\"{p}\",{d},{}\n", cells.join(",")));
        }
        out
    }
}
