use serde::{Deserialize, Serialize};
use sym_core::Partition;

use crate::SchemeError;

pub const SCHEME_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitalRecord {
    pub index: usize,
    pub label: String,
    pub valency: usize,
    pub self_paired: bool,
    pub paired: usize,
    pub representative: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRecord {
    pub partition: Partition,
    pub multiplicity: u64,
}

/// Serializable summary of an orbital scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scheme {
    pub format_version: u32,
    pub id: String,
    pub degree: usize,
    pub domain_size: usize,
    pub stabilizer_order: u64,
    pub rank: usize,
    pub orbitals: Vec<OrbitalRecord>,
    pub modules: Vec<ModuleRecord>,
    pub multiplicity_free: bool,
    pub commutative: Option<bool>,
    /// `p[i][j][l]`, when computed.
    pub intersection_numbers: Option<Vec<Vec<Vec<u64>>>>,
}

impl Scheme {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scheme documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Scheme, SchemeError> {
        let doc: Scheme = serde_json::from_str(s).map_err(|e| SchemeError::Document(e.to_string()))?;
        if doc.format_version != SCHEME_FORMAT_VERSION {
            return Err(SchemeError::Document(format!(
                "format version {} is not {SCHEME_FORMAT_VERSION}",
                doc.format_version
            )));
        }
        doc.check_invariants()?;
        Ok(doc)
    }

    /// Checks the diagonal, the valency sum and the counting identity.
    pub fn check_invariants(&self) -> Result<(), SchemeError> {
        let r = self.orbitals.len();
        if r != self.rank {
            return Err(SchemeError::Document(format!("rank {} but {r} orbitals", self.rank)));
        }
        match self.orbitals.first() {
            Some(o) if o.valency == 1 && o.representative.0 == o.representative.1 => {}
            _ => return Err(SchemeError::Axiom { axiom: "(i)", witness: "orbital 0 is not the diagonal".into() }),
        }
        let total: usize = self.orbitals.iter().map(|o| o.valency).sum();
        if total != self.domain_size {
            return Err(SchemeError::Axiom {
                axiom: "(ii)",
                witness: format!("valencies sum to {total}, domain has {}", self.domain_size),
            });
        }
        if let Some(p) = &self.intersection_numbers {
            let k: Vec<u64> = self.orbitals.iter().map(|o| o.valency as u64).collect();
            for i in 0..r {
                for j in 0..r {
                    let s: u64 = (0..r).map(|l| p[i][j][l] * k[l]).sum();
                    if s != k[i] * k[j] {
                        return Err(SchemeError::Axiom {
                            axiom: "(iv)",
                            witness: format!("sum_l p[{i}][{j}][l] k_l = {s} but k_i k_j = {}", k[i] * k[j]),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> Vec<String> {
        self.orbitals.iter().map(|o| o.label.clone()).collect()
    }

    pub fn orbital_by_label(&self, label: &str) -> Option<usize> {
        self.orbitals.iter().position(|o| o.label == label)
    }
}
