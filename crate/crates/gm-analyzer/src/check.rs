use group_engine::{par, Perm};
use models::Family;
use num_traits::ToPrimitive;
use scheme::OrbitalScheme;
use serde::Serialize;
use spectra::{
    dense_spectrum, lift_and_check, orbital_graph, ratio_bound, verify_equitable, CharacterSums, DenseOptions, Graph, Q,
    SchemeEigenmatrix,
};
use sym_core::Partition;

use crate::{dominance_maximal, young_orbits, GmError};

pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct GmOptions {
    pub max_domain: usize,
    /// Compare every orbital spectrum with the dense oracle up to this size.
    pub dense_limit: usize,
    pub dense: DenseOptions,
    /// Recompute each coset histogram from a second representative.
    pub second_representative: bool,
}

impl Default for GmOptions {
    fn default() -> Self {
        GmOptions { max_domain: 20_000, dense_limit: 0, dense: DenseOptions::default(), second_representative: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitalVerdict {
    pub index: usize,
    pub label: String,
    pub valency: u64,
    /// Neighbours inside S of a vertex of S.
    pub a: u64,
    pub coclique: bool,
    /// An edge with both ends in S, by point labels.
    pub edge_inside: Option<(String, String)>,
    pub xi_lambda: Q,
    pub quotient_eigenvalue: Q,
    pub least_eigenvalue: Q,
    pub least_afforded_by: Vec<Partition>,
    /// Whether ξ_λ is the least eigenvalue; only for coclique orbitals.
    pub part_b: Option<bool>,
    pub ratio_bound: Option<Q>,
    /// Whether |S| equals the floored ratio bound.
    pub ratio_tight: Option<bool>,
    pub lift_residual: Option<Q>,
    /// Whether the dense oracle reproduced the spectrum, when run.
    pub dense_agrees: Option<bool>,
}

/// The analysis of one candidate λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaAnalysis {
    pub lambda: Partition,
    pub orbit_sizes: Option<(usize, usize)>,
    /// Set when the Young subgroup does not have exactly two orbits.
    pub failure: Option<String>,
    pub orbitals: Vec<OrbitalVerdict>,
    pub part_a: Option<bool>,
    pub part_b_some: Option<bool>,
    pub part_b_every: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GMReport {
    pub format_version: u32,
    pub scheme: String,
    pub degree: usize,
    pub domain_size: usize,
    pub rank: usize,
    pub lambda_set: Vec<Partition>,
    pub dominance_maximal: Vec<Partition>,
    /// The unique second largest partition, if it exists.
    pub chosen: Option<Partition>,
    pub ambiguity: Option<String>,
    /// Whether S coincides with the family's canonical coclique, when one is known.
    pub canonical_matches: Option<bool>,
    pub analyses: Vec<LambdaAnalysis>,
    pub part_a: Option<bool>,
    pub part_a_witnesses: Vec<String>,
    /// Part (b) holds for at least one coclique orbital.
    pub part_b_some: Option<bool>,
    /// Part (b) holds for every coclique orbital.
    pub part_b_every: Option<bool>,
}

impl GMReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn chosen_analysis(&self) -> Option<&LambdaAnalysis> {
        let c = self.chosen.as_ref()?;
        self.analyses.iter().find(|a| &a.lambda == c)
    }

    pub fn orbital(&self, label: &str) -> Option<&OrbitalVerdict> {
        self.chosen_analysis()?.orbitals.iter().find(|o| o.label == label)
    }
}

/// Everything the analysis needs about one scheme, computed once.
pub struct Prepared<'a> {
    pub scheme: &'a OrbitalScheme,
    pub eigenmatrix: SchemeEigenmatrix,
    /// Orbital graphs; entry 0 is an empty placeholder for the diagonal.
    pub graphs: Vec<Graph>,
}

impl<'a> Prepared<'a> {
    pub fn new(scheme: &'a OrbitalScheme, opts: &GmOptions) -> Result<Self, GmError> {
        if scheme.modules().iter().any(|(_, m)| *m > 1) {
            return Err(GmError::Contract("the permutation character is not multiplicity-free".into()));
        }
        let sums = CharacterSums::new(scheme, opts.second_representative)?;
        let eigenmatrix = SchemeEigenmatrix::build(&sums)?;
        let graphs = par::map_range(scheme.rank(), |i| if i == 0 { Ok(Graph::empty(scheme.len())) } else { orbital_graph(scheme, i) }).into_iter().collect::<Result<_, _>>()?;
        Ok(Prepared { scheme, eigenmatrix, graphs })
    }

    /// Part-(a) data for S alone: `a_i` per nontrivial orbital.
    pub fn coclique_orbitals(&self, s: &[usize]) -> Result<Vec<(usize, u64)>, GmError> {
        (1..self.scheme.rank()).map(|i| Ok((i, verify_equitable(&self.graphs[i], s)?.a))).collect()
    }

    pub fn analyse(&self, lam: &Partition, conj: Option<&Perm>, opts: &GmOptions) -> Result<LambdaAnalysis, GmError> {
        let (s, rest) = young_orbits(self.scheme.action().as_ref(), lam, conj)?;
        let row = self
            .eigenmatrix
            .row_of(lam)
            .ok_or_else(|| GmError::Contract(format!("{lam} is not in Λ")))?;
        let n = self.scheme.len() as u64;
        let action = self.scheme.action();
        let verdicts = par::map_range(self.scheme.rank() - 1, |j| -> Result<OrbitalVerdict, GmError> {
            let i = j + 1;
            let g = &self.graphs[i];
            let q = verify_equitable(g, &s)?;
            let xi = self.eigenmatrix.entries[row][i].clone();
            let quotient = q.eigenvalues().1;
            if xi != quotient {
                return Err(GmError::Consistency(format!(
                    "orbital {}: character route gives {xi}, quotient gives {quotient}",
                    self.scheme.label(i)
                )));
            }
            let (tau, afford) = self.eigenmatrix.least(&[i]);
            let coclique = q.a == 0;
            let edge_inside = g.edge_inside(&s).map(|(x, y)| (action.point_label(x), action.point_label(y)));
            let (mut part_b, mut bound, mut tight, mut residual) = (None, None, None, None);
            if coclique {
                part_b = Some(xi == tau);
                let rb = ratio_bound(q.k, &tau, n)?;
                let floor = rb.0.floor().to_integer().to_u64();
                let is_tight = floor == Some(s.len() as u64);
                residual = Some(lift_and_check(g, &s, &xi)?.residual);
                if is_tight {
                    lift_and_check(g, &s, &tau)?;
                }
                bound = Some(rb);
                tight = Some(is_tight);
            }
            let dense_agrees = if g.len() <= opts.dense_limit {
                let exact = self.eigenmatrix.spectrum(&[i]);
                let cand: Vec<Q> = exact.keys().cloned().collect();
                let d = dense_spectrum(g, &cand, &opts.dense)?;
                Some(d.spectrum == exact && d.unmatched.is_empty())
            } else {
                None
            };
            if dense_agrees == Some(false) {
                return Err(GmError::Consistency(format!("dense oracle disagrees on orbital {}", self.scheme.label(i))));
            }
            Ok(OrbitalVerdict {
                index: i,
                label: self.scheme.label(i).to_string(),
                valency: q.k,
                a: q.a,
                coclique,
                edge_inside,
                xi_lambda: xi,
                quotient_eigenvalue: quotient,
                least_eigenvalue: tau,
                least_afforded_by: afford,
                part_b,
                ratio_bound: bound,
                ratio_tight: tight,
                lift_residual: residual,
                dense_agrees,
            })
        });
        let orbitals: Vec<OrbitalVerdict> = verdicts.into_iter().collect::<Result<_, _>>()?;
        let part_a = orbitals.iter().any(|o| o.coclique);
        let bs: Vec<bool> = orbitals.iter().filter_map(|o| o.part_b).collect();
        Ok(LambdaAnalysis {
            lambda: lam.clone(),
            orbit_sizes: Some((s.len(), rest.len())),
            failure: None,
            orbitals,
            part_a: Some(part_a),
            part_b_some: Some(bs.iter().any(|&b| b)),
            part_b_every: Some(part_a && bs.iter().all(|&b| b)),
        })
    }

    /// The Young orbit S for λ, with the same selection rule as the analysis.
    pub fn young_set(&self, lam: &Partition) -> Result<Vec<usize>, GmError> {
        Ok(young_orbits(self.scheme.action().as_ref(), lam, None)?.0)
    }
}

/// Runs the full decision procedure on a built scheme.
pub fn gm_check(scheme: &OrbitalScheme, canonical: Option<&[usize]>, opts: &GmOptions) -> Result<GMReport, GmError> {
    let prepared = Prepared::new(scheme, opts)?;
    let lambda_set: Vec<Partition> = scheme.modules().iter().map(|(p, _)| p.clone()).collect();
    let maximal = dominance_maximal(&lambda_set);
    if maximal.is_empty() {
        return Err(GmError::Parameter("Λ has no partition besides the trivial one".into()));
    }
    let chosen = (maximal.len() == 1).then(|| maximal[0].clone());
    let ambiguity = (maximal.len() > 1).then(|| {
        let names: Vec<String> = maximal.iter().map(ToString::to_string).collect();
        format!("no unique second largest partition; maximal elements {}", names.join(", "))
    });
    let mut analyses = Vec::new();
    for lam in &maximal {
        match prepared.analyse(lam, None, opts) {
            Ok(a) => analyses.push(a),
            Err(GmError::Contract(msg)) if chosen.is_none() => analyses.push(LambdaAnalysis {
                lambda: lam.clone(),
                orbit_sizes: None,
                failure: Some(msg),
                orbitals: Vec::new(),
                part_a: None,
                part_b_some: None,
                part_b_every: None,
            }),
            Err(e) => return Err(e),
        }
    }
    let main = chosen.as_ref().and_then(|c| analyses.iter().find(|a| &a.lambda == c));
    let canonical_matches = match (canonical, &chosen) {
        (Some(c), Some(lam)) => {
            let mut c = c.to_vec();
            c.sort_unstable();
            Some(prepared.young_set(lam)? == c)
        }
        _ => None,
    };
    Ok(GMReport {
        format_version: REPORT_FORMAT_VERSION,
        scheme: scheme.id().to_string(),
        degree: scheme.action().degree(),
        domain_size: scheme.len(),
        rank: scheme.rank(),
        dominance_maximal: maximal.clone(),
        lambda_set,
        canonical_matches,
        part_a: main.and_then(|a| a.part_a),
        part_a_witnesses: main
            .map(|a| a.orbitals.iter().filter(|o| o.coclique).map(|o| o.label.clone()).collect())
            .unwrap_or_default(),
        part_b_some: main.and_then(|a| a.part_b_some),
        part_b_every: main.and_then(|a| a.part_b_every),
        chosen,
        ambiguity,
        analyses,
    })
}

/// Builds the family and runs [`gm_check`], cross-checking S against the canonical coclique.
pub fn gm_check_family(family: &Family, opts: &GmOptions) -> Result<GMReport, GmError> {
    let built = family.build(opts.max_domain)?;
    let canonical = built.canonical_coclique.clone();
    let mut scheme = OrbitalScheme::build(built.action, opts.max_domain)?;
    scheme.set_id(family.to_string());
    let report = gm_check(&scheme, canonical.as_deref(), opts)?;
    if report.canonical_matches == Some(false) {
        return Err(GmError::Consistency(format!("{family}: the Young orbit S differs from the canonical coclique")));
    }
    Ok(report)
}
