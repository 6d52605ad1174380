//! The negative result for Sym(2k) acting on partitions into two k-blocks.

use group_engine::{Action, ObjectModel, Perm};
use models::{KSubset, UniformPartitions};
use num_traits::ToPrimitive;
use serde::Serialize;
use spectra::{ratio_bound, TypedScheme};

use crate::{gm_check, GMReport, GmError, GmOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WitnessSource {
    /// Blocks sharing `k - i` points, built from consecutive runs; needs `2i <= k - 2`.
    Runs,
    /// Blocks sharing the larger of `i`, `k - i` points, containing the last two.
    Overlap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skwr2Witness {
    pub label: String,
    pub source: WitnessSource,
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Skwr2Report {
    pub k: usize,
    pub orbit_sizes: Option<(usize, usize)>,
    /// One entry per nontrivial orbital; `None` when no edge inside S exists.
    pub witnesses: Vec<(String, Option<Skwr2Witness>)>,
    /// Floored ratio bound of each nontrivial orbital graph.
    pub ratio_caps: Vec<(String, u64)>,
    /// Every nontrivial orbital graph has an edge inside S.
    pub negative: bool,
    pub gm: GMReport,
}

/// The run construction for orbital `i` (1-based points `1..=2k`), if it applies.
pub fn runs_witness(k: usize, i: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if i == 0 || 2 * i + 2 > k {
        return None;
    }
    let common: Vec<usize> = (1..=k - i - 2).chain([2 * k - 1, 2 * k]).collect();
    let a = common.iter().copied().chain(k + 1..=k + i).collect();
    let b = common.iter().copied().chain(k + i + 1..=k + 2 * i).collect();
    Some((a, b))
}

/// Two blocks containing `2k-1, 2k` and meeting in `max(i, k-i)` points.
pub fn overlap_witness(k: usize, i: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let m = i.max(k - i);
    if i == 0 || 2 * i > k || m < 2 {
        return None;
    }
    let d = k - m;
    let common: Vec<usize> = (1..=m - 2).chain([2 * k - 1, 2 * k]).collect();
    let a = common.iter().copied().chain(m - 1..m - 1 + d).collect();
    let b = common.iter().copied().chain(m - 1 + d..m - 1 + 2 * d).collect();
    Some((a, b))
}

pub fn verify_skwr2_negative(k: usize, opts: &GmOptions) -> Result<Skwr2Report, GmError> {
    let model = UniformPartitions::new(k)?;
    let ts = TypedScheme::new(model.clone(), opts.max_domain)?;
    let canonical: Vec<usize> =
        (0..ts.scheme.len()).filter(|&x| model.in_canonical_coclique(ts.action.point(x))).collect();
    let mut gm = gm_check(&ts.scheme, Some(&canonical), opts)?;
    gm.scheme = format!("uniform2(k={k})");
    let analysis = gm
        .chosen_analysis()
        .ok_or_else(|| GmError::Consistency("no unique second largest partition".into()))?
        .clone();
    let id = Perm::identity(2 * k);
    let locate = |elems: &[usize]| -> Result<usize, GmError> {
        let p = model.act(&id, &KSubset::from_elements(&elems.iter().map(|e| e - 1).collect::<Vec<_>>()));
        ts.action.index_of(&p).ok_or_else(|| GmError::Consistency(format!("block {elems:?} not in the domain")))
    };
    let mut witnesses = Vec::new();
    for o in &analysis.orbitals {
        let i: usize = o.label[1..].parse().map_err(|_| GmError::Consistency(format!("bad label {}", o.label)))?;
        let mut found = None;
        for (source, w) in [(WitnessSource::Runs, runs_witness(k, i)), (WitnessSource::Overlap, overlap_witness(k, i))] {
            let Some((a, b)) = w else { continue };
            let (x, y) = (locate(&a)?, locate(&b)?);
            let in_s = canonical.binary_search(&x).is_ok() && canonical.binary_search(&y).is_ok();
            if !in_s || ts.scheme.orbital_of(x, y) != o.index {
                return Err(GmError::Consistency(format!("{source:?} witness for {} is invalid", o.label)));
            }
            found = Some(Skwr2Witness {
                label: o.label.clone(),
                source,
                a: ts.action.point_label(x),
                b: ts.action.point_label(y),
            });
            break;
        }
        if found.is_none() != o.edge_inside.is_none() {
            return Err(GmError::Consistency(format!("witness construction and search disagree on {}", o.label)));
        }
        witnesses.push((o.label.clone(), found));
    }
    let mut ratio_caps = Vec::new();
    for o in &analysis.orbitals {
        let rb = ratio_bound(o.valency, &o.least_eigenvalue, ts.scheme.len() as u64)?;
        let cap = rb.0.floor().to_integer().to_u64().unwrap_or(u64::MAX);
        ratio_caps.push((o.label.clone(), cap));
    }
    Ok(Skwr2Report {
        k,
        orbit_sizes: analysis.orbit_sizes,
        negative: witnesses.iter().all(|(_, w)| w.is_some()),
        witnesses,
        ratio_caps,
        gm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_witness_range() {
        assert_eq!(runs_witness(6, 2), Some((vec![1, 2, 11, 12, 7, 8], vec![1, 2, 11, 12, 9, 10])));
        assert_eq!(runs_witness(6, 3), None);
        assert_eq!(overlap_witness(2, 1), None);
        assert_eq!(overlap_witness(3, 1), Some((vec![5, 6, 1], vec![5, 6, 2])));
    }
}
