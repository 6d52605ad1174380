//! Derangement graphs on perfect and quasi-perfect matchings.

use models::{phi, Matching, Matchings};
use serde::Serialize;
use spectra::{
    dense_spectrum, max_cocliques, verify_isomorphism, CharacterSums, CocliqueOptions, DenseOptions, Graph,
    SchemeEigenmatrix, TypedScheme, Q,
};
use sym_core::Partition;

use crate::GmError;

const MAX_DOMAIN: usize = 200_000;

/// The shape of a maximum coclique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExtremalKind {
    /// Every member contains the pair (1-based).
    FixedPair(usize, usize),
    /// Every member leaves this point (1-based) unmatched.
    FixedSingleton(usize),
    Other,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchingBound {
    pub k: usize,
    pub quasi: bool,
    pub vertices: usize,
    pub valency: usize,
    pub alpha: usize,
    /// `(2k-3)!!` for perfect matchings, `(2k-1)!!` for quasi-perfect ones.
    pub expected_alpha: usize,
    /// The search finished within its node budget.
    pub complete: bool,
    /// Maximum cocliques through vertex 0 and their shapes.
    pub extremal: Vec<ExtremalKind>,
    pub all_canonical: bool,
}

pub fn double_factorial(n: usize) -> usize {
    (1..=n).rev().step_by(2).product()
}

/// Whether two matchings are adjacent in the derangement graph: no shared pair
/// and, for quasi-perfect matchings, distinct singletons.
pub fn derangement_type(t: &Partition, quasi: bool) -> bool {
    !t.parts().iter().any(|&p| p == 2 || (quasi && p == 1))
}

fn scheme(k: usize, quasi: bool) -> Result<TypedScheme<Matchings>, GmError> {
    let model = if quasi { Matchings::quasi_perfect(k)? } else { Matchings::perfect(k)? };
    Ok(TypedScheme::new(model, MAX_DOMAIN)?)
}

fn orbital_type(ts: &TypedScheme<Matchings>, i: usize) -> Partition {
    let (x, y) = ts.scheme.structure().orbitals[i].representative;
    ts.action.model().union_type(ts.action.point(x), ts.action.point(y))
}

/// The derangement graph as the union of the orbitals with no forbidden part.
pub fn derangement_graph(k: usize, quasi: bool) -> Result<(TypedScheme<Matchings>, Graph), GmError> {
    let ts = scheme(k, quasi)?;
    let chosen: Vec<usize> = (1..ts.scheme.rank()).filter(|&i| derangement_type(&orbital_type(&ts, i), quasi)).collect();
    let g = Graph::from_adjacency(ts.scheme.graph(&chosen))?;
    Ok((ts, g))
}

pub fn classify_extremal(members: &[&Matching]) -> ExtremalKind {
    let first = members[0];
    for a in 0..first.0.len() {
        let b = first.partner(a);
        if b == a && members.iter().all(|m| m.partner(a) == a) {
            return ExtremalKind::FixedSingleton(a + 1);
        }
        if b > a && members.iter().all(|m| m.partner(a) == b) {
            return ExtremalKind::FixedPair(a + 1, b + 1);
        }
    }
    ExtremalKind::Other
}

/// Exhaustive maximum cocliques of the derangement graph through vertex 0.
pub fn matching_bounds(k: usize, quasi: bool, node_budget: u64) -> Result<MatchingBound, GmError> {
    let (ts, g) = derangement_graph(k, quasi)?;
    let opts = CocliqueOptions { through_vertex: Some(0), enumerate_all: true, node_budget };
    let search = max_cocliques(&g, &opts);
    let extremal: Vec<ExtremalKind> = search
        .maximum
        .iter()
        .map(|c| classify_extremal(&c.iter().map(|&v| ts.action.point(v)).collect::<Vec<_>>()))
        .collect();
    Ok(MatchingBound {
        k,
        quasi,
        vertices: g.len(),
        valency: g.regular_degree().unwrap_or(0),
        alpha: search.alpha,
        expected_alpha: if quasi { double_factorial(2 * k - 1) } else { double_factorial(2 * k - 3) },
        complete: search.complete,
        all_canonical: extremal.iter().all(|e| *e != ExtremalKind::Other),
        extremal,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct QpmIsoCertificate {
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Ordered pairs whose union type was checked against the image pair.
    pub pairs_checked: usize,
}

/// Maps a quasi-perfect union type to the type of the image pair under `phi`:
/// the path component (the only odd part) gains the new point.
pub fn phi_type(t: &Partition, path: u32) -> Partition {
    let mut parts: Vec<u32> = t.parts().to_vec();
    if let Some(p) = parts.iter_mut().find(|p| **p == path) {
        *p += 1;
    }
    Partition::from_unsorted(parts).expect("positive parts")
}

/// Certifies that `phi` is an isomorphism from the quasi-perfect derangement
/// graph on `[2k+1]` onto the perfect one on `[2k+2]`, pair by pair.
pub fn qpm_iso(k: usize) -> Result<QpmIsoCertificate, GmError> {
    let (q, gq) = derangement_graph(k, true)?;
    let (p, gp) = derangement_graph(k + 1, false)?;
    let map: Vec<usize> = (0..q.scheme.len())
        .map(|v| {
            p.action
                .index_of(&phi(q.action.point(v)))
                .ok_or_else(|| GmError::Consistency("phi leaves the perfect matchings".into()))
        })
        .collect::<Result<_, _>>()?;
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != p.scheme.len() {
        return Err(GmError::Consistency("phi is not a bijection".into()));
    }
    let edges = verify_isomorphism(&gq, &gp, &map)?;
    let (qm, pm) = (q.action.model(), p.action.model());
    let n = q.scheme.len();
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (q.action.point(x), q.action.point(y));
            let t = qm.union_type(a, b);
            let path = t.parts().iter().copied().find(|&c| c % 2 == 1).expect("the path has odd order");
            let expected = phi_type(&t, path);
            if pm.union_type(p.action.point(map[x]), p.action.point(map[y])) != expected {
                return Err(GmError::Consistency(format!("phi breaks the type of ({a}, {b})")));
            }
        }
    }
    Ok(QpmIsoCertificate { k, vertices: n, edges, pairs_checked: n * n })
}

#[derive(Debug, Clone, Serialize)]
pub struct PathOrbital {
    pub k: usize,
    pub label: String,
    pub least_eigenvalue: Q,
    pub afforded_by: Vec<Partition>,
    /// Least eigenvalue of the dense floating spectrum.
    pub dense_least: f64,
    pub dense_agrees: bool,
}

/// The orbital of quasi-perfect matchings whose union is one path through all points.
pub fn qpm_path_orbital(k: usize, dense: &DenseOptions) -> Result<PathOrbital, GmError> {
    let ts = scheme(k, true)?;
    let label = format!("O[{}]", 2 * k + 1);
    let i = ts
        .scheme
        .orbital_by_label(&label)
        .ok_or_else(|| GmError::Consistency(format!("no orbital {label}")))?;
    let sums = CharacterSums::new(&ts.scheme, false)?;
    let em = SchemeEigenmatrix::build(&sums)?;
    let (least, afforded_by) = em.least(&[i]);
    let g = ts.graph(&label)?;
    let exact = em.spectrum(&[i]);
    let cand: Vec<Q> = exact.keys().cloned().collect();
    let d = dense_spectrum(&g, &cand, dense)?;
    let dense_least = d.spectrum.keys().next().map(Q::to_f64).unwrap_or(f64::NAN);
    Ok(PathOrbital {
        k,
        label,
        dense_agrees: d.spectrum == exact && d.unmatched.is_empty(),
        least_eigenvalue: least,
        afforded_by,
        dense_least,
    })
}
