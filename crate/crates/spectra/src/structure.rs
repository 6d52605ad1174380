use std::collections::HashMap;
use std::sync::Arc;

use group_engine::{Action, ExplicitAction, ObjectModel};
use models::{KSubset, Line4, Line5, QuasiJohnson, Sign};
use scheme::OrbitalScheme;
use serde::Serialize;

use crate::{verify_isomorphism, Graph, SpectraError};

/// An explicitly verified isomorphism onto a product graph.
#[derive(Debug, Clone, Serialize)]
pub struct IsoCertificate {
    pub description: String,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
}

/// An explicit action with its orbital scheme, keeping typed access to points.
pub struct TypedScheme<M: ObjectModel + 'static> {
    pub action: Arc<ExplicitAction<M>>,
    pub scheme: OrbitalScheme,
}

impl<M: ObjectModel + 'static> TypedScheme<M> {
    pub fn new(model: M, max_domain: usize) -> Result<Self, SpectraError> {
        let action = Arc::new(ExplicitAction::new(model, max_domain)?);
        let scheme = OrbitalScheme::build(action.clone() as Arc<dyn Action>, max_domain)?;
        Ok(TypedScheme { action, scheme })
    }

    pub fn graph(&self, label: &str) -> Result<Graph, SpectraError> {
        let i = self
            .scheme
            .orbital_by_label(label)
            .ok_or_else(|| SpectraError::Parameter(format!("no orbital labelled {label}")))?;
        orbital_graph(&self.scheme, i)
    }
}

pub fn orbital_graph(scheme: &OrbitalScheme, i: usize) -> Result<Graph, SpectraError> {
    Graph::from_adjacency(scheme.graph(&[i]))
}

fn subset_index(n: usize, k: usize) -> HashMap<KSubset, usize> {
    KSubset::all(n, k).into_iter().enumerate().map(|(i, s)| (s, i)).collect()
}

/// Within each group of vertices sharing a base, numbers them 0, 1, ... by vertex order.
fn copy_bits(bases: &[KSubset], expected: usize) -> Result<Vec<usize>, SpectraError> {
    let mut seen: HashMap<KSubset, usize> = HashMap::new();
    let bits: Vec<usize> = bases
        .iter()
        .map(|b| {
            let c = seen.entry(*b).or_insert(0);
            *c += 1;
            *c - 1
        })
        .collect();
    if seen.values().any(|&c| c != expected) {
        return Err(SpectraError::Consistency(format!("some base occurs other than {expected} times")));
    }
    Ok(bits)
}

/// Quasi-Johnson orbital `O_i` (`i >= 2`) is `K2 ⋈ J(n, k, i)`.
pub fn quasi_johnson_bowtie(n: usize, k: usize, i: usize) -> Result<IsoCertificate, SpectraError> {
    if i < 2 || i > k {
        return Err(SpectraError::Parameter(format!("need 2 <= i <= k, got i = {i}")));
    }
    let t = TypedScheme::new(QuasiJohnson::line2(n, k)?, 1_000_000)?;
    let g = t.graph(&format!("O{i}"))?;
    let idx = subset_index(n, k);
    let map: Vec<usize> = t
        .action
        .points()
        .iter()
        .map(|p| usize::from(p.sign == Sign::Minus) * idx.len() + idx[&p.base])
        .collect();
    let h = Graph::johnson_distance(n, k, i).bowtie_k2();
    let edges = verify_isomorphism(&g, &h, &map)?;
    Ok(IsoCertificate { description: format!("quasi-johnson({n},{k}) O{i} = K2 ⋈ J({n},{k},{i})"), vertices: g.len(), edges, components: g.components().0 })
}

/// Each component of `g` is mapped onto `target` by `(copy bit, base)`.
fn components_onto(
    g: &Graph,
    bases: &[KSubset],
    target: &Graph,
    copies: usize,
    expected_components: usize,
    idx: &HashMap<KSubset, usize>,
) -> Result<usize, SpectraError> {
    let (c, comp) = g.components();
    if c != expected_components {
        return Err(SpectraError::Consistency(format!("{c} components, expected {expected_components}")));
    }
    let mut edges = 0;
    for ci in 0..c {
        let verts: Vec<usize> = (0..g.len()).filter(|&x| comp[x] == ci).collect();
        let vb: Vec<KSubset> = verts.iter().map(|&x| bases[x]).collect();
        let bits = copy_bits(&vb, copies)?;
        let map: Vec<usize> = vb.iter().zip(&bits).map(|(b, &bit)| bit * idx.len() + idx[b]).collect();
        edges += verify_isomorphism(&g.induced(&verts), target, &map)?;
    }
    Ok(edges)
}

/// Line 4: `O_k^+` has two components, each `K2 ⋈ K(n, k)`.
pub fn line4_plus_components(n: usize, k: usize) -> Result<IsoCertificate, SpectraError> {
    let t = TypedScheme::new(Line4::new(n, k)?, 1_000_000)?;
    let g = t.graph(&format!("O{k}+"))?;
    let bases: Vec<KSubset> = t.action.points().iter().map(|p| p.base).collect();
    let idx = subset_index(n, k);
    let edges = components_onto(&g, &bases, &Graph::kneser(n, k).bowtie_k2(), 2, 2, &idx)?;
    Ok(IsoCertificate { description: format!("line4({n},{k}) O{k}+ = 2 x (K2 ⋈ K({n},{k}))"), vertices: g.len(), edges, components: 2 })
}

/// Line 5: `K⁻ = O_k^-` is `K2 × K(n, k)` via a 2-colouring, flipped per component
/// so that each base receives both colours.
pub fn line5_minus_direct(n: usize, k: usize) -> Result<IsoCertificate, SpectraError> {
    let t = TypedScheme::new(Line5::new(n, k)?, 1_000_000)?;
    let g = t.graph(&format!("O{k}-"))?;
    let mut col = g.two_colouring().ok_or_else(|| SpectraError::Consistency("K- is not bipartite".into()))?;
    let idx = subset_index(n, k);
    let (count, comp) = g.components();
    let mut used = vec![false; 2 * idx.len()];
    for ci in 0..count {
        let verts: Vec<usize> = (0..g.len()).filter(|&x| comp[x] == ci).collect();
        let slot = |x: usize, c: u8| c as usize * idx.len() + idx[&t.action.point(x).base];
        let flip = u8::from(verts.iter().any(|&x| used[slot(x, col[x])]));
        for &x in &verts {
            col[x] ^= flip;
            used[slot(x, col[x])] = true;
        }
    }
    let map: Vec<usize> = t.action.points().iter().zip(&col).map(|(p, &c)| c as usize * idx.len() + idx[&p.base]).collect();
    let edges = verify_isomorphism(&g, &Graph::kneser(n, k).direct_k2(), &map)?;
    Ok(IsoCertificate { description: format!("line5({n},{k}) K- = K2 x K({n},{k})"), vertices: g.len(), edges, components: g.components().0 })
}

/// Line 5: `K⁺ = O_k^+` is two disjoint copies of `K(n, k)`. Each component
/// meets every base at most once and is sent to the first copy with room.
pub fn line5_plus_copies(n: usize, k: usize) -> Result<IsoCertificate, SpectraError> {
    let t = TypedScheme::new(Line5::new(n, k)?, 1_000_000)?;
    let g = t.graph(&format!("O{k}+"))?;
    let idx = subset_index(n, k);
    let (count, comp) = g.components();
    let mut used = vec![false; 2 * idx.len()];
    let mut map = vec![0; g.len()];
    for ci in 0..count {
        let slots: Vec<(usize, usize)> =
            (0..g.len()).filter(|&x| comp[x] == ci).map(|x| (x, idx[&t.action.point(x).base])).collect();
        let copy = (0..2)
            .find(|c| slots.iter().all(|&(_, b)| !used[c * idx.len() + b]))
            .ok_or_else(|| SpectraError::Consistency(format!("component {ci} fits in neither copy")))?;
        for &(x, b) in &slots {
            used[copy * idx.len() + b] = true;
            map[x] = copy * idx.len() + b;
        }
    }
    let edges = verify_isomorphism(&g, &Graph::kneser(n, k).doubled(), &map)?;
    Ok(IsoCertificate { description: format!("line5({n},{k}) K+ = 2 x K({n},{k})"), vertices: g.len(), edges, components: count })
}
