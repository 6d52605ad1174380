use group_engine::{suborbits_under, Action, Perm};
use sym_core::{dominates, Partition};

use crate::GmError;

/// Dominance-maximal elements of `Λ` other than `[n]`, in the order given.
pub fn dominance_maximal(lams: &[Partition]) -> Vec<Partition> {
    let rest: Vec<&Partition> = lams.iter().filter(|p| p.len() > 1).collect();
    rest.iter()
        .filter(|p| !rest.iter().any(|q| q != *p && dominates(q, p).unwrap_or(false)))
        .map(|p| (*p).clone())
        .collect()
}

/// The unique dominance maximum of `Λ \ {[n]}`.
pub fn second_largest(lams: &[Partition]) -> Result<Partition, GmError> {
    let max = dominance_maximal(lams);
    match max.as_slice() {
        [one] => Ok(one.clone()),
        [] => Err(GmError::Parameter("Λ has no partition besides the trivial one".into())),
        many => {
            let names: Vec<String> = many.iter().map(ToString::to_string).collect();
            Err(GmError::Contract(format!("no unique second largest partition; maximal: {}", names.join(", "))))
        }
    }
}

/// Generators of Sym(λ) on consecutive blocks `[0, λ1)`, `[λ1, λ1+λ2)`, ...
pub fn young_generators(lam: &Partition) -> Vec<Perm> {
    let n = lam.n();
    let mut gens = Vec::new();
    let mut start = 0;
    for &p in lam.parts() {
        let p = p as usize;
        if p >= 2 {
            gens.push(Perm::transposition(n, start, start + 1));
            gens.push(Perm::cycle(n, &(start..start + p).collect::<Vec<_>>()));
        }
        start += p;
    }
    gens
}

/// The two orbits of Sym(λ), or of its conjugate by `conj`, as `(S, complement)`:
/// S is the smaller orbit, or on a tie the one avoiding the base point.
pub fn young_orbits(action: &dyn Action, lam: &Partition, conj: Option<&Perm>) -> Result<(Vec<usize>, Vec<usize>), GmError> {
    let mut gens = young_generators(lam);
    if let Some(g) = conj {
        let gi = g.inverse();
        gens = gens.iter().map(|h| g.compose(h).compose(&gi)).collect();
    }
    let mut orbits = suborbits_under(action, &gens);
    if orbits.len() != 2 {
        return Err(GmError::Contract(format!("Sym({lam}) has {} orbits, expected 2", orbits.len())));
    }
    for o in orbits.iter_mut() {
        o.sort_unstable();
    }
    let (a, b) = (orbits.remove(0), orbits.remove(0));
    let a_first = a.len() < b.len() || (a.len() == b.len() && !a.contains(&0));
    Ok(if a_first { (a, b) } else { (b, a) })
}
