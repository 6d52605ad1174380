use std::sync::Arc;

use group_engine::{
    decompose_permchar, decompose_via_fix, fix_table, is_multiplicity_free, orbitals, rank, schreier_generators,
    suborbits_under, Action, BlockFactor, BlockProduct, ExplicitAction, GroupError, ObjectModel, Perm, PermGroup,
    DEFAULT_STREAM_BUDGET,
};
use sym_core::Partition;

/// k-subsets of [n] as bitmasks; stabilizer Sym(k) x Sym(n-k).
struct Subsets {
    n: usize,
    k: usize,
}

impl ObjectModel for Subsets {
    type Point = u32;
    fn name(&self) -> String {
        format!("{}-subsets of [{}]", self.k, self.n)
    }
    fn degree(&self) -> usize {
        self.n
    }
    fn base_point(&self) -> u32 {
        (1u32 << self.k) - 1
    }
    fn act(&self, g: &Perm, x: &u32) -> u32 {
        (0..self.n).filter(|&i| x >> i & 1 == 1).map(|i| 1u32 << g.apply(i)).sum()
    }
    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        let f = vec![BlockFactor::sym(0..self.k), BlockFactor::sym(self.k..self.n)];
        Ok(Arc::new(BlockProduct::new(self.n, f, false, DEFAULT_STREAM_BUDGET)?))
    }
    fn classify(&self, x: &u32, y: &u32) -> Option<String> {
        Some(format!("O{}", self.k - (x & y).count_ones() as usize))
    }
    fn describe(&self, x: &u32) -> String {
        format!("{x:b}")
    }
}

/// Ordered pairs of distinct points; stabilizer Sym(n-2) on the last points.
struct OrderedPairs {
    n: usize,
}

impl ObjectModel for OrderedPairs {
    type Point = (u8, u8);
    fn name(&self) -> String {
        "ordered pairs".into()
    }
    fn degree(&self) -> usize {
        self.n
    }
    fn base_point(&self) -> (u8, u8) {
        (0, 1)
    }
    fn act(&self, g: &Perm, x: &(u8, u8)) -> (u8, u8) {
        (g.apply(x.0 as usize) as u8, g.apply(x.1 as usize) as u8)
    }
    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        Ok(Arc::new(BlockProduct::new(self.n, vec![BlockFactor::sym(2..self.n)], false, DEFAULT_STREAM_BUDGET)?))
    }
    fn describe(&self, x: &(u8, u8)) -> String {
        format!("({}, {})", x.0 + 1, x.1 + 1)
    }
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn sym5_on_pairs_fix_table_and_orbitals() {
    let a = ExplicitAction::new(Subsets { n: 5, k: 2 }, 1000).unwrap();
    assert_eq!(a.len(), 10);
    let fix = fix_table(&a).unwrap();
    assert_eq!(fix.fix[&p(&[2, 1, 1, 1])], 4);
    assert_eq!(fix.fix[&p(&[5])], 0);
    assert_eq!(fix.fix[&p(&[1, 1, 1, 1, 1])], 10);
    assert_eq!(rank(&fix).unwrap(), 3);
    let o = orbitals(&a).unwrap();
    let val: Vec<usize> = o.orbitals.iter().map(|x| x.valency).collect();
    assert_eq!(val, vec![1, 3, 6]);
    let labels: Vec<&str> = o.orbitals.iter().map(|x| x.label.as_str()).collect();
    assert_eq!(labels, vec!["O0", "O2", "O1"]);
    assert!(o.orbitals.iter().all(|x| x.self_paired()));
}

#[test]
fn subsets_rank_and_valencies() {
    for n in 2..=9 {
        for k in 1..=n / 2 {
            let a = ExplicitAction::new(Subsets { n, k }, 10_000).unwrap();
            let o = orbitals(&a).unwrap();
            assert_eq!(o.rank(), k + 1);
            assert_eq!(o.orbitals.iter().map(|x| x.valency).sum::<usize>(), a.len());
            // Every pair gets the label of its orbital.
            for x in 0..a.len() {
                for y in 0..a.len() {
                    let i = o.orbital_of(&a, x, y);
                    assert_eq!(a.classify(x, y).unwrap(), o.orbitals[i].label);
                }
            }
        }
    }
}

#[test]
fn young_subgroup_decomposes_into_two_row_characters() {
    for (n, k) in [(5, 2), (8, 3), (9, 4)] {
        let a = ExplicitAction::new(Subsets { n, k }, 10_000).unwrap();
        let d = decompose_permchar(a.stabilizer().as_ref()).unwrap();
        let want: Vec<(Partition, u64)> = (0..=k).map(|i| (Partition::two_row(n, i).unwrap(), 1)).collect();
        assert_eq!(d, want);
        assert_eq!(decompose_via_fix(&fix_table(&a).unwrap()).unwrap(), d);
        assert!(is_multiplicity_free(&d));
    }
}

#[test]
fn alternating_times_symmetric_decomposition() {
    let (n, k) = (7usize, 3usize);
    let h = BlockProduct::new(n, vec![BlockFactor::alt(0..k), BlockFactor::sym(k..n)], false, 1 << 20).unwrap();
    let d = decompose_permchar(&h).unwrap();
    let mut want: Vec<Partition> = (0..=k).map(|i| Partition::two_row(n, i).unwrap()).collect();
    want.push(p(&[4, 1, 1, 1]));
    want.push(p(&[5, 1, 1]));
    let mut got: Vec<Partition> = d.iter().map(|(l, m)| {
        assert_eq!(*m, 1);
        l.clone()
    }).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn whole_group_gives_trivial_character() {
    let h = BlockProduct::new(6, vec![BlockFactor::sym(0..6)], false, 1 << 20).unwrap();
    assert_eq!(decompose_permchar(&h).unwrap(), vec![(Partition::one_row(6), 1)]);
}

#[test]
fn regular_action_of_trivial_group_has_rank_one() {
    let a = ExplicitAction::new(Subsets { n: 1, k: 1 }, 10).unwrap();
    assert_eq!(rank(&fix_table(&a).unwrap()).unwrap(), 1);
}

#[test]
fn ordered_pairs_are_not_gelfand() {
    let a = ExplicitAction::new(OrderedPairs { n: 5 }, 100).unwrap();
    let d = decompose_permchar(a.stabilizer().as_ref()).unwrap();
    assert!(!is_multiplicity_free(&d));
    assert!(d.contains(&(p(&[4, 1]), 2)));
    let o = orbitals(&a).unwrap();
    assert_eq!(o.rank(), 7);
    assert!(o.orbitals.iter().any(|x| !x.self_paired()));
}

#[test]
fn schreier_generators_recover_the_suborbits() {
    for (n, k) in [(6, 2), (7, 3)] {
        let a = ExplicitAction::new(Subsets { n, k }, 1000).unwrap();
        let o = orbitals(&a).unwrap();
        let gens = schreier_generators(&a, o.rank());
        assert!(gens.iter().all(|g| a.act(g, 0) == 0));
        let mut via_schreier = suborbits_under(&a, &gens);
        via_schreier.sort_by_key(|s| (s.len(), s[0]));
        assert_eq!(via_schreier, o.suborbits);
    }
}

#[test]
fn transversal_maps_base_to_point() {
    let a = ExplicitAction::new(Subsets { n: 7, k: 3 }, 1000).unwrap();
    for x in 0..a.len() {
        assert_eq!(a.act(a.transversal(x), 0), x);
        assert_eq!(a.act(a.transversal_inv(x), x), 0);
    }
}

#[test]
fn domain_budget() {
    let err = ExplicitAction::new(Subsets { n: 10, k: 5 }, 100).err().unwrap();
    assert!(matches!(err, GroupError::Budget { cap: 100, .. }));
}
