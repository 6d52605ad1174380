use models::{quasi_kneser_graph, Family, KSubset};
use num_bigint::BigInt;
use scheme::OrbitalScheme;
use spectra::{
    dense_spectrum, lift_and_check, line4_plus_components, line5_minus_direct, line5_plus_copies, max_cocliques,
    orbital_graph, product_spectrum, quasi_johnson_bowtie, ratio_bound, verify_equitable, CharacterSums, CocliqueOptions,
    DenseOptions, Graph, ProductKind, SchemeEigenmatrix, Spectrum, Q,
};
use sym_core::{binomial, Partition};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn q(b: BigInt) -> Q {
    Q::from(b)
}

fn eigenmatrix(s: &OrbitalScheme) -> SchemeEigenmatrix {
    SchemeEigenmatrix::build(&CharacterSums::new(s, true).unwrap()).unwrap()
}

fn wreath_scheme() -> OrbitalScheme {
    let gens = ["(1 2)", "(1 2 3 4)", "(1 5)(2 6)(3 7)(4 8)"]
        .iter()
        .map(|s| group_engine::Perm::parse(8, s).unwrap())
        .collect();
    OrbitalScheme::from_family(&Family::Coset { name: "S4 wr S2".into(), degree: 8, generators: gens }, 1000).unwrap()
}

#[test]
fn wreath_character_table() {
    let s = wreath_scheme();
    let m = eigenmatrix(&s);
    assert_eq!(m.valencies, vec![1, 16, 18]);
    assert_eq!(m.partitions, vec![p(&[8]), p(&[6, 2]), p(&[4, 4])]);
    let ints = |v: &[i64]| v.iter().map(|&x| Q::int(x)).collect::<Vec<_>>();
    let table: std::collections::BTreeSet<(Vec<Q>, u64)> =
        m.entries.iter().cloned().zip(m.multiplicities.iter().copied()).collect();
    let want: std::collections::BTreeSet<(Vec<Q>, u64)> =
        [(ints(&[1, 16, 18]), 1), (ints(&[1, -4, 3]), 14), (ints(&[1, 2, -3]), 20)].into_iter().collect();
    assert_eq!(table, want);
    assert_eq!(m.entries[1], ints(&[1, 2, -3]));
    assert_eq!(m.entries[2], ints(&[1, -4, 3]));
    let g = orbital_graph(&s, 2).unwrap();
    let d = dense_spectrum(&g, &m.spectrum(&[2]).into_keys().collect::<Vec<_>>(), &DenseOptions::default()).unwrap();
    let want: Spectrum = [(Q::int(18), 1), (Q::int(3), 14), (Q::int(-3), 20)].into_iter().collect();
    assert_eq!(d.spectrum, want);
    for i in [1, 2] {
        let (tau, _) = m.least(&[i]);
        let b = ratio_bound(m.valencies[i], &tau, 35).unwrap();
        assert!(b < Q::int(8), "bound {b}");
    }
    assert!(m.to_csv().starts_with("partition,dimension,"));
}

#[test]
fn kneser_least_eigenvalue_formula() {
    for (n, k) in [(5, 2), (7, 2), (7, 3), (9, 4), (10, 3)] {
        let s = OrbitalScheme::from_family(&Family::Johnson { n, k }, 10_000).unwrap();
        let m = eigenmatrix(&s);
        let kn = s.orbital_by_label(&format!("O{k}")).unwrap();
        let row = m.row_of(&p(&[n as u32 - 1, 1])).unwrap();
        let want = Q::new(-binomial(n - 1, k - 1) * binomial(n - k, k), binomial(n - 1, k));
        assert_eq!(m.entries[row][kn], want, "({n},{k})");
        assert_eq!(m.least(&[kn]).0, want);
    }
}

#[test]
fn johnson_trivial_row_is_valencies() {
    let s = OrbitalScheme::from_family(&Family::Johnson { n: 5, k: 2 }, 100).unwrap();
    let m = eigenmatrix(&s);
    let row = m.row_of(&p(&[5])).unwrap();
    let by_label = |l: &str| m.entries[row][s.orbital_by_label(l).unwrap()].clone();
    assert_eq!((by_label("O0"), by_label("O1"), by_label("O2")), (Q::int(1), Q::int(6), Q::int(3)));
}

#[test]
fn structure_isomorphisms() {
    for (n, k) in [(6, 3), (7, 3), (8, 4)] {
        for i in 2..=k {
            quasi_johnson_bowtie(n, k, i).unwrap();
        }
    }
    for n in [8, 9] {
        let c = line4_plus_components(n, 3).unwrap();
        assert_eq!(c.components, 2);
    }
    for (n, k) in [(5, 2), (7, 3), (8, 3)] {
        line5_minus_direct(n, k).unwrap();
        line5_plus_copies(n, k).unwrap();
    }
}

#[test]
fn quasi_kneser_four_ways() {
    for (n, k) in [(6, 3), (7, 3), (8, 3), (8, 4)] {
        let s = OrbitalScheme::from_family(&Family::QuasiJohnson { n, k }, 10_000).unwrap();
        let m = eigenmatrix(&s);
        let kn = s.orbital_by_label(&format!("O{k}")).unwrap();
        let by_character = m.spectrum(&[kn]);
        let distinct: std::collections::BTreeSet<Q> = by_character.keys().cloned().collect();
        let mut formula: std::collections::BTreeSet<Q> =
            (0..=k).map(|j| q(BigInt::from(if j % 2 == 0 { 2 } else { -2 }) * binomial(n - k - j, k - j))).collect();
        formula.insert(Q::zero());
        assert_eq!(distinct, formula, "({n},{k})");
        let kneser = OrbitalScheme::from_family(&Family::Johnson { n, k }, 10_000).unwrap();
        let km = eigenmatrix(&kneser);
        let kk = kneser.orbital_by_label(&format!("O{k}")).unwrap();
        assert_eq!(product_spectrum(ProductKind::Bowtie, &km.spectrum(&[kk])), by_character);
        let g = orbital_graph(&s, kn).unwrap();
        let cand: Vec<Q> = by_character.keys().cloned().collect();
        assert_eq!(dense_spectrum(&g, &cand, &DenseOptions::default()).unwrap().spectrum, by_character);
    }
}

#[test]
fn quasi_kneser_small_case() {
    let (verts, adj) = quasi_kneser_graph(5, 2).unwrap();
    let g = Graph::from_adjacency(adj).unwrap();
    let star: Vec<usize> = (0..verts.len()).filter(|&i| verts[i].base.contains(4)).collect();
    let qm = verify_equitable(&g, &star).unwrap();
    assert_eq!(qm.a, 0);
    assert_eq!(qm.eigenvalues(), (Q::int(6), Q::int(-4)));
    lift_and_check(&g, &star, &Q::int(-4)).unwrap();
    assert_eq!(max_cocliques(&g, &CocliqueOptions::default()).alpha, 8);
    assert_eq!(ratio_bound(6, &Q::int(-4), 20).unwrap(), Q::int(8));
}

#[test]
fn kneser_lift_through_star() {
    let (n, k) = (7, 3);
    let g = Graph::kneser(n, k);
    let star: Vec<usize> = KSubset::all(n, k).iter().enumerate().filter(|(_, a)| a.contains(n - 1)).map(|(i, _)| i).collect();
    let qm = verify_equitable(&g, &star).unwrap();
    let theta = qm.eigenvalues().1;
    assert_eq!(theta, Q::int(-3));
    let cert = lift_and_check(&g, &star, &theta).unwrap();
    assert!(cert.residual.is_zero());
    assert_eq!(ratio_bound(4, &theta, 35).unwrap(), Q::int(15));
}

#[test]
fn character_route_rejects_bad_input() {
    let s = OrbitalScheme::from_family(&Family::Johnson { n: 5, k: 2 }, 100).unwrap();
    let c = CharacterSums::new(&s, false).unwrap();
    assert!(c.eigenvalue(1, &p(&[3, 3])).is_err());
    assert!(c.eigenvalue(7, &p(&[4, 1])).is_err());
    assert_eq!(c.eigenvalue(2, &p(&[5])).unwrap(), Q::int(s.valency(2) as i64));
}
