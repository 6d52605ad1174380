use num_bigint::BigInt;
use proptest::prelude::*;
use sym_core::{dim_specht, dominates, mn_character, partitions_of, Partition};

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_of(n).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..=12).prop_flat_map(|n| (partition_of(n), partition_of(n)))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution((lam, _) in pair()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn conjugation_reverses_dominance((lam, mu) in pair()) {
        prop_assert_eq!(dominates(&lam, &mu).unwrap(), dominates(&mu.conjugate(), &lam.conjugate()).unwrap());
    }

    #[test]
    fn tensoring_with_sign((lam, mu) in pair()) {
        let a = mn_character(&lam.conjugate(), &mu).unwrap();
        let b = mn_character(&lam, &mu).unwrap() * mu.sign();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn display_round_trips((lam, _) in pair()) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn character_bounded_by_dimension((lam, mu) in pair()) {
        let v: BigInt = mn_character(&lam, &mu).unwrap();
        prop_assert!(v.magnitude() <= dim_specht(&lam).magnitude());
    }
}
