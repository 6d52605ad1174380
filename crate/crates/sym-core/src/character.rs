use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::classes::factorial;
use crate::partition::{partitions_of, CycleType, Partition};
use crate::SymError;

type Key = (Vec<u32>, Vec<u32>);

fn memo() -> &'static RwLock<HashMap<Key, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The character value `chi^lam` on the class of cycle type `mu`.
pub fn mn_character(lam: &Partition, mu: &CycleType) -> Result<BigInt, SymError> {
    if lam.n() != mu.n() {
        return Err(SymError::Parameter(format!("{lam} and {mu} have different sizes")));
    }
    Ok(mn(lam.parts(), mu.parts()))
}

fn mn(lam: &[u32], mu: &[u32]) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(v) = memo().read().expect("character memo poisoned").get(&key) {
        return v.clone();
    }
    let r = mu[0];
    let len = lam.len() as u32;
    let beta: Vec<u32> = lam.iter().enumerate().map(|(i, &p)| p + len - 1 - i as u32).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        let v = mn(&shape, &mu[1..]);
        if between % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo().write().expect("character memo poisoned").insert(key, total.clone());
    total
}

/// `dim S^lam` by the hook length formula.
pub fn dim_specht(lam: &Partition) -> BigInt {
    let conj = lam.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.parts()[j] as usize - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lam.n()) / hooks
}

/// Full character table: rows and columns both in reverse-lex order.
pub fn character_table(n: usize) -> Result<(Vec<Partition>, Vec<Vec<BigInt>>), SymError> {
    let parts = partitions_of(n)?;
    let table = parts
        .iter()
        .map(|lam| parts.iter().map(|mu| mn(lam.parts(), mu.parts())).collect())
        .collect();
    Ok((parts, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;
    use std::collections::BTreeMap;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for q in all_perms(n - 1) {
            for pos in 0..n {
                let mut v = q.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }

    fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut lens = Vec::new();
        for s in 0..perm.len() {
            if !seen[s] {
                let (mut x, mut l) = (s, 0);
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                    l += 1;
                }
                lens.push(l);
            }
        }
        Partition::from_unsorted(lens).unwrap()
    }

    /// Row assignments of [n] with row sizes `mu` (tabloids).
    fn tabloids(mu: &Partition) -> Vec<Vec<usize>> {
        let n = mu.n();
        let mut out = Vec::new();
        let mut cur = vec![usize::MAX; n];
        let mut left: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
        fn rec(i: usize, cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == cur.len() {
                out.push(cur.clone());
                return;
            }
            for r in 0..left.len() {
                if left[r] > 0 {
                    left[r] -= 1;
                    cur[i] = r;
                    rec(i + 1, cur, left, out);
                    left[r] += 1;
                }
            }
        }
        rec(0, &mut cur, &mut left, &mut out);
        out
    }

    /// Character table by Gram-Schmidt on Young permutation characters.
    fn brute_force_table(n: usize) -> BTreeMap<(Partition, Partition), i64> {
        let perms = all_perms(n);
        let classes = partitions_of(n).unwrap();
        let reps: BTreeMap<Partition, Vec<usize>> = perms.iter().map(|g| (cycle_type(g), g.clone())).collect();
        let sizes: BTreeMap<Partition, i64> = conjugacy_classes(n)
            .unwrap()
            .into_iter()
            .map(|(m, s)| (m, i64::try_from(s).unwrap()))
            .collect();
        let order: i64 = sizes.values().sum();
        let inner = |a: &Vec<i64>, b: &Vec<i64>| -> i64 {
            let s: i64 = classes.iter().enumerate().map(|(c, mu)| sizes[mu] * a[c] * b[c]).sum();
            assert_eq!(s % order, 0);
            s / order
        };
        let mut irreps: Vec<(Partition, Vec<i64>)> = Vec::new();
        for lam in &classes {
            let tabs = tabloids(lam);
            let mut chi: Vec<i64> = classes
                .iter()
                .map(|mu| {
                    let g = &reps[mu];
                    tabs.iter().filter(|t| (0..n).all(|i| t[g[i]] == t[i])).count() as i64
                })
                .collect();
            for (_, psi) in &irreps {
                let m = inner(&chi, psi);
                for c in 0..chi.len() {
                    chi[c] -= m * psi[c];
                }
            }
            assert_eq!(inner(&chi, &chi), 1, "{lam} not irreducible");
            irreps.push((lam.clone(), chi));
        }
        let mut out = BTreeMap::new();
        for (lam, chi) in irreps {
            for (c, mu) in classes.iter().enumerate() {
                out.insert((lam.clone(), mu.clone()), chi[c]);
            }
        }
        out
    }

    #[test]
    fn agrees_with_brute_force_tables() {
        for n in 1..=6 {
            for ((lam, mu), v) in brute_force_table(n) {
                assert_eq!(mn_character(&lam, &mu).unwrap(), BigInt::from(v), "chi^{lam}({mu})");
            }
        }
    }

    #[test]
    fn spec_examples() {
        for n in 2..=12 {
            let hook = Partition::new(vec![n as u32 - 1, 1]).unwrap();
            assert_eq!(mn_character(&hook, &Partition::one_column(n)).unwrap(), BigInt::from(n - 1));
            assert_eq!(dim_specht(&hook), BigInt::from(n - 1));
            assert_eq!(dim_specht(&Partition::one_row(n)), BigInt::one());
        }
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), BigInt::zero());
        assert_eq!(dim_specht(&p(&[2, 2])), BigInt::from(2));
        assert!(mn_character(&p(&[2, 2]), &p(&[3])).is_err());
    }

    #[test]
    fn sign_character() {
        for n in 1..=9 {
            let sgn = Partition::one_column(n);
            for mu in partitions_of(n).unwrap() {
                assert_eq!(mn_character(&sgn, &mu).unwrap(), BigInt::from(mu.sign()));
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=7 {
            let classes = conjugacy_classes(n).unwrap();
            for lam in partitions_of(n).unwrap() {
                let s: BigInt = classes
                    .iter()
                    .map(|(mu, size)| {
                        let v = mn_character(&lam, mu).unwrap();
                        &v * &v * size
                    })
                    .sum();
                assert_eq!(s, factorial(n), "{lam}");
            }
        }
    }

    #[test]
    fn dimension_is_value_at_identity() {
        for n in 1..=10 {
            for lam in partitions_of(n).unwrap() {
                assert_eq!(dim_specht(&lam), mn_character(&lam, &Partition::one_column(n)).unwrap());
            }
        }
    }

    #[test]
    fn table_shape() {
        let (rows, table) = character_table(5).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(table.iter().all(|r| r.len() == 7));
    }
}
