use num_bigint::BigInt;
use num_traits::One;

use crate::partition::{partitions_of, CycleType};
use crate::SymError;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `n!!`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut m = n;
    while m > 1 {
        acc *= m;
        m -= 2;
    }
    acc
}

/// Order of the centralizer of a permutation of cycle type `mu`.
pub fn z_mu(mu: &CycleType) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    let parts = mu.parts();
    while i < parts.len() {
        let p = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == p {
            j += 1;
        }
        let m = j - i;
        z *= factorial(m) * BigInt::from(p).pow(m as u32);
        i = j;
    }
    z
}

/// Every cycle type of Sym(n) with its class size `n!/z_mu`, in reverse-lex order.
pub fn conjugacy_classes(n: usize) -> Result<Vec<(CycleType, BigInt)>, SymError> {
    let nf = factorial(n);
    Ok(partitions_of(n)?
        .into_iter()
        .map(|mu| {
            let size = &nf / z_mu(&mu);
            (mu, size)
        })
        .collect())
}
