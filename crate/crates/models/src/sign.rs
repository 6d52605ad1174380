//! Parity signs of injective tuples.

use std::fmt;
use std::ops::Mul;

use crate::ModelError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity((self == Sign::Minus) ^ (rhs == Sign::Minus))
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_plus() { "+" } else { "-" })
    }
}

/// Parity of the inversion count of a tuple of distinct entries.
pub fn tuple_sign(t: &[usize]) -> Sign {
    let mut inv = 0usize;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] > t[j] {
                inv += 1;
            }
        }
    }
    Sign::from_parity(inv % 2 == 1)
}

/// The sorted tuple and the sign of the sorting permutation.
pub fn sort_sign(t: &[usize]) -> Result<(Vec<usize>, Sign), ModelError> {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(ModelError::Parameter(format!("tuple {t:?} has repeated entries")));
    }
    Ok((sorted, tuple_sign(t)))
}

/// Sorting by the chain of transpositions that swaps position `i` with the
/// smallest later entry below it. Returns the sorted tuple and the
/// transpositions (as pairs of swapped values) in the order applied.
pub fn sort_chain(t: &[usize]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut cur = t.to_vec();
    let mut swaps = Vec::new();
    for i in 0..cur.len() {
        let m = (i..cur.len()).map(|j| cur[j]).filter(|&v| v < cur[i]).min();
        if let Some(m) = m {
            let j = (i..cur.len()).find(|&j| cur[j] == m).expect("minimum is present");
            swaps.push((m, cur[i]));
            cur.swap(i, j);
        }
    }
    (cur, swaps)
}
