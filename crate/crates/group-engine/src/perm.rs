use std::fmt;

use sym_core::{CycleType, Partition};

use crate::GroupError;

/// A permutation of `{0, .., n-1}` stored by images; displayed 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

/// Packed cycle-type counts: five bits per cycle length, lengths 1..=25.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleKey(pub u128);

impl CycleKey {
    pub fn of_images(images: &[u8]) -> CycleKey {
        let n = images.len();
        let mut seen = [false; 32];
        let mut key = 0u128;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut x = s;
            let mut len = 0u32;
            while !seen[x] {
                seen[x] = true;
                x = images[x] as usize;
                len += 1;
            }
            key += 1u128 << (5 * (len - 1));
        }
        CycleKey(key)
    }

    pub fn to_partition(self) -> CycleType {
        let mut parts = Vec::new();
        for len in (1..=25u32).rev() {
            let m = (self.0 >> (5 * (len - 1))) & 31;
            parts.extend(std::iter::repeat_n(len, m as usize));
        }
        Partition::new(parts).expect("cycle key decodes to a partition")
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Perm, GroupError> {
        let n = images.len();
        if n == 0 || n > 25 {
            return Err(GroupError::Parameter(format!("degree {n} outside 1..=25")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || std::mem::replace(&mut seen[i as usize], true) {
                return Err(GroupError::Parameter(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm, GroupError> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                if a >= n || std::mem::replace(&mut used[a], true) {
                    return Err(GroupError::Parameter(format!("bad or repeated point {} in cycles", a + 1)));
                }
                images[a] = c[(i + 1) % c.len()] as u8;
            }
        }
        Perm::from_images(images)
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse(n: usize, s: &str) -> Result<Perm, GroupError> {
        let bad = || GroupError::Parameter(format!("cannot parse permutation {s:?}"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(bad)?;
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let body = &rest[1..body_end];
            let pts = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = rest[body_end + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    /// 0-based transposition.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(a, b);
        Perm(images)
    }

    /// 0-based cycle `(c0 c1 ..)`.
    pub fn cycle(n: usize, c: &[usize]) -> Perm {
        Perm::from_cycles(n, &[c.to_vec()]).expect("valid cycle")
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn cycle_key(&self) -> CycleKey {
        CycleKey::of_images(&self.0)
    }

    pub fn cycle_type(&self) -> CycleType {
        self.cycle_key().to_partition()
    }

    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }

    /// Standard representative of a cycle type: consecutive cycles 0..
    pub fn class_representative(mu: &CycleType) -> Perm {
        let n = mu.n();
        let mut cycles = Vec::new();
        let mut start = 0;
        for &p in mu.parts() {
            cycles.push((start..start + p as usize).collect());
            start += p as usize;
        }
        Perm::from_cycles(n, &cycles).expect("valid class representative")
    }

    /// 0-based disjoint cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.0[x] as usize;
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
