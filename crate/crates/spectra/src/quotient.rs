use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Graph, Q, SpectraError};

/// The quotient of a regular graph by `{S, Ω \ S}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix2 {
    /// Neighbours inside S of a vertex of S.
    pub a: u64,
    pub k: u64,
    pub size_s: u64,
    pub size_omega: u64,
}

impl QuotientMatrix2 {
    pub fn new(a: u64, k: u64, size_s: u64, size_omega: u64) -> Result<Self, SpectraError> {
        if a > k || size_s == 0 || size_s >= size_omega {
            return Err(SpectraError::Parameter(format!("bad quotient a = {a}, k = {k}, |S| = {size_s}, |Ω| = {size_omega}")));
        }
        Ok(QuotientMatrix2 { a, k, size_s, size_omega })
    }

    /// Neighbours inside S of a vertex outside S.
    pub fn lower_left(&self) -> Q {
        Q::new(BigInt::from(self.k - self.a) * self.size_s, BigInt::from(self.size_omega - self.size_s))
    }

    pub fn matrix(&self) -> [[Q; 2]; 2] {
        let c = self.lower_left();
        let d = Q(BigRational::from_integer(self.k.into()) - c.0.clone());
        [[Q::int(self.a as i64), Q::int((self.k - self.a) as i64)], [c, d]]
    }

    /// `(k, a - (k - a)|S| / (|Ω| - |S|))`.
    pub fn eigenvalues(&self) -> (Q, Q) {
        (Q::int(self.k as i64), Q(BigRational::from_integer(self.a.into()) - self.lower_left().0))
    }
}

/// Checks that `{S, Ω \ S}` is equitable for a regular graph and returns its quotient.
pub fn verify_equitable(g: &Graph, s: &[usize]) -> Result<QuotientMatrix2, SpectraError> {
    let k = g.regular_degree().ok_or_else(|| SpectraError::Parameter("graph is not regular".into()))?;
    let mut inside = vec![false; g.len()];
    for &x in s {
        inside[x] = true;
    }
    let mut counts: [Option<(usize, usize)>; 2] = [None, None];
    for x in 0..g.len() {
        let c = g.neighbours(x).iter().filter(|&&y| inside[y]).count();
        let slot = &mut counts[usize::from(inside[x])];
        match *slot {
            None => *slot = Some((x, c)),
            Some((w, c0)) if c0 != c => {
                return Err(SpectraError::NotEquitable(format!(
                    "vertices {w} and {x} have {c0} and {c} neighbours in S"
                )))
            }
            _ => {}
        }
    }
    let a = counts[1].map_or(0, |(_, c)| c) as u64;
    let b = counts[0].map_or(0, |(_, c)| c) as u64;
    let q = QuotientMatrix2::new(a, k as u64, s.len() as u64, g.len() as u64)?;
    if q.lower_left() != Q::int(b as i64) {
        return Err(SpectraError::Consistency(format!("outside vertices see {b} vertices of S, expected {}", q.lower_left())));
    }
    Ok(q)
}

/// Residual of `A w = θ w` for `w = 1_S - (|S|/|Ω|) 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftCertificate {
    pub theta: Q,
    /// Largest absolute entry of `A w - θ w`.
    pub residual: Q,
}

pub fn lift_and_check(g: &Graph, s: &[usize], theta: &Q) -> Result<LiftCertificate, SpectraError> {
    let n = g.len();
    let mut inside = vec![false; n];
    for &x in s {
        inside[x] = true;
    }
    let shift = BigRational::new(BigInt::from(s.len()), BigInt::from(n));
    let w: Vec<BigRational> =
        inside.iter().map(|&b| if b { BigRational::one() - shift.clone() } else { -shift.clone() }).collect();
    let mut residual = BigRational::zero();
    for x in 0..n {
        let aw: BigRational = g.neighbours(x).iter().map(|&y| w[y].clone()).sum();
        let r = (aw - theta.0.clone() * w[x].clone()).abs();
        if r > residual {
            residual = r;
        }
    }
    let cert = LiftCertificate { theta: theta.clone(), residual: Q(residual) };
    if !cert.residual.is_zero() {
        return Err(SpectraError::Contract(format!("lifted vector is not a {theta}-eigenvector, residual {}", cert.residual)));
    }
    Ok(cert)
}

/// `|V| / (1 - k/τ)`.
pub fn ratio_bound(k: u64, tau: &Q, v: u64) -> Result<Q, SpectraError> {
    if !tau.is_negative() {
        return Err(SpectraError::Parameter(format!("ratio bound needs a negative least eigenvalue, got {tau}")));
    }
    let one = BigRational::one();
    let denom = one - BigRational::from_integer(k.into()) / tau.0.clone();
    Ok(Q(BigRational::from_integer(v.into()) / denom))
}
