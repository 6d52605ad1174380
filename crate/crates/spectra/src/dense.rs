use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::{Graph, Q, Spectrum, SpectraError};

const TOLERANCE: f64 = 1e-6;
const PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, Copy)]
pub struct DenseOptions {
    pub max_vertices: usize,
    /// Multiplicities are re-derived by exact rank up to this size.
    pub exact_rank_limit: usize,
    /// Integer eigenvalues without a candidate are verified exactly up to this size.
    pub fallback_limit: usize,
}

impl Default for DenseOptions {
    fn default() -> Self {
        DenseOptions { max_vertices: 5000, exact_rank_limit: 400, fallback_limit: 300 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DenseSpectrum {
    pub spectrum: Spectrum,
    /// Whether every multiplicity was confirmed by an exact rank computation.
    pub rank_verified: bool,
    /// Floating eigenvalues matching no exact value.
    pub unmatched: Vec<f64>,
}

/// Floating-point spectrum snapped to the exact candidates.
pub fn dense_spectrum(g: &Graph, candidates: &[Q], opts: &DenseOptions) -> Result<DenseSpectrum, SpectraError> {
    let n = g.len();
    if n > opts.max_vertices {
        return Err(SpectraError::Budget { what: format!("dense spectrum of {n} vertices"), cap: opts.max_vertices as u64 });
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for x in 0..n {
        for &y in g.neighbours(x) {
            m[(x, y)] = 1.0;
        }
    }
    let values = if n == 0 { Vec::new() } else { m.symmetric_eigenvalues().iter().copied().collect::<Vec<f64>>() };
    let approx: Vec<(f64, &Q)> = candidates.iter().map(|c| (c.to_f64(), c)).collect();
    let mut spectrum = Spectrum::new();
    let mut unmatched = Vec::new();
    for v in values {
        if let Some((_, c)) = approx.iter().find(|(f, _)| (f - v).abs() < TOLERANCE) {
            *spectrum.entry((*c).clone()).or_insert(0) += 1;
            continue;
        }
        let r = v.round();
        if (r - v).abs() < TOLERANCE && n <= opts.fallback_limit && nullity(g, &Q::int(r as i64)) > 0 {
            *spectrum.entry(Q::int(r as i64)).or_insert(0) += 1;
        } else {
            unmatched.push(v);
        }
    }
    let rank_verified = n <= opts.exact_rank_limit;
    if rank_verified {
        for (theta, &mult) in &spectrum {
            let exact = nullity(g, theta) as u64;
            if exact != mult {
                return Err(SpectraError::Consistency(format!(
                    "eigenvalue {theta}: {mult} floating matches but nullity {exact}"
                )));
            }
        }
    }
    Ok(DenseSpectrum { spectrum, rank_verified, unmatched })
}

fn residue(v: &BigInt) -> u64 {
    let r = v.mod_floor(&BigInt::from(PRIME));
    r.to_u64().expect("residue fits")
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

/// `n - rank(qA - pI)` over GF(2^31 - 1) for `θ = p/q`.
pub fn nullity(g: &Graph, theta: &Q) -> usize {
    let n = g.len();
    let (p, q) = (theta.0.numer(), theta.0.denom());
    if p.abs() >= BigInt::from(PRIME) || q >= &BigInt::from(PRIME) {
        return 0;
    }
    let qm = residue(q);
    let diag = residue(&-p.clone());
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            let mut r = vec![0u64; n];
            for &y in g.neighbours(x) {
                r[y] = qm;
            }
            r[x] = (r[x] + diag) % PRIME;
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], PRIME - 2);
        for v in rows[rank][col..].iter_mut() {
            *v = *v * inv % PRIME;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for c in col..n {
                row[c] = (row[c] + PRIME - f * pivot_row[c] % PRIME) % PRIME;
            }
        }
        rank += 1;
    }
    n - rank
}
